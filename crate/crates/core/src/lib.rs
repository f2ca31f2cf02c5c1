//! Exact computation with left-orderings of three groups: the solvable
//! Baumslag-Solitar groups BS(1,n), Thompson's group F, and the infinitely
//! generated group H∞ whose orderings are encoded by binary sequences.
//!
//! Everything is exact: arbitrary-precision rationals, base-n fractions, and
//! quadratic irrationals with decidable comparison. No floating point exists
//! anywhere in this crate. The `witness` module packages the constructions as
//! self-contained certificates that re-verify from scratch.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cones;
pub mod exactnum;
pub mod groups;
pub mod topology;
pub mod witness;
