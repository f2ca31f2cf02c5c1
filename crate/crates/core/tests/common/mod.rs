//! Shared test helpers: an independent free-rewriting oracle for H∞ words
//! and deterministic random generators for elements of the three groups.

#![allow(dead_code)]

use conelab_core::exactnum::{QuadIrr, Rational};
use conelab_core::groups::{HInfElement, Letter};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

/// Brute-force normal form for H∞: rewrites a raw word over signed
/// generator letters to exhaustion using only the two relation schemes
/// (adjacent-index sign flip, distant commutation) plus free cancellation,
/// then reads off the exponent vector. Independent of the insertion-based
/// engine it is used to check.
pub fn hinf_rewriting_oracle(letters: &[i64]) -> Vec<i64> {
    let mut word: Vec<(u32, i8)> = letters
        .iter()
        .map(|&l| {
            assert!(l != 0);
            (l.unsigned_abs() as u32, l.signum() as i8)
        })
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            let (gi, si) = word[i];
            let (gj, sj) = word[i + 1];
            if gi == gj && si == -sj {
                word.drain(i..=i + 1);
                changed = true;
                i = i.saturating_sub(1);
                continue;
            }
            if gi > gj + 1 {
                // distant generators commute
                word.swap(i, i + 1);
                changed = true;
                i += 1;
                continue;
            }
            if gi == gj + 1 {
                // x_{j+1}^s x_j^t = x_j^{-t} x_{j+1}^s
                word[i] = (gj, -sj);
                word[i + 1] = (gi, si);
                changed = true;
                i += 1;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    // Sorted ascending with no cancellations left: collapse into exponents.
    let mut exps: Vec<i64> = Vec::new();
    for (g, s) in word {
        let idx = g as usize;
        if exps.len() < idx {
            exps.resize(idx, 0);
        }
        exps[idx - 1] += s as i64;
    }
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

pub fn random_letters(rng: &mut StdRng, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 => Letter::A,
            1 => Letter::AInv,
            2 => Letter::B,
            _ => Letter::BInv,
        })
        .collect()
}

/// Random word over signed H∞ generator indices 1..=max_gen.
pub fn random_hinf_word(rng: &mut StdRng, max_len: usize, max_gen: u32) -> Vec<i64> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=max_gen) as i64;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

pub fn random_hinf_element(rng: &mut StdRng, max_len: usize, max_gen: u32) -> HInfElement {
    HInfElement::from_word(&random_hinf_word(rng, max_len, max_gen)).unwrap()
}

/// Random quadratic irrational with small coefficients over d in {2,3,5,7}.
pub fn random_quad(rng: &mut StdRng, coeff_bound: i64) -> QuadIrr {
    let d = [2u32, 3, 5, 7][rng.gen_range(0..4)];
    loop {
        let p = rng.gen_range(-coeff_bound..=coeff_bound);
        let q = rng.gen_range(-coeff_bound..=coeff_bound);
        let r = rng.gen_range(1..=coeff_bound);
        if q == 0 {
            continue;
        }
        return QuadIrr::new(BigInt::from(p), BigInt::from(q), d, BigInt::from(r)).unwrap();
    }
}

/// Random rational strictly inside (0,1) with denominator up to the bound.
pub fn random_unit_rational(rng: &mut StdRng, den_bound: i64) -> Rational {
    loop {
        let den = rng.gen_range(2..=den_bound);
        let num = rng.gen_range(1..den);
        let r = Rational::new(BigInt::from(num), BigInt::from(den)).unwrap();
        if r.is_positive() && r < Rational::one() {
            return r;
        }
    }
}

/// Random eventually constant sign sequence.
pub fn random_signseq(rng: &mut StdRng, max_prefix: usize) -> conelab_core::cones::SignSeqCone {
    let len = rng.gen_range(0..=max_prefix);
    let prefix: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.5)).collect();
    conelab_core::cones::SignSeqCone::new(prefix, rng.gen_bool(0.5))
}
