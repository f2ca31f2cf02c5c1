//! Acceptance suite: one test per criterion, exact arithmetic throughout,
//! zero tolerance. Each test prints a pass line (visible with --nocapture).

mod common;

use std::cmp::Ordering;

use conelab_core::cones::{
    cone_axiom_check, EnumCone, Sign, SignSeqCone, SmirnovCone,
};
use conelab_core::exactnum::QuadIrr;
use conelab_core::groups::{BSElement, GroupElement, HInfElement, PLMap};
use conelab_core::topology::{
    cayley_ball, signseq_condensed_at_resolution, smirnov_condensed_at_resolution, Ball,
    Generator,
};
use conelab_core::witness::{
    bs_freepart_witness, condensation_witness, conjugacy_separator_f, good_function,
    separate_smirnov, separator_certificate, verify_certificate, CertBody, Certificate,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{
    hinf_rewriting_oracle, random_hinf_word, random_letters, random_quad, random_signseq,
    random_unit_rational,
};

fn golden() -> QuadIrr {
    QuadIrr::new(BigInt::from(1), BigInt::from(1), 5, BigInt::from(2)).unwrap()
}

fn bs_generators(n: u32) -> Vec<Generator<BSElement>> {
    vec![
        Generator { label: "a".into(), element: BSElement::gen_a(n) },
        Generator { label: "b".into(), element: BSElement::gen_b(n) },
    ]
}

fn f_generators() -> Vec<Generator<PLMap>> {
    vec![
        Generator { label: "a".into(), element: PLMap::gen_a() },
        Generator { label: "b".into(), element: PLMap::gen_b() },
    ]
}

fn hinf_generators(max_gen: u32) -> Vec<Generator<HInfElement>> {
    (1..=max_gen)
        .map(|i| Generator {
            label: format!("x{i}"),
            element: HInfElement::generator(i).unwrap(),
        })
        .collect()
}

#[test]
fn criterion_1_homomorphisms_and_relators() {
    let mut rng = StdRng::seed_from_u64(101);
    for n in [2u32, 3, 5] {
        for _ in 0..500 {
            let u = random_letters(&mut rng, 10);
            let v = random_letters(&mut rng, 10);
            let w: Vec<_> = u.iter().chain(v.iter()).copied().collect();
            assert_eq!(
                BSElement::from_word(&w, n),
                BSElement::from_word(&u, n).mul(&BSElement::from_word(&v, n)),
                "BS homomorphism failed at n={n}"
            );
        }
    }

    for relator in ["aBAbabAABa", "aBAAbaabAAABaa"] {
        let w = conelab_core::groups::parse_letters(relator).unwrap();
        assert!(PLMap::from_word(&w).is_identity(), "relator {relator} not the identity");
    }

    for _ in 0..500 {
        let w = random_hinf_word(&mut rng, 8, 5);
        let engine = HInfElement::from_word(&w).unwrap();
        assert_eq!(engine.exponents(), &hinf_rewriting_oracle(&w)[..]);
    }
    for _ in 0..200 {
        let u = HInfElement::from_word(&random_hinf_word(&mut rng, 8, 5)).unwrap();
        let v = HInfElement::from_word(&random_hinf_word(&mut rng, 8, 5)).unwrap();
        let w = HInfElement::from_word(&random_hinf_word(&mut rng, 8, 5)).unwrap();
        assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
    }

    println!("[PASS] criterion 1: homomorphism and relator suite");
}

#[test]
fn criterion_2_cone_axioms() {
    for n in [2u32, 3] {
        let ball = cayley_ball(bs_generators(n), 5).unwrap();
        for alpha in [QuadIrr::sqrt(2).unwrap(), golden()] {
            let cone = SmirnovCone::new(n, alpha.clone()).unwrap();
            let report = cone_axiom_check(&cone, &ball);
            assert!(
                report.is_pass(),
                "axiom violations for alpha={alpha} n={n}: {:?}",
                report.violations
            );
        }
    }

    let f_ball = cayley_ball(f_generators(), 6).unwrap();
    let report = cone_axiom_check(&EnumCone::canonical(), &f_ball);
    assert!(report.is_pass(), "axiom violations on F: {:?}", report.violations);

    let mut rng = StdRng::seed_from_u64(202);
    let h_ball = cayley_ball(hinf_generators(4), 5).unwrap();
    for _ in 0..10 {
        let cone = random_signseq(&mut rng, 8);
        let report = cone_axiom_check(&cone, &h_ball);
        assert!(report.is_pass(), "axiom violations for {cone}: {:?}", report.violations);
    }

    println!("[PASS] criterion 2: cone-axiom suite");
}

#[test]
fn criterion_3_separators() {
    let mut rng = StdRng::seed_from_u64(303);
    for n in [2u32, 3, 5] {
        for _ in 0..200 {
            let x = random_quad(&mut rng, 50);
            let y = random_quad(&mut rng, 50);
            let (lower, upper) = match x.cmp_quad(&y) {
                Ordering::Less => (x, y),
                Ordering::Greater => (y, x),
                Ordering::Equal => continue,
            };
            let cert = separator_certificate(&lower, &upper, n).unwrap();
            verify_certificate(&cert).unwrap();
            let CertBody::Separator(body) = &cert.body else { unreachable!() };
            let q = body.separator.fixed_point().unwrap().unwrap();
            assert_eq!(lower.cmp_rational(&q), Ordering::Less);
            assert_eq!(upper.cmp_rational(&q), Ordering::Greater);
        }
    }
    println!("[PASS] criterion 3: separator suite");
}

#[test]
fn criterion_4_bs_free_part() {
    let mut rng = StdRng::seed_from_u64(404);
    let alphas = [QuadIrr::sqrt(2).unwrap(), QuadIrr::sqrt(3).unwrap(), golden()];
    let mut produced = 0;
    while produced < 100 {
        let word = random_letters(&mut rng, 8);
        let h = BSElement::from_word(&word, 2);
        if h.is_identity() {
            continue;
        }
        for alpha in &alphas {
            let cert = bs_freepart_witness(alpha, 2, &h).unwrap();
            verify_certificate(&cert).unwrap();
        }
        produced += 1;
    }
    println!("[PASS] criterion 4: free-part suite");
}

#[test]
fn criterion_5_condensation_at_resolution() {
    for alpha in [QuadIrr::sqrt(2).unwrap(), golden()] {
        let cone = SmirnovCone::new(2, alpha).unwrap();
        for radius in 1..=6u32 {
            let ball = cayley_ball(bs_generators(2), radius).unwrap();
            let cert = smirnov_condensed_at_resolution(&cone, &ball).unwrap();
            verify_certificate(&cert).unwrap();
        }
    }

    let mut rng = StdRng::seed_from_u64(505);
    for _ in 0..5 {
        let cone = random_signseq(&mut rng, 8);
        for radius in 1..=6u32 {
            let ball = cayley_ball(hinf_generators(3), radius).unwrap();
            let cert = signseq_condensed_at_resolution(&cone, &ball).unwrap();
            verify_certificate(&cert).unwrap();
        }
    }

    println!("[PASS] criterion 5: condensation suite");
}

#[test]
fn criterion_6_thompson_witnesses() {
    let mut rng = StdRng::seed_from_u64(606);

    let mut produced = 0;
    while produced < 100 {
        let size = rng.gen_range(0..=6);
        let mut fixed = Vec::new();
        while fixed.len() < size {
            let r = random_unit_rational(&mut rng, 40);
            if !fixed.contains(&r) {
                fixed.push(r);
            }
        }
        let x = random_unit_rational(&mut rng, 40);
        let y = random_unit_rational(&mut rng, 40);
        if x == y || fixed.contains(&x) || fixed.contains(&y) {
            continue;
        }
        let cert = good_function(&fixed, &x, &y).unwrap();
        verify_certificate(&cert).unwrap();
        produced += 1;
    }

    let cone = EnumCone::canonical();
    let mut produced = 0;
    while produced < 50 {
        let word = random_letters(&mut rng, 12);
        let h = PLMap::from_word(&word);
        if h.is_identity() {
            continue;
        }
        let cert = conjugacy_separator_f(&cone, &h).unwrap();
        verify_certificate(&cert).unwrap();
        let CertBody::FSeparator(body) = &cert.body else { unreachable!() };
        let g = &body.inner.map;
        assert_eq!(cone.sign(g).unwrap(), Sign::Pos);
        let conj = h.inverse().compose(g).compose(&h);
        assert_eq!(cone.sign(&conj).unwrap(), Sign::Neg);
        produced += 1;
    }

    println!("[PASS] criterion 6: Thompson suite");
}

#[test]
fn criterion_7_flip_dynamics() {
    let mut rng = StdRng::seed_from_u64(707);
    let ball: Ball<HInfElement> = cayley_ball(hinf_generators(4), 6).unwrap();
    let mut produced = 0;
    while produced < 50 {
        let word = random_hinf_word(&mut rng, 10, 6);
        let w = HInfElement::from_word(&word).unwrap();
        if w.is_identity() {
            continue;
        }
        let cone = random_signseq(&mut rng, 8);
        let conjugated = cone.conjugate(&w);
        // only finitely many coordinates change, all below the top index
        assert_eq!(conjugated.tail(), cone.tail());
        let top = w.top_index().unwrap();
        for position in cone.differing_positions(&conjugated) {
            assert!(position < top, "flip at {position} not below top {top} for {w}");
        }
        // equivariance against direct cone conjugation on the ball
        for member in ball.members().iter().skip(1) {
            let moved = w.inverse().mul(&member.element).mul(&w);
            assert_eq!(
                conjugated.sign(&member.element).unwrap(),
                cone.sign(&moved).unwrap(),
            );
        }
        produced += 1;
    }
    println!("[PASS] criterion 7: flip-dynamics suite");
}

#[test]
fn criterion_8_fault_injection() {
    // separator: change an integer in the witness
    let cert = separator_certificate(&QuadIrr::sqrt(2).unwrap(), &QuadIrr::sqrt(3).unwrap(), 2)
        .unwrap();
    let CertBody::Separator(mut body) = cert.body.clone() else { unreachable!() };
    body.separator = BSElement::gen_b(2);
    let tampered = Certificate { body: CertBody::Separator(body), checks: cert.checks.clone() };
    assert!(verify_certificate(&tampered).is_err());
    // separator: flip a recorded sign in the transcript
    let mut flipped = cert.clone();
    let target = flipped
        .checks
        .iter_mut()
        .find(|c| c.rhs == Sign::Neg.to_string())
        .unwrap();
    target.rhs = Sign::Pos.to_string();
    assert!(verify_certificate(&flipped).is_err());

    // bs-freepart: swap the recorded parameter image
    let cert = bs_freepart_witness(&QuadIrr::sqrt(2).unwrap(), 2, &BSElement::gen_a(2)).unwrap();
    let CertBody::BsFreePart(mut body) = cert.body.clone() else { unreachable!() };
    body.alpha_image = QuadIrr::sqrt(7).unwrap();
    let tampered = Certificate { body: CertBody::BsFreePart(body), checks: cert.checks };
    assert!(verify_certificate(&tampered).is_err());

    // condensation (basic open): change the conjugator
    let cone = SmirnovCone::new(2, QuadIrr::sqrt(2).unwrap()).unwrap();
    let cert =
        condensation_witness(&cone, &[BSElement::gen_a(2), BSElement::gen_b(2)]).unwrap();
    let CertBody::CondensationBs(mut body) = cert.body.clone() else { unreachable!() };
    body.conjugator = BSElement::gen_b(2);
    let tampered = Certificate { body: CertBody::CondensationBs(body), checks: cert.checks };
    assert!(verify_certificate(&tampered).is_err());

    // condensation (ball): drop the discriminator
    let ball = cayley_ball(bs_generators(2), 2).unwrap();
    let cert = smirnov_condensed_at_resolution(&cone, &ball).unwrap();
    let CertBody::CondensationBs(mut body) = cert.body.clone() else { unreachable!() };
    body.discriminator = None;
    let tampered = Certificate { body: CertBody::CondensationBs(body), checks: cert.checks };
    assert!(verify_certificate(&tampered).is_err());

    // good-function: alter the witness map's breakpoints (drop the lowering
    // half, leaving a valid map with different breakpoints)
    let third = conelab_core::exactnum::Rational::new(BigInt::from(1), BigInt::from(3)).unwrap();
    let half = conelab_core::exactnum::Rational::new(BigInt::from(1), BigInt::from(2)).unwrap();
    let three_quarters =
        conelab_core::exactnum::Rational::new(BigInt::from(3), BigInt::from(4)).unwrap();
    let cert = good_function(&[third], &half, &three_quarters).unwrap();
    let CertBody::GoodFunction(mut body) = cert.body.clone() else { unreachable!() };
    body.map = conelab_core::groups::bump(
        &body.raise_support,
        conelab_core::groups::BumpDirection::Up,
    );
    let tampered = Certificate { body: CertBody::GoodFunction(body), checks: cert.checks };
    assert!(verify_certificate(&tampered).is_err());

    // f-separator: change the claimed scan index
    let h = PLMap::from_word(&conelab_core::groups::parse_letters("a").unwrap());
    let cert = conjugacy_separator_f(&EnumCone::canonical(), &h).unwrap();
    let CertBody::FSeparator(mut body) = cert.body.clone() else { unreachable!() };
    body.moved_index = 2;
    let tampered = Certificate { body: CertBody::FSeparator(body), checks: cert.checks };
    assert!(verify_certificate(&tampered).is_err());

    println!("[PASS] criterion 8: fault-injection suite");
}

#[test]
fn separator_search_matches_certificate() {
    // the bare search agrees with the certified wrapper
    let g = separate_smirnov(&QuadIrr::sqrt(2).unwrap(), &QuadIrr::sqrt(3).unwrap(), 2).unwrap();
    let cert = separator_certificate(&QuadIrr::sqrt(2).unwrap(), &QuadIrr::sqrt(3).unwrap(), 2)
        .unwrap();
    let CertBody::Separator(body) = &cert.body else { unreachable!() };
    assert_eq!(&g, &body.separator);
}
