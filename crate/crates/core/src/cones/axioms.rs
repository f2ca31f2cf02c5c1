use alloc::vec::Vec;

use crate::groups::GroupElement;
use crate::topology::Ball;

use super::{Sign, SignOracle};

/// A failure of the positive-cone axioms on a finite ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation<E> {
    /// g and g⁻¹ received the same sign.
    Trichotomy { element: E },
    /// Two positives multiplied to an in-ball element that is not positive.
    Closure { left: E, right: E, product: E },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheckReport<E> {
    pub elements_checked: usize,
    pub products_checked: usize,
    pub violations: Vec<AxiomViolation<E>>,
}

impl<E> AxiomCheckReport<E> {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the finite content of the positive-cone axioms on a ball:
/// trichotomy (exactly one of g, g⁻¹ is positive) for every nonidentity
/// element, and semigroup closure (products of positives that land in the
/// ball are positive).
pub fn cone_axiom_check<E, O>(oracle: &O, ball: &Ball<E>) -> AxiomCheckReport<E>
where
    E: GroupElement,
    O: SignOracle<E>,
{
    let mut violations = Vec::new();

    // One oracle query per element, reused by the closure pass.
    let signs: Vec<Option<Sign>> = ball
        .members()
        .iter()
        .map(|m| {
            if m.element.is_identity() {
                None
            } else {
                Some(oracle.element_sign(&m.element))
            }
        })
        .collect();

    let mut elements_checked = 0;
    for (i, member) in ball.members().iter().enumerate() {
        let Some(sign) = signs[i] else { continue };
        elements_checked += 1;
        if oracle.element_sign(&member.element.inverse()) == sign {
            violations.push(AxiomViolation::Trichotomy { element: member.element.clone() });
        }
    }

    let positives: Vec<usize> = (0..ball.members().len())
        .filter(|&i| signs[i] == Some(Sign::Pos))
        .collect();
    let mut products_checked = 0;
    for &i in &positives {
        for &j in &positives {
            let left = &ball.members()[i].element;
            let right = &ball.members()[j].element;
            let product = left.mul(right);
            if let Some(k) = ball.index_of(&product) {
                products_checked += 1;
                if signs[k] != Some(Sign::Pos) {
                    violations.push(AxiomViolation::Closure {
                        left: left.clone(),
                        right: right.clone(),
                        product,
                    });
                }
            }
        }
    }

    AxiomCheckReport { elements_checked, products_checked, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{SignSeqCone, SmirnovCone};
    use crate::exactnum::QuadIrr;
    use crate::groups::{BSElement, HInfElement};
    use crate::topology::{cayley_ball, Generator};

    fn bs_ball(radius: u32) -> Ball<BSElement> {
        cayley_ball(
            alloc::vec![
                Generator { label: "a".into(), element: BSElement::gen_a(2) },
                Generator { label: "b".into(), element: BSElement::gen_b(2) },
            ],
            radius,
        )
        .unwrap()
    }

    #[test]
    fn smirnov_cone_passes_on_small_ball() {
        let cone = SmirnovCone::new(2, QuadIrr::sqrt(2).unwrap()).unwrap();
        let report = cone_axiom_check(&cone, &bs_ball(3));
        assert!(report.is_pass(), "violations: {:?}", report.violations);
        assert!(report.elements_checked > 0);
        assert!(report.products_checked > 0);
    }

    #[test]
    fn flipped_oracle_fails() {
        struct Flipped {
            inner: SmirnovCone,
            target: BSElement,
        }
        impl SignOracle<BSElement> for Flipped {
            fn element_sign(&self, g: &BSElement) -> Sign {
                let s = self.inner.element_sign(g);
                if *g == self.target {
                    s.flip()
                } else {
                    s
                }
            }
        }
        let cone = SmirnovCone::new(2, QuadIrr::sqrt(2).unwrap()).unwrap();
        let oracle = Flipped { inner: cone, target: BSElement::gen_a(2) };
        let report = cone_axiom_check(&oracle, &bs_ball(3));
        assert!(!report.is_pass());
    }

    #[test]
    fn enum_cone_passes_on_f_ball() {
        use crate::cones::EnumCone;
        use crate::groups::PLMap;
        let ball = cayley_ball(
            alloc::vec![
                Generator { label: "a".into(), element: PLMap::gen_a() },
                Generator { label: "b".into(), element: PLMap::gen_b() },
            ],
            3,
        )
        .unwrap();
        let report = cone_axiom_check(&EnumCone::canonical(), &ball);
        assert!(report.is_pass(), "violations: {:?}", report.violations);
    }

    #[test]
    fn signseq_cone_passes() {
        let gens: Vec<Generator<HInfElement>> = (1..=3)
            .map(|i| Generator {
                label: alloc::format!("x{i}"),
                element: HInfElement::generator(i).unwrap(),
            })
            .collect();
        let ball = cayley_ball(gens, 3).unwrap();
        let cone = SignSeqCone::new(alloc::vec![true, false], true);
        let report = cone_axiom_check(&cone, &ball);
        assert!(report.is_pass(), "violations: {:?}", report.violations);
    }
}
