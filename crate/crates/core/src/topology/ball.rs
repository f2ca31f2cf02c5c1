use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::groups::GroupElement;

use super::TopologyError;

/// A labelled generator of a Cayley ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<E> {
    pub label: String,
    pub element: E,
}

/// One step of a word: a generator index, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallLetter {
    pub generator: u32,
    pub inverse: bool,
}

/// A ball element together with one shortest word spelling it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallMember<E> {
    pub element: E,
    pub word: Vec<BallLetter>,
}

/// Finite ball of a Cayley graph: all products of at most `radius` steps
/// over the symmetrized generator set, deduplicated by canonical form. The
/// identity sits at index 0, each element carries a shortest word, layers
/// are sorted, and the whole construction is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball<E: GroupElement> {
    generators: Vec<Generator<E>>,
    radius: u32,
    members: Vec<BallMember<E>>,
    index: BTreeMap<E, usize>,
}

/// Breadth-first closure of words up to the radius. Both each generator and
/// its inverse are used as steps, so the ball is closed under inversion.
pub fn cayley_ball<E: GroupElement>(
    generators: Vec<Generator<E>>,
    radius: u32,
) -> Result<Ball<E>, TopologyError> {
    if generators.is_empty() {
        return Err(TopologyError::NoGenerators);
    }
    for g in &generators {
        if g.element.is_identity() {
            return Err(TopologyError::IdentityGenerator(g.label.clone()));
        }
    }
    let identity = generators[0].element.mul(&generators[0].element.inverse());

    let mut members = Vec::new();
    let mut index = BTreeMap::new();
    members.push(BallMember { element: identity.clone(), word: Vec::new() });
    index.insert(identity, 0usize);

    let mut frontier: Vec<usize> = alloc::vec![0];
    for _ in 1..=radius {
        let mut layer: Vec<BallMember<E>> = Vec::new();
        let mut seen: BTreeSet<E> = BTreeSet::new();
        for &i in &frontier {
            for (gi, gen) in generators.iter().enumerate() {
                for inverse in [false, true] {
                    let step = if inverse { gen.element.inverse() } else { gen.element.clone() };
                    let next = members[i].element.mul(&step);
                    if !index.contains_key(&next) && seen.insert(next.clone()) {
                        let mut word = members[i].word.clone();
                        word.push(BallLetter { generator: gi as u32, inverse });
                        layer.push(BallMember { element: next, word });
                    }
                }
            }
        }
        layer.sort_by(|a, b| a.element.cmp(&b.element));
        if layer.is_empty() {
            break;
        }
        frontier = (members.len()..members.len() + layer.len()).collect();
        for m in layer {
            index.insert(m.element.clone(), members.len());
            members.push(m);
        }
    }

    Ok(Ball { generators, radius, members, index })
}

impl<E: GroupElement> Ball<E> {
    /// Rebuilds a ball from raw parts, insisting it match a fresh
    /// breadth-first construction over the same generators and radius.
    pub fn from_parts(
        generators: Vec<Generator<E>>,
        radius: u32,
        members: Vec<BallMember<E>>,
    ) -> Result<Self, TopologyError> {
        let rebuilt = cayley_ball(generators, radius)?;
        if rebuilt.members != members {
            return Err(TopologyError::MalformedBall(format!(
                "elements do not match the canonical radius-{radius} construction"
            )));
        }
        Ok(rebuilt)
    }

    pub fn generators(&self) -> &[Generator<E>] {
        &self.generators
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn members(&self) -> &[BallMember<E>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn identity(&self) -> &E {
        &self.members[0].element
    }

    pub fn contains(&self, element: &E) -> bool {
        self.index.contains_key(element)
    }

    pub fn index_of(&self, element: &E) -> Option<usize> {
        self.index.get(element).copied()
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.members.iter().all(|m| self.contains(&m.element.inverse()))
    }

    /// Renders a word over the generator labels, inverses as label^-1.
    pub fn render_word(&self, word: &[BallLetter]) -> Vec<String> {
        word.iter()
            .map(|l| {
                let label = &self.generators[l.generator as usize].label;
                if l.inverse {
                    format!("{label}^-1")
                } else {
                    label.clone()
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{parse_letters, BSElement, HInfElement, PLMap};

    fn bs_gens() -> Vec<Generator<BSElement>> {
        alloc::vec![
            Generator { label: "a".into(), element: BSElement::gen_a(2) },
            Generator { label: "b".into(), element: BSElement::gen_b(2) },
        ]
    }

    #[test]
    fn radius_zero_is_identity_only() {
        let ball = cayley_ball(bs_gens(), 0).unwrap();
        assert_eq!(ball.len(), 1);
        assert!(ball.members()[0].element.is_identity());
    }

    #[test]
    fn bs_radius_one_has_five_elements() {
        let ball = cayley_ball(bs_gens(), 1).unwrap();
        assert_eq!(ball.len(), 5);
        assert!(ball.is_inverse_closed());
    }

    #[test]
    fn bs_radius_two_has_seventeen_elements() {
        let ball = cayley_ball(bs_gens(), 2).unwrap();
        assert_eq!(ball.len(), 17);
        assert!(ball.is_inverse_closed());
    }

    #[test]
    fn agrees_with_naive_word_enumeration() {
        use alloc::collections::BTreeSet;
        let letters = parse_letters("aAbB").unwrap();
        for radius in 0..=4u32 {
            let ball = cayley_ball(bs_gens(), radius).unwrap();
            let mut expected: BTreeSet<BSElement> = BTreeSet::new();
            let mut words: Vec<Vec<crate::groups::Letter>> = alloc::vec![Vec::new()];
            expected.insert(BSElement::identity(2));
            for _ in 0..radius {
                let mut next = Vec::new();
                for w in &words {
                    for &l in &letters {
                        let mut w2 = w.clone();
                        w2.push(l);
                        expected.insert(BSElement::from_word(&w2, 2));
                        next.push(w2);
                    }
                }
                words = next;
            }
            let got: BTreeSet<BSElement> =
                ball.members().iter().map(|m| m.element.clone()).collect();
            assert_eq!(got, expected, "radius {radius}");
        }
    }

    #[test]
    fn shortest_words_and_determinism() {
        let b1 = cayley_ball(bs_gens(), 3).unwrap();
        let b2 = cayley_ball(bs_gens(), 3).unwrap();
        assert_eq!(b1, b2);
        // words rebuild their elements and have length <= radius
        for m in b1.members() {
            assert!(m.word.len() <= 3);
            let mut acc = BSElement::identity(2);
            for l in &m.word {
                let g = &b1.generators()[l.generator as usize].element;
                let step = if l.inverse { g.inverse() } else { g.clone() };
                acc = acc.mul(&step);
            }
            assert_eq!(acc, m.element);
        }
    }

    #[test]
    fn size_is_monotone_in_radius() {
        let mut last = 0;
        for r in 0..=4 {
            let n = cayley_ball(bs_gens(), r).unwrap().len();
            assert!(n >= last);
            last = n;
        }
    }

    #[test]
    fn f_and_hinf_balls_build() {
        let f_gens = alloc::vec![
            Generator { label: "a".into(), element: PLMap::gen_a() },
            Generator { label: "b".into(), element: PLMap::gen_b() },
        ];
        let ball = cayley_ball(f_gens, 2).unwrap();
        assert!(ball.is_inverse_closed());
        assert_eq!(ball.len(), 17); // no coincidences at radius 2 in F either

        let h_gens: Vec<Generator<HInfElement>> = (1..=2)
            .map(|i| Generator {
                label: format!("x{i}"),
                element: HInfElement::generator(i).unwrap(),
            })
            .collect();
        let ball = cayley_ball(h_gens, 2).unwrap();
        assert!(ball.is_inverse_closed());
        assert!(ball.contains(&HInfElement::from_word(&[2, 1]).unwrap()));
    }

    #[test]
    fn rejects_bad_generators() {
        let empty: Vec<Generator<BSElement>> = Vec::new();
        assert_eq!(cayley_ball(empty, 1), Err(TopologyError::NoGenerators));
        let with_id = alloc::vec![Generator {
            label: "e".into(),
            element: BSElement::identity(2),
        }];
        assert!(matches!(
            cayley_ball(with_id, 1),
            Err(TopologyError::IdentityGenerator(_))
        ));
    }

    #[test]
    fn from_parts_round_trip_and_tamper() {
        let ball = cayley_ball(bs_gens(), 2).unwrap();
        let rebuilt =
            Ball::from_parts(bs_gens(), 2, ball.members().to_vec()).unwrap();
        assert_eq!(rebuilt, ball);
        let mut tampered = ball.members().to_vec();
        tampered.pop();
        assert!(Ball::from_parts(bs_gens(), 2, tampered).is_err());
    }
}
