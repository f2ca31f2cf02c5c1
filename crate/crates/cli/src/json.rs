//! Typed wire formats. Field order of every document is fixed by struct
//! declaration order, so serialized bytes are stable across runs. Big
//! integers travel as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use conelab_core::cones::{EnumCone, SignSeqCone, SmirnovCone};
use conelab_core::exactnum::{Dyadic, NAdic, QuadIrr, Rational};
use conelab_core::groups::{BSElement, GroupElement, HInfElement, PLMap};
use conelab_core::topology::{Ball, BallLetter, BallMember, Generator};
use conelab_core::witness::{
    BsFreePartCert, CertBody, Certificate, Check, CondensationCert, CondensationRegion,
    FSeparatorCert, GoodFunctionCert, Rel, SeparatorCert,
};

use crate::CliError;

/// Guard against memory blowups from adversarial exponents.
const MAX_EXPONENT: u32 = 10_000;

type Result<T> = std::result::Result<T, CliError>;

fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| CliError::InvalidInput(format!("bad integer {s:?}")))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s).map_err(CliError::invalid)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NAdicDto {
    pub n: u32,
    pub s: String,
    pub t: u32,
}

impl NAdicDto {
    pub fn from_core(x: &NAdic) -> Self {
        NAdicDto { n: x.base(), s: x.mantissa().to_string(), t: x.exp() }
    }

    pub fn to_core(&self) -> Result<NAdic> {
        if self.t > MAX_EXPONENT {
            return Err(CliError::InvalidInput(format!("exponent {} too large", self.t)));
        }
        NAdic::new(self.n, parse_bigint(&self.s)?, self.t).map_err(CliError::invalid)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct QuadIrrDto {
    pub p: String,
    pub q: String,
    pub d: u32,
    pub r: String,
}

impl QuadIrrDto {
    pub fn from_core(x: &QuadIrr) -> Self {
        QuadIrrDto {
            p: x.p().to_string(),
            q: x.q().to_string(),
            d: x.radicand(),
            r: x.denom().to_string(),
        }
    }

    pub fn to_core(&self) -> Result<QuadIrr> {
        QuadIrr::new(
            parse_bigint(&self.p)?,
            parse_bigint(&self.q)?,
            self.d,
            parse_bigint(&self.r)?,
        )
        .map_err(CliError::invalid)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "group")]
pub enum ElementDto {
    #[serde(rename = "bs")]
    Bs { n: u32, r: i64, c: NAdicDto },
    #[serde(rename = "f")]
    F { breakpoints: Vec<[String; 2]> },
    #[serde(rename = "hinf")]
    Hinf { exponents: Vec<i64> },
}

/// Group elements that travel as [`ElementDto`].
pub trait WireElement: GroupElement {
    const GROUP: &'static str;
    fn to_dto(&self) -> ElementDto;
    fn from_dto(dto: &ElementDto) -> Result<Self>;
}

impl WireElement for BSElement {
    const GROUP: &'static str = "bs";

    fn to_dto(&self) -> ElementDto {
        ElementDto::Bs {
            n: self.base(),
            r: self.slope_exp(),
            c: NAdicDto::from_core(self.shift()),
        }
    }

    fn from_dto(dto: &ElementDto) -> Result<Self> {
        let ElementDto::Bs { n, r, c } = dto else {
            return Err(CliError::InvalidInput("expected a bs element".into()));
        };
        if r.unsigned_abs() > MAX_EXPONENT as u64 {
            return Err(CliError::InvalidInput(format!("slope exponent {r} too large")));
        }
        BSElement::new(*n, *r, c.to_core()?).map_err(CliError::invalid)
    }
}

impl WireElement for PLMap {
    const GROUP: &'static str = "f";

    fn to_dto(&self) -> ElementDto {
        ElementDto::F {
            breakpoints: self
                .breakpoints()
                .iter()
                .map(|(x, y)| [x.value().to_string(), y.value().to_string()])
                .collect(),
        }
    }

    fn from_dto(dto: &ElementDto) -> Result<Self> {
        let ElementDto::F { breakpoints } = dto else {
            return Err(CliError::InvalidInput("expected an f element".into()));
        };
        let points = breakpoints
            .iter()
            .map(|[x, y]| {
                let x = Dyadic::try_from_rational(&parse_rational(x)?).map_err(CliError::invalid)?;
                let y = Dyadic::try_from_rational(&parse_rational(y)?).map_err(CliError::invalid)?;
                Ok((x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        PLMap::from_breakpoints(points).map_err(CliError::invalid)
    }
}

impl WireElement for HInfElement {
    const GROUP: &'static str = "hinf";

    fn to_dto(&self) -> ElementDto {
        ElementDto::Hinf { exponents: self.exponents().to_vec() }
    }

    fn from_dto(dto: &ElementDto) -> Result<Self> {
        let ElementDto::Hinf { exponents } = dto else {
            return Err(CliError::InvalidInput("expected an hinf element".into()));
        };
        if exponents.len() > MAX_EXPONENT as usize {
            return Err(CliError::InvalidInput("exponent vector too long".into()));
        }
        Ok(HInfElement::from_exponents(exponents.clone()))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "cone")]
pub enum ConeDto {
    #[serde(rename = "smirnov")]
    Smirnov { n: u32, alpha: QuadIrrDto },
    #[serde(rename = "enum")]
    Enum { prefix: Vec<String> },
    #[serde(rename = "signseq")]
    SignSeq { prefix: Vec<u8>, tail: u8 },
}

impl ConeDto {
    pub fn from_smirnov(c: &SmirnovCone) -> Self {
        ConeDto::Smirnov { n: c.base(), alpha: QuadIrrDto::from_core(c.alpha()) }
    }

    pub fn to_smirnov(&self) -> Result<SmirnovCone> {
        let ConeDto::Smirnov { n, alpha } = self else {
            return Err(CliError::InvalidInput("expected a smirnov cone".into()));
        };
        SmirnovCone::new(*n, alpha.to_core()?).map_err(CliError::invalid)
    }

    pub fn from_enum(c: &EnumCone) -> Self {
        ConeDto::Enum { prefix: c.prefix().iter().map(|r| r.to_string()).collect() }
    }

    pub fn to_enum(&self) -> Result<EnumCone> {
        let ConeDto::Enum { prefix } = self else {
            return Err(CliError::InvalidInput("expected an enum cone".into()));
        };
        let prefix = prefix.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        EnumCone::new(prefix).map_err(CliError::invalid)
    }

    pub fn from_signseq(c: &SignSeqCone) -> Self {
        ConeDto::SignSeq {
            prefix: c.prefix().iter().map(|&b| b as u8).collect(),
            tail: c.tail() as u8,
        }
    }

    pub fn to_signseq(&self) -> Result<SignSeqCone> {
        let ConeDto::SignSeq { prefix, tail } = self else {
            return Err(CliError::InvalidInput("expected a signseq cone".into()));
        };
        let bits = prefix
            .iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(CliError::InvalidInput(format!("bit {other} must be 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let tail = match tail {
            0 => false,
            1 => true,
            other => {
                return Err(CliError::InvalidInput(format!("tail {other} must be 0 or 1")))
            }
        };
        Ok(SignSeqCone::new(bits, tail))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CheckDto {
    pub claim: String,
    pub lhs: String,
    pub rel: String,
    pub rhs: String,
}

fn rel_from_str(s: &str) -> Result<Rel> {
    Ok(match s {
        "<" => Rel::Lt,
        ">" => Rel::Gt,
        "=" => Rel::Eq,
        "!=" => Rel::Ne,
        "in" => Rel::In,
        "not-in" => Rel::NotIn,
        other => return Err(CliError::InvalidInput(format!("unknown relation {other:?}"))),
    })
}

impl CheckDto {
    pub fn from_core(c: &Check) -> Self {
        CheckDto {
            claim: c.claim.clone(),
            lhs: c.lhs.clone(),
            rel: c.rel.as_str().to_string(),
            rhs: c.rhs.clone(),
        }
    }

    pub fn to_core(&self) -> Result<Check> {
        Ok(Check {
            claim: self.claim.clone(),
            lhs: self.lhs.clone(),
            rel: rel_from_str(&self.rel)?,
            rhs: self.rhs.clone(),
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GeneratorDto {
    pub label: String,
    pub element: ElementDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BallMemberDto {
    pub element: ElementDto,
    pub word: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BallDto {
    pub group: String,
    pub generators: Vec<GeneratorDto>,
    pub radius: u32,
    pub elements: Vec<BallMemberDto>,
}

impl BallDto {
    pub fn from_core<E: WireElement>(ball: &Ball<E>) -> Self {
        BallDto {
            group: E::GROUP.to_string(),
            generators: ball
                .generators()
                .iter()
                .map(|g| GeneratorDto { label: g.label.clone(), element: g.element.to_dto() })
                .collect(),
            radius: ball.radius(),
            elements: ball
                .members()
                .iter()
                .map(|m| BallMemberDto {
                    element: m.element.to_dto(),
                    word: ball.render_word(&m.word),
                })
                .collect(),
        }
    }

    pub fn to_core<E: WireElement>(&self) -> Result<Ball<E>> {
        if self.group != E::GROUP {
            return Err(CliError::InvalidInput(format!(
                "ball group {:?} does not match expected {:?}",
                self.group,
                E::GROUP
            )));
        }
        let cap = crate::max_ball_radius();
        if self.radius > cap {
            return Err(CliError::InvalidInput(format!(
                "ball radius {} exceeds the cap {cap} (set CONELAB_MAX_RADIUS to raise it)",
                self.radius
            )));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                Ok(Generator { label: g.label.clone(), element: E::from_dto(&g.element)? })
            })
            .collect::<Result<Vec<_>>>()?;
        let members = self
            .elements
            .iter()
            .map(|m| {
                let element = E::from_dto(&m.element)?;
                let word = m
                    .word
                    .iter()
                    .map(|w| parse_word_letter(&generators, w))
                    .collect::<Result<Vec<_>>>()?;
                Ok(BallMember { element, word })
            })
            .collect::<Result<Vec<_>>>()?;
        Ball::from_parts(generators, self.radius, members).map_err(CliError::invalid)
    }
}

fn parse_word_letter<E>(generators: &[Generator<E>], token: &str) -> Result<BallLetter> {
    let (label, inverse) = match token.strip_suffix("^-1") {
        Some(base) => (base, true),
        None => (token, false),
    };
    let position = generators
        .iter()
        .position(|g| g.label == label)
        .ok_or_else(|| CliError::InvalidInput(format!("unknown generator label {label:?}")))?;
    Ok(BallLetter { generator: position as u32, inverse })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind")]
pub enum NeighborhoodDto {
    #[serde(rename = "basic-open")]
    BasicOpen { positives: Vec<ElementDto> },
    #[serde(rename = "ball")]
    Ball { ball: BallDto },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SeparatorInputsDto {
    pub n: u32,
    pub alpha: QuadIrrDto,
    pub beta: QuadIrrDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SeparatorWitnessDto {
    pub separator: ElementDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FreePartInputsDto {
    pub n: u32,
    pub alpha: QuadIrrDto,
    pub conjugator: ElementDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FreePartWitnessDto {
    pub alpha_image: QuadIrrDto,
    pub discriminator: ElementDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CondensationInputsDto {
    pub cone: ConeDto,
    pub neighborhood: NeighborhoodDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CondensationWitnessDto {
    pub conjugator: ElementDto,
    pub conjugated_cone: ConeDto,
    pub discriminator: Option<ElementDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GoodFunctionInputsDto {
    pub fixed: Vec<String>,
    pub raise: String,
    pub lower: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GoodFunctionWitnessDto {
    pub raise_support: [String; 2],
    pub lower_support: [String; 2],
    pub map: ElementDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FSeparatorInputsDto {
    pub cone: ConeDto,
    pub conjugator: ElementDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FSeparatorWitnessDto {
    pub index: u64,
    pub moved: String,
    pub image: String,
    pub good_function: GoodFunctionWitnessDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind")]
pub enum CertificateDto {
    #[serde(rename = "separator")]
    Separator {
        inputs: SeparatorInputsDto,
        witness: SeparatorWitnessDto,
        checks: Vec<CheckDto>,
    },
    #[serde(rename = "bs-freepart")]
    BsFreePart {
        inputs: FreePartInputsDto,
        witness: FreePartWitnessDto,
        checks: Vec<CheckDto>,
    },
    #[serde(rename = "condensation")]
    Condensation {
        inputs: CondensationInputsDto,
        witness: CondensationWitnessDto,
        checks: Vec<CheckDto>,
    },
    #[serde(rename = "good-function")]
    GoodFunction {
        inputs: GoodFunctionInputsDto,
        witness: GoodFunctionWitnessDto,
        checks: Vec<CheckDto>,
    },
    #[serde(rename = "f-separator")]
    FSeparator {
        inputs: FSeparatorInputsDto,
        witness: FSeparatorWitnessDto,
        checks: Vec<CheckDto>,
    },
}

fn interval_dto(i: &conelab_core::groups::DyadicInterval) -> [String; 2] {
    [i.lo().value().to_string(), i.hi().value().to_string()]
}

fn interval_from_dto(d: &[String; 2]) -> Result<conelab_core::groups::DyadicInterval> {
    let lo = Dyadic::try_from_rational(&parse_rational(&d[0])?).map_err(CliError::invalid)?;
    let hi = Dyadic::try_from_rational(&parse_rational(&d[1])?).map_err(CliError::invalid)?;
    conelab_core::groups::DyadicInterval::new(lo, hi).map_err(CliError::invalid)
}

fn goodfn_witness_dto(c: &GoodFunctionCert) -> GoodFunctionWitnessDto {
    GoodFunctionWitnessDto {
        raise_support: interval_dto(&c.raise_support),
        lower_support: interval_dto(&c.lower_support),
        map: c.map.to_dto(),
    }
}

impl CertificateDto {
    pub fn from_core(cert: &Certificate) -> Self {
        let checks = cert.checks.iter().map(CheckDto::from_core).collect();
        match &cert.body {
            CertBody::Separator(c) => CertificateDto::Separator {
                inputs: SeparatorInputsDto {
                    n: c.base,
                    alpha: QuadIrrDto::from_core(&c.lower),
                    beta: QuadIrrDto::from_core(&c.upper),
                },
                witness: SeparatorWitnessDto { separator: c.separator.to_dto() },
                checks,
            },
            CertBody::BsFreePart(c) => CertificateDto::BsFreePart {
                inputs: FreePartInputsDto {
                    n: c.base,
                    alpha: QuadIrrDto::from_core(&c.alpha),
                    conjugator: c.conjugator.to_dto(),
                },
                witness: FreePartWitnessDto {
                    alpha_image: QuadIrrDto::from_core(&c.alpha_image),
                    discriminator: c.discriminator.to_dto(),
                },
                checks,
            },
            CertBody::CondensationBs(c) => CertificateDto::Condensation {
                inputs: CondensationInputsDto {
                    cone: ConeDto::from_smirnov(&c.cone),
                    neighborhood: match &c.region {
                        CondensationRegion::Positives(els) => NeighborhoodDto::BasicOpen {
                            positives: els.iter().map(|e| e.to_dto()).collect(),
                        },
                        CondensationRegion::Ball(ball) => {
                            NeighborhoodDto::Ball { ball: BallDto::from_core(ball) }
                        }
                    },
                },
                witness: CondensationWitnessDto {
                    conjugator: c.conjugator.to_dto(),
                    conjugated_cone: ConeDto::from_smirnov(&c.conjugated),
                    discriminator: c.discriminator.as_ref().map(|d| d.to_dto()),
                },
                checks,
            },
            CertBody::CondensationHinf(c) => CertificateDto::Condensation {
                inputs: CondensationInputsDto {
                    cone: ConeDto::from_signseq(&c.cone),
                    neighborhood: match &c.region {
                        CondensationRegion::Positives(els) => NeighborhoodDto::BasicOpen {
                            positives: els.iter().map(|e| e.to_dto()).collect(),
                        },
                        CondensationRegion::Ball(ball) => {
                            NeighborhoodDto::Ball { ball: BallDto::from_core(ball) }
                        }
                    },
                },
                witness: CondensationWitnessDto {
                    conjugator: c.conjugator.to_dto(),
                    conjugated_cone: ConeDto::from_signseq(&c.conjugated),
                    discriminator: c.discriminator.as_ref().map(|d| d.to_dto()),
                },
                checks,
            },
            CertBody::GoodFunction(c) => CertificateDto::GoodFunction {
                inputs: GoodFunctionInputsDto {
                    fixed: c.fixed.iter().map(|r| r.to_string()).collect(),
                    raise: c.raised.to_string(),
                    lower: c.lowered.to_string(),
                },
                witness: goodfn_witness_dto(c),
                checks,
            },
            CertBody::FSeparator(c) => CertificateDto::FSeparator {
                inputs: FSeparatorInputsDto {
                    cone: ConeDto::from_enum(&c.cone),
                    conjugator: c.conjugator.to_dto(),
                },
                witness: FSeparatorWitnessDto {
                    index: c.moved_index as u64,
                    moved: c.moved_rational.to_string(),
                    image: c.moved_image.to_string(),
                    good_function: goodfn_witness_dto(&c.inner),
                },
                checks,
            },
        }
    }

    pub fn to_core(&self) -> Result<Certificate> {
        let convert_checks = |checks: &[CheckDto]| -> Result<Vec<Check>> {
            checks.iter().map(|c| c.to_core()).collect()
        };
        match self {
            CertificateDto::Separator { inputs, witness, checks } => {
                let body = CertBody::Separator(SeparatorCert {
                    base: inputs.n,
                    lower: inputs.alpha.to_core()?,
                    upper: inputs.beta.to_core()?,
                    separator: BSElement::from_dto(&witness.separator)?,
                });
                Ok(Certificate { body, checks: convert_checks(checks)? })
            }
            CertificateDto::BsFreePart { inputs, witness, checks } => {
                let body = CertBody::BsFreePart(BsFreePartCert {
                    base: inputs.n,
                    alpha: inputs.alpha.to_core()?,
                    conjugator: BSElement::from_dto(&inputs.conjugator)?,
                    alpha_image: witness.alpha_image.to_core()?,
                    discriminator: BSElement::from_dto(&witness.discriminator)?,
                });
                Ok(Certificate { body, checks: convert_checks(checks)? })
            }
            CertificateDto::Condensation { inputs, witness, checks } => {
                let checks = convert_checks(checks)?;
                match &inputs.cone {
                    ConeDto::Smirnov { .. } => {
                        let body = CertBody::CondensationBs(CondensationCert {
                            cone: inputs.cone.to_smirnov()?,
                            region: match &inputs.neighborhood {
                                NeighborhoodDto::BasicOpen { positives } => {
                                    CondensationRegion::Positives(
                                        positives
                                            .iter()
                                            .map(BSElement::from_dto)
                                            .collect::<Result<Vec<_>>>()?,
                                    )
                                }
                                NeighborhoodDto::Ball { ball } => {
                                    CondensationRegion::Ball(ball.to_core()?)
                                }
                            },
                            conjugator: BSElement::from_dto(&witness.conjugator)?,
                            conjugated: witness.conjugated_cone.to_smirnov()?,
                            discriminator: witness
                                .discriminator
                                .as_ref()
                                .map(BSElement::from_dto)
                                .transpose()?,
                        });
                        Ok(Certificate { body, checks })
                    }
                    ConeDto::SignSeq { .. } => {
                        let body = CertBody::CondensationHinf(CondensationCert {
                            cone: inputs.cone.to_signseq()?,
                            region: match &inputs.neighborhood {
                                NeighborhoodDto::BasicOpen { positives } => {
                                    CondensationRegion::Positives(
                                        positives
                                            .iter()
                                            .map(HInfElement::from_dto)
                                            .collect::<Result<Vec<_>>>()?,
                                    )
                                }
                                NeighborhoodDto::Ball { ball } => {
                                    CondensationRegion::Ball(ball.to_core()?)
                                }
                            },
                            conjugator: HInfElement::from_dto(&witness.conjugator)?,
                            conjugated: witness.conjugated_cone.to_signseq()?,
                            discriminator: witness
                                .discriminator
                                .as_ref()
                                .map(HInfElement::from_dto)
                                .transpose()?,
                        });
                        Ok(Certificate { body, checks })
                    }
                    ConeDto::Enum { .. } => Err(CliError::InvalidInput(
                        "condensation certificates require a smirnov or signseq cone".into(),
                    )),
                }
            }
            CertificateDto::GoodFunction { inputs, witness, checks } => {
                let body = CertBody::GoodFunction(GoodFunctionCert {
                    fixed: inputs
                        .fixed
                        .iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>>>()?,
                    raised: parse_rational(&inputs.raise)?,
                    lowered: parse_rational(&inputs.lower)?,
                    raise_support: interval_from_dto(&witness.raise_support)?,
                    lower_support: interval_from_dto(&witness.lower_support)?,
                    map: PLMap::from_dto(&witness.map)?,
                });
                Ok(Certificate { body, checks: convert_checks(checks)? })
            }
            CertificateDto::FSeparator { inputs, witness, checks } => {
                if witness.index > 100_000 {
                    return Err(CliError::InvalidInput(format!(
                        "scan index {} too large",
                        witness.index
                    )));
                }
                let inner = GoodFunctionCert {
                    fixed: inputs
                        .cone
                        .to_enum()?
                        .rationals()
                        .take(witness.index as usize)
                        .collect(),
                    raised: parse_rational(&witness.moved)?,
                    lowered: parse_rational(&witness.image)?,
                    raise_support: interval_from_dto(&witness.good_function.raise_support)?,
                    lower_support: interval_from_dto(&witness.good_function.lower_support)?,
                    map: PLMap::from_dto(&witness.good_function.map)?,
                };
                let body = CertBody::FSeparator(FSeparatorCert {
                    cone: inputs.cone.to_enum()?,
                    conjugator: PLMap::from_dto(&inputs.conjugator)?,
                    moved_index: witness.index as usize,
                    moved_rational: parse_rational(&witness.moved)?,
                    moved_image: parse_rational(&witness.image)?,
                    inner,
                });
                Ok(Certificate { body, checks: convert_checks(checks)? })
            }
        }
    }
}
