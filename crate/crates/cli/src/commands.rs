//! One function per subcommand. Every function returns a serializable
//! document; main serializes it compactly (stable bytes) or pretty.

use serde::Serialize;

use conelab_core::cones::{
    cone_axiom_check, enum_rational, AxiomViolation, EnumCone, SignSeqCone, SmirnovCone,
};
use conelab_core::exactnum::QuadIrr;
use conelab_core::groups::{BSElement, GroupElement, HInfElement, Letter, PLMap};
use conelab_core::topology::{
    cayley_ball, signseq_condensed_at_resolution, smirnov_condensed_at_resolution, Ball,
    Generator,
};
use conelab_core::witness::{
    bs_freepart_witness, conjugacy_separator_f, good_function, separator_certificate,
    verify_certificate, Certificate,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::json::{BallDto, CertificateDto, ConeDto, ElementDto, WireElement};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn check_radius(radius: u32) -> Result<()> {
    let cap = crate::max_ball_radius();
    if radius > cap {
        return Err(CliError::InvalidInput(format!(
            "radius {radius} exceeds the cap {cap} (set CONELAB_MAX_RADIUS to raise it)"
        )));
    }
    Ok(())
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

fn hinf_generators(max_gen: u32) -> Result<Vec<Generator<HInfElement>>> {
    if max_gen == 0 {
        return Err(CliError::InvalidInput("need at least one generator".into()));
    }
    Ok((1..=max_gen)
        .map(|i| Generator {
            label: format!("x{i}"),
            element: HInfElement::generator(i).expect("positive index"),
        })
        .collect())
}

fn validate_base(n: u32) -> Result<()> {
    if n < 2 {
        return Err(CliError::InvalidInput(format!("base {n} must be at least 2")));
    }
    Ok(())
}

#[derive(Serialize, Debug)]
pub struct SignReport {
    pub cone: ConeDto,
    pub word: String,
    pub element: ElementDto,
    pub sign: String,
}

pub fn bs_sign(n: u32, alpha: QuadIrr, word: &[Letter]) -> Result<SignReport> {
    validate_base(n)?;
    let cone = SmirnovCone::new(n, alpha).map_err(CliError::invalid)?;
    let g = BSElement::from_word(word, n);
    let sign = cone.sign(&g).map_err(CliError::invalid)?;
    Ok(SignReport {
        cone: ConeDto::from_smirnov(&cone),
        word: conelab_core::groups::render_letters(word),
        element: g.to_dto(),
        sign: sign.to_string(),
    })
}

pub fn bs_separate(n: u32, alpha: QuadIrr, beta: QuadIrr) -> Result<CertificateDto> {
    validate_base(n)?;
    let cert = separator_certificate(&alpha, &beta, n).map_err(CliError::invalid)?;
    Ok(CertificateDto::from_core(&cert))
}

pub fn bs_freepart(n: u32, alpha: QuadIrr, word: &[Letter]) -> Result<CertificateDto> {
    validate_base(n)?;
    let h = BSElement::from_word(word, n);
    let cert = bs_freepart_witness(&alpha, n, &h).map_err(CliError::invalid)?;
    Ok(CertificateDto::from_core(&cert))
}

pub fn bs_condense(n: u32, alpha: QuadIrr, radius: u32) -> Result<CertificateDto> {
    validate_base(n)?;
    check_radius(radius)?;
    let cone = SmirnovCone::new(n, alpha).map_err(CliError::invalid)?;
    let ball = cayley_ball(bs_generators(n), radius).map_err(CliError::invalid)?;
    let cert = smirnov_condensed_at_resolution(&cone, &ball).map_err(CliError::invalid)?;
    Ok(CertificateDto::from_core(&cert))
}

#[derive(Serialize, Debug)]
pub struct EnumSignReport {
    pub cone: ConeDto,
    pub word: String,
    pub decided_at_index: u64,
    pub rational: String,
    pub image: String,
    pub sign: String,
}

pub fn f_sign(word: &[Letter], cone: EnumCone) -> Result<EnumSignReport> {
    let g = PLMap::from_word(word);
    let d = cone.decide(&g).map_err(CliError::invalid)?;
    Ok(EnumSignReport {
        cone: ConeDto::from_enum(&cone),
        word: conelab_core::groups::render_letters(word),
        decided_at_index: d.index as u64,
        rational: d.rational.to_string(),
        image: d.image.to_string(),
        sign: d.sign.to_string(),
    })
}

pub fn f_goodfn(
    fixed: Vec<conelab_core::exactnum::Rational>,
    raise: conelab_core::exactnum::Rational,
    lower: conelab_core::exactnum::Rational,
) -> Result<CertificateDto> {
    let cert = good_function(&fixed, &raise, &lower).map_err(CliError::invalid)?;
    Ok(CertificateDto::from_core(&cert))
}

pub fn f_separate(word: &[Letter], cone: EnumCone) -> Result<CertificateDto> {
    let h = PLMap::from_word(word);
    let cert = conjugacy_separator_f(&cone, &h).map_err(CliError::invalid)?;
    Ok(CertificateDto::from_core(&cert))
}

#[derive(Serialize, Debug)]
pub struct RelatorReport {
    pub word: String,
    pub element: ElementDto,
    pub is_identity: bool,
}

#[derive(Serialize, Debug)]
pub struct RelCheckReport {
    pub relators: Vec<RelatorReport>,
    pub pass: bool,
}

pub fn f_relcheck() -> Result<RelCheckReport> {
    let relators = ["aBAbabAABa", "aBAAbaabAAABaa"];
    let mut reports = Vec::new();
    let mut pass = true;
    for r in relators {
        let word = conelab_core::groups::parse_letters(r).map_err(CliError::invalid)?;
        let element = PLMap::from_word(&word);
        let is_identity = element.is_identity();
        pass &= is_identity;
        reports.push(RelatorReport { word: r.to_string(), element: element.to_dto(), is_identity });
    }
    Ok(RelCheckReport { relators: reports, pass })
}

#[derive(Serialize, Debug)]
pub struct HinfProductReport {
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    pub element: ElementDto,
}

pub fn hinf_mul(lhs: &[i64], rhs: &[i64]) -> Result<HinfProductReport> {
    let u = HInfElement::from_word(lhs).map_err(CliError::invalid)?;
    let v = HInfElement::from_word(rhs).map_err(CliError::invalid)?;
    let product = u.checked_mul(&v).map_err(CliError::invalid)?;
    Ok(HinfProductReport { lhs: lhs.to_vec(), rhs: rhs.to_vec(), element: product.to_dto() })
}

#[derive(Serialize, Debug)]
pub struct HinfSignReport {
    pub cone: ConeDto,
    pub word: Vec<i64>,
    pub element: ElementDto,
    pub sign: String,
}

pub fn hinf_sign(word: &[i64], cone: SignSeqCone) -> Result<HinfSignReport> {
    let w = HInfElement::from_word(word).map_err(CliError::invalid)?;
    let sign = cone.sign(&w).map_err(CliError::invalid)?;
    Ok(HinfSignReport {
        cone: ConeDto::from_signseq(&cone),
        word: word.to_vec(),
        element: w.to_dto(),
        sign: sign.to_string(),
    })
}

#[derive(Serialize, Debug)]
pub struct HinfConjReport {
    pub cone: ConeDto,
    pub word: Vec<i64>,
    pub conjugated: ConeDto,
    pub flipped_positions: Vec<u32>,
}

pub fn hinf_conj(word: &[i64], cone: SignSeqCone) -> Result<HinfConjReport> {
    let w = HInfElement::from_word(word).map_err(CliError::invalid)?;
    let conjugated = cone.conjugate(&w);
    Ok(HinfConjReport {
        cone: ConeDto::from_signseq(&cone),
        word: word.to_vec(),
        conjugated: ConeDto::from_signseq(&conjugated),
        flipped_positions: cone.differing_positions(&conjugated),
    })
}

#[derive(Serialize, Debug)]
pub struct E0Trial {
    pub word: Vec<i64>,
    pub top_index: u32,
    pub flipped_positions: Vec<u32>,
    pub flips_below_top: bool,
    pub tail_unchanged: bool,
    pub equivariant_on_ball: bool,
}

#[derive(Serialize, Debug)]
pub struct E0Report {
    pub cone: ConeDto,
    pub ball_generators: u32,
    pub ball_radius: u32,
    pub trials: Vec<E0Trial>,
    pub pass: bool,
}

/// Checks the finite content of eventual equality: conjugation flips only
/// positions below the word's top index, and agrees with direct conjugation
/// of every ball element.
pub fn hinf_e0check(
    cone: SignSeqCone,
    words: Vec<Vec<i64>>,
    max_gen: u32,
    radius: u32,
) -> Result<E0Report> {
    check_radius(radius)?;
    let ball: Ball<HInfElement> = cayley_ball(hinf_generators(max_gen)?, radius)
        .map_err(CliError::invalid)?;
    let mut trials = Vec::new();
    let mut pass = true;
    for word in words {
        let w = HInfElement::from_word(&word).map_err(CliError::invalid)?;
        let top = w.top_index().unwrap_or(0);
        let conjugated = cone.conjugate(&w);
        let flipped = cone.differing_positions(&conjugated);
        let flips_below_top = flipped.iter().all(|&p| p < top.max(1));
        let tail_unchanged = conjugated.tail() == cone.tail();
        let mut equivariant = true;
        for member in ball.members().iter().skip(1) {
            let moved = w.inverse().mul(&member.element).mul(&w);
            let direct = cone.sign(&moved).map_err(CliError::invalid)?;
            let via_cone = conjugated.sign(&member.element).map_err(CliError::invalid)?;
            if direct != via_cone {
                equivariant = false;
                break;
            }
        }
        pass &= flips_below_top && tail_unchanged && equivariant;
        trials.push(E0Trial {
            word,
            top_index: top,
            flipped_positions: flipped,
            flips_below_top,
            tail_unchanged,
            equivariant_on_ball: equivariant,
        });
    }
    Ok(E0Report {
        cone: ConeDto::from_signseq(&cone),
        ball_generators: max_gen,
        ball_radius: radius,
        trials,
        pass,
    })
}

pub fn random_e0_words(seed: u64, trials: u32, max_len: usize, max_gen: u32) -> Vec<Vec<i64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..=max_gen.max(1)) as i64;
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect()
        })
        .collect()
}

pub enum BallSpec {
    Bs { n: u32 },
    F,
    Hinf { max_gen: u32 },
}

pub fn ball_build(spec: BallSpec, radius: u32) -> Result<BallDto> {
    check_radius(radius)?;
    match spec {
        BallSpec::Bs { n } => {
            validate_base(n)?;
            let ball = cayley_ball(bs_generators(n), radius).map_err(CliError::invalid)?;
            Ok(BallDto::from_core(&ball))
        }
        BallSpec::F => {
            let ball = cayley_ball(f_generators(), radius).map_err(CliError::invalid)?;
            Ok(BallDto::from_core(&ball))
        }
        BallSpec::Hinf { max_gen } => {
            let ball = cayley_ball(hinf_generators(max_gen)?, radius)
                .map_err(CliError::invalid)?;
            Ok(BallDto::from_core(&ball))
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ViolationDto {
    pub kind: String,
    pub elements: Vec<ElementDto>,
}

#[derive(Serialize, Debug)]
pub struct AxiomReportDto {
    pub cone: ConeDto,
    pub ball: BallDto,
    pub elements_checked: u64,
    pub products_checked: u64,
    pub violations: Vec<ViolationDto>,
    pub pass: bool,
}

fn violations_to_dto<E: WireElement>(violations: &[AxiomViolation<E>]) -> Vec<ViolationDto> {
    violations
        .iter()
        .map(|v| match v {
            AxiomViolation::Trichotomy { element } => ViolationDto {
                kind: "trichotomy".into(),
                elements: vec![element.to_dto()],
            },
            AxiomViolation::Closure { left, right, product } => ViolationDto {
                kind: "closure".into(),
                elements: vec![left.to_dto(), right.to_dto(), product.to_dto()],
            },
        })
        .collect()
}

pub enum ConeSpec {
    Smirnov { n: u32, alpha: QuadIrr },
    Enum { cone: EnumCone },
    SignSeq { cone: SignSeqCone, max_gen: u32 },
}

pub fn ball_check_axioms(spec: ConeSpec, radius: u32) -> Result<AxiomReportDto> {
    check_radius(radius)?;
    match spec {
        ConeSpec::Smirnov { n, alpha } => {
            validate_base(n)?;
            let cone = SmirnovCone::new(n, alpha).map_err(CliError::invalid)?;
            let ball = cayley_ball(bs_generators(n), radius).map_err(CliError::invalid)?;
            let report = cone_axiom_check(&cone, &ball);
            Ok(AxiomReportDto {
                cone: ConeDto::from_smirnov(&cone),
                ball: BallDto::from_core(&ball),
                elements_checked: report.elements_checked as u64,
                products_checked: report.products_checked as u64,
                violations: violations_to_dto(&report.violations),
                pass: report.is_pass(),
            })
        }
        ConeSpec::Enum { cone } => {
            let ball = cayley_ball(f_generators(), radius).map_err(CliError::invalid)?;
            let report = cone_axiom_check(&cone, &ball);
            Ok(AxiomReportDto {
                cone: ConeDto::from_enum(&cone),
                ball: BallDto::from_core(&ball),
                elements_checked: report.elements_checked as u64,
                products_checked: report.products_checked as u64,
                violations: violations_to_dto(&report.violations),
                pass: report.is_pass(),
            })
        }
        ConeSpec::SignSeq { cone, max_gen } => {
            let ball = cayley_ball(hinf_generators(max_gen)?, radius)
                .map_err(CliError::invalid)?;
            let report = cone_axiom_check(&cone, &ball);
            Ok(AxiomReportDto {
                cone: ConeDto::from_signseq(&cone),
                ball: BallDto::from_core(&ball),
                elements_checked: report.elements_checked as u64,
                products_checked: report.products_checked as u64,
                violations: violations_to_dto(&report.violations),
                pass: report.is_pass(),
            })
        }
    }
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub kind: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Parses and re-verifies a certificate document. Returns the report plus
/// whether verification passed (the caller maps failure to exit 1).
pub fn verify_document(text: &str) -> Result<(VerifyReport, bool)> {
    let dto: CertificateDto = serde_json::from_str(text)
        .map_err(|e| CliError::InvalidInput(format!("bad certificate document: {e}")))?;
    let cert: Certificate = dto.to_core()?;
    match verify_certificate(&cert) {
        Ok(()) => Ok((
            VerifyReport { kind: cert.kind().into(), verdict: "pass".into(), reason: None },
            true,
        )),
        Err(e) => Ok((
            VerifyReport {
                kind: cert.kind().into(),
                verdict: "fail".into(),
                reason: Some(e.to_string()),
            },
            false,
        )),
    }
}

/// The i-th rational of the canonical enumeration, exposed for inspection.
#[derive(Serialize, Debug)]
pub struct EnumReport {
    pub index: u64,
    pub rational: String,
}

pub fn f_enum(index: u64) -> Result<EnumReport> {
    if index > 1 << 22 {
        return Err(CliError::InvalidInput(format!("index {index} too large")));
    }
    Ok(EnumReport { index, rational: enum_rational(index as usize).to_string() })
}

pub fn hinf_condense(cone: SignSeqCone, max_gen: u32, radius: u32) -> Result<CertificateDto> {
    check_radius(radius)?;
    let ball = cayley_ball(hinf_generators(max_gen)?, radius).map_err(CliError::invalid)?;
    let cert = signseq_condensed_at_resolution(&cone, &ball).map_err(CliError::invalid)?;
    Ok(CertificateDto::from_core(&cert))
}
