//! Input grammars for command-line values: cone parameters, group words,
//! bit lists, and rational lists.

use std::str::FromStr;

use num_bigint::BigInt;

use conelab_core::exactnum::{QuadIrr, Rational};
use conelab_core::groups::{parse_letters, Letter};

use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

/// A cone parameter: `sqrt(d)`, `(p+q*sqrt(d))/r`, or a plain rational
/// `num/den`. Contexts that need an irrational reject the rational form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaInput {
    Quad(QuadIrr),
    Rational(Rational),
}

impl AlphaInput {
    pub fn require_irrational(self, context: &str) -> Result<QuadIrr> {
        match self {
            AlphaInput::Quad(q) => Ok(q),
            AlphaInput::Rational(r) => Err(CliError::InvalidInput(format!(
                "{context} needs an irrational parameter, got the rational {r}"
            ))),
        }
    }
}

fn parse_sqrt(s: &str) -> Option<Result<u32>> {
    let inner = s.strip_prefix("sqrt(")?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<u32>()
            .map_err(|_| CliError::InvalidInput(format!("bad radicand {inner:?}"))),
    )
}

/// Parses the `(p+q*sqrt(d))/r` form, sign of q embedded.
fn parse_quad_expr(s: &str) -> Option<Result<QuadIrr>> {
    let body = s.strip_prefix('(')?;
    let (body, denom) = body.rsplit_once(")/")?;
    // split p from q*sqrt(d) at the last +/- that is not leading
    let star = body.find("*sqrt(")?;
    let radical_part = &body[..star];
    let (p_str, q_str) = {
        let split_at = radical_part[1..]
            .rfind(['+', '-'])
            .map(|i| i + 1)?;
        (&radical_part[..split_at], &radical_part[split_at..])
    };
    let d = match parse_sqrt(body[star + 1..].trim()) {
        Some(Ok(d)) => d,
        Some(Err(e)) => return Some(Err(e)),
        None => return None,
    };
    let build = || -> Result<QuadIrr> {
        let p = BigInt::from_str(p_str.trim())
            .map_err(|_| CliError::InvalidInput(format!("bad integer {p_str:?}")))?;
        let q_str = q_str.trim();
        let q_str = q_str.strip_prefix('+').unwrap_or(q_str);
        let q = BigInt::from_str(q_str)
            .map_err(|_| CliError::InvalidInput(format!("bad integer {q_str:?}")))?;
        let r = BigInt::from_str(denom.trim())
            .map_err(|_| CliError::InvalidInput(format!("bad integer {denom:?}")))?;
        QuadIrr::new(p, q, d, r).map_err(CliError::invalid)
    };
    Some(build())
}

pub fn parse_alpha(s: &str) -> Result<AlphaInput> {
    let s = s.trim();
    if let Some(d) = parse_sqrt(s) {
        return Ok(AlphaInput::Quad(QuadIrr::sqrt(d?).map_err(CliError::invalid)?));
    }
    if let Some(q) = parse_quad_expr(s) {
        return Ok(AlphaInput::Quad(q?));
    }
    if let Ok(r) = Rational::from_str(s) {
        return Ok(AlphaInput::Rational(r));
    }
    Err(CliError::InvalidInput(format!(
        "cannot parse {s:?}; expected sqrt(d), (p+q*sqrt(d))/r, or num/den"
    )))
}

/// Word over {a, A, b, B}.
pub fn parse_two_generator_word(s: &str) -> Result<Vec<Letter>> {
    parse_letters(s).map_err(CliError::invalid)
}

/// Comma-separated signed generator indices, e.g. "2,-1,3".
pub fn parse_index_word(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let v = tok
                .trim()
                .parse::<i64>()
                .map_err(|_| CliError::InvalidInput(format!("bad index {tok:?}")))?;
            if v == 0 || v.unsigned_abs() > 10_000 {
                return Err(CliError::InvalidInput(format!("index {v} out of range")));
            }
            Ok(v)
        })
        .collect()
}

/// Comma-separated rationals, e.g. "1/3,2/5".
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| Rational::from_str(tok.trim()).map_err(CliError::invalid))
        .collect()
}

/// Comma-separated bits, e.g. "1,0,1".
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| match tok.trim() {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(CliError::InvalidInput(format!("bad bit {other:?}"))),
        })
        .collect()
}

pub fn parse_bit(s: &str) -> Result<bool> {
    match s.trim() {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(CliError::InvalidInput(format!("bad bit {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_form() {
        let AlphaInput::Quad(q) = parse_alpha("sqrt(2)").unwrap() else { panic!() };
        assert_eq!(q, QuadIrr::sqrt(2).unwrap());
        assert!(parse_alpha("sqrt(4)").is_err()); // perfect square
    }

    #[test]
    fn full_form() {
        let AlphaInput::Quad(q) = parse_alpha("(1+1*sqrt(5))/2").unwrap() else { panic!() };
        assert_eq!(
            q,
            QuadIrr::new(BigInt::from(1), BigInt::from(1), 5, BigInt::from(2)).unwrap()
        );
        let AlphaInput::Quad(q) = parse_alpha("(-3-2*sqrt(7))/5").unwrap() else { panic!() };
        assert_eq!(
            q,
            QuadIrr::new(BigInt::from(-3), BigInt::from(-2), 7, BigInt::from(5)).unwrap()
        );
    }

    #[test]
    fn rational_form() {
        let AlphaInput::Rational(r) = parse_alpha("3/4").unwrap() else { panic!() };
        assert_eq!(r, Rational::new(BigInt::from(3), BigInt::from(4)).unwrap());
        assert!(parse_alpha("3/4")
            .unwrap()
            .require_irrational("smirnov cones")
            .is_err());
    }

    #[test]
    fn garbage_rejected() {
        assert!(parse_alpha("sqrt(two)").is_err());
        assert!(parse_alpha("(1+sqrt(2))/2").is_err()); // missing q*
        assert!(parse_alpha("hello").is_err());
    }

    #[test]
    fn index_words_and_bits() {
        assert_eq!(parse_index_word("2,-1, 3").unwrap(), vec![2, -1, 3]);
        assert!(parse_index_word("0").is_err());
        assert_eq!(parse_bits("1,0").unwrap(), vec![true, false]);
        assert!(parse_bits("2").is_err());
        assert_eq!(parse_rational_list("").unwrap(), Vec::<Rational>::new());
    }
}
