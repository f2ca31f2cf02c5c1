use alloc::string::String;
use alloc::vec::Vec;

use super::GroupError;

/// Letters of a two-generator word; capitals denote inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }
}

/// Parses a word over {a, A, b, B}; whitespace is ignored.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>, GroupError> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'a' => Ok(Letter::A),
            'A' => Ok(Letter::AInv),
            'b' => Ok(Letter::B),
            'B' => Ok(Letter::BInv),
            other => Err(GroupError::BadLetter(other)),
        })
        .collect()
}

pub fn render_letters(word: &[Letter]) -> String {
    word.iter().map(|l| l.to_char()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let w = parse_letters("aB bA").unwrap();
        assert_eq!(render_letters(&w), "aBbA");
        assert!(parse_letters("abc").is_err());
    }
}
