//! Textual literals for semigroups (`gen:3,19,20`, `gaps:1,2,4,7`) and
//! ideals (`offset:3`, `igen:3,5`), shared by the CLI and test fixtures.

use thiserror::Error;

use crate::ideal::{IdealError, SemigroupIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("expected `gen:<list>` or `gaps:<list>`, found `{0}`")]
    UnknownSemigroupTag(String),
    #[error("expected `offset:<n>` or `igen:<list>`, found `{0}`")]
    UnknownIdealTag(String),
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn parse_list(text: &str) -> Result<Vec<u64>, LiteralError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse()
                .map_err(|_| LiteralError::InvalidNumber(part.to_string()))
        })
        .collect()
}

/// Parses `gen:3,19,20` or `gaps:1,2,4,7` (an empty gap list denotes ℕ).
pub fn parse_semigroup(text: &str) -> Result<NumericalSemigroup, LiteralError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("gen:") {
        Ok(NumericalSemigroup::from_generators(&parse_list(rest)?)?)
    } else if let Some(rest) = text.strip_prefix("gaps:") {
        Ok(NumericalSemigroup::from_gaps(&parse_list(rest)?)?)
    } else {
        Err(LiteralError::UnknownSemigroupTag(text.to_string()))
    }
}

/// Parses `offset:3` (the principal ideal 3 + S) or `igen:3,5` relative
/// to the given semigroup.
pub fn parse_ideal(
    parent: &NumericalSemigroup,
    text: &str,
) -> Result<SemigroupIdeal, LiteralError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("offset:") {
        let offset = rest
            .trim()
            .parse()
            .map_err(|_| LiteralError::InvalidNumber(rest.trim().to_string()))?;
        Ok(SemigroupIdeal::principal(parent, offset)?)
    } else if let Some(rest) = text.strip_prefix("igen:") {
        Ok(SemigroupIdeal::from_generators(parent, &parse_list(rest)?)?)
    } else {
        Err(LiteralError::UnknownIdealTag(text.to_string()))
    }
}

/// Formats the gap set as a `gaps:` literal that parses back.
pub fn gaps_literal(s: &NumericalSemigroup) -> String {
    let gaps: Vec<String> = s.gaps().iter().map(u64::to_string).collect();
    format!("gaps:{}", gaps.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_literals() {
        let s = parse_semigroup("gen:3,5").unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        let t = parse_semigroup("gaps:1,2,4,7").unwrap();
        assert_eq!(s, t);
        assert!(parse_semigroup("gaps:").unwrap().is_naturals());
        assert!(matches!(
            parse_semigroup("members:1,2"),
            Err(LiteralError::UnknownSemigroupTag(_))
        ));
        assert!(matches!(
            parse_semigroup("gen:3,x"),
            Err(LiteralError::InvalidNumber(_))
        ));
        assert!(matches!(
            parse_semigroup("gen:2,4"),
            Err(LiteralError::Semigroup(SemigroupError::GcdNotOne { gcd: 2 }))
        ));
    }

    #[test]
    fn ideal_literals() {
        let s = parse_semigroup("gen:3,19,20").unwrap();
        let e = parse_ideal(&s, "offset:3").unwrap();
        assert_eq!(e.min(), 3);
        let f = parse_ideal(&s, "igen:3").unwrap();
        assert_eq!(e, f);
        assert!(matches!(
            parse_ideal(&s, "offset:4"),
            Err(LiteralError::Ideal(IdealError::NotInSemigroup { gen: 4 }))
        ));
        assert!(matches!(
            parse_ideal(&s, "igen:"),
            Err(LiteralError::Ideal(IdealError::EmptyGenerators))
        ));
    }

    #[test]
    fn gaps_literal_round_trip() {
        for text in ["gen:3,5", "gen:1", "gen:5,8,19,22"] {
            let s = parse_semigroup(text).unwrap();
            assert_eq!(parse_semigroup(&gaps_literal(&s)).unwrap(), s);
        }
    }
}
