//! Exact rational exponents and bounds.
//!
//! Every freeness comparison in this crate is exact: a fraction is kept in
//! lowest terms and compared by integer cross-multiplication, never through
//! floating point. `num_rational::Rational64` already guarantees both, so it
//! is re-exported as the domain type.

use crate::error::{Error, Result};

pub use num_rational::Rational64 as Ratio;

/// Builds a reduced fraction; the denominator must be positive.
pub fn ratio(numer: i64, denom: i64) -> Ratio {
    assert!(denom > 0, "denominator must be positive");
    Ratio::new(numer, denom)
}

/// Parses "p/q" or a bare integer. Decimal notation is rejected, keeping the
/// exactness contract visible at the CLI boundary.
pub fn parse_ratio(text: &str) -> Result<Ratio> {
    let text = text.trim();
    let bad = || Error::Parse(format!("expected p/q or integer, got {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q <= 0 {
                return Err(Error::Parse(format!("denominator must be positive in {text:?}")));
            }
            Ok(Ratio::new(p, q))
        }
        None => {
            let p: i64 = text.parse().map_err(|_| bad())?;
            Ok(Ratio::from_integer(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_in_lowest_terms() {
        let r = ratio(30, 148);
        assert_eq!((*r.numer(), *r.denom()), (15, 74));
    }

    #[test]
    fn comparison_is_exact() {
        // 289/148 vs 1321/684 differ by less than 2e-3; cross-multiplication
        // must still order them correctly.
        assert!(ratio(289, 148) > ratio(1321, 684));
        assert!(ratio(7, 4) < ratio(1321, 684));
        assert_eq!(ratio(2, 8), ratio(1, 4));
    }

    #[test]
    fn parses_fraction_and_integer() {
        assert_eq!(parse_ratio("7/4").unwrap(), ratio(7, 4));
        assert_eq!(parse_ratio("3").unwrap(), Ratio::from_integer(3));
        assert_eq!(parse_ratio(" 289/148 ").unwrap(), ratio(289, 148));
        assert!(parse_ratio("1.75").is_err());
        assert!(parse_ratio("7/0").is_err());
        assert!(parse_ratio("7/-4").is_err());
    }

    #[test]
    fn displays_as_p_slash_q() {
        assert_eq!(ratio(289, 15).to_string(), "289/15");
    }
}
