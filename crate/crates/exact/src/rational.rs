//! Arbitrary-precision rational scalars.
//!
//! `Rat` is always stored reduced with a positive denominator, which is
//! exactly the invariant `num_rational::BigRational` maintains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `a` or `a/b` with optional sign. Decimal notation is not accepted.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|e| format!("bad integer `{s}`: {e}")),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator `{n}`: {e}"))?;
            let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator `{d}`: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Format as `a` or `a/b`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest-double approximation, adequate for display and numeric seeding.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-4", "5/7", "-12/5", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(parse_rat("4/8").unwrap(), ratio(1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn to_f64() {
        assert_eq!(rat_to_f64(&ratio(1, 2)), 0.5);
        assert_eq!(rat_to_f64(&rat(-3)), -3.0);
    }
}
