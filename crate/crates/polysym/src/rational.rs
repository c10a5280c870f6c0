//! Exact rational coefficients.
//!
//! All arithmetic in this crate is over `Q`, represented by
//! [`num_rational::BigRational`]: numerator and denominator are
//! arbitrary-precision integers, always stored in lowest terms with a
//! positive denominator. No floating point appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(c: &Rational) -> bool {
    c.is_zero()
}

pub fn rat_one() -> Rational {
    Rational::one()
}

/// Least common multiple of the denominators of a slice of rationals.
/// Scaling a row by this clears it to integers without changing spans.
pub fn denominator_lcm(values: &[Rational]) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        let d = v.denom().abs();
        if !d.is_one() {
            l = num_integer::lcm(l, d);
        }
    }
    l
}

/// Parse "p/q" or "p" into a rational. Used by the JSON catalog reader.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let c = rat(6, -4);
        assert_eq!(c, rat(-3, 2));
        assert!(c.denom() > &BigInt::zero());
        let s = format!("{c}");
        assert_eq!(s, "-3/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "1/3", "-22/7"] {
            let c = parse_rational(s).unwrap();
            assert_eq!(format!("{c}"), s);
        }
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn denominator_lcm_of_mixed() {
        let vals = vec![rat(1, 6), rat(3, 4), rat_int(2)];
        assert_eq!(denominator_lcm(&vals), BigInt::from(12));
    }
}
