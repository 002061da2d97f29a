//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. Zero is `0/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical form (reduced, denominator > 0).
pub type Scalar = BigRational;

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Scalars from a slice of machine integers.
pub fn ints(ns: &[i64]) -> Vec<Scalar> {
    ns.iter().map(|&n| int(n)).collect()
}

/// Rescales a nonzero rational vector to a primitive integer vector whose
/// first nonzero entry is positive. This is the canonical representative
/// used for projective equality, hashing, and report output.
///
/// Returns `None` for the zero vector.
pub fn primitive(v: &[Scalar]) -> Option<Vec<Scalar>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for n in &scaled {
        g = g.gcd(n);
    }
    let first_nonzero_negative = scaled
        .iter()
        .find(|n| !n.is_zero())
        .map(|n| n.is_negative())
        .unwrap_or(false);
    if first_nonzero_negative {
        g = -g;
    }
    Some(
        scaled
            .into_iter()
            .map(|n| BigRational::from_integer(n / &g))
            .collect(),
    )
}

/// Formats a scalar as `numerator / denominator` for the fixture format.
pub fn format_scalar(x: &Scalar) -> String {
    format!("{} / {}", x.numer(), x.denom())
}

/// Parses the `numerator / denominator` fixture form.
pub fn parse_scalar(s: &str) -> Result<Scalar, String> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| format!("malformed scalar `{s}`: expected `num / den`"))?;
    let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
    let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced_with_positive_denominator() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert!(int(0).is_zero());
        assert_eq!(*int(0).denom(), BigInt::one());
    }

    #[test]
    fn primitive_clears_denominators_and_signs() {
        let v = vec![ratio(-2, 3), ratio(4, 9), int(0)];
        let p = primitive(&v).unwrap();
        assert_eq!(p, ints(&[3, -2, 0]));
        assert!(primitive(&[int(0), int(0)]).is_none());
    }

    #[test]
    fn scalar_round_trip() {
        let x = ratio(-22, 7);
        assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        assert!(parse_scalar("3 / 0").is_err());
        assert!(parse_scalar("nonsense").is_err());
    }
}
