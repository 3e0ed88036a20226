//! Exact rational scalars.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parse `[+-]digits[/digits]` with a positive denominator.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse(s.to_string());
    let t = s.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (num_s, den_s) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_s) {
        return Err(bad());
    }
    let mut n: BigInt = num_s.parse().map_err(|_| bad())?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den_s {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `n` or `n/d` in lowest terms, `d > 0`.
pub fn fmt_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Integer cube root if `n` is a perfect cube.
pub fn exact_cbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.abs().cbrt();
    let r = if n.is_negative() { -r } else { r };
    (&r * &r * &r == *n).then_some(r)
}

/// Whether `x` is the cube of a rational.
pub fn is_rational_cube(x: &Scalar) -> bool {
    exact_cbrt(x.numer()).is_some() && exact_cbrt(x.denom()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_scalar("+4/2").unwrap(), int(2));
        for bad in ["", "-", "1/0", "1/-2", "a", "1.5", "1/", "/2", "--1"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn print_is_canonical() {
        assert_eq!(fmt_scalar(&frac(6, -4)), "-3/2");
        assert_eq!(fmt_scalar(&int(0)), "0");
    }

    #[test]
    fn cubes() {
        assert!(is_rational_cube(&frac(-8, 27)));
        assert!(!is_rational_cube(&frac(4, 1)));
    }
}
