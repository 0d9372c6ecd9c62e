//! Exact rational linear algebra: scalars, dense matrices, subspaces and quotients.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::{kernel, rref, span, QuotientSpace, Subspace};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p / q`, reduced. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p/q"`, `"p"`, with an optional leading ASCII or Unicode minus sign.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-').or_else(|| trimmed.strip_prefix('−')) {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let bad = || Error::ParseScalar(text.to_string());
    if body.is_empty() || body.starts_with(['-', '+', '−']) {
        return Err(bad());
    }
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    let value = Scalar::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

pub fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| -x).collect()
}

/// Largest absolute numerator or denominator, for diagnostics.
pub fn height(v: &[Scalar]) -> BigInt {
    v.iter()
        .flat_map(|x| [x.numer().abs(), x.denom().clone()])
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-4").unwrap(), int(-4));
        assert_eq!(parse_scalar("−1/4").unwrap(), frac(-1, 4));
        assert_eq!(parse_scalar(" 0 ").unwrap(), int(0));
        for bad in ["", "1/0", "a", "1/-2", "--1", "1.5", "/2", "2/"] {
            assert!(parse_scalar(bad).is_err(), "{bad:?} parsed");
        }
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert_eq!(format_scalar(&frac(0, 5)), "0");
    }

    #[test]
    fn arithmetic_is_reduced() {
        let x = frac(1, 6) + frac(1, 3);
        assert_eq!(x.numer(), &BigInt::from(1));
        assert_eq!(x.denom(), &BigInt::from(2));
        let y = frac(2, -4);
        assert!(y.denom() > &BigInt::zero());
        assert_eq!(y, frac(-1, 2));
    }

    #[test]
    fn large_values_do_not_overflow() {
        let mut x = int(1);
        for _ in 0..200 {
            x *= frac(3, 2);
        }
        let back = (0..200).fold(x, |acc, _| acc * frac(2, 3));
        assert_eq!(back, int(1));
    }
}
