//! Exact rational linear and multilinear algebra kernel.
//!
//! Base field: the rationals, represented by [`num_rational::BigRational`]
//! (always in lowest terms, denominator positive). Every identity verified
//! over ℚ extends to any field of characteristic zero, so this is the field
//! the whole crate computes in.

mod matrix;
mod poly;
mod wedge;

pub use matrix::Matrix;
pub use poly::{bilinear_product, Poly, PolyCoeff};
pub use wedge::{binomial, shuffles, sort_with_sign, wedge_enumerate, wedge_position, WedgeIndex};

use crate::report::Error;
use num_bigint::BigInt;

/// Arbitrary-precision rational; all arithmetic in the crate happens here.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse the canonical string form `"p"` or `"p/q"`. Floats are rejected.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::input(format!(
            "`{s}` is not an exact rational; write it as p or p/q"
        )));
    }
    s.parse::<Rat>()
        .map_err(|_| Error::input(format!("cannot parse `{s}` as a rational p/q")))
}

/// Canonical string form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rat(x: &Rat) -> String {
    x.to_string()
}

/// Zero vector of the given length.
pub fn zero_vec(n: usize) -> Vec<Rat> {
    vec![rat(0); n]
}

/// Standard basis vector `e_i` (0-based) of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vec(n);
    v[i] = rat(1);
    v
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x == &rat(0))
}

/// Accumulate `dst += c * src`.
pub fn vec_axpy(dst: &mut [Rat], c: &Rat, src: &[Rat]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        assert_eq!(format_rat(&ratio(3, 6)), "1/2");
        assert_eq!(format_rat(&rat(-7)), "-7");
        assert_eq!(format_rat(&ratio(-2, 4)), "-1/2");
        assert_eq!(parse_rat("5/10").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat(" -3 ").unwrap(), rat(-3));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1e3").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn denominators_stay_positive() {
        let x = Rat::new(BigInt::from(1), BigInt::from(-2));
        assert_eq!(format_rat(&x), "-1/2");
    }
}
