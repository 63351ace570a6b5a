//! Polynomials in a formal parameter `t` with tensor-like coefficients.
//!
//! "Holds for all t" claims are checked coefficientwise on these, never by
//! sampling numeric values of `t`.

use super::Rat;
use std::collections::BTreeMap;

/// Coefficient types usable inside a [`Poly`].
pub trait PolyCoeff: Clone {
    fn coeff_is_zero(&self) -> bool;
    fn coeff_add(&self, other: &Self) -> Self;
    fn coeff_neg(&self) -> Self;
    fn coeff_scale(&self, c: &Rat) -> Self;
}

/// Finite list of `(degree, coefficient)` pairs with distinct degrees; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T: PolyCoeff> {
    coeffs: BTreeMap<usize, T>,
}

impl<T: PolyCoeff> Poly<T> {
    pub fn zero() -> Self {
        Poly {
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial `value`.
    pub fn constant(value: T) -> Self {
        Poly::from_pairs(vec![(0, value)])
    }

    pub fn from_pairs(pairs: Vec<(usize, T)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (d, c) in pairs {
            let entry = match coeffs.remove(&d) {
                Some(prev) => T::coeff_add(&prev, &c),
                None => c,
            };
            if !entry.coeff_is_zero() {
                coeffs.insert(d, entry);
            }
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    /// Coefficient of `t^d`, if nonzero.
    pub fn coeff(&self, d: usize) -> Option<&T> {
        self.coeffs.get(&d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut pairs: Vec<(usize, T)> = self.coeffs.iter().map(|(d, c)| (*d, c.clone())).collect();
        pairs.extend(other.coeffs.iter().map(|(d, c)| (*d, c.clone())));
        Poly::from_pairs(pairs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, c)| (*d, c.coeff_neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::from_pairs(
            self.coeffs
                .iter()
                .map(|(d, v)| (*d, v.coeff_scale(c)))
                .collect(),
        )
    }

    /// Multiply by `t^d`.
    pub fn shift(&self, d: usize) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k + d, c.clone()))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }
}

impl PolyCoeff for Rat {
    fn coeff_is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn coeff_add(&self, other: &Self) -> Self {
        self + other
    }
    fn coeff_neg(&self) -> Self {
        -self
    }
    fn coeff_scale(&self, c: &Rat) -> Self {
        self * c
    }
}

impl PolyCoeff for super::Matrix {
    fn coeff_is_zero(&self) -> bool {
        Self::is_zero(self)
    }
    fn coeff_add(&self, other: &Self) -> Self {
        self + other
    }
    fn coeff_neg(&self) -> Self {
        -self
    }
    fn coeff_scale(&self, c: &Rat) -> Self {
        Self::scale(self, c)
    }
}

/// Product of two polynomials via a bilinear kernel on the coefficients.
/// Used for identities like the S-equation of `r + tκ`, whose tensor is a
/// bilinear form evaluated on the polynomial's coefficients.
pub fn bilinear_product<T, U, F>(a: &Poly<T>, b: &Poly<T>, f: F) -> Poly<U>
where
    T: PolyCoeff,
    U: PolyCoeff,
    F: Fn(&T, &T) -> U,
{
    let mut pairs = Vec::new();
    for (da, ca) in a.iter() {
        for (db, cb) in b.iter() {
            pairs.push((da + db, f(ca, cb)));
        }
    }
    Poly::from_pairs(pairs)
}
