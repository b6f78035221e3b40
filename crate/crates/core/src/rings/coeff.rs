use std::fmt::Debug;

use super::scalar::{checked_powi, Scalar};
use crate::error::Result;

/// Entries of a [`SquareMatrix`](crate::linalg::SquareMatrix): either numbers or
/// Laurent polynomials in the color variables.
///
/// Mixing two polynomials over different variable sets is a programming error and
/// panics; use the fallible methods on [`LaurentPoly`](super::LaurentPoly) at API
/// boundaries.
pub trait Coeff: Clone + Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn one() -> Self {
        Self::from_scalar(Scalar::new(1.0, 0.0))
    }
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, s: Scalar) -> Self;
    /// `|x|` for scalars, largest coefficient modulus for polynomials.
    fn magnitude(&self) -> f64;
    fn powi(&self, e: i32, tol: f64) -> Result<Self>;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::new(0.0, 0.0)
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, s: Scalar) -> Self {
        self * s
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn powi(&self, e: i32, tol: f64) -> Result<Self> {
        checked_powi(*self, e, tol)
    }
}
