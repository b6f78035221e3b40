use num_complex::Complex64;

use crate::error::{Error, Result};

/// Ground field for all numerics.
pub type Scalar = Complex64;

/// Default tolerance for construction-time comparisons.
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// Default tolerance for residual acceptance.
pub const RESIDUAL_TOL: f64 = 1e-9;

pub fn c(re: f64, im: f64) -> Scalar {
    Scalar::new(re, im)
}

pub fn real(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn approx_eq(a: Scalar, b: Scalar, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}

pub fn is_negligible(a: Scalar, tol: f64) -> bool {
    a.norm() <= tol
}

pub fn checked_div(num: Scalar, den: Scalar, tol: f64) -> Result<Scalar> {
    let magnitude = den.norm();
    if magnitude <= tol {
        return Err(Error::DivisionByZero { magnitude, tol });
    }
    Ok(num / den)
}

pub fn checked_inv(x: Scalar, tol: f64) -> Result<Scalar> {
    checked_div(Scalar::new(1.0, 0.0), x, tol)
}

/// Integer power; negative exponents go through a checked inverse.
pub fn checked_powi(x: Scalar, e: i32, tol: f64) -> Result<Scalar> {
    if e >= 0 {
        Ok(ipow(x, e as u32))
    } else {
        Ok(ipow(checked_inv(x, tol)?, e.unsigned_abs()))
    }
}

/// Repeated squaring, kept deterministic so that equal inputs give bit-identical outputs.
pub(crate) fn ipow(mut x: Scalar, mut e: u32) -> Scalar {
    let mut acc = Scalar::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= x;
        }
        x *= x;
        e >>= 1;
    }
    acc
}

/// `x^e` for a nonzero scalar; panics only if `x` is exactly zero and `e < 0`.
pub(crate) fn powi(x: Scalar, e: i32) -> Scalar {
    if e >= 0 {
        ipow(x, e as u32)
    } else {
        ipow(x.inv(), e.unsigned_abs())
    }
}
