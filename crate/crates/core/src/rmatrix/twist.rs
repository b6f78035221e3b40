//! The multiparameter R as a twist of the single-parameter one.
//!
//! With `F = u^{-(H (x) J - J (x) H)/4}` we have `F21 = F^-1`, and
//! `R(u) = F21 R(u = 1) F^-1 = F^-1 R(u = 1) F^-1`.

use super::{series_matrix, Method, RMatrixResult, SeriesRep, SERIES_NOTE};
use crate::error::{Error, Result};
use crate::linalg::{flip_matrix, residual_norm, SquareMatrix};
use crate::representations::{Color, HighestWeightRep};
use crate::rings::{approx_eq, real, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct TwistResult {
    /// The series at `g = g' = 1`.
    pub single: SquareMatrix<Scalar>,
    /// Image of `F` on `rep1 (x) rep2`.
    pub factor: SquareMatrix<Scalar>,
    /// `F^-1 single F^-1`.
    pub twisted: RMatrixResult,
}

fn shared_u(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<Scalar> {
    let (raw1, raw2) = match (rep1.raw(), rep2.raw()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::MissingRawParameters),
    };
    if !approx_eq(raw1.u, raw2.u, tol) {
        return Err(Error::InvalidInput("representations must share u".into()));
    }
    Ok(raw1.u)
}

/// Diagonal image of `F`, entry `(i,j) = exp(-ln(u) (h_i lambda' - lambda h'_j) / 4)`
/// with `h` the full H weights.
pub fn twist_factor(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<SquareMatrix<Scalar>> {
    let ln_u = shared_u(rep1, rep2, tol)?.ln();
    let (l1, l2) = (rep1.lambda(), rep2.lambda());
    let mut diag = Vec::with_capacity(rep1.m() * rep2.m());
    for hi in rep1.weights() {
        for hj in rep2.weights() {
            diag.push((-0.25 * ln_u * (hi * l2 - l1 * hj)).exp());
        }
    }
    Ok(SquareMatrix::from_diag(diag))
}

/// `max |F12 F21 - 1|` with `F21 = P F(rep2, rep1) P`; needs `m1 = m2`.
pub fn twist_unitarity_residual(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<f64> {
    if rep1.m() != rep2.m() {
        return Err(Error::UnequalDims(rep1.m(), rep2.m()));
    }
    let f12 = twist_factor(rep1, rep2, tol)?;
    let p = flip_matrix(rep1.m());
    let f21 = p.mul(&twist_factor(rep2, rep1, tol)?)?.mul(&p)?;
    residual_norm(&f12.mul(&f21)?, &SquareMatrix::identity(f12.dim()))
}

pub fn twist_conjugate(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<TwistResult> {
    if !rep1.same_q(rep2, tol) {
        return Err(Error::QMismatch);
    }
    let factor = twist_factor(rep1, rep2, tol)?;
    let q = rep1.q().value;
    let untwisted = |rep: &HighestWeightRep| SeriesRep {
        g: real(1.0),
        ..SeriesRep::from_rep(rep)
    };
    let single = series_matrix(&untwisted(rep1), &untwisted(rep2), q, tol)?;
    let f_inv = factor.map(|x| if x.norm() == 0.0 { *x } else { x.inv() });
    let twisted = f_inv.mul(&single)?.mul(&f_inv)?;
    let same_color = rep1.color() == rep2.color();
    let color = |r: &HighestWeightRep| Color {
        sigma: r.sigma(),
        g: r.g(),
    };
    Ok(TwistResult {
        single,
        factor,
        twisted: RMatrixResult {
            matrix: twisted,
            method: Method::Twist,
            m1: rep1.m(),
            m2: rep2.m(),
            q,
            branch: Some(rep1.branch()),
            colors: if same_color {
                vec![color(rep1)]
            } else {
                vec![color(rep1), color(rep2)]
            },
            normalization_note: format!("{SERIES_NOTE} Compare with the series after ratio normalization."),
            reps: Some(Box::new((rep1.clone(), rep2.clone()))),
        },
    })
}
