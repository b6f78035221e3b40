use super::{CheckDetail, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::{embed_pair, residual_norm, SquareMatrix};
use crate::rings::{Coeff, LaurentPoly, Scalar};

fn check_dim<T: Coeff>(r: &SquareMatrix<T>, m: usize) -> Result<()> {
    if r.dim() != m * m {
        return Err(Error::DimensionMismatch {
            expected: m * m,
            found: r.dim(),
        });
    }
    Ok(())
}

/// `(R12 R13 R23, R23 R13 R12)` on the `m^3` space.
pub fn ybe_sides<T: Coeff>(
    r12: &SquareMatrix<T>,
    r13: &SquareMatrix<T>,
    r23: &SquareMatrix<T>,
    m: usize,
) -> Result<(SquareMatrix<T>, SquareMatrix<T>)> {
    for r in [r12, r13, r23] {
        check_dim(r, m)?;
    }
    let a = embed_pair(r12, (1, 2), m)?;
    let b = embed_pair(r13, (1, 3), m)?;
    let c = embed_pair(r23, (2, 3), m)?;
    let lhs = a.mul(&b)?.mul(&c)?;
    let rhs = c.mul(&b)?.mul(&a)?;
    Ok((lhs, rhs))
}

pub fn check_ybe(r: &SquareMatrix<Scalar>, m: usize, tol: f64) -> Result<CheckReport> {
    let (lhs, rhs) = ybe_sides(r, r, r, m)?;
    Ok(CheckReport::numeric("ybe", residual_norm(&lhs, &rhs)?, tol, Vec::new()))
}

/// `R12(c1,c2) R13(c1,c3) R23(c2,c3) = R23(c2,c3) R13(c1,c3) R12(c1,c2)`.
pub fn check_colored_ybe(
    r12: &SquareMatrix<Scalar>,
    r13: &SquareMatrix<Scalar>,
    r23: &SquareMatrix<Scalar>,
    m: usize,
    tol: f64,
) -> Result<CheckReport> {
    let (lhs, rhs) = ybe_sides(r12, r13, r23, m)?;
    Ok(CheckReport::numeric("colored_ybe", residual_norm(&lhs, &rhs)?, tol, Vec::new()))
}

/// Polynomial version: the residual is the largest coefficient modulus of the difference
/// of the two sides, and the check passes when that difference is zero up to `tol`.
pub fn check_colored_ybe_exact(
    r12: &SquareMatrix<LaurentPoly>,
    r13: &SquareMatrix<LaurentPoly>,
    r23: &SquareMatrix<LaurentPoly>,
    m: usize,
    tol: f64,
) -> Result<CheckReport> {
    let (lhs, rhs) = ybe_sides(r12, r13, r23, m)?;
    let diff = lhs.sub(&rhs)?;
    let residual = diff.max_magnitude();
    let terms: usize = lhs.entries().map(|(_, _, p)| p.num_terms()).sum();
    let details = vec![
        CheckDetail::new("nonzero_entries_lhs", lhs.nnz() as f64),
        CheckDetail::new("terms_lhs", terms as f64),
    ];
    Ok(CheckReport {
        name: "colored_ybe_exact".into(),
        residual,
        exact: true,
        passed: residual <= tol,
        tolerance: tol,
        details,
    })
}
