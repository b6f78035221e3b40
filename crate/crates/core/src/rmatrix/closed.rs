//! Closed forms for m = 2 and m = 3 (single color), after dropping the overall factor.

use super::{Method, RMatrixResult};
use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;
use crate::representations::{products_from_s_power, BranchTag, Color};
use crate::rings::{approx_eq, checked_inv, powi, real, Scalar};

/// `R_(1)` (generic, `s = +-q`) or `R_(2)` (`q^2 = -1`):
///
/// ```text
/// [ 1/s   0        0        0    ]
/// [ 0     gamma    0        0    ]
/// [ 0     1/s - s  1/gamma  0    ]
/// [ 0     0        0        1/s | -s ]
/// ```
pub fn build_r_closed_m2(q: Scalar, s: Scalar, gamma: Scalar, branch: BranchTag, tol: f64) -> Result<RMatrixResult> {
    let s_inv = checked_inv(s, tol)?;
    let gamma_inv = checked_inv(gamma, tol)?;
    let corner = match branch {
        BranchTag::Generic => {
            if !approx_eq(s * s, q * q, tol) {
                return Err(Error::BranchMismatch("generic m = 2 needs s = +-q".into()));
            }
            s_inv
        }
        BranchTag::RootOfUnity => {
            if !approx_eq(q * q, real(-1.0), tol) {
                return Err(Error::BranchMismatch("root-of-unity m = 2 needs q^2 = -1".into()));
            }
            -s
        }
    };
    let matrix = SquareMatrix::from_entries(
        4,
        [
            (1, 1, s_inv),
            (2, 2, gamma),
            (3, 2, s_inv - s),
            (3, 3, gamma_inv),
            (4, 4, corner),
        ],
    )?;
    Ok(RMatrixResult {
        matrix,
        method: Method::ClosedM2,
        m1: 2,
        m2: 2,
        q,
        branch: Some(branch),
        colors: vec![Color {
            sigma: s.sqrt(),
            g: gamma.sqrt(),
        }],
        normalization_note: "Dropped q^{-(mu^2-1)/2} t^{lambda mu}; colors record principal roots of (s, gamma).".into(),
        reps: None,
    })
}

/// The 9x9 block matrix `[[A1,0,0],[B1,A2,0],[C,B2,A3]]` with
///
/// ```text
/// A1 = diag(q^2 s^-4, q^2 s^-2 gamma, q^2 gamma^2)
/// A2 = diag(q^2 s^-2 gamma^-1, 1, q^-2 s^2 gamma)
/// A3 = diag(q^2 gamma^-2, q^-2 s^2 gamma^-1, q^-6 s^4)
/// B1: (1,2) = q^2 (s^-4 - 1),          (2,3) = (1 - q^2) gamma a2b1
/// B2: (1,2) = (1 - q^2) gamma^-1 a1b2,  (2,3) = (1 + q^-2)(1 - q^-2 s^4)
/// C:  (1,3) = (s^-4 - 1)(q^2 - s^4)
/// ```
///
/// Only the product `a1b2 * a2b1 = a1b1 * a2b2` is gauge independent, so it is checked.
pub fn build_r_closed_m3(
    q: Scalar,
    s: Scalar,
    gamma: Scalar,
    a1b2: Scalar,
    a2b1: Scalar,
    tol: f64,
) -> Result<RMatrixResult> {
    checked_inv(s, tol)?;
    checked_inv(gamma, tol)?;
    checked_inv(q, tol)?;
    let p = products_from_s_power(3, q, s * s, tol);
    let expected = p[0] * p[1];
    let found = a1b2 * a2b1;
    if !approx_eq(found, expected, tol) {
        return Err(Error::ProductConstraintViolated {
            expected: format!("{expected}"),
            found: format!("{found}"),
        });
    }
    let q2 = q * q;
    let s2 = s * s;
    let s4 = s2 * s2;
    let one = real(1.0);
    let block = |bi: usize, bj: usize, i: usize, j: usize| ((bi - 1) * 3 + i, (bj - 1) * 3 + j);
    let mut entries = Vec::new();
    let mut put = |pos: (usize, usize), v: Scalar| entries.push((pos.0, pos.1, v));

    let a1 = [q2 / s4, q2 / s2 * gamma, q2 * gamma * gamma];
    let a2 = [q2 / s2 / gamma, one, s2 / q2 * gamma];
    let a3 = [q2 / (gamma * gamma), s2 / q2 / gamma, powi(q, -6) * s4];
    for (b, diag) in [(1, a1), (2, a2), (3, a3)] {
        for (k, v) in diag.into_iter().enumerate() {
            put(block(b, b, k + 1, k + 1), v);
        }
    }
    put(block(2, 1, 1, 2), q2 * (one / s4 - 1.0));
    put(block(2, 1, 2, 3), (one - q2) * gamma * a2b1);
    put(block(3, 2, 1, 2), (one - q2) / gamma * a1b2);
    put(block(3, 2, 2, 3), (one + one / q2) * (one - s4 / q2));
    put(block(3, 1, 1, 3), (one / s4 - 1.0) * (q2 - s4));

    Ok(RMatrixResult {
        matrix: SquareMatrix::from_entries(9, entries)?,
        method: Method::ClosedM3,
        m1: 3,
        m2: 3,
        q,
        branch: None,
        colors: vec![Color {
            sigma: s.sqrt(),
            g: gamma.sqrt(),
        }],
        normalization_note: "Dropped q^{-mu^2/2} t^{lambda mu}; colors record principal roots of (s, gamma).".into(),
        reps: None,
    })
}
