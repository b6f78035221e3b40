use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{is_negligible, powi, q_integer, root_of_unity, QValue, Scalar};

/// The two families of finite-dimensional highest-weight representations.
///
/// `Generic`: `(s/q)^{2(m-1)} = 1`, any q. `RootOfUnity`: `[m]_q = 0` (`q^{2m} = 1`,
/// `q^2 != 1`), s free. Together these are the solutions of
/// `((s/q)^{2(m-1)} - 1) [m]_q = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchTag {
    Generic,
    RootOfUnity,
}

impl BranchTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BranchTag::Generic => "generic",
            BranchTag::RootOfUnity => "root_of_unity",
        }
    }
}

pub(crate) fn check_q_squared(q: Scalar, tol: f64) -> Result<()> {
    if is_negligible(q * q - 1.0, tol) {
        return Err(Error::QSquaredOne);
    }
    Ok(())
}

/// `|(s/q)^{2(m-1)} - 1|` with `s = sigma^2`.
pub fn generic_gap(m: usize, q: Scalar, sigma: Scalar) -> f64 {
    let ratio = sigma * sigma / q;
    (powi(ratio, 2 * (m as i32 - 1)) - 1.0).norm()
}

/// Generic is preferred when both conditions hold; downstream results are identical.
pub fn classify_branch(m: usize, q: &QValue, sigma: Scalar, tol: f64) -> Result<BranchTag> {
    check_q_squared(q.value, tol)?;
    let generic_gap = generic_gap(m, q.value, sigma);
    if generic_gap <= tol {
        return Ok(BranchTag::Generic);
    }
    let root_gap = q_integer(m as u32, q.value, tol).norm();
    if root_gap <= tol {
        return Ok(BranchTag::RootOfUnity);
    }
    Err(Error::NeitherBranch { generic_gap, root_gap })
}

/// A root-of-unity q admissible for dimension `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibleRoot {
    /// `q = exp(2 pi i k / 2m)`.
    pub k: u32,
    pub q: QValue,
    /// False when the order of q^2 strictly divides m. Such q make `{n}_{q^2}!`
    /// vanish for some `n < m`, so the R-matrix series is singular there.
    pub primitive: bool,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All `q = exp(2 pi i k / 2m)`, `k = 1..2m-1`, excluding `q^2 = 1`.
pub fn admissible_roots(m: usize) -> Vec<AdmissibleRoot> {
    assert!(m >= 2, "admissible_roots needs m >= 2");
    let m = m as u32;
    (1..2 * m)
        .filter(|&k| k != m)
        .map(|k| AdmissibleRoot {
            k,
            q: root_of_unity(k as i64, 2 * m),
            primitive: gcd(k, m) == 1,
        })
        .collect()
}
