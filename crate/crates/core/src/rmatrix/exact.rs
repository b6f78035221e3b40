//! Exact mode: entries are Laurent polynomials in the color variables `sigma_k, g_k`,
//! with `q` numeric. Available on the root-of-unity branch in the unit-a gauge, where the
//! products `a_i b_i` are themselves Laurent polynomials in `sigma`.

use super::{series_matrix, SeriesRep};
use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;
use crate::rings::{powi, q_integer, Coeff, LaurentPoly, QValue, Scalar, VarSet};

/// Largest m for which a two-color exact build is offered.
pub const EXACT_MAX_COLORED: usize = 3;
/// Largest m for a single-color exact build.
pub const EXACT_MAX_UNCOLORED: usize = 4;

/// A set of symbolic colors `(sigma1, g1), (sigma2, g2), ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactColors {
    vars: VarSet,
    count: usize,
}

impl ExactColors {
    pub fn new(count: usize) -> Self {
        let names: Vec<String> = (1..=count)
            .flat_map(|k| [format!("sigma{k}"), format!("g{k}")])
            .collect();
        ExactColors {
            vars: VarSet::new(&names),
            count,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// `sigma_k`, 1-based.
    pub fn sigma(&self, k: usize) -> LaurentPoly {
        self.vars.var(2 * (k - 1))
    }

    pub fn g(&self, k: usize) -> LaurentPoly {
        self.vars.var(2 * (k - 1) + 1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactRMatrix {
    pub vars: VarSet,
    pub matrix: SquareMatrix<LaurentPoly>,
    pub m: usize,
    pub q: Scalar,
    /// 1-based color slots of the two tensor legs.
    pub legs: (usize, usize),
}

pub(crate) fn check_exact_support(m: usize, q: &QValue, colored: bool, tol: f64) -> Result<()> {
    let limit = if colored { EXACT_MAX_COLORED } else { EXACT_MAX_UNCOLORED };
    if m < 2 || m > limit {
        return Err(Error::ExactModeUnsupported(format!(
            "m = {m} outside 2..={limit} for {} builds",
            if colored { "two-color" } else { "single-color" }
        )));
    }
    let q = q.value;
    if (q * q - 1.0).norm() <= tol {
        return Err(Error::QSquaredOne);
    }
    if q_integer(m as u32, q, tol).norm() > tol {
        return Err(Error::ExactModeUnsupported(
            "exact mode needs q on the root-of-unity branch ([m]_q = 0)".into(),
        ));
    }
    Ok(())
}

fn symbolic_rep(m: usize, q: Scalar, sigma: LaurentPoly, g: LaurentPoly, tol: f64) -> Result<SeriesRep<LaurentPoly>> {
    let top = sigma.pow(2 * (m as i32 - 1), tol)?;
    let top_inv = top.inv_monomial(tol)?;
    let qq = q - q.inv();
    let b = (1..m)
        .map(|i| {
            let i_ = i as i32;
            let bracket = top.scale(powi(q, 1 - i_)).minus(&top_inv.scale(powi(q, i_ - 1)));
            bracket.scale(q_integer(i as u32, q, tol) / qq)
        })
        .collect();
    Ok(SeriesRep {
        m,
        sigma,
        g,
        a: vec![LaurentPoly::one(); m - 1],
        b,
    })
}

/// The series with symbolic colors `legs.0` (first factor) and `legs.1` (second factor).
pub fn build_r_exact(m: usize, q: &QValue, colors: &ExactColors, legs: (usize, usize), tol: f64) -> Result<ExactRMatrix> {
    let (l, r) = legs;
    if l == 0 || r == 0 || l > colors.count() || r > colors.count() {
        return Err(Error::InvalidInput(format!(
            "color slots {legs:?} outside 1..={}",
            colors.count()
        )));
    }
    check_exact_support(m, q, l != r, tol)?;
    let rep1 = symbolic_rep(m, q.value, colors.sigma(l), colors.g(l), tol)?;
    let rep2 = symbolic_rep(m, q.value, colors.sigma(r), colors.g(r), tol)?;
    let mut matrix = series_matrix(&rep1, &rep2, q.value, tol)?;
    matrix = matrix.map(|p| p.clone().pruned(crate::rings::PRUNE_TOL));
    Ok(ExactRMatrix {
        vars: colors.vars().clone(),
        matrix,
        m,
        q: q.value,
        legs,
    })
}
