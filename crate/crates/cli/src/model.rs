//! From parsed flags or an imported artifact to representations and R-matrices.

use uqgl2::representations::{products_ab, GaugeChoice, GaugeMode};
use uqgl2::rings::{checked_div, q_integer};
use uqgl2::rmatrix::{build_r_closed_m2, build_r_closed_m3, build_r_series};
use uqgl2::{BranchTag, Color, HighestWeightRep, QValue, RMatrixResult, Scalar};

use crate::failure::{Failure, Outcome};

/// Gauge as given on the command line or in a file. With several colors only `a` may be
/// given explicitly; each color then gets `b_i = a_i b_i / a_i` from its own products.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeSpec {
    pub mode: GaugeMode,
    pub a: Option<Vec<Scalar>>,
    pub b: Option<Vec<Scalar>>,
}

impl GaugeSpec {
    pub fn simple(mode: GaugeMode) -> Self {
        GaugeSpec { mode, a: None, b: None }
    }

    fn choice(&self, m: usize, q: Scalar, sigma: Scalar, colors: usize, tol: f64) -> Outcome<GaugeChoice> {
        match self.mode {
            GaugeMode::UnitA => Ok(GaugeChoice::UnitA),
            GaugeMode::Balanced => Ok(GaugeChoice::Balanced),
            GaugeMode::Explicit => {
                if colors > 1 && self.b.is_some() {
                    return Err(Failure::input(
                        "with several colors an explicit gauge takes `--a` only; each b follows from its products",
                    ));
                }
                for seq in [&self.a, &self.b].into_iter().flatten() {
                    if seq.len() != m - 1 {
                        return Err(Failure::input(format!(
                            "explicit gauge needs {} values per sequence, got {}",
                            m - 1,
                            seq.len()
                        )));
                    }
                }
                let products = products_ab(m, q, sigma, tol)?;
                let divide = |p: &[Scalar], d: &[Scalar]| -> Outcome<Vec<Scalar>> {
                    p.iter()
                        .zip(d)
                        .map(|(x, y)| checked_div(*x, *y, tol).map_err(Failure::from))
                        .collect()
                };
                let (a, b) = match (&self.a, &self.b) {
                    (Some(a), Some(b)) => (a.clone(), b.clone()),
                    (Some(a), None) => (a.clone(), divide(&products, a)?),
                    (None, Some(b)) => (divide(&products, b)?, b.clone()),
                    (None, None) => return Err(Failure::input("explicit gauge needs `--a` or `--b` values")),
                };
                Ok(GaugeChoice::Explicit { a, b })
            }
        }
    }
}

/// One representation per color, all of dimension `m` over the same `q`.
pub fn build_reps(
    m: usize,
    q: &QValue,
    colors: &[Color],
    gauge: &GaugeSpec,
    tol: f64,
) -> Outcome<Vec<HighestWeightRep>> {
    if m < 2 {
        return Err(Failure::input(format!("dimension m must be >= 2, got {m}")));
    }
    colors
        .iter()
        .map(|col| {
            let choice = gauge.choice(m, q.value, col.sigma, colors.len(), tol)?;
            Ok(HighestWeightRep::new(m, *q, col.sigma, col.g, &choice, tol)?)
        })
        .collect()
}

/// `sigma = sqrt(q)` (so `s = q`, on the generic branch for every m) and `g = 1`.
pub fn default_color(q: &QValue) -> Color {
    Color {
        sigma: q.value.sqrt(),
        g: Scalar::new(1.0, 0.0),
    }
}

/// The gauge factors that enter `R(rep1, rep2)`: `a` from the second factor, `b` from the first.
pub fn gauge_factors(reps: &[HighestWeightRep]) -> (Vec<Scalar>, Vec<Scalar>) {
    let first = &reps[0];
    let second = reps.get(1).unwrap_or(first);
    (second.a().to_vec(), first.b().to_vec())
}

/// Checks an explicit branch request against `q` and the colors.
pub fn resolve_branch(
    requested: Option<BranchTag>,
    q: &QValue,
    q_is_root: bool,
    reps: &[HighestWeightRep],
    tol: f64,
) -> Outcome<BranchTag> {
    let m = reps[0].m();
    match requested {
        None => Ok(reps[0].branch()),
        Some(BranchTag::RootOfUnity) => {
            if !q_is_root {
                return Err(Failure::input("the root-of-unity branch needs q given as `root k/n`"));
            }
            let gap = q_integer(m as u32, q.value, tol).norm();
            if gap > tol {
                return Err(uqgl2::Error::BranchMismatch(format!("[{m}]_q = {gap:e} is not zero")).into());
            }
            Ok(BranchTag::RootOfUnity)
        }
        Some(BranchTag::Generic) => {
            for rep in reps {
                let gap = uqgl2::representations::generic_gap(m, q.value, rep.sigma());
                if gap > tol {
                    return Err(uqgl2::Error::BranchMismatch(format!(
                        "|(s/q)^(2(m-1)) - 1| = {gap:e} for sigma = {}",
                        rep.sigma()
                    ))
                    .into());
                }
            }
            Ok(BranchTag::Generic)
        }
    }
}

/// `R(rep1, rep2)` from the series, or `R(rep1, rep1)` for a single color.
pub fn series_for(reps: &[HighestWeightRep], tol: f64) -> Outcome<RMatrixResult> {
    let first = &reps[0];
    let second = reps.get(1).unwrap_or(first);
    Ok(build_r_series(first, second, tol)?)
}

/// Single-color closed forms, available for m = 2 and m = 3.
pub fn closed_for(reps: &[HighestWeightRep], branch: BranchTag, tol: f64) -> Outcome<RMatrixResult> {
    if reps.len() != 1 {
        return Err(Failure::input("closed forms are single-color; give at most one `--color`"));
    }
    let rep = &reps[0];
    let q = rep.q().value;
    match rep.m() {
        2 => Ok(build_r_closed_m2(q, rep.s(), rep.gamma(), branch, tol)?),
        3 => {
            let (a, b) = (rep.a(), rep.b());
            Ok(build_r_closed_m3(q, rep.s(), rep.gamma(), a[0] * b[1], a[1] * b[0], tol)?)
        }
        m => Err(Failure::input(format!("closed forms exist for m = 2 and m = 3, not m = {m}"))),
    }
}
