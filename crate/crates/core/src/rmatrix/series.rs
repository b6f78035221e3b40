//! Truncated-series construction of `(pi1 (x) pi2) R`.
//!
//! ```text
//! R = sum_{n=0}^{min(m1,m2)-1} (1-q^2)^n / {n}_{q^2}! * q^n * sigma^{n(m1-1)} sigma'^{n(m2-1)} (g/g')^n
//!     * sum_{i,j} q^{-2(i-1)(j-1) - n(i+j)} (s'^{m2-1}/gamma')^i (s^{m1-1} gamma)^j
//!       * (a'_j b_i) ... (a'_{j+n-1} b_{i+n-1}) e_{i+n,i} (x) e_{j,j+n}
//! ```
//!
//! The scalar prefactor depending on the raw weights is dropped; the series stops at
//! `n = min(m1, m2) - 1` because `pi(X~+-)^m = 0`.

use super::{Method, RMatrixResult};
use crate::error::{Error, Result};
use crate::linalg::{tensor_index, SquareMatrix};
use crate::representations::HighestWeightRep;
use crate::rings::{approx_eq, powi, q_brace_factorial, Coeff, Scalar};

/// The data the series needs from one representation, over any coefficient ring.
#[derive(Debug, Clone)]
pub(crate) struct SeriesRep<T> {
    pub m: usize,
    pub sigma: T,
    pub g: T,
    pub a: Vec<T>,
    pub b: Vec<T>,
}

impl SeriesRep<Scalar> {
    pub fn from_rep(rep: &HighestWeightRep) -> Self {
        SeriesRep {
            m: rep.m(),
            sigma: rep.sigma(),
            g: rep.g(),
            a: rep.a().to_vec(),
            b: rep.b().to_vec(),
        }
    }
}

/// `(1 - q^2)^n q^n / {n}_{q^2}!`, or an error where `{n}_{q^2}!` vanishes.
pub(crate) fn series_coefficient(n: usize, q: Scalar, tol: f64) -> Result<Scalar> {
    let brace = q_brace_factorial(n as u32, q);
    if brace.norm() <= tol {
        return Err(Error::SingularSeriesCoefficient { n });
    }
    Ok(powi(1.0 - q * q, n as i32) * powi(q, n as i32) / brace)
}

pub(crate) fn series_matrix<T: Coeff>(
    r1: &SeriesRep<T>,
    r2: &SeriesRep<T>,
    q: Scalar,
    tol: f64,
) -> Result<SquareMatrix<T>> {
    let (m1, m2) = (r1.m, r2.m);
    let top1 = r1.sigma.powi(m1 as i32 - 1, tol)?;
    let top2 = r2.sigma.powi(m2 as i32 - 1, tol)?;
    // s'^{m2-1}/gamma' and s^{m1-1} gamma
    let left = top2.times(&top2).times(&r2.g.powi(-2, tol)?);
    let right = top1.times(&top1).times(&r1.g.times(&r1.g));
    let left_pows: Vec<T> = (0..=m1).map(|i| left.powi(i as i32, tol)).collect::<Result<_>>()?;
    let right_pows: Vec<T> = (0..=m2).map(|j| right.powi(j as i32, tol)).collect::<Result<_>>()?;
    let g_ratio = r1.g.times(&r2.g.powi(-1, tol)?);
    let color_step = top1.times(&top2).times(&g_ratio);

    let mut out = SquareMatrix::zeros(m1 * m2);
    let mut color_n = T::one();
    for n in 0..m1.min(m2) {
        let coeff = series_coefficient(n, q, tol)?;
        for i in 1..=m1 - n {
            for j in 1..=m2 - n {
                let qpow = -2 * (i as i32 - 1) * (j as i32 - 1) - (n * (i + j)) as i32;
                let mut v = color_n.times(&left_pows[i]).times(&right_pows[j]);
                for k in 0..n {
                    v = v.times(&r2.a[j + k - 1]).times(&r1.b[i + k - 1]);
                }
                let v = v.scaled(coeff * powi(q, qpow));
                out.set(tensor_index(i + n, j, m2), tensor_index(i, j + n, m2), v);
            }
        }
        color_n = color_n.times(&color_step);
    }
    Ok(out)
}

fn check_pair(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<()> {
    if !rep1.same_q(rep2, tol) {
        return Err(Error::QMismatch);
    }
    for rep in [rep1, rep2] {
        // re-validate: the branch recorded at construction must still hold
        let branch = crate::representations::classify_branch(rep.m(), rep.q(), rep.sigma(), tol)?;
        if branch != rep.branch() {
            return Err(Error::BranchMismatch(format!(
                "representation labeled {} classifies as {}",
                rep.branch().as_str(),
                branch.as_str()
            )));
        }
    }
    Ok(())
}

/// The colored solution `R(rep1; rep2)`; `rep2` supplies `a'`, `rep1` supplies `b`.
pub fn build_r_series(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<RMatrixResult> {
    check_pair(rep1, rep2, tol)?;
    let q = rep1.q().value;
    let matrix = series_matrix(&SeriesRep::from_rep(rep1), &SeriesRep::from_rep(rep2), q, tol)?;
    let same_color = rep1.color() == rep2.color();
    Ok(RMatrixResult {
        matrix,
        method: Method::Series,
        m1: rep1.m(),
        m2: rep2.m(),
        q,
        branch: Some(rep1.branch()),
        colors: if same_color {
            vec![rep1.color()]
        } else {
            vec![rep1.color(), rep2.color()]
        },
        normalization_note: super::SERIES_NOTE.to_string(),
        reps: Some(Box::new((rep1.clone(), rep2.clone()))),
    })
}

/// The single-color formula, written in `s` and `gamma` only:
///
/// `sum_n (1-q^2)^n/{n}! q^n sum_{i,j} q^{-2(i-1)(j-1)-n(i+j)} s^{(m-1)(i+j+n)}
/// gamma^{-(i-j)} (a_j b_i)...(a_{j+n-1} b_{i+n-1}) e_{i+n,i} (x) e_{j,j+n}`.
pub fn build_r_uncolored(rep: &HighestWeightRep, tol: f64) -> Result<RMatrixResult> {
    let m = rep.m();
    let q = rep.q().value;
    let s_pow = powi(rep.s(), m as i32 - 1);
    let gamma = rep.gamma();
    let (a, b) = (rep.a(), rep.b());
    let mut matrix = SquareMatrix::zeros(m * m);
    for n in 0..m {
        let coeff = series_coefficient(n, q, tol)?;
        for i in 1..=m - n {
            for j in 1..=m - n {
                let qpow = -2 * (i as i32 - 1) * (j as i32 - 1) - (n * (i + j)) as i32;
                let mut v = coeff * powi(q, qpow) * powi(s_pow, (i + j + n) as i32) * powi(gamma, j as i32 - i as i32);
                for k in 0..n {
                    v *= a[j + k - 1] * b[i + k - 1];
                }
                matrix.set(tensor_index(i + n, j, m), tensor_index(i, j + n, m), v);
            }
        }
    }
    Ok(RMatrixResult {
        matrix,
        method: Method::Series,
        m1: m,
        m2: m,
        q,
        branch: Some(rep.branch()),
        colors: vec![rep.color()],
        normalization_note: super::SERIES_NOTE.to_string(),
        reps: Some(Box::new((rep.clone(), rep.clone()))),
    })
}

/// Image of `R0 = q^{-H(x)H/2} t^{(H(x)J+J(x)H)/2} u^{(H(x)J-J(x)H)/2}` after dropping the
/// same prefactor as the series: entry `(i,j)` equals
/// `q^{-2(i-1)(j-1)} (s'^{m2-1}/gamma')^i (s^{m1-1} gamma)^j`.
///
/// Built from the reduced H weights `h_i = m - 2i + 1` and the half-Cartan eigenvalues,
/// independently of the index formula used by the series.
pub fn r0_diagonal(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<SquareMatrix<Scalar>> {
    if !rep1.same_q(rep2, tol) {
        return Err(Error::QMismatch);
    }
    let (m1, m2) = (rep1.m(), rep2.m());
    let q = rep1.q().value;
    let qh = q.sqrt();
    let h = |m: usize, i: usize| m as i32 - 2 * i as i32 + 1;
    // K^{1/2} = sigma^{m-1} q^{-(m-1)/2}: the central part of q^{H/2} t^{-J/2}
    let k1 = powi(rep1.sigma(), m1 as i32 - 1) * powi(qh, -(m1 as i32 - 1));
    let k2 = powi(rep2.sigma(), m2 as i32 - 1) * powi(qh, -(m2 as i32 - 1));
    let (g1, g2) = (rep1.g(), rep2.g());
    let weight_entry = |i: usize, j: usize| {
        let (hi, hj) = (h(m1, i), h(m2, j));
        powi(qh, -hi * hj) * powi(k2, -hi) * powi(g2, hi) * powi(k1, -hj) * powi(g1, -hj)
    };
    let target_11 = powi(rep2.s(), m2 as i32 - 1) / rep2.gamma() * powi(rep1.s(), m1 as i32 - 1) * rep1.gamma();
    let norm = target_11 / weight_entry(1, 1);
    let mut diag = Vec::with_capacity(m1 * m2);
    for i in 1..=m1 {
        for j in 1..=m2 {
            diag.push(weight_entry(i, j) * norm);
        }
    }
    Ok(SquareMatrix::from_diag(diag))
}

/// The three factors of the full `R0` image, from the raw weights.
#[derive(Debug, Clone, PartialEq)]
pub struct R0Factors {
    pub q_part: SquareMatrix<Scalar>,
    /// Symmetric under exchange of the legs.
    pub t_part: SquareMatrix<Scalar>,
    /// Antisymmetric exponent: exchanging the legs inverts it.
    pub u_part: SquareMatrix<Scalar>,
}

impl R0Factors {
    pub fn product(&self) -> SquareMatrix<Scalar> {
        self.q_part
            .mul(&self.t_part)
            .and_then(|m| m.mul(&self.u_part))
            .expect("equal dimensions")
    }
}

pub fn r0_raw_factors(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<R0Factors> {
    let (raw1, raw2) = match (rep1.raw(), rep2.raw()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::MissingRawParameters),
    };
    if !rep1.same_q(rep2, tol) {
        return Err(Error::QMismatch);
    }
    if !approx_eq(raw1.t, raw2.t, tol) || !approx_eq(raw1.u, raw2.u, tol) {
        return Err(Error::InvalidInput("representations must share t and u".into()));
    }
    let (ln_q, ln_t, ln_u) = (rep1.q().value.ln(), raw1.t.ln(), raw1.u.ln());
    let (w1, w2) = (rep1.weights(), rep2.weights());
    let (l1, l2) = (raw1.lambda, raw2.lambda);
    let mut qd = Vec::new();
    let mut td = Vec::new();
    let mut ud = Vec::new();
    for hi in &w1 {
        for hj in &w2 {
            qd.push((-0.5 * hi * hj * ln_q).exp());
            td.push((0.5 * (hi * l2 + l1 * hj) * ln_t).exp());
            ud.push((0.5 * (hi * l2 - l1 * hj) * ln_u).exp());
        }
    }
    Ok(R0Factors {
        q_part: SquareMatrix::from_diag(qd),
        t_part: SquareMatrix::from_diag(td),
        u_part: SquareMatrix::from_diag(ud),
    })
}

/// True when every nonzero entry sits at an `e_{i+n,i} (x) e_{j,j+n}` position.
pub fn has_borel_pattern<T: Coeff>(r: &SquareMatrix<T>, m1: usize, m2: usize) -> bool {
    r.entries().all(|(row, col, _)| {
        let (i1, j1) = ((row - 1) / m2 + 1, (row - 1) % m2 + 1);
        let (i2, j2) = ((col - 1) / m2 + 1, (col - 1) % m2 + 1);
        i1 <= m1 && i2 <= m1 && i1 >= i2 && j1 <= j2 && i1 - i2 == j2 - j1
    })
}
