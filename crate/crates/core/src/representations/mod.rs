//! m-dimensional highest-weight representations of multiparameter U_q gl(2).
//!
//! Representations are parameterized by `(q, sigma, g)` with `s = sigma^2` and
//! `gamma = g^2`, so no square-root branch is ever chosen internally. Under this
//! parameterization the group-like element `q^{H/2} t^{-J/2}` acts as
//! `diag(sigma^{m-1} q^{1-i})` and `u^{J/2}` acts as the scalar `g`. The `v` parameter
//! of the untilded generators is absorbed by working with the tilded `X~+-` only.

mod branch;
mod gauge;
mod hopf;

use serde::{Deserialize, Serialize};

pub use branch::{admissible_roots, classify_branch, generic_gap, AdmissibleRoot, BranchTag};
pub use gauge::{apply_gauge, GaugeChoice, GaugeMode};
pub use hopf::{antipode_image, coproduct_image, counit, Generator};
pub(crate) use hopf::{antipode_basic, coproduct_basic, counit_basic, image_basic, Basic};

use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;
use crate::rings::{approx_eq, checked_inv, powi, q_integer, real, QValue, Scalar};
use branch::check_q_squared;

/// The `(mu, lambda, t, u)` description of a representation, kept for provenance and
/// for the operations that need the unreduced weights (twist, raw R0 factors).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawParams {
    pub mu: Scalar,
    pub lambda: Scalar,
    pub t: Scalar,
    pub u: Scalar,
}

/// `(sigma, g)`: one color of a colored solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Color {
    pub sigma: Scalar,
    pub g: Scalar,
}

/// `a_i b_i = [i]_q (s^{m-1} q^{1-i} - s^{1-m} q^{i-1}) / (q - q^{-1})`, `i = 1..m-1`.
pub fn products_ab(m: usize, q: Scalar, sigma: Scalar, tol: f64) -> Result<Vec<Scalar>> {
    check_q_squared(q, tol)?;
    let s_pow = powi(sigma, 2 * (m as i32 - 1));
    Ok(products_from_s_power(m, q, s_pow, tol))
}

/// Same as [`products_ab`] with `s^{m-1}` supplied directly.
pub(crate) fn products_from_s_power(m: usize, q: Scalar, s_pow: Scalar, tol: f64) -> Vec<Scalar> {
    let qq = q - q.inv();
    (1..m)
        .map(|i| {
            let i32_ = i as i32;
            let bracket = s_pow * powi(q, 1 - i32_) - s_pow.inv() * powi(q, i32_ - 1);
            q_integer(i as u32, q, tol) * bracket / qq
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct HighestWeightRep {
    m: usize,
    q: QValue,
    sigma: Scalar,
    g: Scalar,
    a: Vec<Scalar>,
    b: Vec<Scalar>,
    branch: BranchTag,
    gauge: GaugeMode,
    raw: Option<RawParams>,
}

impl HighestWeightRep {
    pub fn new(m: usize, q: QValue, sigma: Scalar, g: Scalar, gauge: &GaugeChoice, tol: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidInput(format!("dimension m must be >= 2, got {m}")));
        }
        checked_inv(sigma, tol)?;
        checked_inv(g, tol)?;
        let branch = classify_branch(m, &q, sigma, tol)?;
        let products = products_ab(m, q.value, sigma, tol)?;
        let (a, b) = apply_gauge(&products, gauge, tol)?;
        Ok(HighestWeightRep {
            m,
            q,
            sigma,
            g,
            a,
            b,
            branch,
            gauge: gauge.mode(),
            raw: None,
        })
    }

    /// Principal-branch conversion: `sigma^{m-1} = q^{(mu+m-1)/2} t^{-lambda/2}` (the
    /// eigenvalue of `q^{H/2} t^{-J/2}` on the highest weight vector) and
    /// `g = u^{lambda/2}`, with every power taken as `exp(x ln(.))`.
    pub fn from_raw(m: usize, q: QValue, raw: RawParams, gauge: &GaugeChoice, tol: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidInput(format!("dimension m must be >= 2, got {m}")));
        }
        let ln_q = q.value.ln();
        let half_top = ((raw.mu + (m as f64 - 1.0)) * ln_q - raw.lambda * raw.t.ln()) * 0.5;
        let sigma = (half_top / (m as f64 - 1.0)).exp();
        let g = (raw.lambda * raw.u.ln() * 0.5).exp();
        let mut rep = Self::new(m, q, sigma, g, gauge, tol)?;
        rep.raw = Some(raw);
        Ok(rep)
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn q(&self) -> &QValue {
        &self.q
    }
    pub fn sigma(&self) -> Scalar {
        self.sigma
    }
    pub fn g(&self) -> Scalar {
        self.g
    }
    /// `s = sigma^2`.
    pub fn s(&self) -> Scalar {
        self.sigma * self.sigma
    }
    /// `gamma = g^2`.
    pub fn gamma(&self) -> Scalar {
        self.g * self.g
    }
    pub fn color(&self) -> Color {
        Color {
            sigma: self.sigma,
            g: self.g,
        }
    }
    pub fn a(&self) -> &[Scalar] {
        &self.a
    }
    pub fn b(&self) -> &[Scalar] {
        &self.b
    }
    pub fn products(&self) -> Vec<Scalar> {
        self.a.iter().zip(&self.b).map(|(x, y)| x * y).collect()
    }
    pub fn branch(&self) -> BranchTag {
        self.branch
    }
    pub fn gauge(&self) -> GaugeMode {
        self.gauge
    }
    pub fn raw(&self) -> Option<&RawParams> {
        self.raw.as_ref()
    }

    /// Highest-weight label mu; 0 when no raw parameters were given.
    pub fn mu(&self) -> Scalar {
        self.raw.map_or(real(0.0), |r| r.mu)
    }

    /// Eigenvalue of the central J; nominally 1 without raw parameters.
    pub fn lambda(&self) -> Scalar {
        self.raw.map_or(real(1.0), |r| r.lambda)
    }

    /// Diagonal entries of the image of `q^{H/2} t^{-J/2}`: `sigma^{m-1} q^{1-i}`.
    pub fn half_cartan_diag(&self) -> Vec<Scalar> {
        let top = powi(self.sigma, self.m as i32 - 1);
        (1..=self.m).map(|i| top * powi(self.q.value, 1 - i as i32)).collect()
    }

    /// `H` eigenvalues `mu + m - 2i + 1`.
    pub fn weights(&self) -> Vec<Scalar> {
        let mu = self.mu();
        (1..=self.m).map(|i| mu + (self.m as f64 - 2.0 * i as f64 + 1.0)).collect()
    }

    pub fn same_q(&self, other: &Self, tol: f64) -> bool {
        approx_eq(self.q.value, other.q.value, tol)
    }
}

/// Matrix images of the generators, in the reduced form used downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrices {
    pub x_plus: SquareMatrix<Scalar>,
    pub x_minus: SquareMatrix<Scalar>,
    pub h: SquareMatrix<Scalar>,
    pub j: SquareMatrix<Scalar>,
    /// Image of `q^{H/2} t^{-J/2}`.
    pub half_cartan: SquareMatrix<Scalar>,
    /// Scalar image of `u^{J/2}`.
    pub u_half: Scalar,
}

pub fn rep_matrices(rep: &HighestWeightRep) -> RepMatrices {
    let m = rep.m;
    let mut x_plus = SquareMatrix::zeros(m);
    let mut x_minus = SquareMatrix::zeros(m);
    for i in 1..m {
        x_plus.set(i, i + 1, rep.a[i - 1]);
        x_minus.set(i + 1, i, rep.b[i - 1]);
    }
    RepMatrices {
        x_plus,
        x_minus,
        h: SquareMatrix::from_diag(rep.weights()),
        j: SquareMatrix::identity(m).scale(rep.lambda()),
        half_cartan: SquareMatrix::from_diag(rep.half_cartan_diag()),
        u_half: rep.g,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::residual_norm;
    use crate::rings::{c, root_of_unity};

    const TOL: f64 = 1e-12;

    #[test]
    fn product_examples() {
        // m = 2: ab = (s - 1/s)/(q - 1/q)
        let q = c(1.3, 0.4);
        let sigma = c(0.9, -0.2);
        let s = sigma * sigma;
        let p = products_ab(2, q, sigma, TOL).unwrap();
        assert!(approx_eq(p[0], (s - s.inv()) / (q - q.inv()), TOL));

        // q^2 = -1: ab = (q / 2s)(1 - s^2)
        let i = c(0.0, 1.0);
        let p = products_ab(2, i, sigma, TOL).unwrap();
        assert!(approx_eq(p[0], i / (s * 2.0) * (1.0 - s * s), TOL));

        // s = q = 2 gives ab = 1
        let p = products_ab(2, real(2.0), real(2f64.sqrt()), TOL).unwrap();
        assert!(approx_eq(p[0], real(1.0), TOL));

        assert_eq!(products_ab(2, real(-1.0), real(1.0), TOL), Err(Error::QSquaredOne));
    }

    #[test]
    fn rep_matrix_shapes() {
        let q = QValue::generic(real(2.0));
        let rep = HighestWeightRep::new(2, q, real(2f64.sqrt()), real(3.0), &GaugeChoice::Balanced, TOL).unwrap();
        let mats = rep_matrices(&rep);
        assert_eq!(mats.x_plus.nnz(), 1);
        assert_eq!(mats.x_plus.get(1, 2), rep.a()[0]);
        assert_eq!(mats.x_minus.nnz(), 1);
        assert_eq!(mats.x_minus.get(2, 1), rep.b()[0]);

        let w = root_of_unity(1, 6);
        let rep = HighestWeightRep::new(3, w, c(1.1, 0.3), real(1.5), &GaugeChoice::UnitA, TOL).unwrap();
        let mats = rep_matrices(&rep);
        assert_eq!(mats.x_plus.get(1, 2), real(1.0));
        assert_eq!(mats.x_plus.get(2, 3), real(1.0));
        assert_eq!(mats.x_plus.nnz(), 2);
        assert_eq!(rep.branch(), BranchTag::RootOfUnity);
    }

    #[test]
    fn commutator_matches_cartan_images() {
        // [X+, X-] = (K^2 - K^-2)/(q - q^-1) with K the half-Cartan image
        for (m, q, sigma) in [
            (2, QValue::generic(real(2.0)), real(2f64.sqrt())),
            (3, root_of_unity(1, 6), c(0.8, 0.5)),
            (4, root_of_unity(3, 8), c(1.2, -0.3)),
        ] {
            let rep = HighestWeightRep::new(m, q, sigma, real(1.3), &GaugeChoice::Balanced, TOL).unwrap();
            let mats = rep_matrices(&rep);
            let lhs = mats
                .x_plus
                .mul(&mats.x_minus)
                .unwrap()
                .sub(&mats.x_minus.mul(&mats.x_plus).unwrap())
                .unwrap();
            let qq = q.value - q.value.inv();
            let rhs = SquareMatrix::from_diag(
                rep.half_cartan_diag()
                    .iter()
                    .map(|k| (k * k - (k * k).inv()) / qq)
                    .collect(),
            );
            assert!(residual_norm(&lhs, &rhs).unwrap() <= 1e-12, "m = {m}");
        }
    }

    #[test]
    fn raw_conversion_reproduces_products() {
        let q = QValue::generic(c(1.4, 0.2));
        let raw = RawParams {
            mu: real(0.0),
            lambda: real(0.0),
            t: real(3.0),
            u: real(4.0),
        };
        // mu = lambda = 0 gives K = 1, so s = q (type a)
        let rep = HighestWeightRep::from_raw(2, q, raw, &GaugeChoice::UnitA, TOL).unwrap();
        assert!(approx_eq(rep.s(), q.value, TOL));
        assert_eq!(rep.branch(), BranchTag::Generic);

        let raw = RawParams {
            mu: c(0.3, 0.1),
            lambda: real(0.5),
            t: real(2.0),
            u: real(4.0),
        };
        let qi = root_of_unity(1, 4);
        let rep = HighestWeightRep::from_raw(2, qi, raw, &GaugeChoice::UnitA, TOL).unwrap();
        assert!(approx_eq(rep.gamma(), real(2.0), TOL));
        // sigma^{m-1} equals the highest-weight eigenvalue of q^{H/2} t^{-J/2}
        let ln_q = qi.value.ln();
        let expected = (((raw.mu + 1.0) * ln_q - raw.lambda * raw.t.ln()) * 0.5).exp();
        assert!(approx_eq(rep.half_cartan_diag()[0], expected, TOL));
        assert_eq!(rep.weights(), vec![raw.mu + 1.0, raw.mu - 1.0]);
    }

    #[test]
    fn invalid_construction() {
        let q = QValue::generic(real(2.0));
        assert!(matches!(
            HighestWeightRep::new(1, q, real(1.0), real(1.0), &GaugeChoice::UnitA, TOL),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            HighestWeightRep::new(2, q, real(0.0), real(1.0), &GaugeChoice::UnitA, TOL),
            Err(Error::DivisionByZero { .. })
        ));
        assert!(matches!(
            HighestWeightRep::new(2, q, real(1.7), real(1.0), &GaugeChoice::UnitA, TOL),
            Err(Error::NeitherBranch { .. })
        ));
    }
}
