//! Matching m = 2 colored solutions against Hlavaty's two-parameter families.
//!
//! After dividing by the (1,1) entry, the colored m = 2 solution reads
//!
//! ```text
//! diag(1, s gamma, s'/gamma', q^-2 s s' gamma/gamma'),  (3,2) = (1 - q^2) q^-1 sigma sigma' (g/g') a' b
//! ```
//!
//! Family R1 (generic branch) has the shape `diag(1, p+(l), k/p+(m), p+(l)/p+(m))` with
//! off-diagonal `(1-k) xi(l)/xi(m)`. Family R2 (`q^2 = -1`) has the shape
//! `diag(1, p+(l), p-(m), -p+(l) p-(m))` with off-diagonal
//! `W(l,m) = (1 - p+(l) p-(l)) xi(l)/xi(m)`. The overall factor `phi(l,m)` is never matched.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{residual_norm, SquareMatrix};
use crate::representations::{BranchTag, GaugeChoice, HighestWeightRep};
use crate::rings::{QValue, Scalar};
use crate::rmatrix::{ratio_normalized, RMatrixResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HlavatyFamily {
    R1,
    R2,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HlavatyMap {
    pub family: HlavatyFamily,
    pub p_plus_lambda: Scalar,
    pub p_plus_mu: Scalar,
    pub p_minus_lambda: Scalar,
    pub p_minus_mu: Scalar,
    /// `q^2`; only enters the R1 shape.
    pub k: Scalar,
    pub xi_ratio: Scalar,
    /// The off-diagonal entry predicted by the family.
    pub off_diagonal: Scalar,
    pub overall_factor_note: String,
    /// `residual_norm` between the normalized matrix and the family's matrix.
    pub reproduction_residual: f64,
}

impl HlavatyMap {
    /// The family's matrix at these parameters, with `phi = 1`.
    pub fn family_matrix(&self) -> SquareMatrix<Scalar> {
        let one = Scalar::new(1.0, 0.0);
        let (d3, d4) = match self.family {
            HlavatyFamily::R1 => (self.k / self.p_plus_mu, self.p_plus_lambda / self.p_plus_mu),
            HlavatyFamily::R2 => (self.p_minus_mu, -self.p_plus_lambda * self.p_minus_mu),
        };
        SquareMatrix::from_entries(
            4,
            [
                (1, 1, one),
                (2, 2, self.p_plus_lambda),
                (3, 2, self.off_diagonal),
                (3, 3, d3),
                (4, 4, d4),
            ],
        )
        .expect("indices in range")
    }
}

fn reps_of(result: &RMatrixResult, tol: f64) -> Result<(HighestWeightRep, HighestWeightRep)> {
    if let Some(pair) = &result.reps {
        return Ok((pair.0.clone(), pair.1.clone()));
    }
    // closed forms carry colors only; rebuild unit-a representations from them
    let q = QValue::generic(result.q);
    let build = |k: usize| {
        let c = result.colors[k.min(result.colors.len() - 1)];
        HighestWeightRep::new(2, q, c.sigma, c.g, &GaugeChoice::UnitA, tol)
    };
    Ok((build(0)?, build(1)?))
}

pub fn hlavaty_identify(result: &RMatrixResult, tol: f64) -> Result<HlavatyMap> {
    if result.m1 != 2 || result.m2 != 2 {
        return Err(Error::NotM2(if result.m1 != 2 { result.m1 } else { result.m2 }));
    }
    let normalized = ratio_normalized(&result.matrix)
        .ok_or_else(|| Error::InvalidInput("R has a vanishing (1,1) entry".into()))?;
    let (rep1, rep2) = reps_of(result, tol)?;
    let branch = result.branch.unwrap_or(rep1.branch());
    let q = result.q;
    let (s, s2) = (rep1.s(), rep2.s());
    let (gamma, gamma2) = (rep1.gamma(), rep2.gamma());
    let (sigma, sigma2) = (rep1.sigma(), rep2.sigma());
    let (g, g2) = (rep1.g(), rep2.g());
    let (a, a2, b) = (rep1.a()[0], rep2.a()[0], rep1.b()[0]);

    let p_plus_lambda = s * gamma;
    let p_plus_mu = s2 * gamma2;
    let p_minus_lambda = s / gamma;
    let p_minus_mu = s2 / gamma2;
    let k = q * q;
    let (family, xi_ratio, off_diagonal) = match branch {
        BranchTag::Generic => {
            let xi = sigma * sigma2 * (g / g2) * a2 * b / q;
            (HlavatyFamily::R1, xi, (1.0 - k) * xi)
        }
        BranchTag::RootOfUnity => {
            let xi = (g / sigma / a) / (g2 / sigma2 / a2);
            (HlavatyFamily::R2, xi, (1.0 - p_plus_lambda * p_minus_lambda) * xi)
        }
    };
    let mut map = HlavatyMap {
        family,
        p_plus_lambda,
        p_plus_mu,
        p_minus_lambda,
        p_minus_mu,
        k,
        xi_ratio,
        off_diagonal,
        overall_factor_note: "phi(lambda, mu) is a free overall normalization; compared after dividing by the (1,1) entry."
            .into(),
        reproduction_residual: 0.0,
    };
    map.reproduction_residual = residual_norm(&normalized, &map.family_matrix())?;
    Ok(map)
}
