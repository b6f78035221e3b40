use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{flip_matrix, inverse, SquareMatrix};
use crate::rings::Scalar;

/// The three other quasitriangular structures obtained from a given R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `P R^-1 P`
    Bar,
    /// `P R P`
    Plus,
    /// `R^-1`
    Minus,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Bar, Variant::Plus, Variant::Minus];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Bar => "bar",
            Variant::Plus => "plus",
            Variant::Minus => "minus",
        }
    }
}

pub fn variant(r: &SquareMatrix<Scalar>, which: Variant, m1: usize, m2: usize, tol: f64) -> Result<SquareMatrix<Scalar>> {
    if r.dim() != m1 * m2 {
        return Err(Error::DimensionMismatch {
            expected: m1 * m2,
            found: r.dim(),
        });
    }
    let flip = || -> Result<SquareMatrix<Scalar>> {
        if m1 != m2 {
            return Err(Error::UnequalDims(m1, m2));
        }
        Ok(flip_matrix(m1))
    };
    match which {
        Variant::Minus => inverse(r, tol),
        Variant::Plus => {
            let p = flip()?;
            p.mul(r)?.mul(&p)
        }
        Variant::Bar => {
            let p = flip()?;
            p.mul(&inverse(r, tol)?)?.mul(&p)
        }
    }
}
