//! R-matrix construction: truncated series, closed forms, variants, twist, exact mode.

mod closed;
mod exact;
mod series;
mod twist;
mod variants;

use serde::{Deserialize, Serialize};

pub use closed::{build_r_closed_m2, build_r_closed_m3};
pub use exact::{build_r_exact, ExactColors, ExactRMatrix, EXACT_MAX_COLORED, EXACT_MAX_UNCOLORED};
pub use series::{build_r_series, build_r_uncolored, has_borel_pattern, r0_diagonal, r0_raw_factors, R0Factors};
pub use twist::{twist_conjugate, twist_factor, twist_unitarity_residual, TwistResult};
pub use variants::{variant, Variant};

pub(crate) use series::{series_matrix, SeriesRep};

use crate::linalg::SquareMatrix;
use crate::representations::{BranchTag, Color, HighestWeightRep};
use crate::rings::Scalar;

pub(crate) const SERIES_NOTE: &str =
    "Dropped the scalar prefactor q^{-(mu1+m1-1)(mu2+m2-1)/2} t^{...} u^{...} common to all entries.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Series,
    ClosedM2,
    ClosedM3,
    Variant,
    Twist,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::ClosedM2 => "closed_m2",
            Method::ClosedM3 => "closed_m3",
            Method::Variant => "variant",
            Method::Twist => "twist",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RMatrixResult {
    pub matrix: SquareMatrix<Scalar>,
    pub method: Method,
    pub m1: usize,
    pub m2: usize,
    pub q: Scalar,
    pub branch: Option<BranchTag>,
    /// One entry for a single-color solution, two otherwise.
    pub colors: Vec<Color>,
    pub normalization_note: String,
    /// The representations the matrix was built from, when there were any.
    pub reps: Option<Box<(HighestWeightRep, HighestWeightRep)>>,
}

/// `r / r(1,1)`; `None` when the (1,1) entry vanishes.
pub fn ratio_normalized(r: &SquareMatrix<Scalar>) -> Option<SquareMatrix<Scalar>> {
    let pivot = r.get(1, 1);
    if pivot.norm() == 0.0 {
        return None;
    }
    Some(r.scale(pivot.inv()))
}
