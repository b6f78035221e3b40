//! Correctness checks: Yang-Baxter equation, intertwiner relations, Hopf axioms,
//! variants, and the m = 2 family identification.

mod algebra;
mod hlavaty;
mod ybe;

use serde::Serialize;

pub use algebra::{check_hopf_axioms, check_intertwiner, check_variant_intertwiners, check_variants};
pub use hlavaty::{hlavaty_identify, HlavatyFamily, HlavatyMap};
pub use ybe::{check_colored_ybe, check_colored_ybe_exact, check_ybe, ybe_sides};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckDetail {
    pub label: String,
    pub residual: f64,
}

impl CheckDetail {
    pub fn new(label: &str, residual: f64) -> Self {
        CheckDetail {
            label: label.to_string(),
            residual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Relative residual, or for exact checks the largest surviving coefficient.
    pub residual: f64,
    /// True when the residual comes from polynomial cancellation.
    pub exact: bool,
    pub passed: bool,
    pub tolerance: f64,
    pub details: Vec<CheckDetail>,
}

impl CheckReport {
    pub fn numeric(name: &str, residual: f64, tolerance: f64, details: Vec<CheckDetail>) -> Self {
        CheckReport {
            name: name.to_string(),
            residual,
            exact: false,
            passed: residual <= tolerance,
            tolerance,
            details,
        }
    }

    /// Residual is the worst detail.
    pub fn from_details(name: &str, tolerance: f64, details: Vec<CheckDetail>) -> Self {
        let residual = details.iter().map(|d| d.residual).fold(0.0, f64::max);
        Self::numeric(name, residual, tolerance, details)
    }
}
