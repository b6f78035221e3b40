//! Coefficient rings: complex scalars, q-numbers, roots of unity, Laurent polynomials.

mod coeff;
mod laurent;
mod qnum;
mod scalar;

pub use coeff::Coeff;
pub use laurent::{LaurentPoly, VarSet, PRUNE_TOL};
pub use qnum::{q_brace, q_brace_factorial, q_factorial, q_integer, root_of_unity, QValue};
pub use scalar::{
    approx_eq, c, checked_div, checked_inv, checked_powi, is_negligible, real, Scalar, CONSTRUCTION_TOL,
    RESIDUAL_TOL,
};
pub(crate) use scalar::powi;
