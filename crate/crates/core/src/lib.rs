//! Colored Yang-Baxter solutions from highest-weight representations of the two-parameter
//! quantum algebra U_q gl(2) (parameters q, t, u), with independent verification.
//!
//! Layers, bottom up: [`rings`] (scalars, q-numbers, Laurent polynomials), [`linalg`]
//! (sparse square matrices on tensor spaces), [`representations`], [`rmatrix`], [`verify`].

pub mod error;
pub mod linalg;
pub mod representations;
pub mod rings;
pub mod rmatrix;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::SquareMatrix;
pub use representations::{BranchTag, Color, GaugeChoice, HighestWeightRep, RawParams};
pub use rings::{QValue, Scalar};
pub use rmatrix::{Method, RMatrixResult};
