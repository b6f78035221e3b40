//! Hopf maps on the generators, and their matrix images.
//!
//! With `K = q^{H/2} t^{-J/2}` and `U = u^{J/2}` (both group-like):
//!
//! ```text
//! Delta(H)   = H (x) 1 + 1 (x) H            Delta(J) = J (x) 1 + 1 (x) J
//! Delta(X~+) = K^-1 U (x) X~+ + X~+ (x) K U^-1
//! Delta(X~-) = K^-1 U^-1 (x) X~- + X~- (x) K U
//! S(H) = -H, S(J) = -J, S(X~+-) = -q^{H/2} X~+- q^{-H/2} = -q^{+-1} X~+-
//! eps(H) = eps(J) = eps(X~+-) = 0, eps(group-like) = 1
//! ```

use serde::{Deserialize, Serialize};

use super::{rep_matrices, HighestWeightRep};
use crate::error::{Error, Result};
use crate::linalg::{kron, SquareMatrix};
use crate::rings::{powi, real, Scalar, CONSTRUCTION_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    H,
    J,
    XPlus,
    XMinus,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::H, Generator::J, Generator::XPlus, Generator::XMinus];

    pub fn name(self) -> &'static str {
        match self {
            Generator::H => "H",
            Generator::J => "J",
            Generator::XPlus => "X+",
            Generator::XMinus => "X-",
        }
    }
}

/// Generators plus the group-like monomials `K^k U^u` that appear in their coproducts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Basic {
    Gen(Generator),
    GroupLike { k: i32, u: i32 },
}

pub(crate) const UNIT: Basic = Basic::GroupLike { k: 0, u: 0 };

pub(crate) fn coproduct_basic(x: Basic) -> Vec<(Scalar, Basic, Basic)> {
    let one = real(1.0);
    match x {
        Basic::Gen(g @ (Generator::H | Generator::J)) => vec![(one, Basic::Gen(g), UNIT), (one, UNIT, Basic::Gen(g))],
        Basic::Gen(Generator::XPlus) => vec![
            (one, Basic::GroupLike { k: -1, u: 1 }, Basic::Gen(Generator::XPlus)),
            (one, Basic::Gen(Generator::XPlus), Basic::GroupLike { k: 1, u: -1 }),
        ],
        Basic::Gen(Generator::XMinus) => vec![
            (one, Basic::GroupLike { k: -1, u: -1 }, Basic::Gen(Generator::XMinus)),
            (one, Basic::Gen(Generator::XMinus), Basic::GroupLike { k: 1, u: 1 }),
        ],
        gl @ Basic::GroupLike { .. } => vec![(one, gl, gl)],
    }
}

pub(crate) fn counit_basic(x: Basic) -> Scalar {
    match x {
        Basic::Gen(_) => real(0.0),
        Basic::GroupLike { .. } => real(1.0),
    }
}

pub(crate) fn antipode_basic(x: Basic, q: Scalar) -> (Scalar, Basic) {
    match x {
        Basic::Gen(g @ (Generator::H | Generator::J)) => (real(-1.0), Basic::Gen(g)),
        Basic::Gen(Generator::XPlus) => (-q, x),
        Basic::Gen(Generator::XMinus) => (-q.inv(), x),
        Basic::GroupLike { k, u } => (real(1.0), Basic::GroupLike { k: -k, u: -u }),
    }
}

pub(crate) fn image_basic(rep: &HighestWeightRep, x: Basic) -> SquareMatrix<Scalar> {
    match x {
        Basic::GroupLike { k, u } => {
            let gu = powi(rep.g(), u);
            SquareMatrix::from_diag(rep.half_cartan_diag().into_iter().map(|d| powi(d, k) * gu).collect())
        }
        Basic::Gen(g) => {
            let mats = rep_matrices(rep);
            match g {
                Generator::H => mats.h,
                Generator::J => mats.j,
                Generator::XPlus => mats.x_plus,
                Generator::XMinus => mats.x_minus,
            }
        }
    }
}

/// `eps(gen)`; zero for every generator.
pub fn counit(gen: Generator) -> Scalar {
    counit_basic(Basic::Gen(gen))
}

/// `(pi1 (x) pi2) Delta(gen)`, or with `opposite` the image of `Delta'(gen)`: the tensor
/// legs of each coproduct term are swapped, the spaces are not.
pub fn coproduct_image(
    rep1: &HighestWeightRep,
    rep2: &HighestWeightRep,
    gen: Generator,
    opposite: bool,
) -> Result<SquareMatrix<Scalar>> {
    if !rep1.same_q(rep2, CONSTRUCTION_TOL) {
        return Err(Error::QMismatch);
    }
    let mut out = SquareMatrix::zeros(rep1.m() * rep2.m());
    for (c, l, r) in coproduct_basic(Basic::Gen(gen)) {
        let (first, second) = if opposite { (r, l) } else { (l, r) };
        let term = kron(&image_basic(rep1, first), &image_basic(rep2, second)).scale(c);
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `pi(S(gen))`.
pub fn antipode_image(rep: &HighestWeightRep, gen: Generator) -> SquareMatrix<Scalar> {
    let (c, x) = antipode_basic(Basic::Gen(gen), rep.q().value);
    image_basic(rep, x).scale(c)
}
