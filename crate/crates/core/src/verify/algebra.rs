//! Intertwiner relations and Hopf axioms on representation images.

use super::{ybe::check_ybe, CheckDetail, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::{flip_matrix, inverse, kron, residual_norm, SquareMatrix};
use crate::representations::{
    antipode_basic, coproduct_basic, coproduct_image, counit_basic, image_basic, Basic, Generator, HighestWeightRep,
};
use crate::rings::{Scalar, CONSTRUCTION_TOL};
use crate::rmatrix::{build_r_series, variant, Variant};

fn intertwiner_residuals(
    r: &SquareMatrix<Scalar>,
    rep1: &HighestWeightRep,
    rep2: &HighestWeightRep,
    left_opposite: bool,
    label: &str,
) -> Result<Vec<CheckDetail>> {
    let dim = rep1.m() * rep2.m();
    if r.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: r.dim(),
        });
    }
    Generator::ALL
        .iter()
        .map(|&gen| {
            let right = coproduct_image(rep1, rep2, gen, left_opposite)?;
            let left = coproduct_image(rep1, rep2, gen, !left_opposite)?;
            let res = residual_norm(&r.mul(&right)?, &left.mul(r)?)?;
            Ok(CheckDetail::new(&format!("{label}{}", gen.name()), res))
        })
        .collect()
}

/// `R Delta(x) = Delta'(x) R` on `rep1 (x) rep2` for every generator.
pub fn check_intertwiner(
    r: &SquareMatrix<Scalar>,
    rep1: &HighestWeightRep,
    rep2: &HighestWeightRep,
    tol: f64,
) -> Result<CheckReport> {
    let details = intertwiner_residuals(r, rep1, rep2, false, "")?;
    Ok(CheckReport::from_details("intertwiner", tol, details))
}

fn three_fold(
    reps: [&HighestWeightRep; 3],
    terms: impl IntoIterator<Item = (Scalar, Basic, Basic, Basic)>,
) -> Result<SquareMatrix<Scalar>> {
    let dim = reps.iter().map(|r| r.m()).product();
    let mut out = SquareMatrix::zeros(dim);
    for (c, x, y, z) in terms {
        let t = kron(&kron(&image_basic(reps[0], x), &image_basic(reps[1], y)), &image_basic(reps[2], z));
        out = out.add(&t.scale(c))?;
    }
    Ok(out)
}

fn hopf_details(rep1: &HighestWeightRep, rep2: &HighestWeightRep) -> Result<Vec<CheckDetail>> {
    if !rep1.same_q(rep2, CONSTRUCTION_TOL) {
        return Err(Error::QMismatch);
    }
    let q = rep1.q().value;
    let mut details = Vec::new();
    for gen in Generator::ALL {
        let x = Basic::Gen(gen);
        let delta = coproduct_basic(x);

        // (Delta (x) id) Delta vs (id (x) Delta) Delta on rep1 (x) rep2 (x) rep1
        let left = delta
            .iter()
            .flat_map(|&(c, l, r)| coproduct_basic(l).into_iter().map(move |(c2, ll, lr)| (c * c2, ll, lr, r)));
        let right = delta
            .iter()
            .flat_map(|&(c, l, r)| coproduct_basic(r).into_iter().map(move |(c2, rl, rr)| (c * c2, l, rl, rr)));
        let reps = [rep1, rep2, rep1];
        let coassoc = residual_norm(&three_fold(reps, left)?, &three_fold(reps, right)?)?;
        details.push(CheckDetail::new(&format!("coassociativity:{}", gen.name()), coassoc));

        for (k, rep) in [rep1, rep2].into_iter().enumerate() {
            let m = rep.m();
            let target = image_basic(rep, x);
            let mut eps_left = SquareMatrix::zeros(m);
            let mut eps_right = SquareMatrix::zeros(m);
            let mut s_left = SquareMatrix::zeros(m);
            let mut s_right = SquareMatrix::zeros(m);
            for &(c, l, r) in &delta {
                eps_left = eps_left.add(&image_basic(rep, r).scale(c * counit_basic(l)))?;
                eps_right = eps_right.add(&image_basic(rep, l).scale(c * counit_basic(r)))?;
                let (cl, sl) = antipode_basic(l, q);
                let (cr, sr) = antipode_basic(r, q);
                s_left = s_left.add(&image_basic(rep, sl).mul(&image_basic(rep, r))?.scale(c * cl))?;
                s_right = s_right.add(&image_basic(rep, l).mul(&image_basic(rep, sr))?.scale(c * cr))?;
            }
            let unit = SquareMatrix::identity(m).scale(counit_basic(x));
            let tag = format!("{}:rep{}", gen.name(), k + 1);
            details.push(CheckDetail::new(&format!("counit_left:{tag}"), residual_norm(&eps_left, &target)?));
            details.push(CheckDetail::new(&format!("counit_right:{tag}"), residual_norm(&eps_right, &target)?));
            details.push(CheckDetail::new(&format!("antipode_left:{tag}"), residual_norm(&s_left, &unit)?));
            details.push(CheckDetail::new(&format!("antipode_right:{tag}"), residual_norm(&s_right, &unit)?));
        }
    }
    Ok(details)
}

/// Coassociativity, counit and antipode laws for every generator, on matrix images.
pub fn check_hopf_axioms(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<CheckReport> {
    Ok(CheckReport::from_details("hopf_axioms", tol, hopf_details(rep1, rep2)?))
}

/// YBE for `P R P`, `R^-1` and `P R^-1 P`.
///
/// Series R-matrices are block triangular with diagonal entries spanning many orders of
/// magnitude, so only an exactly vanishing pivot counts as singular here; a poor inverse
/// shows up in the YBE residual instead.
pub fn check_variants(r: &SquareMatrix<Scalar>, m: usize, tol: f64) -> Result<CheckReport> {
    let mut details = Vec::new();
    for w in Variant::ALL {
        let v = variant(r, w, m, m, 0.0)?;
        details.push(CheckDetail::new(&format!("ybe:{}", w.as_str()), check_ybe(&v, m, tol)?.residual));
    }
    Ok(CheckReport::from_details("variants", tol, details))
}

/// The intertwiner relations satisfied by the three variants on `rep1 (x) rep2`:
/// `R^-1 Delta' = Delta R^-1`, `R21 Delta' = Delta R21`, `R21^-1 Delta = Delta' R21^-1`,
/// where `R21 = P R(rep2, rep1) P`.
pub fn check_variant_intertwiners(rep1: &HighestWeightRep, rep2: &HighestWeightRep, tol: f64) -> Result<CheckReport> {
    if rep1.m() != rep2.m() {
        return Err(Error::UnequalDims(rep1.m(), rep2.m()));
    }
    let m = rep1.m();
    let r = build_r_series(rep1, rep2, CONSTRUCTION_TOL)?.matrix;
    let r_swapped = build_r_series(rep2, rep1, CONSTRUCTION_TOL)?.matrix;
    let p = flip_matrix(m);
    let r21 = p.mul(&r_swapped)?.mul(&p)?;
    let mut details = Vec::new();
    details.extend(intertwiner_residuals(&inverse(&r, 0.0)?, rep1, rep2, true, "minus:")?);
    details.extend(intertwiner_residuals(&r21, rep1, rep2, true, "plus:")?);
    details.extend(intertwiner_residuals(&inverse(&r21, 0.0)?, rep1, rep2, false, "bar:")?);
    Ok(CheckReport::from_details("variant_intertwiners", tol, details))
}
