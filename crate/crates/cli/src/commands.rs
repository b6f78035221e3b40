//! `build` and `verify`.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use uqgl2::representations::GaugeMode;
use uqgl2::rings::{LaurentPoly, CONSTRUCTION_TOL};
use uqgl2::rmatrix::{build_r_exact, ExactColors};
use uqgl2::verify::{
    check_colored_ybe, check_colored_ybe_exact, check_hopf_axioms, check_intertwiner, check_variant_intertwiners,
    check_variants, check_ybe, CheckReport,
};
use uqgl2::{BranchTag, Color, HighestWeightRep, QValue, Scalar, SquareMatrix};

use crate::artifact::{matrix_csv, MatrixArtifact};
use crate::cli::{BuildArgs, FormatArg, MethodArg, ModeArg, ModelArgs, VerifyArgs};
use crate::failure::{Failure, Outcome};
use crate::model::{build_reps, closed_for, default_color, gauge_factors, resolve_branch, series_for, GaugeSpec};
use crate::parse::{self, QSpec};

/// Build accepts two colors; verify also takes a third for the colored YBE.
const MAX_BUILD_COLORS: usize = 2;
const MAX_VERIFY_COLORS: usize = 3;

struct Model {
    m: usize,
    q: QSpec,
    /// Never empty: a missing `--color` becomes the default color.
    colors: Vec<Color>,
    /// How many colors were given on the command line.
    given_colors: usize,
    gauge: GaugeSpec,
    mode: ModeArg,
    branch: Option<BranchTag>,
}

fn model(args: &ModelArgs, max_colors: usize) -> Outcome<Model> {
    let m = args.m.ok_or_else(|| Failure::input("`--m` is required"))?;
    let q = parse::q_spec(args.q.as_deref().ok_or_else(|| Failure::input("`--q` is required"))?)?;
    if args.colors.len() > max_colors {
        return Err(Failure::input(format!(
            "at most {max_colors} colors here, got {}",
            args.colors.len()
        )));
    }
    let mut colors = args.colors.iter().map(|t| parse::color(t)).collect::<Outcome<Vec<_>>>()?;
    if colors.is_empty() {
        colors.push(default_color(&q.value));
    }
    let values = |v: &[String]| v.iter().map(|t| parse::complex(t)).collect::<Outcome<Vec<_>>>();
    let mode: GaugeMode = args.gauge.into();
    if mode != GaugeMode::Explicit && !(args.a.is_empty() && args.b.is_empty()) {
        return Err(Failure::input("`--a`/`--b` need `--gauge explicit`"));
    }
    let optional = |v: Vec<Scalar>| (!v.is_empty()).then_some(v);
    Ok(Model {
        m,
        q,
        colors,
        given_colors: args.colors.len(),
        gauge: GaugeSpec {
            mode,
            a: optional(values(&args.a)?),
            b: optional(values(&args.b)?),
        },
        mode: args.mode,
        branch: args.branch.map(Into::into),
    })
}

/// Writes to `path`, or to stdout when absent. A closed stdout pipe is not an error.
pub fn write_output(path: Option<&Path>, text: &str) -> Outcome<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{}", text.trim_end()).and_then(|_| out.flush()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
    }
    Ok(())
}

/// Exact mode: root-of-unity branch, unit-a gauge, `q` given as a root.
fn exact_colors(model: &Model) -> Outcome<ExactColors> {
    if !model.q.is_root {
        return Err(Failure::input("exact mode needs q given as `root k/n`"));
    }
    if model.gauge.mode != GaugeMode::UnitA {
        return Err(uqgl2::Error::ExactModeUnsupported("only the unit_a gauge has polynomial entries".into()).into());
    }
    if model.branch == Some(BranchTag::Generic) {
        return Err(uqgl2::Error::ExactModeUnsupported("exact mode covers the root-of-unity branch only".into()).into());
    }
    Ok(ExactColors::new(model.given_colors.max(1)))
}

pub fn build(args: &BuildArgs) -> Outcome<()> {
    let model = model(&args.model, MAX_BUILD_COLORS)?;
    let text = match model.mode {
        ModeArg::Exact => {
            if args.format == FormatArg::Csv {
                return Err(Failure::input("CSV holds numeric entries only; use `--format json` in exact mode"));
            }
            if args.method != MethodArg::Series {
                return Err(Failure::input("exact mode builds from the series"));
            }
            let colors = exact_colors(&model)?;
            let r = build_r_exact(model.m, &model.q.value, &colors, (1, colors.count()), args.tol)?;
            serde_json::to_string_pretty(&MatrixArtifact::exact(&r))?
        }
        ModeArg::Numeric => {
            let reps = build_reps(model.m, &model.q.value, &model.colors, &model.gauge, args.tol)?;
            let requested = resolve_branch(model.branch, &model.q.value, model.q.is_root, &reps, args.tol)?;
            let result = match args.method {
                MethodArg::Series => series_for(&reps, args.tol)?,
                MethodArg::Closed => closed_for(&reps, requested, args.tol)?,
            };
            let branch = if model.branch.is_some() {
                requested
            } else {
                result.branch.unwrap_or(requested)
            };
            match args.format {
                FormatArg::Csv => matrix_csv(&result.matrix)?,
                FormatArg::Json => {
                    let (a, b) = gauge_factors(&reps);
                    let art = MatrixArtifact::numeric(
                        model.m,
                        model.q.value.value,
                        branch,
                        &model.colors,
                        (model.gauge.mode, &a, &b),
                        &result.matrix,
                    );
                    serde_json::to_string_pretty(&art)?
                }
            }
        }
    };
    write_output(args.output.as_deref(), &text)
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    passed: bool,
    reports: Vec<CheckReport>,
}

/// Checks on `r = R(rep1, rep2)` (or `R(rep1, rep1)`). With two colors the YBE is taken on
/// the color triple `(c1, c2, c2)`, with three on `(c1, c2, c3)`.
pub fn numeric_checks(r: &SquareMatrix<Scalar>, reps: &[HighestWeightRep], tol: f64) -> Outcome<Vec<CheckReport>> {
    let m = reps[0].m();
    let first = &reps[0];
    let second = reps.get(1).unwrap_or(first);
    let mut reports = Vec::new();
    match reps.len() {
        1 => reports.push(check_ybe(r, m, tol)?),
        2 => {
            let r22 = series_for(&reps[1..2], CONSTRUCTION_TOL)?.matrix;
            reports.push(check_colored_ybe(r, r, &r22, m, tol)?);
        }
        _ => {
            let r13 = series_for(&[reps[0].clone(), reps[2].clone()], CONSTRUCTION_TOL)?.matrix;
            let r23 = series_for(&reps[1..3], CONSTRUCTION_TOL)?.matrix;
            reports.push(check_colored_ybe(r, &r13, &r23, m, tol)?);
        }
    }
    reports.push(check_intertwiner(r, first, second, tol)?);
    reports.push(check_hopf_axioms(first, second, tol)?);
    if reps.len() == 1 {
        reports.push(check_variants(r, m, tol)?);
    }
    reports.push(check_variant_intertwiners(first, second, tol)?);
    Ok(reports)
}

/// Polynomial YBE on `r = R(color 1, color min(2, n))`, with the same color triples as
/// [`numeric_checks`].
fn exact_checks(
    r: &SquareMatrix<LaurentPoly>,
    m: usize,
    q: &QValue,
    colors: &ExactColors,
    tol: f64,
) -> Outcome<Vec<CheckReport>> {
    let build = |legs| -> Outcome<SquareMatrix<LaurentPoly>> {
        Ok(build_r_exact(m, q, colors, legs, CONSTRUCTION_TOL)?.matrix)
    };
    let report = match colors.count() {
        1 => check_colored_ybe_exact(r, r, r, m, tol)?,
        2 => check_colored_ybe_exact(r, r, &build((2, 2))?, m, tol)?,
        _ => check_colored_ybe_exact(r, &build((1, 3))?, &build((2, 3))?, m, tol)?,
    };
    Ok(vec![report])
}

fn verify_file(path: &Path, tol: f64) -> Outcome<Vec<CheckReport>> {
    let text = std::fs::read_to_string(path)?;
    let art: MatrixArtifact = serde_json::from_str(&text)?;
    let q = QValue::generic(art.q.scalar());
    if art.is_exact() {
        let (vars, r) = art.exact_matrix()?;
        let count = vars.len() / 2;
        let colors = ExactColors::new(count);
        if count == 0 || count > MAX_BUILD_COLORS || colors.vars() != &vars {
            return Err(Failure::input(format!(
                "variables {:?} are not one or two symbolic colors",
                vars.names()
            )));
        }
        return exact_checks(&r, art.m, &q, &colors, tol);
    }
    let r = art.numeric_matrix()?;
    let colors = art.colors();
    if colors.is_empty() || colors.len() > MAX_BUILD_COLORS {
        return Err(Failure::input(format!("expected one or two colors, found {}", colors.len())));
    }
    let reps = build_reps(art.m, &q, &colors, &art.gauge_spec()?, CONSTRUCTION_TOL)?;
    numeric_checks(&r, &reps, tol)
}

fn verify_model(args: &ModelArgs, tol: f64) -> Outcome<Vec<CheckReport>> {
    let model = model(args, MAX_VERIFY_COLORS)?;
    match model.mode {
        ModeArg::Exact => {
            let colors = exact_colors(&model)?;
            let second = colors.count().min(MAX_BUILD_COLORS);
            let r = build_r_exact(model.m, &model.q.value, &colors, (1, second), CONSTRUCTION_TOL)?.matrix;
            exact_checks(&r, model.m, &model.q.value, &colors, tol)
        }
        ModeArg::Numeric => {
            let reps = build_reps(model.m, &model.q.value, &model.colors, &model.gauge, CONSTRUCTION_TOL)?;
            resolve_branch(model.branch, &model.q.value, model.q.is_root, &reps, CONSTRUCTION_TOL)?;
            let r = series_for(&reps, CONSTRUCTION_TOL)?.matrix;
            numeric_checks(&r, &reps, tol)
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Outcome<()> {
    let reports = match &args.input {
        Some(path) => {
            let m = &args.model;
            if m.m.is_some() || m.q.is_some() || !m.colors.is_empty() {
                return Err(Failure::input("`--input` replaces `--m`, `--q` and `--color`"));
            }
            verify_file(path, args.tol)?
        }
        None => verify_model(&args.model, args.tol)?,
    };
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed).map(|r| r.name.clone()).collect();
    let out = VerifyOutput {
        passed: failed.is_empty(),
        reports,
    };
    write_output(args.output.as_deref(), &serde_json::to_string_pretty(&out)?)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::ChecksFailed(failed))
    }
}
