//! `sweep`: single-color checks over a grid of `(q, sigma, g)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use uqgl2::representations::{products_ab, GaugeChoice};
use uqgl2::rings::CONSTRUCTION_TOL;
use uqgl2::rmatrix::build_r_series;
use uqgl2::verify::{check_intertwiner, check_ybe};
use uqgl2::{Color, HighestWeightRep, QValue, Scalar};

use crate::artifact::{csv_failure, finish_csv};
use crate::cli::{FormatArg, SweepArgs};
use crate::commands::write_output;
use crate::failure::{Failure, Outcome};
use crate::model::default_color;
use crate::parse;

#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    pub index: usize,
    pub q: QValue,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub m: usize,
    pub q_re: f64,
    pub q_im: f64,
    pub sigma_re: f64,
    pub sigma_im: f64,
    pub g_re: f64,
    pub g_im: f64,
    pub branch: Option<String>,
    pub ybe: Option<f64>,
    pub intertwiner: Option<f64>,
    /// Worst residual over the random gauges.
    pub random_gauges: Option<f64>,
    pub max_residual: Option<f64>,
    pub passed: Option<bool>,
    pub error: Option<String>,
    pub message: Option<String>,
}

/// Grid in lexicographic order: q outermost, then sigma, then g.
pub fn grid(qs: &[QValue], sigmas: &[Scalar], gs: &[Scalar]) -> Vec<GridPoint> {
    let one = [Scalar::new(1.0, 0.0)];
    let gs = if gs.is_empty() { &one[..] } else { gs };
    let mut points = Vec::new();
    for q in qs {
        let default = [default_color(q).sigma];
        let sigmas = if sigmas.is_empty() { &default[..] } else { sigmas };
        for &sigma in sigmas {
            for &g in gs {
                points.push(GridPoint {
                    index: points.len(),
                    q: *q,
                    color: Color { sigma, g },
                });
            }
        }
    }
    points
}

struct Residuals {
    ybe: f64,
    intertwiner: f64,
}

fn residuals(rep: &HighestWeightRep, tol: f64) -> uqgl2::Result<Residuals> {
    let r = build_r_series(rep, rep, CONSTRUCTION_TOL)?.matrix;
    Ok(Residuals {
        ybe: check_ybe(&r, rep.m(), tol)?.residual,
        intertwiner: check_intertwiner(&r, rep, rep, tol)?.residual,
    })
}

/// `a_i = rho e^{i theta}` with `rho` in `[0.5, 2)`; `b_i` follows from the products.
fn random_gauge(rng: &mut ChaCha8Rng, products: &[Scalar]) -> GaugeChoice {
    let a: Vec<Scalar> = products
        .iter()
        .map(|_| Scalar::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU)))
        .collect();
    let b = products.iter().zip(&a).map(|(p, x)| p / x).collect();
    GaugeChoice::Explicit { a, b }
}

struct Evaluated {
    branch: String,
    base: Residuals,
    gauges: Option<f64>,
}

fn evaluate(m: usize, point: &GridPoint, gauges: usize, seed: u64, tol: f64) -> uqgl2::Result<Evaluated> {
    let Color { sigma, g } = point.color;
    let rep = HighestWeightRep::new(m, point.q, sigma, g, &GaugeChoice::UnitA, CONSTRUCTION_TOL)?;
    let base = residuals(&rep, tol)?;
    let mut worst = None;
    if gauges > 0 {
        // one stream per point, so rows do not depend on scheduling
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(point.index as u64);
        let products = products_ab(m, point.q.value, sigma, CONSTRUCTION_TOL)?;
        let mut w: f64 = 0.0;
        for _ in 0..gauges {
            let gauge = random_gauge(&mut rng, &products);
            let rep = HighestWeightRep::new(m, point.q, sigma, g, &gauge, CONSTRUCTION_TOL)?;
            let res = residuals(&rep, tol)?;
            w = w.max(res.ybe).max(res.intertwiner);
        }
        worst = Some(w);
    }
    Ok(Evaluated {
        branch: rep.branch().as_str().into(),
        base,
        gauges: worst,
    })
}

pub fn run(m: usize, points: &[GridPoint], gauges: usize, seed: u64, tol: f64) -> Vec<SweepRow> {
    points
        .par_iter()
        .map(|p| {
            let mut row = SweepRow {
                index: p.index,
                m,
                q_re: p.q.value.re,
                q_im: p.q.value.im,
                sigma_re: p.color.sigma.re,
                sigma_im: p.color.sigma.im,
                g_re: p.color.g.re,
                g_im: p.color.g.im,
                branch: None,
                ybe: None,
                intertwiner: None,
                random_gauges: None,
                max_residual: None,
                passed: None,
                error: None,
                message: None,
            };
            match evaluate(m, p, gauges, seed, tol) {
                Ok(e) => {
                    let max = e.base.ybe.max(e.base.intertwiner).max(e.gauges.unwrap_or(0.0));
                    row.branch = Some(e.branch);
                    row.ybe = Some(e.base.ybe);
                    row.intertwiner = Some(e.base.intertwiner);
                    row.random_gauges = e.gauges;
                    row.max_residual = Some(max);
                    row.passed = Some(max <= tol);
                }
                Err(err) => {
                    row.error = Some(err.kind().into());
                    row.message = Some(err.to_string());
                }
            }
            row
        })
        .collect()
}

fn rows_csv(rows: &[SweepRow]) -> Outcome<String> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    // written by hand so an empty table still has its header
    writer
        .write_record([
            "index",
            "m",
            "q_re",
            "q_im",
            "sigma_re",
            "sigma_im",
            "g_re",
            "g_im",
            "branch",
            "ybe",
            "intertwiner",
            "random_gauges",
            "max_residual",
            "passed",
            "error",
            "message",
        ])
        .map_err(csv_failure)?;
    for row in rows {
        writer.serialize(row).map_err(csv_failure)?;
    }
    finish_csv(writer)
}

pub fn sweep(args: &SweepArgs) -> Outcome<()> {
    let qs = parse::q_specs(&args.q)?.into_iter().map(|s| s.value).collect::<Vec<_>>();
    let values = |v: &[String]| v.iter().map(|t| parse::complex(t)).collect::<Outcome<Vec<_>>>();
    let points = grid(&qs, &values(&args.sigma)?, &values(&args.g)?);
    let rows = run(args.m, &points, args.random_gauges, args.seed, args.tol);
    let text = match args.format {
        FormatArg::Json => serde_json::to_string_pretty(&rows)?,
        FormatArg::Csv => rows_csv(&rows)?,
    };
    write_output(args.output.as_deref(), &text)?;
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| r.passed == Some(false))
        .map(|r| format!("row {}", r.index))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::ChecksFailed(failed))
    }
}
