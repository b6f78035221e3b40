//! The JSON and CSV matrix files.
//!
//! JSON floats are written in shortest round-trip form, so every entry reads back to the
//! same bits.

use serde::{Deserialize, Serialize};
use uqgl2::representations::GaugeMode;
use uqgl2::rings::{LaurentPoly, VarSet};
use uqgl2::rmatrix::ExactRMatrix;
use uqgl2::{BranchTag, Color, SquareMatrix, Scalar};

use crate::failure::{Failure, Outcome};
use crate::model::GaugeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<Scalar> for ComplexRecord {
    fn from(z: Scalar) -> Self {
        ComplexRecord { re: z.re, im: z.im }
    }
}

impl ComplexRecord {
    pub fn scalar(self) -> Scalar {
        Scalar::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColorRecord {
    pub sigma: ComplexRecord,
    pub g: ComplexRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeRecord {
    pub mode: String,
    pub a: Vec<ComplexRecord>,
    pub b: Vec<ComplexRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: Vec<i32>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub r: usize,
    pub c: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub re: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<TermRecord>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixArtifact {
    pub m: usize,
    pub dim: usize,
    pub q: ComplexRecord,
    pub branch: String,
    pub colors: Vec<ColorRecord>,
    pub gauge: GaugeRecord,
    /// Present only for polynomial entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub entries: Vec<EntryRecord>,
}

fn records(values: &[Scalar]) -> Vec<ComplexRecord> {
    values.iter().map(|&z| z.into()).collect()
}

impl MatrixArtifact {
    pub fn numeric(
        m: usize,
        q: Scalar,
        branch: BranchTag,
        colors: &[Color],
        gauge: (GaugeMode, &[Scalar], &[Scalar]),
        matrix: &SquareMatrix<Scalar>,
    ) -> Self {
        let entries = matrix
            .entries()
            .map(|(r, c, z)| EntryRecord {
                r,
                c,
                re: Some(z.re),
                im: Some(z.im),
                poly: None,
            })
            .collect();
        MatrixArtifact {
            m,
            dim: matrix.dim(),
            q: q.into(),
            branch: branch.as_str().into(),
            colors: colors
                .iter()
                .map(|col| ColorRecord {
                    sigma: col.sigma.into(),
                    g: col.g.into(),
                })
                .collect(),
            gauge: GaugeRecord {
                mode: gauge.0.as_str().into(),
                a: records(gauge.1),
                b: records(gauge.2),
            },
            vars: None,
            entries,
        }
    }

    /// Symbolic colors carry no values; the gauge is unit-a with `b` polynomial in sigma.
    pub fn exact(r: &ExactRMatrix) -> Self {
        let entries = r
            .matrix
            .entries()
            .map(|(row, col, p)| EntryRecord {
                r: row,
                c: col,
                re: None,
                im: None,
                poly: Some(
                    p.terms()
                        .map(|(exp, z)| TermRecord {
                            exp: exp.to_vec(),
                            re: z.re,
                            im: z.im,
                        })
                        .collect(),
                ),
            })
            .collect();
        MatrixArtifact {
            m: r.m,
            dim: r.matrix.dim(),
            q: r.q.into(),
            branch: BranchTag::RootOfUnity.as_str().into(),
            colors: Vec::new(),
            gauge: GaugeRecord {
                mode: GaugeMode::UnitA.as_str().into(),
                a: Vec::new(),
                b: Vec::new(),
            },
            vars: Some(r.vars.names().to_vec()),
            entries,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.vars.is_some()
    }

    fn check_shape(&self) -> Outcome<()> {
        if self.m < 2 || self.dim != self.m * self.m {
            return Err(Failure::input(format!(
                "dim {} does not match m = {} (expected m^2)",
                self.dim, self.m
            )));
        }
        if self.branch != BranchTag::Generic.as_str() && self.branch != BranchTag::RootOfUnity.as_str() {
            return Err(Failure::input(format!("unknown branch `{}`", self.branch)));
        }
        let mut previous = None;
        for e in &self.entries {
            if e.r == 0 || e.c == 0 || e.r > self.dim || e.c > self.dim {
                return Err(Failure::input(format!("entry ({}, {}) outside the {0}x{0} matrix", e.r, e.c)));
            }
            if previous.is_some_and(|p| p >= (e.r, e.c)) {
                return Err(Failure::input("entries must be sorted by (r, c) without repeats"));
            }
            previous = Some((e.r, e.c));
        }
        Ok(())
    }

    pub fn colors(&self) -> Vec<Color> {
        self.colors
            .iter()
            .map(|col| Color {
                sigma: col.sigma.scalar(),
                g: col.g.scalar(),
            })
            .collect()
    }

    /// The gauge as it was used to build the file.
    pub fn gauge_spec(&self) -> Outcome<GaugeSpec> {
        let mode = GaugeMode::parse(&self.gauge.mode)
            .ok_or_else(|| Failure::input(format!("unknown gauge mode `{}`", self.gauge.mode)))?;
        if mode != GaugeMode::Explicit {
            return Ok(GaugeSpec::simple(mode));
        }
        let values = |v: &[ComplexRecord]| v.iter().map(|z| z.scalar()).collect::<Vec<_>>();
        let b = (self.colors.len() == 1).then(|| values(&self.gauge.b));
        Ok(GaugeSpec {
            mode,
            a: Some(values(&self.gauge.a)),
            b,
        })
    }

    pub fn numeric_matrix(&self) -> Outcome<SquareMatrix<Scalar>> {
        self.check_shape()?;
        if self.is_exact() {
            return Err(Failure::input("file holds polynomial entries"));
        }
        let entries = self
            .entries
            .iter()
            .map(|e| match (e.re, e.im) {
                (Some(re), Some(im)) => Ok((e.r, e.c, Scalar::new(re, im))),
                _ => Err(Failure::input(format!("entry ({}, {}) lacks `re`/`im`", e.r, e.c))),
            })
            .collect::<Outcome<Vec<_>>>()?;
        Ok(SquareMatrix::from_entries(self.dim, entries)?)
    }

    pub fn exact_matrix(&self) -> Outcome<(VarSet, SquareMatrix<LaurentPoly>)> {
        self.check_shape()?;
        let names = self.vars.as_ref().ok_or_else(|| Failure::input("file holds numeric entries"))?;
        let vars = VarSet::new(names);
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let terms = e
                    .poly
                    .as_ref()
                    .ok_or_else(|| Failure::input(format!("entry ({}, {}) lacks `poly`", e.r, e.c)))?;
                let poly = LaurentPoly::from_terms(&vars, terms.iter().map(|t| (t.exp.clone(), Scalar::new(t.re, t.im))))?;
                Ok((e.r, e.c, poly))
            })
            .collect::<Outcome<Vec<_>>>()?;
        Ok((vars.clone(), SquareMatrix::from_entries(self.dim, entries)?))
    }
}

/// `r,c,re,im` with a header row.
pub fn matrix_csv(matrix: &SquareMatrix<Scalar>) -> Outcome<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["r", "c", "re", "im"]).map_err(csv_failure)?;
    for (r, c, z) in matrix.entries() {
        writer
            .write_record([r.to_string(), c.to_string(), z.re.to_string(), z.im.to_string()])
            .map_err(csv_failure)?;
    }
    finish_csv(writer)
}

pub fn csv_failure(e: csv::Error) -> Failure {
    Failure::invalid("Io", e.to_string())
}

pub fn finish_csv(writer: csv::Writer<Vec<u8>>) -> Outcome<String> {
    let bytes = writer.into_inner().map_err(|e| Failure::invalid("Io", e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::invalid("Io", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use uqgl2::rings::c;

    #[test]
    fn numeric_round_trip_is_bit_exact() {
        let matrix = SquareMatrix::from_entries(
            4,
            [
                (1, 1, c(0.1, 1.0 / 3.0)),
                (3, 2, c(-2.0f64.sqrt(), 1e-300)),
                (4, 4, c(std::f64::consts::PI, 0.0)),
            ],
        )
        .unwrap();
        let color = Color {
            sigma: c(1.0, 0.5),
            g: c(0.7, 0.0),
        };
        let art = MatrixArtifact::numeric(
            2,
            c(0.0, 1.0),
            BranchTag::RootOfUnity,
            &[color],
            (GaugeMode::UnitA, &[c(1.0, 0.0)], &[c(0.3, 0.1)]),
            &matrix,
        );
        let text = serde_json::to_string_pretty(&art).unwrap();
        let back: MatrixArtifact = serde_json::from_str(&text).unwrap();
        assert_eq!(back, art);
        assert_eq!(back.numeric_matrix().unwrap(), matrix);
        assert_eq!(back.colors(), vec![color]);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 7);
        assert!(value.get("vars").is_none());
        assert_eq!(value["entries"][1]["r"], 3);
    }

    #[test]
    fn rejects_bad_shapes() {
        let matrix = SquareMatrix::from_entries(4, [(1, 1, c(1.0, 0.0))]).unwrap();
        let color = Color {
            sigma: c(1.0, 0.0),
            g: c(1.0, 0.0),
        };
        let base = MatrixArtifact::numeric(2, c(0.0, 1.0), BranchTag::Generic, &[color], (GaugeMode::UnitA, &[], &[]), &matrix);
        let mut wrong_dim = base.clone();
        wrong_dim.dim = 9;
        assert!(wrong_dim.numeric_matrix().is_err());
        let mut unsorted = base.clone();
        unsorted.entries.push(unsorted.entries[0].clone());
        assert!(unsorted.numeric_matrix().is_err());
        let mut missing = base.clone();
        missing.entries[0].im = None;
        assert!(missing.numeric_matrix().is_err());
        let mut branch = base;
        branch.branch = "other".into();
        assert!(branch.numeric_matrix().is_err());
    }

    #[test]
    fn csv_layout() {
        let matrix = SquareMatrix::from_entries(4, [(1, 1, c(1.0, 0.0)), (3, 2, c(-0.5, 2.0))]).unwrap();
        let text = matrix_csv(&matrix).unwrap();
        assert_eq!(text, "r,c,re,im\n1,1,1,0\n3,2,-0.5,2\n");
    }
}
