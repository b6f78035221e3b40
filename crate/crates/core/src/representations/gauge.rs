use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{approx_eq, Scalar};

/// How the fixed products `a_i b_i` are split into individual factors.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum GaugeChoice {
    /// `a_i = 1`, `b_i` carries the product.
    #[default]
    UnitA,
    /// `a_i = b_i = sqrt(product)`, principal root.
    Balanced,
    /// User sequences; must reproduce the products.
    Explicit { a: Vec<Scalar>, b: Vec<Scalar> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaugeMode {
    UnitA,
    Balanced,
    Explicit,
}

impl GaugeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            GaugeMode::UnitA => "unit_a",
            GaugeMode::Balanced => "balanced",
            GaugeMode::Explicit => "explicit",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "unit_a" | "unit-a" | "unita" => Some(GaugeMode::UnitA),
            "balanced" => Some(GaugeMode::Balanced),
            "explicit" => Some(GaugeMode::Explicit),
            _ => None,
        }
    }
}

impl GaugeChoice {
    pub fn mode(&self) -> GaugeMode {
        match self {
            GaugeChoice::UnitA => GaugeMode::UnitA,
            GaugeChoice::Balanced => GaugeMode::Balanced,
            GaugeChoice::Explicit { .. } => GaugeMode::Explicit,
        }
    }
}

pub fn apply_gauge(products: &[Scalar], gauge: &GaugeChoice, tol: f64) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    match gauge {
        GaugeChoice::UnitA => Ok((vec![Scalar::new(1.0, 0.0); products.len()], products.to_vec())),
        GaugeChoice::Balanced => {
            let roots: Vec<Scalar> = products.iter().map(|p| p.sqrt()).collect();
            Ok((roots.clone(), roots))
        }
        GaugeChoice::Explicit { a, b } => {
            for seq in [a, b] {
                if seq.len() != products.len() {
                    return Err(Error::DimensionMismatch {
                        expected: products.len(),
                        found: seq.len(),
                    });
                }
            }
            for (i, ((x, y), p)) in a.iter().zip(b).zip(products).enumerate() {
                if !approx_eq(x * y, *p, tol) {
                    return Err(Error::GaugeInconsistent { index: i + 1 });
                }
            }
            Ok((a.clone(), b.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::real;

    #[test]
    fn gauge_examples() {
        let (a, b) = apply_gauge(&[real(1.0)], &GaugeChoice::UnitA, 1e-12).unwrap();
        assert_eq!((a, b), (vec![real(1.0)], vec![real(1.0)]));

        let (a, b) = apply_gauge(&[real(4.0)], &GaugeChoice::Balanced, 1e-12).unwrap();
        assert_eq!((a, b), (vec![real(2.0)], vec![real(2.0)]));

        let g = GaugeChoice::Explicit {
            a: vec![real(3.0)],
            b: vec![real(2.0)],
        };
        let (a, b) = apply_gauge(&[real(6.0)], &g, 1e-12).unwrap();
        assert_eq!((a, b), (vec![real(3.0)], vec![real(2.0)]));
    }

    #[test]
    fn inconsistent_explicit_gauge() {
        let g = GaugeChoice::Explicit {
            a: vec![real(3.0), real(1.0)],
            b: vec![real(2.0), real(2.0)],
        };
        assert_eq!(
            apply_gauge(&[real(6.0), real(5.0)], &g, 1e-12),
            Err(Error::GaugeInconsistent { index: 2 })
        );
        let short = GaugeChoice::Explicit {
            a: vec![real(3.0)],
            b: vec![real(2.0)],
        };
        assert!(matches!(
            apply_gauge(&[real(6.0), real(5.0)], &short, 1e-12),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_products_allowed() {
        let (a, b) = apply_gauge(&[real(0.0)], &GaugeChoice::Balanced, 1e-12).unwrap();
        assert_eq!(a[0] * b[0], real(0.0));
        let (_, b) = apply_gauge(&[real(0.0)], &GaugeChoice::UnitA, 1e-12).unwrap();
        assert_eq!(b[0], real(0.0));
    }
}
