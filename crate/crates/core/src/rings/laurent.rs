//! Multivariate Laurent polynomials with complex coefficients.
//!
//! Used to build R-matrix entries symbolically in the color parameters (sigma, g, ...)
//! with q kept numeric, so that a Yang-Baxter difference can be certified as the zero
//! polynomial rather than merely small at sample points.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::coeff::Coeff;
use super::scalar::{checked_inv, powi, Scalar};
use crate::error::{Error, Result};

/// Coefficients at or below this modulus are dropped after every operation.
pub const PRUNE_TOL: f64 = 1e-12;

/// Ordered list of variable names; exponent vectors index into it.
#[derive(Clone, PartialEq, Eq)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarSet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// The polynomial consisting of the single variable at `index`.
    pub fn var(&self, index: usize) -> LaurentPoly {
        let mut exp = vec![0; self.len()];
        exp[index] = 1;
        LaurentPoly::monomial(self, Scalar::new(1.0, 0.0), exp)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A Laurent polynomial. Constants created without a variable set (`zero`, `constant`)
/// are compatible with every variable set.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Option<VarSet>,
    terms: BTreeMap<Vec<i32>, Scalar>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        match self.minus_checked(other) {
            Ok(d) => d.terms.is_empty(),
            Err(_) => false,
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            vars: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if c.norm() > PRUNE_TOL {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly { vars: None, terms }
    }

    pub fn monomial(vars: &VarSet, coeff: Scalar, exp: Vec<i32>) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if coeff.norm() > PRUNE_TOL {
            terms.insert(exp, coeff);
        }
        LaurentPoly {
            vars: Some(vars.clone()),
            terms,
        }
    }

    /// Build from explicit terms; duplicate exponents are summed, then pruned.
    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Vec<i32>, Scalar)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<i32>, Scalar> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: exp.len(),
                });
            }
            *map.entry(exp).or_insert(Scalar::new(0.0, 0.0)) += c;
        }
        let mut p = LaurentPoly {
            vars: Some(vars.clone()),
            terms: map,
        };
        p.prune(PRUNE_TOL);
        Ok(p)
    }

    pub fn vars(&self) -> Option<&VarSet> {
        self.vars.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drop every term whose coefficient modulus is `<= tol`.
    pub fn prune(&mut self, tol: f64) {
        self.terms.retain(|_, c| c.norm() > tol);
    }

    pub fn pruned(mut self, tol: f64) -> Self {
        self.prune(tol);
        self
    }

    fn unify(&self, other: &Self) -> Result<Option<VarSet>> {
        match (&self.vars, &other.vars) {
            (None, None) => Ok(None),
            (Some(v), None) | (None, Some(v)) => Ok(Some(v.clone())),
            (Some(a), Some(b)) if a == b => Ok(Some(a.clone())),
            (Some(a), Some(b)) => Err(Error::VariableMismatch {
                left: a.names().to_vec(),
                right: b.names().to_vec(),
            }),
        }
    }

    fn lifted_terms(&self, n: usize) -> impl Iterator<Item = (Vec<i32>, Scalar)> + '_ {
        self.terms.iter().map(move |(e, c)| {
            if e.is_empty() && n > 0 {
                (vec![0; n], *c)
            } else {
                (e.clone(), *c)
            }
        })
    }

    fn combine(&self, other: &Self, sign: f64) -> Result<Self> {
        let vars = self.unify(other)?;
        let n = vars.as_ref().map_or(0, VarSet::len);
        let mut terms: BTreeMap<Vec<i32>, Scalar> = self.lifted_terms(n).collect();
        for (e, c) in other.lifted_terms(n) {
            *terms.entry(e).or_insert(Scalar::new(0.0, 0.0)) += c * sign;
        }
        Ok(LaurentPoly { vars, terms }.pruned(PRUNE_TOL))
    }

    pub fn plus_checked(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1.0)
    }

    pub fn minus_checked(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1.0)
    }

    /// Distributive convolution of exponent vectors.
    pub fn times_checked(&self, other: &Self) -> Result<Self> {
        let vars = self.unify(other)?;
        let n = vars.as_ref().map_or(0, VarSet::len);
        let mut terms: BTreeMap<Vec<i32>, Scalar> = BTreeMap::new();
        for (ea, ca) in self.lifted_terms(n) {
            for (eb, cb) in other.lifted_terms(n) {
                let e: Vec<i32> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert(Scalar::new(0.0, 0.0)) += ca * cb;
            }
        }
        Ok(LaurentPoly { vars, terms }.pruned(PRUNE_TOL))
    }

    pub fn scale(&self, s: Scalar) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
        .pruned(PRUNE_TOL)
    }

    /// Inverse of a single-term polynomial.
    pub fn inv_monomial(&self, tol: f64) -> Result<Self> {
        if self.terms.len() != 1 {
            return if self.terms.is_empty() {
                Err(Error::DivisionByZero { magnitude: 0.0, tol })
            } else {
                Err(Error::NotMonomial)
            };
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(e.iter().map(|x| -x).collect(), checked_inv(*c, tol)?);
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: i32, tol: f64) -> Result<Self> {
        let base = if e < 0 { self.inv_monomial(tol)? } else { self.clone() };
        let mut acc = LaurentPoly::constant(Scalar::new(1.0, 0.0));
        for _ in 0..e.unsigned_abs() {
            acc = acc.times_checked(&base)?;
        }
        Ok(acc)
    }

    /// Evaluate at a point. Variables that never occur with a nonzero exponent need no
    /// assignment.
    pub fn eval(&self, point: &HashMap<String, Scalar>) -> Result<Scalar> {
        let names: &[String] = self.vars.as_ref().map_or(&[], |v| v.names());
        let mut values = Vec::with_capacity(names.len());
        for (k, name) in names.iter().enumerate() {
            let used = self.terms.keys().any(|e| e[k] != 0);
            if !used {
                values.push(Scalar::new(1.0, 0.0));
                continue;
            }
            let v = *point
                .get(name)
                .ok_or_else(|| Error::MissingAssignment(name.clone()))?;
            if v.norm() == 0.0 && self.terms.keys().any(|e| e[k] < 0) {
                return Err(Error::ZeroAssignment(name.clone()));
            }
            values.push(v);
        }
        let mut total = Scalar::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = *c;
            for (x, &k) in values.iter().zip(e.iter()) {
                if k != 0 {
                    t *= powi(*x, k);
                }
            }
            total += t;
        }
        Ok(total)
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn from_scalar(s: Scalar) -> Self {
        LaurentPoly::constant(s)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.plus_checked(other).expect("polynomials over one variable set")
    }
    fn minus(&self, other: &Self) -> Self {
        self.minus_checked(other).expect("polynomials over one variable set")
    }
    fn times(&self, other: &Self) -> Self {
        self.times_checked(other).expect("polynomials over one variable set")
    }
    fn scaled(&self, s: Scalar) -> Self {
        self.scale(s)
    }
    fn magnitude(&self) -> f64 {
        self.max_abs_coeff()
    }
    fn powi(&self, e: i32, tol: f64) -> Result<Self> {
        self.pow(e, tol)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: &[String] = self.vars.as_ref().map_or(&[], |v| v.names());
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i)", c.re, c.im)?;
            for (name, k) in names.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}
