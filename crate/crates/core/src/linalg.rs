//! Sparse square matrices over [`Coeff`] entries, with 1-based indices.
//!
//! Tensor-basis convention: for factors of dimensions `(m1, m2)`, `e_i (x) e_j` is basis
//! vector `(i - 1) * m2 + j`. Every export and golden test depends on it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rings::{Coeff, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    entries: BTreeMap<(usize, usize), T>,
}

/// Tensor index of `e_i (x) e_j` with second factor of dimension `m2`.
pub fn tensor_index(i: usize, j: usize, m2: usize) -> usize {
    (i - 1) * m2 + j
}

impl<T: Coeff> SquareMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        SquareMatrix {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diag((0..dim).map(|_| T::one()).collect())
    }

    pub fn from_diag(diag: Vec<T>) -> Self {
        let mut m = Self::zeros(diag.len());
        for (k, v) in diag.into_iter().enumerate() {
            m.set(k + 1, k + 1, v);
        }
        m
    }

    /// Build from `(row, col, value)` triples; duplicates are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Result<Self> {
        let mut m = Self::zeros(dim);
        for (r, c, v) in entries {
            m.check_index(r, c)?;
            m.add_at(r, c, &v);
        }
        Ok(m)
    }

    fn check_index(&self, r: usize, c: usize) -> Result<()> {
        for idx in [r, c] {
            if idx == 0 || idx > self.dim {
                return Err(Error::InvalidInput(format!(
                    "index {idx} outside [1, {}]",
                    self.dim
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(T::zero)
    }

    pub fn get_ref(&self, r: usize, c: usize) -> Option<&T> {
        self.entries.get(&(r, c))
    }

    /// Set an entry; exact zeros are removed from storage.
    pub fn set(&mut self, r: usize, c: usize, v: T) {
        assert!(r >= 1 && r <= self.dim && c >= 1 && c <= self.dim, "index ({r},{c}) out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &T) {
        let cur = self.get(r, c);
        self.set(r, c, cur.plus(v));
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut rows: Vec<Vec<(usize, &T)>> = vec![Vec::new(); self.dim + 1];
        for (r, c, v) in other.entries() {
            rows[r].push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (i, k, a) in self.entries() {
            for &(j, b) in &rows[k] {
                let p = a.times(b);
                match acc.get_mut(&(i, j)) {
                    Some(cur) => *cur = cur.plus(&p),
                    None => {
                        acc.insert((i, j), p);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(SquareMatrix {
            dim: self.dim,
            entries: acc,
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        self.same_dim(other)?;
        let zero = T::zero();
        let mut out = Self::zeros(self.dim);
        let keys: std::collections::BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        for &(r, c) in keys {
            let a = self.entries.get(&(r, c)).unwrap_or(&zero);
            let b = other.entries.get(&(r, c)).unwrap_or(&zero);
            out.set(r, c, f(a, b));
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.plus(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.minus(b))
    }

    pub fn scale(&self, s: Scalar) -> Self {
        self.map(|v| v.scaled(s))
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        let mut out = SquareMatrix::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.set(r, c, f(v));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..n {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn max_magnitude(&self) -> f64 {
        self.entries.values().map(Coeff::magnitude).fold(0.0, f64::max)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(r, c)| r == c)
    }
}

impl SquareMatrix<Scalar> {
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::new(0.0, 0.0); self.dim]; self.dim];
        for (r, c, v) in self.entries() {
            d[r - 1][c - 1] = *v;
        }
        d
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i + 1, j + 1, *v);
            }
        }
        Ok(m)
    }
}

/// `kron(A, B)[(i-1)*dimB + k, (j-1)*dimB + l] = A[i,j] * B[k,l]`.
pub fn kron<T: Coeff>(a: &SquareMatrix<T>, b: &SquareMatrix<T>) -> SquareMatrix<T> {
    let db = b.dim();
    let mut out = SquareMatrix::zeros(a.dim() * db);
    for (i, j, x) in a.entries() {
        for (k, l, y) in b.entries() {
            out.set(tensor_index(i, k, db), tensor_index(j, l, db), x.times(y));
        }
    }
    out
}

/// The flip `P (e_i (x) e_j) = e_j (x) e_i` on an `m^2`-dimensional space.
pub fn flip_matrix<T: Coeff>(m: usize) -> SquareMatrix<T> {
    let mut p = SquareMatrix::zeros(m * m);
    for i in 1..=m {
        for j in 1..=m {
            p.set(tensor_index(j, i, m), tensor_index(i, j, m), T::one());
        }
    }
    p
}

/// Place an operator on `m^2` onto legs `(p, q)` of `m^3`, identity on the third leg.
///
/// `R12 = R (x) I`, `R23 = I (x) R`, `R13 = (P (x) I)(I (x) R)(P (x) I)`.
pub fn embed_pair<T: Coeff>(r: &SquareMatrix<T>, legs: (usize, usize), m: usize) -> Result<SquareMatrix<T>> {
    if r.dim() != m * m {
        return Err(Error::DimensionMismatch {
            expected: m * m,
            found: r.dim(),
        });
    }
    let id = SquareMatrix::identity(m);
    match legs {
        (1, 2) => Ok(kron(r, &id)),
        (2, 3) => Ok(kron(&id, r)),
        (1, 3) => {
            let pi = kron(&flip_matrix::<T>(m), &id);
            pi.mul(&kron(&id, r))?.mul(&pi)
        }
        other => Err(Error::InvalidInput(format!(
            "legs must be (1,2), (1,3) or (2,3), got {other:?}"
        ))),
    }
}

/// LU with partial pivoting on a dense copy; fails if a pivot drops to `tol` or below.
pub fn inverse(a: &SquareMatrix<Scalar>, tol: f64) -> Result<SquareMatrix<Scalar>> {
    let n = a.dim();
    let mut lu = a.to_dense();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let (p, pivot) = (k..n)
            .map(|i| (i, lu[i][k].norm()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot <= tol {
            return Err(Error::SingularMatrix { pivot });
        }
        lu.swap(k, p);
        perm.swap(k, p);
        for i in k + 1..n {
            let f = lu[i][k] / lu[k][k];
            lu[i][k] = f;
            for j in k + 1..n {
                let t = lu[k][j];
                lu[i][j] -= f * t;
            }
        }
    }
    let mut inv = vec![vec![Scalar::new(0.0, 0.0); n]; n];
    for col in 0..n {
        // solve L y = P e_col, then U x = y
        let mut x: Vec<Scalar> = (0..n)
            .map(|i| Scalar::new(if perm[i] == col { 1.0 } else { 0.0 }, 0.0))
            .collect();
        for i in 0..n {
            for j in 0..i {
                let t = lu[i][j] * x[j];
                x[i] -= t;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = lu[i][j] * x[j];
                x[i] -= t;
            }
            x[i] /= lu[i][i];
        }
        for i in 0..n {
            inv[i][col] = x[i];
        }
    }
    SquareMatrix::from_dense(&inv)
}

/// `max |A - B|` over entries, relative to `max(1, largest entry of A or B)`.
///
/// For polynomial entries the magnitude is the largest coefficient modulus.
pub fn residual_norm<T: Coeff>(a: &SquareMatrix<T>, b: &SquareMatrix<T>) -> Result<f64> {
    let diff = a.sub(b)?;
    let scale = 1f64.max(a.max_magnitude()).max(b.max_magnitude());
    Ok(diff.max_magnitude() / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{c, real, LaurentPoly};

    fn unit(m: usize, i: usize, j: usize) -> SquareMatrix<Scalar> {
        SquareMatrix::from_entries(m, [(i, j, real(1.0))]).unwrap()
    }

    fn diag(v: &[f64]) -> SquareMatrix<Scalar> {
        SquareMatrix::from_diag(v.iter().map(|&x| real(x)).collect())
    }

    #[test]
    fn kron_examples() {
        let i2 = SquareMatrix::<Scalar>::identity(2);
        assert_eq!(kron(&i2, &i2), SquareMatrix::identity(4));

        let k = kron(&unit(2, 1, 2), &unit(2, 2, 1));
        assert_eq!(k.nnz(), 1);
        assert_eq!(k.get(2, 3), real(1.0));

        let k = kron(&diag(&[2.0, 3.0]), &diag(&[5.0, 7.0]));
        assert_eq!(k, diag(&[10.0, 14.0, 15.0, 21.0]));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip_matrix::<Scalar>(1), SquareMatrix::identity(1));
        let p = flip_matrix::<Scalar>(2);
        let expected =
            SquareMatrix::from_entries(4, [(1, 1, real(1.0)), (2, 3, real(1.0)), (3, 2, real(1.0)), (4, 4, real(1.0))])
                .unwrap();
        assert_eq!(p, expected);
        for m in 2..=5 {
            let p = flip_matrix::<Scalar>(m);
            assert_eq!(p.mul(&p).unwrap(), SquareMatrix::identity(m * m));
        }
    }

    #[test]
    fn embed_examples() {
        for m in 2..=3 {
            let id = SquareMatrix::<Scalar>::identity(m * m);
            assert_eq!(embed_pair(&id, (1, 3), m).unwrap(), SquareMatrix::identity(m * m * m));
        }
        // P on legs (1,3) sends e1 (x) e2 (x) e2 to e2 (x) e2 (x) e1
        let p13 = embed_pair(&flip_matrix::<Scalar>(2), (1, 3), 2).unwrap();
        let src = tensor_index(tensor_index(1, 2, 2), 2, 2);
        let dst = tensor_index(tensor_index(2, 2, 2), 1, 2);
        assert_eq!(p13.get(dst, src), real(1.0));
        assert_eq!(p13.entries().filter(|&(_, c, _)| c == src).count(), 1);

        let r = SquareMatrix::from_entries(4, [(1, 1, c(1.0, 2.0)), (3, 2, real(-4.0)), (4, 1, real(0.5))]).unwrap();
        assert_eq!(embed_pair(&r, (1, 2), 2).unwrap(), kron(&r, &SquareMatrix::identity(2)));
        assert!(matches!(embed_pair(&r, (1, 2), 3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(&SquareMatrix::<Scalar>::identity(3), 1e-12).unwrap(), SquareMatrix::identity(3));
        let inv = inverse(&diag(&[2.0, 4.0]), 1e-12).unwrap();
        assert!(residual_norm(&inv, &diag(&[0.5, 0.25])).unwrap() <= 1e-15);
        let err = inverse(&diag(&[1.0, 0.0]), 1e-12).unwrap_err();
        assert!(matches!(err, Error::SingularMatrix { pivot } if pivot == 0.0));
    }

    #[test]
    fn residual_examples() {
        let a = diag(&[1.0, 3.0]);
        assert_eq!(residual_norm(&a, &a).unwrap(), 0.0);
        let i = SquareMatrix::<Scalar>::identity(2);
        assert_eq!(residual_norm(&i, &i.scale(real(2.0))).unwrap(), 0.5);
        let p = SquareMatrix::<LaurentPoly>::identity(2);
        assert_eq!(residual_norm(&p, &p).unwrap(), 0.0);
        assert!(residual_norm(&i, &SquareMatrix::identity(3)).is_err());
    }

    #[test]
    fn out_of_range_entries_rejected() {
        assert!(SquareMatrix::from_entries(2, [(0, 1, real(1.0))]).is_err());
        assert!(SquareMatrix::from_entries(2, [(1, 3, real(1.0))]).is_err());
    }
}
