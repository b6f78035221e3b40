//! q-deformed integers and roots of unity.
//!
//! Conventions: `[n]_q = (q^n - q^-n)/(q - q^-1)` and
//! `{n}_{q^2} = (1 - q^{2n})/(1 - q^2) = q^{n-1}[n]_q`, with `{0}_{q^2}! = [0]_q! = 1`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::scalar::{c, ipow, is_negligible, powi, real, Scalar};

/// The deformation parameter, optionally tagged with its multiplicative order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QValue {
    pub value: Scalar,
    /// Present when q was built as an exact root of unity: `q^order = 1`.
    pub order: Option<u32>,
}

impl QValue {
    /// A numeric q with no order information.
    pub fn generic(value: Scalar) -> Self {
        QValue { value, order: None }
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.order.is_some()
    }

    /// Order of q^2 when q is a root of unity.
    pub fn order_of_square(&self) -> Option<u32> {
        self.order.map(|n| if n % 2 == 0 { n / 2 } else { n })
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `exp(2 pi i k / n)`, reduced by `gcd(k, n)`; order is `n / gcd(k, n)`.
///
/// Multiples of a quarter turn are produced exactly (no `cos(pi/2) = 6e-17` residue).
pub fn root_of_unity(k: i64, n: u32) -> QValue {
    assert!(n >= 1, "root_of_unity needs n >= 1");
    let n64 = n as u64;
    let k = k.rem_euclid(n as i64) as u64;
    let g = gcd(k, n64);
    let (num, den) = (k / g, n64 / g);
    let value = if (4 * num) % den == 0 {
        match (4 * num) / den {
            0 => real(1.0),
            1 => c(0.0, 1.0),
            2 => real(-1.0),
            _ => c(0.0, -1.0),
        }
    } else {
        let theta = 2.0 * PI * num as f64 / den as f64;
        c(theta.cos(), theta.sin())
    };
    QValue {
        value,
        order: Some(den as u32),
    }
}

/// `[n]_q`; at `|q^2 - 1| <= tol` returns the continuous limit `n q^{n-1}` (`= n` at q = 1).
pub fn q_integer(n: u32, q: Scalar, tol: f64) -> Scalar {
    if n == 0 {
        return real(0.0);
    }
    let q2 = q * q;
    if is_negligible(q2 - 1.0, tol) {
        return ipow(q, n - 1) * n as f64;
    }
    (ipow(q, n) - powi(q, -(n as i32))) / (q - q.inv())
}

/// `[n]_q!`.
pub fn q_factorial(n: u32, q: Scalar, tol: f64) -> Scalar {
    (1..=n).fold(real(1.0), |acc, j| acc * q_integer(j, q, tol))
}

/// `{n}_{q^2} = 1 + q^2 + ... + q^{2(n-1)}`; division-free, so well defined at q^2 = 1.
pub fn q_brace(n: u32, q: Scalar) -> Scalar {
    let q2 = q * q;
    let mut acc = real(0.0);
    let mut p = real(1.0);
    for _ in 0..n {
        acc += p;
        p *= q2;
    }
    acc
}

/// `{n}_{q^2}! = prod_{j=1}^n {j}_{q^2}`.
pub fn q_brace_factorial(n: u32, q: Scalar) -> Scalar {
    (1..=n).fold(real(1.0), |acc, j| acc * q_brace(j, q))
}
