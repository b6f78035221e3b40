//! Shared test support: an independent dense construction of R, and random parameter draws.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use uqgl2::representations::{admissible_roots, GaugeChoice, HighestWeightRep};
use uqgl2::rings::{QValue, Scalar};
use uqgl2::SquareMatrix;

pub type Dense = Vec<Vec<Complex64>>;

pub fn zeros(n: usize) -> Dense {
    vec![vec![Complex64::new(0.0, 0.0); n]; n]
}

pub fn eye(n: usize) -> Dense {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    m
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn kron(a: &Dense, b: &Dense) -> Dense {
    let (na, nb) = (a.len(), b.len());
    let mut out = zeros(na * nb);
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn add_scaled(acc: &mut Dense, c: Complex64, m: &Dense) {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (x, y) in ra.iter_mut().zip(rm) {
            *x += c * y;
        }
    }
}

pub fn to_dense(m: &SquareMatrix<Scalar>) -> Dense {
    m.to_dense()
}

/// Largest entrywise difference relative to `max(1, largest entry)`.
pub fn rel_diff(a: &Dense, b: &Dense) -> f64 {
    let mut diff: f64 = 0.0;
    let mut scale: f64 = 1.0;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            diff = diff.max((x - y).norm());
            scale = scale.max(x.norm()).max(y.norm());
        }
    }
    diff / scale
}

fn plain_q_int(n: u32, q: Complex64) -> Complex64 {
    (q.powi(n as i32) - q.powi(-(n as i32))) / (q - q.inv())
}

/// Direct image of the universal R:
/// `R0 * sum_n c_n (g X-)^n (x) (g' K'^-1 X+)^n`, where the first leg carries
/// `g K X-` and `c_n = (1-q^2)^n q^{-n(n-1)/2} / [n]_q!`.
pub fn direct_r(rep1: &HighestWeightRep, rep2: &HighestWeightRep) -> Dense {
    let q = rep1.q().value;
    let (m1, m2) = (rep1.m(), rep2.m());
    let lower = |rep: &HighestWeightRep| {
        let m = rep.m();
        let mut x = zeros(m);
        for i in 0..m - 1 {
            x[i + 1][i] = rep.b()[i];
        }
        x
    };
    let raise = |rep: &HighestWeightRep| {
        let m = rep.m();
        let mut x = zeros(m);
        for i in 0..m - 1 {
            x[i][i + 1] = rep.a()[i];
        }
        x
    };
    let half_cartan = |rep: &HighestWeightRep, inverse: bool| {
        let m = rep.m();
        let mut d = zeros(m);
        for i in 0..m {
            let v = rep.sigma().powi(m as i32 - 1) * q.powi(-(i as i32));
            d[i][i] = if inverse { v.inv() } else { v };
        }
        d
    };
    let mut first = matmul(&half_cartan(rep1, false), &lower(rep1));
    first.iter_mut().flatten().for_each(|x| *x *= rep1.g());
    let mut second = matmul(&half_cartan(rep2, true), &raise(rep2));
    second.iter_mut().flatten().for_each(|x| *x *= rep2.g());

    let mut sum = zeros(m1 * m2);
    let (mut p1, mut p2) = (eye(m1), eye(m2));
    let mut fact = Complex64::new(1.0, 0.0);
    for n in 0..m1.min(m2) {
        if n > 0 {
            fact *= plain_q_int(n as u32, q);
            p1 = matmul(&p1, &first);
            p2 = matmul(&p2, &second);
        }
        let c = (1.0 - q * q).powi(n as i32) * q.powf(-((n * n.saturating_sub(1)) as f64) / 2.0) / fact;
        add_scaled(&mut sum, c, &kron(&p1, &p2));
    }

    let (s1, s2) = (rep1.s(), rep2.s());
    let (gm1, gm2) = (rep1.gamma(), rep2.gamma());
    let mut r0 = zeros(m1 * m2);
    for i in 0..m1 {
        for j in 0..m2 {
            r0[i * m2 + j][i * m2 + j] = q.powi(-2 * (i * j) as i32)
                * (s2.powi(m2 as i32 - 1) / gm2).powi(i as i32 + 1)
                * (s1.powi(m1 as i32 - 1) * gm1).powi(j as i32 + 1);
        }
    }
    matmul(&r0, &sum)
}

/// Uniform on the annulus `0.5 <= |z| <= 2` with uniform phase.
pub fn annulus(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..2.0 * PI))
}

/// A generic q: on the annulus and away from the unit circle, so no [n]_q vanishes.
pub fn generic_q(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = if rng.gen_bool(0.5) {
        rng.gen_range(0.5..0.85)
    } else {
        rng.gen_range(1.2..2.0)
    };
    Complex64::from_polar(r, rng.gen_range(0.0..2.0 * PI))
}

/// `sigma` with `s/q` a random `2(m-1)`-th root of unity.
pub fn generic_sigma(rng: &mut ChaCha8Rng, m: usize, q: Complex64) -> Complex64 {
    let n = 2 * (m - 1);
    let k = rng.gen_range(0..n);
    let ratio = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
    (q * ratio).sqrt()
}

pub fn primitive_root(rng: &mut ChaCha8Rng, m: usize) -> QValue {
    let roots: Vec<_> = admissible_roots(m).into_iter().filter(|r| r.primitive).collect();
    roots[rng.gen_range(0..roots.len())].q
}

pub fn rep(m: usize, q: QValue, sigma: Complex64, g: Complex64) -> HighestWeightRep {
    HighestWeightRep::new(m, q, sigma, g, &GaugeChoice::UnitA, 1e-12).expect("admissible parameters")
}

/// Nonzero `a_i` drawn from the annulus, `b_i = product / a_i`.
pub fn random_gauge(rng: &mut ChaCha8Rng, products: &[Complex64]) -> GaugeChoice {
    let a: Vec<Complex64> = products.iter().map(|_| annulus(rng)).collect();
    let b = products.iter().zip(&a).map(|(p, x)| p / x).collect();
    GaugeChoice::Explicit { a, b }
}
