//! Test-only oracles and fixtures. Nothing here calls the library's eigenvalue
//! or root-finding paths.

#![allow(dead_code)]

use finalg::catalog::{self, cyclic_group, function_algebra, matrix_algebra, semigroup_algebra, symmetric_group};
use finalg::linalg::{CMatrix, CVector};
use finalg::{Algebra, Complex64};
use nalgebra::SVD;
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Characteristic polynomial `det(lambda I - A)` by the Faddeev-LeVerrier
/// recurrence, ascending coefficients, monic.
pub fn charpoly(a: &CMatrix) -> Vec<Complex64> {
    let n = a.nrows();
    let mut coeffs = vec![c(0.0, 0.0); n + 1];
    coeffs[n] = c(1.0, 0.0);
    let mut m = CMatrix::zeros(n, n);
    for k in 1..=n {
        m = a * &m + CMatrix::identity(n, n) * coeffs[n - k + 1];
        let am = a * &m;
        coeffs[n - k] = -am.trace() / k as f64;
    }
    coeffs
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(c(0.0, 0.0), |acc, &k| acc * z + k)
}

/// All roots of a polynomial (ascending coefficients) by Aberth-Ehrlich
/// simultaneous iteration.
pub fn aberth_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|k| k / lead).collect();
    let deriv: Vec<Complex64> = (1..=n).map(|k| monic[k] * k as f64).collect();
    let radius = 1.0 + monic[..n].iter().map(|k| k.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(0.5 * radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let p = horner(&monic, z[i]);
            let dp = horner(&deriv, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| c(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (c(1.0, 0.0) - ratio * sum);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if max_step < 1e-16 * radius {
            break;
        }
    }
    z
}

/// Eigenvalues by the characteristic-polynomial route.
pub fn oracle_eigenvalues(a: &CMatrix) -> Vec<Complex64> {
    if a.nrows() == 1 {
        return vec![a[(0, 0)]];
    }
    aberth_roots(&charpoly(a))
}

/// Numerical rank by singular values.
pub fn rank(m: &CMatrix, rtol: f64) -> usize {
    let sv = SVD::new(m.clone(), false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > rtol * max).count()
}

/// Degree of the minimal polynomial of a square matrix: the rank of the
/// Krylov matrix whose columns are vec(I), vec(T), ..., vec(T^n).
pub fn minimal_polynomial_degree(t: &CMatrix, rtol: f64) -> usize {
    let n = t.nrows();
    let mut cols = Vec::with_capacity(n + 1);
    let mut power = CMatrix::identity(n, n);
    for _ in 0..=n {
        cols.push(CVector::from_iterator(n * n, power.iter().cloned()));
        power = &power * t;
    }
    rank(&CMatrix::from_columns(&cols), rtol)
}

pub fn unit_disk<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.random::<f64>().sqrt(), 2.0 * std::f64::consts::PI * rng.random::<f64>())
}

pub fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| unit_disk(rng))
}

/// Random Hermitian matrix; with `repeated`, one eigenvalue is doubled so the
/// minimal polynomial has degree below n.
pub fn random_hermitian<R: Rng>(n: usize, repeated: bool, rng: &mut R) -> CMatrix {
    if !repeated || n < 2 {
        let m = random_matrix(n, rng);
        return (&m + m.adjoint()) * c(0.5, 0.0);
    }
    let q = random_matrix(n, rng).qr().q();
    let mut eig: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
    eig[1] = eig[0];
    let d = CMatrix::from_diagonal(&CVector::from_iterator(n, eig.iter().map(|&r| c(r, 0.0))));
    &q * d * q.adjoint()
}

/// The catalog algebras named in the acceptance criteria.
pub fn catalog_algebras() -> Vec<(String, Algebra)> {
    let mut out = Vec::new();
    for n in [1, 2, 3] {
        out.push((format!("M{n}"), matrix_algebra(n).unwrap()));
    }
    for size in [1, 2, 5, 8] {
        let labels: Vec<String> = (0..size).map(|i| format!("x{i}")).collect();
        out.push((format!("F{size}"), function_algebra(&labels).unwrap()));
    }
    for n in [2, 4, 6] {
        out.push((format!("Z/{n}"), semigroup_algebra(&cyclic_group(n)).unwrap()));
    }
    out.push(("S3".into(), semigroup_algebra(&symmetric_group(3)).unwrap()));
    out
}

pub fn s3() -> (catalog::SemigroupTable, Algebra) {
    let t = symmetric_group(3);
    let a = semigroup_algebra(&t).unwrap();
    (t, a)
}

/// `||a - b|| <= tol * max(||a||, ||b||, 1)`.
pub fn rel_close(a: &finalg::Element, b: &finalg::Element, tol: f64) -> bool {
    rel_err(a, b) <= tol
}

pub fn rel_err(a: &finalg::Element, b: &finalg::Element) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}
