//! Dense complex linear algebra helpers shared by the algebra modules.

use nalgebra::{DMatrix, DVector, Dyn, Schur, SVD};
use num_complex::Complex64;

use crate::error::{AlgebraError, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

const SCHUR_MAX_ITER: usize = 10_000;
const SVD_MAX_ITER: usize = 10_000;

/// Largest and smallest singular values of a square or rectangular matrix.
pub fn singular_value_extremes(m: &CMatrix) -> (f64, f64) {
    if m.is_empty() {
        return (0.0, 0.0);
    }
    let svd = SVD::try_new(m.clone(), false, false, f64::EPSILON, SVD_MAX_ITER)
        .unwrap_or_else(|| SVD::new(m.clone(), false, false));
    let sv = svd.singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    (max, min)
}

/// Operator 2-norm.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    singular_value_extremes(m).0
}

/// Eigenvalues of a square complex matrix through its complex Schur form.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(AlgebraError::EigenFailure);
    }
    if let Some(schur) = Schur::try_new(m.clone(), f64::EPSILON, SCHUR_MAX_ITER) {
        return Ok(schur_diagonal(schur));
    }
    // The shifted QR iteration can stall on exact permutation matrices; a
    // fixed Householder similarity breaks that structure.
    for attempt in 1..=3 {
        let h = householder(n, attempt);
        let similar = &h * m * &h;
        if let Some(schur) = Schur::try_new(similar, f64::EPSILON, SCHUR_MAX_ITER) {
            return Ok(schur_diagonal(schur));
        }
    }
    Err(AlgebraError::EigenFailure)
}

fn schur_diagonal(schur: Schur<Complex64, Dyn>) -> Vec<Complex64> {
    let (_, t) = schur.unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Unitary, Hermitian reflector `I - 2 v v^H / |v|^2` for a fixed irregular `v`.
fn householder(n: usize, attempt: usize) -> CMatrix {
    let a = attempt as f64;
    let v = CVector::from_fn(n, |k, _| {
        let k = k as f64;
        Complex64::new(1.0 + 0.37 * a * k, 0.11 * k * k + 0.23 * a)
    });
    let scale = 2.0 / v.norm_squared();
    CMatrix::identity(n, n) - (&v * v.adjoint()) * Complex64::new(scale, 0.0)
}

/// Symmetric Hausdorff distance between two finite point sets.
///
/// Two empty sets are at distance zero; an empty set is infinitely far from a
/// nonempty one.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

/// max over `from` of the distance to the nearest point of `to`.
pub fn directed_hausdorff(from: &[Complex64], to: &[Complex64]) -> f64 {
    from.iter().map(|p| to.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max)
}

/// Euclidean norm of a coefficient vector.
pub fn vec_norm(v: &CVector) -> f64 {
    v.norm()
}

pub fn is_finite(z: &Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Lexicographic (re, im) ordering used wherever point sets are serialized.
pub fn lex_cmp(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}
