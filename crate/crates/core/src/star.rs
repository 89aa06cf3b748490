//! Involutions and binvolutions.
//!
//! A conjugate-linear map on the algebra is stored as one matrix `S` acting
//! after coefficient conjugation: `coeffs(x*) = S conj(coeffs(x))`. Additivity
//! and `(lambda x)* = conj(lambda) x*` hold by construction; the remaining
//! axioms are matrix identities or finite checks on basis pairs:
//!
//! - `(x*)* = x` iff `S conj(S) = I`;
//! - involution: `(x y)* = y* x*`; binvolution: `(x y)* = x* y*`. Both laws are
//!   sesquilinear in `(x, y)` so checking basis pairs is sufficient.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::catalog::{validate_semigroup, SemigroupTable};
use crate::error::{AlgebraError, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::sample;

/// Default tolerance for classification and self-adjointness checks.
pub const DEFAULT_STAR_TOL: f64 = 1e-10;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeclaredKind {
    Involution,
    Binvolution,
    Unspecified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarKind {
    Involution,
    Binvolution,
    /// Both product laws hold; this happens when the algebra is commutative.
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StarStructure {
    s: CMatrix,
    declared: DeclaredKind,
}

impl StarStructure {
    pub fn new(s: CMatrix, declared: DeclaredKind) -> Result<Self> {
        if !s.is_square() || s.nrows() == 0 {
            return Err(AlgebraError::InvalidStructure("star matrix must be square".into()));
        }
        if !s.iter().all(linalg::is_finite) {
            return Err(AlgebraError::NonFinite("star matrix"));
        }
        Ok(Self { s, declared })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.s
    }

    pub fn dim(&self) -> usize {
        self.s.nrows()
    }

    pub fn declared_kind(&self) -> DeclaredKind {
        self.declared
    }

    /// `||S conj(S) - I||_F`.
    pub fn involutive_deviation(&self) -> f64 {
        let d = self.dim();
        (&self.s * self.s.map(|z| z.conj()) - CMatrix::identity(d, d)).norm()
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), got: x.dim() });
        }
        Ok(Element::from_vector(&self.s * x.coeffs().map(|z| z.conj())))
    }

    pub fn is_self_adjoint(&self, x: &Element, tol: f64) -> Result<bool> {
        Ok((&self.apply(x)? - x).norm() <= tol * (1.0 + x.norm()))
    }
}

pub fn apply_star(s: &StarStructure, x: &Element) -> Result<Element> {
    s.apply(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarClassification {
    pub involutive: bool,
    pub antimultiplicative: bool,
    pub multiplicative: bool,
    pub kind: StarKind,
    /// Whether the algebra itself is commutative; when it is, the two product
    /// laws coincide and a star satisfying one satisfies both.
    pub commutative_algebra: bool,
    pub involutive_deviation: f64,
    pub antimultiplicative_residual: f64,
    pub multiplicative_residual: f64,
}

impl StarClassification {
    pub fn is_involution(&self) -> bool {
        matches!(self.kind, StarKind::Involution | StarKind::Both)
    }

    pub fn is_binvolution(&self) -> bool {
        matches!(self.kind, StarKind::Binvolution | StarKind::Both)
    }
}

/// Checks `(x*)* = x` and both product laws exhaustively over basis pairs.
pub fn classify_star(a: &Algebra, s: &StarStructure, tol: f64) -> Result<StarClassification> {
    let d = a.dim();
    if s.dim() != d {
        return Err(AlgebraError::DimensionMismatch { expected: d, got: s.dim() });
    }
    let involutive_deviation = s.involutive_deviation();
    let starred: Vec<Element> = (0..d).map(|i| s.apply(&a.basis(i))).collect::<Result<_>>()?;
    let mut anti: f64 = 0.0;
    let mut mult: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            let prod_star = s.apply(&a.multiply(&a.basis(i), &a.basis(j))?)?;
            let reversed = a.multiply(&starred[j], &starred[i])?;
            let same_order = a.multiply(&starred[i], &starred[j])?;
            anti = anti.max((&prod_star - &reversed).norm());
            mult = mult.max((&prod_star - &same_order).norm());
        }
    }
    let involutive = involutive_deviation <= tol;
    let antimultiplicative = anti <= tol;
    let multiplicative = mult <= tol;
    let kind = match (involutive, antimultiplicative, multiplicative) {
        (true, true, true) => StarKind::Both,
        (true, true, false) => StarKind::Involution,
        (true, false, true) => StarKind::Binvolution,
        _ => StarKind::Neither,
    };
    Ok(StarClassification {
        involutive,
        antimultiplicative,
        multiplicative,
        kind,
        commutative_algebra: a.is_commutative(tol),
        involutive_deviation,
        antimultiplicative_residual: anti,
        multiplicative_residual: mult,
    })
}

/// Gram matrix of a Hermitian form `<v, w> = w^H G v`, linear in `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianForm {
    g: CMatrix,
}

impl HermitianForm {
    /// Validates `G = G^H` and nondegeneracy with relative tolerance 1e-10.
    pub fn new(g: CMatrix) -> Result<Self> {
        Self::with_tol(g, 1e-10)
    }

    pub fn with_tol(g: CMatrix, rtol: f64) -> Result<Self> {
        if !g.is_square() || g.nrows() == 0 {
            return Err(AlgebraError::InvalidStructure("Gram matrix must be square".into()));
        }
        let scale = g.norm().max(f64::MIN_POSITIVE);
        let deviation = (&g - g.adjoint()).norm();
        if deviation > rtol * scale {
            return Err(AlgebraError::NotHermitian { deviation });
        }
        let (smax, smin) = linalg::singular_value_extremes(&g);
        if smin <= rtol * smax {
            return Err(AlgebraError::Degenerate { ratio: if smax > 0.0 { smin / smax } else { 0.0 } });
        }
        Ok(Self { g })
    }

    pub fn gram(&self) -> &CMatrix {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.nrows()
    }

    /// `<v, w> = w^H G v`.
    pub fn pair(&self, v: &CVector, w: &CVector) -> Complex64 {
        (w.adjoint() * &self.g * v)[(0, 0)]
    }
}

fn matrix_unit_star<F>(n: usize, declared: DeclaredKind, image: F) -> Result<StarStructure>
where
    F: Fn(&CMatrix) -> CMatrix,
{
    // Column idx of S is the image of E_ab (real, so conj(E_ab) = E_ab).
    let d = n * n;
    let mut s = CMatrix::zeros(d, d);
    for idx in 0..d {
        let mut unit = CMatrix::zeros(n, n);
        unit[(idx / n, idx % n)] = ONE;
        let img = image(&unit);
        for k in 0..d {
            s[(k, idx)] = img[(k / n, k % n)];
        }
    }
    StarStructure::new(s, declared)
}

/// The adjoint on `matrix_algebra(n)` for a nondegenerate Hermitian form:
/// `T* = G^{-1} T^H G`, the unique operator with `<T v, w> = <v, T* w>`.
pub fn adjoint_from_form(n: usize, g: &HermitianForm) -> Result<StarStructure> {
    if n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    if g.dim() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: g.dim() });
    }
    let g_inv = g.gram().clone().try_inverse().ok_or(AlgebraError::Degenerate { ratio: 0.0 })?;
    // conj(T) -> G^{-1} conj(T)^T G, so that applied after conjugation it gives G^{-1} T^H G.
    matrix_unit_star(n, DeclaredKind::Involution, |m| &g_inv * m.transpose() * g.gram())
}

/// Conjugate transpose on `matrix_algebra(n)`; the adjoint for the standard inner product.
pub fn conj_transpose_star(n: usize) -> Result<StarStructure> {
    matrix_unit_star(n, DeclaredKind::Involution, |m| m.transpose())
}

/// Entrywise complex conjugation on `matrix_algebra(n)`.
pub fn entrywise_conj_binvolution(n: usize) -> Result<StarStructure> {
    if n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    StarStructure::new(CMatrix::identity(n * n, n * n), DeclaredKind::Binvolution)
}

/// Coefficientwise conjugation on any algebra (`S = I`).
pub fn conj_star(a: &Algebra) -> StarStructure {
    let d = a.dim();
    StarStructure::new(CMatrix::identity(d, d), DeclaredKind::Unspecified).expect("identity is valid")
}

/// `f -> (a -> conj f(a^{-1}))` on the convolution algebra of a group.
pub fn group_involution(t: &SemigroupTable) -> Result<StarStructure> {
    if !validate_semigroup(t).is_group {
        return Err(AlgebraError::NotAGroup);
    }
    let inverses = t.inverses().ok_or(AlgebraError::NotAGroup)?;
    let n = t.len();
    let mut s = CMatrix::zeros(n, n);
    for (a, &inv) in inverses.iter().enumerate() {
        s[(inv, a)] = ONE;
    }
    StarStructure::new(s, DeclaredKind::Involution)
}

fn require_involutive(s: &StarStructure, tol: f64) -> Result<()> {
    let deviation = s.involutive_deviation();
    if deviation > tol {
        return Err(AlgebraError::NotInvolutive { deviation });
    }
    Ok(())
}

/// Unique decomposition `x = h + i k` with `h = (x + x*)/2`, `k = (x - x*)/(2i)`
/// both self-adjoint. Only `(x*)* = x` is needed, not a product law.
pub fn selfadjoint_parts(s: &StarStructure, x: &Element, tol: f64) -> Result<(Element, Element)> {
    require_involutive(s, tol)?;
    let xs = s.apply(x)?;
    let h = (x + &xs).scale(Complex64::new(0.5, 0.0));
    let k = (x - &xs).scale(Complex64::new(0.0, -0.5));
    Ok((h, k))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedSubalgebra {
    /// Orthonormal (Euclidean coefficient inner product) basis of span{e, x, x^2, ...}.
    pub basis: Vec<Element>,
    pub star_closed: bool,
    pub commutative: bool,
}

impl GeneratedSubalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn orthogonalize(v: &mut CVector, basis: &[Element]) {
    // two passes of modified Gram-Schmidt
    for _ in 0..2 {
        for q in basis {
            let proj = q.coeffs().dotc(v);
            *v -= q.coeffs() * proj;
        }
    }
}

/// The subalgebra generated by `e` and `x`, i.e. the span of `e, x, x^2, ...`.
///
/// Built as a Krylov space: each new direction is `x q` for the last basis
/// vector `q`, orthogonalized against the current basis, and growth stops once
/// that residual is at most `tol * ||x q||`.
pub fn generated_star_subalgebra(a: &Algebra, s: &StarStructure, x: &Element, tol: f64) -> Result<GeneratedSubalgebra> {
    let e = a.identity()?;
    a.check(x)?;
    let d = a.dim();
    let mut basis = vec![e.scale(Complex64::new(1.0 / e.norm(), 0.0))];
    while basis.len() < d {
        let next = a.multiply(x, basis.last().expect("nonempty"))?;
        let scale = next.norm();
        if scale == 0.0 {
            break;
        }
        let mut v = next.into_vector();
        orthogonalize(&mut v, &basis);
        let residual = v.norm();
        if residual <= tol * scale {
            break;
        }
        basis.push(Element::from_vector(v.unscale(residual)));
    }

    let mut star_closed = true;
    for q in &basis {
        let mut v = s.apply(q)?.into_vector();
        let norm = v.norm();
        orthogonalize(&mut v, &basis);
        if v.norm() > tol * norm.max(1.0) {
            star_closed = false;
            break;
        }
    }

    let mut commutative = true;
    'outer: for (i, p) in basis.iter().enumerate() {
        for q in &basis[i + 1..] {
            let pq = a.multiply(p, q)?;
            let qp = a.multiply(q, p)?;
            if (&pq - &qp).norm() > tol * pq.norm().max(1.0) {
                commutative = false;
                break 'outer;
            }
        }
    }
    Ok(GeneratedSubalgebra { basis, star_closed, commutative })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsometryReport {
    pub max_ratio_dev: f64,
    pub ok: bool,
    pub samples: usize,
}

/// Sampling check of `||x*|| = ||x||` for the algebra norm (operator norm of
/// `L_x`). The identity, when there is one, is the first sample; the rest have
/// coefficients uniform in the unit disk.
pub fn check_star_isometry<R: Rng + ?Sized>(
    a: &Algebra,
    s: &StarStructure,
    samples: usize,
    tol: f64,
    rng: &mut R,
) -> Result<IsometryReport> {
    let mut xs = Vec::with_capacity(samples);
    if let Ok(e) = a.identity() {
        xs.push(e.clone());
    }
    while xs.len() < samples {
        xs.push(sample::element(a.dim(), rng));
    }
    let mut worst: f64 = 0.0;
    let mut used = 0;
    for x in xs.iter().take(samples) {
        let norm = a.norm(x)?;
        if norm == 0.0 {
            continue;
        }
        let star_norm = a.norm(&s.apply(x)?)?;
        worst = worst.max((star_norm / norm - 1.0).abs());
        used += 1;
    }
    Ok(IsometryReport { max_ratio_dev: worst, ok: worst <= tol, samples: used })
}
