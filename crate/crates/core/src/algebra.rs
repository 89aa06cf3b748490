//! Algebras given by structure constants, their elements, and the left regular
//! representation.
//!
//! A basis `b_0, ..., b_{d-1}` is fixed and the product is encoded by the tensor
//! `c[i][j][k]` with `b_i b_j = sum_k c[i][j][k] b_k`. Every other module lowers
//! its constructions to this form.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::SVD;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, CMatrix, CVector};

/// Element of an algebra: a coefficient vector over its basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    coeffs: CVector,
}

impl Element {
    pub fn from_vec(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs: CVector::from_vec(coeffs) }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::from_vec(coeffs.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn from_vector(coeffs: CVector) -> Self {
        Self { coeffs }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { coeffs: CVector::zeros(dim) }
    }

    /// The basis vector `b_index` of a `dim`-dimensional algebra.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut coeffs = CVector::zeros(dim);
        coeffs[index] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &CVector {
        &self.coeffs
    }

    pub fn into_vector(self) -> CVector {
        self.coeffs
    }

    pub fn to_vec(&self) -> Vec<Complex64> {
        self.coeffs.iter().cloned().collect()
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    /// Entrywise complex conjugate of the coefficients.
    pub fn conj(&self) -> Self {
        Self { coeffs: self.coeffs.map(|z| z.conj()) }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { coeffs: self.coeffs.map(|z| z * s) }
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(linalg::is_finite)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element { coeffs: &self.coeffs + &rhs.coeffs }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        Element { coeffs: self.coeffs + rhs.coeffs }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element { coeffs: &self.coeffs - &rhs.coeffs }
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        Element { coeffs: self.coeffs - rhs.coeffs }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { coeffs: -self.coeffs }
    }
}

impl Mul<&Element> for Complex64 {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Mul<Element> for Complex64 {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(self)
    }
}

/// The identity found by [`Algebra::find_identity`] together with the worst
/// violation of `e b = b = b e` over basis elements.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityElement {
    pub element: Element,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AssociativityReport {
    pub max_residual: f64,
    pub ok: bool,
}

/// A finite-dimensional complex algebra defined by structure constants.
///
/// Immutable after construction. The identity is searched for once with the
/// default tolerance and cached; algebras without one are still valid values,
/// but operations that need `e` report [`AlgebraError::NoIdentity`].
#[derive(Debug, Clone)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    // c[i][j][k] at (i * dim + j) * dim + k
    tensor: Vec<Complex64>,
    // nonzero (i, j, k, c) entries, in tensor order
    terms: Vec<(usize, usize, usize, Complex64)>,
    identity: std::result::Result<IdentityElement, f64>,
}

impl Algebra {
    /// Builds an algebra from a flat `dim^3` tensor indexed `[i][j][k]`.
    pub fn new(labels: Vec<String>, tensor: Vec<Complex64>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::InvalidStructure("dimension must be positive".into()));
        }
        if tensor.len() != dim * dim * dim {
            return Err(AlgebraError::InvalidStructure(format!(
                "tensor has {} entries, expected {}",
                tensor.len(),
                dim * dim * dim
            )));
        }
        if !tensor.iter().all(linalg::is_finite) {
            return Err(AlgebraError::NonFinite("structure constants"));
        }
        let terms = tensor
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Complex64::new(0.0, 0.0))
            .map(|(idx, c)| (idx / (dim * dim), (idx / dim) % dim, idx % dim, *c))
            .collect();
        let mut algebra = Self { dim, labels, tensor, terms, identity: Err(f64::INFINITY) };
        let tol = algebra.default_identity_tol();
        algebra.identity = match algebra.find_identity(tol) {
            Ok(id) => Ok(id),
            Err(AlgebraError::NoIdentity { residual }) => Err(residual),
            Err(e) => return Err(e),
        };
        Ok(algebra)
    }

    /// Builds an algebra from a rule giving each basis product `b_i b_j` as a
    /// sparse list of `(k, c)` terms.
    pub fn from_products<F>(labels: Vec<String>, mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<(usize, Complex64)>,
    {
        let d = labels.len();
        let mut tensor = vec![Complex64::new(0.0, 0.0); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in product(i, j) {
                    if k >= d {
                        return Err(AlgebraError::InvalidStructure(format!(
                            "product b_{i} b_{j} refers to basis index {k} >= {d}"
                        )));
                    }
                    tensor[(i * d + j) * d + k] += c;
                }
            }
        }
        Self::new(labels, tensor)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.tensor[(i * self.dim + j) * self.dim + k]
    }

    /// Flat tensor indexed `[i][j][k]`.
    pub fn tensor(&self) -> &[Complex64] {
        &self.tensor
    }

    /// Frobenius norm of the structure tensor.
    pub fn tensor_norm(&self) -> f64 {
        self.tensor.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `1e-9 * (1 + ||tensor||)`.
    pub fn default_identity_tol(&self) -> f64 {
        1e-9 * (1.0 + self.tensor_norm())
    }

    pub fn basis(&self, index: usize) -> Element {
        Element::basis(self.dim, index)
    }

    pub fn zero(&self) -> Element {
        Element::zeros(self.dim)
    }

    /// Wraps coefficients as an element of this algebra, checking length and finiteness.
    pub fn element(&self, coeffs: Vec<Complex64>) -> Result<Element> {
        let x = Element::from_vec(coeffs);
        self.check(&x)?;
        if !x.is_finite() {
            return Err(AlgebraError::NonFinite("element coefficients"));
        }
        Ok(x)
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: x.dim() });
        }
        Ok(())
    }

    /// `(x y)_k = sum_{i,j} x_i y_j c[i][j][k]`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        let mut out = CVector::zeros(self.dim);
        for &(i, j, k, c) in &self.terms {
            out[k] += x.coeffs[i] * y.coeffs[j] * c;
        }
        Ok(Element::from_vector(out))
    }

    /// Matrix of `y -> x y` in the basis: `L[k][j] = sum_i x_i c[i][j][k]`.
    pub fn left_regular_rep(&self, x: &Element) -> Result<CMatrix> {
        self.check(x)?;
        let mut m = CMatrix::zeros(self.dim, self.dim);
        for &(i, j, k, c) in &self.terms {
            m[(k, j)] += x.coeffs[i] * c;
        }
        Ok(m)
    }

    /// Matrix of `y -> y x` in the basis: `R[k][i] = sum_j x_j c[i][j][k]`.
    pub fn right_regular_rep(&self, x: &Element) -> Result<CMatrix> {
        self.check(x)?;
        let mut m = CMatrix::zeros(self.dim, self.dim);
        for &(i, j, k, c) in &self.terms {
            m[(k, i)] += x.coeffs[j] * c;
        }
        Ok(m)
    }

    /// Operator norm of `L_x` under the Euclidean coefficient norm. This is the
    /// default algebra norm; it is submultiplicative whenever `L` is a
    /// homomorphism.
    pub fn norm(&self, x: &Element) -> Result<f64> {
        Ok(linalg::spectral_norm(&self.left_regular_rep(x)?))
    }

    /// Solves `e b_i = b_i`, `b_i e = b_i` for all `i` in the least-squares
    /// sense. A two-sided identity is always unique, so only existence is
    /// in question.
    pub fn find_identity(&self, tol: f64) -> Result<IdentityElement> {
        let d = self.dim;
        // Row (j, k) of the left block: sum_i e_i c[i][j][k] = delta_jk.
        // Row (j, k) of the right block: sum_i e_i c[j][i][k] = delta_jk.
        let mut a = CMatrix::zeros(2 * d * d, d);
        let mut rhs = CVector::zeros(2 * d * d);
        for j in 0..d {
            for k in 0..d {
                let row_l = j * d + k;
                let row_r = d * d + j * d + k;
                for i in 0..d {
                    a[(row_l, i)] = self.structure_constant(i, j, k);
                    a[(row_r, i)] = self.structure_constant(j, i, k);
                }
                if j == k {
                    rhs[row_l] = Complex64::new(1.0, 0.0);
                    rhs[row_r] = Complex64::new(1.0, 0.0);
                }
            }
        }
        let svd = SVD::new(a, true, true);
        let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let solution = svd.solve(&rhs, 1e-12 * smax.max(f64::MIN_POSITIVE)).unwrap_or_else(|_| CVector::zeros(d));
        let candidate = Element::from_vector(solution);
        let residual = self.identity_residual(&candidate);

        // Structure constants of catalog algebras are integers and so is their
        // identity; keep the rounded vector when it is at least as good.
        let rounded = Element::from_vector(candidate.coeffs.map(|z| Complex64::new(z.re.round(), z.im.round())));
        let rounded_residual = self.identity_residual(&rounded);
        let (element, residual) =
            if rounded_residual <= residual { (rounded, rounded_residual) } else { (candidate, residual) };

        if residual <= tol && element.norm() > 0.0 {
            Ok(IdentityElement { element, residual })
        } else {
            Err(AlgebraError::NoIdentity { residual })
        }
    }

    /// `max_i max(||e b_i - b_i||, ||b_i e - b_i||)`.
    pub fn identity_residual(&self, e: &Element) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            let b = self.basis(i);
            let left = self.multiply(e, &b).expect("same dimension");
            let right = self.multiply(&b, e).expect("same dimension");
            worst = worst.max((&left - &b).norm()).max((&right - &b).norm());
        }
        worst
    }

    /// The identity found at construction with the default tolerance.
    pub fn identity(&self) -> Result<&Element> {
        self.identity.as_ref().map(|id| &id.element).map_err(|&residual| AlgebraError::NoIdentity { residual })
    }

    pub fn identity_element(&self) -> Result<&IdentityElement> {
        self.identity.as_ref().map_err(|&residual| AlgebraError::NoIdentity { residual })
    }

    /// `lambda e`.
    pub fn scalar(&self, lambda: Complex64) -> Result<Element> {
        Ok(self.identity()?.scale(lambda))
    }

    /// Exhaustive check of `(b_i b_j) b_l = b_i (b_j b_l)` over all basis triples.
    pub fn check_associativity(&self, tol: f64) -> AssociativityReport {
        let d = self.dim;
        let row = |i: usize, j: usize| &self.tensor[(i * d + j) * d..(i * d + j + 1) * d];
        let mut max_residual: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let ij = row(i, j);
                for l in 0..d {
                    let jl = row(j, l);
                    let mut diff = vec![Complex64::new(0.0, 0.0); d];
                    for k in 0..d {
                        if ij[k] != Complex64::new(0.0, 0.0) {
                            for (m, c) in row(k, l).iter().enumerate() {
                                diff[m] += ij[k] * c;
                            }
                        }
                        if jl[k] != Complex64::new(0.0, 0.0) {
                            for (m, c) in row(i, k).iter().enumerate() {
                                diff[m] -= jl[k] * c;
                            }
                        }
                    }
                    let r = diff.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                    max_residual = max_residual.max(r);
                }
            }
        }
        AssociativityReport { max_residual, ok: max_residual <= tol }
    }

    /// Whether `b_i b_j = b_j b_i` for all basis pairs, within `tol`.
    pub fn is_commutative(&self, tol: f64) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| (self.structure_constant(i, j, k) - self.structure_constant(j, i, k)).norm() <= tol)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn function_algebra_product_is_pointwise() {
        let a = catalog::function_algebra(&["a", "b"]).unwrap();
        let x = Element::from_real(&[1.0, 2.0]);
        let y = Element::from_real(&[3.0, 4.0]);
        assert_eq!(a.multiply(&x, &y).unwrap(), Element::from_real(&[3.0, 8.0]));
    }

    #[test]
    fn matrix_unit_product() {
        let m2 = catalog::matrix_algebra(2).unwrap();
        // row-major: E11, E12, E21, E22
        let prod = m2.multiply(&m2.basis(0), &m2.basis(1)).unwrap();
        assert_eq!(prod, m2.basis(1));
    }

    #[test]
    fn z2_convolution_delta_one_squared() {
        let z2 = catalog::semigroup_algebra(&catalog::cyclic_group(2)).unwrap();
        assert_eq!(z2.multiply(&z2.basis(1), &z2.basis(1)).unwrap(), z2.basis(0));
    }

    #[test]
    fn multiply_rejects_wrong_dimension() {
        let a = catalog::function_algebra(&["a", "b"]).unwrap();
        let err = a.multiply(&Element::zeros(3), &Element::zeros(2)).unwrap_err();
        assert_eq!(err, AlgebraError::DimensionMismatch { expected: 2, got: 3 });
        assert!(a.left_regular_rep(&Element::zeros(1)).is_err());
    }

    #[test]
    fn identity_of_function_algebra_is_all_ones() {
        let a = catalog::function_algebra(&["a", "b", "c"]).unwrap();
        let id = a.find_identity(1e-9).unwrap();
        assert_eq!(id.element, Element::from_real(&[1.0, 1.0, 1.0]));
        assert!(id.residual <= 1e-12);
    }

    #[test]
    fn identity_of_semigroup_algebra_is_delta_theta() {
        let mut t = catalog::cyclic_group(3);
        // Put theta last to make sure it is not assumed to be index 0.
        t = t.relabel(&[1, 2, 0]).unwrap();
        let a = catalog::semigroup_algebra(&t).unwrap();
        let id = a.find_identity(1e-9).unwrap();
        assert_eq!(id.element, a.basis(t.identity_index()));
    }

    #[test]
    fn zero_tensor_has_no_identity() {
        let a = Algebra::new(vec!["u".into(), "v".into()], vec![c(0.0, 0.0); 8]).unwrap();
        assert!(matches!(a.find_identity(1e-9), Err(AlgebraError::NoIdentity { .. })));
        assert!(a.identity().is_err());
    }

    #[test]
    fn rejects_bad_tensor() {
        assert!(Algebra::new(vec!["u".into()], vec![c(1.0, 0.0); 2]).is_err());
        assert!(Algebra::new(vec!["u".into()], vec![c(f64::NAN, 0.0)]).is_err());
        assert!(Algebra::new(vec![], vec![]).is_err());
    }

    #[test]
    fn regular_rep_examples() {
        let a = catalog::function_algebra(&["a", "b"]).unwrap();
        let l = a.left_regular_rep(&Element::from_real(&[2.0, 3.0])).unwrap();
        assert_eq!(l, CMatrix::from_diagonal(&CVector::from_vec(vec![c(2.0, 0.0), c(3.0, 0.0)])));

        let m2 = catalog::matrix_algebra(2).unwrap();
        let e = m2.identity().unwrap().clone();
        assert_eq!(m2.left_regular_rep(&e).unwrap(), CMatrix::identity(4, 4));
    }

    #[test]
    fn shift_matrix_of_z4() {
        let z4 = catalog::semigroup_algebra(&catalog::cyclic_group(4)).unwrap();
        let l = z4.left_regular_rep(&z4.basis(1)).unwrap();
        // Oracle: column j of L is delta_1 * delta_j, computed by brute force.
        for j in 0..4 {
            let col = z4.multiply(&z4.basis(1), &z4.basis(j)).unwrap();
            for k in 0..4 {
                assert_eq!(l[(k, j)], col.coeffs()[k]);
            }
        }
        // delta_1 * delta_j = delta_{j+1 mod 4}
        for j in 0..4 {
            for k in 0..4 {
                let expected = if k == (j + 1) % 4 { 1.0 } else { 0.0 };
                assert_eq!(l[(k, j)], c(expected, 0.0));
            }
        }
    }

    #[test]
    fn associativity_reports() {
        let m2 = catalog::matrix_algebra(2).unwrap();
        let rep = m2.check_associativity(1e-12);
        assert!(rep.ok);
        assert_eq!(rep.max_residual, 0.0);
        let z3 = catalog::semigroup_algebra(&catalog::cyclic_group(3)).unwrap();
        assert!(z3.check_associativity(0.0).ok);

        let mut tensor = m2.tensor().to_vec();
        tensor[0] += c(1.0, 0.0);
        let bad = Algebra::new(m2.labels().to_vec(), tensor).unwrap();
        let rep = bad.check_associativity(1e-9);
        assert!(!rep.ok);
        assert_eq!(rep.max_residual, brute_force_assoc_residual(&bad));
    }

    // Oracle for the corrupted-tensor case: build each triple product with
    // `multiply` on basis elements and take the worst difference.
    fn brute_force_assoc_residual(a: &Algebra) -> f64 {
        let d = a.dim();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    let (bi, bj, bl) = (a.basis(i), a.basis(j), a.basis(l));
                    let left = a.multiply(&a.multiply(&bi, &bj).unwrap(), &bl).unwrap();
                    let right = a.multiply(&bi, &a.multiply(&bj, &bl).unwrap()).unwrap();
                    worst = worst.max((&left - &right).norm());
                }
            }
        }
        worst
    }

    #[test]
    fn corrupted_m2_residual_is_one() {
        // With E11 E11 = 2 E11: (E11 E11) E12 = 2 E12 but E11 (E11 E12) = E12.
        let m2 = catalog::matrix_algebra(2).unwrap();
        let mut tensor = m2.tensor().to_vec();
        tensor[0] += c(1.0, 0.0);
        let bad = Algebra::new(m2.labels().to_vec(), tensor).unwrap();
        assert_eq!(bad.check_associativity(1e-9).max_residual, brute_force_assoc_residual(&bad));
        assert!(brute_force_assoc_residual(&bad) >= 1.0);
    }
}
