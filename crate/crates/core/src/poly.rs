//! Polynomials over the complex numbers and the polynomial functional calculus
//! `p(x) = c_m x^m + ... + c_1 x + c_0 e`.

use std::ops::{Add, Mul};

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{AlgebraError, Result};
use crate::linalg::{self, CMatrix};
use crate::spectral::{self, Spectrum};

/// Trailing coefficients with `|c| <= TRIM_RTOL * max |c_j|` are dropped.
pub const TRIM_RTOL: f64 = 1e-14;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Complex polynomial with coefficients in ascending degree. The zero
/// polynomial has no coefficients and no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cutoff = TRIM_RTOL * max;
        while coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn identity() -> Self {
        Self { coeffs: vec![ZERO, ONE] }
    }

    /// `leading * prod (z - root)`.
    pub fn from_roots(leading: Complex64, roots: &[Complex64]) -> Self {
        roots.iter().fold(Self::constant(leading), |acc, &r| acc * Self::new(vec![-r, ONE]))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation at a complex number.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect())
    }

    /// `self(other(z))`, by Horner's scheme over polynomials.
    pub fn compose(&self, other: &Polynomial) -> Polynomial {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, &c| &(&acc * other) + &Polynomial::constant(c))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).copied().unwrap_or(ZERO) + rhs.coeffs.get(k).copied().unwrap_or(ZERO))
            .collect();
        Polynomial::new(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

pub fn eval_scalar(p: &Polynomial, z: Complex64) -> Complex64 {
    p.eval(z)
}

pub fn poly_add(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    p1 + p2
}

pub fn poly_mul(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    p1 * p2
}

pub fn poly_compose(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    p1.compose(p2)
}

/// `p(x)` by Horner's scheme in the algebra; a constant `c_0` gives `c_0 e`.
pub fn eval_element(p: &Polynomial, a: &Algebra, x: &Element) -> Result<Element> {
    let e = a.identity()?;
    a.check(x)?;
    let mut acc = a.zero();
    for &c in p.coeffs().iter().rev() {
        acc = &a.multiply(x, &acc)? + &e.scale(c);
    }
    Ok(acc)
}

/// Zeros of a polynomial, counted with multiplicity, and its leading coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct RootList {
    pub roots: Vec<Complex64>,
    pub leading: Complex64,
}

impl RootList {
    /// `leading * prod (z - root)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.roots.iter().fold(self.leading, |acc, r| acc * (z - r))
    }
}

/// Roots as eigenvalues of the balanced companion matrix, refined by a few
/// guarded Newton steps.
pub fn poly_roots(p: &Polynomial) -> Result<RootList> {
    let leading = p.leading().ok_or(AlgebraError::ZeroPolynomial)?;
    let m = p.degree().expect("nonzero");
    if m == 0 {
        return Ok(RootList { roots: Vec::new(), leading });
    }
    let mut companion = CMatrix::zeros(m, m);
    for i in 1..m {
        companion[(i, i - 1)] = ONE;
    }
    for k in 0..m {
        companion[(k, m - 1)] = -p.coeffs()[k] / leading;
    }
    balance(&mut companion);
    let mut roots = linalg::eigenvalues(&companion)?;
    let dp = p.derivative();
    for r in roots.iter_mut() {
        *r = polish_root(p, &dp, *r);
    }
    roots.sort_by(linalg::lex_cmp);
    Ok(RootList { roots, leading })
}

/// Newton refinement that only accepts small steps which reduce `|p|`, so a
/// root cannot jump to a neighbouring zero.
fn polish_root(p: &Polynomial, dp: &Polynomial, mut r: Complex64) -> Complex64 {
    let mut value = p.eval(r).norm();
    for _ in 0..4 {
        let d = dp.eval(r);
        if value == 0.0 || d.norm() == 0.0 {
            break;
        }
        let step = p.eval(r) / d;
        if step.norm() > 1e-6 * (1.0 + r.norm()) {
            break;
        }
        let candidate = r - step;
        let candidate_value = p.eval(candidate).norm();
        if candidate_value < value {
            r = candidate;
            value = candidate_value;
        } else {
            break;
        }
    }
    r
}

/// Parlett-Reinsch balancing by powers of two: scales row/column pairs until
/// their off-diagonal norms are comparable. Similarity, so eigenvalues are kept.
fn balance(m: &mut CMatrix) {
    const RADIX: f64 = 2.0;
    let n = m.nrows();
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += m[(j, i)].norm();
                    row += m[(i, j)].norm();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let sum = col + row;
            let mut f = 1.0;
            let mut g = row / RADIX;
            while col < g {
                f *= RADIX;
                col *= RADIX * RADIX;
            }
            g = row * RADIX;
            while col > g {
                f /= RADIX;
                col /= RADIX * RADIX;
            }
            if (col + row) / f < 0.95 * sum {
                converged = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootInvertibility {
    pub verdict: bool,
    pub witnesses: Vec<bool>,
    #[serde(serialize_with = "crate::json::ser_points")]
    pub roots: Vec<Complex64>,
}

/// Decides invertibility of `p(x)` from its factorization: `p(x)` is
/// invertible iff every `x - zeta e` is, for the zeros `zeta` of `p`.
pub fn invertible_via_roots(a: &Algebra, x: &Element, p: &Polynomial, tol: f64) -> Result<RootInvertibility> {
    let roots = poly_roots(p)?.roots;
    a.identity()?;
    a.check(x)?;
    let mut witnesses = Vec::with_capacity(roots.len());
    for &zeta in &roots {
        let factor = x - &a.scalar(zeta)?;
        let ok = match spectral::invert(a, &factor, tol) {
            Ok(_) => true,
            Err(AlgebraError::NotInvertible { .. }) => false,
            Err(e) => return Err(e),
        };
        witnesses.push(ok);
    }
    Ok(RootInvertibility { verdict: witnesses.iter().all(|&w| w), witnesses, roots })
}

/// Comparison of `p(sigma(x))` against `sigma(p(x))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralMappingReport {
    /// Symmetric Hausdorff distance between `image` and `direct`.
    pub hausdorff: f64,
    /// Largest distance from a point of `direct` to `image`.
    pub onto_gap: f64,
    pub ok: bool,
    #[serde(serialize_with = "crate::json::ser_points")]
    pub image: Vec<Complex64>,
    #[serde(serialize_with = "crate::json::ser_points")]
    pub direct: Vec<Complex64>,
}

pub fn spectral_mapping_check(a: &Algebra, x: &Element, p: &Polynomial, tol: f64) -> Result<SpectralMappingReport> {
    let sigma = spectral::spectrum(a, x)?;
    let px = eval_element(p, a, x)?;
    let direct = spectral::spectrum(a, &px)?;
    let mapped = sigma.points().iter().map(|&l| p.eval(l)).collect();
    let image = Spectrum::from_eigenvalues(mapped, direct.cluster_tol());
    let hausdorff = linalg::hausdorff(image.points(), direct.points());
    let onto_gap = linalg::directed_hausdorff(direct.points(), image.points());
    Ok(SpectralMappingReport {
        hausdorff,
        onto_gap,
        ok: hausdorff <= tol,
        image: image.points().to_vec(),
        direct: direct.points().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, cyclic_group, semigroup_algebra};
    use crate::linalg::hausdorff;
    use crate::spectral::{invert, DEFAULT_INVERT_TOL};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_real(&[1.0, 2.0, 0.0, 1e-15]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_real(&[0.0, 0.0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn eval_scalar_examples() {
        let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
        assert_eq!(eval_scalar(&p, c(2.0, 0.0)), c(3.0, 0.0));
        let five = Polynomial::from_real(&[5.0]);
        assert_eq!(eval_scalar(&five, c(-7.0, 3.0)), c(5.0, 0.0));
        assert_eq!(eval_scalar(&Polynomial::zero(), c(1.0, 1.0)), c(0.0, 0.0));

        // z^3 - 2z + 1 at i, term by term: i^3 = -i, -2i, +1.
        let p = Polynomial::from_real(&[1.0, -2.0, 0.0, 1.0]);
        let z = c(0.0, 1.0);
        let oracle = z * z * z + c(-2.0, 0.0) * z + c(1.0, 0.0);
        assert_eq!(oracle, c(1.0, -3.0));
        assert_eq!(eval_scalar(&p, z), oracle);
    }

    #[test]
    fn arithmetic_examples() {
        let zp1 = Polynomial::from_real(&[1.0, 1.0]);
        let zm1 = Polynomial::from_real(&[-1.0, 1.0]);
        assert_eq!(poly_add(&zp1, &zm1), Polynomial::from_real(&[0.0, 2.0]));
        assert_eq!(poly_mul(&zp1, &zm1), Polynomial::from_real(&[-1.0, 0.0, 1.0]));
        let z2 = Polynomial::from_real(&[0.0, 0.0, 1.0]);
        assert_eq!(poly_compose(&z2, &zp1), Polynomial::from_real(&[1.0, 2.0, 1.0]));
        assert_eq!(poly_add(&zp1, &Polynomial::from_real(&[-1.0, -1.0])), Polynomial::zero());
        assert!(poly_mul(&zp1, &Polynomial::zero()).is_zero());
    }

    #[test]
    fn compose_degree_is_product() {
        let p1 = Polynomial::from_real(&[1.0, 0.0, 2.0, 3.0]);
        let p2 = Polynomial::from_real(&[0.5, -1.0, 1.0]);
        assert_eq!(poly_compose(&p1, &p2).degree(), Some(6));
    }

    #[test]
    fn eval_element_examples() {
        let f = catalog::function_algebra(&["a", "b"]).unwrap();
        let x = Element::from_real(&[2.0, 3.0]);
        assert_eq!(eval_element(&Polynomial::identity(), &f, &x).unwrap(), x);
        let c0 = Polynomial::constant(c(4.0, -1.0));
        assert_eq!(eval_element(&c0, &f, &x).unwrap(), Element::from_vec(vec![c(4.0, -1.0), c(4.0, -1.0)]));
        let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
        assert_eq!(eval_element(&p, &f, &x).unwrap(), Element::from_real(&[3.0, 8.0]));
        assert_eq!(eval_element(&Polynomial::zero(), &f, &x).unwrap(), f.zero());
    }

    #[test]
    fn eval_element_needs_identity() {
        let a = Algebra::new(vec!["u".into()], vec![c(0.0, 0.0)]).unwrap();
        assert!(matches!(eval_element(&Polynomial::identity(), &a, &a.zero()), Err(AlgebraError::NoIdentity { .. })));
    }

    #[test]
    fn roots_examples() {
        let r = poly_roots(&Polynomial::from_real(&[-1.0, 0.0, 1.0])).unwrap();
        assert!(hausdorff(&r.roots, &[c(1.0, 0.0), c(-1.0, 0.0)]) < 1e-14);
        let r = poly_roots(&Polynomial::from_real(&[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(r.roots.len(), 2);
        assert!(r.roots.iter().all(|z| z.norm() < 1e-12));
        let r = poly_roots(&Polynomial::from_real(&[-4.0, 2.0])).unwrap();
        assert_eq!(r.leading, c(2.0, 0.0));
        assert!((r.roots[0] - c(2.0, 0.0)).norm() < 1e-14);
        let r = poly_roots(&Polynomial::from_real(&[3.0])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.leading, c(3.0, 0.0));
        assert_eq!(poly_roots(&Polynomial::zero()).unwrap_err(), AlgebraError::ZeroPolynomial);
    }

    #[test]
    fn roots_reproduce_polynomial() {
        // Badly scaled coefficients exercise the balancing step.
        let p = Polynomial::new(vec![c(1e-6, 0.0), c(3.0, -1.0), c(0.0, 2e3), c(-5.0, 0.0), c(1e-2, 0.0)]);
        let r = poly_roots(&p).unwrap();
        assert_eq!(r.roots.len(), 4);
        let m = 4;
        for s in 0..(2 * m + 1) {
            let angle = s as f64 * 0.7;
            let z = c(1.3 * angle.cos(), 1.3 * angle.sin());
            let want = p.eval(z);
            assert!((r.eval(z) - want).norm() <= 1e-8 * want.norm().max(1.0));
        }
    }

    #[test]
    fn invertible_via_roots_examples() {
        let f = catalog::function_algebra(&["a", "b"]).unwrap();
        let e = f.identity().unwrap().clone();
        let x = Element::from_real(&[2.0, 3.0]);
        assert!(invertible_via_roots(&f, &x, &Polynomial::identity(), DEFAULT_INVERT_TOL).unwrap().verdict);

        let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
        let r = invertible_via_roots(&f, &e, &p, DEFAULT_INVERT_TOL).unwrap();
        assert!(!r.verdict);
        // roots sorted: -1 gives 2e (invertible), 1 gives 0
        assert_eq!(r.witnesses, [true, false]);

        let p = Polynomial::from_real(&[6.0, -5.0, 1.0]);
        let x = Element::from_real(&[2.0, 7.0]);
        let r = invertible_via_roots(&f, &x, &p, DEFAULT_INVERT_TOL).unwrap();
        assert!(!r.verdict);
        // roots sorted: 2 then 3; only the factor at 2 is singular
        assert_eq!(r.witnesses, [false, true]);
        let px = eval_element(&p, &f, &x).unwrap();
        assert_eq!(px, Element::from_real(&[0.0, 20.0]));
        assert!(invert(&f, &px, DEFAULT_INVERT_TOL).is_err());

        assert_eq!(
            invertible_via_roots(&f, &x, &Polynomial::zero(), DEFAULT_INVERT_TOL).unwrap_err(),
            AlgebraError::ZeroPolynomial
        );
    }

    #[test]
    fn spectral_mapping_examples() {
        let f = catalog::function_algebra(&["a", "b"]).unwrap();
        let x = Element::from_real(&[2.0, 3.0]);
        let r = spectral_mapping_check(&f, &x, &Polynomial::constant(c(5.0, 0.0)), 1e-7).unwrap();
        assert!(r.ok);
        assert_eq!(r.image, [c(5.0, 0.0)]);
        assert_eq!(r.direct, [c(5.0, 0.0)]);

        let m2 = catalog::matrix_algebra(2).unwrap();
        let sq = Polynomial::from_real(&[0.0, 0.0, 1.0]);
        let r = spectral_mapping_check(&m2, &Element::from_real(&[2.0, 0.0, 0.0, 3.0]), &sq, 1e-7).unwrap();
        assert!(r.ok);
        assert!(hausdorff(&r.image, &[c(4.0, 0.0), c(9.0, 0.0)]) < 1e-12);
        assert!(hausdorff(&r.direct, &[c(4.0, 0.0), c(9.0, 0.0)]) < 1e-12);

        let z4 = semigroup_algebra(&cyclic_group(4)).unwrap();
        let r = spectral_mapping_check(&z4, &z4.basis(1), &sq, 1e-7).unwrap();
        assert!(r.ok);
        assert_eq!(r.image.len(), 2);
        assert_eq!(r.direct.len(), 2);
        assert!(hausdorff(&r.direct, &[c(1.0, 0.0), c(-1.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn roots_of_unity() {
        for n in [5usize, 6, 8, 12] {
            let mut coeffs = vec![c(0.0, 0.0); n + 1];
            coeffs[0] = c(-1.0, 0.0);
            coeffs[n] = c(1.0, 0.0);
            let roots = poly_roots(&Polynomial::new(coeffs)).unwrap().roots;
            assert_eq!(roots.len(), n);
            for z in roots {
                assert!((z.norm() - 1.0).abs() < 1e-12);
                assert!((z.powu(n as u32) - c(1.0, 0.0)).norm() < 1e-12);
            }
        }
    }
}
