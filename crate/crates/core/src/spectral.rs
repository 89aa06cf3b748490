//! Invertibility, resolvent membership and spectra of algebra elements.
//!
//! Everything goes through the left regular representation. In a
//! finite-dimensional unital algebra `x` is invertible iff `L_x` is nonsingular:
//! a solution of `L_x y = e` is a right inverse, and one-sided inverses are
//! two-sided in finite dimension. Hence `lambda e - x` is invertible iff
//! `lambda I - L_x` is, and the spectrum of `x` is the eigenvalue set of `L_x`.

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::algebra::{Algebra, Element};
use crate::error::{AlgebraError, Result};
use crate::linalg::{self, CMatrix};

/// Default relative singular-value threshold for invertibility.
pub const DEFAULT_INVERT_TOL: f64 = 1e-10;

/// Relative clustering tolerance: eigenvalues closer than
/// `CLUSTER_RTOL * (1 + ||L_x||)` are the same spectrum point.
pub const CLUSTER_RTOL: f64 = 1e-8;

/// The spectrum as a finite point set.
///
/// Multiplicities count eigenvalues of `L_x` merged into each point. They
/// depend on the representation and are informational only.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    points: Vec<Complex64>,
    multiplicities: Vec<usize>,
    cluster_tol: f64,
}

impl Spectrum {
    /// Clusters raw eigenvalues into points separated by more than `cluster_tol`.
    ///
    /// Eigenvalues are visited in lexicographic order and each joins the
    /// cluster with the nearest centroid when that centroid is within
    /// `cluster_tol`. Clusters whose centroids drift within tolerance of each
    /// other are then merged until all points are separated.
    pub fn from_eigenvalues(mut eigenvalues: Vec<Complex64>, cluster_tol: f64) -> Self {
        eigenvalues.sort_by(linalg::lex_cmp);
        // (sum, count)
        let mut clusters: Vec<(Complex64, usize)> = Vec::new();
        for z in eigenvalues {
            let nearest = clusters
                .iter()
                .enumerate()
                .map(|(idx, (sum, n))| (idx, (sum / *n as f64 - z).norm()))
                .filter(|&(_, dist)| dist <= cluster_tol)
                .min_by(|a, b| a.1.total_cmp(&b.1));
            match nearest {
                Some((idx, _)) => {
                    clusters[idx].0 += z;
                    clusters[idx].1 += 1;
                }
                None => clusters.push((z, 1)),
            }
        }
        loop {
            let mut closest: Option<(usize, usize, f64)> = None;
            for i in 0..clusters.len() {
                for j in i + 1..clusters.len() {
                    let ci = clusters[i].0 / clusters[i].1 as f64;
                    let cj = clusters[j].0 / clusters[j].1 as f64;
                    let dist = (ci - cj).norm();
                    if dist <= cluster_tol && closest.is_none_or(|(_, _, best)| dist < best) {
                        closest = Some((i, j, dist));
                    }
                }
            }
            match closest {
                Some((i, j, _)) => {
                    let (sum, n) = clusters.remove(j);
                    clusters[i].0 += sum;
                    clusters[i].1 += n;
                }
                None => break,
            }
        }
        let mut pairs: Vec<(Complex64, usize)> = clusters.into_iter().map(|(sum, n)| (sum / n as f64, n)).collect();
        pairs.sort_by(|a, b| linalg::lex_cmp(&a.0, &b.0));
        let (points, multiplicities) = pairs.into_iter().unzip();
        Self { points, multiplicities, cluster_tol }
    }

    /// Distinct points, sorted lexicographically by `(re, im)`.
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distance from `z` to the nearest spectrum point.
    pub fn distance_to(&self, z: Complex64) -> f64 {
        self.points.iter().map(|p| (p - z).norm()).fold(f64::INFINITY, f64::min)
    }

    /// Whether `z` lies within `cluster_tol` of a spectrum point.
    pub fn contains(&self, z: Complex64) -> bool {
        self.distance_to(z) <= self.cluster_tol
    }

    /// Symmetric Hausdorff distance between point sets.
    pub fn hausdorff(&self, other: &Spectrum) -> f64 {
        linalg::hausdorff(&self.points, &other.points)
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let points: Vec<[f64; 2]> = self.points.iter().map(|z| [z.re, z.im]).collect();
        let mut s = serializer.serialize_struct("Spectrum", 2)?;
        s.serialize_field("points", &points)?;
        s.serialize_field("multiplicities", &self.multiplicities)?;
        s.end()
    }
}

/// Default clustering tolerance for an element with regular representation `l`.
pub fn default_cluster_tol(l: &CMatrix) -> f64 {
    CLUSTER_RTOL * (1.0 + linalg::spectral_norm(l))
}

/// Inverse of `x`, computed by solving `L_x y = e` and verifying both
/// `x y = e` and `y x = e` to within `tol * (1 + ||x|| ||y||)`.
///
/// `x` is declared singular when the smallest singular value of `L_x` is at
/// most `tol` times the largest.
pub fn invert(a: &Algebra, x: &Element, tol: f64) -> Result<Element> {
    let e = a.identity()?;
    let l = a.left_regular_rep(x)?;
    let (smax, smin) = linalg::singular_value_extremes(&l);
    if smax == 0.0 || smin <= tol * smax {
        let ratio = if smax == 0.0 { 0.0 } else { smin / smax };
        return Err(AlgebraError::NotInvertible { ratio });
    }
    let solution = l.lu().solve(e.coeffs()).ok_or(AlgebraError::NotInvertible { ratio: smin / smax })?;
    let y = Element::from_vector(solution);

    let right = (&a.multiply(x, &y)? - e).norm();
    let left = (&a.multiply(&y, x)? - e).norm();
    let residual = right.max(left);
    let bound = tol * (1.0 + x.norm() * y.norm());
    if residual.is_nan() || residual > bound {
        return Err(AlgebraError::ResidualFailure { residual, bound });
    }
    Ok(y)
}

/// Whether `lambda` is in the resolvent set of `x`, i.e. `lambda e - x` is invertible.
pub fn resolvent_member(a: &Algebra, x: &Element, lambda: Complex64, tol: f64) -> Result<bool> {
    let shifted = &a.scalar(lambda)? - x;
    match invert(a, &shifted, tol) {
        Ok(_) => Ok(true),
        Err(AlgebraError::NotInvertible { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Spectrum of `x`: eigenvalues of `L_x`, clustered with the default tolerance.
pub fn spectrum(a: &Algebra, x: &Element) -> Result<Spectrum> {
    spectrum_with_tol(a, x, None)
}

/// Spectrum of `x` with an explicit clustering tolerance, or the default
/// `1e-8 * (1 + ||L_x||)` when `None`.
pub fn spectrum_with_tol(a: &Algebra, x: &Element, cluster_tol: Option<f64>) -> Result<Spectrum> {
    a.identity()?;
    let l = a.left_regular_rep(x)?;
    let tol = cluster_tol.unwrap_or_else(|| default_cluster_tol(&l));
    let eigenvalues = linalg::eigenvalues(&l)?;
    Ok(Spectrum::from_eigenvalues(eigenvalues, tol))
}
