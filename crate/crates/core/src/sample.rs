//! Seeded random inputs for the sampling checks.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::Element;
use crate::poly::Polynomial;

/// Uniform point of the closed unit disk.
pub fn unit_disk<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let r = rng.random::<f64>().sqrt();
    let theta = 2.0 * PI * rng.random::<f64>();
    Complex64::from_polar(r, theta)
}

/// Element with coefficients uniform in the unit disk.
pub fn element<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Element {
    Element::from_vec((0..dim).map(|_| unit_disk(rng)).collect())
}

/// Polynomial of uniformly chosen degree `0..=max_degree` with coefficients in
/// the unit disk. The leading coefficient is kept away from zero so the degree
/// is exactly the one drawn.
pub fn polynomial<R: Rng + ?Sized>(max_degree: usize, rng: &mut R) -> Polynomial {
    let degree = rng.random_range(0..=max_degree);
    let mut coeffs: Vec<Complex64> = (0..=degree).map(|_| unit_disk(rng)).collect();
    let lead = coeffs[degree];
    if lead.norm() < 0.1 {
        coeffs[degree] = Complex64::from_polar(0.5, lead.arg());
    }
    Polynomial::new(coeffs)
}
