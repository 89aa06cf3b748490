//! Polynomials applied to elements, root factorization, and the spectral
//! mapping check.

use finalg::catalog::{semigroup_algebra, symmetric_group};
use finalg::poly::{eval_element, invertible_via_roots, poly_roots, spectral_mapping_check};
use finalg::spectral::DEFAULT_INVERT_TOL;
use finalg::{Element, Polynomial, Result};

fn main() -> Result<()> {
    let s3 = semigroup_algebra(&symmetric_group(3))?;
    let x = Element::from_real(&[0.5, 0.25, -0.3, 0.2, 0.0, 0.1]);

    // p(z) = z^3 - 2z + 1
    let p = Polynomial::from_real(&[1.0, -2.0, 0.0, 1.0]);
    let px = eval_element(&p, &s3, &x)?;
    println!("p(x) = {:.4?}", px.to_vec());

    let roots = poly_roots(&p)?;
    println!("roots of p: {:.6?}", roots.roots);

    let via_roots = invertible_via_roots(&s3, &x, &p, DEFAULT_INVERT_TOL)?;
    println!("p(x) invertible via factors: {} {:?}", via_roots.verdict, via_roots.witnesses);

    let report = spectral_mapping_check(&s3, &x, &p, 1e-7)?;
    println!("p(sigma(x)) vs sigma(p(x)): hausdorff {:e}, ok {}", report.hausdorff, report.ok);
    Ok(())
}
