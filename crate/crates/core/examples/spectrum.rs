//! Spectra and inverses in a group algebra.

use finalg::catalog::{cyclic_group, semigroup_algebra};
use finalg::spectral::{self, DEFAULT_INVERT_TOL};
use finalg::{Complex64, Result};

fn main() -> Result<()> {
    let z6 = semigroup_algebra(&cyclic_group(6))?;
    let shift = z6.basis(1);
    let sigma = spectral::spectrum(&z6, &shift)?;
    println!("spectrum of delta_1 in Z/6:");
    for (z, m) in sigma.points().iter().zip(sigma.multiplicities()) {
        println!("  {:+.6} {:+.6}i  (x{m})", z.re, z.im);
    }

    let x = &z6.scalar(Complex64::new(2.0, 0.0))? + &shift;
    let y = spectral::invert(&z6, &x, DEFAULT_INVERT_TOL)?;
    println!("(2e + delta_1)^-1 = {:.4?}", y.to_vec());

    // 1 is a spectral point of delta_1, so delta_1 - e has no inverse
    let singular = &shift - z6.identity()?;
    match spectral::invert(&z6, &singular, DEFAULT_INVERT_TOL) {
        Ok(_) => println!("unexpectedly invertible"),
        Err(e) => println!("delta_1 - e: {e}"),
    }
    println!(
        "2 in resolvent: {}",
        spectral::resolvent_member(&z6, &shift, Complex64::new(2.0, 0.0), DEFAULT_INVERT_TOL)?
    );
    Ok(())
}
