//! Structure constants, the identity and the left regular representation of a
//! small non-commutative algebra.

use finalg::catalog::{element_to_matrix, matrix_algebra, matrix_to_element};
use finalg::{Complex64, Result};

fn main() -> Result<()> {
    let m2 = matrix_algebra(2)?;
    println!("basis: {:?}", m2.labels());

    let assoc = m2.check_associativity(1e-12);
    println!("associative: {} (max residual {:e})", assoc.ok, assoc.max_residual);

    let e = m2.identity()?;
    println!("identity coefficients: {:?}", e.to_vec());

    let x = matrix_to_element(&finalg::linalg::CMatrix::from_row_slice(
        2,
        2,
        &[Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(3.0, 0.0)],
    ));
    let y = m2.basis(2); // E21
    let xy = m2.multiply(&x, &y)?;
    println!("x E21 as a matrix:\n{}", element_to_matrix(&xy));

    // L_x acts on coefficient vectors: L_x y = x y
    let l = m2.left_regular_rep(&x)?;
    println!("L_x:\n{l}");
    println!("commutative: {}", m2.is_commutative(1e-12));
    Ok(())
}
