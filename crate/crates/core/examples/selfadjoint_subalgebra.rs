//! Self-adjoint parts, generated subalgebras and norm compatibility under the
//! conjugate-transpose involution on M3.

use finalg::catalog::{element_to_matrix, matrix_algebra, matrix_to_element};
use finalg::linalg::CMatrix;
use finalg::star::{self, DEFAULT_STAR_TOL};
use finalg::{Complex64, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let m3 = matrix_algebra(3)?;
    let s = star::conj_transpose_star(3)?;

    let c = Complex64::new;
    let x = matrix_to_element(&CMatrix::from_row_slice(
        3,
        3,
        &[
            c(1.0, 0.0),
            c(0.0, 2.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(3.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(2.0, -1.0),
        ],
    ));
    let (h, k) = star::selfadjoint_parts(&s, &x, DEFAULT_STAR_TOL)?;
    println!("h =\n{}", element_to_matrix(&h));
    println!("k =\n{}", element_to_matrix(&k));
    println!("h, k self-adjoint: {} {}", s.is_self_adjoint(&h, 1e-12)?, s.is_self_adjoint(&k, 1e-12)?);

    // diag(1, 1, 2) has minimal polynomial (z - 1)(z - 2)
    let d = CMatrix::from_diagonal(&finalg::linalg::CVector::from_vec(vec![c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]));
    let sub = star::generated_star_subalgebra(&m3, &s, &matrix_to_element(&d), 1e-10)?;
    println!(
        "subalgebra of diag(1,1,2): dim {}, star closed {}, commutative {}",
        sub.dim(),
        sub.star_closed,
        sub.commutative
    );

    let sub = star::generated_star_subalgebra(&m3, &s, &h, 1e-10)?;
    println!("subalgebra of h: dim {}, star closed {}, commutative {}", sub.dim(), sub.star_closed, sub.commutative);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let iso = star::check_star_isometry(&m3, &s, 100, 1e-9, &mut rng)?;
    println!("||x*|| = ||x||: {} over {} samples (max deviation {:e})", iso.ok, iso.samples, iso.max_ratio_dev);
    Ok(())
}
