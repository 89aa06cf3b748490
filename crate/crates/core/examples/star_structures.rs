//! Classifying star structures on matrix, function and group algebras.

use finalg::catalog::{function_algebra, matrix_algebra, semigroup_algebra, symmetric_group};
use finalg::linalg::CMatrix;
use finalg::star::{self, classify_star, DeclaredKind, DEFAULT_STAR_TOL};
use finalg::{Algebra, HermitianForm, Result, StarStructure};

fn report(name: &str, a: &Algebra, s: &StarStructure) -> Result<()> {
    let cls = classify_star(a, s, DEFAULT_STAR_TOL)?;
    println!(
        "{name:<28} {:?}  (anti {:.1e}, same-order {:.1e})",
        cls.kind, cls.antimultiplicative_residual, cls.multiplicative_residual
    );
    Ok(())
}

fn main() -> Result<()> {
    let f = function_algebra(&["a", "b", "c"])?;
    report("conj on functions", &f, &star::conj_star(&f))?;

    let m2 = matrix_algebra(2)?;
    report("entrywise conj on M2", &m2, &star::entrywise_conj_binvolution(2)?)?;
    report("conjugate transpose on M2", &m2, &star::conj_transpose_star(2)?)?;

    let g = HermitianForm::new(CMatrix::from_diagonal_element(2, 2, 1.0.into()))?;
    let weighted = CMatrix::from_row_slice(2, 2, &[1.0.into(), 0.0.into(), 0.0.into(), 3.0.into()]);
    let adj = star::adjoint_from_form(2, &HermitianForm::new(weighted)?)?;
    report("adjoint for G = I", &m2, &star::adjoint_from_form(2, &g)?)?;
    report("adjoint for G = diag(1,3)", &m2, &adj)?;

    let t = symmetric_group(3);
    let s3 = semigroup_algebra(&t)?;
    report("group inverse on S3", &s3, &star::group_involution(&t)?)?;

    let doubled = star::conj_star(&f).matrix() * finalg::Complex64::new(2.0, 0.0);
    let scaled = StarStructure::new(doubled, DeclaredKind::Unspecified)?;
    report("2 * conj (not involutive)", &f, &scaled)?;
    Ok(())
}
