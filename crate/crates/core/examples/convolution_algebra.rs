//! Convolution algebras of finite semigroups built from Cayley tables.

use finalg::catalog::{self, semigroup_algebra, validate_semigroup, SemigroupTable};
use finalg::spectral;
use finalg::{Element, Result};

fn main() -> Result<()> {
    let s3 = catalog::symmetric_group(3);
    println!("S3 elements: {:?}", s3.elements());
    let a = semigroup_algebra(&s3)?;
    let r = s3.index_of("(123)").unwrap();
    let t = s3.index_of("(12)").unwrap();
    let rt = a.multiply(&a.basis(r), &a.basis(t))?;
    let tr = a.multiply(&a.basis(t), &a.basis(r))?;
    println!("delta_(123) * delta_(12) = delta_{}", s3.elements()[s3.product(r, t)]);
    println!("commutes: {}", rt == tr);

    // averaging over the group is an idempotent: its spectrum is {0, 1}
    let avg = Element::from_real(&[1.0 / 6.0; 6]);
    let sigma = spectral::spectrum(&a, &avg)?;
    println!("spectrum of the average: {:?} x {:?}", sigma.points(), sigma.multiplicities());

    // a monoid that is not a group: {1, z} with z z = z
    let monoid = SemigroupTable::new(vec!["1".into(), "z".into()], vec![vec![0, 1], vec![1, 1]], 0)?;
    println!("{:?}", validate_semigroup(&monoid));
    let m = semigroup_algebra(&monoid)?;
    println!("delta_z spectrum: {:?}", spectral::spectrum(&m, &m.basis(1))?.points());

    // a table without an identity element is rejected
    let left_zero = SemigroupTable::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![1, 1]], 0)?;
    println!("{:?}", validate_semigroup(&left_zero));
    println!("{}", semigroup_algebra(&left_zero).unwrap_err());
    Ok(())
}
