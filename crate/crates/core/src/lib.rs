//! Finite-dimensional associative algebras over the complex numbers.
//!
//! Algebras are given by structure constants ([`Algebra`]); the [`catalog`]
//! builds matrix algebras, pointwise function algebras and convolution algebras
//! of finite semigroups. On top of that:
//!
//! - [`spectral`]: invertibility, resolvent sets and spectra via the left
//!   regular representation;
//! - [`poly`]: polynomial arithmetic, `p(x)`, root factorization and the
//!   spectral mapping check `p(sigma(x)) = sigma(p(x))`;
//! - [`star`]: involutions and binvolutions, Hermitian-form adjoints,
//!   self-adjoint decompositions, generated subalgebras and norm compatibility;
//! - [`cli`]: the commands behind the `alg` binary, with the JSON formats in [`json`].
//!
//! ```
//! use finalg::{catalog, spectral, Element};
//!
//! let z4 = catalog::semigroup_algebra(&catalog::cyclic_group(4)).unwrap();
//! let shift = z4.basis(1);
//! let sigma = spectral::spectrum(&z4, &shift).unwrap();
//! assert_eq!(sigma.len(), 4); // the fourth roots of unity
//! # let _ = Element::zeros(1);
//! ```

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod sample;
pub mod spectral;
pub mod star;

pub use algebra::{Algebra, AssociativityReport, Element, IdentityElement};
pub use catalog::{SemigroupReport, SemigroupTable};
pub use error::{AlgebraError, Result};
pub use num_complex::Complex64;
pub use poly::{Polynomial, RootList};
pub use spectral::Spectrum;
pub use star::{HermitianForm, StarKind, StarStructure};
