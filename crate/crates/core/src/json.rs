//! JSON file formats for algebras, elements, polynomials and star structures.
//!
//! Complex numbers are always two-element arrays `[re, im]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{Algebra, Element};
use crate::catalog::{self, SemigroupTable};
use crate::error::{AlgebraError, Result};
use crate::linalg::CMatrix;
use crate::poly::Polynomial;
use crate::star::{self, HermitianForm, StarStructure};

pub type Pair = [f64; 2];

pub fn to_pair(z: &Complex64) -> Pair {
    [z.re, z.im]
}

pub fn from_pair(p: &Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

pub fn points(v: &[Complex64]) -> Vec<Pair> {
    v.iter().map(to_pair).collect()
}

pub fn ser_points<S: Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    points(v).serialize(s)
}

fn matrix_from_pairs(rows: &[Vec<Pair>], what: &str) -> Result<CMatrix> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::InvalidStructure(format!("{what} must be a nonempty square matrix")));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| from_pair(&rows[i][j])))
}

fn matrix_to_pairs(m: &CMatrix) -> Vec<Vec<Pair>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| to_pair(&m[(i, j)])).collect()).collect()
}

/// Algebra file contents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraSpec {
    StructureConstants {
        dim: usize,
        #[serde(default)]
        labels: Vec<String>,
        /// Indexed `[i][j][k]`.
        tensor: Vec<Vec<Vec<Pair>>>,
    },
    Semigroup {
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    },
    Matrix {
        n: usize,
    },
    Functions {
        labels: Vec<String>,
    },
}

/// Where a loaded algebra came from; star constructors need this context.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraSource {
    StructureConstants,
    Semigroup(SemigroupTable),
    Matrix(usize),
    Functions,
}

#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub algebra: Algebra,
    pub source: AlgebraSource,
}

impl AlgebraSpec {
    /// The semigroup table of a `semigroup` spec, checked for shape and range only.
    pub fn semigroup_table(&self) -> Option<Result<SemigroupTable>> {
        match self {
            AlgebraSpec::Semigroup { elements, table, identity } => {
                Some(SemigroupTable::new(elements.clone(), table.clone(), *identity))
            }
            _ => None,
        }
    }

    pub fn build(&self) -> Result<LoadedAlgebra> {
        match self {
            AlgebraSpec::StructureConstants { dim, labels, tensor } => {
                let d = *dim;
                let labels = if labels.is_empty() { (0..d).map(|i| format!("b{i}")).collect() } else { labels.clone() };
                if labels.len() != d {
                    return Err(AlgebraError::InvalidStructure(format!("{} labels for dimension {d}", labels.len())));
                }
                let shape_ok =
                    tensor.len() == d && tensor.iter().all(|m| m.len() == d && m.iter().all(|r| r.len() == d));
                if !shape_ok {
                    return Err(AlgebraError::InvalidStructure(format!("tensor must be {d}x{d}x{d}")));
                }
                let flat = tensor.iter().flatten().flatten().map(from_pair).collect();
                Ok(LoadedAlgebra { algebra: Algebra::new(labels, flat)?, source: AlgebraSource::StructureConstants })
            }
            AlgebraSpec::Semigroup { .. } => {
                let table = self.semigroup_table().expect("semigroup spec")?;
                Ok(LoadedAlgebra {
                    algebra: catalog::semigroup_algebra(&table)?,
                    source: AlgebraSource::Semigroup(table),
                })
            }
            AlgebraSpec::Matrix { n } => {
                Ok(LoadedAlgebra { algebra: catalog::matrix_algebra(*n)?, source: AlgebraSource::Matrix(*n) })
            }
            AlgebraSpec::Functions { labels } => {
                Ok(LoadedAlgebra { algebra: catalog::function_algebra(labels)?, source: AlgebraSource::Functions })
            }
        }
    }

    /// Structure-constant form of any algebra.
    pub fn from_algebra(a: &Algebra) -> Self {
        let d = a.dim();
        let tensor = (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| to_pair(&a.structure_constant(i, j, k))).collect()).collect())
            .collect();
        AlgebraSpec::StructureConstants { dim: d, labels: a.labels().to_vec(), tensor }
    }
}

/// Element file contents: `{"coeffs": [[re, im], ...]}` or a bare coefficient array.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Object { coeffs: Vec<Pair> },
    Bare(Vec<Pair>),
}

impl ElementSpec {
    pub fn from_element(x: &Element) -> Self {
        ElementSpec::Object { coeffs: points(&x.to_vec()) }
    }

    pub fn coeffs(&self) -> Vec<Complex64> {
        let pairs = match self {
            ElementSpec::Object { coeffs } | ElementSpec::Bare(coeffs) => coeffs,
        };
        pairs.iter().map(from_pair).collect()
    }

    pub fn build(&self, a: &Algebra) -> Result<Element> {
        a.element(self.coeffs())
    }
}

/// Polynomial file contents, ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolySpec {
    pub coeffs: Vec<Pair>,
}

impl PolySpec {
    pub fn from_polynomial(p: &Polynomial) -> Self {
        Self { coeffs: points(p.coeffs()) }
    }

    pub fn build(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(from_pair).collect())
    }
}

/// Star structure file contents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StarSpec {
    /// `coeffs(x*) = S conj(coeffs(x))`.
    Matrix {
        #[serde(rename = "S")]
        s: Vec<Vec<Pair>>,
    },
    Conj,
    GroupInverse,
    /// Adjoint with respect to the Hermitian form with Gram matrix `G`; needs a matrix algebra.
    HermitianForm {
        #[serde(rename = "G")]
        g: Vec<Vec<Pair>>,
    },
}

impl StarSpec {
    pub fn from_matrix(s: &CMatrix) -> Self {
        StarSpec::Matrix { s: matrix_to_pairs(s) }
    }

    pub fn build(&self, loaded: &LoadedAlgebra) -> Result<StarStructure> {
        let d = loaded.algebra.dim();
        match self {
            StarSpec::Matrix { s } => {
                let m = matrix_from_pairs(s, "S")?;
                if m.nrows() != d {
                    return Err(AlgebraError::DimensionMismatch { expected: d, got: m.nrows() });
                }
                StarStructure::new(m, star::DeclaredKind::Unspecified)
            }
            StarSpec::Conj => Ok(star::conj_star(&loaded.algebra)),
            StarSpec::GroupInverse => match &loaded.source {
                AlgebraSource::Semigroup(t) => star::group_involution(t),
                _ => Err(AlgebraError::NotAGroup),
            },
            StarSpec::HermitianForm { g } => {
                let g = matrix_from_pairs(g, "G")?;
                let n = g.nrows();
                match loaded.source {
                    AlgebraSource::Matrix(m) if m == n => star::adjoint_from_form(n, &HermitianForm::new(g)?),
                    _ => Err(AlgebraError::InvalidStructure(format!(
                        "hermitian_form with a {n}x{n} Gram matrix needs a matrix algebra with n = {n}"
                    ))),
                }
            }
        }
    }
}
