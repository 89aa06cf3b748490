//! Example algebras: matrix algebras, pointwise function algebras and
//! convolution algebras of finite semigroups with identity.
//!
//! Basis conventions:
//! - `matrix_algebra(n)`: matrix units `E_ab` in row-major order, so index `a * n + b`.
//! - `function_algebra`: one indicator function per label, in the given order.
//! - `semigroup_algebra`: `delta_a` for each semigroup element, in table order.

use std::collections::HashSet;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{AlgebraError, Result};
use crate::linalg::CMatrix;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Finite semigroup given by its Cayley table: `table[b][c]` is the index of `b c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub associative: bool,
    pub has_identity: bool,
    pub is_group: bool,
}

impl SemigroupTable {
    /// Checks shape and index ranges only; the algebraic laws are checked by
    /// [`validate_semigroup`].
    pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>, identity_index: usize) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(AlgebraError::InvalidSemigroup("no elements".into()));
        }
        check_distinct(&elements)?;
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::InvalidSemigroup(format!("table must be {n}x{n}")));
        }
        if let Some(&index) = table.iter().flatten().find(|&&v| v >= n) {
            return Err(AlgebraError::IndexOutOfRange { index, size: n });
        }
        if identity_index >= n {
            return Err(AlgebraError::IndexOutOfRange { index: identity_index, size: n });
        }
        Ok(Self { elements, table, identity_index })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn product(&self, b: usize, c: usize) -> usize {
        self.table[b][c]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// Reorders the elements: new element `i` is old element `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut old_to_new = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n {
                return Err(AlgebraError::IndexOutOfRange { index: old, size: n });
            }
            old_to_new[old] = new;
        }
        if order.len() != n || old_to_new.contains(&usize::MAX) {
            return Err(AlgebraError::InvalidSemigroup("relabeling is not a permutation".into()));
        }
        let elements = order.iter().map(|&o| self.elements[o].clone()).collect();
        let table = order.iter().map(|&b| order.iter().map(|&c| old_to_new[self.table[b][c]]).collect()).collect();
        Self::new(elements, table, old_to_new[self.identity_index])
    }

    /// Two-sided inverses `a -> a^{-1}`, if every element has one.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        let theta = self.identity_index;
        (0..self.len())
            .map(|a| (0..self.len()).find(|&b| self.table[a][b] == theta && self.table[b][a] == theta))
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|b| (0..n).all(|c| self.table[b][c] == self.table[c][b]))
    }
}

fn check_distinct<S: AsRef<str>>(labels: &[S]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_ref()) {
            return Err(AlgebraError::DuplicateLabel(l.as_ref().to_string()));
        }
    }
    Ok(())
}

/// Exhaustive associativity, identity and inverse checks.
pub fn validate_semigroup(t: &SemigroupTable) -> SemigroupReport {
    let n = t.len();
    let tb = &t.table;
    let associative = (0..n).all(|b| (0..n).all(|c| (0..n).all(|d| tb[tb[b][c]][d] == tb[b][tb[c][d]])));
    let theta = t.identity_index;
    let has_identity = (0..n).all(|a| tb[theta][a] == a && tb[a][theta] == a);
    let is_group = associative && has_identity && t.inverses().is_some();
    SemigroupReport { associative, has_identity, is_group }
}

/// The cyclic group `Z/n` with elements `0..n` and addition mod `n`.
pub fn cyclic_group(n: usize) -> SemigroupTable {
    assert!(n >= 1, "cyclic group needs at least one element");
    let elements = (0..n).map(|a| a.to_string()).collect();
    let table = (0..n).map(|b| (0..n).map(|c| (b + c) % n).collect()).collect();
    SemigroupTable::new(elements, table, 0).expect("cyclic table is well formed")
}

/// The symmetric group on `n` points, labelled in cycle notation with points
/// `1..=n`. Elements are ordered lexicographically by their image tuples, so
/// the identity comes first. The product `s t` is the composition "apply `t`
/// first, then `s`".
pub fn symmetric_group(n: usize) -> SemigroupTable {
    assert!((1..=6).contains(&n), "symmetric_group supports 1 <= n <= 6");
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).expect("closed");
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| {
                    let composed: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                    index(&composed)
                })
                .collect()
        })
        .collect();
    let elements = perms.iter().map(|p| cycle_notation(p)).collect();
    SemigroupTable::new(elements, table, 0).expect("symmetric table is well formed")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Label of matrix unit `E_ab` (1-based in the label).
fn matrix_unit_label(n: usize, a: usize, b: usize) -> String {
    if n < 10 {
        format!("E{}{}", a + 1, b + 1)
    } else {
        format!("E{},{}", a + 1, b + 1)
    }
}

/// The algebra of `n x n` complex matrices, basis `E_ab` row-major, with
/// `E_ab E_cd = delta_bc E_ad`.
pub fn matrix_algebra(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(AlgebraError::ZeroSize);
    }
    let labels = (0..n * n).map(|idx| matrix_unit_label(n, idx / n, idx % n)).collect();
    Algebra::from_products(labels, |i, j| {
        let (a, b) = (i / n, i % n);
        let (c, d) = (j / n, j % n);
        if b == c {
            vec![(a * n + d, ONE)]
        } else {
            Vec::new()
        }
    })
}

/// Row-major encoding of an `n x n` matrix as an element of `matrix_algebra(n)`.
pub fn matrix_to_element(m: &CMatrix) -> Element {
    let n = m.nrows();
    Element::from_vec((0..n * n).map(|idx| m[(idx / n, idx % n)]).collect())
}

/// Inverse of [`matrix_to_element`]. Panics if the dimension is not a square.
pub fn element_to_matrix(x: &Element) -> CMatrix {
    let d = x.dim();
    let n = (d as f64).sqrt().round() as usize;
    assert_eq!(n * n, d, "element of dimension {d} is not a square matrix");
    CMatrix::from_fn(n, n, |a, b| x.coeffs()[a * n + b])
}

/// Complex-valued functions on a finite set under pointwise operations.
pub fn function_algebra<S: AsRef<str>>(labels: &[S]) -> Result<Algebra> {
    if labels.is_empty() {
        return Err(AlgebraError::InvalidStructure("function algebra needs a nonempty set".into()));
    }
    check_distinct(labels)?;
    let labels = labels.iter().map(|l| l.as_ref().to_string()).collect();
    Algebra::from_products(labels, |i, j| if i == j { vec![(i, ONE)] } else { Vec::new() })
}

/// Convolution algebra of a finite semigroup with identity:
/// `(f * g)(a) = sum over b c = a of f(b) g(c)`, so `delta_b * delta_c = delta_{bc}`.
pub fn semigroup_algebra(t: &SemigroupTable) -> Result<Algebra> {
    let report = validate_semigroup(t);
    if !report.associative {
        return Err(AlgebraError::InvalidSemigroup("table is not associative".into()));
    }
    if !report.has_identity {
        return Err(AlgebraError::InvalidSemigroup(format!(
            "element {:?} is not a two-sided identity",
            t.elements[t.identity_index]
        )));
    }
    let labels = t.elements.iter().map(|e| format!("δ_{e}")).collect();
    Algebra::from_products(labels, |b, c| vec![(t.table[b][c], ONE)])
}
