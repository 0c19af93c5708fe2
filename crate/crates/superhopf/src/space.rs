//! Finite-dimensional Z2-graded vector spaces with a named, ordered basis.

use crate::error::{Error, Result};
use crate::matrix::require_same_field;
use crate::scalar::{FieldSpec, Scalar};

pub type Parity = u8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVec {
    pub name: String,
    pub parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperSpace {
    field: FieldSpec,
    basis: Vec<BasisVec>,
}

impl SuperSpace {
    pub fn new(field: FieldSpec, basis: Vec<(String, Parity)>) -> Result<SuperSpace> {
        let mut seen = std::collections::BTreeSet::new();
        for (name, parity) in &basis {
            if *parity > 1 {
                return Err(Error::ShapeMismatch(format!(
                    "parity of `{name}` out of range"
                )));
            }
            if name.chars().any(char::is_whitespace) || name.is_empty() {
                return Err(Error::ShapeMismatch(format!("bad basis name `{name}`")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateBasisName(name.clone()));
            }
        }
        Ok(SuperSpace {
            field,
            basis: basis
                .into_iter()
                .map(|(name, parity)| BasisVec { name, parity })
                .collect(),
        })
    }

    /// The ground field as a one-dimensional even space.
    pub fn ground(field: FieldSpec) -> SuperSpace {
        SuperSpace::new(field, vec![("1".into(), 0)]).unwrap()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVec] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == 0).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == 1).collect()
    }

    pub fn is_purely_even(&self) -> bool {
        self.basis.iter().all(|b| b.parity == 0)
    }

    /// Tensor product with source-major (lexicographic) basis order; the pair
    /// `(v_i, w_j)` sits at index `i·dim(W) + j` and has parity `|v_i| + |w_j|`.
    pub fn tensor(&self, other: &SuperSpace) -> Result<SuperSpace> {
        require_same_field(self.field, other.field)?;
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for v in &self.basis {
            for w in &other.basis {
                basis.push((
                    format!("{}⊗{}", v.name, w.name),
                    (v.parity + w.parity) % 2,
                ));
            }
        }
        SuperSpace::new(self.field, basis)
    }

    /// Same field, same dimension, positionally equal parities. Bases built by
    /// different routes (e.g. two flattenings of an iterated tensor product)
    /// carry different names but compose soundly when their signatures agree.
    pub fn same_signature(&self, other: &SuperSpace) -> bool {
        self.field == other.field
            && self.dim() == other.dim()
            && self
                .basis
                .iter()
                .zip(&other.basis)
                .all(|(a, b)| a.parity == b.parity)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[i] = self.field.one();
        v
    }

    /// The parity of a homogeneous vector; `None` for 0 or mixed vectors.
    pub fn parity_of(&self, v: &[Scalar]) -> Option<Parity> {
        let mut p = None;
        for (i, s) in v.iter().enumerate() {
            if !s.is_zero() {
                match p {
                    None => p = Some(self.parity(i)),
                    Some(q) if q == self.parity(i) => {}
                    _ => return None,
                }
            }
        }
        p
    }

    /// Human-readable expansion used in verification witnesses and reports.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, s) in v.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            if s.is_one() {
                parts.push(self.name(i).to_string());
            } else {
                parts.push(format!("{}·{}", s, self.name(i)));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
