//! Sparse exact matrices and the linear solvers.
//!
//! Matrices are stored as coordinate maps because structure-constant tensors
//! are sparse; elimination densifies. Pivoting always takes the first nonzero
//! entry in column order so that echelon forms, kernels and golden files are
//! reproducible over both fields.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Mat {
        let mut m = Mat::zero(field, rows, cols);
        for (r, c, s) in entries {
            m.add_to(r, c, &s);
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        if s.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), s);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur.add(s));
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), s)| (r, c, s))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, c, s) in other.entries() {
            out.add_to(r, c, s);
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let mut out = Mat::zero(self.field, self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.set(r, c, v.mul(s));
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.field, self.cols, self.rows);
        for (r, c, v) in self.entries() {
            out.set(c, r, v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field, "matrix product field mismatch");
        // index other's rows once, then walk self's sparse entries
        let mut by_row: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); other.rows];
        for (r, c, s) in other.entries() {
            by_row[r].push((c, s));
        }
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for (r, k, a) in self.entries() {
            for (c, b) in &by_row[k] {
                out.add_to(r, *c, &a.mul(b));
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (r, c, s) in self.entries() {
            if !v[c].is_zero() {
                out[r] = out[r].add(&s.mul(&v[c]));
            }
        }
        out
    }

    fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (r, c, s) in self.entries() {
            d[r][c] = s.clone();
        }
        d
    }

    /// Reduced row echelon form with deterministic pivoting.
    pub fn rref(&self) -> Rref {
        let mut rows = self.to_dense();
        let rref = rref_in_place(&mut rows, self.cols);
        rref
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right nullspace, read off the reduced echelon form. The
    /// basis vector for free column `j` has a 1 in slot `j`; the result is
    /// deterministic for a fixed input.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        kernel_from_rref(&rref, self.field, self.cols)
    }

    /// One exact solution of `self · x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut rows: Vec<Vec<Scalar>> = self
            .to_dense()
            .into_iter()
            .zip(b.iter())
            .map(|(mut row, rhs)| {
                row.push(rhs.clone());
                row
            })
            .collect();
        let rref = rref_in_place(&mut rows, self.cols + 1);
        // inconsistent iff some pivot lands in the rhs column
        if rref.pivots.iter().any(|&c| c == self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &c) in rref.pivots.iter().enumerate() {
            x[c] = rref.rows[i][self.cols].clone();
        }
        Some(x)
    }
}

/// Echelonized rows plus their pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

fn rref_in_place(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for j in c..cols {
            rows[r][j] = rows[r][j].mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..cols {
                    let t = rows[r][j].mul(&f);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Rref {
        rows: std::mem::take(rows),
        pivots,
    }
}

fn kernel_from_rref(rref: &Rref, field: FieldSpec, cols: usize) -> Vec<Vec<Scalar>> {
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (i, &c) in rref.pivots.iter().enumerate() {
            v[c] = Some(i);
        }
        v
    };
    let mut basis = Vec::new();
    for j in 0..cols {
        if pivot_set[j].is_some() {
            continue;
        }
        let mut x = vec![field.zero(); cols];
        x[j] = field.one();
        for (i, &c) in rref.pivots.iter().enumerate() {
            x[c] = rref.rows[i][j].neg();
        }
        basis.push(x);
    }
    basis
}

/// A row-reduced subspace of `k^n`, used for span membership, ideal closures
/// and quotient bases.
#[derive(Debug, Clone)]
pub struct RowSpace {
    dim_ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn empty(dim_ambient: usize) -> RowSpace {
        RowSpace {
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(dim_ambient: usize, rows: &[Vec<Scalar>]) -> RowSpace {
        let mut s = RowSpace::empty(dim_ambient);
        for r in rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduce `v` against the stored echelon rows; the result has zeros in all
    /// pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim_ambient);
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !v[c].is_zero() {
                let f = v[c].clone();
                for j in c..self.dim_ambient {
                    let t = row[j].mul(&f);
                    v[j] = v[j].sub(&t);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Insert a vector, keeping reduced echelon shape. Returns true if the
    /// rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(&v);
        let Some(c) = v.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = v[c].inv().unwrap();
        for s in v.iter_mut() {
            *s = s.mul(&inv);
        }
        // back-substitute into existing rows, then keep rows sorted by pivot
        for row in self.rows.iter_mut() {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for j in 0..self.dim_ambient {
                    let t = v[j].mul(&f);
                    row[j] = row[j].sub(&t);
                }
            }
        }
        let at = self.pivots.iter().position(|&p| p > c).unwrap_or(self.pivots.len());
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    /// Indices of ambient coordinates that are not pivot columns, in order.
    /// These index a complement of the subspace in the fixed ambient basis.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.dim_ambient)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }
}

/// A sparse linear system `A·x = b` assembled row by row; the unknown is a
/// flat vector. All module-level solvers funnel through this.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    field: FieldSpec,
    unknowns: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
    rhs: Vec<Scalar>,
}

/// Affine solution set: one particular solution plus a kernel basis.
#[derive(Debug, Clone)]
pub struct AffineSolutions {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl LinearSystem {
    pub fn new(field: FieldSpec, unknowns: usize) -> LinearSystem {
        LinearSystem {
            field,
            unknowns,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Add the equation `Σ coeff_i · x_i = rhs`. Terms may repeat; they are
    /// accumulated.
    pub fn add_row(&mut self, terms: Vec<(usize, Scalar)>, rhs: Scalar) {
        self.rows.push(terms);
        self.rhs.push(rhs);
    }

    pub fn to_matrix(&self) -> (Mat, Vec<Scalar>) {
        let mut m = Mat::zero(self.field, self.rows.len(), self.unknowns);
        for (r, terms) in self.rows.iter().enumerate() {
            for (c, s) in terms {
                m.add_to(r, *c, s);
            }
        }
        (m, self.rhs.clone())
    }

    /// Exact affine solution set, or `None` when inconsistent.
    pub fn solve(&self) -> Option<AffineSolutions> {
        let (m, b) = self.to_matrix();
        let particular = m.solve(&b)?;
        let kernel = m.kernel_basis();
        Some(AffineSolutions { particular, kernel })
    }

    /// Basis of the homogeneous solution space (the rhs is ignored).
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (m, _) = self.to_matrix();
        m.kernel_basis()
    }
}

/// Normalize a vector so its first nonzero coordinate is 1. The unique golden
/// representative of a one-dimensional space.
pub fn normalize_leading(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|s| !s.is_zero()) {
        None => v.to_vec(),
        Some(first) => {
            let inv = first.inv().unwrap();
            v.iter().map(|s| s.mul(&inv)).collect()
        }
    }
}

/// Check `dim V = rank + nullity` style sanity for a stack of vectors and
/// return the span as a `RowSpace`.
pub fn span(dim: usize, vectors: &[Vec<Scalar>]) -> RowSpace {
    RowSpace::from_rows(dim, vectors)
}

pub fn same_subspace(a: &RowSpace, b: &RowSpace) -> bool {
    a.rank() == b.rank() && a.rows().iter().all(|r| b.contains(r))
}

/// Field-compatibility guard shared by the public module operations.
pub fn require_same_field(a: FieldSpec, b: FieldSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}
