//! Super-algebras as structure constants, and the mechanical axiom checker.
//!
//! All constructors in the crate emit structure-constant data, so the one
//! verifier and the one solver interface serve every object. The checker runs
//! exhaustively over basis tuples and reports violations with the exact basis
//! indices and both differing expansions.

use crate::error::{Error, Result};
use crate::graded_map::GradedMap;
use crate::matrix::RowSpace;
use crate::scalar::{FieldSpec, Scalar};
use crate::space::SuperSpace;

/// Sparse element expansion: index/coefficient pairs with nonzero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

pub fn from_sparse(dim: usize, field: FieldSpec, v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (i, s) in v {
        out[*i] = out[*i].add(s);
    }
    out
}

/// How much of the axiom battery applies.
///
/// Bosonizations and duals are non-(super-)commutative in general, so they
/// are verified as bialgebras with antipode only; the report carries the mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    SuperCommutative,
    BialgebraWithAntipode,
}

impl VerifyMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerifyMode::SuperCommutative => "supercommutative",
            VerifyMode::BialgebraWithAntipode => "noncommutative",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub ok: bool,
    pub violations: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub checks: Vec<AxiomCheck>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn violated(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }
}

/// Accumulates per-axiom outcomes, keeping the first witness.
pub(crate) struct AxiomAcc {
    axiom: &'static str,
    violations: usize,
    witness: Option<Witness>,
}

impl AxiomAcc {
    pub fn new(axiom: &'static str) -> AxiomAcc {
        AxiomAcc {
            axiom,
            violations: 0,
            witness: None,
        }
    }

    pub fn violation(&mut self, indices: Vec<usize>, lhs: String, rhs: String) {
        self.violations += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness { indices, lhs, rhs });
        }
    }

    pub fn finish(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom,
            ok: self.violations == 0,
            violations: self.violations,
            witness: self.witness,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuperAlgebra {
    space: SuperSpace,
    square: SuperSpace,
    mult: GradedMap,
    unit: Vec<Scalar>,
    table: Vec<Vec<SparseVec>>,
}

impl SuperAlgebra {
    pub fn new(space: SuperSpace, mult: GradedMap, unit: Vec<Scalar>) -> Result<SuperAlgebra> {
        let square = space.tensor(&space)?;
        if !mult.source().same_signature(&square) || !mult.target().same_signature(&space) {
            return Err(Error::ShapeMismatch(
                "multiplication must map space⊗space to space".into(),
            ));
        }
        if unit.len() != space.dim() {
            return Err(Error::ShapeMismatch("unit expansion length".into()));
        }
        let dim = space.dim();
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let prod = mult.apply(&square.basis_vector(i * dim + j));
                table[i][j] = to_sparse(&prod);
            }
        }
        Ok(SuperAlgebra {
            space,
            square,
            mult,
            unit,
            table,
        })
    }

    /// Build from a sparse structure-constant table `e_i·e_j = Σ c·e_k`.
    pub fn from_table(
        space: SuperSpace,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
    ) -> Result<SuperAlgebra> {
        let square = space.tensor(&space)?;
        let dim = space.dim();
        let mut m = crate::matrix::Mat::zero(space.field(), dim, dim * dim);
        for (i, j, k, c) in entries {
            m.add_to(k, i * dim + j, &c);
        }
        let mult = GradedMap::from_total(square, space.clone(), m);
        SuperAlgebra::new(space, mult, unit)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn square(&self) -> &SuperSpace {
        &self.square
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mult(&self) -> &GradedMap {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.space.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].add(&ab.mul(c));
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    /// Left- and right-multiplication operators as graded maps.
    pub fn left_mult_by(&self, x: &[Scalar]) -> GradedMap {
        let dim = self.dim();
        let mut m = crate::matrix::Mat::zero(self.field(), dim, dim);
        for j in 0..dim {
            let col = self.multiply(x, &self.space.basis_vector(j));
            for (k, s) in to_sparse(&col) {
                m.set(k, j, s);
            }
        }
        GradedMap::from_total(self.space.clone(), self.space.clone(), m)
    }

    pub fn right_mult_by(&self, x: &[Scalar]) -> GradedMap {
        let dim = self.dim();
        let mut m = crate::matrix::Mat::zero(self.field(), dim, dim);
        for j in 0..dim {
            let col = self.multiply(&self.space.basis_vector(j), x);
            for (k, s) in to_sparse(&col) {
                m.set(k, j, s);
            }
        }
        GradedMap::from_total(self.space.clone(), self.space.clone(), m)
    }

    fn fmt_el(&self, v: &[Scalar]) -> String {
        self.space.format_element(v)
    }

    /// Exhaustive algebra-axiom battery. Super-commutativity is split into the
    /// three basis-level conditions it polarizes to (even part central, odd
    /// squares vanish, odd pairs anticommute), valid in every characteristic
    /// including 2.
    pub fn verify_algebra(&self, mode: VerifyMode) -> VerifyReport {
        let dim = self.dim();
        let mut checks = Vec::new();

        let mut even = AxiomAcc::new("mult-even");
        if !self.mult.is_even() {
            even.violation(vec![], "odd component of mult".into(), "0".into());
        }
        checks.push(even.finish());

        let mut unit_law = AxiomAcc::new("unit-law");
        for i in 0..dim {
            let e = self.space.basis_vector(i);
            let l = self.multiply(&self.unit, &e);
            let r = self.multiply(&e, &self.unit);
            if l != e {
                unit_law.violation(vec![i], self.fmt_el(&l), self.fmt_el(&e));
            }
            if r != e {
                unit_law.violation(vec![i], self.fmt_el(&r), self.fmt_el(&e));
            }
        }
        checks.push(unit_law.finish());

        let mut assoc = AxiomAcc::new("associativity");
        for i in 0..dim {
            for j in 0..dim {
                let ij = from_sparse(dim, self.field(), &self.table[i][j]);
                for k in 0..dim {
                    let jk = from_sparse(dim, self.field(), &self.table[j][k]);
                    let lhs = self.multiply(&ij, &self.space.basis_vector(k));
                    let rhs = self.multiply(&self.space.basis_vector(i), &jk);
                    if lhs != rhs {
                        assoc.violation(vec![i, j, k], self.fmt_el(&lhs), self.fmt_el(&rhs));
                    }
                }
            }
        }
        checks.push(assoc.finish());

        if mode == VerifyMode::SuperCommutative {
            let mut central = AxiomAcc::new("even-central");
            for i in 0..dim {
                if self.space.parity(i) != 0 {
                    continue;
                }
                for j in 0..dim {
                    let lhs = from_sparse(dim, self.field(), &self.table[i][j]);
                    let rhs = from_sparse(dim, self.field(), &self.table[j][i]);
                    if lhs != rhs {
                        central.violation(vec![i, j], self.fmt_el(&lhs), self.fmt_el(&rhs));
                    }
                }
            }
            checks.push(central.finish());

            let mut squares = AxiomAcc::new("odd-square-zero");
            for i in self.space.odd_indices() {
                let sq = from_sparse(dim, self.field(), &self.table[i][i]);
                if sq.iter().any(|s| !s.is_zero()) {
                    squares.violation(vec![i, i], self.fmt_el(&sq), "0".into());
                }
            }
            checks.push(squares.finish());

            let mut anti = AxiomAcc::new("odd-anticommute");
            let odd = self.space.odd_indices();
            for (a, &i) in odd.iter().enumerate() {
                for &j in &odd[a + 1..] {
                    let mut sum = from_sparse(dim, self.field(), &self.table[i][j]);
                    for (k, s) in &self.table[j][i] {
                        sum[*k] = sum[*k].add(s);
                    }
                    if sum.iter().any(|s| !s.is_zero()) {
                        anti.violation(vec![i, j], self.fmt_el(&sum), "0".into());
                    }
                }
            }
            checks.push(anti.finish());
        }

        VerifyReport { mode, checks }
    }

    /// Multiply two elements of `self ⊗ other` (indexed source-major) with the
    /// Koszul rule `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`, without materializing
    /// the tensor-product algebra.
    pub fn tensor_multiply(
        &self,
        other: &SuperAlgebra,
        x: &SparseVec,
        y: &SparseVec,
    ) -> SparseVec {
        let db = other.dim();
        let mut acc: std::collections::BTreeMap<usize, Scalar> = std::collections::BTreeMap::new();
        for (p, a) in x {
            let (i, j) = (p / db, p % db);
            for (q, b) in y {
                let (k, l) = (q / db, q % db);
                let sign = other.space.parity(j) * self.space.parity(k);
                let mut coeff = a.mul(b);
                if sign == 1 {
                    coeff = coeff.neg();
                }
                for (ik, c1) in &self.table[i][k] {
                    for (jl, c2) in &other.table[j][l] {
                        let idx = ik * db + jl;
                        let add = coeff.mul(c1).mul(c2);
                        let cur = acc.remove(&idx).unwrap_or_else(|| self.field().zero());
                        let new = cur.add(&add);
                        if !new.is_zero() {
                            acc.insert(idx, new);
                        }
                    }
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Closure of the span of `gens` under left and right multiplication by
    /// basis elements: the smallest two-sided super-ideal containing them.
    pub fn ideal_closure(&self, gens: &[Vec<Scalar>]) -> RowSpace {
        let dim = self.dim();
        let mut span = RowSpace::empty(dim);
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for g in gens {
            if span.insert(g.clone()) {
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for j in 0..dim {
                let e = self.space.basis_vector(j);
                for prod in [self.multiply(&e, &v), self.multiply(&v, &e)] {
                    if span.insert(prod.clone()) {
                        queue.push(prod);
                    }
                }
            }
        }
        span
    }

    /// Quotient by a homogeneous ideal given as a row space. The quotient
    /// basis is the complement of the ideal's echelon span in the input basis
    /// order. Returns the quotient algebra, the projection and the (k-linear)
    /// section given by the kept basis vectors.
    pub fn quotient_by_ideal(
        &self,
        ideal: &RowSpace,
    ) -> Result<(SuperAlgebra, GradedMap, GradedMap)> {
        let dim = self.dim();
        for row in ideal.rows() {
            if self.space.parity_of(row).is_none() && row.iter().any(|s| !s.is_zero()) {
                return Err(Error::NonHomogeneousGenerator(self.fmt_el(row)));
            }
        }
        let kept = ideal.complement_indices();
        let names: Vec<(String, u8)> = kept
            .iter()
            .map(|&i| (self.space.name(i).to_string(), self.space.parity(i)))
            .collect();
        let qspace = SuperSpace::new(self.field(), names)?;

        let mut proj = crate::matrix::Mat::zero(self.field(), kept.len(), dim);
        for j in 0..dim {
            let red = ideal.reduce(&self.space.basis_vector(j));
            for (out, &src) in kept.iter().enumerate() {
                if !red[src].is_zero() {
                    proj.set(out, j, red[src].clone());
                }
            }
        }
        let proj = GradedMap::from_total(self.space.clone(), qspace.clone(), proj);

        let mut incl = crate::matrix::Mat::zero(self.field(), dim, kept.len());
        for (out, &src) in kept.iter().enumerate() {
            incl.set(src, out, self.field().one());
        }
        let incl = GradedMap::from_total(qspace.clone(), self.space.clone(), incl);

        let mut entries = Vec::new();
        for (qi, &i) in kept.iter().enumerate() {
            for (qj, &j) in kept.iter().enumerate() {
                let prod = from_sparse(dim, self.field(), &self.table[i][j]);
                let img = proj.apply(&prod);
                for (k, s) in to_sparse(&img) {
                    entries.push((qi, qj, k, s));
                }
            }
        }
        let unit_q = proj.apply(&self.unit);
        let q = SuperAlgebra::from_table(qspace, entries, unit_q)?;
        Ok((q, proj, incl))
    }

    /// `A ⊗ B` as a super-algebra with Koszul-signed multiplication.
    pub fn tensor_algebra(&self, other: &SuperAlgebra) -> Result<SuperAlgebra> {
        crate::matrix::require_same_field(self.field(), other.field())?;
        let space = self.space.tensor(&other.space)?;
        let db = other.dim();
        let mut entries = Vec::new();
        for i in 0..self.dim() {
            for j in 0..db {
                for k in 0..self.dim() {
                    for l in 0..db {
                        let sign = other.space.parity(j) * self.space.parity(k);
                        for (ik, c1) in &self.table[i][k] {
                            for (jl, c2) in &other.table[j][l] {
                                let mut c = c1.mul(c2);
                                if sign == 1 {
                                    c = c.neg();
                                }
                                entries.push((i * db + j, k * db + l, ik * db + jl, c));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![self.field().zero(); self.dim() * db];
        for (i, a) in self.unit.iter().enumerate() {
            for (j, b) in other.unit.iter().enumerate() {
                unit[i * db + j] = a.mul(b);
            }
        }
        SuperAlgebra::from_table(space, entries, unit)
    }
}
