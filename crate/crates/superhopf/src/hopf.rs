//! Hopf super-algebras as structure constants: the axiom battery, the
//! standard constructors (exterior algebras, group algebras, tensor products,
//! quotients, duals), antipode solving, grouplikes and primitive functionals.

use std::collections::BTreeMap;

use crate::algebra::{from_sparse, to_sparse, AxiomAcc, SparseVec, SuperAlgebra, VerifyMode, VerifyReport};
use crate::error::{Error, Result};
use crate::graded_map::GradedMap;
use crate::matrix::{LinearSystem, Mat, RowSpace};
use crate::monomial::MonomialIndex;
use crate::scalar::{FieldSpec, Scalar};
use crate::space::SuperSpace;

#[derive(Debug, Clone)]
pub struct HopfSuperAlgebra {
    alg: SuperAlgebra,
    comult: GradedMap,
    counit: GradedMap,
    antipode: GradedMap,
}

impl HopfSuperAlgebra {
    pub fn new(
        alg: SuperAlgebra,
        comult: GradedMap,
        counit: GradedMap,
        antipode: GradedMap,
    ) -> Result<HopfSuperAlgebra> {
        let space = alg.space();
        if !comult.source().same_signature(space) || !comult.target().same_signature(alg.square()) {
            return Err(Error::ShapeMismatch("comult must map A to A⊗A".into()));
        }
        if !counit.source().same_signature(space) || counit.target().dim() != 1 {
            return Err(Error::ShapeMismatch("counit must map A to k".into()));
        }
        if !antipode.source().same_signature(space) || !antipode.target().same_signature(space) {
            return Err(Error::ShapeMismatch("antipode must map A to A".into()));
        }
        Ok(HopfSuperAlgebra {
            alg,
            comult,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.alg
    }

    pub fn space(&self) -> &SuperSpace {
        self.alg.space()
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn comult(&self) -> &GradedMap {
        &self.comult
    }

    pub fn counit(&self) -> &GradedMap {
        &self.counit
    }

    pub fn antipode(&self) -> &GradedMap {
        &self.antipode
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.alg.one()
    }

    /// Δ of a basis element as sparse `(left, right, coeff)` triples.
    pub fn comult_of(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let dim = self.dim();
        let img = self.comult.apply_to_basis(i);
        to_sparse(&img)
            .into_iter()
            .map(|(p, s)| (p / dim, p % dim, s))
            .collect()
    }

    pub fn counit_of(&self, i: usize) -> Scalar {
        self.counit.apply_to_basis(i)[0].clone()
    }

    pub fn counit_value(&self, v: &[Scalar]) -> Scalar {
        self.counit.apply(v)[0].clone()
    }

    /// Δ applied to an arbitrary element, as a dense vector over A⊗A.
    pub fn comult_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(v)
    }

    /// Product on A⊗A with the Koszul sign, computed sparsely.
    pub fn square_multiply(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.alg.tensor_multiply(&self.alg, x, y)
    }

    /// The exhaustive axiom battery. In `SuperCommutative` mode, the full
    /// Hopf-super-algebra axioms including super-commutativity and the
    /// antipode being an involution; in `BialgebraWithAntipode` mode (used for
    /// bosonizations and duals) commutativity and the involution claim are
    /// skipped.
    pub fn verify(&self, mode: VerifyMode) -> VerifyReport {
        let mut report = self.alg.verify_algebra(mode);
        let dim = self.dim();
        let field = self.field();
        let fmt = |v: &[Scalar]| self.space().format_element(v);
        let fmt2 = |v: &BTreeMap<(usize, usize), Scalar>| {
            let parts: Vec<String> = v
                .iter()
                .filter(|(_, s)| !s.is_zero())
                .map(|((j, k), s)| format!("{}·{}⊗{}", s, self.space().name(*j), self.space().name(*k)))
                .collect();
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        };

        let mut even = AxiomAcc::new("comult-even");
        if !self.comult.is_even() {
            even.violation(vec![], "odd component of comult".into(), "0".into());
        }
        if !self.counit.is_even() {
            even.violation(vec![], "odd component of counit".into(), "0".into());
        }
        report.checks.push(even.finish());

        // coassociativity on each basis element, accumulated in A⊗A⊗A
        let mut coassoc = AxiomAcc::new("coassociativity");
        for i in 0..dim {
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in self.comult_of(i) {
                for (a, b, d) in self.comult_of(j) {
                    let e = lhs.entry((a, b, k)).or_insert_with(|| field.zero());
                    *e = e.add(&c.mul(&d));
                }
                for (a, b, d) in self.comult_of(k) {
                    let e = rhs.entry((j, a, b)).or_insert_with(|| field.zero());
                    *e = e.add(&c.mul(&d));
                }
            }
            lhs.retain(|_, s| !s.is_zero());
            rhs.retain(|_, s| !s.is_zero());
            if lhs != rhs {
                coassoc.violation(vec![i], format!("{lhs:?}"), format!("{rhs:?}"));
            }
        }
        report.checks.push(coassoc.finish());

        let mut counit_law = AxiomAcc::new("counit-law");
        for i in 0..dim {
            let mut left = vec![field.zero(); dim];
            let mut right = vec![field.zero(); dim];
            for (j, k, c) in self.comult_of(i) {
                left[k] = left[k].add(&c.mul(&self.counit_of(j)));
                right[j] = right[j].add(&c.mul(&self.counit_of(k)));
            }
            let e = self.space().basis_vector(i);
            if left != e {
                counit_law.violation(vec![i], fmt(&left), fmt(&e));
            }
            if right != e {
                counit_law.violation(vec![i], fmt(&right), fmt(&e));
            }
        }
        report.checks.push(counit_law.finish());

        // Δ and ε are algebra maps
        let mut comult_alg = AxiomAcc::new("comult-algebra-map");
        let one_sq = {
            let one = self.one();
            let mut m = BTreeMap::new();
            for (i, a) in one.iter().enumerate() {
                for (j, b) in one.iter().enumerate() {
                    let v = a.mul(b);
                    if !v.is_zero() {
                        m.insert((i, j), v);
                    }
                }
            }
            m
        };
        let delta_one: BTreeMap<(usize, usize), Scalar> = {
            let img = self.comult.apply(&self.one());
            to_sparse(&img)
                .into_iter()
                .map(|(p, s)| ((p / dim, p % dim), s))
                .collect()
        };
        if delta_one != one_sq {
            comult_alg.violation(vec![], fmt2(&delta_one), fmt2(&one_sq));
        }
        for i in 0..dim {
            let di = to_sparse(&self.comult.apply_to_basis(i));
            for j in 0..dim {
                let dj = to_sparse(&self.comult.apply_to_basis(j));
                let rhs = self.square_multiply(&di, &dj);
                let prod = from_sparse(dim, field, self.alg.basis_product(i, j));
                let lhs = to_sparse(&self.comult.apply(&prod));
                if lhs != rhs {
                    let mk = |v: &SparseVec| {
                        let m: BTreeMap<(usize, usize), Scalar> =
                            v.iter().map(|(p, s)| ((p / dim, p % dim), s.clone())).collect();
                        fmt2(&m)
                    };
                    comult_alg.violation(vec![i, j], mk(&lhs), mk(&rhs));
                }
            }
        }
        report.checks.push(comult_alg.finish());

        let mut counit_alg = AxiomAcc::new("counit-algebra-map");
        if !self.counit_value(&self.one()).is_one() {
            counit_alg.violation(vec![], self.counit_value(&self.one()).to_string(), "1".into());
        }
        for i in 0..dim {
            for j in 0..dim {
                let prod = from_sparse(dim, field, self.alg.basis_product(i, j));
                let lhs = self.counit_value(&prod);
                let rhs = self.counit_of(i).mul(&self.counit_of(j));
                if lhs != rhs {
                    counit_alg.violation(vec![i, j], lhs.to_string(), rhs.to_string());
                }
            }
        }
        report.checks.push(counit_alg.finish());

        let mut anti_even = AxiomAcc::new("antipode-even");
        if !self.antipode.is_even() {
            anti_even.violation(vec![], "odd component of antipode".into(), "0".into());
        }
        report.checks.push(anti_even.finish());

        let mut conv = AxiomAcc::new("antipode-convolution");
        for i in 0..dim {
            let target = self.one().iter().map(|s| s.mul(&self.counit_of(i))).collect::<Vec<_>>();
            let mut left = vec![field.zero(); dim];
            let mut right = vec![field.zero(); dim];
            for (j, k, c) in self.comult_of(i) {
                let sj = self.antipode.apply_to_basis(j);
                let term = self.alg.multiply(&sj, &self.space().basis_vector(k));
                for (t, s) in to_sparse(&term) {
                    left[t] = left[t].add(&c.mul(&s));
                }
                let sk = self.antipode.apply_to_basis(k);
                let term = self.alg.multiply(&self.space().basis_vector(j), &sk);
                for (t, s) in to_sparse(&term) {
                    right[t] = right[t].add(&c.mul(&s));
                }
            }
            if left != target {
                conv.violation(vec![i], fmt(&left), fmt(&target));
            }
            if right != target {
                conv.violation(vec![i], fmt(&right), fmt(&target));
            }
        }
        report.checks.push(conv.finish());

        if mode == VerifyMode::SuperCommutative {
            let mut invol = AxiomAcc::new("antipode-involution");
            let ss = self
                .antipode
                .compose(&self.antipode)
                .expect("antipode composes with itself");
            if ss.total() != Mat::identity(field, dim) {
                invol.violation(vec![], "s∘s".into(), "id".into());
            }
            report.checks.push(invol.finish());
        }

        report
    }

    /// Errors unless every axiom holds in the given mode.
    pub fn expect_verified(&self, mode: VerifyMode) -> Result<()> {
        let report = self.verify(mode);
        if report.is_ok() {
            Ok(())
        } else {
            let names: Vec<_> = report.violated().iter().map(|c| c.axiom).collect();
            Err(Error::UnverifiedInput(format!(
                "axioms violated: {}",
                names.join(", ")
            )))
        }
    }
}

/// The exterior Hopf super-algebra Λ(kⁿ): basis `w_I` over strictly increasing
/// index sequences, every generator an odd primitive.
pub fn exterior_hopf(n: u32, field: FieldSpec) -> Result<HopfSuperAlgebra> {
    if n > 16 {
        return Err(Error::Unsupported(format!("exterior rank {n} too large")));
    }
    let monos: Vec<MonomialIndex> = MonomialIndex::all(n).collect();
    let index_of = |m: &MonomialIndex| m.bits() as usize;
    let basis: Vec<(String, u8)> = monos
        .iter()
        .map(|m| (m.name("w"), (m.len() % 2) as u8))
        .collect();
    let space = SuperSpace::new(field, basis)?;
    let dim = space.dim();

    let mut mult = Vec::new();
    for i in &monos {
        for j in &monos {
            if i.disjoint(j) {
                let sign = i.merge_sign(j);
                mult.push((
                    index_of(i),
                    index_of(j),
                    index_of(&i.union(j)),
                    field.from_i64(sign as i64),
                ));
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    let alg = SuperAlgebra::from_table(space.clone(), mult, unit)?;

    let mut comult = Mat::zero(field, dim * dim, dim);
    for i in &monos {
        for (j, k) in i.splits() {
            let sign = j.merge_sign(&k);
            comult.add_to(
                index_of(&j) * dim + index_of(&k),
                index_of(i),
                &field.from_i64(sign as i64),
            );
        }
    }
    let comult = GradedMap::from_total(space.clone(), alg.square().clone(), comult);

    let mut counit = Mat::zero(field, 1, dim);
    counit.set(0, 0, field.one());
    let counit = GradedMap::from_total(space.clone(), SuperSpace::ground(field), counit);

    // s(w_I) = (−1)^r w_I, the parity involution; cross-checked against
    // antipode_solve in tests
    let mut anti = Mat::zero(field, dim, dim);
    for i in &monos {
        let sign = if i.len() % 2 == 0 { 1 } else { -1 };
        anti.set(index_of(i), index_of(i), field.from_i64(sign));
    }
    let antipode = GradedMap::from_total(space.clone(), space, anti);

    HopfSuperAlgebra::new(alg, comult, counit, antipode)
}

/// Group algebra of a finite abelian group `Z_{o_1} × … × Z_{o_k}`, purely
/// even, with grouplike basis. `group_hopf(&[2], f)` is kZ₂ on basis {e, σ}.
pub fn group_hopf(orders: &[u64], field: FieldSpec) -> Result<HopfSuperAlgebra> {
    if orders.iter().any(|&o| o < 1) {
        return Err(Error::ShapeMismatch("group orders must be positive".into()));
    }
    let dim: u64 = orders.iter().product();
    if dim > 64 {
        return Err(Error::Unsupported("group order too large".into()));
    }
    let dim = dim as usize;
    let unrank = |mut idx: usize| -> Vec<u64> {
        let mut t = Vec::with_capacity(orders.len());
        for &o in orders.iter().rev() {
            t.push(idx as u64 % o);
            idx /= o as usize;
        }
        t.reverse();
        t
    };
    let rank = |t: &[u64]| -> usize {
        let mut idx = 0usize;
        for (c, &o) in t.iter().zip(orders) {
            idx = idx * o as usize + *c as usize;
        }
        idx
    };
    let name = |t: &[u64]| -> String {
        if t.iter().all(|&c| c == 0) {
            "e".into()
        } else if orders == [2] {
            "σ".into()
        } else {
            format!(
                "g{}",
                t.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("_")
            )
        }
    };

    let basis: Vec<(String, u8)> = (0..dim).map(|i| (name(&unrank(i)), 0)).collect();
    let space = SuperSpace::new(field, basis)?;

    let mut mult = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let (a, b) = (unrank(i), unrank(j));
            let sum: Vec<u64> = a
                .iter()
                .zip(&b)
                .zip(orders)
                .map(|((x, y), &o)| (x + y) % o)
                .collect();
            mult.push((i, j, rank(&sum), field.one()));
        }
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    let alg = SuperAlgebra::from_table(space.clone(), mult, unit)?;

    let mut comult = Mat::zero(field, dim * dim, dim);
    let mut counit = Mat::zero(field, 1, dim);
    let mut anti = Mat::zero(field, dim, dim);
    for i in 0..dim {
        comult.set(i * dim + i, i, field.one());
        counit.set(0, i, field.one());
        let inv: Vec<u64> = unrank(i)
            .iter()
            .zip(orders)
            .map(|(c, &o)| (o - c) % o)
            .collect();
        anti.set(rank(&inv), i, field.one());
    }
    let comult = GradedMap::from_total(space.clone(), alg.square().clone(), comult);
    let counit = GradedMap::from_total(space.clone(), SuperSpace::ground(field), counit);
    let antipode = GradedMap::from_total(space.clone(), space, anti);
    HopfSuperAlgebra::new(alg, comult, counit, antipode)
}

/// Tensor product of Hopf super-algebras with the Koszul middle swap.
pub fn tensor_hopf(a: &HopfSuperAlgebra, b: &HopfSuperAlgebra) -> Result<HopfSuperAlgebra> {
    crate::matrix::require_same_field(a.field(), b.field())?;
    let field = a.field();
    let alg = a.algebra().tensor_algebra(b.algebra())?;
    let space = alg.space().clone();
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;

    let mut comult = Mat::zero(field, dim * dim, dim);
    for i in 0..da {
        let di = a.comult_of(i);
        for j in 0..db {
            let dj = b.comult_of(j);
            for (a1, a2, c1) in &di {
                for (b1, b2, c2) in &dj {
                    // (a1⊗b1)⊗(a2⊗b2) with sign from moving b1 past a2
                    let sign = b.space().parity(*b1) * a.space().parity(*a2);
                    let mut c = c1.mul(c2);
                    if sign == 1 {
                        c = c.neg();
                    }
                    let row = (a1 * db + b1) * dim + (a2 * db + b2);
                    comult.add_to(row, i * db + j, &c);
                }
            }
        }
    }
    let comult = GradedMap::from_total(space.clone(), alg.square().clone(), comult);

    let mut counit = Mat::zero(field, 1, dim);
    let mut anti = Mat::zero(field, dim, dim);
    for i in 0..da {
        for j in 0..db {
            counit.set(0, i * db + j, a.counit_of(i).mul(&b.counit_of(j)));
            let si = a.antipode().apply_to_basis(i);
            let sj = b.antipode().apply_to_basis(j);
            for (k, c1) in to_sparse(&si) {
                for (l, c2) in to_sparse(&sj) {
                    anti.add_to(k * db + l, i * db + j, &c1.mul(&c2));
                }
            }
        }
    }
    let counit = GradedMap::from_total(space.clone(), SuperSpace::ground(field), counit);
    let antipode = GradedMap::from_total(space.clone(), space, anti);
    HopfSuperAlgebra::new(alg, comult, counit, antipode)
}

/// Quotient by the bi-ideal generated by homogeneous elements. The quotient
/// basis is the complement of the ideal's echelon span in the input basis
/// order; the ideal must be a coideal stable under the antipode, checked with
/// witnesses.
pub fn quotient_hopf(
    a: &HopfSuperAlgebra,
    generators: &[Vec<Scalar>],
) -> Result<(HopfSuperAlgebra, GradedMap)> {
    let dim = a.dim();
    let field = a.field();
    for g in generators {
        if a.space().parity_of(g).is_none() && g.iter().any(|s| !s.is_zero()) {
            return Err(Error::NonHomogeneousGenerator(a.space().format_element(g)));
        }
    }
    let ideal = a.algebra().ideal_closure(generators);

    // coideal: Δ(I) ⊆ I⊗A + A⊗I
    let mut mixed = RowSpace::empty(dim * dim);
    for u in ideal.rows() {
        for j in 0..dim {
            let mut v1 = vec![field.zero(); dim * dim];
            let mut v2 = vec![field.zero(); dim * dim];
            for (p, s) in to_sparse(u) {
                v1[p * dim + j] = s.clone();
                v2[j * dim + p] = s;
            }
            mixed.insert(v1);
            mixed.insert(v2);
        }
    }
    for u in ideal.rows() {
        let du = a.comult_vec(u);
        if !mixed.contains(&du) {
            return Err(Error::NotACoideal(a.space().format_element(u)));
        }
        if !a.counit_value(u).is_zero() {
            return Err(Error::NotACoideal(format!(
                "counit does not vanish on {}",
                a.space().format_element(u)
            )));
        }
        let su = a.antipode().apply(u);
        if !ideal.contains(&su) {
            return Err(Error::NotACoideal(format!(
                "antipode leaves the ideal: s({}) = {}",
                a.space().format_element(u),
                a.space().format_element(&su)
            )));
        }
    }

    let (qalg, proj, incl) = a.algebra().quotient_by_ideal(&ideal)?;
    let pp = proj.tensor(&proj)?;
    let comult_q = pp
        .compose(&a.comult().compose(&incl)?)?
        .recast(qalg.space().clone(), qalg.square().clone());
    let counit_q = a.counit().compose(&incl)?;
    let antipode_q = proj.compose(&a.antipode().compose(&incl)?)?;
    let q = HopfSuperAlgebra::new(qalg, comult_q, counit_q, antipode_q)?;
    Ok((q, proj))
}

/// The largest purely even quotient `H = A/(A₁)` with its projection.
#[derive(Debug, Clone)]
pub struct PurelyEvenQuotient {
    pub h: HopfSuperAlgebra,
    pub projection: GradedMap,
}

pub fn purely_even_quotient(a: &HopfSuperAlgebra) -> Result<PurelyEvenQuotient> {
    let gens: Vec<Vec<Scalar>> = a
        .space()
        .odd_indices()
        .into_iter()
        .map(|i| a.space().basis_vector(i))
        .collect();
    let (h, projection) = quotient_hopf(a, &gens)?;
    debug_assert!(h.space().is_purely_even());
    Ok(PurelyEvenQuotient { h, projection })
}

/// Dual Hopf structure on A* with the Koszul evaluation convention
/// `(f⊗g)(x⊗y) = (−1)^{|g||x|} f(x)g(y)`. Duals of super-commutative algebras
/// are super-cocommutative but generally not super-commutative, so they are
/// verified in bialgebra mode.
pub fn dual_hopf(a: &HopfSuperAlgebra) -> Result<HopfSuperAlgebra> {
    let dim = a.dim();
    let field = a.field();
    let basis: Vec<(String, u8)> = (0..dim)
        .map(|i| (format!("{}*", a.space().name(i)), a.space().parity(i)))
        .collect();
    let space = SuperSpace::new(field, basis)?;

    let sign = |i: usize, j: usize| -> i64 {
        if a.space().parity(i) * a.space().parity(j) == 1 {
            -1
        } else {
            1
        }
    };

    let mut mult = Vec::new();
    for k in 0..dim {
        for (i, j, c) in a.comult_of(k) {
            mult.push((i, j, k, c.mul(&field.from_i64(sign(i, j)))));
        }
    }
    let unit: Vec<Scalar> = (0..dim).map(|k| a.counit_of(k)).collect();
    let alg = SuperAlgebra::from_table(space.clone(), mult, unit)?;

    let mut comult = Mat::zero(field, dim * dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in a.algebra().basis_product(i, j) {
                comult.add_to(i * dim + j, *k, &c.mul(&field.from_i64(sign(i, j))));
            }
        }
    }
    let comult = GradedMap::from_total(space.clone(), alg.square().clone(), comult);

    let one = a.one();
    let mut counit = Mat::zero(field, 1, dim);
    for (k, c) in to_sparse(&one) {
        counit.set(0, k, c);
    }
    let counit = GradedMap::from_total(space.clone(), SuperSpace::ground(field), counit);

    let anti = a.antipode().total().transpose();
    let antipode = GradedMap::from_total(space.clone(), space, anti);
    HopfSuperAlgebra::new(alg, comult, counit, antipode)
}

/// Solve the convolution-inverse system `Σ S(a₍₁₎)·a₍₂₎ = ε(a)1` for the
/// antipode of a finite-dimensional bialgebra. A left convolution inverse of
/// the identity is automatically two-sided at finite dimension, which is
/// checked and reported as an internal inconsistency if violated.
pub fn antipode_solve(
    alg: &SuperAlgebra,
    comult: &GradedMap,
    counit: &GradedMap,
) -> Result<GradedMap> {
    let dim = alg.dim();
    let field = alg.field();
    let unknowns = dim * dim; // S[m, j], flattened m*dim + j
    let mut sys = LinearSystem::new(field, unknowns);
    for i in 0..dim {
        let eps = counit.apply_to_basis(i)[0].clone();
        let dimg = to_sparse(&comult.apply_to_basis(i));
        for r in 0..dim {
            let mut terms = Vec::new();
            for (p, c) in &dimg {
                let (j, k) = (p / dim, p % dim);
                for m in 0..dim {
                    let prod = alg.basis_product(m, k);
                    if let Some((_, v)) = prod.iter().find(|(t, _)| *t == r) {
                        terms.push((m * dim + j, c.mul(v)));
                    }
                }
            }
            let rhs = eps.mul(&alg.one()[r]);
            sys.add_row(terms, rhs);
        }
    }
    let sol = sys.solve().ok_or(Error::NoAntipode)?;
    if !sol.kernel.is_empty() {
        return Err(Error::Inconsistent(
            "antipode system is consistent but not unique".into(),
        ));
    }
    let mut m = Mat::zero(field, dim, dim);
    for (p, s) in to_sparse(&sol.particular) {
        m.set(p / dim, p % dim, s);
    }
    let s = GradedMap::from_total(alg.space().clone(), alg.space().clone(), m);

    // the right identity must follow; a failure flags a solver bug
    for i in 0..dim {
        let mut right = vec![field.zero(); dim];
        let dimg = to_sparse(&comult.apply_to_basis(i));
        for (p, c) in &dimg {
            let (j, k) = (p / dim, p % dim);
            let sk = s.apply_to_basis(k);
            let term = alg.multiply(&alg.space().basis_vector(j), &sk);
            for (t, v) in to_sparse(&term) {
                right[t] = right[t].add(&c.mul(&v));
            }
        }
        let eps = counit.apply_to_basis(i)[0].clone();
        let target: Vec<Scalar> = alg.one().iter().map(|s| s.mul(&eps)).collect();
        if right != target {
            return Err(Error::Inconsistent(
                "left convolution inverse is not a right inverse".into(),
            ));
        }
    }
    Ok(s)
}

/// All grouplikes `Δg = g⊗g, ε(g) = 1`, found by exhaustive support
/// enumeration over the even basis with exact solving per support. The
/// quadratic couplings left open by the linear part are resolved by univariate
/// root-finding over Q and by residue enumeration over F_p.
pub fn grouplikes(a: &HopfSuperAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let dim = a.dim();
    if dim > 64 {
        return Err(Error::Unsupported("grouplike search capped at dim 64".into()));
    }
    let even = a.space().even_indices();
    if even.len() > 16 {
        return Err(Error::Unsupported(
            "grouplike support enumeration capped at 16 even basis vectors".into(),
        ));
    }
    let field = a.field();
    let dim2 = dim * dim;
    // Δ as columns over pair index
    let mut delta_cols: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
    for i in 0..dim {
        delta_cols.push(a.comult.apply_to_basis(i));
    }
    let eps: Vec<Scalar> = (0..dim).map(|i| a.counit_of(i)).collect();

    let mut found: Vec<Vec<Scalar>> = Vec::new();
    for mask in 1u32..(1 << even.len()) {
        let support: Vec<usize> = even
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &i)| i)
            .collect();
        let in_support = |i: usize| support.contains(&i);
        let m = support.len();

        let mut sys = LinearSystem::new(field, m);
        for p in 0..dim2 {
            let (j, k) = (p / dim, p % dim);
            if in_support(j) && in_support(k) {
                continue;
            }
            let terms: Vec<(usize, Scalar)> = support
                .iter()
                .enumerate()
                .map(|(u, &i)| (u, delta_cols[i][p].clone()))
                .collect();
            sys.add_row(terms, field.zero());
        }
        sys.add_row(
            support
                .iter()
                .enumerate()
                .map(|(u, &i)| (u, eps[i].clone()))
                .collect(),
            field.one(),
        );
        let Some(sol) = sys.solve() else { continue };

        // residual quadratic equations over the affine family
        let quads: Vec<(usize, usize)> = support
            .iter()
            .flat_map(|&j| support.iter().map(move |&k| (j, k)))
            .collect();
        let candidates = solve_quadratic_family(a, &sol, &support, &quads, &delta_cols)?;
        for c in candidates {
            if support.iter().enumerate().any(|(u, _)| c[u].is_zero()) {
                continue; // support not exact; found under its true support
            }
            let mut g = vec![field.zero(); dim];
            for (u, &i) in support.iter().enumerate() {
                g[i] = c[u].clone();
            }
            if is_grouplike(a, &g) && !found.contains(&g) {
                found.push(g);
            }
        }
    }
    Ok(found)
}

pub fn is_grouplike(a: &HopfSuperAlgebra, g: &[Scalar]) -> bool {
    if !a.counit_value(g).is_one() {
        return false;
    }
    let dim = a.dim();
    let dg = a.comult.apply(g);
    for p in 0..dim * dim {
        let (j, k) = (p / dim, p % dim);
        if dg[p] != g[j].mul(&g[k]) {
            return false;
        }
    }
    true
}

/// Solve the coupled quadratics `Σ c_i Δ_i^{jk} = c_j c_k` on an affine family
/// `c = particular + Σ t_a kernel_a`. Parameters are eliminated one at a time
/// through equations univariate in a single parameter; over F_p small
/// parameter counts fall back to residue enumeration.
fn solve_quadratic_family(
    a: &HopfSuperAlgebra,
    sol: &crate::matrix::AffineSolutions,
    support: &[usize],
    quads: &[(usize, usize)],
    delta_cols: &[Vec<Scalar>],
) -> Result<Vec<Vec<Scalar>>> {
    let field = a.field();
    let dim = a.dim();
    let f = sol.kernel.len();
    let eval_candidate = |t: &[Scalar]| -> Vec<Scalar> {
        let mut c = sol.particular.clone();
        for (a_, ka) in t.iter().zip(&sol.kernel) {
            for (ci, ki) in c.iter_mut().zip(ka) {
                *ci = ci.add(&a_.mul(ki));
            }
        }
        c
    };
    let check = |c: &[Scalar]| -> bool {
        quads.iter().all(|&(j, k)| {
            let mut lhs = field.zero();
            for (u, &i) in support.iter().enumerate() {
                lhs = lhs.add(&c[u].mul(&delta_cols[i][j * dim + k]));
            }
            let (uj, uk) = (
                support.iter().position(|&x| x == j).unwrap(),
                support.iter().position(|&x| x == k).unwrap(),
            );
            lhs == c[uj].mul(&c[uk])
        })
    };

    if f == 0 {
        let c = eval_candidate(&[]);
        return Ok(if check(&c) { vec![c] } else { vec![] });
    }

    if let FieldSpec::Fp(p) = field {
        if (p as f64).powi(f as i32) <= 4096.0 {
            let mut out = Vec::new();
            let mut t = vec![0u64; f];
            loop {
                let ts: Vec<Scalar> = t.iter().map(|&v| field.from_i64(v as i64)).collect();
                let c = eval_candidate(&ts);
                if check(&c) {
                    out.push(c);
                }
                let mut carry = 0;
                while carry < f {
                    t[carry] += 1;
                    if t[carry] < p {
                        break;
                    }
                    t[carry] = 0;
                    carry += 1;
                }
                if carry == f {
                    break;
                }
            }
            return Ok(out);
        }
        return Err(Error::Unsupported(
            "grouplike search: parameter space too large to enumerate".into(),
        ));
    }

    // over Q: build the residual polynomials and eliminate parameters through
    // univariate members
    let polys = build_residual_polys(sol, support, quads, delta_cols, dim, field);
    let mut out = Vec::new();
    solve_poly_system(&polys, &mut vec![None; f], field, &mut |t| {
        let c = eval_candidate(t);
        if check(&c) {
            out.push(c);
        }
    })?;
    Ok(out)
}

/// Residual quadratic polynomials in the free parameters, as monomial maps
/// keyed by (a, b) with a ≤ b encoding t_a·t_b, plus linear and constant rows.
#[derive(Debug, Clone)]
struct QuadPoly {
    constant: Scalar,
    linear: Vec<Scalar>,
    quad: BTreeMap<(usize, usize), Scalar>,
}

impl QuadPoly {
    fn vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .linear
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, _)| i)
            .collect();
        for (a, b) in self.quad.keys() {
            v.push(*a);
            v.push(*b);
        }
        v.sort();
        v.dedup();
        v
    }

    fn substitute(&self, var: usize, value: &Scalar, field: FieldSpec) -> QuadPoly {
        let mut constant = self.constant.clone();
        let mut linear = self.linear.clone();
        let mut quad = BTreeMap::new();
        constant = constant.add(&linear[var].mul(value));
        linear[var] = field.zero();
        for ((a, b), c) in &self.quad {
            match (*a == var, *b == var) {
                (true, true) => constant = constant.add(&c.mul(value).mul(value)),
                (true, false) => linear[*b] = linear[*b].add(&c.mul(value)),
                (false, true) => linear[*a] = linear[*a].add(&c.mul(value)),
                (false, false) => {
                    let e = quad.entry((*a, *b)).or_insert_with(|| field.zero());
                    *e = e.add(c);
                }
            }
        }
        quad.retain(|_, c: &mut Scalar| !c.is_zero());
        QuadPoly {
            constant,
            linear,
            quad,
        }
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero()
            && self.linear.iter().all(Scalar::is_zero)
            && self.quad.is_empty()
    }
}

fn build_residual_polys(
    sol: &crate::matrix::AffineSolutions,
    support: &[usize],
    quads: &[(usize, usize)],
    delta_cols: &[Vec<Scalar>],
    dim: usize,
    field: FieldSpec,
) -> Vec<QuadPoly> {
    let f = sol.kernel.len();
    let pos = |i: usize| support.iter().position(|&x| x == i).unwrap();
    let mut polys = Vec::new();
    for &(j, k) in quads {
        // lhs: Σ_i c_i(t) Δ_i^{jk}  (affine in t); rhs: c_j(t)·c_k(t)
        let mut constant = field.zero();
        let mut linear = vec![field.zero(); f];
        for (u, &i) in support.iter().enumerate() {
            let d = delta_cols[i][j * dim + k].clone();
            constant = constant.add(&sol.particular[u].mul(&d));
            for (a, ker) in sol.kernel.iter().enumerate() {
                linear[a] = linear[a].add(&ker[u].mul(&d));
            }
        }
        let (uj, uk) = (pos(j), pos(k));
        // subtract (p_j + Σ t_a K_a_j)(p_k + Σ t_b K_b_k)
        constant = constant.sub(&sol.particular[uj].mul(&sol.particular[uk]));
        for a in 0..f {
            let cross = sol.kernel[a][uj]
                .mul(&sol.particular[uk])
                .add(&sol.particular[uj].mul(&sol.kernel[a][uk]));
            linear[a] = linear[a].sub(&cross);
        }
        let mut quad = BTreeMap::new();
        for a in 0..f {
            for b in 0..f {
                let c = sol.kernel[a][uj].mul(&sol.kernel[b][uk]).neg();
                if !c.is_zero() {
                    let key = (a.min(b), a.max(b));
                    let e = quad.entry(key).or_insert_with(|| field.zero());
                    *e = e.add(&c);
                }
            }
        }
        quad.retain(|_, c: &mut Scalar| !c.is_zero());
        let p = QuadPoly {
            constant,
            linear,
            quad,
        };
        if !p.is_zero() {
            polys.push(p);
        }
    }
    polys
}

fn solve_poly_system(
    polys: &[QuadPoly],
    assignment: &mut Vec<Option<Scalar>>,
    field: FieldSpec,
    emit: &mut impl FnMut(&[Scalar]),
) -> Result<()> {
    let live: Vec<&QuadPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if live.is_empty() {
        // remaining free parameters would give a positive-dimensional family
        // of grouplikes, which cannot happen (grouplikes are linearly
        // independent); treat leftover freedom as zero-filled and verify later
        let t: Vec<Scalar> = assignment
            .iter()
            .map(|a| a.clone().unwrap_or_else(|| field.zero()))
            .collect();
        emit(&t);
        return Ok(());
    }
    let Some(p) = live.iter().find(|p| p.vars().len() == 1) else {
        return Err(Error::Unsupported(
            "grouplike search: coupled multivariate quadratics beyond scope".into(),
        ));
    };
    let var = p.vars()[0];
    let a2 = p.quad.get(&(var, var)).cloned().unwrap_or_else(|| field.zero());
    let a1 = p.linear[var].clone();
    let a0 = p.constant.clone();
    let roots = univariate_roots(&a2, &a1, &a0, field)?;
    for r in roots {
        let next: Vec<QuadPoly> = polys.iter().map(|q| q.substitute(var, &r, field)).collect();
        if next.iter().any(|q| {
            q.vars().is_empty() && !q.constant.is_zero()
        }) {
            continue;
        }
        assignment[var] = Some(r);
        solve_poly_system(&next, assignment, field, emit)?;
        assignment[var] = None;
    }
    Ok(())
}

/// Exact roots of `a2 t² + a1 t + a0` in the field.
fn univariate_roots(a2: &Scalar, a1: &Scalar, a0: &Scalar, field: FieldSpec) -> Result<Vec<Scalar>> {
    if a2.is_zero() {
        if a1.is_zero() {
            return Ok(if a0.is_zero() { vec![] } else { vec![] });
        }
        return Ok(vec![a0.neg().div(a1)]);
    }
    match field {
        FieldSpec::Fp(p) => {
            let mut out = Vec::new();
            for v in 0..p {
                let t = field.from_i64(v as i64);
                let val = a2.mul(&t).mul(&t).add(&a1.mul(&t)).add(a0);
                if val.is_zero() {
                    out.push(t);
                }
            }
            Ok(out)
        }
        FieldSpec::Rationals => {
            // t = (−a1 ± √D) / 2a2 with D = a1² − 4·a2·a0; rational iff D is a
            // perfect square
            let d = a1.mul(a1).sub(&a2.mul(a0).mul(&field.from_i64(4)));
            let Some(sq) = rational_sqrt(&d) else {
                return Ok(vec![]);
            };
            let two_a2 = a2.mul(&field.from_i64(2));
            let r1 = a1.neg().add(&sq).div(&two_a2);
            let r2 = a1.neg().sub(&sq).div(&two_a2);
            let mut out = vec![r1];
            if out[0] != r2 {
                out.push(r2);
            }
            Ok(out)
        }
    }
}

fn rational_sqrt(s: &Scalar) -> Option<Scalar> {
    use num_traits::Signed;
    let Scalar::Rat(r) = s else { return None };
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Scalar::Rat(num_rational::BigRational::new(n, d)))
    } else {
        None
    }
}

/// Basis of the space of primitive functionals of the given parity:
/// `x(ab) = x(a)ε(b) + (−1)^{|a|·parity} ε(a)x(b)`, vanishing on the opposite
/// parity component. With parity 1 these realize the odd cotangent `W*`.
pub fn primitive_functionals(a: &HopfSuperAlgebra, parity: u8) -> Vec<Vec<Scalar>> {
    let dim = a.dim();
    let field = a.field();
    let mut sys = LinearSystem::new(field, dim);
    for i in 0..dim {
        if a.space().parity(i) != parity {
            sys.add_row(vec![(i, field.one())], field.zero());
        }
    }
    for i in 0..dim {
        for j in 0..dim {
            // x(e_i e_j) − x(e_i)ε(e_j) − (−1)^{|e_i|·parity} ε(e_i)x(e_j) = 0
            let mut terms: Vec<(usize, Scalar)> = a
                .algebra()
                .basis_product(i, j)
                .iter()
                .map(|(k, c)| (*k, c.clone()))
                .collect();
            terms.push((i, a.counit_of(j).neg()));
            let sign = if a.space().parity(i) * parity == 1 {
                field.from_i64(-1)
            } else {
                field.one()
            };
            terms.push((j, a.counit_of(i).mul(&sign).neg()));
            sys.add_row(terms, field.zero());
        }
    }
    sys.kernel()
}

pub fn odd_primitive_functionals(a: &HopfSuperAlgebra) -> Vec<Vec<Scalar>> {
    primitive_functionals(a, 1)
}

pub fn even_primitive_functionals(a: &HopfSuperAlgebra) -> Vec<Vec<Scalar>> {
    primitive_functionals(a, 0)
}

/// Check that `f: A → B` transports all five structure tensors.
pub fn is_hopf_morphism(f: &GradedMap, a: &HopfSuperAlgebra, b: &HopfSuperAlgebra) -> bool {
    let ok = || -> Result<bool> {
        let ff = f.tensor(f)?;
        let lhs = f.compose(a.algebra().mult())?;
        let rhs = b.algebra().mult().compose(&ff)?;
        if lhs.total() != rhs.total() {
            return Ok(false);
        }
        if f.apply(&a.one()) != b.one() {
            return Ok(false);
        }
        let lhs = ff.compose(a.comult())?;
        let rhs = b.comult().compose(f)?;
        if lhs.total() != rhs.total() {
            return Ok(false);
        }
        let lhs = a.counit();
        let rhs = b.counit().compose(f)?;
        if lhs.total() != rhs.total() {
            return Ok(false);
        }
        let lhs = f.compose(a.antipode())?;
        let rhs = b.antipode().compose(f)?;
        Ok(lhs.total() == rhs.total())
    };
    ok().unwrap_or(false)
}

/// Isomorphism test through an explicit pairing matrix.
pub fn hopf_isomorphic_via(a: &HopfSuperAlgebra, b: &HopfSuperAlgebra, p: &GradedMap) -> bool {
    p.is_bijective() && is_hopf_morphism(p, a, b)
}
