//! The grouplike-graded family ∧(W) ⊗ k[Γ] with Γ ≅ Z^r: odd generators w_j
//! that are (1, t^{a_j})-skew primitive over a Laurent group algebra. Elements
//! are finite sums of monomials w_I·t^m, and every Hopf identity is checkable
//! monomial by monomial, which stands in for the infinite-dimensional carrier.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::LieSuperAlgebra;
use crate::monomial::MonomialIndex;
use crate::scalar::{FieldSpec, Scalar};

/// Basis monomial `w_I · t^m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentMono {
    pub odd: MonomialIndex,
    pub exps: Vec<i64>,
}

impl LaurentMono {
    pub fn parity(&self) -> u8 {
        (self.odd.len() % 2) as u8
    }

    pub fn name(&self) -> String {
        let odd = self.odd.name("w");
        if self.exps.iter().all(|&e| e == 0) {
            odd
        } else {
            let t: Vec<String> = self
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, e)
                    }
                })
                .collect();
            if odd == "1" {
                t.join("")
            } else {
                format!("{}·{}", odd, t.join(""))
            }
        }
    }
}

/// A finite sum of monomials with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentElement {
    pub terms: BTreeMap<LaurentMono, Scalar>,
}

impl LaurentElement {
    pub fn zero() -> LaurentElement {
        LaurentElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: LaurentMono, c: Scalar) -> LaurentElement {
        let mut e = LaurentElement::zero();
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, m: LaurentMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let new = old.add(&c);
                if !new.is_zero() {
                    self.terms.insert(m, new);
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (m, v) in &self.terms {
            out.insert(m.clone(), v.mul(c));
        }
        out
    }

    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.name()
                } else {
                    format!("{}·{}", c, m.name())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Elements of the tensor square, for coproducts.
pub type LaurentPair = BTreeMap<(LaurentMono, LaurentMono), Scalar>;

#[derive(Debug, Clone)]
pub struct GrouplikeGradedHopf {
    field: FieldSpec,
    n: u32,
    rank: usize,
    /// weight vector a_j ∈ Z^r per odd generator: Δ(w_j) = w_j⊗1 + t^{a_j}⊗w_j
    weights: Vec<Vec<i64>>,
}

impl GrouplikeGradedHopf {
    pub fn new(field: FieldSpec, n: u32, rank: usize, weights: Vec<Vec<i64>>) -> Result<GrouplikeGradedHopf> {
        if weights.len() != n as usize || weights.iter().any(|w| w.len() != rank) {
            return Err(Error::ShapeMismatch(
                "inconsistent character data: need one weight vector in Z^rank per odd generator"
                    .into(),
            ));
        }
        if n > 16 {
            return Err(Error::Unsupported("odd rank capped at 16".into()));
        }
        Ok(GrouplikeGradedHopf {
            field,
            n,
            rank,
            weights,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn odd_rank(&self) -> u32 {
        self.n
    }

    pub fn lattice_rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn one(&self) -> LaurentElement {
        LaurentElement::monomial(self.group_mono(&vec![0; self.rank]), self.field.one())
    }

    pub fn group_mono(&self, m: &[i64]) -> LaurentMono {
        assert_eq!(m.len(), self.rank);
        LaurentMono {
            odd: MonomialIndex::empty(self.n),
            exps: m.to_vec(),
        }
    }

    pub fn mono(&self, odd: MonomialIndex, m: &[i64]) -> LaurentMono {
        assert_eq!(m.len(), self.rank);
        assert_eq!(odd.bound(), self.n);
        LaurentMono {
            odd,
            exps: m.to_vec(),
        }
    }

    fn weight_sum(&self, k: &MonomialIndex) -> Vec<i64> {
        let mut acc = vec![0i64; self.rank];
        for i in k.indices() {
            for (a, w) in acc.iter_mut().zip(&self.weights[(i - 1) as usize]) {
                *a += w;
            }
        }
        acc
    }

    pub fn multiply_mono(&self, a: &LaurentMono, b: &LaurentMono) -> LaurentElement {
        if !a.odd.disjoint(&b.odd) {
            return LaurentElement::zero();
        }
        let sign = a.odd.merge_sign(&b.odd);
        let exps: Vec<i64> = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
        LaurentElement::monomial(
            LaurentMono {
                odd: a.odd.union(&b.odd),
                exps,
            },
            self.field.from_i64(sign as i64),
        )
    }

    pub fn multiply(&self, a: &LaurentElement, b: &LaurentElement) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                for (m, c) in self.multiply_mono(ma, mb).terms {
                    out.insert(m, c.mul(&ca.mul(cb)));
                }
            }
        }
        out
    }

    /// Δ(w_I t^m) = Σ_{J⊔K=I} sign(J,K) · w_J t^{m+a_K} ⊗ w_K t^m.
    pub fn comultiply_mono(&self, a: &LaurentMono) -> LaurentPair {
        let mut out = LaurentPair::new();
        for (j, k) in a.odd.splits() {
            let sign = j.merge_sign(&k);
            let mut left_exps = a.exps.clone();
            for (l, w) in left_exps.iter_mut().zip(self.weight_sum(&k)) {
                *l += w;
            }
            let left = LaurentMono {
                odd: j,
                exps: left_exps,
            };
            let right = LaurentMono {
                odd: k,
                exps: a.exps.clone(),
            };
            out.insert((left, right), self.field.from_i64(sign as i64));
        }
        out
    }

    pub fn counit_mono(&self, a: &LaurentMono) -> Scalar {
        if a.odd.is_empty() {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    pub fn counit(&self, a: &LaurentElement) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &a.terms {
            acc = acc.add(&self.counit_mono(m).mul(c));
        }
        acc
    }

    /// s(t^m) = t^{−m}, s(w_j) = −t^{−a_j} w_j, extended through
    /// s(xy) = (−1)^{|x||y|} s(y) s(x).
    pub fn antipode_mono(&self, a: &LaurentMono) -> LaurentElement {
        let odd_indices = a.odd.indices();
        if odd_indices.is_empty() {
            let m: Vec<i64> = a.exps.iter().map(|e| -e).collect();
            return LaurentElement::monomial(self.group_mono(&m), self.field.one());
        }
        // split off the largest odd factor: a = u·w_i with u = w_{I'} t^m
        let &i = odd_indices.last().unwrap();
        let rest = MonomialIndex::from_indices(self.n, &odd_indices[..odd_indices.len() - 1])
            .unwrap();
        let u = LaurentMono {
            odd: rest,
            exps: a.exps.clone(),
        };
        let su = self.antipode(&LaurentElement::monomial(u, self.field.one()));
        // s(w_i) = −t^{−a_i} w_i
        let neg_w: Vec<i64> = self.weights[(i - 1) as usize].iter().map(|e| -e).collect();
        let swi = LaurentElement::monomial(
            self.mono(
                MonomialIndex::from_indices(self.n, &[i]).unwrap(),
                &neg_w,
            ),
            self.field.from_i64(-1),
        );
        let sign = if rest.len() % 2 == 1 {
            self.field.from_i64(-1)
        } else {
            self.field.one()
        };
        self.multiply(&swi, &su).scale(&sign)
    }

    pub fn antipode(&self, a: &LaurentElement) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (m, c) in &a.terms {
            out = out.add(&self.antipode_mono(m).scale(c));
        }
        out
    }

    /// π onto the Laurent group algebra: kills every monomial with odd part.
    pub fn project_to_group(&self, a: &LaurentElement) -> LaurentElement {
        let mut out = LaurentElement::zero();
        for (m, c) in &a.terms {
            if m.odd.is_empty() {
                out.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Hopf identities on one basis monomial: coassociativity, the counit law
    /// and both antipode convolution identities.
    pub fn check_axioms_on(&self, a: &LaurentMono) -> Result<()> {
        let d = self.comultiply_mono(a);

        // coassociativity
        let mut lhs: BTreeMap<(LaurentMono, LaurentMono, LaurentMono), Scalar> = BTreeMap::new();
        let mut rhs = lhs.clone();
        for ((u, v), c) in &d {
            for ((x, y), c2) in self.comultiply_mono(u) {
                let e = lhs.entry((x, y, v.clone())).or_insert_with(|| self.field.zero());
                *e = e.add(&c.mul(&c2));
            }
            for ((x, y), c2) in self.comultiply_mono(v) {
                let e = rhs.entry((u.clone(), x, y)).or_insert_with(|| self.field.zero());
                *e = e.add(&c.mul(&c2));
            }
        }
        lhs.retain(|_, c| !c.is_zero());
        rhs.retain(|_, c| !c.is_zero());
        if lhs != rhs {
            return Err(Error::Inconsistent(format!(
                "coassociativity fails on {}",
                a.name()
            )));
        }

        // counit law
        let mut left = LaurentElement::zero();
        let mut right = LaurentElement::zero();
        for ((u, v), c) in &d {
            left = left.add(&LaurentElement::monomial(
                v.clone(),
                c.mul(&self.counit_mono(u)),
            ));
            right = right.add(&LaurentElement::monomial(
                u.clone(),
                c.mul(&self.counit_mono(v)),
            ));
        }
        let me = LaurentElement::monomial(a.clone(), self.field.one());
        if left != me || right != me {
            return Err(Error::Inconsistent(format!(
                "counit law fails on {}",
                a.name()
            )));
        }

        // antipode convolutions
        let mut conv_l = LaurentElement::zero();
        let mut conv_r = LaurentElement::zero();
        for ((u, v), c) in &d {
            let su = self.antipode_mono(u);
            conv_l = conv_l.add(
                &self
                    .multiply(&su, &LaurentElement::monomial(v.clone(), self.field.one()))
                    .scale(c),
            );
            let sv = self.antipode_mono(v);
            conv_r = conv_r.add(
                &self
                    .multiply(&LaurentElement::monomial(u.clone(), self.field.one()), &sv)
                    .scale(c),
            );
        }
        let target = self.one().scale(&self.counit_mono(a));
        if conv_l != target || conv_r != target {
            return Err(Error::Inconsistent(format!(
                "antipode convolution fails on {}",
                a.name()
            )));
        }
        Ok(())
    }

    /// Multiplicativity of Δ on a pair of monomials.
    pub fn check_comult_multiplicative(&self, a: &LaurentMono, b: &LaurentMono) -> bool {
        let prod = self.multiply_mono(a, b);
        let mut lhs = LaurentPair::new();
        for (m, c) in &prod.terms {
            for (k, v) in self.comultiply_mono(m) {
                let e = lhs.entry(k).or_insert_with(|| self.field.zero());
                *e = e.add(&v.mul(c));
            }
        }
        lhs.retain(|_, c| !c.is_zero());
        let da = self.comultiply_mono(a);
        let db = self.comultiply_mono(b);
        let mut rhs = LaurentPair::new();
        for ((u1, v1), c1) in &da {
            for ((u2, v2), c2) in &db {
                // (u1⊗v1)(u2⊗v2) = (−1)^{|v1||u2|} u1u2 ⊗ v1v2
                let sign = v1.parity() * u2.parity();
                for (mu, cu) in self.multiply_mono(u1, u2).terms {
                    for (mv, cv) in self.multiply_mono(v1, v2).terms {
                        let mut c = c1.mul(c2).mul(&cu).mul(&cv);
                        if sign == 1 {
                            c = c.neg();
                        }
                        let e = rhs
                            .entry((mu.clone(), mv.clone()))
                            .or_insert_with(|| self.field.zero());
                        *e = e.add(&c);
                    }
                }
            }
        }
        rhs.retain(|_, c| !c.is_zero());
        lhs == rhs
    }

    /// Monomials in the window: all odd parts, lattice exponents with
    /// max-norm ≤ m.
    pub fn window(&self, m: i64) -> Vec<LaurentMono> {
        let mut exps = vec![vec![]];
        for _ in 0..self.rank {
            let mut next = Vec::new();
            for e in &exps {
                for v in -m..=m {
                    let mut e2: Vec<i64> = e.clone();
                    e2.push(v);
                    next.push(e2);
                }
            }
            exps = next;
        }
        let mut out = Vec::new();
        for odd in MonomialIndex::all(self.n) {
            for e in &exps {
                out.push(LaurentMono {
                    odd,
                    exps: e.clone(),
                });
            }
        }
        out
    }

    /// Sweep the Hopf axioms over the window. Identities are per-monomial, so
    /// this is a sanity sweep of the stated bound, not a proof.
    pub fn verify_window(&self, m: i64) -> Result<()> {
        for mono in self.window(m) {
            self.check_axioms_on(&mono)?;
        }
        Ok(())
    }

    /// The intrinsic Lie super-algebra of the family: abelian g₀ dual to the
    /// torus, odd part spanned by the w-duals, bracket [h_i, x_j] = a_{j,i} x_j.
    pub fn intrinsic_lie(&self) -> LieSuperAlgebra {
        let field = self.field;
        let s = self.rank;
        let n = self.n as usize;
        let even: Vec<String> = (1..=s).map(|i| format!("h{i}")).collect();
        let odd: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut given = Vec::new();
        for i in 0..s {
            for j in 0..n {
                let mut v = vec![field.zero(); s + n];
                v[s + j] = field.from_i64(self.weights[j][i]);
                given.push(((i, s + j), v));
            }
        }
        for j in 0..n {
            for k in j..n {
                given.push(((s + j, s + k), vec![field.zero(); s + n]));
            }
        }
        LieSuperAlgebra::new(field, even, odd, given).expect("intrinsic Lie data is consistent")
    }
}

/// The Borel-type carrier: n = 1, r = 1, Δ(w) = w⊗1 + t⊗w.
pub fn borel_carrier(field: FieldSpec) -> GrouplikeGradedHopf {
    GrouplikeGradedHopf::new(field, 1, 1, vec![vec![1]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn borel_comultiplication() {
        // Δ(w t^m) = w t^m ⊗ t^m + t^{m+1} ⊗ w t^m
        let g = borel_carrier(q());
        let w1 = MonomialIndex::full(1);
        for m in [-3i64, 0, 5] {
            let d = g.comultiply_mono(&g.mono(w1, &[m]));
            assert_eq!(d.len(), 2);
            let a = (g.mono(w1, &[m]), g.group_mono(&[m]));
            let b = (g.group_mono(&[m + 1]), g.mono(w1, &[m]));
            assert!(d.get(&a).unwrap().is_one());
            assert!(d.get(&b).unwrap().is_one());
        }
    }

    #[test]
    fn projection_and_counit() {
        let g = borel_carrier(q());
        let w1 = MonomialIndex::full(1);
        let wt = LaurentElement::monomial(g.mono(w1, &[3]), q().one());
        assert!(g.project_to_group(&wt).is_zero());
        let t = LaurentElement::monomial(g.group_mono(&[3]), q().one());
        assert_eq!(g.project_to_group(&t), t);
        assert!(g.counit(&wt).is_zero());
        assert!(g.counit(&t).is_one());
    }

    #[test]
    fn window_axioms_hold() {
        let g = borel_carrier(q());
        g.verify_window(4).unwrap();
        // rank-2 odd family with mixed weights
        let g2 = GrouplikeGradedHopf::new(q(), 2, 1, vec![vec![1], vec![-2]]).unwrap();
        g2.verify_window(2).unwrap();
    }

    #[test]
    fn antipode_squared_is_identity_on_window() {
        let g = borel_carrier(q());
        for mono in g.window(10) {
            let s2 = g.antipode(&g.antipode_mono(&mono));
            assert_eq!(s2, LaurentElement::monomial(mono, q().one()));
        }
    }

    #[test]
    fn comult_is_multiplicative_on_window() {
        let g = GrouplikeGradedHopf::new(q(), 2, 2, vec![vec![1, 0], vec![1, -1]]).unwrap();
        let monos = g.window(1);
        for a in &monos {
            for b in &monos {
                assert!(g.check_comult_multiplicative(a, b));
            }
        }
    }

    #[test]
    fn intrinsic_lie_of_borel() {
        let g = borel_carrier(q());
        let l = g.intrinsic_lie();
        l.expect_verified().unwrap();
        assert_eq!(l.delta_character(), vec![q().one()]);
    }

    #[test]
    fn inconsistent_weights_rejected() {
        assert!(GrouplikeGradedHopf::new(q(), 2, 1, vec![vec![1]]).is_err());
        assert!(GrouplikeGradedHopf::new(q(), 1, 2, vec![vec![1]]).is_err());
    }
}
