//! PBW normal forms in U(g) for a Lie super-algebra g = g₀ ⊕ g₁, the top
//! coefficient map ϖ, the twisted Frobenius pairing, and the dual basis and
//! z-element feeding the explicit integral formula.
//!
//! Normal form: even generators on the left, sorted, exponent notation; odd
//! generators strictly increasing. Rewriting orientation is even-left and
//! odd-increasing so ϖ reads the left coefficient of the top odd monomial.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::{Gen, LieSuperAlgebra};
use crate::monomial::MonomialIndex;
use crate::scalar::Scalar;

/// A normal-ordered PBW monomial `h₁^{e₁}…h_s^{e_s}·x_I`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwMono {
    pub even_exps: Vec<u32>,
    pub odd: MonomialIndex,
}

impl PbwMono {
    pub fn one(s: usize, n: u32) -> PbwMono {
        PbwMono {
            even_exps: vec![0; s],
            odd: MonomialIndex::empty(n),
        }
    }

    pub fn even_degree(&self) -> u32 {
        self.even_exps.iter().sum()
    }

    fn word(&self) -> Vec<Gen> {
        let mut w = Vec::new();
        for (i, &e) in self.even_exps.iter().enumerate() {
            for _ in 0..e {
                w.push(Gen::Even(i));
            }
        }
        for i in self.odd.indices() {
            w.push(Gen::Odd((i - 1) as usize));
        }
        w
    }
}

/// An element of U(g) as a finite sum of normal-ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwElement {
    s: usize,
    n: u32,
    terms: BTreeMap<PbwMono, Scalar>,
}

impl PbwElement {
    pub fn zero(g: &LieSuperAlgebra) -> PbwElement {
        PbwElement {
            s: g.even_dim(),
            n: g.odd_dim() as u32,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(g: &LieSuperAlgebra) -> PbwElement {
        let mut e = PbwElement::zero(g);
        e.terms
            .insert(PbwMono::one(e.s, e.n), g.field().one());
        e
    }

    pub fn scalar(g: &LieSuperAlgebra, c: &Scalar) -> PbwElement {
        let mut e = PbwElement::zero(g);
        if !c.is_zero() {
            e.terms.insert(PbwMono::one(e.s, e.n), c.clone());
        }
        e
    }

    /// The monomial `x_I` itself.
    pub fn odd_monomial(g: &LieSuperAlgebra, i: MonomialIndex) -> PbwElement {
        let mut e = PbwElement::zero(g);
        e.terms.insert(
            PbwMono {
                even_exps: vec![0; e.s],
                odd: i,
            },
            g.field().one(),
        );
        e
    }

    pub fn generator(g: &LieSuperAlgebra, gen: Gen) -> PbwElement {
        let mut e = PbwElement::zero(g);
        let mono = match gen {
            Gen::Even(i) => {
                let mut exps = vec![0; e.s];
                exps[i] = 1;
                PbwMono {
                    even_exps: exps,
                    odd: MonomialIndex::empty(e.n),
                }
            }
            Gen::Odd(i) => PbwMono {
                even_exps: vec![0; e.s],
                odd: MonomialIndex::from_indices(e.n, &[(i + 1) as u32]).unwrap(),
            },
        };
        e.terms.insert(mono, g.field().one());
        e
    }

    pub fn terms(&self) -> &BTreeMap<PbwMono, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, mono: PbwMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, c);
            }
            Some(old) => {
                let new = old.add(&c);
                if !new.is_zero() {
                    self.terms.insert(mono, new);
                }
            }
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> PbwElement {
        let mut out = PbwElement {
            s: self.s,
            n: self.n,
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v.mul(c));
        }
        out
    }

    /// True when every monomial is purely even (an element of U(g₀)).
    pub fn is_even_part(&self) -> bool {
        self.terms.keys().all(|m| m.odd.is_empty())
    }

    /// Highest polynomial degree in the even generators.
    pub fn even_filtration_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.even_degree()).max().unwrap_or(0)
    }

    /// Counit of U(g): the coefficient of the empty monomial.
    pub fn counit(&self, g: &LieSuperAlgebra) -> Scalar {
        self.terms
            .get(&PbwMono::one(self.s, self.n))
            .cloned()
            .unwrap_or_else(|| g.field().zero())
    }

    pub fn format(&self, g: &LieSuperAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            for (i, &e) in m.even_exps.iter().enumerate() {
                if e == 1 {
                    factors.push(g.even_names()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", g.even_names()[i], e));
                }
            }
            for i in m.odd.indices() {
                factors.push(g.odd_names()[(i - 1) as usize].clone());
            }
            let mono = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("·")
            };
            if c.is_one() && !factors.is_empty() {
                parts.push(mono);
            } else if factors.is_empty() {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{c}·{mono}"));
            }
        }
        parts.join(" + ")
    }
}

/// Rewrite an arbitrary word in the generators to PBW normal form:
/// `x·h → h·x − [h,x]`, `x_j·x_i → −x_i·x_j + [x_j,x_i]` for j > i,
/// `x_i·x_i → ½[x_i,x_i]`, and even generators sorted by commutator insertion.
pub fn normal_form_word(g: &LieSuperAlgebra, word: &[Gen], coeff: Scalar) -> PbwElement {
    let s = g.even_dim();
    let field = g.field();
    let mut out = PbwElement::zero(g);
    let mut stack: Vec<(Vec<Gen>, Scalar)> = vec![(word.to_vec(), coeff)];
    let half = field.one().div(&field.from_i64(2));

    'outer: while let Some((w, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        for k in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[k], w[k + 1]);
            let violation = match (a, b) {
                (Gen::Odd(_), Gen::Even(_)) => true,
                (Gen::Even(i), Gen::Even(j)) => i > j,
                (Gen::Odd(i), Gen::Odd(j)) => i >= j,
                (Gen::Even(_), Gen::Odd(_)) => false,
            };
            if !violation {
                continue;
            }
            let bracket_expansion = |i: usize, j: usize| -> Vec<(Gen, Scalar)> {
                g.bracket_of(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(t, v)| {
                        let gen = if t < s { Gen::Even(t) } else { Gen::Odd(t - s) };
                        (gen, v.clone())
                    })
                    .collect()
            };
            match (a, b) {
                (Gen::Odd(x), Gen::Even(h)) => {
                    // x·h = h·x − [h,x]
                    let mut swapped = w.clone();
                    swapped.swap(k, k + 1);
                    stack.push((swapped, c.clone()));
                    for (gen, v) in bracket_expansion(h, s + x) {
                        let mut short = w.clone();
                        short.splice(k..k + 2, [gen]);
                        stack.push((short, c.mul(&v).neg()));
                    }
                }
                (Gen::Even(i), Gen::Even(j)) => {
                    // h_i·h_j = h_j·h_i + [h_i,h_j]
                    let mut swapped = w.clone();
                    swapped.swap(k, k + 1);
                    stack.push((swapped, c.clone()));
                    for (gen, v) in bracket_expansion(i, j) {
                        let mut short = w.clone();
                        short.splice(k..k + 2, [gen]);
                        stack.push((short, c.mul(&v)));
                    }
                }
                (Gen::Odd(i), Gen::Odd(j)) if i == j => {
                    // x·x = ½[x,x]
                    for (gen, v) in bracket_expansion(s + i, s + j) {
                        let mut short = w.clone();
                        short.splice(k..k + 2, [gen]);
                        stack.push((short, c.mul(&v).mul(&half)));
                    }
                }
                (Gen::Odd(i), Gen::Odd(j)) => {
                    // x_i·x_j = −x_j·x_i + [x_i,x_j]
                    let mut swapped = w.clone();
                    swapped.swap(k, k + 1);
                    stack.push((swapped, c.neg()));
                    for (gen, v) in bracket_expansion(s + i, s + j) {
                        let mut short = w.clone();
                        short.splice(k..k + 2, [gen]);
                        stack.push((short, c.mul(&v)));
                    }
                }
                _ => unreachable!(),
            }
            continue 'outer;
        }
        // normal word: split into exponents and odd monomial
        let mut exps = vec![0u32; s];
        let mut odd_indices = Vec::new();
        for gen in &w {
            match gen {
                Gen::Even(i) => exps[*i] += 1,
                Gen::Odd(i) => odd_indices.push((*i + 1) as u32),
            }
        }
        let odd = MonomialIndex::from_indices(g.odd_dim() as u32, &odd_indices)
            .expect("normal word has strictly increasing odd part");
        out.insert(
            PbwMono {
                even_exps: exps,
                odd,
            },
            c,
        );
    }
    out
}

pub fn multiply(g: &LieSuperAlgebra, a: &PbwElement, b: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero(g);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let mut word = ma.word();
            word.extend(mb.word());
            let nf = normal_form_word(g, &word, ca.mul(cb));
            out = out.add(&nf);
        }
    }
    out
}

/// ϖ: the U(g₀) coefficient of the top odd monomial x_L.
pub fn varpi(g: &LieSuperAlgebra, u: &PbwElement) -> PbwElement {
    let n = g.odd_dim() as u32;
    let top = MonomialIndex::full(n);
    let mut out = PbwElement::zero(g);
    for (m, c) in &u.terms {
        if m.odd == top {
            out.insert(
                PbwMono {
                    even_exps: m.even_exps.clone(),
                    odd: MonomialIndex::empty(n),
                },
                c.clone(),
            );
        }
    }
    out
}

/// The twisted Frobenius pairing (u,v)_ϖ = ϖ(u·v), valued in U(g₀).
pub fn frobenius_pairing(g: &LieSuperAlgebra, u: &PbwElement, v: &PbwElement) -> PbwElement {
    varpi(g, &multiply(g, u, v))
}

/// Apply the automorphism determined by `h_i ↦ h_i + shift_i` (an algebra map
/// because the shift character kills commutators) to an element of U(g₀).
pub fn shift_automorphism(
    g: &LieSuperAlgebra,
    u: &PbwElement,
    shifts: &[Scalar],
) -> PbwElement {
    assert!(u.is_even_part(), "shift automorphism acts on U(g₀)");
    let field = g.field();
    let mut out = PbwElement::zero(g);
    for (m, c) in &u.terms {
        // expand Π (h_i + δ_i)^{e_i}; factors commute with themselves and the
        // ordered product stays normal-ordered
        let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(vec![0; u.s], c.clone())];
        for (i, &e) in m.even_exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut next = Vec::new();
            for (exps, coeff) in &partial {
                for k in 0..=e {
                    // choose k copies of h_i, e−k of δ_i
                    let binom = binomial_u64(e as u64, k as u64);
                    let mut pow = field.from_i64(binom as i64);
                    for _ in 0..(e - k) {
                        pow = pow.mul(&shifts[i]);
                    }
                    if pow.is_zero() {
                        continue;
                    }
                    let mut ex = exps.clone();
                    ex[i] = k;
                    next.push((ex, coeff.mul(&pow)));
                }
            }
            partial = next;
        }
        for (exps, coeff) in partial {
            out.insert(
                PbwMono {
                    even_exps: exps,
                    odd: MonomialIndex::empty(u.n),
                },
                coeff,
            );
        }
    }
    out
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The α-Frobenius data of the extension U(g) ⊃ U(g₀): the dual basis y_I with
/// (x_I, y_J)_ϖ = δ_{I,J}, the element z = Σ x_I ε(y_I), and the δ character.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    pub dual_basis: Vec<PbwElement>,
    pub z: PbwElement,
    pub delta: Vec<Scalar>,
}

/// Solve for the dual basis by descending unitriangularity: the correction for
/// each residual at level |I| is placed on x_{L∖I} through the exact identity
/// (x_I, x_{L∖I}·d)_ϖ = sign(I,L∖I)·α⁻¹(d), available because lower odd
/// degrees cannot reach the top monomial.
pub fn dual_basis(g: &LieSuperAlgebra, cap: u32) -> Result<FrobeniusData> {
    g.expect_verified()?;
    let n = g.odd_dim() as u32;
    if n > cap {
        return Err(Error::Unsupported(format!(
            "dual basis solver capped at {cap} odd generators"
        )));
    }
    let field = g.field();
    let top = MonomialIndex::full(n);
    let delta = g.delta_character();
    let monos: Vec<MonomialIndex> = MonomialIndex::all(n).collect();

    let mut duals: Vec<PbwElement> = Vec::with_capacity(monos.len());
    for j in &monos {
        let k0 = j.complement_in(&top);
        let sig = field.from_i64(j.merge_sign(&k0) as i64);
        let mut y = PbwElement::odd_monomial(g, k0).scale(&sig);
        let xs: Vec<PbwElement> = monos
            .iter()
            .map(|i| PbwElement::odd_monomial(g, *i))
            .collect();
        for t in (j.len() + 1)..=n {
            for (idx, i) in monos.iter().enumerate() {
                if i.len() != t {
                    continue;
                }
                let resid = frobenius_pairing(g, &xs[idx], &y);
                if resid.is_zero() {
                    continue;
                }
                let li = i.complement_in(&top);
                let sign = field.from_i64(i.merge_sign(&li) as i64);
                // d = α(−sign·resid); α shifts by +δ
                let d = shift_automorphism(g, &resid.scale(&sign.neg()), &delta);
                if d.even_filtration_degree() > n {
                    return Err(Error::Inconsistent(
                        "dual basis coefficient exceeds the filtration bound".into(),
                    ));
                }
                let corr = multiply(g, &PbwElement::odd_monomial(g, li), &d);
                y = y.add(&corr);
            }
        }
        duals.push(y);
    }

    // exhaustive duality verification; any failure flags a rewriting bug
    for (a, i) in monos.iter().enumerate() {
        let xi = PbwElement::odd_monomial(g, *i);
        for (b, yj) in duals.iter().enumerate() {
            let p = frobenius_pairing(g, &xi, yj);
            let expect = if a == b {
                PbwElement::one(g)
            } else {
                PbwElement::zero(g)
            };
            if p != expect {
                return Err(Error::Inconsistent(format!(
                    "duality failed at ({}, {})",
                    i.name("x"),
                    monos[b].name("x")
                )));
            }
        }
    }
    let mut z = PbwElement::zero(g);
    for (idx, i) in monos.iter().enumerate() {
        let eps = duals[idx].counit(g);
        z = z.add(&PbwElement::odd_monomial(g, *i).scale(&eps));
    }

    Ok(FrobeniusData {
        dual_basis: duals,
        z,
        delta,
    })
}

/// Unimodularity from the δ character alone: trivial δ ⟺ unimodular.
#[derive(Debug, Clone)]
pub struct UnimodularityReport {
    pub delta: Vec<Scalar>,
    pub unimodular: bool,
}

pub fn unimodularity(g: &LieSuperAlgebra) -> Result<UnimodularityReport> {
    g.expect_verified()?;
    let delta = g.delta_character();
    let unimodular = delta.iter().all(Scalar::is_zero);
    Ok(UnimodularityReport { delta, unimodular })
}
