//! Finite-dimensional Lie super-algebras over Q: bracket structure constants,
//! the axiom checker, the trace character δ and the twist automorphism data.

use crate::algebra::{AxiomAcc, VerifyMode, VerifyReport};
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Generator reference: evens (the `h_i`) come first, then odds (the `x_j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    Even(usize),
    Odd(usize),
}

impl Gen {
    pub fn parity(&self) -> u8 {
        match self {
            Gen::Even(_) => 0,
            Gen::Odd(_) => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LieSuperAlgebra {
    field: FieldSpec,
    even_names: Vec<String>,
    odd_names: Vec<String>,
    /// bracket[i][j] = [g_i, g_j] over the flat generator list (evens then odds)
    bracket: Vec<Vec<Vec<Scalar>>>,
}

impl LieSuperAlgebra {
    /// The brackets are given on ordered generator pairs; omitted opposite
    /// orders are filled in through super skew-symmetry, and pairs given on
    /// both orders are checked against it.
    pub fn new(
        field: FieldSpec,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        given: Vec<((usize, usize), Vec<Scalar>)>,
    ) -> Result<LieSuperAlgebra> {
        if field.characteristic() != 0 {
            return Err(Error::Unsupported(
                "Lie super-algebras are supported over characteristic 0 only".into(),
            ));
        }
        let s = even_names.len();
        let n = odd_names.len();
        let total = s + n;
        let zero = vec![field.zero(); total];
        let mut bracket = vec![vec![zero.clone(); total]; total];
        let mut provided = vec![vec![false; total]; total];
        for ((i, j), v) in given {
            if i >= total || j >= total || v.len() != total {
                return Err(Error::ShapeMismatch("bracket index out of range".into()));
            }
            if provided[i][j] {
                return Err(Error::ShapeMismatch(format!(
                    "bracket ({i},{j}) given twice"
                )));
            }
            bracket[i][j] = v;
            provided[i][j] = true;
        }
        let parity = |i: usize| if i < s { 0u8 } else { 1 };
        for i in 0..total {
            for j in 0..total {
                if provided[i][j] && !provided[j][i] && i != j {
                    // [b,a] = −(−1)^{|a||b|}[a,b]
                    let sign = if parity(i) * parity(j) == 1 { 1 } else { -1 };
                    bracket[j][i] = bracket[i][j]
                        .iter()
                        .map(|c| c.mul(&field.from_i64(sign)))
                        .collect();
                    provided[j][i] = true;
                }
            }
        }
        Ok(LieSuperAlgebra {
            field,
            even_names,
            odd_names,
            bracket,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn even_dim(&self) -> usize {
        self.even_names.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_names.len()
    }

    pub fn dim(&self) -> usize {
        self.even_names.len() + self.odd_names.len()
    }

    pub fn even_names(&self) -> &[String] {
        &self.even_names
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd_names
    }

    pub fn parity(&self, i: usize) -> u8 {
        if i < self.even_names.len() {
            0
        } else {
            1
        }
    }

    pub fn name(&self, i: usize) -> &str {
        let s = self.even_names.len();
        if i < s {
            &self.even_names[i]
        } else {
            &self.odd_names[i - s]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let s = self.even_names.len();
        self.even_names
            .iter()
            .position(|x| x == name)
            .or_else(|| self.odd_names.iter().position(|x| x == name).map(|i| i + s))
    }

    pub fn bracket_of(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i][j]
    }

    fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let total = self.dim();
        let mut out = vec![self.field.zero(); total];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in self.bracket[i][j].iter().enumerate() {
                    out[k] = out[k].add(&ab.mul(c));
                }
            }
        }
        out
    }

    fn fmt(&self, v: &[Scalar]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.name(i).to_string()
                } else {
                    format!("{}·{}", c, self.name(i))
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Exhaustive check of grading, super skew-symmetry and the super Jacobi
    /// identity (in Leibniz form) over basis triples.
    pub fn verify(&self) -> VerifyReport {
        let total = self.dim();
        let mut checks = Vec::new();

        let mut graded = AxiomAcc::new("bracket-graded");
        for i in 0..total {
            for j in 0..total {
                let want = (self.parity(i) + self.parity(j)) % 2;
                for (k, c) in self.bracket[i][j].iter().enumerate() {
                    if !c.is_zero() && self.parity(k) != want {
                        graded.violation(
                            vec![i, j],
                            self.fmt(&self.bracket[i][j]),
                            format!("an element of parity {want}"),
                        );
                    }
                }
            }
        }
        checks.push(graded.finish());

        let mut skew = AxiomAcc::new("super-skew-symmetry");
        for i in 0..total {
            for j in 0..total {
                let sign: i64 = if self.parity(i) * self.parity(j) == 1 { 1 } else { -1 };
                let expect: Vec<Scalar> = self.bracket[i][j]
                    .iter()
                    .map(|c| c.mul(&self.field.from_i64(sign)))
                    .collect();
                if self.bracket[j][i] != expect {
                    skew.violation(vec![i, j], self.fmt(&self.bracket[j][i]), self.fmt(&expect));
                }
            }
        }
        checks.push(skew.finish());

        let mut jacobi = AxiomAcc::new("super-jacobi");
        let basis = |i: usize| {
            let mut v = vec![self.field.zero(); total];
            v[i] = self.field.one();
            v
        };
        for a in 0..total {
            for b in 0..total {
                for c in 0..total {
                    // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|}[b,[a,c]]
                    let lhs = self.bracket_vec(&basis(a), &self.bracket[b][c]);
                    let t1 = self.bracket_vec(&self.bracket[a][b], &basis(c));
                    let t2 = self.bracket_vec(&basis(b), &self.bracket[a][c]);
                    let sign = if self.parity(a) * self.parity(b) == 1 {
                        self.field.from_i64(-1)
                    } else {
                        self.field.one()
                    };
                    let rhs: Vec<Scalar> = t1
                        .iter()
                        .zip(&t2)
                        .map(|(x, y)| x.add(&y.mul(&sign)))
                        .collect();
                    if lhs != rhs {
                        jacobi.violation(vec![a, b, c], self.fmt(&lhs), self.fmt(&rhs));
                    }
                }
            }
        }
        checks.push(jacobi.finish());

        VerifyReport {
            mode: VerifyMode::SuperCommutative,
            checks,
        }
    }

    pub fn expect_verified(&self) -> Result<()> {
        let rep = self.verify();
        if rep.is_ok() {
            Ok(())
        } else {
            let names: Vec<_> = rep.violated().iter().map(|c| c.axiom).collect();
            Err(Error::UnverifiedInput(format!(
                "Lie axioms violated: {}",
                names.join(", ")
            )))
        }
    }

    /// δ(h_i) = Tr(ad′ h_i), the trace of the adjoint action on the odd part.
    pub fn delta_character(&self) -> Vec<Scalar> {
        let s = self.even_dim();
        let n = self.odd_dim();
        (0..s)
            .map(|i| {
                let mut tr = self.field.zero();
                for j in 0..n {
                    tr = tr.add(&self.bracket[i][s + j][s + j]);
                }
                tr
            })
            .collect()
    }

    /// δ vanishes on commutators, so α(x) = x + δ(x)·1 extends to an algebra
    /// automorphism of U(g₀); this is its generator data.
    pub fn alpha_shift(&self) -> Vec<Scalar> {
        self.delta_character()
    }
}

/// The Borel-type rank-one example: {h, w} with [h,w] = w.
pub fn borel(field: FieldSpec) -> LieSuperAlgebra {
    let one = field.one();
    let mut hv = vec![field.zero(); 2];
    hv[1] = one;
    LieSuperAlgebra::new(
        field,
        vec!["h".into()],
        vec!["w".into()],
        vec![((0, 1), hv)],
    )
    .unwrap()
}

/// gl(1|1): evens h1, h2 (the diagonal units), odds x, y.
pub fn gl11(field: FieldSpec) -> LieSuperAlgebra {
    let z = || vec![field.zero(); 4];
    let e = |i: usize, c: i64| {
        let mut v = z();
        v[i] = field.from_i64(c);
        v
    };
    let mut h1_plus_h2 = z();
    h1_plus_h2[0] = field.one();
    h1_plus_h2[1] = field.one();
    LieSuperAlgebra::new(
        field,
        vec!["h1".into(), "h2".into()],
        vec!["x".into(), "y".into()],
        vec![
            ((0, 2), e(2, 1)),  // [h1,x] = x
            ((0, 3), e(3, -1)), // [h1,y] = −y
            ((1, 2), e(2, -1)), // [h2,x] = −x
            ((1, 3), e(3, 1)),  // [h2,y] = y
            ((2, 3), h1_plus_h2), // [x,y] = h1+h2
            ((2, 2), z()),
            ((3, 3), z()),
            ((0, 1), z()),
        ],
    )
    .unwrap()
}

/// osp(1|2): sl₂ = {h, e, f} acting on a two-dimensional odd space {x, y}
/// with the symmetric invariant bracket, realized from the defining
/// (1|2)-dimensional representation.
pub fn osp12(field: FieldSpec) -> LieSuperAlgebra {
    let z = || vec![field.zero(); 5];
    let el = |pairs: &[(usize, i64)]| {
        let mut v = z();
        for (i, c) in pairs {
            v[*i] = field.from_i64(*c);
        }
        v
    };
    // order: h=0, e=1, f=2, x=3, y=4
    LieSuperAlgebra::new(
        field,
        vec!["h".into(), "e".into(), "f".into()],
        vec!["x".into(), "y".into()],
        vec![
            ((0, 1), el(&[(1, 2)])),   // [h,e] = 2e
            ((0, 2), el(&[(2, -2)])),  // [h,f] = −2f
            ((1, 2), el(&[(0, 1)])),   // [e,f] = h
            ((0, 3), el(&[(3, 1)])),   // [h,x] = x
            ((0, 4), el(&[(4, -1)])),  // [h,y] = −y
            ((1, 3), z()),             // [e,x] = 0
            ((1, 4), el(&[(3, 1)])),   // [e,y] = x
            ((2, 3), el(&[(4, 1)])),   // [f,x] = y
            ((2, 4), z()),             // [f,y] = 0
            ((3, 3), el(&[(1, -2)])),  // [x,x] = −2e
            ((4, 4), el(&[(2, 2)])),   // [y,y] = 2f
            ((3, 4), el(&[(0, 1)])),   // [x,y] = h
        ],
    )
    .unwrap()
}

/// Purely odd abelian Lie super-algebra of dimension n.
pub fn abelian_odd(n: usize, field: FieldSpec) -> LieSuperAlgebra {
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    LieSuperAlgebra::new(field, vec![], names, vec![]).unwrap()
}

/// Borel-type with several odd generators of weight one: [h, x_i] = x_i.
pub fn borel_type(n: usize, field: FieldSpec) -> LieSuperAlgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut given = Vec::new();
    for i in 0..n {
        let mut v = vec![field.zero(); n + 1];
        v[1 + i] = field.one();
        given.push(((0, 1 + i), v));
    }
    LieSuperAlgebra::new(field, vec!["h".into()], names, given).unwrap()
}

/// Super Heisenberg: one even central element, two odds with [x1,x2] = h.
pub fn heisenberg_super(field: FieldSpec) -> LieSuperAlgebra {
    let mut h = vec![field.zero(); 3];
    h[0] = field.one();
    LieSuperAlgebra::new(
        field,
        vec!["h".into()],
        vec!["x1".into(), "x2".into()],
        vec![((1, 2), h)],
    )
    .unwrap()
}
