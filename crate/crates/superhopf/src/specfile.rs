//! The structured text formats for algebras, actions, Lie data and Laurent
//! carriers. Documents are line-oriented; `#` starts a comment. Emission is
//! canonical (fixed section order, rows sorted by basis index, exact scalar
//! syntax) and parse∘emit is the identity on canonical form, which the golden
//! tests pin.

use crate::algebra::{SuperAlgebra, VerifyMode};
use crate::error::{Error, Result};
use crate::graded_map::GradedMap;
use crate::hopf::{antipode_solve, HopfSuperAlgebra};
use crate::laurent::GrouplikeGradedHopf;
use crate::lie::LieSuperAlgebra;
use crate::matrix::Mat;
use crate::scalar::{FieldSpec, Scalar};
use crate::space::SuperSpace;

#[derive(Debug, Clone, PartialEq)]
pub enum SpecDocument {
    Algebra(AlgebraDoc),
    Action(ActionDoc),
    Lie(LieDoc),
    Laurent(LaurentDoc),
}

impl SpecDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            SpecDocument::Algebra(_) => "algebra",
            SpecDocument::Action(_) => "action",
            SpecDocument::Lie(_) => "lie",
            SpecDocument::Laurent(_) => "laurent",
        }
    }

    pub fn emit(&self) -> String {
        match self {
            SpecDocument::Algebra(d) => d.emit(),
            SpecDocument::Action(d) => d.emit(),
            SpecDocument::Lie(d) => d.emit(),
            SpecDocument::Laurent(d) => d.emit(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraDoc {
    pub field: FieldSpec,
    pub mode: VerifyMode,
    pub basis: Vec<(String, u8)>,
    pub unit: Vec<(usize, Scalar)>,
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub comult: Option<Vec<(usize, usize, usize, Scalar)>>,
    pub counit: Option<Vec<(usize, Scalar)>>,
    pub antipode: Option<Vec<(usize, usize, Scalar)>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActionDoc {
    pub algebra_a: String,
    pub algebra_b: String,
    /// sparse ρ rows: (b_in, b_out, a_out, coeff), by basis name at parse time
    pub rho: Vec<(String, String, String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieDoc {
    pub field: FieldSpec,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub bracket: Vec<(usize, usize, usize, Scalar)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentDoc {
    pub field: FieldSpec,
    pub rank: usize,
    pub odd: Vec<(String, Vec<i64>)>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let mut items = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            items.push((i + 1, body.split_whitespace().collect()));
        }
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos).cloned();
        self.pos += 1;
        item
    }
}

fn parse_field(line: usize, toks: &[&str]) -> Result<FieldSpec> {
    match toks {
        ["field", "q"] => Ok(FieldSpec::Rationals),
        ["field", "fp", p] => {
            let p: u64 = p.parse().map_err(|_| perr(line, "malformed modulus"))?;
            FieldSpec::prime_field(p).map_err(|e| perr(line, e.to_string()))
        }
        _ => Err(perr(line, "expected `field q` or `field fp <p>`")),
    }
}

pub fn parse(text: &str) -> Result<SpecDocument> {
    let mut lines = Lines::new(text);
    let Some((l0, head)) = lines.next() else {
        return Err(perr(1, "empty document"));
    };
    if head.len() != 1 {
        return Err(perr(l0, "first line must be the document kind"));
    }
    match head[0] {
        "algebra" => parse_algebra(&mut lines).map(SpecDocument::Algebra),
        "action" => parse_action(&mut lines).map(SpecDocument::Action),
        "lie" => parse_lie(&mut lines).map(SpecDocument::Lie),
        "laurent" => parse_laurent(&mut lines).map(SpecDocument::Laurent),
        k => Err(perr(l0, format!("unknown document kind `{k}`"))),
    }
}

fn expect_end(lines: &mut Lines) -> Result<()> {
    match lines.next() {
        Some((_, toks)) if toks == ["end"] => match lines.next() {
            None => Ok(()),
            Some((l, _)) => Err(perr(l, "content after `end`")),
        },
        Some((l, _)) => Err(perr(l, "expected `end`")),
        None => Err(perr(0, "missing `end`")),
    }
}

fn parse_algebra(lines: &mut Lines) -> Result<AlgebraDoc> {
    let Some((lf, ftoks)) = lines.next() else {
        return Err(perr(0, "missing field line"));
    };
    let field = parse_field(lf, &ftoks)?;
    let mode = match lines.peek() {
        Some((_, t)) if t.first() == Some(&"mode") => {
            let (lm, t) = lines.next().unwrap();
            match t.as_slice() {
                ["mode", "supercommutative"] => VerifyMode::SuperCommutative,
                ["mode", "noncommutative"] => VerifyMode::BialgebraWithAntipode,
                _ => return Err(perr(lm, "mode must be supercommutative or noncommutative")),
            }
        }
        _ => VerifyMode::SuperCommutative,
    };
    let mut basis: Vec<(String, u8)> = Vec::new();
    while let Some((_, t)) = lines.peek() {
        if t.first() != Some(&"basis") {
            break;
        }
        let (lb, t) = lines.next().unwrap();
        let [_, name, parity] = t.as_slice() else {
            return Err(perr(lb, "expected `basis <name> <parity>`"));
        };
        let parity: u8 = parity
            .parse()
            .map_err(|_| perr(lb, "parity must be 0 or 1"))?;
        if parity > 1 {
            return Err(perr(lb, "parity out of range"));
        }
        if basis.iter().any(|(n, _)| n == name) {
            return Err(perr(lb, format!("duplicate basis name `{name}`")));
        }
        basis.push((name.to_string(), parity));
    }
    if basis.is_empty() {
        return Err(perr(0, "algebra needs at least one basis vector"));
    }
    let index_of = |line: usize, name: &str| -> Result<usize> {
        basis
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| perr(line, format!("unknown basis name `{name}`")))
    };
    let scalar = |line: usize, s: &str| -> Result<Scalar> {
        field.parse_scalar(s).map_err(|e| perr(line, e.to_string()))
    };

    let mut unit = Vec::new();
    let mut mult = Vec::new();
    let mut comult: Option<Vec<(usize, usize, usize, Scalar)>> = None;
    let mut counit: Option<Vec<(usize, Scalar)>> = None;
    let mut antipode: Option<Vec<(usize, usize, Scalar)>> = None;
    while let Some((_, t)) = lines.peek() {
        match *t.first().unwrap() {
            "unit" => {
                let (l, t) = lines.next().unwrap();
                let [_, name, c] = t.as_slice() else {
                    return Err(perr(l, "expected `unit <name> <coeff>`"));
                };
                unit.push((index_of(l, name)?, scalar(l, c)?));
            }
            "mult" => {
                let (l, t) = lines.next().unwrap();
                let [_, a, b, out, c] = t.as_slice() else {
                    return Err(perr(l, "expected `mult <left> <right> <out> <coeff>`"));
                };
                mult.push((index_of(l, a)?, index_of(l, b)?, index_of(l, out)?, scalar(l, c)?));
            }
            "comult" => {
                let (l, t) = lines.next().unwrap();
                let [_, input, a, b, c] = t.as_slice() else {
                    return Err(perr(l, "expected `comult <in> <left> <right> <coeff>`"));
                };
                comult.get_or_insert_with(Vec::new).push((
                    index_of(l, input)?,
                    index_of(l, a)?,
                    index_of(l, b)?,
                    scalar(l, c)?,
                ));
            }
            "counit" => {
                let (l, t) = lines.next().unwrap();
                let [_, input, c] = t.as_slice() else {
                    return Err(perr(l, "expected `counit <in> <coeff>`"));
                };
                counit
                    .get_or_insert_with(Vec::new)
                    .push((index_of(l, input)?, scalar(l, c)?));
            }
            "antipode" => {
                let (l, t) = lines.next().unwrap();
                let [_, input, out, c] = t.as_slice() else {
                    return Err(perr(l, "expected `antipode <in> <out> <coeff>`"));
                };
                antipode.get_or_insert_with(Vec::new).push((
                    index_of(l, input)?,
                    index_of(l, out)?,
                    scalar(l, c)?,
                ));
            }
            "end" => break,
            other => {
                let (l, _) = lines.next().unwrap();
                return Err(perr(l, format!("unexpected directive `{other}`")));
            }
        }
    }
    expect_end(lines)?;
    Ok(AlgebraDoc {
        field,
        mode,
        basis,
        unit,
        mult,
        comult,
        counit,
        antipode,
    })
}

fn parse_action(lines: &mut Lines) -> Result<ActionDoc> {
    let mut algebra_a = None;
    let mut algebra_b = None;
    let mut rho = Vec::new();
    while let Some((_, t)) = lines.peek() {
        match *t.first().unwrap() {
            "a" => {
                let (l, t) = lines.next().unwrap();
                let [_, path] = t.as_slice() else {
                    return Err(perr(l, "expected `a <path>`"));
                };
                algebra_a = Some(path.to_string());
            }
            "b" => {
                let (l, t) = lines.next().unwrap();
                let [_, path] = t.as_slice() else {
                    return Err(perr(l, "expected `b <path>`"));
                };
                algebra_b = Some(path.to_string());
            }
            "rho" => {
                let (l, t) = lines.next().unwrap();
                let [_, bi, bo, ao, c] = t.as_slice() else {
                    return Err(perr(l, "expected `rho <b_in> <b_out> <a_out> <coeff>`"));
                };
                rho.push((bi.to_string(), bo.to_string(), ao.to_string(), c.to_string()));
            }
            "end" => break,
            other => {
                let (l, _) = lines.next().unwrap();
                return Err(perr(l, format!("unexpected directive `{other}`")));
            }
        }
    }
    expect_end(lines)?;
    Ok(ActionDoc {
        algebra_a: algebra_a.ok_or_else(|| perr(0, "action needs `a <path>`"))?,
        algebra_b: algebra_b.ok_or_else(|| perr(0, "action needs `b <path>`"))?,
        rho,
    })
}

fn parse_lie(lines: &mut Lines) -> Result<LieDoc> {
    let Some((lf, ftoks)) = lines.next() else {
        return Err(perr(0, "missing field line"));
    };
    let field = parse_field(lf, &ftoks)?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    let mut bracket_rows = Vec::new();
    while let Some((_, t)) = lines.peek() {
        match *t.first().unwrap() {
            "even" => {
                let (l, t) = lines.next().unwrap();
                let [_, name] = t.as_slice() else {
                    return Err(perr(l, "expected `even <name>`"));
                };
                even.push(name.to_string());
            }
            "odd" => {
                let (l, t) = lines.next().unwrap();
                let [_, name] = t.as_slice() else {
                    return Err(perr(l, "expected `odd <name>`"));
                };
                odd.push(name.to_string());
            }
            "bracket" => {
                let (l, t) = lines.next().unwrap();
                let [_, a, b, out, c] = t.as_slice() else {
                    return Err(perr(l, "expected `bracket <a> <b> <out> <coeff>`"));
                };
                bracket_rows.push((l, a.to_string(), b.to_string(), out.to_string(), c.to_string()));
            }
            "end" => break,
            other => {
                let (l, _) = lines.next().unwrap();
                return Err(perr(l, format!("unexpected directive `{other}`")));
            }
        }
    }
    expect_end(lines)?;
    let names: Vec<&String> = even.iter().chain(odd.iter()).collect();
    {
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(perr(0, format!("duplicate generator name `{n}`")));
            }
        }
    }
    let idx = |l: usize, n: &str| -> Result<usize> {
        names
            .iter()
            .position(|x| x.as_str() == n)
            .ok_or_else(|| perr(l, format!("unknown generator `{n}`")))
    };
    let mut bracket = Vec::new();
    for (l, a, b, out, c) in bracket_rows {
        bracket.push((
            idx(l, &a)?,
            idx(l, &b)?,
            idx(l, &out)?,
            field.parse_scalar(&c).map_err(|e| perr(l, e.to_string()))?,
        ));
    }
    Ok(LieDoc {
        field,
        even,
        odd,
        bracket,
    })
}

fn parse_laurent(lines: &mut Lines) -> Result<LaurentDoc> {
    let Some((lf, ftoks)) = lines.next() else {
        return Err(perr(0, "missing field line"));
    };
    let field = parse_field(lf, &ftoks)?;
    let Some((lr, rtoks)) = lines.next() else {
        return Err(perr(0, "missing rank line"));
    };
    let rank: usize = match rtoks.as_slice() {
        ["rank", r] => r.parse().map_err(|_| perr(lr, "malformed rank"))?,
        _ => return Err(perr(lr, "expected `rank <r>`")),
    };
    let mut odd = Vec::new();
    while let Some((_, t)) = lines.peek() {
        if t.first() != Some(&"odd") {
            break;
        }
        let (l, t) = lines.next().unwrap();
        if t.len() != 2 + rank {
            return Err(perr(l, format!("expected `odd <name>` plus {rank} weights")));
        }
        let name = t[1].to_string();
        let mut w = Vec::with_capacity(rank);
        for v in &t[2..] {
            w.push(v.parse::<i64>().map_err(|_| perr(l, "malformed weight"))?);
        }
        odd.push((name, w));
    }
    expect_end(lines)?;
    Ok(LaurentDoc { field, rank, odd })
}

impl AlgebraDoc {
    pub fn emit(&self) -> String {
        let mut out = String::from("algebra\n");
        out.push_str(&format!("field {}\n", self.field));
        out.push_str(&format!("mode {}\n", self.mode.as_str()));
        for (name, parity) in &self.basis {
            out.push_str(&format!("basis {name} {parity}\n"));
        }
        let name = |i: usize| self.basis[i].0.as_str();
        let mut unit = self.unit.clone();
        unit.sort_by_key(|(i, _)| *i);
        for (i, c) in &unit {
            out.push_str(&format!("unit {} {}\n", name(*i), c));
        }
        let mut mult = self.mult.clone();
        mult.sort_by_key(|(a, b, k, _)| (*a, *b, *k));
        for (a, b, k, c) in &mult {
            out.push_str(&format!("mult {} {} {} {}\n", name(*a), name(*b), name(*k), c));
        }
        if let Some(rows) = &self.comult {
            let mut rows = rows.clone();
            rows.sort_by_key(|(i, a, b, _)| (*i, *a, *b));
            for (i, a, b, c) in &rows {
                out.push_str(&format!(
                    "comult {} {} {} {}\n",
                    name(*i),
                    name(*a),
                    name(*b),
                    c
                ));
            }
        }
        if let Some(rows) = &self.counit {
            let mut rows = rows.clone();
            rows.sort_by_key(|(i, _)| *i);
            for (i, c) in &rows {
                out.push_str(&format!("counit {} {}\n", name(*i), c));
            }
        }
        if let Some(rows) = &self.antipode {
            let mut rows = rows.clone();
            rows.sort_by_key(|(i, k, _)| (*i, *k));
            for (i, k, c) in &rows {
                out.push_str(&format!("antipode {} {} {}\n", name(*i), name(*k), c));
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn from_algebra(alg: &SuperAlgebra, mode: VerifyMode) -> AlgebraDoc {
        let basis = alg
            .space()
            .basis()
            .iter()
            .map(|b| (b.name.clone(), b.parity))
            .collect();
        let unit = crate::algebra::to_sparse(alg.unit());
        let mut mult = Vec::new();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                for (k, c) in alg.basis_product(i, j) {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        AlgebraDoc {
            field: alg.field(),
            mode,
            basis,
            unit,
            mult,
            comult: None,
            counit: None,
            antipode: None,
        }
    }

    pub fn from_hopf(h: &HopfSuperAlgebra, mode: VerifyMode) -> AlgebraDoc {
        let mut doc = AlgebraDoc::from_algebra(h.algebra(), mode);
        let mut comult = Vec::new();
        for i in 0..h.dim() {
            for (a, b, c) in h.comult_of(i) {
                comult.push((i, a, b, c));
            }
        }
        let counit = (0..h.dim())
            .filter_map(|i| {
                let c = h.counit_of(i);
                (!c.is_zero()).then_some((i, c))
            })
            .collect();
        let mut antipode = Vec::new();
        for i in 0..h.dim() {
            for (k, c) in crate::algebra::to_sparse(&h.antipode().apply_to_basis(i)) {
                antipode.push((i, k, c));
            }
        }
        doc.comult = Some(comult);
        doc.counit = Some(counit);
        doc.antipode = Some(antipode);
        doc
    }

    pub fn space(&self) -> Result<SuperSpace> {
        SuperSpace::new(self.field, self.basis.clone())
    }

    pub fn to_algebra(&self) -> Result<SuperAlgebra> {
        let space = self.space()?;
        let mut unit = vec![self.field.zero(); space.dim()];
        for (i, c) in &self.unit {
            unit[*i] = unit[*i].add(c);
        }
        SuperAlgebra::from_table(
            space,
            self.mult.iter().map(|(a, b, k, c)| (*a, *b, *k, c.clone())),
            unit,
        )
    }

    /// Build the Hopf structure; a missing antipode is solved from the
    /// convolution-inverse system.
    pub fn to_hopf(&self) -> Result<HopfSuperAlgebra> {
        let alg = self.to_algebra()?;
        let dim = alg.dim();
        let comult_rows = self
            .comult
            .as_ref()
            .ok_or_else(|| Error::ShapeMismatch("document has no comult section".into()))?;
        let counit_rows = self
            .counit
            .as_ref()
            .ok_or_else(|| Error::ShapeMismatch("document has no counit section".into()))?;
        let mut cm = Mat::zero(self.field, dim * dim, dim);
        for (i, a, b, c) in comult_rows {
            cm.add_to(a * dim + b, *i, c);
        }
        let comult = GradedMap::from_total(alg.space().clone(), alg.square().clone(), cm);
        let mut cu = Mat::zero(self.field, 1, dim);
        for (i, c) in counit_rows {
            cu.add_to(0, *i, c);
        }
        let counit =
            GradedMap::from_total(alg.space().clone(), SuperSpace::ground(self.field), cu);
        let antipode = match &self.antipode {
            Some(rows) => {
                let mut m = Mat::zero(self.field, dim, dim);
                for (i, k, c) in rows {
                    m.add_to(*k, *i, c);
                }
                GradedMap::from_total(alg.space().clone(), alg.space().clone(), m)
            }
            None => antipode_solve(&alg, &comult, &counit)?,
        };
        HopfSuperAlgebra::new(alg, comult, counit, antipode)
    }
}

impl ActionDoc {
    pub fn emit(&self) -> String {
        let mut out = String::from("action\n");
        out.push_str(&format!("a {}\n", self.algebra_a));
        out.push_str(&format!("b {}\n", self.algebra_b));
        for (bi, bo, ao, c) in &self.rho {
            out.push_str(&format!("rho {bi} {bo} {ao} {c}\n"));
        }
        out.push_str("end\n");
        out
    }

    /// Assemble the bundle from already-loaded A and B documents.
    pub fn to_bundle(&self, a: &HopfSuperAlgebra, b: &SuperAlgebra) -> Result<crate::comodule::CoactionBundle> {
        let field = a.field();
        let da = a.dim();
        let mut m = Mat::zero(field, b.dim() * da, b.dim());
        for (bi, bo, ao, c) in &self.rho {
            let i = b
                .space()
                .index_of(bi)
                .ok_or_else(|| Error::UnknownBasisName(bi.clone()))?;
            let o = b
                .space()
                .index_of(bo)
                .ok_or_else(|| Error::UnknownBasisName(bo.clone()))?;
            let ak = a
                .space()
                .index_of(ao)
                .ok_or_else(|| Error::UnknownBasisName(ao.clone()))?;
            m.add_to(o * da + ak, i, &field.parse_scalar(c)?);
        }
        let target = b.space().tensor(a.space())?;
        let rho = GradedMap::from_total(b.space().clone(), target, m);
        crate::comodule::CoactionBundle::new(a.clone(), b.clone(), rho)
    }

    pub fn from_bundle(
        bundle: &crate::comodule::CoactionBundle,
        a_path: &str,
        b_path: &str,
    ) -> ActionDoc {
        let da = bundle.hopf().dim();
        let mut rho = Vec::new();
        for i in 0..bundle.base().dim() {
            for (p, c) in crate::algebra::to_sparse(&bundle.rho().apply_to_basis(i)) {
                rho.push((
                    bundle.base().space().name(i).to_string(),
                    bundle.base().space().name(p / da).to_string(),
                    bundle.hopf().space().name(p % da).to_string(),
                    c.to_string(),
                ));
            }
        }
        ActionDoc {
            algebra_a: a_path.to_string(),
            algebra_b: b_path.to_string(),
            rho,
        }
    }
}

impl LieDoc {
    pub fn emit(&self) -> String {
        let mut out = String::from("lie\n");
        out.push_str(&format!("field {}\n", self.field));
        for n in &self.even {
            out.push_str(&format!("even {n}\n"));
        }
        for n in &self.odd {
            out.push_str(&format!("odd {n}\n"));
        }
        let name = |i: usize| -> &str {
            if i < self.even.len() {
                &self.even[i]
            } else {
                &self.odd[i - self.even.len()]
            }
        };
        let mut rows = self.bracket.clone();
        rows.sort_by_key(|(a, b, k, _)| (*a, *b, *k));
        for (a, b, k, c) in &rows {
            out.push_str(&format!("bracket {} {} {} {}\n", name(*a), name(*b), name(*k), c));
        }
        out.push_str("end\n");
        out
    }

    pub fn to_lie(&self) -> Result<LieSuperAlgebra> {
        let total = self.even.len() + self.odd.len();
        let mut by_pair: std::collections::BTreeMap<(usize, usize), Vec<Scalar>> =
            std::collections::BTreeMap::new();
        for (a, b, k, c) in &self.bracket {
            let row = by_pair
                .entry((*a, *b))
                .or_insert_with(|| vec![self.field.zero(); total]);
            row[*k] = row[*k].add(c);
        }
        LieSuperAlgebra::new(
            self.field,
            self.even.clone(),
            self.odd.clone(),
            by_pair.into_iter().collect(),
        )
    }

    pub fn from_lie(g: &LieSuperAlgebra) -> LieDoc {
        let total = g.dim();
        let mut bracket = Vec::new();
        for i in 0..total {
            for j in 0..total {
                // emit the upper triangle plus diagonals; skew fills the rest
                if j < i {
                    continue;
                }
                for (k, c) in g.bracket_of(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        bracket.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        LieDoc {
            field: g.field(),
            even: g.even_names().to_vec(),
            odd: g.odd_names().to_vec(),
            bracket,
        }
    }
}

impl LaurentDoc {
    pub fn emit(&self) -> String {
        let mut out = String::from("laurent\n");
        out.push_str(&format!("field {}\n", self.field));
        out.push_str(&format!("rank {}\n", self.rank));
        for (name, w) in &self.odd {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            if ws.is_empty() {
                out.push_str(&format!("odd {name}\n"));
            } else {
                out.push_str(&format!("odd {name} {}\n", ws.join(" ")));
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn to_carrier(&self) -> Result<GrouplikeGradedHopf> {
        GrouplikeGradedHopf::new(
            self.field,
            self.odd.len() as u32,
            self.rank,
            self.odd.iter().map(|(_, w)| w.clone()).collect(),
        )
    }

    pub fn from_carrier(g: &GrouplikeGradedHopf) -> LaurentDoc {
        LaurentDoc {
            field: g.field(),
            rank: g.lattice_rank(),
            odd: g
                .weights()
                .iter()
                .enumerate()
                .map(|(i, w)| (format!("w{}", i + 1), w.clone()))
                .collect(),
        }
    }
}
