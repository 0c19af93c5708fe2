//! The built-in example gallery. Built-ins are generated on demand, never
//! stored; the golden files pin their emitted canonical form.

use superhopf::algebra::{SuperAlgebra, VerifyMode};
use superhopf::boson::bosonize;
use superhopf::comodule::{alpha_q_bundle, exterior_algebra, CoactionBundle};
use superhopf::error::{Error, Result};
use superhopf::hopf::{exterior_hopf, group_hopf, HopfSuperAlgebra};
use superhopf::laurent::{borel_carrier, GrouplikeGradedHopf};
use superhopf::lie::{self, LieSuperAlgebra};
use superhopf::scalar::{FieldSpec, Scalar};

pub enum Builtin {
    Hopf(HopfSuperAlgebra, VerifyMode),
    Bundle(CoactionBundle),
    Lie(LieSuperAlgebra),
    Laurent(GrouplikeGradedHopf),
}

pub struct BuiltinSpec {
    pub name: String,
    pub args: Vec<u64>,
}

impl BuiltinSpec {
    pub fn descriptor(&self) -> String {
        let mut s = format!("builtin:{}", self.name);
        for a in &self.args {
            s.push_str(&format!(" {a}"));
        }
        s
    }
}

/// Parse `builtin:<name>` plus any numeric arguments that follow it.
pub fn parse_builtin(token: &str, rest: &[String]) -> Option<(BuiltinSpec, usize)> {
    let name = token.strip_prefix("builtin:")?;
    let mut args = Vec::new();
    let mut used = 0;
    for r in rest {
        match r.parse::<u64>() {
            Ok(v) => {
                args.push(v);
                used += 1;
            }
            Err(_) => break,
        }
    }
    Some((
        BuiltinSpec {
            name: name.to_string(),
            args,
        },
        used,
    ))
}

fn bad_args(name: &str, expect: &str) -> Error {
    Error::Unsupported(format!("builtin:{name} expects {expect}"))
}

/// τ selector for the α_q bundle over C = Λ(F_p²).
pub fn parse_tau(c: &SuperAlgebra, expr: &str) -> Result<Vec<Scalar>> {
    let field = c.field();
    let mut tau = vec![field.zero(); c.dim()];
    if expr == "0" {
        return Ok(tau);
    }
    for term in expr.split('+') {
        let term = term.trim();
        let idx = c
            .space()
            .index_of(term)
            .ok_or_else(|| Error::UnknownBasisName(term.to_string()))?;
        tau[idx] = tau[idx].add(&field.one());
    }
    Ok(tau)
}

pub fn resolve(
    spec: &BuiltinSpec,
    field: FieldSpec,
    tau_expr: &str,
    want_bundle: bool,
) -> Result<Builtin> {
    match (spec.name.as_str(), spec.args.as_slice()) {
        ("exterior", [n]) => Ok(Builtin::Hopf(
            exterior_hopf(*n as u32, field)?,
            VerifyMode::SuperCommutative,
        )),
        ("exterior", _) => Err(bad_args("exterior", "one argument n")),
        ("z2", []) => Ok(Builtin::Hopf(
            group_hopf(&[2], field)?,
            VerifyMode::SuperCommutative,
        )),
        ("z2", _) => Err(bad_args("z2", "no arguments")),
        ("alphaq", [p, r]) => {
            if want_bundle {
                let c = exterior_algebra(2, FieldSpec::prime_field(*p)?)?;
                let tau = parse_tau(&c, tau_expr)?;
                Ok(Builtin::Bundle(alpha_q_bundle(*p, *r as u32, &c, &tau)?))
            } else {
                Ok(Builtin::Hopf(
                    superhopf::comodule::alpha_q_hopf(*p, *r as u32)?,
                    VerifyMode::SuperCommutative,
                ))
            }
        }
        ("alphaq", _) => Err(bad_args("alphaq", "two arguments p r")),
        ("borel", []) => {
            if want_bundle {
                Err(Error::Unsupported(
                    "builtin:borel is a Lie/Laurent input, not an action".into(),
                ))
            } else {
                Ok(Builtin::Laurent(borel_carrier(field)))
            }
        }
        ("borel", _) => Err(bad_args("borel", "no arguments")),
        ("gl11", []) => Ok(Builtin::Lie(lie::gl11(field))),
        ("gl11", _) => Err(bad_args("gl11", "no arguments")),
        ("sweedler-like", []) => {
            let b = bosonize(&exterior_hopf(1, field)?)?;
            Ok(Builtin::Hopf(
                b.ahat().clone(),
                VerifyMode::BialgebraWithAntipode,
            ))
        }
        ("sweedler-like", _) => Err(bad_args("sweedler-like", "no arguments")),
        (other, _) => Err(Error::Unsupported(format!("unknown builtin `{other}`"))),
    }
}

/// The Lie reading of a builtin name, for `lie` subcommands.
pub fn resolve_lie(spec: &BuiltinSpec, field: FieldSpec) -> Result<LieSuperAlgebra> {
    match (spec.name.as_str(), spec.args.as_slice()) {
        ("borel", []) => Ok(lie::borel(field)),
        ("gl11", []) => Ok(lie::gl11(field)),
        (other, _) => Err(Error::Unsupported(format!(
            "builtin `{other}` has no Lie reading"
        ))),
    }
}
