//! Command-line front end: parse spec files or built-ins, dispatch the kernel
//! operations, and emit deterministic machine-readable reports.

mod builtins;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use builtins::{parse_builtin, parse_tau, resolve, resolve_lie, Builtin, BuiltinSpec};
use report::Report;
use superhopf::algebra::{SuperAlgebra, VerifyMode, VerifyReport};
use superhopf::comodule::{self, CoactionBundle};
use superhopf::error::Error;
use superhopf::hopf::HopfSuperAlgebra;
use superhopf::integral;
use superhopf::laurent::GrouplikeGradedHopf;
use superhopf::lie::LieSuperAlgebra;
use superhopf::scalar::{FieldSpec, Scalar};
use superhopf::specfile::{self, AlgebraDoc, SpecDocument};

const USAGE: &str = "usage: superhopf <command> <input> [flags]

commands:
  parse <input>                 parse and re-emit the canonical document
  verify <input>                run the axiom battery (algebra/action/lie/laurent)
  integral <input>              integral spaces and classification
  bosonize <input>              Radford bosonization A ⋊ Z₂
  invariants <action>           the invariant subalgebra of a coaction
  torsor <action>               the full torsor verdict
  injective <action>            injectivity of B as an A-comodule
  lie <verify|delta|dualbasis|z|unimodular> <lie-input>

inputs are file paths or builtins: builtin:exterior <n>, builtin:z2,
builtin:alphaq <p> <r>, builtin:borel, builtin:gl11, builtin:sweedler-like

flags:
  --field q|fp:<p>   ground field for builtins (default q)
  --window <M>       Laurent verification window (default 10)
  --tau <expr>       τ for builtin:alphaq: 0, w1w2, 1+w1w2, ... (default w1w2)
  --out <path>       write the report (or bosonized algebra) to a file
  --witnesses        include failure witnesses in reports
  --bosonized        run torsor on the bosonized bundle (β̂ side)
";

struct CliError {
    msg: String,
    code: u8,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError {
            msg: format!("{}\n\n{USAGE}", msg.into()),
            code: 2,
        }
    }

    fn runtime(input: &str, err: Error) -> CliError {
        CliError {
            msg: format!("error [{input}]: {err}"),
            code: 1,
        }
    }
}

struct Flags {
    field: FieldSpec,
    window: i64,
    tau: String,
    out: Option<PathBuf>,
    witnesses: bool,
    bosonized: bool,
}

enum Input {
    Builtin(BuiltinSpec),
    File(PathBuf, SpecDocument, String),
}

impl Input {
    fn descriptor(&self) -> String {
        match self {
            Input::Builtin(b) => b.descriptor(),
            Input::File(p, _, _) => p.display().to_string(),
        }
    }

    fn digest_payload(&self) -> String {
        match self {
            Input::Builtin(b) => b.descriptor(),
            Input::File(_, _, raw) => raw.clone(),
        }
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn parse_flags(rest: &[String]) -> Result<(Vec<String>, Flags), CliError> {
    let mut flags = Flags {
        field: FieldSpec::Rationals,
        window: 10,
        tau: "w1w2".into(),
        out: None,
        witnesses: false,
        bosonized: false,
    };
    let mut positional = Vec::new();
    let mut it = rest.iter().peekable();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--field" => {
                let v = it.next().ok_or_else(|| CliError::usage("--field needs a value"))?;
                flags.field = if v == "q" {
                    FieldSpec::Rationals
                } else if let Some(p) = v.strip_prefix("fp:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| CliError::usage("malformed --field fp:<p>"))?;
                    FieldSpec::prime_field(p)
                        .map_err(|e| CliError::usage(e.to_string()))?
                } else {
                    return Err(CliError::usage("--field takes q or fp:<p>"));
                };
            }
            "--window" => {
                let v = it.next().ok_or_else(|| CliError::usage("--window needs a value"))?;
                flags.window = v
                    .parse()
                    .map_err(|_| CliError::usage("malformed --window"))?;
            }
            "--tau" => {
                let v = it.next().ok_or_else(|| CliError::usage("--tau needs a value"))?;
                flags.tau = v.clone();
            }
            "--out" | "-o" => {
                let v = it.next().ok_or_else(|| CliError::usage("--out needs a path"))?;
                flags.out = Some(PathBuf::from(v));
            }
            "--witnesses" => flags.witnesses = true,
            "--bosonized" => flags.bosonized = true,
            other if other.starts_with("--") => {
                return Err(CliError::usage(format!("unknown flag {other}")));
            }
            other => positional.push(other.to_string()),
        }
    }
    Ok((positional, flags))
}

fn load_input(positional: &[String]) -> Result<(Input, usize), CliError> {
    let Some(first) = positional.first() else {
        return Err(CliError::usage("missing input"));
    };
    if first.starts_with("builtin:") {
        let (spec, used) = parse_builtin(first, &positional[1..])
            .ok_or_else(|| CliError::usage("malformed builtin reference"))?;
        return Ok((Input::Builtin(spec), used + 1));
    }
    let path = PathBuf::from(first);
    let raw = std::fs::read_to_string(&path).map_err(|e| CliError {
        msg: format!("error [{}]: {e}", path.display()),
        code: 1,
    })?;
    let doc = specfile::parse(&raw)
        .map_err(|e| CliError::runtime(&path.display().to_string(), e))?;
    Ok((Input::File(path, doc, raw), 1))
}

fn load_algebra_doc(base: &Path, rel: &str) -> Result<AlgebraDoc, Error> {
    let path = base.join(rel);
    let raw = std::fs::read_to_string(&path).map_err(|e| {
        Error::Parse {
            line: 0,
            msg: format!("cannot read referenced file {}: {e}", path.display()),
        }
    })?;
    match specfile::parse(&raw)? {
        SpecDocument::Algebra(d) => Ok(d),
        other => Err(Error::Parse {
            line: 1,
            msg: format!(
                "{} is a {} document, expected algebra",
                path.display(),
                other.kind()
            ),
        }),
    }
}

/// What a command resolved its input to.
enum Loaded {
    Hopf(HopfSuperAlgebra, VerifyMode),
    Algebra(SuperAlgebra, VerifyMode),
    Bundle(CoactionBundle, Option<(SuperAlgebra, Vec<Scalar>, u64)>),
    Lie(LieSuperAlgebra),
    Laurent(GrouplikeGradedHopf),
}

fn load(input: &Input, flags: &Flags, want_bundle: bool) -> Result<Loaded, Error> {
    match input {
        Input::Builtin(spec) => {
            let b = resolve(spec, flags.field, &flags.tau, want_bundle)?;
            Ok(match b {
                Builtin::Hopf(h, m) => Loaded::Hopf(h, m),
                Builtin::Bundle(bundle) => {
                    let extra = if spec.name == "alphaq" {
                        let p = spec.args[0];
                        let q = p.pow(spec.args[1] as u32);
                        let c = comodule::exterior_algebra(2, FieldSpec::prime_field(p)?)?;
                        let tau = parse_tau(&c, &flags.tau)?;
                        Some((c, tau, q))
                    } else {
                        None
                    };
                    Loaded::Bundle(bundle, extra)
                }
                Builtin::Lie(g) => Loaded::Lie(g),
                Builtin::Laurent(l) => Loaded::Laurent(l),
            })
        }
        Input::File(path, doc, _) => match doc {
            SpecDocument::Algebra(d) => {
                if d.comult.is_some() && d.counit.is_some() {
                    Ok(Loaded::Hopf(d.to_hopf()?, d.mode))
                } else {
                    Ok(Loaded::Algebra(d.to_algebra()?, d.mode))
                }
            }
            SpecDocument::Action(d) => {
                let base = path.parent().unwrap_or_else(|| Path::new("."));
                let a = load_algebra_doc(base, &d.algebra_a)?.to_hopf()?;
                let b = load_algebra_doc(base, &d.algebra_b)?.to_algebra()?;
                Ok(Loaded::Bundle(d.to_bundle(&a, &b)?, None))
            }
            SpecDocument::Lie(d) => Ok(Loaded::Lie(d.to_lie()?)),
            SpecDocument::Laurent(d) => Ok(Loaded::Laurent(d.to_carrier()?)),
        },
    }
}

fn push_verify_report(rep: &mut Report, v: &VerifyReport, witnesses: bool) {
    rep.push("mode", v.mode.as_str());
    for check in &v.checks {
        rep.push_raw(format!(
            "axiom {} {}",
            check.axiom,
            if check.ok { "ok" } else { "violated" }
        ));
        if witnesses && !check.ok {
            if let Some(w) = &check.witness {
                rep.push_raw(format!(
                    "witness {} indices={:?} lhs=({}) rhs=({})",
                    check.axiom, w.indices, w.lhs, w.rhs
                ));
            }
        }
    }
    rep.push("verdict", if v.is_ok() { "pass" } else { "fail" });
}

fn scalar_lines(rep: &mut Report, key: &str, space: &superhopf::SuperSpace, v: &[Scalar]) {
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            rep.push_raw(format!("{key} {} {}", space.name(i), c));
        }
    }
}

fn run(args: &[String]) -> Result<String, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::usage("missing command"));
    };
    let started = Instant::now();
    match command.as_str() {
        "parse" => {
            let (positional, _flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            match input {
                Input::File(_, doc, _) => Ok(doc.emit()),
                Input::Builtin(_) => Err(CliError::usage("parse expects a file path")),
            }
        }
        "verify" => {
            let (positional, flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let mut rep = Report::new("verify", &desc, &input.digest_payload());
            match load(&input, &flags, false) {
                Ok(Loaded::Hopf(h, mode)) => {
                    rep.push("field", h.field());
                    rep.push("dim", h.dim());
                    push_verify_report(&mut rep, &h.verify(mode), flags.witnesses);
                }
                Ok(Loaded::Algebra(a, mode)) => {
                    rep.push("field", a.field());
                    rep.push("dim", a.dim());
                    push_verify_report(&mut rep, &a.verify_algebra(mode), flags.witnesses);
                }
                Ok(Loaded::Bundle(b, _)) => {
                    rep.push("field", b.field());
                    rep.push("dim_a", b.hopf().dim());
                    rep.push("dim_b", b.base().dim());
                    rep.push_raw("axiom coaction ok".into());
                    rep.push("verdict", "pass");
                }
                Ok(Loaded::Lie(g)) => {
                    rep.push("field", g.field());
                    rep.push("dim", g.dim());
                    push_verify_report(&mut rep, &g.verify(), flags.witnesses);
                }
                Ok(Loaded::Laurent(l)) => {
                    rep.push("field", l.field());
                    rep.push("odd_rank", l.odd_rank());
                    rep.push("lattice_rank", l.lattice_rank());
                    rep.push("window", flags.window);
                    match l.verify_window(flags.window) {
                        Ok(()) => {
                            rep.push_raw("axiom monomial-hopf ok".into());
                            rep.push("verdict", "pass");
                        }
                        Err(e) => {
                            rep.push_raw(format!("axiom monomial-hopf violated ({e})"));
                            rep.push("verdict", "fail");
                        }
                    }
                }
                // a bundle that fails its coaction axioms is a computed
                // negative verdict, not a tool error
                Err(Error::UnverifiedInput(msg)) => {
                    rep.push_raw(format!("axiom coaction violated ({msg})"));
                    rep.push("verdict", "fail");
                }
                Err(e) => return Err(CliError::runtime(&desc, e)),
            }
            emit(rep.finish(started), &flags)
        }
        "integral" => {
            let (positional, flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let mut rep = Report::new("integral", &desc, &input.digest_payload());
            match load(&input, &flags, false).map_err(|e| CliError::runtime(&desc, e))? {
                Loaded::Hopf(h, _) => {
                    let r = integral::classify(&h).map_err(|e| CliError::runtime(&desc, e))?;
                    rep.push("field", h.field());
                    rep.push("dim", h.dim());
                    rep.push("left_dim", r.left.len());
                    rep.push("right_dim", r.right.len());
                    for phi in &r.left {
                        scalar_lines(&mut rep, "left", h.space(), phi);
                    }
                    for phi in &r.right {
                        scalar_lines(&mut rep, "right", h.space(), phi);
                    }
                    rep.push(
                        "parity",
                        match r.parity {
                            Some(0) => "even",
                            Some(_) => "odd",
                            None => "mixed",
                        },
                    );
                    rep.push("total", r.total);
                    rep.push("unimodular", r.unimodular);
                    if let Some(g) = &r.distinguished_grouplike {
                        rep.push("gamma", h.space().format_element(g));
                        rep.push("gamma_is_identity", r.gamma_is_identity);
                    }
                }
                Loaded::Laurent(l) => {
                    let (lie, li) = integral::laurent_integral_intrinsic(&l, flags.window)
                        .map_err(|e| CliError::runtime(&desc, e))?;
                    rep.push("field", l.field());
                    rep.push("odd_rank", l.odd_rank());
                    rep.push("lattice_rank", l.lattice_rank());
                    rep.push("window", flags.window);
                    for (i, d) in li.delta_exponents.iter().enumerate() {
                        rep.push_raw(format!("delta_exponent t{} {}", i + 1, d));
                    }
                    for mono in l.window(flags.window) {
                        let v = li.eval(&l, &mono);
                        if !v.is_zero() {
                            rep.push_raw(format!("phi {} {}", mono.name(), v));
                        }
                    }
                    rep.push("window_verified", true);
                    let gamma = li
                        .distinguished_grouplike(&l, flags.window.min(4))
                        .map_err(|e| CliError::runtime(&desc, e))?;
                    rep.push("gamma", gamma.format());
                    rep.push("pi_gamma", l.project_to_group(&gamma).format());
                    rep.push("unimodular", gamma == l.one());
                    let _ = lie;
                }
                _ => {
                    return Err(CliError::usage(
                        "integral expects an algebra or laurent input",
                    ))
                }
            }
            emit(rep.finish(started), &flags)
        }
        "bosonize" => {
            let (positional, flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let Loaded::Hopf(h, _) =
                load(&input, &flags, false).map_err(|e| CliError::runtime(&desc, e))?
            else {
                return Err(CliError::usage("bosonize expects a Hopf algebra input"));
            };
            let b =
                superhopf::boson::bosonize(&h).map_err(|e| CliError::runtime(&desc, e))?;
            let mut rep = Report::new("bosonize", &desc, &input.digest_payload());
            rep.push("field", h.field());
            rep.push("dim_in", h.dim());
            rep.push("dim_out", b.dim());
            let s = b.ahat().antipode();
            let s2 = s.compose(s).expect("antipode composes");
            let id = superhopf::Mat::identity(h.field(), b.dim());
            rep.push("antipode_involutive", s2.total() == id);
            let mut power = s.clone();
            let mut order = 0u32;
            for k in 1..=8u32 {
                if power.total() == id {
                    order = k;
                    break;
                }
                power = power.compose(s).expect("antipode composes");
            }
            rep.push("antipode_order", order);
            rep.push("mode", "noncommutative");
            if let Some(out) = &flags.out {
                let doc = AlgebraDoc::from_hopf(b.ahat(), VerifyMode::BialgebraWithAntipode);
                std::fs::write(out, doc.emit()).map_err(|e| CliError {
                    msg: format!("error [{}]: {e}", out.display()),
                    code: 1,
                })?;
                rep.push("wrote", out.display());
            }
            Ok(rep.finish(started))
        }
        "invariants" => {
            let (positional, flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let Loaded::Bundle(bundle, _) =
                load(&input, &flags, true).map_err(|e| CliError::runtime(&desc, e))?
            else {
                return Err(CliError::usage("invariants expects an action input"));
            };
            let c = comodule::invariants(&bundle).map_err(|e| CliError::runtime(&desc, e))?;
            let mut rep = Report::new("invariants", &desc, &input.digest_payload());
            rep.push("field", bundle.field());
            rep.push("dim_b", bundle.base().dim());
            rep.push("dim_invariants", c.dim());
            for (i, v) in c.basis_in_b().iter().enumerate() {
                rep.push_raw(format!(
                    "inv c{i} = {}",
                    bundle.base().space().format_element(v)
                ));
            }
            emit(rep.finish(started), &flags)
        }
        "torsor" => {
            let (positional, flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let Loaded::Bundle(bundle, extra) =
                load(&input, &flags, true).map_err(|e| CliError::runtime(&desc, e))?
            else {
                return Err(CliError::usage("torsor expects an action input"));
            };
            let bundle = if flags.bosonized {
                comodule::bosonize_comodule(&bundle)
                    .map_err(|e| CliError::runtime(&desc, e))?
                    .bundle
            } else {
                bundle
            };
            let v = comodule::torsor_check(&bundle).map_err(|e| CliError::runtime(&desc, e))?;
            let inj =
                comodule::comodule_injective(&bundle).map_err(|e| CliError::runtime(&desc, e))?;
            let mut rep = Report::new("torsor", &desc, &input.digest_payload());
            rep.push("bosonized", flags.bosonized);
            rep.push("field", bundle.field());
            rep.push("dim_a", bundle.hopf().dim());
            rep.push("dim_b", bundle.base().dim());
            rep.push("dim_invariants", v.invariants_dim);
            rep.push("strongly_free", v.strongly_free);
            rep.push(
                "free",
                match v.free {
                    comodule::Freeness::Free => "true",
                    comodule::Freeness::NotFree => "false",
                    comodule::Freeness::Unknown => "unknown",
                },
            );
            rep.push("beta_well_defined", v.beta_well_defined);
            rep.push("beta_surjective", v.beta_surjective);
            rep.push("beta_bijective", v.beta_bijective);
            rep.push("dim_relative_tensor", v.dim_relative_tensor);
            rep.push("dim_b_tensor_a", v.dim_b_tensor_a);
            rep.push("projective", v.projective);
            rep.push("faithful", v.faithful);
            rep.push("generator", v.generator);
            rep.push("trace_ideal_is_c", v.trace_ideal_is_c);
            rep.push("injective_comodule", inj);
            rep.push("finitely_presented", v.finitely_presented);
            rep.push("torsor", v.torsor);
            if let Some((c, tau, q)) = extra.as_ref().filter(|_| !flags.bosonized) {
                let t = comodule::alpha_q_trivializable(c, tau, *q)
                    .map_err(|e| CliError::runtime(&desc, e))?;
                rep.push("trivializable_primitive_lift", t);
            }
            if flags.witnesses {
                for w in &v.witnesses {
                    rep.push_raw(format!("witness {w}"));
                }
            }
            emit(rep.finish(started), &flags)
        }
        "injective" => {
            let (positional, flags) = parse_flags(&args[1..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let Loaded::Bundle(bundle, _) =
                load(&input, &flags, true).map_err(|e| CliError::runtime(&desc, e))?
            else {
                return Err(CliError::usage("injective expects an action input"));
            };
            let inj =
                comodule::comodule_injective(&bundle).map_err(|e| CliError::runtime(&desc, e))?;
            let mut rep = Report::new("injective", &desc, &input.digest_payload());
            rep.push("field", bundle.field());
            rep.push("dim_b", bundle.base().dim());
            rep.push("injective_comodule", inj);
            emit(rep.finish(started), &flags)
        }
        "lie" => {
            let Some(sub) = args.get(1) else {
                return Err(CliError::usage("lie needs a subcommand"));
            };
            let (positional, flags) = parse_flags(&args[2..])?;
            let (input, _) = load_input(&positional)?;
            let desc = input.descriptor();
            let g = match &input {
                Input::Builtin(spec) => {
                    resolve_lie(spec, flags.field).map_err(|e| CliError::runtime(&desc, e))?
                }
                Input::File(_, SpecDocument::Lie(d), _) => {
                    d.to_lie().map_err(|e| CliError::runtime(&desc, e))?
                }
                Input::File(..) => {
                    return Err(CliError::usage("lie subcommands expect a lie input"))
                }
            };
            let mut rep = Report::new(&format!("lie.{sub}"), &desc, &input.digest_payload());
            rep.push("field", g.field());
            rep.push("even_dim", g.even_dim());
            rep.push("odd_dim", g.odd_dim());
            match sub.as_str() {
                "verify" => {
                    push_verify_report(&mut rep, &g.verify(), flags.witnesses);
                }
                "delta" => {
                    g.expect_verified().map_err(|e| CliError::runtime(&desc, e))?;
                    for (name, d) in g.even_names().iter().zip(g.delta_character()) {
                        rep.push_raw(format!("delta {name} {d}"));
                    }
                }
                "dualbasis" | "z" => {
                    let fd = superhopf::pbw::dual_basis(&g, 6)
                        .map_err(|e| CliError::runtime(&desc, e))?;
                    if sub == "dualbasis" {
                        for (i, m) in
                            superhopf::MonomialIndex::all(g.odd_dim() as u32).enumerate()
                        {
                            let label: Vec<String> =
                                m.indices().iter().map(|x| x.to_string()).collect();
                            rep.push_raw(format!(
                                "y [{}] {}",
                                label.join(","),
                                fd.dual_basis[i].format(&g)
                            ));
                        }
                    }
                    rep.push_raw(format!("z {}", fd.z.format(&g)));
                }
                "unimodular" => {
                    let u = superhopf::pbw::unimodularity(&g)
                        .map_err(|e| CliError::runtime(&desc, e))?;
                    for (name, d) in g.even_names().iter().zip(&u.delta) {
                        rep.push_raw(format!("delta {name} {d}"));
                    }
                    rep.push("unimodular", u.unimodular);
                }
                other => return Err(CliError::usage(format!("unknown lie subcommand {other}"))),
            }
            emit(rep.finish(started), &flags)
        }
        other => Err(CliError::usage(format!("unknown command {other}"))),
    }
}

fn emit(text: String, flags: &Flags) -> Result<String, CliError> {
    if let Some(out) = &flags.out {
        std::fs::write(out, &text).map_err(|e| CliError {
            msg: format!("error [{}]: {e}", out.display()),
            code: 1,
        })?;
    }
    Ok(text)
}
