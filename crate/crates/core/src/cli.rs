//! Command-line front end. [`run`] parses arguments, writes the report to
//! `out` and diagnostics to `err`, and returns the process exit code:
//! 0 when the command succeeded or verified, 1 when a checked property does
//! not hold, 2 on usage, parse or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog;
use crate::closure::{self, MixedProduct};
use crate::dsl::{format_element, parse_relation, OperadDefinition};
use crate::error::{Error, Result};
use crate::instance::{self, search_counterexample, tensor_instance, AlgebraInstance, SearchConfig};
use crate::operad::{dual, operads_equal, tilde_detailed, QuadraticOperad, RelationModule};
use crate::report::{self, basis_lines, operad_json, presentation_label, yn, Report, Section};
use crate::weight::{SymmetryClass, Weight3Element};

pub const SEED_VAR: &str = "OPERAD_FORGE_SEED";

#[derive(Debug, Parser)]
#[command(name = "operad-forge", version, about = "Exact computations with binary quadratic operads")]
pub struct Cli {
    /// Emit the report as JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relations of an operad, optionally with dual, tilde, rank, orbits, isotypic profile.
    Show(ShowArgs),
    /// The tilde operad and the presentation it was built from.
    Tilde { target: String },
    /// Symbolic verification sweeps.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// The least companion module making the componentwise product close.
    Companion { target: String },
    /// Structure-constant algebras.
    #[command(subcommand)]
    Instance(InstanceCommand),
    /// Seeded searches.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Regenerated tables.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Debug, Args)]
pub struct ShowArgs {
    /// Preset name or operad definition file.
    pub target: String,
    /// Koszul dual module
    #[arg(long)]
    pub dual: bool,
    /// Tilde operad
    #[arg(long)]
    pub tilde: bool,
    /// Generator rank of the relation module
    #[arg(long)]
    pub rank: bool,
    /// Orbit span of each relation
    #[arg(long)]
    pub orbits: bool,
    /// Isotypic multiplicities
    #[arg(long)]
    pub isotypic: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// P-algebra ⊗ tilde(P)-algebra is a P-algebra.
    Theorem1 {
        #[arg(long, conflicts_with = "all_presets")]
        preset: Option<String>,
        #[arg(long)]
        all_presets: bool,
    },
    /// The commutator bracket on A ⊗ A! is a Lie bracket.
    BracketLie {
        #[arg(long)]
        preset: Option<String>,
    },
    /// The twisted product of two Poisson algebras is Poisson.
    TwistedPoisson {
        #[arg(long, value_enum, default_value_t = Twist::Poisson)]
        product: Twist,
    },
    /// P-algebra ⊗ Q-algebra is NOT a P-algebra (verified when closure fails).
    Negative {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        /// Relation to test; defaults to the relation basis of P.
        #[arg(long)]
        target: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Twist {
    /// 3μ⊗μ − μ⊗μτ − μτ⊗μ + μτ⊗μτ
    Poisson,
    /// 3μ⊗μ + μ⊗μτ + μτ⊗μ − μτ⊗μτ
    PoissonTensor,
}

impl Twist {
    pub fn product(self) -> MixedProduct {
        match self {
            Twist::Poisson => MixedProduct::twisted_poisson(),
            Twist::PoissonTensor => MixedProduct::poisson_tensor(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum InstanceCommand {
    /// Evaluate every relation on every basis triple.
    Check {
        /// Instance JSON file or fixture name.
        file: String,
        #[arg(long)]
        operad: String,
    },
    /// Structure constants of A ⊗ B.
    Tensor {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        twist: Option<Twist>,
        /// Also check the product against this operad.
        #[arg(long)]
        check: Option<String>,
        /// Write the instance JSON here instead of stdout.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Look for A ⊨ P, B ⊨ Q with A ⊗ B violating P.
    Counterexample {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..=4))]
        max_dim: u64,
        /// Defaults to OPERAD_FORGE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Relation to test; defaults to the relation basis of P.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 400)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReportCommand {
    /// Duals, ranks, tilde tables and the verification sweeps.
    PaperTables {
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

/// Seed from `OPERAD_FORGE_SEED`, default 0.
pub fn env_seed() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{SEED_VAR}={s} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

/// A preset name, or a path to an operad definition file.
pub fn load_operad(target: &str) -> Result<QuadraticOperad> {
    let path = Path::new(target);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        OperadDefinition::from_text(&text)?.build()
    } else {
        catalog::preset(target)
    }
}

/// A fixture name, or a path to an instance JSON file.
pub fn load_instance(target: &str) -> Result<AlgebraInstance> {
    let path = Path::new(target);
    if path.is_file() {
        let a = AlgebraInstance::from_json(&std::fs::read_to_string(path)?)?;
        Ok(if a.name() == "<unnamed>" {
            a.with_name(path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default())
        } else {
            a
        })
    } else {
        instance::example(target)
    }
}

fn relation_section(label: &str, r: &RelationModule) -> Section {
    let mut s = Section::new(format!("{label} ({}, dim {})", r.symmetry().keyword(), r.dim()), &["relation"]);
    for line in basis_lines(r) {
        s.row([line]);
    }
    if r.dim() == 0 {
        s.note("no relations");
    }
    s
}

fn show(args: &ShowArgs, seed: u64) -> Result<Report> {
    let p = load_operad(&args.target)?;
    let mut r = Report::new(format!("operad {}", p.name()));
    r.provenance("operad", p.name());
    r.push(relation_section("relations", p.relations()));
    r.data("operad", operad_json(&p));
    if let Some(pres) = p.presentation() {
        let mut s = Section::new("presentation", &["v", "w"]);
        for pp in pres {
            s.row([pp.v.to_string(), pp.w.to_string()]);
        }
        r.push(s);
    }
    if args.dual {
        let d = dual(&p);
        r.push(relation_section("dual", d.relations()));
        let mut s = Section::new("self-duality", &["R! = R"]);
        s.row([yn(operads_equal(&d, &p))]);
        r.push(s);
        r.data("dual", operad_json(&d));
    }
    if args.tilde {
        let t = tilde_detailed(&p, seed)?;
        r.provenance("tilde presentation", presentation_label(&p, seed));
        r.push(relation_section("tilde", t.operad.relations()));
        r.data("tilde", operad_json(&t.operad));
    }
    if args.rank {
        let mut s = Section::new("rank", &["module", "rank"]);
        s.row(["R".to_string(), p.rank().to_string()]);
        if p.symmetry() == SymmetryClass::Regular {
            s.row(["R!".to_string(), dual(&p).rank().to_string()]);
        }
        r.push(s);
    }
    if args.isotypic {
        let iso = p.relations().isotypic();
        let mut s = Section::new("isotypic multiplicities", &["trivial", "sign", "standard"]);
        s.row([iso.m_triv.to_string(), iso.m_sgn.to_string(), iso.m_std.to_string()]);
        r.push(s);
    }
    if args.orbits {
        let mut s = Section::new("orbits of the generators", &["generator", "orbit dim"]);
        let gens: Vec<Weight3Element> = match p.presentation() {
            Some(pres) => pres.iter().map(|pp| pp.relation_in(p.symmetry())).collect(),
            None => p.relations().basis_elements(),
        };
        for g in gens {
            let orbit = RelationModule::orbit_span(p.symmetry(), std::slice::from_ref(&g))?;
            s.row([format_element(&g), orbit.dim().to_string()]);
        }
        r.push(s);
    }
    Ok(r)
}

fn tilde_report(target: &str, seed: u64) -> Result<Report> {
    let p = load_operad(target)?;
    let t = tilde_detailed(&p, seed)?;
    let mut r = Report::new(format!("tilde of {}", p.name()));
    r.provenance("operad", p.name())
        .provenance("presentation", presentation_label(&p, seed));
    let mut s = Section::new("presentation used", &["v", "w"]);
    for pp in &t.presentation {
        s.row([pp.v.to_string(), pp.w.to_string()]);
    }
    r.push(s);
    r.push(relation_section("tilde relations", t.operad.relations()));
    let mut c = Section::new("comparison", &["R~ = R!", "dim R~"]);
    let d = crate::operad::dual_module(p.relations());
    c.row([yn(t.operad.relations() == &d).to_string(), t.operad.relations().dim().to_string()]);
    r.push(c);
    r.data("tilde", operad_json(&t.operad));
    Ok(r)
}

fn closure_report(preset: Option<&str>, seed: u64) -> Result<Report> {
    let ops: Vec<QuadraticOperad> = match preset {
        Some(n) => vec![load_operad(n)?],
        None => catalog::regular_presets(),
    };
    let mut r = Report::new("componentwise product closes on P ⊗ tilde(P)");
    r.provenance("seed", seed.to_string());
    let mut s = Section::new("closure", &["operad", "presentation", "dim R", "dim R~", "closes"]);
    let mut all = true;
    let mut certs = Vec::new();
    for p in &ops {
        let t = tilde_detailed(p, seed)?.operad;
        let out = closure::closes_with_tilde(p, &t)?;
        all &= out.holds;
        s.row([
            p.name().to_string(),
            presentation_label(p, seed),
            p.relations().dim().to_string(),
            t.relations().dim().to_string(),
            yn(out.holds).to_string(),
        ]);
        if !out.holds {
            certs.push(json!({"operad": p.name(), "outcome": out}));
        }
    }
    r.push(s);
    if !certs.is_empty() {
        r.data("failures", json!(certs));
    }
    r.verified = all;
    Ok(r)
}

fn bracket_report(preset: Option<&str>) -> Result<Report> {
    let ops: Vec<QuadraticOperad> = match preset {
        Some(n) => vec![load_operad(n)?],
        None => (1..=6).map(catalog::gi_ass).collect::<Result<_>>()?,
    };
    let mut r = Report::new("commutator bracket on A ⊗ A!");
    let mut s = Section::new("bracket", &["operad", "antisymmetric", "jacobi", "lie"]);
    let mut all = true;
    for p in &ops {
        let out = closure::bracket_is_lie(p.relations(), dual(p).relations())?;
        all &= out.holds();
        s.row([p.name(), yn(out.antisymmetric), yn(out.jacobi.holds), yn(out.holds())]);
    }
    r.push(s);
    r.verified = all;
    Ok(r)
}

fn outcome_sections(r: &mut Report, out: &closure::ClosureOutcome) {
    let mut s = Section::new("certificates", &["target", "holds", "A monomial", "residual in B"]);
    for c in &out.certificates {
        let failing: Vec<_> = c.components.iter().filter(|x| x.residual != "0").collect();
        if failing.is_empty() {
            s.row([c.target.as_str(), yn(c.holds), "-", "0"]);
        }
        for comp in failing {
            s.row([c.target.as_str(), yn(c.holds), comp.a_monomial.as_str(), comp.residual.as_str()]);
        }
    }
    r.push(s);
    r.data("outcome", json!(out));
}

fn twisted_report(twist: Twist) -> Result<Report> {
    let m = twist.product();
    let out = closure::twisted_poisson_with(&m)?;
    let mut r = Report::new("Poisson ⊗ Poisson under a mixed product");
    let coeffs: Vec<String> = m.coeffs().iter().map(crate::linalg::fmt_rational).collect();
    r.provenance("coefficients", format!("({})", coeffs.join(", ")));
    outcome_sections(&mut r, &out);
    r.verified = out.holds;
    Ok(r)
}

fn targets_for(p: &QuadraticOperad, target: Option<&str>) -> Result<Vec<Weight3Element>> {
    match target {
        Some(t) => Ok(vec![parse_relation(t)?]),
        None => Ok(p.relations().basis_elements()),
    }
}

fn negative_report(p: &str, q: &str, target: Option<&str>) -> Result<Report> {
    let (pp, qq) = (load_operad(p)?, load_operad(q)?);
    let targets = targets_for(&pp, target)?;
    let out = closure::closure_holds(pp.relations(), qq.relations(), &MixedProduct::identity(), &targets)?;
    let mut r = Report::new(format!("{} ⊗ {} is not a {}-algebra", pp.name(), qq.name(), pp.name()));
    r.provenance("p", pp.name()).provenance("q", qq.name());
    outcome_sections(&mut r, &out);
    r.verified = !out.holds;
    Ok(r)
}

fn companion_report(target: &str, seed: u64) -> Result<Report> {
    let p = load_operad(target)?;
    let comp = closure::minimal_companion(&p)?;
    let t = tilde_detailed(&p, seed)?.operad;
    let mut r = Report::new(format!("minimal companion of {}", p.name()));
    r.push(relation_section("companion", &comp));
    let inside = t.relations().contains_module(&comp)?;
    let closes = closure::closes_with_tilde(&p, &QuadraticOperad::new(None, comp.clone(), None)?)?.holds;
    let mut s = Section::new("audit", &["dim companion", "dim R~", "companion in R~", "closes with companion"]);
    s.row([comp.dim().to_string(), t.relations().dim().to_string(), yn(inside).into(), yn(closes).into()]);
    r.push(s);
    r.verified = inside && closes;
    Ok(r)
}

fn instance_check(file: &str, operad: &str) -> Result<Report> {
    let a = load_instance(file)?;
    let p = load_operad(operad)?;
    let mut r = Report::new(format!("{} as a {}-algebra", a.name(), p.name()));
    r.provenance("instance", a.name()).provenance("operad", p.name());
    match a.check_relations(p.relations()) {
        Ok(v) => {
            let mut s = Section::new("violations", &["relation", "triple", "value"]);
            for x in v.iter().take(50) {
                let [i, j, k] = x.triple;
                s.row([x.relation.clone(), format!("(e{i}, e{j}, e{k})"), x.value.join(", ")]);
            }
            if v.len() > 50 {
                s.note(format!("{} violations, first 50 shown", v.len()));
            }
            r.verified = v.is_empty();
            r.push(s);
            r.data("violations", json!(v));
        }
        Err(Error::NotSymmetricProduct { kind, left, right }) => {
            let mut s = Section::new("symmetry", &["required", "violating pair"]);
            s.row([kind.to_string(), format!("(e{left}, e{right})")]);
            r.push(s);
            r.verified = false;
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

fn instance_tensor(a: &str, b: &str, twist: Option<Twist>, check: Option<&str>) -> Result<(Report, AlgebraInstance)> {
    let (ia, ib) = (load_instance(a)?, load_instance(b)?);
    let m = twist.map_or_else(MixedProduct::identity, Twist::product);
    let t = tensor_instance(&ia, &ib, &m);
    let mut r = Report::new(format!("{} ⊗ {}", ia.name(), ib.name()));
    let coeffs: Vec<String> = m.coeffs().iter().map(crate::linalg::fmt_rational).collect();
    r.provenance("coefficients", format!("({})", coeffs.join(", ")));
    let mut s = Section::new("tensor", &["dim", "nonzero constants"]);
    s.row([t.dim().to_string(), t.entries().len().to_string()]);
    r.push(s);
    if let Some(op) = check {
        let p = load_operad(op)?;
        let v = t.check_relations(p.relations());
        let ok = matches!(&v, Ok(v) if v.is_empty());
        let mut c = Section::new(format!("check against {}", p.name()), &["violations", "holds"]);
        c.row([v.map(|v| v.len().to_string()).unwrap_or_else(|e| e.to_string()), yn(ok).to_string()]);
        r.push(c);
        r.verified = ok;
    }
    r.data("instance", serde_json::from_str(&t.to_json())?);
    Ok((r, t))
}

fn search_report(
    p: &str,
    q: &str,
    max_dim: usize,
    seed: u64,
    target: Option<&str>,
    samples: usize,
) -> Result<Report> {
    let (pp, qq) = (load_operad(p)?, load_operad(q)?);
    let targets = targets_for(&pp, target)?;
    let config = SearchConfig {
        max_dim,
        seed,
        samples,
        ..SearchConfig::default()
    };
    let found = search_counterexample(pp.relations(), qq.relations(), &targets, &config)?;
    let mut r = Report::new(format!("counterexample search {} ⊗ {}", pp.name(), qq.name()));
    r.provenance("seed", seed.to_string())
        .provenance("max dim", max_dim.to_string())
        .provenance("samples", samples.to_string())
        .provenance("candidates per side", config.max_candidates.to_string());
    let mut s = Section::new("result", &["found", "A", "B", "violation"]);
    match &found {
        Some(c) => {
            s.row(["yes".to_string(), c.a.name().to_string(), c.b.name().to_string(), c.violation.to_string()]);
            r.data(
                "witness",
                json!({
                    "a": serde_json::from_str::<serde_json::Value>(&c.a.to_json())?,
                    "b": serde_json::from_str::<serde_json::Value>(&c.b.to_json())?,
                    "violation": c.violation,
                }),
            );
        }
        None => {
            let symbolic = closure::closure_holds(pp.relations(), qq.relations(), &MixedProduct::identity(), &targets)?;
            s.row(["no", "-", "-", "-"]);
            s.note("budget exhausted; absence is not a proof");
            s.note(format!("symbolic closure: {}", if symbolic.holds { "holds" } else { "fails" }));
        }
    }
    r.push(s);
    Ok(r)
}

enum Output {
    Report(Report),
    Written(Report, std::path::PathBuf, String),
}

fn dispatch(cli: &Cli) -> Result<(Output, bool)> {
    let seed = env_seed()?;
    // (output, whether `verified` drives the exit code)
    Ok(match &cli.command {
        Command::Show(args) => (Output::Report(show(args, seed)?), false),
        Command::Tilde { target } => (Output::Report(tilde_report(target, seed)?), false),
        Command::Verify(v) => {
            let r = match v {
                VerifyCommand::Theorem1 { preset, .. } => closure_report(preset.as_deref(), seed)?,
                VerifyCommand::BracketLie { preset } => bracket_report(preset.as_deref())?,
                VerifyCommand::TwistedPoisson { product } => twisted_report(*product)?,
                VerifyCommand::Negative { p, q, target } => negative_report(p, q, target.as_deref())?,
            };
            (Output::Report(r), true)
        }
        Command::Companion { target } => (Output::Report(companion_report(target, seed)?), true),
        Command::Instance(InstanceCommand::Check { file, operad }) => {
            (Output::Report(instance_check(file, operad)?), true)
        }
        Command::Instance(InstanceCommand::Tensor { a, b, twist, check, output }) => {
            let (r, t) = instance_tensor(a, b, *twist, check.as_deref())?;
            let gated = check.is_some();
            match output {
                Some(path) => (Output::Written(r, path.clone(), t.to_json()), gated),
                None if !cli.json => (Output::Written(r, "-".into(), t.to_json()), gated),
                None => (Output::Report(r), gated),
            }
        }
        Command::Search(SearchCommand::Counterexample { p, q, max_dim, seed: s, target, samples }) => {
            let seed = s.unwrap_or(seed);
            (
                Output::Report(search_report(p, q, *max_dim as usize, seed, target.as_deref(), *samples)?),
                false,
            )
        }
        Command::Report(ReportCommand::PaperTables { output }) => {
            let r = report::reference_tables(seed)?;
            match output {
                Some(path) => {
                    let body = if cli.json { r.to_json() } else { r.to_text() };
                    (Output::Written(r, path.clone(), body), false)
                }
                None => (Output::Report(r), false),
            }
        }
    })
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let (output, gated) = match dispatch(&cli) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let render = |r: &Report| if cli.json { r.to_json() } else { r.to_text() };
    let report = match output {
        Output::Report(r) => {
            let _ = write!(out, "{}", render(&r));
            r
        }
        Output::Written(r, path, body) => {
            if path.as_os_str() == "-" {
                let _ = writeln!(out, "{}", body);
                let _ = write!(err, "{}", r.to_text());
            } else {
                if let Err(e) = std::fs::write(&path, body) {
                    let _ = writeln!(err, "error: {}: {e}", path.display());
                    return 2;
                }
                let _ = write!(out, "{}", render(&r));
            }
            r
        }
    };
    if gated && !report.verified {
        1
    } else {
        0
    }
}
