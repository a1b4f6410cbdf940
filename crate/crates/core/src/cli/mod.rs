//! Batch command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit status: `0` on success or when an
//! equation holds, `1` on a counterexample or failed property, `2` on usage
//! and module errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checker::suite::{verify_lemma_suite, LemmaSuite, SuiteConfig};
use crate::checker::{timed_check, Bounds, Mode, Tails, Universe, WreathBounds};
use crate::error::{Error, Result};
use crate::models::{FnModel, LexModel, WreathModel};
use crate::periodic::{PeriodicMap, DEFAULT_SEARCH_LIMIT};
use crate::terms::{axiom_commute, axiom_join, axiom_periodic, eval, parse, parse_equation, Equation, Model};
use crate::variety::{self, VarietySig};

#[derive(Debug, Parser)]
#[command(name = "fnz", version, about = "Computations in the periodic l-pregroups F_n(Z)")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for exhaustive checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a term in a model.
    Eval {
        #[arg(long)]
        model: String,
        #[arg(long)]
        term: String,
        /// `var=literal`, repeatable.
        #[arg(long = "bind")]
        binds: Vec<String>,
    },
    /// Search for a counterexample to an equation or axiom.
    Check(CheckArgs),
    /// List the atoms of F_n(Z).
    Atoms { n: usize },
    /// Core of a strictly positive idempotent.
    Core { element: String },
    /// delta of a strictly positive idempotent.
    Delta { element: String },
    /// Write a positive element as a word in shifts and atoms.
    Decompose {
        element: String,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        limit: usize,
    },
    /// Run the generation pipeline on an element of full periodicity.
    Generate { element: String },
    /// Join two atoms of incomparable periods.
    LcmJoin { a: String, b: String },
    /// Lattice of subvarieties.
    #[command(subcommand)]
    Variety(VarietyCommand),
    /// Run the registered property suite.
    Verify {
        /// `all`, or a comma-separated list of name prefixes.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Only list the registered property names.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxiomKind {
    Commute,
    Periodic,
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TailsArg {
    Identity,
    Shared,
    Independent,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub model: String,
    #[arg(long, conflicts_with = "equation", required_unless_present = "equation")]
    pub axiom: Option<AxiomKind>,
    /// Period parameter of `commute`/`periodic`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Index set of `join`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub set: Vec<usize>,
    #[arg(long)]
    pub equation: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub h: i64,
    /// Sample this many random assignments instead of enumerating.
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub lex: i64,
    #[arg(long, default_value_t = 3)]
    pub window: i64,
    #[arg(long, default_value_t = 1)]
    pub global: i64,
    #[arg(long, default_value_t = 1)]
    pub exceptions: usize,
    #[arg(long, value_enum, default_value_t = TailsArg::Identity)]
    pub tails: TailsArg,
    #[arg(long, default_value_t = 50_000_000)]
    pub ceiling: u128,
}

#[derive(Debug, Subcommand)]
pub enum VarietyCommand {
    /// Subvarieties of V(F_n(Z)).
    Subvarieties {
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Cover relations among the subvarieties of V(F_n(Z)).
    Covers { n: usize },
    /// The join of the properly n-periodic bottoms.
    Bottom { n: usize },
    /// Single-inequality axiom of a signature such as `V{4,3}`.
    Axiom { sig: String },
    Leq { a: String, b: String },
    Join { a: String, b: String },
    Meet { a: String, b: String },
}

enum AnyModel {
    Fn(FnModel),
    Lex(LexModel),
    Wreath(WreathModel),
}

macro_rules! with_model {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            AnyModel::Fn($m) => $body,
            AnyModel::Lex($m) => $body,
            AnyModel::Wreath($m) => $body,
        }
    };
}

/// `F<n>`, `Lex<m>xF<n>` or `WxF<n>`.
fn parse_model(s: &str) -> Result<AnyModel> {
    let bad = || Error::Literal(format!("unknown model `{s}` (expected F<n>, Lex<m>xF<n> or WxF<n>)"));
    let period = |t: &str| -> Result<usize> {
        let n: usize = t.strip_prefix('F').and_then(|d| d.parse().ok()).ok_or_else(bad)?;
        if n == 0 {
            return Err(Error::InvalidPeriod(0));
        }
        Ok(n)
    };
    if let Some(rest) = s.strip_prefix("WxF") {
        return Ok(AnyModel::Wreath(WreathModel::new(period(&format!("F{rest}"))?)));
    }
    if let Some(rest) = s.strip_prefix("Lex") {
        let (m, f) = rest.split_once('x').ok_or_else(bad)?;
        let m: usize = m.parse().map_err(|_| bad())?;
        return Ok(AnyModel::Lex(LexModel::new(m, period(f)?)));
    }
    Ok(AnyModel::Fn(FnModel::new(period(s)?)))
}

fn element(s: &str) -> Result<PeriodicMap> {
    s.parse()
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Output<'_> {
    /// Prints `text` normally and `value` under `--json`.
    fn emit(&mut self, text: impl AsRef<str>, value: Value) {
        let r = if self.json {
            writeln!(self.out, "{}", serde_json::to_string_pretty(&value).expect("json values serialize"))
        } else {
            writeln!(self.out, "{}", text.as_ref())
        };
        r.expect("write to output");
    }
}

/// Parses `args` (program name first) and runs the subcommand, writing
/// results to `out` and diagnostics to `err`.
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
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut o = Output { out, json: cli.json };
    match execute(&cli, &mut o) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli, o: &mut Output<'_>) -> Result<i32> {
    match &cli.command {
        Command::Eval { model, term, binds } => {
            let t = parse(term)?;
            with_model!(parse_model(model)?, m => {
                let mut env = BTreeMap::new();
                for b in binds {
                    let (v, lit) = b
                        .split_once('=')
                        .ok_or_else(|| Error::Literal(format!("binding `{b}` is not of the form var=literal")))?;
                    env.insert(v.trim().to_string(), m.parse_elem(lit)?);
                }
                let value = m.format(&eval(&t, &m, &env)?);
                o.emit(&value, json!({"model": m.name(), "term": t.to_string(), "value": value}));
            });
            Ok(0)
        }
        Command::Check(args) => check(args, cli.threads, o),
        Command::Atoms { n } => {
            if *n < 2 {
                return Err(Error::PreconditionFailed("atoms need n >= 2".into()));
            }
            let atoms: Vec<String> = PeriodicMap::atoms(*n).iter().map(|a| a.to_string()).collect();
            o.emit(atoms.join("\n"), json!({"n": n, "atoms": atoms}));
            Ok(0)
        }
        Command::Core { element: e } => {
            let f = element(e)?;
            let c = f.core()?;
            o.emit(c.to_string(), json!({"input": f.to_string(), "core": c.to_string(), "per": c.per()}));
            Ok(0)
        }
        Command::Delta { element: e } => {
            let f = element(e)?;
            if !(f.is_strictly_positive() && f.is_idempotent()) {
                return Err(Error::PreconditionFailed(format!("{f} is not a strictly positive idempotent")));
            }
            let d = f.delta();
            o.emit(d.to_string(), json!({"input": f.to_string(), "delta": d.to_string()}));
            Ok(0)
        }
        Command::Decompose { element: e, limit } => {
            let f = element(e)?;
            let (w, strategy) = f.decompose_positive_with(*limit)?;
            let strategy = format!("{strategy:?}");
            o.emit(
                w.to_string(),
                json!({"input": f.to_string(), "word": w.to_string(), "length": w.len(), "strategy": strategy}),
            );
            Ok(0)
        }
        Command::Generate { element: e } => {
            let a = element(e)?;
            let trace = a.generate_atom()?;
            let mut lines = vec![format!("input        {}", trace.input)];
            let mut stages = Vec::new();
            for s in &trace.stages {
                let fp = s.final_periodicity.map(|k| format!("  final periodicity {k}")).unwrap_or_default();
                lines.push(format!("{:<12} {}{fp}", s.label, s.map));
                stages.push(json!({"label": s.label, "map": s.map.to_string(), "final_periodicity": s.final_periodicity}));
            }
            o.emit(lines.join("\n"), json!({"input": trace.input.to_string(), "stages": stages}));
            Ok(0)
        }
        Command::LcmJoin { a, b } => {
            let (a, b) = (element(a)?, element(b)?);
            let r = PeriodicMap::atom_lcm_join(&a, &b)?;
            let per = r.join.per();
            o.emit(
                format!("{}  (shifts {} and {}, periodicity {per})", r.join, r.s, r.t),
                json!({"a": a.to_string(), "b": b.to_string(), "s": r.s, "t": r.t, "join": r.join.to_string(), "per": per}),
            );
            Ok(0)
        }
        Command::Variety(v) => variety_command(v, o),
        Command::Verify { suite, list } => {
            let s = LemmaSuite::builtin();
            if *list {
                let names = s.names();
                o.emit(names.join("\n"), json!(names));
                return Ok(0);
            }
            let config = match suite.as_str() {
                "all" => SuiteConfig::All,
                "" => SuiteConfig::Empty,
                other => SuiteConfig::Only(other.split(',').map(|p| p.trim().to_string()).collect()),
            };
            let (passed, reports) = verify_lemma_suite(&s, &config);
            let lines: Vec<String> = reports
                .iter()
                .map(|r| match (&r.witness, r.checked) {
                    (None, Some(c)) => format!("pass  {}  ({c} checked, {} ms)", r.property, r.elapsed_ms),
                    (w, _) => format!("{}  {}  {}", r.verdict, r.property, w.as_deref().unwrap_or("")),
                })
                .collect();
            o.emit(lines.join("\n"), json!({"passed": passed, "properties": reports}));
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn check(args: &CheckArgs, threads: usize, o: &mut Output<'_>) -> Result<i32> {
    let need_n = || {
        args.n
            .ok_or_else(|| Error::PreconditionFailed("--axiom commute/periodic needs --n".into()))
    };
    let eq: Equation = match (args.axiom, &args.equation) {
        (Some(AxiomKind::Commute), _) => axiom_commute(need_n()?),
        (Some(AxiomKind::Periodic), _) => axiom_periodic(need_n()?),
        (Some(AxiomKind::Join), _) => axiom_join(&args.set)?,
        (None, Some(src)) => parse_equation(src)?,
        (None, None) => unreachable!("clap requires --axiom or --equation"),
    };
    let mode = match args.samples {
        Some(samples) => Mode::Random { samples, seed: args.seed.expect("clap requires --seed") },
        None => Mode::Exhaustive,
    };
    let tails = match args.tails {
        TailsArg::Identity => Tails::Identity,
        TailsArg::Shared => Tails::Shared,
        TailsArg::Independent => Tails::Independent,
    };
    let bounds = Bounds {
        h: args.h,
        mode,
        lex: args.lex,
        wreath: WreathBounds { window: args.window, global: args.global, max_exceptions: args.exceptions, tails },
        ceiling: args.ceiling,
        threads: threads.max(1),
    };
    with_model!(parse_model(&args.model)?, m => run_check(&eq, &m, &bounds, o))
}

fn run_check<M: Universe>(eq: &Equation, m: &M, bounds: &Bounds, o: &mut Output<'_>) -> Result<i32> {
    let (verdict, ms) = timed_check(eq, m, bounds)?;
    let text = match (&verdict.counterexample(), verdict.report(m).stats) {
        (Some(c), _) => format!("{eq}\ncounterexample in {}: {}", m.name(), c.describe(m, eq)),
        (None, Some(s)) => format!(
            "{eq}\nholds within bounds in {}: {} elements, {} variables, {} assignments",
            m.name(),
            s.universe,
            s.variables,
            s.assignments
        ),
        (None, None) => unreachable!("a holding verdict carries stats"),
    };
    o.emit(
        text,
        json!({
            "model": m.name(),
            "equation": eq.to_string(),
            "bounds": bounds,
            "verdict": verdict.report(m),
            "elapsed_ms": ms,
        }),
    );
    Ok(if verdict.holds() { 0 } else { 1 })
}

fn variety_command(v: &VarietyCommand, o: &mut Output<'_>) -> Result<i32> {
    let positive = |n: usize| {
        if n == 0 {
            Err(Error::InvalidPeriod(0))
        } else {
            Ok(n)
        }
    };
    let sig = |s: &str| s.parse::<VarietySig>();
    match v {
        VarietyCommand::Subvarieties { n, count } => {
            let all: Vec<String> = variety::subvarieties(positive(*n)?).iter().map(|s| s.to_string()).collect();
            if *count {
                o.emit(all.len().to_string(), json!({"n": n, "count": all.len()}));
            } else {
                o.emit(all.join("\n"), json!({"n": n, "subvarieties": all}));
            }
        }
        VarietyCommand::Covers { n } => {
            let r = variety::cover_report(positive(*n)?);
            let text: Vec<String> =
                r.covers.iter().map(|[i, j]| format!("{} < {}", r.nodes[*i], r.nodes[*j])).collect();
            o.emit(text.join("\n"), serde_json::to_value(&r).expect("report serializes"));
        }
        VarietyCommand::Bottom { n } => {
            let b = variety::properly_periodic_bottom(positive(*n)?);
            o.emit(b.to_string(), json!({"n": n, "bottom": b.to_string()}));
        }
        VarietyCommand::Axiom { sig: s } => {
            let v = sig(s)?;
            let eq = variety::axiom_for(&v)?;
            o.emit(eq.to_string(), json!({"signature": v.to_string(), "axiom": eq.to_string()}));
        }
        VarietyCommand::Leq { a, b } => {
            let (a, b) = (sig(a)?, sig(b)?);
            let r = a.leq(&b);
            o.emit(r.to_string(), json!({"a": a.to_string(), "b": b.to_string(), "leq": r}));
        }
        VarietyCommand::Join { a, b } | VarietyCommand::Meet { a, b } => {
            let (a, b) = (sig(a)?, sig(b)?);
            let (op, r) = match v {
                VarietyCommand::Join { .. } => ("join", a.join(&b)),
                _ => ("meet", a.meet(&b)),
            };
            o.emit(r.to_string(), json!({"a": a.to_string(), "b": b.to_string(), op: r.to_string()}));
        }
    }
    Ok(0)
}

/// Runs with the process arguments and standard streams.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
