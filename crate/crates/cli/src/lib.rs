//! The `syrt` command line.
//!
//! Every verb renders either plain text or pretty-printed JSON with sorted
//! keys. Exit codes: 0 success, 1 internal invariant failure, 2 usage or parse
//! error, 3 resource cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use syrt_core::composition::MAX_SIZE;
use syrt_core::endo::{certify_with_limit, Certificate};
use syrt_core::hecke::build_action_with_limit;
use syrt_core::qsym::{expand_r_in_f_with_limit, f_expansion_of, f_to_m};
use syrt_core::tableau::{enumerate_syrt_with_limit, ENUMERATION_LIMIT};
use syrt_core::{composition_series, compositions_of, Composition, SyrtError, Verdict};

pub const ENV_MAX_SIZE: &str = "SYRT_MAX_SIZE";

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "syrt", version, about = "0-Hecke modules on standard Young row-strict composition tableaux")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Largest |α| accepted; overrides the verb's default and SYRT_MAX_SIZE.
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    F,
    M,
}

#[derive(Args, Debug)]
struct ShapeArg {
    /// Composition as comma-separated parts, e.g. 3,2,2.
    #[arg(long)]
    shape: Composition,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the tableaux of a shape with their descent sets.
    Enum(ShapeArg),
    /// Expand R_α in the fundamental (or monomial) basis.
    Expand {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, value_enum, default_value_t = BasisArg::F)]
        basis: BasisArg,
    },
    /// Equivalence classes and their source tableaux.
    Classes(ShapeArg),
    /// Threads and the superstandard source tableau.
    Tsup(ShapeArg),
    /// Simplicity of the shape.
    Simple(ShapeArg),
    /// Check the 0-Hecke relations on the module.
    Verify(ShapeArg),
    /// A composition series with its quotient compositions.
    Series(ShapeArg),
    /// Certify (in)decomposability through the endomorphism algebra.
    Certify(ShapeArg),
    /// Certify every composition of n.
    Sweep {
        #[arg(long)]
        n: usize,
    },
}

impl Verb {
    fn default_cap(&self) -> usize {
        match self {
            Verb::Tsup(_) | Verb::Simple(_) => MAX_SIZE,
            Verb::Certify(_) | Verb::Sweep { .. } => syrt_core::endo::CERTIFY_LIMIT,
            _ => ENUMERATION_LIMIT,
        }
    }
}

enum Failure {
    Usage(String),
    Resource(String),
    Internal(String),
}

impl From<SyrtError> for Failure {
    fn from(e: SyrtError) -> Self {
        match e {
            SyrtError::Parse(_) | SyrtError::Domain(_) => Failure::Usage(e.to_string()),
            SyrtError::Resource { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// Output of a verb: the rendering plus whether an invariant failed.
struct Report {
    text: String,
    json: Value,
    broken: Option<String>,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            broken: None,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let cap = match cap_for(&cli) {
        Ok(cap) => cap,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let report = match execute(&cli.verb, cap) {
        Ok(r) => r,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Resource(m) => (EXIT_RESOURCE, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            let _ = writeln!(err, "error: {msg}");
            return code;
        }
    };
    let mut rendered = match cli.format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("values serialize"),
    };
    if !rendered.ends_with('\n') {
        rendered.push('\n');
    }
    let written = match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out
            .write_all(rendered.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_INTERNAL;
    }
    if let Some(msg) = report.broken {
        let _ = writeln!(err, "error: invariant failure: {msg}");
        return EXIT_INTERNAL;
    }
    0
}

fn cap_for(cli: &Cli) -> Result<usize, String> {
    if let Some(n) = cli.max_size {
        return Ok(n);
    }
    match std::env::var(ENV_MAX_SIZE) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{ENV_MAX_SIZE} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(cli.verb.default_cap()),
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<(), Failure> {
    if size > cap {
        return Err(Failure::Resource(format!(
            "{what} of size {size} exceeds the cap {cap} (raise with --max-size or {ENV_MAX_SIZE})"
        )));
    }
    Ok(())
}

fn set_text(s: &std::collections::BTreeSet<usize>) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("    {l}\n")).collect()
}

fn execute(verb: &Verb, cap: usize) -> Result<Report, Failure> {
    match verb {
        Verb::Enum(ShapeArg { shape }) => enum_verb(shape, cap),
        Verb::Expand { shape, basis } => expand_verb(&shape.shape, *basis, cap),
        Verb::Classes(ShapeArg { shape }) => classes_verb(shape, cap),
        Verb::Tsup(ShapeArg { shape }) => tsup_verb(shape, cap),
        Verb::Simple(ShapeArg { shape }) => simple_verb(shape, cap),
        Verb::Verify(ShapeArg { shape }) => verify_verb(shape, cap),
        Verb::Series(ShapeArg { shape }) => series_verb(shape, cap),
        Verb::Certify(ShapeArg { shape }) => certify_verb(shape, cap),
        Verb::Sweep { n } => sweep_verb(*n, cap),
    }
}

fn enum_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    let all = enumerate_syrt_with_limit(shape, cap)?;
    let mut text = format!("shape {shape}: {} tableaux\n", all.len());
    let mut items = Vec::new();
    for (k, t) in all.iter().enumerate() {
        let des = t.descent_set();
        let _ = writeln!(
            text,
            "\n#{} Des = {}  comp = {}",
            k + 1,
            set_text(&des),
            t.descent_composition()
        );
        text.push_str(&indent(&t.render()));
        items.push(json!({
            "rows": t.rows(),
            "descents": des,
            "descent_composition": t.descent_composition(),
        }));
    }
    let json = json!({ "shape": shape, "count": all.len(), "tableaux": items });
    Ok(Report::ok(text, json))
}

fn expand_verb(shape: &Composition, basis: BasisArg, cap: usize) -> Result<Report, Failure> {
    let mut x = expand_r_in_f_with_limit(shape, cap)?;
    if basis == BasisArg::M {
        x = f_to_m(&x);
    }
    let text = format!("R{shape} = {x}\n");
    let mut json = serde_json::to_value(&x).expect("values serialize");
    json["shape"] = json!(shape);
    Ok(Report::ok(text, json))
}

fn classes_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    let action = build_action_with_limit(shape, cap)?;
    let sources = action.sources();
    let mut text = format!("shape {shape}: {} classes\n", action.classes().len());
    let mut items = Vec::new();
    for (c, members) in action.classes().iter().enumerate() {
        let source = sources
            .iter()
            .copied()
            .find(|&k| action.class_of(k) == c)
            .ok_or_else(|| Failure::Internal(format!("class {c} has no source")))?;
        let src = &action.basis()[source];
        let expansion = f_expansion_of(shape.size(), members.iter().map(|&k| &action.basis()[k]));
        let _ = writeln!(
            text,
            "\nE_{c}: {} tableaux, {}\n  signature {:?}\n  source:",
            members.len(),
            expansion,
            src.column_signature().0
        );
        text.push_str(&indent(&src.render()));
        items.push(json!({
            "index": c,
            "size": members.len(),
            "signature": src.column_signature(),
            "source": src.rows(),
            "members": members.iter().map(|&k| action.basis()[k].rows()).collect::<Vec<_>>(),
            "expansion": expansion,
        }));
    }
    let json = json!({ "shape": shape, "classes": items });
    Ok(Report::ok(text, json))
}

fn tsup_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    check_cap("shape", shape.size(), cap)?;
    let threads = shape.threads();
    let sup = shape.t_sup();
    let mut text = format!("shape {shape}: {} threads\n", threads.threads.len());
    for (k, th) in threads.threads.iter().enumerate() {
        let cells: Vec<String> = th.iter().map(|c| format!("({},{})", c.col, c.row)).collect();
        let _ = writeln!(text, "  thread {}: {}", k + 1, cells.join(" "));
    }
    text.push_str("\nT_sup:\n");
    text.push_str(&indent(&sup.render()));
    let json = json!({
        "shape": shape,
        "boundary_cells": shape.boundary_cells(),
        "threads": threads,
        "t_sup": sup.rows(),
        "descents": sup.descent_set(),
    });
    Ok(Report::ok(text, json))
}

fn simple_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    check_cap("shape", shape.size(), cap)?;
    let simple = shape.is_simple();
    let text = format!("{shape}: {}\n", if simple { "simple" } else { "not simple" });
    Ok(Report::ok(text, json!({ "shape": shape, "simple": simple })))
}

fn verify_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    let action = build_action_with_limit(shape, cap)?;
    let relations = action.verify_relations();
    let acyclic = action.topological_order().is_some();
    let status = match &relations {
        Ok(()) => "ok".to_string(),
        Err(f) => format!("{f:?}"),
    };
    let text = format!(
        "shape {shape}: dim {}, {} generators\n  relations: {status}\n  move graph acyclic: {acyclic}\n",
        action.dim(),
        action.generator_count()
    );
    let json = json!({
        "shape": shape,
        "dim": action.dim(),
        "generators": action.generator_count(),
        "relations": status,
        "acyclic": acyclic,
    });
    let mut report = Report::ok(text, json);
    if relations.is_err() || !acyclic {
        report.broken = Some(format!("relations {status}, acyclic {acyclic}"));
    }
    Ok(report)
}

fn series_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    let action = build_action_with_limit(shape, cap)?;
    let series = composition_series(&action)?;
    let ranks = action.ranks()?;
    let mut text = format!("shape {shape}: series of length {}\n", series.chain.len());
    let mut items = Vec::new();
    for (j, (&k, q)) in series.chain.iter().zip(&series.quotient_descents).enumerate() {
        let t = &action.basis()[k];
        let _ = writeln!(
            text,
            "  R_{}/R_{}: F{q}  class {} rank {}  {:?}",
            j + 1,
            j,
            action.class_of(k),
            ranks[k],
            t.rows()
        );
        items.push(json!({
            "rows": t.rows(),
            "class": action.class_of(k),
            "rank": ranks[k],
            "quotient": q,
        }));
    }
    let multiset: Vec<Value> = series
        .multiset()
        .into_iter()
        .map(|(c, m)| json!({ "comp": c, "multiplicity": m }))
        .collect();
    let json = json!({ "shape": shape, "chain": items, "quotients": multiset });
    Ok(Report::ok(text, json))
}

fn certificate_text(c: &Certificate) -> String {
    let mut text = format!("shape {}: {}\n", c.alpha, c.verdict);
    let _ = writeln!(text, "  simple: {}", c.simple);
    let _ = writeln!(text, "  classes: {}", c.classes);
    let _ = writeln!(
        text,
        "  E_0: dim {}, commutant {}, radical {}, local {}",
        c.e0_dim, c.e0.commutant_dim, c.e0.radical_dim, c.e0.local
    );
    let _ = writeln!(
        text,
        "  full: dim {}, commutant {}, radical {}, local {}",
        c.dim, c.full.commutant_dim, c.full.radical_dim, c.full.local
    );
    text
}

fn certify_verb(shape: &Composition, cap: usize) -> Result<Report, Failure> {
    let c = certify_with_limit(shape, cap)?;
    let mut report = Report::ok(certificate_text(&c), c.to_json());
    if !c.is_consistent() {
        report.broken = Some(format!("certificate for {shape} contradicts simplicity"));
    }
    Ok(report)
}

fn sweep_verb(n: usize, cap: usize) -> Result<Report, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    check_cap("sweep", n, cap)?;
    let shapes = compositions_of(n)?;
    let certs: Vec<Certificate> = shapes
        .par_iter()
        .map(|a| certify_with_limit(a, cap))
        .collect::<Result<_, _>>()?;

    let mut text = format!("sweep n = {n}: {} compositions\n", certs.len());
    let _ = writeln!(
        text,
        "{:<16} {:>4} {:>7} {:>6} {:>8} {:>8}  verdict",
        "alpha", "dim", "classes", "simple", "commut.", "radical"
    );
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for c in &certs {
        let agree = (c.verdict == Verdict::Indecomposable) == c.simple;
        if !c.is_consistent() {
            disagreements.push(c.alpha.to_string());
        }
        let _ = writeln!(
            text,
            "{:<16} {:>4} {:>7} {:>6} {:>8} {:>8}  {}",
            c.alpha.to_string(),
            c.dim,
            c.classes,
            c.simple,
            c.full.commutant_dim,
            c.full.radical_dim,
            c.verdict
        );
        rows.push(json!({
            "alpha": c.alpha,
            "dim": c.dim,
            "classes": c.classes,
            "simple": c.simple,
            "commutant_dim": c.full.commutant_dim,
            "radical_dim": c.full.radical_dim,
            "e0_local": c.e0.local,
            "verdict": c.verdict,
            "agrees": agree,
        }));
    }
    let _ = writeln!(text, "disagreements: {}", disagreements.len());
    let json = json!({
        "n": n,
        "rows": rows,
        "disagreements": disagreements,
    });
    let mut report = Report::ok(text, json);
    if !disagreements.is_empty() {
        report.broken = Some(format!("inconsistent certificates: {}", disagreements.join(" ")));
    }
    Ok(report)
}
