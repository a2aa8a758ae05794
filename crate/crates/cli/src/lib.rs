//! The `solvlie` command-line tool.

pub mod commands;
pub mod document;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use solvlie::theorems::{parse_theorem_list, TheoremId};
use solvlie::{with_field, Config, FieldSpec};

use commands::{CliError, CliResult, FuzzProfile, Output};
use document::{AlgebraDocument, RepresentationDocument};

#[derive(Debug, Parser)]
#[command(name = "solvlie", version, about = "Exact structure theory of solvable Lie algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Write the JSON report to this path; `-` writes it to stdout instead of the text summary.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Field to work over: `q` or `fp:<p>`. Defaults to the field named by the input.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldSpec>,
    /// Seed for pseudo-random probes.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest number of candidate subspaces an enumeration may visit.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Rounds of the named-ideal closure.
    #[arg(long, global = true)]
    pub closure_depth: Option<usize>,
    /// Number of pseudo-random probes after the fixed ones.
    #[arg(long, global = true)]
    pub probe_bound: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an algebra file and check antisymmetry and the Jacobi identity.
    Validate { file: PathBuf },
    /// Series, center, nilradical, Cartan subalgebra, abelian socle and φ-freeness.
    Analyze { file: PathBuf },
    /// Membership in S_n, S_inf, qA, the A-algebras and the complemented algebras.
    Classify { file: PathBuf },
    /// An abelian tower, or the reason none exists.
    Decompose { file: PathBuf },
    /// Check theorem statements on one algebra.
    Check {
        file: PathBuf,
        /// Comma-separated ids such as T2.4,L3.1, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Build A ⋊ B from an algebra B and an irreducible B-module A.
    Construct {
        #[arg(long = "b", value_name = "FILE")]
        b: PathBuf,
        #[arg(long = "rep", value_name = "FILE")]
        rep: PathBuf,
    },
    /// Maximal subalgebras and the Frattini subalgebra over a prime field.
    Frattini { file: PathBuf },
    /// The built-in worked examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Check theorems on randomly generated solvable algebras.
    Fuzz {
        /// JSON file with `field`, `max_dim`, `seed` and optional `recipe`, `scramble`.
        #[arg(long)]
        profile: PathBuf,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "all")]
        theorems: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExamplesAction {
    /// Re-derive every claim about the worked examples.
    Verify,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let t = s.trim().to_ascii_lowercase();
    if t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p: u64 = t
        .strip_prefix("fp:")
        .and_then(|p| p.parse().ok())
        .ok_or_else(|| format!("expected `q` or `fp:<p>`, found `{s}`"))?;
    if !solvlie::field::is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    Ok(FieldSpec::Prime(p))
}

impl GlobalArgs {
    pub fn config(&self) -> Config {
        let mut cfg = Config::default();
        if let Some(b) = self.budget {
            cfg.budget = u128::from(b);
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
            cfg.module.seed = s;
        }
        if let Some(d) = self.closure_depth {
            cfg.closure_depth = d;
        }
        if let Some(p) = self.probe_bound {
            cfg.probe_bound = p;
            cfg.module.probe_bound = p;
        }
        cfg
    }
}

fn config_json(cfg: &Config) -> Value {
    json!({
        "budget": u64::try_from(cfg.budget).unwrap_or(u64::MAX),
        "seed": cfg.seed,
        "closure_depth": cfg.closure_depth,
        "probe_bound": cfg.probe_bound,
        "element_scan_limit": u64::try_from(cfg.element_scan_limit).unwrap_or(u64::MAX),
        "module": {
            "line_budget": cfg.module.line_budget,
            "kernel_line_limit": cfg.module.kernel_line_limit,
            "probe_bound": cfg.module.probe_bound,
            "seed": cfg.module.seed,
        },
    })
}

fn field_name(spec: FieldSpec) -> String {
    match spec {
        FieldSpec::Rationals => "Q".into(),
        FieldSpec::Prime(p) => format!("F{p}"),
    }
}

fn theorem_ids(s: &str) -> CliResult<Vec<TheoremId>> {
    parse_theorem_list(s).map_err(|e| CliError::Input(vec![format!("--theorems: {e}")]))
}

macro_rules! dispatch {
    ($spec:expr, $t:ident => $body:expr) => {
        with_field!($spec, $t => $body).map_err(CliError::from)?
    };
}

fn execute(cmd: &Command, g: &GlobalArgs, cfg: &Config, inputs: &mut Vec<u8>) -> CliResult<(Option<FieldSpec>, Output)> {
    let load = |p: &Path, inputs: &mut Vec<u8>| -> CliResult<(AlgebraDocument, FieldSpec)> {
        let doc = commands::load_algebra(p, inputs)?;
        let spec = g.field.unwrap_or(doc.field.0);
        Ok((doc, spec))
    };
    match cmd {
        Command::Validate { file } => {
            let (doc, spec) = load(file, inputs)?;
            Ok((Some(spec), dispatch!(spec, T => commands::validate::<T>(&doc))?))
        }
        Command::Analyze { file } => {
            let (doc, spec) = load(file, inputs)?;
            Ok((Some(spec), dispatch!(spec, T => commands::analyze::<T>(&doc, cfg))?))
        }
        Command::Classify { file } => {
            let (doc, spec) = load(file, inputs)?;
            Ok((Some(spec), dispatch!(spec, T => commands::classify::<T>(&doc, cfg))?))
        }
        Command::Decompose { file } => {
            let (doc, spec) = load(file, inputs)?;
            Ok((Some(spec), dispatch!(spec, T => commands::decompose::<T>(&doc))?))
        }
        Command::Check { file, theorems } => {
            let ids = theorem_ids(theorems)?;
            let (doc, spec) = load(file, inputs)?;
            Ok((Some(spec), dispatch!(spec, T => commands::check::<T>(&doc, &ids, cfg))?))
        }
        Command::Construct { b, rep } => {
            let (doc, spec) = load(b, inputs)?;
            let text = commands::read_text(rep, inputs)?;
            let rep = RepresentationDocument::parse(&text).map_err(|e| CliError::Input(vec![e]))?;
            if g.field.is_none() && rep.field != doc.field {
                return Err(CliError::Input(vec![format!(
                    "algebra is over {} but the representation is over {}",
                    field_name(doc.field.0),
                    field_name(rep.field.0)
                )]));
            }
            Ok((Some(spec), dispatch!(spec, T => commands::construct::<T>(&doc, &rep, cfg))?))
        }
        Command::Frattini { file } => {
            let (doc, spec) = load(file, inputs)?;
            Ok((Some(spec), dispatch!(spec, T => commands::frattini::<T>(&doc, cfg))?))
        }
        Command::Examples {
            action: ExamplesAction::Verify,
        } => Ok((None, commands::examples_verify(cfg)?)),
        Command::Fuzz {
            profile,
            count,
            theorems,
        } => {
            let ids = theorem_ids(theorems)?;
            let text = commands::read_text(profile, inputs)?;
            let p = FuzzProfile::parse(&text)?;
            let spec = g.field.unwrap_or(p.field.0);
            Ok((Some(spec), dispatch!(spec, T => commands::fuzz::<T>(&p, *count, &ids, cfg))?))
        }
    }
}

/// The invocation as recorded in reports: every argument except `--json` and its value.
fn recorded_command(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args.iter().skip(1) {
        if skip {
            skip = false;
        } else if a == "--json" {
            skip = true;
        } else if !a.starts_with("--json=") {
            out.push(a.clone());
        }
    }
    out
}

fn status_code(failed: bool) -> (&'static str, i32) {
    if failed {
        ("failed", 1)
    } else {
        ("ok", 0)
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let cfg = cli.global.config();
    let mut inputs = Vec::new();
    let outcome = execute(&cli.command, &cli.global, &cfg, &mut inputs);
    let (field, status, code, results, text) = match outcome {
        Ok((field, out)) => {
            let (status, code) = status_code(out.failed);
            (field, status, code, out.results, out.text)
        }
        Err(e) => {
            let msgs = e.messages();
            for m in &msgs {
                eprintln!("error: {m}");
            }
            (cli.global.field, "error", e.exit_code(), json!({ "errors": msgs }), Vec::new())
        }
    };
    let doc = json!({
        "tool": "solvlie",
        "version": report::VERSION,
        "command": recorded_command(&args),
        "input_sha256": if inputs.is_empty() { Value::Null } else { json!(report::sha256_hex(&inputs)) },
        "field": field.map(field_name),
        "config": config_json(&cfg),
        "results": results,
        "status": status,
    });
    let to_stdout = cli.global.json.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        let mut out = std::io::stdout().lock();
        for line in &text {
            let _ = writeln!(out, "{line}");
        }
    }
    match cli.global.json.as_deref() {
        Some(_) if to_stdout => {
            let _ = std::io::stdout().write_all(report::render(&doc).as_bytes());
        }
        Some(p) => {
            if let Err(e) = fs::write(p, report::render(&doc)) {
                eprintln!("error: {}: {e}", p.display());
                return 2;
            }
        }
        None => {}
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_checks_exit_with_one() {
        assert_eq!(status_code(true), ("failed", 1));
        assert_eq!(status_code(false), ("ok", 0));
        assert_eq!(CliError::Failure("x".into()).exit_code(), 1);
        assert_eq!(CliError::from(solvlie::Error::NotSolvable).exit_code(), 2);
    }

    #[test]
    fn json_flag_is_not_recorded() {
        let args: Vec<String> = ["solvlie", "--json", "out.json", "validate", "a.json", "--json=x"]
            .map(String::from)
            .to_vec();
        assert_eq!(recorded_command(&args), ["validate", "a.json"]);
    }

    #[test]
    fn field_flag() {
        assert_eq!(parse_field("q"), Ok(FieldSpec::Rationals));
        assert_eq!(parse_field("fp:7"), Ok(FieldSpec::Prime(7)));
        assert!(parse_field("fp:9").is_err());
    }
}
