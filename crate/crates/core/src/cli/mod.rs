//! The `zecap` command line.
//!
//! Each invocation prints exactly one JSON record on a single line:
//! `{command, inputs, outputs, tool_version, elapsed_ms}`. `inputs` echoes
//! the parsed flags and deserializes back to the same [`Command`].
//!
//! Exit codes: 0 ok, 1 verification failed, 2 input error, 3 numerical
//! non-convergence, 4 resource cap.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::capacity::{solve_characteristic, CharacteristicEquation};
use crate::construct::{verify_code, Family};
use crate::error::Error;
use crate::model::{parse_channel_spec, parse_digraph_spec, ChannelGraph, Code, Digraph};
use crate::search::{exact_m, omega_s, render_walk, witness_code, SearchConfig};

pub use report::{build_report, write_report_csv, ReportRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "zecap", version, about = "Zero-error codes for binary channels with memory")]
pub struct Cli {
    /// Human-readable output instead of a JSON record.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Solve a characteristic equation sum x^l = 1.
    Capacity(CapacityArgs),
    /// Exact maximum code M(G, n).
    Exact(ExactArgs),
    /// Write a named code family to a word file.
    Construct(ConstructArgs),
    /// Check a word file for pairwise distinguishability.
    Verify(VerifyArgs),
    /// Largest symmetric clique of a digraph power within a walk type.
    Sperner(SpernerArgs),
    /// Run every theorem check and write a CSV.
    Report(ReportArgs),
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CapacityArgs {
    /// Ministring lengths, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub lengths: Vec<u32>,
    /// Infinite tail of lengths start, start+step, ...
    #[arg(long, value_parser = parse_tail)]
    pub tail: Option<(u32, u32)>,
    #[arg(long, default_value_t = crate::capacity::DEFAULT_TOL)]
    pub tol: f64,
    /// Zero the timing fields so repeated runs print identical records.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactArgs {
    /// Edge list like "00-01;00-10" or one of F, G, L, Q.
    #[arg(long, allow_hyphen_values = true)]
    pub channel: String,
    #[arg(long)]
    pub n: usize,
    /// Single worker, lexicographically smallest witness, zero timings.
    #[arg(long)]
    pub deterministic: bool,
    /// Largest accepted block length.
    #[arg(long, default_value_t = 14)]
    pub length_cap: usize,
    /// Write the witness code here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructArgs {
    /// ministring-tribonacci, oddrun, oddrun-any, no111, no-isolated-ones or fibonacci.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    /// Word file to write; without it the words go into the record.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Zero the timing fields so repeated runs print identical records.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyArgs {
    /// Word file to check.
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub channel: String,
    /// Zero the timing fields so repeated runs print identical records.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpernerArgs {
    /// Channel digraph: arcs like "0>1" or an alias (C5sym, K5, ...).
    #[arg(long)]
    pub digraph: String,
    /// Walk constraint: arcs or an alias.
    #[arg(long = "type")]
    pub walk_type: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub deterministic: bool,
    #[arg(long, default_value_t = 1 << 20)]
    pub vertex_cap: usize,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportArgs {
    /// CSV destination.
    #[arg(long)]
    pub out: PathBuf,
    /// Largest block length for the exact searches.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long)]
    pub deterministic: bool,
}

fn parse_tail(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected start,step")?;
    let a = a.trim().parse().map_err(|_| format!("bad tail start {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad tail step {b:?}"))?;
    Ok((a, b))
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Capacity(_) => "capacity",
            Command::Exact(_) => "exact",
            Command::Construct(_) => "construct",
            Command::Verify(_) => "verify",
            Command::Sperner(_) => "sperner",
            Command::Report(_) => "report",
        }
    }

    /// Flags that reproduce this command when parsed again.
    pub fn to_args(&self) -> Vec<String> {
        let mut a = vec![self.name().to_string()];
        match self {
            Command::Capacity(c) => {
                flag(&mut a, "lengths", join(&c.lengths));
                if let Some((s, t)) = c.tail {
                    flag(&mut a, "tail", format!("{s},{t}"));
                }
                flag(&mut a, "tol", format!("{:e}", c.tol));
                if c.deterministic {
                    a.push("--deterministic".into());
                }
            }
            Command::Exact(c) => {
                flag(&mut a, "channel", c.channel.clone());
                flag(&mut a, "n", c.n.to_string());
                flag(&mut a, "length-cap", c.length_cap.to_string());
                if let Some(out) = &c.out {
                    flag(&mut a, "out", out.display().to_string());
                }
                if c.deterministic {
                    a.push("--deterministic".into());
                }
            }
            Command::Construct(c) => {
                flag(&mut a, "family", c.family.clone());
                flag(&mut a, "n", c.n.to_string());
                if let Some(out) = &c.out {
                    flag(&mut a, "out", out.display().to_string());
                }
                if c.deterministic {
                    a.push("--deterministic".into());
                }
            }
            Command::Verify(c) => {
                flag(&mut a, "code", c.code.display().to_string());
                flag(&mut a, "channel", c.channel.clone());
                if c.deterministic {
                    a.push("--deterministic".into());
                }
            }
            Command::Sperner(c) => {
                flag(&mut a, "digraph", c.digraph.clone());
                flag(&mut a, "type", c.walk_type.clone());
                flag(&mut a, "k", c.k.to_string());
                flag(&mut a, "n", c.n.to_string());
                flag(&mut a, "vertex-cap", c.vertex_cap.to_string());
                if c.deterministic {
                    a.push("--deterministic".into());
                }
            }
            Command::Report(c) => {
                flag(&mut a, "out", c.out.display().to_string());
                flag(&mut a, "max-n", c.max_n.to_string());
                if c.deterministic {
                    a.push("--deterministic".into());
                }
            }
        }
        a
    }

    fn deterministic(&self) -> bool {
        match self {
            Command::Capacity(c) => c.deterministic,
            Command::Exact(c) => c.deterministic,
            Command::Construct(c) => c.deterministic,
            Command::Verify(c) => c.deterministic,
            Command::Sperner(c) => c.deterministic,
            Command::Report(c) => c.deterministic,
        }
    }
}

fn flag(args: &mut Vec<String>, name: &str, value: String) {
    args.push(format!("--{name}"));
    args.push(value);
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The single output line of an invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub inputs: Command,
    pub outputs: Value,
    pub tool_version: String,
    pub elapsed_ms: u64,
}

/// Rounds to 10 significant digits.
pub fn round_sig10(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.9e}").parse().expect("formatted float parses")
}

/// Channel flag: an alias (`F`, `G`, `L`, `Q`) or an edge list.
pub fn resolve_channel(text: &str) -> crate::Result<ChannelGraph> {
    match ChannelGraph::alias(text) {
        Some(g) => Ok(g),
        None => parse_channel_spec(text),
    }
}

/// Digraph flag: an alias or an arc list on `k` vertices.
pub fn resolve_digraph(text: &str, k: usize) -> crate::Result<Digraph> {
    match Digraph::alias(text) {
        Some(d) if d.k() == k => Ok(d),
        Some(d) => Err(Error::InvalidArgument(format!(
            "{text} has {} vertices, --k is {k}",
            d.k()
        ))),
        None => parse_digraph_spec(text, k),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoConvergence { .. } => EXIT_NO_CONVERGENCE,
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn search_config(deterministic: bool) -> crate::Result<SearchConfig> {
    let mut cfg = SearchConfig::from_env()?;
    if deterministic {
        cfg.threads = 1;
    }
    Ok(cfg)
}

/// Runs one command; returns the record payload and exit code.
pub fn execute(command: &Command) -> crate::Result<(Value, i32)> {
    let timing = |ms: u128| if command.deterministic() { 0 } else { ms as u64 };
    match command {
        Command::Capacity(c) => {
            let eq = CharacteristicEquation::new(c.lengths.clone(), c.tail)?;
            let v = solve_characteristic(&eq, c.tol)?;
            Ok((
                json!({
                    "root": v.root,
                    "rate_bits": round_sig10(v.rate_bits),
                    "residual": v.residual,
                    "iterations": v.iterations,
                }),
                EXIT_OK,
            ))
        }
        Command::Exact(c) => {
            let g = resolve_channel(&c.channel)?;
            let mut cfg = search_config(c.deterministic)?;
            cfg.length_cap = c.length_cap;
            cfg.vertex_cap = cfg.vertex_cap.max(1 << c.length_cap.min(40));
            let r = exact_m(&g, c.n, &cfg)?;
            let mut record = r.to_record("exact_M", c.n, |w| w.to_string());
            record.elapsed_ms = timing(r.elapsed.as_millis());
            if let Some(path) = &c.out {
                witness_code(&r, c.n, &format!("exact_M {} n={}", g, c.n)).write_word_file(path)?;
            }
            let mut out = serde_json::to_value(&record).expect("serializable");
            out["channel"] = json!(g.to_spec());
            out["rate_bits"] = json!(round_sig10((r.size as f64).log2() / c.n as f64));
            out["witness_path"] = json!(c.out.as_ref().map(|p| p.display().to_string()));
            Ok((out, EXIT_OK))
        }
        Command::Construct(c) => {
            let family: Family = c.family.parse()?;
            let code = family.generate(c.n)?;
            let mut out = json!({ "family": family.name(), "n": c.n, "count": code.len() });
            match &c.out {
                Some(path) => {
                    code.write_word_file(path)?;
                    out["path"] = json!(path.display().to_string());
                }
                None => out["words"] = json!(code.words()),
            }
            Ok((out, EXIT_OK))
        }
        Command::Verify(c) => {
            let g = resolve_channel(&c.channel)?;
            let code = Code::read_word_file(&c.code)?;
            let report = verify_code(&code, &g);
            let exit = if report.pass { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let mut out = serde_json::to_value(&report).expect("serializable");
            out["n"] = json!(code.n());
            out["words"] = json!(code.len());
            Ok((out, exit))
        }
        Command::Sperner(c) => {
            let d = resolve_digraph(&c.digraph, c.k)?;
            let p = resolve_digraph(&c.walk_type, c.k)?;
            let mut cfg = search_config(c.deterministic)?;
            cfg.vertex_cap = c.vertex_cap;
            let r = omega_s(&d, &p, c.n, &cfg)?;
            let mut record = r.to_record("omega_s", c.n, render_walk);
            record.elapsed_ms = timing(r.elapsed.as_millis());
            let mut out = serde_json::to_value(&record).expect("serializable");
            out["rate_bits"] = json!(round_sig10((r.size as f64).log2() / c.n as f64));
            Ok((out, EXIT_OK))
        }
        Command::Report(c) => {
            let cfg = search_config(c.deterministic)?;
            let rows = build_report(c.max_n, &cfg)?;
            write_report_csv(&rows, &c.out)?;
            let failed: Vec<String> = rows
                .iter()
                .filter(|r| !r.holds())
                .map(|r| format!("{} n={}", r.theorem, r.n))
                .collect();
            let exit = if failed.is_empty() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok((
                json!({
                    "path": c.out.display().to_string(),
                    "rows": rows.len(),
                    "bound_violations": failed,
                }),
                exit,
            ))
        }
    }
}

fn render_pretty(record: &RunRecord) -> String {
    let mut s = format!("{} (zecap {})\n", record.command, record.tool_version);
    if let Value::Object(map) = &record.outputs {
        for (k, v) in map {
            let text = match v {
                Value::String(t) => t.clone(),
                Value::Array(items) if items.len() > 16 => format!("[{} items]", items.len()),
                other => other.to_string(),
            };
            s.push_str(&format!("  {k:<16} {text}\n"));
        }
    }
    s
}

/// Parses `args` (program name first), runs the command and writes the
/// record to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                eprint!("{text}");
            }
            return code;
        }
    };
    let start = Instant::now();
    let (outputs, code) = match execute(&cli.command) {
        Ok(ok) => ok,
        Err(e) => {
            let code = exit_code(&e);
            (json!({ "error": e.to_string(), "exit_code": code }), code)
        }
    };
    let record = RunRecord {
        command: cli.command.name().to_string(),
        inputs: cli.command.clone(),
        outputs,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        elapsed_ms: if cli.command.deterministic() {
            0
        } else {
            start.elapsed().as_millis() as u64
        },
    };
    let text = if cli.pretty {
        render_pretty(&record)
    } else {
        let mut line = serde_json::to_string(&record).expect("serializable");
        line.push('\n');
        line
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_INPUT;
    }
    code
}
