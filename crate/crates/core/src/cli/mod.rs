//! Batch command-line surface: JSON specs in, JSONL reports out.
//!
//! Every report starts with a header line (command, version, SHA-256 of the
//! spec file), then one row per input item in input order, then a summary.
//! Rows are computed in parallel but written in order, and flushed as soon
//! as each chunk is done.

mod commands;
mod input;

pub use commands::{Row, RowStatus};

use std::fs::File;
use std::io::{self, LineWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "padic-cuspidal",
    version,
    about = "Certificates for cuspidal weight modules and their p-adic completions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cuspidality, degree and Weyl condition for each module spec.
    Cuspidality(CommonArgs),
    /// Hypothesis precheck, operator oracle and divergence certificate per (mu, a, b).
    Certify(CommonArgs),
    /// Bruhat, Iwahori and Cartan decompositions of 2x2 matrices.
    Decompose(CommonArgs),
    /// Evaluate x^mu by the binomial series and by exp(mu log x).
    CharEval(CommonArgs),
    /// Injectivity of conjugated e and f on a weight window.
    H0Check(CommonArgs),
    /// Solve s d' = d s^k in U(sl_2).
    OreWitness(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// JSON spec file.
    #[arg(long)]
    pub spec: PathBuf,
    /// Report file (JSONL); standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Number of coefficients scanned on each side by `certify`.
    #[arg(long, default_value_t = 500)]
    pub horizon: u64,
    /// Digit cap of the working precision.
    #[arg(long, default_value_t = 512)]
    pub precision: u32,
    /// Worker threads (rows only; each row is single-threaded).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Level k of Z/p^k for `decompose`.
    #[arg(long, default_value_t = 1)]
    pub level: u32,
    /// Random variants per `certify` item (seeded by PADIC_SEED).
    #[arg(long, default_value_t = 0)]
    pub grid: usize,
    /// Add wall-clock timing to the summary (breaks byte-identical reports).
    #[arg(long)]
    pub timing: bool,
}

/// Validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: &'static str,
    pub spec: PathBuf,
    pub out: Option<PathBuf>,
    pub horizon: u64,
    pub precision: u32,
    pub jobs: usize,
    pub level: u32,
    pub grid: usize,
    pub seed: u64,
    pub timing: bool,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// `PADIC_SEED`, default 0.
pub fn seed_from_env() -> Result<u64, ConfigError> {
    match std::env::var("PADIC_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| ConfigError(format!("PADIC_SEED must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

impl RunConfig {
    pub fn from_args(command: &'static str, a: &CommonArgs) -> Result<Self, ConfigError> {
        if !a.spec.is_file() {
            return Err(ConfigError(format!(
                "spec file {} does not exist",
                a.spec.display()
            )));
        }
        if a.horizon < 50 {
            return Err(ConfigError(format!(
                "--horizon must be >= 50, got {}",
                a.horizon
            )));
        }
        if a.precision < 16 {
            return Err(ConfigError(format!(
                "--precision must be >= 16, got {}",
                a.precision
            )));
        }
        if a.level == 0 {
            return Err(ConfigError("--level must be >= 1".into()));
        }
        let jobs = a.jobs.unwrap_or(1);
        if jobs == 0 {
            return Err(ConfigError("--jobs must be >= 1".into()));
        }
        Ok(RunConfig {
            command,
            spec: a.spec.clone(),
            out: a.out.clone(),
            horizon: a.horizon,
            precision: a.precision,
            jobs,
            level: a.level,
            grid: a.grid,
            seed: seed_from_env()?,
            timing: a.timing,
        })
    }
}

fn parse_items<T: DeserializeOwned>(items: &[Value]) -> Result<Vec<T>, ConfigError> {
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            serde_json::from_value(v.clone()).map_err(|e| ConfigError(format!("item {i}: {e}")))
        })
        .collect()
}

/// A unit of work: the input index, an optional variant number, and the job.
type Job<'a> = (
    usize,
    Option<usize>,
    Box<dyn Fn() -> Row + Send + Sync + 'a>,
);

/// Parse the spec and produce the rows of the report, in input order.
fn jobs<'a>(cfg: &'a RunConfig, items: &[Value]) -> Result<Vec<Job<'a>>, ConfigError> {
    let mut out: Vec<Job<'a>> = Vec::new();
    match cfg.command {
        "cuspidality" => {
            for (i, it) in parse_items::<input::ModuleSpecIn>(items)?
                .into_iter()
                .enumerate()
            {
                out.push((i, None, Box::new(move || commands::cuspidality(&it, cfg))));
            }
        }
        "certify" => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for (i, it) in parse_items::<input::CertifyIn>(items)?
                .into_iter()
                .enumerate()
            {
                let pt = commands::certify_point(&it, cfg)
                    .map_err(|e| ConfigError(format!("item {i}: {e}")))?;
                for v in 0..cfg.grid {
                    let var = commands::random_variant(&pt, &mut rng);
                    out.push((i, Some(v), Box::new(move || commands::certify(&var, cfg))));
                }
                out.push((i, None, Box::new(move || commands::certify(&pt, cfg))));
            }
        }
        "decompose" => {
            for (i, it) in parse_items::<input::DecomposeIn>(items)?
                .into_iter()
                .enumerate()
            {
                // Parse problems are configuration errors, caught before any output.
                let row = commands::decompose(&it, cfg)
                    .map_err(|e| ConfigError(format!("item {i}: {e}")))?;
                out.push((i, None, Box::new(move || row.clone())));
            }
        }
        "char-eval" => {
            for (i, it) in parse_items::<input::CharEvalIn>(items)?
                .into_iter()
                .enumerate()
            {
                out.push((i, None, Box::new(move || commands::char_eval(&it, cfg))));
            }
        }
        "h0-check" => {
            for (i, it) in parse_items::<input::ModuleSpecIn>(items)?
                .into_iter()
                .enumerate()
            {
                out.push((i, None, Box::new(move || commands::h0_check(&it, cfg))));
            }
        }
        "ore-witness" => {
            for (i, it) in parse_items::<input::OreIn>(items)?.into_iter().enumerate() {
                out.push((i, None, Box::new(move || commands::ore(&it))));
            }
        }
        other => return Err(ConfigError(format!("unknown command {other}"))),
    }
    Ok(out)
}

fn read_spec(cfg: &RunConfig) -> Result<(Vec<Value>, String), ConfigError> {
    let bytes = std::fs::read(&cfg.spec)
        .map_err(|e| ConfigError(format!("{}: {e}", cfg.spec.display())))?;
    let hash = hex::encode(Sha256::digest(&bytes));
    let doc: Value = serde_json::from_slice(&bytes).map_err(|e| {
        ConfigError(format!(
            "{}:{}:{}: {e}",
            cfg.spec.display(),
            e.line(),
            e.column()
        ))
    })?;
    Ok((input::items(doc), hash))
}

/// Run one command, writing the report to `sink`; returns the exit code.
pub fn run_to(cfg: &RunConfig, sink: &mut dyn Write) -> Result<i32, ConfigError> {
    let start = Instant::now();
    let (items, hash) = read_spec(cfg)?;
    let jobs = jobs(cfg, &items)?;
    let io = |e: io::Error| ConfigError(format!("writing report: {e}"));
    let header = json!({
        "type": "header",
        "command": cfg.command,
        "spec": cfg.spec.display().to_string(),
        "horizon": cfg.horizon,
        "precision": cfg.precision,
        "level": cfg.level,
        "grid": cfg.grid,
        "seed": cfg.seed,
        "version": env!("CARGO_PKG_VERSION"),
        "input_sha256": hash,
    });
    writeln!(sink, "{header}").map_err(io)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ConfigError(format!("thread pool: {e}")))?;
    let mut counts = std::collections::BTreeMap::<&str, usize>::new();
    let mut verdicts = std::collections::BTreeMap::<String, usize>::new();
    let mut worst = RowStatus::Ok;
    for chunk in jobs.chunks(cfg.jobs.max(1) * 4) {
        let rows: Vec<Row> = pool.install(|| chunk.par_iter().map(|(_, _, job)| job()).collect());
        for ((index, variant, _), row) in chunk.iter().zip(rows) {
            *counts.entry(row.status.as_str()).or_default() += 1;
            if let Some(v) = row.body.get("verdict").and_then(|v| v.as_str()) {
                *verdicts.entry(v.to_string()).or_default() += 1;
            }
            worst = worst.max(row.status);
            let mut line = json!({ "type": "row", "index": index, "status": row.status.as_str() });
            if let Some(v) = variant {
                line["variant"] = json!(v);
            }
            if let (Value::Object(dst), Value::Object(src)) = (&mut line, row.body) {
                dst.extend(src);
            }
            writeln!(sink, "{line}").map_err(io)?;
        }
        sink.flush().map_err(io)?;
    }
    let code = match worst {
        RowStatus::Violation => EXIT_INVARIANT,
        RowStatus::Error if cfg.command == "cuspidality" => EXIT_CONFIG,
        _ => EXIT_OK,
    };
    let mut summary =
        json!({ "type": "summary", "rows": jobs.len(), "status": counts, "exit_code": code });
    if !verdicts.is_empty() {
        summary["verdicts"] = json!(verdicts);
    }
    if cfg.timing {
        summary["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    writeln!(sink, "{summary}").map_err(io)?;
    sink.flush().map_err(io)?;
    Ok(code)
}

/// Run with the destination taken from `cfg.out`.
pub fn run(cfg: &RunConfig) -> Result<i32, ConfigError> {
    match &cfg.out {
        Some(path) => {
            let f =
                File::create(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
            run_to(cfg, &mut LineWriter::new(f))
        }
        None => run_to(cfg, &mut LineWriter::new(io::stdout().lock())),
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main_from_env() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let (name, args) = match &cli.command {
        Command::Cuspidality(a) => ("cuspidality", a),
        Command::Certify(a) => ("certify", a),
        Command::Decompose(a) => ("decompose", a),
        Command::CharEval(a) => ("char-eval", a),
        Command::H0Check(a) => ("h0-check", a),
        Command::OreWitness(a) => ("ore-witness", a),
    };
    match RunConfig::from_args(name, args).and_then(|cfg| run(&cfg)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CONFIG
        }
    }
}
