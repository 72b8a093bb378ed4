//! The commands behind the `gain-inertia` binary.
//!
//! [`run`] parses arguments and dispatches; each command writes JSON or
//! graph text to `out`, diagnostics to `err`, and returns its exit code.

mod analyze;
mod enumerate;
mod fuzz;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

pub use analyze::{analyze, AnalysisReport, BoundsSummary, ComponentKind, ComponentSummary, CycleEntry, KindVerdict};
pub use enumerate::{enumerate, EnumerationSummary, KindCounts, Mismatch, OrderSummary};
pub use fuzz::{fuzz, fuzz_checks, fuzz_graph, FuzzFailure, FuzzSummary, VerdictCounts};

use crate::error::GenerateError;
use crate::format::{parse, to_text};
use crate::generators::{build_extremal, parse_gain_set, AssignmentPolicy, FamilySpec, GainMode};
use crate::theorems::OptimalityKind;

pub const EXIT_OK: i32 = 0;
/// A theorem verdict failed (`analyze --strict`, `fuzz`, `enumerate`).
pub const EXIT_VERDICT: i32 = 1;
/// Bad arguments, unparsable input, or an enumeration bound exceeded.
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
/// The extremal generator ran out of retries.
pub const EXIT_RETRIES: i32 = 4;

/// Worker count override for the parallel commands.
pub const THREADS_ENV: &str = "GAIN_INERTIA_THREADS";

#[derive(Debug, Parser)]
#[command(name = "gain-inertia", version, about = "Inertia, matching and cycle structure of complex unit gain graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a `gaingraph v1` file and print a JSON report.
    Analyze {
        path: PathBuf,
        /// Exit 1 if any theorem verdict fails.
        #[arg(long)]
        strict: bool,
    },
    /// Check the bounds and related invariants on random graphs.
    Fuzz {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value = "fourth_roots")]
        mode: GainMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare both sides of the optimality characterizations on every
    /// connected labeled graph with up to `n-max` vertices.
    Enumerate {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// `ones`, `signed`, `fourth_roots`, or a list such as `{+1,-1,+i}`.
        #[arg(long, default_value = "signed", value_parser = parse_gain_set_arg)]
        gain_set: GainSet,
        /// `plower`, `pupper`, `nlower`, `nupper` or `all`; repeatable.
        #[arg(long = "kind", default_value = "all")]
        kinds: Vec<String>,
        /// Assignments per underlying graph: a count, `all`, or `auto`.
        #[arg(long, default_value = "auto", value_parser = parse_policy)]
        sample: AssignmentPolicy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a graph attaining one of the bounds and write it as `gaingraph v1`.
    Generate {
        #[arg(long)]
        kind: OptimalityKind,
        /// Comma-separated cycle lengths.
        #[arg(long, value_delimiter = ',')]
        cycles: Vec<usize>,
        /// Comma-separated tree sizes.
        #[arg(long, value_delimiter = ',')]
        trees: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "fourth_roots")]
        mode: GainMode,
        /// Randomly relabel vertices.
        #[arg(long)]
        shuffle: bool,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Debug)]
pub struct GainSet(pub Vec<crate::gain::Gain>);

fn parse_gain_set_arg(s: &str) -> Result<GainSet, String> {
    parse_gain_set(s).map(GainSet)
}

fn parse_policy(s: &str) -> Result<AssignmentPolicy, String> {
    match s {
        "auto" => Ok(AssignmentPolicy::Auto),
        "all" => Ok(AssignmentPolicy::All),
        k => k.parse().map(AssignmentPolicy::Sample).map_err(|_| format!("expected a count, `all` or `auto`, got {k:?}")),
    }
}

fn parse_kinds(kinds: &[String]) -> Result<Vec<OptimalityKind>, String> {
    let mut out = Vec::new();
    for k in kinds.iter().flat_map(|k| k.split(',')) {
        if k.eq_ignore_ascii_case("all") {
            out.extend(OptimalityKind::ALL);
        } else {
            out.push(k.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// Runs with `GAIN_INERTIA_THREADS` applied to a dedicated pool.
fn with_threads<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok());
    match threads {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match cli.command {
        Command::Analyze { path, strict } => cmd_analyze(&path, strict, out, err),
        Command::Fuzz { trials, n_max, mode, seed } => cmd_fuzz(trials as usize, n_max, mode, seed, out, err),
        Command::Enumerate { n_max, gain_set, kinds, sample, seed } => match parse_kinds(&kinds) {
            Ok(kinds) => cmd_enumerate(n_max, &gain_set.0, &kinds, sample, seed, out, err),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Command::Generate { kind, cycles, trees, seed, mode, shuffle, out: path } => {
            let spec = FamilySpec { kind, cycle_lengths: cycles, tree_sizes: trees, seed, gain_mode: mode, shuffle_labels: shuffle };
            cmd_generate(&spec, path.as_deref(), out, err)
        }
    }
}

pub fn cmd_analyze(path: &Path, strict: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_IO;
        }
    };
    let g = match parse(&text) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let report = analyze(&g);
    if emit_json(out, &report).is_err() {
        return EXIT_IO;
    }
    let failures = report.failures();
    for f in &failures {
        let _ = writeln!(err, "verdict failed: {}", f.subject);
    }
    if strict && !failures.is_empty() {
        EXIT_VERDICT
    } else {
        EXIT_OK
    }
}

pub fn cmd_fuzz(trials: usize, n_max: usize, mode: GainMode, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if trials == 0 {
        let _ = writeln!(err, "error: --trials must be at least 1");
        return EXIT_USAGE;
    }
    let summary = with_threads(|| fuzz(trials, n_max, mode, seed));
    if emit_json(out, &summary).is_err() {
        return EXIT_IO;
    }
    for f in &summary.failures {
        let _ = writeln!(err, "violation in trial {}: {}\n{}", f.trial, f.report.subject, f.graph);
    }
    if summary.violations > 0 {
        EXIT_VERDICT
    } else {
        EXIT_OK
    }
}

pub fn cmd_enumerate(
    n_max: usize,
    gain_set: &[crate::gain::Gain],
    kinds: &[OptimalityKind],
    policy: AssignmentPolicy,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let summary = match with_threads(|| enumerate(n_max, gain_set, kinds, policy, seed)) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if emit_json(out, &summary).is_err() {
        return EXIT_IO;
    }
    for m in &summary.mismatch_examples {
        let _ = writeln!(err, "mismatch for {}:\n{}", m.kind, m.graph);
    }
    if summary.mismatches > 0 {
        EXIT_VERDICT
    } else {
        EXIT_OK
    }
}

pub fn cmd_generate(spec: &FamilySpec, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match build_extremal(spec) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                GenerateError::RetriesExhausted(_) => EXIT_RETRIES,
                _ => EXIT_USAGE,
            };
        }
    };
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let text = format!(
        "{}# kind={} cycles={} trees={} seed={} mode={}\n",
        to_text(&g),
        spec.kind,
        join(&spec.cycle_lengths),
        join(&spec.tree_sizes),
        spec.seed,
        spec.gain_mode
    );
    let written = match path {
        Some(p) => std::fs::write(p, &text),
        None => out.write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_IO
        }
    }
}
