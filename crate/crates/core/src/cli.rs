//! Command-line workflows: `compare`, `sweep`, `validate` and `report`.
//!
//! Every workflow renders into a string first so output is byte-identical
//! between standard output and `--out`, and so tests can drive it in process.
//!
//! Exit codes: 0 when the run completes, 2 for usage or input errors, 1 for
//! everything else (including a failed `validate`).

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{self, ClaimReport};
use crate::format::{self, serialize_json_f64, serialize_json_f64_seq, serialize_json_opt_f64};
use crate::protocol::{self, ComparisonInstance, ComparisonTranscript, Mode};
use crate::validator::{self, BATTERY_MAX_ITERATIONS};

/// Largest reduced-vs-joint deviation `validate` accepts.
pub const DEVIATION_TOLERANCE: f64 = 1e-9;

/// Off-support probability mass `validate` accepts.
pub const PASSIVITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "qstrcmp", version, about = "Grover-based string comparison simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the comparison protocol and print its transcript.
    Compare(CompareArgs),
    /// Print the amplification trajectory for k = 0..=K.
    Sweep(SweepArgs),
    /// Check the reduced backend against the joint simulation.
    Validate(ValidateArgs),
    /// Audit the protocol's claims on one instance.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct StringArgs {
    /// Pattern string.
    #[arg(long, required_unless_present = "input")]
    pub a: Option<String>,
    /// Subject string.
    #[arg(long, required_unless_present = "input")]
    pub b: Option<String>,
    /// Pad symbol; also allows strings of different lengths.
    #[arg(long)]
    pub pad: Option<char>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub strings: StringArgs,
    /// Batch file: consecutive lines form (a, b) pairs.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub input: Option<PathBuf>,
    /// Grover iterations; defaults to floor(pi/4 * sqrt(N)).
    #[arg(long, short = 'k')]
    pub iterations: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Measurement seed (sample mode only).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub pad: Option<char>,
    /// Last iteration count K; at most 10 * sqrt(N).
    #[arg(long)]
    pub max_iterations: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    /// String length N of the instance battery (2 or 4).
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub strings: StringArgs,
    /// Batch file: consecutive lines form (a, b) pairs.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub input: Option<PathBuf>,
    #[arg(long, short = 'k')]
    pub iterations: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Protocol(#[from] crate::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serialize(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Protocol(e) if is_input_error(e) => 2,
            _ => 1,
        }
    }
}

fn is_input_error(e: &crate::Error) -> bool {
    use crate::Error::*;
    matches!(
        e,
        LengthMismatch { .. } | TooShort(_) | TooLong(_) | PadCollision(_) | JointTooLarge(_)
    )
}

/// Rendered output plus whether the workflow's own check succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, success: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Compare(args) => &args.output,
            Command::Sweep(args) => &args.output,
            Command::Validate(args) => &args.output,
            Command::Report(args) => &args.output,
        }
    }
}

/// Runs the parsed command. When `--out` is given the text is also written
/// there; printing to standard output is left to the caller.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let outcome = match &cli.command {
        Command::Compare(args) => cmd_compare(args)?,
        Command::Sweep(args) => cmd_sweep(args)?,
        Command::Validate(args) => cmd_validate(args)?,
        Command::Report(args) => cmd_report(args)?,
    };
    if let Some(path) = &cli.command.output().out {
        fs::write(path, &outcome.text)?;
    }
    Ok(outcome)
}

/// Raw `(a, b)` pair as typed by the user.
type Pair = (String, String);

fn collect_pairs(strings: &StringArgs, input: &Option<PathBuf>) -> Result<(Vec<Pair>, bool), CliError> {
    match input {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            let lines: Vec<&str> = text.lines().filter(|l| !l.is_empty()).collect();
            if lines.is_empty() || !lines.len().is_multiple_of(2) {
                return Err(CliError::Usage(format!(
                    "{}: expected an even, nonzero number of lines, got {}",
                    path.display(),
                    lines.len()
                )));
            }
            let pairs = lines
                .chunks_exact(2)
                .map(|c| (c[0].to_string(), c[1].to_string()))
                .collect();
            Ok((pairs, true))
        }
        None => match (&strings.a, &strings.b) {
            (Some(a), Some(b)) => Ok((vec![(a.clone(), b.clone())], false)),
            _ => Err(CliError::Usage("both --a and --b are required".into())),
        },
    }
}

fn instance(a: &str, b: &str, pad: Option<char>) -> Result<ComparisonInstance, CliError> {
    let inst = match pad {
        Some(p) => ComparisonInstance::with_pad(a, b, p)?,
        None => ComparisonInstance::new(a, b)?,
    };
    Ok(inst)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Serialize(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    let ser = |e: csv::Error| CliError::Serialize(e.to_string());
    w.write_record(header).map_err(ser)?;
    for r in rows {
        w.write_record(r).map_err(ser)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
}

/// Private-use and control pads are written as `U+XXXX`.
fn pad_string(p: Option<char>) -> Option<String> {
    p.map(|c| {
        if c.is_control() || ('\u{E000}'..='\u{F8FF}').contains(&c) {
            format!("U+{:04X}", c as u32)
        } else {
            c.to_string()
        }
    })
}

#[derive(Debug, Serialize)]
struct TranscriptJson {
    a: String,
    b: String,
    length: usize,
    register_qubits: u32,
    pad: Option<String>,
    iterations: usize,
    mode: &'static str,
    seed: Option<u64>,
    marked: Vec<usize>,
    marked_count: usize,
    ancilla_qubits: usize,
    #[serde(serialize_with = "serialize_json_f64_seq")]
    distribution: Vec<f64>,
    #[serde(serialize_with = "serialize_json_f64")]
    p_equal: f64,
    #[serde(serialize_with = "serialize_json_f64")]
    p_unequal: f64,
    measured: Option<usize>,
    verdict: String,
}

impl TranscriptJson {
    fn new(pair: &Pair, t: &ComparisonTranscript) -> Self {
        let (mode, seed) = match t.mode {
            Mode::Exact => ("exact", None),
            Mode::Sample { seed } => ("sample", Some(seed)),
        };
        Self {
            a: pair.0.clone(),
            b: pair.1.clone(),
            length: t.instance.len(),
            register_qubits: t.instance.config().qubits(),
            pad: pad_string(t.instance.pad()),
            iterations: t.iterations,
            mode,
            seed,
            marked: t.oracle.marked().members().to_vec(),
            marked_count: t.oracle.marked().len(),
            ancilla_qubits: t.ancilla_qubits,
            distribution: t.final_distribution.clone(),
            p_equal: t.p_equal,
            p_unequal: t.p_unequal,
            measured: t.measured,
            verdict: t.verdict.to_string(),
        }
    }
}

pub const COMPARE_CSV_HEADER: [&str; 12] = [
    "a",
    "b",
    "length",
    "iterations",
    "mode",
    "seed",
    "marked_count",
    "ancilla_qubits",
    "p_equal",
    "p_unequal",
    "measured",
    "verdict",
];

pub fn cmd_compare(args: &CompareArgs) -> Result<Outcome, CliError> {
    let (pairs, batch) = collect_pairs(&args.strings, &args.input)?;
    let mode = match args.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Sample => Mode::Sample { seed: args.seed },
    };
    let mut rows = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let inst = instance(&pair.0, &pair.1, args.strings.pad)?;
        let t = protocol::compare(&inst, args.iterations, mode);
        rows.push(TranscriptJson::new(pair, &t));
    }
    let text = match args.output.format {
        Format::Json if batch => to_json(&rows)?,
        Format::Json => to_json(&rows[0])?,
        Format::Csv => {
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.a.clone(),
                        r.b.clone(),
                        r.length.to_string(),
                        r.iterations.to_string(),
                        r.mode.to_string(),
                        r.seed.map(|s| s.to_string()).unwrap_or_default(),
                        r.marked_count.to_string(),
                        r.ancilla_qubits.to_string(),
                        format::csv(r.p_equal),
                        format::csv(r.p_unequal),
                        r.measured.map(|m| m.to_string()).unwrap_or_default(),
                        r.verdict.clone(),
                    ]
                })
                .collect();
            to_csv(&COMPARE_CSV_HEADER, &records)?
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub k: usize,
    #[serde(serialize_with = "serialize_json_f64")]
    pub p_marked: f64,
    #[serde(serialize_with = "serialize_json_f64")]
    pub p_outcome0: f64,
}

/// Simulated marked-set mass and outcome-0 probability for `k = 0..=max_k`.
pub fn sweep_rows(inst: &ComparisonInstance, max_k: usize) -> Vec<SweepRow> {
    let oracle = protocol::combine_sub_oracles(inst);
    let marked = oracle.marked();
    let mut state = protocol::prepare_combined_state(inst).first;
    let mut rows = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        if k > 0 {
            state.grover_iterate(marked, 1).expect("oracle and state share N");
        }
        let dist = state.measurement_distribution();
        rows.push(SweepRow {
            k,
            p_marked: marked.members().iter().map(|&x| dist[x]).sum(),
            p_outcome0: dist[0],
        });
    }
    rows
}

pub const SWEEP_CSV_HEADER: [&str; 3] = ["k", "p_marked", "p_outcome0"];

#[derive(Debug, Serialize)]
struct SweepJson<'a> {
    a: &'a str,
    b: &'a str,
    length: usize,
    marked_count: usize,
    rows: Vec<SweepRow>,
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Outcome, CliError> {
    let inst = instance(&args.a, &args.b, args.pad)?;
    let limit = 10.0 * (inst.len() as f64).sqrt();
    if args.max_iterations as f64 > limit {
        return Err(CliError::Usage(format!(
            "--max-iterations {} exceeds 10*sqrt(N) = {} for N = {}",
            args.max_iterations,
            format::csv(limit),
            inst.len()
        )));
    }
    let rows = sweep_rows(&inst, args.max_iterations);
    let text = match args.output.format {
        Format::Json => to_json(&SweepJson {
            a: &args.a,
            b: &args.b,
            length: inst.len(),
            marked_count: analysis::marked_count(&inst),
            rows,
        })?,
        Format::Csv => {
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.k.to_string(), format::csv(r.p_marked), format::csv(r.p_outcome0)])
                .collect();
            to_csv(&SWEEP_CSV_HEADER, &records)?
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Serialize)]
struct ValidateJson {
    length: usize,
    instances: usize,
    runs: usize,
    max_iterations: usize,
    #[serde(serialize_with = "serialize_json_f64")]
    max_deviation: f64,
    #[serde(serialize_with = "serialize_json_f64")]
    deviation_tolerance: f64,
    #[serde(serialize_with = "serialize_json_f64")]
    max_off_support_mass: f64,
    #[serde(serialize_with = "serialize_json_f64")]
    passivity_tolerance: f64,
    deviation_ok: bool,
    passivity_ok: bool,
    passed: bool,
}

pub const VALIDATE_CSV_HEADER: [&str; 8] = [
    "length",
    "instances",
    "runs",
    "max_iterations",
    "max_deviation",
    "max_off_support_mass",
    "deviation_ok",
    "passivity_ok",
];

pub fn cmd_validate(args: &ValidateArgs) -> Result<Outcome, CliError> {
    if args.n != 2 && args.n != validator::MAX_JOINT_LEN {
        return Err(CliError::Usage(format!("--n must be 2 or 4, got {}", args.n)));
    }
    let summary = match validator::validate_backends(args.n) {
        Ok(s) => s,
        // a leak off the pinned ancillas is a failed check, not a crash
        Err(crate::Error::SupportViolation { magnitude, .. }) => validator::ValidationSummary {
            instances: 0,
            runs: 0,
            max_deviation: f64::INFINITY,
            max_off_support_mass: magnitude * magnitude,
        },
        Err(e) => return Err(e.into()),
    };
    let deviation_ok = summary.max_deviation < DEVIATION_TOLERANCE;
    let passivity_ok = summary.max_off_support_mass < PASSIVITY_TOLERANCE;
    let passed = deviation_ok && passivity_ok;
    let text = match args.output.format {
        Format::Json => to_json(&ValidateJson {
            length: args.n,
            instances: summary.instances,
            runs: summary.runs,
            max_iterations: BATTERY_MAX_ITERATIONS,
            max_deviation: summary.max_deviation,
            deviation_tolerance: DEVIATION_TOLERANCE,
            max_off_support_mass: summary.max_off_support_mass,
            passivity_tolerance: PASSIVITY_TOLERANCE,
            deviation_ok,
            passivity_ok,
            passed,
        })?,
        Format::Csv => to_csv(
            &VALIDATE_CSV_HEADER,
            &[vec![
                args.n.to_string(),
                summary.instances.to_string(),
                summary.runs.to_string(),
                BATTERY_MAX_ITERATIONS.to_string(),
                format::csv(summary.max_deviation),
                format::csv(summary.max_off_support_mass),
                deviation_ok.to_string(),
                passivity_ok.to_string(),
            ]],
        )?,
    };
    Ok(Outcome { text, success: passed })
}

#[derive(Debug, Serialize)]
struct ClaimJson {
    id: &'static str,
    claim: &'static str,
    status: &'static str,
    #[serde(serialize_with = "serialize_json_f64")]
    measured: f64,
    #[serde(serialize_with = "serialize_json_f64")]
    expected: f64,
}

#[derive(Debug, Serialize)]
struct ReportJson {
    a: String,
    b: String,
    length: usize,
    strings_equal: bool,
    marked_count: usize,
    #[serde(serialize_with = "serialize_json_f64")]
    theta: f64,
    k_used: usize,
    #[serde(serialize_with = "serialize_json_f64")]
    p_equal_verdict: f64,
    #[serde(serialize_with = "serialize_json_opt_f64")]
    p_false_equal: Option<f64>,
    #[serde(serialize_with = "serialize_json_opt_f64")]
    p_false_unequal: Option<f64>,
    ancilla_qubits: usize,
    claims: Vec<ClaimJson>,
}

impl ReportJson {
    fn new(pair: &Pair, r: &ClaimReport) -> Self {
        Self {
            a: pair.0.clone(),
            b: pair.1.clone(),
            length: r.len,
            strings_equal: r.strings_equal,
            marked_count: r.marked_count,
            theta: r.theta,
            k_used: r.k_used,
            p_equal_verdict: r.p_equal_verdict,
            p_false_equal: r.p_false_equal,
            p_false_unequal: r.p_false_unequal,
            ancilla_qubits: r.ancilla_qubits,
            claims: r
                .claim_flags
                .iter()
                .map(|f| ClaimJson {
                    id: f.claim.code(),
                    claim: f.claim.description(),
                    status: f.status.as_str(),
                    measured: f.measured,
                    expected: f.expected,
                })
                .collect(),
        }
    }
}

pub const REPORT_CSV_HEADER: [&str; 6] = ["a", "b", "claim", "status", "measured", "expected"];

pub fn cmd_report(args: &ReportArgs) -> Result<Outcome, CliError> {
    let (pairs, batch) = collect_pairs(&args.strings, &args.input)?;
    let mut reports = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let inst = instance(&pair.0, &pair.1, args.strings.pad)?;
        reports.push(ReportJson::new(pair, &analysis::audit_claims(&inst, args.iterations)));
    }
    let text = match args.output.format {
        Format::Json if batch => to_json(&reports)?,
        Format::Json => to_json(&reports[0])?,
        Format::Csv => {
            let records: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.claims.iter().map(|c| {
                        vec![
                            r.a.clone(),
                            r.b.clone(),
                            c.id.to_string(),
                            c.status.to_string(),
                            format::csv(c.measured),
                            format::csv(c.expected),
                        ]
                    })
                })
                .collect();
            to_csv(&REPORT_CSV_HEADER, &records)?
        }
    };
    Ok(Outcome::ok(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qstrcmp").chain(args.iter().copied())).unwrap()
    }

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        run(&parse(args))
    }

    #[test]
    fn compare_exact_json() {
        let out = run_args(&["compare", "--a", "abcd", "--b", "abcd", "--mode", "exact"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["verdict"], "EQUAL");
        assert!((v["p_equal"].as_f64().unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(v["iterations"], 1);
        assert_eq!(v["marked_count"], 1);
        assert_eq!(v["ancilla_qubits"], 6);
        assert!(v["seed"].is_null());
    }

    #[test]
    fn compare_pads_to_power_of_two() {
        let out = run_args(&["compare", "--a", "abc", "--b", "abc"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["length"], 4);
        assert_eq!(v["verdict"], "EQUAL");
    }

    #[test]
    fn compare_length_mismatch_is_usage_error() {
        let err = run_args(&["compare", "--a", "abc", "--b", "ab"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let ok = run_args(&["compare", "--a", "abc", "--b", "ab", "--pad", "_"]).unwrap();
        assert!(ok.text.contains("UNEQUAL"));
    }

    #[test]
    fn sample_mode_is_reproducible() {
        let args = ["compare", "--a", "abcd", "--b", "abcx", "--mode", "sample", "--seed", "7"];
        let first = run_args(&args).unwrap();
        assert_eq!(first, run_args(&args).unwrap());
        assert!(first.text.contains("\"seed\": 7"));
    }

    #[test]
    fn sweep_rows_equal_strings() {
        let out = run_args(&[
            "sweep", "--a", "abcd", "--b", "abcd", "--max-iterations", "2", "--format", "csv",
        ])
        .unwrap();
        assert_eq!(out.text, "k,p_marked,p_outcome0\n0,0.25,0.25\n1,1.0,1.0\n2,0.25,0.25\n");
    }

    #[test]
    fn sweep_mismatch_and_short() {
        let inst = ComparisonInstance::new("abcd", "abcx").unwrap();
        for r in sweep_rows(&inst, 5) {
            assert_eq!(r.p_marked, 0.0);
            assert_eq!(r.p_outcome0, 0.25);
        }
        let inst = ComparisonInstance::new("ab", "ab").unwrap();
        for r in sweep_rows(&inst, 6) {
            assert!((r.p_marked - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn sweep_bound() {
        // 10 * sqrt(4) = 20
        assert!(run_args(&["sweep", "--a", "abcd", "--b", "abcd", "--max-iterations", "20"]).is_ok());
        let err = run_args(&["sweep", "--a", "abcd", "--b", "abcd", "--max-iterations", "21"])
            .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn validate_supported_lengths() {
        for n in ["2", "4"] {
            let out = run_args(&["validate", "--n", n]).unwrap();
            assert!(out.success);
            let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
            assert!(v["max_deviation"].as_f64().unwrap() < 1e-9);
            assert_eq!(v["passivity_ok"], true);
        }
        assert_eq!(run_args(&["validate", "--n", "8"]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn report_flags() {
        let out = run_args(&["report", "--a", "abca", "--b", "abca", "-k", "1"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["marked_count"], 2);
        assert_eq!(v["claims"][0]["id"], "C1");
        assert_eq!(v["claims"][0]["status"], "fail");
        assert_eq!(v["claims"][2]["status"], "fail");

        let out = run_args(&["report", "--a", "abcd", "--b", "abcx"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["claims"][1]["status"], "fail");
        assert_eq!(v["p_false_equal"], 0.25);
        assert!(v["p_false_unequal"].is_null());
    }

    #[test]
    fn csv_quotes_awkward_strings() {
        let out = run_args(&["compare", "--a", "a,\"b", "--b", "a,\"b", "--format", "csv"]).unwrap();
        let mut rdr = csv::Reader::from_reader(out.text.as_bytes());
        let rec = rdr.records().next().unwrap().unwrap();
        assert_eq!(&rec[0], "a,\"b");
    }

    #[test]
    fn missing_strings_rejected_by_parser() {
        let err = Cli::try_parse_from(["qstrcmp", "compare", "--a", "ab"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
