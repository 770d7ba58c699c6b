//! `lbs` — longest balanced segment of parentheses.
//!
//! Subcommands: `solve` (find the segment), `gen` (emit reproducible test
//! inputs), `trace` (show the per-prefix parse table), `bench` (time the
//! linear algorithms and check the scaling).
//!
//! Exit codes: 0 success, 1 I/O or resource failure, 2 usage or domain
//! error (bad flags, foreign characters, oracle ceiling), 3 benchmark
//! linearity failure.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lbs_bench::{bench_run, check_linearity, render_table, Algo};
use lbs_core::gen::{self, GenKind, GenSpec};
use lbs_core::{linear, Forest, Oracle, Segment};

mod trace_table;

/// Inputs above this are rejected outright; offsets and the JSON schema
/// assume they fit comfortably in 32 bits.
const MAX_INPUT_LEN: usize = 1 << 31;

#[derive(Parser)]
#[command(name = "lbs", version, about = "Longest balanced segment of parentheses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the longest balanced segment of the input.
    Solve(SolveArgs),
    /// Generate a reproducible test input on stdout.
    Gen(GenArgs),
    /// Show the forest parse of every prefix, one row per prefix.
    Trace(TraceArgs),
    /// Time the linear algorithms across input sizes and check scaling.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Inline input string; reads --file or stdin when omitted.
    input: Option<String>,
    /// Read the input from this file ("-" for stdin).
    #[arg(long, conflicts_with = "input")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = AlgoChoice::Linear)]
    algo: AlgoChoice,
    #[arg(long, value_enum, default_value_t = Mode::Segment)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    /// The linear-time sweep.
    Linear,
    /// The slow reference implementation (input length capped).
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Print the winning substring.
    Segment,
    /// Print its length.
    Length,
    /// Print its parse tree in constructor notation.
    Tree,
    /// Print `start=<s> length=<l>`.
    Offsets,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// uniform, balanced, forest, deep (adversarial-deep), or flat
    /// (adversarial-flat).
    #[arg(long)]
    kind: GenKind,
    /// Output length in characters.
    #[arg(long)]
    len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TraceArgs {
    /// Inline input string; reads --file or stdin when omitted.
    input: Option<String>,
    /// Read the input from this file ("-" for stdin).
    #[arg(long, conflicts_with = "input")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated input sizes; scientific notation accepted (1e6).
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_size)]
    sizes: Vec<usize>,
    #[arg(long, value_enum, default_value_t = BenchAlgo::Lbsl)]
    algo: BenchAlgo,
    /// Timed runs per size; the best one counts.
    #[arg(long, default_value_t = lbs_bench::DEFAULT_REPEATS)]
    repeats: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum allowed per-character time spread (max/min).
    #[arg(long, default_value_t = lbs_bench::DEFAULT_THRESHOLD)]
    threshold: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchAlgo {
    /// Length-only sweep (default; no tree allocation).
    Lbsl,
    /// Tree-building sweep.
    Lbs,
    /// Rejected: the reference implementation is capped far below
    /// benchmarkable sizes.
    Oracle,
}

enum Failure {
    /// Exit 1.
    Io(String),
    /// Exit 2.
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<lbs_core::InvalidChar> for Failure {
    fn from(e: lbs_core::InvalidChar) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<lbs_core::oracle::OracleError> for Failure {
    fn from(e: lbs_core::oracle::OracleError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

/// Reads the input from the inline argument, a file, or stdin; strips one
/// trailing newline; rejects oversized and non-parenthesis input.
fn read_input(inline: Option<String>, file: Option<PathBuf>) -> Result<String, Failure> {
    let bytes = match (inline, file) {
        (Some(s), _) => s.into_bytes(),
        (None, Some(path)) if path.as_os_str() != "-" => fs::read(&path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?,
        (None, _) => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::Io(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    if bytes.len() > MAX_INPUT_LEN {
        return Err(Failure::Usage(format!(
            "input of {} characters exceeds the {MAX_INPUT_LEN} limit",
            bytes.len()
        )));
    }
    let mut text = String::from_utf8(bytes).map_err(|e| {
        let pos = e.utf8_error().valid_up_to();
        let byte = e.as_bytes()[pos];
        Failure::Usage(format!(
            "invalid byte 0x{byte:02x} at byte {pos}; input must contain only '(' and ')'"
        ))
    })?;
    if text.ends_with('\n') {
        text.pop();
    }
    Ok(text)
}

fn cmd_solve(args: SolveArgs) -> Result<u8, Failure> {
    let input = read_input(args.input, args.file)?;

    // The length-only text mode never needs trees; everything else does.
    let length_only = args.mode == Mode::Length && args.output == OutputFormat::Text;
    let answer: Segment = match (args.algo, length_only) {
        (AlgoChoice::Linear, true) => {
            let len = linear::lbsl(&input)?;
            Segment { start: 0, len, tree: None }
        }
        (AlgoChoice::Linear, false) => linear::lbs(&input)?,
        (AlgoChoice::Oracle, true) => {
            let len = Oracle::new().lbsl(&input)?;
            Segment { start: 0, len, tree: None }
        }
        (AlgoChoice::Oracle, false) => Oracle::new().lbs(&input)?,
    };

    let rendered = match args.output {
        OutputFormat::Text => match args.mode {
            Mode::Segment => answer.text(&input).to_string(),
            Mode::Length => answer.len.to_string(),
            Mode::Tree => answer.tree.as_ref().expect("tree mode keeps trees").constructor_notation(),
            Mode::Offsets => format!("start={} length={}", answer.start, answer.len),
        },
        OutputFormat::Json => {
            let tree = answer.tree.as_ref().expect("json output keeps trees");
            serde_json::json!({
                "start": answer.start,
                "length": answer.len,
                "segment": answer.text(&input),
                "tree": tree.constructor_notation(),
                "algo": match args.algo {
                    AlgoChoice::Linear => "linear",
                    AlgoChoice::Oracle => "oracle",
                },
            })
            .to_string()
        }
    };
    println!("{rendered}");
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<u8, Failure> {
    let spec = GenSpec { kind: args.kind, len: args.len, seed: args.seed };
    let out = gen::generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    handle
        .write_all(out.as_bytes())
        .and_then(|_| handle.write_all(b"\n"))
        .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}")))?;
    Ok(0)
}

fn cmd_trace(args: TraceArgs) -> Result<u8, Failure> {
    let input = read_input(args.input, args.file)?;
    let rows: Vec<Option<Forest>> = Oracle::new().trace(&input)?;
    print!("{}", trace_table::render(&input, &rows));
    Ok(0)
}

fn cmd_bench(args: BenchArgs) -> Result<u8, Failure> {
    let algo = match args.algo {
        BenchAlgo::Lbsl => Algo::Lbsl,
        BenchAlgo::Lbs => Algo::Lbs,
        BenchAlgo::Oracle => {
            return Err(Failure::Usage(format!(
                "the oracle is capped at {} characters and cannot be benchmarked; \
                 use --algo lbsl or --algo lbs",
                Oracle::new().ceiling()
            )));
        }
    };
    let records = bench_run(&args.sizes, algo, GenKind::Uniform, args.seed, args.repeats)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    for record in &records {
        println!("{}", record.json_line());
    }
    let report = check_linearity(&records, args.threshold)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    eprintln!("{}", render_table(&report.records));
    if records.iter().any(|r| !r.ok) {
        eprintln!("benchmark failed: at least one timed run did not complete");
        return Ok(1);
    }
    eprintln!(
        "linearity: {} (per-char spread {:.2}x, threshold {:.2}x)",
        if report.pass { "PASS" } else { "FAIL" },
        report.max_ratio,
        report.threshold
    );
    Ok(if report.pass { 0 } else { 3 })
}

/// Accepts `250000`, `1e6`, `2.5e5`-style sizes.
fn parse_size(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    let f: f64 = s.parse().map_err(|_| format!("{s:?} is not a size"))?;
    if !f.is_finite() || f < 0.0 || f.fract() != 0.0 || f > usize::MAX as f64 {
        return Err(format!("{s:?} is not a whole non-negative size"));
    }
    Ok(f as usize)
}
