//! Wall-clock scaling harness.
//!
//! Runs the linear algorithms over a series of input sizes and checks that
//! per-character time stays flat. Absolute times are machine-dependent and
//! deliberately not asserted; what is asserted is the *spread*: across a
//! 10x size range, max over min per-character time must stay under a
//! threshold (default [`DEFAULT_THRESHOLD`]) or the run is declared
//! non-linear.
//!
//! Records serialize as one JSON object per line, e.g.
//!
//! ```text
//! {"size":1000000,"wall_time_s":0.004,"per_char_ns":4.0,"algo":"lbsl","kind":"uniform","seed":42,"ok":true}
//! ```
//!
//! Methodology: the input is generated once per size (generation excluded
//! from timing), the algorithm runs `repeats` times, and the best run
//! counts. Runs are strictly sequential.

use std::hint::black_box;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use lbs_core::gen::{self, GenKind, GenSpec};
use lbs_core::linear;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Which algorithm a record timed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    /// Length-only sweep; no tree allocation.
    Lbsl,
    /// Tree-building sweep.
    Lbs,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Lbsl => "lbsl",
            Algo::Lbs => "lbs",
        }
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn serialize_kind<S: Serializer>(kind: &GenKind, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(kind.name())
}

/// One timed measurement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    /// Input length in characters.
    pub size: usize,
    /// Best-of-`repeats` wall time, seconds.
    pub wall_time_s: f64,
    /// `wall_time_s / size`, in nanoseconds per character.
    pub per_char_ns: f64,
    pub algo: Algo,
    #[serde(serialize_with = "serialize_kind")]
    pub kind: GenKind,
    pub seed: u64,
    /// False when the timed run panicked (e.g. resource exhaustion); such
    /// records carry zero times and fail the linearity check.
    pub ok: bool,
}

impl BenchRecord {
    /// The line-delimited JSON form.
    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

/// Verdict over a series of records.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearityReport {
    pub records: Vec<BenchRecord>,
    /// max per-character time divided by min, over the ok records.
    pub max_ratio: f64,
    pub threshold: f64,
    pub pass: bool,
}

pub const DEFAULT_THRESHOLD: f64 = 3.0;
pub const DEFAULT_REPEATS: u32 = 3;

/// Smallest size worth timing; below this, timer noise dominates.
pub const MIN_SIZE: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("no sizes given")]
    NoSizes,
    #[error("size {0} is below the minimum of {MIN_SIZE}")]
    SizeTooSmall(usize),
    #[error("repeats must be at least 1")]
    ZeroRepeats,
    #[error("balanced inputs need an even size, got {0}")]
    OddBalancedSize(usize),
    #[error("no records given")]
    NoRecords,
    #[error("records mix algorithms or input kinds")]
    MixedRecords,
}

/// Times `algo` on one freshly generated input per size.
///
/// A panic inside a timed run (allocation failure being the realistic case)
/// is caught and reported as a failed record rather than aborting the whole
/// series; out-of-memory aborts from the allocator itself cannot be
/// intercepted.
pub fn bench_run(
    sizes: &[usize],
    algo: Algo,
    kind: GenKind,
    seed: u64,
    repeats: u32,
) -> Result<Vec<BenchRecord>, BenchError> {
    if sizes.is_empty() {
        return Err(BenchError::NoSizes);
    }
    if let Some(&small) = sizes.iter().find(|&&s| s < MIN_SIZE) {
        return Err(BenchError::SizeTooSmall(small));
    }
    if repeats == 0 {
        return Err(BenchError::ZeroRepeats);
    }

    let mut records = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let spec = GenSpec { kind, len: size, seed };
        let input = gen::generate(&spec).map_err(|_| BenchError::OddBalancedSize(size))?;
        let timed = catch_unwind(AssertUnwindSafe(|| best_wall_time(&input, algo, repeats)));
        let record = match timed {
            Ok(wall_time_s) => BenchRecord {
                size,
                wall_time_s,
                per_char_ns: wall_time_s * 1e9 / size as f64,
                algo,
                kind,
                seed,
                ok: true,
            },
            Err(_) => BenchRecord {
                size,
                wall_time_s: 0.0,
                per_char_ns: 0.0,
                algo,
                kind,
                seed,
                ok: false,
            },
        };
        records.push(record);
    }
    Ok(records)
}

fn best_wall_time(input: &str, algo: Algo, repeats: u32) -> f64 {
    let mut best = f64::INFINITY;
    for _ in 0..repeats {
        let start = Instant::now();
        match algo {
            Algo::Lbsl => {
                black_box(linear::lbsl(black_box(input)).expect("generated input is valid"));
            }
            Algo::Lbs => {
                black_box(linear::lbs(black_box(input)).expect("generated input is valid"));
            }
        }
        best = best.min(start.elapsed().as_secs_f64());
    }
    best
}

/// Computes the per-character spread over a homogeneous series of records.
/// Passes when every record is ok and `max/min <= threshold`; a single
/// record trivially passes with ratio 1.
pub fn check_linearity(records: &[BenchRecord], threshold: f64) -> Result<LinearityReport, BenchError> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    let first = &records[0];
    if records.iter().any(|r| r.algo != first.algo || r.kind != first.kind) {
        return Err(BenchError::MixedRecords);
    }
    let all_ok = records.iter().all(|r| r.ok);
    let (mut min, mut max) = (f64::INFINITY, 0.0f64);
    for r in records.iter().filter(|r| r.ok) {
        min = min.min(r.per_char_ns);
        max = max.max(r.per_char_ns);
    }
    let max_ratio = if all_ok && min > 0.0 { max / min } else { f64::INFINITY };
    Ok(LinearityReport {
        records: records.to_vec(),
        max_ratio,
        threshold,
        pass: all_ok && max_ratio <= threshold,
    })
}

/// Renders the two-row size/time table, with a per-character row appended
/// since that is the quantity the linearity verdict reads.
pub fn render_table(records: &[BenchRecord]) -> String {
    let sizes: Vec<String> =
        records.iter().map(|r| format!("{:.2}", r.size as f64 / 1e6)).collect();
    let times: Vec<String> = records
        .iter()
        .map(|r| if r.ok { format!("{:.3}", r.wall_time_s) } else { "failed".to_string() })
        .collect();
    let per_char: Vec<String> = records
        .iter()
        .map(|r| if r.ok { format!("{:.2}", r.per_char_ns) } else { "-".to_string() })
        .collect();

    let width = sizes
        .iter()
        .chain(&times)
        .chain(&per_char)
        .map(|s| s.len())
        .max()
        .unwrap_or(1);
    let row = |label: &str, cells: &[String]| {
        let mut line = format!("{label:<18} |");
        for cell in cells {
            line.push_str(&format!(" {cell:>width$}"));
        }
        line
    };
    format!(
        "{}\n{}\n{}",
        row("input size (M)", &sizes),
        row("wall time (sec.)", &times),
        row("per char (ns)", &per_char),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(size: usize, per_char_ns: f64) -> BenchRecord {
        BenchRecord {
            size,
            wall_time_s: per_char_ns * size as f64 / 1e9,
            per_char_ns,
            algo: Algo::Lbsl,
            kind: GenKind::Uniform,
            seed: 0,
            ok: true,
        }
    }

    #[test]
    fn equal_per_char_times_pass() {
        let records = vec![record(10_000, 5.0), record(20_000, 5.0)];
        let report = check_linearity(&records, DEFAULT_THRESHOLD).unwrap();
        assert_eq!(report.max_ratio, 1.0);
        assert!(report.pass);
    }

    #[test]
    fn doubling_per_char_times_fail() {
        // Quadratic behaviour: per-char time doubles at each size step.
        let records = vec![
            record(10_000, 1.0),
            record(20_000, 2.0),
            record(40_000, 4.0),
            record(80_000, 8.0),
        ];
        let report = check_linearity(&records, DEFAULT_THRESHOLD).unwrap();
        assert_eq!(report.max_ratio, 8.0);
        assert!(!report.pass);
    }

    #[test]
    fn single_record_trivially_passes() {
        let report = check_linearity(&[record(10_000, 4.2)], DEFAULT_THRESHOLD).unwrap();
        assert_eq!(report.max_ratio, 1.0);
        assert!(report.pass);
    }

    #[test]
    fn mixed_series_are_rejected() {
        let mut other = record(10_000, 1.0);
        other.algo = Algo::Lbs;
        let err = check_linearity(&[record(10_000, 1.0), other], 3.0).unwrap_err();
        assert_eq!(err, BenchError::MixedRecords);
        assert_eq!(check_linearity(&[], 3.0).unwrap_err(), BenchError::NoRecords);
    }

    #[test]
    fn failed_records_fail_the_check() {
        let mut bad = record(20_000, 0.0);
        bad.ok = false;
        let report = check_linearity(&[record(10_000, 1.0), bad], 3.0).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn preconditions_are_enforced() {
        assert_eq!(
            bench_run(&[], Algo::Lbsl, GenKind::Uniform, 0, 1).unwrap_err(),
            BenchError::NoSizes
        );
        assert_eq!(
            bench_run(&[9_999], Algo::Lbsl, GenKind::Uniform, 0, 1).unwrap_err(),
            BenchError::SizeTooSmall(9_999)
        );
        assert_eq!(
            bench_run(&[10_000], Algo::Lbsl, GenKind::Uniform, 0, 0).unwrap_err(),
            BenchError::ZeroRepeats
        );
    }

    #[test]
    fn json_lines_carry_the_contract_fields() {
        let line = record(10_000, 5.0).json_line();
        let value: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(value["size"], 10_000);
        assert_eq!(value["algo"], "lbsl");
        assert_eq!(value["kind"], "uniform");
        assert_eq!(value["seed"], 0);
        assert_eq!(value["ok"], true);
        assert!(value["wall_time_s"].is_f64());
        assert!(value["per_char_ns"].is_f64());
    }

    #[test]
    fn table_mirrors_the_record_series() {
        let table = render_table(&[record(1_000_000, 5.0), record(2_000_000, 5.5)]);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("input size (M)"));
        assert!(lines[0].contains("1.00") && lines[0].contains("2.00"));
        assert!(lines[1].starts_with("wall time (sec.)"));
        assert!(lines[2].starts_with("per char (ns)"));
    }
}
