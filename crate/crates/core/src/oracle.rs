//! The executable specification, kept slow and obvious.
//!
//! Everything here exists to vouch for the linear scan in [`crate::linear`],
//! so it deliberately avoids the scan's machinery: no shared stack across
//! suffixes, no fused maximum. Two reference routes are provided and tested
//! against each other:
//!
//! * [`Oracle::lbs_enumerated`] — the one-liner: enumerate every segment,
//!   parse each one, keep the largest parse. Between quadratic and cubic;
//!   fine for exhaustive small-length sweeps.
//! * [`Oracle::lbs`] — the prefix-suffix form: for each suffix, measure its
//!   longest balanced prefix with an independent counter, then parse the
//!   winner once. Quadratic with a tiny constant, so randomized equivalence
//!   suites can afford thousands of inputs near the ceiling.
//!
//! Ties are resolved by enumeration order: suffixes are visited left to
//! right and a new candidate must be strictly larger to win, so the leftmost
//! start is kept. The linear algorithm is required to match that rule
//! exactly.
//!
//! Oracle calls refuse inputs longer than a configurable ceiling (default
//! [`DEFAULT_CEILING`]); the oracle exists for correctness, not scale.

use thiserror::Error;

use crate::error::{validate, InvalidChar};
use crate::forest::Forest;
use crate::parse::{parse, parse_forest};
use crate::segment::Segment;
use crate::tree::Tree;

/// Default maximum input length an [`Oracle`] accepts.
pub const DEFAULT_CEILING: usize = 2_000;

/// All prefixes of `s`, shortest first, starting with `""`.
pub fn inits(s: &str) -> impl DoubleEndedIterator<Item = &str> + '_ {
    s.char_indices()
        .map(|(i, _)| i)
        .chain(std::iter::once(s.len()))
        .map(move |i| &s[..i])
}

/// All suffixes of `s`, longest first, ending with `""`.
pub fn tails(s: &str) -> impl DoubleEndedIterator<Item = &str> + '_ {
    s.char_indices()
        .map(|(i, _)| i)
        .chain(std::iter::once(s.len()))
        .map(move |i| &s[i..])
}

/// All segments of `s`: the prefixes of each suffix, grouped by start
/// position, shortest prefix first. `""` appears once per start position.
pub fn segments(s: &str) -> impl Iterator<Item = &str> + '_ {
    tails(s).flat_map(inits)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("input length {len} exceeds the oracle ceiling {ceiling}")]
    TooLong { len: usize, ceiling: usize },
    #[error(transparent)]
    Input(#[from] InvalidChar),
}

/// Reference implementations with a cost ceiling.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    ceiling: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { ceiling: DEFAULT_CEILING }
    }
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle::default()
    }

    pub fn with_ceiling(ceiling: usize) -> Oracle {
        Oracle { ceiling }
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn guard(&self, s: &str) -> Result<(), OracleError> {
        if s.len() > self.ceiling {
            return Err(OracleError::TooLong { len: s.len(), ceiling: self.ceiling });
        }
        validate(s)?;
        Ok(())
    }

    /// Longest balanced segment, by the prefix-suffix reference route.
    ///
    /// Always succeeds on valid input: the empty segment is balanced and
    /// parses to `Nul`.
    pub fn lbs(&self, s: &str) -> Result<Segment, OracleError> {
        self.guard(s)?;
        let (start, len) = best_start_and_len(s.as_bytes());
        let tree = parse(&s[start..start + len])
            .expect("alphabet was validated")
            .expect("a longest balanced prefix is balanced");
        Ok(Segment { start, len, tree: Some(tree) })
    }

    /// Length of the longest balanced segment.
    pub fn lbsl(&self, s: &str) -> Result<usize, OracleError> {
        self.guard(s)?;
        Ok(best_start_and_len(s.as_bytes()).1)
    }

    /// Longest balanced segment by brute enumeration of all segments.
    pub fn lbs_enumerated(&self, s: &str) -> Result<Segment, OracleError> {
        self.guard(s)?;
        let mut best: Option<Segment> = None;
        for (start, tail) in tails(s).enumerate() {
            for prefix in inits(tail) {
                let parsed = parse(prefix).expect("alphabet was validated");
                if let Some(tree) = parsed {
                    let len = tree.size();
                    if best.as_ref().is_none_or(|b| len > b.len) {
                        best = Some(Segment { start, len, tree: Some(tree) });
                    }
                }
            }
        }
        Ok(best.expect("the empty segment always parses"))
    }

    /// Parse tree of the longest balanced prefix of `s`, by parsing every
    /// prefix from scratch.
    pub fn lbp(&self, s: &str) -> Result<Tree, OracleError> {
        self.guard(s)?;
        let mut best = Tree::nul();
        let mut best_size = 0usize;
        for prefix in inits(s) {
            if let Some(tree) = parse(prefix).expect("alphabet was validated") {
                let size = tree.size();
                if size > best_size {
                    best = tree;
                    best_size = size;
                }
            }
        }
        Ok(best)
    }

    /// `parse_forest` applied to every prefix of `s`, shortest first. This
    /// is the table the CLI `trace` subcommand renders.
    pub fn trace(&self, s: &str) -> Result<Vec<Option<Forest>>, OracleError> {
        self.guard(s)?;
        Ok(inits(s)
            .map(|prefix| parse_forest(prefix).expect("alphabet was validated"))
            .collect())
    }
}

/// Start and length of the longest balanced segment: the maximum over all
/// suffixes of that suffix's longest balanced prefix, first maximum wins.
fn best_start_and_len(bytes: &[u8]) -> (usize, usize) {
    let mut best_start = 0;
    let mut best_len = 0;
    for start in 0..=bytes.len() {
        let len = balanced_prefix_len(&bytes[start..]);
        if len > best_len {
            best_start = start;
            best_len = len;
        }
    }
    (best_start, best_len)
}

/// Length of the longest balanced prefix, by running depth counter: the
/// last position where the counter returns to zero before ever dipping
/// below it. Alphabet must already be validated.
fn balanced_prefix_len(bytes: &[u8]) -> usize {
    let mut depth: u64 = 0;
    let mut longest = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'(' {
            depth += 1;
        } else {
            if depth == 0 {
                break;
            }
            depth -= 1;
            if depth == 0 {
                longest = i + 1;
            }
        }
    }
    longest
}
