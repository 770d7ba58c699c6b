//! Deterministic, seeded input generators for tests and benchmarks.
//!
//! Reproducibility is the point: the same [`GenSpec`] yields the same bytes
//! on every run, platform, and implementation language. The generator is
//! therefore a fixed, fully specified recurrence ([`SplitMix64`]) rather
//! than any platform RNG, and each generator documents the exact order in
//! which it consumes outputs.

use thiserror::Error;

use crate::forest::Forest;
use crate::tree::Tree;

/// What to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Each character independently `'('` or `')'` with probability 1/2.
    Uniform,
    /// The printed form of a random tree; always balanced, length must be
    /// even.
    Balanced,
    /// The printed form of a random forest; always left-partially balanced.
    Forest,
    /// `(((...)))`: maximal nesting, worst case for stack depth.
    AdversarialDeep,
    /// `()()()...`: maximal alternation, the stack stays tiny.
    AdversarialFlat,
}

impl GenKind {
    pub const ALL: [GenKind; 5] = [
        GenKind::Uniform,
        GenKind::Balanced,
        GenKind::Forest,
        GenKind::AdversarialDeep,
        GenKind::AdversarialFlat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Uniform => "uniform",
            GenKind::Balanced => "balanced",
            GenKind::Forest => "forest",
            GenKind::AdversarialDeep => "adversarial-deep",
            GenKind::AdversarialFlat => "adversarial-flat",
        }
    }
}

impl std::fmt::Display for GenKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(GenKind::Uniform),
            "balanced" => Ok(GenKind::Balanced),
            "forest" => Ok(GenKind::Forest),
            "adversarial-deep" | "deep" => Ok(GenKind::AdversarialDeep),
            "adversarial-flat" | "flat" => Ok(GenKind::AdversarialFlat),
            other => Err(format!(
                "unknown kind {other:?}; expected uniform, balanced, forest, deep, or flat"
            )),
        }
    }
}

/// A complete, reproducible description of one generated input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Target length in characters; every kind hits it exactly.
    pub len: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("balanced output requires an even length, got {0}")]
    OddLength(usize),
}

/// SplitMix64 (Steele, Lea & Flood's `splitmix64` finalizer). One output:
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// return z ^ (z >> 31)
/// ```
///
/// All arithmetic is wrapping, state starts at the seed. Bounded draws use
/// plain `next_u64() % bound`; the modulo bias is irrelevant for shaping
/// test data and keeps the recurrence trivial to replicate elsewhere.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound`. `bound` must be non-zero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Generates the string a spec describes.
pub fn generate(spec: &GenSpec) -> Result<String, GenError> {
    match spec.kind {
        GenKind::Uniform => Ok(uniform(spec.len, spec.seed)),
        GenKind::Balanced => Ok(tree(spec.len, spec.seed)?.print()),
        GenKind::Forest => Ok(forest(spec.len, spec.seed).print()),
        GenKind::AdversarialDeep => Ok(deep(spec.len)),
        GenKind::AdversarialFlat => Ok(flat(spec.len)),
    }
}

/// `len` independent fair-coin characters: character `i` is `'('` when the
/// high bit of the `i`-th generator output is set.
pub fn uniform(len: usize, seed: u64) -> String {
    let mut rng = SplitMix64::new(seed);
    let mut out = String::with_capacity(len);
    for _ in 0..len {
        out.push(if rng.next_u64() >> 63 == 1 { '(' } else { ')' });
    }
    out
}

/// A random tree printing to exactly `len` characters (`len` must be even).
///
/// Shape distribution: a subtree that must hold `m` nodes draws
/// `k = next_below(m)` for its left child and keeps `m - 1 - k` for the
/// right, recursing pre-order (node, then left, then right). Not uniform
/// over shapes, but seed-deterministic and it reaches both spines and bushy
/// trees, which is what the round-trip suites need.
pub fn tree(len: usize, seed: u64) -> Result<Tree, GenError> {
    if !len.is_multiple_of(2) {
        return Err(GenError::OddLength(len));
    }
    let mut rng = SplitMix64::new(seed);
    Ok(build_tree(len / 2, &mut rng))
}

/// Builds a tree with `nodes` binary nodes, iteratively: spine-shaped draws
/// would overflow the call stack long before the 10^7-character sizes the
/// adversarial suites use.
fn build_tree(nodes: usize, rng: &mut SplitMix64) -> Tree {
    enum Task {
        Build(usize),
        Combine,
    }
    let mut tasks = vec![Task::Build(nodes)];
    let mut out: Vec<Tree> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Task::Build(0) => out.push(Tree::nul()),
            Task::Build(m) => {
                let left = rng.next_below(m as u64) as usize;
                tasks.push(Task::Combine);
                tasks.push(Task::Build(m - 1 - left));
                tasks.push(Task::Build(left));
            }
            Task::Combine => {
                let right = out.pop().expect("combine follows two builds");
                let left = out.pop().expect("combine follows two builds");
                out.push(Tree::bin(left, right));
            }
        }
    }
    out.pop().expect("exactly one tree remains")
}

/// A random forest printing to exactly `len` characters.
///
/// Draw order: first the number of trees `k` (uniform over the values with
/// the right parity, via `next_below(len/2 + 1)`), then each tree's node
/// count left to right (each `next_below(remaining + 1)`, the last tree
/// takes the rest), then each tree's shape in order as in [`tree`].
pub fn forest(len: usize, seed: u64) -> Forest {
    let mut rng = SplitMix64::new(seed);
    // k trees and k-1 separators: sizes must sum to len - (k - 1), which
    // forces k = len + 1 (mod 2).
    let choices = len / 2 + 1;
    let k = 1 + 2 * rng.next_below(choices as u64) as usize;
    let k = if len.is_multiple_of(2) { k } else { k + 1 };
    let mut pairs_left = (len - (k - 1)) / 2;
    let mut node_counts = Vec::with_capacity(k);
    for _ in 0..k - 1 {
        let m = rng.next_below(pairs_left as u64 + 1) as usize;
        node_counts.push(m);
        pairs_left -= m;
    }
    node_counts.push(pairs_left);
    let trees = node_counts.into_iter().map(|m| build_tree(m, &mut rng));
    Forest::from_trees(trees).expect("k >= 1")
}

/// `ceil(len/2)` opens followed by `floor(len/2)` closes.
pub fn deep(len: usize) -> String {
    let closes = len / 2;
    let opens = len - closes;
    let mut out = String::with_capacity(len);
    out.extend(std::iter::repeat_n('(', opens));
    out.extend(std::iter::repeat_n(')', closes));
    out
}

/// The alternating pattern `()()()...` truncated to `len` characters.
pub fn flat(len: usize) -> String {
    (0..len).map(|i| if i % 2 == 0 { '(' } else { ')' }).collect()
}
