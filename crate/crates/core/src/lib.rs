//! Longest balanced segment of parentheses.
//!
//! Given a string over `'('` and `')'`, find the longest contiguous
//! substring that is balanced — for `"))(()())())()("` the answer is
//! `"(()())()"` — together with its position and its parse tree under the
//! grammar `S → ε | (S)S`.
//!
//! The crate ships the problem twice, on purpose:
//!
//! * [`oracle`] — slow reference implementations that follow the problem
//!   statement as directly as possible (enumerate segments, parse each,
//!   keep the largest). They are the ground truth the test suites compare
//!   against and are fenced by an input-length ceiling.
//! * [`linear`] — the production algorithm: a single right-to-left
//!   shift-reduce sweep over the input, O(n) time, which must agree with
//!   the oracle everywhere, including tie-breaking (leftmost start wins).
//!
//! Supporting cast: [`tree`] and [`forest`] define the parse-tree data
//! model and printers, [`parse`] inverts the printers, [`gen`] produces
//! seeded, reproducible test inputs.
//!
//! ```
//! let input = "))(()())())()(";
//! let answer = lbs_core::linear::lbs(input).unwrap();
//! assert_eq!(answer.text(input), "(()())()");
//! assert_eq!((answer.start, answer.len), (2, 8));
//! ```
//!
//! All values are immutable after construction and safe to share or send
//! across threads; every operation is a pure function of its inputs.

pub mod error;
pub mod forest;
pub mod gen;
pub mod linear;
pub mod oracle;
pub mod parse;
pub mod segment;
pub mod tree;

pub use error::InvalidChar;
pub use forest::{EmptyForest, Forest, SizedForest};
pub use gen::{GenKind, GenSpec};
pub use oracle::Oracle;
pub use parse::{is_balanced, parse, parse_forest, Paren};
pub use segment::Segment;
pub use tree::Tree;
