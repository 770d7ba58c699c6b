//! The linear-time algorithms.
//!
//! One total [`step`] drives everything. Scanning the input right to left,
//! the stack it maintains is the forest of the longest left-partially
//! balanced suffix seen so far, and the top of that stack is the parse tree
//! of the *longest balanced prefix* of the current suffix:
//!
//! * `')'` starts a fresh tree: push `(Nul, 0)`.
//! * `'('` wraps the two most recent trees into one node; the annotated
//!   sizes make the new size `2 + m + n` without re-measuring.
//! * `'('` on a singleton stack would be unmatched. Everything to its right
//!   becomes unreachable for segments extending further left, so the stack
//!   resets to the seed `[(Nul, 0)]`. This extra case is what makes `step`
//!   total where the plain forest parser fails.
//!
//! Taking the maximum of top-of-stack sizes over every suffix then yields
//! the longest balanced segment. [`lbs`] fuses that maximum into the sweep,
//! so a single stack and one best candidate are live at any time instead of
//! one forest per position. Candidate trees survive later merges because
//! nodes are immutable and shared.
//!
//! New candidates replace the running best on `>=`: the sweep visits
//! rightmost suffixes first, so later (more-left) positions win ties, which
//! matches the oracle's leftmost rule.

use crate::error::{leftmost_invalid, InvalidChar};
use crate::forest::SizedForest;
use crate::parse::Paren;
use crate::segment::Segment;
use crate::tree::Tree;

/// One shift-reduce step of the right-to-left scan. Total on any stack
/// reachable from [`SizedForest::seed`].
pub fn step(c: Paren, mut forest: SizedForest) -> SizedForest {
    apply_step(c, &mut forest);
    forest
}

/// In-place form of [`step`], used by the sweeps.
fn apply_step(c: Paren, forest: &mut SizedForest) {
    match c {
        Paren::Close => forest.push(Tree::nul(), 0),
        Paren::Open => {
            if forest.len() >= 2 {
                let (left, m) = forest.pop().expect("len checked");
                let (right, n) = forest.pop().expect("len checked");
                forest.push(Tree::bin(left, right), 2 + m + n);
            } else {
                forest.reset();
            }
        }
    }
}

/// Folds `step` over the whole input and returns the top of the final
/// stack: the parse tree of the longest balanced prefix of `s`, with its
/// size.
pub fn lbp(s: &str) -> Result<(Tree, usize), InvalidChar> {
    let mut stack = SizedForest::seed();
    for b in s.bytes().rev() {
        let c = Paren::from_byte(b).ok_or_else(|| leftmost_invalid(s))?;
        apply_step(c, &mut stack);
    }
    let (tree, size) = stack.top();
    Ok((tree.clone(), size))
}

/// Longest balanced segment in one right-to-left sweep: O(n) time, one
/// stack plus one recorded candidate. Never fails on parenthesis input.
pub fn lbs(s: &str) -> Result<Segment, InvalidChar> {
    let bytes = s.as_bytes();
    let mut stack = SizedForest::seed();
    // Seed candidate: the empty suffix.
    let mut best = Segment { start: bytes.len(), len: 0, tree: Some(Tree::nul()) };
    for (i, &b) in bytes.iter().enumerate().rev() {
        let c = Paren::from_byte(b).ok_or_else(|| leftmost_invalid(s))?;
        apply_step(c, &mut stack);
        let (top, size) = stack.top();
        if size >= best.len {
            best = Segment { start: i, len: size, tree: Some(top.clone()) };
        }
    }
    Ok(best)
}

/// Length of the longest balanced segment. Same sweep as [`lbs`] but the
/// stack holds only sizes, so no tree is ever allocated.
pub fn lbsl(s: &str) -> Result<usize, InvalidChar> {
    let mut stack: Vec<usize> = vec![0];
    let mut best = 0;
    for b in s.bytes().rev() {
        match b {
            b')' => stack.push(0),
            b'(' => {
                if stack.len() >= 2 {
                    let m = stack.pop().expect("len checked");
                    let n = stack.pop().expect("len checked");
                    stack.push(2 + m + n);
                } else {
                    stack[0] = 0;
                }
            }
            _ => return Err(leftmost_invalid(s)),
        }
        let top = *stack.last().expect("stack is never empty");
        if top > best {
            best = top;
        }
    }
    Ok(best)
}

/// Top-of-stack sizes for every suffix, longest suffix first: entry `i` is
/// the length of the longest balanced prefix of `s[i..]`, and the last
/// entry is 0 for the empty suffix. Intended for small inputs and tests.
pub fn scan_trace(s: &str) -> Result<Vec<usize>, InvalidChar> {
    let mut stack: Vec<usize> = vec![0];
    let mut sizes = Vec::with_capacity(s.len() + 1);
    sizes.push(0);
    for b in s.bytes().rev() {
        match b {
            b')' => stack.push(0),
            b'(' => {
                if stack.len() >= 2 {
                    let m = stack.pop().expect("len checked");
                    let n = stack.pop().expect("len checked");
                    stack.push(2 + m + n);
                } else {
                    stack[0] = 0;
                }
            }
            _ => return Err(leftmost_invalid(s)),
        }
        sizes.push(*stack.last().expect("stack is never empty"));
    }
    sizes.reverse();
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::SizedForest;

    fn pair() -> Tree {
        Tree::bin(Tree::nul(), Tree::nul())
    }

    fn sizes(f: &SizedForest) -> Vec<usize> {
        f.entries().map(|(_, n)| n).collect()
    }

    #[test]
    fn step_close_pushes() {
        let f = step(Paren::Close, SizedForest::seed());
        assert_eq!(sizes(&f), vec![0, 0]);
        assert!(f.entries().all(|(t, _)| t.is_nul()));
    }

    #[test]
    fn step_open_resets_singleton() {
        let loaded = SizedForest::from_trees([Tree::bin(pair(), pair())]).unwrap();
        let f = step(Paren::Open, loaded);
        assert_eq!(f, SizedForest::seed());
    }

    #[test]
    fn step_open_combines_top_two() {
        let two = step(Paren::Close, SizedForest::seed());
        let f = step(Paren::Open, two);
        assert_eq!(f.len(), 1);
        let (top, size) = f.top();
        assert_eq!(size, 2);
        assert_eq!(top, &pair());
    }

    #[test]
    fn lbp_matches_worked_prefix_table() {
        let (tree, size) = lbp("())()(").unwrap();
        assert_eq!(tree, pair());
        assert_eq!(size, 2);
    }

    #[test]
    fn lbp_of_empty_is_seed() {
        assert_eq!(lbp("").unwrap(), (Tree::nul(), 0));
    }

    #[test]
    fn lbp_takes_whole_balanced_string() {
        let (tree, size) = lbp("()()").unwrap();
        assert_eq!(size, 4);
        assert_eq!(tree.print(), "()()");
    }

    #[test]
    fn lbs_worked_example() {
        let input = "))(()())())()(";
        let answer = lbs(input).unwrap();
        assert_eq!((answer.start, answer.len), (2, 8));
        assert_eq!(answer.text(input), "(()())()");
        assert_eq!(answer.tree.as_ref().unwrap().print(), "(()())()");
    }

    #[test]
    fn lbs_empty_input() {
        let answer = lbs("").unwrap();
        assert_eq!((answer.start, answer.len), (0, 0));
        assert_eq!(answer.tree, Some(Tree::nul()));
    }

    #[test]
    fn lbs_ties_go_leftmost() {
        for s in ["())()", "()(()", "()()(", ")()()"] {
            let answer = lbs(s).unwrap();
            let reference = crate::oracle::Oracle::new().lbs(s).unwrap();
            assert_eq!(answer, reference, "input {s:?}");
        }
    }

    #[test]
    fn lbsl_examples() {
        assert_eq!(lbsl("))(()())())()(").unwrap(), 8);
        assert_eq!(lbsl(")))").unwrap(), 0);
        assert_eq!(lbsl("").unwrap(), 0);
    }

    #[test]
    fn scan_trace_examples() {
        assert_eq!(scan_trace("").unwrap(), vec![0]);
        assert_eq!(scan_trace("()").unwrap(), vec![2, 0, 0]);
        assert_eq!(scan_trace(")(").unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn recorded_candidate_survives_later_merges() {
        // The best segment sits at the right; everything to its left keeps
        // merging and finally resets the stack. The recorded tree must not
        // be disturbed by either.
        let input = "((()())";
        let answer = lbs(input).unwrap();
        assert_eq!((answer.start, answer.len), (1, 6));
        assert_eq!(answer.tree.as_ref().unwrap().print(), "(()())");
    }

    #[test]
    fn foreign_characters_are_reported_leftmost() {
        for f in [
            lbs("(x(y").unwrap_err(),
            lbsl("(x(y").unwrap_err(),
            lbp("(x(y").unwrap_err(),
            scan_trace("(x(y").unwrap_err(),
        ] {
            assert_eq!((f.position, f.found), (1, 'x'));
        }
    }
}
