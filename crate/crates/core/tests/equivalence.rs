//! The linear sweep must be indistinguishable from the reference
//! implementations: same length, same start (leftmost on ties), same tree.

use lbs_core::gen::{self, SplitMix64};
use lbs_core::{is_balanced, linear, Oracle, Paren, SizedForest};
use proptest::prelude::*;

fn all_strings(len: usize) -> impl Iterator<Item = String> {
    (0u32..1 << len).map(move |mask| {
        (0..len)
            .map(|i| if mask >> i & 1 == 1 { '(' } else { ')' })
            .collect()
    })
}

/// Exhaustive at small lengths, against both oracle routes.
#[test]
fn lbs_matches_oracle_exhaustively_to_12() {
    let oracle = Oracle::new();
    for len in 0..=12usize {
        for s in all_strings(len) {
            let fast = linear::lbs(&s).unwrap();
            let reference = oracle.lbs(&s).unwrap();
            assert_eq!(fast, reference, "input {s:?}");
            let enumerated = oracle.lbs_enumerated(&s).unwrap();
            assert_eq!(fast, enumerated, "input {s:?}");
            assert_eq!(linear::lbsl(&s).unwrap(), oracle.lbsl(&s).unwrap(), "input {s:?}");
        }
    }
}

/// Internal consistency plus validity of the reported segment, independent
/// of any oracle.
#[test]
fn answers_are_consistent_and_valid() {
    let mut rng = SplitMix64::new(99);
    for _ in 0..500 {
        let len = rng.next_below(800) as usize;
        let s = gen::uniform(len, rng.next_u64());
        let answer = lbs_core::linear::lbs(&s).unwrap();
        let length = linear::lbsl(&s).unwrap();
        let tree = answer.tree.as_ref().expect("lbs keeps trees");
        assert_eq!(answer.len, length, "input {s:?}");
        assert_eq!(tree.size(), length, "input {s:?}");
        assert!(is_balanced(answer.text(&s)).unwrap(), "input {s:?}");
        assert_eq!(tree.print(), answer.text(&s), "input {s:?}");
    }
}

#[test]
fn lbs_matches_oracle_on_random_inputs() {
    let oracle = Oracle::new();
    let mut rng = SplitMix64::new(7);
    for round in 0..400 {
        let len = rng.next_below(300) as usize;
        let s = gen::uniform(len, rng.next_u64());
        assert_eq!(
            linear::lbs(&s).unwrap(),
            oracle.lbs(&s).unwrap(),
            "round {round}, input {s:?}"
        );
        if len <= 120 {
            assert_eq!(
                linear::lbs(&s).unwrap(),
                oracle.lbs_enumerated(&s).unwrap(),
                "round {round}, input {s:?}"
            );
        }
    }
}

/// Adversarial and structured kinds, not just uniform noise.
#[test]
fn lbs_matches_oracle_on_structured_inputs() {
    let oracle = Oracle::new();
    for seed in 0..40u64 {
        for kind in gen::GenKind::ALL {
            let len = 2 * (1 + seed as usize % 200);
            let spec = gen::GenSpec { kind, len, seed };
            let s = gen::generate(&spec).unwrap();
            assert_eq!(
                linear::lbs(&s).unwrap(),
                oracle.lbs(&s).unwrap(),
                "kind {kind}, seed {seed}"
            );
        }
    }
}

/// At every sweep position the top of the stack is the longest balanced
/// prefix of that suffix, checked against the prefix-parsing reference.
#[test]
fn top_of_stack_is_longest_balanced_prefix() {
    let oracle = Oracle::new();
    let mut rng = SplitMix64::new(2024);
    for _ in 0..60 {
        let len = rng.next_below(120) as usize;
        let s = gen::uniform(len, rng.next_u64());
        let tops = linear::scan_trace(&s).unwrap();
        assert_eq!(tops.len(), len + 1);
        for start in 0..=len {
            let suffix = &s[start..];
            let reference = oracle.lbp(suffix).unwrap();
            assert_eq!(tops[start], reference.size(), "suffix {suffix:?} of {s:?}");
            let (tree, size) = linear::lbp(suffix).unwrap();
            assert_eq!(size, reference.size(), "suffix {suffix:?}");
            assert_eq!(tree, reference, "suffix {suffix:?}");
        }
    }
}

proptest! {
    /// step never fails and preserves the stack invariants on any sequence
    /// of inputs, not just ones that arise from parsing real strings.
    #[test]
    fn step_is_total_and_preserves_invariants(cs in proptest::collection::vec(any::<bool>(), 0..200)) {
        let mut forest = SizedForest::seed();
        for c in cs {
            let p = if c { Paren::Open } else { Paren::Close };
            forest = linear::step(p, forest);
            prop_assert!(!forest.is_empty());
            for (tree, size) in forest.entries() {
                prop_assert_eq!(tree.size(), size);
                prop_assert_eq!(size % 2, 0);
            }
        }
    }

    /// The sweep never errors on parenthesis input of any shape.
    #[test]
    fn sweeps_are_total_on_parens(s in "[()]{0,300}") {
        let answer = linear::lbs(&s).unwrap();
        prop_assert!(answer.start + answer.len <= s.len());
        prop_assert_eq!(linear::lbsl(&s).unwrap(), answer.len);
    }

    /// Foreign characters always produce the domain error, never an answer.
    #[test]
    fn foreign_chars_always_error(prefix in "[()]{0,40}", c in any::<char>(), suffix in "[()]{0,40}") {
        prop_assume!(c != '(' && c != ')');
        let s = format!("{prefix}{c}{suffix}");
        let err = linear::lbs(&s).unwrap_err();
        prop_assert_eq!(err.position, prefix.len());
        prop_assert_eq!(err.found, c);
        prop_assert_eq!(linear::lbsl(&s).unwrap_err(), err);
        prop_assert_eq!(lbs_core::parse(&s).unwrap_err(), err);
        prop_assert_eq!(is_balanced(&s).unwrap_err(), err);
    }
}
