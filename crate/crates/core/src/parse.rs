//! Parsing parenthesis strings back into trees and forests.
//!
//! [`parse_forest`] inverts [`Forest::print`]: it scans the input right to
//! left, pushing a fresh `Nul` for every `')'` and merging the two most
//! recent trees into one node for every `'('`. A `'('` that arrives when the
//! stack holds a single tree has no sibling pair to wrap, which is exactly
//! the case where the input is not left-partially balanced.
//!
//! [`parse`] accepts only fully balanced strings: those whose forest is a
//! single tree.

use crate::error::{validate, InvalidChar};
use crate::forest::Forest;
use crate::tree::Tree;

/// A validated input character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Paren {
    Open,
    Close,
}

impl Paren {
    pub fn from_byte(b: u8) -> Option<Paren> {
        match b {
            b'(' => Some(Paren::Open),
            b')' => Some(Paren::Close),
            _ => None,
        }
    }

    pub fn from_char(c: char) -> Option<Paren> {
        u8::try_from(c).ok().and_then(Paren::from_byte)
    }

    pub fn as_char(self) -> char {
        match self {
            Paren::Open => '(',
            Paren::Close => ')',
        }
    }
}

/// Parses a left-partially balanced string into the unique forest printing
/// back to it. Returns `Ok(None)` when the string is not left-partially
/// balanced and `Err` on characters outside the alphabet.
///
/// The alphabet is checked for the whole input first: a foreign character
/// is a domain error even when the structural failure that would let the
/// scan stop early sits to its right.
pub fn parse_forest(s: &str) -> Result<Option<Forest>, InvalidChar> {
    validate(s)?;
    let mut stack: Vec<Tree> = Vec::new();
    stack.push(Tree::nul());
    for b in s.bytes().rev() {
        match b {
            b')' => stack.push(Tree::nul()),
            b'(' => {
                if stack.len() < 2 {
                    // No sibling pair to wrap: '(' appears too early.
                    return Ok(None);
                }
                let left = stack.pop().expect("len checked");
                let right = stack.pop().expect("len checked");
                stack.push(Tree::bin(left, right));
            }
            _ => unreachable!("alphabet was validated"),
        }
    }
    Ok(Some(Forest::from_stack(stack)))
}

/// Parses a balanced string into its unique parse tree. Returns `Ok(None)`
/// when the string is unbalanced and `Err` on characters outside the
/// alphabet.
pub fn parse(s: &str) -> Result<Option<Tree>, InvalidChar> {
    Ok(parse_forest(s)?.and_then(Forest::into_single_tree))
}

/// Counter check for balance: the running sum of +1 per `'('` and -1 per
/// `')'` must stay non-negative and end at zero. Kept deliberately separate
/// from the parsing machinery so the two can vouch for each other in tests.
///
/// As with [`parse_forest`], a foreign character anywhere in the input is a
/// domain error, even past the point where balance already failed.
pub fn is_balanced(s: &str) -> Result<bool, InvalidChar> {
    validate(s)?;
    let mut depth: u64 = 0;
    for b in s.bytes() {
        match b {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return Ok(false);
                }
                depth -= 1;
            }
            _ => unreachable!("alphabet was validated"),
        }
    }
    Ok(depth == 0)
}
