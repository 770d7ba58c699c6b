use thiserror::Error;

/// The input alphabet is exactly `'('` and `')'`. Anything else is rejected
/// up front rather than skipped, since skipping would silently shift every
/// reported offset.
///
/// `position` is the byte offset of the leftmost offending character,
/// regardless of the direction the detecting algorithm scans in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("invalid character {found:?} at byte {position}; input must contain only '(' and ')'")]
pub struct InvalidChar {
    pub position: usize,
    pub found: char,
}

/// Locates the leftmost non-parenthesis byte of `s`.
///
/// Called on the cold path once some scan (possibly right-to-left) has
/// already seen a foreign byte, so the error always reports the leftmost
/// occurrence. All bytes before it are single-byte parens, which makes the
/// offset a char boundary.
pub(crate) fn leftmost_invalid(s: &str) -> InvalidChar {
    match validate(s) {
        Err(e) => e,
        Ok(()) => unreachable!("leftmost_invalid called on a pure parenthesis string"),
    }
}

/// Checks that `s` uses only the parenthesis alphabet.
pub(crate) fn validate(s: &str) -> Result<(), InvalidChar> {
    for (i, b) in s.bytes().enumerate() {
        if b != b'(' && b != b')' {
            let found = s[i..].chars().next().expect("offset lies on a char boundary");
            return Err(InvalidChar { position: i, found });
        }
    }
    Ok(())
}
