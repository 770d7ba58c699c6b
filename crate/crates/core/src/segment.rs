use crate::tree::Tree;

/// A located answer: the longest balanced segment of some input.
///
/// `input[start..start + len]` is balanced, `len` is even, and when the
/// computation kept trees, `tree` prints to exactly that substring. Ties on
/// length are resolved towards the smallest `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// Byte offset of the segment start, 0-based.
    pub start: usize,
    /// Segment length in characters.
    pub len: usize,
    /// Parse tree of the segment; `None` on length-only code paths.
    pub tree: Option<Tree>,
}

impl Segment {
    /// One past the last byte of the segment.
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    /// The winning substring of `input`.
    ///
    /// Panics if `input` is shorter than the segment claims, i.e. if called
    /// with a different string than the one that produced this answer.
    pub fn text<'a>(&self, input: &'a str) -> &'a str {
        &input[self.start..self.end()]
    }
}
