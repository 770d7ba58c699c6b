//! Forests: the spine representation of left-partially balanced strings.
//!
//! A string is left-partially balanced when prepending enough `'('` makes it
//! balanced. Such a string factors uniquely into balanced blocks separated
//! by single `')'` characters; a [`Forest`] holds the parse tree of each
//! block, in print order. The first tree doubles as the top of the parser
//! stack, so the empty string is the forest `[Nul]` and a forest is never
//! empty.

use std::fmt;

use crate::tree::Tree;

/// Error for constructors that would produce an empty forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("a forest must contain at least one tree")]
pub struct EmptyForest;

/// A non-empty stack of trees. Printed as the trees in order, with one `')'`
/// between consecutive trees.
///
/// Stored bottom-first internally so pushing and popping the top is O(1);
/// the public order (iteration, `from_trees`, `Debug`) is always top-first,
/// i.e. leftmost printed tree first.
#[derive(Clone, PartialEq, Eq)]
pub struct Forest {
    /// Invariant: non-empty. Last element is the top of the stack.
    rev: Vec<Tree>,
}

impl Forest {
    /// The forest of the empty string, `[Nul]`.
    pub fn empty_string() -> Forest {
        Forest::singleton(Tree::nul())
    }

    pub fn singleton(tree: Tree) -> Forest {
        Forest { rev: vec![tree] }
    }

    /// Builds a forest from trees given top-first (leftmost printed first).
    pub fn from_trees<I>(trees: I) -> Result<Forest, EmptyForest>
    where
        I: IntoIterator<Item = Tree>,
    {
        let mut rev: Vec<Tree> = trees.into_iter().collect();
        if rev.is_empty() {
            return Err(EmptyForest);
        }
        rev.reverse();
        Ok(Forest { rev })
    }

    pub(crate) fn from_stack(rev: Vec<Tree>) -> Forest {
        debug_assert!(!rev.is_empty());
        Forest { rev }
    }

    /// Number of trees; at least 1.
    pub fn len(&self) -> usize {
        self.rev.len()
    }

    /// A forest is never empty; provided for clippy-style symmetry.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The top of the stack, i.e. the leftmost printed tree.
    pub fn top(&self) -> &Tree {
        self.rev.last().expect("forest is non-empty")
    }

    /// Trees in print order (top of stack first).
    pub fn trees(&self) -> impl DoubleEndedIterator<Item = &Tree> {
        self.rev.iter().rev()
    }

    /// The single tree of a singleton forest, or `None`.
    pub fn into_single_tree(mut self) -> Option<Tree> {
        if self.rev.len() == 1 {
            self.rev.pop()
        } else {
            None
        }
    }

    /// Prints the represented left-partially balanced string.
    ///
    /// Follows the head-directed rules rather than join-with-`')'`
    /// concatenation (the two agree; tests check it): emit `'('` and expose
    /// both children when the head is a node, emit `')'` and drop the head
    /// when it is `Nul` and more trees follow.
    pub fn print(&self) -> String {
        let mut out = String::new();
        // Work stack of borrowed trees, top of forest at the end.
        let mut work: Vec<&Tree> = self.rev.iter().collect();
        while let Some(tree) = work.pop() {
            match tree.children() {
                Some((left, right)) => {
                    out.push('(');
                    work.push(right);
                    work.push(left);
                }
                None => {
                    if !work.is_empty() {
                        out.push(')');
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Forest {
    /// Top-first list of constructor notations, e.g. `[Bin Nul Nul, Nul]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.trees().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t:?}")?;
        }
        f.write_str("]")
    }
}

/// A forest whose entries carry the printed length of their tree, so the
/// combine step of the linear scan costs O(1) instead of re-measuring
/// subtrees. Sizes are maintained by construction: entries are only created
/// from whole trees or by the scan's own push/combine rules.
#[derive(Clone, PartialEq, Eq)]
pub struct SizedForest {
    /// Invariant: non-empty; last element is the top; each size equals the
    /// tree's printed length (hence even).
    rev: Vec<(Tree, usize)>,
}

impl SizedForest {
    /// The scan's seed: `[(Nul, 0)]`.
    pub fn seed() -> SizedForest {
        SizedForest { rev: vec![(Tree::nul(), 0)] }
    }

    /// Builds a sized forest from trees given top-first, measuring each one.
    pub fn from_trees<I>(trees: I) -> Result<SizedForest, EmptyForest>
    where
        I: IntoIterator<Item = Tree>,
    {
        let mut rev: Vec<(Tree, usize)> = trees
            .into_iter()
            .map(|t| {
                let size = t.size();
                (t, size)
            })
            .collect();
        if rev.is_empty() {
            return Err(EmptyForest);
        }
        rev.reverse();
        Ok(SizedForest { rev })
    }

    pub fn len(&self) -> usize {
        self.rev.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Top entry: the leftmost printed tree and its size.
    pub fn top(&self) -> (&Tree, usize) {
        let (t, n) = self.rev.last().expect("forest is non-empty");
        (t, *n)
    }

    /// Entries in print order (top first).
    pub fn entries(&self) -> impl DoubleEndedIterator<Item = (&Tree, usize)> {
        self.rev.iter().rev().map(|(t, n)| (t, *n))
    }

    /// Drops the size annotations.
    pub fn into_forest(self) -> Forest {
        Forest::from_stack(self.rev.into_iter().map(|(t, _)| t).collect())
    }

    pub(crate) fn push(&mut self, tree: Tree, size: usize) {
        self.rev.push((tree, size));
    }

    pub(crate) fn pop(&mut self) -> Option<(Tree, usize)> {
        self.rev.pop()
    }

    /// Resets to the seed, reusing the allocation.
    pub(crate) fn reset(&mut self) {
        self.rev.clear();
        self.rev.push((Tree::nul(), 0));
    }
}

impl fmt::Debug for SizedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (t, n)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({t:?}, {n})")?;
        }
        f.write_str("]")
    }
}
