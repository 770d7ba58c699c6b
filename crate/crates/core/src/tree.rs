//! Parse trees of the grammar `S → ε | (S)S`.
//!
//! A tree is either the empty word `Nul` or a node `Bin(t, u)` printing as
//! `"(" + print(t) + ")" + print(u)`. Nodes are immutable and reference
//! counted: building `Bin(t, u)` shares `t` and `u` instead of copying them,
//! so a tree recorded as a candidate stays valid while later steps keep
//! extending the stack it came from.
//!
//! Inputs reach tens of millions of characters, where a parse tree is a
//! left- or right-spine millions of nodes deep. Every traversal in this
//! module (printing, sizing, comparison, teardown) therefore uses an
//! explicit heap stack; nothing here recurses.

use std::fmt;
use std::sync::Arc;

/// A parse tree. `Tree::nul()` is the empty word; `Tree::bin(t, u)` is a
/// `( t ) u` node. Cloning is O(1).
#[derive(Clone, Default)]
pub struct Tree(Option<Arc<Node>>);

struct Node {
    left: Tree,
    right: Tree,
}

impl Tree {
    /// The empty tree, printing as `""`.
    pub fn nul() -> Tree {
        Tree(None)
    }

    /// The node printing as `"(" + left + ")" + right`. O(1): both subtrees
    /// are shared, not copied.
    pub fn bin(left: Tree, right: Tree) -> Tree {
        Tree(Some(Arc::new(Node { left, right })))
    }

    pub fn is_nul(&self) -> bool {
        self.0.is_none()
    }

    /// The two subtrees of a `bin` node, or `None` for `nul`.
    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        self.0.as_ref().map(|n| (&n.left, &n.right))
    }

    /// Length of the printed form, i.e. twice the number of `bin` nodes.
    /// Computed without materializing the string.
    pub fn size(&self) -> usize {
        let mut nodes = 0usize;
        let mut work: Vec<&Tree> = vec![self];
        while let Some(t) = work.pop() {
            if let Some(n) = t.0.as_deref() {
                nodes += 1;
                work.push(&n.left);
                work.push(&n.right);
            }
        }
        2 * nodes
    }

    /// The parenthesis string this tree derives.
    pub fn print(&self) -> String {
        let mut out = String::new();
        write_parens(self, &mut out).expect("writing to a String cannot fail");
        out
    }

    /// Constructor notation, e.g. `Bin (Bin Nul Nul) Nul`. This is the
    /// `--mode tree` output format of the CLI.
    pub fn constructor_notation(&self) -> String {
        let mut out = String::new();
        write_constructors(self, &mut out).expect("writing to a String cannot fail");
        out
    }
}

/// Writes `print` output without recursion.
fn write_parens<W: fmt::Write>(tree: &Tree, out: &mut W) -> fmt::Result {
    enum Frame<'a> {
        Visit(&'a Tree),
        Close,
    }
    let mut work = vec![Frame::Visit(tree)];
    while let Some(frame) = work.pop() {
        match frame {
            Frame::Close => out.write_char(')')?,
            Frame::Visit(t) => {
                if let Some(n) = t.0.as_deref() {
                    out.write_char('(')?;
                    work.push(Frame::Visit(&n.right));
                    work.push(Frame::Close);
                    work.push(Frame::Visit(&n.left));
                }
            }
        }
    }
    Ok(())
}

/// Writes constructor notation without recursion. A `bin` child of a `bin`
/// node is parenthesized, `nul` children are not.
fn write_constructors<W: fmt::Write>(tree: &Tree, out: &mut W) -> fmt::Result {
    enum Frame<'a> {
        Visit { tree: &'a Tree, wrap: bool },
        Text(&'static str),
    }
    let mut work = vec![Frame::Visit { tree, wrap: false }];
    while let Some(frame) = work.pop() {
        match frame {
            Frame::Text(s) => out.write_str(s)?,
            Frame::Visit { tree, wrap } => match tree.0.as_deref() {
                None => out.write_str("Nul")?,
                Some(n) => {
                    if wrap {
                        out.write_char('(')?;
                        work.push(Frame::Text(")"));
                    }
                    out.write_str("Bin ")?;
                    work.push(Frame::Visit { tree: &n.right, wrap: !n.right.is_nul() });
                    work.push(Frame::Text(" "));
                    work.push(Frame::Visit { tree: &n.left, wrap: !n.left.is_nul() });
                }
            },
        }
    }
    Ok(())
}

impl fmt::Display for Tree {
    /// Displays as the printed parenthesis string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parens(self, f)
    }
}

impl fmt::Debug for Tree {
    /// Debugs as constructor notation, which reads better in assertions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_constructors(self, f)
    }
}

impl PartialEq for Tree {
    /// Structural equality. Shared subtrees short-circuit by pointer.
    fn eq(&self, other: &Self) -> bool {
        let mut work: Vec<(&Tree, &Tree)> = vec![(self, other)];
        while let Some((a, b)) = work.pop() {
            match (a.0.as_ref(), b.0.as_ref()) {
                (None, None) => {}
                (Some(x), Some(y)) => {
                    if Arc::ptr_eq(x, y) {
                        continue;
                    }
                    work.push((&x.left, &y.left));
                    work.push((&x.right, &y.right));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Tree {}

impl Drop for Node {
    /// Unlinks descendants iteratively. The derived drop would recurse once
    /// per level and overflow the call stack on spine-shaped trees.
    fn drop(&mut self) {
        if self.left.0.is_none() && self.right.0.is_none() {
            return;
        }
        let mut work: Vec<Arc<Node>> = Vec::new();
        work.extend(self.left.0.take());
        work.extend(self.right.0.take());
        while let Some(arc) = work.pop() {
            if let Some(mut node) = Arc::into_inner(arc) {
                work.extend(node.left.0.take());
                work.extend(node.right.0.take());
                // `node` now has nul children, so dropping it here is a no-op.
            }
        }
    }
}
