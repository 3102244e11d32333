//! Planar rooted trees and forests.
//!
//! A planar rooted tree is a root with an ordered (left-to-right) list of
//! planar subtrees; a planar forest is an ordered list of planar trees. The
//! number of vertices of a forest is its *weight*; there are Catalan-many
//! forests of each weight. The empty forest is the unit of the concatenation
//! product and prints as `1`.
//!
//! Every nonempty forest decomposes uniquely as `B⁺(F₁) · F₂` where `B⁺`
//! grafts a forest under a new common root; this decomposition drives both
//! the canonical enumeration order and the recursive structure of most
//! algorithms in the crate.

mod enumerate;
mod order;
mod parse;

pub use enumerate::{enumerate_forests, enumerate_trees};
pub use order::{
    is_biideal_brute_force, left_cuts, split_at_biideal, vertex_compare, Comparison,
    VertexId, VertexOrder,
};
pub(crate) use order::VertexTable;
pub use parse::parse_forest;

use std::cmp::Ordering;
use std::fmt;

/// A planar rooted tree: a root vertex with an ordered list of subtrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    children: Vec<Tree>,
}

/// A planar forest: an ordered list of planar trees.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Tree {
    /// Tree with the given subtrees, in left-to-right order.
    pub fn new(children: Vec<Tree>) -> Self {
        Tree { children }
    }

    /// The single-vertex tree `[]`.
    pub fn leaf() -> Self {
        Tree { children: Vec::new() }
    }

    /// Subtrees of the root, left to right.
    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// Number of vertices.
    pub fn weight(&self) -> usize {
        1 + self.children.iter().map(Tree::weight).sum::<usize>()
    }
}

impl Forest {
    /// The empty forest (the unit `1`).
    pub fn empty() -> Self {
        Forest { trees: Vec::new() }
    }

    /// Forest with the given trees, in left-to-right order.
    pub fn new(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    /// The single-vertex forest `[]`.
    pub fn vertex() -> Self {
        Forest::new(vec![Tree::leaf()])
    }

    /// The trees, left to right.
    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    /// Whether this is the empty forest.
    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Number of trees.
    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    /// Number of vertices.
    pub fn weight(&self) -> usize {
        self.trees.iter().map(Tree::weight).sum()
    }

    /// Concatenation `self · other` (the product on basis forests).
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        trees.extend(self.trees.iter().cloned());
        trees.extend(other.trees.iter().cloned());
        Forest::new(trees)
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Forest {
        Forest::new(vec![t])
    }
}

/// Grafting: the tree whose root has the trees of `f` as subtrees.
pub fn b_plus(f: &Forest) -> Tree {
    Tree::new(f.trees.clone())
}

/// Root deletion: the forest of subtrees of the root of `t`. Inverse of
/// [`b_plus`] on trees.
pub fn b_minus(t: &Tree) -> Forest {
    Forest::new(t.children.clone())
}

fn weight_of(trees: &[Tree]) -> usize {
    trees.iter().map(Tree::weight).sum()
}

/// Canonical order on forests of equal or different weights: weight first,
/// then recursively on the decomposition `B⁺(F₁)·F₂` by `(F₁, F₂)` with `F₁`
/// itself compared weight-first. Within a fixed weight this is exactly the
/// rank in [`enumerate_forests`].
fn cmp_tree_lists(a: &[Tree], b: &[Tree]) -> Ordering {
    weight_of(a).cmp(&weight_of(b)).then_with(|| {
        match (a.split_first(), b.split_first()) {
            (None, None) => Ordering::Equal,
            (Some((ta, ra)), Some((tb, rb))) => {
                cmp_tree_lists(&ta.children, &tb.children).then_with(|| cmp_tree_lists(ra, rb))
            }
            // equal weights, so either both lists are empty or neither is
            _ => unreachable!(),
        }
    })
}

impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_tree_lists(&self.trees, &other.trees)
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_tree_lists(&self.children, &other.children)
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text form of a forest: trees separated by single spaces,
/// children juxtaposed inside brackets, `1` for the empty forest.
pub fn print_forest(f: &Forest) -> String {
    f.to_string()
}
