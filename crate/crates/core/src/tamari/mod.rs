//! Planar binary trees, the Tamari order, the bijection `η` onto forests,
//! the mirror involution `m`, and the forest poset with its Möbius function
//! and dual-basis consequences.

mod dual;
mod poset;

pub use dual::{dual_basis_via_mobius, dual_product, forest_in_dual_basis};
pub use poset::{
    admissible_moves, boundary_closure, build_poset, less_eq, ForestPoset, IndexSet,
};
pub(crate) use poset::{height_sum, moves_with_parent};

use crate::forest::{b_minus, b_plus, Forest};
use crate::{Error, Result};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// A planar binary tree: a leaf, or an internal node with two subtrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    /// Number of internal nodes (one less than the number of leaves).
    pub fn internal_nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Grafting on a common root: `t₁ ∨ t₂`. Every non-leaf binary tree is
/// uniquely of this form.
pub fn vee(t1: &BinaryTree, t2: &BinaryTree) -> BinaryTree {
    BinaryTree::Node(Box::new(t1.clone()), Box::new(t2.clone()))
}

/// Grafts `t2` onto the rightmost leaf of `t1`; associative, with the leaf
/// as two-sided unit.
pub fn backslash(t1: &BinaryTree, t2: &BinaryTree) -> BinaryTree {
    match t1 {
        BinaryTree::Leaf => t2.clone(),
        BinaryTree::Node(l, r) => BinaryTree::Node(l.clone(), Box::new(backslash(r, t2))),
    }
}

/// The bijection from binary trees to forests:
/// `η(leaf) = 1`, `η(t₁ ∨ t₂) = B⁺(η(t₁)) · η(t₂)`. Binary trees with `n`
/// internal nodes map onto forests of weight `n`.
pub fn eta(t: &BinaryTree) -> Forest {
    match t {
        BinaryTree::Leaf => Forest::empty(),
        BinaryTree::Node(l, r) => Forest::from(b_plus(&eta(l))).concat(&eta(r)),
    }
}

/// Inverse of [`eta`]: the first tree's subtrees go left of the `∨`, the
/// remaining trees go right.
pub fn eta_inverse(f: &Forest) -> BinaryTree {
    match f.trees().split_first() {
        None => BinaryTree::Leaf,
        Some((first, rest)) => BinaryTree::Node(
            Box::new(eta_inverse(&b_minus(first))),
            Box::new(eta_inverse(&Forest::new(rest.to_vec()))),
        ),
    }
}

/// All single right rotations of `t`: each occurrence of `(a ∨ b) ∨ c`
/// rewritten to `a ∨ (b ∨ c)`, anywhere in the tree.
fn rotations(t: &BinaryTree) -> Vec<BinaryTree> {
    let mut out = Vec::new();
    if let BinaryTree::Node(l, r) = t {
        if let BinaryTree::Node(a, b) = &**l {
            out.push(BinaryTree::Node(
                a.clone(),
                Box::new(BinaryTree::Node(b.clone(), r.clone())),
            ));
        }
        for l2 in rotations(l) {
            out.push(BinaryTree::Node(Box::new(l2), r.clone()));
        }
        for r2 in rotations(r) {
            out.push(BinaryTree::Node(l.clone(), Box::new(r2)));
        }
    }
    out
}

/// The Tamari order: `t₁ ≤ t₂` iff `t₂` is reachable from `t₁` by right
/// rotations.
pub fn tamari_less_eq(t1: &BinaryTree, t2: &BinaryTree) -> bool {
    if t1.internal_nodes() != t2.internal_nodes() {
        return false;
    }
    let mut seen = HashSet::from([t1.clone()]);
    let mut queue = VecDeque::from([t1.clone()]);
    while let Some(t) = queue.pop_front() {
        if &t == t2 {
            return true;
        }
        for next in rotations(&t) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// The mirror involution on forests: `m(1) = 1` and
/// `m(B⁺(F₁)·F₂) = B⁺(m(F₂))·m(F₁)`. Order-reversing on each `𝐅(n)`; sends
/// the all-vertex forest to the ladder and back.
pub fn m_involution(f: &Forest) -> Forest {
    match f.trees().split_first() {
        None => Forest::empty(),
        Some((first, rest)) => {
            let rest = Forest::new(rest.to_vec());
            Forest::from(b_plus(&m_involution(&rest))).concat(&m_involution(&b_minus(first)))
        }
    }
}

/// All binary trees with `n` internal nodes, in the order induced by the
/// canonical forest enumeration through `η`.
pub fn enumerate_binary_trees(n: usize) -> Vec<BinaryTree> {
    crate::forest::enumerate_forests(n).iter().map(eta_inverse).collect()
}

/// Parses the text form of a binary tree: `.` is a leaf,
/// `( left right )` an internal node; whitespace between tokens is ignored.
pub fn parse_binary_tree(input: &str) -> Result<BinaryTree> {
    struct Cursor<'a> {
        bytes: &'a [u8],
        pos: usize,
    }
    impl Cursor<'_> {
        fn skip_ws(&mut self) {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }
        fn err<T>(&self, message: &str) -> Result<T> {
            Err(Error::Parse { offset: self.pos, message: message.to_string() })
        }
    }
    fn parse_node(c: &mut Cursor) -> Result<BinaryTree> {
        c.skip_ws();
        match c.bytes.get(c.pos).copied() {
            Some(b'.') => {
                c.pos += 1;
                Ok(BinaryTree::Leaf)
            }
            Some(b'(') => {
                c.pos += 1;
                let l = parse_node(c)?;
                let r = parse_node(c)?;
                c.skip_ws();
                if c.bytes.get(c.pos) != Some(&b')') {
                    return c.err("expected ')'");
                }
                c.pos += 1;
                Ok(BinaryTree::Node(Box::new(l), Box::new(r)))
            }
            Some(_) => c.err("expected '.' or '('"),
            None => c.err("unexpected end of input"),
        }
    }
    let mut c = Cursor { bytes: input.as_bytes(), pos: 0 };
    let t = parse_node(&mut c)?;
    c.skip_ws();
    if c.pos != c.bytes.len() {
        return c.err("unexpected input after binary tree");
    }
    Ok(t)
}
