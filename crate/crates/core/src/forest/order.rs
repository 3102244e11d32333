//! Vertex orders, biideals, and cuts.
//!
//! Vertices of a forest of weight `n` are named `s₁ … sₙ` in decreasing
//! order for the total order `≥_{h,l}`, which lists them in left-to-right
//! post-order: `s₁` is the leftmost deepest vertex, `sₙ` the root of the
//! last tree. Three order relations are exposed:
//!
//! * `≥_high`: `x ≥_high y` iff `y` lies on the path from `x` to the root
//!   of the tree containing `x` (vertices of distinct trees are never
//!   comparable);
//! * `≥_left`: defined exactly for `≥_high`-incomparable pairs; `x ≥_left y`
//!   iff `x` is more to the left, i.e. the root path of `x` branches off
//!   before that of `y` (reading trees left to right);
//! * `≥_{h,l}`: the common total refinement, `x ≥_{h,l} y` iff `x ≥_high y`
//!   or `x ≥_left y`.
//!
//! A *biideal* is a set of vertices upward closed under both `≥_high` and
//! `≥_left`; the biideals of a weight-`n` forest are exactly the prefixes
//! `{s₁, …, s_k}`, `0 ≤ k ≤ n`. Removing such a prefix severs some subtrees:
//! [`split_at_biideal`] returns them (the `P` part, greater roots first)
//! together with the remaining root-containing forest (the `R` part); these
//! pairs are the terms of the coproduct.

use super::{Forest, Tree};
use crate::{Error, Result};
use std::collections::BTreeSet;

/// 1-based vertex name: `i` refers to `sᵢ`, the `i`-th vertex in decreasing
/// `≥_{h,l}` order (equivalently, in left-to-right post-order).
pub type VertexId = usize;

/// Which of the three vertex orders to compare under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrder {
    High,
    Left,
    HighLeft,
}

/// Outcome of a vertex comparison. `Greater` means the first vertex is
/// strictly greater than the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Greater,
    Less,
    Incomparable,
}

/// Post-order tables for the vertices of a fixed forest. Indices are 0-based
/// post-order positions (so position `i` holds `s_{i+1}`).
pub(crate) struct VertexTable {
    parent: Vec<Option<usize>>,
    size: Vec<usize>,
    /// Root path of each vertex: tree index, then child indices downward.
    key: Vec<Vec<usize>>,
}

impl VertexTable {
    pub fn new(f: &Forest) -> Self {
        let n = f.weight();
        let mut table = VertexTable {
            parent: Vec::with_capacity(n),
            size: Vec::with_capacity(n),
            key: Vec::with_capacity(n),
        };
        let mut path = Vec::new();
        for (ti, tree) in f.trees().iter().enumerate() {
            path.push(ti);
            table.walk(tree, &mut path);
            path.pop();
        }
        table
    }

    /// Appends the subtree at `node` in post-order; returns the node's index.
    fn walk(&mut self, node: &Tree, path: &mut Vec<usize>) -> usize {
        let first_in_subtree = self.size.len();
        let mut child_indices = Vec::with_capacity(node.children().len());
        for (ci, child) in node.children().iter().enumerate() {
            path.push(ci);
            child_indices.push(self.walk(child, path));
            path.pop();
        }
        let idx = self.size.len();
        self.parent.push(None);
        self.size.push(idx - first_in_subtree + 1);
        self.key.push(path.clone());
        for c in child_indices {
            self.parent[c] = Some(idx);
        }
        idx
    }

    pub fn len(&self) -> usize {
        self.size.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Root path of vertex `v`: tree index, then child indices downward.
    pub fn key(&self, v: usize) -> &[usize] {
        &self.key[v]
    }

    /// Number of vertices in the subtree rooted at `v` (including `v`).
    pub fn subtree_size(&self, v: usize) -> usize {
        self.size[v]
    }

    /// Whether `x` lies in the subtree rooted at `y` (including `x == y`).
    /// Post-order makes every subtree a contiguous index interval.
    fn in_subtree(&self, x: usize, y: usize) -> bool {
        y + 1 - self.size[y] <= x && x <= y
    }

    pub fn compare(&self, a: usize, b: usize, order: VertexOrder) -> Comparison {
        if a == b {
            return Comparison::Equal;
        }
        match order {
            VertexOrder::High => {
                if self.in_subtree(a, b) {
                    Comparison::Greater
                } else if self.in_subtree(b, a) {
                    Comparison::Less
                } else {
                    Comparison::Incomparable
                }
            }
            VertexOrder::Left => {
                if self.in_subtree(a, b) || self.in_subtree(b, a) {
                    // ≥_left only relates ≥_high-incomparable vertices
                    Comparison::Incomparable
                } else {
                    // root paths diverge strictly; the lexicographically
                    // smaller path is more to the left, hence greater
                    match self.key[a].cmp(&self.key[b]) {
                        std::cmp::Ordering::Less => Comparison::Greater,
                        std::cmp::Ordering::Greater => Comparison::Less,
                        std::cmp::Ordering::Equal => unreachable!("distinct vertices share a root path"),
                    }
                }
            }
            VertexOrder::HighLeft => {
                if a < b {
                    Comparison::Greater
                } else {
                    Comparison::Less
                }
            }
        }
    }
}

/// Compares the vertices `s_i` and `s_j` of `f` under the given order.
pub fn vertex_compare(
    f: &Forest,
    i: VertexId,
    j: VertexId,
    order: VertexOrder,
) -> Result<Comparison> {
    let n = f.weight();
    for index in [i, j] {
        if index == 0 || index > n {
            return Err(Error::VertexIndex { index, weight: n });
        }
    }
    Ok(VertexTable::new(f).compare(i - 1, j - 1, order))
}

/// Splits off the trees fully contained in the first `k` vertices of the
/// given tree list, recursing into a partially covered tree.
fn split_tree_list(trees: &[Tree], mut k: usize) -> (Vec<Tree>, Vec<Tree>) {
    let mut severed = Vec::new();
    let mut rest = Vec::new();
    for t in trees {
        let w = t.weight();
        if k >= w {
            severed.push(t.clone());
            k -= w;
        } else if k == 0 {
            rest.push(t.clone());
        } else {
            // the root of t stays, the first k vertices of its subtrees go
            let (mut cs, cr) = split_tree_list(t.children(), k);
            severed.append(&mut cs);
            rest.push(Tree::new(cr));
            k = 0;
        }
    }
    (severed, rest)
}

/// Removes the biideal `{s₁, …, s_k}` from `f`. Returns `(P, R)`: `P` is the
/// forest of severed subtrees with roots in decreasing `≥_{h,l}` order
/// (post-order, left to right), `R` is what remains around the original
/// roots. `k = 0` gives `(1, F)` and `k = weight` gives `(F, 1)`.
pub fn split_at_biideal(f: &Forest, k: usize) -> Result<(Forest, Forest)> {
    let n = f.weight();
    if k > n {
        return Err(Error::BiidealSize { size: k, weight: n });
    }
    let (severed, rest) = split_tree_list(f.trees(), k);
    Ok((Forest::new(severed), Forest::new(rest)))
}

/// Decides by the definition whether `vertices` (1-based ids) is a biideal
/// of `f`: upward closed under both `≥_high` and `≥_left`. Quadratic in the
/// weight; the characterization as post-order prefixes is tested against
/// this oracle.
pub fn is_biideal_brute_force(f: &Forest, vertices: &BTreeSet<VertexId>) -> Result<bool> {
    let n = f.weight();
    for &v in vertices {
        if v == 0 || v > n {
            return Err(Error::VertexIndex { index: v, weight: n });
        }
    }
    let table = VertexTable::new(f);
    for &v in vertices {
        for w in 1..=n {
            if vertices.contains(&w) {
                continue;
            }
            let high = table.compare(w - 1, v - 1, VertexOrder::High);
            let left = table.compare(w - 1, v - 1, VertexOrder::Left);
            if high == Comparison::Greater || left == Comparison::Greater {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Removes the subtree reached from `node` by `depth` first-child steps.
fn prune_left_path(node: &Tree, depth: usize) -> Tree {
    debug_assert!(depth >= 1);
    if depth == 1 {
        Tree::new(node.children()[1..].to_vec())
    } else {
        let mut children = node.children().to_vec();
        children[0] = prune_left_path(&children[0], depth - 1);
        Tree::new(children)
    }
}

/// All left cuts of a tree.
///
/// The left path of `t` descends from the root through first children down
/// to `s₁`; a left cut severs a subset `c` of its `d` edges, producing a
/// forest `W^c(t)` whose pieces are listed from the top of the path
/// downward (the piece containing the root comes last). Returns
/// `(|c|, W^c(t))` for all `2^d` subsets, ordered by the subset read as a
/// bitmask with bit 0 the edge at the root; the empty cut yields `t` itself.
pub fn left_cuts(t: &Tree) -> Vec<(usize, Forest)> {
    let mut path_nodes = vec![t];
    while let Some(first) = path_nodes.last().unwrap().children().first() {
        path_nodes.push(first);
    }
    let d = path_nodes.len() - 1;
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0usize..(1 << d) {
        // cut positions p ∈ 1..=d, edge p joining path node p−1 to node p
        let cuts: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        let mut above: Option<usize> = None;
        for &p in cuts.iter().rev() {
            pieces.push(match above {
                None => path_nodes[p].clone(),
                Some(q) => prune_left_path(path_nodes[p], q - p),
            });
            above = Some(p);
        }
        pieces.push(match above {
            None => t.clone(),
            Some(q) => prune_left_path(t, q),
        });
        out.push((cuts.len(), Forest::new(pieces)));
    }
    out
}
