//! The Hopf pairing `⟨−,−⟩` by three independent algorithms, the Gram
//! matrix of a weight, and the dual basis `f_F` obtained by solving
//! `⟨f_F, G⟩ = δ_{F,G}` exactly.
//!
//! The pairing is the unique bilinear form satisfying
//!
//! 1. `⟨1, x⟩ = ε(x)`,
//! 2. `⟨x·y, z⟩ = ⟨y ⊗ x, Δ(z)⟩` (tensor factors paired coordinatewise),
//! 3. `⟨B⁺(x), y⟩ = ⟨x, γ(y)⟩`,
//!
//! where `γ` deletes a leading isolated vertex (`γ(• t₂…t_n) = t₂…t_n`,
//! zero otherwise, `γ(1) = 0`). On forest pairs it is symmetric,
//! homogeneous, `{0,1}`-valued, and non-degenerate in each weight. The
//! variant `⟨−,−⟩'` (axiom 2 untwisted to `⟨x·y, z⟩' = ⟨x ⊗ y, Δ(z)⟩'`,
//! axiom 3 built from `γ'`, which deletes a trailing vertex) is degenerate.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Element;
use crate::forest::{
    b_minus, enumerate_forests, split_at_biideal, Comparison, Forest, Tree, VertexOrder,
    VertexTable,
};
use crate::tamari::{less_eq, m_involution, IndexSet};
use crate::{rat_one, rat_zero, Error, Rat, Result};

/// An [`Element`] expressing some `f_F` in the forest basis.
pub type DualElement = Element;

/// Which end of a forest the grafting-adjoint operator peels.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Peel {
    Leading,
    Trailing,
}

/// `γ` (or `γ'`) on a basis forest: `None` encodes the zero element.
fn peel_vertex(f: &Forest, peel: Peel) -> Option<Forest> {
    let trees = f.trees();
    let (checked, rest): (&Tree, &[Tree]) = match (peel, trees) {
        (_, []) => return None,
        (Peel::Leading, [first, rest @ ..]) => (first, rest),
        (Peel::Trailing, [rest @ .., last]) => (last, rest),
    };
    if checked.children().is_empty() {
        Some(Forest::new(rest.to_vec()))
    } else {
        None
    }
}

/// `γ`: deletes a leading isolated vertex, linearly extended.
pub fn gamma_op(x: &Element) -> Element {
    x.map_linear(|f| match peel_vertex(f, Peel::Leading) {
        Some(g) => Element::basis(g),
        None => Element::zero(),
    })
}

/// `γ'`: deletes a trailing isolated vertex, linearly extended.
pub fn gamma_prime_op(x: &Element) -> Element {
    x.map_linear(|f| match peel_vertex(f, Peel::Trailing) {
        Some(g) => Element::basis(g),
        None => Element::zero(),
    })
}

/// Structural recursion on the axioms. Reduces the left argument: axiom 1
/// on the unit, axiom 3 on a single tree, axiom 2 peeling the last tree
/// otherwise. Terminates because axiom 3 lowers the total weight and axiom
/// 2 lowers (total weight, left tree count) lexicographically. `prune`
/// short-circuits mixed-weight pairs to 0 (homogeneity).
///
/// `Peel` selects the whole convention, not just `γ` versus `γ'`: the
/// pairing of the algebra with its (op, cop) twin reads axiom 2 as
/// `⟨xy, z⟩ = ⟨y ⊗ x, Δ(z)⟩`, while the primed pairing of the algebra with
/// itself reads it untwisted as `⟨xy, z⟩' = ⟨x ⊗ y, Δ(z)⟩'`.
fn pair_forests(
    f: &Forest,
    g: &Forest,
    peel: Peel,
    prune: bool,
    memo: &mut HashMap<(Forest, Forest), Rat>,
) -> Rat {
    if prune && f.weight() != g.weight() {
        return rat_zero();
    }
    if f.is_empty() {
        return if g.is_empty() { rat_one() } else { rat_zero() };
    }
    let key = (f.clone(), g.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let trees = f.trees();
    let value = if let [tree] = trees {
        match peel_vertex(g, peel) {
            Some(g1) => pair_forests(&b_minus(tree), &g1, peel, prune, memo),
            None => rat_zero(),
        }
    } else {
        let (init, last) = trees.split_at(trees.len() - 1);
        let x = Forest::new(init.to_vec());
        let y = Forest::new(last.to_vec());
        let (with_p, with_r) = match peel {
            Peel::Leading => (&y, &x),
            Peel::Trailing => (&x, &y),
        };
        let mut acc = rat_zero();
        for k in 0..=g.weight() {
            let (p, r) = split_at_biideal(g, k).expect("k is at most the weight");
            let left = pair_forests(with_p, &p, peel, prune, memo);
            if left.is_zero() {
                continue;
            }
            acc += left * pair_forests(with_r, &r, peel, prune, memo);
        }
        acc
    };
    memo.insert(key, value.clone());
    value
}

/// Memo table shared by the axiom recursion within one evaluation context.
pub(crate) type PairMemo = HashMap<(Forest, Forest), Rat>;

/// Axiom recursion on basis forests with a caller-held memo, letting bulk
/// sweeps share work across pairs.
pub(crate) fn pairing_recursive_forests(f: &Forest, g: &Forest, memo: &mut PairMemo) -> Rat {
    pair_forests(f, g, Peel::Leading, true, memo)
}

fn pair_elements(x: &Element, y: &Element, peel: Peel, prune: bool) -> Rat {
    let mut memo = HashMap::new();
    let mut acc = rat_zero();
    for (f, cf) in x.iter() {
        for (g, cg) in y.iter() {
            let v = pair_forests(f, g, peel, prune, &mut memo);
            if !v.is_zero() {
                acc += cf * cg * v;
            }
        }
    }
    acc
}

/// `⟨x, y⟩` by structural recursion on the defining axioms.
pub fn pairing_recursive(x: &Element, y: &Element) -> Rat {
    pair_elements(x, y, Peel::Leading, true)
}

/// The same recursion without the homogeneity shortcut; the verify suite
/// uses it to check homogeneity rather than assume it.
pub(crate) fn pairing_recursive_unpruned(x: &Element, y: &Element) -> Rat {
    pair_elements(x, y, Peel::Leading, false)
}

/// The degenerate pairing `⟨x, y⟩'`: `γ'` in axiom 3 and the untwisted
/// axiom 2.
pub fn pairing_prime(x: &Element, y: &Element) -> Rat {
    pair_elements(x, y, Peel::Trailing, true)
}

/// `⟨F, G⟩` by the bijection criterion: the pairing counts decreasing
/// bijections `σ : Vert(F) → Vert(G)`, of which the only candidate sends
/// the i-th post-order vertex of `F` to the (n+1−i)-th of `G`. Returns 1
/// iff that candidate satisfies, for all vertices x, y of `F`:
///
/// 1. `x ≤_high y  ⟹  σ(x) ≥_left σ(y)`,
/// 2. `x ≤_left y  ⟹  σ(x) ≥_{h,l} σ(y)`,
/// 3. `σ(x) ≤_high σ(y)  ⟹  x ≥_left y`,
/// 4. `σ(x) ≤_left σ(y)  ⟹  x ≥_{h,l} y`.
pub fn pairing_bijection(f: &Forest, g: &Forest) -> Rat {
    let n = f.weight();
    if n != g.weight() {
        return rat_zero();
    }
    if n == 0 {
        return rat_one();
    }
    let tf = VertexTable::new(f);
    let tg = VertexTable::new(g);
    let sigma = |v: usize| n - 1 - v;
    use Comparison::{Greater, Less};
    use VertexOrder::{High, HighLeft, Left};
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let (sx, sy) = (sigma(x), sigma(y));
            let holds = (tf.compare(x, y, High) != Less || tg.compare(sx, sy, Left) == Greater)
                && (tf.compare(x, y, Left) != Less || tg.compare(sx, sy, HighLeft) == Greater)
                && (tg.compare(sx, sy, High) != Less || tf.compare(x, y, Left) == Greater)
                && (tg.compare(sx, sy, Left) != Less || tf.compare(x, y, HighLeft) == Greater);
            if !holds {
                return rat_zero();
            }
        }
    }
    rat_one()
}

/// `⟨F, G⟩` through the forest poset: 1 iff `m(G) ≤ F`.
pub fn pairing_tamari(f: &Forest, g: &Forest) -> Rat {
    if f.weight() != g.weight() {
        return rat_zero();
    }
    if less_eq(&m_involution(g), f, &IndexSet::All) {
        rat_one()
    } else {
        rat_zero()
    }
}

/// The matrix `⟨F_i, F_j⟩` over the canonical enumeration of one weight.
/// Symmetric, `{0,1}`-valued, unimodular, with an all-ones first row.
pub struct GramMatrix {
    weight: usize,
    forests: Arc<Vec<Forest>>,
    entries: Vec<Vec<u8>>,
}

impl GramMatrix {
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Canonical enumeration of the weight, indexing rows and columns.
    pub fn forests(&self) -> &[Forest] {
        &self.forests
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }

    /// CSV with canonical forest strings as the first row and column.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for f in self.forests.iter() {
            out.push(',');
            out.push_str(&f.to_string());
        }
        out.push('\n');
        for (f, row) in self.forests.iter().zip(&self.entries) {
            out.push_str(&f.to_string());
            for e in row {
                out.push(',');
                out.push_str(if *e == 0 { "0" } else { "1" });
            }
            out.push('\n');
        }
        out
    }

    /// JSON mirror of the CSV ordering.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "weight": self.weight,
            "forests": self.forests.iter().map(Forest::to_string).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

/// Gram matrix of a weight, entries via [`pairing_bijection`].
pub fn gram_matrix(n: usize) -> GramMatrix {
    let forests = enumerate_forests(n);
    let entries = forests
        .iter()
        .map(|f| {
            forests
                .iter()
                .map(|g| if pairing_bijection(f, g).is_zero() { 0 } else { 1 })
                .collect()
        })
        .collect();
    GramMatrix { weight: n, forests, entries }
}

/// Fraction-free Gauss-Jordan inverse over the integers. Returns
/// `(d, d·A⁻¹)` where `d` is the determinant; `None` when singular. Every
/// division is exact (Bareiss); row swaps flip the sign of `d` through the
/// swapped augmented system, so `d` is always the determinant of `a`.
fn ffgj_inverse(a: &[Vec<u8>]) -> Option<(BigInt, Vec<Vec<BigInt>>)> {
    let n = a.len();
    let width = 2 * n;
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigInt> = row.iter().map(|&e| BigInt::from(e)).collect();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let mut swaps = 0usize;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero())?;
            m.swap(k, swap);
            swaps += 1;
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..width {
                if j == k {
                    continue;
                }
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division is exact");
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if swaps % 2 == 0 { prev.clone() } else { -prev.clone() };
    if swaps % 2 == 1 {
        // the augmented block solved the row-swapped system; undo the sign
        // so that inverse = block / det for the original matrix
        for row in &mut m {
            for e in row.iter_mut().skip(n) {
                *e = -std::mem::take(e);
            }
        }
    }
    let scaled_inverse = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Some((det, scaled_inverse))
}

/// Determinant of the Gram matrix of a weight by forward fraction-free
/// elimination (0 when singular, which non-degeneracy rules out).
pub fn gram_determinant(n: usize) -> BigInt {
    let mut m: Vec<Vec<BigInt>> = gram_matrix(n)
        .entries
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let size = m.len();
    let mut swaps = 0usize;
    let mut prev = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            swaps += 1;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division is exact");
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if swaps % 2 == 0 {
        prev
    } else {
        -prev
    }
}

/// The dual basis of one weight by solving the Gram system exactly:
/// `f_{F_j} = Σ_i (M⁻¹)_{ij} F_i`. Coefficients are asserted integral
/// (they are Möbius values of the forest poset).
pub fn dual_basis_via_gram(n: usize) -> Result<Vec<(Forest, DualElement)>> {
    let gram = gram_matrix(n);
    let (det, scaled) = match ffgj_inverse(&gram.entries) {
        Some(solved) => solved,
        None => return Err(Error::SingularGram { weight: n }),
    };
    let size = gram.forests.len();
    let mut duals = Vec::with_capacity(size);
    for j in 0..size {
        let mut element = Element::zero();
        for i in 0..size {
            let num = &scaled[i][j];
            assert!(
                (num % &det).is_zero(),
                "dual-basis coefficients are integral"
            );
            let coeff = num / &det;
            if !coeff.is_zero() {
                element.add_term(gram.forests[i].clone(), Rat::from_integer(coeff));
            }
        }
        duals.push((gram.forests[j].clone(), element));
    }
    Ok(duals)
}
