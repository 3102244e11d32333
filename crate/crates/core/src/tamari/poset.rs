//! The partial order on the forests of a fixed weight.
//!
//! An *admissible move* detaches the leftmost child `s_j` of a vertex `u`
//! (together with its subtree) and re-inserts it immediately to the left of
//! `u`: among `u`'s siblings when `u` has a parent, or as a new root
//! immediately left of `u`'s tree when `u` is a root. The move is labeled by
//! the rank `j` of the moved vertex in the source forest. `F ≤_I G` holds
//! when `G` is reachable from `F` by moves whose labels lie in `I`,
//! re-evaluating ranks on every intermediate forest.
//!
//! Every move decreases the total vertex depth by the weight of the moved
//! subtree, so the move graph is acyclic, reachability is a partial order,
//! and the moves are precisely its covering relations. The all-vertex forest
//! `• ⋯ •` is the unique maximum and the ladder the unique minimum of the
//! full order.

use crate::forest::{enumerate_forests, Forest, Tree, VertexId, VertexTable};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

/// A set of admissible move labels: all of them, or an explicit subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IndexSet {
    All,
    Subset(BTreeSet<usize>),
}

impl IndexSet {
    pub fn subset(indices: impl IntoIterator<Item = usize>) -> Self {
        IndexSet::Subset(indices.into_iter().collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        match self {
            IndexSet::All => true,
            IndexSet::Subset(s) => s.contains(&i),
        }
    }
}

/// Total vertex depth (roots at depth zero). Every admissible move strictly
/// decreases this, by the weight of the moved subtree.
pub(crate) fn height_sum(f: &Forest) -> usize {
    fn go(trees: &[Tree], depth: usize) -> usize {
        trees.iter().map(|t| depth + go(t.children(), depth + 1)).sum()
    }
    go(f.trees(), 0)
}

/// Rebuilds `f` with the move at `u_path` applied: the first child of the
/// vertex at that root path is detached and re-inserted immediately to the
/// left of it in its containing list.
fn apply_move(f: &Forest, u_path: &[usize]) -> Forest {
    fn go(list: &[Tree], path: &[usize]) -> Vec<Tree> {
        let pos = path[0];
        let mut out = list.to_vec();
        if path.len() == 1 {
            let u = &list[pos];
            let moved = u.children()[0].clone();
            out[pos] = Tree::new(u.children()[1..].to_vec());
            out.insert(pos, moved);
        } else {
            out[pos] = Tree::new(go(list[pos].children(), &path[1..]));
        }
        out
    }
    Forest::new(go(f.trees(), u_path))
}

/// All admissible moves on `f`, as `(j, p, G)`: the moved vertex `s_j`, its
/// former parent `s_p`, and the resulting forest. One move per non-leaf
/// vertex of `f`, in increasing order of `j`.
pub(crate) fn moves_with_parent(f: &Forest) -> Vec<(VertexId, VertexId, Forest)> {
    let table = VertexTable::new(f);
    let mut out = Vec::new();
    for v in 0..table.len() {
        let Some(u) = table.parent(v) else { continue };
        if table.key(v).last() != Some(&0) {
            continue; // only the leftmost child of u may move
        }
        let g = apply_move(f, table.key(u));
        debug_assert_eq!(height_sum(&g) + table.subtree_size(v), height_sum(f));
        out.push((v + 1, u + 1, g));
    }
    out
}

/// The admissible moves on `f` with labels in `index_set`, as
/// `(label, resulting forest)` pairs.
pub fn admissible_moves(f: &Forest, index_set: &IndexSet) -> Vec<(VertexId, Forest)> {
    moves_with_parent(f)
        .into_iter()
        .filter(|(j, _, _)| index_set.contains(*j))
        .map(|(j, _, g)| (j, g))
        .collect()
}

/// Forests reachable from `g` by moves that cross the `k`-boundary: moves
/// whose moved vertex `s_j` lies among the `k` greatest vertices while its
/// former parent `s_p` does not (`j ≤ k < p`), re-evaluated per intermediate
/// forest. Includes `g` itself.
///
/// Such moves preserve the post-order vertex sequence, and the closure has a
/// unique maximal element: the concatenation `P·R` of the biideal split of
/// `g` at `k`. Consequently a concatenation `F₁·F₂` with `weight(F₁) = k`
/// lies in the closure exactly when `F₁ ⊗ F₂` is a coproduct term of `g`,
/// which is how the forest order recovers the coproduct.
pub fn boundary_closure(g: &Forest, k: usize) -> BTreeSet<Forest> {
    let mut seen = BTreeSet::from([g.clone()]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(f) = queue.pop_front() {
        for (j, p, h) in moves_with_parent(&f) {
            if j <= k && k < p && seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// The poset `(𝐅(n), ≤_I)`: elements in canonical order, covering relations
/// with labels, the full order matrix, and the Möbius function.
pub struct ForestPoset {
    weight: usize,
    index_set: IndexSet,
    elements: Arc<Vec<Forest>>,
    index: HashMap<Forest, usize>,
    covers: Vec<(usize, usize, VertexId)>,
    leq: Vec<Vec<bool>>,
    mobius: Vec<Vec<i64>>,
}

impl ForestPoset {
    fn build(weight: usize, index_set: IndexSet) -> ForestPoset {
        let elements = enumerate_forests(weight);
        let n = elements.len();
        let index: HashMap<Forest, usize> =
            elements.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();

        // each admissible move strictly drops the height sum, so the move
        // graph is acyclic; moves are the covers of the reachability order
        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); n];
        for (a, f) in elements.iter().enumerate() {
            for (j, g) in admissible_moves(f, &index_set) {
                let b = index[&g];
                covers.push((a, b, j));
                up[a].push(b);
            }
        }

        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            leq[a][a] = true;
            let mut queue = VecDeque::from([a]);
            while let Some(x) = queue.pop_front() {
                for &y in &up[x] {
                    if !leq[a][y] {
                        leq[a][y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..a {
                assert!(!(leq[a][b] && leq[b][a]), "order must be antisymmetric");
            }
        }

        // Möbius recurrence μ(a,b) = −Σ_{a≤c<b} μ(a,c), filled along a linear
        // extension (height sum strictly decreases upward)
        let mut extension: Vec<usize> = (0..n).collect();
        extension.sort_by_key(|&i| std::cmp::Reverse(height_sum(&elements[i])));
        let mut mobius = vec![vec![0i64; n]; n];
        for a in 0..n {
            mobius[a][a] = 1;
            for &b in &extension {
                if b == a || !leq[a][b] {
                    continue;
                }
                let mut sum = 0i64;
                for c in 0..n {
                    if c != b && leq[a][c] && leq[c][b] {
                        sum += mobius[a][c];
                    }
                }
                mobius[a][b] = -sum;
            }
        }

        ForestPoset { weight, index_set, elements, index, covers, leq, mobius }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[Forest] {
        &self.elements
    }

    /// Covering relations `(lower, upper, label)` as element indices.
    pub fn covers(&self) -> &[(usize, usize, VertexId)] {
        &self.covers
    }

    pub fn index_of(&self, f: &Forest) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn le_indices(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn le(&self, f: &Forest, g: &Forest) -> bool {
        match (self.index_of(f), self.index_of(g)) {
            (Some(a), Some(b)) => self.le_indices(a, b),
            _ => false,
        }
    }

    /// The full Möbius matrix; zero where the order does not hold.
    pub fn mobius_matrix(&self) -> &[Vec<i64>] {
        &self.mobius
    }

    pub fn mobius_of(&self, f: &Forest, g: &Forest) -> Option<i64> {
        Some(self.mobius[self.index_of(f)?][self.index_of(g)?])
    }

    /// Hasse diagram in DOT form: one node per forest labeled with its text
    /// form, one `lower -> upper` edge per cover with the move label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (i, f) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{f}\"];\n"));
        }
        let mut edges = self.covers.clone();
        edges.sort();
        for (a, b, j) in edges {
            out.push_str(&format!("  n{a} -> n{b} [label={j}];\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Möbius matrix as CSV: first row and column are the canonical forest
    /// strings.
    pub fn mobius_csv(&self) -> String {
        let mut out = String::new();
        for f in self.elements.iter() {
            out.push(',');
            out.push_str(&f.to_string());
        }
        out.push('\n');
        for (i, f) in self.elements.iter().enumerate() {
            out.push_str(&f.to_string());
            for v in &self.mobius[i] {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

fn poset_cache() -> &'static Mutex<HashMap<(usize, IndexSet), Arc<ForestPoset>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, IndexSet), Arc<ForestPoset>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds (or fetches from the process-wide cache) the poset `(𝐅(n), ≤_I)`.
pub fn build_poset(weight: usize, index_set: &IndexSet) -> Arc<ForestPoset> {
    let key = (weight, index_set.clone());
    if let Some(hit) = poset_cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let built = Arc::new(ForestPoset::build(weight, index_set.clone()));
    let mut guard = poset_cache().lock().unwrap();
    Arc::clone(guard.entry(key).or_insert(built))
}

/// `F ≤_I G`: reachability by moves with labels in `I`. False on weight
/// mismatch.
pub fn less_eq(f: &Forest, g: &Forest, index_set: &IndexSet) -> bool {
    if f.weight() != g.weight() {
        return false;
    }
    build_poset(f.weight(), index_set).le(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn moves(s: &str) -> Vec<(usize, String)> {
        admissible_moves(&f(s), &IndexSet::All)
            .into_iter()
            .map(|(j, g)| (j, g.to_string()))
            .collect()
    }

    #[test]
    fn moves_golden_on_the_grafted_tree() {
        assert_eq!(
            moves("[[[]][]]"),
            [(1, "[[][][]]".to_string()), (2, "[[]] [[]]".to_string())]
        );
    }

    #[test]
    fn moves_golden_small() {
        assert_eq!(moves("[] [] []"), []);
        assert_eq!(moves("[[]]"), [(1, "[] []".to_string())]);
        assert_eq!(moves("[] [[]]"), [(2, "[] [] []".to_string())]);
        assert_eq!(moves("[[]] []"), [(1, "[] [] []".to_string())]);
        assert_eq!(
            moves("[[[]]]"),
            [(1, "[[][]]".to_string()), (2, "[[]] []".to_string())]
        );
    }

    #[test]
    fn index_set_filters_moves() {
        assert_eq!(
            admissible_moves(&f("[[[]]]"), &IndexSet::subset([2]))
                .into_iter()
                .map(|(j, g)| (j, g.to_string()))
                .collect::<Vec<_>>(),
            [(2, "[[]] []".to_string())]
        );
    }

    #[test]
    fn poset_weight_two() {
        let p = build_poset(2, &IndexSet::All);
        assert_eq!(p.covers(), [(1, 0, 1)]);
        assert!(p.le(&f("[[]]"), &f("[] []")));
        assert!(!p.le(&f("[] []"), &f("[[]]")));
    }

    #[test]
    fn poset_weight_three_covers() {
        // elements: 0 = [] [] [], 1 = [] [[]], 2 = [[]] [], 3 = [[][]], 4 = [[[]]]
        let p = build_poset(3, &IndexSet::All);
        let mut covers = p.covers().to_vec();
        covers.sort();
        assert_eq!(covers, [(1, 0, 2), (2, 0, 1), (3, 1, 1), (4, 2, 2), (4, 3, 1)]);
    }

    #[test]
    fn restricted_poset_keeps_only_matching_labels() {
        let p = build_poset(3, &IndexSet::subset([2]));
        let mut covers = p.covers().to_vec();
        covers.sort();
        assert_eq!(covers, [(1, 0, 2), (4, 2, 2)]);
        assert!(!p.le(&f("[[][]]"), &f("[] [[]]")));
    }

    #[test]
    fn less_eq_examples() {
        let all = IndexSet::All;
        assert!(less_eq(&f("[[[]]]"), &f("[] [] []"), &all));
        assert!(less_eq(&f("[[[]]]"), &f("[[[]]]"), &all));
        assert!(!less_eq(&f("[[]] []"), &f("[] [[]]"), &all));
        assert!(!less_eq(&f("[]"), &f("[] []"), &all));
    }

    #[test]
    fn extremes_at_weight_four() {
        let p = build_poset(4, &IndexSet::All);
        let top = f("[] [] [] []");
        let bottom = f("[[[[]]]]");
        for g in p.elements() {
            assert!(p.le(g, &top), "{g} ≤ top");
            assert!(p.le(&bottom, g), "bottom ≤ {g}");
        }
    }

    #[test]
    fn mobius_golden_weight_three() {
        let p = build_poset(3, &IndexSet::All);
        assert_eq!(p.mobius_of(&f("[[][]]"), &f("[] [] []")), Some(0));
        assert_eq!(p.mobius_of(&f("[[]] []"), &f("[] [] []")), Some(-1));
        for g in p.elements() {
            assert_eq!(p.mobius_of(g, g), Some(1));
        }
    }

    #[test]
    fn mobius_defining_recurrence() {
        for n in 0..=5 {
            let p = build_poset(n, &IndexSet::All);
            let size = p.elements().len();
            for a in 0..size {
                for b in 0..size {
                    if !p.le_indices(a, b) {
                        assert_eq!(p.mobius_matrix()[a][b], 0);
                        continue;
                    }
                    let total: i64 = (0..size)
                        .filter(|&c| p.le_indices(a, c) && p.le_indices(c, b))
                        .map(|c| p.mobius_matrix()[a][c])
                        .sum();
                    assert_eq!(total, i64::from(a == b), "weight {n}, {a} ≤ {b}");
                }
            }
        }
    }

    #[test]
    fn boundary_closure_golden() {
        let closure = boundary_closure(&f("[[][]]"), 2);
        let expected: BTreeSet<Forest> =
            [f("[[][]]"), f("[] [[]]"), f("[] [] []")].into_iter().collect();
        assert_eq!(closure, expected);
    }

    #[test]
    fn dot_output_weight_two() {
        let p = build_poset(2, &IndexSet::All);
        assert_eq!(
            p.to_dot(),
            "digraph hasse {\n  n0 [label=\"[] []\"];\n  n1 [label=\"[[]]\"];\n  n1 -> n0 [label=1];\n}\n"
        );
    }
}
