//! Enumeration of all planar forests of a given weight.

use super::{b_plus, Forest, Tree};
use std::sync::{Arc, Mutex, OnceLock};

fn cache() -> &'static Mutex<Vec<Arc<Vec<Forest>>>> {
    static CACHE: OnceLock<Mutex<Vec<Arc<Vec<Forest>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Arc::new(vec![Forest::empty()])]))
}

/// All planar forests of weight `n`, in canonical order.
///
/// A nonempty forest decomposes uniquely as `B⁺(F₁)·F₂`; forests are listed
/// by `weight(F₁)` ascending, then `F₁`, then `F₂`, recursively. This agrees
/// with the [`Forest`] `Ord` instance, and `|𝐅(n)|` is the `n`-th Catalan
/// number. Results are cached for the life of the process.
pub fn enumerate_forests(n: usize) -> Arc<Vec<Forest>> {
    let mut levels = cache().lock().unwrap();
    while levels.len() <= n {
        let k = levels.len();
        let mut out = Vec::new();
        for w1 in 0..k {
            let firsts = Arc::clone(&levels[w1]);
            let rests = Arc::clone(&levels[k - 1 - w1]);
            for f1 in firsts.iter() {
                for f2 in rests.iter() {
                    let mut trees = Vec::with_capacity(1 + f2.tree_count());
                    trees.push(b_plus(f1));
                    trees.extend(f2.trees().iter().cloned());
                    out.push(Forest::new(trees));
                }
            }
        }
        levels.push(Arc::new(out));
    }
    Arc::clone(&levels[n])
}

/// All planar trees of weight `n`, in canonical order (the single-tree
/// forests of weight `n`).
pub fn enumerate_trees(n: usize) -> Vec<Tree> {
    enumerate_forests(n)
        .iter()
        .filter(|f| f.tree_count() == 1)
        .map(|f| f.trees()[0].clone())
        .collect()
}
