//! The coproduct and the tensor-square product it is compatible with.

use super::{counit, Element, Tensor2, Tensor3};
use crate::forest::{enumerate_forests, split_at_biideal, Forest};
use crate::tamari::boundary_closure;
use crate::{Error, Result};

/// The coproduct `Δ`. On a forest `F` of weight `n`,
/// `Δ(F) = Σ_{k=0}^{n} P_k ⊗ R_k` where `(P_k, R_k)` removes the biideal of
/// the `k` greatest vertices; extended linearly.
pub fn coproduct(x: &Element) -> Tensor2 {
    x.map_linear(|f| {
        let mut out = Tensor2::zero();
        for k in 0..=f.weight() {
            let (p, r) = split_at_biideal(f, k).expect("k ranges over 0..=weight");
            out.add_term((p, r), crate::rat_one());
        }
        out
    })
}

/// The reduced coproduct `Δ̃(x) = Δ(x) − x⊗1 − 1⊗x`, defined on the
/// augmentation ideal.
pub fn reduced_coproduct(x: &Element) -> Result<Tensor2> {
    let eps = counit(x);
    if !num_traits::Zero::is_zero(&eps) {
        return Err(Error::NotAugmentation { counit: eps.to_string() });
    }
    let mut out = coproduct(x);
    let unit = Forest::empty();
    for (f, c) in x.iter() {
        out.add_term((f.clone(), unit.clone()), -c.clone());
        out.add_term((unit.clone(), f.clone()), -c.clone());
    }
    Ok(out)
}

/// The product on the tensor square twisted by the counit:
/// `(a₁⊗b₁)·(a₂⊗b₂) = ε(a₂) a₁⊗b₁b₂ + ε(b₁) a₁a₂⊗b₂ − ε(a₂)ε(b₁) a₁⊗b₂`.
/// With this product `Δ` is multiplicative: `Δ(xy) = Δ(x)·Δ(y)`.
pub fn epsilon_product(x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((a1, b1), c1) in x.iter() {
        for ((a2, b2), c2) in y.iter() {
            let c = c1 * c2;
            // ε on a basis forest is 1 on the empty forest and 0 otherwise
            if a2.is_empty() {
                out.add_term((a1.clone(), b1.concat(b2)), c.clone());
            }
            if b1.is_empty() {
                out.add_term((a1.concat(a2), b2.clone()), c.clone());
            }
            if a2.is_empty() && b1.is_empty() {
                out.add_term((a1.clone(), b2.clone()), -c);
            }
        }
    }
    out
}

/// `Δ ⊗ id` applied to a tensor (left factor expanded).
pub fn coproduct_left(t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for ((p, r), c2) in coproduct(&Element::basis(a.clone())).iter() {
            out.add_term((p.clone(), r.clone(), b.clone()), c * c2);
        }
    }
    out
}

/// `id ⊗ Δ` applied to a tensor (right factor expanded).
pub fn coproduct_right(t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for ((p, r), c2) in coproduct(&Element::basis(b.clone())).iter() {
            out.add_term((a.clone(), p.clone(), r.clone()), c * c2);
        }
    }
    out
}

/// The coproduct of a forest computed through the forest order instead of
/// through biideal splits.
///
/// For nonempty `F₁, F₂`, the term `F₁ ⊗ F₂` occurs in `Δ̃(G)` exactly when
/// `G` reaches the concatenation `F₁·F₂` by admissible moves that cross the
/// `weight(F₁)` boundary (see [`boundary_closure`]). Summing over all such
/// pairs and adding `G⊗1 + 1⊗G` rebuilds `Δ(G)`; every coefficient is 0 or
/// 1. `Δ(1) = 1⊗1` as for the split route. This is an independent second
/// algorithm used to cross-check [`coproduct`].
pub fn coproduct_via_order(g: &Forest) -> Tensor2 {
    let unit = Forest::empty();
    let mut out = Tensor2::zero();
    out.add_term((g.clone(), unit.clone()), crate::rat_one());
    if g.is_empty() {
        return out;
    }
    out.add_term((unit, g.clone()), crate::rat_one());
    let n = g.weight();
    for k in 1..n {
        let reachable = boundary_closure(g, k);
        for f1 in enumerate_forests(k).iter() {
            for f2 in enumerate_forests(n - k).iter() {
                if reachable.contains(&f1.concat(f2)) {
                    out.add_term((f1.clone(), f2.clone()), crate::rat_one());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_element, product, tensor};
    use crate::forest::parse_forest;
    use crate::rat_int;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn delta(s: &str) -> Tensor2 {
        coproduct(&Element::basis(f(s)))
    }

    /// Tensor from a list of (left, right) basis pairs, all with coefficient 1.
    fn t2(pairs: &[(&str, &str)]) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (a, b) in pairs {
            out.add_term((f(a), f(b)), rat_int(1));
        }
        out
    }

    #[test]
    fn coproduct_golden_values() {
        assert_eq!(delta("1"), t2(&[("1", "1")]));
        assert_eq!(delta("[]"), t2(&[("[]", "1"), ("1", "[]")]));
        assert_eq!(delta("[] []"), t2(&[("[] []", "1"), ("1", "[] []"), ("[]", "[]")]));
        assert_eq!(delta("[[]]"), t2(&[("[[]]", "1"), ("1", "[[]]"), ("[]", "[]")]));
        assert_eq!(
            delta("[[]] []"),
            t2(&[("[[]] []", "1"), ("1", "[[]] []"), ("[]", "[] []"), ("[[]]", "[]")])
        );
        assert_eq!(
            delta("[[][]]"),
            t2(&[("[[][]]", "1"), ("1", "[[][]]"), ("[] []", "[]"), ("[]", "[[]]")])
        );
        assert_eq!(
            delta("[[[]]]"),
            t2(&[("[[[]]]", "1"), ("1", "[[[]]]"), ("[[]]", "[]"), ("[]", "[[]]")])
        );
    }

    #[test]
    fn reduced_coproduct_drops_primitive_part() {
        let x = parse_element("[[]] - [] []").unwrap();
        assert!(reduced_coproduct(&x).unwrap().is_zero());
        let err = reduced_coproduct(&Element::one()).unwrap_err();
        assert!(matches!(err, Error::NotAugmentation { .. }));
    }

    #[test]
    fn compatibility_on_small_forests() {
        // Δ(xy) = Δ(x)·Δ(y) under the ε-twisted tensor product
        for n in 0..=3 {
            for a in enumerate_forests(n).iter() {
                for m in 0..=(4 - n) {
                    for b in enumerate_forests(m).iter() {
                        let x = Element::basis(a.clone());
                        let y = Element::basis(b.clone());
                        assert_eq!(
                            coproduct(&product(&x, &y)),
                            epsilon_product(&coproduct(&x), &coproduct(&y)),
                            "x = {a}, y = {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn infinitesimal_compatibility_form() {
        // Δ(ab) = (a⊗1)Δ(b) + Δ(a)(1⊗b) − a⊗b on basis forests
        for n in 1..=2 {
            for a in enumerate_forests(n).iter() {
                for m in 1..=2 {
                    for b in enumerate_forests(m).iter() {
                        let ea = Element::basis(a.clone());
                        let eb = Element::basis(b.clone());
                        let lhs = coproduct(&product(&ea, &eb));
                        let a_tensor_1 = tensor(&ea, &Element::one());
                        let one_tensor_b = tensor(&Element::one(), &eb);
                        let rhs = epsilon_product(&a_tensor_1, &coproduct(&eb))
                            .plus(&epsilon_product(&coproduct(&ea), &one_tensor_b))
                            .minus(&tensor(&ea, &eb));
                        assert_eq!(lhs, rhs, "a = {a}, b = {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn coassociativity_small() {
        for n in 0..=4 {
            for forest in enumerate_forests(n).iter() {
                let d = delta(&forest.to_string());
                assert_eq!(coproduct_left(&d), coproduct_right(&d), "{forest}");
            }
        }
    }

    #[test]
    fn order_route_agrees_with_split_route() {
        for n in 0..=4 {
            for forest in enumerate_forests(n).iter() {
                assert_eq!(
                    coproduct_via_order(forest),
                    coproduct(&Element::basis(forest.clone())),
                    "{forest}"
                );
            }
        }
    }
}
