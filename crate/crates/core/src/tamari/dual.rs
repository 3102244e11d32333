//! The dual basis of the pairing, computed from the forest order.
//!
//! `f_F` denotes the basis dual to the forests: `⟨f_F, G⟩ = δ_{F,G}`. The
//! mirror involution and the Möbius function of `(𝐅(n), ≤)` give it in
//! closed form, `f_F = Σ_{G ≤ m(F)} μ(G, m(F)) G`, and conversely every
//! forest expands as `F = Σ_{m(G) ≤ F} f_G`.

use super::{build_poset, m_involution, IndexSet};
use crate::algebra::Element;
use crate::forest::{enumerate_forests, split_at_biideal, Forest};
use crate::{rat_int, Error, Result};

/// `f_F` in the forest basis, by Möbius inversion:
/// `f_F = Σ_{G ≤ m(F)} μ(G, m(F)) G`. All coefficients are integers.
pub fn dual_basis_via_mobius(f: &Forest) -> Element {
    let poset = build_poset(f.weight(), &IndexSet::All);
    let target = poset.index_of(&m_involution(f)).expect("same weight");
    let mut out = Element::zero();
    for (g_idx, g) in poset.elements().iter().enumerate() {
        if poset.le_indices(g_idx, target) {
            out.add_term(g.clone(), rat_int(poset.mobius_matrix()[g_idx][target]));
        }
    }
    out
}

/// The dual-basis support of a forest: the canonical-order list of `G` with
/// `m(G) ≤ F`, so that `F = Σ f_G` over it.
pub fn forest_in_dual_basis(f: &Forest) -> Vec<Forest> {
    let poset = build_poset(f.weight(), &IndexSet::All);
    enumerate_forests(f.weight())
        .iter()
        .filter(|g| poset.le(&m_involution(g), f))
        .cloned()
        .collect()
}

/// The product `f_{A₁} ⋯ f_{A_p}` expressed in the dual basis: the result is
/// `Σ f_G` over the returned element's support, each coefficient 1.
///
/// `G` contributes exactly when severing its greatest vertices in blocks of
/// `weight(A_p), …, weight(A₂)` yields `A_p, …, A₂` with remainder `A₁`:
/// these are the forests whose iterated coproduct contains the term
/// `A_p ⊗ ⋯ ⊗ A₁`. Factors must be nonempty; the empty product is `f_1 = 1`.
pub fn dual_product(factors: &[Forest]) -> Result<Element> {
    if factors.iter().any(Forest::is_empty) {
        return Err(Error::EmptyFactor);
    }
    let total: usize = factors.iter().map(Forest::weight).sum();
    let mut out = Element::zero();
    'candidates: for g in enumerate_forests(total).iter() {
        let mut rest = g.clone();
        for a in factors.iter().rev().take(factors.len().saturating_sub(1)) {
            let (p, r) = split_at_biideal(&rest, a.weight()).expect("weights add up");
            if &p != a {
                continue 'candidates;
            }
            rest = r;
        }
        if factors.first().map(|a| a == &rest).unwrap_or(rest.is_empty()) {
            out.add_term(g.clone(), rat_int(1));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_element, product};
    use crate::forest::parse_forest;

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn dual(s: &str) -> Element {
        dual_basis_via_mobius(&f(s))
    }

    #[test]
    fn dual_basis_golden_to_weight_three() {
        let golden = [
            ("1", "1*1"),
            ("[]", "1*[]"),
            ("[] []", "1*[[]]"),
            ("[[]]", "-1*[[]] + 1*[] []"),
            ("[] [] []", "1*[[[]]]"),
            ("[] [[]]", "-1*[[[]]] + 1*[[][]]"),
            ("[[]] []", "-1*[[[]]] + 1*[[]] []"),
            ("[[][]]", "-1*[[][]] + 1*[] [[]]"),
            ("[[[]]]", "1*[[[]]] - 1*[[]] [] - 1*[] [[]] + 1*[] [] []"),
        ];
        for (forest, expected) in golden {
            assert_eq!(dual(forest), parse_element(expected).unwrap(), "f_({forest})");
        }
    }

    #[test]
    fn dual_basis_golden_weight_four() {
        let golden = [
            ("[] [] [] []", "1*[[[[]]]]"),
            ("[] [] [[]]", "-1*[[[[]]]] + 1*[[[][]]]"),
            ("[] [[]] []", "-1*[[[[]]]] + 1*[[[]][]]"),
            ("[] [[][]]", "-1*[[[][]]] + 1*[[][[]]]"),
            ("[] [[[]]]", "1*[[[[]]]] - 1*[[[]][]] - 1*[[][[]]] + 1*[[][][]]"),
            ("[[]] [] []", "-1*[[[[]]]] + 1*[[[]]] []"),
            ("[[]] [[]]", "1*[[[[]]]] - 1*[[[][]]] - 1*[[[]]] [] + 1*[[][]] []"),
            ("[[][]] []", "-1*[[[]][]] + 1*[[]] [[]]"),
            ("[[[]]] []", "1*[[[[]]]] - 1*[[[]]] [] - 1*[[]] [[]] + 1*[[]] [] []"),
            ("[[][][]]", "-1*[[][[]]] + 1*[] [[[]]]"),
            ("[[][[]]]", "1*[[][[]]] - 1*[[][][]] - 1*[] [[[]]] + 1*[] [[][]]"),
            ("[[[]][]]", "1*[[[][]]] - 1*[[][]] [] - 1*[] [[[]]] + 1*[] [[]] []"),
            ("[[[][]]]", "1*[[[]][]] - 1*[[]] [[]] - 1*[] [[][]] + 1*[] [] [[]]"),
            (
                "[[[[]]]]",
                "-1*[[[[]]]] + 1*[[[]]] [] + 1*[[]] [[]] - 1*[[]] [] [] + 1*[] [[[]]] \
                 - 1*[] [[]] [] - 1*[] [] [[]] + 1*[] [] [] []",
            ),
        ];
        for (forest, expected) in golden {
            assert_eq!(dual(forest), parse_element(expected).unwrap(), "f_({forest})");
        }
    }

    #[test]
    fn dual_elements_pair_as_kronecker_delta() {
        use crate::pairing::pairing_bijection;
        for n in 0..=4 {
            for forest in enumerate_forests(n).iter() {
                let fe = dual_basis_via_mobius(forest);
                for g in enumerate_forests(n).iter() {
                    let mut value = crate::rat_zero();
                    for (h, c) in fe.iter() {
                        value += c * pairing_bijection(h, g);
                    }
                    assert_eq!(value, rat_int(i64::from(forest == g)), "⟨f_{forest}, {g}⟩");
                }
            }
        }
    }

    #[test]
    fn express_golden() {
        let support: Vec<String> =
            forest_in_dual_basis(&f("[] [] []")).iter().map(|g| g.to_string()).collect();
        assert_eq!(support, ["[] [] []", "[] [[]]", "[[]] []", "[[][]]", "[[[]]]"]);
        assert_eq!(
            forest_in_dual_basis(&f("[[]]")).iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            ["[] []"]
        );
        assert_eq!(
            forest_in_dual_basis(&f("[[[]]]")).iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            ["[] [] []"]
        );
    }

    #[test]
    fn expansion_reconstructs_the_forest() {
        // F = Σ_{m(G) ≤ F} f_G, checked in the forest basis
        for n in 0..=4 {
            for forest in enumerate_forests(n).iter() {
                let mut sum = Element::zero();
                for g in forest_in_dual_basis(forest) {
                    sum.add_assign(&dual_basis_via_mobius(&g));
                }
                assert_eq!(sum, Element::basis(forest.clone()), "{forest}");
            }
        }
    }

    #[test]
    fn dual_product_golden() {
        let cases: [(&[&str], &[&str]); 3] = [
            (&["[[]]", "[]"], &["[] [[]]", "[[][]]", "[[[]]]"]),
            (&["[]", "[[]]"], &["[[]] []", "[[[]]]"]),
            (&["[[]]", "[[]]"], &["[[]] [[]]", "[[[]][]]", "[[[[]]]]"]),
        ];
        for (factors, expected) in cases {
            let factors: Vec<Forest> = factors.iter().map(|s| f(s)).collect();
            let got: Vec<String> = dual_product(&factors)
                .unwrap()
                .iter()
                .map(|(g, c)| {
                    assert_eq!(c, &rat_int(1));
                    g.to_string()
                })
                .collect();
            assert_eq!(got, expected.to_vec(), "{factors:?}");
        }
    }

    #[test]
    fn dual_product_rejects_empty_factors() {
        assert!(matches!(
            dual_product(&[f("[]"), Forest::empty()]),
            Err(Error::EmptyFactor)
        ));
    }

    #[test]
    fn dual_product_matches_expanded_multiplication() {
        // expand both sides into the forest basis
        for n in 1..=3 {
            for a in enumerate_forests(n).iter() {
                for w in 1..=(4 - n) {
                    for b in enumerate_forests(w).iter() {
                        let lhs = dual_product(&[a.clone(), b.clone()]).unwrap();
                        let mut lhs_expanded = Element::zero();
                        for (g, c) in lhs.iter() {
                            lhs_expanded =
                                lhs_expanded.plus(&dual_basis_via_mobius(g).scaled(c));
                        }
                        let rhs =
                            product(&dual_basis_via_mobius(a), &dual_basis_via_mobius(b));
                        assert_eq!(lhs_expanded, rhs, "f_({a}) · f_({b})");
                    }
                }
            }
        }
    }
}
