//! The antipode, by two independent algorithms.

use super::{counit, coproduct, product, reduced_coproduct, Element};
use crate::forest::{left_cuts, split_at_biideal, Forest};
use crate::{rat_int, Error, Result};
use num_traits::Zero;
use std::collections::HashMap;

/// `S` on a single basis forest, by the recursion
/// `S(F) = −F − Σ S(P_k)·R_k` over the proper biideal splits `0 < k < n`.
fn antipode_forest(f: &Forest, memo: &mut HashMap<Forest, Element>) -> Element {
    if f.is_empty() {
        return Element::one();
    }
    if let Some(hit) = memo.get(f) {
        return hit.clone();
    }
    let mut acc = Element::basis(f.clone()).negated();
    for k in 1..f.weight() {
        let (p, r) = split_at_biideal(f, k).expect("k < weight");
        let sp = antipode_forest(&p, memo);
        acc = acc.minus(&product(&sp, &Element::basis(r)));
    }
    memo.insert(f.clone(), acc.clone());
    acc
}

/// The antipode by convolution-inverse recursion: `S(1) = 1` and
/// `S(x) = −x − S(x′)x″` on the augmentation ideal (sum over the reduced
/// coproduct), extended linearly. The memo table lives for one evaluation.
pub fn antipode_recursive(x: &Element) -> Element {
    let mut memo = HashMap::new();
    x.map_linear(|f| antipode_forest(f, &mut memo))
}

/// The antipode by the closed left-cut formula: on a tree,
/// `S(t) = Σ_c (−1)^{n_c + 1} W^c(t)` over the left cuts of `t`; `S(1) = 1`;
/// `S` vanishes on forests with two or more trees.
pub fn antipode_left_cut(x: &Element) -> Element {
    x.map_linear(|f| match f.tree_count() {
        0 => Element::one(),
        1 => {
            let mut acc = Element::zero();
            for (cuts, w) in left_cuts(&f.trees()[0]) {
                let sign = if cuts % 2 == 0 { -1 } else { 1 };
                acc.add_term(w, rat_int(sign));
            }
            acc
        }
        _ => Element::zero(),
    })
}

/// The convolution `m ∘ (S ⊗ id) ∘ Δ`; equals `ε(x)·1` when `S` is correct.
pub fn convolution_check(x: &Element) -> Element {
    let mut out = Element::zero();
    for ((p, r), c) in coproduct(x).iter() {
        let sp = antipode_recursive(&Element::basis(p.clone()));
        for (g, c2) in product(&sp, &Element::basis(r.clone())).iter() {
            out.add_term(g.clone(), c * c2);
        }
    }
    out
}

/// Whether `x` is primitive: `ε(x) = 0` and `Δ̃(x) = 0`.
pub fn is_primitive(x: &Element) -> bool {
    counit(x).is_zero() && reduced_coproduct(x).map(|t| t.is_zero()).unwrap_or(false)
}

/// Splits an augmentation-ideal element as `x = p + q` with `p = −S(x)`
/// primitive and `q` supported on forests with at least two trees.
pub fn primitive_decompose(x: &Element) -> Result<(Element, Element)> {
    let eps = counit(x);
    if !eps.is_zero() {
        return Err(Error::NotAugmentation { counit: eps.to_string() });
    }
    let p = antipode_recursive(x).negated();
    let q = x.minus(&p);
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::forest::{enumerate_forests, parse_forest};

    fn basis(s: &str) -> Element {
        Element::basis(parse_forest(s).unwrap())
    }

    fn elem(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn antipode_golden_values() {
        let golden = [
            ("[]", "-1*[]"),
            ("[[]]", "-1*[[]] + 1*[] []"),
            ("[[][]]", "-1*[[][]] + 1*[] [[]]"),
            ("[[[]]]", "-1*[[[]]] + 1*[] [[]] + 1*[[]] [] - 1*[] [] []"),
            ("[[][][]]", "-1*[[][][]] + 1*[] [[][]]"),
            ("[[[]][]]", "-1*[[[]][]] + 1*[] [[][]] + 1*[[]] [[]] - 1*[] [] [[]]"),
            ("[[][[]]]", "-1*[[][[]]] + 1*[] [[[]]]"),
            (
                "[[[[]]]]",
                "-1*[[[[]]]] + 1*[] [[[]]] + 1*[[]] [[]] + 1*[[[]]] [] \
                 - 1*[] [] [[]] - 1*[] [[]] [] - 1*[[]] [] [] + 1*[] [] [] []",
            ),
        ];
        for (forest, expected) in golden {
            let expected = elem(expected);
            assert_eq!(antipode_recursive(&basis(forest)), expected, "recursive S({forest})");
            assert_eq!(antipode_left_cut(&basis(forest)), expected, "left-cut S({forest})");
        }
    }

    #[test]
    fn antipode_of_unit() {
        assert_eq!(antipode_recursive(&Element::one()), Element::one());
        assert_eq!(antipode_left_cut(&Element::one()), Element::one());
    }

    #[test]
    fn antipode_kills_proper_products() {
        for s in ["[] []", "[[]] []", "[] [] []", "[[]] [[]]", "[] [[][]]"] {
            assert!(antipode_recursive(&basis(s)).is_zero(), "S({s})");
            assert!(antipode_left_cut(&basis(s)).is_zero(), "S({s})");
        }
    }

    #[test]
    fn algorithms_agree_to_weight_five() {
        for n in 0..=5 {
            for f in enumerate_forests(n).iter() {
                let x = Element::basis(f.clone());
                assert_eq!(antipode_recursive(&x), antipode_left_cut(&x), "{f}");
            }
        }
    }

    #[test]
    fn convolution_identity() {
        for n in 0..=4 {
            for f in enumerate_forests(n).iter() {
                let expected =
                    if n == 0 { Element::one() } else { Element::zero() };
                assert_eq!(convolution_check(&Element::basis(f.clone())), expected, "{f}");
            }
        }
        // general element: ε picks out the unit coefficient
        let x = elem("3*1 - 2*[] + 1/2*[[]] []");
        assert_eq!(convolution_check(&x), Element::one().scaled(&rat_int(3)));
    }

    #[test]
    fn primitive_decompose_golden() {
        let (p, q) = primitive_decompose(&basis("[[]]")).unwrap();
        assert_eq!(p, elem("[[]] - [] []"));
        assert_eq!(q, elem("[] []"));
        assert!(is_primitive(&p));
        assert!(primitive_decompose(&Element::one()).is_err());
    }

    #[test]
    fn primitivity_detection() {
        assert!(is_primitive(&basis("[]")));
        assert!(is_primitive(&elem("[[]] - [] []")));
        assert!(!is_primitive(&basis("[[]]")));
        assert!(!is_primitive(&Element::one()));
        assert!(is_primitive(&Element::zero()));
    }
}
