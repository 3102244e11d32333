//! Acceptance gate: every criterion below must hold exactly (tolerance zero).
//! Each criterion prints one `PASS`/`FAIL` line; run with `--nocapture` to see
//! them on success.

use std::time::{Duration, Instant};

use infhopf::algebra::{
    antipode_left_cut, antipode_recursive, coproduct, parse_element, product, Element, Tensor2,
};
use infhopf::forest::{enumerate_forests, parse_forest, Forest};
use infhopf::pairing::{dual_basis_via_gram, gram_matrix};
use infhopf::rat_int;
use infhopf::tamari::{
    build_poset, dual_basis_via_mobius, dual_product, eta, eta_inverse, m_involution,
    parse_binary_tree, IndexSet,
};
use infhopf::verify::{run_suite, Suite};

fn f(s: &str) -> Forest {
    parse_forest(s).expect("golden forest literal")
}

fn elem(s: &str) -> Element {
    parse_element(s).expect("golden element literal")
}

type Criterion = (&'static str, fn() -> Result<(), String>);

const CRITERIA: [Criterion; 9] = [
    ("pairing matrices of weights 1..4 match the golden tables in under 1 s", gram_tables),
    ("the six golden coproducts match exactly", coproduct_examples),
    ("the eight golden antipodes match exactly under both algorithms", antipode_examples),
    ("every dual element of weight <= 4 matches the golden table via both inversion routes", dual_basis_tables),
    ("the three golden dual products match and agree with the factors after expansion", dual_products),
    ("labeled covers of the weight-2, 3, 4 posets match the golden diagrams", hasse_diagrams),
    ("the eight eta entries and the twelve mirror entries match exactly", bijection_tables),
    ("the full property suite passes at weight 5 (< 10 s) and weight 6 (< 2 min)", property_suite),
    ("forest counts for weights 0..7 are the Catalan numbers", enumeration),
];

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    for (index, (name, run)) in CRITERIA.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS {}. {name}", index + 1),
            Err(detail) => {
                println!("FAIL {}. {name}: {detail}", index + 1);
                failures.push(format!("{}. {name}: {detail}", index + 1));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "{} acceptance criterion(s) failed:\n{}",
        failures.len(),
        failures.join("\n")
    );
}

const GRAM_GOLDEN: [(usize, &[&str]); 4] = [
    (1, &["1"]),
    (2, &["11", "10"]),
    (3, &["11111", "11010", "10100", "11000", "10000"]),
    (
        4,
        &[
            "11111111111111",
            "11111001011010",
            "11010110010100",
            "11111000011000",
            "11010000010000",
            "10100101100000",
            "10100001000000",
            "11000110000000",
            "10000100000000",
            "11111000000000",
            "11010000000000",
            "10100000000000",
            "11000000000000",
            "10000000000000",
        ],
    ),
];

fn gram_tables() -> Result<(), String> {
    let start = Instant::now();
    for (n, rows) in GRAM_GOLDEN {
        let gram = gram_matrix(n);
        if gram.forests() != enumerate_forests(n).as_slice() {
            return Err(format!("weight-{n} axis is not the canonical enumeration"));
        }
        let got: Vec<String> =
            gram.entries().iter().map(|row| row.iter().map(u8::to_string).collect()).collect();
        if got != rows {
            return Err(format!("weight-{n} matrix differs from the golden table"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}, budget 1 s"));
    }
    Ok(())
}

fn coproduct_examples() -> Result<(), String> {
    let golden: [(&str, &[(&str, &str)]); 6] = [
        ("[]", &[("[]", "1"), ("1", "[]")]),
        ("[] []", &[("[] []", "1"), ("1", "[] []"), ("[]", "[]")]),
        ("[[]]", &[("[[]]", "1"), ("1", "[[]]"), ("[]", "[]")]),
        ("[[]] []", &[("[[]] []", "1"), ("1", "[[]] []"), ("[]", "[] []"), ("[[]]", "[]")]),
        ("[[][]]", &[("[[][]]", "1"), ("1", "[[][]]"), ("[] []", "[]"), ("[]", "[[]]")]),
        ("[[[]]]", &[("[[[]]]", "1"), ("1", "[[[]]]"), ("[[]]", "[]"), ("[]", "[[]]")]),
    ];
    for (forest, terms) in golden {
        let mut expected = Tensor2::zero();
        for (a, b) in terms {
            expected.add_term((f(a), f(b)), rat_int(1));
        }
        if coproduct(&Element::basis(f(forest))) != expected {
            return Err(format!("Δ({forest}) differs from the golden value"));
        }
    }
    Ok(())
}

fn antipode_examples() -> Result<(), String> {
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
        let x = Element::basis(f(forest));
        let expected = elem(expected);
        if antipode_recursive(&x) != expected {
            return Err(format!("recursive S({forest}) differs from the golden value"));
        }
        if antipode_left_cut(&x) != expected {
            return Err(format!("left-cut S({forest}) differs from the golden value"));
        }
    }
    Ok(())
}

const DUAL_GOLDEN: [(&str, &str); 23] = [
    ("1", "1*1"),
    ("[]", "1*[]"),
    ("[] []", "1*[[]]"),
    ("[[]]", "-1*[[]] + 1*[] []"),
    ("[] [] []", "1*[[[]]]"),
    ("[] [[]]", "-1*[[[]]] + 1*[[][]]"),
    ("[[]] []", "-1*[[[]]] + 1*[[]] []"),
    ("[[][]]", "-1*[[][]] + 1*[] [[]]"),
    ("[[[]]]", "1*[[[]]] - 1*[[]] [] - 1*[] [[]] + 1*[] [] []"),
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

fn dual_basis_tables() -> Result<(), String> {
    for (forest, expected) in DUAL_GOLDEN {
        if dual_basis_via_mobius(&f(forest)) != elem(expected) {
            return Err(format!("Möbius route gives a wrong f_{{{forest}}}"));
        }
    }
    for n in 0..=4 {
        let by_gram = dual_basis_via_gram(n).map_err(|e| format!("Gram route failed: {e}"))?;
        if by_gram.len() != enumerate_forests(n).len() {
            return Err(format!("Gram route covers {} forests of weight {n}", by_gram.len()));
        }
        for (forest, element) in by_gram {
            if element != dual_basis_via_mobius(&forest) {
                return Err(format!("the two routes disagree on f_{{{forest}}}"));
            }
        }
    }
    Ok(())
}

fn dual_products() -> Result<(), String> {
    let cases: [(&[&str], &[&str]); 3] = [
        (&["[[]]", "[]"], &["[] [[]]", "[[][]]", "[[[]]]"]),
        (&["[]", "[[]]"], &["[[]] []", "[[[]]]"]),
        (&["[[]]", "[[]]"], &["[[]] [[]]", "[[[]][]]", "[[[[]]]]"]),
    ];
    for (factors, expected) in cases {
        let factors: Vec<Forest> = factors.iter().map(|s| f(s)).collect();
        let label = factors.iter().map(Forest::to_string).collect::<Vec<_>>().join(" , ");
        let result = dual_product(&factors).map_err(|e| format!("f at ({label}): {e}"))?;
        let mut support = Vec::new();
        for (g, c) in result.iter() {
            if c != &rat_int(1) {
                return Err(format!("({label}) has a coefficient {c} on {g}"));
            }
            support.push(g.to_string());
        }
        if support != expected {
            return Err(format!("({label}) expands to {support:?}"));
        }
        // the index sum expands, in the forest basis, to the product of the
        // expanded factors
        let mut lhs = Element::zero();
        for (g, c) in result.iter() {
            lhs.add_assign(&dual_basis_via_mobius(g).scaled(c));
        }
        let rhs = factors
            .iter()
            .map(dual_basis_via_mobius)
            .reduce(|a, b| product(&a, &b))
            .expect("at least one factor");
        if lhs != rhs {
            return Err(format!("({label}) disagrees with the forest-basis product"));
        }
    }
    Ok(())
}

const HASSE_GOLDEN_2: &[(usize, usize, usize)] = &[(1, 0, 1)];
const HASSE_GOLDEN_3: &[(usize, usize, usize)] =
    &[(1, 0, 2), (2, 0, 1), (3, 1, 1), (4, 2, 2), (4, 3, 1)];
const HASSE_GOLDEN_4: &[(usize, usize, usize)] = &[
    (1, 0, 3),
    (2, 0, 2),
    (3, 1, 2),
    (4, 2, 3),
    (4, 3, 2),
    (5, 0, 1),
    (6, 1, 1),
    (6, 5, 3),
    (7, 2, 1),
    (8, 5, 2),
    (8, 7, 1),
    (9, 3, 1),
    (10, 4, 1),
    (10, 9, 2),
    (11, 6, 2),
    (11, 9, 1),
    (12, 7, 3),
    (12, 10, 1),
    (13, 8, 3),
    (13, 11, 2),
    (13, 12, 1),
];

fn hasse_diagrams() -> Result<(), String> {
    let golden: [(usize, &[(usize, usize, usize)]); 3] =
        [(2, HASSE_GOLDEN_2), (3, HASSE_GOLDEN_3), (4, HASSE_GOLDEN_4)];
    for (n, expected) in golden {
        let poset = build_poset(n, &IndexSet::All);
        let mut covers = poset.covers().to_vec();
        covers.sort_unstable();
        let mut want = expected.to_vec();
        want.sort_unstable();
        if covers != want {
            return Err(format!(
                "weight-{n} diagram has {} labeled covers, expected {}",
                covers.len(),
                want.len()
            ));
        }
    }
    Ok(())
}

fn bijection_tables() -> Result<(), String> {
    let eta_golden = [
        ("(..)", "[]"),
        ("((..).)", "[[]]"),
        ("(.(..))", "[] []"),
        ("(((..).).)", "[[[]]]"),
        ("((..)(..))", "[[]] []"),
        ("((.(..)).)", "[[][]]"),
        ("(.((..).))", "[] [[]]"),
        ("(.(.(..)))", "[] [] []"),
    ];
    for (tree, forest) in eta_golden {
        let t = parse_binary_tree(tree).expect("golden binary-tree literal");
        if eta(&t) != f(forest) {
            return Err(format!("eta({tree}) differs from {forest}"));
        }
        if eta_inverse(&f(forest)) != t {
            return Err(format!("eta_inverse({forest}) differs from {tree}"));
        }
    }
    let mirror_golden = [
        ("[]", "[]"),
        ("[] []", "[[]]"),
        ("[] [] []", "[[[]]]"),
        ("[] [[]]", "[[][]]"),
        ("[[]] []", "[[]] []"),
        ("[] [] [] []", "[[[[]]]]"),
        ("[] [] [[]]", "[[[][]]]"),
        ("[] [[]] []", "[[[]][]]"),
        ("[] [[][]]", "[[][[]]]"),
        ("[] [[[]]]", "[[][][]]"),
        ("[[]] [] []", "[[[]]] []"),
        ("[[]] [[]]", "[[][]] []"),
    ];
    for (a, b) in mirror_golden {
        if m_involution(&f(a)) != f(b) {
            return Err(format!("m({a}) differs from {b}"));
        }
        if m_involution(&f(b)) != f(a) {
            return Err(format!("m({b}) differs from {a}"));
        }
    }
    Ok(())
}

fn property_suite() -> Result<(), String> {
    for (max_weight, budget) in [(5, Duration::from_secs(10)), (6, Duration::from_secs(120))] {
        let start = Instant::now();
        let outcomes = run_suite(Suite::All, max_weight);
        let elapsed = start.elapsed();
        for outcome in &outcomes {
            if let Some(detail) = &outcome.counterexample {
                return Err(format!("{} at weight {max_weight}: {detail}", outcome.name));
            }
        }
        if elapsed > budget {
            return Err(format!("weight-{max_weight} suite took {elapsed:?}, budget {budget:?}"));
        }
    }
    Ok(())
}

const CATALAN: [usize; 8] = [1, 1, 2, 5, 14, 42, 132, 429];

const WEIGHT_FOUR_FORESTS: [&str; 14] = [
    "[] [] [] []",
    "[] [] [[]]",
    "[] [[]] []",
    "[] [[][]]",
    "[] [[[]]]",
    "[[]] [] []",
    "[[]] [[]]",
    "[[][]] []",
    "[[[]]] []",
    "[[][][]]",
    "[[][[]]]",
    "[[[]][]]",
    "[[[][]]]",
    "[[[[]]]]",
];

fn enumeration() -> Result<(), String> {
    for (n, expected) in CATALAN.iter().enumerate() {
        let count = enumerate_forests(n).len();
        if count != *expected {
            return Err(format!("{count} forests of weight {n}, expected {expected}"));
        }
    }
    let listed: Vec<String> = enumerate_forests(4).iter().map(Forest::to_string).collect();
    if listed != WEIGHT_FOUR_FORESTS {
        return Err("the weight-4 list differs from the golden enumeration".into());
    }
    Ok(())
}
