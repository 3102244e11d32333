//! Formal linear combinations of forests and the algebra structure.
//!
//! [`Element`] is a finite ℚ-linear combination of planar forests; the
//! product is the bilinear extension of concatenation and the counit `ε`
//! extracts the coefficient of the empty forest. [`Tensor2`] and
//! [`Tensor3`] are linear combinations of pairs and triples of forests and
//! carry the coproduct values.

mod antipode;
mod coproduct;
mod text;

pub use antipode::{
    antipode_left_cut, antipode_recursive, convolution_check, is_primitive, primitive_decompose,
};
pub use coproduct::{
    coproduct, coproduct_left, coproduct_right, coproduct_via_order, epsilon_product,
    reduced_coproduct,
};
pub use text::parse_element;

use crate::forest::{b_plus, Forest};
use crate::{rat_one, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A finite linear combination of basis objects with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rat>,
}

/// An element of the algebra: a linear combination of forests.
pub type Element = LinComb<Forest>;

/// A linear combination of ordered pairs of forests (the tensor square).
pub type Tensor2 = LinComb<(Forest, Forest)>;

/// A linear combination of ordered triples of forests (the tensor cube).
pub type Tensor3 = LinComb<(Forest, Forest, Forest)>;

impl<K: Ord + Clone> LinComb<K> {
    /// The zero combination.
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// A single basis object with coefficient 1.
    pub fn basis(k: K) -> Self {
        Self::term(k, rat_one())
    }

    /// A single term `c·k`.
    pub fn term(k: K, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the natural key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.terms.iter()
    }

    /// The coefficient of `k` (zero if absent).
    pub fn coeff(&self, k: &K) -> Rat {
        self.terms.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c·k` in place, dropping the key if the sum cancels.
    pub fn add_term(&mut self, k: K, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn negated(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect() }
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Linear extension of a map defined on basis objects.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c * c2);
            }
        }
        out
    }
}

impl Element {
    /// The unit `1` (the empty forest with coefficient 1).
    pub fn one() -> Element {
        Element::basis(Forest::empty())
    }

    /// Terms ordered for display: weight ascending, canonical rank
    /// descending within a weight.
    fn display_order(&self) -> Vec<(&Forest, &Rat)> {
        let mut terms: Vec<(&Forest, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(f, _)| (f.weight(), std::cmp::Reverse(*f)));
        terms
    }

    /// JSON form: array of `{"coeff": "p/q", "forest": "<text>"}` in display
    /// order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.display_order()
                .into_iter()
                .map(|(f, c)| {
                    serde_json::json!({ "coeff": c.to_string(), "forest": f.to_string() })
                })
                .collect(),
        )
    }
}

/// The counit `ε`: the coefficient of the empty forest; kills every
/// nonempty forest.
pub fn counit(x: &Element) -> Rat {
    x.coeff(&Forest::empty())
}

/// The product: bilinear extension of concatenation of forests.
pub fn product(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (f, a) in x.iter() {
        for (g, b) in y.iter() {
            out.add_term(f.concat(g), a * b);
        }
    }
    out
}

/// `B⁺` extended linearly: grafts every basis forest under a new root.
pub fn b_plus_linear(x: &Element) -> Element {
    x.map_linear(|f| Element::basis(b_plus(f).into()))
}

/// The tensor `x ⊗ y`.
pub fn tensor(x: &Element, y: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (f, a) in x.iter() {
        for (g, b) in y.iter() {
            out.add_term((f.clone(), g.clone()), a * b);
        }
    }
    out
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a Rat)>,
{
    let mut first = true;
    let mut wrote_any = false;
    for (key, coeff) in terms {
        let (sign, magnitude) = if coeff < &Rat::zero() {
            ("-", -coeff.clone())
        } else {
            ("+", coeff.clone())
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
        } else if sign == "-" {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{magnitude}*{key}")?;
        first = false;
        wrote_any = true;
    }
    if !wrote_any {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.display_order().into_iter().map(|(k, c)| (k.to_string(), c)))
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter().map(|((a, b), c)| (format!("{a} (x) {b}"), c)))
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter().map(|((a, b, c), v)| (format!("{a} (x) {b} (x) {c}"), v)))
    }
}
