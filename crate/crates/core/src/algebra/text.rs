//! Text form of elements.
//!
//! Grammar: `element := term (" + " term | " - " term)*` with
//! `term := [coeff "*"] forest` and `coeff` a rational like `3/2`. A leading
//! sign is allowed, whitespace around tokens is ignored, and `0` (alone)
//! denotes the zero element, matching what the printer emits.

use super::Element;
use crate::forest::parse_forest;
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::Zero;

fn parse_coeff(s: &str, offset: usize) -> Result<Rat> {
    let bad = |msg: &str| Error::Parse { offset, message: msg.to_string() };
    let (numer, denom) = match s.split_once('/') {
        None => (s.trim(), None),
        Some((n, d)) => (n.trim(), Some(d.trim())),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad("malformed coefficient"))?;
    let denom: BigInt = match denom {
        None => BigInt::from(1),
        Some(d) => d.parse().map_err(|_| bad("malformed coefficient"))?,
    };
    if denom.is_zero() {
        return Err(bad("coefficient has zero denominator"));
    }
    Ok(Rat::new(numer, denom))
}

/// Offset of `sub` within `outer` (`sub` must be a slice of `outer`).
fn offset_in(outer: &str, sub: &str) -> usize {
    sub.as_ptr() as usize - outer.as_ptr() as usize
}

/// Parses the text form of an element. Errors carry byte offsets into
/// `input`.
pub fn parse_element(input: &str) -> Result<Element> {
    if input.trim() == "0" {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    let mut sign = 1i64;
    let mut start = 0usize;
    let mut fragments: Vec<(i64, usize, &str)> = Vec::new();
    for (i, b) in input.bytes().enumerate() {
        if b == b'+' || b == b'-' {
            fragments.push((sign, start, &input[start..i]));
            sign = if b == b'+' { 1 } else { -1 };
            start = i + 1;
        }
    }
    fragments.push((sign, start, &input[start..]));

    for (index, (sign, frag_start, fragment)) in fragments.iter().enumerate() {
        let body = fragment.trim();
        if body.is_empty() {
            if index == 0 && fragments.len() > 1 {
                // a leading sign leaves an empty first fragment
                continue;
            }
            return Err(Error::Parse {
                offset: *frag_start,
                message: "expected a term".to_string(),
            });
        }
        let body_offset = offset_in(input, body);
        let (coeff, forest_text, forest_offset) = match body.split_once('*') {
            None => (Rat::from_integer(1.into()), body, body_offset),
            Some((c, f)) => {
                let coeff = parse_coeff(c, body_offset)?;
                let f_trimmed = f.trim();
                (coeff, f_trimmed, offset_in(input, f_trimmed))
            }
        };
        let forest = parse_forest(forest_text).map_err(|e| match e {
            Error::Parse { offset, message } => {
                Error::Parse { offset: forest_offset + offset, message }
            }
            other => other,
        })?;
        out.add_term(forest, coeff * Rat::from_integer((*sign).into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::product;
    use crate::forest::parse_forest;
    use crate::rat_int;

    fn elem(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn parses_plain_forest() {
        assert_eq!(elem("[[]] []"), Element::basis(parse_forest("[[]] []").unwrap()));
        assert_eq!(elem("1"), Element::one());
    }

    #[test]
    fn parses_signs_and_coefficients() {
        let x = elem("-1*[[]] + 1*[] []");
        assert_eq!(x.coeff(&parse_forest("[[]]").unwrap()), rat_int(-1));
        assert_eq!(x.coeff(&parse_forest("[] []").unwrap()), rat_int(1));
        let y = elem("3/2*[] - 2*1");
        assert_eq!(y.coeff(&parse_forest("[]").unwrap()), Rat::new(3.into(), 2.into()));
        assert_eq!(y.coeff(&parse_forest("1").unwrap()), rat_int(-2));
    }

    #[test]
    fn parses_zero() {
        assert!(elem("0").is_zero());
        assert!(elem(" 0 ").is_zero());
    }

    #[test]
    fn like_terms_merge() {
        assert!(elem("[] - []").is_zero());
        assert_eq!(elem("1/2*[] + 1/2*[]"), Element::basis(parse_forest("[]").unwrap()));
    }

    #[test]
    fn roundtrips_through_display() {
        let samples = [
            "-1*[[]] + 1*[] []",
            "1*1 - 2*[]",
            "3/2*[[][]] + 1*[] [] - 7*[[[]]]",
        ];
        for s in samples {
            let x = elem(s);
            assert_eq!(parse_element(&x.to_string()).unwrap(), x);
        }
        let p = product(&elem("[[]] - [] []"), &elem("[] + 1"));
        assert_eq!(parse_element(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_terms() {
        assert!(parse_element("").is_err());
        assert!(parse_element("[] + ").is_err());
        assert!(parse_element("x*[]").is_err());
        assert!(parse_element("1/0*[]").is_err());
        assert!(parse_element("2*").is_err());
    }

    #[test]
    fn error_offsets_point_into_the_input() {
        match parse_element("1*[] + 2*[x]") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
