//! Text and JSON forms for elements, polynomials, and 2x2 matrices.
//!
//! Element grammar: signed terms `c*e<k>`, `e<k>`, or a bare scalar, joined
//! by `+`/`-`. Scalars are integers, fractions `p/q`, or (float mode)
//! decimals. Polynomials are `;`-separated element literals, constant term
//! first. JSON: an element is an array of 2^m scalar strings; a matrix is
//! {"a": ..., "b": ..., "c": ..., "d": ...}.

use crate::algebra::{Algebra, Element};
use crate::eigen::Matrix2;
use crate::error::{CdError, Result};
use crate::poly::CdPoly;
use crate::scalar::Scalar;
use serde_json::{json, Value};

pub fn parse_element(text: &str, algebra: &Algebra) -> Result<Element> {
    let text = text.trim();
    if text.is_empty() {
        return Err(CdError::Parse {
            pos: 0,
            msg: "empty element literal".into(),
        });
    }
    let mut coords = vec![Scalar::zero(algebra.mode()); algebra.dim()];
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut sign = 1i64;
    let mut first = true;
    while pos < bytes.len() {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        match bytes[pos] {
            b'+' => {
                if first {
                    return Err(CdError::Parse {
                        pos,
                        msg: "leading '+' not allowed".into(),
                    });
                }
                pos += 1;
                first = false;
                continue;
            }
            b'-' => {
                sign = -sign;
                pos += 1;
                first = false;
                continue;
            }
            _ => {}
        }
        first = false;
        let start = pos;
        while pos < bytes.len() && !matches!(bytes[pos], b'+' | b'-') {
            // keep '-' inside nothing: exponents are not supported, so any
            // '-' terminates the term
            pos += 1;
        }
        let term = text[start..pos].trim();
        if term.is_empty() {
            return Err(CdError::Parse {
                pos: start,
                msg: "empty term".into(),
            });
        }
        let (coeff, index) = parse_term(term, start, algebra)?;
        let signed = if sign < 0 { -&coeff } else { coeff };
        coords[index] = &coords[index] + &signed;
        sign = 1;
    }
    algebra.from_coords(coords)
}

fn parse_term(term: &str, pos: usize, algebra: &Algebra) -> Result<(Scalar, usize)> {
    let parse_basis = |b: &str| -> Result<usize> {
        let idx: usize = b[1..].parse().map_err(|_| CdError::Parse {
            pos,
            msg: format!("bad basis index in {term:?}"),
        })?;
        if idx >= algebra.dim() {
            return Err(CdError::IndexOutOfRange(idx, algebra.dim()));
        }
        Ok(idx)
    };
    if let Some((c, b)) = term.split_once('*') {
        let b = b.trim();
        if !b.starts_with('e') {
            return Err(CdError::Parse {
                pos,
                msg: format!("expected basis vector after '*' in {term:?}"),
            });
        }
        Ok((Scalar::parse(c, algebra.mode())?, parse_basis(b)?))
    } else if term.starts_with('e') && term.len() > 1 && term.as_bytes()[1].is_ascii_digit() {
        Ok((Scalar::one(algebra.mode()), parse_basis(term)?))
    } else {
        Ok((Scalar::parse(term, algebra.mode())?, 0))
    }
}

pub fn element_to_string(x: &Element) -> String {
    let mut out = String::new();
    for (k, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if k == 0 {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&format!("e{k}"));
        } else {
            out.push_str(&format!("{mag}*e{k}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn element_to_json(x: &Element) -> Value {
    Value::Array(
        x.coords()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn element_from_json(v: &Value, algebra: &Algebra) -> Result<Element> {
    match v {
        Value::String(s) => parse_element(s, algebra),
        Value::Array(items) => {
            let coords = items
                .iter()
                .map(|item| match item {
                    Value::String(s) => Scalar::parse(s, algebra.mode()),
                    Value::Number(n) => Scalar::parse(&n.to_string(), algebra.mode()),
                    _ => Err(CdError::Parse {
                        pos: 0,
                        msg: "coordinate must be a string or number".into(),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            algebra.from_coords(coords)
        }
        _ => Err(CdError::Parse {
            pos: 0,
            msg: "element must be a string or array".into(),
        }),
    }
}

/// `;`-separated element literals, constant term first.
pub fn parse_poly(text: &str, algebra: &Algebra) -> Result<CdPoly> {
    let coeffs = text
        .split(';')
        .map(|part| parse_element(part, algebra))
        .collect::<Result<Vec<_>>>()?;
    Ok(CdPoly::new(algebra.clone(), coeffs))
}

pub fn poly_to_string(f: &CdPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.coeffs()
        .iter()
        .map(element_to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn poly_to_json(f: &CdPoly) -> Value {
    Value::Array(f.coeffs().iter().map(element_to_json).collect())
}

pub fn parse_matrix(v: &Value, algebra: &Algebra) -> Result<Matrix2> {
    let get = |key: &str| -> Result<Element> {
        let entry = v.get(key).ok_or_else(|| CdError::Parse {
            pos: 0,
            msg: format!("matrix JSON missing entry {key:?}"),
        })?;
        element_from_json(entry, algebra)
    };
    Matrix2::new(get("a")?, get("b")?, get("c")?, get("d")?)
}

pub fn matrix_to_json(m: &Matrix2) -> Value {
    json!({
        "a": element_to_json(&m.a),
        "b": element_to_json(&m.b),
        "c": element_to_json(&m.c),
        "d": element_to_json(&m.d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::seeded_rng;
    use crate::scalar::ScalarMode;

    #[test]
    fn parse_basic_forms() {
        let s = Algebra::sedenions();
        let x = parse_element("e1+e10", &s).unwrap();
        assert_eq!(x, s.basis(1).unwrap().add(&s.basis(10).unwrap()));
        let half_beta = parse_element("1/2*e7+1/2*e12", &s).unwrap();
        let beta = s.basis(7).unwrap().add(&s.basis(12).unwrap());
        assert_eq!(half_beta, beta.scale(&Scalar::from_ratio(1, 2, ScalarMode::Rational)));
        let neg = parse_element("-3+2*e2-e5", &s).unwrap();
        assert_eq!(neg, s.from_ints(&[-3, 0, 2, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap());
    }

    #[test]
    fn out_of_range_index() {
        let s = Algebra::sedenions();
        assert!(matches!(
            parse_element("e17", &s),
            Err(CdError::IndexOutOfRange(17, 16))
        ));
    }

    #[test]
    fn zero_denominator() {
        let s = Algebra::sedenions();
        assert!(parse_element("1/0*e1", &s).is_err());
    }

    #[test]
    fn element_roundtrip() {
        let s = Algebra::sedenions();
        let mut rng = seeded_rng(41);
        for _ in 0..30 {
            let x = s.random_small(&mut rng);
            let text = element_to_string(&x);
            assert_eq!(parse_element(&text, &s).unwrap(), x, "text: {text}");
            // canonical forms round-trip byte-identically
            assert_eq!(element_to_string(&parse_element(&text, &s).unwrap()), text);
            let j = element_to_json(&x);
            assert_eq!(element_from_json(&j, &s).unwrap(), x);
        }
    }

    #[test]
    fn poly_roundtrip() {
        let s = Algebra::sedenions();
        let f = parse_poly("e7+e12; 0; 1/2*e7+1/2*e12", &s).unwrap();
        assert_eq!(f.degree(), Some(2));
        let text = poly_to_string(&f);
        assert_eq!(parse_poly(&text, &s).unwrap(), f);
    }

    #[test]
    fn matrix_roundtrip() {
        let o = Algebra::octonions();
        let m = Matrix2::new(
            o.basis(1).unwrap(),
            o.one(),
            o.basis(3).unwrap(),
            o.basis(2).unwrap(),
        )
        .unwrap();
        let j = matrix_to_json(&m);
        assert_eq!(parse_matrix(&j, &o).unwrap(), m);
        // string entries also accepted
        let j2 = serde_json::json!({"a": "e1", "b": "1", "c": "e3", "d": "e2"});
        assert_eq!(parse_matrix(&j2, &o).unwrap(), m);
    }

    #[test]
    fn float_decimals() {
        let o = Algebra::octonions_f64(1e-9);
        let x = parse_element("0.5*e1-2.25", &o).unwrap();
        assert_eq!(x.coord(0), &Scalar::F(-2.25));
        assert_eq!(x.coord(1), &Scalar::F(0.5));
    }
}
