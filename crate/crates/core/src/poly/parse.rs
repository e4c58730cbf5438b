use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use super::IntPoly;
use crate::error::{Error, Result};

const MAX_PARSED_DEGREE: usize = 1 << 20;

/// Accepts either a JSON coefficient array (ascending degree, decimal strings
/// or plain integers) or human syntax such as `x^4+3x^3-2x+1`. A leading `[`
/// selects the JSON form.
pub(crate) fn parse_poly(s: &str) -> Result<IntPoly> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        from_json_value(&v)
    } else {
        parse_human(t)
    }
}

pub(crate) fn from_json_value(v: &Value) -> Result<IntPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a JSON array of coefficients".into()))?;
    let coeffs = arr
        .iter()
        .map(|c| match c {
            Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))),
            Value::Number(n) if n.is_i64() || n.is_u64() => n
                .to_string()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {n}"))),
            other => Err(Error::Parse(format!("bad coefficient {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

fn parse_human(s: &str) -> Result<IntPoly> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut var: Option<char> = None;
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = BigInt::one();
        let mut saw_sign = false;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if saw_sign {
                return Err(Error::Parse(format!("repeated sign at position {i}")));
            }
            if chars[i] == '-' {
                sign = -sign;
            }
            saw_sign = true;
            i += 1;
        }
        if i > 0 && !saw_sign {
            return Err(Error::Parse(format!("expected '+' or '-' at position {i}")));
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if i > start {
            chars[start..i]
                .iter()
                .collect::<String>()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(e.to_string()))?
        } else {
            BigInt::one()
        };
        let has_number = i > start;
        if i < chars.len() && chars[i] == '*' {
            if !has_number {
                return Err(Error::Parse(format!("dangling '*' at position {i}")));
            }
            i += 1;
            if i >= chars.len() || !chars[i].is_ascii_alphabetic() {
                return Err(Error::Parse("expected variable after '*'".into()));
            }
        }
        let mut exp = 0usize;
        if i < chars.len() && chars[i].is_ascii_alphabetic() {
            let v = chars[i];
            match var {
                Some(w) if w != v => {
                    return Err(Error::Parse(format!(
                        "more than one variable symbol: {w} and {v}"
                    )))
                }
                _ => var = Some(v),
            }
            i += 1;
            exp = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let es = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(Error::Parse("missing exponent after '^'".into()));
                }
                exp = chars[es..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                if exp > MAX_PARSED_DEGREE {
                    return Err(Error::Parse("exponent too large".into()));
                }
            }
        } else if !has_number {
            let what = chars.get(i).map_or("end of input".to_string(), |c| format!("{c:?}"));
            return Err(Error::Parse(format!("expected a term, found {what}")));
        }
        if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            return Err(Error::Parse(format!(
                "unexpected character {:?} at position {i}",
                chars[i]
            )));
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += sign * coeff;
    }
    Ok(IntPoly::new(coeffs))
}
