//! CSV and JSON readers for comparison matrices.
//!
//! Values are read exactly: integers, decimals (with optional exponent) and
//! fractions `a/b` all become rationals.

use serde_json::Value;
use thiserror::Error;
use tropical_rating::{BigInt, BigRational, Matrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}, column {column}: cannot read {token:?} as a number")]
    Token {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}: expected {expected} values, found {found}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

/// A matrix read from text, with labels when the format carries them.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedMatrix {
    pub matrix: Matrix<BigRational>,
    pub labels: Option<Vec<String>>,
}

fn digits(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

fn decimal(text: &str) -> Option<BigRational> {
    let (negative, body) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(at) => {
            let exp = &body[at + 1..];
            let exp = exp.strip_prefix('+').unwrap_or(exp);
            let (neg, mag) = match exp.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, exp),
            };
            if mag.is_empty() || !mag.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let mag: i32 = mag.parse().ok().filter(|m: &i32| *m <= 4096)?;
            (&body[..at], if neg { -mag } else { mag })
        }
        None => (body, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let all = format!("{int}{frac}");
    let numer = digits(&all)?;
    let shift = exponent - frac.len() as i32;
    let ten = BigInt::from(10u8);
    let mut value = if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u32))
    } else {
        BigRational::new(numer, ten.pow(shift.unsigned_abs()))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Reads `"3"`, `"0.25"`, `"1e-2"` or `"1/3"` exactly.
pub fn parse_number(token: &str) -> Option<BigRational> {
    let token = token.trim();
    match token.split_once('/') {
        Some((num, den)) => {
            let den = decimal(den.trim())?;
            if den == BigRational::from_integer(0.into()) {
                return None;
            }
            Some(decimal(num.trim())? / den)
        }
        None => decimal(token),
    }
}

/// One row per non-blank line, values separated by commas.
pub fn parse_matrix_csv(text: &str) -> Result<Matrix<BigRational>, ParseError> {
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (index, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = index + 1;
        let mut row = Vec::new();
        for (col, token) in line.split(',').enumerate() {
            let value = parse_number(token).ok_or_else(|| ParseError::Token {
                line: line_no,
                column: col + 1,
                token: token.trim().to_string(),
            })?;
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::Ragged {
                    line: line_no,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(Matrix::from_rows(rows).expect("rows checked"))
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn json_entry(value: &Value, path: &str) -> Result<BigRational, ParseError> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(schema(path, "expected a number or a fraction string")),
    };
    parse_number(&text).ok_or_else(|| schema(path, format!("cannot read {text:?} as a number")))
}

/// `{"matrix": [[...], ...], "labels": [...]}` with numbers or strings such
/// as `"1/3"` as entries.
pub fn parse_matrix_json(text: &str) -> Result<ParsedMatrix, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let root: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let object = root
        .as_object()
        .ok_or_else(|| schema("$", "expected an object"))?;
    let rows = object
        .get("matrix")
        .ok_or_else(|| schema("$", "missing \"matrix\""))?
        .as_array()
        .ok_or_else(|| schema("matrix", "expected an array of rows"))?;
    if rows.is_empty() {
        return Err(schema("matrix", "no rows"));
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let path = format!("matrix[{i}]");
        let row = row
            .as_array()
            .ok_or_else(|| schema(&path, "expected an array"))?;
        if row.len() != rows.len() {
            return Err(schema(
                &path,
                format!("expected {} values, found {}", rows.len(), row.len()),
            ));
        }
        let values = row
            .iter()
            .enumerate()
            .map(|(j, v)| json_entry(v, &format!("{path}[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(values);
    }
    let labels = match object.get("labels") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => {
            if items.len() != rows.len() {
                return Err(schema(
                    "labels",
                    format!("{} labels for {} alternatives", items.len(), rows.len()),
                ));
            }
            let names = items
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| schema(format!("labels[{i}]"), "expected a string"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Some(names)
        }
        Some(_) => return Err(schema("labels", "expected an array of strings")),
    };
    Ok(ParsedMatrix {
        matrix: Matrix::from_rows(parsed).expect("rows checked"),
        labels,
    })
}
