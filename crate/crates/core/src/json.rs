//! JSON encoding of rationals, vectors, endomorphisms and forms.
//!
//! * rational: `"p/q"` string (bare integers, as strings or JSON integers, are
//!   accepted on input)
//! * `Vec7`: array of 7 rationals
//! * `Endo7`: `{"rows": [[7 rationals] × 7]}`, `rows[i][j] = a_ij`
//! * `Form`: `{"degree": k, "coeffs": {"i,j,k": "p/q", ...}}`, nonzero
//!   coefficients only, keys listing increasing indices

use serde_json::{Map, Value};
use thiserror::Error;

use crate::endo::Endo7;
use crate::exterior::basis::{self, DIM};
use crate::exterior::{Form, Vec7};
use crate::scalar::{format_rational, parse_rational, ParseRationalError, Q};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JsonError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: {source}")]
    Rational {
        path: String,
        source: ParseRationalError,
    },
}

fn schema(path: &str, message: impl Into<String>) -> JsonError {
    JsonError::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

pub fn parse_value(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn rational_to_json(q: &Q) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_json(v: &Value, path: &str) -> Result<Q, JsonError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|source| JsonError::Rational {
            path: path.to_string(),
            source,
        }),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Q::from_integer(i.into())),
            None => Err(schema(
                path,
                format!("number {n} is not an integer; write rationals as \"p/q\""),
            )),
        },
        _ => Err(schema(path, "expected a rational \"p/q\"")),
    }
}

pub fn vec7_to_json(v: &Vec7<Q>) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn vec7_from_json(v: &Value, path: &str) -> Result<Vec7<Q>, JsonError> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(path, "expected an array of 7 rationals"))?;
    if items.len() != DIM {
        return Err(schema(
            path,
            format!("expected 7 entries, found {}", items.len()),
        ));
    }
    let mut out = Vec7::zero();
    for (i, item) in items.iter().enumerate() {
        out.0[i] = rational_from_json(item, &format!("{path}[{i}]"))?;
    }
    Ok(out)
}

pub fn endo_to_json(a: &Endo7<Q>) -> Value {
    let rows = a
        .rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
        .collect();
    let mut m = Map::new();
    m.insert("rows".into(), Value::Array(rows));
    Value::Object(m)
}

pub fn endo_from_json(v: &Value, path: &str) -> Result<Endo7<Q>, JsonError> {
    let rows_path = format!("{path}.rows");
    let rows = v
        .get("rows")
        .ok_or_else(|| schema(path, "expected an object with a \"rows\" field"))?
        .as_array()
        .ok_or_else(|| schema(&rows_path, "expected an array of 7 rows"))?;
    if rows.len() != DIM {
        return Err(schema(
            &rows_path,
            format!("expected 7 rows, found {}", rows.len()),
        ));
    }
    let mut a = Endo7::zero();
    for (i, row) in rows.iter().enumerate() {
        let row = vec7_from_json(row, &format!("{rows_path}[{i}]"))?;
        for (j, x) in row.0.into_iter().enumerate() {
            a.set(i, j, x);
        }
    }
    Ok(a)
}

fn monomial_key(indices: &[usize]) -> String {
    indices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn form_to_json(f: &Form<Q>) -> Value {
    let mut coeffs = Map::new();
    for (pos, c) in f.coeffs().iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            coeffs.insert(monomial_key(&f.monomial_indices(pos)), rational_to_json(c));
        }
    }
    let mut m = Map::new();
    m.insert("degree".into(), Value::from(f.degree()));
    m.insert("coeffs".into(), Value::Object(coeffs));
    Value::Object(m)
}

fn parse_key(key: &str, degree: usize, path: &str) -> Result<Vec<usize>, JsonError> {
    let path = format!("{path}.coeffs[\"{key}\"]");
    let indices: Vec<usize> = if key.trim().is_empty() {
        Vec::new()
    } else {
        key.split(',')
            .map(|s| s.trim().parse::<usize>().ok().filter(|&i| i < DIM))
            .collect::<Option<_>>()
            .ok_or_else(|| schema(&path, "keys are comma-separated indices in 0..7"))?
    };
    if indices.len() != degree {
        return Err(schema(
            &path,
            format!("expected {degree} indices, found {}", indices.len()),
        ));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(schema(&path, "indices must be strictly increasing"));
    }
    Ok(indices)
}

pub fn form_from_json(v: &Value, path: &str) -> Result<Form<Q>, JsonError> {
    let degree_path = format!("{path}.degree");
    let degree = v
        .get("degree")
        .ok_or_else(|| schema(path, "expected an object with \"degree\" and \"coeffs\""))?
        .as_u64()
        .filter(|&d| d as usize <= DIM)
        .ok_or_else(|| schema(&degree_path, "degree must be an integer in 0..=7"))?
        as usize;
    let coeffs = v
        .get("coeffs")
        .ok_or_else(|| schema(path, "missing \"coeffs\""))?
        .as_object()
        .ok_or_else(|| {
            schema(
                &format!("{path}.coeffs"),
                "expected an object of monomial coefficients",
            )
        })?;
    let mut f = Form::zero(degree);
    for (key, c) in coeffs {
        let indices = parse_key(key, degree, path)?;
        let c = rational_from_json(c, &format!("{path}.coeffs[\"{key}\"]"))?;
        debug_assert!(basis::sort_indices(&indices).is_some());
        f.add_monomial(&indices, &c);
    }
    Ok(f)
}

fn form_of_degree(v: &Value, path: &str, degree: usize) -> Result<Form<Q>, JsonError> {
    let f = form_from_json(v, path)?;
    if f.degree() != degree {
        return Err(schema(
            &format!("{path}.degree"),
            format!("expected degree {degree}, found {}", f.degree()),
        ));
    }
    Ok(f)
}

pub fn parse_vec7(text: &str) -> Result<Vec7<Q>, JsonError> {
    vec7_from_json(&parse_value(text)?, "$")
}

pub fn parse_endo7(text: &str) -> Result<Endo7<Q>, JsonError> {
    endo_from_json(&parse_value(text)?, "$")
}

pub fn parse_form(text: &str) -> Result<Form<Q>, JsonError> {
    form_from_json(&parse_value(text)?, "$")
}

/// `{"d_phi": Form4, "d_star_phi": Form5, ...}`; other fields are ignored,
/// so the output of `derive` is accepted as is.
pub fn parse_recover_input(text: &str) -> Result<(Form<Q>, Form<Q>), JsonError> {
    let v = parse_value(text)?;
    let d_phi = v
        .get("d_phi")
        .ok_or_else(|| schema("$", "missing \"d_phi\""))?;
    let d_star_phi = v
        .get("d_star_phi")
        .ok_or_else(|| schema("$", "missing \"d_star_phi\""))?;
    Ok((
        form_of_degree(d_phi, "$.d_phi", 4)?,
        form_of_degree(d_star_phi, "$.d_star_phi", 5)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::phi;
    use serde_json::json;

    #[test]
    fn form_layout() {
        let v = form_to_json(&phi::<Q>());
        assert_eq!(v["degree"], 3);
        let keys: Vec<&String> = v["coeffs"].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 7);
        assert_eq!(keys[0], "0,1,3");
        assert_eq!(v["coeffs"]["0,1,3"], "1/1");
        assert_eq!(form_from_json(&v, "$").unwrap(), phi());
    }

    #[test]
    fn scalar_form_uses_empty_key() {
        let f = Form::scalar(Q::new(3.into(), 4.into()));
        let v = form_to_json(&f);
        assert_eq!(v, json!({"degree": 0, "coeffs": {"": "3/4"}}));
        assert_eq!(form_from_json(&v, "$").unwrap(), f);
    }

    #[test]
    fn endo_errors_carry_location() {
        let mut rows = vec![vec![json!("0"); 7]; 7];
        rows[3][5] = json!("1/0");
        let err = endo_from_json(&json!({ "rows": rows }), "$").unwrap_err();
        assert_eq!(err.to_string(), "$.rows[3][5]: zero denominator");
        let err = parse_endo7("{\"rows\": [\n  [1, 2,]\n]}").unwrap_err();
        assert!(matches!(err, JsonError::Syntax { line: 2, .. }), "{err:?}");
        assert!(parse_endo7("{\"rows\": [[1.5]]}").is_err());
    }

    #[test]
    fn form_key_validation() {
        assert!(parse_form(r#"{"degree": 2, "coeffs": {"1,0": "1"}}"#).is_err());
        assert!(parse_form(r#"{"degree": 2, "coeffs": {"0,7": "1"}}"#).is_err());
        assert!(parse_form(r#"{"degree": 2, "coeffs": {"0": "1"}}"#).is_err());
        assert!(parse_form(r#"{"degree": 8, "coeffs": {}}"#).is_err());
        assert_eq!(
            parse_form(r#"{"degree": 1, "coeffs": {"4": -2}}"#)
                .unwrap()
                .coeff(&[4]),
            Q::from_integer((-2).into())
        );
    }

    #[test]
    fn recover_input_degrees() {
        let ok = r#"{"d_phi": {"degree": 4, "coeffs": {}}, "d_star_phi": {"degree": 5, "coeffs": {}}, "tau": null}"#;
        assert!(parse_recover_input(ok).is_ok());
        let bad =
            r#"{"d_phi": {"degree": 5, "coeffs": {}}, "d_star_phi": {"degree": 5, "coeffs": {}}}"#;
        assert_eq!(
            parse_recover_input(bad).unwrap_err().to_string(),
            "$.d_phi.degree: expected degree 4, found 5"
        );
    }
}
