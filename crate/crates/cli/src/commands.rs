//! Data commands: each reads one JSON document and writes one.

use std::io::Read;
use std::path::Path;

use g2lab::decomp::Module;
use g2lab::invariants::InvariantSet;
use g2lab::json::{
    endo_to_json, form_to_json, parse_endo7, parse_recover_input, rational_to_json, vec7_to_json,
    JsonError,
};
use g2lab::torsion::{
    compare_formulas, d_phi, d_star_phi, fg_class, recover_t, skew_torsion, tau_forms,
    TorsionError, TorsionT,
};
use g2lab::{component_norms, components, p_map, Endo7, Q};
use serde_json::{json, Map, Value};
use thiserror::Error;

/// Exit statuses shared by every subcommand.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IDENTITY_FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const INCONSISTENT: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: String, source: JsonError },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        exit::USAGE
    }
}

/// A command's JSON result together with its exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub exit: u8,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            exit: exit::OK,
        }
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    let name = path.display().to_string();
    let io = |source| CliError::Io {
        path: name.clone(),
        source,
    };
    if name == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn parse<T>(path: &Path, text: &str, f: fn(&str) -> Result<T, JsonError>) -> Result<T, CliError> {
    f(text).map_err(|source| CliError::Input {
        path: path.display().to_string(),
        source,
    })
}

fn by_module<T>(f: impl Fn(Module) -> T) -> Value
where
    T: Into<Value>,
{
    let mut m = Map::new();
    for module in Module::ALL {
        m.insert(module.label().to_string(), f(module).into());
    }
    Value::Object(m)
}

fn class_json(class: &[Module]) -> Value {
    class.iter().map(|m| m.label()).collect::<Vec<_>>().into()
}

fn norms_json(a: &Endo7<Q>) -> Value {
    let norms = component_norms(a);
    by_module(|m| rational_to_json(&norms[m.index()]))
}

fn components_json(a: &Endo7<Q>) -> Value {
    let c = components(a);
    by_module(|m| endo_to_json(c.get(m)))
}

pub fn decompose(text: &str, path: &Path) -> Result<Outcome, CliError> {
    let a = parse(path, text, parse_endo7)?;
    let inv = InvariantSet::of(&a);
    Ok(Outcome::ok(json!({
        "input": endo_to_json(&a),
        "components": components_json(&a),
        "norms": norms_json(&a),
        "p": vec7_to_json(&p_map(&a)),
        "invariants": {
            "sigma1": rational_to_json(&inv.sigma1),
            "sigma2": rational_to_json(&inv.sigma2),
            "i0": rational_to_json(&inv.i0),
            "i1": rational_to_json(&inv.i1),
            "i2": rational_to_json(&inv.i2),
        },
        "class": class_json(&fg_class(&TorsionT(a))),
    })))
}

pub fn derive(text: &str, path: &Path) -> Result<Outcome, CliError> {
    let t = TorsionT(parse(path, text, parse_endo7)?);
    let tau = tau_forms(&t);
    Ok(Outcome::ok(json!({
        "torsion": endo_to_json(t.endo()),
        "d_phi": form_to_json(&d_phi(&t)),
        "d_star_phi": form_to_json(&d_star_phi(&t)),
        "tau": {
            "tau0": rational_to_json(&tau.tau0),
            "tau1": form_to_json(&tau.tau1),
            "tau2": form_to_json(&tau.tau2),
            "tau3": form_to_json(&tau.tau3),
        },
        "class": class_json(&fg_class(&t)),
    })))
}

pub fn recover(text: &str, path: &Path) -> Result<Outcome, CliError> {
    let (dp, dsp) = parse(path, text, parse_recover_input)?;
    match recover_t(&dp, &dsp) {
        Ok(t) => Ok(Outcome::ok(json!({
            "consistent": true,
            "torsion": endo_to_json(t.endo()),
            "components": components_json(t.endo()),
            "class": class_json(&fg_class(&t)),
            "residuals": {
                "d_phi": form_to_json(&(&d_phi(&t) - &dp)),
                "d_star_phi": form_to_json(&(&d_star_phi(&t) - &dsp)),
            },
        }))),
        Err(TorsionError::Inconsistent {
            recovered,
            d_phi_residual,
            d_star_phi_residual,
            max_residual,
        }) => Ok(Outcome {
            value: json!({
                "consistent": false,
                "torsion": endo_to_json(recovered.endo()),
                "residuals": {
                    "d_phi": form_to_json(&d_phi_residual),
                    "d_star_phi": form_to_json(&d_star_phi_residual),
                },
                "max_residual": max_residual,
            }),
            exit: exit::INCONSISTENT,
        }),
        Err(e @ TorsionError::Degree { .. }) => unreachable!("parser enforces degrees: {e}"),
    }
}

pub fn compare(text: &str, path: &Path) -> Result<Outcome, CliError> {
    let t = TorsionT(parse(path, text, parse_endo7)?);
    let formulas: Vec<Value> = compare_formulas(&t)
        .iter()
        .map(|r| {
            json!({
                "name": r.formula.name(),
                "statement": r.formula.statement(),
                "coefficients": r.coefficients.iter().map(rational_to_json).collect::<Vec<_>>(),
                "residual_at_t": rational_to_json(&r.residual_at_t),
                "consistent": r.consistent,
                "matches_reference": r.matches_reference(),
                "requires_no_x2": r.formula.requires_no_x2(),
            })
        })
        .collect();
    Ok(Outcome::ok(json!({
        "torsion": endo_to_json(t.endo()),
        "norms": norms_json(t.endo()),
        "x2_present": skew_torsion(&t).x2_present,
        "formulas": formulas,
    })))
}

pub fn classify(text: &str, path: &Path) -> Result<Outcome, CliError> {
    let t = TorsionT(parse(path, text, parse_endo7)?);
    Ok(Outcome::ok(json!({
        "class": class_json(&fg_class(&t)),
        "norms": norms_json(t.endo()),
    })))
}

/// Markdown rendering of a command result: one section per top-level field.
pub fn to_markdown(title: &str, value: &Value) -> String {
    let mut out = format!("# {title}\n\n");
    if let Value::Object(m) = value {
        for (k, v) in m {
            match v {
                Value::Object(_) | Value::Array(_) => {
                    let body = serde_json::to_string_pretty(v).unwrap_or_default();
                    out.push_str(&format!("## {k}\n\n```json\n{body}\n```\n\n"));
                }
                _ => out.push_str(&format!("- **{k}**: {v}\n")),
            }
        }
    }
    out
}
