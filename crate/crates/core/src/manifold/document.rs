//! The JSON manifold file format.
//!
//! ```json
//! {
//!   "name": "heisenberg3",
//!   "dimension": 3,
//!   "brackets": [ { "i": 1, "j": 2, "coeffs": { "3": 2 } } ],
//!   "phi": [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
//!   "xi": [0, 0, 1]
//! }
//! ```
//!
//! Indices are 1-based. Rationals are JSON integers or strings `"p/q"`.
//! `metric` (default identity) and `eta` (default `g(., xi)`) are optional.
//! Unknown fields are rejected.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{FrameManifold, ManifoldData, ManifoldError};
use crate::kernel::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDocument {
    pub name: String,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<Value>>>,
    pub brackets: Vec<BracketEntry>,
    pub phi: Vec<Vec<Value>>,
    pub xi: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, Value>,
}

/// Parses and validates a manifold file.
pub fn parse_manifold(text: &str) -> Result<FrameManifold, ManifoldError> {
    let doc: ManifoldDocument =
        serde_json::from_str(text).map_err(|e| ManifoldError::Syntax(e.to_string()))?;
    doc.to_manifold()
}

fn literal(value: &Value, location: &str) -> Result<Rat, ManifoldError> {
    let bad = |message: String| ManifoldError::MalformedRational {
        location: location.to_string(),
        message,
    };
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rat::int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from_integer(u.into()))
            } else {
                Err(bad(format!(
                    "{n} is not exact; write fractions as strings \"p/q\""
                )))
            }
        }
        Value::String(s) => rat::parse(s).map_err(|e| bad(e.to_string())),
        other => Err(bad(format!("expected an integer or \"p/q\" string, found {other}"))),
    }
}

/// JSON value for a rational: a number when integral, `"p/q"` otherwise.
pub(crate) fn to_literal(r: &Rat) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(rat::render(r))
}

fn vector_at(values: &[Value], dim: usize, location: &str) -> Result<Vec<Rat>, ManifoldError> {
    if values.len() != dim {
        return Err(ManifoldError::Shape {
            location: location.to_string(),
            expected: dim,
            found: values.len(),
        });
    }
    values
        .iter()
        .enumerate()
        .map(|(i, v)| literal(v, &format!("{location}[{i}]")))
        .collect()
}

fn matrix_at(rows: &[Vec<Value>], dim: usize, location: &str) -> Result<Vec<Vec<Rat>>, ManifoldError> {
    if rows.len() != dim {
        return Err(ManifoldError::Shape {
            location: location.to_string(),
            expected: dim,
            found: rows.len(),
        });
    }
    rows.iter()
        .enumerate()
        .map(|(i, r)| vector_at(r, dim, &format!("{location}[{i}]")))
        .collect()
}

impl ManifoldDocument {
    pub fn to_manifold(&self) -> Result<FrameManifold, ManifoldError> {
        let dim = self.dimension;
        if dim.is_multiple_of(2) {
            return Err(ManifoldError::EvenDimension(dim));
        }
        let in_range = |index: usize, location: String| {
            if (1..=dim).contains(&index) {
                Ok(index - 1)
            } else {
                Err(ManifoldError::IndexOutOfRange {
                    location,
                    index,
                    dim,
                })
            }
        };

        let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (n, entry) in self.brackets.iter().enumerate() {
            let here = format!("brackets[{n}]");
            let i = in_range(entry.i, format!("{here}.i"))?;
            let j = in_range(entry.j, format!("{here}.j"))?;
            if let Some(&prev) = seen.get(&(i, j)) {
                return Err(ManifoldError::DuplicateBracket {
                    location: format!("{here} (first given at brackets[{prev}])"),
                    i: i + 1,
                    j: j + 1,
                });
            }
            seen.insert((i, j), n);
            let mut coeffs = vec![Rat::zero(); dim];
            for (key, value) in &entry.coeffs {
                let loc = format!("{here}.coeffs.{key}");
                let k: usize = key.trim().parse().map_err(|_| ManifoldError::MalformedRational {
                    location: loc.clone(),
                    message: format!("coefficient key {key:?} is not a frame index"),
                })?;
                let k = in_range(k, loc.clone())?;
                coeffs[k] = literal(value, &loc)?;
            }
            for (k, v) in coeffs.into_iter().enumerate() {
                if i == j {
                    if !v.is_zero() {
                        return Err(antisymmetry(&here, i, j, k, &v, &v));
                    }
                    continue;
                }
                if let Some(&other) = seen.get(&(j, i)) {
                    // Both orders given: they must agree up to sign.
                    let back = c[k][j][i].clone();
                    if back != -v.clone() {
                        return Err(antisymmetry(
                            &format!("{here} vs brackets[{other}]"),
                            i,
                            j,
                            k,
                            &v,
                            &back,
                        ));
                    }
                }
                c[k][j][i] = -v.clone();
                c[k][i][j] = v;
            }
        }

        let data = ManifoldData {
            name: self.name.clone(),
            dim,
            brackets: c,
            metric: self
                .metric
                .as_ref()
                .map(|m| matrix_at(m, dim, "metric"))
                .transpose()?,
            phi: matrix_at(&self.phi, dim, "phi")?,
            xi: vector_at(&self.xi, dim, "xi")?,
            eta: self
                .eta
                .as_ref()
                .map(|e| vector_at(e, dim, "eta"))
                .transpose()?,
        };
        FrameManifold::new(data)
    }

    /// Document for an existing manifold; brackets are listed with `i < j`
    /// and `eta` is omitted (it always equals `g(., xi)`).
    pub fn from_manifold(m: &FrameManifold) -> Self {
        let d = m.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let coeffs: BTreeMap<String, Value> = (0..d)
                    .filter(|&k| !m.brackets().get(&[k, i, j]).is_zero())
                    .map(|k| ((k + 1).to_string(), to_literal(m.brackets().get(&[k, i, j]))))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        coeffs,
                    });
                }
            }
        }
        let metric_rows = m.metric().as_matrix();
        let identity = (0..d).all(|i| {
            (0..d).all(|j| metric_rows[i][j] == if i == j { rat::one() } else { Rat::zero() })
        });
        let matrix = |rows: Vec<Vec<Rat>>| -> Vec<Vec<Value>> {
            rows.iter().map(|r| r.iter().map(to_literal).collect()).collect()
        };
        ManifoldDocument {
            name: m.name().to_string(),
            dimension: d,
            metric: (!identity).then(|| matrix(metric_rows.clone())),
            brackets,
            phi: matrix(m.phi().as_matrix()),
            xi: m.xi().iter().map(to_literal).collect(),
            eta: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

fn antisymmetry(location: &str, i: usize, j: usize, k: usize, forward: &Rat, backward: &Rat) -> ManifoldError {
    ManifoldError::Antisymmetry {
        location: location.to_string(),
        i: i + 1,
        j: j + 1,
        k: k + 1,
        forward: rat::render(forward),
        backward: rat::render(backward),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::kernel::rat::{frac, int};

    const H3: &str = r#"{
        "name": "h3",
        "dimension": 3,
        "brackets": [ { "i": 1, "j": 2, "coeffs": { "3": 2 } } ],
        "phi": [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
        "xi": [0, 0, 1]
    }"#;

    #[test]
    fn parses_minimal_document() {
        let m = parse_manifold(H3).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(*m.brackets().get(&[2, 0, 1]), int(2));
        assert_eq!(*m.brackets().get(&[2, 1, 0]), int(-2));
        assert_eq!(m.eta(), &[int(0), int(0), int(1)]);
        assert_eq!(m, builtins::manifold("heisenberg3").unwrap().renamed("h3"));
    }

    #[test]
    fn fractional_literals() {
        let text = H3.replace(r#""3": 2"#, r#""3": "4/2""#);
        assert_eq!(*parse_manifold(&text).unwrap().brackets().get(&[2, 0, 1]), int(2));
        let text = H3.replace(r#""xi": [0, 0, 1]"#, r#""xi": [0, 0, "1/1"], "metric": [[1,0,0],[0,"1/2",0],[0,0,1]]"#);
        let m = parse_manifold(&text).unwrap();
        assert_eq!(*m.metric().get(&[1, 1]), frac(1, 2));
    }

    #[test]
    fn malformed_rational_names_location() {
        let text = H3.replace(r#""3": 2"#, r#""3": "2/x""#);
        let err = parse_manifold(&text).unwrap_err();
        assert!(matches!(err, ManifoldError::MalformedRational { ref location, .. } if location == "brackets[0].coeffs.3"));
        let text = H3.replace(r#""xi": [0, 0, 1]"#, r#""xi": [0, 0, 1.5]"#);
        let err = parse_manifold(&text).unwrap_err();
        assert!(matches!(err, ManifoldError::MalformedRational { ref location, .. } if location == "xi[2]"));
    }

    #[test]
    fn conflicting_orders_violate_antisymmetry() {
        let text = H3.replace(
            r#"{ "i": 1, "j": 2, "coeffs": { "3": 2 } }"#,
            r#"{ "i": 1, "j": 2, "coeffs": { "3": 2 } }, { "i": 2, "j": 1, "coeffs": { "3": 2 } }"#,
        );
        let err = parse_manifold(&text).unwrap_err();
        assert!(matches!(err, ManifoldError::Antisymmetry { i: 2, j: 1, k: 3, .. }), "{err}");
    }

    #[test]
    fn self_bracket_and_duplicates_rejected() {
        let text = H3.replace(r#""i": 1, "j": 2"#, r#""i": 2, "j": 2"#);
        assert!(matches!(parse_manifold(&text), Err(ManifoldError::Antisymmetry { .. })));
        let text = H3.replace(
            r#"{ "i": 1, "j": 2, "coeffs": { "3": 2 } }"#,
            r#"{ "i": 1, "j": 2, "coeffs": { "3": 2 } }, { "i": 1, "j": 2, "coeffs": { "3": 1 } }"#,
        );
        assert!(matches!(parse_manifold(&text), Err(ManifoldError::DuplicateBracket { .. })));
    }

    #[test]
    fn strict_fields_and_shapes() {
        let text = H3.replace(r#""name": "h3","#, r#""name": "h3", "torsion": 0,"#);
        assert!(matches!(parse_manifold(&text), Err(ManifoldError::Syntax(_))));
        let text = H3.replace(r#""dimension": 3"#, r#""dimension": 4"#);
        assert_eq!(parse_manifold(&text).unwrap_err(), ManifoldError::EvenDimension(4));
        let text = H3.replace(r#""xi": [0, 0, 1]"#, r#""xi": [0, 1]"#);
        assert!(matches!(parse_manifold(&text), Err(ManifoldError::Shape { .. })));
        let text = H3.replace(r#""3": 2"#, r#""7": 2"#);
        assert!(matches!(parse_manifold(&text), Err(ManifoldError::IndexOutOfRange { index: 7, .. })));
    }

    #[test]
    fn export_reparses_to_same_manifold() {
        for name in builtins::NAMES {
            let m = builtins::manifold(name).unwrap();
            let json = ManifoldDocument::from_manifold(&m).to_json();
            assert_eq!(parse_manifold(&json).unwrap(), m, "{name}");
        }
    }
}
