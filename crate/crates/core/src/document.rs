//! JSON documents for bialgebras and machine-readable reports.
//!
//! A document names `g` and `g*` either by catalog reference or by their
//! nonzero structure constants `f^ij_k` with `i < j` (1-based). Rationals
//! are strings. Keys are written in sorted order and numbers in lowest
//! terms, so a canonical document survives a parse/serialize round trip
//! byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bialgebra::{JacobiLieBialgebra, VerificationReport};
use crate::catalog::{self, LieAlgebra};
use crate::equivalence::{catalog_match, EquivalenceVerdict, Identification};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::tables::{SampleOutcome, TableReport};
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Catalog {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<String>,
    },
    Constants(Vec<Constant>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraDocument {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub dim: usize,
    pub g: AlgebraSpec,
    pub gstar: AlgebraSpec,
}

fn scalar_at(field: &str, s: &str) -> Result<Scalar> {
    s.parse()
        .map_err(|e| Error::Parse(format!("{field}: {e}")))
}

impl AlgebraSpec {
    /// Reference to a catalog algebra.
    pub fn catalog(g: &LieAlgebra) -> Self {
        AlgebraSpec::Catalog {
            name: g.name.to_string(),
            param: g.param.as_ref().map(Scalar::to_string),
        }
    }

    /// Explicit nonzero constants in `(i, j, k)` order.
    pub fn constants(t: &StructureTensor) -> Self {
        AlgebraSpec::Constants(
            t.upper_entries()
                .into_iter()
                .map(|(i, j, k, v)| Constant {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    value: v.to_string(),
                })
                .collect(),
        )
    }

    pub fn resolve(&self, dim: usize, field: &str) -> Result<StructureTensor> {
        match self {
            AlgebraSpec::Catalog { name, param } => {
                let param = param
                    .as_deref()
                    .map(|p| scalar_at(&format!("{field}.param"), p))
                    .transpose()?;
                let g = catalog::lookup_str(name, param)
                    .map_err(|e| Error::Parse(format!("{field}: {e}")))?;
                if g.dim() != dim {
                    return Err(Error::Parse(format!(
                        "{field}: {} has dimension {}, document has {dim}",
                        g.label(),
                        g.dim()
                    )));
                }
                Ok(g.tensor)
            }
            AlgebraSpec::Constants(list) => {
                let mut entries = Vec::with_capacity(list.len());
                for (n, c) in list.iter().enumerate() {
                    let at = format!("{field}[{n}]");
                    let in_range = |x: usize| (1..=dim).contains(&x);
                    if !(in_range(c.i) && in_range(c.j) && in_range(c.k)) {
                        return Err(Error::Parse(format!("{at}: indices must lie in 1..={dim}")));
                    }
                    if c.i >= c.j {
                        return Err(Error::Parse(format!("{at}: expected i < j")));
                    }
                    if entries.iter().any(|&(i, j, k, _)| (i, j, k) == (c.i - 1, c.j - 1, c.k - 1)) {
                        return Err(Error::Parse(format!("{at}: duplicate constant")));
                    }
                    let v = scalar_at(&format!("{at}.value"), &c.value)?;
                    entries.push((c.i - 1, c.j - 1, c.k - 1, v));
                }
                StructureTensor::from_entries(dim, &entries)
            }
        }
    }
}

impl BialgebraDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// `g` as a catalog reference when it is one, `g*` as constants.
    pub fn from_bialgebra(b: &JacobiLieBialgebra) -> Self {
        let g = match catalog_match(&b.g) {
            Some(g) => AlgebraSpec::catalog(&g),
            None => AlgebraSpec::constants(&b.g),
        };
        BialgebraDocument {
            alpha: b.alpha.entries().iter().map(Scalar::to_string).collect(),
            beta: b.beta.entries().iter().map(Scalar::to_string).collect(),
            dim: b.dim(),
            g,
            gstar: AlgebraSpec::constants(&b.gstar),
        }
    }

    pub fn to_bialgebra(&self) -> Result<JacobiLieBialgebra> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::Parse("dim: must be positive".into()));
        }
        let vector = |field: &str, v: &[String]| -> Result<Vector> {
            if v.len() != d {
                return Err(Error::Parse(format!(
                    "{field}: expected {d} entries, found {}",
                    v.len()
                )));
            }
            v.iter()
                .enumerate()
                .map(|(n, s)| scalar_at(&format!("{field}[{n}]"), s))
                .collect::<Result<Vec<_>>>()
                .map(Vector::new)
        };
        JacobiLieBialgebra::new(
            self.g.resolve(d, "g")?,
            self.gstar.resolve(d, "gstar")?,
            vector("alpha", &self.alpha)?,
            vector("beta", &self.beta)?,
        )
    }
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

pub fn report_json(r: &VerificationReport) -> Value {
    let conditions: Vec<Value> = r
        .conditions
        .iter()
        .map(|c| {
            json!({
                "condition": c.condition.as_str(),
                "first_violation": c.first_violation.as_ref().map(|v| v.iter().map(|x| x + 1).collect::<Vec<_>>()),
                "max_abs": c.max_abs.to_string(),
                "passed": c.passed(),
            })
        })
        .collect();
    json!({ "conditions": conditions, "passed": r.passed() })
}

pub fn verdict_json(v: &EquivalenceVerdict) -> Value {
    json!({
        "searched": v.searched,
        "status": if v.is_equivalent() { "equivalent" } else { "unknown" },
        "witness": v.witness().map(matrix_json),
    })
}

pub fn identification_json(id: &Identification) -> Value {
    json!({
        "algebra": id.algebra.name.to_string(),
        "c": matrix_json(&id.c),
        "param": id.algebra.param.as_ref().map(Scalar::to_string),
    })
}

pub fn table_report_json(r: &TableReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let samples: Vec<Value> = row
                .samples
                .iter()
                .map(|(env, o)| {
                    let env: serde_json::Map<String, Value> = env
                        .iter()
                        .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
                        .collect();
                    let (outcome, detail) = match o {
                        SampleOutcome::Passed => ("passed", Value::Null),
                        SampleOutcome::Failed(rep) => ("failed", report_json(rep)),
                        SampleOutcome::Skipped(why) => ("skipped", Value::String(why.clone())),
                        SampleOutcome::Invalid(why) => ("invalid", Value::String(why.clone())),
                    };
                    json!({ "detail": detail, "env": env, "outcome": outcome })
                })
                .collect();
            json!({
                "label": row.label,
                "passed": row.passed(),
                "row": row.index + 1,
                "samples": samples,
                "table": row.table,
            })
        })
        .collect();
    json!({ "passed": r.passed(), "rows": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    const III_VI: &str = r#"{
  "alpha": [
    "0",
    "-1",
    "-1"
  ],
  "beta": [
    "-2",
    "0",
    "0"
  ],
  "dim": 3,
  "g": {
    "name": "III"
  },
  "gstar": [
    {
      "i": 1,
      "j": 2,
      "k": 1,
      "value": "1"
    },
    {
      "i": 1,
      "j": 3,
      "k": 1,
      "value": "1"
    },
    {
      "i": 2,
      "j": 3,
      "k": 2,
      "value": "1"
    },
    {
      "i": 2,
      "j": 3,
      "k": 3,
      "value": "-1"
    }
  ]
}
"#;

    #[test]
    fn canonical_document_round_trips() {
        let doc = BialgebraDocument::parse(III_VI).unwrap();
        assert_eq!(doc.to_json(), III_VI);
        let b = doc.to_bialgebra().unwrap();
        assert!(b.verify().passed());
        assert_eq!(BialgebraDocument::from_bialgebra(&b).to_json(), III_VI);
    }

    #[test]
    fn catalog_references_resolve() {
        let text = r#"{"alpha":["0","0","0"],"beta":["0","0","0"],"dim":3,
            "g":{"name":"VI_a","param":"1/2"},"gstar":{"name":"I"}}"#;
        let b = BialgebraDocument::parse(text).unwrap().to_bialgebra().unwrap();
        assert_eq!(b.g.get(0, 1, 1), &-Scalar::ratio(1, 2).unwrap());
        assert!(b.gstar.is_zero());
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            (r#"{"alpha":["0","x"],"beta":["0","0"],"dim":2,"g":{"name":"A2"},"gstar":[]}"#, "alpha[1]"),
            (r#"{"alpha":["0","0"],"beta":["0","0"],"dim":2,"g":{"name":"A2"},"gstar":[{"i":2,"j":1,"k":1,"value":"1"}]}"#, "gstar[0]"),
            (r#"{"alpha":["0","0"],"beta":["0"],"dim":2,"g":{"name":"A2"},"gstar":[]}"#, "beta"),
            (r#"{"alpha":["0","0"],"beta":["0","0"],"dim":2,"g":{"name":"V"},"gstar":[]}"#, "g:"),
        ];
        for (text, field) in cases {
            let err = BialgebraDocument::parse(text).unwrap().to_bialgebra().unwrap_err();
            assert!(err.to_string().contains(field), "{err}");
        }
        let err = BialgebraDocument::parse("{\n  \"dim\": 2,\n  oops\n}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn report_json_is_stable() {
        let b = BialgebraDocument::parse(III_VI).unwrap().to_bialgebra().unwrap();
        let v = report_json(&b.verify());
        assert_eq!(v["passed"], true);
        assert_eq!(v["conditions"].as_array().unwrap().len(), 7);
        assert_eq!(v["conditions"][0]["first_violation"], Value::Null);
    }
}
