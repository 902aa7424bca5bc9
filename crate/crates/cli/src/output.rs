//! Text and JSON rendering of values, and reconstruction from JSON.

use serde::{Deserialize, Serialize};
use symfun::{Partition, SymElement, SymRing, VarNames};

use crate::eval::{eval_str, ErrorKind, EvalError, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonElement {
    pub basis: String,
    pub terms: Vec<JsonTerm>,
}

impl JsonElement {
    /// Coefficients always use the names `q` and `t`, so the text parses back.
    pub fn from_element(f: &SymElement) -> Self {
        JsonElement {
            basis: f.basis().to_string(),
            terms: f
                .sorted_terms()
                .into_iter()
                .map(|(p, c)| JsonTerm {
                    partition: p.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_element(&self, ring: &SymRing) -> Result<SymElement, EvalError> {
        let user = |message: String| EvalError {
            kind: ErrorKind::User,
            message,
            snippet: None,
        };
        let basis = ring.basis(&self.basis).map_err(|e| user(e.to_string()))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let p = Partition::new(t.partition.clone()).map_err(|e| user(e.to_string()))?;
            let c = match eval_str(ring, &t.coeff)? {
                Value::Scalar(c) => c,
                Value::Element(_) => return Err(user(format!("`{}` is not a scalar", t.coeff))),
            };
            terms.push((p, c));
        }
        Ok(SymElement::from_terms(basis, terms))
    }
}

pub fn render_text(v: &Value, names: &VarNames) -> String {
    match v {
        Value::Scalar(c) => c.display_with(names).to_string(),
        Value::Element(f) => f.display_with(names).to_string(),
    }
}

pub fn render_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Scalar(c) => serde_json::json!({ "scalar": c.to_string() }),
        Value::Element(f) => serde_json::to_value(JsonElement::from_element(f)).expect("plain data"),
    }
}
