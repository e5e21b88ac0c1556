//! Curve records as read from and echoed to JSON.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::ellcurve::Curve;
use crate::error::{Error, Result};
use crate::verdict::{ExternalFact, NamedCurve};

/// A labelled curve. Labels are opaque; a-invariants may be JSON integers
/// or decimal strings, and are written back as integers when they fit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: String,
    pub ainvs: [BigInt; 5],
    pub known_facts: Vec<ExternalFact>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RecordJson {
    label: String,
    ainvs: Vec<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    known_facts: Vec<ExternalFact>,
}

fn int_value(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string().parse().ok(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn to_value(a: &BigInt) -> Value {
    match i64::try_from(a) {
        Ok(x) => Value::from(x),
        Err(_) => Value::String(a.to_string()),
    }
}

impl CurveRecord {
    pub fn new(label: impl Into<String>, ainvs: [BigInt; 5]) -> Self {
        CurveRecord {
            label: label.into(),
            ainvs,
            known_facts: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: RecordJson = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("malformed curve record: {e}")))?;
        let ainvs: Option<Vec<BigInt>> = j.ainvs.iter().map(int_value).collect();
        let ainvs: [BigInt; 5] = ainvs
            .and_then(|v| v.try_into().ok())
            .ok_or_else(|| Error::Domain("ainvs must be 5 integers".into()))?;
        let rec = CurveRecord {
            label: j.label,
            ainvs,
            known_facts: j.known_facts,
        };
        rec.curve()?;
        Ok(rec)
    }

    pub fn curve(&self) -> Result<Curve> {
        Curve::new(self.ainvs.clone())
    }

    pub fn named(&self) -> Result<NamedCurve> {
        Ok(NamedCurve::new(self.label.clone(), self.curve()?))
    }
}

impl Serialize for CurveRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RecordJson {
            label: self.label.clone(),
            ainvs: self.ainvs.iter().map(to_value).collect(),
            known_facts: self.known_facts.clone(),
        }
        .serialize(s)
    }
}
