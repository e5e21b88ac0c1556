//! Literature inputs. Facts are never derived by the engine; every
//! certificate line that consumes one quotes its provenance.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::ellcurve::Curve;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactKind {
    /// R_{p^inf}(E/K^ac) is Lambda-cotorsion with mu_fine = 0.
    FineMuZero(String),
    CotorsionAssumed(String),
    /// mu(Y_i) = 0 for i = 1 or 2.
    MuYZero(u8),
    /// mu(K^ac/K) = 0.
    ClassicalMuZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExternalFact {
    pub kind: FactKind,
    pub provenance: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    curve: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<u8>,
    #[serde(default)]
    provenance: String,
}

impl ExternalFact {
    pub fn new(kind: FactKind, provenance: impl Into<String>) -> Self {
        ExternalFact {
            kind,
            provenance: provenance.into(),
        }
    }

    fn from_json(j: FactJson) -> Result<Self> {
        let need_curve = |c: Option<String>| {
            c.filter(|s| !s.trim().is_empty())
                .ok_or_else(|| Error::domain(format!("fact {} needs a \"curve\" field", j.kind)))
        };
        let kind = match j.kind.as_str() {
            "FineMuZero" => FactKind::FineMuZero(need_curve(j.curve)?),
            "CotorsionAssumed" => FactKind::CotorsionAssumed(need_curve(j.curve)?),
            "MuYZero" => match j.index {
                Some(i @ (1 | 2)) => FactKind::MuYZero(i),
                _ => return Err(Error::domain("MuYZero needs \"index\": 1 or 2")),
            },
            "ClassicalMuZero" => FactKind::ClassicalMuZero,
            other => return Err(Error::domain(format!("unknown fact kind {other:?}"))),
        };
        Ok(ExternalFact {
            kind,
            provenance: j.provenance,
        })
    }

    fn to_json(&self) -> FactJson {
        let (kind, curve, index) = match &self.kind {
            FactKind::FineMuZero(c) => ("FineMuZero", Some(c.clone()), None),
            FactKind::CotorsionAssumed(c) => ("CotorsionAssumed", Some(c.clone()), None),
            FactKind::MuYZero(i) => ("MuYZero", None, Some(*i)),
            FactKind::ClassicalMuZero => ("ClassicalMuZero", None, None),
        };
        FactJson {
            kind: kind.to_string(),
            curve,
            index,
            provenance: self.provenance.clone(),
        }
    }

    /// The curve this fact is about, if any.
    pub fn curve(&self) -> Option<&str> {
        match &self.kind {
            FactKind::FineMuZero(c) | FactKind::CotorsionAssumed(c) => Some(c),
            _ => None,
        }
    }

    pub fn citation(&self) -> String {
        if self.provenance.is_empty() {
            format!("fact {self} (no provenance given)")
        } else {
            format!("fact {self} [{}]", self.provenance)
        }
    }
}

impl fmt::Display for ExternalFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FactKind::FineMuZero(c) => write!(f, "FineMuZero({c})"),
            FactKind::CotorsionAssumed(c) => write!(f, "CotorsionAssumed({c})"),
            FactKind::MuYZero(i) => write!(f, "MuYZero({i})"),
            FactKind::ClassicalMuZero => write!(f, "ClassicalMuZero"),
        }
    }
}

impl Serialize for ExternalFact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExternalFact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FactJson::deserialize(d)?;
        ExternalFact::from_json(j).map_err(serde::de::Error::custom)
    }
}

/// Parse a facts file: a JSON array of fact objects.
pub fn parse_facts(text: &str) -> Result<Vec<ExternalFact>> {
    serde_json::from_str(text).map_err(|e| Error::domain(format!("malformed facts file: {e}")))
}

/// A curve together with the name under which facts refer to it.
#[derive(Clone, Debug)]
pub struct NamedCurve {
    pub label: String,
    pub curve: Curve,
}

impl NamedCurve {
    pub fn new(label: impl Into<String>, curve: Curve) -> Self {
        NamedCurve {
            label: label.into(),
            curve,
        }
    }

    /// Facts may name a curve by its label or by its a-invariants, written
    /// as "a1,a2,a3,a4,a6" with or without brackets.
    pub fn answers_to(&self, name: &str) -> bool {
        if name == self.label {
            return true;
        }
        let inner = name.trim().trim_start_matches('[').trim_end_matches(']');
        let parsed: Option<Vec<BigInt>> = inner
            .split(',')
            .map(|s| s.trim().parse::<BigInt>().ok())
            .collect();
        parsed.is_some_and(|a| a.as_slice() == self.curve.ainvs().as_slice())
    }
}

/// The facts available to one evaluation.
#[derive(Clone, Debug, Default)]
pub struct FactSet {
    facts: Vec<ExternalFact>,
}

impl FactSet {
    pub fn new(mut facts: Vec<ExternalFact>) -> Self {
        facts.sort();
        facts.dedup();
        FactSet { facts }
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExternalFact> {
        self.facts.iter()
    }

    pub fn fine_mu_zero(&self, c: &NamedCurve) -> Option<&ExternalFact> {
        self.facts
            .iter()
            .find(|f| matches!(&f.kind, FactKind::FineMuZero(n) if c.answers_to(n)))
    }

    pub fn cotorsion(&self, c: &NamedCurve) -> Option<&ExternalFact> {
        self.facts
            .iter()
            .find(|f| matches!(&f.kind, FactKind::CotorsionAssumed(n) if c.answers_to(n)))
    }

    pub fn mu_y_zero(&self, i: u8) -> Option<&ExternalFact> {
        self.facts.iter().find(|f| f.kind == FactKind::MuYZero(i))
    }

    pub fn classical_mu_zero(&self) -> Option<&ExternalFact> {
        self.facts.iter().find(|f| f.kind == FactKind::ClassicalMuZero)
    }
}

impl From<Vec<ExternalFact>> for FactSet {
    fn from(v: Vec<ExternalFact>) -> Self {
        FactSet::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let text = r#"[{"kind":"FineMuZero","curve":"17a1","provenance":"table"},
                       {"kind":"MuYZero","index":2,"provenance":"x"},
                       {"kind":"ClassicalMuZero","provenance":""}]"#;
        let facts = parse_facts(text).unwrap();
        assert_eq!(facts.len(), 3);
        assert_eq!(facts[0].kind, FactKind::FineMuZero("17a1".into()));
        assert_eq!(facts[1].kind, FactKind::MuYZero(2));
        let again = parse_facts(&serde_json::to_string(&facts).unwrap()).unwrap();
        assert_eq!(again, facts);
    }

    #[test]
    fn malformed() {
        assert!(parse_facts("{}").is_err());
        assert!(parse_facts(r#"[{"kind":"FineMuZero"}]"#).is_err());
        assert!(parse_facts(r#"[{"kind":"MuYZero","index":3}]"#).is_err());
        assert!(parse_facts(r#"[{"kind":"Nope"}]"#).is_err());
        assert!(parse_facts(r#"[{"kind":"ClassicalMuZero","extra":1}]"#).is_err());
    }

    #[test]
    fn naming() {
        let c = NamedCurve::new("17a1", Curve::from_i64([1, -1, 1, -1, -14]).unwrap());
        assert!(c.answers_to("17a1"));
        assert!(c.answers_to("[1,-1,1,-1,-14]"));
        assert!(c.answers_to("1, -1, 1, -1, -14"));
        assert!(!c.answers_to("17a2"));
        assert!(!c.answers_to("1,-1,1,-6,-4"));
        let fs = FactSet::new(vec![ExternalFact::new(FactKind::FineMuZero("17a1".into()), "t")]);
        assert!(fs.fine_mu_zero(&c).is_some());
        assert!(fs.cotorsion(&c).is_none());
    }
}
