//! Certificates: every condition that was evaluated, with evidence, and the
//! conclusions whose premises all hold.

use std::fmt;

use serde::Serialize;

use crate::status::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremTag {
    #[serde(rename = "thm1")]
    Theorem1,
    #[serde(rename = "thm2")]
    Theorem2,
    #[serde(rename = "cor33")]
    Corollary33,
    #[serde(rename = "thm3")]
    Theorem3,
}

impl TheoremTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::Theorem1 => "thm1",
            TheoremTag::Theorem2 => "thm2",
            TheoremTag::Corollary33 => "cor33",
            TheoremTag::Theorem3 => "thm3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "thm1" => Some(TheoremTag::Theorem1),
            "thm2" => Some(TheoremTag::Theorem2),
            "cor33" => Some(TheoremTag::Corollary33),
            "thm3" => Some(TheoremTag::Theorem3),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub status: Status,
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub statement: String,
    pub theorem: TheoremTag,
    pub trail: Vec<String>,
}

/// A conclusion together with the conditions it rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub statement: String,
    pub premises: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Concluded,
    ConditionFails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCertificate {
    pub theorem: TheoremTag,
    pub conditions: Vec<Condition>,
    /// Computed data that is reported but not itself a hypothesis.
    pub observations: Vec<String>,
    pub conclusions: Vec<Conclusion>,
    #[serde(skip)]
    pub rules: Vec<Rule>,
}

impl HypothesisCertificate {
    pub fn new(theorem: TheoremTag) -> Self {
        HypothesisCertificate {
            theorem,
            conditions: Vec::new(),
            observations: Vec::new(),
            conclusions: Vec::new(),
            rules: Vec::new(),
        }
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.condition(name).map(|c| c.status)
    }

    pub fn push(&mut self, name: &str, status: Status, evidence: Vec<String>) {
        assert!(self.condition(name).is_none(), "duplicate condition {name}");
        self.conditions.push(Condition {
            name: name.to_string(),
            status,
            evidence,
        });
    }

    pub fn observe(&mut self, line: impl Into<String>) {
        self.observations.push(line.into());
    }

    pub fn rule(&mut self, statement: impl Into<String>, premises: &[&str]) {
        for p in premises {
            assert!(self.condition(p).is_some(), "rule premise {p} is not a condition");
        }
        self.rules.push(Rule {
            statement: statement.into(),
            premises: premises.iter().map(|s| s.to_string()).collect(),
        });
    }

    /// Conclusions whose premises are all Holds, each with a trail naming
    /// those premises and the evidence lines that cite facts.
    pub fn derive_conclusions(&self) -> Vec<Conclusion> {
        self.rules
            .iter()
            .filter(|r| {
                r.premises
                    .iter()
                    .all(|p| self.status_of(p) == Some(Status::Holds))
            })
            .map(|r| {
                let mut trail = Vec::new();
                for p in &r.premises {
                    trail.push(format!("{p}: Holds"));
                    let c = self.condition(p).expect("checked in rule()");
                    trail.extend(
                        c.evidence
                            .iter()
                            .filter(|e| e.contains("fact "))
                            .map(|e| format!("{p}: {e}")),
                    );
                }
                Conclusion {
                    statement: r.statement.clone(),
                    theorem: self.theorem,
                    trail,
                }
            })
            .collect()
    }

    pub fn finalize(mut self) -> Self {
        self.conclusions = self.derive_conclusions();
        self
    }

    /// A copy with one condition's status replaced and the conclusions
    /// derived again.
    pub fn with_status(&self, name: &str, status: Status) -> Self {
        let mut c = self.clone();
        if let Some(cond) = c.conditions.iter_mut().find(|x| x.name == name) {
            cond.status = status;
        }
        c.finalize()
    }

    pub fn outcome(&self) -> Outcome {
        if !self.conclusions.is_empty() {
            Outcome::Concluded
        } else if self.conditions.iter().any(|c| c.status == Status::Fails) {
            Outcome::ConditionFails
        } else {
            Outcome::Inconclusive
        }
    }
}
