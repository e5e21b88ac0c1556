//! Hypothesis checks for the main criteria, assembled into certificates.

pub mod certificate;
pub mod facts;
pub mod theorems;

pub use certificate::{Conclusion, Condition, HypothesisCertificate, Outcome, Rule, TheoremTag};
pub use facts::{parse_facts, ExternalFact, FactKind, FactSet, NamedCurve};
pub use theorems::{
    evaluate_corollary33, evaluate_theorem1, evaluate_theorem2, evaluate_theorem3,
    heegner_condition, heegner_family_field, ClassicalMuMode, VerdictConfig, FINE_MU_STATEMENT,
};
