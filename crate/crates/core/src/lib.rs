//! Hypothesis checking for vanishing of anticyclotomic fine mu-invariants of
//! elliptic curves with residually reducible mod-p representation.

pub mod analysis;
pub mod arith;
pub mod congruence;
pub mod ellcurve;
pub mod error;
pub mod galrep;
pub mod iwasawa;
pub mod quadfield;
pub mod record;
pub mod status;
pub mod verdict;

pub use ellcurve::Curve;
pub use error::{Error, Result};
pub use quadfield::QuadField;
pub use record::CurveRecord;
pub use status::Status;
pub use verdict::{ExternalFact, FactSet, HypothesisCertificate, NamedCurve};
