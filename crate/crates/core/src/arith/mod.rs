//! Exact arithmetic substrate.

pub mod field;
pub mod fpoly;
pub mod int;
pub mod qfactor;
pub mod zpoly;

pub use fpoly::{factor_poly_over_fl, PolyModL};
pub use int::{factorize, is_prime, kronecker, Int};
pub use qfactor::{factor_poly_over_q, QFactorization};
pub use zpoly::PolyZ;
