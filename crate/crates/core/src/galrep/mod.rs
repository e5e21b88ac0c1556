//! The residual mod-p Galois representation.

pub mod character;
pub mod divpoly;
pub mod frobenius;
pub mod lines;
pub mod residual;
pub mod sigma;

pub use character::ModPCharacter;
pub use divpoly::{division_polynomial, MAX_P};
pub use frobenius::{frobenius_eigenvalue, kernel_character};
pub use lines::{stable_lines, StableLine};
pub use residual::{
    char_restriction_trivial_at, hida_rubin_condition, residual_report,
    restriction_trivial_at_v, rhobar_ramified_at_multiplicative, Reducibility, ResidualReport,
    Shape,
};
pub use sigma::{sigma_phi2_for, sigma_phi2_set, sigma_set, PrimeSet, SigmaEntry};
