//! Shape of the residual representation over K and the characters on its
//! Jordan-Holder factors.

use std::collections::BTreeMap;

use serde::Serialize;

use super::character::ModPCharacter;
use super::frobenius::kernel_character;
use super::lines::{stable_lines, StableLine};
use crate::arith::int::val_or_inf;
use crate::ellcurve::{Curve, ReductionType};
use crate::error::{Error, Result};
use crate::quadfield::{PrimeOfK, QuadField, SplittingType};
use crate::status::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reducibility {
    Irreducible,
    Reducible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Split,
    Indecomposable,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    pub p: u64,
    pub status: Reducibility,
    /// `None` for an irreducible representation.
    pub shape: Option<Shape>,
    #[serde(skip)]
    pub lines: Vec<StableLine>,
    pub line_kernels: Vec<String>,
    /// Character of G_K on each line, up to the quadratic character of K.
    pub line_characters: Vec<Option<ModPCharacter>>,
    pub phi1: Option<ModPCharacter>,
    pub phi2: Option<ModPCharacter>,
    /// Exponent of the Artin conductor of rhobar at each bad l != p, or
    /// `None` where it is not determined.
    pub residual_conductor: BTreeMap<u64, Option<u32>>,
}

impl ResidualReport {
    pub fn is_reducible(&self) -> bool {
        self.status == Reducibility::Reducible
    }
}

/// Whether rhobar is ramified at a prime of multiplicative reduction: the
/// Tate curve gives E[p] unramified at l exactly when p | v_l(disc_min).
pub fn rhobar_ramified_at_multiplicative(e: &Curve, l: u64, p: u64) -> Result<bool> {
    if l == p {
        return Err(Error::domain(format!("l = {l} must differ from p")));
    }
    let min = e.minimal_model();
    let ld = crate::ellcurve::tate_local_data(&min, l);
    if !ld.reduction.is_multiplicative() {
        return Err(Error::domain(format!("reduction at {l} is not multiplicative")));
    }
    Ok(!ld.min_disc_valuation.is_multiple_of(p as u32))
}

/// Conductor exponent of rhobar at a bad prime l != p.
fn residual_exponent(e: &Curve, l: u64, p: u64) -> Option<u32> {
    let ld = crate::ellcurve::tate_local_data(e, l);
    match ld.reduction {
        ReductionType::Good => Some(0),
        ReductionType::SplitMult | ReductionType::NonSplitMult => {
            Some(u32::from(!ld.min_disc_valuation.is_multiple_of(p as u32)))
        }
        ReductionType::Additive => {
            let pot_mult = val_or_inf(&e.c4, l).saturating_mul(3) < ld.min_disc_valuation;
            if pot_mult {
                // twist of a Tate curve by a ramified quadratic character
                return Some(ld.conductor_exponent);
            }
            if l >= 5 {
                let ep = 12 / num_integer::gcd(12, ld.min_disc_valuation);
                if p == 3 && ep == 3 {
                    None
                } else {
                    Some(2)
                }
            } else if p >= 5 {
                // inertia acts through a group of order dividing 24, prime
                // to p, with no invariants
                Some(ld.conductor_exponent)
            } else {
                None
            }
        }
    }
}

pub fn residual_report(e: &Curve, k: &QuadField, p: u64) -> Result<ResidualReport> {
    let min = e.minimal_model();
    let lines = stable_lines(&min, Some(k), p)?;
    let eta = ModPCharacter::quadratic(p, k.disc());
    let line_characters: Vec<Option<ModPCharacter>> = lines
        .iter()
        .map(|l| {
            let h = l.rational.as_ref()?;
            kernel_character(&min, h, p).map(|c| c.canonical_mod(&eta))
        })
        .collect();
    let status = if lines.is_empty() {
        Reducibility::Irreducible
    } else {
        Reducibility::Reducible
    };
    let shape = match lines.len() {
        0 => None,
        1 => Some(Shape::Indecomposable),
        _ => Some(Shape::Split),
    };
    // Distinguished line: the known character of least conductor.
    let phi1 = line_characters
        .iter()
        .flatten()
        .min_by_key(|c| (c.conductor(), c.values()))
        .cloned();
    let phi2 = phi1.as_ref().map(|c| {
        ModPCharacter::cyclotomic(p)
            .mul(&c.inv())
            .canonical_mod(&eta)
    });
    let residual_conductor = min
        .bad_primes()
        .into_iter()
        .filter(|&l| l != p)
        .map(|l| (l, residual_exponent(&min, l, p)))
        .collect();
    Ok(ResidualReport {
        p,
        status,
        shape,
        line_kernels: lines.iter().map(|l| l.to_string()).collect(),
        lines,
        line_characters,
        phi1,
        phi2,
        residual_conductor,
    })
}

/// Whether phi restricted to a decomposition group at l is trivial.
pub fn char_restriction_trivial_at(phi: &ModPCharacter, l: u64) -> bool {
    phi.restriction_trivial_at(l)
}

/// Whether phi restricted to G_{K_v} is trivial. The answer does not
/// depend on the choice of phi modulo the quadratic character of K.
pub fn restriction_trivial_at_v(phi: &ModPCharacter, k: &QuadField, v: &PrimeOfK) -> bool {
    let l = v.residue_char;
    let p = phi.p();
    match v.splitting {
        SplittingType::Split => phi.restriction_trivial_at(l),
        SplittingType::Inert => {
            let prim = phi.primitive();
            prim.eval(l).is_some_and(|x| x * x % p == 1)
        }
        SplittingType::Ramified => {
            let eta = ModPCharacter::quadratic(p, k.disc());
            phi.restriction_trivial_at(l) || phi.mul(&eta).restriction_trivial_at(l)
        }
    }
}

/// Hida and Rubin's condition: p splits in K and phi1 restricted to the
/// decomposition group at each prime above p is neither 1 nor chibar.
/// Both primes above p have decomposition group G_{Q_p}, so the two checks
/// coincide.
pub fn hida_rubin_condition(report: &ResidualReport, k: &QuadField, p: u64) -> Result<Status> {
    if !report.is_reducible() {
        return Err(Error::precondition("the residual representation is irreducible"));
    }
    if k.splitting_type(p) != SplittingType::Split {
        return Ok(Status::Fails);
    }
    let Some(phi1) = &report.phi1 else {
        return Ok(Status::Unknown);
    };
    let chibar = ModPCharacter::cyclotomic(p);
    let trivial = char_restriction_trivial_at(phi1, p);
    let is_chibar = char_restriction_trivial_at(&phi1.mul(&chibar.inv()), p);
    Ok(Status::from_bool(!trivial && !is_chibar))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: [i64; 5]) -> Curve {
        Curve::from_i64(a).unwrap()
    }

    #[test]
    fn example_trivial_representation() {
        let e = curve([0, 0, 1, 0, 0]);
        let k = QuadField::new(3).unwrap();
        let r = residual_report(&e, &k, 3).unwrap();
        assert_eq!(r.status, Reducibility::Reducible);
        assert_eq!(r.shape, Some(Shape::Split));
        assert!(r.phi1.as_ref().unwrap().is_trivial());
        assert!(r.phi2.as_ref().unwrap().is_trivial());
    }

    #[test]
    fn eleven_a1_at_five() {
        let e = curve([0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let r = residual_report(&e, &k, 5).unwrap();
        assert_eq!(r.status, Reducibility::Reducible);
        assert_eq!(r.shape, Some(Shape::Split));
        assert!(r.phi1.as_ref().unwrap().is_trivial());
        assert_eq!(r.phi2.as_ref().unwrap(), &ModPCharacter::cyclotomic(5));
        assert_eq!(r.residual_conductor.get(&11), Some(&Some(0)));
        assert_eq!(hida_rubin_condition(&r, &k, 5).unwrap(), Status::Fails);
    }

    #[test]
    fn seventeen_a1_irreducible() {
        let e = curve([1, -1, 1, -1, -14]);
        let k = QuadField::new(2).unwrap();
        let r = residual_report(&e, &k, 11).unwrap();
        assert_eq!(r.status, Reducibility::Irreducible);
        assert!(r.phi1.is_none());
        assert!(hida_rubin_condition(&r, &k, 11).is_err());
    }

    #[test]
    fn multiplicative_ramification() {
        let e = curve([0, -1, 1, -10, -20]);
        assert!(!rhobar_ramified_at_multiplicative(&e, 11, 5).unwrap());
        assert!(rhobar_ramified_at_multiplicative(&e, 11, 3).unwrap());
        assert!(rhobar_ramified_at_multiplicative(&e, 2, 5).is_err());
        assert!(rhobar_ramified_at_multiplicative(&e, 11, 11).is_err());
    }

    #[test]
    fn restriction_tests() {
        let chi = ModPCharacter::cyclotomic(5);
        assert!(char_restriction_trivial_at(&ModPCharacter::trivial(5), 7));
        assert!(char_restriction_trivial_at(&chi, 11));
        assert!(!char_restriction_trivial_at(&chi, 7));
        // 19 = -1 mod 5 is inert in Q(i); chibar(19)^2 = 1
        let k = QuadField::new(1).unwrap();
        let v = k.prime_above(19).unwrap();
        assert!(restriction_trivial_at_v(&chi, &k, &v));
        let v7 = k.prime_above(7).unwrap();
        assert!(!restriction_trivial_at_v(&chi, &k, &v7));
    }

    #[test]
    fn hida_rubin_holds_for_ramified_character() {
        // phi1 of conductor 7 with phi1(5) != 1; 5 splits in Q(sqrt(-1)).
        let phi1 = ModPCharacter::from_crt_values(5, &[(7, 1)], |_| 4);
        assert_eq!(phi1.conductor(), 7);
        assert_eq!(phi1.eval(5), Some(4));
        let report = ResidualReport {
            p: 5,
            status: Reducibility::Reducible,
            shape: Some(Shape::Indecomposable),
            lines: vec![],
            line_kernels: vec![],
            line_characters: vec![Some(phi1.clone())],
            phi2: Some(ModPCharacter::cyclotomic(5).mul(&phi1.inv())),
            phi1: Some(phi1),
            residual_conductor: BTreeMap::new(),
        };
        let k = QuadField::new(1).unwrap();
        assert_eq!(hida_rubin_condition(&report, &k, 5).unwrap(), Status::Holds);
        let inert = QuadField::new(2).unwrap(); // 5 is inert in Q(sqrt(-2))
        assert_eq!(hida_rubin_condition(&report, &inert, 5).unwrap(), Status::Fails);
    }
}
