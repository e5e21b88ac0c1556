//! Reduction data after base change to a completion K_v of an imaginary
//! quadratic field.
//!
//! At a ramified v the inertia group of K_v has index 2 in that of Q_l, so
//! E acquires semistable reduction over K_v exactly when E or its twist by
//! the character of K/Q is semistable over Q_l.

use num_bigint::BigInt;
use num_integer::Integer;

use super::tate::{tate_local_data, Kodaira, LocalData, ReductionType};
use super::Curve;
use crate::arith::int::valuation;
use crate::quadfield::{PrimeOfK, QuadField, SplittingType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOverK {
    pub prime: PrimeOfK,
    pub reduction: ReductionType,
    /// Kodaira type over K_v; `None` where the wild case is not resolved.
    pub kodaira: Option<Kodaira>,
    /// Valuation of the minimal discriminant, normalized for K_v.
    pub min_disc_valuation: Option<u32>,
    pub conductor_exponent: Option<u32>,
    /// Potentially multiplicative (l divides the denominator of j).
    pub potentially_multiplicative: bool,
}

impl LocalOverK {
    pub fn is_resolved(&self) -> bool {
        self.kodaira.is_some() && self.min_disc_valuation.is_some()
    }
}

fn j_denominator_valuation(e: &Curve, l: u64) -> bool {
    // v(j) < 0 exactly when v(c4^3) < v(disc)
    let vc4 = valuation(&e.c4, l).map(|v| 3 * v);
    let vd = valuation(&e.disc, l).unwrap_or(0);
    match vc4 {
        None => false,
        Some(v) => v < vd,
    }
}

pub fn local_data_over_k(e: &Curve, k: &QuadField, v: &PrimeOfK) -> LocalOverK {
    let l = v.residue_char;
    let min = e.minimal_model();
    let ld = tate_local_data(&min, l);
    let pot_mult = j_denominator_valuation(&min, l);
    let base = |ld: &LocalData, reduction| LocalOverK {
        prime: *v,
        reduction,
        kodaira: Some(ld.kodaira),
        min_disc_valuation: Some(ld.min_disc_valuation),
        conductor_exponent: Some(ld.conductor_exponent),
        potentially_multiplicative: pot_mult,
    };
    match v.splitting {
        SplittingType::Split => base(&ld, ld.reduction),
        SplittingType::Inert => {
            let red = match ld.reduction {
                ReductionType::NonSplitMult => ReductionType::SplitMult,
                r => r,
            };
            base(&ld, red)
        }
        SplittingType::Ramified => ramified(&min, &ld, k, v, pot_mult),
    }
}

fn ramified(e: &Curve, ld: &LocalData, k: &QuadField, v: &PrimeOfK, pot_mult: bool) -> LocalOverK {
    let l = v.residue_char;
    let doubled = |ld: &LocalData, reduction, kod| LocalOverK {
        prime: *v,
        reduction,
        kodaira: Some(kod),
        min_disc_valuation: Some(2 * ld.min_disc_valuation),
        conductor_exponent: Some(if reduction == ReductionType::Good { 0 } else { 1 }),
        potentially_multiplicative: pot_mult,
    };
    match ld.reduction {
        ReductionType::Good => return doubled(ld, ReductionType::Good, Kodaira::I0),
        ReductionType::SplitMult | ReductionType::NonSplitMult => {
            let n = 2 * ld.min_disc_valuation;
            return doubled(ld, ld.reduction, Kodaira::In(n));
        }
        ReductionType::Additive => {}
    }
    let twist = e
        .quadratic_twist(&BigInt::from(k.disc()))
        .expect("nonzero discriminant");
    let tl = tate_local_data(&twist, l);
    match tl.reduction {
        ReductionType::Good => return doubled(&tl, ReductionType::Good, Kodaira::I0),
        ReductionType::SplitMult | ReductionType::NonSplitMult => {
            let n = 2 * tl.min_disc_valuation;
            return doubled(&tl, tl.reduction, Kodaira::In(n));
        }
        ReductionType::Additive => {}
    }
    if l <= 3 {
        return LocalOverK {
            prime: *v,
            reduction: ReductionType::Additive,
            kodaira: None,
            min_disc_valuation: None,
            conductor_exponent: None,
            potentially_multiplicative: pot_mult,
        };
    }
    // Tame, potentially good: the minimal discriminant valuation over K_v is
    // twice the one over Q_l, reduced modulo 12.
    debug_assert!(!pot_mult);
    let vk = (2 * ld.min_disc_valuation).mod_floor(&12);
    let kod = match vk {
        2 => Kodaira::II,
        4 => Kodaira::IV,
        6 => Kodaira::I0Star,
        8 => Kodaira::IVStar,
        10 => Kodaira::IIStar,
        _ => unreachable!("good reduction over K_v was excluded by the twist test"),
    };
    LocalOverK {
        prime: *v,
        reduction: ReductionType::Additive,
        kodaira: Some(kod),
        min_disc_valuation: Some(vk),
        conductor_exponent: Some(2),
        potentially_multiplicative: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: [i64; 5]) -> Curve {
        Curve::from_i64(a).unwrap()
    }

    #[test]
    fn split_prime_keeps_data() {
        let e = curve([0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let v = k.prime_above(11).unwrap();
        let ld = local_data_over_k(&e, &k, &v);
        assert_eq!(ld.reduction, ReductionType::SplitMult);
        assert_eq!(ld.min_disc_valuation, Some(5));
    }

    #[test]
    fn inert_prime_promotes_nonsplit() {
        // 201c1 is nonsplit at 3; in Q(sqrt(-1)) the prime 3 is inert.
        let e = curve([1, 1, 0, -794, 8289]);
        let k = QuadField::new(1).unwrap();
        let v = k.prime_above(3).unwrap();
        assert_eq!(v.splitting, SplittingType::Inert);
        assert_eq!(local_data_over_k(&e, &k, &v).reduction, ReductionType::SplitMult);
    }

    #[test]
    fn ramified_wild_additive() {
        let e = curve([0, 0, 1, 0, 0]);
        let k = QuadField::new(3).unwrap();
        let v = k.prime_above(3).unwrap();
        let ld = local_data_over_k(&e, &k, &v);
        assert_eq!(ld.reduction, ReductionType::Additive);
        assert!(!ld.is_resolved());
    }

    #[test]
    fn ramified_twist_becomes_good_or_multiplicative() {
        let k = QuadField::new(7).unwrap(); // disc -7
        let v = k.prime_above(7).unwrap();
        let e = curve([0, -1, 1, -10, -20]);
        // the twist of 11a1 by -7 is additive at 7 but good over K_7
        let t = e.quadratic_twist(&BigInt::from(-7)).unwrap();
        assert_eq!(tate_local_data(&t, 7).reduction, ReductionType::Additive);
        assert_eq!(local_data_over_k(&t, &k, &v).reduction, ReductionType::Good);
        // 469a1 twisted by -7: I5* at 7, multiplicative I10 over K_7
        let f = curve([1, 0, 1, -80, -275]).quadratic_twist(&BigInt::from(-7)).unwrap();
        let ld = local_data_over_k(&f, &k, &v);
        assert!(ld.reduction.is_multiplicative());
        assert_eq!(ld.kodaira, Some(Kodaira::In(10)));
    }

    #[test]
    fn ramified_tame_potentially_good() {
        // y^2 = x^3 + 5: additive at 5 with v(disc) = 2 (type II); over a
        // field ramified at 5 the valuation doubles to 4 (type IV).
        let e = curve([0, 0, 0, 0, 5]);
        let k = QuadField::new(5).unwrap();
        let v = k.prime_above(5).unwrap();
        assert_eq!(v.splitting, SplittingType::Ramified);
        let ld = local_data_over_k(&e, &k, &v);
        assert_eq!(ld.reduction, ReductionType::Additive);
        assert_eq!(ld.kodaira, Some(Kodaira::IV));
        assert_eq!(ld.min_disc_valuation, Some(4));
    }
}
