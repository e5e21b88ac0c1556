//! The exceptional sets Sigma and Sigma(phi2) of primes of K.

use serde::Serialize;

use super::character::ModPCharacter;
use super::residual::{restriction_trivial_at_v, ResidualReport, Shape};
use crate::ellcurve::{local_data_over_k, Curve, LocalOverK, ReductionType};
use crate::error::{Error, Result};
use crate::quadfield::{mu_p_in_kv, PrimeOfK, QuadField};
use crate::status::Status;

/// A prime of K together with the status of its membership. Primes whose
/// membership Fails are left out of the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaEntry {
    pub prime: PrimeOfK,
    pub membership: Status,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PrimeSet {
    pub entries: Vec<SigmaEntry>,
}

impl PrimeSet {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn residue_chars(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.prime.residue_char).collect()
    }

    pub fn has_unknown(&self) -> bool {
        self.entries.iter().any(|e| e.membership == Status::Unknown)
    }
}

/// Condition (1): v divides N / Nbar, judged from the reduction of E over
/// K_v. With potentially good reduction the inertia image Phi embeds in
/// GL_2(F_p), and the exponent drops exactly when Phi is cyclic of order 3
/// and p = 3. For l >= 5 the order of Phi is read off v(disc); for l = 2
/// it is not, so that case stays Unknown.
fn divides_conductor_quotient(loc: &LocalOverK, l: u64, p: u64) -> (Status, String) {
    match loc.reduction {
        ReductionType::Good => (Status::Fails, "good reduction over K_v".into()),
        ReductionType::SplitMult | ReductionType::NonSplitMult => {
            let v = loc.min_disc_valuation.expect("known for multiplicative");
            (
                Status::from_bool(v.is_multiple_of(p as u32)),
                format!("multiplicative, v(disc_min) = {v}"),
            )
        }
        ReductionType::Additive if loc.potentially_multiplicative => (
            Status::Fails,
            "potentially multiplicative: rhobar keeps the ramified quadratic twist".into(),
        ),
        ReductionType::Additive if p >= 5 => (
            Status::Fails,
            "potentially good, inertia image of order dividing 24, prime to p".into(),
        ),
        ReductionType::Additive => match loc.min_disc_valuation {
            Some(v) if l >= 5 => {
                let ep = 12 / num_integer::gcd(12, v);
                (
                    Status::from_bool(ep == 3),
                    format!("potentially good, inertia of order {ep}"),
                )
            }
            _ => (
                Status::Unknown,
                format!("potentially good at l = {l} with p = 3, inertia image not determined"),
            ),
        },
    }
}

pub fn sigma_set(e: &Curve, k: &QuadField, p: u64) -> PrimeSet {
    let min = e.minimal_model();
    let mut entries = Vec::new();
    for l in min.bad_primes() {
        if l == p {
            continue;
        }
        let v = k.prime_above(l).expect("l is prime");
        let loc = local_data_over_k(&min, k, &v);
        let (c1, why) = divides_conductor_quotient(&loc, l, p);
        let mu = mu_p_in_kv(&v, p).expect("v does not divide p");
        let c23 = if !mu {
            Status::Holds
        } else if p >= 5 {
            Status::from_bool(loc.reduction == ReductionType::SplitMult)
        } else {
            Status::from_bool(matches!(
                loc.reduction,
                ReductionType::SplitMult | ReductionType::Additive
            ))
        };
        let membership = c1.and(c23);
        if membership != Status::Fails {
            entries.push(SigmaEntry {
                prime: v,
                membership,
                reason: format!("{why}; mu_{p} in K_v: {mu}; reduction over K_v: {:?}", loc.reduction),
            });
        }
    }
    PrimeSet { entries }
}

/// Primes v of S away from p at which phi2 restricted to G_{K_v} is trivial.
pub fn sigma_phi2_set(report: &ResidualReport, e: &Curve, k: &QuadField) -> Result<PrimeSet> {
    if report.shape != Some(Shape::Indecomposable) {
        return Err(Error::domain(
            "Sigma(phi2) is only defined for an indecomposable residual representation",
        ));
    }
    let p = report.p;
    let mut entries = Vec::new();
    for l in e.minimal_model().bad_primes() {
        if l == p {
            continue;
        }
        let v = k.prime_above(l).expect("l is prime");
        let (membership, reason) = match &report.phi2 {
            None => (Status::Unknown, "phi2 not determined".to_string()),
            Some(phi2) => {
                let t = restriction_trivial_at_v(phi2, k, &v);
                (Status::from_bool(t), format!("phi2 = {phi2}"))
            }
        };
        if membership != Status::Fails {
            entries.push(SigmaEntry {
                prime: v,
                membership,
                reason,
            });
        }
    }
    Ok(PrimeSet { entries })
}

/// Sigma(phi2) for a given character and set of primes, without a report.
pub fn sigma_phi2_for(phi2: &ModPCharacter, primes: &[u64], k: &QuadField) -> Vec<u64> {
    primes
        .iter()
        .copied()
        .filter(|&l| {
            let v = k.prime_above(l).expect("prime");
            restriction_trivial_at_v(phi2, k, &v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: [i64; 5]) -> Curve {
        Curve::from_i64(a).unwrap()
    }

    #[test]
    fn trivial_representation_has_empty_sigma() {
        let e = curve([0, 0, 1, 0, 0]);
        let k = QuadField::new(3).unwrap();
        assert!(sigma_set(&e, &k, 3).is_empty());
    }

    #[test]
    fn eleven_a1() {
        let e = curve([0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let s5 = sigma_set(&e, &k, 5);
        assert_eq!(s5.residue_chars(), vec![11]);
        assert_eq!(s5.entries[0].membership, Status::Holds);
        assert!(sigma_set(&e, &k, 3).is_empty());
    }

    #[test]
    fn phi2_sets() {
        let chi = ModPCharacter::cyclotomic(5);
        let k = QuadField::new(10).unwrap();
        assert_eq!(sigma_phi2_for(&chi, &[11], &k), vec![11]);
        assert!(sigma_phi2_for(&chi, &[7], &k).is_empty());
        // a character ramified at every prime of S gives nothing
        let ram = ModPCharacter::from_crt_values(5, &[(7, 1), (11, 1)], |_| 4);
        assert!(sigma_phi2_for(&ram, &[7, 11], &k).is_empty());
    }

    #[test]
    fn phi2_set_needs_indecomposable() {
        let e = curve([0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let r = super::super::residual::residual_report(&e, &k, 5).unwrap();
        assert!(matches!(sigma_phi2_set(&r, &e, &k), Err(Error::Domain(_))));
    }
}
