//! p-congruence of two elliptic curves by comparing traces up to a Sturm
//! bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::int::{factorize, is_prime_u64, primes_between};
use crate::ellcurve::{ap, tate_local_data, Curve, ReductionType};
use crate::error::{Error, Result};

/// Largest bound we are willing to check exhaustively.
pub const MAX_BOUND: u64 = 200_000;

/// Matching traces only pin down rhobar up to semisimplification.
pub const SEMISIMPLE_CAVEAT: &str =
    "traces certify isomorphic semisimplifications; isomorphism of rhobar itself is assumed";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CongruenceStatus {
    Congruent,
    NotCongruent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceVerdict {
    pub status: CongruenceStatus,
    pub bound_used: u64,
    pub witness: Option<u64>,
    pub checked_primes: usize,
    /// Primes bad for both curves, or additive for exactly one.
    pub skipped: Vec<u64>,
    pub caveat: Option<String>,
}

/// ceil(L/6 * prod_{l | L} (1 + 1/l)) with L = lcm(N1, N2).
pub fn sturm_bound(n1: &BigInt, n2: &BigInt) -> Result<BigInt> {
    if n1 < &BigInt::one() || n2 < &BigInt::one() {
        return Err(Error::domain("conductors must be positive"));
    }
    let l = n1.lcm(n2);
    let mut index = l.clone();
    for q in factorize(&l)?.keys() {
        index = index / q * (q + 1);
    }
    Ok(index.div_ceil(&BigInt::from(6)))
}

#[derive(Clone, Copy)]
enum Local {
    Good,
    Mult(i64),
    Additive,
}

fn local(e: &Curve, l: u64) -> Local {
    let ld = tate_local_data(e, l);
    match ld.reduction {
        ReductionType::Good => Local::Good,
        ReductionType::SplitMult => Local::Mult(1),
        ReductionType::NonSplitMult => Local::Mult(-1),
        ReductionType::Additive => Local::Additive,
    }
}

pub fn is_p_congruent(e1: &Curve, e2: &Curve, p: u64) -> Result<CongruenceVerdict> {
    if p.is_multiple_of(2) || !is_prime_u64(p) {
        return Err(Error::domain(format!("p = {p} must be an odd prime")));
    }
    let m1 = e1.minimal_model();
    let m2 = e2.minimal_model();
    let bound = sturm_bound(&m1.conductor(), &m2.conductor())?;
    let bound_u = bound.to_u64().filter(|&b| b <= MAX_BOUND);
    let Some(bound_u) = bound_u else {
        return Ok(CongruenceVerdict {
            status: CongruenceStatus::Inconclusive,
            bound_used: bound.to_u64().unwrap_or(u64::MAX),
            witness: None,
            checked_primes: 0,
            skipped: vec![],
            caveat: Some(format!("Sturm bound {bound} exceeds the limit {MAX_BOUND}")),
        });
    };
    let pi = p as i64;
    let cong = |a: i64, b: i64| (a - b).rem_euclid(pi) == 0;
    let mut checked = 0;
    let mut skipped = Vec::new();
    for l in primes_between(2, bound_u.max(2)) {
        let li = l as i64;
        let ok = match (local(&m1, l), local(&m2, l)) {
            (Local::Good, Local::Good) => cong(ap(&m1, l)?, ap(&m2, l)?),
            // level raising: the unramified Frobenius eigenvalues of a Tate
            // curve are eps and eps * l
            (Local::Good, Local::Mult(eps)) => cong(ap(&m1, l)?, eps * (li + 1)),
            (Local::Mult(eps), Local::Good) => cong(ap(&m2, l)?, eps * (li + 1)),
            _ => {
                skipped.push(l);
                continue;
            }
        };
        checked += 1;
        if !ok {
            return Ok(CongruenceVerdict {
                status: CongruenceStatus::NotCongruent,
                bound_used: bound_u,
                witness: Some(l),
                checked_primes: checked,
                skipped,
                caveat: None,
            });
        }
    }
    Ok(CongruenceVerdict {
        status: CongruenceStatus::Congruent,
        bound_used: bound_u,
        witness: None,
        checked_primes: checked,
        skipped,
        caveat: Some(SEMISIMPLE_CAVEAT.to_string()),
    })
}
