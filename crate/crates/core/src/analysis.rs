//! The full diagnostic for a curve, a field and a prime.

use serde::Serialize;

use crate::ellcurve::{local_data_over_k, p_torsion_over, tate_local_data, ReductionType};
use crate::error::Result;
use crate::galrep::{
    hida_rubin_condition, residual_report, sigma_phi2_set, sigma_set, PrimeSet, ResidualReport,
    Shape,
};
use crate::quadfield::{Decomposition, QuadField, SplittingType};
use crate::status::Status;
use crate::verdict::NamedCurve;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OverK {
    pub splitting: SplittingType,
    pub reduction: ReductionType,
    pub kodaira: Option<String>,
    pub conductor_exponent: Option<u32>,
    pub min_disc_valuation: Option<u32>,
    pub potentially_multiplicative: bool,
}

/// One prime of S: local data over Q and over K, and how the primes of K
/// above it decompose in K^ac.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalRow {
    pub prime: u64,
    pub reduction: ReductionType,
    pub kodaira: String,
    pub conductor_exponent: u32,
    pub min_disc_valuation: u32,
    pub over_k: OverK,
    pub decomposition_in_kac: Decomposition,
    /// Conductor exponent of rhobar, for bad primes away from p.
    pub residual_conductor_exponent: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Analysis {
    pub label: String,
    pub minimal_model: String,
    pub conductor: String,
    pub d: i64,
    pub disc: i64,
    pub class_number: u64,
    pub p: u64,
    pub p_splitting: SplittingType,
    /// Rational primes under S, the primes dividing N p.
    pub s: Vec<u64>,
    pub local: Vec<LocalRow>,
    pub torsion_q: String,
    pub torsion_k: String,
    pub residual: ResidualReport,
    pub sigma: PrimeSet,
    pub sigma_phi2: Option<PrimeSet>,
    pub hida_rubin: Option<Status>,
}

pub fn analyze(c: &NamedCurve, k: &QuadField, p: u64) -> Result<Analysis> {
    let e = c.curve.minimal_model();
    let residual = residual_report(&e, k, p)?;
    let mut s = e.bad_primes();
    if !s.contains(&p) {
        s.push(p);
        s.sort_unstable();
    }
    let mut local = Vec::new();
    for &l in &s {
        let ld = tate_local_data(&e, l);
        let v = k.prime_above(l)?;
        let lk = local_data_over_k(&e, k, &v);
        local.push(LocalRow {
            prime: l,
            reduction: ld.reduction,
            kodaira: ld.kodaira.to_string(),
            conductor_exponent: ld.conductor_exponent,
            min_disc_valuation: ld.min_disc_valuation,
            over_k: OverK {
                splitting: v.splitting,
                reduction: lk.reduction,
                kodaira: lk.kodaira.map(|x| x.to_string()),
                conductor_exponent: lk.conductor_exponent,
                min_disc_valuation: lk.min_disc_valuation,
                potentially_multiplicative: lk.potentially_multiplicative,
            },
            decomposition_in_kac: k.anticyclotomic_decomposition(&v, p),
            residual_conductor_exponent: residual.residual_conductor.get(&l).copied().flatten(),
        });
    }
    let sigma_phi2 = match residual.shape {
        Some(Shape::Indecomposable) => Some(sigma_phi2_set(&residual, &e, k)?),
        _ => None,
    };
    let hida_rubin = if residual.is_reducible() {
        Some(hida_rubin_condition(&residual, k, p)?)
    } else {
        None
    };
    Ok(Analysis {
        label: c.label.clone(),
        minimal_model: e.ainvs_string(),
        conductor: e.conductor().to_string(),
        d: k.d(),
        disc: k.disc(),
        class_number: k.class_number(),
        p,
        p_splitting: k.splitting_type(p),
        s,
        local,
        torsion_q: p_torsion_over(&e, None, p)?.structure_label(),
        torsion_k: p_torsion_over(&e, Some(k), p)?.structure_label(),
        sigma: sigma_set(&e, k, p),
        sigma_phi2,
        hida_rubin,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellcurve::Curve;

    #[test]
    fn eleven_a1() {
        let c = NamedCurve::new("11a1", Curve::from_i64([0, -1, 1, -10, -20]).unwrap());
        let a = analyze(&c, &QuadField::new(10).unwrap(), 5).unwrap();
        assert_eq!(a.s, vec![5, 11]);
        assert_eq!(a.class_number, 2);
        assert_eq!(a.sigma.residue_chars(), vec![11]);
        assert_eq!(a.torsion_q, "Z/5");
        assert_eq!(a.local[1].decomposition_in_kac, Decomposition::Finite);
        assert_eq!(a.local[1].reduction, ReductionType::SplitMult);
        assert!(a.sigma_phi2.is_none());
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.contains("\"phi1\""));
    }
}
