//! Finitely generated modules over Lambda = Z_p[[T]] given by a
//! structure-theorem presentation
//!
//!   Lambda^r + sum_i Lambda/(p^mu_i) + sum_j Lambda/(f_j(T)),
//!
//! and a brute-force check of the Omega-rank of M/pM (Omega = Lambda/p) in
//! the truncated ring (Z/p^a)[T]/(T^N).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::int::is_prime_u64;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedPoly {
    /// Coefficients in T, lowest degree first; the last one is 1.
    pub coeffs: Vec<BigInt>,
}

/// Monic with every non-leading coefficient divisible by p.
pub fn is_distinguished(coeffs: &[BigInt], p: u64) -> bool {
    let Some((lc, rest)) = coeffs.split_last() else {
        return false;
    };
    lc.is_one() && rest.iter().all(|c| (c % p).is_zero())
}

impl DistinguishedPoly {
    pub fn new(coeffs: Vec<BigInt>, p: u64) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if !is_distinguished(&coeffs, p) {
            return Err(Error::domain(format!(
                "{coeffs:?} is not a distinguished polynomial for p = {p}"
            )));
        }
        Ok(DistinguishedPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Image in F_p[T]; for a distinguished polynomial this is T^deg.
    pub fn reduce_mod_p(&self, p: u64) -> Vec<u64> {
        self.coeffs
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).try_into().unwrap())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPresentation {
    pub p: u64,
    pub r: u32,
    pub mu: Vec<u32>,
    pub f: Vec<DistinguishedPoly>,
}

/// JSON form: {"r": int, "mu": [int], "f": [[coeff, ...], ...]}, with an
/// optional "p".
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub r: u32,
    #[serde(default)]
    pub mu: Vec<u32>,
    #[serde(default)]
    pub f: Vec<Vec<i64>>,
}

impl LambdaPresentation {
    pub fn new(p: u64, r: u32, mu: Vec<u32>, f: Vec<DistinguishedPoly>) -> Result<Self> {
        if p.is_multiple_of(2) || !is_prime_u64(p) {
            return Err(Error::domain(format!("p = {p} must be an odd prime")));
        }
        if mu.contains(&0) {
            return Err(Error::domain("every mu_i must be positive"));
        }
        Ok(LambdaPresentation { p, r, mu, f })
    }

    pub fn zero(p: u64) -> Self {
        LambdaPresentation {
            p,
            r: 0,
            mu: vec![],
            f: vec![],
        }
    }

    pub fn from_json(p: u64, j: &PresentationJson) -> Result<Self> {
        let f = j
            .f
            .iter()
            .map(|c| DistinguishedPoly::new(c.iter().map(|&x| BigInt::from(x)).collect(), p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, j.r, j.mu.clone(), f)
    }

    pub fn parse(p: u64, s: &str) -> Result<Self> {
        let j: PresentationJson =
            serde_json::from_str(s).map_err(|e| Error::domain(format!("bad presentation: {e}")))?;
        Self::from_json(p, &j)
    }

    pub fn lambda(&self) -> usize {
        self.f.iter().map(DistinguishedPoly::degree).sum()
    }

    pub fn generators(&self) -> usize {
        self.r as usize + self.mu.len() + self.f.len()
    }
}

pub fn mu_invariant(m: &LambdaPresentation) -> u32 {
    m.mu.iter().sum()
}

pub fn mu_multiplicity(m: &LambdaPresentation) -> usize {
    m.mu.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModPCorank {
    /// Omega-rank of M/pM.
    pub rank: usize,
    /// Degrees d_j of the finite part sum_j Omega/(T^d_j).
    pub finite_part: Vec<usize>,
}

/// Omega-rank of M/pM: each Lambda/(f_j) contributes only Omega/(T^deg f_j),
/// which is finite.
pub fn mod_p_corank(m: &LambdaPresentation) -> ModPCorank {
    for f in &m.f {
        let img = f.reduce_mod_p(m.p);
        let d = f.degree();
        assert!(
            img[..d].iter().all(|&c| c == 0) && img[d] == 1,
            "mod-p image of a distinguished polynomial is T^deg"
        );
    }
    ModPCorank {
        rank: m.r as usize + m.mu.len(),
        finite_part: m.f.iter().map(DistinguishedPoly::degree).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Precision {
    /// Coefficients live in Z/p^a.
    pub a: u32,
    /// Power series are truncated modulo T^n.
    pub n: usize,
}

impl Precision {
    pub fn minimal_for(m: &LambdaPresentation) -> Self {
        Precision {
            a: m.mu.iter().max().map_or(1, |&x| x + 1),
            n: m.lambda() + 3,
        }
    }
}

/// Rank over F_p of a dense matrix with entries already reduced mod p.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = crate::arith::int::inv_mod(rows[rank][c], p).expect("nonzero mod p");
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let k = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p * p - k * rows[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// dim_{F_p} of (M / pM) tensored with F_p[T]/(T^n): the module is
/// R^k / (relations) over R = (Z/p^a)[T]/(T^n), and reducing mod p leaves
/// n*k minus the rank of the relation span.
fn truncated_dimension(m: &LambdaPresentation, prec: Precision) -> usize {
    let p = m.p;
    let pa = BigInt::from(p).pow(prec.a);
    let n = prec.n;
    // relation of each torsion summand, as an element of (Z/p^a)[T]/(T^n)
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for &mu in &m.mu {
        let mut g = vec![BigInt::zero(); n];
        g[0] = BigInt::from(p).pow(mu).mod_floor(&pa);
        relations.push(g);
    }
    for f in &m.f {
        let mut g = vec![BigInt::zero(); n];
        for (i, c) in f.coeffs.iter().enumerate().take(n) {
            g[i] = c.mod_floor(&pa);
        }
        relations.push(g);
    }
    let k = m.generators();
    let free = m.r as usize;
    let width = n * k;
    let mut rows = Vec::new();
    for (idx, g) in relations.iter().enumerate() {
        let block = free + idx;
        // g * T^i for i < n spans the relation submodule of this summand
        for shift in 0..n {
            let mut row = vec![0u64; width];
            for (i, c) in g.iter().enumerate() {
                if i + shift < n {
                    let v: u64 = c.mod_floor(&BigInt::from(p)).try_into().unwrap();
                    row[block * n + i + shift] = v;
                }
            }
            rows.push(row);
        }
    }
    width - rank_mod_p(rows, p)
}

/// Infers the Omega-rank of M/pM from dimensions at truncations n and n-1
/// and compares it with r + s.
pub fn verify_lemma27_oracle(m: &LambdaPresentation, prec: Precision) -> Result<bool> {
    Ok(inferred_rank(m, prec)? == mod_p_corank(m).rank)
}

pub fn inferred_rank(m: &LambdaPresentation, prec: Precision) -> Result<usize> {
    let need = Precision::minimal_for(m);
    if prec.a < need.a || prec.n < need.n {
        return Err(Error::capability(format!(
            "precision (a = {}, N = {}) below the guard (a > {}, N > {})",
            prec.a,
            prec.n,
            need.a - 1,
            need.n - 1
        )));
    }
    let d1 = truncated_dimension(m, prec);
    let d0 = truncated_dimension(m, Precision { a: prec.a, n: prec.n - 1 });
    Ok(d1 - d0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(c: &[i64], p: u64) -> DistinguishedPoly {
        DistinguishedPoly::new(c.iter().map(|&x| BigInt::from(x)).collect(), p).unwrap()
    }

    #[test]
    fn invariants() {
        let p = 5;
        let a = LambdaPresentation::new(p, 0, vec![], vec![dp(&[0, 0, 1], p)]).unwrap();
        assert_eq!(mu_invariant(&a), 0);
        let b = LambdaPresentation::new(p, 1, vec![2, 1], vec![]).unwrap();
        assert_eq!(mu_invariant(&b), 3);
        let c = LambdaPresentation::new(p, 0, vec![2], vec![dp(&[-5, 1], p)]).unwrap();
        assert_eq!(mu_invariant(&c), 2);
        let d = LambdaPresentation::new(p, 2, vec![1, 1, 3], vec![dp(&[0, 1], p)]).unwrap();
        assert_eq!(mu_multiplicity(&d), 3);
        assert_eq!(mu_multiplicity(&LambdaPresentation::zero(p)), 0);
        assert_eq!(mu_multiplicity(&LambdaPresentation::new(p, 0, vec![5], vec![]).unwrap()), 1);
    }

    #[test]
    fn coranks() {
        let p = 3;
        let c = LambdaPresentation::new(p, 0, vec![2], vec![dp(&[-3, 1], p)]).unwrap();
        let k = mod_p_corank(&c);
        assert_eq!(k.rank, 1);
        assert_eq!(k.finite_part, vec![1]);
        assert_eq!(mod_p_corank(&LambdaPresentation::zero(p)).rank, 0);
        let e = LambdaPresentation::new(p, 1, vec![], vec![dp(&[3, 3, 1], p)]).unwrap();
        let k = mod_p_corank(&e);
        assert_eq!((k.rank, k.finite_part), (1, vec![2]));
    }

    #[test]
    fn oracle_examples() {
        let p = 5;
        let c = LambdaPresentation::new(p, 0, vec![2], vec![dp(&[-5, 1], p)]).unwrap();
        assert!(verify_lemma27_oracle(&c, Precision { a: 3, n: 6 }).unwrap());
        assert_eq!(inferred_rank(&c, Precision { a: 3, n: 6 }).unwrap(), 1);
        let d = LambdaPresentation::new(p, 2, vec![1], vec![dp(&[0, 0, 0, 1], p)]).unwrap();
        assert!(verify_lemma27_oracle(&d, Precision { a: 2, n: 8 }).unwrap());
        assert_eq!(inferred_rank(&d, Precision { a: 2, n: 8 }).unwrap(), 3);
        assert_eq!(
            inferred_rank(&d, Precision { a: 2, n: 13 }).unwrap(),
            inferred_rank(&d, Precision { a: 2, n: 8 }).unwrap()
        );
    }

    #[test]
    fn precision_guard() {
        let p = 5;
        let c = LambdaPresentation::new(p, 0, vec![2], vec![]).unwrap();
        // with a = 2 the relation p^2 vanishes and the summand looks free
        assert!(matches!(
            verify_lemma27_oracle(&c, Precision { a: 2, n: 6 }),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn distinguished() {
        let p = 7;
        let b = |c: &[i64]| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(is_distinguished(&b(&[7, 7, 1]), p));
        assert!(!is_distinguished(&b(&[1, 1]), p));
        assert!(!is_distinguished(&b(&[0, 7]), p));
        assert!(DistinguishedPoly::new(b(&[1, 1]), p).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let m = LambdaPresentation::parse(5, r#"{"r": 1, "mu": [2], "f": [[5, 1]]}"#).unwrap();
        assert_eq!(m.r, 1);
        assert_eq!(m.lambda(), 1);
        assert!(LambdaPresentation::parse(5, r#"{"r": 1, "mu": [0]}"#).is_err());
        assert!(LambdaPresentation::parse(5, r#"{"r": 1, "f": [[1, 1]]}"#).is_err());
    }
}
