//! Factorization in Q[x]: square-free split, factor modulo a good prime,
//! multifactor Hensel lifting, Zassenhaus recombination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fpoly::PolyModL;
use super::int::{is_prime_u64, reduce_u64};
use super::zpoly::PolyZ;
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 100;

/// `content * prod(factors)` equals the input. Factors are primitive with
/// positive leading coefficient, sorted by degree and then coefficients, and
/// repeated according to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub content: BigInt,
    pub factors: Vec<PolyZ>,
}

impl QFactorization {
    pub fn product(&self) -> PolyZ {
        self.factors
            .iter()
            .fold(PolyZ::constant(self.content.clone()), |acc, f| &acc * f)
    }

    /// Distinct factors with multiplicities.
    pub fn grouped(&self) -> Vec<(PolyZ, u32)> {
        let mut out: Vec<(PolyZ, u32)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((g, m)) if g == f => *m += 1,
                _ => out.push((f.clone(), 1)),
            }
        }
        out
    }
}

pub fn factor_poly_over_q(f: &PolyZ) -> Result<QFactorization> {
    if f.is_zero() {
        return Err(Error::domain("cannot factor the zero polynomial"));
    }
    if f.deg() > MAX_DEGREE {
        return Err(Error::capability(format!(
            "polynomial degree {} exceeds the guard {MAX_DEGREE}",
            f.deg()
        )));
    }
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let mut g = f.primitive_part();
    let mut factors = Vec::new();
    let zeros = g.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        factors.extend(std::iter::repeat_n(PolyZ::x(), zeros));
        g = PolyZ::new(g.coeffs()[zeros..].to_vec());
    }
    for (part, mult) in squarefree_parts(&g) {
        for h in factor_squarefree(&part) {
            factors.extend(std::iter::repeat_n(h, mult as usize));
        }
    }
    factors.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(QFactorization { content, factors })
}

/// Primes for which `f` keeps its degree and stays square-free.
fn good_primes(f: &PolyZ) -> impl Iterator<Item = u64> + '_ {
    let lc = f.lc();
    (3u64..)
        .filter(|&q| is_prime_u64(q))
        .filter(move |&q| reduce_u64(&lc, q) != 0)
        .filter(move |&q| PolyModL::from_polyz(f, q).is_squarefree())
}

fn squarefree_parts(f: &PolyZ) -> Vec<(PolyZ, u32)> {
    if f.deg() == 0 {
        return vec![];
    }
    // A square-free reduction at some prime of good degree proves f square-free.
    let lc = f.lc();
    let certified = (3u64..200)
        .filter(|&q| is_prime_u64(q) && reduce_u64(&lc, q) != 0)
        .any(|q| PolyModL::from_polyz(f, q).is_squarefree());
    if certified {
        return vec![(f.clone(), 1)];
    }
    // Repeated gcd: with f = prod P_i^i, a = prod P_i^(i-1) and b = prod P_i.
    let mut out = Vec::new();
    let mut a = f.gcd(&f.derivative()).primitive_part();
    let mut b = f.div_exact(&a).expect("gcd divides").primitive_part();
    let mut i = 1;
    while b.deg() > 0 {
        let y = b.gcd(&a).primitive_part();
        let z = b.div_exact(&y).expect("gcd divides").primitive_part();
        if z.deg() > 0 {
            out.push((z, i));
        }
        a = a.div_exact(&y).expect("gcd divides").primitive_part();
        b = y;
        i += 1;
    }
    out
}

fn factor_squarefree(f: &PolyZ) -> Vec<PolyZ> {
    let f = f.primitive_part();
    let n = f.deg();
    if n <= 1 {
        return vec![f];
    }
    // Pick among several primes the one with the fewest modular factors and
    // intersect the admissible degree sets.
    let mut admissible: Option<BTreeSet<usize>> = None;
    let mut best: Option<(u64, usize)> = None;
    for q in good_primes(&f).take(12) {
        let degs = PolyModL::from_polyz(&f, q).factor_degrees();
        let sums = subset_sums(&degs);
        admissible = Some(match admissible {
            None => sums,
            Some(a) => a.intersection(&sums).copied().collect(),
        });
        if best.is_none_or(|(_, k)| degs.len() < k) {
            best = Some((q, degs.len()));
        }
        if admissible.as_ref().is_some_and(|a| a.len() <= 2) {
            return vec![f.clone()];
        }
    }
    let admissible = admissible.expect("some good prime exists");
    let (q, _) = best.expect("some good prime exists");
    let (_, modular) = PolyModL::from_polyz(&f, q).factor();

    // Lift until q^k exceeds twice the factor coefficient bound.
    let bound = coefficient_bound(&f);
    let qb = BigInt::from(q);
    let mut modulus = qb.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &qb;
        k += 1;
    }
    let lifted = multifactor_lift(&f, &modular, q, k);
    recombine(&f, lifted, &modulus, &admissible)
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::from([0usize]);
    for &d in degs {
        let shifted: Vec<usize> = s.iter().map(|x| x + d).collect();
        s.extend(shifted);
    }
    s
}

/// Bound on the coefficients of any factor of `f`, times |lc f|:
/// |lc| * 2^n * sqrt(n+1) * |f|_inf (a Mignotte-type estimate).
fn coefficient_bound(f: &PolyZ) -> BigInt {
    let n = f.deg();
    let sqrt = BigInt::from(((n + 1) as f64).sqrt().ceil() as u64);
    f.lc().abs() * (BigInt::one() << n) * sqrt * f.max_norm()
}

fn reduce_poly(f: &PolyZ, m: &BigInt) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &PolyZ, m: &BigInt) -> PolyZ {
    let half = m / 2;
    PolyZ::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn lift_modl(f: &PolyModL) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Division by a monic polynomial modulo m.
fn divrem_monic(a: &PolyZ, h: &PolyZ, m: &BigInt) -> (PolyZ, PolyZ) {
    let (q, r) = a.divrem_over_z(h).expect("monic divisor");
    (reduce_poly(&q, m), reduce_poly(&r, m))
}

fn inv_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "non-invertible leading coefficient");
    e.x.mod_floor(m)
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` mod m to mod m^2.
/// `h` is monic.
fn hensel_step(
    f: &PolyZ,
    g: &PolyZ,
    h: &PolyZ,
    s: &PolyZ,
    t: &PolyZ,
    m: &BigInt,
) -> (PolyZ, PolyZ, PolyZ, PolyZ) {
    let m2 = m * m;
    let e = reduce_poly(&(f - &(g * h)), &m2);
    let (q, r) = divrem_monic(&reduce_poly(&(s * &e), &m2), h, &m2);
    let g2 = reduce_poly(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h2 = reduce_poly(&(h + &r), &m2);
    let b = reduce_poly(&(&(&(s * &g2) + &(t * &h2)) - &PolyZ::one()), &m2);
    let (c, d) = divrem_monic(&reduce_poly(&(s * &b), &m2), &h2, &m2);
    let s2 = reduce_poly(&(s - &d), &m2);
    let t2 = reduce_poly(&(&(t - &(t * &b)) - &(&c * &g2)), &m2);
    (g2, h2, s2, t2)
}

/// Lift `f = lc * prod(factors) mod q` to monic factors modulo q^k.
fn multifactor_lift(f: &PolyZ, factors: &[PolyModL], q: u64, k: u32) -> Vec<PolyZ> {
    let target = BigInt::from(q).pow(k);
    if factors.len() == 1 {
        let inv = inv_big(&f.lc(), &target);
        return vec![reduce_poly(&f.scale(&inv), &target)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_mod = reduce_u64(&f.lc(), q);
    let g0 = left
        .iter()
        .fold(PolyModL::constant(q, lc_mod), |acc, u| acc.mul(u));
    let h0 = right.iter().fold(PolyModL::one(q), |acc, u| acc.mul(u));
    let (s0, t0) = bezout_modl(&g0, &h0);
    let (mut g, mut h, mut s, mut t) = (lift_modl(&g0), lift_modl(&h0), lift_modl(&s0), lift_modl(&t0));
    let mut m = BigInt::from(q);
    while m < target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let g = reduce_poly(&g, &target);
    let h = reduce_poly(&h, &target);
    let mut out = multifactor_lift(&g, left, q, k);
    out.extend(multifactor_lift(&h, right, q, k));
    out
}

/// s, t with s g + t h = 1 over F_q for coprime g, h.
fn bezout_modl(g: &PolyModL, h: &PolyModL) -> (PolyModL, PolyModL) {
    let l = g.modulus();
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (PolyModL::one(l), PolyModL::zero(l));
    let (mut t0, mut t1) = (PolyModL::zero(l), PolyModL::one(l));
    while !r1.is_zero() {
        let (qt, r) = r0.divrem(&r1);
        let s = s0.sub(&qt.mul(&s1));
        let t = t0.sub(&qt.mul(&t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    assert_eq!(r0.deg(), 0, "modular factors must be coprime");
    let inv = super::int::inv_mod(r0.lc(), l).expect("unit");
    (s0.scale(inv), t0.scale(inv))
}

fn recombine(
    f: &PolyZ,
    mut lifted: Vec<PolyZ>,
    m: &BigInt,
    admissible: &BTreeSet<usize>,
) -> Vec<PolyZ> {
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), size) {
            let deg: usize = subset.iter().map(|&i| lifted[i].deg()).sum();
            if !admissible.contains(&deg) {
                continue;
            }
            let lc = g.lc();
            // Constant-term test before the full product.
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * lifted[i].coeff(0)).mod_floor(m));
            let c0 = symmetric(&PolyZ::constant(c0), m).coeff(0);
            if c0.is_zero() || !(&lc * g.coeff(0)).is_multiple_of(&c0) {
                continue;
            }
            let cand = subset
                .iter()
                .fold(PolyZ::constant(lc.clone()), |acc, &i| reduce_poly(&(&acc * &lifted[i]), m));
            let cand = symmetric(&cand, m).primitive_part();
            if let Some(quot) = g.div_exact(&cand) {
                out.push(cand);
                g = quot.primitive_part();
                let keep: Vec<PolyZ> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, p)| p.clone())
                    .collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if g.deg() > 0 {
        out.push(g.primitive_part());
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Attempt to certify irreducibility of `f` from factorization degree
/// patterns at up to `max_primes` good primes: the certificate succeeds when
/// no proper degree is a subset sum at every prime.
pub fn irreducibility_certificate(f: &PolyZ, max_primes: usize) -> Option<Vec<u64>> {
    let n = f.deg();
    if n == 0 {
        return None;
    }
    let mut used = Vec::new();
    let mut admissible: Option<BTreeSet<usize>> = None;
    for q in good_primes(f).take(max_primes) {
        used.push(q);
        let sums = subset_sums(&PolyModL::from_polyz(f, q).factor_degrees());
        let a = match admissible {
            None => sums,
            Some(a) => a.intersection(&sums).copied().collect(),
        };
        if a.iter().all(|&d| d == 0 || d == n) {
            return Some(used);
        }
        admissible = Some(a);
    }
    None
}
