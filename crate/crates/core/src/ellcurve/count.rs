//! Traces of Frobenius by point counting.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tate::{tate_local_data, ReductionType};
use super::Curve;
use crate::arith::int::{inv_mod, legendre_u64, mul_mod, pow_mod, reduce_u64, sqrt_mod};
use crate::error::{Error, Result};

const NAIVE_LIMIT: u64 = 10_000;

/// a_l = l + 1 - #E(F_l) for a prime of good reduction.
pub fn ap(e: &Curve, l: u64) -> Result<i64> {
    let model = good_model(e, l)?;
    let a = if l < NAIVE_LIMIT {
        naive(&model, l)
    } else {
        bsgs(&model, l)
    };
    assert!(
        (a as i128).pow(2) <= 4 * l as i128,
        "Hasse bound violated: a_{l} = {a}"
    );
    Ok(a)
}

pub fn ap_naive(e: &Curve, l: u64) -> Result<i64> {
    Ok(naive(&good_model(e, l)?, l))
}

/// Baby-step giant-step on E and its quadratic twist. Mestre's theorem
/// guarantees that one of them isolates the group order only for l > 229,
/// so smaller primes are counted directly.
pub fn ap_bsgs(e: &Curve, l: u64) -> Result<i64> {
    if l <= 229 {
        return ap_naive(e, l);
    }
    Ok(bsgs(&good_model(e, l)?, l))
}

fn good_model(e: &Curve, l: u64) -> Result<Curve> {
    if reduce_u64(&e.disc, l) != 0 {
        return Ok(e.clone());
    }
    let ld = tate_local_data(e, l);
    if ld.reduction == ReductionType::Good {
        Ok(ld.minimal_model)
    } else {
        Err(Error::domain(format!("{l} is a prime of bad reduction")))
    }
}

fn naive(e: &Curve, l: u64) -> i64 {
    if l == 2 {
        let mut count = 1i64;
        for x in 0..2i64 {
            for y in 0..2i64 {
                let (bx, by) = (BigInt::from(x), BigInt::from(y));
                let f = &by * &by + &e.a1 * &bx * &by + &e.a3 * &by
                    - &bx * &bx * &bx
                    - &e.a2 * &bx * &bx
                    - &e.a4 * &bx
                    - &e.a6;
                if f.is_even() {
                    count += 1;
                }
            }
        }
        return 3 - count;
    }
    // y-discriminant: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    let b2 = reduce_u64(&e.b2, l);
    let b4 = reduce_u64(&(2 * &e.b4), l);
    let b6 = reduce_u64(&e.b6, l);
    let mut is_sq = vec![false; l as usize];
    for y in 0..l {
        is_sq[mul_mod(y, y, l) as usize] = true;
    }
    let mut count = 1i64;
    for x in 0..l {
        let f = (mul_mod(mul_mod(4 % l, x, l), mul_mod(x, x, l), l)
            + mul_mod(b2, mul_mod(x, x, l), l)
            + mul_mod(b4, x, l)
            + b6)
            % l;
        count += if f == 0 {
            1
        } else if is_sq[f as usize] {
            2
        } else {
            0
        };
    }
    l as i64 + 1 - count
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Pt {
    Inf,
    Aff(u64, u64),
}

struct Short {
    a: u64,
    l: u64,
}

impl Short {
    fn neg(&self, p: Pt) -> Pt {
        match p {
            Pt::Inf => Pt::Inf,
            Pt::Aff(x, y) => Pt::Aff(x, (self.l - y) % self.l),
        }
    }

    fn add(&self, p: Pt, q: Pt) -> Pt {
        let l = self.l;
        match (p, q) {
            (Pt::Inf, _) => q,
            (_, Pt::Inf) => p,
            (Pt::Aff(x1, y1), Pt::Aff(x2, y2)) => {
                let lam = if x1 == x2 {
                    if (y1 + y2) % l == 0 {
                        return Pt::Inf;
                    }
                    let num = (3 * mul_mod(x1, x1, l) as u128 + self.a as u128) % l as u128;
                    mul_mod(num as u64, inv_mod(2 * y1 % l, l).expect("unit"), l)
                } else {
                    let num = (y2 + l - y1) % l;
                    mul_mod(num, inv_mod((x2 + l - x1) % l, l).expect("unit"), l)
                };
                let x3 = (mul_mod(lam, lam, l) + 2 * l - x1 - x2) % l;
                let y3 = (mul_mod(lam, (x1 + l - x3) % l, l) + l - y1) % l;
                Pt::Aff(x3, y3)
            }
        }
    }

    fn mul(&self, p: Pt, mut k: u64) -> Pt {
        let mut acc = Pt::Inf;
        let mut base = p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// All k in [lo, hi] with kP = O.
    fn annihilators(&self, p: Pt, lo: u64, hi: u64) -> Vec<u64> {
        let width = hi - lo + 1;
        let m = (width as f64).sqrt().ceil() as u64 + 1;
        let mut baby = HashMap::new();
        let mut cur = Pt::Inf;
        for j in 0..m {
            baby.entry(cur).or_insert_with(Vec::new).push(j);
            cur = self.add(cur, p);
        }
        let step = self.mul(p, m);
        let mut giant = self.mul(p, lo);
        let mut out = Vec::new();
        let mut base = lo;
        while base <= hi {
            if let Some(js) = baby.get(&self.neg(giant)) {
                for &j in js {
                    let k = base + j;
                    if k <= hi {
                        out.push(k);
                    }
                }
            }
            giant = self.add(giant, step);
            base += m;
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn order(&self, p: Pt, multiple: u64) -> u64 {
        let mut n = multiple;
        for q in small_prime_factors(multiple) {
            while n.is_multiple_of(q) && self.mul(p, n / q) == Pt::Inf {
                n /= q;
            }
        }
        n
    }
}

fn small_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn random_point(a: u64, b: u64, l: u64, rng: &mut ChaCha8Rng) -> Pt {
    loop {
        let x = rng.random_range(0..l);
        let f = (mul_mod(mul_mod(x, x, l), x, l) + mul_mod(a, x, l) + b) % l;
        if let Some(y) = sqrt_mod(f, l) {
            return Pt::Aff(x, y);
        }
    }
}

/// Group order by baby-step giant-step on E and its quadratic twist.
fn bsgs(e: &Curve, l: u64) -> i64 {
    let a = reduce_u64(&(-27 * &e.c4), l);
    let b = reduce_u64(&(-54 * &e.c6), l);
    let mut nr = 2;
    while legendre_u64(nr, l) != -1 {
        nr += 1;
    }
    let ta = mul_mod(a, mul_mod(nr, nr, l), l);
    let tb = mul_mod(b, pow_mod(nr, 3, l), l);
    let e1 = Short { a, l };
    let e2 = Short { a: ta, l };
    let s = (4.0 * l as f64).sqrt().floor() as u64;
    let lo = l + 1 - s;
    let hi = l + 1 + s;
    let total = 2 * l + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(l);
    let (mut m1, mut m2) = (1u64, 1u64);
    for round in 0..64 {
        let (curve, ca, cb) = if round % 2 == 0 { (&e1, a, b) } else { (&e2, ta, tb) };
        let p = random_point(ca, cb, l, &mut rng);
        let ks = curve.annihilators(p, lo, hi);
        if let Some(&k) = ks.first() {
            let ord = curve.order(p, k);
            if round % 2 == 0 {
                m1 = m1.lcm(&ord);
            } else {
                m2 = m2.lcm(&ord);
            }
        }
        let candidates: Vec<u64> = (lo..=hi)
            .filter(|&n| n % m1 == 0 && (total - n).is_multiple_of(m2))
            .collect();
        if candidates.len() == 1 {
            return l as i64 + 1 - candidates[0] as i64;
        }
    }
    panic!("point counting failed to isolate the group order at {l}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_traces() {
        let e11 = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
        assert_eq!(ap(&e11, 2).unwrap(), -2);
        assert_eq!(ap(&e11, 3).unwrap(), -1);
        assert_eq!(ap(&e11, 13).unwrap(), 4);
        let e17 = Curve::from_i64([1, -1, 1, -1, -14]).unwrap();
        assert_eq!(ap(&e17, 2).unwrap(), -1);
        assert!(ap(&e11, 11).is_err());
    }

    #[test]
    fn bsgs_matches_naive() {
        let e = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
        for l in [1009u64, 2003, 4999, 7919, 9973] {
            assert_eq!(ap_bsgs(&e, l).unwrap(), ap_naive(&e, l).unwrap(), "l = {l}");
        }
    }

    #[test]
    fn large_prime_in_hasse_range() {
        let e = Curve::from_i64([1, -1, 1, -1, -14]).unwrap();
        let a = ap(&e, 1_000_003).unwrap();
        assert!(a * a <= 4 * 1_000_003);
    }
}
