//! The character by which Galois acts on a rational line.
//!
//! For a good prime q we compute Frob_q on the generic point of the line
//! exactly: in A = F_q[x]/(h) the point P = (X, Y) with Y^2 = f(X) is
//! moved to the twist Y'^2 = X'^3 + A f^2 X' + B f^3, where it becomes
//! P' = (fX, f^2) with coordinates in A. Frobenius sends P' to
//! (f X^q, f^2 f^((q-1)/2)), and we look for the lambda with [lambda]P'
//! equal to that point.

use num_bigint::BigInt;
use num_traits::Zero;

use super::character::{crt_generators, ModPCharacter};
use crate::arith::fpoly::PolyModL;
use crate::arith::int::{is_prime_u64, mul_mod, reduce_u64};
use crate::arith::zpoly::PolyZ;
use crate::ellcurve::{ap, Curve, ReductionType};

/// Candidates examined for each residue class before giving up.
const TRIES_PER_CLASS: usize = 50;

struct Ring<'a> {
    h: &'a PolyModL,
    q: u64,
}

impl Ring<'_> {
    fn mul(&self, a: &PolyModL, b: &PolyModL) -> PolyModL {
        a.mulmod(b, self.h)
    }
    fn c(&self, k: u64) -> PolyModL {
        PolyModL::constant(self.q, k % self.q)
    }
}

type Jac = (PolyModL, PolyModL, PolyModL);

fn dbl(r: &Ring, a: &PolyModL, p: &Jac) -> Jac {
    let (x, y, z) = p;
    let xx = r.mul(x, x);
    let yy = r.mul(y, y);
    let yyyy = r.mul(&yy, &yy);
    let zz = r.mul(z, z);
    let s = r.mul(&r.c(4), &r.mul(x, &yy));
    let m = r.mul(&r.c(3), &xx).add(&r.mul(a, &r.mul(&zz, &zz)));
    let x3 = r.mul(&m, &m).sub(&s.scale(2));
    let y3 = r.mul(&m, &s.sub(&x3)).sub(&yyyy.scale(8));
    let z3 = r.mul(y, z).scale(2);
    (x3, y3, z3)
}

fn add(r: &Ring, p: &Jac, q: &Jac) -> Jac {
    let (x1, y1, z1) = p;
    let (x2, y2, z2) = q;
    let z1z1 = r.mul(z1, z1);
    let z2z2 = r.mul(z2, z2);
    let u1 = r.mul(x1, &z2z2);
    let u2 = r.mul(x2, &z1z1);
    let s1 = r.mul(y1, &r.mul(z2, &z2z2));
    let s2 = r.mul(y2, &r.mul(z1, &z1z1));
    let hh = u2.sub(&u1);
    let rr = s2.sub(&s1);
    let h2 = r.mul(&hh, &hh);
    let h3 = r.mul(&h2, &hh);
    let u1h2 = r.mul(&u1, &h2);
    let x3 = r.mul(&rr, &rr).sub(&h3).sub(&u1h2.scale(2));
    let y3 = r.mul(&rr, &u1h2.sub(&x3)).sub(&r.mul(&s1, &h3));
    let z3 = r.mul(&r.mul(z1, z2), &hh);
    (x3, y3, z3)
}

/// lambda in 1..p with Frob_q = [lambda] on the line cut out by h, or None
/// when q is unsuitable (h not squarefree of full degree mod q).
pub fn frobenius_eigenvalue(e: &Curve, h: &PolyZ, p: u64, q: u64) -> Option<u64> {
    if q <= 3 || reduce_u64(&h.lc(), q) == 0 || reduce_u64(&e.disc, q) == 0 {
        return None;
    }
    let hq = PolyModL::from_polyz(h, q).monic();
    if hq.deg() != h.deg() || !hq.is_squarefree() {
        return None;
    }
    let r = Ring { h: &hq, q };
    // short model coordinate X = 36x + 3 b2
    let big_x = PolyModL::new(q, vec![reduce_u64(&(3 * &e.b2), q), 36 % q]).rem(&hq);
    let ca = reduce_u64(&(-27 * &e.c4), q);
    let cb = reduce_u64(&(-54 * &e.c6), q);
    let x2 = r.mul(&big_x, &big_x);
    let f = r.mul(&x2, &big_x).add(&big_x.scale(ca)).add(&r.c(cb)).rem(&hq);
    let f2 = r.mul(&f, &f);
    let a_twist = f2.scale(ca);
    let frob_x = r.mul(&f, &big_x.powmod(q as u128, &hq));
    let frob_y = r.mul(&f2, &f.powmod(((q - 1) / 2) as u128, &hq));
    let base: Jac = (r.mul(&f, &big_x), f2.clone(), PolyModL::one(q));
    let mut cur = base.clone();
    for lambda in 1..p {
        if lambda == 2 {
            cur = dbl(&r, &a_twist, &base);
        } else if lambda > 2 {
            cur = add(&r, &cur, &base);
        }
        let (x, y, z) = &cur;
        let zz = r.mul(z, z);
        let zzz = r.mul(&zz, z);
        if *x == r.mul(&frob_x, &zz) && *y == r.mul(&frob_y, &zzz) {
            return Some(lambda);
        }
    }
    None
}

/// Modulus bound for the kernel character: p times l^f_l over additive
/// primes l != p. At l >= 5 the ramification is tame, so l itself suffices.
fn modulus_factors(e: &Curve, p: u64) -> Vec<(u64, u32)> {
    let mut out = vec![(p, 1)];
    for (l, ld) in e.local_data_all() {
        if l == p || ld.reduction != ReductionType::Additive {
            continue;
        }
        let f = if l >= 5 { 1 } else { ld.conductor_exponent };
        out.push((l, f));
    }
    out.sort_unstable();
    out
}

fn checked_eigenvalue(e: &Curve, h: &PolyZ, p: u64, q: u64) -> Option<u64> {
    let lambda = frobenius_eigenvalue(e, h, p, q)?;
    // lambda + q / lambda = a_q mod p
    let a = ap(e, q).ok()?;
    let inv = crate::arith::int::inv_mod(lambda, p)?;
    let lhs = (lambda + mul_mod(q % p, inv, p)) % p;
    let rhs = a.rem_euclid(p as i64) as u64;
    assert_eq!(lhs, rhs, "Frobenius eigenvalue inconsistent with a_{q}");
    Some(lambda)
}

/// The character of G_Q acting on the line with kernel polynomial h.
/// Returns None when no suitable Frobenius could be found in some residue
/// class, or when the result fails the consistency checks.
pub fn kernel_character(e: &Curve, h: &PolyZ, p: u64) -> Option<ModPCharacter> {
    let factors = modulus_factors(e, p);
    let m: u64 = factors.iter().map(|&(q, k)| q.pow(k)).product();
    let bad = e.conductor() * BigInt::from(6 * p);
    let usable = |q: u64| is_prime_u64(q) && !(&bad % q).is_zero();
    let gens = crt_generators(&factors);
    let mut values = Vec::with_capacity(gens.len());
    for &g in &gens {
        let mut found = None;
        let mut tried = 0;
        let mut q = g;
        while tried < TRIES_PER_CLASS {
            if usable(q) {
                tried += 1;
                if let Some(l) = checked_eigenvalue(e, h, p, q) {
                    found = Some(l);
                    break;
                }
            }
            q += m;
        }
        values.push(found?);
    }
    let mut vals = values.into_iter();
    let chi = ModPCharacter::from_crt_values(p, &factors, |_| vals.next().unwrap());
    // Spot-check the assembled character on further primes.
    let mut checked = 0;
    let mut q = 5u64;
    while checked < 12 && q < 100_000 {
        q += 1;
        if !usable(q) {
            continue;
        }
        if let Some(l) = checked_eigenvalue(e, h, p, q) {
            if chi.eval(q) != Some(l) {
                return None;
            }
            checked += 1;
        }
    }
    Some(chi.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: [i64; 5]) -> Curve {
        Curve::from_i64(a).unwrap()
    }

    #[test]
    fn eleven_a1_lines() {
        let e = curve([0, -1, 1, -10, -20]);
        let rational_point = PolyZ::from_i64(&[80, -21, 1]);
        let chi = kernel_character(&e, &rational_point, 5).unwrap();
        assert!(chi.is_trivial());
        let other = PolyZ::from_i64(&[-29, 5, 5]);
        let chi2 = kernel_character(&e, &other, 5).unwrap();
        assert_eq!(chi2, ModPCharacter::cyclotomic(5));
    }

    #[test]
    fn eigenvalue_matches_trace() {
        let e = curve([0, -1, 1, -10, -20]);
        let h = PolyZ::from_i64(&[80, -21, 1]);
        for q in [7u64, 13, 17, 19, 23] {
            assert_eq!(frobenius_eigenvalue(&e, &h, 5, q), Some(1), "q = {q}");
        }
    }

    #[test]
    fn y2_plus_y_eq_x3_at_three() {
        let e = curve([0, 0, 1, 0, 0]);
        // (0, 0) is rational; the x = -1 line is defined over Q(sqrt(-3))
        let chi0 = kernel_character(&e, &PolyZ::from_i64(&[0, 1]), 3).unwrap();
        assert!(chi0.is_trivial());
        let chi1 = kernel_character(&e, &PolyZ::from_i64(&[1, 1]), 3).unwrap();
        assert_eq!(chi1, ModPCharacter::cyclotomic(3));
    }
}
