//! Integer kernels: symbols, primality, factorization and word-size modular
//! helpers.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Int = BigInt;

const TRIAL_LIMIT: u64 = 1_000_000;

// Deterministic for n < 3.3 * 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd_i128(a as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Reduce a big integer into `[0, m)`.
pub fn reduce_u64(a: &BigInt, m: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(m));
    r.to_u64().expect("residue fits in u64")
}

/// Kronecker symbol (a|n). `n = 0` is rejected.
pub fn kronecker(a: &BigInt, n: &BigInt) -> Result<i8> {
    if n.is_zero() {
        return Err(Error::domain("kronecker symbol with n = 0"));
    }
    let mut sign = 1i8;
    let mut n = n.clone();
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            sign = -sign;
        }
    }
    let tz = n.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        if a.is_even() {
            return Ok(0);
        }
        if tz % 2 == 1 {
            let r8 = reduce_u64(a, 8);
            if r8 == 3 || r8 == 5 {
                sign = -sign;
            }
        }
        n >>= tz as usize;
    }
    Ok(sign * jacobi(a, &n))
}

/// Jacobi symbol for odd positive `n`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i8 {
    debug_assert!(n.is_positive() && n.is_odd());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i8;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz as usize;
            let r8 = reduce_u64(&n, 8);
            if tz % 2 == 1 && (r8 == 3 || r8 == 5) {
                result = -result;
            }
        }
        if reduce_u64(&a, 4) == 3 && reduce_u64(&n, 4) == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Kronecker symbol on machine integers.
pub fn kronecker_i64(a: i64, n: i64) -> Result<i8> {
    kronecker(&BigInt::from(a), &BigInt::from(n))
}

/// Legendre symbol (a|l) for an odd prime `l`, returned as -1, 0 or 1.
pub fn legendre_u64(a: u64, l: u64) -> i8 {
    let a = a % l;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (l - 1) / 2, l) == 1 {
        1
    } else {
        -1
    }
}

/// Square root modulo an odd prime (Tonelli-Shanks). `None` for non-residues.
pub fn sqrt_mod(a: u64, l: u64) -> Option<u64> {
    let a = a % l;
    if a == 0 {
        return Some(0);
    }
    if l == 2 {
        return Some(a);
    }
    if legendre_u64(a, l) != 1 {
        return None;
    }
    let mut q = l - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while legendre_u64(z, l) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, l);
    let mut t = pow_mod(a, q, l);
    let mut r = pow_mod(a, q.div_ceil(2), l);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, l);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), l);
        m = i;
        c = mul_mod(b, b, l);
        t = mul_mod(t, c, l);
        r = mul_mod(r, b, l);
    }
    Some(r)
}

fn miller_rabin_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    miller_rabin_u64(n)
}

/// Miller-Rabin with the first thirteen prime bases. Exact below 3.3 * 10^24;
/// above that, extra bases make a false positive vanishingly unlikely.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return miller_rabin_u64(small);
    }
    let n_u = n.magnitude();
    for &p in &MR_BASES {
        if (n_u % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n_u - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s as usize;
    let mut bases: Vec<u64> = MR_BASES.to_vec();
    bases.extend_from_slice(&[43, 47, 53, 59, 61, 67, 71]);
    'outer: for a in bases {
        let mut x = BigUint::from(a).modpow(&d, n_u);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n_u;
            if x == n_minus_1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes in `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| is_prime_u64(n)).collect()
}

/// First `count` primes not dividing any of `avoid`.
pub fn primes_avoiding(count: usize, avoid: &BigInt) -> impl Iterator<Item = u64> + '_ {
    (2u64..)
        .filter(|&q| is_prime_u64(q))
        .filter(move |&q| !(avoid % q).is_zero())
        .take(count)
}

pub fn next_prime(n: u64) -> u64 {
    let mut m = n + 1;
    while !is_prime_u64(m) {
        m += 1;
    }
    m
}

/// Exact prime factorization of `|n|`. Trial division to 10^6, then Brent's
/// variant of Pollard rho on the cofactor.
pub fn factorize(n: &BigInt) -> Result<BTreeMap<BigInt, u32>> {
    if n.is_zero() {
        return Err(Error::domain("factorize(0)"));
    }
    let mut out = BTreeMap::new();
    let mut m = n.abs();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let dd = BigInt::from(d);
        if &dd * &dd > m {
            break;
        }
        if (&m % d).is_zero() {
            let mut e = 0;
            while (&m % d).is_zero() {
                m /= d;
                e += 1;
            }
            out.insert(dd, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let mut stack = vec![m];
        while let Some(c) = stack.pop() {
            if c.is_one() {
                continue;
            }
            if is_prime(&c) {
                *out.entry(c).or_insert(0) += 1;
                continue;
            }
            if let Some(r) = perfect_square_root(&c) {
                stack.push(r.clone());
                stack.push(r);
                continue;
            }
            let f = pollard_brent(&c);
            let g = &c / &f;
            stack.push(f);
            stack.push(g);
        }
    }
    Ok(out)
}

fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

fn pollard_brent(n: &BigInt) -> BigInt {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ee_d0ff_1e1d);
    loop {
        let c = BigInt::from(rng.random_range(1u64..1 << 40)) % n;
        let mut y = BigInt::from(rng.random_range(2u64..1 << 40)) % n;
        let m = 128u64;
        let mut g = BigInt::one();
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let f = |v: &BigInt| (v * v + &c) % n;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
}

/// p-adic valuation of a nonzero integer; `None` for zero.
pub fn valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    Some(v)
}

/// Valuation with zero mapped to a large sentinel, for "divisible by p^k" tests.
pub fn val_or_inf(n: &BigInt, p: u64) -> u32 {
    valuation(n, p).unwrap_or(u32::MAX)
}

/// A primitive root modulo an odd prime power `l^e`.
pub fn primitive_root(l: u64, e: u32) -> u64 {
    assert!(l > 2, "primitive_root expects an odd prime");
    let phi_l = l - 1;
    let mut prime_factors = Vec::new();
    let mut m = phi_l;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            prime_factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    let mut g = 2;
    loop {
        if prime_factors.iter().all(|&q| pow_mod(g, phi_l / q, l) != 1) {
            // A root mod l lifts to all l^e unless g^(l-1) = 1 mod l^2.
            if e == 1 || pow_mod(g, phi_l, l * l) != 1 {
                return g;
            }
            return g + l;
        }
        g += 1;
    }
}
