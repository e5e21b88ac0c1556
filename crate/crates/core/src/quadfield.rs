//! Imaginary quadratic fields Q(sqrt(-d)).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::field::FieldElem;
use crate::arith::int::{factorize, is_prime, kronecker_i64};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Decomposition {
    Finite,
    Infinite,
}

/// K = Q(sqrt(-d)) with d > 0 squarefree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: i64,
    disc: i64,
}

/// The primes of K above a rational prime share all of these data, so a
/// single record stands for any of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeOfK {
    pub residue_char: u64,
    pub splitting: SplittingType,
    pub residue_degree: u32,
    pub ramification_index: u32,
}

impl PrimeOfK {
    pub fn count_above(&self) -> u32 {
        2 / (self.residue_degree * self.ramification_index)
    }

    /// Prime of Q itself, viewed as a "split" place with trivial extension.
    pub fn rational(l: u64) -> Self {
        PrimeOfK {
            residue_char: l,
            splitting: SplittingType::Split,
            residue_degree: 1,
            ramification_index: 1,
        }
    }
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::domain(format!("d = {d} must be positive")));
        }
        let f = factorize(&BigInt::from(d))?;
        if f.values().any(|&e| e > 1) {
            return Err(Error::domain(format!("d = {d} is not squarefree")));
        }
        let disc = if d % 4 == 3 { -d } else { -4 * d };
        Ok(QuadField { d, disc })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn splitting_type(&self, l: u64) -> SplittingType {
        match kronecker_i64(self.disc, l as i64).expect("l is nonzero") {
            1 => SplittingType::Split,
            -1 => SplittingType::Inert,
            _ => SplittingType::Ramified,
        }
    }

    pub fn prime_above(&self, l: u64) -> Result<PrimeOfK> {
        if !is_prime(&BigInt::from(l)) {
            return Err(Error::domain(format!("{l} is not prime")));
        }
        let splitting = self.splitting_type(l);
        let (f, e) = match splitting {
            SplittingType::Split => (1, 1),
            SplittingType::Inert => (2, 1),
            SplittingType::Ramified => (1, 2),
        };
        Ok(PrimeOfK {
            residue_char: l,
            splitting,
            residue_degree: f,
            ramification_index: e,
        })
    }

    /// Value of the quadratic character of K at an integer n.
    pub fn chi(&self, n: i64) -> i8 {
        kronecker_i64(self.disc, n).expect("n is nonzero")
    }

    /// Class number, counted from reduced forms and cached per discriminant.
    pub fn class_number(&self) -> u64 {
        static CACHE: OnceLock<Mutex<HashMap<i64, u64>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(&h) = cache.lock().expect("cache poisoned").get(&self.disc) {
            return h;
        }
        let h = class_number_of_disc(self.disc);
        cache.lock().expect("cache poisoned").insert(self.disc, h);
        h
    }

    pub fn anticyclotomic_decomposition(&self, v: &PrimeOfK, p: u64) -> Decomposition {
        if v.residue_char == p || v.splitting == SplittingType::Split {
            Decomposition::Finite
        } else {
            Decomposition::Infinite
        }
    }

    pub fn sqrt_minus_d(&self) -> QuadNum {
        QuadNum::new(self.d, BigRational::zero(), BigRational::one())
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt(-{}))", self.d)
    }
}

/// Number of reduced primitive forms (a, b, c) with b^2 - 4ac = disc < 0.
pub fn class_number_of_disc(disc: i64) -> u64 {
    assert!(disc < 0 && (disc.rem_euclid(4) == 0 || disc.rem_euclid(4) == 1));
    let n = -disc;
    let mut h = 0u64;
    let mut a = 1i64;
    // reduced forms have a <= sqrt(|disc|/3)
    while 3 * a * a <= n {
        let mut b = -a + 1;
        while b <= a {
            let num = b * b - disc;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a && !(b < 0 && c == a) && gcd3(a, b, c) == 1 {
                    h += 1;
                }
            }
            b += 1;
        }
        a += 1;
    }
    h
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    use num_integer::Integer;
    a.gcd(&b).gcd(&c)
}

/// Whether the residue field of K_v holds the p-th roots of unity.
pub fn mu_p_in_kv(v: &PrimeOfK, p: u64) -> Result<bool> {
    if v.residue_char == p {
        return Err(Error::precondition(format!("v lies above p = {p}")));
    }
    let q = (v.residue_char as u128).pow(v.residue_degree);
    Ok(q % p as u128 == 1)
}

/// a + b sqrt(-d).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub d: i64,
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadNum {
    pub fn new(d: i64, a: BigRational, b: BigRational) -> Self {
        QuadNum { d, a, b }
    }

    pub fn rational(d: i64, a: BigRational) -> Self {
        QuadNum::new(d, a, BigRational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadNum::new(self.d, self.a.clone(), -self.b.clone())
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.b * &self.b * BigRational::from(BigInt::from(self.d))
    }

    /// A square root in K, if one exists.
    pub fn sqrt(&self) -> Option<QuadNum> {
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(QuadNum::rational(self.d, r));
            }
            // a = -d s^2 gives s sqrt(-d)
            let s2 = -&self.a / BigRational::from(BigInt::from(self.d));
            return rational_sqrt(&s2).map(|s| QuadNum::new(self.d, BigRational::zero(), s));
        }
        // (u + v w)^2 = a + b w with w^2 = -d: u^2 - d v^2 = a, 2uv = b
        let n = rational_sqrt(&self.norm())?;
        let two = BigRational::from(BigInt::from(2));
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.b / (&two * &u);
                let r = QuadNum::new(self.d, u, v);
                if r.mul_e(&r) == *self {
                    return Some(r);
                }
            }
        }
        None
    }
}

pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    use num_traits::Signed;
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl FieldElem for QuadNum {
    fn zero_like(&self) -> Self {
        QuadNum::new(self.d, BigRational::zero(), BigRational::zero())
    }
    fn one_like(&self) -> Self {
        QuadNum::new(self.d, BigRational::one(), BigRational::zero())
    }
    fn is_zero_elem(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add_e(&self, o: &Self) -> Self {
        QuadNum::new(self.d, &self.a + &o.a, &self.b + &o.b)
    }
    fn sub_e(&self, o: &Self) -> Self {
        QuadNum::new(self.d, &self.a - &o.a, &self.b - &o.b)
    }
    fn mul_e(&self, o: &Self) -> Self {
        let d = BigRational::from(BigInt::from(self.d));
        QuadNum::new(
            self.d,
            &self.a * &o.a - &self.b * &o.b * d,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
    fn neg_e(&self) -> Self {
        QuadNum::new(self.d, -self.a.clone(), -self.b.clone())
    }
    fn inv_e(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        QuadNum::new(self.d, &self.a / &n, -&self.b / &n)
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        QuadNum::rational(self.d, BigRational::from(n.clone()))
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})*sqrt(-{})", self.b, self.d)
        } else {
            write!(f, "{} + ({})*sqrt(-{})", self.a, self.b, self.d)
        }
    }
}
