//! Polynomials over a prime field F_l with l < 2^63, and their factorization
//! (square-free decomposition, distinct-degree and equal-degree splitting).

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::int::{inv_mod, mul_mod, reduce_u64};
use super::zpoly::PolyZ;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyModL {
    l: u64,
    coeffs: Vec<u64>,
}

impl PolyModL {
    pub fn new(l: u64, coeffs: Vec<u64>) -> Self {
        let mut p = PolyModL {
            l,
            coeffs: coeffs.into_iter().map(|c| c % l).collect(),
        };
        p.trim();
        p
    }

    pub fn from_i64(l: u64, coeffs: &[i64]) -> Self {
        Self::new(
            l,
            coeffs.iter().map(|&c| c.rem_euclid(l as i64) as u64).collect(),
        )
    }

    pub fn from_polyz(f: &PolyZ, l: u64) -> Self {
        Self::new(l, f.coeffs().iter().map(|c| reduce_u64(c, l)).collect())
    }

    /// Coefficients lifted to the symmetric range, as an integer polynomial.
    pub fn lift_symmetric(&self) -> PolyZ {
        let half = self.l / 2;
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.l)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.l
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn zero(l: u64) -> Self {
        PolyModL { l, coeffs: vec![] }
    }

    pub fn one(l: u64) -> Self {
        Self::new(l, vec![1])
    }

    pub fn x(l: u64) -> Self {
        Self::new(l, vec![0, 1])
    }

    pub fn constant(l: u64, c: u64) -> Self {
        Self::new(l, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let l = self.l;
        Self::new(
            l,
            (0..n)
                .map(|i| {
                    let s = self.coeff(i) + o.coeff(i);
                    if s >= l {
                        s - l
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let l = self.l;
        Self::new(
            l,
            (0..n)
                .map(|i| (self.coeff(i) + l - o.coeff(i)) % l)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.l,
            self.coeffs.iter().map(|&c| (self.l - c) % self.l).collect(),
        )
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(
            self.l,
            self.coeffs.iter().map(|&c| mul_mod(c, k, self.l)).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.l);
        }
        let l = self.l as u128;
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % l;
            }
        }
        Self::new(self.l, acc.into_iter().map(|c| c as u64).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.l).expect("leading coefficient invertible");
        self.scale(inv)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let l = self.l;
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return (Self::zero(l), self.clone());
        }
        let inv = inv_mod(d.lc(), l).expect("leading coefficient invertible");
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = mul_mod(r[i + dd], inv, l);
            if t == 0 {
                continue;
            }
            for (j, &c) in d.coeffs.iter().enumerate() {
                r[i + j] = (r[i + j] + l - mul_mod(t, c, l)) % l;
            }
            q[i] = t;
        }
        r.truncate(dd);
        (Self::new(l, q), Self::new(l, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.l).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let l = self.l;
        Self::new(
            l,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % l, l))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.l) + c) % self.l)
    }

    /// Roots in F_l, with multiplicity.
    pub fn roots(&self) -> Vec<u64> {
        let (_, fs) = self.factor();
        let mut out: Vec<u64> = fs
            .iter()
            .filter(|f| f.deg() == 1)
            .map(|f| (self.l - f.coeff(0)) % self.l)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        if d.is_zero() {
            return self.deg() == 0;
        }
        self.gcd(&d).deg() == 0
    }

    /// p-th root of a polynomial whose derivative vanishes; `l` must be small
    /// enough that the exponents are multiples of `l`.
    fn pth_root(&self) -> Self {
        let l = self.l as usize;
        // In F_l every element is its own l-th root.
        Self::new(
            self.l,
            self.coeffs.iter().step_by(l).copied().collect(),
        )
    }

    /// Square-free decomposition: pairs (g, m) with g square-free, monic.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        self.sqf_into(1, &mut out);
        out
    }

    fn sqf_into(&self, mult: u32, out: &mut Vec<(Self, u32)>) {
        let f = self.monic();
        if f.deg() == 0 {
            return;
        }
        let d = f.derivative();
        if d.is_zero() {
            f.pth_root().sqf_into(mult * self.l as u32, out);
            return;
        }
        let mut c = f.gcd(&d);
        let mut w = f.divrem(&c).0;
        let mut i = 1;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let z = w.divrem(&y).0;
            if z.deg() > 0 {
                out.push((z, i * mult));
            }
            w = y;
            c = c.divrem(&w).0;
            i += 1;
        }
        if c.deg() > 0 {
            c.pth_root().sqf_into(mult * self.l as u32, out);
        }
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(self.l);
        let mut h = x.rem(&f);
        let mut i = 0;
        while f.deg() >= 2 * (i + 1) {
            i += 1;
            h = h.powmod(self.l as u128, &f);
            let g = f.gcd(&h.sub(&x));
            if g.deg() > 0 {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((g, i));
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    /// Split a monic square-free product of irreducibles of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Self> {
        let f = self.monic();
        if f.deg() == d {
            return vec![f];
        }
        if f.deg() == 0 {
            return vec![];
        }
        let l = self.l;
        loop {
            let a = Self::new(l, (0..f.deg()).map(|_| rng.random_range(0..l)).collect());
            if a.deg() == 0 {
                continue;
            }
            let b = if l == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.clone();
                let mut s = a.clone();
                for _ in 1..d {
                    t = t.mulmod(&t, &f);
                    s = s.add(&t);
                }
                s
            } else {
                let e = ((l as u128).pow(d as u32) - 1) / 2;
                a.powmod(e, &f).sub(&Self::one(l))
            };
            let g = f.gcd(&b);
            if g.deg() > 0 && g.deg() < f.deg() {
                let h = f.divrem(&g).0;
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Full factorization: leading coefficient and monic irreducible factors
    /// listed with repetition, sorted by degree then coefficients.
    pub fn factor(&self) -> (u64, Vec<Self>) {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut rng = ChaCha8Rng::seed_from_u64(0xf1 ^ self.l);
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, &mut rng) {
                    for _ in 0..m {
                        out.push(irr.clone());
                    }
                }
            }
        }
        out.sort_by(|a, b| a.deg().cmp(&b.deg()).then(a.coeffs.cmp(&b.coeffs)));
        (self.lc(), out)
    }

    /// Degrees of the irreducible factors of a square-free polynomial.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (h, d) in self.monic().distinct_degree() {
            out.extend(std::iter::repeat_n(d, h.deg() / d));
        }
        out.sort_unstable();
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.deg() >= 1 && self.is_squarefree() && self.factor_degrees().len() == 1
    }
}

/// Factor `f` over F_l; convenience wrapper matching the public operation name.
pub fn factor_poly_over_fl(f: &PolyModL) -> (u64, Vec<PolyModL>) {
    f.factor()
}

impl fmt::Display for PolyModL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        write!(f, " (mod {})", self.l)
    }
}

impl fmt::Debug for PolyModL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
