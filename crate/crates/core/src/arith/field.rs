//! Polynomials over an exact field, used for computations in Q[x] and K[x].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::zpoly::PolyZ;

/// Minimal exact-field interface.
pub trait FieldElem: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_e(&self, o: &Self) -> Self;
    fn sub_e(&self, o: &Self) -> Self;
    fn mul_e(&self, o: &Self) -> Self;
    fn neg_e(&self) -> Self;
    /// Panics on zero.
    fn inv_e(&self) -> Self;
    fn from_int_like(&self, n: &BigInt) -> Self;
}

impl FieldElem for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_e(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_e(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_e(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_e(&self) -> Self {
        -self
    }
    fn inv_e(&self) -> Self {
        self.recip()
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        BigRational::from(n.clone())
    }
}

/// Dense polynomial over a field, lowest degree first. A prototype element
/// carries whatever context the field needs (for example the discriminant of
/// a quadratic field), so constants can be built without a separate handle.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: FieldElem> {
    pub coeffs: Vec<F>,
    proto: F,
}

impl<F: FieldElem> Poly<F> {
    pub fn new(proto: &F, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            proto: proto.zero_like(),
        }
    }

    pub fn zero(proto: &F) -> Self {
        Self::new(proto, Vec::new())
    }

    pub fn constant(c: F) -> Self {
        let proto = c.clone();
        Self::new(&proto, vec![c])
    }

    pub fn x(proto: &F) -> Self {
        Self::new(proto, vec![proto.zero_like(), proto.one_like()])
    }

    pub fn from_polyz(proto: &F, f: &PolyZ) -> Self {
        Self::new(proto, f.coeffs().iter().map(|c| proto.from_int_like(c)).collect())
    }

    pub fn proto(&self) -> &F {
        &self.proto
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| self.proto.zero_like())
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.proto.zero_like())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.proto, (0..n).map(|i| self.coeff(i).add_e(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.proto, (0..n).map(|i| self.coeff(i).sub_e(&o.coeff(i))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.proto);
        }
        let mut out = vec![self.proto.zero_like(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_e(&a.mul_e(b));
            }
        }
        Self::new(&self.proto, out)
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(&self.proto, self.coeffs.iter().map(|c| c.mul_e(k)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv_e())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return (Self::zero(&self.proto), self.clone());
        }
        let inv = d.lc().inv_e();
        let mut r = self.coeffs.clone();
        let mut q = vec![self.proto.zero_like(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = r[i + dd].mul_e(&inv);
            if t.is_zero_elem() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].sub_e(&t.mul_e(c));
            }
            q[i] = t;
        }
        r.truncate(dd);
        (Self::new(&self.proto, q), Self::new(&self.proto, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd.
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

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(self.proto.zero_like(), |acc, c| acc.mul_e(x).add_e(c))
    }

    /// `self(g) mod m`.
    pub fn compose_mod(&self, g: &Self, m: &Self) -> Self {
        let g = g.rem(m);
        self.coeffs.iter().rev().fold(Self::zero(&self.proto), |acc, c| {
            acc.mul(&g).add(&Self::constant(c.clone())).rem(m)
        })
    }

    /// Inverse of `a` modulo `m` when `gcd(a, m) = 1`.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Self::zero(&self.proto), Self::constant(self.proto.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.deg() != 0 {
            return None;
        }
        let c = r0.lc().inv_e();
        Some(s0.scale(&c).rem(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn pq(c: &[i64]) -> Poly<BigRational> {
        Poly::new(&q(0), c.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        let f = pq(&[-1, 0, 0, 1]); // x^3 - 1
        let g = pq(&[-1, 0, 1]); // x^2 - 1
        assert_eq!(f.gcd(&g), pq(&[-1, 1]));
        let (qt, r) = f.divrem(&g);
        assert_eq!(qt, pq(&[0, 1]));
        assert_eq!(r, pq(&[-1, 1]));
    }

    #[test]
    fn modular_inverse() {
        let m = pq(&[1, 0, 1]);
        let a = pq(&[1, 1]);
        let inv = a.inv_mod(&m).unwrap();
        assert_eq!(a.mul(&inv).rem(&m), pq(&[1]));
        assert!(pq(&[1, 0, 1]).inv_mod(&m).is_none());
    }
}
