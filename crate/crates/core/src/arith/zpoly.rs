//! Dense univariate polynomials over Z, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> PolyZ {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        PolyZ::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    pub fn derivative(&self) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> PolyZ {
        let mut base = self.clone();
        let mut acc = PolyZ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `f(a*x + b)` via Horner.
    pub fn substitute_linear(&self, a: &BigInt, b: &BigInt) -> PolyZ {
        let lin = PolyZ::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(PolyZ::zero(), |acc, c| &(&acc * &lin) + &PolyZ::constant(c.clone()))
    }

    /// Exact division. Returns `None` if `d` does not divide `self` in Z[x].
    pub fn div_exact(&self, d: &PolyZ) -> Option<PolyZ> {
        let (q, r) = self.divrem_over_z(d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Long division valid when every intermediate quotient coefficient is an
    /// integer; `None` as soon as one is not.
    pub fn divrem_over_z(&self, d: &PolyZ) -> Option<(PolyZ, PolyZ)> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((PolyZ::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[i + j] -= &qi * c;
            }
            q[i] = qi;
        }
        r.truncate(dd);
        Some((PolyZ::new(q), PolyZ::new(r)))
    }

    /// Pseudo-remainder: `lc(d)^(deg f - deg d + 1) * f mod d`.
    pub fn pseudo_rem(&self, d: &PolyZ) -> PolyZ {
        let dd = d.deg();
        let lc = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let top = r.lc();
            let mut t = vec![BigInt::zero(); shift];
            t.extend(d.coeffs.iter().map(|c| c * &top));
            r = &r.scale(&lc) - &PolyZ::new(t);
        }
        r
    }

    pub fn gcd(&self, other: &PolyZ) -> PolyZ {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        let g = self.content().gcd(&other.content());
        a.primitive_part().scale(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs.iter().cloned().map(BigRational::from).collect()
    }

    /// Infinity norm of the coefficient vector.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, o: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, o: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, o: &PolyZ) -> PolyZ {
        if self.is_zero() || o.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let f = PolyZ::from_i64(&[80, -21, 1]);
        assert_eq!(f.to_string(), "x^2 - 21*x + 80");
        let g = &PolyZ::from_i64(&[-5, 1]) * &PolyZ::from_i64(&[-16, 1]);
        assert_eq!(f, g);
        assert_eq!(f.div_exact(&PolyZ::from_i64(&[-5, 1])).unwrap(), PolyZ::from_i64(&[-16, 1]));
        assert!(f.div_exact(&PolyZ::from_i64(&[-4, 1])).is_none());
    }

    #[test]
    fn gcd_and_content() {
        let a = PolyZ::from_i64(&[0, 6, 6]); // 6x(x+1)
        let b = PolyZ::from_i64(&[3, 3, 0, 0]); // 3(x+1)
        assert_eq!(a.gcd(&b), PolyZ::from_i64(&[3, 3]));
        assert_eq!(a.content(), BigInt::from(6));
        assert_eq!(PolyZ::from_i64(&[-2, 0, -4]).primitive_part(), PolyZ::from_i64(&[1, 0, 2]));
        assert!(!PolyZ::from_i64(&[1, 2, 1]).is_squarefree());
    }

    #[test]
    fn linear_substitution() {
        let f = PolyZ::from_i64(&[1, 0, 1]);
        // (2x+3)^2 + 1
        assert_eq!(
            f.substitute_linear(&BigInt::from(2), &BigInt::from(3)),
            PolyZ::from_i64(&[10, 12, 4])
        );
    }
}
