//! Elliptic curves over Q in long Weierstrass form.

mod count;
mod local_k;
mod tate;
mod torsion;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::int::factorize;
use crate::error::{Error, Result};

pub use count::{ap, ap_bsgs, ap_naive};
pub use local_k::{local_data_over_k, LocalOverK};
pub use tate::{tate_local_data, Kodaira, LocalData, ReductionType};
pub use torsion::{p_torsion_over, TorsionPoint, TorsionReport, TorsionStructure};

/// Curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with cached invariants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Curve {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
    pub a6: BigInt,
    pub b2: BigInt,
    pub b4: BigInt,
    pub b6: BigInt,
    pub b8: BigInt,
    pub c4: BigInt,
    pub c6: BigInt,
    pub disc: BigInt,
}

impl Curve {
    pub fn new(ainvs: [BigInt; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = ainvs;
        let b2 = &a1 * &a1 + 4 * &a2;
        let b4 = &a1 * &a3 + 2 * &a4;
        let b6 = &a3 * &a3 + 4 * &a6;
        let b8 = &a1 * &a1 * &a6 + 4 * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
        let c4 = &b2 * &b2 - 24 * &b4;
        let c6: BigInt = 36 * &b2 * &b4 - 216 * &b6 - &b2 * &b2 * &b2;
        let disc: BigInt = 9 * &b2 * &b4 * &b6 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 - &b2 * &b2 * &b8;
        if disc.is_zero() {
            return Err(Error::domain("singular curve: discriminant is zero"));
        }
        debug_assert_eq!(
            BigInt::from(1728) * &disc,
            &c4 * &c4 * &c4 - &c6 * &c6
        );
        Ok(Curve {
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
        })
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(BigInt::from))
    }

    pub fn ainvs(&self) -> [BigInt; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn j_invariant(&self) -> BigRational {
        BigRational::new(&self.c4 * &self.c4 * &self.c4, self.disc.clone())
    }

    /// Apply [u, r, s, t]: x = u^2 x' + r, y = u^3 y' + s u^2 x' + t. Returns
    /// `None` when the new coefficients are not integral.
    pub fn transform(&self, u: &BigInt, r: &BigInt, s: &BigInt, t: &BigInt) -> Option<Curve> {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let n1 = a1 + 2 * s;
        let n2 = a2 - s * a1 + 3 * r - s * s;
        let n3 = a3 + r * a1 + 2 * t;
        let n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        let mut out = Vec::with_capacity(5);
        for (n, k) in [(n1, 1u32), (n2, 2), (n3, 3), (n4, 4), (n6, 6)] {
            let (q, rem) = n.div_rem(&u.pow(k));
            if !rem.is_zero() {
                return None;
            }
            out.push(q);
        }
        let arr: [BigInt; 5] = out.try_into().expect("five coefficients");
        Curve::new(arr).ok()
    }

    pub fn translate(&self, r: &BigInt, s: &BigInt, t: &BigInt) -> Curve {
        self.transform(&BigInt::one(), r, s, t)
            .expect("unit scaling keeps integrality")
    }

    /// The model with coefficients a_i * k^i (isomorphic over Q, not minimal
    /// at primes dividing k).
    pub fn scale_up(&self, k: &BigInt) -> Curve {
        Curve::new([
            &self.a1 * k,
            &self.a2 * k.pow(2),
            &self.a3 * k.pow(3),
            &self.a4 * k.pow(4),
            &self.a6 * k.pow(6),
        ])
        .expect("scaling preserves nonsingularity")
    }

    /// Short model y^2 = x^3 - 27 c4 x - 54 c6, reached by x' = 36x + 3b2.
    pub fn short_model(&self) -> Curve {
        Curve::new([
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            -27 * &self.c4,
            -54 * &self.c6,
        ])
        .expect("short model of a nonsingular curve")
    }

    /// Global minimal model in the reduced normal form a1, a3 in {0, 1},
    /// a2 in {-1, 0, 1}.
    pub fn minimal_model(&self) -> Curve {
        let mut e = self.clone();
        let primes = factorize(&e.disc).expect("nonzero discriminant");
        for (l, v) in primes {
            if v >= 12 {
                let l = u64::try_from(&l).expect("discriminant prime fits in u64");
                e = tate::tate_minimal_at(&e, l);
            }
        }
        e.reduce_coefficients()
    }

    fn reduce_coefficients(&self) -> Curve {
        let two = BigInt::from(2);
        let three = BigInt::from(3);
        let s = -(&self.a1 - self.a1.mod_floor(&two)) / &two;
        let a2s = &self.a2 - &s * &self.a1 - &s * &s;
        let r = -((&a2s + BigInt::one()).div_floor(&three));
        let a3r = &self.a3 + &r * &self.a1;
        let t = -(&a3r - a3r.mod_floor(&two)) / &two;
        self.translate(&r, &s, &t)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal_model().disc.abs() == self.disc.abs()
    }

    /// Local data at every bad prime of the global minimal model.
    pub fn bad_primes(&self) -> Vec<u64> {
        let m = self.minimal_model();
        factorize(&m.disc)
            .expect("nonzero discriminant")
            .keys()
            .map(|p| u64::try_from(p).expect("bad prime fits in u64"))
            .collect()
    }

    pub fn local_data_all(&self) -> BTreeMap<u64, LocalData> {
        let m = self.minimal_model();
        self.bad_primes()
            .into_iter()
            .map(|l| (l, tate_local_data(&m, l)))
            .collect()
    }

    pub fn conductor(&self) -> BigInt {
        self.local_data_all()
            .iter()
            .fold(BigInt::one(), |acc, (&l, ld)| {
                acc * BigInt::from(l).pow(ld.conductor_exponent)
            })
    }

    /// Twist by Q(sqrt(d)): c4' = d^2 c4, c6' = d^3 c6, returned minimal.
    pub fn quadratic_twist(&self, d: &BigInt) -> Result<Curve> {
        if d.is_zero() {
            return Err(Error::domain("twist by zero"));
        }
        let c4 = d * d * &self.c4;
        let c6 = d * d * d * &self.c6;
        Curve::new([
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            -27 * c4,
            -54 * c6,
        ])
        .map(|e| e.minimal_model())
    }

    /// Whether (x, y) lies on the curve.
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let q = |n: &BigInt| BigRational::from(n.clone());
        let lhs = y * y + q(&self.a1) * x * y + q(&self.a3) * y;
        let rhs = x * x * x + q(&self.a2) * x * x + q(&self.a4) * x + q(&self.a6);
        lhs == rhs
    }

    /// `[a1,a2,a3,a4,a6]` as text, the canonical identifier of a model.
    pub fn ainvs_string(&self) -> String {
        format!(
            "[{},{},{},{},{}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ainvs_string())
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve{}", self.ainvs_string())
    }
}
