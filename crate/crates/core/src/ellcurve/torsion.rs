//! p-torsion points over Q or an imaginary quadratic field.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::Curve;
use crate::arith::field::FieldElem;
use crate::arith::qfactor::factor_poly_over_q;
use crate::galrep::divpoly::division_polynomial;
use crate::quadfield::{rational_sqrt, QuadField, QuadNum};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorsionStructure {
    Trivial,
    Cyclic,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionPoint {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub p: u64,
    pub structure: TorsionStructure,
    /// Number of points of order dividing p, the identity included.
    pub count: u64,
    pub generators: Vec<TorsionPoint>,
}

impl TorsionReport {
    pub fn structure_label(&self) -> String {
        match self.structure {
            TorsionStructure::Trivial => "trivial".to_string(),
            TorsionStructure::Cyclic => format!("Z/{}", self.p),
            TorsionStructure::Full => format!("Z/{0} x Z/{0}", self.p),
        }
    }
}

/// Affine arithmetic over K on the curve, enough to take multiples.
pub(crate) struct KCurve<'a> {
    e: &'a Curve,
    d: i64,
}

type Pt = Option<(QuadNum, QuadNum)>;

impl<'a> KCurve<'a> {
    pub(crate) fn new(e: &'a Curve, d: i64) -> Self {
        KCurve { e, d }
    }

    fn c(&self, n: &BigInt) -> QuadNum {
        QuadNum::rational(self.d, BigRational::from(n.clone()))
    }

    fn neg(&self, p: &Pt) -> Pt {
        p.as_ref().map(|(x, y)| {
            let t = self.c(&self.e.a1).mul_e(x).add_e(&self.c(&self.e.a3));
            (x.clone(), y.neg_e().sub_e(&t))
        })
    }

    pub(crate) fn add(&self, p: &Pt, q: &Pt) -> Pt {
        let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
            return if p.is_none() { q.clone() } else { p.clone() };
        };
        let a1 = self.c(&self.e.a1);
        let a2 = self.c(&self.e.a2);
        let a3 = self.c(&self.e.a3);
        let a4 = self.c(&self.e.a4);
        let lam = if x1 == x2 {
            if self.neg(p) == *q {
                return None;
            }
            let three = self.c(&BigInt::from(3));
            let two = self.c(&BigInt::from(2));
            let num = three
                .mul_e(x1)
                .mul_e(x1)
                .add_e(&two.mul_e(&a2).mul_e(x1))
                .add_e(&a4)
                .sub_e(&a1.mul_e(y1));
            let den = two.mul_e(y1).add_e(&a1.mul_e(x1)).add_e(&a3);
            num.mul_e(&den.inv_e())
        } else {
            y2.sub_e(y1).mul_e(&x2.sub_e(x1).inv_e())
        };
        let nu = y1.sub_e(&lam.mul_e(x1));
        let x3 = lam
            .mul_e(&lam)
            .add_e(&a1.mul_e(&lam))
            .sub_e(&a2)
            .sub_e(x1)
            .sub_e(x2);
        let y3 = lam.add_e(&a1).mul_e(&x3).add_e(&nu).add_e(&a3).neg_e();
        Some((x3, y3))
    }

    pub(crate) fn mul(&self, p: &Pt, k: u64) -> Pt {
        let mut acc: Pt = None;
        for _ in 0..k {
            acc = self.add(&acc, p);
        }
        acc
    }

    pub(crate) fn on_curve(&self, x: &QuadNum, y: &QuadNum) -> bool {
        let lhs = y
            .mul_e(y)
            .add_e(&self.c(&self.e.a1).mul_e(x).mul_e(y))
            .add_e(&self.c(&self.e.a3).mul_e(y));
        let rhs = x
            .mul_e(x)
            .mul_e(x)
            .add_e(&self.c(&self.e.a2).mul_e(x).mul_e(x))
            .add_e(&self.c(&self.e.a4).mul_e(x))
            .add_e(&self.c(&self.e.a6));
        lhs == rhs
    }

    /// Points with the given x-coordinate, defined over K.
    fn points_with_x(&self, x: &QuadNum) -> Vec<(QuadNum, QuadNum)> {
        let a1 = self.c(&self.e.a1);
        let a3 = self.c(&self.e.a3);
        let lin = a1.mul_e(x).add_e(&a3);
        let cubic = x
            .mul_e(x)
            .mul_e(x)
            .add_e(&self.c(&self.e.a2).mul_e(x).mul_e(x))
            .add_e(&self.c(&self.e.a4).mul_e(x))
            .add_e(&self.c(&self.e.a6));
        let four = self.c(&BigInt::from(4));
        let disc = lin.mul_e(&lin).add_e(&four.mul_e(&cubic));
        let Some(s) = disc.sqrt() else {
            return vec![];
        };
        let half = QuadNum::rational(self.d, BigRational::new(BigInt::one(), BigInt::from(2)));
        let y1 = s.sub_e(&lin).mul_e(&half);
        let y2 = s.neg_e().sub_e(&lin).mul_e(&half);
        if y1 == y2 {
            vec![(x.clone(), y1)]
        } else {
            vec![(x.clone(), y1), (x.clone(), y2)]
        }
    }
}

/// All points of order p over Q (`field = None`) or over K.
pub fn p_torsion_over(e: &Curve, field: Option<&QuadField>, p: u64) -> Result<TorsionReport> {
    if p == 2 {
        return Err(Error::domain("p must be odd"));
    }
    let psi = division_polynomial(e, p)?;
    let d = field.map_or(1, |k| k.d());
    let kc = KCurve::new(e, d);
    let fz = factor_poly_over_q(&psi)?;
    let mut xs: Vec<QuadNum> = Vec::new();
    for (g, _) in fz.grouped() {
        match g.deg() {
            1 => xs.push(QuadNum::rational(
                d,
                BigRational::new(-g.coeff(0), g.coeff(1)),
            )),
            2 if field.is_some() => {
                let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
                let disc = BigRational::from(&b * &b - 4 * &a * &c);
                let ratio = &disc / BigRational::from(BigInt::from(-d));
                if let Some(s) = rational_sqrt(&ratio) {
                    let two_a = BigRational::from(2 * &a);
                    let re = BigRational::from(-b) / &two_a;
                    let im = s / &two_a;
                    xs.push(QuadNum::new(d, re.clone(), im.clone()));
                    xs.push(QuadNum::new(d, re, -im));
                }
            }
            _ => {}
        }
    }
    let mut points: Vec<(QuadNum, QuadNum)> = Vec::new();
    for x in &xs {
        points.extend(kc.points_with_x(x));
    }
    let count = points.len() as u64 + 1;
    let structure = match count {
        1 => TorsionStructure::Trivial,
        c if c == p => TorsionStructure::Cyclic,
        c if c == p * p => TorsionStructure::Full,
        c => unreachable!("{c} points of order dividing {p}"),
    };
    let mut generators = Vec::new();
    if let Some(first) = points.first() {
        let pt: Pt = Some(first.clone());
        generators.push(first.clone());
        if structure == TorsionStructure::Full {
            let span: Vec<Pt> = (1..p).map(|k| kc.mul(&pt, k)).collect();
            if let Some(second) = points.iter().find(|q| !span.contains(&Some((*q).clone()))) {
                generators.push(second.clone());
            }
        }
    }
    for (x, y) in &generators {
        assert!(kc.on_curve(x, y));
        assert!(kc.mul(&Some((x.clone(), y.clone())), p).is_none());
    }
    Ok(TorsionReport {
        p,
        structure,
        count,
        generators: generators
            .into_iter()
            .map(|(x, y)| TorsionPoint { x, y })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn eleven_a1_rational_five_torsion() {
        let e = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
        let r = p_torsion_over(&e, None, 5).unwrap();
        assert_eq!(r.structure, TorsionStructure::Cyclic);
        assert_eq!(r.count, 5);
        let xs: Vec<_> = r.generators.iter().map(|g| g.x.a.clone()).collect();
        assert!(xs == vec![q(5)] || xs == vec![q(16)]);
    }

    #[test]
    fn full_three_torsion_over_q_sqrt_minus_3() {
        let e = Curve::from_i64([0, 0, 1, 0, 0]).unwrap();
        let k = QuadField::new(3).unwrap();
        let r = p_torsion_over(&e, Some(&k), 3).unwrap();
        assert_eq!(r.structure, TorsionStructure::Full);
        assert_eq!(r.generators.len(), 2);
        let over_q = p_torsion_over(&e, None, 3).unwrap();
        assert_eq!(over_q.structure, TorsionStructure::Cyclic);
    }

    #[test]
    fn seventeen_a1_no_eleven_torsion() {
        let e = Curve::from_i64([1, -1, 1, -1, -14]).unwrap();
        assert_eq!(p_torsion_over(&e, None, 11).unwrap().structure, TorsionStructure::Trivial);
    }
}
