//! Tate's algorithm over Q_l.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::Curve;
use crate::arith::fpoly::PolyModL;
use crate::arith::int::{inv_mod, legendre_u64, reduce_u64, val_or_inf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kodaira {
    I0,
    In(u32),
    II,
    III,
    IV,
    I0Star,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => write!(f, "I0"),
            Kodaira::In(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::I0Star => write!(f, "I0*"),
            Kodaira::InStar(m) => write!(f, "I{m}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ReductionType {
    Good,
    SplitMult,
    NonSplitMult,
    Additive,
}

impl ReductionType {
    pub fn is_multiplicative(self) -> bool {
        matches!(self, ReductionType::SplitMult | ReductionType::NonSplitMult)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub prime: u64,
    pub kodaira: Kodaira,
    pub conductor_exponent: u32,
    pub reduction: ReductionType,
    pub min_disc_valuation: u32,
    /// The local minimal model produced by the algorithm.
    pub minimal_model: Curve,
}

impl LocalData {
    /// a_l at a bad prime: 1 split, -1 nonsplit, 0 additive. `None` when good.
    pub fn bad_trace(&self) -> Option<i64> {
        match self.reduction {
            ReductionType::Good => None,
            ReductionType::SplitMult => Some(1),
            ReductionType::NonSplitMult => Some(-1),
            ReductionType::Additive => Some(0),
        }
    }
}

pub fn tate_local_data(e: &Curve, l: u64) -> LocalData {
    let ld = run_tate(e, l);
    debug_assert!(ld.conductor_exponent <= ld.min_disc_valuation);
    let bound = match l {
        2 => 8,
        3 => 5,
        _ => 2,
    };
    assert!(
        ld.conductor_exponent <= bound,
        "conductor exponent {} at {l} violates the local bound",
        ld.conductor_exponent
    );
    ld
}

pub(crate) fn tate_minimal_at(e: &Curve, l: u64) -> Curve {
    run_tate(e, l).minimal_model
}

fn v(n: &BigInt, l: u64) -> u32 {
    val_or_inf(n, l)
}

fn divides(l: u64, n: &BigInt) -> bool {
    (n % l).is_zero()
}

/// Singular point of the reduction, for v(disc) > 0.
fn singular_point(e: &Curve, l: u64) -> (u64, u64) {
    if l == 2 {
        for x in 0..2u64 {
            for y in 0..2u64 {
                let (bx, by) = (BigInt::from(x), BigInt::from(y));
                let f = &by * &by + &e.a1 * &bx * &by + &e.a3 * &by
                    - &bx * &bx * &bx
                    - &e.a2 * &bx * &bx
                    - &e.a4 * &bx
                    - &e.a6;
                let fx = &e.a1 * &by - 3 * &bx * &bx - 2 * &e.a2 * &bx - &e.a4;
                let fy = 2 * &by + &e.a1 * &bx + &e.a3;
                if divides(2, &f) && divides(2, &fx) && divides(2, &fy) {
                    return (x, y);
                }
            }
        }
        unreachable!("reduction at 2 has a singular point");
    }
    // Double root of 4x^3 + b2 x^2 + 2 b4 x + b6; y = -(a1 x + a3)/2.
    let f = PolyModL::new(
        l,
        vec![
            reduce_u64(&e.b6, l),
            reduce_u64(&(2 * &e.b4), l),
            reduce_u64(&e.b2, l),
            4 % l,
        ],
    );
    let g = f.gcd(&f.derivative());
    let x = if g.deg() >= 1 {
        let lin = if g.deg() == 1 {
            g
        } else {
            // triple root: g = (x - a)^2
            g.gcd(&g.derivative())
        };
        (l - lin.coeff(0)) % l
    } else {
        unreachable!("singular reduction has a repeated root")
    };
    let inv2 = inv_mod(2, l).expect("odd prime");
    let ax = (reduce_u64(&e.a1, l) as u128 * x as u128 + reduce_u64(&e.a3, l) as u128) % l as u128;
    let y = ((l as u128 - ax) % l as u128 * inv2 as u128 % l as u128) as u64;
    (x, y)
}

/// Root of a monic cubic T^3 + b T^2 + c T + d mod l of the given
/// multiplicity (2 or 3).
fn multiple_root(b: &BigInt, c: &BigInt, d: &BigInt, l: u64, mult: usize) -> u64 {
    let f = PolyModL::new(
        l,
        vec![reduce_u64(d, l), reduce_u64(c, l), reduce_u64(b, l), 1],
    );
    if l <= 3 {
        let df = f.derivative();
        for a in 0..l {
            if f.eval(a) == 0 && (mult == 3 || df.eval(a) == 0) {
                return a;
            }
        }
        unreachable!("multiple root exists");
    }
    let g = f.gcd(&f.derivative());
    let lin = if mult == 2 { g } else { g.gcd(&g.derivative()) };
    assert_eq!(lin.deg(), 1);
    (l - lin.coeff(0)) % l
}

/// Double root of a X^2 + b X + c mod l (a unit mod l).
fn quad_double_root(a: &BigInt, b: &BigInt, c: &BigInt, l: u64) -> BigInt {
    if l == 2 {
        // b even, a odd: X^2 = c
        return BigInt::from(reduce_u64(c, 2));
    }
    let a = reduce_u64(a, l);
    let b = reduce_u64(b, l);
    let inv = inv_mod(2 * a % l, l).expect("unit");
    BigInt::from(((l - b) % l) as u128 * inv as u128 % l as u128)
}

fn run_tate(e0: &Curve, l: u64) -> LocalData {
    let lb = BigInt::from(l);
    let l2 = &lb * &lb;
    let l3 = &l2 * &lb;
    let mut e = e0.clone();
    loop {
        let vd = v(&e.disc, l);
        if vd == 0 {
            return LocalData {
                prime: l,
                kodaira: Kodaira::I0,
                conductor_exponent: 0,
                reduction: ReductionType::Good,
                min_disc_valuation: 0,
                minimal_model: e,
            };
        }
        let (x0, y0) = singular_point(&e, l);
        e = e.translate(&BigInt::from(x0), &BigInt::zero(), &BigInt::from(y0));
        debug_assert!(divides(l, &e.a3) && divides(l, &e.a4) && divides(l, &e.a6));

        if !divides(l, &e.b2) {
            let split = if l == 2 {
                // tangent cone y^2 + a1 xy - a2 x^2 splits over F_2 iff a2 even
                divides(2, &e.a2)
            } else {
                legendre_u64(reduce_u64(&(-&e.c6), l), l) == 1
            };
            return LocalData {
                prime: l,
                kodaira: Kodaira::In(vd),
                conductor_exponent: 1,
                reduction: if split {
                    ReductionType::SplitMult
                } else {
                    ReductionType::NonSplitMult
                },
                min_disc_valuation: vd,
                minimal_model: e,
            };
        }
        let additive = |k: Kodaira, f: u32, e: Curve| LocalData {
            prime: l,
            kodaira: k,
            conductor_exponent: f,
            reduction: ReductionType::Additive,
            min_disc_valuation: vd,
            minimal_model: e,
        };
        if v(&e.a6, l) < 2 {
            return additive(Kodaira::II, vd, e);
        }
        if v(&e.b8, l) < 3 {
            return additive(Kodaira::III, vd - 1, e);
        }
        if v(&e.b6, l) < 3 {
            return additive(Kodaira::IV, vd - 2, e);
        }
        // Arrange l | a1, a2; l^2 | a3, a4; l^3 | a6.
        let (s, t) = if l == 2 {
            let s = BigInt::from(reduce_u64(&e.a2, 2));
            let t = 2 * BigInt::from(reduce_u64(&(&e.a6 / 4), 2));
            (s, t)
        } else {
            let inv2 = BigInt::from(inv_mod(2, l).expect("odd"));
            let s = (-&e.a1 * &inv2).mod_floor(&lb);
            let t = (-&e.a3 * &inv2).mod_floor(&l2);
            (s, t)
        };
        e = e.translate(&BigInt::zero(), &s, &t);
        debug_assert!(divides(l, &e.a1) && divides(l, &e.a2));
        debug_assert!(v(&e.a3, l) >= 2 && v(&e.a4, l) >= 2 && v(&e.a6, l) >= 3);

        let b = &e.a2 / &lb;
        let c = &e.a4 / &l2;
        let d = &e.a6 / &l3;
        let w = 27 * &d * &d - &b * &b * &c * &c + 4 * &b * &b * &b * &d - 18 * &b * &c * &d
            + 4 * &c * &c * &c;
        let x = 3 * &c - &b * &b;
        if !divides(l, &w) {
            return additive(Kodaira::I0Star, vd - 4, e);
        }
        if !divides(l, &x) {
            // I_m^*: move the double root to 0 and run the alternating tests.
            let r = multiple_root(&b, &c, &d, l, 2);
            e = e.translate(&(&lb * r), &BigInt::zero(), &BigInt::zero());
            let mut ix = 3u32;
            let mut iy = 3u32;
            let mut mx = l2.clone();
            let mut my = l2.clone();
            loop {
                let a3t = &e.a3 / &my;
                let a6t = &e.a6 / (&mx * &my);
                if !divides(l, &(&a3t * &a3t + 4 * &a6t)) {
                    break;
                }
                let t = &my * quad_double_root(&BigInt::one(), &a3t, &(-&a6t), l);
                e = e.translate(&BigInt::zero(), &BigInt::zero(), &t);
                my = &my * &lb;
                iy += 1;
                let a2t = &e.a2 / &lb;
                let a4t = &e.a4 / (&lb * &mx);
                let a6t = &e.a6 / (&mx * &my);
                if !divides(l, &(&a4t * &a4t - 4 * &a2t * &a6t)) {
                    break;
                }
                let r = &mx * quad_double_root(&a2t, &a4t, &a6t, l);
                e = e.translate(&r, &BigInt::zero(), &BigInt::zero());
                mx = &mx * &lb;
                ix += 1;
            }
            let m = ix + iy - 5;
            return additive(Kodaira::InStar(m), vd - m - 4, e);
        }
        // Triple root: move it to 0.
        let r = multiple_root(&b, &c, &d, l, 3);
        e = e.translate(&(&lb * r), &BigInt::zero(), &BigInt::zero());
        let a3t = &e.a3 / &l2;
        let a6t = &e.a6 / (&l2 * &l2);
        if !divides(l, &(&a3t * &a3t + 4 * &a6t)) {
            return additive(Kodaira::IVStar, vd - 6, e);
        }
        let t = &l2 * quad_double_root(&BigInt::one(), &a3t, &(-&a6t), l);
        e = e.translate(&BigInt::zero(), &BigInt::zero(), &t);
        if v(&e.a4, l) < 4 {
            return additive(Kodaira::IIIStar, vd - 7, e);
        }
        if v(&e.a6, l) < 6 {
            return additive(Kodaira::IIStar, vd - 8, e);
        }
        // Not minimal: scale down by l and start over.
        e = e
            .transform(&lb, &BigInt::zero(), &BigInt::zero(), &BigInt::zero())
            .expect("divisibility established by the algorithm");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: [i64; 5]) -> Curve {
        Curve::from_i64(a).unwrap()
    }

    #[test]
    fn eleven_a1() {
        let e = curve([0, -1, 1, -10, -20]);
        let ld = tate_local_data(&e, 11);
        assert_eq!(ld.kodaira, Kodaira::In(5));
        assert_eq!(ld.conductor_exponent, 1);
        assert_eq!(ld.min_disc_valuation, 5);
        assert_eq!(ld.reduction, ReductionType::SplitMult);
        let ld2 = tate_local_data(&e, 2);
        assert_eq!(ld2.reduction, ReductionType::Good);
        assert_eq!(ld2.conductor_exponent, 0);
    }

    #[test]
    fn y2_plus_y_eq_x3_at_3() {
        let e = curve([0, 0, 1, 0, 0]);
        let ld = tate_local_data(&e, 3);
        assert_eq!(ld.reduction, ReductionType::Additive);
        assert_eq!(ld.conductor_exponent, 3);
        assert_eq!(ld.kodaira, Kodaira::II);
    }

    #[test]
    fn example_pairs() {
        // 201c1: I5 at 3 (split since a3 = -1 ... nonsplit), I1 at 67
        let e = curve([1, 1, 0, -794, 8289]);
        let l3 = tate_local_data(&e, 3);
        assert_eq!(l3.kodaira, Kodaira::In(5));
        assert_eq!(l3.reduction, ReductionType::NonSplitMult);
        let l67 = tate_local_data(&e, 67);
        assert_eq!(l67.reduction, ReductionType::NonSplitMult);
        // 469a1: a7 = -1, a67 = -1
        let f = curve([1, 0, 1, -80, -275]);
        assert_eq!(tate_local_data(&f, 7).kodaira, Kodaira::In(5));
        assert_eq!(tate_local_data(&f, 7).reduction, ReductionType::NonSplitMult);
        assert_eq!(tate_local_data(&f, 67).reduction, ReductionType::NonSplitMult);
    }

    #[test]
    fn star_types() {
        // y^2 = x^3 - x: conductor 32, type at 2
        let e = curve([0, 0, 0, -1, 0]);
        assert_eq!(tate_local_data(&e, 2).conductor_exponent, 5);
        // y^2 = x^3 + 5^2 x (twist of x^3 + x by 5): I0* at 5
        let e = curve([0, 0, 0, 25, 0]);
        let ld = tate_local_data(&e, 5);
        assert_eq!(ld.kodaira, Kodaira::I0Star);
        assert_eq!(ld.conductor_exponent, 2);
        // twist of 11a1 by 5: I5* at 11? no, 11a1 twisted by -11 gives I5* at 11
        let t = curve([0, -1, 1, -10, -20]).quadratic_twist(&BigInt::from(-11)).unwrap();
        let ld = tate_local_data(&t, 11);
        assert_eq!(ld.kodaira, Kodaira::InStar(5));
        assert_eq!(ld.conductor_exponent, 2);
    }
}
