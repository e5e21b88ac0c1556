//! Galois-stable lines in E[p] over Q or an imaginary quadratic field.
//!
//! Every nonzero x-coordinate of E[p] lies on exactly one line, and the
//! x-coordinates of a line form a single orbit under doubling because 2
//! generates (Z/p)^x / {+-1} for every odd p <= 13. Doubling commutes with
//! Galois, so it permutes the irreducible factors of psi_p over the base
//! field; a line is defined over the base exactly when its x-coordinates form
//! a cycle of that permutation of total degree (p - 1)/2.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::divpoly::division_polynomial;
use crate::arith::field::{FieldElem, Poly};
use crate::arith::qfactor::factor_poly_over_q;
use crate::arith::zpoly::PolyZ;
use crate::ellcurve::Curve;
use crate::error::Result;
use crate::quadfield::{QuadField, QuadNum};

type KPoly = Poly<QuadNum>;

#[derive(Clone, Debug, PartialEq)]
pub struct StableLine {
    /// Monic kernel polynomial: the product of x - x(P) over the nonzero
    /// points of the line, taken up to sign.
    pub kernel: KPoly,
    /// Primitive integral kernel polynomial when the line is defined over Q.
    pub rational: Option<PolyZ>,
}

impl StableLine {
    pub fn is_rational(&self) -> bool {
        self.rational.is_some()
    }

    /// Whether x -> x(2P) maps the roots of the kernel polynomial to
    /// roots again, i.e. the line is closed under doubling.
    pub fn is_doubling_closed(&self, e: &Curve) -> bool {
        let t = doubling_mod(e, &self.kernel);
        self.kernel.compose_mod(&t, &self.kernel).is_zero()
    }
}

impl fmt::Display for StableLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rational {
            Some(h) => write!(f, "{h}"),
            None => {
                let deg = self.kernel.deg();
                let terms: Vec<String> = (0..=deg)
                    .rev()
                    .filter(|&i| !self.kernel.coeff(i).is_zero_elem())
                    .map(|i| {
                        let mono = match i {
                            0 => String::new(),
                            1 => "x".to_string(),
                            _ => format!("x^{i}"),
                        };
                        match (i, i == deg) {
                            (_, true) => mono,
                            (0, _) => format!("({})", self.kernel.coeff(i)),
                            _ => format!("({})*{mono}", self.kernel.coeff(i)),
                        }
                    })
                    .collect();
                write!(f, "{}", terms.join(" + "))
            }
        }
    }
}

fn kpoly_from_z(d: i64, f: &PolyZ) -> KPoly {
    Poly::from_polyz(&QuadNum::rational(d, BigRational::zero()), f)
}

/// f(x + c).
fn shift(f: &KPoly, c: &QuadNum) -> KPoly {
    let proto = f.proto().clone();
    let lin = Poly::new(&proto, vec![c.clone(), proto.one_like()]);
    f.coeffs
        .iter()
        .rev()
        .fold(Poly::zero(&proto), |acc, a| acc.mul(&lin).add(&Poly::constant(a.clone())))
}

fn conj(f: &KPoly) -> KPoly {
    Poly::new(f.proto(), f.coeffs.iter().map(QuadNum::conj).collect())
}

/// Primitive integer polynomial with the same roots, for rational input.
fn rational_to_z(f: &KPoly) -> Option<PolyZ> {
    if !f.coeffs.iter().all(QuadNum::is_rational) {
        return None;
    }
    let den = f
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.a.denom()));
    let coeffs = f
        .coeffs
        .iter()
        .map(|c| (&c.a * BigRational::from(den.clone())).to_integer())
        .collect();
    Some(PolyZ::new(coeffs).primitive_part())
}

/// Irreducible factors over K of an irreducible g in Q[x], by Trager's
/// norm method.
fn split_over_k(g: &PolyZ, d: i64) -> Vec<KPoly> {
    let gk = kpoly_from_z(d, g);
    let alpha = QuadNum::new(d, BigRational::zero(), BigRational::one());
    for s in 1i64.. {
        let c = alpha.mul_e(&QuadNum::rational(d, BigRational::from(BigInt::from(s))));
        let gs = shift(&gk, &c.neg_e());
        let norm = rational_to_z(&gs.mul(&conj(&gs))).expect("norm is rational");
        if !norm.is_squarefree() {
            continue;
        }
        let fz = factor_poly_over_q(&norm).expect("norm has bounded degree");
        let mut out = Vec::new();
        for (h, _) in fz.grouped() {
            let common = gs.gcd(&kpoly_from_z(d, &h));
            if common.deg() > 0 {
                out.push(shift(&common, &c));
            }
        }
        debug_assert_eq!(out.iter().map(Poly::deg).sum::<usize>(), g.deg());
        return out;
    }
    unreachable!()
}

/// x(2P) as a function of x(P), reduced modulo f.
fn doubling_mod(e: &Curve, f: &KPoly) -> KPoly {
    let d = f.proto().d;
    let num = PolyZ::new(vec![
        -e.b8.clone(),
        -2 * &e.b6,
        -e.b4.clone(),
        BigInt::zero(),
        BigInt::one(),
    ]);
    let den = super::divpoly::two_torsion_cubic(e);
    let inv = kpoly_from_z(d, &den)
        .inv_mod(f)
        .expect("no 2-torsion among the roots of psi_p");
    kpoly_from_z(d, &num).mul(&inv).rem(f)
}

/// All lines of E[p] stable under G_Q (`field = None`) or under G_K.
pub fn stable_lines(e: &Curve, field: Option<&QuadField>, p: u64) -> Result<Vec<StableLine>> {
    let psi = division_polynomial(e, p)?;
    let half = ((p - 1) / 2) as usize;
    let d = field.map_or(1, QuadField::d);
    let fz = factor_poly_over_q(&psi)?;
    let mut nodes: Vec<KPoly> = Vec::new();
    for (g, _) in fz.grouped() {
        if g.deg() == 0 {
            continue;
        }
        if field.is_some() && g.deg() <= 2 * half && g.deg() > 1 {
            nodes.extend(
                split_over_k(&g, d)
                    .into_iter()
                    .filter(|h| h.deg() <= half)
                    .map(|h| h.monic()),
            );
        } else if g.deg() <= half {
            nodes.push(kpoly_from_z(d, &g).monic());
        }
    }
    // The doubling permutation on nodes.
    let mut next = vec![usize::MAX; nodes.len()];
    for (i, f) in nodes.iter().enumerate() {
        let t = doubling_mod(e, f);
        next[i] = (0..nodes.len())
            .find(|&j| nodes[j].deg() == f.deg() && nodes[j].compose_mod(&t, f).is_zero())
            .expect("doubling maps a factor of psi_p onto another factor");
    }
    let mut seen = vec![false; nodes.len()];
    let mut lines = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = next[i];
        }
        assert_eq!(i, start, "doubling is a permutation of the factors");
        let total: usize = cycle.iter().map(|&j| nodes[j].deg()).sum();
        if total == half {
            let proto = nodes[start].proto().clone();
            let kernel = cycle
                .iter()
                .fold(Poly::constant(proto.one_like()), |acc, &j| acc.mul(&nodes[j]));
            let rational = rational_to_z(&kernel);
            lines.push(StableLine { kernel, rational });
        }
    }
    // Rational lines first, then by kernel for a stable order.
    lines.sort_by_key(|l| (!l.is_rational(), l.rational.clone(), l.to_string()));
    Ok(lines)
}
