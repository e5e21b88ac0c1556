//! Division polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::int::is_prime_u64;
use crate::arith::zpoly::PolyZ;
use crate::ellcurve::Curve;
use crate::error::{Error, Result};

pub const MAX_P: u64 = 13;

/// 4x^3 + b2 x^2 + 2 b4 x + b6, the square of the 2-division polynomial.
pub fn two_torsion_cubic(e: &Curve) -> PolyZ {
    PolyZ::new(vec![
        e.b6.clone(),
        2 * &e.b4,
        e.b2.clone(),
        BigInt::from(4),
    ])
}

/// psi_p for an odd prime p <= 13; degree (p^2 - 1)/2.
pub fn division_polynomial(e: &Curve, p: u64) -> Result<PolyZ> {
    if p.is_multiple_of(2) || !is_prime_u64(p) {
        return Err(Error::domain(format!("p = {p} must be an odd prime")));
    }
    if p > MAX_P {
        return Err(Error::capability(format!("p = {p} exceeds the guard {MAX_P}")));
    }
    Ok(division_poly_f(e, p as usize))
}

/// f_n: psi_n for odd n and psi_n / psi_2 for even n, as a polynomial in x.
pub fn division_poly_f(e: &Curve, n: usize) -> PolyZ {
    let mut memo = HashMap::new();
    let big_f = two_torsion_cubic(e);
    f_rec(e, &big_f, n, &mut memo)
}

fn f_rec(e: &Curve, big_f: &PolyZ, n: usize, memo: &mut HashMap<usize, PolyZ>) -> PolyZ {
    if let Some(f) = memo.get(&n) {
        return f.clone();
    }
    let out = match n {
        0 => PolyZ::zero(),
        1 | 2 => PolyZ::one(),
        3 => PolyZ::new(vec![
            e.b8.clone(),
            3 * &e.b6,
            3 * &e.b4,
            e.b2.clone(),
            BigInt::from(3),
        ]),
        4 => PolyZ::new(vec![
            &e.b4 * &e.b8 - &e.b6 * &e.b6,
            &e.b2 * &e.b8 - &e.b4 * &e.b6,
            10 * &e.b8,
            10 * &e.b6,
            5 * &e.b4,
            e.b2.clone(),
            BigInt::from(2),
        ]),
        _ if n % 2 == 1 => {
            let m = n / 2;
            let a = f_rec(e, big_f, m + 2, memo);
            let b = f_rec(e, big_f, m, memo);
            let c = f_rec(e, big_f, m - 1, memo);
            let d = f_rec(e, big_f, m + 1, memo);
            let f2 = big_f * big_f;
            let left = &a * &b.pow(3);
            let right = &c * &d.pow(3);
            if m.is_multiple_of(2) {
                &(&f2 * &left) - &right
            } else {
                &left - &(&f2 * &right)
            }
        }
        _ => {
            let m = n / 2;
            let fm = f_rec(e, big_f, m, memo);
            let a = f_rec(e, big_f, m + 2, memo);
            let b = f_rec(e, big_f, m - 1, memo);
            let c = f_rec(e, big_f, m - 2, memo);
            let d = f_rec(e, big_f, m + 1, memo);
            &fm * &(&(&a * &(&b * &b)) - &(&c * &(&d * &d)))
        }
    };
    memo.insert(n, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qfactor::factor_poly_over_q;

    #[test]
    fn psi3_of_y2_y_x3() {
        let e = Curve::from_i64([0, 0, 1, 0, 0]).unwrap();
        assert_eq!(division_polynomial(&e, 3).unwrap(), PolyZ::from_i64(&[0, 3, 0, 0, 3]));
    }

    #[test]
    fn degrees_and_guards() {
        let e = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
        for p in [3u64, 5, 7, 11, 13] {
            let psi = division_polynomial(&e, p).unwrap();
            assert_eq!(psi.deg() as u64, (p * p - 1) / 2);
            assert_eq!(psi.lc(), BigInt::from(p));
        }
        assert!(matches!(division_polynomial(&e, 17), Err(Error::Capability(_))));
        assert!(matches!(division_polynomial(&e, 9), Err(Error::Domain(_))));
    }

    #[test]
    fn eleven_a1_psi5_has_isogeny_kernel() {
        let e = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
        let psi5 = division_polynomial(&e, 5).unwrap();
        assert!(psi5.div_exact(&PolyZ::from_i64(&[80, -21, 1])).is_some());
        // full factorization, frozen from an independent computer-algebra run
        let fz = factor_poly_over_q(&psi5).unwrap();
        assert_eq!(fz.content, BigInt::from(1));
        let expected = vec![
            PolyZ::from_i64(&[-16, 1]),
            PolyZ::from_i64(&[-5, 1]),
            PolyZ::from_i64(&[-29, 5, 5]),
            PolyZ::from_i64(&[101, 41, 11, 1, 1]),
            PolyZ::from_i64(&[155, 200, 120, 15, 1]),
        ];
        assert_eq!(fz.factors, expected);
    }

    #[test]
    fn vanishing_at_a_five_torsion_point() {
        // (5, 5) has order 5 on 11a1, so f_n(5) = 0 exactly when 5 | n.
        let e = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
        for n in 1..=12usize {
            let val = division_poly_f(&e, n).eval(&BigInt::from(5));
            assert_eq!(val == BigInt::from(0), n % 5 == 0, "n = {n}");
        }
        assert_eq!(division_poly_f(&e, 6).deg(), (36 - 4) / 2);
    }
}
