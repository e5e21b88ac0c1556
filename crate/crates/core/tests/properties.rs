use finemu_core::arith::int::{is_prime_u64, kronecker, kronecker_i64, primes_between};
use finemu_core::ellcurve::{ap, ap_bsgs, ap_naive, tate_local_data};
use finemu_core::galrep::{residual_report, stable_lines, ModPCharacter, Shape};
use finemu_core::status::Status;
use finemu_core::verdict::{
    evaluate_corollary33, evaluate_theorem1, evaluate_theorem2, heegner_condition,
    heegner_family_field, VerdictConfig,
};
use finemu_core::{Curve, FactSet, HypothesisCertificate, NamedCurve, QuadField};
use num_bigint::BigInt;
use proptest::prelude::*;

fn curve(a: [i64; 5]) -> Curve {
    Curve::from_i64(a).unwrap()
}

/// Curves with a rational p-isogeny, with that p.
fn reducible_set() -> Vec<([i64; 5], u64)> {
    vec![
        ([0, -1, 1, -10, -20], 5),
        ([0, -1, 1, 0, 0], 5),
        ([0, -1, 1, -7820, -263580], 5),
        ([0, 1, 1, -9, -15], 3),
        ([0, 1, 1, -23, -50], 3),
        ([1, 0, 1, 4, -6], 3),
        ([1, -1, 1, -3, 3], 7),
        ([0, 0, 1, 0, 0], 3),
        ([0, 0, 0, 0, 1], 3),
    ]
}

fn tate_set() -> Vec<[i64; 5]> {
    vec![
        [0, -1, 1, -10, -20],
        [1, -1, 1, -1, -14],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1],
        [1, 1, 0, -794, 8289],
        [1, 0, 1, -80, -275],
        [1, 0, 1, 4, -6],
        [1, -1, 1, -3, 3],
        [0, 0, 0, 0, 25],
        [0, 0, 0, -1, 0],
    ]
}

fn small_curve() -> impl Strategy<Value = Curve> {
    prop::array::uniform5(-30i64..=30).prop_filter_map("singular", |a| Curve::from_i64(a).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hasse_bound(e in small_curve(), lo in 3u64..400) {
        let min = e.minimal_model();
        let bad = min.bad_primes();
        for l in primes_between(lo, lo + 60) {
            if bad.contains(&l) {
                continue;
            }
            let a = ap(&min, l).unwrap();
            prop_assert!((a * a) as u64 <= 4 * l, "a_{} = {}", l, a);
        }
    }

    #[test]
    fn point_counts_agree(e in small_curve(), l in 230u64..3000) {
        prop_assume!(is_prime_u64(l));
        let min = e.minimal_model();
        prop_assume!(!min.bad_primes().contains(&l));
        prop_assert_eq!(ap_naive(&min, l).unwrap(), ap_bsgs(&min, l).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn kronecker_multiplicative(a in -5000i64..5000, b in -5000i64..5000, n in 1i64..5000) {
        let (a, b, n) = (BigInt::from(a), BigInt::from(b), BigInt::from(n));
        let lhs = kronecker(&(&a * &b), &n).unwrap();
        let rhs = kronecker(&a, &n).unwrap() * kronecker(&b, &n).unwrap();
        prop_assert_eq!(lhs, rhs);
        let m = BigInt::from(b.magnitude() + 1u32);
        let lhs = kronecker(&a, &(&n * &m)).unwrap();
        let rhs = kronecker(&a, &n).unwrap() * kronecker(&a, &m).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn kronecker_small_values() {
    assert_eq!(kronecker_i64(-8, 11).unwrap(), 1);
    assert_eq!(kronecker_i64(-4, 11).unwrap(), -1);
}

/// phi1 phi2 = chibar is checked against traces: at a good prime q split
/// in K, phi1(q) + q / phi1(q) = a_q mod p, and in the split case the two
/// line characters multiply to chibar.
#[test]
fn line_characters_multiply_to_chibar() {
    let mut checked = 0;
    for (a, p) in reducible_set() {
        let e = curve(a).minimal_model();
        for d in [1, 2, 3, 5, 7, 10, 15] {
            let k = QuadField::new(d).unwrap();
            let r = residual_report(&e, &k, p).unwrap();
            assert!(r.is_reducible(), "{a:?} at {p}");
            let eta = ModPCharacter::quadratic(p, k.disc());
            let chibar = ModPCharacter::cyclotomic(p).canonical_mod(&eta);
            let (Some(phi1), Some(phi2)) = (&r.phi1, &r.phi2) else {
                continue;
            };
            assert_eq!(phi1.mul(phi2).canonical_mod(&eta), chibar);
            for q in primes_between(3, 200) {
                if q == p || e.bad_primes().contains(&q) || k.chi(q as i64) != 1 {
                    continue;
                }
                let x = phi1.eval(q).unwrap();
                let y = phi2.eval(q).unwrap();
                let aq = ap(&e, q).unwrap().rem_euclid(p as i64) as u64;
                assert_eq!((x + y) % p, aq, "{a:?}, d = {d}, q = {q}");
                assert_eq!(x * y % p, q % p);
            }
            if r.shape == Some(Shape::Split) {
                let known: Vec<_> = r.line_characters.iter().flatten().collect();
                if known.len() == 2 {
                    assert_eq!(known[0].mul(known[1]).canonical_mod(&eta), chibar);
                }
            }
            checked += 1;
        }
    }
    assert!(checked >= 40, "only {checked} cases had both characters");
}

#[test]
fn kernel_polynomials_are_doubling_closed() {
    let mut lines = 0;
    for (a, p) in reducible_set() {
        let e = curve(a).minimal_model();
        for field in [None, Some(QuadField::new(3).unwrap()), Some(QuadField::new(7).unwrap())] {
            for l in stable_lines(&e, field.as_ref(), p).unwrap() {
                assert!(l.is_doubling_closed(&e), "{a:?} at {p}: {l}");
                lines += 1;
            }
        }
    }
    assert!(lines >= 27);
}

#[test]
fn tate_invariant_under_coordinate_change() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7a7e);
    for a in tate_set() {
        let e = curve(a);
        let min = e.minimal_model();
        let bad = min.bad_primes();
        let reference: Vec<_> = bad.iter().map(|&l| tate_local_data(&min, l)).collect();
        for _ in 0..20 {
            let u = BigInt::from([1i64, 2, 3, 5, 6][rng.random_range(0..5)]);
            let r = BigInt::from(rng.random_range(-40i64..=40));
            let s = BigInt::from(rng.random_range(-40i64..=40));
            let t = BigInt::from(rng.random_range(-40i64..=40));
            let f = e.scale_up(&u).translate(&r, &s, &t);
            assert_eq!(f.conductor(), min.conductor());
            assert_eq!(f.minimal_model().ainvs(), min.ainvs());
            assert_eq!(f.minimal_model().bad_primes(), bad);
            for (ld, &l) in reference.iter().zip(&bad) {
                let lf = tate_local_data(&f, l);
                assert_eq!(lf.kodaira, ld.kodaira, "{a:?} at {l}");
                assert_eq!(lf.conductor_exponent, ld.conductor_exponent);
                assert_eq!(lf.reduction, ld.reduction);
                assert_eq!(lf.min_disc_valuation, ld.min_disc_valuation);
            }
        }
    }
}

/// Flipping an Unknown condition to Holds never loses a conclusion, and
/// flipping it to Fails never gains one.
fn assert_monotone(c: &HypothesisCertificate) -> usize {
    let base: Vec<String> = c.conclusions.iter().map(|x| x.statement.clone()).collect();
    let mut flips = 0;
    for cond in c.conditions.iter().filter(|x| x.status == Status::Unknown) {
        let up = c.with_status(&cond.name, Status::Holds);
        for s in &base {
            assert!(up.conclusions.iter().any(|x| &x.statement == s));
        }
        let down = c.with_status(&cond.name, Status::Fails);
        for x in &down.conclusions {
            assert!(base.contains(&x.statement));
        }
        flips += 1;
    }
    flips
}

#[test]
fn monotone_on_real_certificates() {
    let cfg = VerdictConfig::default();
    let none = FactSet::default();
    let mut flips = 0;
    for (a, p) in reducible_set() {
        let c = NamedCurve::new("E", curve(a));
        for d in [1, 2, 7, 10, 31] {
            let k = QuadField::new(d).unwrap();
            flips += assert_monotone(&evaluate_theorem1(&c, &k, p, &none, &cfg).unwrap());
            flips += assert_monotone(&evaluate_theorem2(&c, &k, p, &none).unwrap());
            flips += assert_monotone(&evaluate_corollary33(&c, &k, p, &none).unwrap());
        }
    }
    assert!(flips > 0);
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![Just(Status::Holds), Just(Status::Fails), Just(Status::Unknown)]
}

proptest! {
    #[test]
    fn monotone_on_random_certificates(
        statuses in prop::collection::vec(status(), 1..6),
        rules in prop::collection::vec(prop::collection::vec(0usize..6, 1..4), 1..5),
    ) {
        use finemu_core::verdict::TheoremTag;
        let mut c = HypothesisCertificate::new(TheoremTag::Theorem2);
        let names: Vec<String> = (0..statuses.len()).map(|i| format!("c{i}")).collect();
        for (n, s) in names.iter().zip(&statuses) {
            c.push(n, *s, vec![]);
        }
        for (i, r) in rules.iter().enumerate() {
            let premises: Vec<&str> = r.iter().map(|&j| names[j % names.len()].as_str()).collect();
            c.rule(format!("r{i}"), &premises);
        }
        assert_monotone(&c.finalize());
    }
}

#[test]
fn heegner_family_splits() {
    let m = 3 * 7 * 67;
    let e1 = curve([1, 1, 0, -794, 8289]);
    let e2 = curve([1, 0, 1, -80, -275]);
    for k in 1..=50u64 {
        let disc = 1 - (m * k) as i64;
        for l in [3i64, 7, 67] {
            assert_eq!(kronecker_i64(disc, l).unwrap(), 1, "k = {k}, l = {l}");
        }
        let field = heegner_family_field(m, k).unwrap();
        let n = m * k - 1;
        let f = ((n / field.d() as u64) as f64).sqrt().round() as u64;
        assert_eq!(f * f * field.d() as u64, n);
        for e in [&e1, &e2] {
            let (st, ev) = heegner_condition(e, &field, 5);
            assert_eq!(st, Status::Holds, "k = {k}: {ev:?}");
        }
    }
}
