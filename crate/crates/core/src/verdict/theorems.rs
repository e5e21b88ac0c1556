//! The four evaluators. Each one evaluates every condition in a fixed
//! order, whatever the outcome of the earlier ones.

use num_bigint::BigInt;

use crate::arith::int::{factorize, is_prime_u64};
use crate::congruence::{is_p_congruent, CongruenceStatus};
use crate::ellcurve::{p_torsion_over, Curve, TorsionReport, TorsionStructure};
use crate::error::{Error, Result};
use crate::galrep::{
    hida_rubin_condition, residual_report, sigma_phi2_set, sigma_set, ModPCharacter, PrimeSet,
    ResidualReport, Shape, MAX_P,
};
use crate::quadfield::{QuadField, SplittingType};
use crate::status::Status;

use super::certificate::{HypothesisCertificate, TheoremTag};
use super::facts::{FactSet, NamedCurve};

/// How far the classical vanishing of mu(K^ac/K) may be invoked for the
/// characters 1 and chibar.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClassicalMuMode {
    /// Only when h_K = 1.
    #[default]
    ClassNumberOne,
    /// Whenever p does not divide h_K.
    PrimeToP,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerdictConfig {
    pub classical_mu: ClassicalMuMode,
}

pub const FINE_MU_STATEMENT: &str = "Lambda-cotorsion with mu_fine = 0";

const CLASSICAL_MU_SOURCE: &str =
    "mu(K^ac/K) = 0 for h_K = 1 (Ochiai 2009, Prop. 4.2)";

fn check_p(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime_u64(p) {
        return Err(Error::domain(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

fn split_word(s: SplittingType) -> &'static str {
    match s {
        SplittingType::Split => "split",
        SplittingType::Inert => "inert",
        SplittingType::Ramified => "ramified",
    }
}

fn show_set(name: &str, set: &PrimeSet) -> String {
    let items: Vec<String> = set
        .entries
        .iter()
        .map(|e| format!("{} ({:?})", e.prime.residue_char, e.membership))
        .collect();
    format!("{name} = {{{}}}", items.join(", "))
}

/// Every l under a member of the set splits in K. A member of unknown
/// membership counts as a member.
fn set_is_split(name: &str, set: &PrimeSet, k: &QuadField) -> (Status, Vec<String>) {
    let mut ev = vec![show_set(name, set)];
    let mut st = Status::Holds;
    for e in &set.entries {
        let l = e.prime.residue_char;
        let split = e.prime.splitting == SplittingType::Split;
        ev.push(format!(
            "l = {l}: ({}|{l}) = {}, {}; {}",
            k.disc(),
            k.chi(l as i64),
            split_word(e.prime.splitting),
            e.reason
        ));
        if !split {
            st = st.and(e.membership.not());
        }
    }
    (st, ev)
}

/// Every bad prime l != p of E splits in K.
pub fn heegner_condition(e: &Curve, k: &QuadField, p: u64) -> (Status, Vec<String>) {
    let bad: Vec<u64> = e
        .minimal_model()
        .bad_primes()
        .into_iter()
        .filter(|&l| l != p)
        .collect();
    if bad.is_empty() {
        return (Status::Holds, vec!["no bad prime away from p".into()]);
    }
    let mut st = Status::Holds;
    let mut ev = Vec::new();
    for l in bad {
        let s = k.splitting_type(l);
        ev.push(format!("l = {l}: ({}|{l}) = {}, {}", k.disc(), k.chi(l as i64), split_word(s)));
        st = st.and(Status::from_bool(s == SplittingType::Split));
    }
    (st, ev)
}

/// K = Q(sqrt(1 - M k)), i.e. Q(sqrt(-d)) for d the squarefree part of
/// M k - 1. Every prime dividing M splits there, as 1 - M k is a nonzero
/// square mod l and l does not divide the square part.
pub fn heegner_family_field(m: u64, k: u64) -> Option<QuadField> {
    let n = m.checked_mul(k)?.checked_sub(1)?;
    let mut d = 1u64;
    for (q, e) in factorize(&BigInt::from(n)).ok()? {
        if e % 2 == 1 {
            d *= u64::try_from(q).ok()?;
        }
    }
    QuadField::new(i64::try_from(d).ok()?).ok()
}

fn torsion_line(r: &TorsionReport, over: &str) -> String {
    let gens: Vec<String> = r.generators.iter().map(|g| g.to_string()).collect();
    if gens.is_empty() {
        format!("E({over})[{}] = {}", r.p, r.structure_label())
    } else {
        format!("E({over})[{}] = {}, generated by {}", r.p, r.structure_label(), gens.join(" and "))
    }
}

/// A fact is either present or simply not known; its absence is never a
/// failure.
fn given(present: bool) -> Status {
    if present {
        Status::Holds
    } else {
        Status::Unknown
    }
}

fn eq_on_gk(a: &ModPCharacter, b: &ModPCharacter, eta: &ModPCharacter) -> bool {
    a == b || a.mul(eta) == *b
}

fn reducible_condition(r: &ResidualReport) -> (Status, Vec<String>) {
    if !r.is_reducible() {
        return (
            Status::Fails,
            vec![format!("psi_{} has no factor cutting out a Galois-stable line over K", r.p)],
        );
    }
    let mut ev = Vec::new();
    for (kern, ch) in r.line_kernels.iter().zip(&r.line_characters) {
        let c = ch.as_ref().map_or("undetermined".to_string(), |c| c.label());
        ev.push(format!("stable line with kernel polynomial {kern}, character {c}"));
    }
    (Status::Holds, ev)
}

fn describe_rhobar(r: &ResidualReport, tors: &TorsionReport) -> String {
    if tors.structure == TorsionStructure::Full {
        return "rhobar trivial (E[p] is rational over K)".into();
    }
    match (r.shape, &r.phi1, &r.phi2) {
        (None, _, _) => "rhobar irreducible over K".into(),
        (Some(s), Some(a), Some(b)) => format!("rhobar reducible, {s:?}, phi1 = {a}, phi2 = {b}"),
        (Some(s), _, _) => format!("rhobar reducible, {s:?}, characters undetermined"),
    }
}

fn describe(c: &NamedCurve, min: &Curve) -> String {
    let model = min.ainvs_string();
    if c.label == model {
        model
    } else {
        format!("{} {model}", c.label)
    }
}

fn common_observations(
    cert: &mut HypothesisCertificate,
    c: &NamedCurve,
    k: &QuadField,
    p: u64,
) {
    let min = c.curve.minimal_model();
    cert.observe(format!("E = {}", describe(c, &min)));
    cert.observe(format!("N = {}", min.conductor()));
    cert.observe(format!("K = Q(sqrt(-{})), disc {}", k.d(), k.disc()));
    cert.observe(format!("p = {p}, {} in K", split_word(k.splitting_type(p))));
}

fn classical_route(
    phi: Option<&ModPCharacter>,
    k: &QuadField,
    p: u64,
    facts: &FactSet,
    cfg: &VerdictConfig,
) -> (Status, String) {
    let Some(phi) = phi else {
        return (Status::Unknown, "character undetermined".into());
    };
    let eta = ModPCharacter::quadratic(p, k.disc());
    let one = ModPCharacter::trivial(p);
    let chibar = ModPCharacter::cyclotomic(p);
    let which = if eq_on_gk(phi, &one, &eta) {
        "1"
    } else if eq_on_gk(phi, &chibar, &eta) {
        "chibar"
    } else {
        return (Status::Unknown, format!("classical rule inapplicable: character {phi} is not 1 or chibar"));
    };
    let h = k.class_number();
    if let Some(f) = facts.classical_mu_zero() {
        return (Status::Holds, format!("character {which} on G_K; mu(K^ac/K) = 0 by {}", f.citation()));
    }
    match cfg.classical_mu {
        ClassicalMuMode::ClassNumberOne if h == 1 => (
            Status::Holds,
            format!("character {which} on G_K; h_K = 1; {CLASSICAL_MU_SOURCE}"),
        ),
        ClassicalMuMode::PrimeToP if !h.is_multiple_of(p) => (
            Status::Holds,
            format!(
                "character {which} on G_K; h_K = {h} prime to {p}; extended classical rule (p does not divide h_K) enabled by configuration"
            ),
        ),
        ClassicalMuMode::ClassNumberOne => (
            Status::Unknown,
            format!("character {which} on G_K but h_K = {h}; classical rule limited to h_K = 1"),
        ),
        ClassicalMuMode::PrimeToP => (
            Status::Unknown,
            format!("character {which} on G_K but {p} divides h_K = {h}"),
        ),
    }
}

fn mu_y_condition(
    r: &ResidualReport,
    k: &QuadField,
    p: u64,
    facts: &FactSet,
    cfg: &VerdictConfig,
) -> Result<(Status, Vec<String>)> {
    let mut ev = Vec::new();
    let hida = if r.is_reducible() {
        let h = hida_rubin_condition(r, k, p)?;
        ev.push(format!("Hida-Rubin condition (p split, phi1 not 1 or chibar at p): {h:?}"));
        h
    } else {
        ev.push("Y_1, Y_2 undefined: rhobar irreducible".into());
        Status::Unknown
    };
    let mut total = Status::Holds;
    for (i, phi) in [(1u8, r.phi1.as_ref()), (2, r.phi2.as_ref())] {
        let (classical, why) = if r.is_reducible() {
            classical_route(phi, k, p, facts, cfg)
        } else {
            (Status::Unknown, "no character".into())
        };
        let fact = facts.mu_y_zero(i);
        let by_fact = given(fact.is_some());
        let st = if hida == Status::Holds || classical == Status::Holds || fact.is_some() {
            Status::Holds
        } else {
            Status::Unknown
        };
        ev.push(format!("mu(Y_{i}) = 0 via classical rule: {classical:?} ({why})"));
        match fact {
            Some(f) => ev.push(format!("mu(Y_{i}) = 0 via {}", f.citation())),
            None => ev.push(format!("mu(Y_{i}) = 0 via fact: {by_fact:?}")),
        }
        ev.push(format!("mu(Y_{i}) = 0: {st:?}"));
        total = total.and(st);
    }
    Ok((total, ev))
}

/// Criterion for R_{p^inf}(E/K^ac) to be cotorsion with vanishing fine
/// mu-invariant, for a residually reducible E.
pub fn evaluate_theorem1(
    c: &NamedCurve,
    k: &QuadField,
    p: u64,
    facts: &FactSet,
    cfg: &VerdictConfig,
) -> Result<HypothesisCertificate> {
    check_p(p)?;
    let e = c.curve.minimal_model();
    let r = residual_report(&e, k, p)?;
    let tors = p_torsion_over(&e, Some(k), p)?;
    let mut cert = HypothesisCertificate::new(TheoremTag::Theorem1);
    common_observations(&mut cert, c, k, p);
    cert.observe(torsion_line(&tors, "K"));
    cert.observe(format!("h_K = {}", k.class_number()));
    cert.observe(describe_rhobar(&r, &tors));

    let (st, ev) = reducible_condition(&r);
    cert.push("reducible", st, ev);

    let sigma = sigma_set(&e, k, p);
    let (st, ev) = set_is_split("Sigma", &sigma, k);
    cert.observe(show_set("Sigma", &sigma));
    cert.push("sigma_split", st, ev);

    let (st, ev) = match r.shape {
        Some(Shape::Indecomposable) => {
            let s2 = sigma_phi2_set(&r, &e, k)?;
            cert.observe(show_set("Sigma(phi2)", &s2));
            set_is_split("Sigma(phi2)", &s2, k)
        }
        Some(Shape::Split) => (Status::Holds, vec!["rhobar split: not required".into()]),
        Some(Shape::Unknown) => (Status::Unknown, vec!["shape of rhobar undetermined".into()]),
        None => (Status::Holds, vec!["rhobar irreducible: not required".into()]),
    };
    cert.push("sigma_phi2_split", st, ev);

    let (st, ev) = mu_y_condition(&r, k, p, facts, cfg)?;
    cert.push("mu_Y_zero", st, ev);

    cert.rule(
        format!("R_{{{p}^inf}}(E/K^ac) is {FINE_MU_STATEMENT}"),
        &["reducible", "sigma_split", "sigma_phi2_split", "mu_Y_zero"],
    );
    Ok(cert.finalize())
}

fn fine_mu_facts(c: &NamedCurve, facts: &FactSet) -> (Status, Vec<String>) {
    let mut ev = Vec::new();
    let cot = facts.cotorsion(c);
    let fine = facts.fine_mu_zero(c);
    for (name, f) in [("CotorsionAssumed", cot), ("FineMuZero", fine)] {
        match f {
            Some(f) => ev.push(f.citation()),
            None => ev.push(format!("missing fact {name}({})", c.label)),
        }
    }
    (given(cot.is_some() && fine.is_some()), ev)
}

/// Partial converse: vanishing of the fine mu-invariant forces mu(Y_1) = 0,
/// and mu(Y_2) = 0 as well when rhobar is split.
pub fn evaluate_theorem2(
    c: &NamedCurve,
    k: &QuadField,
    p: u64,
    facts: &FactSet,
) -> Result<HypothesisCertificate> {
    check_p(p)?;
    let e = c.curve.minimal_model();
    let r = residual_report(&e, k, p)?;
    let mut cert = HypothesisCertificate::new(TheoremTag::Theorem2);
    common_observations(&mut cert, c, k, p);
    if let (Some(a), Some(b)) = (&r.phi1, &r.phi2) {
        cert.observe(format!("phi1 = {a}, phi2 = {b}"));
    }

    let (st, ev) = reducible_condition(&r);
    cert.push("reducible", st, ev);
    let (st, ev) = fine_mu_facts(c, facts);
    cert.push("cotorsion_mu_fine_zero", st, ev);
    let (st, ev) = match r.shape {
        Some(Shape::Split) => (Status::Holds, format!("{} independent stable lines", r.lines.len())),
        Some(Shape::Indecomposable) => (Status::Fails, "a single stable line".to_string()),
        Some(Shape::Unknown) => (Status::Unknown, "shape undetermined".to_string()),
        None => (Status::Fails, "rhobar irreducible".to_string()),
    };
    cert.push("split", st, vec![ev]);

    cert.rule("mu(Y_1) = 0", &["reducible", "cotorsion_mu_fine_zero"]);
    cert.rule("mu(Y_2) = 0", &["reducible", "cotorsion_mu_fine_zero", "split"]);
    Ok(cert.finalize())
}

/// Vanishing of the classical mu-invariant of K^ac/K from a rational
/// p-torsion point and vanishing of the fine mu-invariant.
pub fn evaluate_corollary33(
    c: &NamedCurve,
    k: &QuadField,
    p: u64,
    facts: &FactSet,
) -> Result<HypothesisCertificate> {
    check_p(p)?;
    let e = c.curve.minimal_model();
    let tq = p_torsion_over(&e, None, p)?;
    let tk = p_torsion_over(&e, Some(k), p)?;
    let mut cert = HypothesisCertificate::new(TheoremTag::Corollary33);
    common_observations(&mut cert, c, k, p);
    cert.observe(torsion_line(&tq, "Q"));
    cert.observe(torsion_line(&tk, "K"));

    cert.push(
        "torsion_over_K",
        Status::from_bool(tk.count > 1),
        vec![torsion_line(&tk, "K")],
    );
    let (st, ev) = fine_mu_facts(c, facts);
    cert.push("cotorsion_mu_fine_zero", st, ev);
    let (st, ev) = heegner_condition(&e, k, p);
    cert.push("heegner", st, ev);

    cert.rule(
        "mu(K^ac/K) = 0",
        &["torsion_over_K", "cotorsion_mu_fine_zero", "heegner"],
    );
    Ok(cert.finalize())
}

/// Transfer of the vanishing of the fine mu-invariant between two
/// p-congruent curves satisfying the Heegner hypothesis.
pub fn evaluate_theorem3(
    c1: &NamedCurve,
    c2: &NamedCurve,
    k: &QuadField,
    p: u64,
    facts: &FactSet,
) -> Result<HypothesisCertificate> {
    check_p(p)?;
    let e1 = c1.curve.minimal_model();
    let e2 = c2.curve.minimal_model();
    let mut cert = HypothesisCertificate::new(TheoremTag::Theorem3);
    cert.observe(format!("E1 = {}", describe(c1, &e1)));
    cert.observe(format!("E2 = {}", describe(c2, &e2)));
    cert.observe(format!("K = Q(sqrt(-{})), disc {}", k.d(), k.disc()));
    for (name, e) in [("E1", &e1), ("E2", &e2)] {
        if p <= MAX_P {
            let r = residual_report(e, k, p)?;
            cert.observe(format!("rhobar_{name} over K: {:?}", r.status));
        } else {
            cert.observe(format!("rhobar_{name} over K: not computed (p > {MAX_P})"));
        }
    }

    let (st, ev) = heegner_condition(&e1, k, p);
    cert.push("heegner_E1", st, ev);
    let (st, ev) = heegner_condition(&e2, k, p);
    cert.push("heegner_E2", st, ev);

    let v = is_p_congruent(&e1, &e2, p)?;
    let st = match v.status {
        CongruenceStatus::Congruent => Status::Holds,
        CongruenceStatus::NotCongruent => Status::Fails,
        CongruenceStatus::Inconclusive => Status::Unknown,
    };
    let mut ev = vec![format!(
        "{:?} at Sturm bound {}, {} primes compared",
        v.status, v.bound_used, v.checked_primes
    )];
    if let Some(w) = v.witness {
        ev.push(format!("traces differ mod {p} at l = {w}"));
    }
    if !v.skipped.is_empty() {
        let s: Vec<String> = v.skipped.iter().map(|l| l.to_string()).collect();
        ev.push(format!("skipped l = {}", s.join(", ")));
    }
    ev.extend(v.caveat.clone());
    cert.push("congruent", st, ev);

    for (name, c) in [("E1", c1), ("E2", c2)] {
        let f = facts.fine_mu_zero(c);
        let ev = match f {
            Some(f) => vec![f.citation()],
            None => vec![format!("no fact FineMuZero({})", c.label)],
        };
        cert.push(&format!("fine_mu_zero_{name}"), given(f.is_some()), ev);
    }

    let base = ["heegner_E1", "heegner_E2", "congruent"];
    cert.rule(
        format!(
            "R_{{{p}^inf}}(E1/K^ac) is {FINE_MU_STATEMENT} <=> R_{{{p}^inf}}(E2/K^ac) is {FINE_MU_STATEMENT}"
        ),
        &base,
    );
    cert.rule(
        format!("FineMuZero({}): R_{{{p}^inf}}(E2/K^ac) is {FINE_MU_STATEMENT}", c2.label),
        &["heegner_E1", "heegner_E2", "congruent", "fine_mu_zero_E1"],
    );
    cert.rule(
        format!("FineMuZero({}): R_{{{p}^inf}}(E1/K^ac) is {FINE_MU_STATEMENT}", c1.label),
        &["heegner_E1", "heegner_E2", "congruent", "fine_mu_zero_E2"],
    );
    Ok(cert.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::certificate::Outcome;
    use crate::verdict::facts::{ExternalFact, FactKind};

    fn named(label: &str, a: [i64; 5]) -> NamedCurve {
        NamedCurve::new(label, Curve::from_i64(a).unwrap())
    }

    fn fine_facts(label: &str) -> FactSet {
        FactSet::new(vec![
            ExternalFact::new(FactKind::CotorsionAssumed(label.into()), "assumed"),
            ExternalFact::new(FactKind::FineMuZero(label.into()), "assumed"),
        ])
    }

    #[test]
    fn theorem1_trivial_representation() {
        let c = named("27a3", [0, 0, 1, 0, 0]);
        let k = QuadField::new(3).unwrap();
        let cert = evaluate_theorem1(&c, &k, 3, &FactSet::default(), &VerdictConfig::default()).unwrap();
        assert_eq!(cert.outcome(), Outcome::Concluded, "{cert:#?}");
        assert!(cert.observations.contains(&"Sigma = {}".to_string()));
        assert!(cert.observations.contains(&"h_K = 1".to_string()));
        assert!(cert.observations.iter().any(|o| o.starts_with("E(K)[3] = Z/3 x Z/3")));
        assert!(cert.observations.iter().any(|o| o.starts_with("rhobar trivial")));
    }

    #[test]
    fn theorem1_irreducible() {
        let c = named("17a1", [1, -1, 1, -1, -14]);
        let k = QuadField::new(2).unwrap();
        let cert = evaluate_theorem1(&c, &k, 11, &FactSet::default(), &VerdictConfig::default()).unwrap();
        assert_eq!(cert.status_of("reducible"), Some(Status::Fails));
        assert_eq!(cert.outcome(), Outcome::ConditionFails);
        assert_eq!(cert.conditions.len(), 4);
    }

    #[test]
    fn theorem1_class_number_gate() {
        let c = named("11a1", [0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let none = FactSet::default();
        let cert = evaluate_theorem1(&c, &k, 5, &none, &VerdictConfig::default()).unwrap();
        assert_eq!(cert.status_of("reducible"), Some(Status::Holds));
        assert_eq!(cert.status_of("sigma_split"), Some(Status::Holds));
        assert_eq!(cert.status_of("mu_Y_zero"), Some(Status::Unknown));
        assert_eq!(cert.outcome(), Outcome::Inconclusive);
        let ext = VerdictConfig {
            classical_mu: ClassicalMuMode::PrimeToP,
        };
        let cert = evaluate_theorem1(&c, &k, 5, &none, &ext).unwrap();
        assert_eq!(cert.outcome(), Outcome::Concluded);
        let fact = FactSet::new(vec![ExternalFact::new(FactKind::ClassicalMuZero, "lit")]);
        let cert = evaluate_theorem1(&c, &k, 5, &fact, &VerdictConfig::default()).unwrap();
        assert_eq!(cert.outcome(), Outcome::Concluded);
        assert!(cert.conclusions[0].trail.iter().any(|t| t.contains("[lit]")));
    }

    #[test]
    fn theorem2() {
        let c = named("11a1", [0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let cert = evaluate_theorem2(&c, &k, 5, &fine_facts("11a1")).unwrap();
        assert_eq!(cert.conclusions.len(), 2);
        let cert = evaluate_theorem2(&c, &k, 5, &FactSet::default()).unwrap();
        assert!(cert.conclusions.is_empty());
        let irr = named("17a1", [1, -1, 1, -1, -14]);
        let cert = evaluate_theorem2(&irr, &QuadField::new(2).unwrap(), 11, &fine_facts("17a1")).unwrap();
        assert_eq!(cert.status_of("reducible"), Some(Status::Fails));
        assert!(cert.conclusions.is_empty());
    }

    #[test]
    fn corollary() {
        let c = named("11a1", [0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let cert = evaluate_corollary33(&c, &k, 5, &fine_facts("11a1")).unwrap();
        assert_eq!(cert.outcome(), Outcome::Concluded);
        assert!(cert.observations.iter().any(|o| o.starts_with("E(Q)[5] = Z/5,")));
        let cert = evaluate_corollary33(&c, &k, 5, &FactSet::default()).unwrap();
        assert_eq!(cert.outcome(), Outcome::Inconclusive, "{cert:#?}");
        // (-4|11) = -1
        let inert = QuadField::new(1).unwrap();
        let cert = evaluate_corollary33(&c, &inert, 5, &fine_facts("11a1")).unwrap();
        assert_eq!(cert.status_of("heegner"), Some(Status::Fails));
    }

    #[test]
    fn theorem3_examples() {
        let e1 = named("17a1", [1, -1, 1, -1, -14]);
        let e2 = named("17a2", [1, -1, 1, -6, -4]);
        let k = QuadField::new(2).unwrap();
        let facts = FactSet::new(vec![ExternalFact::new(FactKind::FineMuZero("17a1".into()), "table")]);
        let cert = evaluate_theorem3(&e1, &e2, &k, 11, &facts).unwrap();
        let st: Vec<&str> = cert.conclusions.iter().map(|c| c.statement.as_str()).collect();
        assert_eq!(st.len(), 2);
        assert!(st[1].starts_with("FineMuZero(17a2)"));

        let a = named("201c1", [1, 1, 0, -794, 8289]);
        let b = named("469a1", [1, 0, 1, -80, -275]);
        let k = heegner_family_field(3 * 7 * 67, 1).unwrap();
        assert_eq!(k.d(), 1406);
        let cert = evaluate_theorem3(&a, &b, &k, 5, &FactSet::default()).unwrap();
        assert_eq!(cert.conclusions.len(), 1);
        assert!(cert.conclusions[0].statement.contains("<=>"));

        let x = named("11a1", [0, -1, 1, -10, -20]);
        let cert = evaluate_theorem3(&x, &e1, &QuadField::new(10).unwrap(), 5, &facts).unwrap();
        assert_eq!(cert.status_of("congruent"), Some(Status::Fails));
    }

    #[test]
    fn bad_p() {
        let c = named("11a1", [0, -1, 1, -10, -20]);
        let k = QuadField::new(10).unwrap();
        let none = FactSet::default();
        assert!(matches!(evaluate_corollary33(&c, &k, 9, &none), Err(Error::Domain(_))));
        assert!(matches!(evaluate_theorem2(&c, &k, 17, &none), Err(Error::Capability(_))));
    }
}
