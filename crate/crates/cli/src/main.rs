use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use finemu_core::analysis::{analyze, Analysis};
use finemu_core::congruence::{is_p_congruent, CongruenceStatus, CongruenceVerdict};
use finemu_core::iwasawa::{
    inferred_rank, mod_p_corank, mu_invariant, mu_multiplicity, verify_lemma27_oracle,
    LambdaPresentation, Precision, PresentationJson,
};
use finemu_core::verdict::{
    evaluate_corollary33, evaluate_theorem1, evaluate_theorem2, evaluate_theorem3, parse_facts,
    ClassicalMuMode, Outcome, TheoremTag, VerdictConfig,
};
use finemu_core::{CurveRecord, Error, ExternalFact, FactSet, HypothesisCertificate, QuadField};

const SCHEMA_VERSION: u32 = 1;
const TOOL_VERSION: &str = concat!("finemu ", env!("CARGO_PKG_VERSION"));

const EXIT_NOT_CONGRUENT: u8 = 1;
const EXIT_FAILS: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_CAPABILITY: u8 = 65;

#[derive(Parser)]
#[command(name = "finemu", version, about = "Hypothesis checks for anticyclotomic fine mu-invariants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the full diagnostic for E over K = Q(sqrt(-d)) at p.
    Analyze {
        #[command(flatten)]
        curve: OneCurve,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the hypotheses of one of thm1, thm2, cor33, thm3.
    Verdict {
        theorem: String,
        #[command(flatten)]
        curve: OneCurve,
        #[command(flatten)]
        pair: TwoCurves,
        #[command(flatten)]
        field: FieldArgs,
        /// JSON array of external facts.
        #[arg(long)]
        facts: Option<String>,
        /// Allow the classical mu-vanishing rule whenever p does not divide h_K.
        #[arg(long)]
        extended_classical_mu: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether E1[p] and E2[p] have isomorphic semisimplifications.
    Congruent {
        #[command(flatten)]
        pair: TwoCurves,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check mod-p corank r + s of presentations against the truncated-ring
    /// oracle.
    IwasawaCheck {
        /// A presentation object or an array of them.
        file: String,
        /// Prime for presentations that do not carry their own "p".
        #[arg(short, long)]
        p: Option<u64>,
        /// Coefficients are taken modulo p^a.
        #[arg(long = "prec-a")]
        prec_a: Option<u32>,
        /// Power series are truncated modulo T^n.
        #[arg(long = "prec-n")]
        prec_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct OneCurve {
    /// a-invariants a1,a2,a3,a4,a6
    #[arg(short = 'a', allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long)]
    label: Option<String>,
    /// Curve record JSON file, in place of -a.
    #[arg(long)]
    record: Option<String>,
}

#[derive(Args)]
struct TwoCurves {
    #[arg(long, allow_hyphen_values = true)]
    a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a2: Option<String>,
    #[arg(long)]
    label1: Option<String>,
    #[arg(long)]
    label2: Option<String>,
    #[arg(long)]
    record1: Option<String>,
    #[arg(long)]
    record2: Option<String>,
}

#[derive(Args)]
struct FieldArgs {
    /// K = Q(sqrt(-d)) with d positive and squarefree.
    #[arg(short = 'd')]
    d: i64,
    #[arg(short = 'p')]
    p: u64,
}

/// Reasons to stop, each with its exit code.
enum Fail {
    Usage(String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Fail> {
    Err(Fail::Usage(msg.into()))
}

fn parse_ainvs(s: &str) -> Result<[BigInt; 5], Fail> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Result<Vec<BigInt>, _> = inner.split(',').map(|x| x.trim().parse()).collect();
    match parts.ok().and_then(|v| <[BigInt; 5]>::try_from(v).ok()) {
        Some(a) => Ok(a),
        None => usage(format!("expected five comma-separated integers, got {s:?}")),
    }
}

fn read(path: &str) -> Result<String, Fail> {
    fs::read_to_string(path).or_else(|e| usage(format!("cannot read {path}: {e}")))
}

fn load_curve(a: Option<&str>, label: Option<&str>, record: Option<&str>, flag: &str) -> Result<CurveRecord, Fail> {
    let rec = match (a, record) {
        (Some(_), Some(_)) => return usage(format!("give either {flag} or a record file, not both")),
        (None, None) => return usage(format!("missing curve: {flag} or a record file")),
        (Some(a), None) => {
            let ainvs = parse_ainvs(a)?;
            let label = label.map_or_else(
                || format!("[{}]", ainvs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
                str::to_string,
            );
            CurveRecord::new(label, ainvs)
        }
        (None, Some(path)) => {
            let mut r = CurveRecord::from_json(&read(path)?)?;
            if let Some(l) = label {
                r.label = l.to_string();
            }
            r
        }
    };
    rec.curve()?;
    Ok(rec)
}

fn one(c: &OneCurve) -> Result<CurveRecord, Fail> {
    load_curve(c.a.as_deref(), c.label.as_deref(), c.record.as_deref(), "-a")
}

fn two(c: &TwoCurves) -> Result<(CurveRecord, CurveRecord), Fail> {
    let r1 = load_curve(c.a1.as_deref(), c.label1.as_deref(), c.record1.as_deref(), "--a1")?;
    let r2 = load_curve(c.a2.as_deref(), c.label2.as_deref(), c.record2.as_deref(), "--a2")?;
    Ok((r1, r2))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Input {
    curves: Vec<CurveRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<i64>,
    p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    facts: Option<Vec<ExternalFact>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extended_classical_mu: Option<bool>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Envelope<I: Serialize, T: Serialize> {
    schema_version: u32,
    tool_version: &'static str,
    command: String,
    input: I,
    #[serde(flatten)]
    body: T,
}

fn emit<I: Serialize, T: Serialize>(command: &str, input: I, body: T) -> String {
    let env = Envelope {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        command: command.to_string(),
        input,
        body,
    };
    serde_json::to_string_pretty(&env).expect("serializable") + "\n"
}

fn field(d: i64) -> Result<QuadField, Fail> {
    QuadField::new(d).map_err(|e| Fail::Usage(e.to_string()))
}

fn render_analysis(a: &Analysis) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("curve {} minimal model {} conductor {}", a.label, a.minimal_model, a.conductor));
    line(format!("K = Q(sqrt(-{})) disc {} class number {}", a.d, a.disc, a.class_number));
    line(format!("p = {} ({:?} in K)", a.p, a.p_splitting));
    let s: Vec<String> = a.s.iter().map(|l| l.to_string()).collect();
    line(format!("S = {{{}}}", s.join(", ")));
    line("reduction table:".into());
    for r in &a.local {
        let ok = &r.over_k;
        line(format!(
            "  l = {}: {:?} {} f = {} v(disc) = {} | over K: {:?}, {:?} {} f = {} | K^ac decomposition {:?} | rhobar exponent {}",
            r.prime,
            r.reduction,
            r.kodaira,
            r.conductor_exponent,
            r.min_disc_valuation,
            ok.splitting,
            ok.reduction,
            ok.kodaira.as_deref().unwrap_or("?"),
            ok.conductor_exponent.map_or("?".into(), |f| f.to_string()),
            r.decomposition_in_kac,
            match r.residual_conductor_exponent {
                _ if r.prime == a.p => "-".to_string(),
                Some(f) => f.to_string(),
                None => "?".to_string(),
            },
        ));
    }
    line(format!("E(Q)[{}] = {}", a.p, a.torsion_q));
    line(format!("E(K)[{}] = {}", a.p, a.torsion_k));
    let res = &a.residual;
    match res.shape {
        None => line("rhobar: Irreducible".into()),
        Some(sh) => line(format!("rhobar: Reducible/{sh:?}")),
    }
    for (k, c) in res.line_kernels.iter().zip(&res.line_characters) {
        let c = c.as_ref().map_or("undetermined".into(), |c| c.label());
        line(format!("  stable line {k}: character {c}"));
    }
    let lab = |c: &Option<finemu_core::galrep::ModPCharacter>| c.as_ref().map_or("-".to_string(), |c| c.label());
    line(format!("phi1 = {}, phi2 = {}", lab(&res.phi1), lab(&res.phi2)));
    let set = |ps: &finemu_core::galrep::PrimeSet| {
        let v: Vec<String> = ps
            .entries
            .iter()
            .map(|e| format!("{} ({:?})", e.prime.residue_char, e.membership))
            .collect();
        format!("{{{}}}", v.join(", "))
    };
    line(format!("Sigma = {}", set(&a.sigma)));
    if let Some(s2) = &a.sigma_phi2 {
        line(format!("Sigma(phi2) = {}", set(s2)));
    }
    if let Some(h) = a.hida_rubin {
        line(format!("Hida-Rubin condition: {h:?}"));
    }
    out
}

fn render_certificate(c: &HypothesisCertificate) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}: {:?}\n", c.theorem, c.outcome()));
    out.push_str("observations:\n");
    for o in &c.observations {
        out.push_str(&format!("  {o}\n"));
    }
    out.push_str("conditions:\n");
    for cond in &c.conditions {
        out.push_str(&format!("  [{:?}] {}\n", cond.status, cond.name));
        for e in &cond.evidence {
            out.push_str(&format!("      {e}\n"));
        }
    }
    out.push_str("conclusions:\n");
    for k in &c.conclusions {
        out.push_str(&format!("  {} ({})\n", k.statement, k.theorem));
        for t in &k.trail {
            out.push_str(&format!("      {t}\n"));
        }
    }
    out
}

fn outcome_code(c: &HypothesisCertificate) -> u8 {
    match c.outcome() {
        Outcome::Concluded => 0,
        Outcome::ConditionFails => EXIT_FAILS,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckRow {
    index: usize,
    p: u64,
    r: u32,
    s: usize,
    mu: u32,
    lambda: usize,
    mod_p_corank: usize,
    precision_a: u32,
    precision_n: usize,
    inferred_rank: usize,
    oracle_agrees: bool,
}

fn run(cli: Cli) -> Result<(String, u8), Fail> {
    match cli.cmd {
        Cmd::Analyze { curve, field: f, json } => {
            let rec = one(&curve)?;
            let k = field(f.d)?;
            let a = analyze(&rec.named()?, &k, f.p)?;
            let text = if json {
                let input = Input {
                    curves: vec![rec],
                    d: Some(f.d),
                    p: f.p,
                    facts: None,
                    extended_classical_mu: None,
                };
                emit("analyze", input, serde_json::json!({ "analysis": a }))
            } else {
                render_analysis(&a)
            };
            Ok((text, 0))
        }
        Cmd::Verdict {
            theorem,
            curve,
            pair,
            field: f,
            facts,
            extended_classical_mu,
            json,
        } => {
            let Some(tag) = TheoremTag::parse(&theorem) else {
                return usage(format!("unknown theorem {theorem:?}; expected thm1, thm2, cor33 or thm3"));
            };
            let k = field(f.d)?;
            let mut all: Vec<ExternalFact> = match &facts {
                Some(path) => parse_facts(&read(path)?)?,
                None => Vec::new(),
            };
            let curves = if tag == TheoremTag::Theorem3 {
                let (a, b) = two(&pair)?;
                vec![a, b]
            } else {
                vec![one(&curve)?]
            };
            for c in &curves {
                all.extend(c.known_facts.iter().cloned());
            }
            let fs = FactSet::new(all);
            let cfg = VerdictConfig {
                classical_mu: if extended_classical_mu {
                    ClassicalMuMode::PrimeToP
                } else {
                    ClassicalMuMode::ClassNumberOne
                },
            };
            let named: Vec<_> = curves.iter().map(|c| c.named()).collect::<Result<_, _>>()?;
            let cert = match tag {
                TheoremTag::Theorem1 => evaluate_theorem1(&named[0], &k, f.p, &fs, &cfg)?,
                TheoremTag::Theorem2 => evaluate_theorem2(&named[0], &k, f.p, &fs)?,
                TheoremTag::Corollary33 => evaluate_corollary33(&named[0], &k, f.p, &fs)?,
                TheoremTag::Theorem3 => evaluate_theorem3(&named[0], &named[1], &k, f.p, &fs)?,
            };
            let code = outcome_code(&cert);
            let text = if json {
                let input = Input {
                    curves,
                    d: Some(f.d),
                    p: f.p,
                    facts: Some(fs.iter().cloned().collect()),
                    extended_classical_mu: Some(extended_classical_mu),
                };
                #[derive(Serialize)]
                struct Body<'a> {
                    #[serde(flatten)]
                    cert: &'a HypothesisCertificate,
                    outcome: Outcome,
                }
                emit(
                    &format!("verdict {tag}"),
                    input,
                    Body {
                        cert: &cert,
                        outcome: cert.outcome(),
                    },
                )
            } else {
                render_certificate(&cert)
            };
            Ok((text, code))
        }
        Cmd::Congruent { pair, p, json } => {
            let (a, b) = two(&pair)?;
            let v: CongruenceVerdict = is_p_congruent(&a.curve()?, &b.curve()?, p)?;
            let code = match v.status {
                CongruenceStatus::Congruent => 0,
                CongruenceStatus::NotCongruent => EXIT_NOT_CONGRUENT,
                CongruenceStatus::Inconclusive => EXIT_INCONCLUSIVE,
            };
            let text = if json {
                let input = Input {
                    curves: vec![a, b],
                    d: None,
                    p,
                    facts: None,
                    extended_classical_mu: None,
                };
                emit("congruent", input, serde_json::json!({ "congruence": v }))
            } else {
                let mut s = format!("{:?} bound {} checked {}", v.status, v.bound_used, v.checked_primes);
                if let Some(w) = v.witness {
                    s.push_str(&format!(" witness {w}"));
                }
                if !v.skipped.is_empty() {
                    s.push_str(&format!(" skipped {:?}", v.skipped));
                }
                if let Some(c) = &v.caveat {
                    s.push_str(&format!(" ({c})"));
                }
                s + "\n"
            };
            Ok((text, code))
        }
        Cmd::IwasawaCheck {
            file,
            p,
            prec_a,
            prec_n,
            json,
        } => {
            let text = read(&file)?;
            let value: serde_json::Value =
                serde_json::from_str(&text).or_else(|e| usage(format!("malformed presentation file: {e}")))?;
            let items = match value {
                serde_json::Value::Array(v) => v,
                other => vec![other],
            };
            let mut rows = Vec::new();
            for (index, item) in items.into_iter().enumerate() {
                let pj: PresentationJson = serde_json::from_value(item)
                    .or_else(|e| usage(format!("presentation {index}: {e}")))?;
                let Some(pp) = pj.p.or(p) else {
                    return usage(format!("presentation {index} has no p and -p was not given"));
                };
                let m = LambdaPresentation::from_json(pp, &pj)?;
                let min = Precision::minimal_for(&m);
                let prec = Precision {
                    a: prec_a.unwrap_or(min.a),
                    n: prec_n.unwrap_or(min.n),
                };
                let agrees = verify_lemma27_oracle(&m, prec)?;
                rows.push(CheckRow {
                    index,
                    p: pp,
                    r: m.r,
                    s: mu_multiplicity(&m),
                    mu: mu_invariant(&m),
                    lambda: m.lambda(),
                    mod_p_corank: mod_p_corank(&m).rank,
                    precision_a: prec.a,
                    precision_n: prec.n,
                    inferred_rank: inferred_rank(&m, prec)?,
                    oracle_agrees: agrees,
                });
            }
            let passed = rows.iter().filter(|r| r.oracle_agrees).count();
            let code = if passed == rows.len() { 0 } else { EXIT_FAILS };
            let out = if json {
                #[derive(Serialize)]
                struct CheckInput {
                    file: String,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    p: Option<u64>,
                }
                let input = CheckInput {
                    file: file.clone(),
                    p,
                };
                emit(
                    "iwasawa-check",
                    input,
                    serde_json::json!({ "cases": rows, "passed": passed, "total": rows.len() }),
                )
            } else {
                let mut s = String::new();
                for r in &rows {
                    s.push_str(&format!(
                        "#{} p = {} r = {} s = {} mu = {} lambda = {} corank = {} oracle rank = {} (a = {}, N = {}) {}\n",
                        r.index,
                        r.p,
                        r.r,
                        r.s,
                        r.mu,
                        r.lambda,
                        r.mod_p_corank,
                        r.inferred_rank,
                        r.precision_a,
                        r.precision_n,
                        if r.oracle_agrees { "agree" } else { "DISAGREE" }
                    ));
                }
                s.push_str(&format!("{passed}/{} agree\n", rows.len()));
                s
            };
            Ok((out, code))
        }
    }
}

/// Accept -a1 and -a2 as spellings of --a1 and --a2.
fn normalize_args(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| match a.as_str() {
        "-a1" => "--a1".to_string(),
        "-a2" => "--a2".to_string(),
        _ => a,
    })
    .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Fail::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capability(_) => EXIT_CAPABILITY,
                Error::Domain(_) | Error::Precondition(_) => EXIT_USAGE,
            })
        }
    }
}
