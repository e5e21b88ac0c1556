mod common;

use common::*;
use finemu_core::CurveRecord;
use serde_json::Value;

#[test]
fn exit_codes() {
    assert_eq!(finemu(&["--help"]).code, 0);
    assert_eq!(finemu(&["--version"]).code, 0);
    assert_eq!(finemu(&["frobnicate"]).code, 64);
    assert_eq!(finemu(&["verdict", "thm9", "-a", E11A1, "-d", "1", "-p", "5"]).code, 64);
    // singular
    assert_eq!(finemu(&["analyze", "-a", "0,0,0,0,0", "-d", "1", "-p", "5"]).code, 64);
    // not squarefree
    assert_eq!(finemu(&["analyze", "-a", E11A1, "-d", "4", "-p", "5"]).code, 64);
    // beyond the division polynomial limit
    assert_eq!(finemu(&["analyze", "-a", E11A1, "-d", "1", "-p", "17"]).code, 65);
    assert_eq!(finemu(&["analyze", "-a", E11A1, "-d", "1", "-p", "2"]).code, 64);

    let r = finemu(&["congruent", "--a1", E11A1, "--a2", E17A1, "-p", "5"]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert_eq!(finemu(&["congruent", "-a1", E17A1, "-a2", E17A2, "-p", "11"]).code, 0);

    // irreducible at 11: the reducibility hypothesis fails
    assert_eq!(finemu(&["verdict", "thm1", "-a", E17A1, "-d", "2", "-p", "11"]).code, 2);
    // 11 is inert in Q(i) and lies in Sigma
    assert_eq!(finemu(&["verdict", "thm1", "-a", E11A1, "-d", "1", "-p", "5"]).code, 2);
    assert_eq!(finemu(&["verdict", "cor33", "-a", E11A1, "-d", "10", "-p", "5"]).code, 3);
    assert_eq!(finemu(&["analyze", "-a", E11A1, "-d", "10", "-p", "5"]).code, 0);
}

#[test]
fn json_is_deterministic() {
    let args = ["verdict", "thm2", "-a", E11A1, "-d", "10", "-p", "5", "--json"];
    let a = finemu(&args);
    let b = finemu(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = a.json();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["command"], "verdict thm2");
    assert_eq!(v["theorem"], "thm2");

    let args = ["analyze", "-a", E11A1, "-d", "10", "-p", "5", "--json"];
    assert_eq!(finemu(&args).stdout, finemu(&args).stdout);
}

#[test]
fn record_round_trip() {
    let rec = CurveRecord::from_json(
        r#"{"label": "11a1", "ainvs": [0, -1, 1, -10, -20],
            "knownFacts": [{"kind": "FineMuZero", "curve": "11a1", "provenance": "t"}]}"#,
    )
    .unwrap();
    let text = serde_json::to_string(&rec).unwrap();
    let path = scratch("record_11a1.json", &text);
    let r = finemu(&["analyze", "--record", &path, "-d", "10", "-p", "5", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    let echoed = &v["input"]["curves"][0];
    assert_eq!(echoed, &serde_json::from_str::<Value>(&text).unwrap());
    let back = CurveRecord::from_json(&echoed.to_string()).unwrap();
    assert_eq!(back, rec);
    assert_eq!(v["analysis"]["conductor"], "11");
    assert_eq!(v["analysis"]["label"], "11a1");
}

#[test]
fn record_facts_are_used() {
    let rec = r#"{"label": "11a1", "ainvs": [0, -1, 1, -10, -20], "knownFacts": [
        {"kind": "FineMuZero", "curve": "11a1", "provenance": "t"},
        {"kind": "CotorsionAssumed", "curve": "11a1", "provenance": "t"}]}"#;
    let path = scratch("record_11a1_facts.json", rec);
    let r = finemu(&["verdict", "cor33", "--record", &path, "-d", "10", "-p", "5"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("fact FineMuZero(11a1) [t]"));
}

#[test]
fn facts_file() {
    let facts = scratch("cli_facts_11a1.json", FACTS_11A1);
    let args = ["verdict", "cor33", "-a", E11A1, "--label", "11a1", "-d", "10", "-p", "5"];
    let mut with = args.to_vec();
    with.extend(["--facts", &facts, "--json"]);
    let v = finemu(&with).json();
    assert_eq!(v["outcome"], "Concluded");
    assert_eq!(v["input"]["facts"].as_array().unwrap().len(), 2);
    let trail: Vec<&str> = v["conclusions"][0]["trail"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert!(trail.iter().any(|t| t.contains("[assumed for the example]")));

    // facts may name the curve by its a-invariants
    let by_ainvs = scratch(
        "cli_facts_ainvs.json",
        &FACTS_11A1.replace("\"11a1\"", "\"[0,-1,1,-10,-20]\""),
    );
    let mut with = args.to_vec();
    with.extend(["--facts", &by_ainvs]);
    assert_eq!(finemu(&with).code, 0);

    let bad = scratch("cli_facts_bad.json", r#"[{"kind": "MuYZero", "index": 7}]"#);
    let mut with = args.to_vec();
    with.extend(["--facts", &bad]);
    assert_eq!(finemu(&with).code, 64);

    let mut with = args.to_vec();
    with.extend(["--facts", "/nonexistent/facts.json"]);
    assert_eq!(finemu(&with).code, 64);
}

#[test]
fn classical_mu_gate() {
    // h_K = 2 for d = 10, prime to p = 5
    let args = ["verdict", "thm1", "-a", E11A1, "-d", "10", "-p", "5"];
    let base = finemu(&args);
    assert_eq!(base.code, 3, "{}", base.stdout);
    let mut ext = args.to_vec();
    ext.push("--extended-classical-mu");
    assert_eq!(finemu(&ext).code, 0);
}

#[test]
fn iwasawa_check() {
    let one = scratch("presentation_one.json", r#"{"r": 1, "mu": [2], "f": [[3, 1]]}"#);
    let r = finemu(&["iwasawa-check", &one, "-p", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("corank = 2"));
    assert!(r.stdout.contains("1/1 agree"));

    // no prime given anywhere
    assert_eq!(finemu(&["iwasawa-check", &one]).code, 64);
    // not distinguished at 3
    let bad = scratch("presentation_bad.json", r#"{"r": 0, "mu": [], "f": [[1, 1]]}"#);
    assert_eq!(finemu(&["iwasawa-check", &bad, "-p", "3"]).code, 64);
    // precision below the guard
    let r = finemu(&["iwasawa-check", &one, "-p", "3", "--prec-a", "1"]);
    assert_eq!(r.code, 65, "{}", r.stderr);

    let fx = fixture("presentations_500.json");
    let v = finemu(&["iwasawa-check", &fx, "--json"]).json();
    assert_eq!(v["total"], 500);
    assert_eq!(v["passed"], 500);
}

#[test]
fn text_output_shapes() {
    let r = finemu(&["analyze", "-a", E11A1, "--label", "11a1", "-d", "10", "-p", "5"]);
    assert!(r.stdout.contains("11a1"));
    assert!(r.stdout.contains("Z/5"));
    let r = finemu(&["congruent", "--a1", E11A1, "--a2", E17A1, "-p", "5"]);
    assert!(r.stdout.contains("NotCongruent"));
}
