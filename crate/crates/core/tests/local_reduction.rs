//! Tate's algorithm against a frozen table of local data (248 curves,
//! including non-minimal and wild models).

use finemu_core::ellcurve::{ap as ap_good, tate_local_data, Kodaira, ReductionType};
use finemu_core::Curve;
use num_bigint::BigInt;
use serde_json::Value;

// PARI-style integer codes for Kodaira symbols.
fn code(k: Kodaira) -> i64 {
    match k {
        Kodaira::I0 => 1,
        Kodaira::II => 2,
        Kodaira::III => 3,
        Kodaira::IV => 4,
        Kodaira::In(n) => 4 + n as i64,
        Kodaira::I0Star => -1,
        Kodaira::InStar(n) => -4 - n as i64,
        Kodaira::IIStar => -2,
        Kodaira::IIIStar => -3,
        Kodaira::IVStar => -4,
    }
}

fn ainvs(v: &Value) -> [BigInt; 5] {
    let a: Vec<BigInt> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|x| BigInt::from(x.as_i64().unwrap()))
        .collect();
    a.try_into().unwrap()
}

#[test]
fn local_data_matches_table() {
    let raw = include_str!("fixtures/local_reduction.json");
    let table: Vec<Value> = serde_json::from_str(raw).unwrap();
    assert!(table.len() > 200);
    for row in &table {
        let e = Curve::new(ainvs(&row["ainvs"])).unwrap();
        let min = Curve::new(ainvs(&row["minimal"])).unwrap();
        assert_eq!(e.minimal_model(), min, "minimal model of {e}");
        assert_eq!(
            e.conductor().to_string(),
            row["conductor"].as_str().unwrap(),
            "conductor of {e}"
        );
        for loc in row["local"].as_array().unwrap() {
            let p = loc["p"].as_u64().unwrap();
            let ld = tate_local_data(&e, p);
            let label = format!("{e} at {p}");
            assert_eq!(ld.conductor_exponent as i64, loc["f"].as_i64().unwrap(), "{label}");
            assert_eq!(code(ld.kodaira), loc["kodaira"].as_i64().unwrap(), "{label}");
            let ap = loc["ap"].as_i64().unwrap();
            let expected = match ap {
                1 if ld.conductor_exponent == 1 => ReductionType::SplitMult,
                -1 if ld.conductor_exponent == 1 => ReductionType::NonSplitMult,
                _ if ld.conductor_exponent == 0 => ReductionType::Good,
                _ => ReductionType::Additive,
            };
            assert_eq!(ld.reduction, expected, "{label}");
            match ld.bad_trace() {
                Some(t) => assert_eq!(t, ap, "{label}"),
                None => assert_eq!(ap_good(&e, p).unwrap(), ap, "{label}"),
            }
        }
    }
}
