//! Writes the random presentation fixture used by the CLI tests.
//!
//! cargo run -p finemu-core --example gen_presentations > crates/cli/tests/fixtures/presentations_500.json

use finemu_core::iwasawa::{
    inferred_rank, mod_p_corank, verify_lemma27_oracle, LambdaPresentation, Precision,
    PresentationJson,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 500;
const SEED: u64 = 0x5eed_2027;

fn random_case(rng: &mut ChaCha8Rng) -> PresentationJson {
    let p = [3u64, 5, 7][rng.random_range(0..3)];
    let pi = p as i64;
    let r = rng.random_range(0..=3);
    let mu = (0..rng.random_range(0..=3)).map(|_| rng.random_range(1..=3)).collect();
    let f = (0..rng.random_range(0..=3))
        .map(|_| {
            let deg = rng.random_range(1..=4);
            let mut c: Vec<i64> = (0..deg).map(|_| pi * rng.random_range(-pi..=pi)).collect();
            c.push(1);
            c
        })
        .collect();
    PresentationJson {
        p: Some(p),
        r,
        mu,
        f,
    }
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cases: Vec<PresentationJson> = (0..CASES).map(|_| random_case(&mut rng)).collect();
    for (i, c) in cases.iter().enumerate() {
        let m = LambdaPresentation::from_json(c.p.unwrap(), c).expect("valid presentation");
        let prec = Precision::minimal_for(&m);
        let expect = c.r as usize + c.mu.len();
        assert_eq!(mod_p_corank(&m).rank, expect, "case {i}");
        assert_eq!(inferred_rank(&m, prec).unwrap(), expect, "case {i}");
        assert!(verify_lemma27_oracle(&m, prec).unwrap(), "case {i}");
    }
    println!("{}", serde_json::to_string(&cases).unwrap());
}
