//! Statistical checks on the tagging Monte Carlo.

use kaonbell::bell::mixing_from_delta;
use kaonbell::tagging_mc::{required_events, sample_kl_tags, McConfig};

const DELTA: f64 = 3.27e-3;

fn run(n: u64, seed: u64) -> kaonbell::tagging_mc::McResult {
    let mix = mixing_from_delta(DELTA, 0.0).unwrap();
    sample_kl_tags(&McConfig::new(n, seed, mix).unwrap())
}

#[test]
fn same_seed_same_counts() {
    for seed in [0, 1, 42, u64::MAX] {
        assert_eq!(run(3_000_001, seed), run(3_000_001, seed));
    }
    assert_ne!(run(100_000, 1), run(100_000, 2));
}

#[test]
fn two_sigma_coverage_at_one_million() {
    let covered = (0..20)
        .map(|seed| run(1_000_000, seed))
        .filter(|r| (r.delta_hat - DELTA).abs() <= 2.0 * r.std_error)
        .count();
    assert!(covered >= 17, "coverage {covered}/20");
}

#[test]
fn mean_estimate_is_unbiased() {
    let n = 100_000;
    let results: Vec<_> = (0..100).map(|seed| run(n, 1_000 + seed)).collect();
    let mean = results.iter().map(|r| r.delta_hat).sum::<f64>() / 100.0;
    let pooled = ((1.0 - DELTA * DELTA) / (n as f64 * 100.0)).sqrt();
    assert!(
        (mean - DELTA).abs() <= 3.0 * pooled,
        "mean {mean}, pooled se {pooled}"
    );
}

#[test]
fn required_events_examples() {
    assert_eq!(required_events(0.5, 1.0).unwrap(), 3);
    assert_eq!(required_events(0.5, 1e-9).unwrap(), 1);
    let n = required_events(DELTA, 5.0).unwrap();
    assert!((2_337_000..2_339_000).contains(&n), "{n}");
    let se = |n: u64| ((1.0 - DELTA * DELTA) / n as f64).sqrt();
    assert!(DELTA >= 5.0 * se(n) && DELTA < 5.0 * se(n - 1));
}
