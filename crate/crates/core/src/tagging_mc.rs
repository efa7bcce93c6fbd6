//! Monte Carlo estimate of the leptonic asymmetry from semileptonic tags.
//!
//! Under the ΔS = ΔQ rule an l⁺ tags a K⁰ and an l⁻ a K̄⁰, so a K_L decay
//! yields l⁺ with probability `|p|²/N²`. Events are drawn as those tags
//! directly; electron and muon channels are pooled.
//!
//! Trials are split into fixed-size blocks. Block `i` draws from a ChaCha8
//! generator seeded with `seed` on stream `i`, so the counts depend only on
//! `(seed, n_events, mix)` and not on how many threads run the blocks.

use rand::distr::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, invalid, Result};
use crate::quasispin::MixingParameters;

/// Generator identification recorded alongside results.
pub const GENERATOR: &str =
    "ChaCha8Rng (rand_chacha 0.9), seed_from_u64(seed), stream = block index";

/// Events per generator stream.
pub const BLOCK_EVENTS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig {
    n_events: u64,
    seed: u64,
    mix: MixingParameters,
}

impl McConfig {
    pub fn new(n_events: u64, seed: u64, mix: MixingParameters) -> Result<Self> {
        if n_events == 0 {
            return Err(invalid("n_events must be at least 1"));
        }
        Ok(Self {
            n_events,
            seed,
            mix,
        })
    }

    pub fn n_events(&self) -> u64 {
        self.n_events
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn mix(&self) -> &MixingParameters {
        &self.mix
    }

    /// `P(l⁺) = |p|²/N²`.
    pub fn plus_probability(&self) -> f64 {
        self.mix.p().norm_sqr() / self.mix.norm_sq()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McResult {
    pub n_plus: u64,
    pub n_minus: u64,
    /// `(n₊ - n₋)/(n₊ + n₋)`
    pub delta_hat: f64,
    /// `√((1 - δ̂²)/n)`
    pub std_error: f64,
}

impl McResult {
    pub fn from_counts(n_plus: u64, n_minus: u64) -> Self {
        let n = (n_plus + n_minus) as f64;
        let delta_hat = (n_plus as f64 - n_minus as f64) / n;
        let std_error = ((1.0 - delta_hat * delta_hat).max(0.0) / n).sqrt();
        Self {
            n_plus,
            n_minus,
            delta_hat,
            std_error,
        }
    }

    pub fn n_events(&self) -> u64 {
        self.n_plus + self.n_minus
    }
}

/// Draws `n_events` K_L tags and estimates δ.
pub fn sample_kl_tags(cfg: &McConfig) -> McResult {
    let plus = Bernoulli::new(cfg.plus_probability()).expect("probability in [0, 1]");
    let blocks = cfg.n_events.div_ceil(BLOCK_EVENTS);
    let n_plus: u64 = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(block);
            let start = block * BLOCK_EVENTS;
            let len = BLOCK_EVENTS.min(cfg.n_events - start);
            (0..len).filter(|_| plus.sample(&mut rng)).count() as u64
        })
        .sum();
    McResult::from_counts(n_plus, cfg.n_events - n_plus)
}

/// Smallest `n` with `δ√n ≥ n_σ√(1 - δ²)`, i.e. the sample size at which an
/// asymmetry `delta` is `n_sigma` standard errors from zero.
pub fn required_events(delta: f64, n_sigma: f64) -> Result<u64> {
    ensure_finite("delta", delta)?;
    ensure_finite("n_sigma", n_sigma)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(invalid(format!("delta must lie in (0, 1), got {delta}")));
    }
    if n_sigma <= 0.0 {
        return Err(invalid(format!("n_sigma must be positive, got {n_sigma}")));
    }
    let spread = (1.0 - delta * delta).sqrt();
    let enough = |n: u64| delta * (n as f64).sqrt() >= n_sigma * spread;
    let guess = (n_sigma * n_sigma * (1.0 - delta * delta) / (delta * delta)).ceil();
    let mut n = (guess as u64).max(1);
    // The ceiling can be off by one either way after rounding.
    while n > 1 && enough(n - 1) {
        n -= 1;
    }
    while !enough(n) {
        n += 1;
    }
    Ok(n)
}
