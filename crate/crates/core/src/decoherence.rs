//! Decoherence parameter ζ and the lower bounds local realism puts on it.
//!
//! Scaling the interference term of the singlet by `(1 - ζ)` interpolates
//! between quantum mechanics (ζ = 0) and complete factorization of the pair
//! (ζ = 1). How the three Uchiyama probabilities change depends on the basis
//! in which the factorization happens:
//!
//! | probability    | K_S K_L basis                 | K⁰K̄⁰ basis                      |
//! |----------------|-------------------------------|---------------------------------|
//! | P(K₁, K̄⁰)     | `1/4 - ζ(1-η²)/8`             | `1/4`                           |
//! | P(K_S, K̄⁰)    | `|p|²/(2N²) - ζ(1-η²)/4`      | `|p|²/(2N²)`                    |
//! | P(K_S, K₁)     | `QM + ζ(1-η²)²/(8η²)`         | `QM + ζ Re{e^{iα}pq*}/(2N²)`    |
//!
//! Demanding that the inequality holds at the optimal CP phase gives
//!
//! * K_S K_L: `ζ ≥ ((1-δ)/δ)(√(1-δ²) - 1 + δ) ≈ 1 - 3δ/2`
//! * K⁰K̄⁰:  `ζ ≥ 1 - √((1-δ)/(1+δ)) ≈ δ`
//!
//! The bisection in [`zeta_lower_bound_numeric`] recovers both from the
//! probability triple alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bell::{mixing_from_delta, optimal_alpha};
use crate::error::{ensure_finite, invalid, KaonError, Result};
use crate::quasispin::{cis, MixingParameters};

/// Basis in which the pair's interference term is damped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZetaBasis {
    #[serde(rename = "KS_KL")]
    KsKl,
    #[serde(rename = "K0_K0bar")]
    K0K0bar,
}

impl ZetaBasis {
    pub const ALL: [ZetaBasis; 2] = [ZetaBasis::KsKl, ZetaBasis::K0K0bar];
}

impl fmt::Display for ZetaBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZetaBasis::KsKl => "KS_KL",
            ZetaBasis::K0K0bar => "K0_K0bar",
        })
    }
}

impl FromStr for ZetaBasis {
    type Err = KaonError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "ks_kl" | "kskl" => Ok(ZetaBasis::KsKl),
            "k0_k0bar" | "k0k0bar" | "k0" => Ok(ZetaBasis::K0K0bar),
            _ => Err(invalid(format!(
                "unknown basis {s:?} (expected KS_KL or K0_K0bar)"
            ))),
        }
    }
}

/// A basis together with ζ ∈ [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaModel {
    basis: ZetaBasis,
    zeta: f64,
}

impl ZetaModel {
    pub fn new(basis: ZetaBasis, zeta: f64) -> Result<Self> {
        check_zeta(zeta)?;
        Ok(Self { basis, zeta })
    }

    pub fn basis(&self) -> ZetaBasis {
        self.basis
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }
}

fn check_zeta(zeta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&zeta) {
        Ok(())
    } else {
        Err(invalid(format!("zeta must lie in [0, 1], got {zeta}")))
    }
}

/// The three probabilities entering Uchiyama's inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityTriple {
    /// P(K₁, K̄⁰)
    pub k1_k0bar: f64,
    /// P(K_S, K̄⁰)
    pub ks_k0bar: f64,
    /// P(K_S, K₁)
    pub ks_k1: f64,
}

impl ProbabilityTriple {
    /// `P(K_S, K̄⁰) - P(K_S, K₁) - P(K₁, K̄⁰)`; positive means violated.
    pub fn margin(&self) -> f64 {
        self.ks_k0bar - self.ks_k1 - self.k1_k0bar
    }
}

/// Quantum-mechanical triple: `1/4`, `|p|²/(2N²)`, `|p e^{iα} - q|²/(4N²)`.
pub fn qm_probability_triple(mix: &MixingParameters, alpha: f64) -> ProbabilityTriple {
    let n2 = mix.norm_sq();
    ProbabilityTriple {
        k1_k0bar: 0.25,
        ks_k0bar: mix.p().norm_sqr() / (2.0 * n2),
        ks_k1: (mix.p() * cis(alpha) - mix.q()).norm_sqr() / (4.0 * n2),
    }
}

/// Closed-form ζ-modified triple (see the module table).
pub fn zeta_probability_triple(
    mix: &MixingParameters,
    alpha: f64,
    zeta: f64,
    basis: ZetaBasis,
) -> Result<ProbabilityTriple> {
    ensure_finite("alpha", alpha)?;
    check_zeta(zeta)?;
    let qm = qm_probability_triple(mix, alpha);
    Ok(match basis {
        ZetaBasis::KsKl => {
            let eta2 = mix.q().norm_sqr() / mix.p().norm_sqr();
            let d = 1.0 - eta2;
            ProbabilityTriple {
                k1_k0bar: qm.k1_k0bar - zeta * d / 8.0,
                ks_k0bar: qm.ks_k0bar - zeta * d / 4.0,
                ks_k1: qm.ks_k1 + zeta * d * d / (8.0 * eta2),
            }
        }
        ZetaBasis::K0K0bar => {
            let interference = (cis(alpha) * mix.p() * mix.q().conj()).re;
            ProbabilityTriple {
                ks_k1: qm.ks_k1 + zeta * interference / (2.0 * mix.norm_sq()),
                ..qm
            }
        }
    })
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(invalid(format!(
            "delta must lie in (0, 1) for a violated inequality, got {delta}"
        )))
    }
}

/// Closed-form lower bound on ζ.
pub fn zeta_lower_bound_exact(delta: f64, basis: ZetaBasis) -> Result<f64> {
    check_delta(delta)?;
    let root = (1.0 - delta * delta).sqrt();
    Ok(match basis {
        // √(1-δ²) - 1 = -δ²/(√(1-δ²) + 1), avoiding cancellation at small δ.
        ZetaBasis::KsKl => (1.0 - delta) / delta * (delta - delta * delta / (root + 1.0)),
        // 1 - η = (1 - η²)/(1 + η) with 1 - η² = 2δ/(1 + δ).
        ZetaBasis::K0K0bar => {
            let eta = ((1.0 - delta) / (1.0 + delta)).sqrt();
            2.0 * delta / (1.0 + delta) / (1.0 + eta)
        }
    })
}

/// First-order expansion of the bound: `1 - 3δ/2` or `δ`.
pub fn zeta_lower_bound_expansion(delta: f64, basis: ZetaBasis) -> Result<f64> {
    check_delta(delta)?;
    Ok(match basis {
        ZetaBasis::KsKl => 1.0 - 1.5 * delta,
        ZetaBasis::K0K0bar => delta,
    })
}

/// Margin of the ζ-modified inequality at the optimal CP phase.
pub fn zeta_bell_margin(mix: &MixingParameters, zeta: f64, basis: ZetaBasis) -> Result<f64> {
    Ok(zeta_probability_triple(mix, optimal_alpha(mix), zeta, basis)?.margin())
}

/// Interval width at which [`bisect`] stops.
pub const BISECTION_TOL: f64 = 1e-12;

/// Bisection for a sign change of `f` on `[lo, hi]`, assuming `f(lo) > 0 ≥ f(hi)`.
/// Returns the midpoint of the final bracket.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest ζ at which the ζ-modified inequality (optimal α) stops being
/// violated, found by bisecting the margin over ζ ∈ [0, 1].
pub fn zeta_lower_bound_numeric(delta: f64, basis: ZetaBasis) -> Result<f64> {
    check_delta(delta)?;
    let mix = mixing_from_delta(delta, 0.0)?;
    let margin = |zeta: f64| zeta_bell_margin(&mix, zeta, basis).expect("zeta in [0, 1]");
    let (at_zero, at_one) = (margin(0.0), margin(1.0));
    if !(at_zero > 0.0 && at_one <= 0.0) {
        return Err(KaonError::NoRoot { at_zero, at_one });
    }
    Ok(bisect(margin, 0.0, 1.0, BISECTION_TOL))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaBoundResult {
    pub delta_in: f64,
    pub exact_bound: f64,
    pub expansion_bound: f64,
    pub numeric_bound: f64,
    /// Half-width of `[bound(δ-σ), bound(δ+σ)]`.
    pub uncertainty: f64,
    pub basis: ZetaBasis,
}

/// Evaluates all three bounds at `delta` and carries `sigma` through the
/// exact bound by endpoint evaluation (the bounds are monotonic in δ).
pub fn propagate_delta_uncertainty(
    delta: f64,
    sigma: f64,
    basis: ZetaBasis,
) -> Result<ZetaBoundResult> {
    ensure_finite("sigma", sigma)?;
    if sigma < 0.0 {
        return Err(invalid(format!("sigma must be non-negative, got {sigma}")));
    }
    check_delta(delta)?;
    let (lo, hi) = (delta - sigma, delta + sigma);
    if !(lo > 0.0 && hi < 1.0) {
        return Err(invalid(format!(
            "delta ± sigma = [{lo}, {hi}] leaves (0, 1)"
        )));
    }
    let exact_bound = zeta_lower_bound_exact(delta, basis)?;
    let uncertainty = if sigma == 0.0 {
        0.0
    } else {
        0.5 * (zeta_lower_bound_exact(hi, basis)? - zeta_lower_bound_exact(lo, basis)?).abs()
    };
    Ok(ZetaBoundResult {
        delta_in: delta,
        exact_bound,
        expansion_bound: zeta_lower_bound_expansion(delta, basis)?,
        numeric_bound: zeta_lower_bound_numeric(delta, basis)?,
        uncertainty,
        basis,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentComparison {
    pub compatible: bool,
    /// How many upward errors the measurement sits below the bound; 0 when
    /// the measurement is at or above it.
    pub sigmas: f64,
}

/// Measurements more than this many standard deviations below the bound are
/// incompatible.
pub const COMPATIBILITY_SIGMAS: f64 = 2.0;

pub fn compare_with_experiment(
    result: &ZetaBoundResult,
    measured_zeta: f64,
    err_plus: f64,
    err_minus: f64,
) -> Result<ExperimentComparison> {
    ensure_finite("measured_zeta", measured_zeta)?;
    if !(err_plus > 0.0 && err_minus > 0.0) {
        return Err(invalid(format!(
            "experimental errors must be positive, got +{err_plus} -{err_minus}"
        )));
    }
    let bound = result.exact_bound;
    let sigmas = if bound > measured_zeta {
        (bound - measured_zeta) / err_plus
    } else {
        0.0
    };
    Ok(ExperimentComparison {
        compatible: sigmas <= COMPATIBILITY_SIGMAS,
        sigmas,
    })
}
