//! Uchiyama's Bell inequality for the kaon singlet at t = 0,
//!
//! ```text
//! P(K_S, K̄⁰) ≤ P(K_S, K₁⁰) + P(K₁⁰, K̄⁰),
//! ```
//!
//! and the bounds it implies once the CP phase `alpha` is optimized.
//!
//! With the quantum probabilities the margin `lhs - rhs` equals
//! `(Re{e^{iα} p q*} - |q|²)/(2N²)`. Choosing `α = -arg(p q*)` maximizes it to
//! `(|p||q| - |q|²)/(2N²)`, so the inequality holds iff `|p| ≤ |q|`, i.e.
//! `δ ≤ 0`. Replacing K̄⁰ by K⁰ gives `|q| ≤ |p|`; both together require
//! `|p| = |q|`, strict CP conservation in mixing.
//!
//! The K_L/K₂ form of the inequality is obtained by passing those states to
//! [`assess_inequality`]; it yields the same margin.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::entangle::{singlet_strangeness, EntangledPair};
use crate::error::{ensure_finite, invalid, Result};
use crate::quasispin::{
    cis, cp_eigenstates, mass_eigenstates, strangeness_states, KaonState, MixingParameters,
    ALGEBRA_TOL,
};

/// Margins above this are counted as violations.
pub const VIOLATION_TOL: f64 = ALGEBRA_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellAssessment {
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub margin: f64,
    pub violated: bool,
    pub alpha_used: f64,
}

impl BellAssessment {
    fn new(lhs: f64, rhs: f64, alpha_used: f64) -> Self {
        let margin = lhs - rhs;
        Self {
            lhs,
            rhs,
            margin,
            violated: margin > VIOLATION_TOL,
            alpha_used,
        }
    }
}

/// Evaluates `P(a, c) ≤ P(a, b) + P(b, c)` on `pair`.
pub fn assess_inequality(
    pair: &EntangledPair,
    a: &KaonState,
    b: &KaonState,
    c: &KaonState,
    alpha_used: f64,
) -> BellAssessment {
    let lhs = pair.probability(a, c);
    let rhs = pair.probability(a, b) + pair.probability(b, c);
    BellAssessment::new(lhs, rhs, alpha_used)
}

/// Uchiyama's inequality with K₁ built from `alpha`. With `swap_to_k0` the
/// flavour state K̄⁰ is replaced by K⁰.
pub fn uchiyama_assessment(
    mix: &MixingParameters,
    alpha: f64,
    swap_to_k0: bool,
) -> Result<BellAssessment> {
    let (ks, _) = mass_eigenstates(mix);
    let (k1, _) = cp_eigenstates(alpha)?;
    let (k0, k0bar) = strangeness_states();
    let flavour = if swap_to_k0 { k0 } else { k0bar };
    Ok(assess_inequality(
        &singlet_strangeness(),
        &ks,
        &k1,
        &flavour,
        alpha,
    ))
}

/// `Re{e^{iα} p q*} - |q|²`, the Uchiyama margin times `2N²`.
pub fn reduced_inequality_margin(mix: &MixingParameters, alpha: f64) -> f64 {
    (cis(alpha) * mix.p() * mix.q().conj()).re - mix.q().norm_sqr()
}

/// The CP phase that compensates the relative phase of the weights,
/// `α* = -arg(p q*)`, which maximizes `Re{e^{iα} p q*}` to `|p||q|`.
pub fn optimal_alpha(mix: &MixingParameters) -> f64 {
    -mix.chi()
}

/// Outcome of the two phase-optimized inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrtBoundCheck {
    /// The K̄⁰ form holds, i.e. `|p| ≤ |q|`.
    pub p_le_q: bool,
    /// The K⁰ form holds, i.e. `|q| ≤ |p|`.
    pub q_le_p: bool,
    /// Both forms hold at once, which forces `|p| = |q|`: local realism is
    /// then only compatible with CP conservation in mixing.
    pub equality_required: bool,
}

/// Runs both forms of the inequality at the optimal CP phase.
pub fn lrt_bound_check(mix: &MixingParameters) -> LrtBoundCheck {
    let alpha = optimal_alpha(mix);
    // alpha comes from arg() and is always finite.
    let bar = uchiyama_assessment(mix, alpha, false).expect("finite alpha");
    let k0 = uchiyama_assessment(mix, alpha, true).expect("finite alpha");
    let p_le_q = !bar.violated;
    let q_le_p = !k0.violated;
    LrtBoundCheck {
        p_le_q,
        q_le_p,
        equality_required: p_le_q && q_le_p,
    }
}

/// `δ = (|p|² - |q|²)/(|p|² + |q|²)`: the probability of finding K⁰ minus that
/// of finding K̄⁰ in K_L, which the semileptonic charge asymmetry measures.
pub fn leptonic_asymmetry(mix: &MixingParameters) -> f64 {
    mix.delta()
}

/// A representative mixing with leptonic asymmetry `delta`:
/// `p = √(1+δ)·u`, `q = √(1-δ)·u*` with `u = (1 + i·im_part)/|1 + i·im_part|`.
///
/// The asymmetry does not fix scale or phases; this choice keeps `N² = 2` and
/// gives `χ = 2·atan(im_part)`, matching `p = 1 + ε`, `q = 1 - ε` for purely
/// imaginary `ε = i·im_part` up to normalization.
pub fn mixing_from_delta(delta: f64, im_part: f64) -> Result<MixingParameters> {
    ensure_finite("delta", delta)?;
    ensure_finite("im_part", im_part)?;
    if delta.abs() >= 1.0 {
        return Err(invalid(format!("|delta| must be < 1, got {delta}")));
    }
    let u = Complex64::new(1.0, im_part);
    let u = u / u.norm();
    MixingParameters::new(u * (1.0 + delta).sqrt(), u.conj() * (1.0 - delta).sqrt())
}
