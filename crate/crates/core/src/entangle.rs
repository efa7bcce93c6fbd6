//! The antisymmetric two-kaon state produced at the Φ resonance, at t = 0.
//!
//! ```text
//! |ψ⟩ = (|K⁰⟩_l|K̄⁰⟩_r - |K̄⁰⟩_l|K⁰⟩_r)/√2
//!     = N_SL/√2 · (|K_S⟩_l|K_L⟩_r - |K_L⟩_l|K_S⟩_r),   N_SL = N²/(2pq)
//! ```
//!
//! Joint probabilities are `|⟨f₁|_l ⊗ ⟨f₂|_r |ψ⟩|²`. The decoherence variant
//! multiplies the interference term between the two product terms by
//! `(1 - ζ)`, which depends on which basis the pair is written in.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::decoherence::{ZetaBasis, ZetaModel};
use crate::error::Result;
use crate::quasispin::{
    decompose, inner_product, mass_eigenstates, strangeness_states, KaonState, MixingParameters,
};

/// `coeff · (|left_a⟩⊗|right_a⟩ - |left_b⟩⊗|right_b⟩)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntangledPair {
    pub left_a: KaonState,
    pub right_a: KaonState,
    pub left_b: KaonState,
    pub right_b: KaonState,
    pub coeff: Complex64,
}

/// A ζ-modified probability. Away from ζ = 0 these are algebraic expressions
/// rather than guaranteed probabilities, so out-of-range values are flagged
/// instead of clamped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaProbability {
    pub value: f64,
    pub physical: bool,
}

impl ZetaProbability {
    fn new(value: f64) -> Self {
        const SLACK: f64 = 1e-12;
        Self {
            value,
            physical: (-SLACK..=1.0 + SLACK).contains(&value),
        }
    }
}

impl EntangledPair {
    /// The two product-term amplitudes
    /// `A = ⟨f₁|left_a⟩⟨f₂|right_a⟩`, `B = ⟨f₁|left_b⟩⟨f₂|right_b⟩`.
    pub fn product_terms(&self, f1: &KaonState, f2: &KaonState) -> (Complex64, Complex64) {
        (
            inner_product(f1, &self.left_a) * inner_product(f2, &self.right_a),
            inner_product(f1, &self.left_b) * inner_product(f2, &self.right_b),
        )
    }

    pub fn amplitude(&self, f1: &KaonState, f2: &KaonState) -> Complex64 {
        let (a, b) = self.product_terms(f1, f2);
        self.coeff * (a - b)
    }

    pub fn probability(&self, f1: &KaonState, f2: &KaonState) -> f64 {
        self.amplitude(f1, f2).norm_sqr()
    }

    /// `|c|²(|A|² + |B|² - 2(1 - ζ) Re{A* B})`; equals [`Self::probability`]
    /// at ζ = 0.
    pub fn damped_probability(&self, f1: &KaonState, f2: &KaonState, zeta: f64) -> f64 {
        let (a, b) = self.product_terms(f1, f2);
        let interference = (a.conj() * b).re;
        self.coeff.norm_sqr() * (a.norm_sqr() + b.norm_sqr() - 2.0 * (1.0 - zeta) * interference)
    }

    /// Sum of joint probabilities over the strangeness product basis.
    pub fn total_norm(&self) -> f64 {
        let (k0, k0bar) = strangeness_states();
        let basis = [k0, k0bar];
        basis
            .iter()
            .flat_map(|f1| basis.iter().map(move |f2| (f1, f2)))
            .map(|(f1, f2)| self.probability(f1, f2))
            .sum()
    }
}

/// `(|K⁰⟩_l|K̄⁰⟩_r - |K̄⁰⟩_l|K⁰⟩_r)/√2`.
pub fn singlet_strangeness() -> EntangledPair {
    let (k0, k0bar) = strangeness_states();
    EntangledPair {
        left_a: k0,
        right_a: k0bar,
        left_b: k0bar,
        right_b: k0,
        coeff: Complex64::new(FRAC_1_SQRT_2, 0.0),
    }
}

/// The same state written as `c·(|K_S⟩|K_L⟩ - |K_L⟩|K_S⟩)`.
///
/// Expanding `|K⁰⟩ = a₁|K_S⟩ + b₁|K_L⟩`, `|K̄⁰⟩ = a₂|K_S⟩ + b₂|K_L⟩` gives
/// `|K⁰⟩|K̄⁰⟩ - |K̄⁰⟩|K⁰⟩ = (a₁b₂ - a₂b₁)(|K_S⟩|K_L⟩ - |K_L⟩|K_S⟩)`, so
/// `c = (a₁b₂ - a₂b₁)/√2`, which works out to `N²/(2√2 pq)`.
pub fn singlet_mass_basis(mix: &MixingParameters) -> EntangledPair {
    let (ks, kl) = mass_eigenstates(mix);
    let (k0, k0bar) = strangeness_states();
    // K_S and K_L are linearly independent for any valid mixing.
    let (a1, b1) = decompose(&k0, &ks, &kl).expect("K_S, K_L independent");
    let (a2, b2) = decompose(&k0bar, &ks, &kl).expect("K_S, K_L independent");
    EntangledPair {
        left_a: ks,
        right_a: kl,
        left_b: kl,
        right_b: ks,
        coeff: (a1 * b2 - a2 * b1) * FRAC_1_SQRT_2,
    }
}

/// `|⟨f₁|_l ⊗ ⟨f₂|_r |ψ⟩|²`.
pub fn joint_probability(pair: &EntangledPair, f1: &KaonState, f2: &KaonState) -> f64 {
    pair.probability(f1, f2)
}

/// Joint probability with the interference term scaled by `(1 - ζ)`, the pair
/// written in `model.basis()`.
///
/// In the K_S K_L basis the prefactor is `|N_SL|²/2 = N⁴/(8|p|²|q|²)`; in the
/// K⁰K̄⁰ basis it is `1/2`, fixed by unit total norm of the singlet.
pub fn joint_probability_zeta(
    mix: &MixingParameters,
    model: &ZetaModel,
    f1: &KaonState,
    f2: &KaonState,
) -> ZetaProbability {
    let pair = match model.basis() {
        ZetaBasis::KsKl => singlet_mass_basis(mix),
        ZetaBasis::K0K0bar => singlet_strangeness(),
    };
    ZetaProbability::new(pair.damped_probability(f1, f2, model.zeta()))
}

/// Convenience for callers that hold a raw ζ.
pub fn joint_probability_zeta_raw(
    mix: &MixingParameters,
    basis: ZetaBasis,
    zeta: f64,
    f1: &KaonState,
    f2: &KaonState,
) -> Result<ZetaProbability> {
    let model = ZetaModel::new(basis, zeta)?;
    Ok(joint_probability_zeta(mix, &model, f1, f2))
}
