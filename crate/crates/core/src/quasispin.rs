//! Single-kaon quasi-spin algebra.
//!
//! A neutral kaon lives in a two-dimensional space spanned by the strangeness
//! eigenstates |K⁰⟩ (quasi-spin up) and |K̄⁰⟩ (quasi-spin down). Every state in
//! this module is stored as a unit vector of components on that basis.
//!
//! The CP operator carries a free phase `alpha`,
//!
//! ```text
//! CP|K⁰⟩ = -e^{iα}|K̄⁰⟩,   CP|K̄⁰⟩ = -e^{-iα}|K⁰⟩,   (CP)² = 1,
//! ```
//!
//! so the CP eigenstates K₁, K₂ depend on `alpha`, while the mass eigenstates
//! K_S, K_L depend only on the mixing weights `p` and `q`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{ensure_finite, invalid, KaonError, Result};

/// Complex scalar used for amplitudes, mixing weights and phases.
pub type ComplexAmplitude = Complex64;

/// Tolerance for algebraic identities between few-operation expressions.
pub const ALGEBRA_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Principal argument in (-π, π]; `atan2` can return -π for a negative zero
/// imaginary part, which is folded onto +π.
pub fn phase(z: Complex64) -> f64 {
    let a = z.arg();
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Which named state a [`KaonState`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateLabel {
    K0,
    K0Bar,
    K1,
    K2,
    KS,
    KL,
    Custom,
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StateLabel::K0 => "K0",
            StateLabel::K0Bar => "K0bar",
            StateLabel::K1 => "K1",
            StateLabel::K2 => "K2",
            StateLabel::KS => "KS",
            StateLabel::KL => "KL",
            StateLabel::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Unit vector in the strangeness basis {|K⁰⟩, |K̄⁰⟩}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KaonState {
    a0: Complex64,
    abar: Complex64,
    label: StateLabel,
}

impl KaonState {
    /// Builds a state from unnormalized components and normalizes it.
    pub fn new(a0: Complex64, abar: Complex64, label: StateLabel) -> Result<Self> {
        if !(a0.re.is_finite() && a0.im.is_finite() && abar.re.is_finite() && abar.im.is_finite()) {
            return Err(invalid("state components must be finite"));
        }
        let norm = (a0.norm_sqr() + abar.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(KaonError::ZeroVector);
        }
        Ok(Self {
            a0: a0 / norm,
            abar: abar / norm,
            label,
        })
    }

    /// Components that are already normalized up to rounding.
    fn from_unit(a0: Complex64, abar: Complex64, label: StateLabel) -> Self {
        Self { a0, abar, label }
    }

    pub fn custom(a0: Complex64, abar: Complex64) -> Result<Self> {
        Self::new(a0, abar, StateLabel::Custom)
    }

    /// Component on |K⁰⟩.
    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    /// Component on |K̄⁰⟩.
    pub fn abar(&self) -> Complex64 {
        self.abar
    }

    pub fn label(&self) -> StateLabel {
        self.label
    }

    pub fn components(&self) -> [Complex64; 2] {
        [self.a0, self.abar]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a0.norm_sqr() + self.abar.norm_sqr()
    }

    pub fn with_label(mut self, label: StateLabel) -> Self {
        self.label = label;
        self
    }
}

/// The CP transformation with phase `alpha`, as a 2×2 matrix on the
/// strangeness basis: `[[0, -e^{-iα}], [-e^{iα}, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpTransform {
    alpha: f64,
}

/// Row-major 2×2 complex matrix.
pub type Matrix2 = [[Complex64; 2]; 2];

impl CpTransform {
    pub fn new(alpha: f64) -> Result<Self> {
        ensure_finite("alpha", alpha)?;
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn matrix(&self) -> Matrix2 {
        [[ZERO, -cis(-self.alpha)], [-cis(self.alpha), ZERO]]
    }

    /// Applies CP to a state. CP is unitary, so the result stays normalized.
    pub fn apply(&self, state: &KaonState) -> KaonState {
        let [v0, v1] = mat_vec(&self.matrix(), &state.components());
        KaonState::from_unit(v0, v1, StateLabel::Custom)
    }
}

pub fn mat_vec(m: &Matrix2, v: &[Complex64; 2]) -> [Complex64; 2] {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

pub fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Mixing weights `p`, `q` of the mass eigenstates
/// `|K_S⟩ = (p|K⁰⟩ - q|K̄⁰⟩)/N` and `|K_L⟩ = (p|K⁰⟩ + q|K̄⁰⟩)/N`.
///
/// Derived quantities:
/// * `N² = |p|² + |q|²`
/// * leptonic asymmetry `δ = (|p|² - |q|²)/N²`
/// * `η = |q|/|p|`, with `η² = (1 - δ)/(1 + δ)`
/// * relative phase `χ = arg(p q*)`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingParameters {
    p: Complex64,
    q: Complex64,
}

impl MixingParameters {
    pub fn new(p: Complex64, q: Complex64) -> Result<Self> {
        for (name, z) in [("p", p), ("q", q)] {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(invalid(format!("{name} must be finite, got {z}")));
            }
        }
        if p.norm_sqr() == 0.0 || q.norm_sqr() == 0.0 {
            return Err(KaonError::DegenerateMixing {
                p: p.to_string(),
                q: q.to_string(),
            });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> Complex64 {
        self.p
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    /// `N² = |p|² + |q|²`.
    pub fn norm_sq(&self) -> f64 {
        self.p.norm_sqr() + self.q.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Leptonic asymmetry `(|p|² - |q|²)/(|p|² + |q|²)`.
    pub fn delta(&self) -> f64 {
        (self.p.norm_sqr() - self.q.norm_sqr()) / self.norm_sq()
    }

    /// `|q|/|p|`.
    pub fn eta(&self) -> f64 {
        self.q.norm() / self.p.norm()
    }

    /// Relative phase `arg(p q*)` on the principal branch.
    pub fn chi(&self) -> f64 {
        phase(self.p * self.q.conj())
    }

    /// `ε` in the convention `p ∝ 1 + ε`, `q ∝ 1 - ε`, i.e. `(p - q)/(p + q)`.
    /// `None` when `p + q = 0`.
    pub fn epsilon(&self) -> Option<Complex64> {
        let s = self.p + self.q;
        (s.norm_sqr() > 0.0).then(|| (self.p - self.q) / s)
    }

    /// Weights seen after the basis kets are rephased by `e^{iγ₀}`, `e^{iγ̄}`.
    pub fn rephased(&self, gamma0: f64, gammabar: f64) -> Self {
        Self {
            p: self.p * cis(gamma0),
            q: self.q * cis(gammabar),
        }
    }

    /// The mixing with `p` and `q` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }
}

/// `(|K⁰⟩, |K̄⁰⟩)`.
pub fn strangeness_states() -> (KaonState, KaonState) {
    (
        KaonState::from_unit(ONE, ZERO, StateLabel::K0),
        KaonState::from_unit(ZERO, ONE, StateLabel::K0Bar),
    )
}

/// CP eigenstates for the CP phase `alpha`:
/// `K₁ = (|K⁰⟩ - e^{iα}|K̄⁰⟩)/√2` (CP = +1) and
/// `K₂ = (|K⁰⟩ + e^{iα}|K̄⁰⟩)/√2` (CP = -1).
pub fn cp_eigenstates(alpha: f64) -> Result<(KaonState, KaonState)> {
    ensure_finite("alpha", alpha)?;
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let e = cis(alpha) * FRAC_1_SQRT_2;
    Ok((
        KaonState::from_unit(h, -e, StateLabel::K1),
        KaonState::from_unit(h, e, StateLabel::K2),
    ))
}

/// `(|K_S⟩, |K_L⟩)` for the given mixing.
pub fn mass_eigenstates(mix: &MixingParameters) -> (KaonState, KaonState) {
    let n = mix.norm();
    let (p, q) = (mix.p / n, mix.q / n);
    (
        KaonState::from_unit(p, -q, StateLabel::KS),
        KaonState::from_unit(p, q, StateLabel::KL),
    )
}

/// Mixing in the convention `p = 1 + ε`, `q = 1 - ε`.
pub fn mixing_from_epsilon(epsilon: Complex64) -> Result<MixingParameters> {
    MixingParameters::new(ONE + epsilon, ONE - epsilon)
}

/// Multiplies the |K⁰⟩ component by `e^{iγ₀}` and the |K̄⁰⟩ component by
/// `e^{iγ̄}`. Angles are expected to be finite.
pub fn rephase(state: &KaonState, gamma0: f64, gammabar: f64) -> KaonState {
    KaonState::from_unit(
        state.a0 * cis(gamma0),
        state.abar * cis(gammabar),
        state.label,
    )
}

/// `⟨bra|ket⟩`, conjugate-linear in `bra`.
pub fn inner_product(bra: &KaonState, ket: &KaonState) -> Complex64 {
    bra.a0.conj() * ket.a0 + bra.abar.conj() * ket.abar
}

/// Solves `f = c_a·a + c_b·b` for `(c_a, c_b)` exactly (Cramer's rule).
///
/// `a` and `b` need not be orthogonal; this is what expands a state on the
/// K_S/K_L pair when `|p| ≠ |q|`.
pub fn decompose(f: &KaonState, a: &KaonState, b: &KaonState) -> Result<(Complex64, Complex64)> {
    let det = a.a0 * b.abar - b.a0 * a.abar;
    if det.norm() <= ALGEBRA_TOL {
        return Err(invalid(format!(
            "basis states {} and {} are collinear",
            a.label, b.label
        )));
    }
    let ca = (f.a0 * b.abar - b.a0 * f.abar) / det;
    let cb = (a.a0 * f.abar - f.a0 * a.abar) / det;
    Ok((ca, cb))
}
