//! Entangled neutral-kaon pairs at creation time.
//!
//! The crate builds the antisymmetric K⁰K̄⁰ state produced at the Φ
//! resonance, evaluates Uchiyama's Bell inequality for an arbitrary CP phase
//! convention, and turns the phase-optimized inequality into bounds on the
//! leptonic CP asymmetry δ and on the decoherence parameter ζ.
//!
//! Everything is evaluated at t = 0; no API takes a time argument.
//!
//! * [`quasispin`]: single-kaon states, CP and mass eigenstates, mixing weights
//! * [`entangle`]: the two-kaon singlet and joint probabilities
//! * [`bell`]: the inequality, the optimal CP phase and the δ bound
//! * [`decoherence`]: ζ-modified probabilities and the ζ lower bounds
//! * [`tagging_mc`]: Monte Carlo estimate of δ from semileptonic tags
//! * [`report`]: the reproduction report driven by the `kaonbell` binary

pub mod bell;
pub mod decoherence;
pub mod entangle;
pub mod error;
pub mod quasispin;
pub mod report;
pub mod tagging_mc;

pub use error::{KaonError, Result};
