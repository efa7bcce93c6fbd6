//! C ABI over `kaonbell`.
//!
//! Every fallible function returns a [`KbStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`kb_last_error_message`] on the same thread. Mixing parameters live behind
//! the opaque [`KbMixing`] handle, created by one of the `kb_mixing_*`
//! constructors and released with [`kb_mixing_free`].
//!
//! Panics never cross the boundary; they surface as `KB_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kaonbell::bell::{mixing_from_delta, optimal_alpha, uchiyama_assessment};
use kaonbell::decoherence::{
    propagate_delta_uncertainty, zeta_lower_bound_exact, zeta_lower_bound_expansion,
    zeta_lower_bound_numeric, zeta_probability_triple, ZetaBasis,
};
use kaonbell::quasispin::{mixing_from_epsilon, MixingParameters};
use kaonbell::tagging_mc::{required_events, sample_kl_tags, McConfig};
use kaonbell::KaonError;
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KbStatus {
    Ok = 0,
    InvalidInput = 1,
    DegenerateMixing = 2,
    NoRoot = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Values accepted by the `basis` parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KbBasis {
    KsKl = 0,
    K0K0bar = 1,
}

/// Opaque handle to a pair of mixing weights `(p, q)`.
pub struct KbMixing(MixingParameters);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KbBellAssessment {
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`; positive means violated.
    pub margin: f64,
    pub violated: bool,
    pub alpha_used: f64,
}

/// `P(K₁, K̄⁰)`, `P(K_S, K̄⁰)` and `P(K_S, K₁)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KbProbabilityTriple {
    pub k1_k0bar: f64,
    pub ks_k0bar: f64,
    pub ks_k1: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KbZetaBound {
    pub delta_in: f64,
    pub exact_bound: f64,
    pub expansion_bound: f64,
    pub numeric_bound: f64,
    pub uncertainty: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KbMcResult {
    pub n_plus: u64,
    pub n_minus: u64,
    pub delta_hat: f64,
    pub std_error: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(KbStatus, String);

impl From<KaonError> for Failure {
    fn from(e: KaonError) -> Self {
        let status = match e {
            KaonError::InvalidInput(_) | KaonError::ZeroVector => KbStatus::InvalidInput,
            KaonError::DegenerateMixing { .. } => KbStatus::DegenerateMixing,
            KaonError::NoRoot { .. } => KbStatus::NoRoot,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn guard<F>(f: F) -> KbStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            KbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside kaonbell".into());
            KbStatus::Panic
        }
    }
}

fn null(name: &str) -> Failure {
    Failure(KbStatus::NullPointer, format!("{name} is null"))
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `m` must be null or a live handle from a `kb_mixing_*` constructor.
unsafe fn mixing<'a>(m: *const KbMixing) -> Result<&'a MixingParameters, Failure> {
    m.as_ref().map(|h| &h.0).ok_or_else(|| null("mixing"))
}

fn parse_basis(raw: u32) -> Result<ZetaBasis, Failure> {
    match raw {
        0 => Ok(ZetaBasis::KsKl),
        1 => Ok(ZetaBasis::K0K0bar),
        _ => Err(Failure(
            KbStatus::InvalidInput,
            format!("unknown basis {raw}"),
        )),
    }
}

unsafe fn new_handle(out: *mut *mut KbMixing, mix: MixingParameters) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(KbMixing(mix))))
}

/// Message for the most recent failure on this thread, or null after a
/// success. The pointer stays valid until the next `kb_*` call on the thread.
#[no_mangle]
pub extern "C" fn kb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a `KbStatus` value.
#[no_mangle]
pub extern "C" fn kb_status_name(status: i32) -> *const c_char {
    let s: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"invalid input\0",
        2 => b"degenerate mixing\0",
        3 => b"no root\0",
        4 => b"null pointer\0",
        5 => b"panic\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn kb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Mixing weights `p = p_re + i p_im`, `q = q_re + i q_im`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_new(
    p_re: f64,
    p_im: f64,
    q_re: f64,
    q_im: f64,
    out: *mut *mut KbMixing,
) -> KbStatus {
    guard(|| {
        let mix = MixingParameters::new(Complex64::new(p_re, p_im), Complex64::new(q_re, q_im))?;
        new_handle(out, mix)
    })
}

/// `p = 1 + ε`, `q = 1 - ε`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_from_epsilon(
    eps_re: f64,
    eps_im: f64,
    out: *mut *mut KbMixing,
) -> KbStatus {
    guard(|| new_handle(out, mixing_from_epsilon(Complex64::new(eps_re, eps_im))?))
}

/// A mixing with leptonic asymmetry `delta`; `im_part` sets the relative
/// phase `χ = 2·atan(im_part)`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_from_delta(
    delta: f64,
    im_part: f64,
    out: *mut *mut KbMixing,
) -> KbStatus {
    guard(|| new_handle(out, mixing_from_delta(delta, im_part)?))
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_free(m: *mut KbMixing) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// `δ = (|p|² - |q|²)/(|p|² + |q|²)`.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_delta(m: *const KbMixing, out: *mut f64) -> KbStatus {
    guard(|| write(out, mixing(m)?.delta()))
}

/// `|q|/|p|`.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_eta(m: *const KbMixing, out: *mut f64) -> KbStatus {
    guard(|| write(out, mixing(m)?.eta()))
}

/// `arg(p q*)` in `(-π, π]`.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_chi(m: *const KbMixing, out: *mut f64) -> KbStatus {
    guard(|| write(out, mixing(m)?.chi()))
}

/// The CP phase `-χ` that maximizes the inequality margin.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_mixing_optimal_alpha(m: *const KbMixing, out: *mut f64) -> KbStatus {
    guard(|| write(out, optimal_alpha(mixing(m)?)))
}

/// Uchiyama's inequality for the handle at CP phase `alpha` (radians). With
/// `swap_to_k0` the K̄⁰ state is replaced by K⁰.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_uchiyama_assessment(
    m: *const KbMixing,
    alpha: f64,
    swap_to_k0: bool,
    out: *mut KbBellAssessment,
) -> KbStatus {
    guard(|| {
        let a = uchiyama_assessment(mixing(m)?, alpha, swap_to_k0)?;
        write(
            out,
            KbBellAssessment {
                lhs: a.lhs,
                rhs: a.rhs,
                margin: a.margin,
                violated: a.violated,
                alpha_used: a.alpha_used,
            },
        )
    })
}

/// Closed-form probabilities with decoherence `zeta` in `basis`, a
/// [`KbBasis`] value.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_zeta_probability_triple(
    m: *const KbMixing,
    alpha: f64,
    zeta: f64,
    basis: u32,
    out: *mut KbProbabilityTriple,
) -> KbStatus {
    guard(|| {
        let t = zeta_probability_triple(mixing(m)?, alpha, zeta, parse_basis(basis)?)?;
        write(
            out,
            KbProbabilityTriple {
                k1_k0bar: t.k1_k0bar,
                ks_k0bar: t.ks_k0bar,
                ks_k1: t.ks_k1,
            },
        )
    })
}

/// Closed-form lower bound on ζ for `0 < delta < 1`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_zeta_bound_exact(delta: f64, basis: u32, out: *mut f64) -> KbStatus {
    guard(|| write(out, zeta_lower_bound_exact(delta, parse_basis(basis)?)?))
}

/// First-order expansion of the bound.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_zeta_bound_expansion(
    delta: f64,
    basis: u32,
    out: *mut f64,
) -> KbStatus {
    guard(|| write(out, zeta_lower_bound_expansion(delta, parse_basis(basis)?)?))
}

/// The bound found by bisection on the inequality margin.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_zeta_bound_numeric(delta: f64, basis: u32, out: *mut f64) -> KbStatus {
    guard(|| write(out, zeta_lower_bound_numeric(delta, parse_basis(basis)?)?))
}

/// All three bounds plus the uncertainty carried from `sigma`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_zeta_bound(
    delta: f64,
    sigma: f64,
    basis: u32,
    out: *mut KbZetaBound,
) -> KbStatus {
    guard(|| {
        let r = propagate_delta_uncertainty(delta, sigma, parse_basis(basis)?)?;
        write(
            out,
            KbZetaBound {
                delta_in: r.delta_in,
                exact_bound: r.exact_bound,
                expansion_bound: r.expansion_bound,
                numeric_bound: r.numeric_bound,
                uncertainty: r.uncertainty,
            },
        )
    })
}

/// Tags `n_events` K_L decays. Identical inputs give identical counts.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_sample_kl_tags(
    m: *const KbMixing,
    n_events: u64,
    seed: u64,
    out: *mut KbMcResult,
) -> KbStatus {
    guard(|| {
        let cfg = McConfig::new(n_events, seed, *mixing(m)?)?;
        let r = sample_kl_tags(&cfg);
        write(
            out,
            KbMcResult {
                n_plus: r.n_plus,
                n_minus: r.n_minus,
                delta_hat: r.delta_hat,
                std_error: r.std_error,
            },
        )
    })
}

/// Smallest event count whose standard error resolves `delta` at `n_sigma`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kb_required_events(delta: f64, n_sigma: f64, out: *mut u64) -> KbStatus {
    guard(|| write(out, required_events(delta, n_sigma)?))
}
