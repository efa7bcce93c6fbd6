use std::ffi::CStr;
use std::ptr;

use kaonbell_ffi::*;

fn last_error() -> String {
    let p = kb_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn handle(delta: f64) -> *mut KbMixing {
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { kb_mixing_from_delta(delta, 0.0, &mut m) },
        KbStatus::Ok
    );
    assert!(!m.is_null());
    m
}

#[test]
fn handle_lifecycle_and_getters() {
    let m = handle(3.27e-3);
    let mut x = 0.0;
    unsafe {
        assert_eq!(kb_mixing_delta(m, &mut x), KbStatus::Ok);
        assert!((x - 3.27e-3).abs() < 1e-15);
        assert_eq!(kb_mixing_eta(m, &mut x), KbStatus::Ok);
        assert!((x * x - (1.0 - 3.27e-3) / (1.0 + 3.27e-3)).abs() < 1e-12);
        assert_eq!(kb_mixing_chi(m, &mut x), KbStatus::Ok);
        assert_eq!(x, 0.0);
        assert_eq!(kb_mixing_optimal_alpha(m, &mut x), KbStatus::Ok);
        assert_eq!(x, 0.0);
        kb_mixing_free(m);
        kb_mixing_free(ptr::null_mut());
    }
    assert!(kb_last_error_message().is_null());
}

#[test]
fn inequality_through_the_abi() {
    let mut m = ptr::null_mut();
    unsafe {
        let eps = 2.28e-3 * std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(kb_mixing_from_epsilon(eps, eps, &mut m), KbStatus::Ok);
        let mut a = KbBellAssessment::default();
        assert_eq!(kb_uchiyama_assessment(m, 0.0, false, &mut a), KbStatus::Ok);
        assert!(a.violated && a.margin > 0.0);
        assert_eq!(kb_uchiyama_assessment(m, 0.0, true, &mut a), KbStatus::Ok);
        assert!(!a.violated);

        let mut t = KbProbabilityTriple::default();
        assert_eq!(
            kb_zeta_probability_triple(m, 0.3, 0.0, KbBasis::KsKl as u32, &mut t),
            KbStatus::Ok
        );
        assert!((t.k1_k0bar - 0.25).abs() < 1e-12);
        kb_mixing_free(m);
    }
}

#[test]
fn bounds_and_monte_carlo() {
    let mut z = KbZetaBound::default();
    let mut b = 0.0;
    let mut n = 0u64;
    unsafe {
        assert_eq!(
            kb_zeta_bound(3.27e-3, 0.12e-3, KbBasis::KsKl as u32, &mut z),
            KbStatus::Ok
        );
        assert!((z.exact_bound - 0.9951).abs() < 5e-4);
        assert!((z.numeric_bound - z.exact_bound).abs() < 1e-9);
        assert!((1e-4..=3e-4).contains(&z.uncertainty));
        assert_eq!(
            kb_zeta_bound_exact(3.27e-3, KbBasis::K0K0bar as u32, &mut b),
            KbStatus::Ok
        );
        assert!((b - 0.0033).abs() < 2e-4);
        assert_eq!(kb_zeta_bound_expansion(3.27e-3, 1, &mut b), KbStatus::Ok);
        assert_eq!(b, 3.27e-3);
        assert_eq!(kb_zeta_bound_numeric(3.27e-3, 0, &mut b), KbStatus::Ok);
        assert!((b - z.exact_bound).abs() < 1e-9);
        assert_eq!(kb_required_events(0.5, 1.0, &mut n), KbStatus::Ok);
        assert_eq!(n, 3);
    }

    let m = handle(3.27e-3);
    let (mut r1, mut r2) = (KbMcResult::default(), KbMcResult::default());
    unsafe {
        assert_eq!(kb_sample_kl_tags(m, 1_000_000, 7, &mut r1), KbStatus::Ok);
        assert_eq!(kb_sample_kl_tags(m, 1_000_000, 7, &mut r2), KbStatus::Ok);
        kb_mixing_free(m);
    }
    assert_eq!(r1, r2);
    assert_eq!(r1.n_plus + r1.n_minus, 1_000_000);
    assert!((r1.delta_hat - 3.27e-3).abs() <= 5.0 * r1.std_error);
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    let mut x = 0.0;
    unsafe {
        assert_eq!(
            kb_mixing_new(0.0, 0.0, 1.0, 0.0, &mut m),
            KbStatus::DegenerateMixing
        );
        assert!(m.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(
            kb_mixing_from_delta(1.5, 0.0, &mut m),
            KbStatus::InvalidInput
        );
        assert_eq!(
            kb_mixing_new(1.0, 0.0, f64::NAN, 0.0, &mut m),
            KbStatus::InvalidInput
        );
        assert_eq!(
            kb_mixing_from_delta(0.1, 0.0, ptr::null_mut()),
            KbStatus::NullPointer
        );
        assert_eq!(kb_mixing_delta(ptr::null(), &mut x), KbStatus::NullPointer);
        assert!(last_error().contains("null"));
        assert_eq!(kb_zeta_bound_exact(0.1, 7, &mut x), KbStatus::InvalidInput);
        assert!(last_error().contains("basis"));
        assert_eq!(kb_zeta_bound_exact(0.0, 0, &mut x), KbStatus::InvalidInput);

        let h = handle(0.1);
        let mut r = KbMcResult::default();
        assert_eq!(kb_sample_kl_tags(h, 0, 1, &mut r), KbStatus::InvalidInput);
        kb_mixing_free(h);
    }
    let name = |s: i32| {
        unsafe { CStr::from_ptr(kb_status_name(s)) }
            .to_str()
            .unwrap()
    };
    assert_eq!(name(KbStatus::NullPointer as i32), "null pointer");
    assert_eq!(name(99), "unknown status");
    let v = unsafe { CStr::from_ptr(kb_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
