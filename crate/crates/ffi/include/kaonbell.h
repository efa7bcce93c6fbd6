#ifndef KAONBELL_H
#define KAONBELL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KbStatus {
  KB_STATUS_OK = 0,
  KB_STATUS_INVALID_INPUT = 1,
  KB_STATUS_DEGENERATE_MIXING = 2,
  KB_STATUS_NO_ROOT = 3,
  KB_STATUS_NULL_POINTER = 4,
  KB_STATUS_PANIC = 5,
} KbStatus;

// Values accepted by the `basis` parameters.
typedef enum KbBasis {
  KB_BASIS_KS_KL = 0,
  KB_BASIS_K0K0BAR = 1,
} KbBasis;

// Opaque handle to a pair of mixing weights `(p, q)`.
typedef struct KbMixing KbMixing;

typedef struct KbBellAssessment {
  double lhs;
  double rhs;
  // `lhs - rhs`; positive means violated.
  double margin;
  bool violated;
  double alpha_used;
} KbBellAssessment;

// `P(K₁, K̄⁰)`, `P(K_S, K̄⁰)` and `P(K_S, K₁)`.
typedef struct KbProbabilityTriple {
  double k1_k0bar;
  double ks_k0bar;
  double ks_k1;
} KbProbabilityTriple;

typedef struct KbZetaBound {
  double delta_in;
  double exact_bound;
  double expansion_bound;
  double numeric_bound;
  double uncertainty;
} KbZetaBound;

typedef struct KbMcResult {
  uint64_t n_plus;
  uint64_t n_minus;
  double delta_hat;
  double std_error;
} KbMcResult;

// Message for the most recent failure on this thread, or null after a
// success. The pointer stays valid until the next `kb_*` call on the thread.
const char *kb_last_error_message(void);

// Static name of a `KbStatus` value.
const char *kb_status_name(int32_t status);

const char *kb_version(void);

// Mixing weights `p = p_re + i p_im`, `q = q_re + i q_im`.
//
// # Safety
// `out` must be valid for a pointer write.
enum KbStatus kb_mixing_new(double p_re,
                            double p_im,
                            double q_re,
                            double q_im,
                            struct KbMixing **out);

// `p = 1 + ε`, `q = 1 - ε`.
//
// # Safety
// `out` must be valid for a pointer write.
enum KbStatus kb_mixing_from_epsilon(double eps_re, double eps_im, struct KbMixing **out);

// A mixing with leptonic asymmetry `delta`; `im_part` sets the relative
// phase `χ = 2·atan(im_part)`.
//
// # Safety
// `out` must be valid for a pointer write.
enum KbStatus kb_mixing_from_delta(double delta, double im_part, struct KbMixing **out);

// Releases a handle. Null is a no-op.
//
// # Safety
// `m` must be null or a handle not yet freed.
void kb_mixing_free(struct KbMixing *m);

// `δ = (|p|² - |q|²)/(|p|² + |q|²)`.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_mixing_delta(const struct KbMixing *m, double *out);

// `|q|/|p|`.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_mixing_eta(const struct KbMixing *m, double *out);

// `arg(p q*)` in `(-π, π]`.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_mixing_chi(const struct KbMixing *m, double *out);

// The CP phase `-χ` that maximizes the inequality margin.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_mixing_optimal_alpha(const struct KbMixing *m, double *out);

// Uchiyama's inequality for the handle at CP phase `alpha` (radians). With
// `swap_to_k0` the K̄⁰ state is replaced by K⁰.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_uchiyama_assessment(const struct KbMixing *m,
                                     double alpha,
                                     bool swap_to_k0,
                                     struct KbBellAssessment *out);

// Closed-form probabilities with decoherence `zeta` in `basis`, a
// [`KbBasis`] value.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_zeta_probability_triple(const struct KbMixing *m,
                                         double alpha,
                                         double zeta,
                                         uint32_t basis,
                                         struct KbProbabilityTriple *out);

// Closed-form lower bound on ζ for `0 < delta < 1`.
//
// # Safety
// `out` must be valid for a write.
enum KbStatus kb_zeta_bound_exact(double delta, uint32_t basis, double *out);

// First-order expansion of the bound.
//
// # Safety
// `out` must be valid for a write.
enum KbStatus kb_zeta_bound_expansion(double delta, uint32_t basis, double *out);

// The bound found by bisection on the inequality margin.
//
// # Safety
// `out` must be valid for a write.
enum KbStatus kb_zeta_bound_numeric(double delta, uint32_t basis, double *out);

// All three bounds plus the uncertainty carried from `sigma`.
//
// # Safety
// `out` must be valid for a write.
enum KbStatus kb_zeta_bound(double delta, double sigma, uint32_t basis, struct KbZetaBound *out);

// Tags `n_events` K_L decays. Identical inputs give identical counts.
//
// # Safety
// `m` must be a live handle and `out` valid for a write.
enum KbStatus kb_sample_kl_tags(const struct KbMixing *m,
                                uint64_t n_events,
                                uint64_t seed,
                                struct KbMcResult *out);

// Smallest event count whose standard error resolves `delta` at `n_sigma`.
//
// # Safety
// `out` must be valid for a write.
enum KbStatus kb_required_events(double delta, double n_sigma, uint64_t *out);

#endif  /* KAONBELL_H */
