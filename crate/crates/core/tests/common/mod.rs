//! Test-only oracles written directly from the defining formulas, without
//! going through the library's pair or probability machinery.

#![allow(dead_code)]

use num_complex::Complex64;

pub type C = Complex64;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Two-kaon state as a 4-vector indexed `2·left + right` over {K⁰, K̄⁰}.
pub type Pair4 = [C; 4];

pub fn kron(a: [C; 2], b: [C; 2]) -> Pair4 {
    [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
}

/// `(|K⁰K̄⁰⟩ - |K̄⁰K⁰⟩)/√2`.
pub fn singlet4() -> Pair4 {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [c(0.0, 0.0), c(h, 0.0), c(-h, 0.0), c(0.0, 0.0)]
}

pub fn normalize(v: [C; 2]) -> [C; 2] {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

/// `|⟨f₁ ⊗ f₂|ψ⟩|²` by explicit contraction.
pub fn prob4(psi: &Pair4, f1: [C; 2], f2: [C; 2]) -> f64 {
    let bra = kron(f1, f2);
    bra.iter()
        .zip(psi)
        .map(|(b, k)| b.conj() * k)
        .sum::<C>()
        .norm_sqr()
}

pub fn ip(f: [C; 2], g: [C; 2]) -> C {
    f[0].conj() * g[0] + f[1].conj() * g[1]
}

pub fn ks(p: C, q: C) -> [C; 2] {
    normalize([p, -q])
}

pub fn kl(p: C, q: C) -> [C; 2] {
    normalize([p, q])
}

pub fn k1(alpha: f64) -> [C; 2] {
    normalize([c(1.0, 0.0), -C::from_polar(1.0, alpha)])
}

pub const K0: [C; 2] = [C::new(1.0, 0.0), C::new(0.0, 0.0)];
pub const K0BAR: [C; 2] = [C::new(0.0, 0.0), C::new(1.0, 0.0)];

/// ζ-modified probability in the K_S K_L basis, transcribed term by term:
/// `N⁴/(8|p|²|q|²){|⟨f₁|S⟩|²|⟨f₂|L⟩|² + |⟨f₁|L⟩|²|⟨f₂|S⟩|²
///   - 2(1-ζ)Re[⟨f₁|S⟩*⟨f₂|L⟩*⟨f₁|L⟩⟨f₂|S⟩]}`
/// with unnormalized `S = p|K⁰⟩ - q|K̄⁰⟩`, `L = p|K⁰⟩ + q|K̄⁰⟩` divided by N.
pub fn zeta_prob_kskl(p: C, q: C, zeta: f64, f1: [C; 2], f2: [C; 2]) -> f64 {
    let n2 = p.norm_sqr() + q.norm_sqr();
    let (s, l) = (ks(p, q), kl(p, q));
    let (a, b, cc, d) = (ip(f1, s), ip(f2, l), ip(f1, l), ip(f2, s));
    n2 * n2 / (8.0 * p.norm_sqr() * q.norm_sqr())
        * (a.norm_sqr() * b.norm_sqr() + cc.norm_sqr() * d.norm_sqr()
            - 2.0 * (1.0 - zeta) * (a.conj() * b.conj() * cc * d).re)
}

/// Same construction in the K⁰K̄⁰ basis with prefactor 1/2.
pub fn zeta_prob_k0(zeta: f64, f1: [C; 2], f2: [C; 2]) -> f64 {
    let (a, b, cc, d) = (ip(f1, K0), ip(f2, K0BAR), ip(f1, K0BAR), ip(f2, K0));
    0.5 * (a.norm_sqr() * b.norm_sqr() + cc.norm_sqr() * d.norm_sqr()
        - 2.0 * (1.0 - zeta) * (a.conj() * b.conj() * cc * d).re)
}

/// ζ bound by scanning ζ on a uniform grid: the first grid point at which
/// the Uchiyama margin (oracle probabilities, optimal α) is no longer
/// positive. Resolution `1/steps`.
pub fn zeta_bound_scan(delta: f64, kskl: bool, steps: usize) -> f64 {
    let p = c((1.0 + delta).sqrt(), 0.0);
    let q = c((1.0 - delta).sqrt(), 0.0);
    let alpha = -(p * q.conj()).arg();
    let prob = |zeta: f64, f1, f2| {
        if kskl {
            zeta_prob_kskl(p, q, zeta, f1, f2)
        } else {
            zeta_prob_k0(zeta, f1, f2)
        }
    };
    let s = ks(p, q);
    let one = k1(alpha);
    for i in 0..=steps {
        let zeta = i as f64 / steps as f64;
        let margin = prob(zeta, s, K0BAR) - prob(zeta, s, one) - prob(zeta, one, K0BAR);
        if margin <= 0.0 {
            return zeta;
        }
    }
    f64::NAN
}
