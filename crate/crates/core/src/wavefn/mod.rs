//! Oscillator eigenfunctions in the function module M_S.
//!
//! With `θ = √(mω/ħξ)·x` (a hyperbolic number for each real `x`), the
//! normalized eigenfunctions are
//!
//! ```text
//! φ_l(x) = [mω/(πħξ)]^{1/4} (2^l l!)^{-1/2} exp(−θ²/2) H_l(θ)
//! ```
//!
//! where every hyperbolic power and exponential acts componentwise. Each
//! idempotent component is the ordinary oscillator eigenfunction with `ħ`
//! replaced by `ħξ_k`.

pub mod hermite;
pub mod quadrature;
pub mod space;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::bicomplex::{BiComplex, Idempotent};
use crate::hyperbolic::{dplus_func, DomainError, Hyperbolic, RealFn};
use crate::oscillator::OscillatorParams;

pub use hermite::{hermite_coeffs, hermite_eval, hermite_hyperbolic_eval, HermitePoly, MAX_ORDER};
pub use quadrature::{integrate, ms_scalar_product_quadrature};
pub use space::{apply_p, apply_x, gaussian_moment, ms_scalar_product, to_unit_j_form, MsFunction, MsTerm};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WavefnError {
    #[error("order {l} exceeds the supported maximum {max}")]
    OrderTooLarge { l: usize, max: usize },
    #[error("invalid oscillator parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

fn check_params(p: &OscillatorParams) -> Result<(), WavefnError> {
    p.validate().map_err(|e| WavefnError::InvalidParams(e.to_string()))
}

fn check_order(l: usize) -> Result<(), WavefnError> {
    if l > MAX_ORDER {
        Err(WavefnError::OrderTooLarge { l, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// `√(mω/ħξ)` as a hyperbolic number.
fn inverse_length(p: &OscillatorParams) -> Result<Hyperbolic, WavefnError> {
    let scale = p.xi.scale(p.hbar / (p.m * p.omega));
    Ok(dplus_func(scale, RealFn::InvNthRoot(2))?)
}

/// `[mω/(πħξ)]^{1/4}` through the inverse fourth root on D⁺.
fn ground_normalization(p: &OscillatorParams) -> Result<Hyperbolic, WavefnError> {
    let scale = p.xi.scale(std::f64::consts::PI * p.hbar / (p.m * p.omega));
    Ok(dplus_func(scale, RealFn::InvNthRoot(4))?)
}

/// `(2^l l!)^{-1/2}`
fn level_normalization(l: usize) -> f64 {
    (1..=l).fold(1.0, |acc, k| acc / (2.0 * k as f64).sqrt())
}

/// `θ = √(mω/ħξ)·x`.
pub fn theta_of_x(x: f64, p: &OscillatorParams) -> Result<Hyperbolic, WavefnError> {
    check_params(p)?;
    Ok(inverse_length(p)?.scale(x))
}

/// `φ_l` as an element of M_S: both components expanded into
/// `xⁿ exp(−α_k x²)` terms with `α_k = mω/(2ħξ_k)`.
pub fn phi_l(l: usize, p: &OscillatorParams) -> Result<MsFunction, WavefnError> {
    check_params(p)?;
    let herm = hermite_coeffs(l)?.coeffs_f64();
    let s = inverse_length(p)?;
    let norm = ground_normalization(p)?.scale(level_normalization(l));
    let component = |k: Idempotent| -> Vec<MsTerm> {
        let sk = s.component(k);
        let alpha = 0.5 * sk * sk;
        let nk = norm.component(k);
        herm.iter()
            .enumerate()
            .filter(|(_, &h)| h != 0.0)
            .map(|(n, &h)| MsTerm::new(n as u32, alpha, Complex64::new(nk * h * sk.powi(n as i32), 0.0)))
            .collect()
    };
    Ok(MsFunction::new(component(Idempotent::One), component(Idempotent::Two)))
}

/// `e₁w₁φ_{l,1} + e₂w₂φ_{l′,2}`.
pub fn phi_mixed(l: usize, lprime: usize, w1: Complex64, w2: Complex64, p: &OscillatorParams) -> Result<MsFunction, WavefnError> {
    let a = phi_l(l, p)?;
    let b = if l == lprime { a.clone() } else { phi_l(lprime, p)? };
    let first = a.scale(BiComplex::from_idempotent(w1, Complex64::new(0.0, 0.0)));
    let second = b.scale(BiComplex::from_idempotent(Complex64::new(0.0, 0.0), w2));
    Ok(first.add(&second))
}

/// `φ_l(x)` from the single hyperbolic formula, evaluated pointwise with
/// the componentwise calculus on D.
pub fn phi_l_hyperbolic(l: usize, x: f64, p: &OscillatorParams) -> Result<Hyperbolic, WavefnError> {
    check_params(p)?;
    check_order(l)?;
    let theta = theta_of_x(x, p)?;
    let gauss = dplus_func((theta * theta).scale(-0.5), RealFn::Exp)?;
    let norm = ground_normalization(p)?.scale(level_normalization(l));
    Ok(norm * gauss * hermite_hyperbolic_eval(l, theta))
}

/// Residual `Hu − E·u` for `u = φ_l` and `E = ħω(l+½)ξ`, as the largest
/// remaining coefficient modulus after canonicalization.
pub fn hamiltonian_residual(l: usize, p: &OscillatorParams) -> Result<f64, WavefnError> {
    let u = phi_l(l, p)?;
    Ok(hamiltonian_residual_for(&u, p.energy(l, l), p))
}

/// Residual of the eigenvalue equation for an arbitrary function and energy.
pub fn hamiltonian_residual_for(u: &MsFunction, energy: Hyperbolic, p: &OscillatorParams) -> f64 {
    u.apply_hamiltonian(p)
        .sub(&u.scale(energy.to_bicomplex()))
        .max_coefficient()
}

/// One wavefunction sample with both idempotent components and the
/// `1, j` basis split.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WaveSample {
    pub x: f64,
    pub u1: Complex64,
    pub u2: Complex64,
    pub real: Complex64,
    pub j: Complex64,
}

/// Samples `u` at `samples` evenly spaced points of `[xmin, xmax]`, endpoints
/// included. Points of a symmetric range are exact negatives of each other.
pub fn sample(u: &MsFunction, xmin: f64, xmax: f64, samples: usize) -> Vec<WaveSample> {
    let last = samples.saturating_sub(1).max(1) as f64;
    (0..samples)
        .map(|i| {
            let x = (xmin * (last - i as f64) + xmax * i as f64) / last;
            let (u1, u2) = u.eval_components(x);
            let (real, j) = u.to_unit_j_form(x);
            WaveSample { x, u1, u2, real, j }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(xi1: f64, xi2: f64) -> OscillatorParams {
        OscillatorParams::with_xi(xi1, xi2).unwrap()
    }

    /// Textbook eigenfunction with `ħ → ħξ`, written independently of the
    /// hyperbolic machinery.
    fn standard(l: usize, x: f64, m: f64, omega: f64, hbar_eff: f64) -> f64 {
        let t = (m * omega / hbar_eff).sqrt() * x;
        let fact: f64 = (1..=l).map(|k| k as f64).product();
        ((m * omega / (PI * hbar_eff)).sqrt() / (2f64.powi(l as i32) * fact)).sqrt()
            * (-t * t / 2.0).exp()
            * hermite_eval(l, t)
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_of_x(0.0, &params(1.0, 1.0)).unwrap(), Hyperbolic::ZERO);
        assert_eq!(theta_of_x(1.0, &params(1.0, 1.0)).unwrap(), Hyperbolic::ONE);
        assert_eq!(theta_of_x(2.0, &params(4.0, 1.0)).unwrap(), Hyperbolic::new(1.0, 2.0));
    }

    #[test]
    fn ground_state_at_origin() {
        let v = phi_l(0, &params(1.0, 1.0)).unwrap().eval(0.0);
        let want = PI.powf(-0.25);
        assert!((v - BiComplex::real(want)).modulus() < 1e-15);
    }

    #[test]
    fn ground_state_normalized() {
        let u = phi_l(0, &params(1.0, 1.0)).unwrap();
        assert!((ms_scalar_product(&u, &u) - BiComplex::ONE).modulus() < 1e-14);
        let u = phi_l(0, &params(0.3, 5.0)).unwrap();
        assert!((ms_scalar_product(&u, &u) - BiComplex::ONE).modulus() < 1e-14);
    }

    #[test]
    fn odd_even_overlap_vanishes() {
        let p = params(1.0, 2.0);
        let (a, b) = (phi_l(1, &p).unwrap(), phi_l(0, &p).unwrap());
        assert_eq!(ms_scalar_product(&a, &b), BiComplex::ZERO);
    }

    #[test]
    fn parity() {
        let p = params(0.7, 1.9);
        for l in 0..6 {
            let u = phi_l(l, &p).unwrap();
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            for i in 0..=20 {
                let x = -3.0 + 0.3 * i as f64;
                assert!((u.eval(-x) - u.eval(x).scale(sign)).modulus() < 1e-14);
            }
        }
    }

    #[test]
    fn pointwise_formulas_agree() {
        let p = OscillatorParams::new(1.3, 0.8, 0.9, Hyperbolic::new(0.6, 2.2)).unwrap();
        for l in 0..8 {
            let u = phi_l(l, &p).unwrap();
            for i in 0..=40 {
                let x = -4.0 + 0.2 * i as f64;
                let hyper = phi_l_hyperbolic(l, x, &p).unwrap();
                let std1 = standard(l, x, p.m, p.omega, p.hbar * p.xi.x1);
                let std2 = standard(l, x, p.m, p.omega, p.hbar * p.xi.x2);
                let assembled = Hyperbolic::new(std1, std2).to_bicomplex();
                assert!((hyper.to_bicomplex() - assembled).modulus() < 1e-12);
                assert!((u.eval(x) - assembled).modulus() < 1e-12);
            }
        }
    }

    #[test]
    fn mixed_function_examples() {
        let p = params(1.0, 2.0);
        let one = Complex64::new(1.0, 0.0);
        let diag = phi_mixed(3, 3, one, one, &p).unwrap();
        let pure = phi_l(3, &p).unwrap();
        assert!(diag.sub(&pure).max_coefficient() < 1e-15);

        let a = phi_mixed(1, 2, one, one, &p).unwrap();
        assert!((ms_scalar_product(&a, &a) - BiComplex::ONE).modulus() < 1e-13);
        let b = phi_mixed(1, 3, one, one, &p).unwrap();
        assert!((ms_scalar_product(&a, &b) - BiComplex::E1).modulus() < 1e-13);

        let phase = Complex64::from_polar(1.0, 0.4);
        let c = phi_mixed(2, 0, phase, phase.conj(), &p).unwrap();
        assert!((ms_scalar_product(&c, &c) - BiComplex::ONE).modulus() < 1e-13);
    }

    #[test]
    fn unit_j_form_recombines() {
        let p = params(1.0, 2.0);
        let one = Complex64::new(1.0, 0.0);
        let u = phi_mixed(1, 2, one, one, &p).unwrap();
        for i in 0..10 {
            let x = -2.0 + 0.45 * i as f64;
            let (re, jp) = u.to_unit_j_form(x);
            let rebuilt = BiComplex::from_complex(re) + BiComplex::J * BiComplex::from_complex(jp);
            assert!((rebuilt - u.eval(x)).modulus() < 1e-15);
            let (u1, u2) = u.eval_components(x);
            assert!((re - (u1 + u2) * 0.5).norm() < 1e-16);
            assert!((jp - (u1 - u2) * 0.5).norm() < 1e-16);
        }
    }

    #[test]
    fn residual_examples() {
        assert!(hamiltonian_residual(0, &params(1.0, 1.0)).unwrap() < 1e-12);
        assert!(hamiltonian_residual(3, &params(2.0, 0.5)).unwrap() < 1e-10);
        let p = params(1.0, 1.0);
        let u = phi_l(2, &p).unwrap();
        let wrong = p.energy(2, 2) + p.xi.scale(p.hbar_omega());
        assert!(hamiltonian_residual_for(&u, wrong, &p) > 0.1 * u.max_coefficient());
        assert_eq!(
            hamiltonian_residual(61, &p).unwrap_err(),
            WavefnError::OrderTooLarge { l: 61, max: 60 }
        );
    }

    #[test]
    fn sample_grid_is_symmetric() {
        let u = phi_l(1, &params(1.0, 1.0)).unwrap();
        let s = sample(&u, -2.0, 2.0, 11);
        assert_eq!(s.len(), 11);
        assert_eq!(s[0].x, -2.0);
        assert_eq!(s[10].x, 2.0);
        for i in 0..11 {
            assert_eq!(s[i].x, -s[10 - i].x);
            assert_eq!(s[i].u1, -s[10 - i].u1);
        }
    }
}
