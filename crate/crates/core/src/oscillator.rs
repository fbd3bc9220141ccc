//! Algebraic solution of the bicomplex harmonic oscillator on the truncated
//! module of dimension `N + 1`.
//!
//! The ladder pair acts as `A|φ_{l+1}⟩ = √((l+1)ξ)|φ_l⟩` and
//! `A*|φ_l⟩ = √((l+1)ξ)|φ_{l+1}⟩`, with `A*` the adjoint of `A`. The
//! Hamiltonian is assembled as `ħω(A*A + ξ/2·I)`, which is exact on every
//! level because `A*A` never reaches past the top state. Identities that
//! involve `AA*` (and hence the commutators) only hold on levels `l < N`;
//! the top level is a truncation boundary.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bicomplex::BiComplex;
use crate::fock::{BiOperator, FockError, Ket};
use crate::hyperbolic::{dplus_func, Hyperbolic, RealFn};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OscillatorError {
    #[error("invalid oscillator parameters: {0}")]
    InvalidParams(String),
    #[error("truncation N = {0} is too small, need N >= 1")]
    TruncationTooSmall(usize),
    #[error("level {index} exceeds truncation N = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("both idempotent coefficients vanish; there is no eigenket")]
    BothZero,
    #[error("rescaling must satisfy |alpha1| = |alpha2| and |beta1| = |beta2|")]
    ConstraintViolated,
    #[error("rescaling factors must be non-zero")]
    ZeroScale,
    #[error("rescaled xi = {0} leaves the positive cone")]
    LeavesPositiveCone(Hyperbolic),
    #[error(transparent)]
    Fock(#[from] FockError),
}

/// Mass, frequency, action scale and the hyperbolic deformation `ξ` of the
/// canonical commutator `[X, P] = iħξ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
    pub xi: Hyperbolic,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self {
            m: 1.0,
            omega: 1.0,
            hbar: 1.0,
            xi: Hyperbolic::ONE,
        }
    }
}

impl OscillatorParams {
    pub fn new(m: f64, omega: f64, hbar: f64, xi: Hyperbolic) -> Result<Self, OscillatorError> {
        let p = Self { m, omega, hbar, xi };
        p.validate()?;
        Ok(p)
    }

    /// Unit mass, frequency and `ħ` with the given `ξ = ξ₁e₁ + ξ₂e₂`.
    pub fn with_xi(xi1: f64, xi2: f64) -> Result<Self, OscillatorError> {
        Self::new(1.0, 1.0, 1.0, Hyperbolic::new(xi1, xi2))
    }

    pub fn validate(&self) -> Result<(), OscillatorError> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(OscillatorError::InvalidParams(format!("{name} must be positive and finite, got {v}")))
            }
        };
        positive("m", self.m)?;
        positive("omega", self.omega)?;
        positive("hbar", self.hbar)?;
        positive("xi1", self.xi.x1)?;
        positive("xi2", self.xi.x2)?;
        Ok(())
    }

    pub fn hbar_omega(&self) -> f64 {
        self.hbar * self.omega
    }

    /// `ħω[(l+½)ξ₁e₁ + (l′+½)ξ₂e₂]`
    pub fn energy(&self, l: usize, lprime: usize) -> Hyperbolic {
        Hyperbolic::new(
            (l as f64 + 0.5) * self.xi.x1,
            (lprime as f64 + 0.5) * self.xi.x2,
        )
        .scale(self.hbar_omega())
    }
}

/// One eigenpair of the mixed-index family `w₁e₁|φ_l⟩ + w₂e₂|φ_{l′}⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub l: usize,
    pub lprime: usize,
    pub energy: Hyperbolic,
    pub ket: Ket,
}

impl SpectrumEntry {
    pub fn norm(&self) -> f64 {
        self.ket.norm()
    }
}

/// `A`, `A*`, `X`, `P` and `H` for one parameter set and truncation.
#[derive(Clone, Debug)]
pub struct Oscillator {
    params: OscillatorParams,
    n: usize,
    a: BiOperator,
    astar: BiOperator,
    h: BiOperator,
    x: BiOperator,
    p: BiOperator,
}

impl Oscillator {
    pub fn new(n: usize, params: OscillatorParams) -> Result<Self, OscillatorError> {
        let (a, astar) = build_ladder(n, &params)?;
        let h = hamiltonian_from_ladder(&a, &astar, &params)?;
        let (x, p) = position_momentum_from_ladder(&a, &astar, &params)?;
        Ok(Self { params, n, a, astar, h, x, p })
    }

    pub fn params(&self) -> &OscillatorParams {
        &self.params
    }

    /// Truncation level `N`; the module has dimension `N + 1`.
    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn annihilation(&self) -> &BiOperator {
        &self.a
    }

    pub fn creation(&self) -> &BiOperator {
        &self.astar
    }

    pub fn hamiltonian(&self) -> &BiOperator {
        &self.h
    }

    pub fn position(&self) -> &BiOperator {
        &self.x
    }

    pub fn momentum(&self) -> &BiOperator {
        &self.p
    }

    pub fn basis(&self, l: usize) -> Result<Ket, OscillatorError> {
        if l > self.n {
            return Err(OscillatorError::IndexOutOfRange { index: l, n: self.n });
        }
        Ok(Ket::basis(self.dim(), l)?)
    }

    pub fn eigenket(&self, l: usize, lprime: usize, w1: Complex64, w2: Complex64) -> Result<SpectrumEntry, OscillatorError> {
        for idx in [l, lprime] {
            if idx > self.n {
                return Err(OscillatorError::IndexOutOfRange { index: idx, n: self.n });
            }
        }
        let zero = Complex64::new(0.0, 0.0);
        if w1 == zero && w2 == zero {
            return Err(OscillatorError::BothZero);
        }
        let mut coords = vec![BiComplex::ZERO; self.dim()];
        coords[l] += BiComplex::from_idempotent(w1, zero);
        coords[lprime] += BiComplex::from_idempotent(zero, w2);
        Ok(SpectrumEntry {
            l,
            lprime,
            energy: self.params.energy(l, lprime),
            ket: Ket::from_coords(coords),
        })
    }

    /// Largest coordinate modulus of `Hψ − λψ`.
    pub fn eigen_residual(&self, psi: &Ket, lambda: Hyperbolic) -> Result<f64, OscillatorError> {
        let hpsi = self.h.apply(psi)?;
        let lpsi = psi.scale(lambda.to_bicomplex());
        Ok(hpsi.max_abs_diff(&lpsi)?)
    }

    /// Residuals of `(Aφ,Aφ) − (λ/ħω − ξ/2)(φ,φ)` and
    /// `(A*φ,A*φ) − (λ/ħω + ξ/2)(φ,φ)` for an eigenket `φ` with eigenvalue `λ`.
    pub fn ladder_norm_residuals(&self, phi: &Ket, lambda: Hyperbolic) -> Result<(BiComplex, BiComplex), OscillatorError> {
        let norm = phi.scalar_product(phi)?;
        let reduced = lambda.scale(1.0 / self.params.hbar_omega());
        let half_xi = self.params.xi.scale(0.5);
        let aphi = self.a.apply(phi)?;
        let sphi = self.astar.apply(phi)?;
        let ra = aphi.scalar_product(&aphi)? - (reduced - half_xi).to_bicomplex() * norm;
        let rs = sphi.scalar_product(&sphi)? - (reduced + half_xi).to_bicomplex() * norm;
        Ok((ra, rs))
    }

    /// `(ψ, [X,P]ψ)·(iħ(ψ,ψ))⁻¹`: the deformation parameter as seen through
    /// one ket. For self-adjoint `X`, `P` it must come out hyperbolic.
    pub fn extract_xi(&self, psi: &Ket) -> Result<BiComplex, OscillatorError> {
        let comm = self.x.commutator(&self.p)?;
        let num = psi.scalar_product(&comm.apply(psi)?)?;
        let den = BiComplex::I1.scale(self.params.hbar) * psi.scalar_product(psi)?;
        let inv = den
            .inverse()
            .map_err(|e| OscillatorError::InvalidParams(format!("ket not normalizable: {e}")))?;
        Ok(num * inv)
    }

    /// `(Xψ, Pψ) − (Pψ, Xψ)`, the self-adjointness route to `(ψ, [X,P]ψ)`.
    pub fn commutator_expectation_via_adjoint(&self, psi: &Ket) -> Result<BiComplex, OscillatorError> {
        let xpsi = self.x.apply(psi)?;
        let ppsi = self.p.apply(psi)?;
        Ok(xpsi.scalar_product(&ppsi)? - ppsi.scalar_product(&xpsi)?)
    }
}

fn check_truncation(n: usize, p: &OscillatorParams) -> Result<(), OscillatorError> {
    p.validate()?;
    if n < 1 {
        return Err(OscillatorError::TruncationTooSmall(n));
    }
    Ok(())
}

/// `(A, A*)` on the module of dimension `n + 1`.
pub fn build_ladder(n: usize, p: &OscillatorParams) -> Result<(BiOperator, BiOperator), OscillatorError> {
    check_truncation(n, p)?;
    let mut a = BiOperator::zero(n + 1);
    for l in 0..n {
        let amp = dplus_func(p.xi.scale((l + 1) as f64), RealFn::Sqrt)
            .map_err(|e| OscillatorError::InvalidParams(e.to_string()))?;
        a.set(l, l + 1, amp.to_bicomplex());
    }
    let astar = a.adjoint();
    Ok((a, astar))
}

fn hamiltonian_from_ladder(a: &BiOperator, astar: &BiOperator, p: &OscillatorParams) -> Result<BiOperator, OscillatorError> {
    let half_xi = BiOperator::scalar(a.dim(), p.xi.scale(0.5).to_bicomplex());
    Ok(astar
        .compose(a)?
        .try_add(&half_xi)?
        .scale(BiComplex::real(p.hbar_omega())))
}

fn position_momentum_from_ladder(a: &BiOperator, astar: &BiOperator, p: &OscillatorParams) -> Result<(BiOperator, BiOperator), OscillatorError> {
    let x_scale = (p.hbar / (2.0 * p.m * p.omega)).sqrt();
    let p_scale = (p.hbar * p.m * p.omega / 2.0).sqrt();
    let x = a.try_add(astar)?.scale(BiComplex::real(x_scale));
    let mom = a.try_sub(astar)?.scale(-BiComplex::I1.scale(p_scale));
    Ok((x, mom))
}

/// `H = ħω(A*A + ξ/2·I)`.
pub fn build_hamiltonian(n: usize, p: &OscillatorParams) -> Result<BiOperator, OscillatorError> {
    let (a, astar) = build_ladder(n, p)?;
    hamiltonian_from_ladder(&a, &astar, p)
}

/// `X = √(ħ/2mω)(A + A*)`, `P = −i₁√(ħmω/2)(A − A*)`.
pub fn build_position_momentum(n: usize, p: &OscillatorParams) -> Result<(BiOperator, BiOperator), OscillatorError> {
    let (a, astar) = build_ladder(n, p)?;
    position_momentum_from_ladder(&a, &astar, p)
}

pub fn eigenket(l: usize, lprime: usize, w1: Complex64, w2: Complex64, n: usize, p: &OscillatorParams) -> Result<SpectrumEntry, OscillatorError> {
    Oscillator::new(n, *p)?.eigenket(l, lprime, w1, w2)
}

pub fn lemma1_check(phi: &Ket, lambda: Hyperbolic, n: usize, p: &OscillatorParams) -> Result<(BiComplex, BiComplex), OscillatorError> {
    let osc = Oscillator::new(n, *p)?;
    if phi.dim() != osc.dim() {
        return Err(FockError::DimensionMismatch { left: phi.dim(), right: osc.dim() }.into());
    }
    osc.ladder_norm_residuals(phi, lambda)
}

/// Deformation parameter after `X = αX′`, `P = βP′` with
/// `α = α₁e₁ + α₂e₂`, `β = β₁e₁ + β₂e₂`: `ξ′ = (ξ₁/α₁β₁)e₁ + (ξ₂/α₂β₂)e₂`.
///
/// The Hamiltonian keeps its form only when `|α₁| = |α₂|` and `|β₁| = |β₂|`,
/// so the ratio `|ξ₂′/ξ₁′|` is invariant.
pub fn rescale_xi(xi: Hyperbolic, alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> Result<Hyperbolic, OscillatorError> {
    if [alpha1, alpha2, beta1, beta2].contains(&0.0) {
        return Err(OscillatorError::ZeroScale);
    }
    let same = |a: f64, b: f64| (a.abs() - b.abs()).abs() <= 1e-12 * a.abs().max(b.abs());
    if !same(alpha1, alpha2) || !same(beta1, beta2) {
        return Err(OscillatorError::ConstraintViolated);
    }
    let out = Hyperbolic::new(xi.x1 / (alpha1 * beta1), xi.x2 / (alpha2 * beta2));
    if !out.in_d_plus_strict() {
        return Err(OscillatorError::LeavesPositiveCone(out));
    }
    Ok(out)
}

/// Whether two eigenvalues differ by a null-cone element, the case where
/// orthogonality of the corresponding eigenkets is not guaranteed.
pub fn eigenvalue_gap_in_null_cone(a: Hyperbolic, b: Hyperbolic, tol: &Tolerance) -> bool {
    (a - b).is_null_cone(tol)
}
