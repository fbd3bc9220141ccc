//! The function module M_S: bicomplex functions `u = e₁u₁ + e₂u₂` whose
//! components are finite sums of `c·xⁿ·exp(−αx²)`.
//!
//! Everything here is closed form: `X`, `P` and `d²/dx²` map terms to
//! terms, and the scalar product reduces to Gaussian moments.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{BiComplex, Idempotent};
use crate::oscillator::OscillatorParams;

/// Relative width tolerance under which two Gaussian exponents are merged.
pub const ALPHA_MERGE_REL: f64 = 1e-14;

/// `c·xⁿ·exp(−αx²)`
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MsTerm {
    pub n: u32,
    pub alpha: f64,
    pub c: Complex64,
}

impl MsTerm {
    pub fn new(n: u32, alpha: f64, c: Complex64) -> Self {
        Self { n, alpha, c }
    }

    /// Unit-coefficient basis function `f_{n,α}`.
    pub fn basis(n: u32, alpha: f64) -> Self {
        Self::new(n, alpha, Complex64::new(1.0, 0.0))
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.c * (x.powi(self.n as i32) * (-self.alpha * x * x).exp())
    }
}

/// `∫ xⁿ exp(−βx²) dx` over the real line: zero for odd `n`, otherwise
/// `(n−1)!!·√(π/β)/(2β)^{n/2}`.
pub fn gaussian_moment(n: u32, beta: f64) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    let mut m = (std::f64::consts::PI / beta).sqrt();
    let mut k = 0;
    while k < n {
        m *= (k + 1) as f64 / (2.0 * beta);
        k += 2;
    }
    m
}

fn canonicalize(mut terms: Vec<MsTerm>) -> Vec<MsTerm> {
    terms.retain(|t| t.c != Complex64::new(0.0, 0.0));
    terms.sort_by(|a, b| a.n.cmp(&b.n).then(a.alpha.total_cmp(&b.alpha)));
    let mut out: Vec<MsTerm> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last)
                if last.n == t.n
                    && (last.alpha - t.alpha).abs() <= ALPHA_MERGE_REL * last.alpha.abs().max(t.alpha.abs()) =>
            {
                last.c += t.c;
            }
            _ => out.push(t),
        }
    }
    out.retain(|t| t.c != Complex64::new(0.0, 0.0));
    out
}

/// Element of M_S in canonical form: per component, terms sorted by
/// `(n, α)`, equal keys merged, exact zeros dropped.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MsFunction {
    comp1: Vec<MsTerm>,
    comp2: Vec<MsTerm>,
}

impl MsFunction {
    pub fn new(comp1: Vec<MsTerm>, comp2: Vec<MsTerm>) -> Self {
        Self {
            comp1: canonicalize(comp1),
            comp2: canonicalize(comp2),
        }
    }

    /// Same complex function in both idempotent components.
    pub fn complex(terms: Vec<MsTerm>) -> Self {
        Self::new(terms.clone(), terms)
    }

    pub fn component(&self, k: Idempotent) -> &[MsTerm] {
        match k {
            Idempotent::One => &self.comp1,
            Idempotent::Two => &self.comp2,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comp1.is_empty() && self.comp2.is_empty()
    }

    fn map_components(&self, f: impl Fn(Idempotent, &[MsTerm]) -> Vec<MsTerm>) -> Self {
        Self::new(f(Idempotent::One, &self.comp1), f(Idempotent::Two, &self.comp2))
    }

    /// `(u₁(x), u₂(x))`
    pub fn eval_components(&self, x: f64) -> (Complex64, Complex64) {
        let sum = |ts: &[MsTerm]| ts.iter().map(|t| t.eval(x)).sum::<Complex64>();
        (sum(&self.comp1), sum(&self.comp2))
    }

    pub fn eval(&self, x: f64) -> BiComplex {
        let (a, b) = self.eval_components(x);
        BiComplex::from_idempotent(a, b)
    }

    /// `w·u`, acting on component k by `P_k(w)`.
    pub fn scale(&self, w: BiComplex) -> Self {
        self.map_components(|k, ts| {
            let s = w.project(k);
            ts.iter().map(|t| MsTerm { c: t.c * s, ..*t }).collect()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.comp1.iter().chain(&other.comp1).copied().collect(),
            self.comp2.iter().chain(&other.comp2).copied().collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-BiComplex::ONE))
    }

    /// `X{f_{n,α}} = f_{n+1,α}`
    pub fn apply_x(&self) -> Self {
        self.map_components(|_, ts| ts.iter().map(|t| MsTerm { n: t.n + 1, ..*t }).collect())
    }

    /// `P = −iħξ d/dx`, so `P{f_{n,α}} = −iħξ(n f_{n−1,α} − 2α f_{n+1,α})`
    /// with ξ acting through its idempotent components.
    pub fn apply_p(&self, p: &OscillatorParams) -> Self {
        self.map_components(|k, ts| {
            let pref = Complex64::new(0.0, -p.hbar * p.xi.component(k));
            derivative_terms(ts)
                .into_iter()
                .map(|t| MsTerm { c: t.c * pref, ..t })
                .collect()
        })
    }

    pub fn derivative(&self) -> Self {
        self.map_components(|_, ts| derivative_terms(ts))
    }

    /// `d²/dx²` termwise:
    /// `n(n−1)f_{n−2} − 2α(2n+1)f_n + 4α²f_{n+2}`.
    pub fn second_derivative(&self) -> Self {
        self.map_components(|_, ts| {
            let mut out = Vec::with_capacity(3 * ts.len());
            for t in ts {
                let n = t.n as f64;
                if t.n >= 2 {
                    out.push(MsTerm::new(t.n - 2, t.alpha, t.c * (n * (n - 1.0))));
                }
                out.push(MsTerm::new(t.n, t.alpha, t.c * (-2.0 * t.alpha * (2.0 * n + 1.0))));
                out.push(MsTerm::new(t.n + 2, t.alpha, t.c * (4.0 * t.alpha * t.alpha)));
            }
            out
        })
    }

    /// `Hu = −(ħξ)²/2m·u″ + ½mω²x²u`, componentwise with `ξ_k`.
    pub fn apply_hamiltonian(&self, p: &OscillatorParams) -> Self {
        let d2 = self.second_derivative();
        let x2 = self.apply_x().apply_x();
        let kinetic = |k: Idempotent| -(p.hbar * p.xi.component(k)).powi(2) / (2.0 * p.m);
        let potential = 0.5 * p.m * p.omega * p.omega;
        let part = |k: Idempotent| -> Vec<MsTerm> {
            let kin = kinetic(k);
            d2.component(k)
                .iter()
                .map(|t| MsTerm { c: t.c * kin, ..*t })
                .chain(x2.component(k).iter().map(|t| MsTerm { c: t.c * potential, ..*t }))
                .collect()
        };
        Self::new(part(Idempotent::One), part(Idempotent::Two))
    }

    pub fn max_coefficient(&self) -> f64 {
        self.comp1
            .iter()
            .chain(&self.comp2)
            .map(|t| t.c.norm())
            .fold(0.0, f64::max)
    }

    /// `(u₁(x) + u₂(x))/2` and `(u₁(x) − u₂(x))/2`, so that
    /// `u(x) = real + j·j_part`.
    pub fn to_unit_j_form(&self, x: f64) -> (Complex64, Complex64) {
        let (a, b) = self.eval_components(x);
        ((a + b) * 0.5, (a - b) * 0.5)
    }
}

fn derivative_terms(ts: &[MsTerm]) -> Vec<MsTerm> {
    let mut out = Vec::with_capacity(2 * ts.len());
    for t in ts {
        if t.n >= 1 {
            out.push(MsTerm::new(t.n - 1, t.alpha, t.c * t.n as f64));
        }
        out.push(MsTerm::new(t.n + 1, t.alpha, t.c * (-2.0 * t.alpha)));
    }
    out
}

/// `(u, v) = ∫ u†v dx = e₁∫ū₁v₁ + e₂∫ū₂v₂`, evaluated through Gaussian moments.
pub fn ms_scalar_product(u: &MsFunction, v: &MsFunction) -> BiComplex {
    let comp = |a: &[MsTerm], b: &[MsTerm]| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for s in a {
            for t in b {
                let n = s.n + t.n;
                if n % 2 == 1 {
                    continue;
                }
                acc += s.c.conj() * t.c * gaussian_moment(n, s.alpha + t.alpha);
            }
        }
        acc
    };
    BiComplex::from_idempotent(comp(&u.comp1, &v.comp1), comp(&u.comp2, &v.comp2))
}

pub fn apply_x(u: &MsFunction) -> MsFunction {
    u.apply_x()
}

pub fn apply_p(u: &MsFunction, p: &OscillatorParams) -> MsFunction {
    u.apply_p(p)
}

pub fn to_unit_j_form(u: &MsFunction, x: f64) -> (Complex64, Complex64) {
    u.to_unit_j_form(x)
}
