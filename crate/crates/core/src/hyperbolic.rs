//! Hyperbolic numbers `x₁e₁ + x₂e₂` with real idempotent components, and
//! the componentwise functional calculus on the positive cone D⁺.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bicomplex::{BiComplex, Idempotent};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DomainError {
    #[error("{func} requires a positive argument, got component {component} = {value}")]
    NotPositive {
        func: RealFn,
        component: u8,
        value: f64,
    },
    #[error("inv_nth_root needs n >= 1")]
    ZeroRootIndex,
}

/// Element of D, stored in the idempotent basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Hyperbolic {
    pub x1: f64,
    pub x2: f64,
}

impl Hyperbolic {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 1.0);
    pub const E1: Self = Self::new(1.0, 0.0);
    pub const E2: Self = Self::new(0.0, 1.0);

    pub const fn new(x1: f64, x2: f64) -> Self {
        Self { x1, x2 }
    }

    pub const fn splat(x: f64) -> Self {
        Self::new(x, x)
    }

    /// Reads the real parts of the idempotent components; `None` if either
    /// imaginary part is not negligible.
    pub fn from_bicomplex(w: BiComplex, tol: &Tolerance) -> Option<Self> {
        w.is_hyperbolic(tol).then(|| {
            let (z1, z2) = w.to_idempotent();
            Self::new(z1.re, z2.re)
        })
    }

    pub fn to_bicomplex(self) -> BiComplex {
        BiComplex::from_idempotent(Complex64::new(self.x1, 0.0), Complex64::new(self.x2, 0.0))
    }

    /// Non-strict membership in D⁺.
    pub fn in_d_plus(self) -> bool {
        self.x1 >= 0.0 && self.x2 >= 0.0
    }

    pub fn in_d_plus_strict(self) -> bool {
        self.x1 > 0.0 && self.x2 > 0.0
    }

    pub fn is_null_cone(self, tol: &Tolerance) -> bool {
        self.to_bicomplex().is_null_cone(tol)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.x1 * s, self.x2 * s)
    }

    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        Self::new(f(self.x1), f(self.x2))
    }

    pub fn component(self, k: Idempotent) -> f64 {
        match k {
            Idempotent::One => self.x1,
            Idempotent::Two => self.x2,
        }
    }

    pub fn modulus(self) -> f64 {
        ((self.x1 * self.x1 + self.x2 * self.x2) / 2.0).sqrt()
    }

    /// Applies a whitelisted real function componentwise.
    pub fn apply(self, f: RealFn) -> Result<Self, DomainError> {
        dplus_func(self, f)
    }
}

/// Real functions that lift to D by acting on each idempotent component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RealFn {
    Exp,
    /// Defined on the closed cone: `√0 = 0` so that null-cone scalar
    /// products still have a square root.
    Sqrt,
    /// `x^(−1/n)`, strictly positive arguments only.
    InvNthRoot(u32),
    /// `x^p`. Integer `p ≥ 0` accepts any argument, negative integers need
    /// non-zero components, fractional `p` needs `x ≥ 0` (`x > 0` if `p < 0`).
    Pow(f64),
}

impl fmt::Display for RealFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealFn::Exp => f.write_str("exp"),
            RealFn::Sqrt => f.write_str("sqrt"),
            RealFn::InvNthRoot(n) => write!(f, "inv_nth_root({n})"),
            RealFn::Pow(p) => write!(f, "pow({p})"),
        }
    }
}

impl RealFn {
    fn check(self, component: u8, x: f64) -> Result<(), DomainError> {
        let ok = match self {
            RealFn::Exp => true,
            RealFn::Sqrt => x >= 0.0,
            RealFn::InvNthRoot(_) => x > 0.0,
            RealFn::Pow(p) if p.fract() == 0.0 => p >= 0.0 || x != 0.0,
            RealFn::Pow(p) => {
                if p > 0.0 {
                    x >= 0.0
                } else {
                    x > 0.0
                }
            }
        };
        if ok {
            Ok(())
        } else {
            Err(DomainError::NotPositive {
                func: self,
                component,
                value: x,
            })
        }
    }

    fn eval(self, x: f64) -> f64 {
        match self {
            RealFn::Exp => x.exp(),
            RealFn::Sqrt => x.sqrt(),
            RealFn::InvNthRoot(2) => x.sqrt().recip(),
            RealFn::InvNthRoot(4) => x.sqrt().sqrt().recip(),
            RealFn::InvNthRoot(n) => x.powf(-1.0 / n as f64),
            RealFn::Pow(p) if p.fract() == 0.0 && p.abs() <= i32::MAX as f64 => x.powi(p as i32),
            RealFn::Pow(p) => x.powf(p),
        }
    }
}

/// `f(x₁)e₁ + f(x₂)e₂`.
pub fn dplus_func(h: Hyperbolic, f: RealFn) -> Result<Hyperbolic, DomainError> {
    if f == RealFn::InvNthRoot(0) {
        return Err(DomainError::ZeroRootIndex);
    }
    f.check(1, h.x1)?;
    f.check(2, h.x2)?;
    Ok(h.map(|x| f.eval(x)))
}

impl Add for Hyperbolic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl Sub for Hyperbolic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x1 - o.x1, self.x2 - o.x2)
    }
}

impl Mul for Hyperbolic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.x1 * o.x1, self.x2 * o.x2)
    }
}

impl Mul<f64> for Hyperbolic {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Neg for Hyperbolic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x1, -self.x2)
    }
}

impl From<Hyperbolic> for BiComplex {
    fn from(h: Hyperbolic) -> Self {
        h.to_bicomplex()
    }
}

impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.x2.is_sign_negative() { '-' } else { '+' };
        write!(f, "{}·e1 {} {}·e2", self.x1, sign, self.x2.abs())
    }
}
