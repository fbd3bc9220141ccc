//! Absolute/relative tolerance shared by every approximate predicate.

use serde::{Deserialize, Serialize};

/// Default relative tolerance used by null-cone and self-adjointness tests.
pub const DEFAULT_REL_EPS: f64 = 1e-12;

/// Pair of absolute and relative epsilons.
///
/// A magnitude `d` is considered negligible against a reference scale `s`
/// when `d <= abs_eps + rel_eps * s`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Tolerance {
    /// Builds a tolerance, returning `None` when either field is negative or NaN.
    pub fn new(abs_eps: f64, rel_eps: f64) -> Option<Self> {
        if abs_eps >= 0.0 && rel_eps >= 0.0 {
            Some(Self { abs_eps, rel_eps })
        } else {
            None
        }
    }

    pub fn relative(rel_eps: f64) -> Option<Self> {
        Self::new(0.0, rel_eps)
    }

    /// Threshold below which a quantity is negligible compared to `scale`.
    #[inline]
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale
    }

    #[inline]
    pub fn negligible(&self, value: f64, scale: f64) -> bool {
        value <= self.threshold(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: 0.0,
            rel_eps: DEFAULT_REL_EPS,
        }
    }
}
