//! Physicists' Hermite polynomials with exact integer coefficients and their
//! hyperbolic lift `H_l(θ) = H_l(θ₁)e₁ + H_l(θ₂)e₂`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::WavefnError;
use crate::hyperbolic::Hyperbolic;

/// Highest order for which coefficients are produced.
///
/// The constant term of `H_60` is about 3·10⁴⁹, well past `i128`, so the
/// coefficients are kept as big integers and rounded to `f64` only when
/// evaluated. Every coefficient up to this order fits comfortably in `f64`
/// range (largest magnitude below 10⁶⁰).
pub const MAX_ORDER: usize = 60;

/// `H_l` as ascending integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitePoly {
    pub l: usize,
    pub coeffs: Vec<BigInt>,
}

impl HermitePoly {
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().expect("finite below MAX_ORDER"))
            .collect()
    }

    pub fn coeffs_complex(&self) -> Vec<Complex64> {
        self.coeffs_f64().into_iter().map(|c| Complex64::new(c, 0.0)).collect()
    }

    /// Horner evaluation of the rounded coefficients.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs_f64().iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn eval_hyperbolic(&self, theta: Hyperbolic) -> Hyperbolic {
        theta.map(|t| self.eval(t))
    }
}

/// Coefficients from `H_{l+1} = 2y·H_l − 2l·H_{l−1}`, `H₀ = 1`, `H₁ = 2y`.
pub fn hermite_coeffs(l: usize) -> Result<HermitePoly, WavefnError> {
    if l > MAX_ORDER {
        return Err(WavefnError::OrderTooLarge { l, max: MAX_ORDER });
    }
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    if l == 0 {
        return Ok(HermitePoly { l, coeffs: prev });
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(2)];
    for k in 1..l {
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        let two_k = BigInt::from(2 * k);
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c * &two_k;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(HermitePoly { l, coeffs: cur })
}

/// `H_l(t)` by the floating-point three-term recurrence.
pub fn hermite_eval(l: usize, t: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * t);
    if l == 0 {
        return prev;
    }
    for k in 1..l {
        let next = 2.0 * t * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Hyperbolic Hermite polynomial, componentwise in the idempotent basis.
pub fn hermite_hyperbolic_eval(l: usize, theta: Hyperbolic) -> Hyperbolic {
    theta.map(|t| hermite_eval(l, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::poly_eval;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Explicit-sum oracle: c_{l−2k} = (−1)^k l! 2^{l−2k} / (k! (l−2k)!).
    fn explicit(l: usize) -> Vec<BigInt> {
        let fact = |n: usize| (1..=n).fold(BigInt::from(1), |acc, i| acc * i);
        let mut out = vec![BigInt::zero(); l + 1];
        for k in 0..=l / 2 {
            let mag = fact(l) * (BigInt::from(1) << (l - 2 * k)) / (fact(k) * fact(l - 2 * k));
            out[l - 2 * k] = if k % 2 == 0 { mag } else { -mag };
        }
        out
    }

    #[test]
    fn low_orders() {
        assert_eq!(hermite_coeffs(0).unwrap().coeffs, ints(&[1]));
        assert_eq!(hermite_coeffs(1).unwrap().coeffs, ints(&[0, 2]));
        assert_eq!(hermite_coeffs(2).unwrap().coeffs, ints(&[-2, 0, 4]));
        assert_eq!(hermite_coeffs(3).unwrap().coeffs, ints(&[0, -12, 0, 8]));
    }

    #[test]
    fn recurrence_matches_explicit_sum_up_to_cap() {
        for l in 0..=MAX_ORDER {
            assert_eq!(hermite_coeffs(l).unwrap().coeffs, explicit(l), "order {l}");
        }
        assert_eq!(
            hermite_coeffs(MAX_ORDER + 1).unwrap_err(),
            WavefnError::OrderTooLarge { l: 61, max: 60 }
        );
    }

    #[test]
    fn hyperbolic_eval_examples() {
        let th = Hyperbolic::new(2.0, 3.0);
        assert_eq!(hermite_hyperbolic_eval(0, th), Hyperbolic::ONE);
        assert_eq!(hermite_hyperbolic_eval(1, th), Hyperbolic::new(4.0, 6.0));
        assert_eq!(hermite_hyperbolic_eval(2, Hyperbolic::ONE), Hyperbolic::splat(2.0));
        for l in 0..12 {
            let v = hermite_hyperbolic_eval(l, Hyperbolic::splat(0.7));
            assert_eq!(v.x1, v.x2);
            assert!((v.x1 - hermite_eval(l, 0.7)).abs() < 1e-12 * (1.0 + v.x1.abs()));
        }
    }

    #[test]
    fn agrees_with_bicomplex_polynomial_lift() {
        let th = Hyperbolic::new(-1.3, 0.4);
        for l in 0..15 {
            let h = hermite_coeffs(l).unwrap();
            let lifted = poly_eval(&h.coeffs_complex(), th.to_bicomplex());
            let direct = hermite_hyperbolic_eval(l, th).to_bicomplex();
            assert!((lifted - direct).modulus() <= 1e-10 * (1.0 + direct.modulus()), "l={l}");
        }
    }
}
