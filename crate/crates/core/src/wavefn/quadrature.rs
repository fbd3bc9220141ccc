//! Adaptive Gauss–Kronrod (7/15) quadrature, used as an independent check
//! on the closed-form Gaussian-moment scalar product.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;

use super::space::{MsFunction, MsTerm};
use crate::bicomplex::{BiComplex, Idempotent};

// QUADPACK qk15 abscissae and weights, as published.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_DEPTH: u32 = 40;

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = half * XGK[i];
        let s = f(center - dx) + f(center + dx);
        kronrod += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adapt(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (value, err) = gk15(f, a, b);
    if err <= tol || depth >= MAX_DEPTH {
        return value;
    }
    let mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1) + adapt(f, mid, b, 0.5 * tol, depth + 1)
}

/// `∫_a^b f` to absolute tolerance `tol` by recursive bisection.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    adapt(&f, a, b, tol, 0)
}

/// Half-width `L` such that every product term of `ū_k v_k` is below
/// `1e−16` in absolute value for `|x| ≥ L`.
fn cutoff(a: &[MsTerm], b: &[MsTerm]) -> f64 {
    let bound = |l: f64| -> f64 {
        let mut total = 0.0;
        for s in a {
            for t in b {
                let n = (s.n + t.n) as i32;
                total += s.c.norm() * t.c.norm() * l.powi(n) * (-(s.alpha + t.alpha) * l * l).exp();
            }
        }
        total
    };
    let mut l = 1.0;
    // the bound is eventually decreasing; step past its maximum first
    while bound(l) >= 1e-16 || bound(l + 0.5) > bound(l) {
        l += 0.5;
        if l > 1e4 {
            break;
        }
    }
    l
}

/// Numerical counterpart of `ms_scalar_product`, integrating the real and
/// imaginary parts of `ū_k(x)v_k(x)` over `[−L, L]`.
pub fn ms_scalar_product_quadrature(u: &MsFunction, v: &MsFunction, tol: f64) -> BiComplex {
    let comp = |k: Idempotent| -> Complex64 {
        let (a, b) = (u.component(k), v.component(k));
        if a.is_empty() || b.is_empty() {
            return Complex64::new(0.0, 0.0);
        }
        let l = cutoff(a, b);
        let integrand = |x: f64| {
            let ua: Complex64 = a.iter().map(|t| t.eval(x)).sum();
            let vb: Complex64 = b.iter().map(|t| t.eval(x)).sum();
            ua.conj() * vb
        };
        let re = integrate(|x| integrand(x).re, -l, l, tol);
        let im = integrate(|x| integrand(x).im, -l, l, tol);
        Complex64::new(re, im)
    };
    BiComplex::from_idempotent(comp(Idempotent::One), comp(Idempotent::Two))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_low_degree_polynomials() {
        let v = integrate(|x| 3.0 * x * x - 2.0 * x + 1.0, -1.0, 2.0, 1e-14);
        // [x³ − x² + x] from −1 to 2 = (8−4+2) − (−1−1−1) = 9
        assert!((v - 9.0).abs() < 1e-13);
    }

    #[test]
    fn gaussian_integral() {
        let v = integrate(|x| (-x * x).exp(), -10.0, 10.0, 1e-14);
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn oscillatory_integrand() {
        // ∫_0^π sin(20x)² dx = π/2
        let v = integrate(|x| (20.0 * x).sin().powi(2), 0.0, std::f64::consts::PI, 1e-13);
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }
}
