//! Exact Hermite coefficients and their hyperbolic lift.
//!
//! cargo run --example hyperbolic_hermite

use bicomplex_qho::wavefn::{hermite_coeffs, hermite_eval, hermite_hyperbolic_eval, MAX_ORDER};
use bicomplex_qho::{poly_eval, Hyperbolic};

fn main() {
    for l in 0..=5 {
        let h = hermite_coeffs(l).unwrap();
        let c: Vec<String> = h.coeffs.iter().map(|c| c.to_string()).collect();
        println!("H_{l}: [{}]", c.join(", "));
    }
    let top = hermite_coeffs(MAX_ORDER).unwrap();
    println!("H_{MAX_ORDER} constant term: {}", top.coeffs[0]);
    println!("H_61: {}", hermite_coeffs(MAX_ORDER + 1).unwrap_err());

    let theta = Hyperbolic::new(0.5, -1.25);
    println!("\nθ = {theta}");
    for l in [2, 3, 7] {
        let lifted = hermite_hyperbolic_eval(l, theta);
        let via_poly = poly_eval(&hermite_coeffs(l).unwrap().coeffs_complex(), theta.to_bicomplex());
        println!("H_{l}(θ) = {lifted}  (polynomial lift {via_poly})");
    }

    let t = 0.8;
    let same = hermite_hyperbolic_eval(6, Hyperbolic::splat(t));
    println!("\nθ1 = θ2 = {t}: H_6 = {same}, real H_6 = {}", hermite_eval(6, t));
}
