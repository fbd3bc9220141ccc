//! Eigenkets with distinct eigenvalues that are not orthogonal, because the
//! eigenvalue difference is a zero divisor.
//!
//! cargo run --example null_cone_counterexample

use bicomplex_qho::oscillator::eigenvalue_gap_in_null_cone;
use bicomplex_qho::{Oscillator, OscillatorParams, Tolerance};
use num_complex::Complex64;

fn main() {
    let p = OscillatorParams::with_xi(1.0, 2.0).unwrap();
    let osc = Oscillator::new(8, p).unwrap();
    let one = Complex64::new(1.0, 0.0);
    let a = osc.eigenket(1, 2, one, one).unwrap();
    let b = osc.eigenket(1, 3, one, one).unwrap();
    let tol = Tolerance::default();

    println!("ψ = e1|φ1> + e2|φ2>, λ = {}", a.energy);
    println!("χ = e1|φ1> + e2|φ3>, μ = {}", b.energy);
    println!("λ - μ = {} in null cone: {}", a.energy - b.energy, eigenvalue_gap_in_null_cone(a.energy, b.energy, &tol));
    println!("(ψ, χ) = {}", a.ket.scalar_product(&b.ket).unwrap());

    let c = osc.eigenket(2, 3, one, one).unwrap();
    println!("\nψ' = e1|φ2> + e2|φ3>, gap to ψ in null cone: {}", eigenvalue_gap_in_null_cone(a.energy, c.energy, &tol));
    println!("(ψ, ψ') = {}", a.ket.scalar_product(&c.ket).unwrap());
}
