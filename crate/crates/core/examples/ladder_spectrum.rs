//! Truncated ladder operators, the mixed spectrum and the rescaling freedom.
//!
//! cargo run --example ladder_spectrum

use bicomplex_qho::oscillator::rescale_xi;
use bicomplex_qho::verify::ladder_commutator_residuals;
use bicomplex_qho::{Hyperbolic, Oscillator, OscillatorParams};
use num_complex::Complex64;

fn main() {
    let params = OscillatorParams::with_xi(1.0, 2.0).unwrap();
    let osc = Oscillator::new(32, params).unwrap();
    let [aa, ha, hs] = ladder_commutator_residuals(&osc, osc.truncation()).unwrap();
    println!("N = {}, xi = {}", osc.truncation(), params.xi);
    println!("max residuals: [A,A*]-xi {aa:.2e}, [H,A]+hwxiA {ha:.2e}, [H,A*]-hwxiA* {hs:.2e}");

    println!("\n l  l'  E1      E2      |Hψ-λψ|");
    let one = Complex64::new(1.0, 0.0);
    for l in 0..3 {
        for lp in 0..3 {
            let e = osc.eigenket(l, lp, one, one).unwrap();
            let res = osc.eigen_residual(&e.ket, e.energy).unwrap();
            println!("{l:>2} {lp:>3}  {:<7} {:<7} {res:.1e}", e.energy.x1, e.energy.x2);
        }
    }

    let ground = osc.eigenket(0, 0, one, one).unwrap();
    let (ra, rs) = osc.ladder_norm_residuals(&ground.ket, ground.energy).unwrap();
    println!("\nground state: (Aφ,Aφ) residual {ra}, (A*φ,A*φ) residual {rs}");

    let xi = Hyperbolic::new(1.0, 2.0);
    println!("\nrescale xi = {xi} by (α, β) = (0.5, 0.5, 2, 2): {}", rescale_xi(xi, 0.5, 0.5, 2.0, 2.0).unwrap());
    println!("rescale by (1, -1, 1, 1): {}", rescale_xi(xi, 1.0, -1.0, 1.0, 1.0).unwrap_err());
    println!("rescale by (1, 2, 1, 1): {}", rescale_xi(xi, 1.0, 2.0, 1.0, 1.0).unwrap_err());
}
