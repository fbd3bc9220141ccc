//! Eigenfunctions in the Gaussian-polynomial module: orthonormality, the
//! position-space equation, and a CSV sample table on stdout.
//!
//! cargo run --example wavefunctions > samples.csv

use bicomplex_qho::wavefn::{self, ms_scalar_product, ms_scalar_product_quadrature};
use bicomplex_qho::OscillatorParams;
use num_complex::Complex64;

fn main() {
    let p = OscillatorParams::with_xi(1.0, 2.0).unwrap();
    let phi: Vec<_> = (0..4).map(|l| wavefn::phi_l(l, &p).unwrap()).collect();

    eprintln!("Gram matrix (analytic moments):");
    for a in &phi {
        let row: Vec<String> = phi.iter().map(|b| format!("{:.1e}", ms_scalar_product(a, b).modulus())).collect();
        eprintln!("  {}", row.join("  "));
    }
    let q = ms_scalar_product_quadrature(&phi[3], &phi[3], 1e-13);
    eprintln!("(φ3, φ3) by quadrature: {q}");
    for l in 0..4 {
        eprintln!("ODE residual l={l}: {:.2e}", wavefn::hamiltonian_residual(l, &p).unwrap());
    }

    let one = Complex64::new(1.0, 0.0);
    let mixed = wavefn::phi_mixed(1, 2, one, one, &p).unwrap();
    let other = wavefn::phi_mixed(1, 3, one, one, &p).unwrap();
    eprintln!("null-cone overlap: {}", ms_scalar_product(&mixed, &other));
    eprintln!("value at x = 0.3: {}", mixed.eval(0.3));

    println!("x,u1_re,u2_re,real_re,j_re");
    for s in wavefn::sample(&mixed, -4.0, 4.0, 17) {
        println!("{:?},{:?},{:?},{:?},{:?}", s.x, s.u1.re, s.u2.re, s.real.re, s.j.re);
    }
}
