//! Ring arithmetic in both representations, zero divisors and inverses.
//!
//! cargo run --example bicomplex_arithmetic

use bicomplex_qho::{BiComplex, Encoding, Tolerance};
use num_complex::Complex64;

fn main() {
    let (e1, e2) = (BiComplex::E1, BiComplex::E2);
    println!("e1 = {e1}, e2 = {e2}");
    println!("e1*e1 = {}   e1*e2 = {}   e1+e2 = {}", e1 * e1, e1 * e2, e1 + e2);
    println!("i1*i2 = {}   i1*j = {}   i2*j = {}", BiComplex::I1 * BiComplex::I2, BiComplex::I1 * BiComplex::J, BiComplex::I2 * BiComplex::J);

    let w = BiComplex::new(1.0, 2.0, -0.5, 0.25);
    let (z1, z2) = w.to_idempotent();
    println!("\nw = {w}");
    println!("idempotent form: z1 = {z1}, z2 = {z2}");
    println!("rebuilt: {}", BiComplex::from_idempotent(z1, z2));
    println!("w†  = {}", w.conj_dagger());
    println!("w·w† = {} (both idempotent parts real and >= 0)", w * w.conj_dagger());
    println!("|w| = {:.6}, |w·w| = {:.6} <= √2|w|² = {:.6}", w.modulus(), (w * w).modulus(), 2f64.sqrt() * w.modulus_sqr());

    let inv = w.inverse().expect("w is not a zero divisor");
    println!("w⁻¹ = {inv}, w·w⁻¹ = {}", w * inv);

    let tol = Tolerance::default();
    let zd = BiComplex::from_idempotent(Complex64::new(3.0, 1.0), Complex64::new(0.0, 0.0));
    println!("\n{zd} is in the null cone: {}", zd.is_null_cone(&tol));
    println!("its inverse: {:?}", zd.inverse());
    println!("zero: null cone {}, inverse {:?}", BiComplex::ZERO.is_null_cone(&tol), BiComplex::ZERO.inverse());

    println!("\ncanonical JSON:  {}", w.to_json(Encoding::Canonical));
    println!("idempotent JSON: {}", w.to_json(Encoding::Idempotent));
    let back: BiComplex = serde_json::from_value(w.to_json(Encoding::Idempotent)).unwrap();
    println!("parsed back: {back}");
}
