//! Kets and operators over the bicomplex numbers on a small basis.
//!
//! cargo run --example fock_kets

use bicomplex_qho::{BiComplex, BiOperator, Idempotent, Ket, Tolerance};

fn main() {
    let dim = 4;
    let psi = Ket::from_coords(vec![
        BiComplex::new(1.0, 0.5, 0.0, 0.0),
        BiComplex::new(0.0, 0.0, 1.0, 0.0),
        BiComplex::E1,
        BiComplex::ZERO,
    ]);
    let chi = Ket::basis(dim, 2).unwrap();

    println!("(psi, psi) = {}", psi.scalar_product(&psi).unwrap());
    println!("  as hyperbolic: {}", psi.self_product());
    println!("||psi|| = {:.6}", psi.norm());
    println!("(chi, psi) = {} (recovers coordinate 2)", chi.scalar_product(&psi).unwrap());

    for (i, k) in Idempotent::BOTH.into_iter().enumerate() {
        let coords: Vec<String> = psi.projection_coords(k).iter().map(|z| format!("{z:.3}")).collect();
        println!("P{}(psi) = [{}]", i + 1, coords.join(", "));
    }

    let tol = Tolerance::default();
    let null = Ket::basis(dim, 0).unwrap().scale(BiComplex::E1);
    println!("\ne1|0> in null cone: {}, norm {:.6}", null.in_null_cone(&tol), null.norm());

    let op = BiOperator::from_fn(dim, |r, c| BiComplex::new((r + c) as f64, (r as f64) - (c as f64), 0.5, 0.0));
    let adj = op.adjoint();
    let lhs = psi.scalar_product(&op.apply(&chi).unwrap()).unwrap();
    let rhs = adj.apply(&psi).unwrap().scalar_product(&chi).unwrap();
    println!("(psi, A chi) = {lhs}");
    println!("(A† psi, chi) = {rhs}");
    println!("A self-adjoint: {}", op.is_self_adjoint(&tol));
    let herm = op.try_add(&adj).unwrap();
    println!("A + A† self-adjoint: {}", herm.is_self_adjoint(&tol));

    println!("\nket JSON: {}", serde_json::to_string(&chi).unwrap());
}
