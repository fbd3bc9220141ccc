//! Hyperbolic numbers and componentwise functions on the positive cone.
//!
//! cargo run --example hyperbolic_calculus

use bicomplex_qho::{dplus_func, Hyperbolic, RealFn};

fn main() {
    let h = Hyperbolic::new(4.0, 9.0);
    println!("h = {h} (canonical {})", h.to_bicomplex());
    println!("in D+: {}", h.in_d_plus());
    for f in [RealFn::Exp, RealFn::Sqrt, RealFn::InvNthRoot(4), RealFn::Pow(-1.5)] {
        println!("{f:?}(h) = {}", dplus_func(h, f).unwrap());
    }

    let root = dplus_func(h, RealFn::Sqrt).unwrap();
    println!("sqrt(h)² = {}", root * root);

    let outside = Hyperbolic::new(2.0, -3.0);
    println!("\n{outside} in D+: {}", outside.in_d_plus());
    println!("sqrt: {}", dplus_func(outside, RealFn::Sqrt).unwrap_err());
    println!("exp is defined on all of D: {}", dplus_func(outside, RealFn::Exp).unwrap());
}
