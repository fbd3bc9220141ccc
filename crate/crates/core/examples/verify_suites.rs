//! Runs the identity suites and prints a residual table.
//!
//! cargo run --release --example verify_suites

use bicomplex_qho::verify::{run, Suite, VerifyConfig};
use bicomplex_qho::OscillatorParams;

fn main() {
    let cfg = VerifyConfig {
        params: OscillatorParams::with_xi(0.5, 3.0).unwrap(),
        ..Default::default()
    };
    let report = run(Suite::All, &cfg).expect("valid configuration");
    for r in &report.records {
        let mark = if r.pass { "ok  " } else { "FAIL" };
        println!("{mark} {:<11} {:<52} {:>10.2e} (threshold {:.0e})", r.suite, r.check, r.worst_residual, r.threshold);
    }
    println!("{} checks, all pass: {}", report.records.len(), report.all_pass);
}
