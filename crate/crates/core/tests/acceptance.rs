//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so every line is printed under a plain `cargo test`.

use std::f64::consts::{PI, SQRT_2};
use std::process::{Command, ExitCode};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bicomplex_qho::wavefn::{self, MsFunction, MsTerm};
use bicomplex_qho::{BiComplex, BiOperator, Hyperbolic, Ket, Oscillator, OscillatorParams};

const XI_SETTINGS: [(f64, f64); 3] = [(1.0, 1.0), (1.0, 2.0), (0.5, 3.0)];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn below(worst: f64, tol: f64) -> Outcome {
    Outcome {
        pass: worst < tol,
        detail: format!("worst {worst:.3e} < {tol:.0e}"),
    }
}

fn params(x1: f64, x2: f64) -> OscillatorParams {
    OscillatorParams::with_xi(x1, x2).unwrap()
}

fn unit(phase: f64) -> Complex64 {
    Complex64::from_polar(1.0, phase)
}

fn random_bicomplex(r: &mut impl Rng, range: f64) -> BiComplex {
    BiComplex::new(
        r.gen_range(-range..=range),
        r.gen_range(-range..=range),
        r.gen_range(-range..=range),
        r.gen_range(-range..=range),
    )
}

fn ring_identities() -> Outcome {
    use BiComplex as B;
    let checks = [
        (B::E1 * B::E1, B::E1),
        (B::E2 * B::E2, B::E2),
        (B::E1 + B::E2, B::ONE),
        (B::E1 * B::E2, B::ZERO),
        (B::I1 * B::I2, B::J),
        (B::I1 * B::J, -B::I2),
        (B::I2 * B::J, -B::I1),
    ];
    let wrong = checks.iter().filter(|(a, b)| a != b).count();
    Outcome {
        pass: wrong == 0,
        detail: format!("{wrong} of {} identities differ (tolerance 0)", checks.len()),
    }
}

fn modulus_bounds() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(2);
    let (mut tri, mut prod) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let pairs = 100_000;
    for _ in 0..pairs {
        let (s, t) = (random_bicomplex(&mut r, 10.0), random_bicomplex(&mut r, 10.0));
        // modulus recomputed from components: the R⁴ Euclidean norm
        let m = |w: BiComplex| (w.e * w.e + w.i1 * w.i1 + w.i2 * w.i2 + w.j * w.j).sqrt();
        tri = tri.max((m(s + t) - (m(s) + m(t))) / (m(s) + m(t)));
        prod = prod.max((m(s * t) - SQRT_2 * m(s) * m(t)) / (SQRT_2 * m(s) * m(t)));
    }
    let e1 = BiComplex::E1;
    let tight = ((e1 * e1).modulus() - SQRT_2 * e1.modulus() * e1.modulus()).abs();
    Outcome {
        pass: tri <= 1e-12 && prod <= 1e-12 && tight < 1e-15,
        detail: format!("{pairs} pairs, worst relative excess {:.3e} / {:.3e} (slack 1e-12); equality gap at e1 {tight:.1e}", tri, prod),
    }
}

fn block_max(op: &BiOperator, levels: usize) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..levels {
        for c in 0..levels {
            worst = worst.max(op.get(r, c).modulus());
        }
    }
    worst
}

fn ladder_algebra() -> Outcome {
    let p = params(1.0, 2.0);
    let osc = Oscillator::new(32, p).unwrap();
    let (a, s, h) = (osc.annihilation(), osc.creation(), osc.hamiltonian());
    let xi = BiComplex::E1 + BiComplex::E2.scale(2.0);
    let dim = osc.dim();
    let comm = |x: &BiOperator, y: &BiOperator| x.compose(y).unwrap().try_sub(&y.compose(x).unwrap()).unwrap();
    let r1 = comm(a, s).try_sub(&BiOperator::scalar(dim, xi)).unwrap();
    let r2 = comm(h, a).try_add(&a.scale(xi)).unwrap();
    let r3 = comm(h, s).try_sub(&s.scale(xi)).unwrap();
    let worst = [r1, r2, r3].iter().map(|r| block_max(r, 31)).fold(0.0, f64::max);
    below(worst, 1e-12)
}

fn spectrum() -> Outcome {
    let p = params(1.0, 2.0);
    let n = 32;
    let osc = Oscillator::new(n, p).unwrap();
    let h = osc.hamiltonian();
    let mut worst = 0.0f64;
    let mut r = ChaCha8Rng::seed_from_u64(4);
    for l in 0..=n {
        let phi = Ket::basis(n + 1, l).unwrap();
        let lam = BiComplex::from_idempotent(
            Complex64::new((l as f64 + 0.5) * p.xi.x1, 0.0),
            Complex64::new((l as f64 + 0.5) * p.xi.x2, 0.0),
        );
        worst = worst.max(h.apply(&phi).unwrap().max_abs_diff(&phi.scale(lam)).unwrap());
        for lp in 0..=n {
            let (w1, w2) = (unit(r.gen_range(0.0..6.3)), unit(r.gen_range(0.0..6.3)));
            let psi = &Ket::basis(n + 1, l).unwrap().scale(BiComplex::E1 * BiComplex::from_complex(w1))
                + &Ket::basis(n + 1, lp).unwrap().scale(BiComplex::E2 * BiComplex::from_complex(w2));
            let lam = BiComplex::from_idempotent(
                Complex64::new((l as f64 + 0.5) * p.xi.x1, 0.0),
                Complex64::new((lp as f64 + 0.5) * p.xi.x2, 0.0),
            );
            worst = worst.max(h.apply(&psi).unwrap().max_abs_diff(&psi.scale(lam)).unwrap());
        }
    }
    below(worst, 1e-12)
}

fn ladder_norms() -> Outcome {
    let mut worst = 0.0f64;
    let mut r = ChaCha8Rng::seed_from_u64(5);
    let n = 32;
    for (x1, x2) in XI_SETTINGS {
        let p = params(x1, x2);
        let osc = Oscillator::new(n, p).unwrap();
        let xi = p.xi.to_bicomplex();
        let mut kets: Vec<(Ket, BiComplex)> = (0..n)
            .map(|l| {
                let e = osc.eigenket(l, l, unit(0.0), unit(0.0)).unwrap();
                (e.ket, e.energy.to_bicomplex())
            })
            .collect();
        for _ in 0..100 {
            let (l, lp) = (r.gen_range(0..n), r.gen_range(0..n));
            let e = osc.eigenket(l, lp, unit(r.gen_range(0.0..6.3)), unit(r.gen_range(0.0..6.3))).unwrap();
            assert!((e.ket.norm() - 1.0).abs() < 1e-14, "mixed eigenket not normalized");
            kets.push((e.ket, e.energy.to_bicomplex()));
        }
        for (phi, lam) in kets {
            let pp = phi.scalar_product(&phi).unwrap();
            let ap = osc.annihilation().apply(&phi).unwrap();
            let sp = osc.creation().apply(&phi).unwrap();
            let lhs_a = ap.scalar_product(&ap).unwrap() - (lam.scale(1.0 / p.hbar_omega()) - xi.scale(0.5)) * pp;
            let lhs_s = sp.scalar_product(&sp).unwrap() - (lam.scale(1.0 / p.hbar_omega()) + xi.scale(0.5)) * pp;
            worst = worst.max(lhs_a.modulus()).max(lhs_s.modulus());
        }
    }
    below(worst, 1e-12)
}

fn null_cone_counterexample() -> Outcome {
    let n = 8;
    let k = |l: usize, lp: usize| &Ket::basis(n + 1, l).unwrap().scale(BiComplex::E1) + &Ket::basis(n + 1, lp).unwrap().scale(BiComplex::E2);
    let sp = k(1, 2).scalar_product(&k(1, 3)).unwrap();
    let want = [0.5, 0.0, 0.0, 0.5];
    let got = [sp.e, sp.i1, sp.i2, sp.j];
    let worst = got.iter().zip(want).map(|(g, w)| (g - w).abs()).fold(0.0, f64::max);
    let out = below(worst, 1e-14);
    Outcome {
        detail: format!("overlap {sp}; {}", out.detail),
        ..out
    }
}

/// Textbook eigenfunction for m = ω = 1 with ħ replaced by `hbar_eff`.
fn textbook(l: usize, x: f64, hbar_eff: f64) -> f64 {
    let t = x / hbar_eff.sqrt();
    let (mut h0, mut h1) = (1.0, 2.0 * t);
    let h = if l == 0 {
        h0
    } else {
        for k in 1..l {
            let h2 = 2.0 * t * h1 - 2.0 * k as f64 * h0;
            h0 = h1;
            h1 = h2;
        }
        h1
    };
    let fact: f64 = (1..=l).map(|k| k as f64).product();
    (1.0 / (PI * hbar_eff)).powf(0.25) / (2f64.powi(l as i32) * fact).sqrt() * (-t * t / 2.0).exp() * h
}

/// Composite Simpson rule on [−16, 16] applied to textbook components.
fn simpson_overlap(l: usize, m: usize, hbar_eff: f64) -> f64 {
    let (a, b, steps) = (-16.0, 16.0, 8000);
    let h = (b - a) / steps as f64;
    let f = |x: f64| textbook(l, x, hbar_eff) * textbook(m, x, hbar_eff);
    let mut s = f(a) + f(b);
    for i in 1..steps {
        let x = a + h * i as f64;
        s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
    }
    s * h / 3.0
}

fn wavefunction_orthonormality() -> Outcome {
    let p = params(1.0, 2.0);
    let phis: Vec<MsFunction> = (0..=10).map(|l| wavefn::phi_l(l, &p).unwrap()).collect();
    let (mut analytic, mut quad, mut simpson) = (0.0f64, 0.0f64, 0.0f64);
    for l in 0..=10 {
        for m in 0..=10 {
            let sp = wavefn::ms_scalar_product(&phis[l], &phis[m]);
            let delta = if l == m { 1.0 } else { 0.0 };
            analytic = analytic.max((sp - BiComplex::real(delta)).modulus());
            let q = wavefn::ms_scalar_product_quadrature(&phis[l], &phis[m], 1e-13);
            quad = quad.max((q - sp).modulus());
            let s = BiComplex::from_idempotent(
                Complex64::new(simpson_overlap(l, m, p.xi.x1), 0.0),
                Complex64::new(simpson_overlap(l, m, p.xi.x2), 0.0),
            );
            simpson = simpson.max((s - sp).modulus());
        }
    }
    let (a, q) = (below(analytic, 1e-10), below(quad.max(simpson), 1e-9));
    Outcome {
        pass: a.pass && q.pass,
        detail: format!("analytic {}; adaptive and Simpson oracles {}", a.detail, q.detail),
    }
}

fn ode_residual() -> Outcome {
    let mut worst = 0.0f64;
    let mut control = f64::INFINITY;
    for (x1, x2) in XI_SETTINGS {
        let p = params(x1, x2);
        for l in 0..=10 {
            worst = worst.max(wavefn::hamiltonian_residual(l, &p).unwrap());
            let u = wavefn::phi_l(l, &p).unwrap();
            let shifted = Hyperbolic::new((l as f64 + 1.5) * x1, (l as f64 + 1.5) * x2);
            control = control.min(wavefn::hamiltonian_residual_for(&u, shifted, &p));
        }
    }
    Outcome {
        pass: worst < 1e-10 && control > 1e-2,
        detail: format!("worst {worst:.3e} < 1e-10; shifted-energy control min {control:.3e} > 1e-2"),
    }
}

fn xp_termwise() -> Outcome {
    let mut worst = 0.0f64;
    for (x1, x2) in XI_SETTINGS {
        let p = params(x1, x2);
        let ihxi = BiComplex::I1 * p.xi.to_bicomplex();
        for alpha in [0.5, 1.0, 2.0] {
            for n in 0..=20 {
                let f = MsFunction::complex(vec![MsTerm::basis(n, alpha)]);
                let xp = f.apply_p(&p).apply_x();
                let px = f.apply_x().apply_p(&p);
                worst = worst.max(xp.sub(&px).sub(&f.scale(ihxi)).max_coefficient());
            }
        }
    }
    below(worst, 1e-13)
}

fn standard_recovery() -> Outcome {
    let p = params(1.0, 1.0);
    let n = 12;
    let osc = Oscillator::new(n, p).unwrap();
    let mut energy = 0.0f64;
    for l in 0..=n {
        let e = p.energy(l, l);
        energy = energy.max((e.x1 - (l as f64 + 0.5)).abs()).max((e.x2 - (l as f64 + 0.5)).abs());
    }
    let mut hermite = 0.0f64;
    for l in 0..=20 {
        for i in 0..=80 {
            let t = -4.0 + 0.1 * i as f64;
            let v = wavefn::hermite_hyperbolic_eval(l, Hyperbolic::splat(t));
            let real = textbook(l, t, 1.0) / textbook_norm(l) * (t * t / 2.0).exp();
            let scale = real.abs().max(1.0);
            hermite = hermite.max((v.x1 - real).abs() / scale).max((v.x2 - real).abs() / scale);
        }
    }
    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let mut ortho = 0.0f64;
    for (w1, w2, target) in [(one, zero, BiComplex::E1), (zero, one, BiComplex::E2), (one, one, BiComplex::ONE)] {
        let kets: Vec<Ket> = (0..=n).map(|l| osc.eigenket(l, l, w1, w2).unwrap().ket).collect();
        let funcs: Vec<MsFunction> = (0..=10).map(|l| wavefn::phi_mixed(l, l, w1, w2, &p).unwrap()).collect();
        for (l, a) in kets.iter().enumerate() {
            for (m, b) in kets.iter().enumerate() {
                let want = if l == m { target } else { BiComplex::ZERO };
                ortho = ortho.max((a.scalar_product(b).unwrap() - want).modulus());
            }
        }
        for (l, a) in funcs.iter().enumerate() {
            for (m, b) in funcs.iter().enumerate() {
                let want = if l == m { target } else { BiComplex::ZERO };
                ortho = ortho.max((wavefn::ms_scalar_product(a, b) - want).modulus());
            }
        }
    }
    Outcome {
        pass: energy < 1e-12 && hermite < 1e-12 && ortho < 1e-10,
        detail: format!("energy {energy:.1e}, hermite {hermite:.3e} < 1e-12, embeddings orthonormal to {ortho:.3e}"),
    }
}

fn textbook_norm(l: usize) -> f64 {
    let fact: f64 = (1..=l).map(|k| k as f64).product();
    PI.powf(-0.25) / (2f64.powi(l as i32) * fact).sqrt()
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bicomplex-qho"))
            .args(["verify", "--suite", "all", "--xi1", "1", "--xi2", "2"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    Outcome {
        pass: same && a.status.success() && b.status.success(),
        detail: format!("{} report bytes, identical: {same}, exit {:?}", a.stdout.len(), a.status.code()),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("ring identities", ring_identities),
        ("modulus bounds", modulus_bounds),
        ("truncated ladder algebra", ladder_algebra),
        ("spectrum", spectrum),
        ("ladder norm identities", ladder_norms),
        ("null-cone counterexample", null_cone_counterexample),
        ("wavefunction orthonormality", wavefunction_orthonormality),
        ("ode residual", ode_residual),
        ("[X,P] on Gaussian-polynomial module", xp_termwise),
        ("standard recovery", standard_recovery),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        if !out.pass {
            failures += 1;
        }
        println!("criterion {:>2} {:<38} {}  {}", i + 1, name, if out.pass { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
