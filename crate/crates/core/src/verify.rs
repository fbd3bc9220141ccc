//! Executable identity suites.
//!
//! Every check returns its worst residual together with the threshold it
//! was judged against, so a report is informative even when it passes.
//! Random samples come from fixed-seed ChaCha streams; two runs with the
//! same configuration produce identical reports.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bicomplex::{poly_eval, BiComplex, Idempotent};
use crate::fock::{BiOperator, Ket};
use crate::hyperbolic::{dplus_func, Hyperbolic, RealFn};
use crate::oscillator::{eigenvalue_gap_in_null_cone, rescale_xi, Oscillator, OscillatorError, OscillatorParams};
use crate::tolerance::Tolerance;
use crate::wavefn::{self, MsFunction, MsTerm};

const SEED: u64 = 0x6269_636f_6d70_6c78;

/// Which module's invariants to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Fock,
    Oscillator,
    Wavefn,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Fock => "fock",
            Suite::Oscillator => "oscillator",
            Suite::Wavefn => "wavefn",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "core" => Ok(Suite::Core),
            "fock" => Ok(Suite::Fock),
            "oscillator" => Ok(Suite::Oscillator),
            "wavefn" => Ok(Suite::Wavefn),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

/// Whether the residual must stay below or rise above its threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Below,
    Above,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: &'static str,
    pub check: String,
    pub pass: bool,
    pub worst_residual: f64,
    pub threshold: f64,
    pub expect: Expect,
}

impl CheckRecord {
    pub fn below(suite: &'static str, check: &str, residual: f64, threshold: f64) -> Self {
        Self {
            suite,
            check: check.to_string(),
            pass: residual <= threshold,
            worst_residual: residual,
            threshold,
            expect: Expect::Below,
        }
    }

    pub fn above(suite: &'static str, check: &str, residual: f64, threshold: f64) -> Self {
        Self {
            suite,
            check: check.to_string(),
            pass: residual > threshold,
            worst_residual: residual,
            threshold,
            expect: Expect::Above,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub params: OscillatorParams,
    pub trunc: usize,
    pub tol: Tolerance,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            params: OscillatorParams::default(),
            trunc: 32,
            tol: Tolerance::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub all_pass: bool,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn get(&self, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check == check)
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Report, OscillatorError> {
    cfg.params.validate()?;
    if cfg.trunc < 1 {
        return Err(OscillatorError::TruncationTooSmall(cfg.trunc));
    }
    let mut records = Vec::new();
    if matches!(suite, Suite::Core | Suite::All) {
        records.extend(core_suite());
    }
    if matches!(suite, Suite::Fock | Suite::All) {
        records.extend(fock_suite(cfg));
    }
    if matches!(suite, Suite::Oscillator | Suite::All) {
        records.extend(oscillator_suite(cfg)?);
    }
    if matches!(suite, Suite::Wavefn | Suite::All) {
        records.extend(wavefn_suite(cfg)?);
    }
    let all_pass = records.iter().all(|r| r.pass);
    Ok(Report {
        suite,
        config: cfg.clone(),
        all_pass,
        records,
    })
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

pub(crate) fn random_bicomplex(r: &mut impl Rng, range: f64) -> BiComplex {
    BiComplex::new(
        r.gen_range(-range..range),
        r.gen_range(-range..range),
        r.gen_range(-range..range),
        r.gen_range(-range..range),
    )
}

fn random_ket(r: &mut impl Rng, dim: usize) -> Ket {
    Ket::from_coords((0..dim).map(|_| random_bicomplex(r, 1.0)).collect())
}

fn random_operator(r: &mut impl Rng, dim: usize) -> BiOperator {
    BiOperator::from_fn(dim, |_, _| random_bicomplex(r, 1.0))
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff / scale.max(1.0)
}

fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |acc, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}

// ---------------------------------------------------------------- core

pub const CORE: &str = "core";

/// Relative slack allowed in the modulus inequalities.
pub const MODULUS_SLACK: f64 = 1e-12;
/// Random pairs drawn for the modulus inequalities.
pub const MODULUS_PAIRS: usize = 100_000;

fn core_suite() -> Vec<CheckRecord> {
    use BiComplex as B;
    let mut out = Vec::new();

    let ring = [
        (B::E1 * B::E1, B::E1),
        (B::E2 * B::E2, B::E2),
        (B::E1 + B::E2, B::ONE),
        (B::E1 * B::E2, B::ZERO),
    ];
    out.push(CheckRecord::below(CORE, "idempotent_ring_identities", worst(ring.iter().map(|(a, b)| (*a - *b).modulus())), 0.0));

    let units = [
        (B::I1 * B::I2, B::J),
        (B::I1 * B::J, -B::I2),
        (B::I2 * B::J, -B::I1),
        (B::I1 * B::I1, -B::ONE),
        (B::I2 * B::I2, -B::ONE),
        (B::J * B::J, B::ONE),
        (B::I1 * B::I2, B::I2 * B::I1),
    ];
    out.push(CheckRecord::below(CORE, "unit_table", worst(units.iter().map(|(a, b)| (*a - *b).modulus())), 0.0));

    let mut r = rng(1);
    let samples: Vec<(B, B)> = (0..MODULUS_PAIRS)
        .map(|_| (random_bicomplex(&mut r, 10.0), random_bicomplex(&mut r, 10.0)))
        .collect();

    let round_trip = worst(samples.iter().take(10_000).map(|&(s, _)| {
        let (z1, z2) = s.to_idempotent();
        rel((B::from_idempotent(z1, z2) - s).modulus(), s.modulus())
    }));
    out.push(CheckRecord::below(CORE, "idempotent_round_trip", round_trip, 1e-15));

    let componentwise = worst(samples.iter().take(10_000).map(|&(s, t)| {
        let q = B::from_idempotent(s.z1() * t.z1(), s.z2() * t.z2());
        rel((s * t - q).modulus(), s.modulus() * t.modulus())
    }));
    out.push(CheckRecord::below(CORE, "product_componentwise", componentwise, 1e-14));

    let triangle = worst(samples.iter().map(|&(s, t)| {
        let rhs = s.modulus() + t.modulus();
        ((s + t).modulus() - rhs) / rhs
    }));
    out.push(CheckRecord::below(CORE, "modulus_triangle_inequality", triangle.max(0.0), MODULUS_SLACK));

    let product = worst(samples.iter().map(|&(s, t)| {
        let rhs = SQRT_2 * s.modulus() * t.modulus();
        ((s * t).modulus() - rhs) / rhs
    }));
    out.push(CheckRecord::below(CORE, "modulus_product_bound", product.max(0.0), MODULUS_SLACK));

    let tight = ((B::E1 * B::E1).modulus() - SQRT_2 * B::E1.modulus() * B::E1.modulus()).abs();
    out.push(CheckRecord::below(CORE, "modulus_product_bound_equality_at_e1", tight, 1e-15));

    let dagger = worst(samples.iter().take(10_000).map(|&(s, t)| {
        let scale = s.modulus() * t.modulus();
        let a = (s.conj_dagger().conj_dagger() - s).modulus();
        let b = ((s + t).conj_dagger() - (s.conj_dagger() + t.conj_dagger())).modulus();
        let c = rel(((s * t).conj_dagger() - s.conj_dagger() * t.conj_dagger()).modulus(), scale);
        a.max(b).max(c)
    }));
    out.push(CheckRecord::below(CORE, "dagger_involutive_additive_multiplicative", dagger, 1e-14));

    let homomorphism = worst(samples.iter().take(10_000).flat_map(|&(s, t)| {
        Idempotent::BOTH.map(move |k| {
            let add = rel(((s + t).project(k) - (s.project(k) + t.project(k))).norm(), s.modulus() + t.modulus());
            let mul = rel(((s * t).project(k) - s.project(k) * t.project(k)).norm(), s.modulus() * t.modulus());
            add.max(mul)
        })
    }));
    out.push(CheckRecord::below(CORE, "projections_are_ring_homomorphisms", homomorphism, 1e-14));

    // mix in exact zero divisors and zero itself
    let tol = Tolerance::default();
    let mut inv_worst = 0.0f64;
    let mut candidates: Vec<B> = samples.iter().take(2_000).map(|p| p.0).collect();
    candidates.extend((0..200).map(|i| {
        let z = Complex64::new(1.0 + i as f64, -0.5 * i as f64);
        if i % 2 == 0 {
            B::from_idempotent(z, Complex64::new(0.0, 0.0))
        } else {
            B::from_idempotent(Complex64::new(0.0, 0.0), z)
        }
    }));
    candidates.push(B::ZERO);
    for w in candidates {
        let expect_invertible = !w.is_zero() && !w.is_null_cone(&tol);
        match w.inverse() {
            Ok(inv) if expect_invertible => {
                let (z1, z2) = w.to_idempotent();
                let (r1, r2) = inv.to_idempotent();
                // conversion rounding is relative to the larger component
                let scale = z1.inv().norm().max(z2.inv().norm());
                inv_worst = inv_worst
                    .max((r1 - z1.inv()).norm() / scale)
                    .max((r2 - z2.inv()).norm() / scale);
            }
            Err(_) if !expect_invertible => {}
            _ => inv_worst = f64::INFINITY,
        }
    }
    out.push(CheckRecord::below(CORE, "inverse_iff_outside_null_cone", inv_worst, 1e-14));

    let exp_hom = worst(samples.iter().take(10_000).map(|&(s, t)| {
        let h = Hyperbolic::new(s.e / 2.0, s.j / 2.0);
        let g = Hyperbolic::new(t.e / 2.0, t.j / 2.0);
        let lhs = dplus_func(h, RealFn::Exp).unwrap() * dplus_func(g, RealFn::Exp).unwrap();
        let rhs = dplus_func(h + g, RealFn::Exp).unwrap();
        ((lhs.x1 - rhs.x1) / rhs.x1).abs().max(((lhs.x2 - rhs.x2) / rhs.x2).abs())
    }));
    out.push(CheckRecord::below(CORE, "exp_homomorphism_on_d", exp_hom, 1e-13));

    let in_dplus = worst(samples.iter().take(10_000).map(|&(s, _)| {
        let p = s * s.conj_dagger();
        let (z1, z2) = p.to_idempotent();
        let neg = (-z1.re).max(-z2.re).max(0.0);
        rel(neg.max(z1.im.abs()).max(z2.im.abs()), p.modulus())
    }));
    out.push(CheckRecord::below(CORE, "w_times_dagger_in_d_plus", in_dplus, 1e-14));

    let mut r = rng(2);
    let poly = worst((0..2_000).map(|_| {
        let w = random_bicomplex(&mut r, 2.0);
        let coeffs: Vec<Complex64> = (0..5)
            .map(|_| Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
            .collect();
        let horner = coeffs.iter().rev().fold(B::ZERO, |acc, &c| acc * w + B::from(c));
        let lifted = poly_eval(&coeffs, w);
        rel((horner - lifted).modulus(), horner.modulus())
    }));
    out.push(CheckRecord::below(CORE, "polynomial_lift_matches_horner", poly, 1e-12));
    out
}

// ---------------------------------------------------------------- fock

pub const FOCK: &str = "fock";

fn fock_suite(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let dim = (cfg.trunc + 1).min(8);
    let mut r = rng(3);
    let mut out = Vec::new();
    let kets: Vec<(Ket, Ket, Ket, BiComplex)> = (0..300)
        .map(|_| {
            (
                random_ket(&mut r, dim),
                random_ket(&mut r, dim),
                random_ket(&mut r, dim),
                random_bicomplex(&mut r, 2.0),
            )
        })
        .collect();

    let axioms = worst(kets.iter().map(|(psi, chi, eta, s)| {
        let sp = |a: &Ket, b: &Ket| a.scalar_product(b).unwrap();
        let base = sp(psi, chi);
        let scale = psi.max_modulus() * chi.max_modulus().max(eta.max_modulus()) * (1.0 + s.modulus()) * dim as f64;
        let i = (sp(psi, &(chi + eta)) - (base + sp(psi, eta))).modulus();
        let ii = (sp(psi, &chi.scale(*s)) - *s * base).modulus();
        let iii = (base - sp(chi, psi).conj_dagger()).modulus();
        let anti = (sp(&psi.scale(*s), chi) - s.conj_dagger() * base).modulus();
        rel(i.max(ii).max(iii).max(anti), scale)
    }));
    out.push(CheckRecord::below(FOCK, "scalar_product_axioms", axioms, 1e-14));

    let tol = Tolerance::default();
    let mut positivity = worst(kets.iter().map(|(psi, ..)| {
        let p = psi.scalar_product(psi).unwrap();
        let (z1, z2) = p.to_idempotent();
        let neg = (-z1.re).max(-z2.re).max(0.0);
        rel(neg.max(z1.im.abs()).max(z2.im.abs()), p.modulus())
    }));
    if Ket::zero(dim).self_product() != Hyperbolic::ZERO || kets.iter().any(|(p, ..)| p.self_product() == Hyperbolic::ZERO) {
        positivity = f64::INFINITY;
    }
    out.push(CheckRecord::below(FOCK, "self_product_in_d_plus_zero_iff_zero", positivity, 1e-14));

    let separation = worst(kets.iter().map(|(psi, chi, ..)| {
        let full = psi.scalar_product(chi).unwrap();
        let part = |k: Idempotent, e: BiComplex| psi.project(k).scale(e).scalar_product(&chi.project(k).scale(e)).unwrap();
        let split = part(Idempotent::One, BiComplex::E1) + part(Idempotent::Two, BiComplex::E2);
        let rebuilt = &psi.project(Idempotent::One).scale(BiComplex::E1) + &psi.project(Idempotent::Two).scale(BiComplex::E2);
        rel((full - split).modulus(), full.modulus()).max(rebuilt.max_abs_diff(psi).unwrap())
    }));
    out.push(CheckRecord::below(FOCK, "idempotent_separation", separation, 1e-14));

    let ops: Vec<(BiOperator, BiOperator, BiComplex)> = (0..50)
        .map(|_| (random_operator(&mut r, dim), random_operator(&mut r, dim), random_bicomplex(&mut r, 2.0)))
        .collect();
    let adj = worst(ops.iter().zip(&kets).map(|((a, b, s), (psi, chi, ..))| {
        let inv = a.adjoint().adjoint().max_abs_diff(a).unwrap();
        let ab = a.compose(b).unwrap().adjoint();
        let anti = rel(ab.max_abs_diff(&b.adjoint().compose(&a.adjoint()).unwrap()).unwrap(), ab.max_modulus());
        let sa = rel(a.scale(*s).adjoint().max_abs_diff(&a.adjoint().scale(s.conj_dagger())).unwrap(), s.modulus());
        let lhs = psi.scalar_product(&a.apply(chi).unwrap()).unwrap();
        let rhs = a.adjoint().apply(psi).unwrap().scalar_product(chi).unwrap();
        let defining = rel((lhs - rhs).modulus(), lhs.modulus() * dim as f64);
        inv.max(anti).max(sa).max(defining)
    }));
    out.push(CheckRecord::below(FOCK, "adjoint_involution_antihomomorphism", adj, 1e-13));

    let linear = worst(ops.iter().zip(&kets).map(|((a, _, s), (psi, chi, _, t))| {
        let lhs = a.apply(&(&psi.scale(*s) + &chi.scale(*t))).unwrap();
        let rhs = &a.apply(psi).unwrap().scale(*s) + &a.apply(chi).unwrap().scale(*t);
        rel(lhs.max_abs_diff(&rhs).unwrap(), lhs.max_modulus())
    }));
    out.push(CheckRecord::below(FOCK, "operators_t_linear", linear, 1e-13));

    let basis: Vec<Ket> = (0..dim).map(|l| Ket::basis(dim, l).unwrap()).collect();
    let ortho = worst(basis.iter().enumerate().flat_map(|(l, a)| {
        basis.iter().enumerate().map(move |(m, b)| {
            let want = if l == m { BiComplex::ONE } else { BiComplex::ZERO };
            (a.scalar_product(b).unwrap() - want).modulus()
        })
    }));
    out.push(CheckRecord::below(FOCK, "basis_orthonormal", ortho, 0.0));

    let independence = worst(kets.iter().flat_map(|(psi, ..)| {
        basis.iter().enumerate().map(move |(m, b)| (b.scalar_product(psi).unwrap() - psi.coord(m)).modulus())
    }));
    out.push(CheckRecord::below(FOCK, "coordinates_recovered_by_basis", independence, 0.0));

    let norm_identity = worst(kets.iter().map(|(psi, ..)| {
        let p1: f64 = psi.projection_coords(Idempotent::One).iter().map(|z| z.norm_sqr()).sum();
        let p2: f64 = psi.projection_coords(Idempotent::Two).iter().map(|z| z.norm_sqr()).sum();
        (psi.norm() - ((p1 + p2) / 2.0).sqrt()).abs()
    }));
    out.push(CheckRecord::below(FOCK, "ket_norm_from_projections", norm_identity, 1e-14));

    let e1phi0 = basis[0].scale(BiComplex::E1);
    let mixed = &e1phi0 + &basis[dim - 1].scale(BiComplex::E2);
    let classified = [
        e1phi0.in_null_cone(&cfg.tol),
        !basis[0].in_null_cone(&cfg.tol),
        !mixed.in_null_cone(&cfg.tol),
        !Ket::zero(dim).in_null_cone(&cfg.tol),
        (e1phi0.norm() - 0.5f64.sqrt()).abs() < 1e-15,
    ];
    let misclassified = classified.iter().filter(|ok| !**ok).count() as f64;
    out.push(CheckRecord::below(FOCK, "ket_null_cone_classification", misclassified, 0.0));
    let _ = tol;
    out
}

// ---------------------------------------------------------- oscillator

pub const OSCILLATOR: &str = "oscillator";

/// Entrywise bound for the truncated ladder algebra and the spectrum.
pub const LADDER_TOL: f64 = 1e-12;

/// Residuals of the three ladder commutation relations restricted to the
/// levels `0..block`.
pub fn ladder_commutator_residuals(osc: &Oscillator, block: usize) -> Result<[f64; 3], OscillatorError> {
    let p = osc.params();
    let (a, s, h) = (osc.annihilation(), osc.creation(), osc.hamiltonian());
    let xi = p.xi.to_bicomplex();
    let hwxi = xi.scale(p.hbar_omega());
    let aa = a.commutator(s)?.try_sub(&BiOperator::scalar(osc.dim(), xi))?;
    let ha = h.commutator(a)?.try_add(&a.scale(hwxi))?;
    let hs = h.commutator(s)?.try_sub(&s.scale(hwxi))?;
    Ok([aa.block(block).max_modulus(), ha.block(block).max_modulus(), hs.block(block).max_modulus()])
}

/// `‖Hφ_l − (l+½)ħωξφ_l‖` over all levels and the mixed family over all
/// `(l, l′)` pairs.
pub fn spectrum_residuals(osc: &Oscillator) -> Result<(f64, f64), OscillatorError> {
    let n = osc.truncation();
    let mut pure = 0.0f64;
    for l in 0..=n {
        let e = osc.eigenket(l, l, Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))?;
        pure = pure.max(osc.eigen_residual(&e.ket, e.energy)?);
    }
    let mut mixed = 0.0f64;
    let mut r = rng(4);
    for l in 0..=n {
        for lp in 0..=n {
            let w1 = Complex64::from_polar(1.0, r.gen_range(0.0..2.0 * PI));
            let w2 = Complex64::from_polar(1.0, r.gen_range(0.0..2.0 * PI));
            let e = osc.eigenket(l, lp, w1, w2)?;
            mixed = mixed.max(osc.eigen_residual(&e.ket, e.energy)?);
        }
    }
    Ok((pure, mixed))
}

/// Worst ladder-norm identity residual over all pure eigenkets with `l < N` and `count`
/// random normalized mixed eigenkets.
pub fn ladder_norm_worst(osc: &Oscillator, count: usize, stream: u64) -> Result<f64, OscillatorError> {
    let n = osc.truncation();
    let one = Complex64::new(1.0, 0.0);
    let mut worst_r = 0.0f64;
    for l in 0..n {
        let e = osc.eigenket(l, l, one, one)?;
        let (ra, rs) = osc.ladder_norm_residuals(&e.ket, e.energy)?;
        worst_r = worst_r.max(ra.modulus()).max(rs.modulus());
    }
    let mut r = rng(stream);
    for _ in 0..count {
        let l = r.gen_range(0..n);
        let lp = r.gen_range(0..n);
        let w1 = Complex64::from_polar(1.0, r.gen_range(0.0..2.0 * PI));
        let w2 = Complex64::from_polar(1.0, r.gen_range(0.0..2.0 * PI));
        let e = osc.eigenket(l, lp, w1, w2)?;
        let (ra, rs) = osc.ladder_norm_residuals(&e.ket, e.energy)?;
        worst_r = worst_r.max(ra.modulus()).max(rs.modulus());
    }
    Ok(worst_r)
}

/// Scalar product of `e₁φ₁ + e₂φ₂` with `e₁φ₁ + e₂φ₃`, whose eigenvalues
/// differ by a null-cone element.
pub fn null_cone_counterexample(osc: &Oscillator) -> Result<BiComplex, OscillatorError> {
    let one = Complex64::new(1.0, 0.0);
    let a = osc.eigenket(1, 2, one, one)?;
    let b = osc.eigenket(1, 3, one, one)?;
    Ok(a.ket.scalar_product(&b.ket)?)
}

fn oscillator_suite(cfg: &VerifyConfig) -> Result<Vec<CheckRecord>, OscillatorError> {
    let osc = Oscillator::new(cfg.trunc, cfg.params)?;
    let n = osc.truncation();
    let p = *osc.params();
    let one = Complex64::new(1.0, 0.0);
    let mut out = Vec::new();

    let [aa, ha, hs] = ladder_commutator_residuals(&osc, n)?;
    out.push(CheckRecord::below(OSCILLATOR, "commutator_a_astar_eq_xi", aa, LADDER_TOL));
    out.push(CheckRecord::below(OSCILLATOR, "commutator_h_a_eq_minus_hwxi_a", ha, LADDER_TOL));
    out.push(CheckRecord::below(OSCILLATOR, "commutator_h_astar_eq_hwxi_astar", hs, LADDER_TOL));

    let xp = osc.position().commutator(osc.momentum())?;
    let want = BiOperator::scalar(osc.dim(), BiComplex::I1 * p.xi.to_bicomplex().scale(p.hbar));
    let xp_res = xp.try_sub(&want)?.block(n).max_modulus();
    out.push(CheckRecord::below(OSCILLATOR, "commutator_x_p_eq_i_hbar_xi", xp_res, LADDER_TOL));

    let astar_is_adjoint = osc.creation().max_abs_diff(&osc.annihilation().adjoint())?;
    out.push(CheckRecord::below(OSCILLATOR, "astar_is_adjoint_of_a", astar_is_adjoint, 0.0));

    // assumption (a): H = P²/2m + ½mω²X² on the untruncated block
    let x2 = osc.position().compose(osc.position())?;
    let p2 = osc.momentum().compose(osc.momentum())?;
    let h_xp = p2
        .scale(BiComplex::real(1.0 / (2.0 * p.m)))
        .try_add(&x2.scale(BiComplex::real(0.5 * p.m * p.omega * p.omega)))?;
    let h_res = h_xp.try_sub(osc.hamiltonian())?.block(n).max_modulus();
    out.push(CheckRecord::below(OSCILLATOR, "hamiltonian_from_x_and_p", h_res, LADDER_TOL * (1.0 + p.hbar_omega() * (n as f64 + 1.0) * p.xi.x1.max(p.xi.x2))));

    // H = ħω(AA* − ξ/2) cross-check on l < N
    let h2 = osc
        .annihilation()
        .compose(osc.creation())?
        .try_sub(&BiOperator::scalar(osc.dim(), p.xi.scale(0.5).to_bicomplex()))?
        .scale(BiComplex::real(p.hbar_omega()));
    let h2_res = h2.try_sub(osc.hamiltonian())?.block(n).max_modulus();
    out.push(CheckRecord::below(OSCILLATOR, "hamiltonian_second_form", h2_res, LADDER_TOL));

    // assumption (b)
    let sa = [osc.position(), osc.momentum(), osc.hamiltonian()]
        .iter()
        .map(|op| if op.is_self_adjoint(&cfg.tol) { 0.0 } else { op.max_abs_diff(&op.adjoint()).unwrap_or(f64::INFINITY) })
        .fold(0.0, f64::max);
    out.push(CheckRecord::below(OSCILLATOR, "x_p_h_self_adjoint", sa, 0.0));

    // assumption (c)
    let mut r = rng(5);
    let cpos = worst((0..100).map(|_| {
        let k = random_ket(&mut r, osc.dim());
        let sp = k.scalar_product(&k).unwrap();
        let (z1, z2) = sp.to_idempotent();
        rel((-z1.re).max(-z2.re).max(0.0).max(z1.im.abs()).max(z2.im.abs()), sp.modulus())
    }));
    out.push(CheckRecord::below(OSCILLATOR, "self_product_in_d_plus", cpos, 1e-14));

    // assumption (d) and hyperbolicity of ξ
    let xi_nc = if p.xi.is_null_cone(&cfg.tol) { 1.0 } else { 0.0 };
    out.push(CheckRecord::below(OSCILLATOR, "xi_outside_null_cone", xi_nc, 0.0));
    let low = n.min(6);
    let xi_hyp = worst((0..50).map(|_| {
        let mut coords: Vec<BiComplex> = (0..low).map(|_| random_bicomplex(&mut r, 1.0)).collect();
        coords.resize(osc.dim(), BiComplex::ZERO);
        let psi = Ket::from_coords(coords);
        match osc.extract_xi(&psi) {
            Ok(xi) => {
                let via_adj = osc.commutator_expectation_via_adjoint(&psi).unwrap();
                let direct = psi.scalar_product(&xp.apply(&psi).unwrap()).unwrap();
                (xi - xi.conj_dagger())
                    .modulus()
                    .max((xi - p.xi.to_bicomplex()).modulus())
                    .max(rel((via_adj - direct).modulus(), direct.modulus()))
            }
            Err(_) => 0.0,
        }
    }));
    out.push(CheckRecord::below(OSCILLATOR, "xi_hyperbolic_from_self_adjointness", xi_hyp, 1e-12));

    // assumption (e)
    let ground = osc.eigenket(0, 0, one, one)?;
    let e_ok = !ground.ket.in_null_cone(&cfg.tol) && !ground.energy.is_null_cone(&cfg.tol) && ground.ket.norm() > 0.0;
    let e_res = osc.eigen_residual(&ground.ket, ground.energy)? + if e_ok { 0.0 } else { 1.0 };
    out.push(CheckRecord::below(OSCILLATOR, "ground_state_normalizable_eigenket", e_res, LADDER_TOL));

    let (pure, mixed) = spectrum_residuals(&osc)?;
    out.push(CheckRecord::below(OSCILLATOR, "spectrum_pure_levels", pure, LADDER_TOL));
    out.push(CheckRecord::below(OSCILLATOR, "spectrum_mixed_eigenkets", mixed, LADDER_TOL));

    out.push(CheckRecord::below(OSCILLATOR, "ladder_norm_identities", ladder_norm_worst(&osc, 100, 6)?, LADDER_TOL));

    // ladder recursion φ_{l+1} = A*φ_l/√((l+1)ξ), Aφ_{l+1} = √((l+1)ξ)φ_l
    let mut rec = 0.0f64;
    let mut norm_prop = 0.0f64;
    let mut current = osc.basis(0)?;
    for l in 0..n {
        let amp = dplus_func(p.xi.scale((l + 1) as f64), RealFn::Sqrt).map_err(|e| OscillatorError::InvalidParams(e.to_string()))?;
        let inv_amp = dplus_func(amp, RealFn::Pow(-1.0)).map_err(|e| OscillatorError::InvalidParams(e.to_string()))?;
        let next = osc.creation().apply(&current)?.scale(inv_amp.to_bicomplex());
        let next_basis = osc.basis(l + 1)?;
        rec = rec.max(next.max_abs_diff(&next_basis)?);
        let down = osc.annihilation().apply(&next_basis)?;
        rec = rec.max(down.max_abs_diff(&current.scale(amp.to_bicomplex()))?);
        norm_prop = norm_prop.max((next.scalar_product(&next)? - BiComplex::ONE).modulus());
        current = next;
    }
    out.push(CheckRecord::below(OSCILLATOR, "ladder_recursion", rec, LADDER_TOL));
    out.push(CheckRecord::below(OSCILLATOR, "normalization_propagates", norm_prop, LADDER_TOL));

    // assumption (f), with the null-cone caveat
    let mut orth = 0.0f64;
    let mut pairs_checked = 0usize;
    let mut r = rng(7);
    let family: Vec<_> = (0..40)
        .map(|_| {
            let (l, lp) = (r.gen_range(0..=n), r.gen_range(0..=n));
            osc.eigenket(l, lp, one, one)
        })
        .collect::<Result<_, _>>()?;
    for a in &family {
        for b in &family {
            if a.energy != b.energy && !eigenvalue_gap_in_null_cone(a.energy, b.energy, &cfg.tol) {
                orth = orth.max(a.ket.scalar_product(&b.ket)?.modulus());
                pairs_checked += 1;
            }
        }
    }
    if pairs_checked == 0 && n >= 2 {
        orth = f64::INFINITY;
    }
    out.push(CheckRecord::below(OSCILLATOR, "orthogonal_when_gap_outside_null_cone", orth, 1e-15));

    if n >= 3 {
        let ce = null_cone_counterexample(&osc)?;
        let gap_nc = eigenvalue_gap_in_null_cone(p.energy(1, 2), p.energy(1, 3), &cfg.tol);
        let res = (ce - BiComplex::E1).modulus() + if gap_nc { 0.0 } else { 1.0 };
        out.push(CheckRecord::below(OSCILLATOR, "null_cone_counterexample_overlap_is_e1", res, 1e-14));
    }

    // rescaling freedom: |ξ₂′/ξ₁′| fixed, ξ₁′ = 1 reachable
    let ratio = p.xi.x2 / p.xi.x1;
    let mut resc = 0.0f64;
    for &(a, b) in &[(0.5, 2.0), (1.7, 0.3), (-1.2, -0.9), (3.0, -4.0)] {
        for (sa, sb) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
            match rescale_xi(p.xi, a, sa * a, b, sb * b) {
                Ok(x) => resc = resc.max(((x.x2 / x.x1).abs() - ratio).abs() / ratio),
                Err(OscillatorError::LeavesPositiveCone(x)) => resc = resc.max(((x.x2 / x.x1).abs() - ratio).abs() / ratio),
                Err(_) => resc = f64::INFINITY,
            }
        }
    }
    match rescale_xi(p.xi, p.xi.x1, p.xi.x1, 1.0, 1.0) {
        Ok(x) => resc = resc.max((x.x1 - 1.0).abs()),
        Err(_) => resc = f64::INFINITY,
    }
    out.push(CheckRecord::below(OSCILLATOR, "rescaling_preserves_xi_ratio", resc, 1e-14));

    out.extend(standard_recovery_kets(n.min(10), p)?);
    Ok(out)
}

/// With ξ = 1 the three embeddings (e₁-only, e₂-only, l = l′) each give an
/// orthonormal eigenbasis with energies (l+½)ħω.
fn standard_recovery_kets(n: usize, base: OscillatorParams) -> Result<Vec<CheckRecord>, OscillatorError> {
    let p = OscillatorParams { xi: Hyperbolic::ONE, ..base };
    let osc = Oscillator::new(n.max(1), p)?;
    let n = osc.truncation();
    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let mut energy = 0.0f64;
    let mut ortho = 0.0f64;
    for (w1, w2, unit) in [(one, zero, BiComplex::E1), (zero, one, BiComplex::E2), (one, one, BiComplex::ONE)] {
        let fam: Vec<_> = (0..=n).map(|l| osc.eigenket(l, l, w1, w2)).collect::<Result<_, _>>()?;
        for (l, a) in fam.iter().enumerate() {
            let want = (l as f64 + 0.5) * p.hbar_omega();
            energy = energy.max((a.energy.x1 - want).abs()).max((a.energy.x2 - want).abs());
            let lam = Hyperbolic::new(if w1 == zero { 0.0 } else { want }, if w2 == zero { 0.0 } else { want });
            energy = energy.max(osc.eigen_residual(&a.ket, lam)?);
            for (m, b) in fam.iter().enumerate() {
                let target = if l == m { unit } else { BiComplex::ZERO };
                ortho = ortho.max((a.ket.scalar_product(&b.ket)? - target).modulus());
            }
        }
    }
    Ok(vec![
        CheckRecord::below(OSCILLATOR, "standard_recovery_energies", energy, LADDER_TOL),
        CheckRecord::below(OSCILLATOR, "standard_recovery_ket_embeddings_orthonormal", ortho, LADDER_TOL),
    ])
}

// -------------------------------------------------------------- wavefn

pub const WAVEFN: &str = "wavefn";

/// Highest level used by the wavefunction orthonormality and ODE checks.
pub const WAVEFN_MAX_L: usize = 10;
pub const ORTHONORMALITY_TOL: f64 = 1e-10;
pub const QUADRATURE_AGREEMENT_TOL: f64 = 1e-9;
pub const ODE_TOL: f64 = 1e-10;
pub const ODE_NEGATIVE_CONTROL: f64 = 1e-2;
pub const TERMWISE_TOL: f64 = 1e-13;
pub const POINTWISE_TOL: f64 = 1e-12;

/// `(analytic, quadrature-vs-analytic)` worst errors over `l, m ≤ max_l`.
pub fn orthonormality_residuals(p: &OscillatorParams, max_l: usize) -> Result<(f64, f64), wavefn::WavefnError> {
    let phis: Vec<MsFunction> = (0..=max_l).map(|l| wavefn::phi_l(l, p)).collect::<Result<_, _>>()?;
    let mut analytic = 0.0f64;
    let mut quad = 0.0f64;
    for (l, a) in phis.iter().enumerate() {
        for (m, b) in phis.iter().enumerate() {
            let sp = wavefn::ms_scalar_product(a, b);
            let want = if l == m { BiComplex::ONE } else { BiComplex::ZERO };
            analytic = analytic.max((sp - want).modulus());
            let q = wavefn::ms_scalar_product_quadrature(a, b, 1e-13);
            quad = quad.max((q - sp).modulus());
        }
    }
    Ok((analytic, quad))
}

/// `(max residual, min negative-control residual)` for `l ≤ max_l`.
pub fn ode_residuals(p: &OscillatorParams, max_l: usize) -> Result<(f64, f64), wavefn::WavefnError> {
    let mut res = 0.0f64;
    let mut control = f64::INFINITY;
    for l in 0..=max_l {
        res = res.max(wavefn::hamiltonian_residual(l, p)?);
        let u = wavefn::phi_l(l, p)?;
        let shifted = p.energy(l, l) + p.xi.scale(p.hbar_omega());
        control = control.min(wavefn::hamiltonian_residual_for(&u, shifted, p));
    }
    Ok((res, control))
}

/// Worst coefficient mismatch of `[X,P]f_{n,α} − iħξ f_{n,α}`.
pub fn xp_termwise_residual(p: &OscillatorParams, max_n: u32, alphas: &[f64]) -> f64 {
    let ihxi = BiComplex::I1 * p.xi.to_bicomplex().scale(p.hbar);
    let mut worst_r = 0.0f64;
    for &alpha in alphas {
        for n in 0..=max_n {
            let f = MsFunction::complex(vec![MsTerm::basis(n, alpha)]);
            let comm = f.apply_p(p).apply_x().sub(&f.apply_x().apply_p(p));
            worst_r = worst_r.max(comm.sub(&f.scale(ihxi)).max_coefficient());
        }
    }
    worst_r
}

fn random_ms(r: &mut impl Rng) -> MsFunction {
    let mut comp = || -> Vec<MsTerm> {
        (0..3)
            .map(|_| {
                MsTerm::new(
                    r.gen_range(0..6),
                    r.gen_range(0.3..2.0),
                    Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)),
                )
            })
            .collect()
    };
    let a = comp();
    let b = comp();
    MsFunction::new(a, b)
}

fn wavefn_suite(cfg: &VerifyConfig) -> Result<Vec<CheckRecord>, OscillatorError> {
    let p = cfg.params;
    let werr = |e: wavefn::WavefnError| OscillatorError::InvalidParams(e.to_string());
    let mut out = Vec::new();

    let (analytic, quad) = orthonormality_residuals(&p, WAVEFN_MAX_L).map_err(werr)?;
    out.push(CheckRecord::below(WAVEFN, "eigenfunctions_orthonormal", analytic, ORTHONORMALITY_TOL));
    out.push(CheckRecord::below(WAVEFN, "quadrature_agrees_with_moments", quad, QUADRATURE_AGREEMENT_TOL));

    let (ode, control) = ode_residuals(&p, WAVEFN_MAX_L).map_err(werr)?;
    out.push(CheckRecord::below(WAVEFN, "ode_residual", ode, ODE_TOL));
    out.push(CheckRecord::above(WAVEFN, "ode_negative_control_shifted_energy", control, ODE_NEGATIVE_CONTROL));

    out.push(CheckRecord::below(WAVEFN, "commutator_x_p_termwise", xp_termwise_residual(&p, 20, &[0.5, 1.0, 2.0]), TERMWISE_TOL));

    let mut r = rng(8);
    let mut sa_x = 0.0f64;
    let mut sa_p = 0.0f64;
    let mut axioms = 0.0f64;
    for _ in 0..100 {
        let (u, v) = (random_ms(&mut r), random_ms(&mut r));
        let s = random_bicomplex(&mut r, 1.0);
        let sp = wavefn::ms_scalar_product;
        let px = sp(&u.apply_x(), &v) - sp(&u, &v.apply_x());
        let pp = sp(&u.apply_p(&p), &v) - sp(&u, &v.apply_p(&p));
        let uv = sp(&u, &v);
        sa_x = sa_x.max(rel(px.modulus(), uv.modulus()));
        sa_p = sa_p.max(rel(pp.modulus(), uv.modulus()));
        let sym = (uv - sp(&v, &u).conj_dagger()).modulus();
        let lin = (sp(&u, &v.scale(s)) - s * uv).modulus();
        let add = (sp(&u, &v.add(&u)) - (uv + sp(&u, &u))).modulus();
        let uu = sp(&u, &u);
        let (z1, z2) = uu.to_idempotent();
        let pos = (-z1.re).max(-z2.re).max(0.0).max(z1.im.abs()).max(z2.im.abs());
        axioms = axioms.max(rel(sym.max(lin).max(add).max(pos), uv.modulus().max(uu.modulus())));
    }
    out.push(CheckRecord::below(WAVEFN, "x_self_adjoint", sa_x, 1e-12));
    out.push(CheckRecord::below(WAVEFN, "p_self_adjoint", sa_p, 1e-12));
    out.push(CheckRecord::below(WAVEFN, "scalar_product_axioms", axioms, 1e-12));

    // each idempotent component alone solves the standard equation with ħξ_k
    let mut sep = 0.0f64;
    for l in 0..=WAVEFN_MAX_L {
        let u = wavefn::phi_l(l, &p).map_err(werr)?;
        for (k, e) in [(Idempotent::One, BiComplex::E1), (Idempotent::Two, BiComplex::E2)] {
            let part = u.scale(e);
            let energy = p.energy(l, l).component(k);
            let lam = match k {
                Idempotent::One => Hyperbolic::new(energy, 0.0),
                Idempotent::Two => Hyperbolic::new(0.0, energy),
            };
            sep = sep.max(wavefn::hamiltonian_residual_for(&part, lam, &p));
        }
    }
    out.push(CheckRecord::below(WAVEFN, "separated_components_solve_standard_ode", sep, ODE_TOL));

    // single hyperbolic formula vs componentwise assembly on θ ∈ [−6, 6]
    let s = wavefn::theta_of_x(1.0, &p).map_err(werr)?;
    let mut fact = 0.0f64;
    for l in 0..=WAVEFN_MAX_L {
        let u = wavefn::phi_l(l, &p).map_err(werr)?;
        for k in Idempotent::BOTH {
            let sk = s.component(k);
            let hbar_eff = p.hbar * p.xi.component(k);
            for i in 0..201 {
                let theta = -6.0 + 12.0 * i as f64 / 200.0;
                let x = theta / sk;
                let hyper = wavefn::phi_l_hyperbolic(l, x, &p).map_err(werr)?.component(k);
                let standard = standard_eigenfunction(l, x, p.m, p.omega, hbar_eff);
                let ms = u.eval_components(x);
                let ms_k = match k {
                    Idempotent::One => ms.0,
                    Idempotent::Two => ms.1,
                };
                fact = fact.max((hyper - standard).abs()).max((ms_k - Complex64::new(standard, 0.0)).norm());
            }
        }
    }
    out.push(CheckRecord::below(WAVEFN, "hyperbolic_formula_matches_componentwise", fact, POINTWISE_TOL));

    let lifted = dplus_func(p.xi.scale(PI * p.hbar / (p.m * p.omega)), RealFn::InvNthRoot(4)).map_err(|e| OscillatorError::InvalidParams(e.to_string()))?;
    let direct = p.xi.map(|x| (p.m * p.omega / (PI * p.hbar * x)).powf(0.25));
    let nres = ((lifted.x1 - direct.x1) / direct.x1).abs().max(((lifted.x2 - direct.x2) / direct.x2).abs());
    out.push(CheckRecord::below(WAVEFN, "normalization_via_inverse_fourth_root", nres, 1e-14));

    let mut herm = 0.0f64;
    for l in 0..=20 {
        let coeffs = wavefn::hermite_coeffs(l).map_err(werr)?;
        for i in 0..=40 {
            let t = -4.0 + 0.2 * i as f64;
            let h = wavefn::hermite_hyperbolic_eval(l, Hyperbolic::splat(t));
            let real = wavefn::hermite_eval(l, t);
            let scale = real.abs().max(1.0);
            // expanded coefficients cancel near roots; judge them by Σ|c_k||t|^k
            let cond: f64 = coeffs.coeffs_f64().iter().rev().fold(0.0, |acc, c| acc * t.abs() + c.abs());
            herm = herm
                .max((h.x1 - real).abs() / scale)
                .max((h.x2 - real).abs() / scale)
                .max((coeffs.eval(t) - real).abs() / cond.max(1.0));
        }
        let theta = Hyperbolic::new(0.7, -1.9);
        let via_poly = poly_eval(&coeffs.coeffs_complex(), theta.to_bicomplex());
        let direct = wavefn::hermite_hyperbolic_eval(l, theta).to_bicomplex();
        herm = herm.max(rel((via_poly - direct).modulus(), direct.modulus()));
    }
    out.push(CheckRecord::below(WAVEFN, "hyperbolic_hermite_recovers_real_hermite", herm, POINTWISE_TOL));

    let one = Complex64::new(1.0, 0.0);
    let (a, b) = (
        wavefn::phi_mixed(1, 2, one, one, &p).map_err(werr)?,
        wavefn::phi_mixed(1, 3, one, one, &p).map_err(werr)?,
    );
    let ce = (wavefn::ms_scalar_product(&a, &b) - BiComplex::E1).modulus()
        .max((wavefn::ms_scalar_product(&a, &a) - BiComplex::ONE).modulus());
    out.push(CheckRecord::below(WAVEFN, "mixed_functions_null_cone_overlap_is_e1", ce, ORTHONORMALITY_TOL));

    out.extend(standard_recovery_functions(p).map_err(werr)?);
    Ok(out)
}

/// Textbook eigenfunction with effective action `hbar_eff`, written without
/// any hyperbolic machinery.
pub fn standard_eigenfunction(l: usize, x: f64, m: f64, omega: f64, hbar_eff: f64) -> f64 {
    let t = (m * omega / hbar_eff).sqrt() * x;
    let fact: f64 = (1..=l).map(|k| k as f64).product();
    ((m * omega / (PI * hbar_eff)).sqrt() / (2f64.powi(l as i32) * fact)).sqrt()
        * (-t * t / 2.0).exp()
        * wavefn::hermite_eval(l, t)
}

fn standard_recovery_functions(base: OscillatorParams) -> Result<Vec<CheckRecord>, wavefn::WavefnError> {
    let p = OscillatorParams { xi: Hyperbolic::ONE, ..base };
    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let mut ortho = 0.0f64;
    for (w1, w2, unit) in [(one, zero, BiComplex::E1), (zero, one, BiComplex::E2), (one, one, BiComplex::ONE)] {
        let fam: Vec<MsFunction> = (0..=WAVEFN_MAX_L).map(|l| wavefn::phi_mixed(l, l, w1, w2, &p)).collect::<Result<_, _>>()?;
        for (l, a) in fam.iter().enumerate() {
            for (m, b) in fam.iter().enumerate() {
                let target = if l == m { unit } else { BiComplex::ZERO };
                ortho = ortho.max((wavefn::ms_scalar_product(a, b) - target).modulus());
            }
        }
    }
    Ok(vec![CheckRecord::below(WAVEFN, "standard_recovery_function_embeddings_orthonormal", ortho, ORTHONORMALITY_TOL)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Core, Suite::Fock, Suite::Oscillator, Suite::Wavefn, Suite::All] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_truncation_runs() {
        let cfg = VerifyConfig { trunc: 1, ..Default::default() };
        let report = run(Suite::Oscillator, &cfg).unwrap();
        assert!(report.all_pass, "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn invalid_params_surface() {
        let cfg = VerifyConfig {
            params: OscillatorParams { xi: Hyperbolic::new(0.0, 1.0), ..Default::default() },
            ..Default::default()
        };
        assert!(matches!(run(Suite::Oscillator, &cfg), Err(OscillatorError::InvalidParams(_))));
    }

    #[test]
    fn negative_control_record_semantics() {
        let r = CheckRecord::above("x", "c", 0.5, 0.1);
        assert!(r.pass);
        let r = CheckRecord::below("x", "c", f64::NAN, 0.1);
        assert!(!r.pass);
    }
}
