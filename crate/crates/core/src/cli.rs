//! Command implementations behind the `bicomplex-qho` binary.
//!
//! Each `cmd_*` function renders its full output into an [`Outcome`] so the
//! commands can be driven and inspected without spawning a process. Exit
//! codes: 0 success, 1 verification failure, 2 usage or configuration error.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::hyperbolic::Hyperbolic;
use crate::oscillator::{Oscillator, OscillatorParams};
use crate::tolerance::Tolerance;
use crate::verify::{self, Suite, VerifyConfig};
use crate::wavefn::{self, MAX_ORDER};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format '{other}' (expected json or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub params: OscillatorParams,
    pub trunc: usize,
    pub tolerance: Tolerance,
    pub format: Format,
    /// `None` writes to standard output.
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: OscillatorParams::default(),
            trunc: 32,
            tolerance: Tolerance::default(),
            format: Format::Json,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        self.params.validate().map_err(|e| e.to_string())?;
        if self.trunc < 1 {
            return Err(format!("truncation must be at least 1, got {}", self.trunc));
        }
        if Tolerance::new(self.tolerance.abs_eps, self.tolerance.rel_eps).is_none() {
            return Err("tolerances must be non-negative".to_string());
        }
        Ok(())
    }
}

/// Rendered result of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub output: String,
    pub message: Option<String>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { code: EXIT_OK, output, message: None }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            output: String::new(),
            message: Some(message.into()),
        }
    }

    /// Writes the output to the configured destination and any message to
    /// standard error. Returns the final exit code.
    pub fn deliver(self, cfg: &RunConfig) -> u8 {
        if let Some(msg) = &self.message {
            eprintln!("error: {msg}");
        }
        if self.output.is_empty() {
            return self.code;
        }
        let written = match &cfg.out {
            Some(path) => fs::write(path, &self.output),
            None => io::stdout().lock().write_all(self.output.as_bytes()),
        };
        match written {
            Ok(()) => self.code,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                EXIT_USAGE
            }
        }
    }
}

fn config_json(cfg: &RunConfig) -> Value {
    json!({
        "params": cfg.params,
        "trunc": cfg.trunc,
        "tolerance": cfg.tolerance,
    })
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

fn render_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Shortest round-trip form, switching to exponent notation for very large
/// or small magnitudes.
fn num(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
struct SpectrumRecord {
    l: usize,
    lprime: usize,
    energy: Hyperbolic,
    norm: f64,
}

/// Energies and norms of `e₁|φ_l⟩ + e₂|φ_{l′}⟩` for all `l ≤ max_l`,
/// `l′ ≤ max_lprime`, ordered `l` major.
pub fn cmd_spectrum(cfg: &RunConfig, max_l: usize, max_lprime: usize) -> Outcome {
    if let Err(e) = cfg.validate() {
        return Outcome::usage(e);
    }
    if max_l > cfg.trunc || max_lprime > cfg.trunc {
        return Outcome::usage(format!(
            "max-l ({max_l}) and max-lprime ({max_lprime}) must not exceed the truncation N = {}",
            cfg.trunc
        ));
    }
    let osc = match Oscillator::new(cfg.trunc, cfg.params) {
        Ok(o) => o,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let one = Complex64::new(1.0, 0.0);
    let mut records = Vec::new();
    for l in 0..=max_l {
        for lprime in 0..=max_lprime {
            let entry = match osc.eigenket(l, lprime, one, one) {
                Ok(e) => e,
                Err(e) => return Outcome::usage(e.to_string()),
            };
            records.push(SpectrumRecord {
                l,
                lprime,
                energy: entry.energy,
                norm: entry.norm(),
            });
        }
    }
    Outcome::ok(match cfg.format {
        Format::Json => render_json(&json!({
            "command": "spectrum",
            "config": config_json(cfg),
            "records": records,
        })),
        Format::Csv => render_csv(
            &["l", "lprime", "E1", "E2"],
            records
                .iter()
                .map(|r| vec![r.l.to_string(), r.lprime.to_string(), num(r.energy.x1), num(r.energy.x2)]),
        ),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WavefunctionRequest {
    pub l: usize,
    pub lprime: usize,
    pub w1: Complex64,
    pub w2: Complex64,
    pub xmin: f64,
    pub xmax: f64,
    pub samples: usize,
    /// Also emit the `1, j` basis split.
    pub unit_j: bool,
}

impl Default for WavefunctionRequest {
    fn default() -> Self {
        Self {
            l: 0,
            lprime: 0,
            w1: Complex64::new(1.0, 0.0),
            w2: Complex64::new(1.0, 0.0),
            xmin: -5.0,
            xmax: 5.0,
            samples: 101,
            unit_j: false,
        }
    }
}

/// Samples `w₁e₁φ_l + w₂e₂φ_{l′}` on an even grid.
pub fn cmd_wavefunction(cfg: &RunConfig, req: &WavefunctionRequest) -> Outcome {
    if let Err(e) = cfg.validate() {
        return Outcome::usage(e);
    }
    if !(req.xmin.is_finite() && req.xmax.is_finite() && req.xmin < req.xmax) {
        return Outcome::usage(format!("need finite xmin < xmax, got [{}, {}]", req.xmin, req.xmax));
    }
    if req.samples < 2 {
        return Outcome::usage(format!("need at least 2 samples, got {}", req.samples));
    }
    let u = match wavefn::phi_mixed(req.l, req.lprime, req.w1, req.w2, &cfg.params) {
        Ok(u) => u,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let pts = wavefn::sample(&u, req.xmin, req.xmax, req.samples);
    Outcome::ok(match cfg.format {
        Format::Json => {
            let records: Vec<Value> = pts
                .iter()
                .map(|s| {
                    let mut r = json!({ "x": s.x, "u1": s.u1, "u2": s.u2 });
                    if req.unit_j {
                        r["real"] = json!(s.real);
                        r["j"] = json!(s.j);
                    }
                    r
                })
                .collect();
            render_json(&json!({
                "command": "wavefunction",
                "config": config_json(cfg),
                "l": req.l,
                "lprime": req.lprime,
                "w1": req.w1,
                "w2": req.w2,
                "records": records,
            }))
        }
        Format::Csv => {
            let mut header = vec!["x", "u1_re", "u1_im", "u2_re", "u2_im"];
            if req.unit_j {
                header.extend(["real_re", "real_im", "j_re", "j_im"]);
            }
            render_csv(
                &header,
                pts.iter().map(|s| {
                    let mut row = vec![num(s.x), num(s.u1.re), num(s.u1.im), num(s.u2.re), num(s.u2.im)];
                    if req.unit_j {
                        row.extend([num(s.real.re), num(s.real.im), num(s.j.re), num(s.j.im)]);
                    }
                    row
                }),
            )
        }
    })
}

/// Integer coefficients of `H_l` and its value at `θ₁e₁ + θ₂e₂`.
pub fn cmd_hermite(cfg: &RunConfig, l: usize, theta1: f64, theta2: f64) -> Outcome {
    let poly = match wavefn::hermite_coeffs(l) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("{e} (maximum order is {MAX_ORDER})")),
    };
    let theta = Hyperbolic::new(theta1, theta2);
    let value = wavefn::hermite_hyperbolic_eval(l, theta);
    // decimal strings: coefficients of high orders exceed every JSON integer range
    let coeffs: Vec<String> = poly.coeffs.iter().map(|c| c.to_string()).collect();
    Outcome::ok(match cfg.format {
        Format::Json => render_json(&json!({
            "command": "hermite",
            "records": [{
                "l": l,
                "theta": theta,
                "value": value,
                "coefficients": coeffs,
            }],
        })),
        Format::Csv => render_csv(
            &["l", "theta1", "theta2", "value1", "value2", "coefficients"],
            [vec![l.to_string(), num(theta1), num(theta2), num(value.x1), num(value.x2), coeffs.join(" ")]],
        ),
    })
}

/// Runs one identity suite. Exit 0 iff every check passes.
pub fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Outcome {
    if let Err(e) = cfg.validate() {
        return Outcome::usage(e);
    }
    let vcfg = VerifyConfig {
        params: cfg.params,
        trunc: cfg.trunc,
        tol: cfg.tolerance,
    };
    let report = match verify::run(suite, &vcfg) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let output = match cfg.format {
        Format::Json => render_json(&json!({
            "command": "verify",
            "suite": report.suite,
            "config": config_json(cfg),
            "all_pass": report.all_pass,
            "records": report.records,
        })),
        Format::Csv => render_csv(
            &["suite", "check", "pass", "worst_residual", "threshold", "expect"],
            report.records.iter().map(|r| {
                vec![
                    r.suite.to_string(),
                    r.check.clone(),
                    r.pass.to_string(),
                    num(r.worst_residual),
                    num(r.threshold),
                    match r.expect {
                        verify::Expect::Below => "below".to_string(),
                        verify::Expect::Above => "above".to_string(),
                    },
                ]
            }),
        ),
    };
    let failed: Vec<String> = report.failures().map(|r| format!("{}/{}", r.suite, r.check)).collect();
    Outcome {
        code: if failed.is_empty() { EXIT_OK } else { EXIT_FAILURE },
        output,
        message: (!failed.is_empty()).then(|| format!("failed checks: {}", failed.join(", "))),
    }
}
