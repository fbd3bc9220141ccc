use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use bicomplex_qho::cli::{self, Format, RunConfig, WavefunctionRequest};
use bicomplex_qho::verify::Suite;
use bicomplex_qho::{Hyperbolic, OscillatorParams, Tolerance};

#[derive(Parser)]
#[command(name = "bicomplex-qho", version, about = "Bicomplex quantum harmonic oscillator toolkit", allow_negative_numbers = true)]
struct Cli {
    #[command(flatten)]
    shared: Shared,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Shared {
    #[arg(long, global = true, default_value_t = 1.0)]
    m: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    xi1: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    xi2: f64,
    /// Truncation level N; kets live in span{φ_0, ..., φ_N}.
    #[arg(long, global = true, default_value_t = 32)]
    trunc: usize,
    /// Relative tolerance for null-cone and self-adjointness tests.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Energies of e1|φ_l> + e2|φ_l'> for all l <= max-l, l' <= max-lprime.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[arg(long, default_value_t = 4)]
        max_l: usize,
        #[arg(long, default_value_t = 4)]
        max_lprime: usize,
    },
    /// Sample w1 e1 φ_l + w2 e2 φ_l' on an even grid.
    #[command(allow_negative_numbers = true)]
    Wavefunction {
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        lprime: usize,
        #[arg(long, default_value_t = 1.0)]
        w1_re: f64,
        #[arg(long, default_value_t = 0.0)]
        w1_im: f64,
        #[arg(long, default_value_t = 1.0)]
        w2_re: f64,
        #[arg(long, default_value_t = 0.0)]
        w2_im: f64,
        #[arg(long, default_value_t = -5.0)]
        xmin: f64,
        #[arg(long, default_value_t = 5.0)]
        xmax: f64,
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Also emit the 1/j basis columns.
        #[arg(long)]
        unit_j: bool,
    },
    /// Hermite coefficients and the value at θ1 e1 + θ2 e2.
    #[command(allow_negative_numbers = true)]
    Hermite {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0.0)]
        theta1: f64,
        #[arg(long, default_value_t = 0.0)]
        theta2: f64,
    },
    /// Run an identity suite: core, fock, oscillator, wavefn or all.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let s = cli.shared;
    let Some(tolerance) = Tolerance::new(0.0, s.tol) else {
        eprintln!("error: --tol must be a non-negative number");
        return ExitCode::from(cli::EXIT_USAGE);
    };
    // parameters are validated by each command so the error surfaces with exit 2
    let cfg = RunConfig {
        params: OscillatorParams {
            m: s.m,
            omega: s.omega,
            hbar: s.hbar,
            xi: Hyperbolic::new(s.xi1, s.xi2),
        },
        trunc: s.trunc,
        tolerance,
        format: s.format,
        out: s.out,
    };
    let outcome = match cli.command {
        Command::Spectrum { max_l, max_lprime } => cli::cmd_spectrum(&cfg, max_l, max_lprime),
        Command::Wavefunction { l, lprime, w1_re, w1_im, w2_re, w2_im, xmin, xmax, samples, unit_j } => {
            let req = WavefunctionRequest {
                l,
                lprime,
                w1: Complex64::new(w1_re, w1_im),
                w2: Complex64::new(w2_re, w2_im),
                xmin,
                xmax,
                samples,
                unit_j,
            };
            cli::cmd_wavefunction(&cfg, &req)
        }
        Command::Hermite { l, theta1, theta2 } => cli::cmd_hermite(&cfg, l, theta1, theta2),
        Command::Verify { suite } => cli::cmd_verify(&cfg, suite),
    };
    ExitCode::from(outcome.deliver(&cfg))
}
