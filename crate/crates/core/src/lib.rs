//! Bicomplex numbers and the bicomplex quantum harmonic oscillator.
//!
//! - [`bicomplex`]: the ring T in canonical and idempotent form.
//! - [`hyperbolic`]: the subring D and the componentwise calculus on D⁺.
//! - [`fock`]: kets and operators over T on a truncated basis.
//! - [`oscillator`]: ladder operators, Hamiltonian and the mixed spectrum.
//! - [`wavefn`]: Gaussian-polynomial wavefunctions and hyperbolic Hermite polynomials.
//! - [`verify`]: executable identity suites with residual reports.
//! - [`cli`]: the command implementations behind the `bicomplex-qho` binary.

pub mod bicomplex;
pub mod cli;
pub mod fock;
pub mod hyperbolic;
pub mod oscillator;
pub mod tolerance;
pub mod verify;
pub mod wavefn;

pub use bicomplex::{poly_eval, BiComplex, BiComplexError, Encoding, Idempotent};
pub use fock::{BiOperator, FockError, Ket};
pub use hyperbolic::{dplus_func, DomainError, Hyperbolic, RealFn};
pub use oscillator::{Oscillator, OscillatorError, OscillatorParams, SpectrumEntry};
pub use tolerance::Tolerance;
pub use wavefn::{HermitePoly, MsFunction, MsTerm, WavefnError};
