//! Truncated free T-module spanned by `|φ₀⟩ … |φ_N⟩`.
//!
//! A [`Ket`] is its coordinate vector over T. A [`BiOperator`] is a dense
//! `(N+1)×(N+1)` matrix over T, kept internally as its two idempotent
//! complex matrices `A = e₁A₁ + e₂A₂`; every product, adjoint and
//! commutator is then a pair of ordinary complex matrix operations.
//!
//! The basis is orthonormal by construction, so the scalar product is
//! `(ψ, χ) = Σₗ wₗ† vₗ`.

use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::bicomplex::{BiComplex, Idempotent};
use crate::hyperbolic::{dplus_func, Hyperbolic, RealFn};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("malformed data: {0}")]
    Malformed(String),
}

fn check_dims(left: usize, right: usize) -> Result<(), FockError> {
    if left == right {
        Ok(())
    } else {
        Err(FockError::DimensionMismatch { left, right })
    }
}

const CZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Coordinates of a ket in the `{|φₗ⟩}` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    coords: Vec<BiComplex>,
}

impl Ket {
    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![BiComplex::ZERO; dim],
        }
    }

    pub fn from_coords(coords: Vec<BiComplex>) -> Self {
        Self { coords }
    }

    /// `|φₗ⟩` in a module of dimension `dim`.
    pub fn basis(dim: usize, l: usize) -> Result<Self, FockError> {
        if l >= dim {
            return Err(FockError::IndexOutOfRange { index: l, dim });
        }
        let mut k = Self::zero(dim);
        k.coords[l] = BiComplex::ONE;
        Ok(k)
    }

    /// Complex-coefficient ket, every coordinate embedded in C(i₁).
    pub fn from_complex(coords: &[Complex64]) -> Self {
        Self {
            coords: coords.iter().map(|&z| BiComplex::from_complex(z)).collect(),
        }
    }

    /// Reassembles `e₁·ψ₁ + e₂·ψ₂` from the two idempotent coordinate lists.
    pub fn from_projections(p1: &[Complex64], p2: &[Complex64]) -> Result<Self, FockError> {
        check_dims(p1.len(), p2.len())?;
        Ok(Self {
            coords: p1
                .iter()
                .zip(p2)
                .map(|(&a, &b)| BiComplex::from_idempotent(a, b))
                .collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BiComplex] {
        &self.coords
    }

    pub fn coord(&self, l: usize) -> BiComplex {
        self.coords[l]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|w| w.is_zero())
    }

    /// `s·ψ`
    pub fn scale(&self, s: BiComplex) -> Self {
        Self {
            coords: self.coords.iter().map(|&w| s * w).collect(),
        }
    }

    pub fn try_add(&self, other: &Ket) -> Result<Ket, FockError> {
        check_dims(self.dim(), other.dim())?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Ket) -> Result<Ket, FockError> {
        check_dims(self.dim(), other.dim())?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Ket, f: impl Fn(BiComplex, BiComplex) -> BiComplex) -> Ket {
        Ket {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Bicomplex scalar product, antilinear in the first slot.
    pub fn scalar_product(&self, other: &Ket) -> Result<BiComplex, FockError> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&w, &v)| w.conj_dagger() * v)
            .sum())
    }

    /// `(ψ, ψ)` computed directly in the idempotent basis, so both
    /// components are sums of squares and never negative.
    pub fn self_product(&self) -> Hyperbolic {
        let (a, b) = self.coords.iter().fold((0.0, 0.0), |(a, b), w| {
            (a + w.z1().norm_sqr(), b + w.z2().norm_sqr())
        });
        Hyperbolic::new(a, b)
    }

    /// Idempotent coordinates `P_k(wₗ)`.
    pub fn projection_coords(&self, k: Idempotent) -> Vec<Complex64> {
        self.coords.iter().map(|w| w.project(k)).collect()
    }

    /// `P_k(ψ)` re-embedded as a ket with C(i₁) coordinates.
    pub fn project(&self, k: Idempotent) -> Ket {
        Ket::from_complex(&self.projection_coords(k))
    }

    /// `|√((ψ, ψ))|`: square root in D⁺ followed by the real modulus.
    pub fn norm(&self) -> f64 {
        dplus_func(self.self_product(), RealFn::Sqrt)
            .expect("self product lies in the closed positive cone")
            .modulus()
    }

    /// Non-zero ket with one idempotent projection negligible.
    pub fn in_null_cone(&self, tol: &Tolerance) -> bool {
        let p = self.self_product();
        let (a, b) = (p.x1.sqrt(), p.x2.sqrt());
        let scale = a.max(b);
        scale > 0.0 && tol.negligible(a.min(b), scale)
    }

    pub fn max_abs_diff(&self, other: &Ket) -> Result<f64, FockError> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (a - b).modulus())
            .fold(0.0, f64::max))
    }

    pub fn max_modulus(&self) -> f64 {
        self.coords.iter().map(|w| w.modulus()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Ket, tol: &Tolerance) -> bool {
        match self.max_abs_diff(other) {
            Ok(d) => tol.negligible(d, self.max_modulus().max(other.max_modulus())),
            Err(_) => false,
        }
    }
}

/// Free-function form of [`Ket::scalar_product`].
pub fn scalar_product(psi: &Ket, chi: &Ket) -> Result<BiComplex, FockError> {
    psi.scalar_product(chi)
}

pub fn ket_norm(psi: &Ket) -> f64 {
    psi.norm()
}

pub fn ket_in_null_cone(psi: &Ket, tol: &Tolerance) -> bool {
    psi.in_null_cone(tol)
}

pub fn project(psi: &Ket, k: Idempotent) -> Ket {
    psi.project(k)
}

impl Add for &Ket {
    type Output = Ket;
    fn add(self, o: &Ket) -> Ket {
        self.try_add(o).expect("ket dimensions agree")
    }
}

impl Sub for &Ket {
    type Output = Ket;
    fn sub(self, o: &Ket) -> Ket {
        self.try_sub(o).expect("ket dimensions agree")
    }
}

impl Neg for &Ket {
    type Output = Ket;
    fn neg(self) -> Ket {
        self.scale(-BiComplex::ONE)
    }
}

/// Dense bicomplex matrix stored as its two idempotent complex matrices
/// (row-major).
#[derive(Clone, Debug, PartialEq)]
pub struct BiOperator {
    dim: usize,
    m1: Vec<Complex64>,
    m2: Vec<Complex64>,
}

impl BiOperator {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            m1: vec![CZERO; dim * dim],
            m2: vec![CZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, BiComplex::ONE)
    }

    /// `s·I`
    pub fn scalar(dim: usize, s: BiComplex) -> Self {
        Self::diag(&vec![s; dim])
    }

    pub fn diag(d: &[BiComplex]) -> Self {
        let n = d.len();
        Self::from_fn(n, |r, c| if r == c { d[r] } else { BiComplex::ZERO })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BiComplex) -> Self {
        let mut op = Self::zero(dim);
        for r in 0..dim {
            for c in 0..dim {
                op.set(r, c, f(r, c));
            }
        }
        op
    }

    /// `e₁A₁ + e₂A₂` from two row-major complex matrices.
    pub fn from_components(dim: usize, m1: Vec<Complex64>, m2: Vec<Complex64>) -> Result<Self, FockError> {
        check_dims(m1.len(), dim * dim)?;
        check_dims(m2.len(), dim * dim)?;
        Ok(Self { dim, m1, m2 })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> BiComplex {
        let i = r * self.dim + c;
        BiComplex::from_idempotent(self.m1[i], self.m2[i])
    }

    pub fn set(&mut self, r: usize, c: usize, w: BiComplex) {
        let i = r * self.dim + c;
        let (z1, z2) = w.to_idempotent();
        self.m1[i] = z1;
        self.m2[i] = z2;
    }

    /// Row-major complex matrix `A_k`.
    pub fn component(&self, k: Idempotent) -> &[Complex64] {
        match k {
            Idempotent::One => &self.m1,
            Idempotent::Two => &self.m2,
        }
    }

    pub fn apply(&self, psi: &Ket) -> Result<Ket, FockError> {
        check_dims(self.dim, psi.dim())?;
        let n = self.dim;
        let p1 = psi.projection_coords(Idempotent::One);
        let p2 = psi.projection_coords(Idempotent::Two);
        let matvec = |m: &[Complex64], v: &[Complex64]| -> Vec<Complex64> {
            (0..n)
                .map(|r| (0..n).map(|c| m[r * n + c] * v[c]).sum())
                .collect()
        };
        Ket::from_projections(&matvec(&self.m1, &p1), &matvec(&self.m2, &p2))
    }

    /// Operator product `self · other`.
    pub fn compose(&self, other: &BiOperator) -> Result<BiOperator, FockError> {
        check_dims(self.dim, other.dim)?;
        let n = self.dim;
        let matmul = |a: &[Complex64], b: &[Complex64]| -> Vec<Complex64> {
            let mut out = vec![CZERO; n * n];
            for r in 0..n {
                for k in 0..n {
                    let x = a[r * n + k];
                    if x == CZERO {
                        continue;
                    }
                    for c in 0..n {
                        out[r * n + c] += x * b[k * n + c];
                    }
                }
            }
            out
        };
        Ok(BiOperator {
            dim: n,
            m1: matmul(&self.m1, &other.m1),
            m2: matmul(&self.m2, &other.m2),
        })
    }

    fn zip_with(&self, other: &BiOperator, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<BiOperator, FockError> {
        check_dims(self.dim, other.dim)?;
        let zip = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect();
        Ok(BiOperator {
            dim: self.dim,
            m1: zip(&self.m1, &other.m1),
            m2: zip(&self.m2, &other.m2),
        })
    }

    pub fn try_add(&self, other: &BiOperator) -> Result<BiOperator, FockError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &BiOperator) -> Result<BiOperator, FockError> {
        self.zip_with(other, |a, b| a - b)
    }

    /// `s·A`
    pub fn scale(&self, s: BiComplex) -> BiOperator {
        let (s1, s2) = s.to_idempotent();
        BiOperator {
            dim: self.dim,
            m1: self.m1.iter().map(|&z| s1 * z).collect(),
            m2: self.m2.iter().map(|&z| s2 * z).collect(),
        }
    }

    /// †-conjugate transpose: the unique `B` with `(ψ, Aχ) = (Bψ, χ)`.
    pub fn adjoint(&self) -> BiOperator {
        let n = self.dim;
        let ct = |m: &[Complex64]| -> Vec<Complex64> {
            (0..n * n)
                .map(|i| {
                    let (r, c) = (i / n, i % n);
                    m[c * n + r].conj()
                })
                .collect()
        };
        BiOperator {
            dim: n,
            m1: ct(&self.m1),
            m2: ct(&self.m2),
        }
    }

    /// `[A, B] = AB − BA`
    pub fn commutator(&self, other: &BiOperator) -> Result<BiOperator, FockError> {
        self.compose(other)?.try_sub(&other.compose(self)?)
    }

    pub fn max_modulus(&self) -> f64 {
        (0..self.dim * self.dim)
            .map(|i| self.get(i / self.dim, i % self.dim).modulus())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &BiOperator) -> Result<f64, FockError> {
        Ok(self.try_sub(other)?.max_modulus())
    }

    pub fn approx_eq(&self, other: &BiOperator, tol: &Tolerance) -> bool {
        match self.max_abs_diff(other) {
            Ok(d) => tol.negligible(d, self.max_modulus().max(other.max_modulus())),
            Err(_) => false,
        }
    }

    pub fn is_self_adjoint(&self, tol: &Tolerance) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }

    /// `e₁A = 0` or `e₂A = 0` for a non-zero operator.
    pub fn in_null_cone(&self, tol: &Tolerance) -> bool {
        let fro = |m: &[Complex64]| m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let (a, b) = (fro(&self.m1), fro(&self.m2));
        let scale = a.max(b);
        scale > 0.0 && tol.negligible(a.min(b), scale)
    }

    /// Leading principal `n×n` block (levels `0..n`).
    pub fn block(&self, n: usize) -> BiOperator {
        let n = n.min(self.dim);
        let cut = |m: &[Complex64]| -> Vec<Complex64> {
            (0..n * n).map(|i| m[(i / n) * self.dim + i % n]).collect()
        };
        BiOperator {
            dim: n,
            m1: cut(&self.m1),
            m2: cut(&self.m2),
        }
    }
}

pub fn adjoint(a: &BiOperator) -> BiOperator {
    a.adjoint()
}

pub fn commutator(a: &BiOperator, b: &BiOperator) -> Result<BiOperator, FockError> {
    a.commutator(b)
}

pub fn is_self_adjoint(a: &BiOperator, tol: &Tolerance) -> bool {
    a.is_self_adjoint(tol)
}

#[derive(Serialize, Deserialize)]
struct KetRepr {
    dim: usize,
    coords: Vec<BiComplex>,
}

#[derive(Serialize, Deserialize)]
struct OperatorRepr {
    dim: usize,
    entries: Vec<Vec<BiComplex>>,
}

impl Serialize for Ket {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        KetRepr {
            dim: self.dim(),
            coords: self.coords.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ket {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = KetRepr::deserialize(d)?;
        if r.coords.len() != r.dim {
            return Err(D::Error::custom(format!(
                "ket header says dim {} but has {} coordinates",
                r.dim,
                r.coords.len()
            )));
        }
        Ok(Ket::from_coords(r.coords))
    }
}

impl Serialize for BiOperator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = self.dim;
        OperatorRepr {
            dim: n,
            entries: (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiOperator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = OperatorRepr::deserialize(d)?;
        if r.entries.len() != r.dim || r.entries.iter().any(|row| row.len() != r.dim) {
            return Err(D::Error::custom(format!(
                "operator header says dim {} but rows do not match",
                r.dim
            )));
        }
        Ok(BiOperator::from_fn(r.dim, |i, j| r.entries[i][j]))
    }
}
