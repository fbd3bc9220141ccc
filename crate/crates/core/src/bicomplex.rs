//! Bicomplex numbers `w = w_e + w_i1 i₁ + w_i2 i₂ + w_j j`.
//!
//! The four canonical real components are the stored representation. The
//! idempotent view `w = z₁e₁ + z₂e₂`, with `e₁ = (1+j)/2`, `e₂ = (1−j)/2` and
//! `z₁, z₂ ∈ C(i₁)`, is computed on demand. In that view every ring
//! operation is componentwise, which is how inverses, conjugation and
//! polynomial evaluation are defined here.
//!
//! The conversion between the two views costs one addition and one halving
//! per component, so it is exact up to a single rounding. The idempotent
//! units themselves (`e₁ = (½, 0, 0, ½)`) are exactly representable.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum BiComplexError {
    #[error("zero has no inverse")]
    Zero,
    #[error("{0} lies in the null cone and has no inverse")]
    NullCone(BiComplex),
}

/// Element of the bicomplex ring T.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BiComplex {
    pub e: f64,
    pub i1: f64,
    pub i2: f64,
    pub j: f64,
}

/// Which of the two idempotent projections to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Idempotent {
    One,
    Two,
}

impl Idempotent {
    pub const BOTH: [Idempotent; 2] = [Idempotent::One, Idempotent::Two];
}

impl BiComplex {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I1: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const I2: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 0.0, 1.0);
    /// `e₁ = (1 + j)/2`
    pub const E1: Self = Self::new(0.5, 0.0, 0.0, 0.5);
    /// `e₂ = (1 − j)/2`
    pub const E2: Self = Self::new(0.5, 0.0, 0.0, -0.5);

    pub const fn new(e: f64, i1: f64, i2: f64, j: f64) -> Self {
        Self { e, i1, i2, j }
    }

    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    /// Embeds `a + b·i` as `a + b·i₁`.
    pub const fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }

    /// Builds `z₁e₁ + z₂e₂`.
    pub fn from_idempotent(z1: Complex64, z2: Complex64) -> Self {
        Self {
            e: 0.5 * (z1.re + z2.re),
            i1: 0.5 * (z1.im + z2.im),
            i2: 0.5 * (z2.im - z1.im),
            j: 0.5 * (z1.re - z2.re),
        }
    }

    /// Returns `(z₁, z₂)` with `self = z₁e₁ + z₂e₂`.
    pub fn to_idempotent(self) -> (Complex64, Complex64) {
        (self.z1(), self.z2())
    }

    /// `P₁(w) = (w_e + w_j) + (w_i1 − w_i2)i`
    #[inline]
    pub fn z1(self) -> Complex64 {
        Complex64::new(self.e + self.j, self.i1 - self.i2)
    }

    /// `P₂(w) = (w_e − w_j) + (w_i1 + w_i2)i`
    #[inline]
    pub fn z2(self) -> Complex64 {
        Complex64::new(self.e - self.j, self.i1 + self.i2)
    }

    #[inline]
    pub fn project(self, k: Idempotent) -> Complex64 {
        match k {
            Idempotent::One => self.z1(),
            Idempotent::Two => self.z2(),
        }
    }

    /// `z̄₁e₁ + z̄₂e₂`. In canonical components this flips the sign of both
    /// imaginary units and keeps `j`.
    pub fn conj_dagger(self) -> Self {
        Self::new(self.e, -self.i1, -self.i2, self.j)
    }

    pub fn modulus_sqr(self) -> f64 {
        self.e * self.e + self.i1 * self.i1 + self.i2 * self.i2 + self.j * self.j
    }

    /// Euclidean norm on R⁴, `√((|z₁|² + |z₂|²)/2)`.
    pub fn modulus(self) -> f64 {
        self.e.hypot(self.i1).hypot(self.i2.hypot(self.j))
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO || self == -Self::ZERO || self.modulus_sqr() == 0.0
    }

    /// Non-zero element with one idempotent component negligible relative to
    /// the larger one. Zero itself is not a zero divisor.
    pub fn is_null_cone(self, tol: &Tolerance) -> bool {
        let (a, b) = (self.z1().norm(), self.z2().norm());
        let scale = a.max(b);
        if scale == 0.0 {
            return false;
        }
        tol.negligible(a.min(b), scale)
    }

    pub fn inverse(self) -> Result<Self, BiComplexError> {
        self.inverse_with(&Tolerance::default())
    }

    /// `z₁⁻¹e₁ + z₂⁻¹e₂`; fails for zero and for null-cone elements under `tol`.
    pub fn inverse_with(self, tol: &Tolerance) -> Result<Self, BiComplexError> {
        if self.is_zero() {
            return Err(BiComplexError::Zero);
        }
        if self.is_null_cone(tol) {
            return Err(BiComplexError::NullCone(self));
        }
        let (z1, z2) = self.to_idempotent();
        Ok(Self::from_idempotent(z1.inv(), z2.inv()))
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.e * s, self.i1 * s, self.i2 * s, self.j * s)
    }

    /// `true` when both idempotent components are real, i.e. the value lies in D.
    pub fn is_hyperbolic(self, tol: &Tolerance) -> bool {
        tol.negligible(self.i1.hypot(self.i2), self.modulus())
    }

    /// Entrywise closeness: `|self − other| ≤ abs_eps + rel_eps·max(|self|, |other|)`.
    pub fn approx_eq(self, other: Self, tol: &Tolerance) -> bool {
        tol.negligible(
            (self - other).modulus(),
            self.modulus().max(other.modulus()),
        )
    }

    pub fn powi(self, n: u32) -> Self {
        let (z1, z2) = self.to_idempotent();
        Self::from_idempotent(z1.powi(n as i32), z2.powi(n as i32))
    }
}

/// Evaluates `Q(w) = Σ cₖ wᵏ` (coefficients in ascending order) through the
/// idempotent lift `Q(z₁)e₁ + Q(z₂)e₂`.
pub fn poly_eval(coeffs: &[Complex64], w: BiComplex) -> BiComplex {
    let horner = |z: Complex64| {
        coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let (z1, z2) = w.to_idempotent();
    BiComplex::from_idempotent(horner(z1), horner(z2))
}

impl Add for BiComplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.e + o.e, self.i1 + o.i1, self.i2 + o.i2, self.j + o.j)
    }
}

impl Sub for BiComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.e - o.e, self.i1 - o.i1, self.i2 - o.i2, self.j - o.j)
    }
}

impl Neg for BiComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.e, -self.i1, -self.i2, -self.j)
    }
}

impl Mul for BiComplex {
    type Output = Self;
    /// Canonical-basis product. Writing `w = z + z′i₂` with `z = w_e + w_i1 i₁`
    /// and `z′ = w_i2 + w_j i₁`, the product is `(zu − z′u′) + (zu′ + z′u)i₂`.
    /// Terms are paired so that the rounded product is exactly commutative.
    fn mul(self, o: Self) -> Self {
        let (a, b, c, d) = (self.e, self.i1, self.i2, self.j);
        let (p, q, r, s) = (o.e, o.i1, o.i2, o.j);
        Self::new(
            (a * p + d * s) - (b * q + c * r),
            (a * q + b * p) - (c * s + d * r),
            (a * r + c * p) - (b * s + d * q),
            (a * s + d * p) + (b * r + c * q),
        )
    }
}

impl Mul<f64> for BiComplex {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<BiComplex> for f64 {
    type Output = BiComplex;
    fn mul(self, w: BiComplex) -> BiComplex {
        w.scale(self)
    }
}

impl AddAssign for BiComplex {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for BiComplex {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for BiComplex {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl Sum for BiComplex {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl From<f64> for BiComplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl From<Complex64> for BiComplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl fmt::Display for BiComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:+}i1 {:+}i2 {:+}j",
            self.e, self.i1, self.i2, self.j
        )
    }
}

/// JSON layout selector for [`BiComplex`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Encoding {
    /// `{"e":..,"i1":..,"i2":..,"j":..}`
    #[default]
    Canonical,
    /// `{"z1":[re,im],"z2":[re,im]}`
    Idempotent,
}

#[derive(Serialize, Deserialize)]
struct CanonicalRepr {
    e: f64,
    i1: f64,
    i2: f64,
    j: f64,
}

#[derive(Serialize, Deserialize)]
struct IdempotentRepr {
    z1: [f64; 2],
    z2: [f64; 2],
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyRepr {
    Canonical(CanonicalRepr),
    Idempotent(IdempotentRepr),
}

impl BiComplex {
    pub fn to_json(self, encoding: Encoding) -> serde_json::Value {
        let v = match encoding {
            Encoding::Canonical => serde_json::to_value(CanonicalRepr {
                e: self.e,
                i1: self.i1,
                i2: self.i2,
                j: self.j,
            }),
            Encoding::Idempotent => {
                let (z1, z2) = self.to_idempotent();
                serde_json::to_value(IdempotentRepr {
                    z1: [z1.re, z1.im],
                    z2: [z2.re, z2.im],
                })
            }
        };
        v.expect("plain struct of f64 serializes")
    }
}

impl Serialize for BiComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CanonicalRepr {
            e: self.e,
            i1: self.i1,
            i2: self.i2,
            j: self.j,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match AnyRepr::deserialize(d).map_err(|_| {
            D::Error::custom("expected {e,i1,i2,j} or {z1:[re,im],z2:[re,im]}")
        })? {
            AnyRepr::Canonical(c) => Ok(BiComplex::new(c.e, c.i1, c.i2, c.j)),
            AnyRepr::Idempotent(r) => Ok(BiComplex::from_idempotent(
                Complex64::new(r.z1[0], r.z1[1]),
                Complex64::new(r.z2[0], r.z2[1]),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn arb() -> impl Strategy<Value = BiComplex> {
        (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64)
            .prop_map(|(a, b, c, d)| BiComplex::new(a, b, c, d))
    }

    #[test]
    fn idempotent_components_of_units() {
        assert_eq!(BiComplex::ONE.to_idempotent(), (c(1.0, 0.0), c(1.0, 0.0)));
        assert_eq!(BiComplex::E1.to_idempotent(), (c(1.0, 0.0), c(0.0, 0.0)));
        assert_eq!(BiComplex::I1.to_idempotent(), (c(0.0, 1.0), c(0.0, 1.0)));
        assert_eq!(BiComplex::J.to_idempotent(), (c(1.0, 0.0), c(-1.0, 0.0)));
    }

    #[test]
    fn unit_table() {
        use BiComplex as B;
        assert_eq!(B::I1 * B::I2, B::J);
        assert_eq!(B::I1 * B::J, -B::I2);
        assert_eq!(B::I2 * B::J, -B::I1);
        assert_eq!(B::I1 * B::I1, -B::ONE);
        assert_eq!(B::I2 * B::I2, -B::ONE);
        assert_eq!(B::J * B::J, B::ONE);
        assert_eq!(B::E1 * B::E1, B::E1);
        assert_eq!(B::E2 * B::E2, B::E2);
        assert_eq!(B::E1 * B::E2, B::ZERO);
        assert_eq!(B::E1 + B::E2, B::ONE);
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(BiComplex::ONE.inverse().unwrap(), BiComplex::ONE);
        assert!(matches!(
            BiComplex::E1.inverse(),
            Err(BiComplexError::NullCone(_))
        ));
        assert_eq!(BiComplex::ZERO.inverse(), Err(BiComplexError::Zero));
        let w = BiComplex::E1.scale(2.0) + BiComplex::E2.scale(4.0);
        let inv = w.inverse().unwrap();
        assert_eq!(inv, BiComplex::E1.scale(0.5) + BiComplex::E2.scale(0.25));
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(BiComplex::J.conj_dagger(), BiComplex::J);
        assert_eq!(BiComplex::I1.conj_dagger(), -BiComplex::I1);
        let w = BiComplex::ONE + BiComplex::I1;
        let p = w * w.conj_dagger();
        let (z1, z2) = p.to_idempotent();
        assert!(z1.im == 0.0 && z2.im == 0.0 && z1.re >= 0.0 && z2.re >= 0.0);
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(BiComplex::ONE.modulus(), 1.0);
        assert!((BiComplex::E1.modulus() - 0.5f64.sqrt()).abs() < 1e-16);
        assert!(((BiComplex::I1 + BiComplex::I2).modulus() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(BiComplex::ZERO.modulus(), 0.0);
    }

    #[test]
    fn null_cone_examples() {
        let tol = Tolerance::default();
        assert!(BiComplex::E1.is_null_cone(&tol));
        assert!(!BiComplex::ONE.is_null_cone(&tol));
        assert!((BiComplex::J - BiComplex::ONE).is_null_cone(&tol));
        assert!(!BiComplex::ZERO.is_null_cone(&tol));
    }

    #[test]
    fn poly_eval_examples() {
        let sq = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert_eq!(poly_eval(&sq, BiComplex::J), BiComplex::ONE);
        let sq_minus_one = [c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert_eq!(poly_eval(&sq_minus_one, BiComplex::E1), -BiComplex::E2);
    }

    #[test]
    fn modulus_product_bound_is_tight_at_e1() {
        let lhs = (BiComplex::E1 * BiComplex::E1).modulus();
        let rhs = 2f64.sqrt() * BiComplex::E1.modulus() * BiComplex::E1.modulus();
        assert!((lhs - rhs).abs() < 1e-15);
    }

    #[test]
    fn json_accepts_both_layouts() {
        let w: BiComplex = serde_json::from_str(r#"{"e":1,"i1":2,"i2":3,"j":4}"#).unwrap();
        assert_eq!(w, BiComplex::new(1.0, 2.0, 3.0, 4.0));
        let v: BiComplex = serde_json::from_str(r#"{"z1":[1,0],"z2":[0,0]}"#).unwrap();
        assert_eq!(v, BiComplex::E1);
        assert!(serde_json::from_str::<BiComplex>(r#"{"e":1}"#).is_err());
        let text = serde_json::to_string(&BiComplex::E1).unwrap();
        assert_eq!(text, r#"{"e":0.5,"i1":0.0,"i2":0.0,"j":0.5}"#);
        let idem = BiComplex::E1.to_json(Encoding::Idempotent).to_string();
        assert_eq!(idem, r#"{"z1":[1.0,0.0],"z2":[0.0,0.0]}"#);
    }

    proptest! {
        #[test]
        fn idempotent_round_trip(w in arb()) {
            let (z1, z2) = w.to_idempotent();
            let back = BiComplex::from_idempotent(z1, z2);
            prop_assert!((back - w).modulus() <= 1e-15 * w.modulus().max(1.0));
        }

        #[test]
        fn product_is_componentwise(s in arb(), t in arb()) {
            let p = s * t;
            let q = BiComplex::from_idempotent(s.z1() * t.z1(), s.z2() * t.z2());
            prop_assert!((p - q).modulus() <= 1e-12 * (1.0 + s.modulus() * t.modulus()));
        }

        #[test]
        fn ring_laws(s in arb(), t in arb(), u in arb()) {
            let scale = 1e-12 * (1.0 + s.modulus() * t.modulus() * u.modulus());
            prop_assert_eq!(s * t, t * s);
            prop_assert!(((s * t) * u - s * (t * u)).modulus() <= scale);
            prop_assert!((s * (t + u) - (s * t + s * u)).modulus() <= scale);
            prop_assert_eq!(s * BiComplex::ONE, s);
        }

        #[test]
        fn dagger_laws(s in arb(), t in arb()) {
            prop_assert_eq!(s.conj_dagger().conj_dagger(), s);
            prop_assert_eq!((s + t).conj_dagger(), s.conj_dagger() + t.conj_dagger());
            let lhs = (s * t).conj_dagger();
            let rhs = s.conj_dagger() * t.conj_dagger();
            prop_assert!((lhs - rhs).modulus() <= 1e-12 * (1.0 + s.modulus() * t.modulus()));
        }

        #[test]
        fn projections_are_homomorphisms(s in arb(), t in arb()) {
            for k in Idempotent::BOTH {
                prop_assert!(((s + t).project(k) - (s.project(k) + t.project(k))).norm() < 1e-12);
                let prod = (s * t).project(k) - s.project(k) * t.project(k);
                prop_assert!(prod.norm() <= 1e-12 * (1.0 + s.modulus() * t.modulus()));
            }
        }

        #[test]
        fn inverse_is_componentwise_reciprocal(s in arb()) {
            let tol = Tolerance::default();
            match s.inverse() {
                Ok(inv) => {
                    prop_assert!(!s.is_null_cone(&tol));
                    let (z1, z2) = s.to_idempotent();
                    let (r1, r2) = inv.to_idempotent();
                    prop_assert!((r1 - z1.inv()).norm() <= 1e-12 * z1.inv().norm());
                    prop_assert!((r2 - z2.inv()).norm() <= 1e-12 * z2.inv().norm());
                    let one = s * inv;
                    prop_assert!((one - BiComplex::ONE).modulus() < 1e-9);
                }
                Err(_) => prop_assert!(s.is_zero() || s.is_null_cone(&tol)),
            }
        }

        #[test]
        fn poly_eval_matches_canonical_horner(
            s in arb(),
            coeffs in proptest::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 0..6)
        ) {
            let cs: Vec<Complex64> = coeffs.iter().map(|&(a, b)| c(a, b)).collect();
            let horner = cs.iter().rev().fold(BiComplex::ZERO, |acc, &k| acc * s + BiComplex::from(k));
            let lifted = poly_eval(&cs, s);
            let scale = 1e-10 * (1.0 + s.modulus()).powi(cs.len() as i32) * 10.0;
            prop_assert!((horner - lifted).modulus() <= scale);
        }

        #[test]
        fn self_times_dagger_in_d_plus(s in arb()) {
            let p = s * s.conj_dagger();
            let (z1, z2) = p.to_idempotent();
            prop_assert!(z1.re >= 0.0 && z2.re >= 0.0);
            prop_assert!(z1.im.abs() <= 1e-12 * (1.0 + z1.re) && z2.im.abs() <= 1e-12 * (1.0 + z2.re));
        }
    }
}
