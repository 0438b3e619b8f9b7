//! Exact coefficient arithmetic: rational functions in `r`, `s`, cyclotomic
//! numbers, q-combinatorics and specialization at roots of unity.

mod cyclo;
mod modp;
mod qnum;
mod ratfunc;
mod spec;
mod text;
mod zpoly;

pub use cyclo::{cyclotomic_poly, CycloField, CycloNum};
pub use modp::{PointRing, MERSENNE61};
pub use qnum::{qbinomial, qbinomial_at_root, qbinomial_poly, qfactorial, qnumber};
pub use ratfunc::{LaurentPoly2, RatFunc2};
pub use spec::{specialize, SpecParams, SpecRing};
pub use text::{parse_ratfunc, render_ratfunc};
pub use zpoly::{Exp2, ZPoly2};

use std::fmt::Debug;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator factor {factor} vanishes at the specialization")]
    VanishingDenominator { factor: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid specialization parameters: {0}")]
    InvalidSpec(String),
    #[error("q-binomial index out of range: n = {n} > m = {m}")]
    BinomialRange { m: u32, n: u32 },
}

/// A coefficient field together with the images of the parameters `r`, `s`.
///
/// Arithmetic goes through the ring value so that contextual fields (a
/// cyclotomic modulus) need not be stored in every element.
pub trait CoeffRing: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, CoeffError>;
    /// `r^er · s^es`.
    fn rs_monomial(&self, er: i64, es: i64) -> Self::Elem;
    /// Image of a generic coefficient.
    fn embed(&self, f: &RatFunc2) -> Result<Self::Elem, CoeffError>;
    /// Coefficient map induced by τ, together with the codomain ring.
    fn tau_coeff(&self, a: &Self::Elem) -> Self::Elem;
    fn tau_ring(&self) -> Self;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Size heuristic used to pick pivots in elimination.
    fn complexity(&self, _a: &Self::Elem) -> usize {
        1
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, CoeffError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, CoeffError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut out = self.one();
        for _ in 0..e.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        Ok(out)
    }
}

/// The generic field Q(r, s).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatField;

impl CoeffRing for RatField {
    type Elem = RatFunc2;

    fn zero(&self) -> RatFunc2 {
        RatFunc2::zero()
    }
    fn one(&self) -> RatFunc2 {
        RatFunc2::one()
    }
    fn from_i64(&self, n: i64) -> RatFunc2 {
        RatFunc2::from_int(n)
    }
    fn is_zero(&self, a: &RatFunc2) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc2, b: &RatFunc2) -> RatFunc2 {
        a.add(b)
    }
    fn neg(&self, a: &RatFunc2) -> RatFunc2 {
        a.neg()
    }
    fn mul(&self, a: &RatFunc2, b: &RatFunc2) -> RatFunc2 {
        a.mul(b)
    }
    fn inv(&self, a: &RatFunc2) -> Result<RatFunc2, CoeffError> {
        a.inv()
    }
    fn rs_monomial(&self, er: i64, es: i64) -> RatFunc2 {
        RatFunc2::monomial(1, er as i32, es as i32)
    }
    fn embed(&self, f: &RatFunc2) -> Result<RatFunc2, CoeffError> {
        Ok(f.clone())
    }
    fn tau_coeff(&self, a: &RatFunc2) -> RatFunc2 {
        a.swap_rs()
    }
    fn tau_ring(&self) -> Self {
        RatField
    }
    fn render(&self, a: &RatFunc2) -> String {
        a.to_string()
    }
    fn is_one(&self, a: &RatFunc2) -> bool {
        a.is_one()
    }
    fn complexity(&self, a: &RatFunc2) -> usize {
        a.num_z().terms().len() + a.den_z().terms().len()
    }
}
