//! Specialization of generic coefficients at roots of unity.

use super::cyclo::{CycloField, CycloNum};
use super::ratfunc::RatFunc2;
use super::text::render_poly;
use super::zpoly::ZPoly2;
use super::{CoeffError, CoeffRing};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// Desk-scale parameters: `r = θ^y`, `s = θ^z` with θ a primitive ℓ-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecParams {
    pub ell: u32,
    pub y: i64,
    pub z: i64,
}

impl Default for SpecParams {
    fn default() -> Self {
        SpecParams { ell: 5, y: 1, z: 2 }
    }
}

impl fmt::Display for SpecParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(ell={}, y={}, z={})", self.ell, self.y, self.z)
    }
}

impl SpecParams {
    pub fn new(ell: u32, y: i64, z: i64) -> Result<Self, CoeffError> {
        let p = SpecParams { ell, y, z };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), CoeffError> {
        let l = self.ell as i64;
        if l < 3 || l % 2 == 0 {
            return Err(CoeffError::InvalidSpec(format!(
                "ell = {} must be odd and at least 3",
                self.ell
            )));
        }
        let d = self.y - self.z;
        if d.gcd(&l) != 1 {
            return Err(CoeffError::InvalidSpec(format!(
                "gcd(y - z, ell) = gcd({d}, {l}) != 1, so r/s is not a primitive root"
            )));
        }
        if (2 * d).rem_euclid(l) == 0 {
            return Err(CoeffError::InvalidSpec(
                "2(y - z) = 0 mod ell, so r^2 = s^2".into(),
            ));
        }
        if (3 * d).rem_euclid(l) == 0 {
            return Err(CoeffError::InvalidSpec(
                "3(y - z) = 0 mod ell, so r^3 = s^3".into(),
            ));
        }
        Ok(())
    }

    /// Orders of r and s as roots of unity.
    pub fn orders(&self) -> (u32, u32) {
        let l = self.ell as i64;
        let d = |x: i64| (l / x.rem_euclid(l).gcd(&l).max(1)) as u32;
        let order = |x: i64| if x.rem_euclid(l) == 0 { 1 } else { d(x) };
        (order(self.y), order(self.z))
    }

    pub fn ring(&self) -> SpecRing {
        SpecRing::new(self.ell, self.y, self.z)
    }
}

/// Q(η), η a primitive n-th root of unity, with `r = η^ey`, `s = η^ez`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecRing {
    field: Arc<CycloField>,
    ey: i64,
    ez: i64,
}

impl SpecRing {
    pub fn new(n: u32, ey: i64, ez: i64) -> Self {
        SpecRing {
            field: Arc::new(CycloField::new(n)),
            ey,
            ez,
        }
    }

    /// Same field, different exponents for r and s.
    pub fn with_exponents(&self, ey: i64, ez: i64) -> Self {
        SpecRing {
            field: self.field.clone(),
            ey,
            ez,
        }
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn exponents(&self) -> (i64, i64) {
        (self.ey, self.ez)
    }

    fn eval_poly(&self, p: &ZPoly2) -> CycloNum {
        let f = &self.field;
        let mut acc = f.zero();
        for ((a, b), c) in p.terms() {
            let k = *a as i64 * self.ey + *b as i64 * self.ez;
            let c = f.from_rational(&num_rational::BigRational::from_integer(c.clone()));
            acc = f.add(&acc, &f.mul(&c, &f.root_power(k)));
        }
        acc
    }
}

/// Evaluates `f` at `r = θ^y`, `s = θ^z`.
pub fn specialize(f: &RatFunc2, spec: &SpecParams) -> Result<CycloNum, CoeffError> {
    spec.ring().embed(f)
}

impl CoeffRing for SpecRing {
    type Elem = CycloNum;

    fn zero(&self) -> CycloNum {
        self.field.zero()
    }
    fn one(&self) -> CycloNum {
        self.field.one()
    }
    fn from_i64(&self, n: i64) -> CycloNum {
        self.field.from_int(n)
    }
    fn is_zero(&self, a: &CycloNum) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.field.add(a, b)
    }
    fn neg(&self, a: &CycloNum) -> CycloNum {
        self.field.neg(a)
    }
    fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.field.mul(a, b)
    }
    fn inv(&self, a: &CycloNum) -> Result<CycloNum, CoeffError> {
        self.field.inv(a)
    }
    fn rs_monomial(&self, er: i64, es: i64) -> CycloNum {
        self.field.root_power(er * self.ey + es * self.ez)
    }
    fn embed(&self, f: &RatFunc2) -> Result<CycloNum, CoeffError> {
        let num = self.eval_poly(f.num_z());
        if f.den_z().is_one() {
            return Ok(num);
        }
        let den = self.eval_poly(f.den_z());
        if den.is_zero() {
            return Err(CoeffError::VanishingDenominator {
                factor: render_poly(f.den_z()),
            });
        }
        Ok(self.field.mul(&num, &self.field.inv(&den)?))
    }
    fn tau_coeff(&self, a: &CycloNum) -> CycloNum {
        a.clone()
    }
    fn tau_ring(&self) -> Self {
        self.with_exponents(self.ez, self.ey)
    }
    fn render(&self, a: &CycloNum) -> String {
        a.render("t")
    }
    fn is_one(&self, a: &CycloNum) -> bool {
        self.field.is_one(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validator_accepts_default_and_rejects_cube_collision() {
        assert!(SpecParams::new(5, 1, 2).is_ok());
        assert!(SpecParams::new(5, 1, 4).is_ok());
        assert!(SpecParams::new(9, 1, 4).is_err());
        assert!(SpecParams::new(4, 1, 2).is_err());
        assert!(SpecParams::new(5, 2, 2).is_err());
    }

    #[test]
    fn monomial_specialization() {
        let spec = SpecParams::default();
        let v = specialize(&RatFunc2::monomial(1, 1, -1), &spec).unwrap();
        assert_eq!(v, spec.ring().field().root_power(4));
    }

    #[test]
    fn inverse_difference_specializes() {
        let spec = SpecParams::default();
        let ring = spec.ring();
        let f = RatFunc2::r().sub(&RatFunc2::s()).inv().unwrap();
        let v = specialize(&f, &spec).unwrap();
        let d = ring.sub(&ring.field().root_power(1), &ring.field().root_power(2));
        assert!(ring.is_one(&ring.mul(&v, &d)));
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        // r^5 - s^5 vanishes at any specialization of order 5.
        let d = RatFunc2::monomial(1, 5, 0).sub(&RatFunc2::monomial(1, 0, 5));
        let f = d.inv().unwrap();
        let err = specialize(&f, &SpecParams::default()).unwrap_err();
        assert!(matches!(err, CoeffError::VanishingDenominator { .. }));
    }

    #[test]
    fn orders_of_parameters() {
        assert_eq!(SpecParams::default().orders(), (5, 5));
        assert_eq!(
            SpecParams {
                ell: 15,
                y: 3,
                z: 5
            }
            .orders(),
            (5, 3)
        );
    }
}
