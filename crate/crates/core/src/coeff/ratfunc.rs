//! Exact rational functions in two commuting indeterminates `r`, `s`.

use super::zpoly::{poly_div_exact, poly_gcd, Exp2, ZPoly2};
use super::CoeffError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `r`, `s` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    pub terms: BTreeMap<Exp2, BigRational>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: BigRational, e: Exp2) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly2 { terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let v = terms.entry(*e).or_insert_with(BigRational::zero);
            *v += c;
            if v.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly2 { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly2::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out = out.add(&LaurentPoly2::monomial(ca * cb, (ea.0 + eb.0, ea.1 + eb.1)));
            }
        }
        out
    }

    /// Integer-coefficient multiple together with the scaling denominator.
    fn integral(&self) -> (ZPoly2, BigInt) {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let raw = self
            .terms
            .iter()
            .map(|(e, c)| (*e, (c * BigRational::from_integer(l.clone())).to_integer()))
            .collect();
        (ZPoly2::from_terms(raw), l)
    }

    fn from_z(p: &ZPoly2) -> Self {
        LaurentPoly2 {
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| (*e, BigRational::from_integer(c.clone())))
                .collect(),
        }
    }
}

/// Element of Q(r, s) in canonical form.
///
/// `num` and `den` have integer coefficients; `den` is a polynomial not
/// divisible by `r` or `s`, coprime to `num` over Q[r, s], with positive
/// lexicographically-greatest coefficient; integer contents are coprime.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc2 {
    num: ZPoly2,
    den: ZPoly2,
}

impl fmt::Debug for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl RatFunc2 {
    pub fn zero() -> Self {
        RatFunc2 {
            num: ZPoly2::zero(),
            den: ZPoly2::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RatFunc2 {
            num: ZPoly2::constant(n),
            den: ZPoly2::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(
            ZPoly2::constant(q.numer().clone()),
            ZPoly2::constant(q.denom().clone()),
        )
    }

    /// `c · r^er · s^es`.
    pub fn monomial(c: i64, er: i32, es: i32) -> Self {
        RatFunc2 {
            num: ZPoly2::monomial(BigInt::from(c), (er, es)),
            den: ZPoly2::one(),
        }
    }

    pub fn r() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_laurent(p: &LaurentPoly2) -> Self {
        let (z, l) = p.integral();
        Self::normalized(z, ZPoly2::constant(l))
    }

    pub fn from_zpolys(num: ZPoly2, den: ZPoly2) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn numerator(&self) -> LaurentPoly2 {
        LaurentPoly2::from_z(&self.num)
    }

    pub fn denominator(&self) -> LaurentPoly2 {
        LaurentPoly2::from_z(&self.den)
    }

    pub fn num_z(&self) -> &ZPoly2 {
        &self.num
    }

    pub fn den_z(&self) -> &ZPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the denominator is trivial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn normalized(num: ZPoly2, den: ZPoly2) -> Self {
        Self::normalize_with(num, den, true)
    }

    fn normalize_with(num: ZPoly2, den: ZPoly2, poly_gcd_needed: bool) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (nr, ns) = num.min_exps();
        let (dr, ds) = den.min_exps();
        let mut n0 = num.shift((-nr, -ns));
        let mut d0 = den.shift((-dr, -ds));
        if poly_gcd_needed && !d0.is_monomial() {
            let g = poly_gcd(&n0, &d0);
            if !g.is_one() {
                n0 = poly_div_exact(&n0, &g);
                d0 = poly_div_exact(&d0, &g);
            }
        }
        let cn = n0.content();
        let cd = d0.content();
        let mut h = cn.gcd(&cd);
        if d0.leading().is_some_and(|t| t.1.is_negative()) {
            h = -h;
        }
        if !h.is_one() {
            n0 = n0.div_int(&h);
            d0 = d0.div_int(&h);
        }
        RatFunc2 {
            num: n0.shift((nr - dr, ns - ds)),
            den: d0,
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc2 {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc2 {
                num: self.num.add(&other.num),
                den: ZPoly2::one(),
            };
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if n.is_zero() {
                return Self::zero();
            }
            return Self::normalized(n, self.den.clone());
        }
        if self.den.is_one() {
            let n = self.num.mul(&other.den).add(&other.num);
            return Self::keep_den(n, other.den.clone());
        }
        if other.den.is_one() {
            let n = other.num.mul(&self.den).add(&self.num);
            return Self::keep_den(n, self.den.clone());
        }
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::normalized(n, self.den.mul(&other.den));
        }
        let a = poly_div_exact(&self.den, &g);
        let b = poly_div_exact(&other.den, &g);
        let n = self.num.mul(&b).add(&other.num.mul(&a));
        Self::normalized(n, a.mul(&other.den))
    }

    /// Sum whose denominator is known to stay coprime with the numerator.
    fn keep_den(num: ZPoly2, den: ZPoly2) -> Self {
        if num.is_zero() {
            Self::zero()
        } else {
            RatFunc2 { num, den }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc2 {
                num: self.num.mul(&other.num),
                den: ZPoly2::one(),
            };
        }
        // Cross-cancel so that the products stay small.
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        Self::normalize_with(num, den, false)
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Image under the field automorphism `r ↔ s`.
    pub fn swap_rs(&self) -> Self {
        Self::normalized(self.num.swap_rs(), self.den.swap_rs())
    }
}

/// Removes the common polynomial factor of `a` (Laurent) and `b` (canonical denominator).
fn cancel(a: &ZPoly2, b: &ZPoly2) -> (ZPoly2, ZPoly2) {
    if b.is_monomial() {
        return (a.clone(), b.clone());
    }
    let (ar, as_) = a.min_exps();
    let a0 = a.shift((-ar, -as_));
    let g = poly_gcd(&a0, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            poly_div_exact(&a0, &g).shift((ar, as_)),
            poly_div_exact(b, &g),
        )
    }
}

impl fmt::Display for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_ratfunc(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> RatFunc2 {
        RatFunc2::r()
    }
    fn s() -> RatFunc2 {
        RatFunc2::s()
    }

    #[test]
    fn additive_inverse() {
        let a = r().sub(&s());
        let b = s().sub(&r());
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn difference_of_squares_quotient() {
        let num = r().mul(&r()).sub(&s().mul(&s()));
        let q = num.div(&r().sub(&s())).unwrap();
        assert_eq!(q, r().add(&s()));
    }

    #[test]
    fn inverse_times_self() {
        let d = r().sub(&s());
        assert!(d.inv().unwrap().mul(&d).is_one());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert!(matches!(
            RatFunc2::one().div(&RatFunc2::zero()),
            Err(CoeffError::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_form_ignores_representation() {
        // (2r^2 s - 2 s^3) / (4 r s + 4 s^2) = (r - s) / 2
        let a = RatFunc2::from_zpolys(
            r().sub(&s())
                .mul(&r().add(&s()))
                .mul(&RatFunc2::monomial(2, 0, 1))
                .num_z()
                .clone(),
            r().add(&s())
                .mul(&RatFunc2::monomial(4, 0, 1))
                .num_z()
                .clone(),
        )
        .unwrap();
        let b = r()
            .sub(&s())
            .mul(&RatFunc2::from_rational(&BigRational::new(
                1.into(),
                2.into(),
            )));
        assert_eq!(a, b);
    }

    #[test]
    fn swap_is_involution() {
        let a = r()
            .add(&RatFunc2::monomial(3, 2, -1))
            .div(&r().sub(&s()))
            .unwrap();
        assert_eq!(a.swap_rs().swap_rs(), a);
        assert_ne!(a.swap_rs(), a);
    }
}
