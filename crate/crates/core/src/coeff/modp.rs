//! Evaluation of generic coefficients at a point of F_p × F_p.
//!
//! Used as an independent cross-check in degrees too large for exact
//! elimination over Q(r,s): an identity over Q(r,s) that fails at a point
//! where all denominators are defined is false.

use super::text::render_poly;
use super::zpoly::ZPoly2;
use super::{CoeffError, CoeffRing, RatFunc2};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// The Mersenne prime 2^61 − 1.
pub const MERSENNE61: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointRing {
    r: u64,
    s: u64,
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MERSENNE61 as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut out = 1;
    while e > 0 {
        if e & 1 == 1 {
            out = mulmod(out, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    out
}

impl PointRing {
    pub fn new(r: u64, s: u64) -> Self {
        assert!(!r.is_multiple_of(MERSENNE61) && !s.is_multiple_of(MERSENNE61));
        PointRing {
            r: r % MERSENNE61,
            s: s % MERSENNE61,
        }
    }

    pub fn point(&self) -> (u64, u64) {
        (self.r, self.s)
    }

    fn reduce_big(c: &BigInt) -> u64 {
        let m = BigInt::from(MERSENNE61);
        let v = ((c % &m) + &m) % &m;
        v.to_u64().expect("reduced")
    }

    fn eval_poly(&self, p: &ZPoly2) -> u64 {
        let mut acc = 0;
        for ((a, b), c) in p.terms() {
            let t = mulmod(Self::reduce_big(c), self.rs_monomial(*a as i64, *b as i64));
            acc = (acc + t) % MERSENNE61;
        }
        acc
    }
}

impl CoeffRing for PointRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(MERSENNE61 as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % MERSENNE61
    }
    fn neg(&self, a: &u64) -> u64 {
        (MERSENNE61 - a) % MERSENNE61
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b)
    }
    fn inv(&self, a: &u64) -> Result<u64, CoeffError> {
        if *a == 0 {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(powmod(*a, MERSENNE61 - 2))
    }
    fn rs_monomial(&self, er: i64, es: i64) -> u64 {
        let f = |x: u64, e: i64| {
            let b = if e < 0 { powmod(x, MERSENNE61 - 2) } else { x };
            powmod(b, e.unsigned_abs())
        };
        mulmod(f(self.r, er), f(self.s, es))
    }
    fn embed(&self, f: &RatFunc2) -> Result<u64, CoeffError> {
        let num = self.eval_poly(f.num_z());
        let den = self.eval_poly(f.den_z());
        if den == 0 {
            return Err(CoeffError::VanishingDenominator {
                factor: render_poly(f.den_z()),
            });
        }
        Ok(mulmod(num, self.inv(&den)?))
    }
    fn tau_coeff(&self, a: &u64) -> u64 {
        *a
    }
    fn tau_ring(&self) -> Self {
        PointRing {
            r: self.s,
            s: self.r,
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_is_a_homomorphism() {
        let k = PointRing::new(1234567, 7654321);
        let a = crate::coeff::parse_ratfunc("(r^2 - s) / (r + 3*s)").unwrap();
        let b = crate::coeff::parse_ratfunc("r*s^-1 - 2").unwrap();
        let (ea, eb) = (k.embed(&a).unwrap(), k.embed(&b).unwrap());
        assert_eq!(k.embed(&a.mul(&b)).unwrap(), k.mul(&ea, &eb));
        assert_eq!(k.embed(&a.add(&b)).unwrap(), k.add(&ea, &eb));
        assert_eq!(k.mul(&ea, &k.inv(&ea).unwrap()), 1);
    }
}
