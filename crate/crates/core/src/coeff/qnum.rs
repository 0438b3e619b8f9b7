//! q-numbers, q-factorials and q-binomials in polynomial form.

use super::ratfunc::RatFunc2;
use super::{CoeffError, CoeffRing};
use num_bigint::BigInt;
use num_traits::Zero;

/// `[n]_t = 1 + t + ... + t^(n-1)`, with `[0]_t = 0`.
pub fn qnumber(n: u32, t: &RatFunc2) -> RatFunc2 {
    let mut acc = RatFunc2::zero();
    let mut p = RatFunc2::one();
    for _ in 0..n {
        acc = acc.add(&p);
        p = p.mul(t);
    }
    acc
}

pub fn qfactorial(n: u32, t: &RatFunc2) -> RatFunc2 {
    (1..=n).fold(RatFunc2::one(), |acc, k| acc.mul(&qnumber(k, t)))
}

/// Coefficients (low to high) of the Gaussian binomial as a polynomial in t.
pub fn qbinomial_poly(m: u32, n: u32) -> Result<Vec<BigInt>, CoeffError> {
    if n > m {
        return Err(CoeffError::BinomialRange { m, n });
    }
    // row[k] holds the polynomial of C(j, k) for the current j.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for j in 1..=m {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(j as usize + 1);
        for k in 0..=j {
            // C(j, k) = C(j-1, k-1) + t^k C(j-1, k)
            let mut p: Vec<BigInt> = if k >= 1 {
                row[k as usize - 1].clone()
            } else {
                Vec::new()
            };
            if k < j {
                let q = &row[k as usize];
                let need = q.len() + k as usize;
                if p.len() < need {
                    p.resize(need, BigInt::zero());
                }
                for (i, c) in q.iter().enumerate() {
                    p[i + k as usize] += c;
                }
            }
            next.push(p);
        }
        row = next;
    }
    Ok(row.swap_remove(n as usize))
}

/// Gaussian binomial `[m choose n]_t` as a denominator-free element.
pub fn qbinomial(m: u32, n: u32, t: &RatFunc2) -> Result<RatFunc2, CoeffError> {
    let coeffs = qbinomial_poly(m, n)?;
    let mut acc = RatFunc2::zero();
    let mut p = RatFunc2::one();
    for c in coeffs {
        acc = acc.add(&p.mul(&RatFunc2::from_bigint(c)));
        p = p.mul(t);
    }
    Ok(acc)
}

/// Evaluates the polynomial form of the Gaussian binomial at `t` in `ring`.
pub fn qbinomial_at_root<R: CoeffRing>(
    m: u32,
    n: u32,
    ring: &R,
    t: &R::Elem,
) -> Result<R::Elem, CoeffError> {
    let coeffs = qbinomial_poly(m, n)?;
    let mut acc = ring.zero();
    for c in coeffs.iter().rev() {
        let k = i64::try_from(c)
            .map_err(|_| CoeffError::Parse("binomial coefficient overflow".into()))?;
        acc = ring.add(&ring.mul(&acc, t), &ring.from_i64(k));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{RatField, SpecParams};

    fn t() -> RatFunc2 {
        RatFunc2::r().mul(&RatFunc2::s().inv().unwrap())
    }

    #[test]
    fn small_qnumbers() {
        assert!(qnumber(0, &t()).is_zero());
        let three = RatFunc2::one().add(&t()).add(&t().mul(&t()));
        assert_eq!(qnumber(3, &t()), three);
        assert_eq!(qbinomial(2, 1, &t()).unwrap(), RatFunc2::one().add(&t()));
    }

    #[test]
    fn binomial_equals_factorial_quotient() {
        for m in 0..7 {
            for n in 0..=m {
                let lhs = qbinomial(m, n, &t()).unwrap();
                let rhs = qfactorial(m, &t())
                    .div(&qfactorial(n, &t()).mul(&qfactorial(m - n, &t())))
                    .unwrap();
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn out_of_range_is_error() {
        assert!(qbinomial(2, 3, &t()).is_err());
    }

    #[test]
    fn binomials_vanish_at_primitive_root() {
        let spec = SpecParams::default();
        let ring = spec.ring();
        let theta = ring.field().root_power(1);
        for k in 1..5 {
            assert!(ring.is_zero(&qbinomial_at_root(5, k, &ring, &theta).unwrap()));
        }
        assert!(ring.is_one(&qbinomial_at_root(5, 0, &ring, &theta).unwrap()));
        assert!(ring.is_one(&qbinomial_at_root(5, 5, &ring, &theta).unwrap()));
        let g = RatField;
        assert_eq!(qbinomial_at_root(3, 1, &g, &t()).unwrap(), qnumber(3, &t()));
    }
}
