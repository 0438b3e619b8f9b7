//! q-commutators and iterated adjoint powers in U⁺.

use super::{mono_degree, PbwAlgebra, PbwElem};
use crate::coeff::CoeffRing;
use crate::rootdata::{self, LatticeVec};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdError {
    #[error("(ad E{i})^m E{j} still nonzero at m = {cap}")]
    CapExceeded { i: usize, j: usize, cap: u32 },
    #[error("element is not homogeneous")]
    Inhomogeneous,
}

/// `[E_{β_i}, E_{β_j}] = C_ij` for `i < j`.
pub fn commutator<R: CoeffRing>(alg: &PbwAlgebra<R>, i: usize, j: usize) -> PbwElem<R::Elem> {
    alg.rule(i, j).clone()
}

pub fn homogeneous_degree<C: Clone>(x: &PbwElem<C>) -> Option<LatticeVec> {
    let mut it = x.keys().map(mono_degree);
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

/// Left: `(ad_q x)_L^{(m)} y`; right: `(ad_q y)_R^{(m)} x`.
///
/// Step `n` uses the scalar `p^(n-1) q` with `p = ⟨ω'_ν, ω_ν⟩` for the degree
/// `ν` of the acting element.
pub fn ad_q_power<R: CoeffRing>(
    alg: &PbwAlgebra<R>,
    side: AdSide,
    x: &PbwElem<R::Elem>,
    y: &PbwElem<R::Elem>,
    q: &R::Elem,
    m: u32,
) -> Result<PbwElem<R::Elem>, AdError> {
    let ring = alg.ring();
    let (acting, mut cur) = match side {
        AdSide::Left => (x, y.clone()),
        AdSide::Right => (y, x.clone()),
    };
    if m == 0 {
        return Ok(cur);
    }
    let nu = homogeneous_degree(acting).ok_or(AdError::Inhomogeneous)?;
    let (pa, pb) = rootdata::pairing_exps(&nu, &nu);
    let p = ring.rs_monomial(pa, pb);
    let mut scal = q.clone();
    for _ in 0..m {
        let (a, b) = match side {
            AdSide::Left => (alg.multiply(acting, &cur), alg.multiply(&cur, acting)),
            AdSide::Right => (alg.multiply(&cur, acting), alg.multiply(acting, &cur)),
        };
        let mut next = a;
        next.add_scaled(ring, &b, &ring.neg(&scal));
        cur = next;
        scal = ring.mul(&scal, &p);
    }
    Ok(cur)
}

/// Least `m ≤ cap` with `(ad_q E_{β_i})_L^{(m)} E_{β_j} = 0`, `q = ⟨ω'_{β_j}, ω_{β_i}⟩`.
pub fn ad_nilpotency_degree<R: CoeffRing>(
    alg: &PbwAlgebra<R>,
    i: usize,
    j: usize,
    cap: u32,
) -> Result<u32, AdError> {
    let ring = alg.ring();
    let x = alg.root(i);
    let (qa, qb) =
        rootdata::pairing_exps(&rootdata::root(j).lattice(), &rootdata::root(i).lattice());
    let q = ring.rs_monomial(qa, qb);
    let (pa, pb) =
        rootdata::pairing_exps(&rootdata::root(i).lattice(), &rootdata::root(i).lattice());
    let p = ring.rs_monomial(pa, pb);
    let mut cur = alg.root(j);
    let mut scal = q;
    for m in 1..=cap {
        let mut next = alg.multiply(&x, &cur);
        next.add_scaled(ring, &alg.multiply(&cur, &x), &ring.neg(&scal));
        if next.is_zero() {
            return Ok(m);
        }
        cur = next;
        scal = ring.mul(&scal, &p);
    }
    Err(AdError::CapExceeded { i, j, cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatField;
    use crate::pbwplus::{build_straightening_table, Truncation};

    #[test]
    fn degrees_and_trivial_powers() {
        crate::run_with_stack(|| {
            let t = build_straightening_table().unwrap();
            let alg = PbwAlgebra::new(RatField, &t, Truncation::None);
            let x = alg.root(7);
            assert_eq!(homogeneous_degree(&x), Some(rootdata::root(7).lattice()));
            let mut mixed = x.clone();
            mixed.add_assign(&RatField, &alg.root(8));
            assert_eq!(homogeneous_degree(&mixed), None);
            let y = alg.root(3);
            let q = RatField.one();
            assert_eq!(ad_q_power(&alg, AdSide::Left, &x, &y, &q, 0), Ok(y.clone()));
            assert_eq!(
                ad_q_power(&alg, AdSide::Left, &mixed, &y, &q, 1),
                Err(AdError::Inhomogeneous)
            );
        });
    }

    #[test]
    fn adjacent_roots_commute_after_one_step() {
        crate::run_with_stack(|| {
            let t = build_straightening_table().unwrap();
            let alg = PbwAlgebra::new(RatField, &t, Truncation::None);
            for i in 1..24 {
                assert_eq!(ad_nilpotency_degree(&alg, i, i + 1, 12), Ok(1));
            }
        });
    }
}
