//! Degree components of the free algebra on `E_1..E_4` modulo the defining
//! relations of U⁺,
//! computed by linear algebra independent of the straightening table.

use super::tree::{expand_to_free, free_multiply, FreeElem, Word};
use super::{mono_factors, PbwElem};
use crate::coeff::{CoeffError, CoeffRing};
use crate::linalg::SparseEchelon;
use crate::rootdata::{self, LatticeVec};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree of height {height} exceeds the oracle bound {bound}")]
    HeightExceeded { height: i64, bound: i64 },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// The six Serre elements `(F5)_1 … (F5)_6` as free polynomials.
pub fn serre_element<R: CoeffRing>(ring: &R, n: usize) -> FreeElem<R::Elem> {
    let m = |er: i64, es: i64| ring.rs_monomial(er, es);
    let sum = |xs: &[(i64, i64)]| {
        xs.iter()
            .fold(ring.zero(), |acc, &(a, b)| ring.add(&acc, &m(a, b)))
    };
    let neg = |x: R::Elem| ring.neg(&x);
    let w = |s: &str| -> Word { s.bytes().map(|b| b - b'0').collect() };
    let terms: Vec<(Word, R::Elem)> = match n {
        1 => vec![
            (w("112"), ring.one()),
            (w("121"), neg(sum(&[(2, 0), (0, 2)]))),
            (w("211"), m(2, 2)),
        ],
        2 => vec![
            (w("221"), ring.one()),
            (w("212"), neg(sum(&[(-2, 0), (0, -2)]))),
            (w("122"), m(-2, -2)),
        ],
        3 => vec![
            (w("223"), ring.one()),
            (w("232"), neg(sum(&[(2, 0), (0, 2)]))),
            (w("322"), m(2, 2)),
        ],
        4 => {
            let c = sum(&[(-2, 0), (-1, -1), (0, -2)]);
            vec![
                (w("3332"), ring.one()),
                (w("3323"), neg(c.clone())),
                (w("3233"), ring.mul(&m(-1, -1), &c)),
                (w("2333"), neg(m(-3, -3))),
            ]
        }
        5 => vec![
            (w("334"), ring.one()),
            (w("343"), neg(sum(&[(1, 0), (0, 1)]))),
            (w("433"), m(1, 1)),
        ],
        6 => vec![
            (w("443"), ring.one()),
            (w("434"), neg(sum(&[(-1, 0), (0, -1)]))),
            (w("344"), m(-1, -1)),
        ],
        _ => panic!("Serre relation index {} out of range", n),
    };
    FreeElem::from_terms(ring, terms)
}

/// `E_i E_j − a_ij E_j E_i` for the disconnected pairs `(1,3)`, `(1,4)`, `(2,4)`.
pub fn commuting_element<R: CoeffRing>(ring: &R, i: usize, j: usize) -> FreeElem<R::Elem> {
    let (a, b) = rootdata::structural_exps(i, j);
    FreeElem::from_terms(
        ring,
        [
            (vec![i as u8, j as u8], ring.one()),
            (vec![j as u8, i as u8], ring.neg(&ring.rs_monomial(a, b))),
        ],
    )
}

/// Defining relations of U⁺: the six Serre elements and the three commutators
/// of disconnected simple roots.
pub fn positive_relations<R: CoeffRing>(ring: &R) -> Vec<FreeElem<R::Elem>> {
    let mut out: Vec<_> = (1..=6).map(|n| serre_element(ring, n)).collect();
    for (i, j) in [(1, 3), (1, 4), (2, 4)] {
        out.push(commuting_element(ring, i, j));
    }
    out
}

pub fn word_degree(w: &[u8]) -> LatticeVec {
    let mut d = [0i64; 4];
    for &l in w {
        d[l as usize - 1] += 1;
    }
    d
}

/// All words of the given degree, in lexicographic order.
pub fn words_of_degree(d: &LatticeVec) -> Vec<Word> {
    fn rec(rem: &mut LatticeVec, cur: &mut Word, out: &mut Vec<Word>) {
        if rem.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for l in 0..4 {
            if rem[l] > 0 {
                rem[l] -= 1;
                cur.push(l as u8 + 1);
                rec(rem, cur, out);
                cur.pop();
                rem[l] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if d.iter().all(|&x| x >= 0) {
        rec(&mut d.clone(), &mut Vec::new(), &mut out);
    }
    out
}

/// One graded piece of the quotient.
pub struct OracleComponent<R: CoeffRing> {
    pub degree: LatticeVec,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    ideal: SparseEchelon<R::Elem>,
}

impl<R: CoeffRing> OracleComponent<R> {
    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn dimension(&self) -> usize {
        self.words.len() - self.ideal.rank()
    }

    /// Coordinates of the class of `x` on the non-pivot words.
    pub fn reduce(
        &self,
        ring: &R,
        x: &FreeElem<R::Elem>,
    ) -> Result<BTreeMap<usize, R::Elem>, OracleError> {
        let mut v = BTreeMap::new();
        for (w, c) in x.iter() {
            let Some(&k) = self.index.get(w) else {
                return Err(OracleError::Inhomogeneous);
            };
            v.insert(k, c.clone());
        }
        Ok(self.ideal.reduce(ring, v))
    }
}

pub struct Oracle<R: CoeffRing> {
    ring: R,
    bound: i64,
}

impl<R: CoeffRing> Oracle<R> {
    pub fn new(ring: R, bound: i64) -> Self {
        Oracle { ring, bound }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn component(&self, d: &LatticeVec) -> Result<OracleComponent<R>, OracleError> {
        let height: i64 = d.iter().sum();
        if height > self.bound {
            return Err(OracleError::HeightExceeded {
                height,
                bound: self.bound,
            });
        }
        let ring = &self.ring;
        let words = words_of_degree(d);
        let index: HashMap<Word, usize> = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, w)| (w, k))
            .collect();
        let mut ideal = SparseEchelon::default();
        for sigma in positive_relations(ring) {
            let sd = word_degree(sigma.keys().next().unwrap());
            let rest = rootdata::lat_sub(d, &sd);
            for w in words_of_degree(&rest) {
                for cut in 0..=w.len() {
                    let mut row = BTreeMap::new();
                    for (sw, c) in sigma.iter() {
                        let mut full = w[..cut].to_vec();
                        full.extend_from_slice(sw);
                        full.extend_from_slice(&w[cut..]);
                        row.insert(index[&full], c.clone());
                    }
                    ideal.insert(ring, row)?;
                }
            }
        }
        Ok(OracleComponent {
            degree: *d,
            words,
            index,
            ideal,
        })
    }

    /// Free expansion of a PBW element, each root vector replaced by its bracket polynomial.
    pub fn pbw_to_free(&self, x: &PbwElem<R::Elem>) -> FreeElem<R::Elem> {
        let ring = &self.ring;
        let roots: Vec<FreeElem<R::Elem>> = (1..=rootdata::NROOTS)
            .map(|i| expand_to_free(ring, i))
            .collect();
        let mut out = FreeElem::zero();
        for (m, c) in x.iter() {
            let mut t = FreeElem::basis(ring, Vec::new());
            for f in mono_factors(m) {
                t = free_multiply(ring, &t, &roots[f - 1]);
            }
            out.add_scaled(ring, &t, c);
        }
        out
    }
}

/// Whether `lhs = rhs` holds in U⁺, decided in the free quotient.
pub fn oracle_check_identity<R: CoeffRing>(
    oracle: &Oracle<R>,
    lhs: &PbwElem<R::Elem>,
    rhs: &PbwElem<R::Elem>,
) -> Result<bool, OracleError> {
    let diff = oracle.pbw_to_free(&lhs.sub(oracle.ring(), rhs));
    oracle_free_is_zero(oracle, &diff)
}

/// Whether a homogeneous free element lies in the Serre ideal.
pub fn oracle_free_is_zero<R: CoeffRing>(
    oracle: &Oracle<R>,
    x: &FreeElem<R::Elem>,
) -> Result<bool, OracleError> {
    let Some(w) = x.keys().next() else {
        return Ok(true);
    };
    let d = word_degree(w);
    if x.keys().any(|w| word_degree(w) != d) {
        return Err(OracleError::Inhomogeneous);
    }
    let comp = oracle.component(&d)?;
    Ok(comp.reduce(oracle.ring(), x)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatField;

    #[test]
    fn small_dimensions() {
        let o = Oracle::new(RatField, 6);
        assert_eq!(o.component(&[1, 0, 0, 0]).unwrap().dimension(), 1);
        assert_eq!(o.component(&[2, 1, 0, 0]).unwrap().dimension(), 2);
        assert_eq!(o.component(&[1, 1, 1, 0]).unwrap().dimension(), 4);
        assert!(o.component(&[3, 3, 1, 0]).is_err());
    }

    #[test]
    fn serre_elements_vanish() {
        let o = Oracle::new(RatField, 6);
        for x in positive_relations(&RatField) {
            assert!(oracle_free_is_zero(&o, &x).unwrap());
        }
    }
}
