//! Dense Gaussian elimination over a coefficient field.

use crate::coeff::{CoeffError, CoeffRing};

/// Row echelon form with pivot bookkeeping.
#[derive(Clone, Debug)]
pub struct Echelon<C> {
    /// Reduced rows, each with a leading 1 at `pivots[k]`.
    pub rows: Vec<Vec<C>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<C: Clone> Echelon<C> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Fully reduces `rows` (each of length `ncols`).
pub fn echelon<R: CoeffRing>(
    ring: &R,
    rows: Vec<Vec<R::Elem>>,
    ncols: usize,
) -> Result<Echelon<R::Elem>, CoeffError> {
    let mut rows = rows;
    let mut pivots = Vec::new();
    let mut done = 0;
    for col in 0..ncols {
        let mut best: Option<(usize, usize)> = None;
        for (k, row) in rows.iter().enumerate().skip(done) {
            if !ring.is_zero(&row[col]) {
                let w = ring.complexity(&row[col]);
                if best.is_none_or(|(_, bw)| w < bw) {
                    best = Some((k, w));
                }
            }
        }
        let Some((k, _)) = best else { continue };
        rows.swap(done, k);
        let inv = ring.inv(&rows[done][col])?;
        let prow: Vec<R::Elem> = rows[done].iter().map(|x| ring.mul(x, &inv)).collect();
        for (t, row) in rows.iter_mut().enumerate() {
            if t == done || ring.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                if !ring.is_zero(&prow[c]) {
                    row[c] = ring.sub(&row[c], &ring.mul(&f, &prow[c]));
                }
            }
        }
        rows[done] = prow;
        pivots.push(col);
        done += 1;
    }
    rows.truncate(done);
    Ok(Echelon {
        rows,
        pivots,
        ncols,
    })
}

/// Solution of `A x = b`, `None` when inconsistent, error when not unique.
pub fn solve_unique<R: CoeffRing>(
    ring: &R,
    a: &[Vec<R::Elem>],
    b: &[R::Elem],
    nvars: usize,
) -> Result<Option<Vec<R::Elem>>, SolveError> {
    let rows: Vec<Vec<R::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = echelon(ring, rows, nvars + 1).map_err(SolveError::Coeff)?;
    if ech.pivots.last() == Some(&nvars) {
        return Ok(None);
    }
    if ech.rank() < nvars {
        return Err(SolveError::Underdetermined {
            rank: ech.rank(),
            nvars,
        });
    }
    Ok(Some(
        ech.rows.iter().map(|row| row[nvars].clone()).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Coeff(CoeffError),
    #[error("system has rank {rank} < {nvars} unknowns")]
    Underdetermined { rank: usize, nvars: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{RatField, RatFunc2};

    #[test]
    fn solves_two_by_two() {
        let f = RatField;
        let r = RatFunc2::r();
        let s = RatFunc2::s();
        let a = vec![
            vec![RatFunc2::one(), RatFunc2::one()],
            vec![r.clone(), s.clone()],
        ];
        let b = vec![RatFunc2::from_int(2), r.add(&s)];
        let x = solve_unique(&f, &a, &b, 2).unwrap().unwrap();
        assert!(x[0].is_one() && x[1].is_one());
    }

    #[test]
    fn detects_inconsistency() {
        let f = RatField;
        let a = vec![vec![RatFunc2::one()], vec![RatFunc2::from_int(2)]];
        let b = vec![RatFunc2::one(), RatFunc2::one()];
        assert_eq!(solve_unique(&f, &a, &b, 1).unwrap(), None);
    }
}

/// Incrementally built semi-echelon basis of a row space with sparse rows.
///
/// Each stored row has leading entry 1 at its pivot column. Reduction of a
/// vector yields the unique representative supported off the pivot columns.
#[derive(Clone, Debug)]
pub struct SparseEchelon<C> {
    pivots: std::collections::BTreeMap<usize, std::collections::BTreeMap<usize, C>>,
}

impl<C: Clone> Default for SparseEchelon<C> {
    fn default() -> Self {
        SparseEchelon {
            pivots: Default::default(),
        }
    }
}

impl<C: Clone> SparseEchelon<C> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn reduce<R: CoeffRing<Elem = C>>(
        &self,
        ring: &R,
        v: std::collections::BTreeMap<usize, C>,
    ) -> std::collections::BTreeMap<usize, C> {
        let mut v = v;
        let mut rest = std::collections::BTreeMap::new();
        while let Some((col, c)) = v.pop_first() {
            match self.pivots.get(&col) {
                None => {
                    rest.insert(col, c);
                }
                Some(row) => {
                    for (k, x) in row.range(col + 1..) {
                        let d = ring.mul(x, &c);
                        let e = v.entry(*k).or_insert_with(|| ring.zero());
                        *e = ring.sub(e, &d);
                        if ring.is_zero(e) {
                            v.remove(k);
                        }
                    }
                }
            }
        }
        rest
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert<R: CoeffRing<Elem = C>>(
        &mut self,
        ring: &R,
        v: std::collections::BTreeMap<usize, C>,
    ) -> Result<bool, CoeffError> {
        let rest = self.reduce(ring, v);
        let Some((&col, lead)) = rest.iter().next() else {
            return Ok(false);
        };
        let inv = ring.inv(lead)?;
        let row = rest.iter().map(|(k, x)| (*k, ring.mul(x, &inv))).collect();
        self.pivots.insert(col, row);
        Ok(true)
    }
}
