//! PBW normal-form multiplication driven by a straightening table.

use super::{
    mono_factors, mono_len, mono_max, mono_min, PbwElem, PbwMono, StraighteningTable, ONE,
};
use crate::coeff::CoeffRing;
use crate::rootdata::{self, NROOTS};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Whether exponents are cut off at ℓ (the restricted quotient).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    None,
    At(u32),
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

pub struct PbwAlgebra<R: CoeffRing> {
    ring: R,
    trunc: Truncation,
    p: Vec<R::Elem>,
    corr: Vec<OnceLock<Arc<PbwElem<R::Elem>>>>,
    rcache: Cache<(PbwMono, u8), PbwElem<R::Elem>>,
    lcache: Cache<(u8, PbwMono), PbwElem<R::Elem>>,
}

fn slot(i: usize, j: usize) -> usize {
    (i - 1) * NROOTS + (j - 1)
}

impl<R: CoeffRing> PbwAlgebra<R> {
    /// An engine with no straightening rules installed yet.
    pub fn empty(ring: R, trunc: Truncation) -> Self {
        Self::with_params(ring, trunc, false)
    }

    fn with_params(ring: R, trunc: Truncation, swapped: bool) -> Self {
        let mut p = Vec::with_capacity(NROOTS * NROOTS);
        for i in 1..=NROOTS {
            for j in 1..=NROOTS {
                let (a, b) = rootdata::pairing_exps(
                    &rootdata::root(j).lattice(),
                    &rootdata::root(i).lattice(),
                );
                p.push(if swapped {
                    ring.rs_monomial(b, a)
                } else {
                    ring.rs_monomial(a, b)
                });
            }
        }
        PbwAlgebra {
            ring,
            trunc,
            p,
            corr: (0..NROOTS * NROOTS).map(|_| OnceLock::new()).collect(),
            rcache: RwLock::new(HashMap::new()),
            lcache: RwLock::new(HashMap::new()),
        }
    }

    /// An engine over `ring` whose table coefficients already live in `ring`.
    pub fn new(ring: R, table: &StraighteningTable<R::Elem>, trunc: Truncation) -> Self {
        let alg = Self::empty(ring, trunc);
        for rule in table.rules() {
            let corr = alg.truncate(&rule.correction);
            alg.set_rule(rule.i, rule.j, corr);
        }
        alg
    }

    /// Engine for the image under r ↔ s: the commutation scalars are swapped
    /// and `table` must already hold the swapped corrections.
    pub fn new_swapped(ring: R, table: &StraighteningTable<R::Elem>, trunc: Truncation) -> Self {
        let alg = Self::with_params(ring, trunc, true);
        for rule in table.rules() {
            let corr = alg.truncate(&rule.correction);
            alg.set_rule(rule.i, rule.j, corr);
        }
        alg
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    /// `p_ij = ⟨ω'_{β_j}, ω_{β_i}⟩`, so that `E_i E_j = p_ij E_j E_i + C_ij`.
    pub fn p(&self, i: usize, j: usize) -> &R::Elem {
        &self.p[slot(i, j)]
    }

    pub fn set_rule(&self, i: usize, j: usize, corr: PbwElem<R::Elem>) {
        assert!(i < j);
        let _ = self.corr[slot(i, j)].set(Arc::new(corr));
    }

    pub fn has_rule(&self, i: usize, j: usize) -> bool {
        self.corr[slot(i, j)].get().is_some()
    }

    /// Correction `C_ij` for `i < j`.
    pub fn rule(&self, i: usize, j: usize) -> &PbwElem<R::Elem> {
        match self.corr[slot(i, j)].get() {
            Some(c) => c,
            None => panic!(
                "straightening rule ({}, {}) requested before it was built",
                i, j
            ),
        }
    }

    pub fn admissible(&self, m: &PbwMono) -> bool {
        match self.trunc {
            Truncation::None => true,
            Truncation::At(l) => m.iter().all(|&n| (n as u32) < l),
        }
    }

    pub fn truncate(&self, x: &PbwElem<R::Elem>) -> PbwElem<R::Elem> {
        x.map(&self.ring, |m, c| {
            self.admissible(m).then(|| (*m, c.clone()))
        })
    }

    pub fn one(&self) -> PbwElem<R::Elem> {
        PbwElem::basis(&self.ring, ONE)
    }

    pub fn mono(&self, m: PbwMono) -> PbwElem<R::Elem> {
        if self.admissible(&m) {
            PbwElem::basis(&self.ring, m)
        } else {
            PbwElem::zero()
        }
    }

    /// The root vector `E_{β_i}`.
    pub fn root(&self, i: usize) -> PbwElem<R::Elem> {
        self.mono(super::root_power(i, 1))
    }

    pub fn scalar(&self, c: R::Elem) -> PbwElem<R::Elem> {
        PbwElem::term(&self.ring, ONE, c)
    }

    pub fn multiply(&self, a: &PbwElem<R::Elem>, b: &PbwElem<R::Elem>) -> PbwElem<R::Elem> {
        let mut out = PbwElem::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                let c = self.ring.mul(ca, cb);
                out.add_scaled(&self.ring, &self.mono_mul(ma, mb), &c);
            }
        }
        out
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, xs: &[PbwElem<R::Elem>]) -> PbwElem<R::Elem> {
        xs.iter().fold(self.one(), |acc, x| self.multiply(&acc, x))
    }

    pub fn power(&self, x: &PbwElem<R::Elem>, n: u32) -> PbwElem<R::Elem> {
        (0..n).fold(self.one(), |acc, _| self.multiply(&acc, x))
    }

    /// Normal form of `E_{f_1} E_{f_2} ⋯` for an arbitrary index sequence.
    pub fn from_factors(&self, factors: &[usize]) -> PbwElem<R::Elem> {
        let mut cur = self.one();
        for &f in factors {
            cur = self.mul_right_root(&cur, f);
        }
        cur
    }

    /// `x · E_{β_m}`.
    pub fn mul_right_root(&self, x: &PbwElem<R::Elem>, m: usize) -> PbwElem<R::Elem> {
        let mut out = PbwElem::zero();
        for (mono, c) in x.iter() {
            out.add_scaled(&self.ring, &self.right_insert(mono, m), c);
        }
        out
    }

    /// `E_{β_m} · x`.
    pub fn mul_left_root(&self, m: usize, x: &PbwElem<R::Elem>) -> PbwElem<R::Elem> {
        let mut out = PbwElem::zero();
        for (mono, c) in x.iter() {
            out.add_scaled(&self.ring, &self.left_insert(m, mono), c);
        }
        out
    }

    pub fn mono_mul(&self, a: &PbwMono, b: &PbwMono) -> Arc<PbwElem<R::Elem>> {
        if *b == ONE {
            return Arc::new(self.mono(*a));
        }
        if *a == ONE {
            return Arc::new(self.mono(*b));
        }
        if mono_min(a) >= mono_max(b) {
            let mut m = *a;
            for k in 0..NROOTS {
                m[k] += b[k];
            }
            return Arc::new(self.mono(m));
        }
        if mono_len(b) <= mono_len(a) {
            let mut cur = PbwElem::basis(&self.ring, *a);
            for f in mono_factors(b) {
                cur = self.mul_right_root(&cur, f);
            }
            Arc::new(cur)
        } else {
            let mut cur = PbwElem::basis(&self.ring, *b);
            for f in mono_factors(a).into_iter().rev() {
                cur = self.mul_left_root(f, &cur);
            }
            Arc::new(cur)
        }
    }

    fn mono_times_elem(
        &self,
        m: &PbwMono,
        x: &PbwElem<R::Elem>,
        out: &mut PbwElem<R::Elem>,
        scale: &R::Elem,
    ) {
        for (n, c) in x.iter() {
            out.add_scaled(&self.ring, &self.mono_mul(m, n), &self.ring.mul(c, scale));
        }
    }

    fn elem_times_mono(&self, x: &PbwElem<R::Elem>, m: &PbwMono, out: &mut PbwElem<R::Elem>) {
        for (n, c) in x.iter() {
            out.add_scaled(&self.ring, &self.mono_mul(n, m), c);
        }
    }

    /// `M · E_{β_m}` in normal form.
    pub fn right_insert(&self, mono: &PbwMono, m: usize) -> Arc<PbwElem<R::Elem>> {
        let c = match mono_min(mono) {
            Some(c) if c < m => c,
            _ => {
                let mut out = *mono;
                out[m - 1] += 1;
                return Arc::new(self.mono(out));
            }
        };
        let key = (*mono, m as u8);
        if let Some(hit) = self.rcache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let mut rest = *mono;
        rest[c - 1] -= 1;
        let p = self.p(c, m);
        let mut out = PbwElem::zero();
        for (n, k) in self.right_insert(&rest, m).iter() {
            out.add_scaled(&self.ring, &self.right_insert(n, c), &self.ring.mul(k, p));
        }
        let corr = self.rule(c, m);
        if !corr.is_zero() {
            self.mono_times_elem(&rest, corr, &mut out, &self.ring.one());
        }
        let out = Arc::new(out);
        self.rcache.write().unwrap().insert(key, out.clone());
        out
    }

    /// `E_{β_m} · M` in normal form.
    pub fn left_insert(&self, m: usize, mono: &PbwMono) -> Arc<PbwElem<R::Elem>> {
        let c = match mono_max(mono) {
            Some(c) if c > m => c,
            _ => {
                let mut out = *mono;
                out[m - 1] += 1;
                return Arc::new(self.mono(out));
            }
        };
        let key = (m as u8, *mono);
        if let Some(hit) = self.lcache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let mut rest = *mono;
        rest[c - 1] -= 1;
        let p = self.p(m, c);
        let mut out = PbwElem::zero();
        for (n, k) in self.left_insert(m, &rest).iter() {
            out.add_scaled(&self.ring, &self.left_insert(c, n), &self.ring.mul(k, p));
        }
        let corr = self.rule(m, c);
        if !corr.is_zero() {
            self.elem_times_mono(corr, &rest, &mut out);
        }
        let out = Arc::new(out);
        self.lcache.write().unwrap().insert(key, out.clone());
        out
    }

    /// Image of a free-algebra element under `E_i ↦ E_{α_i}`.
    pub fn eval_free(&self, x: &super::FreeElem<R::Elem>) -> PbwElem<R::Elem> {
        let mut out = PbwElem::zero();
        for (w, c) in x.iter() {
            let factors: Vec<usize> = w
                .iter()
                .map(|&l| rootdata::SIMPLE_INDEX[l as usize - 1])
                .collect();
            out.add_scaled(&self.ring, &self.from_factors(&factors), c);
        }
        out
    }

    pub fn cache_len(&self) -> usize {
        self.rcache.read().unwrap().len() + self.lcache.read().unwrap().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{RatField, SpecParams};
    use crate::pbwplus::{build_straightening_table, mono_from_factors};

    #[test]
    fn ordered_products_are_already_normal() {
        crate::run_with_stack(|| {
            let t = build_straightening_table().unwrap();
            let alg = PbwAlgebra::new(RatField, &t, Truncation::None);
            let x = alg.multiply(&alg.root(9), &alg.root(4));
            assert_eq!(x, alg.mono(mono_from_factors(&[9, 4])));
            let y = alg.multiply(&alg.root(4), &alg.root(5));
            assert_eq!(
                y,
                alg.mono(mono_from_factors(&[5, 4]))
                    .scale(&RatField, alg.p(4, 5))
            );
        });
    }

    #[test]
    fn truncation_kills_ell_th_powers() {
        crate::run_with_stack(|| {
            let spec = SpecParams::default();
            let t = build_straightening_table()
                .unwrap()
                .specialize(&spec.ring())
                .unwrap();
            let alg = PbwAlgebra::new(spec.ring(), &t, Truncation::At(spec.ell));
            for i in [1, 12, 24] {
                assert!(alg.power(&alg.root(i), spec.ell).is_empty());
                assert!(!alg.power(&alg.root(i), spec.ell - 1).is_empty());
            }
        });
    }
}
