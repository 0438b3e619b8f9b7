//! Finite linear combinations with coefficients in a [`CoeffRing`].

use crate::coeff::CoeffRing;
use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Clone> LinComb<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term<R: CoeffRing<Elem = C>>(ring: &R, k: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(ring, k, c);
        out
    }

    pub fn basis<R: CoeffRing<Elem = C>>(ring: &R, k: K) -> Self {
        Self::term(ring, k, ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> Option<&C> {
        self.terms.get(k)
    }

    pub fn into_terms(self) -> BTreeMap<K, C> {
        self.terms
    }

    pub fn add_term<R: CoeffRing<Elem = C>>(&mut self, ring: &R, k: K, c: C) {
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = ring.add(o.get(), &c);
                if ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign<R: CoeffRing<Elem = C>>(&mut self, ring: &R, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(ring, k.clone(), c.clone());
        }
    }

    pub fn add_scaled<R: CoeffRing<Elem = C>>(&mut self, ring: &R, other: &Self, c: &C) {
        if ring.is_zero(c) {
            return;
        }
        if ring.is_one(c) {
            return self.add_assign(ring, other);
        }
        for (k, a) in other.iter() {
            self.add_term(ring, k.clone(), ring.mul(a, c));
        }
    }

    pub fn add<R: CoeffRing<Elem = C>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(ring, other);
        out
    }

    pub fn sub<R: CoeffRing<Elem = C>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(ring, other, &ring.from_i64(-1));
        out
    }

    pub fn scale<R: CoeffRing<Elem = C>>(&self, ring: &R, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(ring, self, c);
        out
    }

    pub fn neg<R: CoeffRing<Elem = C>>(&self, ring: &R) -> Self {
        self.scale(ring, &ring.from_i64(-1))
    }

    /// Maps keys and coefficients, merging collisions.
    pub fn map<K2: Ord + Clone, C2: Clone, R2: CoeffRing<Elem = C2>>(
        &self,
        ring: &R2,
        mut f: impl FnMut(&K, &C) -> Option<(K2, C2)>,
    ) -> LinComb<K2, C2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            if let Some((k2, c2)) = f(k, c) {
                out.add_term(ring, k2, c2);
            }
        }
        out
    }

    pub fn try_map<K2: Ord + Clone, C2: Clone, R2: CoeffRing<Elem = C2>, E>(
        &self,
        ring: &R2,
        mut f: impl FnMut(&K, &C) -> Result<(K2, C2), E>,
    ) -> Result<LinComb<K2, C2>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            let (k2, c2) = f(k, c)?;
            out.add_term(ring, k2, c2);
        }
        Ok(out)
    }

    /// Builds from raw terms, dropping zeros and merging repeats.
    pub fn from_terms<R: CoeffRing<Elem = C>>(
        ring: &R,
        terms: impl IntoIterator<Item = (K, C)>,
    ) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(ring, k, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{RatField, RatFunc2};

    #[test]
    fn cancellation_prunes() {
        let f = RatField;
        let mut a: LinComb<u8, RatFunc2> = LinComb::term(&f, 1, RatFunc2::r());
        a.add_term(&f, 1, RatFunc2::r().neg());
        assert!(a.is_zero());
        let b = LinComb::term(&f, 2, RatFunc2::s());
        assert!(b.sub(&f, &b).is_zero());
        assert_eq!(b.scale(&f, &RatFunc2::zero()).len(), 0);
    }
}
