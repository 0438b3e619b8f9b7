//! The skew-dual pairing between 𝔟' = ⟨F_i, ω'_i^{±1}⟩ and 𝔟 = ⟨E_i, ω_i^{±1}⟩,
//! extended from generators over words.

use crate::coeff::{CoeffError, CoeffRing, RatField};
use crate::fullu::{GroupExp, UElem, UMono};
use crate::pbwplus::{expand_to_free, mono_factors, ONE};
use crate::rootdata;
use std::collections::HashMap;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("left argument {0} is not in the subalgebra generated by F_i and ω'_i")]
    NotInBorelMinus(String),
    #[error("right argument {0} is not in the subalgebra generated by E_i and ω_i")]
    NotInBorelPlus(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// One letter of a word: a simple generator or a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E(u8),
    F(u8),
    G(GroupExp),
}

/// How products in the right argument are split against the coproduct of
/// the left argument. Products in the left argument always use
/// `⟨ab, c⟩ = Σ ⟨a, c₍₁₎⟩⟨b, c₍₂₎⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `⟨a, bc⟩ = Σ ⟨a₍₁₎, b⟩⟨a₍₂₎, c⟩`.
    Primary,
    /// `⟨a, bc⟩ = Σ ⟨a₍₂₎, b⟩⟨a₍₁₎, c⟩`.
    Flipped,
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Convention::Primary => write!(f, "<a, bc> = sum <a(1), b><a(2), c>"),
            Convention::Flipped => write!(f, "<a, bc> = sum <a(2), b><a(1), c>"),
        }
    }
}

type Word = Vec<Letter>;
type Split = Vec<(Word, Word)>;

pub struct SkewPairing<R: CoeffRing> {
    ring: R,
    conv: Convention,
    memo: RwLock<HashMap<(Word, Word), R::Elem>>,
}

fn is_group(w: &[Letter]) -> bool {
    w.iter().all(|l| matches!(l, Letter::G(_)))
}

fn f_degree(w: &[Letter]) -> rootdata::LatticeVec {
    let mut d = [0; 4];
    for l in w {
        if let Letter::F(i) | Letter::E(i) = l {
            d[*i as usize - 1] += 1;
        }
    }
    d
}

impl<R: CoeffRing> SkewPairing<R> {
    pub fn new(ring: R, conv: Convention) -> Self {
        SkewPairing {
            ring,
            conv,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    /// Words of Δ(w), as (left, right) with coefficient one.
    fn split(w: &[Letter]) -> Split {
        let mut out: Split = vec![(Vec::new(), Vec::new())];
        for &l in w {
            let mut next = Vec::with_capacity(out.len() * 2);
            for (a, b) in out {
                match l {
                    Letter::G(_) => {
                        let (mut a, mut b) = (a, b);
                        a.push(l);
                        b.push(l);
                        next.push((a, b));
                    }
                    Letter::E(i) => {
                        // E⊗1 + ω⊗E
                        let mut a1 = a.clone();
                        a1.push(l);
                        next.push((a1, b.clone()));
                        let (mut a2, mut b2) = (a, b);
                        a2.push(Letter::G(GroupExp::omega(i as usize, 1)));
                        b2.push(l);
                        next.push((a2, b2));
                    }
                    Letter::F(i) => {
                        // 1⊗F + F⊗ω'
                        let mut b1 = b.clone();
                        b1.push(l);
                        next.push((a.clone(), b1));
                        let (mut a2, mut b2) = (a, b);
                        a2.push(l);
                        b2.push(Letter::G(GroupExp::omega_p(i as usize, 1)));
                        next.push((a2, b2));
                    }
                }
            }
            out = next;
        }
        out
    }

    fn group_value(&self, gp: &GroupExp, g: &GroupExp) -> R::Elem {
        let (a, b) = rootdata::pairing_exps(&gp.weight_p(), &g.weight());
        self.ring.rs_monomial(a, b)
    }

    fn letter_value(&self, a: &Letter, b: &Letter) -> R::Elem {
        let ring = &self.ring;
        match (a, b) {
            (Letter::F(i), Letter::E(j)) => {
                if i != j {
                    return ring.zero();
                }
                let k = rootdata::ri_si_power(*i as usize) as i64;
                let d = ring.sub(&ring.rs_monomial(0, k), &ring.rs_monomial(k, 0));
                ring.inv(&d)
                    .expect("s_i − r_i is invertible at valid parameters")
            }
            (Letter::G(gp), Letter::G(g)) => self.group_value(gp, g),
            _ => ring.zero(),
        }
    }

    fn counit_word(&self, w: &[Letter]) -> R::Elem {
        if is_group(w) {
            self.ring.one()
        } else {
            self.ring.zero()
        }
    }

    /// `⟨a, b⟩` for a word `a` in F, ω' and a word `b` in E, ω.
    pub fn pair_words(&self, a: &[Letter], b: &[Letter]) -> R::Elem {
        let ring = &self.ring;
        if f_degree(a) != f_degree(b) {
            return ring.zero();
        }
        if b.is_empty() {
            return self.counit_word(a);
        }
        if a.is_empty() {
            return self.counit_word(b);
        }
        if a.len() == 1 && b.len() == 1 {
            return self.letter_value(&a[0], &b[0]);
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = ring.zero();
        if b.len() >= 2 {
            let (b0, rest) = b.split_at(1);
            for (a1, a2) in Self::split(a) {
                let (x, y) = match self.conv {
                    Convention::Primary => (self.pair_words(&a1, b0), self.pair_words(&a2, rest)),
                    Convention::Flipped => (self.pair_words(&a2, b0), self.pair_words(&a1, rest)),
                };
                if !ring.is_zero(&x) && !ring.is_zero(&y) {
                    acc = ring.add(&acc, &ring.mul(&x, &y));
                }
            }
        } else {
            let (a0, rest) = a.split_at(1);
            for (b1, b2) in Self::split(b) {
                let x = self.pair_words(a0, &b1);
                if ring.is_zero(&x) {
                    continue;
                }
                let y = self.pair_words(rest, &b2);
                acc = ring.add(&acc, &ring.mul(&x, &y));
            }
        }
        self.memo.write().unwrap().insert(key, acc.clone());
        acc
    }

    /// Bilinear extension to linear combinations of words.
    pub fn pair_sums(&self, a: &[(R::Elem, Word)], b: &[(R::Elem, Word)]) -> R::Elem {
        let ring = &self.ring;
        let mut acc = ring.zero();
        for (c, u) in a {
            for (d, v) in b {
                let p = self.pair_words(u, v);
                if !ring.is_zero(&p) {
                    acc = ring.add(&acc, &ring.mul(&ring.mul(c, d), &p));
                }
            }
        }
        acc
    }

    fn root_words(&self, i: usize, f: bool) -> Result<Vec<(R::Elem, Word)>, PairingError> {
        let x = expand_to_free(&RatField, i);
        let mut out = Vec::new();
        for (w, c) in x.iter() {
            let (w, c) = if f {
                // F_β = τ(E_β): reversed words, r ↔ s
                let mut w = w.clone();
                w.reverse();
                (w.iter().map(|&l| Letter::F(l)).collect(), c.swap_rs())
            } else {
                (w.iter().map(|&l| Letter::E(l)).collect(), c.clone())
            };
            out.push((self.ring.embed(&c)?, w));
        }
        Ok(out)
    }

    fn concat(&self, a: &[(R::Elem, Word)], b: &[(R::Elem, Word)]) -> Vec<(R::Elem, Word)> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for (c, u) in a {
            for (d, v) in b {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.push((self.ring.mul(c, d), w));
            }
        }
        out
    }

    /// Word expansion of a normal-form element of 𝔟' (`left`) or 𝔟.
    pub fn words_of(
        &self,
        x: &UElem<R::Elem>,
        left: bool,
    ) -> Result<Vec<(R::Elem, Word)>, PairingError> {
        let mut out = Vec::new();
        for (m, c) in x.iter() {
            let ok = if left {
                m.e == ONE && m.g.weight() == [0; 4]
            } else {
                m.f == ONE && m.g.weight_p() == [0; 4]
            };
            if !ok {
                return Err(if left {
                    PairingError::NotInBorelMinus(m.to_string())
                } else {
                    PairingError::NotInBorelPlus(m.to_string())
                });
            }
            out.extend(self.mono_words(m, c, left)?);
        }
        Ok(out)
    }

    fn mono_words(
        &self,
        m: &UMono,
        c: &R::Elem,
        left: bool,
    ) -> Result<Vec<(R::Elem, Word)>, PairingError> {
        let mut acc = vec![(c.clone(), Vec::new())];
        let factors = |p| mono_factors(p);
        if left {
            acc = self.concat(&acc, &[(self.ring.one(), vec![Letter::G(m.g)])]);
            let mut fs = factors(&m.f);
            fs.reverse();
            for k in fs {
                acc = self.concat(&acc, &self.root_words(k, true)?);
            }
        } else {
            for k in factors(&m.e) {
                acc = self.concat(&acc, &self.root_words(k, false)?);
            }
            acc = self.concat(&acc, &[(self.ring.one(), vec![Letter::G(m.g)])]);
        }
        Ok(acc)
    }

    /// `⟨a, b⟩` for normal-form elements `a ∈ 𝔟'`, `b ∈ 𝔟`.
    pub fn pair(&self, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> Result<R::Elem, PairingError> {
        Ok(self.pair_sums(&self.words_of(a, true)?, &self.words_of(b, false)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{parse_ratfunc, RatFunc2};

    fn p(conv: Convention) -> SkewPairing<RatField> {
        SkewPairing::new(RatField, conv)
    }

    #[test]
    fn generator_values() {
        let s = p(Convention::Primary);
        assert_eq!(
            s.pair_words(&[Letter::F(3)], &[Letter::E(3)]),
            parse_ratfunc("1/(s - r)").unwrap()
        );
        assert_eq!(
            s.pair_words(&[Letter::F(1)], &[Letter::E(1)]),
            parse_ratfunc("1/(s^2 - r^2)").unwrap()
        );
        assert!(s.pair_words(&[Letter::F(1)], &[Letter::E(2)]).is_zero());
        assert_eq!(
            s.pair_words(
                &[Letter::G(GroupExp::omega_p(1, 1))],
                &[Letter::G(GroupExp::omega(2, 1))]
            ),
            RatFunc2::monomial(1, -2, 0)
        );
    }

    #[test]
    fn group_pairing_is_a_bicharacter() {
        let s = p(Convention::Primary);
        let gp = Letter::G(GroupExp::omega_p(3, 1));
        let g = Letter::G(GroupExp::omega(2, 1));
        let g2 = Letter::G(GroupExp::omega(2, 2));
        let v = s.pair_words(&[gp], &[g]);
        assert_eq!(s.pair_words(&[gp], &[g, g]), v.mul(&v));
        assert_eq!(s.pair_words(&[gp], &[g2]), v.mul(&v));
    }
}
