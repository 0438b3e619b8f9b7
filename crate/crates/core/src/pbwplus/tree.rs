//! Root vectors as iterated (r,s)-brackets and their free-algebra expansion.

use crate::coeff::CoeffRing;
use crate::lincomb::LinComb;
use crate::rootdata::{self, LatticeVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(usize),
    /// `[left, right]_p = left·right − p·right·left`, with `p = r^e_r s^e_s`.
    Node {
        left: Box<BracketTree>,
        right: Box<BracketTree>,
        p: (i64, i64),
    },
}

impl BracketTree {
    pub fn degree(&self) -> LatticeVec {
        match self {
            BracketTree::Leaf(i) => rootdata::simple_root(*i),
            BracketTree::Node { left, right, .. } => {
                rootdata::lat_add(&left.degree(), &right.degree())
            }
        }
    }

    /// Leaves read left to right.
    pub fn word(&self) -> String {
        match self {
            BracketTree::Leaf(i) => i.to_string(),
            BracketTree::Node { left, right, .. } => format!("{}{}", left.word(), right.word()),
        }
    }
}

/// Bracket tree of `E_{β_i}` following the minimal pairs.
pub fn root_vector_tree(i: usize) -> BracketTree {
    match rootdata::minimal_pair(i) {
        None => BracketTree::Leaf(rootdata::simple_of(i).expect("simple root")),
        Some((a, b)) => {
            let p =
                rootdata::pairing_exps(&rootdata::root(b).lattice(), &rootdata::root(a).lattice());
            BracketTree::Node {
                left: Box::new(root_vector_tree(a)),
                right: Box::new(root_vector_tree(b)),
                p,
            }
        }
    }
}

/// Word over the simple letters 1..4.
pub type Word = Vec<u8>;

pub type FreeElem<C> = LinComb<Word, C>;

pub fn free_multiply<R: CoeffRing>(
    ring: &R,
    a: &FreeElem<R::Elem>,
    b: &FreeElem<R::Elem>,
) -> FreeElem<R::Elem> {
    let mut out = FreeElem::zero();
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.add_term(ring, w, ring.mul(x, y));
        }
    }
    out
}

pub fn expand_tree<R: CoeffRing>(ring: &R, t: &BracketTree) -> FreeElem<R::Elem> {
    match t {
        BracketTree::Leaf(i) => FreeElem::basis(ring, vec![*i as u8]),
        BracketTree::Node { left, right, p } => {
            let l = expand_tree(ring, left);
            let r = expand_tree(ring, right);
            let mut out = free_multiply(ring, &l, &r);
            let p = ring.rs_monomial(p.0, p.1);
            out.add_scaled(ring, &free_multiply(ring, &r, &l), &ring.neg(&p));
            out
        }
    }
}

/// `E_{β_i}` as a noncommutative polynomial in `E_1, …, E_4`.
pub fn expand_to_free<R: CoeffRing>(ring: &R, i: usize) -> FreeElem<R::Elem> {
    expand_tree(ring, &root_vector_tree(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{RatField, RatFunc2};
    use crate::rootdata::NROOTS;

    #[test]
    fn trees_follow_minimal_pairs() {
        assert_eq!(root_vector_tree(1), BracketTree::Leaf(1));
        match root_vector_tree(2) {
            BracketTree::Node { p, .. } => assert_eq!(p, (0, 2)),
            _ => panic!(),
        }
        match root_vector_tree(20) {
            BracketTree::Node { right, p, .. } => {
                assert_eq!(*right, BracketTree::Leaf(3));
                assert_eq!(p, (0, 1));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn expansion_examples() {
        let f = RatField;
        let e2 = expand_to_free(&f, 2);
        assert_eq!(e2.len(), 2);
        assert!(e2.coeff(&vec![1, 2]).unwrap().is_one());
        assert_eq!(
            e2.coeff(&vec![2, 1]).unwrap(),
            &RatFunc2::monomial(-1, 0, 2)
        );
        let e17 = expand_to_free(&f, 17);
        assert_eq!(
            e17.coeff(&vec![3, 2]).unwrap(),
            &RatFunc2::monomial(-1, 0, 2)
        );
        assert_eq!(expand_to_free(&f, 22).len(), 1);
    }

    #[test]
    fn lyndon_word_leads() {
        let f = RatField;
        for i in 1..=NROOTS {
            let t = root_vector_tree(i);
            assert_eq!(t.word(), rootdata::lyndon_word(i));
            let x = expand_to_free(&f, i);
            let w: Word = rootdata::lyndon_word(i).bytes().map(|b| b - b'0').collect();
            assert!(x.coeff(&w).unwrap().is_one());
            // the Lyndon word is the lexicographically least word of the expansion
            assert_eq!(x.keys().min().unwrap(), &w);
        }
    }
}
