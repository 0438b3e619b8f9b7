//! Generators and the defining relations (F1)–(F6) as noncommutative words.

use super::{UAlgebra, UElem};
use crate::coeff::CoeffRing;
use crate::pbwplus::{commuting_element, serre_element, FreeElem, Word};
use crate::rootdata;
use std::fmt;

/// A generator of U: `E_i`, `F_i`, `ω_i^n`, `ω'_i^n` (n = ±1 in relations).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E(usize),
    F(usize),
    W(usize, i32),
    Wp(usize, i32),
}

impl Gen {
    /// `E_i, F_i, ω_i, ω'_i` for i = 1..4.
    pub fn all_generators() -> Vec<Gen> {
        let mut out = Vec::with_capacity(16);
        for i in 1..=4 {
            out.extend([Gen::E(i), Gen::F(i), Gen::W(i, 1), Gen::Wp(i, 1)]);
        }
        out
    }

    /// Generators of the Borel part 𝔟: `E_i, ω_i`.
    pub fn borel_generators() -> Vec<Gen> {
        (1..=4).flat_map(|i| [Gen::E(i), Gen::W(i, 1)]).collect()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::E(i) => write!(f, "E{i}"),
            Gen::F(i) => write!(f, "F{i}"),
            Gen::W(i, 1) => write!(f, "w{i}"),
            Gen::W(i, n) => write!(f, "w{i}^{n}"),
            Gen::Wp(i, 1) => write!(f, "w'{i}"),
            Gen::Wp(i, n) => write!(f, "w'{i}^{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// `Σ c · (word)` that vanishes in U.
#[derive(Clone, Debug)]
pub struct Relation<C> {
    pub family: RelationFamily,
    pub label: String,
    pub terms: Vec<(C, Vec<Gen>)>,
}

impl<C: Clone> Relation<C> {
    /// Value after substituting `image(g)` for every generator.
    pub fn evaluate<R: CoeffRing<Elem = C>>(
        &self,
        alg: &UAlgebra<R>,
        image: &dyn Fn(Gen) -> UElem<C>,
    ) -> UElem<C> {
        let mut out = UElem::zero();
        for (c, w) in &self.terms {
            let imgs: Vec<UElem<C>> = w.iter().map(|&g| image(g)).collect();
            out.add_scaled(alg.ring(), &alg.product(&imgs), c);
        }
        out
    }
}

/// Product of generators in the algebra.
pub fn eval_word<R: CoeffRing>(alg: &UAlgebra<R>, w: &[Gen]) -> UElem<R::Elem> {
    let imgs: Vec<_> = w.iter().map(|&g| alg.gen(g)).collect();
    alg.product(&imgs)
}

/// The six Serre elements `(F6)_1 … (F6)_6` as free polynomials in the `F_i`.
pub fn serre_f_element<R: CoeffRing>(ring: &R, n: usize) -> FreeElem<R::Elem> {
    let m = |er: i64, es: i64| ring.rs_monomial(er, es);
    let sum = |xs: &[(i64, i64)]| {
        xs.iter()
            .fold(ring.zero(), |acc, &(a, b)| ring.add(&acc, &m(a, b)))
    };
    let neg = |x: R::Elem| ring.neg(&x);
    let w = |s: &str| -> Word { s.bytes().map(|b| b - b'0').collect() };
    let terms: Vec<(Word, R::Elem)> = match n {
        1 => vec![
            (w("211"), ring.one()),
            (w("121"), neg(sum(&[(2, 0), (0, 2)]))),
            (w("112"), m(2, 2)),
        ],
        2 => vec![
            (w("122"), ring.one()),
            (w("212"), neg(sum(&[(-2, 0), (0, -2)]))),
            (w("221"), m(-2, -2)),
        ],
        3 => vec![
            (w("322"), ring.one()),
            (w("232"), neg(sum(&[(2, 0), (0, 2)]))),
            (w("223"), m(2, 2)),
        ],
        4 => {
            let c = sum(&[(-2, 0), (-1, -1), (0, -2)]);
            vec![
                (w("2333"), ring.one()),
                (w("3233"), neg(c.clone())),
                (w("3323"), ring.mul(&m(-1, -1), &c)),
                (w("3332"), neg(m(-3, -3))),
            ]
        }
        5 => vec![
            (w("433"), ring.one()),
            (w("343"), neg(sum(&[(1, 0), (0, 1)]))),
            (w("334"), m(1, 1)),
        ],
        6 => vec![
            (w("344"), ring.one()),
            (w("434"), neg(sum(&[(-1, 0), (0, -1)]))),
            (w("443"), m(-1, -1)),
        ],
        _ => panic!("Serre relation index {} out of range", n),
    };
    FreeElem::from_terms(ring, terms)
}

/// τ on free polynomials: reverses words and applies the coefficient map.
pub fn tau_free<R: CoeffRing>(ring: &R, x: &FreeElem<R::Elem>) -> FreeElem<R::Elem> {
    x.map(&ring.tau_ring(), |w, c| {
        let mut w = w.clone();
        w.reverse();
        Some((w, ring.tau_coeff(c)))
    })
}

fn letters<C: Clone>(x: &FreeElem<C>, mk: fn(usize) -> Gen) -> Vec<(C, Vec<Gen>)> {
    x.iter()
        .map(|(w, c)| (c.clone(), w.iter().map(|&l| mk(l as usize)).collect()))
        .collect()
}

/// All defining relations (F1)–(F6). (F5)/(F6) include the commutation of
/// disconnected simple roots, the `c_ij = 0` case of the adjoint Serre form.
pub fn defining_relations<R: CoeffRing>(ring: &R) -> Vec<Relation<R::Elem>> {
    let mut out = Vec::new();
    let one = ring.one();
    let neg_one = ring.neg(&one);
    let groups: Vec<Gen> = (1..=4)
        .map(|i| Gen::W(i, 1))
        .chain((1..=4).map(|i| Gen::Wp(i, 1)))
        .collect();
    for (a, &x) in groups.iter().enumerate() {
        for &y in &groups[a + 1..] {
            out.push(Relation {
                family: RelationFamily::F1,
                label: format!("{x}{y} - {y}{x}"),
                terms: vec![(one.clone(), vec![x, y]), (neg_one.clone(), vec![y, x])],
            });
        }
    }
    for i in 1..=4 {
        for (x, xi) in [
            (Gen::W(i, 1), Gen::W(i, -1)),
            (Gen::Wp(i, 1), Gen::Wp(i, -1)),
        ] {
            for pair in [[x, xi], [xi, x]] {
                out.push(Relation {
                    family: RelationFamily::F1,
                    label: format!("{}{} - 1", pair[0], pair[1]),
                    terms: vec![(one.clone(), pair.to_vec()), (neg_one.clone(), vec![])],
                });
            }
        }
    }
    for i in 1..=4 {
        for j in 1..=4 {
            let (a, b) = rootdata::structural_exps(i, j);
            let (c, d) = rootdata::structural_exps(j, i);
            let aij = ring.rs_monomial(a, b);
            let aij_inv = ring.rs_monomial(-a, -b);
            let aji = ring.rs_monomial(c, d);
            let aji_inv = ring.rs_monomial(-c, -d);
            let conj = |fam, w: Gen, wi: Gen, x: Gen, c: R::Elem| Relation {
                family: fam,
                label: format!("{w}{x}{wi} - c*{x}"),
                terms: vec![(one.clone(), vec![w, x, wi]), (ring.neg(&c), vec![x])],
            };
            let (w, wi, wp, wpi) = (Gen::W(i, 1), Gen::W(i, -1), Gen::Wp(i, 1), Gen::Wp(i, -1));
            out.push(conj(RelationFamily::F2, w, wi, Gen::E(j), aij));
            out.push(conj(RelationFamily::F2, w, wi, Gen::F(j), aij_inv));
            out.push(conj(RelationFamily::F3, wp, wpi, Gen::E(j), aji_inv));
            out.push(conj(RelationFamily::F3, wp, wpi, Gen::F(j), aji));
        }
    }
    for i in 1..=4 {
        for j in 1..=4 {
            let mut terms = vec![
                (one.clone(), vec![Gen::E(i), Gen::F(j)]),
                (neg_one.clone(), vec![Gen::F(j), Gen::E(i)]),
            ];
            if i == j {
                let k = rootdata::ri_si_power(i) as i64;
                let d = ring.sub(&ring.rs_monomial(k, 0), &ring.rs_monomial(0, k));
                let inv = ring
                    .inv(&d)
                    .expect("r_i − s_i is invertible at valid parameters");
                terms.push((ring.neg(&inv), vec![Gen::W(i, 1)]));
                terms.push((inv, vec![Gen::Wp(i, 1)]));
            }
            out.push(Relation {
                family: RelationFamily::F4,
                label: format!("[E{i}, F{j}]"),
                terms,
            });
        }
    }
    for n in 1..=6 {
        out.push(Relation {
            family: RelationFamily::F5,
            label: format!("(F5)_{n}"),
            terms: letters(&serre_element(ring, n), Gen::E),
        });
    }
    for n in 1..=6 {
        out.push(Relation {
            family: RelationFamily::F6,
            label: format!("(F6)_{n}"),
            terms: letters(&serre_f_element(ring, n), Gen::F),
        });
    }
    for (i, j) in [(1, 3), (1, 4), (2, 4)] {
        out.push(Relation {
            family: RelationFamily::F5,
            label: format!("E{i}E{j} - a{i}{j} E{j}E{i}"),
            terms: letters(&commuting_element(ring, i, j), Gen::E),
        });
        let (a, b) = rootdata::structural_exps(i, j);
        let f = FreeElem::from_terms(
            ring,
            [
                (vec![j as u8, i as u8], ring.one()),
                (vec![i as u8, j as u8], ring.neg(&ring.rs_monomial(b, a))),
            ],
        );
        out.push(Relation {
            family: RelationFamily::F6,
            label: format!("F{j}F{i} - a{i}{j}' F{i}F{j}"),
            terms: letters(&f, Gen::F),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatField;

    #[test]
    fn tau_maps_f5_to_f6() {
        for n in 1..=6 {
            assert_eq!(
                tau_free(&RatField, &serre_element(&RatField, n)),
                serre_f_element(&RatField, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn relation_counts() {
        let rels = defining_relations(&RatField);
        let count = |f| rels.iter().filter(|r| r.family == f).count();
        assert_eq!(count(RelationFamily::F1), 28 + 16);
        assert_eq!(count(RelationFamily::F2), 32);
        assert_eq!(count(RelationFamily::F3), 32);
        assert_eq!(count(RelationFamily::F4), 16);
        assert_eq!(count(RelationFamily::F5), 9);
        assert_eq!(count(RelationFamily::F6), 9);
    }
}
