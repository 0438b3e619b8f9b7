//! Hopf structure on U and u: coproduct, counit, antipode, adjoint actions,
//! characters, and the checks built on them.

mod ideal;
mod integrals;
mod iso;
mod pairing;

pub use ideal::{
    length_two_collapse, length_two_coproduct_check, simple_power_check, IDEAL_ROOT_WORDS,
};
pub use integrals::{
    distinguished_character, distinguished_grouplike, double_matrix, double_solvability, group_sum,
    half_character, half_grouplike, integral_left, integral_right, ribbon_check, top_e_monomial,
    DoubleReport, RibbonReport,
};
pub use iso::{iso_check, IsoCase, IsoMap, IsoReport};
pub use pairing::{Convention, Letter, PairingError, SkewPairing};

use crate::coeff::CoeffRing;
use crate::fullu::{GroupExp, UAlgebra, UElem, UMono};
use crate::lincomb::LinComb;
use crate::pbwplus::{mono_factors, PbwMono, ONE};
use crate::rootdata::{self, NROOTS};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Element of U ⊗ U.
pub type TensorElem<C> = LinComb<(UMono, UMono), C>;

/// Element of U ⊗ U ⊗ U.
pub type Tensor3<C> = LinComb<(UMono, UMono, UMono), C>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A group-like element of the dual: values on `ω_1..ω_4, ω'_1..ω'_4`,
/// zero on every monomial with an E or F factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character<C> {
    pub values: [C; 8],
}

impl<C: Clone> Character<C> {
    pub fn counit<R: CoeffRing<Elem = C>>(ring: &R) -> Self {
        Character {
            values: std::array::from_fn(|_| ring.one()),
        }
    }

    /// `ω_k ↦ ⟨ω'_μ, ω_k⟩` and `ω'_k ↦ ⟨ω'_μ, ω_k⟩`.
    pub fn from_weight<R: CoeffRing<Elem = C>>(ring: &R, mu: &rootdata::LatticeVec) -> Self {
        Character {
            values: std::array::from_fn(|k| {
                let (a, b) = rootdata::pairing_exps(mu, &rootdata::simple_root(k % 4 + 1));
                ring.rs_monomial(a, b)
            }),
        }
    }

    pub fn eval_group<R: CoeffRing<Elem = C>>(&self, ring: &R, g: &GroupExp) -> C {
        let mut acc = ring.one();
        for (v, &n) in self.values.iter().zip(g.0.iter()) {
            if n != 0 {
                let p = ring.pow(v, n as i64).expect("character values are units");
                acc = ring.mul(&acc, &p);
            }
        }
        acc
    }

    pub fn eval<R: CoeffRing<Elem = C>>(&self, ring: &R, x: &UElem<C>) -> C {
        x.iter()
            .filter(|(m, _)| m.e == ONE && m.f == ONE)
            .fold(ring.zero(), |acc, (m, c)| {
                ring.add(&acc, &ring.mul(c, &self.eval_group(ring, &m.g)))
            })
    }

    /// Convolution product; pointwise on the group.
    pub fn mul<R: CoeffRing<Elem = C>>(&self, ring: &R, o: &Self) -> Self {
        Character {
            values: std::array::from_fn(|k| ring.mul(&self.values[k], &o.values[k])),
        }
    }

    pub fn inverse<R: CoeffRing<Elem = C>>(&self, ring: &R) -> Self {
        Character {
            values: std::array::from_fn(|k| ring.inv(&self.values[k]).expect("unit")),
        }
    }

    /// Whether every value is an n-th root of unity.
    pub fn has_order_dividing<R: CoeffRing<Elem = C>>(&self, ring: &R, n: i64) -> bool {
        self.values
            .iter()
            .all(|v| ring.is_one(&ring.pow(v, n).expect("unit")))
    }
}

type RootCache<C> = RwLock<HashMap<(bool, usize), Arc<C>>>;

/// Coproduct, counit and antipode on a [`UAlgebra`], with root vectors
/// handled through their bracket trees and memoized.
pub struct Hopf<'a, R: CoeffRing> {
    alg: &'a UAlgebra<R>,
    delta: RootCache<TensorElem<R::Elem>>,
    anti: RootCache<UElem<R::Elem>>,
}

impl<'a, R: CoeffRing> Hopf<'a, R> {
    pub fn new(alg: &'a UAlgebra<R>) -> Self {
        Hopf {
            alg,
            delta: RwLock::new(HashMap::new()),
            anti: RwLock::new(HashMap::new()),
        }
    }

    pub fn alg(&self) -> &'a UAlgebra<R> {
        self.alg
    }

    fn ring(&self) -> &R {
        self.alg.ring()
    }

    pub fn tensor(&self, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> TensorElem<R::Elem> {
        let ring = self.ring();
        let mut out = TensorElem::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term(ring, (*x, *y), ring.mul(c, d));
            }
        }
        out
    }

    pub fn tensor_one(&self) -> TensorElem<R::Elem> {
        TensorElem::basis(self.ring(), (UMono::ONE, UMono::ONE))
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_mul(
        &self,
        x: &TensorElem<R::Elem>,
        y: &TensorElem<R::Elem>,
    ) -> TensorElem<R::Elem> {
        let ring = self.ring();
        let mut out = TensorElem::zero();
        for ((a, b), c) in x.iter() {
            for ((p, q), d) in y.iter() {
                let left = self.alg.multiply(&self.alg.mono(*a), &self.alg.mono(*p));
                if left.is_zero() {
                    continue;
                }
                let right = self.alg.multiply(&self.alg.mono(*b), &self.alg.mono(*q));
                let k = ring.mul(c, d);
                for (u, cu) in left.iter() {
                    let ku = ring.mul(&k, cu);
                    for (v, cv) in right.iter() {
                        out.add_term(ring, (*u, *v), ring.mul(&ku, cv));
                    }
                }
            }
        }
        out
    }

    pub fn tensor_power(&self, x: &TensorElem<R::Elem>, n: u32) -> TensorElem<R::Elem> {
        (0..n).fold(self.tensor_one(), |acc, _| self.tensor_mul(&acc, x))
    }

    /// Multiplication map `a⊗b ↦ ab`.
    pub fn mu(&self, x: &TensorElem<R::Elem>) -> UElem<R::Elem> {
        let mut out = UElem::zero();
        for ((a, b), c) in x.iter() {
            let p = self.alg.multiply(&self.alg.mono(*a), &self.alg.mono(*b));
            out.add_scaled(self.ring(), &p, c);
        }
        out
    }

    fn root_tree_p(i: usize) -> Option<(usize, usize, (i64, i64))> {
        rootdata::minimal_pair(i).map(|(a, b)| {
            let p =
                rootdata::pairing_exps(&rootdata::root(b).lattice(), &rootdata::root(a).lattice());
            (a, b, p)
        })
    }

    /// Δ of `E_{β_i}` (`f = false`) or `F_{β_i}` (`f = true`).
    pub fn root_coproduct(&self, f: bool, i: usize) -> Arc<TensorElem<R::Elem>> {
        if let Some(hit) = self.delta.read().unwrap().get(&(f, i)) {
            return hit.clone();
        }
        let alg = self.alg;
        let ring = self.ring();
        let out = match Self::root_tree_p(i) {
            None => {
                let k = rootdata::simple_of(i).expect("simple");
                if f {
                    // 1⊗F + F⊗ω'
                    let mut t = self.tensor(&alg.one(), &alg.f_root(i));
                    t.add_assign(
                        ring,
                        &self.tensor(&alg.f_root(i), &alg.group(GroupExp::omega_p(k, 1))),
                    );
                    t
                } else {
                    // E⊗1 + ω⊗E
                    let mut t = self.tensor(&alg.e_root(i), &alg.one());
                    t.add_assign(
                        ring,
                        &self.tensor(&alg.group(GroupExp::omega(k, 1)), &alg.e_root(i)),
                    );
                    t
                }
            }
            Some((a, b, (x, y))) => {
                let (da, db) = (self.root_coproduct(f, a), self.root_coproduct(f, b));
                if f {
                    // F = F_b F_a − τ(p) F_a F_b
                    let mut t = self.tensor_mul(&db, &da);
                    t.add_scaled(
                        ring,
                        &self.tensor_mul(&da, &db),
                        &ring.neg(&ring.rs_monomial(y, x)),
                    );
                    t
                } else {
                    // E = E_a E_b − p E_b E_a
                    let mut t = self.tensor_mul(&da, &db);
                    t.add_scaled(
                        ring,
                        &self.tensor_mul(&db, &da),
                        &ring.neg(&ring.rs_monomial(x, y)),
                    );
                    t
                }
            }
        };
        let out = Arc::new(out);
        self.delta.write().unwrap().insert((f, i), out.clone());
        out
    }

    fn factors(m: &PbwMono, f: bool) -> Vec<usize> {
        let mut v = mono_factors(m);
        if f {
            v.reverse();
        }
        v
    }

    pub fn coproduct_mono(&self, m: &UMono) -> TensorElem<R::Elem> {
        let mut out = self.tensor_one();
        for k in Self::factors(&m.e, false) {
            out = self.tensor_mul(&out, &self.root_coproduct(false, k));
        }
        if m.g != GroupExp::ZERO {
            let g = self.alg.group(m.g);
            out = self.tensor_mul(&out, &self.tensor(&g, &g));
        }
        for k in Self::factors(&m.f, true) {
            out = self.tensor_mul(&out, &self.root_coproduct(true, k));
        }
        out
    }

    pub fn coproduct(&self, a: &UElem<R::Elem>) -> TensorElem<R::Elem> {
        let mut out = TensorElem::zero();
        for (m, c) in a.iter() {
            out.add_scaled(self.ring(), &self.coproduct_mono(m), c);
        }
        out
    }

    pub fn counit(&self, a: &UElem<R::Elem>) -> R::Elem {
        self.alg.counit_scalar(a)
    }

    /// S of `E_{β_i}` or `F_{β_i}`.
    pub fn root_antipode(&self, f: bool, i: usize) -> Arc<UElem<R::Elem>> {
        if let Some(hit) = self.anti.read().unwrap().get(&(f, i)) {
            return hit.clone();
        }
        let alg = self.alg;
        let ring = self.ring();
        let out = match Self::root_tree_p(i) {
            None => {
                let k = rootdata::simple_of(i).expect("simple");
                if f {
                    // −F ω'^{-1}
                    let x = alg.multiply(&alg.f_root(i), &alg.group(GroupExp::omega_p(k, -1)));
                    x.neg(ring)
                } else {
                    // −ω^{-1} E
                    let x = alg.multiply(&alg.group(GroupExp::omega(k, -1)), &alg.e_root(i));
                    x.neg(ring)
                }
            }
            Some((a, b, (x, y))) => {
                let (sa, sb) = (self.root_antipode(f, a), self.root_antipode(f, b));
                if f {
                    // S(F_b F_a − τp F_a F_b) = S(F_a)S(F_b) − τp S(F_b)S(F_a)
                    let mut t = alg.multiply(&sa, &sb);
                    t.add_scaled(
                        ring,
                        &alg.multiply(&sb, &sa),
                        &ring.neg(&ring.rs_monomial(y, x)),
                    );
                    t
                } else {
                    let mut t = alg.multiply(&sb, &sa);
                    t.add_scaled(
                        ring,
                        &alg.multiply(&sa, &sb),
                        &ring.neg(&ring.rs_monomial(x, y)),
                    );
                    t
                }
            }
        };
        let out = Arc::new(out);
        self.anti.write().unwrap().insert((f, i), out.clone());
        out
    }

    /// `S(E·g·F) = S(F) S(g) S(E)`, each part reversed.
    pub fn antipode_mono(&self, m: &UMono) -> UElem<R::Elem> {
        let alg = self.alg;
        let mut out = alg.one();
        for k in Self::factors(&m.f, true).into_iter().rev() {
            out = alg.multiply(&out, &self.root_antipode(true, k));
        }
        out = alg.multiply(&out, &alg.group(m.g.neg()));
        for k in Self::factors(&m.e, false).into_iter().rev() {
            out = alg.multiply(&out, &self.root_antipode(false, k));
        }
        out
    }

    pub fn antipode(&self, a: &UElem<R::Elem>) -> UElem<R::Elem> {
        let mut out = UElem::zero();
        for (m, c) in a.iter() {
            out.add_scaled(self.ring(), &self.antipode_mono(m), c);
        }
        out
    }

    /// `ad_l a(b) = Σ a₍₁₎ b S(a₍₂₎)`, `ad_r a(b) = Σ S(a₍₁₎) b a₍₂₎`.
    pub fn adjoint(&self, side: Side, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> UElem<R::Elem> {
        let alg = self.alg;
        let mut out = UElem::zero();
        for ((x, y), c) in self.coproduct(a).iter() {
            let (x, y) = (alg.mono(*x), alg.mono(*y));
            let t = match side {
                Side::Left => alg.product(&[x, b.clone(), self.antipode(&y)]),
                Side::Right => alg.product(&[self.antipode(&x), b.clone(), y]),
            };
            out.add_scaled(self.ring(), &t, c);
        }
        out
    }

    pub fn adjoint_power(
        &self,
        side: Side,
        a: &UElem<R::Elem>,
        n: u32,
        b: &UElem<R::Elem>,
    ) -> UElem<R::Elem> {
        (0..n).fold(b.clone(), |acc, _| self.adjoint(side, a, &acc))
    }

    /// `ξ ⇀ a = Σ a₍₁₎ ξ(a₍₂₎)` (left) and `a ↼ ξ = Σ ξ(a₍₁₎) a₍₂₎` (right).
    pub fn character_act(
        &self,
        side: Side,
        xi: &Character<R::Elem>,
        a: &UElem<R::Elem>,
    ) -> UElem<R::Elem> {
        let ring = self.ring();
        let mut out = UElem::zero();
        for ((x, y), c) in self.coproduct(a).iter() {
            let (keep, eval) = match side {
                Side::Left => (x, y),
                Side::Right => (y, x),
            };
            if eval.e != ONE || eval.f != ONE {
                continue;
            }
            let v = ring.mul(c, &xi.eval_group(ring, &eval.g));
            out.add_term(ring, *keep, v);
        }
        out
    }

    /// `(Δ⊗id)Δ(a)`.
    pub fn coproduct_left_assoc(&self, a: &UElem<R::Elem>) -> Tensor3<R::Elem> {
        let ring = self.ring();
        let mut out = Tensor3::zero();
        for ((x, y), c) in self.coproduct(a).iter() {
            for ((p, q), d) in self.coproduct_mono(x).iter() {
                out.add_term(ring, (*p, *q, *y), ring.mul(c, d));
            }
        }
        out
    }

    /// `(id⊗Δ)Δ(a)`.
    pub fn coproduct_right_assoc(&self, a: &UElem<R::Elem>) -> Tensor3<R::Elem> {
        let ring = self.ring();
        let mut out = Tensor3::zero();
        for ((x, y), c) in self.coproduct(a).iter() {
            for ((p, q), d) in self.coproduct_mono(y).iter() {
                out.add_term(ring, (*x, *p, *q), ring.mul(c, d));
            }
        }
        out
    }

    /// `μ(S⊗id)Δ(a)` and `μ(id⊗S)Δ(a)`.
    pub fn antipode_axiom_sides(&self, a: &UElem<R::Elem>) -> (UElem<R::Elem>, UElem<R::Elem>) {
        let alg = self.alg;
        let ring = self.ring();
        let (mut l, mut r) = (UElem::zero(), UElem::zero());
        for ((x, y), c) in self.coproduct(a).iter() {
            let (mx, my) = (alg.mono(*x), alg.mono(*y));
            l.add_scaled(ring, &alg.multiply(&self.antipode(&mx), &my), c);
            r.add_scaled(ring, &alg.multiply(&mx, &self.antipode(&my)), c);
        }
        (l, r)
    }

    /// Whether all Hopf axioms hold on `a`: coassociativity, counit laws on
    /// both sides, and both antipode laws.
    pub fn axioms_hold(&self, a: &UElem<R::Elem>) -> Result<(), String> {
        let alg = self.alg;
        let ring = self.ring();
        if self.coproduct_left_assoc(a) != self.coproduct_right_assoc(a) {
            return Err("coassociativity".into());
        }
        let d = self.coproduct(a);
        let (mut l, mut r) = (UElem::zero(), UElem::zero());
        for ((x, y), c) in d.iter() {
            let ex = self.counit(&alg.mono(*x));
            let ey = self.counit(&alg.mono(*y));
            l.add_term(ring, *y, ring.mul(c, &ex));
            r.add_term(ring, *x, ring.mul(c, &ey));
        }
        if &l != a || &r != a {
            return Err("counit".into());
        }
        let unit = alg.scalar(self.counit(a));
        let (sl, sr) = self.antipode_axiom_sides(a);
        if sl != unit {
            return Err("antipode (S⊗id)".into());
        }
        if sr != unit {
            return Err("antipode (id⊗S)".into());
        }
        Ok(())
    }

    /// Roots of height at most `h`.
    pub fn roots_up_to_height(h: u32) -> Vec<usize> {
        (1..=NROOTS)
            .filter(|&i| rootdata::root(i).height() <= h)
            .collect()
    }
}

#[cfg(test)]
mod tests;
