//! Coproducts of ℓ-th powers of simple and length-two root vectors.

use super::{Hopf, TensorElem};
use crate::coeff::CoeffRing;
use crate::fullu::{Gen, GroupExp};
use crate::rootdata;

/// The length-two roots `α_j + α_{j+1}` by Lyndon word.
pub const IDEAL_ROOT_WORDS: [&str; 3] = ["12", "23", "34"];

/// `Δ(E_i)^n == E_i^n⊗1 + ω_i^n⊗E_i^n`.
pub fn simple_power_check<R: CoeffRing>(h: &Hopf<'_, R>, i: usize, n: u32) -> bool {
    let alg = h.alg();
    let k = rootdata::SIMPLE_INDEX[i - 1];
    let lhs = h.tensor_power(&h.root_coproduct(false, k), n);
    let en = alg.power(&alg.e_root(k), n);
    let mut rhs = h.tensor(&en, &alg.one());
    rhs.add_assign(
        alg.ring(),
        &h.tensor(&alg.group(GroupExp::omega(i, n as i32)), &en),
    );
    lhs == rhs
}

struct LengthTwo<C> {
    head: TensorElem<C>,
    x: TensorElem<C>,
    cy: TensorElem<C>,
}

fn length_two_parts<R: CoeffRing>(h: &Hopf<'_, R>, j: usize) -> LengthTwo<R::Elem> {
    let alg = h.alg();
    let ring = alg.ring();
    let beta = rootdata::index_of_word(IDEAL_ROOT_WORDS[j - 1]).expect("root");
    let eb = alg.e_root(beta);
    let wb = alg.group(GroupExp::from_weights(
        &rootdata::root(beta).lattice(),
        &[0; 4],
    ));
    let (a, b) = rootdata::structural_exps(j, j + 1);
    let (c, d) = rootdata::structural_exps(j + 1, j);
    let coeff = ring.sub(&ring.one(), &ring.rs_monomial(a + c, b + d));
    let ej_w = alg.multiply(&alg.gen(Gen::E(j)), &alg.group(GroupExp::omega(j + 1, 1)));
    let y = h.tensor(&ej_w, &alg.gen(Gen::E(j + 1)));
    LengthTwo {
        head: h.tensor(&eb, &alg.one()),
        x: h.tensor(&wb, &eb),
        cy: y.scale(ring, &coeff),
    }
}

/// `Δ(E_{j,j+1}) == E_{j,j+1}⊗1 + ω_{j,j+1}⊗E_{j,j+1} + (1 − a_{j,j+1}a_{j+1,j}) E_jω_{j+1}⊗E_{j+1}`.
pub fn length_two_coproduct_check<R: CoeffRing>(h: &Hopf<'_, R>, j: usize) -> bool {
    let ring = h.alg().ring();
    let beta = rootdata::index_of_word(IDEAL_ROOT_WORDS[j - 1]).expect("root");
    let p = length_two_parts(h, j);
    let rhs = p.head.add(ring, &p.x).add(ring, &p.cy);
    *h.root_coproduct(false, beta) == rhs
}

/// `Δ(E_{j,j+1})^n == E_{j,j+1}^n⊗1 + X^n + (cY)^n` with `X = ω_{j,j+1}⊗E_{j,j+1}`,
/// `cY = (1 − a_{j,j+1}a_{j+1,j}) E_jω_{j+1}⊗E_{j+1}`. Returns the difference.
pub fn length_two_collapse<R: CoeffRing>(h: &Hopf<'_, R>, j: usize, n: u32) -> TensorElem<R::Elem> {
    let ring = h.alg().ring();
    let beta = rootdata::index_of_word(IDEAL_ROOT_WORDS[j - 1]).expect("root");
    let p = length_two_parts(h, j);
    let lhs = h.tensor_power(&h.root_coproduct(false, beta), n);
    let mut rhs = h.tensor_power(&p.head, n);
    rhs.add_assign(ring, &h.tensor_power(&p.x, n));
    rhs.add_assign(ring, &h.tensor_power(&p.cy, n));
    lhs.sub(ring, &rhs)
}
