//! Hopf isomorphisms `U_{r,s} → U_{r',s'}` for `(r', s') = ζ(r, s)` and
//! `(r', s') = ζ(s, r)`, checked on the defining relations and on Δ.

use super::{Hopf, TensorElem};
use crate::coeff::CoeffRing;
use crate::fullu::{defining_relations, Gen, GroupExp, UElem, UMono};
use crate::pbwplus::mono_factors;
use crate::rootdata;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoCase {
    /// `ω ↦ ω̃`, `ω' ↦ ω̃'`, `E_i ↦ a_i Ẽ_i`, `F_i ↦ b_i F̃_i`.
    Same,
    /// `ω_i ↦ ω̃'_i^{-1}`, `ω'_i ↦ ω̃_i^{-1}`, `E_i ↦ a_i F̃_i ω̃'_i^{-1}`, `F_i ↦ b_i ω̃_i^{-1} Ẽ_i`.
    Swapped,
    /// `ω_i ↦ ω̃'_i`, `ω'_i ↦ ω̃_i`, `E_i ↦ a_i F̃_i ω̃'_i`, `F_i ↦ b_i ω̃_i^{-1} Ẽ_i`.
    SwappedAsStated,
}

/// `b_i = ζ^{δ_{i3} + δ_{i4}} a_i^{-1}`.
#[derive(Clone, Debug)]
pub struct IsoMap<C> {
    pub case: IsoCase,
    pub zeta: i64,
    pub a: [C; 4],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoReport {
    pub failed_relations: Vec<String>,
    pub failed_coproducts: Vec<Gen>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failed_relations.is_empty() && self.failed_coproducts.is_empty()
    }
}

struct Phi<'a, 'b, R: CoeffRing> {
    src_ring: &'b R,
    tgt: &'b Hopf<'a, R>,
    map: &'b IsoMap<R::Elem>,
}

impl<R: CoeffRing> Phi<'_, '_, R> {
    fn gen(&self, g: Gen) -> UElem<R::Elem> {
        let alg = self.tgt.alg();
        let ring = alg.ring();
        let b = |i: usize| {
            let z = if i >= 3 {
                ring.from_i64(self.map.zeta)
            } else {
                ring.one()
            };
            ring.mul(&z, &ring.inv(&self.map.a[i - 1]).expect("a_i nonzero"))
        };
        let swapped = self.map.case != IsoCase::Same;
        let inv = if self.map.case == IsoCase::Swapped {
            -1
        } else {
            1
        };
        match g {
            Gen::W(i, n) if swapped => alg.group(GroupExp::omega_p(i, inv * n)),
            Gen::Wp(i, n) if swapped => alg.group(GroupExp::omega(i, inv * n)),
            Gen::W(..) | Gen::Wp(..) => alg.gen(g),
            Gen::E(i) if swapped => {
                let x = alg.multiply(&alg.gen(Gen::F(i)), &alg.group(GroupExp::omega_p(i, inv)));
                alg.scale(&x, &self.map.a[i - 1])
            }
            Gen::E(i) => alg.scale(&alg.gen(g), &self.map.a[i - 1]),
            Gen::F(i) if swapped => {
                let x = alg.multiply(&alg.group(GroupExp::omega(i, -1)), &alg.gen(Gen::E(i)));
                alg.scale(&x, &b(i))
            }
            Gen::F(i) => alg.scale(&alg.gen(g), &b(i)),
        }
    }

    /// Image of a root vector of the source, through its bracket tree.
    fn root(&self, f: bool, i: usize) -> UElem<R::Elem> {
        let alg = self.tgt.alg();
        let ring = self.src_ring;
        match rootdata::minimal_pair(i) {
            None => {
                let k = rootdata::simple_of(i).expect("simple");
                self.gen(if f { Gen::F(k) } else { Gen::E(k) })
            }
            Some((a, b)) => {
                let (x, y) = rootdata::pairing_exps(
                    &rootdata::root(b).lattice(),
                    &rootdata::root(a).lattice(),
                );
                let (pa, pb) = (self.root(f, a), self.root(f, b));
                if f {
                    let t = alg.multiply(&pb, &pa);
                    alg.sub(
                        &t,
                        &alg.scale(&alg.multiply(&pa, &pb), &ring.rs_monomial(y, x)),
                    )
                } else {
                    let t = alg.multiply(&pa, &pb);
                    alg.sub(
                        &t,
                        &alg.scale(&alg.multiply(&pb, &pa), &ring.rs_monomial(x, y)),
                    )
                }
            }
        }
    }

    fn mono(&self, m: &UMono) -> UElem<R::Elem> {
        let alg = self.tgt.alg();
        let mut out = alg.one();
        for k in mono_factors(&m.e) {
            out = alg.multiply(&out, &self.root(false, k));
        }
        for (k, &n) in m.g.0.iter().enumerate() {
            if n != 0 {
                let g = if k < 4 {
                    Gen::W(k + 1, n)
                } else {
                    Gen::Wp(k - 3, n)
                };
                out = alg.multiply(&out, &self.gen(g));
            }
        }
        let mut fs = mono_factors(&m.f);
        fs.reverse();
        for k in fs {
            out = alg.multiply(&out, &self.root(true, k));
        }
        out
    }

    fn tensor(&self, x: &TensorElem<R::Elem>) -> TensorElem<R::Elem> {
        let ring = self.tgt.alg().ring();
        let mut out = TensorElem::zero();
        for ((a, b), c) in x.iter() {
            out.add_scaled(ring, &self.tgt.tensor(&self.mono(a), &self.mono(b)), c);
        }
        out
    }
}

/// Checks that φ respects every defining relation of the source and that
/// `Δ'∘φ = (φ⊗φ)∘Δ` on the sixteen generators. Source and target must run
/// over the same coefficient field; the source relations use the source's
/// (r, s).
pub fn iso_check<R: CoeffRing>(
    src: &Hopf<'_, R>,
    tgt: &Hopf<'_, R>,
    map: &IsoMap<R::Elem>,
) -> IsoReport {
    let phi = Phi {
        src_ring: src.alg().ring(),
        tgt,
        map,
    };
    let mut report = IsoReport::default();
    for rel in defining_relations(src.alg().ring()) {
        if !rel.evaluate(tgt.alg(), &|g| phi.gen(g)).is_zero() {
            report
                .failed_relations
                .push(format!("{} {}", rel.family, rel.label));
        }
    }
    for g in Gen::all_generators() {
        let lhs = tgt.coproduct(&phi.gen(g));
        let rhs = phi.tensor(&src.coproduct(&src.alg().gen(g)));
        if lhs != rhs {
            report.failed_coproducts.push(g);
        }
    }
    report
}
