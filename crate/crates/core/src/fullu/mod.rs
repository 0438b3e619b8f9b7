//! The full algebra U_{r,s}(F_4) in triangular normal form `E · ω ω' · F`,
//! and its restricted quotient u_{r,s}(F_4).

mod relations;

pub use relations::{
    defining_relations, eval_word, serre_f_element, tau_free, Gen, Relation, RelationFamily,
};

use crate::coeff::{CoeffError, CoeffRing, RatFunc2};
use crate::lincomb::LinComb;
use crate::pbwplus::{
    mono_degree, mono_max, render_mono, root_power, PbwAlgebra, PbwElem, PbwMono,
    StraighteningTable, Truncation, ONE,
};
use crate::rootdata::{self, LatticeVec, NROOTS, SIMPLE_INDEX};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// Exponents of `ω_1..ω_4` followed by `ω'_1..ω'_4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupExp(pub [i32; 8]);

impl GroupExp {
    pub const ZERO: GroupExp = GroupExp([0; 8]);

    pub fn omega(i: usize, n: i32) -> Self {
        let mut g = [0; 8];
        g[i - 1] = n;
        GroupExp(g)
    }

    pub fn omega_p(i: usize, n: i32) -> Self {
        let mut g = [0; 8];
        g[i + 3] = n;
        GroupExp(g)
    }

    /// `ω_μ ω'_ν` for lattice vectors μ, ν.
    pub fn from_weights(mu: &LatticeVec, nu: &LatticeVec) -> Self {
        let mut g = [0; 8];
        for k in 0..4 {
            g[k] = mu[k] as i32;
            g[k + 4] = nu[k] as i32;
        }
        GroupExp(g)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut g = self.0;
        for (a, b) in g.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        GroupExp(g)
    }

    pub fn neg(&self) -> Self {
        GroupExp(self.0.map(|x| -x))
    }

    pub fn scale(&self, k: i32) -> Self {
        GroupExp(self.0.map(|x| x * k))
    }

    pub fn weight(&self) -> LatticeVec {
        [0, 1, 2, 3].map(|k| self.0[k] as i64)
    }

    pub fn weight_p(&self) -> LatticeVec {
        [4, 5, 6, 7].map(|k| self.0[k] as i64)
    }

    /// Exchanges the ω and ω' exponents.
    pub fn swap(&self) -> Self {
        let g = self.0;
        GroupExp([g[4], g[5], g[6], g[7], g[0], g[1], g[2], g[3]])
    }

    pub fn reduce(&self, modulus: Option<i32>) -> Self {
        match modulus {
            Some(l) => GroupExp(self.0.map(|x| x.rem_euclid(l))),
            None => *self,
        }
    }

    /// `(a, b)` with `g · X = r^a s^b · X · g` for `X ∈ U⁺` of degree `zeta`.
    pub fn shift_exps(&self, zeta: &LatticeVec) -> (i64, i64) {
        let (a1, b1) = rootdata::pairing_exps(zeta, &self.weight());
        let (a2, b2) = rootdata::pairing_exps(&self.weight_p(), zeta);
        (a1 - a2, b1 - b2)
    }
}

/// `E_{β_24}^{e_24}⋯E_{β_1}^{e_1} · ω^g · F_{β_1}^{f_1}⋯F_{β_24}^{f_24}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UMono {
    pub e: PbwMono,
    pub g: GroupExp,
    pub f: PbwMono,
}

impl UMono {
    pub const ONE: UMono = UMono {
        e: ONE,
        g: GroupExp::ZERO,
        f: ONE,
    };

    /// Degree in the root lattice (E counts positively, F negatively).
    pub fn degree(&self) -> LatticeVec {
        rootdata::lat_sub(&mono_degree(&self.e), &mono_degree(&self.f))
    }
}

impl fmt::Display for UMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.g.0.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "E{} w[{}] F{}",
            render_mono(&self.e),
            g.join(" "),
            render_mono(&self.f)
        )
    }
}

pub type UElem<C> = LinComb<UMono, C>;

/// Canonical text form, one `E[..] w[..] F[..] * coeff` per term.
pub fn render_uelem<R: CoeffRing>(ring: &R, x: &UElem<R::Elem>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(m, c)| format!("{} * {}", m, ring.render(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

/// Normal-form arithmetic in U (or u when truncated) over a coefficient ring.
pub struct UAlgebra<R: CoeffRing> {
    ring: R,
    eplus: PbwAlgebra<R>,
    fplus: PbwAlgebra<R>,
    group_mod: Option<i32>,
    cross: Cache<(u8, u8), UElem<R::Elem>>,
    fe: Cache<(PbwMono, PbwMono), UElem<R::Elem>>,
}

impl<R: CoeffRing> UAlgebra<R> {
    /// `trunc = At(ℓ)` gives the restricted quotient (exponents and group
    /// exponents taken mod ℓ); `None` gives U itself.
    pub fn new(
        ring: R,
        table: &StraighteningTable<RatFunc2>,
        trunc: Truncation,
    ) -> Result<Self, CoeffError> {
        let eplus = PbwAlgebra::new(ring.clone(), &table.specialize(&ring)?, trunc);
        let fplus =
            PbwAlgebra::new_swapped(ring.clone(), &table.swap_rs().specialize(&ring)?, trunc);
        let group_mod = match trunc {
            Truncation::None => None,
            Truncation::At(l) => Some(l as i32),
        };
        Ok(UAlgebra {
            ring,
            eplus,
            fplus,
            group_mod,
            cross: RwLock::new(HashMap::new()),
            fe: RwLock::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn eplus(&self) -> &PbwAlgebra<R> {
        &self.eplus
    }

    /// U⁻ as an engine over the τ-image table; an F-product `a·b` is `fplus().multiply(b, a)`.
    pub fn fplus(&self) -> &PbwAlgebra<R> {
        &self.fplus
    }

    pub fn truncation(&self) -> Truncation {
        self.eplus.truncation()
    }

    pub fn group_modulus(&self) -> Option<i32> {
        self.group_mod
    }

    fn rs(&self, (a, b): (i64, i64)) -> R::Elem {
        self.ring.rs_monomial(a, b)
    }

    pub fn zero(&self) -> UElem<R::Elem> {
        UElem::zero()
    }

    pub fn one(&self) -> UElem<R::Elem> {
        UElem::basis(&self.ring, UMono::ONE)
    }

    pub fn scalar(&self, c: R::Elem) -> UElem<R::Elem> {
        UElem::term(&self.ring, UMono::ONE, c)
    }

    /// The basis element for a monomial, or zero if it is cut off.
    pub fn mono(&self, m: UMono) -> UElem<R::Elem> {
        if self.eplus.admissible(&m.e) && self.fplus.admissible(&m.f) {
            UElem::basis(
                &self.ring,
                UMono {
                    g: m.g.reduce(self.group_mod),
                    ..m
                },
            )
        } else {
            UElem::zero()
        }
    }

    pub fn group(&self, g: GroupExp) -> UElem<R::Elem> {
        self.mono(UMono { g, ..UMono::ONE })
    }

    /// `E_{β_i}`.
    pub fn e_root(&self, i: usize) -> UElem<R::Elem> {
        self.mono(UMono {
            e: root_power(i, 1),
            ..UMono::ONE
        })
    }

    /// `F_{β_i} = τ(E_{β_i})`.
    pub fn f_root(&self, i: usize) -> UElem<R::Elem> {
        self.mono(UMono {
            f: root_power(i, 1),
            ..UMono::ONE
        })
    }

    /// Embeds an element of U⁺.
    pub fn from_eplus(&self, x: &PbwElem<R::Elem>) -> UElem<R::Elem> {
        x.map(&self.ring, |m, c| {
            Some((
                UMono {
                    e: *m,
                    ..UMono::ONE
                },
                c.clone(),
            ))
        })
    }

    /// Embeds an element of U⁻ given in the F-engine's coordinates.
    pub fn from_fplus(&self, x: &PbwElem<R::Elem>) -> UElem<R::Elem> {
        x.map(&self.ring, |m, c| {
            Some((
                UMono {
                    f: *m,
                    ..UMono::ONE
                },
                c.clone(),
            ))
        })
    }

    pub fn gen(&self, g: Gen) -> UElem<R::Elem> {
        match g {
            Gen::E(i) => self.e_root(SIMPLE_INDEX[i - 1]),
            Gen::F(i) => self.f_root(SIMPLE_INDEX[i - 1]),
            Gen::W(i, n) => self.group(GroupExp::omega(i, n)),
            Gen::Wp(i, n) => self.group(GroupExp::omega_p(i, n)),
        }
    }

    pub fn add(&self, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> UElem<R::Elem> {
        a.add(&self.ring, b)
    }

    pub fn sub(&self, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> UElem<R::Elem> {
        a.sub(&self.ring, b)
    }

    pub fn scale(&self, a: &UElem<R::Elem>, c: &R::Elem) -> UElem<R::Elem> {
        a.scale(&self.ring, c)
    }

    pub fn multiply(&self, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> UElem<R::Elem> {
        let mut out = UElem::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                self.mono_product_into(ma, mb, &self.ring.mul(ca, cb), &mut out);
            }
        }
        out
    }

    pub fn product(&self, xs: &[UElem<R::Elem>]) -> UElem<R::Elem> {
        xs.iter().fold(self.one(), |acc, x| self.multiply(&acc, x))
    }

    pub fn power(&self, x: &UElem<R::Elem>, n: u32) -> UElem<R::Elem> {
        (0..n).fold(self.one(), |acc, _| self.multiply(&acc, x))
    }

    /// Ordinary commutator `ab − ba`.
    pub fn commutator(&self, a: &UElem<R::Elem>, b: &UElem<R::Elem>) -> UElem<R::Elem> {
        self.sub(&self.multiply(a, b), &self.multiply(b, a))
    }

    fn mono_product_into(&self, a: &UMono, b: &UMono, c: &R::Elem, out: &mut UElem<R::Elem>) {
        let mid = self.fe_mul(&a.f, &b.e);
        for (m, k) in mid.iter() {
            let (x1, y1) = a.g.shift_exps(&mono_degree(&m.e));
            let (x2, y2) = b.g.shift_exps(&mono_degree(&m.f));
            let scal = self
                .ring
                .mul(&self.ring.mul(c, k), &self.rs((x1 + x2, y1 + y2)));
            let g = a.g.add(&m.g).add(&b.g).reduce(self.group_mod);
            let es = self.eplus.mono_mul(&a.e, &m.e);
            let fs = self.fplus.mono_mul(&b.f, &m.f);
            for (e, ce) in es.iter() {
                let ce = self.ring.mul(&scal, ce);
                for (f, cf) in fs.iter() {
                    out.add_term(
                        &self.ring,
                        UMono { e: *e, g, f: *f },
                        self.ring.mul(&ce, cf),
                    );
                }
            }
        }
    }

    /// `F-monomial · E-monomial` in normal form.
    pub fn fe_mul(&self, f: &PbwMono, e: &PbwMono) -> Arc<UElem<R::Elem>> {
        if *f == ONE || *e == ONE {
            return Arc::new(self.mono(UMono {
                e: *e,
                g: GroupExp::ZERO,
                f: *f,
            }));
        }
        let key = (*f, *e);
        if let Some(hit) = self.fe.read().unwrap().get(&key) {
            return hit.clone();
        }
        let m = mono_max(f).expect("nonempty");
        let mut rest = *f;
        rest[m - 1] -= 1;
        let out = if rest == ONE {
            self.single_f_times_e(m, e)
        } else {
            // f·e = rest · (F_m · e)
            let mut out = UElem::zero();
            for (t, c) in self.fe_mul(&root_power(m, 1), e).iter() {
                for (u, k) in self.fe_mul(&rest, &t.e).iter() {
                    let sh = t.g.shift_exps(&mono_degree(&u.f));
                    let scal = self.ring.mul(&self.ring.mul(c, k), &self.rs(sh));
                    let g = u.g.add(&t.g).reduce(self.group_mod);
                    for (ff, cf) in self.fplus.mono_mul(&t.f, &u.f).iter() {
                        out.add_term(
                            &self.ring,
                            UMono { e: u.e, g, f: *ff },
                            self.ring.mul(&scal, cf),
                        );
                    }
                }
            }
            out
        };
        let out = Arc::new(out);
        self.fe.write().unwrap().insert(key, out.clone());
        out
    }

    /// `F_{β_m} · e`, peeling the leftmost E factor: `F_m E_k = E_k F_m − [E_k, F_m]`.
    fn single_f_times_e(&self, m: usize, e: &PbwMono) -> UElem<R::Elem> {
        let k = mono_max(e).expect("nonempty");
        let mut rest = *e;
        rest[k - 1] -= 1;
        let mut out = UElem::zero();
        for (t, c) in self.fe_mul(&root_power(m, 1), &rest).iter() {
            for (ee, ce) in self.eplus.left_insert(k, &t.e).iter() {
                out.add_term(&self.ring, UMono { e: *ee, ..*t }, self.ring.mul(c, ce));
            }
        }
        let cross = self.cross_commutator(k, m);
        for (t, c) in cross.iter() {
            for (u, k2) in self.fe_mul(&t.f, &rest).iter() {
                let sh = t.g.shift_exps(&mono_degree(&u.e));
                let scal = self
                    .ring
                    .neg(&self.ring.mul(&self.ring.mul(c, k2), &self.rs(sh)));
                let g = t.g.add(&u.g).reduce(self.group_mod);
                for (ee, ce) in self.eplus.mono_mul(&t.e, &u.e).iter() {
                    out.add_term(
                        &self.ring,
                        UMono { e: *ee, g, f: u.f },
                        self.ring.mul(&scal, ce),
                    );
                }
            }
        }
        out
    }

    /// `[E_{β_i}, F_{β_j}] = E_{β_i}F_{β_j} − F_{β_j}E_{β_i}`.
    pub fn cross_commutator(&self, i: usize, j: usize) -> Arc<UElem<R::Elem>> {
        let key = (i as u8, j as u8);
        if let Some(hit) = self.cross.read().unwrap().get(&key) {
            return hit.clone();
        }
        let out = match (rootdata::minimal_pair(i), rootdata::minimal_pair(j)) {
            (None, None) => {
                if i == j {
                    let a = rootdata::simple_of(i).expect("simple");
                    let k = rootdata::ri_si_power(a) as i64;
                    let d = self.ring.sub(&self.rs((k, 0)), &self.rs((0, k)));
                    let inv = self
                        .ring
                        .inv(&d)
                        .expect("r_i − s_i is invertible at valid parameters");
                    let w = self.group(GroupExp::omega(a, 1));
                    let wp = self.group(GroupExp::omega_p(a, 1));
                    self.scale(&self.sub(&w, &wp), &inv)
                } else {
                    UElem::zero()
                }
            }
            (Some((a, b)), _) => {
                // E_i = E_a E_b − p E_b E_a
                let p = self.rs(rootdata::pairing_exps(
                    &rootdata::root(b).lattice(),
                    &rootdata::root(a).lattice(),
                ));
                let (ea, eb) = (self.e_root(a), self.e_root(b));
                let (ca, cb) = (self.cross_commutator(a, j), self.cross_commutator(b, j));
                let first = self.add(&self.multiply(&ea, &cb), &self.multiply(&ca, &eb));
                let second = self.add(&self.multiply(&eb, &ca), &self.multiply(&cb, &ea));
                self.sub(&first, &self.scale(&second, &p))
            }
            (None, Some((a, b))) => {
                // F_j = F_b F_a − τ(p) F_a F_b
                let (x, y) = rootdata::pairing_exps(
                    &rootdata::root(b).lattice(),
                    &rootdata::root(a).lattice(),
                );
                let tp = self.rs((y, x));
                let (fa, fb) = (self.f_root(a), self.f_root(b));
                let (ca, cb) = (self.cross_commutator(i, a), self.cross_commutator(i, b));
                let first = self.add(&self.multiply(&cb, &fa), &self.multiply(&fb, &ca));
                let second = self.add(&self.multiply(&ca, &fb), &self.multiply(&fa, &cb));
                self.sub(&first, &self.scale(&second, &tp))
            }
        };
        let out = Arc::new(out);
        self.cross.write().unwrap().insert(key, out.clone());
        out
    }

    /// Checks that `x` commutes with all sixteen generators; returns the first
    /// generator that fails.
    pub fn central_against_generators(&self, x: &UElem<R::Elem>) -> Option<Gen> {
        Gen::all_generators()
            .into_iter()
            .find(|&g| !self.commutator(x, &self.gen(g)).is_zero())
    }

    pub fn counit_scalar(&self, x: &UElem<R::Elem>) -> R::Elem {
        x.iter()
            .filter(|(m, _)| m.e == ONE && m.f == ONE)
            .fold(self.ring.zero(), |acc, (_, c)| self.ring.add(&acc, c))
    }

    pub fn cache_len(&self) -> usize {
        self.cross.read().unwrap().len() + self.fe.read().unwrap().len()
    }
}

/// τ: the anti-automorphism `E_i ↔ F_i`, `ω_i ↔ ω'_i`, `r ↔ s`. The image
/// lives in the algebra over `ring.tau_ring()`.
pub fn tau<R: CoeffRing>(ring: &R, x: &UElem<R::Elem>) -> UElem<R::Elem> {
    x.map(&ring.tau_ring(), |m, c| {
        Some((
            UMono {
                e: m.f,
                g: m.g.swap(),
                f: m.e,
            },
            ring.tau_coeff(c),
        ))
    })
}

/// Number of PBW exponents indexing a basis of u: `24 + 8 + 24 = 56`; with
/// each exponent in `0..ℓ` this gives dim u = ℓ^56.
pub const RESTRICTED_BASIS_EXPONENTS: usize = 2 * NROOTS + 8;

/// Position of a restricted-basis monomial in `0..ℓ^56`, read as base-ℓ digits
/// (E exponents, then the eight group exponents, then F exponents).
pub fn restricted_index(m: &UMono, ell: u32) -> Option<num_bigint::BigUint> {
    let l = ell as i64;
    let digits =
        m.e.iter()
            .map(|&x| x as i64)
            .chain(m.g.0.iter().map(|&x| x as i64))
            .chain(m.f.iter().map(|&x| x as i64));
    let mut acc = num_bigint::BigUint::from(0u32);
    for d in digits {
        if !(0..l).contains(&d) {
            return None;
        }
        acc = acc * ell + d as u32;
    }
    Some(acc)
}

/// Inverse of [`restricted_index`].
pub fn restricted_mono(index: &num_bigint::BigUint, ell: u32) -> Option<UMono> {
    use num_traits::{ToPrimitive, Zero};
    let mut digits = [0u32; RESTRICTED_BASIS_EXPONENTS];
    let mut rest = index.clone();
    for d in digits.iter_mut().rev() {
        *d = (&rest % ell).to_u32()?;
        rest /= ell;
    }
    if !rest.is_zero() {
        return None;
    }
    let mut m = UMono::ONE;
    for k in 0..NROOTS {
        m.e[k] = digits[k] as u8;
        m.f[k] = digits[NROOTS + 8 + k] as u8;
    }
    for k in 0..8 {
        m.g.0[k] = digits[NROOTS + k] as i32;
    }
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatField;
    use crate::pbwplus::build_straightening_table;

    fn with_alg<T: Send>(f: impl FnOnce(&UAlgebra<RatField>) -> T + Send) -> T {
        crate::run_with_stack(|| {
            let table = build_straightening_table().unwrap();
            let alg = UAlgebra::new(RatField, &table, Truncation::None).unwrap();
            f(&alg)
        })
    }

    fn rf(s: &str) -> RatFunc2 {
        crate::coeff::parse_ratfunc(s).unwrap()
    }

    #[test]
    fn f1_e1_straightens_with_cartan_part() {
        with_alg(|u| {
            let (e1, f1) = (u.gen(Gen::E(1)), u.gen(Gen::F(1)));
            let lhs = u.multiply(&f1, &e1);
            let w = u.sub(&u.gen(Gen::W(1, 1)), &u.gen(Gen::Wp(1, 1)));
            let rhs = u.sub(&u.multiply(&e1, &f1), &u.scale(&w, &rf("1/(r^2 - s^2)")));
            assert_eq!(lhs, rhs);
        });
    }

    #[test]
    fn group_passes_e_with_structure_constant() {
        with_alg(|u| {
            let lhs = u.multiply(&u.gen(Gen::W(1, 1)), &u.gen(Gen::E(2)));
            let rhs = u.scale(
                &u.multiply(&u.gen(Gen::E(2)), &u.gen(Gen::W(1, 1))),
                &rf("s^2"),
            );
            assert_eq!(lhs, rhs);
        });
    }

    #[test]
    fn disjoint_e_f_commute() {
        with_alg(|u| {
            let (e1, f2) = (u.gen(Gen::E(1)), u.gen(Gen::F(2)));
            assert_eq!(u.multiply(&f2, &e1), u.multiply(&e1, &f2));
        });
    }

    #[test]
    fn cross_commutator_examples() {
        with_alg(|u| {
            // [E_12, F_2] = r^-2 E_1 ω_2
            let want = u.scale(
                &u.multiply(&u.e_root(1), &u.gen(Gen::W(2, 1))),
                &rf("1/r^2"),
            );
            assert_eq!(*u.cross_commutator(2, 16), want);
            // [E_12343, F_1] = −E_2343 ω'_1
            let want = u.scale(&u.multiply(&u.e_root(20), &u.gen(Gen::Wp(1, 1))), &rf("-1"));
            assert_eq!(*u.cross_commutator(7, 1), want);
            // [E_123432, F_2] = r^-3 (r − s) E_12343^2 ω_2
            let e7 = u.e_root(7);
            let want = u.scale(
                &u.product(&[e7.clone(), e7, u.gen(Gen::W(2, 1))]),
                &rf("(r - s)/r^3"),
            );
            assert_eq!(*u.cross_commutator(8, 16), want);
        });
    }

    #[test]
    fn tau_of_product_and_root() {
        with_alg(|u| {
            let x = u.multiply(&u.gen(Gen::E(1)), &u.gen(Gen::E(2)));
            let y = u.multiply(&u.gen(Gen::F(2)), &u.gen(Gen::F(1)));
            assert_eq!(tau(u.ring(), &x), y);
            let e2 = u.sub(
                &u.multiply(&u.gen(Gen::E(1)), &u.gen(Gen::E(2))),
                &u.scale(
                    &u.multiply(&u.gen(Gen::E(2)), &u.gen(Gen::E(1))),
                    &rf("s^2"),
                ),
            );
            assert_eq!(e2, u.e_root(2));
            assert_eq!(tau(u.ring(), &e2), u.f_root(2));
            let mixed = u.product(&[u.e_root(5), u.gen(Gen::Wp(3, 1)), u.f_root(9)]);
            assert_eq!(tau(u.ring(), &tau(u.ring(), &mixed)), mixed);
        });
    }

    #[test]
    fn restricted_index_round_trip() {
        let mut m = UMono::ONE;
        m.e[3] = 4;
        m.g.0[6] = 2;
        m.f[23] = 1;
        let idx = restricted_index(&m, 5).unwrap();
        assert_eq!(restricted_mono(&idx, 5), Some(m));
        let top = num_bigint::BigUint::from(5u32).pow(56u32) - 1u32;
        assert!(restricted_mono(&top, 5).is_some());
        assert!(restricted_mono(&(top + 1u32), 5).is_none());
    }
}
