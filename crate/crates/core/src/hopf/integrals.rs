//! Integrals of the Borel part 𝔟 of u, distinguished group-likes, the ribbon
//! condition, and the Drinfel'd double solvability determinant.

use super::{Character, Hopf, Side};
use crate::coeff::{CoeffRing, RatFunc2, SpecParams};
use crate::fullu::{Gen, GroupExp, UAlgebra, UElem};
use crate::rootdata::{self, LatticeVec, NROOTS};
use num_integer::Integer;

fn ell_of<R: CoeffRing>(alg: &UAlgebra<R>) -> i32 {
    alg.group_modulus()
        .expect("integrals live in the restricted quotient")
}

/// `x = E_{β_24}^{ℓ−1} ⋯ E_{β_1}^{ℓ−1}`, built by successive products.
pub fn top_e_monomial<R: CoeffRing>(alg: &UAlgebra<R>) -> UElem<R::Elem> {
    let l = ell_of(alg) as u32;
    let factors: Vec<_> = (1..=NROOTS)
        .rev()
        .map(|i| alg.power(&alg.e_root(i), l - 1))
        .collect();
    alg.product(&factors)
}

/// `t = ∏_i (1 + ω_i + ⋯ + ω_i^{ℓ−1})`.
pub fn group_sum<R: CoeffRing>(alg: &UAlgebra<R>) -> UElem<R::Elem> {
    let l = ell_of(alg);
    let mut t = alg.one();
    for i in 1..=4 {
        let mut s = alg.zero();
        for n in 0..l {
            s = alg.add(&s, &alg.group(GroupExp::omega(i, n)));
        }
        t = alg.multiply(&t, &s);
    }
    t
}

/// Left integral `y = t·x` of 𝔟.
pub fn integral_left<R: CoeffRing>(alg: &UAlgebra<R>) -> UElem<R::Elem> {
    alg.multiply(&group_sum(alg), &top_e_monomial(alg))
}

/// Right integral `y' = x·t` of 𝔟.
pub fn integral_right<R: CoeffRing>(alg: &UAlgebra<R>) -> UElem<R::Elem> {
    alg.multiply(&top_e_monomial(alg), &group_sum(alg))
}

/// γ with `γ(ω_k) = ⟨ω'_{2ρ}, ω_k⟩`, `γ(E_k) = 0`.
pub fn distinguished_character<R: CoeffRing>(ring: &R) -> Character<R::Elem> {
    Character::from_weight(ring, &rootdata::two_rho())
}

/// δ with `δ(ω_k) = ⟨ω'_ρ, ω_k⟩`; δ² = γ.
pub fn half_character<R: CoeffRing>(ring: &R) -> Character<R::Elem> {
    Character::from_weight(ring, &rootdata::rho())
}

/// `g = ω_{2ρ}^{-1}`, exponents reduced mod ℓ when given.
pub fn distinguished_grouplike(modulus: Option<i32>) -> GroupExp {
    GroupExp::from_weights(&rootdata::lat_scale(&rootdata::two_rho(), -1), &[0; 4]).reduce(modulus)
}

/// `h = ω_ρ^{-1}`.
pub fn half_grouplike(modulus: Option<i32>) -> GroupExp {
    GroupExp::from_weights(&rootdata::lat_scale(&rootdata::rho(), -1), &[0; 4]).reduce(modulus)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonReport {
    pub h_sq_eq_g: bool,
    pub delta_sq_eq_gamma: bool,
    pub s_square_conjugation: bool,
    /// Generators where `S²(a) ≠ h(δ⇀a↼δ⁻¹)h⁻¹`.
    pub failures: Vec<Gen>,
}

/// Checks the ribbon criterion with `h = ω_ρ^{-1}` and `δ = ⟨ω'_ρ, ·⟩` on
/// every generator `E_k, F_k, ω_k, ω'_k`. δ takes the same value on `ω'_k`
/// as on `ω_k`.
pub fn ribbon_check<R: CoeffRing>(hopf: &Hopf<'_, R>) -> RibbonReport {
    let alg = hopf.alg();
    let ring = alg.ring();
    let m = alg.group_modulus();
    let h = half_grouplike(m);
    let g = distinguished_grouplike(m);
    let delta = half_character(ring);
    let gamma = distinguished_character(ring);
    let delta_inv = delta.inverse(ring);
    let (hu, hinv) = (alg.group(h), alg.group(h.neg()));
    let mut failures = Vec::new();
    for a in Gen::all_generators() {
        let x = alg.gen(a);
        let s2 = hopf.antipode(&hopf.antipode(&x));
        let inner = hopf.character_act(Side::Left, &delta, &x);
        let inner = hopf.character_act(Side::Right, &delta_inv, &inner);
        let rhs = alg.product(&[hu.clone(), inner, hinv.clone()]);
        if s2 != rhs {
            failures.push(a);
        }
    }
    RibbonReport {
        h_sq_eq_g: h.scale(2).reduce(m) == g,
        delta_sq_eq_gamma: delta.mul(ring, &delta) == gamma,
        s_square_conjugation: failures.is_empty(),
        failures,
    }
}

/// Matrix A whose columns are the exponent vectors of `γ_j(ω_i) = a_ij = θ^{A_ij}`,
/// with `r = θ^y`, `s = θ^z`; entries as polynomials in `y` (written `r`) and `z` (written `s`).
pub fn double_matrix() -> [[RatFunc2; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (a, b) = rootdata::structural_exps(i + 1, j + 1);
            RatFunc2::from_int(a)
                .mul(&RatFunc2::r())
                .add(&RatFunc2::from_int(b).mul(&RatFunc2::s()))
        })
    })
}

/// The stated matrix, entered row by row.
fn double_matrix_literal() -> [[RatFunc2; 4]; 4] {
    let y = RatFunc2::r();
    let z = RatFunc2::s();
    let zero = RatFunc2::zero();
    let k = |n: i64, x: &RatFunc2| RatFunc2::from_int(n).mul(x);
    let ymz = y.sub(&z);
    [
        [k(2, &ymz), k(2, &z), zero.clone(), zero.clone()],
        [k(-2, &y), k(2, &ymz), k(2, &z), zero.clone()],
        [zero.clone(), k(-2, &y), ymz.clone(), z.clone()],
        [zero.clone(), zero.clone(), k(-1, &y), ymz],
    ]
}

fn det_cofactor<T: Clone>(
    m: &[Vec<T>],
    zero: &T,
    add: &dyn Fn(&T, &T) -> T,
    sub: &dyn Fn(&T, &T) -> T,
    mul: &dyn Fn(&T, &T) -> T,
) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = zero.clone();
    for c in 0..n {
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let t = mul(&m[0][c], &det_cofactor(&minor, zero, add, sub, mul));
        acc = if c % 2 == 0 {
            add(&acc, &t)
        } else {
            sub(&acc, &t)
        };
    }
    acc
}

pub fn symbolic_det(m: &[[RatFunc2; 4]; 4]) -> RatFunc2 {
    let rows: Vec<Vec<RatFunc2>> = m.iter().map(|r| r.to_vec()).collect();
    det_cofactor(
        &rows,
        &RatFunc2::zero(),
        &|a, b| a.add(b),
        &|a, b| a.sub(b),
        &|a, b| a.mul(b),
    )
}

/// `4(y⁴ + z⁴ − y²z²)`.
pub fn det_closed_form() -> RatFunc2 {
    let y = RatFunc2::r();
    let z = RatFunc2::s();
    let y2 = y.mul(&y);
    let z2 = z.mul(&z);
    RatFunc2::from_int(4).mul(&y2.mul(&y2).add(&z2.mul(&z2)).sub(&y2.mul(&z2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleReport {
    pub det: i64,
    pub invertible_mod_ell: bool,
    pub det_formula_matches: bool,
    /// The stated matrix equals the one read off the structure constants.
    pub matrix_matches_structure: bool,
    /// The characters `γ_1..γ_4` generate all ℓ⁴ characters of the group part.
    pub characters_generate: bool,
}

pub fn double_solvability(spec: &SpecParams) -> DoubleReport {
    let (y, z, l) = (spec.y, spec.z, spec.ell as i64);
    let a: Vec<Vec<i64>> = (1..=4)
        .map(|i| {
            (1..=4)
                .map(|j| {
                    let (p, q) = rootdata::structural_exps(i, j);
                    p * y + q * z
                })
                .collect()
        })
        .collect();
    let det = det_cofactor(&a, &0, &|x, y| x + y, &|x, y| x - y, &|x, y| x * y);
    let sym = symbolic_det(&double_matrix());
    DoubleReport {
        det,
        invertible_mod_ell: det.gcd(&l) == 1,
        det_formula_matches: sym == det_closed_form()
            && det == 4 * (y.pow(4) + z.pow(4) - y * y * z * z),
        matrix_matches_structure: double_matrix() == double_matrix_literal(),
        characters_generate: span_size(&a, l) == (l as usize).pow(4),
    }
}

/// Size of the subgroup of (Z/ℓ)⁴ spanned by the columns of `a`.
fn span_size(a: &[Vec<i64>], l: i64) -> usize {
    let cols: Vec<LatticeVec> = (0..4)
        .map(|j| std::array::from_fn(|i| a[i][j].rem_euclid(l)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![[0i64; 4]];
    seen.insert([0i64; 4]);
    while let Some(v) = frontier.pop() {
        for c in &cols {
            let w: LatticeVec = std::array::from_fn(|k| (v[k] + c[k]) % l);
            if seen.insert(w) {
                frontier.push(w);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouplikes_at_five() {
        assert_eq!(distinguished_grouplike(Some(5)).weight(), [4, 0, 3, 3]);
        assert_eq!(half_grouplike(Some(5)).weight(), [2, 0, 4, 4]);
    }

    #[test]
    fn determinant_at_desk_spec() {
        let r = double_solvability(&SpecParams::default());
        assert_eq!(r.det, 52);
        assert!(r.invertible_mod_ell);
        assert!(r.det_formula_matches);
        assert!(r.matrix_matches_structure);
        assert!(r.characters_generate);
    }

    #[test]
    fn singular_determinant_fails_to_generate() {
        // 52 = 4·13
        let r = double_solvability(&SpecParams {
            ell: 13,
            y: 1,
            z: 2,
        });
        assert!(!r.invertible_mod_ell);
        assert!(!r.characters_generate);
    }
}
