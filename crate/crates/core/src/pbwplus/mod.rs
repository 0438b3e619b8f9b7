//! The positive part U⁺: quantum root vectors, the straightening table, PBW
//! normal-form arithmetic and an independent free-algebra oracle.

mod ad;
mod engine;
pub mod expr;
mod oracle;
mod table;
mod tree;

pub use ad::{ad_nilpotency_degree, ad_q_power, commutator, homogeneous_degree, AdError, AdSide};
pub use engine::{PbwAlgebra, Truncation};
pub use oracle::{
    commuting_element, oracle_check_identity, oracle_free_is_zero, positive_relations,
    serre_element, word_degree, words_of_degree, Oracle, OracleComponent, OracleError,
};

pub use table::{
    build_straightening_table, render_rule, StraighteningRule, StraighteningTable, TableError,
    TABLE_FORMAT_VERSION,
};
pub use tree::{expand_to_free, free_multiply, root_vector_tree, BracketTree, FreeElem, Word};

use crate::lincomb::LinComb;
use crate::rootdata::{self, Exps, LatticeVec, NROOTS};

/// Exponent vector `(n_1, …, n_24)` of `E_β24^n24 ⋯ E_β1^n1`.
pub type PbwMono = Exps;

pub type PbwElem<C> = LinComb<PbwMono, C>;

pub const ONE: PbwMono = [0; NROOTS];

/// The monomial `E_{β_i}^n`.
pub fn root_power(i: usize, n: u8) -> PbwMono {
    let mut m = ONE;
    m[i - 1] = n;
    m
}

pub fn mono_degree(m: &PbwMono) -> LatticeVec {
    rootdata::exps_degree(m)
}

pub fn mono_height(m: &PbwMono) -> i64 {
    mono_degree(m).iter().sum()
}

/// Factors of a monomial read left to right (descending indices).
pub fn mono_factors(m: &PbwMono) -> Vec<usize> {
    let mut out = Vec::new();
    for i in (1..=NROOTS).rev() {
        for _ in 0..m[i - 1] {
            out.push(i);
        }
    }
    out
}

pub fn mono_from_factors(factors: &[usize]) -> PbwMono {
    let mut m = ONE;
    for &f in factors {
        m[f - 1] += 1;
    }
    m
}

/// Lowest index with nonzero exponent.
pub fn mono_min(m: &PbwMono) -> Option<usize> {
    m.iter().position(|&n| n > 0).map(|k| k + 1)
}

pub fn mono_max(m: &PbwMono) -> Option<usize> {
    m.iter().rposition(|&n| n > 0).map(|k| k + 1)
}

pub fn mono_len(m: &PbwMono) -> usize {
    m.iter().map(|&n| n as usize).sum()
}

/// `[n24 … n1]`.
pub fn render_mono(m: &PbwMono) -> String {
    let parts: Vec<String> = m.iter().rev().map(|n| n.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

/// Human-readable product form, e.g. `E17^2*E3`.
pub fn render_mono_product(m: &PbwMono, letter: char) -> String {
    let mut parts = Vec::new();
    for i in (1..=NROOTS).rev() {
        match m[i - 1] {
            0 => {}
            1 => parts.push(format!("{}{}", letter, i)),
            n => parts.push(format!("{}{}^{}", letter, i, n)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn render_elem<R: crate::coeff::CoeffRing>(ring: &R, x: &PbwElem<R::Elem>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .iter()
        .rev()
        .map(|(m, c)| format!("({})*{}", ring.render(c), render_mono_product(m, 'E')))
        .collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_round_trip() {
        let m = mono_from_factors(&[17, 17, 3]);
        assert_eq!(mono_factors(&m), vec![17, 17, 3]);
        assert_eq!(mono_min(&m), Some(3));
        assert_eq!(mono_max(&m), Some(17));
        assert_eq!(render_mono_product(&m, 'E'), "E17^2*E3");
        assert_eq!(mono_degree(&root_power(8, 1)), [2, 3, 4, 2]);
    }
}
