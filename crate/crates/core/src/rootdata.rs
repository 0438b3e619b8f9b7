//! Static F4 data: structural constants, the 24 positive roots in convex
//! order with Lyndon words and minimal pairs, and the lattice pairing.

use crate::coeff::RatFunc2;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Number of positive roots.
pub const NROOTS: usize = 24;

/// Convex indices (1-based) of the simple roots α1..α4.
pub const SIMPLE_INDEX: [usize; 4] = [1, 16, 22, 24];

/// Exponents `(e_r, e_s)` of the structural constants `a_ij = r^e_r s^e_s`.
const STRUCT_EXPS: [[(i64, i64); 4]; 4] = [
    [(2, -2), (0, 2), (0, 0), (0, 0)],
    [(-2, 0), (2, -2), (0, 2), (0, 0)],
    [(0, 0), (-2, 0), (1, -1), (0, 1)],
    [(0, 0), (0, 0), (-1, 0), (1, -1)],
];

/// Cartan matrix with `(ad E_i)^(1 - c_ij) E_j = 0`.
pub const CARTAN: [[i64; 4]; 4] = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]];

/// Root lattice vector in simple-root coordinates.
pub type LatticeVec = [i64; 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec {
    pub coords: [u32; 4],
}

impl RootVec {
    pub fn height(&self) -> u32 {
        self.coords.iter().sum()
    }

    pub fn lattice(&self) -> LatticeVec {
        self.coords.map(|c| c as i64)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords;
        write!(f, "({}{}{}{})", c[0], c[1], c[2], c[3])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Simple(usize),
    Composite { a: usize, b: usize },
}

#[derive(Clone, Debug)]
pub struct RootEntry {
    pub index: usize,
    pub root: RootVec,
    pub lyndon_word: &'static str,
    pub kind: RootKind,
    /// Alternative Lyndon factorizations marked in the table.
    pub lyndon_pairs: &'static [(usize, usize)],
}

struct RawRoot(
    &'static str,
    [u32; 4],
    Option<(usize, usize)>,
    &'static [(usize, usize)],
);

const RAW: [RawRoot; NROOTS] = [
    RawRoot("1", [1, 0, 0, 0], None, &[]),
    RawRoot("12", [1, 1, 0, 0], Some((1, 16)), &[]),
    RawRoot("123", [1, 1, 1, 0], Some((2, 22)), &[(1, 17)]),
    RawRoot("1233", [1, 1, 2, 0], Some((3, 22)), &[(1, 18)]),
    RawRoot("12332", [1, 2, 2, 0], Some((4, 16)), &[]),
    RawRoot("1234", [1, 1, 1, 1], Some((3, 24)), &[(2, 23), (1, 19)]),
    RawRoot("12343", [1, 1, 2, 1], Some((6, 22)), &[(1, 20)]),
    RawRoot("12343123432", [2, 3, 4, 2], Some((7, 9)), &[]),
    RawRoot("123432", [1, 2, 2, 1], Some((7, 16)), &[]),
    RawRoot("1234323", [1, 2, 3, 1], Some((9, 22)), &[(7, 17)]),
    RawRoot("123434", [1, 1, 2, 2], Some((7, 24)), &[(6, 23), (1, 21)]),
    RawRoot("1234342", [1, 2, 2, 2], Some((11, 16)), &[(9, 24)]),
    RawRoot("12343423", [1, 2, 3, 2], Some((12, 22)), &[(11, 17)]),
    RawRoot("123434233", [1, 2, 4, 2], Some((13, 22)), &[(11, 18)]),
    RawRoot("1234342332", [1, 3, 4, 2], Some((14, 16)), &[]),
    RawRoot("2", [0, 1, 0, 0], None, &[]),
    RawRoot("23", [0, 1, 1, 0], Some((16, 22)), &[]),
    RawRoot("233", [0, 1, 2, 0], Some((17, 22)), &[]),
    RawRoot("234", [0, 1, 1, 1], Some((17, 24)), &[(16, 23)]),
    RawRoot("2343", [0, 1, 2, 1], Some((19, 22)), &[]),
    RawRoot("23434", [0, 1, 2, 2], Some((20, 24)), &[(19, 23)]),
    RawRoot("3", [0, 0, 1, 0], None, &[]),
    RawRoot("34", [0, 0, 1, 1], Some((22, 24)), &[]),
    RawRoot("4", [0, 0, 0, 1], None, &[]),
];

/// Roots whose Lyndon word has several standard factorizations that must
/// give the same bracket.
pub const MULTI_FACTORIZATION_ROOTS: [usize; 8] = [3, 4, 6, 7, 11, 14, 19, 21];

/// The table of positive roots in convex order.
pub fn root_table() -> Vec<RootEntry> {
    RAW.iter()
        .enumerate()
        .map(|(k, raw)| {
            let index = k + 1;
            let kind = match raw.2 {
                None => {
                    RootKind::Simple(SIMPLE_INDEX.iter().position(|&s| s == index).unwrap() + 1)
                }
                Some((a, b)) => RootKind::Composite { a, b },
            };
            RootEntry {
                index,
                root: RootVec { coords: raw.1 },
                lyndon_word: raw.0,
                kind,
                lyndon_pairs: raw.3,
            }
        })
        .collect()
}

/// Root of convex index `i` (1-based).
pub fn root(i: usize) -> RootVec {
    RootVec {
        coords: RAW[i - 1].1,
    }
}

pub fn lyndon_word(i: usize) -> &'static str {
    RAW[i - 1].0
}

pub fn minimal_pair(i: usize) -> Option<(usize, usize)> {
    RAW[i - 1].2
}

pub fn lyndon_pairs(i: usize) -> &'static [(usize, usize)] {
    RAW[i - 1].3
}

/// Simple index (1..4) if β_i is simple.
pub fn simple_of(i: usize) -> Option<usize> {
    SIMPLE_INDEX.iter().position(|&s| s == i).map(|k| k + 1)
}

pub fn index_of_word(word: &str) -> Option<usize> {
    RAW.iter().position(|r| r.0 == word).map(|k| k + 1)
}

pub fn index_of_root(coords: &LatticeVec) -> Option<usize> {
    RAW.iter()
        .position(|r| r.1.iter().zip(coords).all(|(a, b)| *a as i64 == *b))
        .map(|k| k + 1)
}

pub fn simple_root(i: usize) -> LatticeVec {
    let mut v = [0; 4];
    v[i - 1] = 1;
    v
}

pub fn structural_exps(i: usize, j: usize) -> (i64, i64) {
    STRUCT_EXPS[i - 1][j - 1]
}

/// `a_ij` for simple indices 1..4.
pub fn structural_constant(i: usize, j: usize) -> RatFunc2 {
    let (a, b) = structural_exps(i, j);
    RatFunc2::monomial(1, a as i32, b as i32)
}

/// Exponent of `r` (equivalently `s`) in `(r_i, s_i)`.
pub fn ri_si_power(i: usize) -> i32 {
    if i <= 2 {
        2
    } else {
        1
    }
}

pub fn ri_si(i: usize) -> (RatFunc2, RatFunc2) {
    let k = ri_si_power(i);
    (RatFunc2::monomial(1, k, 0), RatFunc2::monomial(1, 0, k))
}

/// Exponents of `∏_{i,j} a_ji^(mu_i nu_j)`, i.e. of `⟨ω'_mu, ω_nu⟩`.
pub fn pairing_exps(mu: &LatticeVec, nu: &LatticeVec) -> (i64, i64) {
    let mut er = 0;
    let mut es = 0;
    for i in 0..4 {
        if mu[i] == 0 {
            continue;
        }
        for j in 0..4 {
            let k = mu[i] * nu[j];
            if k != 0 {
                let (a, b) = STRUCT_EXPS[j][i];
                er += a * k;
                es += b * k;
            }
        }
    }
    (er, es)
}

pub fn pairing_omega(mu: &LatticeVec, nu: &LatticeVec) -> RatFunc2 {
    let (a, b) = pairing_exps(mu, nu);
    RatFunc2::monomial(1, a as i32, b as i32)
}

pub fn two_rho() -> LatticeVec {
    [16, 30, 42, 22]
}

pub fn rho() -> LatticeVec {
    [8, 15, 21, 11]
}

pub fn lat_add(a: &LatticeVec, b: &LatticeVec) -> LatticeVec {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn lat_sub(a: &LatticeVec, b: &LatticeVec) -> LatticeVec {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub fn lat_scale(a: &LatticeVec, k: i64) -> LatticeVec {
    a.map(|x| x * k)
}

/// Exponent vector of a PBW monomial; entry `k` is the power of β_(k+1).
pub type Exps = [u8; NROOTS];

/// Degree of a PBW exponent vector.
pub fn exps_degree(e: &Exps) -> LatticeVec {
    let mut d = [0i64; 4];
    for (k, &n) in e.iter().enumerate() {
        if n > 0 {
            let c = RAW[k].1;
            for t in 0..4 {
                d[t] += c[t] as i64 * n as i64;
            }
        }
    }
    d
}

/// All PBW exponent vectors of degree `d` using roots whose index lies in
/// `allowed` (inclusive bounds), in lexicographic order of the vectors.
pub fn kostant_monomials_in(d: &LatticeVec, lo: usize, hi: usize) -> Vec<Exps> {
    let mut out = Vec::new();
    if d.iter().any(|&x| x < 0) {
        return out;
    }
    let mut cur = [0u8; NROOTS];
    fn rec(k: usize, lo: usize, rem: LatticeVec, cur: &mut Exps, out: &mut Vec<Exps>) {
        if rem == [0; 4] {
            out.push(*cur);
            return;
        }
        if k < lo {
            return;
        }
        let c = RAW[k - 1].1.map(|x| x as i64);
        let mut n = 0u8;
        let mut r = rem;
        loop {
            cur[k - 1] = n;
            rec(k - 1, lo, r, cur, out);
            r = lat_sub(&r, &c);
            if r.iter().any(|&x| x < 0) {
                break;
            }
            n += 1;
        }
        cur[k - 1] = 0;
    }
    rec(hi, lo, *d, &mut cur, &mut out);
    out.sort();
    out
}

pub fn kostant_monomials(d: &LatticeVec) -> Vec<Exps> {
    kostant_monomials_in(d, 1, NROOTS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structural_constant_examples() {
        assert_eq!(structural_constant(1, 2), RatFunc2::monomial(1, 0, 2));
        assert_eq!(structural_constant(2, 1), RatFunc2::monomial(1, -2, 0));
        assert_eq!(structural_constant(4, 3), RatFunc2::monomial(1, -1, 0));
        assert_eq!(
            ri_si(1),
            (RatFunc2::monomial(1, 2, 0), RatFunc2::monomial(1, 0, 2))
        );
        assert_eq!(ri_si(3), (RatFunc2::r(), RatFunc2::s()));
        assert_eq!(ri_si(4).1, RatFunc2::s());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(
            pairing_omega(&simple_root(2), &simple_root(1)),
            RatFunc2::monomial(1, 0, 2)
        );
        assert!(pairing_omega(&[0; 4], &[1, 2, 3, 4]).is_one());
        assert_eq!(
            pairing_omega(&simple_root(3), &root(19).lattice()),
            RatFunc2::s()
        );
    }

    #[test]
    fn pairing_is_bimultiplicative() {
        let a = [1, -2, 0, 3];
        let b = [0, 1, 1, -1];
        let c = [2, 0, -1, 1];
        let (x1, y1) = pairing_exps(&lat_add(&a, &b), &c);
        let (x2, y2) = pairing_exps(&a, &c);
        let (x3, y3) = pairing_exps(&b, &c);
        assert_eq!((x1, y1), (x2 + x3, y2 + y3));
    }

    #[test]
    fn kostant_examples() {
        assert_eq!(kostant_monomials(&[1, 0, 0, 0]).len(), 1);
        assert_eq!(kostant_monomials(&[1, 1, 1, 0]).len(), 4);
        assert_eq!(kostant_monomials(&[1, 0, 1, 0]).len(), 1);
        assert_eq!(kostant_monomials(&[2, 1, 0, 0]).len(), 2);
    }

    #[test]
    fn words_match_roots() {
        for e in root_table() {
            let mut c = [0u32; 4];
            for ch in e.lyndon_word.chars() {
                c[ch.to_digit(10).unwrap() as usize - 1] += 1;
            }
            assert_eq!(c, e.root.coords, "root {}", e.index);
        }
    }
}

#[cfg(test)]
mod table_tests {
    use super::*;

    #[test]
    fn simple_entries() {
        let simple: Vec<usize> = root_table()
            .iter()
            .filter(|e| matches!(e.kind, RootKind::Simple(_)))
            .map(|e| e.index)
            .collect();
        assert_eq!(simple, vec![1, 16, 22, 24]);
    }

    #[test]
    fn minimal_pairs_sum_and_straddle() {
        for e in root_table() {
            if let RootKind::Composite { a, b } = e.kind {
                assert!(a < e.index && e.index < b);
                assert_eq!(
                    lat_add(&root(a).lattice(), &root(b).lattice()),
                    e.root.lattice()
                );
            }
            for &(a, b) in e.lyndon_pairs {
                assert!(a < e.index && e.index < b);
                assert_eq!(
                    lat_add(&root(a).lattice(), &root(b).lattice()),
                    e.root.lattice()
                );
            }
        }
    }

    #[test]
    fn convexity_exhaustive() {
        for i in 1..=NROOTS {
            for a in 1..=NROOTS {
                for b in a + 1..=NROOTS {
                    if lat_add(&root(a).lattice(), &root(b).lattice()) == root(i).lattice() {
                        assert!(a < i && i < b, "{} = {} + {}", i, a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn roots_sum_to_two_rho() {
        let sum = (1..=NROOTS).fold([0; 4], |acc, i| lat_add(&acc, &root(i).lattice()));
        assert_eq!(sum, two_rho());
        assert_eq!(lat_scale(&rho(), 2), two_rho());
    }

    #[test]
    fn cartan_consistency() {
        for i in 1..=4 {
            for j in 1..=4 {
                let (a1, b1) = structural_exps(i, j);
                let (a2, b2) = structural_exps(j, i);
                let k = ri_si_power(i) as i64 * CARTAN[i - 1][j - 1];
                assert_eq!((a1 + a2, b1 + b2), (k, -k), "({}, {})", i, j);
            }
            let k = ri_si_power(i) as i64;
            assert_eq!(structural_exps(i, i), (k, -k));
        }
    }

    #[test]
    fn lookup_round_trip() {
        for i in 1..=NROOTS {
            assert_eq!(index_of_word(lyndon_word(i)), Some(i));
            assert_eq!(index_of_root(&root(i).lattice()), Some(i));
        }
    }
}
