//! Construction, specialization and caching of the straightening table.
//!
//! Each correction `C_ij = E_i E_j − p_ij E_j E_i` is determined by its images
//! under the skew derivations `∂_k` read off from the `U ⊗ E_k` component of
//! the coproduct: `∂_k(E_l) = δ_kl`, `∂_k(xy) = x ∂_k(y) + ⟨ω'_{deg y}, ω_k⟩ ∂_k(x) y`.
//! Their joint kernel on U⁺ of positive degree is trivial over Q(r,s), so
//! solving for `C_ij` inside the span of monomials strictly between `i` and
//! `j` both computes the correction and certifies its support.

use super::{
    mono_degree, mono_factors, mono_from_factors, render_mono, PbwAlgebra, PbwElem, PbwMono,
    Truncation, ONE,
};
use crate::coeff::{parse_ratfunc, CoeffError, CoeffRing, RatField, RatFunc2};
use crate::linalg::{solve_unique, SolveError};
use crate::rootdata::{self, LatticeVec, NROOTS};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("no correction inside the window ({i}, {j}) reproduces the commutator")]
    Inconsistent { i: usize, j: usize },
    #[error("correction for ({i}, {j}) is not uniquely determined: {source}")]
    Underdetermined {
        i: usize,
        j: usize,
        source: SolveError,
    },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("table cache format version {found}, expected {expected}")]
    Version { found: u32, expected: u32 },
    #[error("malformed table cache: {0}")]
    Format(String),
    #[error("table cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningRule<C: Ord> {
    pub i: usize,
    pub j: usize,
    pub p: C,
    pub correction: PbwElem<C>,
}

/// All 276 rules `E_i E_j = p_ij E_j E_i + C_ij`, ordered by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningTable<C: Ord> {
    rules: Vec<StraighteningRule<C>>,
}

fn pair_slot(i: usize, j: usize) -> usize {
    // rules for i are stored contiguously, j = i+1..=24
    (1..i).map(|a| NROOTS - a).sum::<usize>() + (j - i - 1)
}

impl<C: Clone + Ord> StraighteningTable<C> {
    pub fn from_rules(mut rules: Vec<StraighteningRule<C>>) -> Self {
        rules.sort_by_key(|r| (r.i, r.j));
        StraighteningTable { rules }
    }

    pub fn rules(&self) -> &[StraighteningRule<C>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule(&self, i: usize, j: usize) -> &StraighteningRule<C> {
        let r = &self.rules[pair_slot(i, j)];
        debug_assert_eq!((r.i, r.j), (i, j));
        r
    }

    /// Coefficient-wise image in another ring.
    pub fn try_map<R: CoeffRing>(
        &self,
        ring: &R,
        f: impl Fn(&C) -> Result<R::Elem, CoeffError>,
    ) -> Result<StraighteningTable<R::Elem>, CoeffError> {
        let rules = self
            .rules
            .iter()
            .map(|r| {
                Ok(StraighteningRule {
                    i: r.i,
                    j: r.j,
                    p: f(&r.p)?,
                    correction: r
                        .correction
                        .try_map(ring, |m, c| Ok::<_, CoeffError>((*m, f(c)?)))?,
                })
            })
            .collect::<Result<Vec<_>, CoeffError>>()?;
        Ok(StraighteningTable { rules })
    }
}

impl StraighteningTable<RatFunc2> {
    /// Image in `ring`, failing if a denominator vanishes there.
    pub fn specialize<R: CoeffRing>(
        &self,
        ring: &R,
    ) -> Result<StraighteningTable<R::Elem>, CoeffError> {
        self.try_map(ring, |c| ring.embed(c))
    }

    /// The same table with `r` and `s` exchanged.
    pub fn swap_rs(&self) -> Self {
        self.try_map(&RatField, |c| Ok(c.swap_rs()))
            .expect("swap is total")
    }

    pub fn to_cache_text(&self) -> String {
        let doc = CacheDoc {
            format_version: TABLE_FORMAT_VERSION,
            mode: "generic".into(),
            rules: self
                .rules
                .iter()
                .map(|r| CacheRule {
                    i: r.i,
                    j: r.j,
                    p: r.p.to_string(),
                    correction: r
                        .correction
                        .iter()
                        .map(|(m, c)| CacheTerm {
                            exps: m.iter().rev().map(|&n| n as u32).collect(),
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_cache_text(text: &str) -> Result<Self, TableError> {
        let doc: CacheDoc =
            serde_json::from_str(text).map_err(|e| TableError::Format(e.to_string()))?;
        if doc.format_version != TABLE_FORMAT_VERSION {
            return Err(TableError::Version {
                found: doc.format_version,
                expected: TABLE_FORMAT_VERSION,
            });
        }
        if doc.mode != "generic" {
            return Err(TableError::Format(format!(
                "unsupported mode {:?}",
                doc.mode
            )));
        }
        let mut rules = Vec::with_capacity(doc.rules.len());
        for r in doc.rules {
            if !(1 <= r.i && r.i < r.j && r.j <= NROOTS) {
                return Err(TableError::Format(format!("bad pair ({}, {})", r.i, r.j)));
            }
            let mut terms = Vec::new();
            for t in r.correction {
                if t.exps.len() != NROOTS {
                    return Err(TableError::Format(
                        "exponent vector must have 24 entries".into(),
                    ));
                }
                let mut m = ONE;
                for (k, &n) in t.exps.iter().rev().enumerate() {
                    m[k] = u8::try_from(n)
                        .map_err(|_| TableError::Format("exponent too large".into()))?;
                }
                terms.push((m, parse_ratfunc(&t.coeff)?));
            }
            rules.push(StraighteningRule {
                i: r.i,
                j: r.j,
                p: parse_ratfunc(&r.p)?,
                correction: PbwElem::from_terms(&RatField, terms),
            });
        }
        let table = StraighteningTable::from_rules(rules);
        let expected = NROOTS * (NROOTS - 1) / 2;
        if table.len() != expected
            || table
                .rules
                .iter()
                .enumerate()
                .any(|(k, r)| pair_slot(r.i, r.j) != k)
        {
            return Err(TableError::Format(format!(
                "expected {} distinct rules",
                expected
            )));
        }
        Ok(table)
    }

    pub fn store(&self, path: &std::path::Path) -> Result<(), TableError> {
        std::fs::write(path, self.to_cache_text())?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self, TableError> {
        Self::from_cache_text(&std::fs::read_to_string(path)?)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheDoc {
    format_version: u32,
    mode: String,
    rules: Vec<CacheRule>,
}

#[derive(Serialize, Deserialize)]
struct CacheRule {
    i: usize,
    j: usize,
    p: String,
    correction: Vec<CacheTerm>,
}

#[derive(Serialize, Deserialize)]
struct CacheTerm {
    exps: Vec<u32>,
    coeff: String,
}

/// Skew derivations of root vectors, filled lazily.
struct Derivations {
    roots: Vec<[OnceLock<PbwElem<RatFunc2>>; 4]>,
}

impl Derivations {
    fn new() -> Self {
        Derivations {
            roots: (0..NROOTS).map(|_| Default::default()).collect(),
        }
    }

    fn twist(deg: &LatticeVec, k: usize) -> RatFunc2 {
        rootdata::pairing_omega(deg, &rootdata::simple_root(k))
    }

    fn root(&self, alg: &PbwAlgebra<RatField>, c: usize, k: usize) -> PbwElem<RatFunc2> {
        if let Some(v) = self.roots[c - 1][k - 1].get() {
            return v.clone();
        }
        let f = RatField;
        let v = match rootdata::minimal_pair(c) {
            None => {
                if rootdata::simple_of(c) == Some(k) {
                    alg.one()
                } else {
                    PbwElem::zero()
                }
            }
            Some((a, b)) => {
                let mut v = self.pair(alg, a, b, k);
                v.add_scaled(&f, &self.pair(alg, b, a, k), &alg.p(a, b).neg());
                v
            }
        };
        let _ = self.roots[c - 1][k - 1].set(v.clone());
        v
    }

    /// `∂_k(E_a E_b)`.
    fn pair(&self, alg: &PbwAlgebra<RatField>, a: usize, b: usize, k: usize) -> PbwElem<RatFunc2> {
        let f = RatField;
        let db = self.root(alg, b, k);
        let mut out = alg.multiply(&alg.root(a), &db);
        let da = self.root(alg, a, k);
        if !da.is_zero() {
            let tw = Self::twist(&rootdata::root(b).lattice(), k);
            out.add_scaled(&f, &alg.multiply(&da, &alg.root(b)), &tw);
        }
        out
    }

    /// `∂_k` of a normal-form monomial.
    fn mono(&self, alg: &PbwAlgebra<RatField>, m: &PbwMono, k: usize) -> PbwElem<RatFunc2> {
        let f = RatField;
        let fs = mono_factors(m);
        let mut out = PbwElem::zero();
        for t in 0..fs.len() {
            let d = self.root(alg, fs[t], k);
            if d.is_zero() {
                continue;
            }
            let prefix = alg.mono(mono_from_factors(&fs[..t]));
            let suffix = mono_from_factors(&fs[t + 1..]);
            let tw = Self::twist(&mono_degree(&suffix), k);
            let x = alg.multiply(&alg.multiply(&prefix, &d), &alg.mono(suffix));
            out.add_scaled(&f, &x, &tw);
        }
        out
    }
}

fn build_into(alg: &PbwAlgebra<RatField>) -> Result<(), TableError> {
    let f = RatField;
    let ders = Derivations::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..=NROOTS {
        for j in i + 1..=NROOTS {
            pairs.push((i, j));
        }
    }
    let ht = |i: usize| rootdata::root(i).height();
    pairs.sort_by_key(|&(i, j)| (ht(i) + ht(j), j - i, i));
    for (i, j) in pairs {
        if let Some(k) = (1..=NROOTS).find(|&k| rootdata::minimal_pair(k) == Some((i, j))) {
            alg.set_rule(i, j, alg.root(k));
            continue;
        }
        let deg = rootdata::lat_add(&rootdata::root(i).lattice(), &rootdata::root(j).lattice());
        let window = rootdata::kostant_monomials_in(&deg, i + 1, j - 1);
        let mut cols: Vec<BTreeMap<(usize, PbwMono), RatFunc2>> =
            vec![BTreeMap::new(); window.len()];
        let mut rhs: BTreeMap<(usize, PbwMono), RatFunc2> = BTreeMap::new();
        let mut keys: BTreeMap<(usize, PbwMono), ()> = BTreeMap::new();
        for k in 1..=4 {
            let mut t = ders.pair(alg, i, j, k);
            t.add_scaled(&f, &ders.pair(alg, j, i, k), &alg.p(i, j).neg());
            for (m, c) in t.iter() {
                rhs.insert((k, *m), c.clone());
                keys.insert((k, *m), ());
            }
            for (col, w) in window.iter().enumerate() {
                for (m, c) in ders.mono(alg, w, k).iter() {
                    cols[col].insert((k, *m), c.clone());
                    keys.insert((k, *m), ());
                }
            }
        }
        let zero = RatFunc2::zero();
        let a: Vec<Vec<RatFunc2>> = keys
            .keys()
            .map(|key| {
                cols.iter()
                    .map(|c| c.get(key).cloned().unwrap_or_else(|| zero.clone()))
                    .collect()
            })
            .collect();
        let b: Vec<RatFunc2> = keys
            .keys()
            .map(|key| rhs.get(key).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        let sol = match solve_unique(&f, &a, &b, window.len()) {
            Ok(Some(x)) => x,
            Ok(None) => return Err(TableError::Inconsistent { i, j }),
            Err(source) => return Err(TableError::Underdetermined { i, j, source }),
        };
        let corr = PbwElem::from_terms(&f, window.iter().copied().zip(sol));
        alg.set_rule(i, j, corr);
    }
    Ok(())
}

/// Builds the generic table over Q(r,s).
pub fn build_straightening_table() -> Result<StraighteningTable<RatFunc2>, TableError> {
    let alg = crate::run_with_stack(|| {
        let alg = PbwAlgebra::empty(RatField, Truncation::None);
        build_into(&alg).map(|_| alg)
    })?;
    let mut rules = Vec::new();
    for i in 1..=NROOTS {
        for j in i + 1..=NROOTS {
            rules.push(StraighteningRule {
                i,
                j,
                p: alg.p(i, j).clone(),
                correction: alg.rule(i, j).clone(),
            });
        }
    }
    Ok(StraighteningTable::from_rules(rules))
}

/// Text of a rule for diagnostics.
pub fn render_rule(rule: &StraighteningRule<RatFunc2>) -> String {
    let terms: Vec<String> = rule
        .correction
        .iter()
        .map(|(m, c)| format!("{} {}", render_mono(m), c))
        .collect();
    format!(
        "({}, {}) p = {} : {}",
        rule.i,
        rule.j,
        rule.p,
        terms.join("; ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_text_round_trip_and_rejections() {
        crate::run_with_stack(|| {
            let t = build_straightening_table().unwrap();
            let text = t.to_cache_text();
            let back = StraighteningTable::from_cache_text(&text).unwrap();
            assert_eq!(back.rules(), t.rules());
            assert_eq!(back.to_cache_text(), text);

            let key = format!("\"format_version\": {TABLE_FORMAT_VERSION}");
            assert!(text.contains(&key));
            let bumped = text.replace(&key, "\"format_version\": 7");
            assert!(matches!(
                StraighteningTable::from_cache_text(&bumped),
                Err(TableError::Version { found: 7, .. })
            ));
            assert!(matches!(
                StraighteningTable::from_cache_text("not a table"),
                Err(TableError::Format(_))
            ));
        });
    }
}
