//! Suites over U⁺: root data, the straightening table, explicit identities,
//! associativity, the free-algebra oracle, and ad-nilpotency.

use super::{CheckRecord, Context, GOLDEN_GROUPS};
use crate::coeff::{CoeffRing, RatField};
use crate::pbwplus::{
    ad_nilpotency_degree, expr, free_multiply, mono_degree, mono_factors, mono_from_factors,
    render_elem, render_rule, root_vector_tree, Oracle, StraighteningTable, TableError,
    TABLE_FORMAT_VERSION,
};
use crate::rootdata::{self, LatticeVec, NROOTS};
use rayon::prelude::*;
use std::collections::BTreeMap;

fn lat(i: usize) -> LatticeVec {
    rootdata::root(i).lattice()
}

pub(super) fn rootdata(_ctx: &Context) -> Vec<CheckRecord> {
    let roots: Vec<LatticeVec> = (1..=NROOTS).map(lat).collect();
    let mut out = Vec::new();

    let distinct: std::collections::BTreeSet<_> = roots.iter().collect();
    let positive = roots
        .iter()
        .all(|r| r.iter().all(|&c| c >= 0) && r.iter().sum::<i64>() > 0);
    out.push(
        CheckRecord::new(
            "rootdata.count",
            "24 distinct positive roots of F4",
            roots.len() == 24 && distinct.len() == 24 && positive,
        )
        .with_witness(format!(
            "{} roots, {} distinct",
            roots.len(),
            distinct.len()
        )),
    );

    let mut bad = Vec::new();
    for i in 1..=NROOTS {
        match rootdata::minimal_pair(i) {
            None => {
                if rootdata::simple_of(i).is_none() {
                    bad.push(format!("{i}: no pair and not simple"));
                }
            }
            Some((a, b)) => {
                if rootdata::lat_add(&lat(a), &lat(b)) != lat(i) || !(a < i && i < b) {
                    bad.push(format!("{i} = ({a}, {b})"));
                }
            }
        }
        for &(a, b) in rootdata::lyndon_pairs(i) {
            if rootdata::lat_add(&lat(a), &lat(b)) != lat(i) || !(a < i && i < b) {
                bad.push(format!("{i} alt ({a}, {b})"));
            }
        }
    }
    out.push(
        CheckRecord::new(
            "rootdata.minimal-pairs",
            "β_i = β_a + β_b with a < i < b for every listed factorization",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join("; ")),
    );

    let mut bad = Vec::new();
    let mut sums = 0;
    for a in 1..=NROOTS {
        for b in a + 1..=NROOTS {
            if let Some(k) =
                rootdata::index_of_root(&rootdata::lat_add(&roots[a - 1], &roots[b - 1]))
            {
                sums += 1;
                if !(a < k && k < b) {
                    bad.push(format!("β_{a} + β_{b} = β_{k}"));
                }
            }
        }
    }
    out.push(
        CheckRecord::new(
            "rootdata.convexity",
            "root(i) = root(a) + root(b) implies a < i < b",
            bad.is_empty(),
        )
        .with_witness(if bad.is_empty() {
            format!("{sums} decompositions checked")
        } else {
            bad.join("; ")
        }),
    );

    let sum = roots
        .iter()
        .fold([0i64; 4], |acc, r| rootdata::lat_add(&acc, r));
    out.push(
        CheckRecord::new(
            "rootdata.two-rho",
            "Σ β = 2ρ = 16α_1 + 30α_2 + 42α_3 + 22α_4",
            sum == [16, 30, 42, 22] && sum == rootdata::two_rho(),
        )
        .with_witness(format!("{sum:?}")),
    );

    let bad: Vec<usize> = (1..=NROOTS)
        .filter(|&i| {
            let t = root_vector_tree(i);
            t.word() != rootdata::lyndon_word(i) || t.degree() != lat(i)
        })
        .collect();
    out.push(
        CheckRecord::new(
            "rootdata.lyndon-words",
            "bracket trees read off the Lyndon words and have the root's degree",
            bad.is_empty(),
        )
        .witness_on_fail(|| format!("{bad:?}")),
    );
    out
}

pub(super) fn table(ctx: &Context) -> Vec<CheckRecord> {
    let t = &ctx.table;
    let mut out = vec![CheckRecord::new(
        "table.rule-count",
        "one straightening rule for each of the 276 pairs i < j",
        t.len() == 276,
    )
    .with_witness(format!("{} rules", t.len()))];

    let mut bad = Vec::new();
    for r in t.rules() {
        let d = rootdata::lat_add(&lat(r.i), &lat(r.j));
        for (m, _) in r.correction.iter() {
            let f = mono_factors(m);
            if mono_degree(m) != d || f.iter().any(|&k| k <= r.i || k >= r.j) {
                bad.push(render_rule(r));
                break;
            }
        }
    }
    out.push(
        CheckRecord::new(
            "table.windows",
            "each correction lies in the span of monomials in E_{β_{i+1}}..E_{β_{j-1}} of degree β_i + β_j",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join("; ")),
    );

    let bad: Vec<usize> = (1..NROOTS)
        .filter(|&i| !t.rule(i, i + 1).correction.is_zero())
        .collect();
    out.push(
        CheckRecord::new(
            "table.adjacent",
            "[E_{β_i}, E_{β_{i+1}}] = 0 for all 23 adjacent pairs",
            bad.is_empty(),
        )
        .witness_on_fail(|| format!("nonzero at i = {bad:?}")),
    );

    let bad: Vec<String> = t
        .rules()
        .iter()
        .filter(|r| {
            let (a, b) = rootdata::pairing_exps(&lat(r.j), &lat(r.i));
            r.p != RatField.rs_monomial(a, b)
        })
        .map(|r| format!("({}, {})", r.i, r.j))
        .collect();
    out.push(
        CheckRecord::new(
            "table.commutation-scalars",
            "p_ij = ⟨ω'_{β_j}, ω_{β_i}⟩",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join(" ")),
    );

    let text = t.to_cache_text();
    let back = StraighteningTable::from_cache_text(&text);
    out.push(CheckRecord::new(
        "table.cache-round-trip",
        "load(store(T)) = T bit-exactly",
        matches!(&back, Ok(b) if b == t && b.to_cache_text() == text),
    ));

    let key = format!("\"format_version\": {TABLE_FORMAT_VERSION}");
    let wrong = text.replacen(
        &key,
        &format!("\"format_version\": {}", TABLE_FORMAT_VERSION + 1),
        1,
    );
    let res = StraighteningTable::from_cache_text(&wrong);
    out.push(
        CheckRecord::new(
            "table.cache-version",
            "a cache with a different format version is rejected",
            matches!(res, Err(TableError::Version { .. })),
        )
        .witness_on_fail(|| format!("{:?}", res.map(|_| ()))),
    );
    out
}

/// Every side of each explicit identity agrees as an element of U⁺.
pub(super) fn golden(ctx: &Context) -> Vec<CheckRecord> {
    let alg = ctx.pbw();
    let mut out = Vec::new();
    for (g, group) in GOLDEN_GROUPS.iter().enumerate() {
        for (k, clause) in group.iter().enumerate() {
            let id = format!("golden.g{}.{:02}", g + 1, k + 1);
            let rec = match expr::eval_chain(alg, clause) {
                Err(e) => CheckRecord::new(id, *clause, false).with_witness(e.to_string()),
                Ok(sides) => {
                    let bad: Vec<usize> =
                        (1..sides.len()).filter(|&s| sides[s] != sides[0]).collect();
                    CheckRecord::new(id, *clause, bad.is_empty()).witness_on_fail(|| {
                        bad.iter()
                            .map(|&s| {
                                let d = sides[0].sub(&RatField, &sides[s]);
                                format!("side 1 − side {} = {}", s + 1, render_elem(&RatField, &d))
                            })
                            .collect::<Vec<_>>()
                            .join("; ")
                    })
                }
            };
            out.push(rec);
        }
    }
    out
}

/// Alternative Lyndon factorizations bracket to the same root vector.
pub(super) fn multifactor(ctx: &Context) -> Vec<CheckRecord> {
    let alg = ctx.pbw();
    let mut out = Vec::new();
    for &r in &rootdata::MULTI_FACTORIZATION_ROOTS {
        let (a0, b0) = rootdata::minimal_pair(r).expect("composite");
        let mut bad = Vec::new();
        for &(a, b) in rootdata::lyndon_pairs(r) {
            match expr::bracket(alg, &alg.root(a), &alg.root(b)) {
                Ok(v) if v == alg.root(r) => {}
                Ok(v) => bad.push(format!("[E_{a}, E_{b}] = {}", render_elem(&RatField, &v))),
                Err(e) => bad.push(e.to_string()),
            }
        }
        let pairs: Vec<String> = rootdata::lyndon_pairs(r)
            .iter()
            .map(|(a, b)| format!("[E_{{β_{a}}}, E_{{β_{b}}}]"))
            .collect();
        out.push(
            CheckRecord::new(
                format!("multifactor.{r:02}"),
                format!(
                    "E_{{β_{r}}} = [E_{{β_{a0}}}, E_{{β_{b0}}}] = {}",
                    pairs.join(" = ")
                ),
                bad.is_empty() && !pairs.is_empty(),
            )
            .witness_on_fail(|| bad.join("; ")),
        );
    }
    out
}

pub(super) fn associativity(ctx: &Context) -> Vec<CheckRecord> {
    let alg = ctx.pbw();
    let triples: Vec<(usize, usize, usize)> = (1..=NROOTS)
        .flat_map(|i| (i + 1..=NROOTS).flat_map(move |j| (j + 1..=NROOTS).map(move |k| (i, j, k))))
        .collect();
    // (triple, associates, number of terms)
    let results: Vec<((usize, usize, usize), bool, usize)> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let (a, b, c) = (alg.root(i), alg.root(j), alg.root(k));
            // normal order is descending, so E_i E_j E_k needs straightening
            let lhs = alg.multiply(&alg.multiply(&a, &b), &c);
            let rhs = alg.multiply(&a, &alg.multiply(&b, &c));
            ((i, j, k), lhs == rhs, lhs.len())
        })
        .collect();
    let bad: Vec<_> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    let nontrivial = results.iter().filter(|r| r.2 > 1).count();
    let most = results.iter().map(|r| r.2).max().unwrap_or(0);
    vec![CheckRecord::new(
        "associativity.triples",
        "(E_{β_i} E_{β_j}) E_{β_k} = E_{β_i} (E_{β_j} E_{β_k}) for all i < j < k",
        bad.is_empty() && triples.len() == 2024,
    )
    .with_witness(if bad.is_empty() {
        format!(
            "{} triples, {nontrivial} straighten to more than one monomial, largest {most} terms",
            triples.len()
        )
    } else {
        format!(
            "{} failing, first {:?}",
            bad.len(),
            &bad[..bad.len().min(10)]
        )
    })]
}

fn degrees_up_to(h: i64) -> Vec<LatticeVec> {
    let mut out = Vec::new();
    for a in 0..=h {
        for b in 0..=h - a {
            for c in 0..=h - a - b {
                for d in 0..=h - a - b - c {
                    if a + b + c + d > 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

pub(super) fn oracle(ctx: &Context) -> Vec<CheckRecord> {
    let h = ctx.max_height as i64;
    let oracle = Oracle::new(RatField, h);
    let alg = ctx.pbw();
    let mut by_degree: BTreeMap<LatticeVec, Vec<(usize, usize)>> = BTreeMap::new();
    for r in ctx.table.rules() {
        by_degree
            .entry(rootdata::lat_add(&lat(r.i), &lat(r.j)))
            .or_default()
            .push((r.i, r.j));
    }
    let degrees = degrees_up_to(h);
    let results: Vec<(LatticeVec, DegreeOutcome)> = degrees
        .par_iter()
        .map(|d| {
            let res = (|| {
                let comp = oracle.component(d).map_err(|e| e.to_string())?;
                let kostant = rootdata::kostant_monomials(d).len();
                let mut bad = Vec::new();
                for &(i, j) in by_degree.get(d).map(|v| v.as_slice()).unwrap_or(&[]) {
                    let lhs = free_multiply(
                        &RatField,
                        &oracle.pbw_to_free(&alg.root(i)),
                        &oracle.pbw_to_free(&alg.root(j)),
                    );
                    let rule = ctx.table.rule(i, j);
                    let mut rhs = alg.mono(mono_from_factors(&[j, i]));
                    rhs = rhs.scale(&RatField, &rule.p);
                    rhs.add_assign(&RatField, &rule.correction);
                    let diff = lhs.sub(&RatField, &oracle.pbw_to_free(&rhs));
                    let ok = comp
                        .reduce(&RatField, &diff)
                        .map_err(|e| e.to_string())?
                        .is_empty();
                    if !ok {
                        bad.push(format!("({i}, {j})"));
                    }
                }
                Ok((comp.dimension(), kostant, bad))
            })();
            (*d, res)
        })
        .collect();

    let mut dim_bad = Vec::new();
    let mut rule_bad = Vec::new();
    let mut rules_checked = 0;
    for (d, res) in &results {
        match res {
            Err(e) => dim_bad.push(format!("{d:?}: {e}")),
            Ok((dim, k, bad)) => {
                if dim != k {
                    dim_bad.push(format!("{d:?}: dim {dim} vs {k}"));
                }
                rules_checked += by_degree.get(d).map_or(0, |v| v.len());
                rule_bad.extend(bad.iter().cloned());
            }
        }
    }
    vec![
        CheckRecord::new(
            "oracle.dimensions",
            format!("dim (free algebra / Serre ideal)_d = #Kostant monomials of degree d, height(d) ≤ {h}"),
            dim_bad.is_empty(),
        )
        .with_witness(if dim_bad.is_empty() {
            format!("{} degrees", degrees.len())
        } else {
            dim_bad.join("; ")
        }),
        CheckRecord::new(
            "oracle.rules",
            format!("E_{{β_i}}E_{{β_j}} = p_ij E_{{β_j}}E_{{β_i}} + C_ij modulo the Serre ideal, height ≤ {h}"),
            rule_bad.is_empty() && rules_checked > 0,
        )
        .with_witness(if rule_bad.is_empty() {
            format!("{rules_checked} rules")
        } else {
            rule_bad.join(" ")
        }),
    ]
}

pub(super) fn nilpotency(ctx: &Context) -> Vec<CheckRecord> {
    const CAP: u32 = 12;
    let alg = ctx.pbw();
    let pairs: Vec<(usize, usize)> = (1..=NROOTS)
        .flat_map(|i| (i + 1..=NROOTS).map(move |j| (i, j)))
        .collect();
    let degrees: Vec<Result<u32, String>> = pairs
        .par_iter()
        .map(|&(i, j)| ad_nilpotency_degree(alg, i, j, CAP).map_err(|e| e.to_string()))
        .collect();
    let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for (&(i, j), d) in pairs.iter().zip(&degrees) {
        match d {
            Ok(m) => *hist.entry(*m).or_default() += 1,
            Err(e) => bad.push(format!("({i}, {j}): {e}")),
        }
    }
    let hist_text: Vec<String> = hist.iter().map(|(m, n)| format!("{m}:{n}")).collect();
    let listing: Vec<String> = pairs
        .iter()
        .zip(&degrees)
        .filter_map(|(&(i, j), d)| {
            d.as_ref()
                .ok()
                .filter(|&&m| m > 1)
                .map(|m| format!("({i},{j})→{m}"))
        })
        .collect();
    vec![CheckRecord::new(
        "nilpotency.left-adjoint",
        format!("(ad_q E_{{β_i}})^m E_{{β_j}} = 0 for some m ≤ {CAP}, all i < j"),
        bad.is_empty(),
    )
    .with_witness(if bad.is_empty() {
        format!(
            "degree histogram {}; degrees above 1: {}",
            hist_text.join(" "),
            listing.join(" ")
        )
    } else {
        bad.join("; ")
    })]
}
/// Dimension, Kostant count, and failing rule checks for one degree.
type DegreeOutcome = Result<(usize, usize, Vec<String>), String>;
