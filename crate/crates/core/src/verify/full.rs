//! Suites over U and u: defining relations, cross commutators, centrality of
//! ℓ-th powers, and the restricted-basis indexing.

use super::{CheckRecord, Context};
use crate::coeff::{parse_ratfunc, CoeffRing, RatField, RatFunc2};
use crate::fullu::{
    defining_relations, restricted_index, restricted_mono, serre_f_element, tau, tau_free, Gen,
    GroupExp, RelationFamily, UAlgebra, UElem, UMono, RESTRICTED_BASIS_EXPONENTS,
};
use crate::hopf::{Hopf, Side};
use crate::pbwplus::{mono_degree, mono_factors, serre_element, ONE};
use crate::rootdata::{self, CARTAN, NROOTS, SIMPLE_INDEX};
use num_bigint::BigUint;
use rand::{rngs::StdRng, Rng, SeedableRng};
use std::collections::{BTreeSet, HashSet};

const FAMILIES: [RelationFamily; 6] = [
    RelationFamily::F1,
    RelationFamily::F2,
    RelationFamily::F3,
    RelationFamily::F4,
    RelationFamily::F5,
    RelationFamily::F6,
];

fn relation_records<R: CoeffRing>(alg: &UAlgebra<R>, mode: &str) -> Vec<CheckRecord> {
    let rels = defining_relations(alg.ring());
    FAMILIES
        .iter()
        .map(|&fam| {
            let mine: Vec<_> = rels.iter().filter(|r| r.family == fam).collect();
            let bad: Vec<String> = mine
                .iter()
                .filter(|r| !r.evaluate(alg, &|g| alg.gen(g)).is_zero())
                .map(|r| r.label.clone())
                .collect();
            CheckRecord::new(
                format!("serre.{mode}.{fam}"),
                format!("relations ({fam}) vanish in {mode} normal-form arithmetic"),
                bad.is_empty() && !mine.is_empty(),
            )
            .with_witness(if bad.is_empty() {
                format!("{} relations", mine.len())
            } else {
                bad.join("; ")
            })
        })
        .collect()
}

pub(super) fn serre(ctx: &Context) -> Vec<CheckRecord> {
    let u = ctx.generic();
    let mut out = relation_records(u, "generic");
    match ctx.spec {
        Some(spec) => {
            let mut rs = relation_records(ctx.restricted(), "restricted");
            for r in &mut rs {
                r.reference = format!("{} at {spec}", r.reference);
            }
            out.extend(rs);
        }
        None => out.push(CheckRecord::skipped(
            "serre.restricted",
            "relations vanish in u",
            "no specialization parameters given",
        )),
    }

    let bad: Vec<usize> = (1..=6)
        .filter(|&n| {
            tau_free(&RatField, &serre_element(&RatField, n)) != serre_f_element(&RatField, n)
        })
        .collect();
    out.push(
        CheckRecord::new(
            "serre.tau-exchange",
            "τ((F5)_n) = (F6)_n for n = 1..6",
            bad.is_empty(),
        )
        .witness_on_fail(|| format!("n = {bad:?}")),
    );
    let bad: Vec<usize> = (1..=NROOTS)
        .filter(|&i| tau(&RatField, &u.e_root(i)) != u.f_root(i))
        .collect();
    out.push(
        CheckRecord::new(
            "serre.tau-roots",
            "τ(E_{β_i}) = F_{β_i} for all 24 roots",
            bad.is_empty(),
        )
        .witness_on_fail(|| format!("i = {bad:?}")),
    );

    let h = Hopf::new(u);
    for (side, name, letter) in [
        (Side::Left, "adjoint-left-e", 'E'),
        (Side::Right, "adjoint-right-f", 'F'),
    ] {
        let mut bad = Vec::new();
        for i in 1..=4 {
            for j in (1..=4).filter(|&j| j != i) {
                let n = (1 - CARTAN[i - 1][j - 1]) as u32;
                let (a, b) = if letter == 'E' {
                    (u.gen(Gen::E(i)), u.gen(Gen::E(j)))
                } else {
                    (u.gen(Gen::F(i)), u.gen(Gen::F(j)))
                };
                if !h.adjoint_power(side, &a, n, &b).is_zero() {
                    bad.push(format!("({i},{j}) power {n} nonzero"));
                }
                if h.adjoint_power(side, &a, n - 1, &b).is_zero() {
                    bad.push(format!("({i},{j}) power {} already zero", n - 1));
                }
            }
        }
        let sub = if side == Side::Left { "l" } else { "r" };
        out.push(
            CheckRecord::new(
                format!("serre.{name}"),
                format!(
                    "(ad_{sub} {letter}_i)^{{1−c_ij}}({letter}_j) = 0 and (ad_{sub} {letter}_i)^{{−c_ij}}({letter}_j) ≠ 0 for i ≠ j"
                ),
                bad.is_empty(),
            )
            .witness_on_fail(|| bad.join("; ")),
        );
    }
    out
}

/// Indices i with `[E_{β_i}, F_j] = 0` for simple j, `β_i ≠ α_j`.
fn cross_zero_set(j: usize) -> BTreeSet<usize> {
    let v: &[usize] = match j {
        1 => &[16, 17, 18, 19, 20, 21, 22, 23, 24],
        2 => &[1, 3, 4, 6, 7, 10, 11, 13, 14, 22, 23, 24],
        3 => &[1, 2, 5, 6, 8, 9, 11, 12, 15, 16, 19, 21, 24],
        4 => &[1, 2, 3, 4, 5, 10, 14, 15, 16, 17, 18, 22],
        _ => unreachable!(),
    };
    v.iter().copied().collect()
}

/// Open windows `(lo, hi)` that must contain every E-factor of `[E_{β_i}, F_j]`.
fn cross_window(j: usize, i: usize) -> Option<(usize, usize)> {
    match (j, i) {
        (1, 8) => Some((8, 22)),
        (1, 5 | 9 | 10 | 12 | 13 | 14 | 15) => Some((15, 22)),
        (2, 17..=21) => Some((21, 24)),
        _ => None,
    }
}

fn describe_cross(i: usize, j: usize, x: &UElem<RatFunc2>) -> Result<(), String> {
    let wj = GroupExp::omega(j, 1);
    let wpj = GroupExp::omega_p(j, 1);
    let target = rootdata::lat_sub(&rootdata::root(i).lattice(), &rootdata::simple_root(j));
    let mut kind = None;
    for (m, _) in x.iter() {
        if m.f != ONE {
            return Err("F factor present".into());
        }
        if mono_degree(&m.e) != target {
            return Err("degree is not β_i − α_j".into());
        }
        let f = mono_factors(&m.e);
        let k = if m.g == wj && f.iter().all(|&k| k < i) {
            'w'
        } else if m.g == wpj && f.iter().all(|&k| k > i) {
            'p'
        } else {
            return Err(format!("term {m} mixes the two shapes"));
        };
        if *kind.get_or_insert(k) != k {
            return Err("both ω_j and ω'_j occur".into());
        }
        if let Some((lo, hi)) = cross_window(j, i) {
            if f.iter().any(|&k| k <= lo || k >= hi) {
                return Err(format!("term {m} leaves the window ({lo}, {hi})"));
            }
        }
    }
    // β_8 − α_1 = β_15, yet [E_{β_8}, F_1] spreads over the window (8, 22)
    let spread = (j, i) == (1, 8);
    if let Some(k) = rootdata::index_of_root(&target).filter(|_| !spread) {
        let ok = x.len() == 1 && x.keys().next().is_some_and(|m| mono_factors(&m.e) == [k]);
        if !ok {
            return Err(format!("expected a multiple of E_{{β_{k}}}"));
        }
    }
    Ok(())
}

pub(super) fn cross(ctx: &Context) -> Vec<CheckRecord> {
    let u = ctx.generic();
    let mut out = Vec::new();
    for j in 1..=4 {
        let sj = SIMPLE_INDEX[j - 1];
        let zero_want = cross_zero_set(j);
        let mut zero_got = BTreeSet::new();
        let mut bad = Vec::new();
        for i in (1..=NROOTS).filter(|&i| i != sj) {
            let x = u.cross_commutator(i, sj);
            if x.is_zero() {
                zero_got.insert(i);
            } else if let Err(e) = describe_cross(i, j, &x) {
                bad.push(format!("i = {i}: {e}"));
            }
        }
        out.push(
            CheckRecord::new(
                format!("cross.zero-set.{j}"),
                format!("[E_{{β_i}}, F_{j}] = 0 exactly for i ∈ {zero_want:?}"),
                zero_got == zero_want,
            )
            .witness_on_fail(|| format!("zero for {zero_got:?}")),
        );
        out.push(
            CheckRecord::new(
                format!("cross.shape.{j}"),
                format!(
                    "nonzero [E_{{β_i}}, F_{j}] lie in U⁺_{{<i}}ω_{j} or U⁺_{{>i}}ω'_{j}, of degree β_i − α_{j}, single E_{{β_i − α_{j}}} term when that is a root (except i = 8, j = 1)"
                ),
                bad.is_empty(),
            )
            .witness_on_fail(|| bad.join("; ")),
        );
    }

    let rf = |s: &str| parse_ratfunc(s).expect("literal");
    let explicit = [
        (
            8,
            2,
            u.scale(
                &u.product(&[u.e_root(7), u.e_root(7), u.gen(Gen::W(2, 1))]),
                &rf("(r - s)/r^3"),
            ),
            "[E_{β_8}, F_2] = r^{-3}(r − s) E_{β_7}^2 ω_2",
        ),
        (
            8,
            4,
            u.scale(
                &u.product(&[u.e_root(7), u.e_root(5), u.gen(Gen::W(4, 1))]),
                &RatFunc2::monomial(1, -1, -1).sub(&RatFunc2::monomial(1, -3, 1)),
            ),
            "[E_{β_8}, F_4] = (r^{-1}s^{-1} − r^{-3}s) E_{β_7}E_{β_5} ω_4",
        ),
        (
            23,
            3,
            u.scale(&u.multiply(&u.e_root(24), &u.gen(Gen::Wp(3, 1))), &rf("-1")),
            "[E_{β_23}, F_3] = −E_{β_24} ω'_3",
        ),
    ];
    for (i, j, want, text) in explicit {
        let got = u.cross_commutator(i, SIMPLE_INDEX[j - 1]);
        out.push(
            CheckRecord::new(format!("cross.value.{i}.{j}"), text, *got == want)
                .witness_on_fail(|| crate::fullu::render_uelem(&RatField, &got)),
        );
    }
    out
}

pub(super) fn centrality(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let u = ctx.exact();
    let l = spec.ell;
    let roots: Vec<usize> = (1..=NROOTS)
        .filter(|&i| ctx.extended || rootdata::root(i).height() <= ctx.max_height)
        .collect();
    let mut out = Vec::new();
    for &i in &roots {
        let e = u.central_against_generators(&u.power(&u.e_root(i), l));
        let f = u.central_against_generators(&u.power(&u.f_root(i), l));
        out.push(
            CheckRecord::new(
                format!("centrality.root-{i:02}"),
                format!(
                    "E_{{β_{i}}}^{l} and F_{{β_{i}}}^{l} commute with all 16 generators at {spec}"
                ),
                e.is_none() && f.is_none(),
            )
            .witness_on_fail(|| format!("E fails against {e:?}, F fails against {f:?}")),
        );
    }
    if !ctx.extended {
        let rest: Vec<usize> = (1..=NROOTS).filter(|i| !roots.contains(i)).collect();
        if !rest.is_empty() {
            out.push(CheckRecord::skipped(
                "centrality.high-roots",
                format!("roots of height > {}", ctx.max_height),
                format!("{rest:?} run with --extended"),
            ));
        }
    }
    let bad: Vec<usize> = (1..=4)
        .filter(|&k| {
            u.central_against_generators(&u.group(GroupExp::omega(k, l as i32)))
                .is_some()
                || u.central_against_generators(&u.group(GroupExp::omega_p(k, l as i32)))
                    .is_some()
        })
        .collect();
    out.push(
        CheckRecord::new(
            "centrality.group",
            format!("ω_k^{l} and ω'_k^{l} are central"),
            bad.is_empty(),
        )
        .witness_on_fail(|| format!("k = {bad:?}")),
    );
    let below = u.central_against_generators(&u.power(&u.e_root(1), l - 1));
    out.push(
        CheckRecord::new(
            "centrality.nonvacuous",
            format!("E_{{β_1}}^{} is not central", l - 1),
            below.is_some(),
        )
        .with_witness(format!("fails against {below:?}")),
    );
    out
}

fn random_mono(rng: &mut StdRng, l: u32) -> UMono {
    let mut m = UMono::ONE;
    for x in m.e.iter_mut().chain(m.f.iter_mut()) {
        *x = rng.gen_range(0..l) as u8;
    }
    for x in m.g.0.iter_mut() {
        *x = rng.gen_range(0..l) as i32;
    }
    m
}

pub(super) fn indexing(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let l = spec.ell;
    let dim = BigUint::from(l).pow(RESTRICTED_BASIS_EXPONENTS as u32);
    let mut out = vec![CheckRecord::new(
        "indexing.exponent-count",
        "a restricted PBW monomial has 24 + 8 + 24 = 56 exponents, each in 0..ℓ",
        RESTRICTED_BASIS_EXPONENTS == 56 && RESTRICTED_BASIS_EXPONENTS == 2 * NROOTS + 8,
    )];

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let sample: Vec<UMono> = (0..2000).map(|_| random_mono(&mut rng, l)).collect();
    let distinct: HashSet<UMono> = sample.iter().copied().collect();
    let mut seen = HashSet::new();
    let mut ok = true;
    for m in &sample {
        match restricted_index(m, l) {
            Some(ix) => {
                ok &= ix < dim && restricted_mono(&ix, l) == Some(*m);
                seen.insert(ix);
            }
            None => ok = false,
        }
    }
    out.push(
        CheckRecord::new(
            "indexing.bijection",
            format!("index(m) ∈ 0..ℓ^56 and index is invertible and injective (ℓ = {l})"),
            ok && seen.len() == distinct.len(),
        )
        .with_witness(format!("{} sampled monomials", sample.len())),
    );

    let mut top = UMono::ONE;
    top.e = [(l - 1) as u8; NROOTS];
    top.f = [(l - 1) as u8; NROOTS];
    top.g = GroupExp([(l - 1) as i32; 8]);
    let mut over = UMono::ONE;
    over.e[0] = l as u8;
    let extremes = restricted_index(&UMono::ONE, l) == Some(BigUint::from(0u32))
        && restricted_index(&top, l) == Some(&dim - 1u32)
        && restricted_index(&over, l).is_none()
        && restricted_mono(&dim, l).is_none();
    out.push(CheckRecord::new(
        "indexing.extremes",
        "1 ↦ 0, top monomial ↦ ℓ^56 − 1, out-of-range exponents rejected",
        extremes,
    ));

    out.push(CheckRecord::skipped(
        "indexing.dimension-enumeration",
        "dim u = ℓ^56 by enumeration",
        format!("{dim} monomials at ℓ = {l}; replaced by the indexing property"),
    ));
    out.push(CheckRecord::skipped(
        "indexing.higher-root-ideal",
        "Δ(E_{β}^ℓ) ∈ I⊗U + U⊗I for roots beyond length two",
        "cost; simple and length-two roots are checked in hopf-ideal",
    ));
    out.push(CheckRecord::skipped(
        "indexing.dual-integrals",
        "integrals of the dual Borel part",
        "out of scope: the bracket scalar in their definition is ambiguous",
    ));
    out
}
