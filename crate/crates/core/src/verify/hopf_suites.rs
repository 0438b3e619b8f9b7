//! Hopf-structure suites: axioms, the ℓ-th power ideal, the skew pairing,
//! integrals, distinguished elements, ribbon data, the double, isomorphisms.

use super::{CheckRecord, Context};
use crate::coeff::{CoeffRing, RatField, SpecRing};
use crate::fullu::{eval_word, serre_f_element, Gen, GroupExp, UAlgebra};
use crate::hopf::{
    distinguished_character, distinguished_grouplike, double_solvability, integral_left,
    integral_right, iso_check, length_two_collapse, length_two_coproduct_check, ribbon_check,
    simple_power_check, Convention, Hopf, IsoCase, IsoMap, Letter, SkewPairing, IDEAL_ROOT_WORDS,
};
use crate::pbwplus::{serre_element, word_degree, words_of_degree, Truncation};
use crate::rootdata::{self, NROOTS};
use rand::{rngs::StdRng, seq::SliceRandom, Rng, SeedableRng};

fn group_gens() -> Vec<Gen> {
    (1..=4)
        .flat_map(|i| [Gen::W(i, -1), Gen::Wp(i, -1)])
        .collect()
}

pub(super) fn axioms(ctx: &Context) -> Vec<CheckRecord> {
    let u = ctx.generic();
    let h = Hopf::new(u);
    let mut out = Vec::new();

    let gens: Vec<Gen> = Gen::all_generators()
        .into_iter()
        .chain(group_gens())
        .collect();
    let bad: Vec<String> = gens
        .iter()
        .filter_map(|&g| h.axioms_hold(&u.gen(g)).err().map(|e| format!("{g}: {e}")))
        .collect();
    out.push(
        CheckRecord::new(
            "hopf-axioms.generators",
            "coassociativity, counit and antipode laws on E_i, F_i, ω_i^{±1}, ω'_i^{±1}",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join("; ")),
    );

    let max_h = if ctx.extended { u32::MAX } else { 4 };
    for i in Hopf::<RatField>::roots_up_to_height(max_h) {
        let e = h.axioms_hold(&u.e_root(i));
        let f = h.axioms_hold(&u.f_root(i));
        out.push(
            CheckRecord::new(
                format!("hopf-axioms.root-{i:02}"),
                format!("Hopf axioms on E_{{β_{i}}} and F_{{β_{i}}}"),
                e.is_ok() && f.is_ok(),
            )
            .witness_on_fail(|| format!("E: {e:?}; F: {f:?}")),
        );
    }

    let base = Gen::all_generators();
    let mut bad = Vec::new();
    for &a in &base {
        for &b in &base {
            let (x, y) = (u.gen(a), u.gen(b));
            let xy = u.multiply(&x, &y);
            if h.coproduct(&xy) != h.tensor_mul(&h.coproduct(&x), &h.coproduct(&y)) {
                bad.push(format!("Δ({a}{b})"));
            }
            if h.antipode(&xy) != u.multiply(&h.antipode(&y), &h.antipode(&x)) {
                bad.push(format!("S({a}{b})"));
            }
            if h.counit(&xy) != RatField.mul(&h.counit(&x), &h.counit(&y)) {
                bad.push(format!("ε({a}{b})"));
            }
        }
    }
    out.push(
        CheckRecord::new(
            "hopf-axioms.multiplicativity",
            "Δ and ε multiplicative, S anti-multiplicative on all products of two generators",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join("; ")),
    );
    out
}

pub(super) fn ideal(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let l = spec.ell;
    let h = Hopf::new(ctx.exact());
    let mut out = Vec::new();
    for i in 1..=4 {
        out.push(CheckRecord::new(
            format!("hopf-ideal.simple-{i}"),
            format!("Δ(E_{i}^{l}) = E_{i}^{l}⊗1 + ω_{i}^{l}⊗E_{i}^{l} at {spec}"),
            simple_power_check(&h, i, l),
        ));
    }
    for j in 1..=3 {
        let w = IDEAL_ROOT_WORDS[j - 1];
        out.push(CheckRecord::new(
            format!("hopf-ideal.coproduct-{w}"),
            format!(
                "Δ(E_{w}) = E_{w}⊗1 + ω_{w}⊗E_{w} + (1 − a_{{{j},{k}}}a_{{{k},{j}}}) E_{j}ω_{k}⊗E_{k}",
                k = j + 1
            ),
            length_two_coproduct_check(&h, j),
        ));
        let diff = length_two_collapse(&h, j, l);
        out.push(
            CheckRecord::new(
                format!("hopf-ideal.collapse-{w}"),
                format!("Δ(E_{w})^{l} = (E_{w}⊗1)^{l} + X^{l} + (cY)^{l} at {spec}"),
                diff.is_zero(),
            )
            .witness_on_fail(|| format!("{} stray terms", diff.len())),
        );
    }
    let low = length_two_collapse(&h, 1, 2);
    out.push(CheckRecord::new(
        "hopf-ideal.collapse-nonvacuous",
        "the collapse fails for the exponent 2",
        !low.is_zero(),
    ));
    out
}

type Words = Vec<(crate::coeff::RatFunc2, Vec<Letter>)>;

/// Pairings that must vanish: Serre elements against all words of their degree.
fn serre_failures(p: &SkewPairing<RatField>) -> Vec<String> {
    let mut bad = Vec::new();
    let one = RatField.one();
    for n in 1..=6 {
        let e = serre_element(&RatField, n);
        let d = word_degree(e.keys().next().expect("nonzero"));
        let e_words: Words = e
            .iter()
            .map(|(w, c)| (c.clone(), w.iter().map(|&l| Letter::E(l)).collect()))
            .collect();
        let f = serre_f_element(&RatField, n);
        let f_words: Words = f
            .iter()
            .map(|(w, c)| (c.clone(), w.iter().map(|&l| Letter::F(l)).collect()))
            .collect();
        for w in words_of_degree(&d) {
            let fw = vec![(one.clone(), w.iter().map(|&l| Letter::F(l)).collect())];
            if !p.pair_sums(&fw, &e_words).is_zero() {
                bad.push(format!("⟨F{w:?}, (F5)_{n}⟩"));
            }
            let ew = vec![(one.clone(), w.iter().map(|&l| Letter::E(l)).collect())];
            if !p.pair_sums(&f_words, &ew).is_zero() {
                bad.push(format!("⟨(F6)_{n}, E{w:?}⟩"));
            }
        }
    }
    bad
}

fn random_pair(rng: &mut StdRng) -> (Vec<Gen>, Vec<Gen>) {
    let n_root = rng.gen_range(0..=2);
    let idx: Vec<usize> = (0..n_root).map(|_| rng.gen_range(1..=4)).collect();
    let mut left: Vec<Gen> = idx.iter().map(|&i| Gen::F(i)).collect();
    let mut right: Vec<Gen> = idx.iter().map(|&i| Gen::E(i)).collect();
    right.shuffle(rng);
    let pad = |rng: &mut StdRng, w: &mut Vec<Gen>, prime: bool| {
        while w.len() < 3 && rng.gen_bool(0.6) {
            let i = rng.gen_range(1..=4);
            let n = if rng.gen_bool(0.5) { 1 } else { -1 };
            let g = if prime { Gen::Wp(i, n) } else { Gen::W(i, n) };
            let at = rng.gen_range(0..=w.len());
            w.insert(at, g);
        }
    };
    pad(rng, &mut left, true);
    pad(rng, &mut right, false);
    (left, right)
}

pub(super) fn pairing(ctx: &Context) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let tried: Vec<(Convention, Vec<String>)> = [Convention::Primary, Convention::Flipped]
        .into_iter()
        .map(|c| (c, serre_failures(&SkewPairing::new(RatField, c))))
        .collect();
    let chosen = tried.iter().find(|(_, b)| b.is_empty()).map(|(c, _)| *c);
    let summary: Vec<String> = tried
        .iter()
        .map(|(c, b)| format!("{c}: {} nonvanishing", b.len()))
        .collect();
    out.push(
        CheckRecord::new(
            "pairing.convention",
            "a splitting convention for products in the right argument makes the pairing vanish on Serre elements",
            chosen.is_some(),
        )
        .with_witness(match chosen {
            Some(c) => format!("using {c}; {}", summary.join("; ")),
            None => summary.join("; "),
        }),
    );
    let Some(conv) = chosen else {
        return out;
    };
    let p = SkewPairing::new(RatField, conv);
    out.push(
        CheckRecord::new(
            "pairing.serre",
            "⟨(F6)_n, ·⟩ and ⟨·, (F5)_n⟩ vanish on all words of the same degree",
            true,
        )
        .with_witness(format!("{conv}")),
    );

    let mut bad = Vec::new();
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            let fe = p.pair_words(&[Letter::F(i)], &[Letter::E(j)]);
            let want = if i == j {
                let k = rootdata::ri_si_power(i as usize) as i64;
                RatField
                    .inv(&RatField.sub(&RatField.rs_monomial(0, k), &RatField.rs_monomial(k, 0)))
                    .expect("invertible")
            } else {
                RatField.zero()
            };
            if fe != want {
                bad.push(format!("⟨F{i}, E{j}⟩"));
            }
            let wp = Letter::G(GroupExp::omega_p(i as usize, 1));
            let w = Letter::G(GroupExp::omega(j as usize, 1));
            let (a, b) = rootdata::structural_exps(j as usize, i as usize);
            if p.pair_words(&[wp], &[w]) != RatField.rs_monomial(a, b) {
                bad.push(format!("⟨ω'{i}, ω{j}⟩"));
            }
            let wpi = Letter::G(GroupExp::omega_p(i as usize, -1));
            if p.pair_words(&[wpi], &[w]) != RatField.rs_monomial(-a, -b) {
                bad.push(format!("⟨ω'{i}^-1, ω{j}⟩"));
            }
            if !p.pair_words(&[Letter::F(i)], &[w]).is_zero()
                || !p.pair_words(&[wp], &[Letter::E(j)]).is_zero()
            {
                bad.push(format!("mixed ({i}, {j})"));
            }
        }
    }
    out.push(
        CheckRecord::new(
            "pairing.generators",
            "⟨F_i, E_j⟩ = δ_ij/(s_i − r_i), ⟨ω'_i, ω_j⟩ = a_ji, ⟨ω'_i^{-1}, ω_j⟩ = a_ji^{-1}, ⟨F_i, ω_j⟩ = ⟨ω'_i, E_j⟩ = 0",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join("; ")),
    );

    let u = ctx.generic();
    let h = Hopf::new(u);
    let left_gens: Vec<Gen> = (1..=4)
        .flat_map(|i| [Gen::F(i), Gen::Wp(i, 1), Gen::Wp(i, -1)])
        .collect();
    let right_gens: Vec<Gen> = (1..=4)
        .flat_map(|i| [Gen::E(i), Gen::W(i, 1), Gen::W(i, -1)])
        .collect();
    let mut cases: Vec<(Vec<Gen>, Vec<Gen>)> = Vec::new();
    for &a in &left_gens {
        for &b in &right_gens {
            cases.push((vec![a], vec![b]));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5a11);
    for _ in 0..200 {
        cases.push(random_pair(&mut rng));
    }
    let mut bad = Vec::new();
    let mut nonzero = 0;
    for (wa, wb) in &cases {
        let (a, b) = (eval_word(u, wa), eval_word(u, wb));
        let lhs = p.pair(&h.antipode(&a), &h.antipode(&b));
        let rhs = p.pair(&a, &b);
        match (lhs, rhs) {
            (Ok(x), Ok(y)) if x == y => nonzero += usize::from(!y.is_zero()),
            (x, y) => bad.push(format!("{wa:?} | {wb:?}: {x:?} vs {y:?}")),
        }
    }
    out.push(
        CheckRecord::new(
            "pairing.antipode-symmetry",
            "⟨S(a), S(b)⟩ = ⟨a, b⟩ on generator pairs and on random products of up to three generators",
            bad.is_empty() && nonzero > 0,
        )
        .with_witness(if bad.is_empty() {
            format!("{} pairs, {nonzero} with nonzero value", cases.len())
        } else {
            bad.join("; ")
        }),
    );
    out
}

fn integrals_gated(ctx: &Context, id: &str) -> Option<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    (spec.ell > 5 && !ctx.extended).then(|| {
        CheckRecord::skipped(
            id,
            format!("integrals at {spec}"),
            "ℓ > 5 runs with --extended",
        )
    })
}

fn counit_gen(g: Gen) -> bool {
    matches!(g, Gen::W(..) | Gen::Wp(..))
}

pub(super) fn integrals(ctx: &Context) -> Vec<CheckRecord> {
    if let Some(r) = integrals_gated(ctx, "integrals") {
        return vec![r];
    }
    let spec = ctx.spec.expect("spec");
    let u = ctx.restricted();
    let ring = u.ring();
    let y = integral_left(u);
    let yp = integral_right(u);
    let mut out = vec![CheckRecord::new(
        "integrals.nonzero",
        "y = tx and y' = xt are nonzero",
        !y.is_zero() && !yp.is_zero(),
    )
    .with_witness(format!("{} and {} terms", y.len(), yp.len()))];

    let mut bad_l = Vec::new();
    let mut bad_r = Vec::new();
    for g in Gen::borel_generators() {
        let b = u.gen(g);
        let eps = if counit_gen(g) {
            ring.one()
        } else {
            ring.zero()
        };
        if u.multiply(&b, &y) != u.scale(&y, &eps) {
            bad_l.push(g.to_string());
        }
        if u.multiply(&yp, &b) != u.scale(&yp, &eps) {
            bad_r.push(g.to_string());
        }
    }
    out.push(
        CheckRecord::new(
            "integrals.left",
            format!("b·(tx) = ε(b)(tx) for b = E_i, ω_i at {spec}"),
            bad_l.is_empty(),
        )
        .witness_on_fail(|| bad_l.join(" ")),
    );
    out.push(
        CheckRecord::new(
            "integrals.right",
            format!("(xt)·b = ε(b)(xt) for b = E_i, ω_i at {spec}"),
            bad_r.is_empty(),
        )
        .witness_on_fail(|| bad_r.join(" ")),
    );
    out.push(CheckRecord::new(
        "integrals.counit",
        "ε(tx) = ε(xt) = 0",
        ring.is_zero(&u.counit_scalar(&y)) && ring.is_zero(&u.counit_scalar(&yp)),
    ));

    let gamma = distinguished_character(ring);
    let mut bad = Vec::new();
    for k in 1..=4 {
        let w = u.gen(Gen::W(k, 1));
        if u.multiply(&y, &w) != u.scale(&y, &gamma.values[k - 1]) {
            bad.push(format!("ω_{k}"));
        }
        if !u.multiply(&y, &u.gen(Gen::E(k))).is_zero() {
            bad.push(format!("E_{k}"));
        }
    }
    out.push(
        CheckRecord::new(
            "integrals.distinguished-character",
            "(tx)·ω_k = γ(ω_k)(tx) and (tx)·E_k = 0 = γ(E_k)(tx), γ(ω_k) = ⟨ω'_{2ρ}, ω_k⟩",
            bad.is_empty(),
        )
        .witness_on_fail(|| bad.join(" ")),
    );
    out
}

/// `γ(ω_k) = ∏_{β > 0} ⟨ω'_β, ω_k⟩`, one root at a time.
fn gamma_by_roots(ring: &SpecRing) -> Vec<<SpecRing as CoeffRing>::Elem> {
    (1..=4)
        .map(|k| {
            (1..=NROOTS).fold(ring.one(), |acc, b| {
                let (x, y) =
                    rootdata::pairing_exps(&rootdata::root(b).lattice(), &rootdata::simple_root(k));
                ring.mul(&acc, &ring.rs_monomial(x, y))
            })
        })
        .collect()
}

pub(super) fn distinguished(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let l = spec.ell as i64;
    let u = ctx.restricted();
    let ring = u.ring();
    let gamma = distinguished_character(ring);
    let mut out = Vec::new();

    let by_roots = gamma_by_roots(ring);
    out.push(CheckRecord::new(
        "distinguished.gamma",
        "γ(ω_k) = ∏_{β>0} ⟨ω'_β, ω_k⟩ = ⟨ω'_{2ρ}, ω_k⟩",
        by_roots[..] == gamma.values[..4],
    ));
    out.push(CheckRecord::new(
        "distinguished.gamma-order",
        format!("γ^{l} = ε"),
        gamma.has_order_dividing(ring, l),
    ));

    let g = distinguished_grouplike(Some(spec.ell as i32));
    let want = rootdata::two_rho().map(|c| (-c).rem_euclid(l));
    out.push(
        CheckRecord::new(
            "distinguished.g",
            "g = ω_{2ρ}^{-1} = ω_1^{-16}ω_2^{-30}ω_3^{-42}ω_4^{-22}",
            g.weight() == want && g.weight_p() == [0; 4],
        )
        .with_witness(format!("exponents mod {l}: {:?}", g.weight())),
    );

    // F_top = F_{β_24}^{ℓ−1}⋯F_{β_1}^{ℓ−1}
    let skip = integrals_gated(ctx, "distinguished.f-top");
    match skip {
        Some(r) => out.push(r),
        None => {
            let factors: Vec<_> = (1..=NROOTS)
                .rev()
                .map(|i| u.power(&u.f_root(i), (l - 1) as u32))
                .collect();
            let ftop = u.product(&factors);
            let deg = rootdata::lat_scale(&rootdata::two_rho(), l - 1);
            let mut bad = Vec::new();
            for k in 1..=4 {
                let (x, y) = rootdata::pairing_exps(&rootdata::simple_root(k), &deg);
                let c = ring.rs_monomial(x, y);
                let wp = u.gen(Gen::Wp(k, 1));
                let lhs = u.multiply(&wp, &ftop);
                let rhs = u.scale(&u.multiply(&ftop, &wp), &c);
                if lhs != rhs {
                    bad.push(format!("k = {k}"));
                }
            }
            out.push(
                CheckRecord::new(
                    "distinguished.f-top",
                    "ω'_k·F_top = ⟨ω'_k, ω_{(ℓ−1)2ρ}⟩ F_top·ω'_k, F_top ≠ 0",
                    bad.is_empty() && !ftop.is_zero(),
                )
                .witness_on_fail(|| bad.join(" ")),
            );
        }
    }
    out
}

pub(super) fn ribbon(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let h = Hopf::new(ctx.restricted());
    let rep = ribbon_check(&h);
    vec![
        CheckRecord::new("ribbon.h-squared", "h² = g for h = ω_ρ^{-1}", rep.h_sq_eq_g),
        CheckRecord::new(
            "ribbon.delta-squared",
            "δ² = γ for δ = ⟨ω'_ρ, ·⟩",
            rep.delta_sq_eq_gamma,
        ),
        CheckRecord::new(
            "ribbon.antipode-square",
            format!("S²(a) = h(δ⇀a↼δ⁻¹)h⁻¹ on all 16 generators at {spec}"),
            rep.s_square_conjugation,
        )
        .witness_on_fail(|| format!("{:?}", rep.failures)),
    ]
}

pub(super) fn double(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let rep = double_solvability(&spec);
    vec![
        CheckRecord::new(
            "double.matrix",
            "the exponent matrix A_ij of γ_j(ω_i) = a_ij matches the structure constants",
            rep.matrix_matches_structure,
        ),
        CheckRecord::new(
            "double.determinant-formula",
            "det A = 4(y⁴ + z⁴ − y²z²) symbolically and at (y, z)",
            rep.det_formula_matches,
        )
        .with_witness(format!("det = {}", rep.det)),
        CheckRecord::new(
            "double.invertible",
            format!("gcd(det A, ℓ) = 1 at {spec}"),
            rep.invertible_mod_ell,
        )
        .with_witness(format!("gcd({}, {}) ", rep.det, spec.ell)),
        CheckRecord::new(
            "double.characters-generate",
            "γ_1..γ_4 generate all ℓ⁴ characters of the group part",
            rep.characters_generate,
        ),
    ]
}

pub(super) fn iso(ctx: &Context) -> Vec<CheckRecord> {
    let spec = ctx.spec.expect("spec");
    let l = spec.ell;
    let ring = SpecRing::new(2 * l, 2 * spec.y, 2 * spec.z);
    let src = UAlgebra::new(ring.clone(), &ctx.table, Truncation::None).expect("valid");
    let hs = Hopf::new(&src);
    let a = [2, 3, 5, 7].map(|k| ring.from_i64(k));
    let mut out = Vec::new();
    let cases = [
        (IsoCase::Same, "same", "(r, s) ↦ ζ(r, s)"),
        (IsoCase::Swapped, "swapped", "(r, s) ↦ ζ(s, r)"),
    ];
    for zeta in [1i64, -1] {
        let off = if zeta == -1 { l as i64 } else { 0 };
        for (case, name, text) in cases {
            let (ty, tz) = match case {
                IsoCase::Same => (2 * spec.y, 2 * spec.z),
                _ => (2 * spec.z, 2 * spec.y),
            };
            let tgt = UAlgebra::new(
                ring.with_exponents(ty + off, tz + off),
                &ctx.table,
                Truncation::None,
            )
            .expect("valid");
            let ht = Hopf::new(&tgt);
            let rep = iso_check(
                &hs,
                &ht,
                &IsoMap {
                    case,
                    zeta,
                    a: a.clone(),
                },
            );
            out.push(
                CheckRecord::new(
                    format!("iso.zeta{zeta:+}.{name}"),
                    format!("U_{{r,s}} ≅ U_{{r',s'}} as Hopf algebras for {text}, ζ = {zeta}"),
                    rep.passed(),
                )
                .witness_on_fail(|| {
                    format!(
                        "relations not preserved: {}; Δ not intertwined on: {:?}",
                        rep.failed_relations.join(", "),
                        rep.failed_coproducts
                    )
                }),
            );
        }
    }
    let tgt = UAlgebra::new(
        ring.with_exponents(2 * spec.z, 2 * spec.y),
        &ctx.table,
        Truncation::None,
    )
    .expect("valid");
    let ht = Hopf::new(&tgt);
    let rep = iso_check(
        &hs,
        &ht,
        &IsoMap {
            case: IsoCase::SwappedAsStated,
            zeta: 1,
            a,
        },
    );
    out.push(
        CheckRecord::new(
            "iso.swapped-positive-powers",
            "ω_i ↦ ω̃'_i, ω'_i ↦ ω̃_i, E_i ↦ a_iF̃_iω̃'_i is not a homomorphism; the inverse-power form is used",
            !rep.passed(),
        )
        .with_witness(format!("{} relations fail", rep.failed_relations.len())),
    );
    out
}
