use f4quant::coeff::{CoeffRing, RatField};
use f4quant::fullu::{Gen, UAlgebra};
use f4quant::hopf::Hopf;
use f4quant::pbwplus::expr::bracket;
use f4quant::pbwplus::{build_straightening_table, mono_from_factors, PbwAlgebra, Truncation};
use f4quant::rootdata::{pairing_exps, root};
use f4quant::run_with_stack;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn factors() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=24, 1..3)
}

fn generator() -> impl Strategy<Value = Gen> {
    (1usize..=4, 0u8..6).prop_map(|(i, k)| match k {
        0 => Gen::E(i),
        1 => Gen::F(i),
        2 => Gen::W(i, 1),
        3 => Gen::W(i, -1),
        4 => Gen::Wp(i, 1),
        _ => Gen::Wp(i, -1),
    })
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(generator(), 1..max_len)
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: 48,
        ..Config::default()
    })
}

#[test]
fn pbw_multiplication_is_associative() {
    run_with_stack(|| {
        let table = build_straightening_table().unwrap();
        let pbw = PbwAlgebra::new(RatField, &table, Truncation::None);
        runner()
            .run(&(factors(), factors(), factors()), |(a, b, c)| {
                let x = pbw.mono(mono_from_factors(&a));
                let y = pbw.mono(mono_from_factors(&b));
                let z = pbw.mono(mono_from_factors(&c));
                let lhs = pbw.multiply(&pbw.multiply(&x, &y), &z);
                let rhs = pbw.multiply(&x, &pbw.multiply(&y, &z));
                prop_assert_eq!(lhs, rhs);
                Ok(())
            })
            .unwrap();
    });
}

/// `p_uv = ⟨ω'_{deg v}, ω_{deg u}⟩` for root vectors `E_u`, `E_v`.
fn p(u: usize, v: usize) -> f4quant::coeff::RatFunc2 {
    let (a, b) = pairing_exps(&root(v).lattice(), &root(u).lattice());
    RatField.rs_monomial(a, b)
}

#[test]
fn jacobi_and_leibniz_rules_hold_on_root_vectors() {
    run_with_stack(|| {
        let table = build_straightening_table().unwrap();
        let t = PbwAlgebra::new(RatField, &table, Truncation::None);
        let idx = 1usize..=24;
        runner()
            .run(&(idx.clone(), idx.clone(), idx), |(a, b, c)| {
                let (x, y, z) = (t.root(a), t.root(b), t.root(c));
                let br = |u: &_, v: &_| bracket(&t, u, v).unwrap();
                let m = |u: &_, v: &_| t.multiply(u, v);

                let yz = m(&y, &z);
                let mut rhs = m(&br(&x, &y), &z);
                rhs.add_scaled(&RatField, &m(&y, &br(&x, &z)), &p(a, b));
                prop_assert_eq!(br(&x, &yz), rhs, "left Leibniz ({}, {}, {})", a, b, c);

                let mut rhs = m(&x, &br(&y, &z));
                rhs.add_scaled(&RatField, &m(&br(&x, &z), &y), &p(b, c));
                prop_assert_eq!(br(&m(&x, &y), &z), rhs, "right Leibniz ({}, {}, {})", a, b, c);

                let pzy_inv = RatField.inv(&p(c, b)).unwrap();
                let xz = br(&x, &z);
                let mut rhs = br(&x, &br(&y, &z));
                rhs.add_scaled(&RatField, &br(&xz, &y), &pzy_inv);
                rhs.add_scaled(&RatField, &m(&xz, &y), &RatField.sub(&p(b, c), &pzy_inv));
                prop_assert_eq!(br(&br(&x, &y), &z), rhs, "Jacobi ({}, {}, {})", a, b, c);
                Ok(())
            })
            .unwrap();
    });
}

#[test]
fn full_algebra_is_associative_on_generator_words() {
    run_with_stack(|| {
        let table = build_straightening_table().unwrap();
        let u = UAlgebra::new(RatField, &table, Truncation::None).unwrap();
        runner()
            .run(
                &(word(4), word(4), word(4)),
                |(a, b, c): (Vec<Gen>, Vec<Gen>, Vec<Gen>)| {
                    let p = |w: &[Gen]| u.product(&w.iter().map(|&g| u.gen(g)).collect::<Vec<_>>());
                    let (x, y, z) = (p(&a), p(&b), p(&c));
                    let lhs = u.multiply(&u.multiply(&x, &y), &z);
                    let rhs = u.multiply(&x, &u.multiply(&y, &z));
                    prop_assert_eq!(lhs, rhs);
                    Ok(())
                },
            )
            .unwrap();
    });
}

#[test]
fn coproduct_counit_antipode_are_multiplicative() {
    run_with_stack(|| {
        let table = build_straightening_table().unwrap();
        let u = UAlgebra::new(RatField, &table, Truncation::None).unwrap();
        let h = Hopf::new(&u);
        runner()
            .run(&(word(3), word(3)), |(a, b): (Vec<Gen>, Vec<Gen>)| {
                let p = |w: &[Gen]| u.product(&w.iter().map(|&g| u.gen(g)).collect::<Vec<_>>());
                let (x, y) = (p(&a), p(&b));
                let xy = u.multiply(&x, &y);
                prop_assert_eq!(
                    h.coproduct(&xy),
                    h.tensor_mul(&h.coproduct(&x), &h.coproduct(&y))
                );
                prop_assert_eq!(h.counit(&xy), RatField.mul(&h.counit(&x), &h.counit(&y)));
                prop_assert_eq!(
                    h.antipode(&xy),
                    u.multiply(&h.antipode(&y), &h.antipode(&x))
                );
                Ok(())
            })
            .unwrap();
    });
}
