use super::*;
use crate::coeff::{parse_ratfunc, RatField, RatFunc2};
use crate::fullu::Gen;
use crate::pbwplus::{build_straightening_table, Truncation};

fn with_hopf<T: Send>(f: impl FnOnce(&Hopf<'_, RatField>) -> T + Send) -> T {
    crate::run_with_stack(|| {
        let table = build_straightening_table().unwrap();
        let alg = UAlgebra::new(RatField, &table, Truncation::None).unwrap();
        f(&Hopf::new(&alg))
    })
}

#[test]
fn coproduct_of_e1() {
    with_hopf(|h| {
        let u = h.alg();
        let e1 = u.gen(Gen::E(1));
        let mut rhs = h.tensor(&e1, &u.one());
        rhs.add_assign(&RatField, &h.tensor(&u.gen(Gen::W(1, 1)), &e1));
        assert_eq!(h.coproduct(&e1), rhs);
    });
}

#[test]
fn antipode_of_f2() {
    with_hopf(|h| {
        let u = h.alg();
        let rhs = u
            .multiply(&u.gen(Gen::F(2)), &u.gen(Gen::Wp(2, -1)))
            .neg(&RatField);
        assert_eq!(h.antipode(&u.gen(Gen::F(2))), rhs);
    });
}

#[test]
fn coproduct_of_e12() {
    with_hopf(|h| {
        assert!(length_two_coproduct_check(h, 1));
        assert!(length_two_coproduct_check(h, 2));
        assert!(length_two_coproduct_check(h, 3));
    });
}

#[test]
fn axioms_on_generators() {
    with_hopf(|h| {
        for g in Gen::all_generators() {
            let x = h.alg().gen(g);
            assert_eq!(h.axioms_hold(&x), Ok(()), "{g}");
        }
    });
}

#[test]
fn adjoint_of_group_is_conjugation() {
    with_hopf(|h| {
        let u = h.alg();
        let lhs = h.adjoint(Side::Left, &u.gen(Gen::W(1, 1)), &u.gen(Gen::E(2)));
        let a12 = RatFunc2::monomial(1, 0, 2);
        assert_eq!(lhs, u.scale(&u.gen(Gen::E(2)), &a12));
    });
}

#[test]
fn character_action_on_e() {
    with_hopf(|h| {
        let u = h.alg();
        let ring = &RatField;
        let delta = half_character(ring);
        for k in 1..=4 {
            let e = u.gen(Gen::E(k));
            assert_eq!(h.character_act(Side::Left, &Character::counit(ring), &e), e);
            assert_eq!(
                h.character_act(Side::Right, &Character::counit(ring), &e),
                e
            );
            let w = u.gen(Gen::W(k, 1));
            let dk = delta.values[k - 1].clone();
            assert_eq!(h.character_act(Side::Left, &delta, &w), u.scale(&w, &dk));
            assert_eq!(h.character_act(Side::Right, &delta, &e), u.scale(&e, &dk));
        }
    });
}

#[test]
fn e1_f1_inverse_pairing_scalar() {
    let v = parse_ratfunc("1/(s^2 - r^2)").unwrap();
    let s = SkewPairing::new(RatField, Convention::Primary);
    assert_eq!(s.pair_words(&[Letter::F(1)], &[Letter::E(1)]), v);
}
