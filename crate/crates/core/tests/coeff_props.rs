use f4quant::coeff::{qbinomial, qbinomial_poly, specialize, CoeffRing, RatFunc2, SpecParams};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Small Laurent polynomials in r, s with integer coefficients.
fn laurent() -> impl Strategy<Value = RatFunc2> {
    prop::collection::vec((-4i64..=4, -3i32..=3, -3i32..=3), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(RatFunc2::zero(), |acc, (c, er, es)| {
                acc.add(&RatFunc2::monomial(c, er, es))
            })
    })
}

/// Quotients of small Laurent polynomials.
fn ratfunc() -> impl Strategy<Value = RatFunc2> {
    (
        laurent(),
        laurent().prop_filter("nonzero", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| n.div(&d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn common_factors_cancel(a in laurent(), b in laurent(), c in laurent()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let lhs = a.mul(&c).div(&b.mul(&c)).unwrap();
        prop_assert_eq!(lhs, a.div(&b).unwrap());
    }

    #[test]
    fn swap_is_an_involutive_automorphism(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.swap_rs().swap_rs(), a.clone());
        prop_assert_eq!(a.mul(&b).swap_rs(), a.swap_rs().mul(&b.swap_rs()));
        prop_assert_eq!(a.add(&b).swap_rs(), a.swap_rs().add(&b.swap_rs()));
    }

    #[test]
    fn specialization_is_a_ring_map(a in laurent(), b in laurent()) {
        let spec = SpecParams::default();
        let ring = spec.ring();
        let (sa, sb) = (specialize(&a, &spec).unwrap(), specialize(&b, &spec).unwrap());
        prop_assert_eq!(specialize(&a.add(&b), &spec).unwrap(), ring.add(&sa, &sb));
        prop_assert_eq!(specialize(&a.mul(&b), &spec).unwrap(), ring.mul(&sa, &sb));
    }

    #[test]
    fn specialization_respects_inverses(a in laurent()) {
        let spec = SpecParams::default();
        let ring = spec.ring();
        let sa = specialize(&a, &spec).unwrap();
        prop_assume!(!ring.is_zero(&sa));
        let inv = specialize(&a.inv().unwrap(), &spec).unwrap();
        prop_assert!(ring.is_one(&ring.mul(&sa, &inv)));
    }

    #[test]
    fn gaussian_pascal_recurrence(m in 1u32..12, n in 0u32..12) {
        prop_assume!(n <= m);
        let t = RatFunc2::r().mul(&RatFunc2::s().inv().unwrap());
        let lhs = qbinomial(m, n, &t).unwrap();
        let upper = if n >= 1 { qbinomial(m - 1, n - 1, &t).unwrap() } else { RatFunc2::zero() };
        let lower = if n < m { qbinomial(m - 1, n, &t).unwrap() } else { RatFunc2::zero() };
        prop_assert_eq!(lhs, upper.add(&t.pow(n as i64).unwrap().mul(&lower)));
    }

    #[test]
    fn gaussian_symmetry_and_classical_limit(m in 0u32..14, n in 0u32..14) {
        prop_assume!(n <= m);
        let p = qbinomial_poly(m, n).unwrap();
        prop_assert_eq!(&p, &qbinomial_poly(m, m - n).unwrap());
        let at_one: BigInt = p.iter().sum();
        let classical = (0..n).fold(BigInt::from(1), |acc, k| acc * (m - k) / (k + 1));
        prop_assert_eq!(at_one, classical);
    }
}
