use f4quant::coeff::{parse_ratfunc, RatFunc2};
use f4quant::pbwplus::{build_straightening_table, mono_from_factors, render_rule};
use std::time::Instant;

#[test]
fn builds_full_table() {
    let t0 = Instant::now();
    let table = build_straightening_table().expect("table build");
    eprintln!("built in {:?}", t0.elapsed());
    assert_eq!(table.len(), 276);
    for i in 1..24 {
        assert!(
            table.rule(i, i + 1).correction.is_zero(),
            "{}",
            render_rule(table.rule(i, i + 1))
        );
    }
    let r = table.rule(16, 18);
    assert_eq!(r.correction.len(), 1);
    assert_eq!(
        r.correction.coeff(&mono_from_factors(&[17, 17])).unwrap(),
        &parse_ratfunc("r^2 - r*s").unwrap()
    );
    let r = table.rule(18, 24);
    assert_eq!(
        r.correction.coeff(&mono_from_factors(&[20])).unwrap(),
        &RatFunc2::r().add(&RatFunc2::s())
    );
    for r in table.rules() {
        if !r.correction.is_empty() && r.j - r.i < 4 {
            eprintln!("{}", render_rule(r));
        }
    }
}
