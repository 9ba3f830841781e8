//! `K_4` keeps rank 4 under Lipschitz gains but not under all Hurwitz
//! gains. The harness finds the counterexamples; this pins one down.

use qgg_core::graph::GainGraph;
use qgg_core::qlinalg::{rank_via_adjoint, left_row_rank_eliminate};
use qgg_core::quat::{GainSet, Quaternion, Rational};
use qgg_core::theorems::{classify, run, HarnessConfig, Suite, Theorem};

type Q = Quaternion<Rational>;

fn half(a: i64, b: i64, c: i64, d: i64) -> Q {
    let h = |x| Rational::new(x, 2);
    Q::new(h(a), h(b), h(c), h(d))
}

#[test]
fn k4_with_hurwitz_gains_can_have_rank_three() {
    let one = Q::one();
    let g = GainGraph::from_edges(
        4,
        [(0, 1, one.clone()), (0, 2, one.clone()), (0, 3, one), (1, 2, -Q::one()), (1, 3, half(-1, 1, -1, -1)), (2, 3, half(-1, -1, -1, -1))],
    )
    .unwrap();
    let a = g.adjacency_matrix();
    assert_eq!(left_row_rank_eliminate(&a).rank, 3);
    assert_eq!(rank_via_adjoint(&a).unwrap().rank, 3);
    // rank 3 = g with no Type 3 triangle case behind it
    let r = classify(&g).unwrap();
    let girth_three = r.check(Theorem::GirthThree).unwrap();
    assert!(girth_three.rank_condition && girth_three.cases.is_empty() && !girth_three.ok);
}

#[test]
fn hurwitz_probe_reports_the_failures() {
    let cfg = HarnessConfig { gain_set: GainSet::Hurwitz, ..Default::default() };
    let r = run(&cfg, &[Suite::K4]).unwrap();
    let s = &r.suites[0];
    assert!(!r.passed);
    assert_eq!(s.checks["K4 rank 4, Lipschitz gains"].failed, 0);
    assert_eq!(s.checks["K4 rank 4, all Hurwitz gains up to switching"].failed, 720);
    assert!(!s.falsifications.is_empty());
}
