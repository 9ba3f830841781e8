//! Acceptance criteria, one test each. Every test writes a single
//! `PASS`/`FAIL` line straight to stderr (bypassing libtest capture) and
//! then asserts.

use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use qgg_core::graph::{parse_qgg, CycleType, GainGraph};
use qgg_core::quat::{Quaternion, Rational};
use qgg_core::reduce::{recognize, reduced_graph, Family};
use qgg_core::theorems::{classify, run, write_witnesses, HarnessConfig, Relation, Suite, SuiteReport, VerificationReport};

type G = GainGraph<Rational>;

fn report_line(n: usize, title: &str, ok: bool, elapsed: Duration, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let line = format!("{verdict} criterion {n}: {title} ({:.2?}) {detail}\n", elapsed);
    std::io::stderr().write_all(line.as_bytes()).expect("stderr");
}

fn summary(s: &SuiteReport) -> String {
    let t = s.total();
    format!("[{} passed, {} failed, {} ambiguous]", t.passed, t.failed, t.ambiguous)
}

fn suite(cfg: &HarnessConfig, which: Suite) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let r = run(cfg, &[which]).expect("valid config");
    (r.suites.into_iter().next().expect("one suite"), start.elapsed())
}

fn lipschitz(seed: u64) -> HarnessConfig {
    HarnessConfig { seed, ..Default::default() }
}

#[test]
fn criterion_1_elimination_matches_adjoint() {
    let (s, t) = suite(&lipschitz(1), Suite::Oracle);
    let count = s.total().passed + s.total().failed;
    let ok = s.passed() && count == 200 && t < Duration::from_secs(5);
    report_line(1, "elimination rank equals adjoint rank on 200 matrices", ok, t, &summary(&s));
    assert!(ok, "{s:?}");
}

#[test]
fn criterion_2_path_and_cycle_formulas() {
    let cfg = HarnessConfig { max_n: 12, seed: 7, ..Default::default() };
    let (s, t) = suite(&cfg, Suite::Formulas);
    let paths = &s.checks["path rank"];
    let cycles = &s.checks["cycle rank"];
    // 12 orders of paths, 10 orders x 2 types of cycles, each (samples + 1)
    let ok = s.passed() && paths.passed == 12 * 10 && cycles.passed == 10 * 2 * 11 && t < Duration::from_secs(5);
    report_line(2, "path and cycle rank formulas up to order 12", ok, t, &summary(&s));
    assert!(ok, "{s:?}");
}

fn data(name: &str) -> G {
    let text = match name {
        "k32" => include_str!("../../../data/k32_balanced.qgg"),
        "triangle" => include_str!("../../../data/triangle_with_multiple.qgg"),
        "theta" => include_str!("../../../data/theta111_mixed.qgg"),
        _ => unreachable!(),
    };
    parse_qgg(text).expect("bundled file parses")
}

#[test]
fn criterion_3_worked_examples() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut want = |cond: bool, what: &str| {
        if !cond {
            failures.push(what.to_string());
        }
    };

    let k32 = data("k32");
    let r = classify(&k32).unwrap();
    want(r.girth == Some(4) && r.rank == 2 && r.relation == Relation::GirthMinusTwo, "K(3,2): girth 4, rank 2");
    want(recognize(&k32).unwrap().family == Family::CompleteBipartite(3, 2), "K(3,2) recognized");
    for c in [[0, 3, 1, 4], [0, 3, 2, 4], [1, 3, 2, 4]] {
        want(k32.cycle_gain(&c).unwrap() == Quaternion::one(), "K(3,2) quadrilateral gain 1");
    }

    let tri = data("triangle");
    let red = reduced_graph(&tri);
    let r = classify(&tri).unwrap();
    want(red.kept == vec![0, 1, 3] && red.graph.cycle_type(&[0, 1, 2]).unwrap() == CycleType::Type4, "reduced graph is a Type 4 triangle");
    want(tri.cycle_gain(&[0, 1, 3]).unwrap() == -Quaternion::j(), "triangle 1 2 4 has gain -j");
    want(r.rank == 2 && red.graph.rank() == 2 && r.relation == Relation::GirthMinusOne, "rank 2 = g - 1");

    let th = data("theta");
    let r = classify(&th).unwrap();
    want(recognize(&th).unwrap().has(|f| *f == Family::Theta(1, 1, 1)), "theta(1,1,1) recognized");
    want(th.cycle_gain(&[0, 1, 4, 3]).unwrap() == Quaternion::j(), "quadrilateral 1 2 5 4 has gain j");
    want(th.cycle_gain(&[0, 1, 2, 3]).unwrap() == Quaternion::one(), "quadrilateral 1 2 3 4 has gain 1");
    want(th.cycle_type(&[0, 1, 4, 3]).unwrap() == CycleType::Type2 && th.cycle_type(&[0, 1, 2, 3]).unwrap() == CycleType::Type1, "types 2 and 1");
    want(r.rank == 4 && r.relation == Relation::Girth && r.matched_case.is_some(), "rank 4 = g, classified");

    let t = start.elapsed();
    let ok = failures.is_empty() && t < Duration::from_secs(1);
    report_line(3, "worked examples", ok, t, &format!("{failures:?}"));
    assert!(ok, "{failures:?}");
}

/// The n <= 6 corpus, shared by criteria 4 and 5.
fn corpus() -> &'static (VerificationReport, Duration) {
    static CORPUS: OnceLock<(VerificationReport, Duration)> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let cfg = HarnessConfig { max_n: 6, samples: 10, seed: 1, ..Default::default() };
        let start = Instant::now();
        let r = run(&cfg, &[Suite::GirthBound, Suite::Classifications]).expect("valid config");
        (r, start.elapsed())
    })
}

#[test]
fn criterion_4_girth_bound_corpus() {
    let (r, t) = corpus();
    let s = &r.suites[0];
    let ok = s.suite == Suite::GirthBound && s.passed() && s.total().passed > 0 && *t < Duration::from_secs(120);
    report_line(4, "rank >= g - 2 with equality cases, all graphs on at most 6 vertices", ok, *t, &summary(s));
    assert!(ok, "{:?}", s.falsifications);
}

#[test]
fn criterion_5_classification_corpus() {
    let (r, t) = corpus();
    let s = &r.suites[1];
    let have = |k: &str| s.checks.get(k).is_some_and(|v| v.passed > 0);
    let ok = s.suite == Suite::Classifications
        && s.passed()
        && ["rank 2", "rank = g-1", "rank = g, g = 3", "rank = g, g >= 5"].iter().all(|k| have(k));
    report_line(
        5,
        "rank 2, rank g-1, girth 3 and girth >= 5 characterizations on the corpus",
        ok,
        *t,
        &format!("{} unmatched girth-4 rank-4 graphs logged", s.total().unmatched),
    );
    assert!(ok, "{:?}", s.falsifications);
}

#[test]
fn criterion_6_tables() {
    let (s, t) = suite(&lipschitz(1), Suite::Tables);
    let ok = s.passed()
        && s.checks["conforming gains give the tabulated rank"].passed > 0
        && s.checks["nonconforming gains give another rank"].passed > 0
        && s.checks["all-Type-1 instance rank"].passed == 3
        && t < Duration::from_secs(10);
    report_line(6, "tabulated bicyclic ranks and all-Type-1 instances", ok, t, &summary(&s));
    assert!(ok, "{:?}", s.falsifications);
}

#[test]
fn criterion_7_reductions() {
    let (s, t) = suite(&lipschitz(1), Suite::Reductions);
    let ok = s.passed() && s.checks["switching keeps rank"].passed == 5000 && t < Duration::from_secs(30);
    report_line(7, "pendant pairs, twins, reduced graph and switching keep rank", ok, t, &summary(&s));
    assert!(ok, "{:?}", s.falsifications);
}

#[test]
fn criterion_8_k4_sampling() {
    let start = Instant::now();
    let cfg = lipschitz(1);
    let r = run(&cfg, &[Suite::K4]).expect("valid config");
    let t = start.elapsed();
    let s = &r.suites[0];
    let mut detail = summary(s);
    if !r.passed {
        let dir = std::env::temp_dir().join("qgg-k4-witnesses");
        std::fs::create_dir_all(&dir).expect("witness dir");
        let files = write_witnesses(&r, &dir).expect("witnesses written");
        detail += &format!(" witnesses in {} ({} files)", dir.display(), files.len());
    }
    let ok = r.passed && s.total().passed == 1000;
    report_line(8, "K4 has rank 4 on 500 Lipschitz and 500 uniform samples", ok, t, &detail);
    assert!(ok, "{:?}", s.falsifications);
}

#[test]
fn criterion_9_canonical_unicyclic() {
    let (s, t) = suite(&lipschitz(1), Suite::Unicyclic);
    let ok = s.passed() && s.checks["canonical unicyclic rank g + k"].passed == 50;
    report_line(9, "canonical unicyclic rank g + k on 50 instances", ok, t, &summary(&s));
    assert!(ok, "{:?}", s.falsifications);
}
