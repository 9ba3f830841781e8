//! Seeded verification suites: an exhaustive corpus of small labelled
//! graphs plus constructed families.
//!
//! Every graph in the corpus gets its own ChaCha stream keyed by
//! `(seed, n, mask)`, so results do not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::classify::{classify, Theorem};
use super::families::{self, set_cycle_gain, type_one_instances};
use super::formulas::{canonical_unicyclic_rank, cycle_attachment_rank, cycle_rank, path_rank};
use super::tables::{predict_pendant_bicyclic, predict_pendant_free_bicyclic, table_rows, TableShape};
use crate::error::{Error, Result};
use crate::graph::{classify_gain, CycleType, GainGraph, SwitchingFunction};
use crate::qlinalg::{left_row_rank_eliminate_tol, rank_via_adjoint_tol, QMatrix, DEFAULT_TOL};
use crate::quat::{hurwitz_units, lipschitz_units, sample_from_set, sample_uniform_unit, GainSet, Quaternion, Rational, Scalar};
use crate::reduce::{recognize, reduced_graph, remove_pendant_twins, trim_pendant_pairs, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Elimination rank against the complex adjoint rank.
    Oracle,
    /// Path, cycle and cycle-attachment rank formulas.
    Formulas,
    /// Lower bound `rank >= g - 2` and its equality cases over the corpus.
    GirthBound,
    /// The remaining rank characterizations over the corpus.
    Classifications,
    /// Tabulated bicyclic shapes and the all-Type-1 instances.
    Tables,
    /// Rank invariance of pendant trimming, twin removal, reduction, switching.
    Reductions,
    /// Rank of `K_4` under sampled gains.
    K4,
    /// `g + k` for canonical unicyclic graphs.
    Unicyclic,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Oracle, Suite::Formulas, Suite::GirthBound, Suite::Classifications, Suite::Tables, Suite::Reductions, Suite::K4, Suite::Unicyclic];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Formulas => "formulas",
            Suite::GirthBound => "girth-bound",
            Suite::Classifications => "classifications",
            Suite::Tables => "tables",
            Suite::Reductions => "reductions",
            Suite::K4 => "k4",
            Suite::Unicyclic => "unicyclic",
        }
    }

    /// Runs over the exhaustive corpus of small graphs.
    pub fn uses_corpus(self) -> bool {
        matches!(self, Suite::GirthBound | Suite::Classifications)
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Self::ALL.to_vec());
        }
        Self::ALL.into_iter().find(|s| s.name() == name).map(|s| vec![s])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HarnessConfig {
    /// Largest corpus order.
    pub max_n: usize,
    /// Gain assignments per corpus graph.
    pub samples: usize,
    pub seed: u64,
    pub gain_set: GainSet,
    /// Relative tolerance for float ranks.
    pub tol: f64,
    /// Worker cap; falls back to `QGG_THREADS`, then to rayon's default.
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig { max_n: 6, samples: 10, seed: 1, gain_set: GainSet::Lipschitz, tol: DEFAULT_TOL, threads: None }
    }
}

/// Largest corpus order accepted; 2^28 masks at this size.
pub const MAX_CORPUS_N: usize = 8;

impl HarnessConfig {
    /// The order cap only applies when a corpus suite is requested.
    pub fn validate(&self, suites: &[Suite]) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.max_n == 0 {
            return bad("max-n must be positive".into());
        }
        if suites.iter().any(|s| s.uses_corpus()) && self.max_n > MAX_CORPUS_N {
            return bad(format!("max-n must lie in 1..={MAX_CORPUS_N}"));
        }
        if self.samples == 0 {
            return bad("samples must be positive".into());
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return bad("tol must lie in (0, 1)".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    /// Float decisions in the ambiguous band, counted but not judged.
    pub ambiguous: u64,
    /// Sufficient-only statements: rank condition met, no listed case.
    pub unmatched: u64,
}

impl Tally {
    fn merge(&mut self, o: &Tally) {
        self.passed += o.passed;
        self.failed += o.failed;
        self.ambiguous += o.ambiguous;
        self.unmatched += o.unmatched;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Falsification {
    pub check: String,
    pub detail: String,
    /// The offending graph in qgg v1 format.
    pub graph: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: BTreeMap<String, Tally>,
    pub falsifications: Vec<Falsification>,
    /// Graphs logged as data (unmatched sufficient-only cases).
    pub logged: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite, checks: BTreeMap::new(), falsifications: Vec::new(), logged: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }

    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for v in self.checks.values() {
            t.merge(v);
        }
        t
    }

    fn record<S: Scalar>(&mut self, check: &str, ok: bool, g: &GainGraph<S>, detail: impl FnOnce() -> String) {
        let t = self.checks.entry(check.to_string()).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if self.falsifications.len() < MAX_WITNESSES {
                self.falsifications.push(Falsification { check: check.into(), detail: detail(), graph: g.to_qgg() });
            }
        }
    }

    fn ambiguous(&mut self, check: &str) {
        self.checks.entry(check.to_string()).or_default().ambiguous += 1;
    }

    fn absorb(&mut self, o: SuiteReport) {
        for (k, v) in o.checks {
            self.checks.entry(k).or_default().merge(&v);
        }
        let room = MAX_WITNESSES.saturating_sub(self.falsifications.len());
        self.falsifications.extend(o.falsifications.into_iter().take(room));
        let room = MAX_LOGGED.saturating_sub(self.logged.len());
        self.logged.extend(o.logged.into_iter().take(room));
    }
}

const MAX_WITNESSES: usize = 50;
const MAX_LOGGED: usize = 50;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub config: HarnessConfig,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

/// Runs the requested suites in order.
pub fn run(config: &HarnessConfig, suites: &[Suite]) -> Result<VerificationReport> {
    config.validate(suites)?;
    let threads = config.threads.or_else(|| std::env::var("QGG_THREADS").ok().and_then(|v| v.parse().ok()));
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads.filter(|&t| t > 0) {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let mut wanted: Vec<Suite> = suites.to_vec();
    wanted.sort();
    wanted.dedup();
    let needs_corpus = wanted.iter().any(|s| s.uses_corpus());
    let corpus = if needs_corpus { Some(pool.install(|| run_corpus(config))) } else { None };
    let mut out = Vec::new();
    for s in wanted {
        let report = match s {
            Suite::Oracle => oracle_suite(config),
            Suite::Formulas => formulas_suite(config),
            Suite::GirthBound => split_corpus(corpus.as_ref().expect("corpus"), s, |k| k == Theorem::GirthBound.label()),
            Suite::Classifications => split_corpus(corpus.as_ref().expect("corpus"), s, |k| k != Theorem::GirthBound.label()),
            Suite::Tables => tables_suite(config),
            Suite::Reductions => reductions_suite(config),
            Suite::K4 => k4_suite(config),
            Suite::Unicyclic => unicyclic_suite(config),
        };
        out.push(report);
    }
    let passed = out.iter().all(SuiteReport::passed);
    Ok(VerificationReport { config: config.clone(), suites: out, passed })
}

/// Writes each falsification to `dir` under a content-hash name.
pub fn write_witnesses(report: &VerificationReport, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for s in &report.suites {
        for f in &s.falsifications {
            let (header, body) = f.graph.split_once('\n').unwrap_or((&f.graph, ""));
            let text = format!("{header}\n# suite {}: {}\n# {}\n{body}", s.suite, f.check, f.detail.replace('\n', " "));
            let digest = hex::encode(Sha256::digest(text.as_bytes()));
            let path = dir.join(format!("witness-{}.qgg", &digest[..16]));
            std::fs::write(&path, text)?;
            paths.push(path);
        }
    }
    Ok(paths)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Exact gains for finite sets, floats for the uniform set.
enum Gains {
    Exact(Vec<Quaternion<Rational>>),
    Uniform,
}

impl Gains {
    fn of(set: GainSet) -> Gains {
        match set {
            GainSet::Lipschitz => Gains::Exact(lipschitz_units()),
            GainSet::Hurwitz => Gains::Exact(hurwitz_units()),
            GainSet::Uniform => Gains::Uniform,
        }
    }
}

fn random_graph<R: Rng>(n: usize, edges: &[(usize, usize)], set: &[Quaternion<Rational>], rng: &mut R) -> GainGraph<Rational> {
    GainGraph::from_edges(n, edges.iter().map(|&(u, v)| (u, v, sample_from_set(set, rng)))).expect("simple edges")
}

fn random_float_graph<R: Rng>(n: usize, edges: &[(usize, usize)], rng: &mut R) -> GainGraph<f64> {
    GainGraph::from_edges(n, edges.iter().map(|&(u, v)| (u, v, sample_uniform_unit(rng)))).expect("simple edges")
}

// ---------------------------------------------------------------- corpus

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    let mut adj = [0u16; MAX_CORPUS_N];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let all: u16 = ((1u32 << n) - 1) as u16;
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next = 0;
        for v in 0..n {
            if frontier >> v & 1 == 1 {
                next |= adj[v];
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

const UNIT: u64 = 1 << 11;

fn run_corpus(cfg: &HarnessConfig) -> SuiteReport {
    let mut units = Vec::new();
    for n in 1..=cfg.max_n {
        let total = 1u64 << (n * (n - 1) / 2);
        let mut lo = 0;
        while lo < total {
            units.push((n, lo, (lo + UNIT).min(total)));
            lo += UNIT;
        }
    }
    let gains = Gains::of(cfg.gain_set);
    let parts: Vec<SuiteReport> = units.par_iter().map(|&(n, lo, hi)| corpus_unit(cfg, &gains, n, lo, hi)).collect();
    let mut all = SuiteReport::new(Suite::Classifications);
    let (mut graphs, mut samples) = (0u64, 0u64);
    for p in parts {
        for note in &p.notes {
            // per-unit counters travel as notes "graphs=<g> samples=<s>"
            let mut it = note.split_whitespace().filter_map(|kv| kv.split_once('=')).map(|(_, v)| v.parse::<u64>().unwrap_or(0));
            graphs += it.next().unwrap_or(0);
            samples += it.next().unwrap_or(0);
        }
        all.absorb(p);
    }
    all.notes.push(format!(
        "corpus: {graphs} connected labelled graphs on 1..={} vertices, {samples} gain samples, gain set {:?}, seed {}",
        cfg.max_n, cfg.gain_set, cfg.seed
    ));
    all
}

fn corpus_unit(cfg: &HarnessConfig, gains: &Gains, n: usize, lo: u64, hi: u64) -> SuiteReport {
    let pairs = pairs(n);
    let mut rep = SuiteReport::new(Suite::Classifications);
    let (mut graphs, mut samples) = (0u64, 0u64);
    for mask in lo..hi {
        if !connected(n, mask, &pairs) {
            continue;
        }
        graphs += 1;
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let mut rng = rng_for(cfg.seed, (n as u64) << 48 | mask);
        for _ in 0..cfg.samples {
            samples += 1;
            match gains {
                Gains::Exact(set) => corpus_sample(&mut rep, &random_graph(n, &edges, set, &mut rng)),
                Gains::Uniform => corpus_sample(&mut rep, &random_float_graph(n, &edges, &mut rng)),
            }
        }
    }
    rep.notes.push(format!("graphs={graphs} samples={samples}"));
    rep
}

fn corpus_sample<S: Scalar>(rep: &mut SuiteReport, g: &GainGraph<S>) {
    let report = classify(g).expect("corpus graphs are connected");
    for c in &report.checks {
        let key = c.theorem.label();
        if report.ambiguous {
            rep.ambiguous(key);
            continue;
        }
        rep.record(key, c.ok, g, || {
            format!("rank {} girth {:?} relation {} cases {:?}", report.rank, report.girth, report.relation, c.cases)
        });
        if c.unmatched() {
            rep.checks.get_mut(key).expect("just recorded").unmatched += 1;
            if rep.logged.len() < MAX_LOGGED {
                rep.logged.push(g.to_qgg());
            }
        }
    }
}

fn split_corpus(corpus: &SuiteReport, suite: Suite, keep: impl Fn(&str) -> bool) -> SuiteReport {
    let mut out = SuiteReport::new(suite);
    out.checks = corpus.checks.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect();
    out.falsifications = corpus.falsifications.iter().filter(|f| keep(&f.check)).cloned().collect();
    if suite == Suite::Classifications {
        out.logged = corpus.logged.clone();
    }
    out.notes = corpus.notes.clone();
    out
}

// ---------------------------------------------------------------- oracle

fn oracle_suite(cfg: &HarnessConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Oracle);
    let mut rng = rng_for(cfg.seed, 1);
    let count = 200;
    for i in 0..count {
        let (m, n) = (rng.random_range(0..=10), rng.random_range(0..=10));
        match Gains::of(cfg.gain_set) {
            Gains::Exact(set) => {
                let a = random_matrix(m, n, i % 3 == 0, &mut rng, |r| sample_from_set(&set, r));
                oracle_check(&mut rep, &a, cfg.tol);
            }
            Gains::Uniform => {
                let a = random_matrix(m, n, i % 3 == 0, &mut rng, sample_uniform_unit);
                oracle_check(&mut rep, &a, cfg.tol);
            }
        }
    }
    rep.notes.push(format!("{count} random matrices up to 10x10; a third are products of thinner factors"));
    rep
}

/// Random entries (some zero), or a product `B C` through a random inner
/// dimension to force rank deficiency.
fn random_matrix<S: Scalar, R: Rng>(m: usize, n: usize, product: bool, rng: &mut R, mut draw: impl FnMut(&mut R) -> Quaternion<S>) -> QMatrix<S> {
    let mut fill = |rows: usize, cols: usize, rng: &mut R| {
        let zero_p = rng.random_range(0.0..0.7);
        let rows: Vec<Vec<Quaternion<S>>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.random_bool(zero_p) { Quaternion::zero() } else { draw(rng) }).collect())
            .collect();
        rows
    };
    if !product || m == 0 || n == 0 {
        let rows = fill(m, n, rng);
        return if rows.is_empty() { QMatrix::zeros(0, n) } else { QMatrix::from_rows(rows) };
    }
    let k = rng.random_range(1..=m.min(n));
    let b = fill(m, k, rng);
    let c = fill(k, n, rng);
    let rows = (0..m)
        .map(|i| (0..n).map(|j| (0..k).fold(Quaternion::zero(), |acc, t| acc.add_ref(&b[i][t].mul_ref(&c[t][j])))).collect())
        .collect();
    QMatrix::from_rows(rows)
}

fn oracle_check<S: Scalar>(rep: &mut SuiteReport, a: &QMatrix<S>, tol: f64) {
    let e = left_row_rank_eliminate_tol(a, tol).rank;
    let check = "elimination rank equals adjoint rank";
    match rank_via_adjoint_tol(a, tol) {
        Ok(r) => {
            let t = rep.checks.entry(check.into()).or_default();
            if r.rank == e {
                t.passed += 1;
            } else {
                t.failed += 1;
                rep.falsifications.push(Falsification {
                    check: check.into(),
                    detail: format!("elimination {e}, adjoint {}", r.rank),
                    graph: format!("{a}"),
                });
            }
        }
        Err(err) => {
            rep.checks.entry(check.into()).or_default().failed += 1;
            rep.falsifications.push(Falsification { check: check.into(), detail: err.to_string(), graph: format!("{a}") });
        }
    }
}

// ---------------------------------------------------------------- formulas

/// Formula suites always reach at least this order; they are cheap.
pub const FORMULA_MIN_N: usize = 12;

/// A unit giving an `n`-cycle type `ty` when placed as the whole cycle gain.
fn random_target<R: Rng>(ty: CycleType, n: usize, set: &[Quaternion<Rational>], rng: &mut R) -> Quaternion<Rational> {
    let fits: Vec<Quaternion<Rational>> = set.iter().filter(|q| classify_gain(n, (*q).clone()).ty == ty).cloned().collect();
    if fits.is_empty() {
        ty.representative_gain(n).expect("admissible type")
    } else {
        sample_from_set(&fits, rng)
    }
}

fn random_switch<R: Rng>(g: &GainGraph<Rational>, set: &[Quaternion<Rational>], rng: &mut R) -> GainGraph<Rational> {
    let xi = SwitchingFunction::new((0..g.order()).map(|_| sample_from_set(set, rng)).collect()).expect("unit values");
    g.switch(&xi)
}

fn exact_set(cfg: &HarnessConfig) -> Vec<Quaternion<Rational>> {
    match cfg.gain_set {
        GainSet::Hurwitz => hurwitz_units(),
        _ => lipschitz_units(),
    }
}

fn formulas_suite(cfg: &HarnessConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Formulas);
    let mut rng = rng_for(cfg.seed, 2);
    let set = exact_set(cfg);
    let top = cfg.max_n.max(FORMULA_MIN_N);
    for n in 1..=top {
        for _ in 0..cfg.samples {
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            let g = random_graph(n, &e, &set, &mut rng);
            let want = path_rank(n);
            rep.record("path rank", g.rank() == want, &g, || format!("P{n}: expected {want}"));
        }
    }
    for n in 3..=top {
        let cyc: Vec<usize> = (0..n).collect();
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for ty in CycleType::for_length(n) {
            let want = cycle_rank(n, ty).expect("admissible");
            // the representative construction, then switched
            let mut g = families::cycle::<Rational>(n);
            g.set_gain(n - 1, 0, ty.representative_gain(n).expect("admissible")).expect("edge");
            let g = random_switch(&g, &set, &mut rng);
            rep.record("cycle rank", g.cycle_type(&cyc) == Ok(ty) && g.rank() == want, &g, || format!("C{n} {ty}: expected {want}"));
            for _ in 0..cfg.samples {
                let mut g = random_graph(n, &e, &set, &mut rng);
                let at = rng.random_range(0..n);
                set_cycle_gain(&mut g, &cyc, at, &random_target(ty, n, &set, &mut rng)).expect("cycle");
                rep.record("cycle rank", g.cycle_type(&cyc) == Ok(ty) && g.rank() == want, &g, || format!("C{n} {ty}: expected {want}"));
            }
        }
    }
    for _ in 0..cfg.samples * 20 {
        attachment_instance(&mut rep, &set, &mut rng);
    }
    rep.notes.push(format!("paths and cycles up to order {top}"));
    rep
}

/// A random connected graph on `m` vertices: a random tree plus extra edges.
fn random_connected_edges<R: Rng>(m: usize, extra_p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = (1..m).map(|v| (rng.random_range(0..v), v)).collect();
    for u in 0..m {
        for v in u + 1..m {
            if !e.contains(&(u, v)) && rng.random_bool(extra_p) {
                e.push((u, v));
            }
        }
    }
    e
}

fn attachment_instance<R: Rng>(rep: &mut SuiteReport, set: &[Quaternion<Rational>], rng: &mut R) {
    let m = rng.random_range(1..=5);
    let n = rng.random_range(3..=8);
    let ty = CycleType::for_length(n)[rng.random_range(0..2)];
    let e1 = random_connected_edges(m, 0.3, rng);
    let g1 = random_graph(m, &e1, set, rng);
    let u = rng.random_range(0..m);
    let r1 = g1.rank();
    let r2 = g1.delete_vertices(&[u]).expect("in range").0.rank();
    // cycle u, m, m+1, ..., m+n-2
    let cyc: Vec<usize> = std::iter::once(u).chain(m..m + n - 1).collect();
    let mut edges: Vec<(usize, usize, Quaternion<Rational>)> = g1.edges().map(|(a, b, q)| (a, b, q.clone())).collect();
    for i in 0..n {
        edges.push((cyc[i], cyc[(i + 1) % n], sample_from_set(set, rng)));
    }
    let mut g = GainGraph::from_edges(m + n - 1, edges).expect("simple");
    set_cycle_gain(&mut g, &cyc, rng.random_range(0..n), &random_target(ty, n, set, rng)).expect("cycle");
    let predicted = cycle_attachment_rank(n, ty, r1, r2).expect("admissible");
    let rank = g.rank();
    let key = if ty == CycleType::Type3 { "cycle attachment, Type 3 interval" } else { "cycle attachment" };
    rep.record(key, predicted.contains(rank), &g, || format!("C{n} {ty} on vertex {u}: predicted {predicted}, rank {rank}"));
}

// ---------------------------------------------------------------- tables

fn tables_suite(cfg: &HarnessConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Tables);
    let mut rng = rng_for(cfg.seed, 3);
    let set = exact_set(cfg);
    let mut vacuous = Vec::new();
    for row in table_rows() {
        let g = row.conforming_graph().expect("constructible");
        let g = random_switch(&g, &set, &mut rng);
        let predicted = if row.shape.has_pendants() { predict_pendant_bicyclic(&g) } else { predict_pendant_free_bicyclic(&g) }
            .map(|p| p.predicted.to_string())
            .unwrap_or_else(|e| e.to_string());
        let rank = g.rank();
        rep.record("conforming gains give the tabulated rank", rank == row.rank && predicted == row.rank.to_string(), &g, || {
            format!("{} row {}: rank {rank}, predicted {predicted}", row.shape, row.rank)
        });
        match row.nonconforming_graph().expect("constructible") {
            Some(bad) => {
                let r = bad.rank();
                rep.record("nonconforming gains give another rank", r != row.rank, &bad, || {
                    format!("{} row {}: nonconforming rank {r}", row.shape, row.rank)
                });
            }
            None => vacuous.push(row.shape.to_string()),
        }
    }
    rep.notes.push(format!("every gain conforms for: {}", vacuous.join("; ")));

    // random gains: prediction must admit the computed rank
    let gains = Gains::of(cfg.gain_set);
    for shape in TableShape::all() {
        for _ in 0..cfg.samples * 10 {
            match &gains {
                Gains::Exact(set) => shape_sample(&mut rep, shape, &random_graph(shape.order(), &shape.edges(), set, &mut rng)),
                Gains::Uniform => shape_sample(&mut rep, shape, &random_float_graph(shape.order(), &shape.edges(), &mut rng)),
            }
        }
    }

    for (name, g, want) in type_one_instances() {
        let all_one = g.simple_cycles().iter().all(|c| g.cycle_type(c) == Ok(CycleType::Type1));
        let rank = g.rank();
        rep.record("all-Type-1 instance rank", all_one && rank == want, &g, || format!("{name}: rank {rank}, expected {want}"));
        for _ in 0..cfg.samples * 10 {
            let h = match &gains {
                Gains::Exact(set) => random_graph(g.order(), &g.edge_list(), set, &mut rng),
                Gains::Uniform => random_graph(g.order(), &g.edge_list(), &lipschitz_units(), &mut rng),
            };
            let report = classify(&h).expect("connected");
            let c = report.check(Theorem::LongGirth).expect("girth >= 5");
            rep.record("all-Type-1 instance iff", c.ok, &h, || format!("{name}: rank {} cases {:?}", report.rank, c.cases));
        }
    }
    rep
}

fn shape_sample<S: Scalar>(rep: &mut SuiteReport, shape: TableShape, g: &GainGraph<S>) {
    let p = if shape.has_pendants() { predict_pendant_bicyclic(g) } else { predict_pendant_free_bicyclic(g) }.expect("shape");
    let key = if shape.has_pendants() { "pendant shapes, random gains" } else { "pendant-free shapes, random gains" };
    if p.ambiguous {
        rep.ambiguous(key);
        return;
    }
    let rank = g.rank();
    rep.record(key, p.shape == Some(shape) && p.predicted.admits(rank), g, || format!("{shape}: predicted {}, rank {rank}", p.predicted));
}

// ---------------------------------------------------------------- reductions

fn reductions_suite(cfg: &HarnessConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Reductions);
    let mut rng = rng_for(cfg.seed, 4);
    let set = exact_set(cfg);
    let count = 100;
    for _ in 0..count {
        let g = reduction_graph(&set, &mut rng);
        let rank = g.rank();
        let trim = trim_pendant_pairs(&g);
        let tr = trim.reduction.graph.rank();
        rep.record("pendant pairs: rank = rank(trimmed) + 2 pairs", rank == tr + 2 * trim.pairs, &g, || {
            format!("rank {rank}, trimmed {tr}, pairs {}", trim.pairs)
        });
        let tw = remove_pendant_twins(&g).graph.rank();
        rep.record("pendant twin removal keeps rank", tw == rank, &g, || format!("rank {rank}, after {tw}"));
        let red = reduced_graph(&g);
        let rr = red.graph.rank();
        rep.record("reduced graph keeps rank", rr == rank, &g, || format!("rank {rank}, reduced {rr}"));
        for _ in 0..50 {
            let s = random_switch(&g, &set, &mut rng).rank();
            rep.record("switching keeps rank", s == rank, &g, || format!("rank {rank}, switched {s}"));
        }
    }
    rep.notes.push(format!("{count} random graphs on at most 10 vertices, 50 switchings each"));
    rep
}

/// A random graph with pendant vertices, twins and left-proportional
/// duplicates planted so that every reduction has something to do.
fn reduction_graph<R: Rng>(set: &[Quaternion<Rational>], rng: &mut R) -> GainGraph<Rational> {
    let base = rng.random_range(2..=6);
    let e = random_connected_edges(base, rng.random_range(0.1..0.6), rng);
    let mut edges: Vec<(usize, usize, Quaternion<Rational>)> = e.iter().map(|&(u, v)| (u, v, sample_from_set(set, rng))).collect();
    let mut n = base;
    while n < 10 && rng.random_bool(0.7) {
        let v = rng.random_range(0..n);
        if rng.random_bool(0.5) {
            edges.push((v, n, sample_from_set(set, rng)));
        } else {
            // duplicate v: same neighbors, row left-multiplied by a unit
            let k = sample_from_set(set, rng);
            let row: Vec<(usize, Quaternion<Rational>)> = edges
                .iter()
                .filter_map(|(a, b, q)| {
                    if *a == v {
                        Some((*b, q.clone()))
                    } else if *b == v {
                        Some((*a, q.conj()))
                    } else {
                        None
                    }
                })
                .collect();
            if row.is_empty() {
                continue;
            }
            for (w, q) in row {
                edges.push((n, w, k.mul_ref(&q)));
            }
        }
        n += 1;
    }
    GainGraph::from_edges(n, edges).expect("simple")
}

// ---------------------------------------------------------------- K4

/// Samples per gain family in the `K_4` suite.
pub const K4_SAMPLES: usize = 500;

fn k4_suite(cfg: &HarnessConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::K4);
    let mut rng = rng_for(cfg.seed, 5);
    let e = families::complete::<Rational>(4).edge_list();
    let lip = lipschitz_units();
    for _ in 0..K4_SAMPLES {
        let g = random_graph(4, &e, &lip, &mut rng);
        rep.record("K4 rank 4, Lipschitz gains", g.rank() == 4, &g, || format!("rank {}", g.rank()));
    }
    for _ in 0..K4_SAMPLES {
        let g = random_float_graph(4, &e, &mut rng);
        let r = left_row_rank_eliminate_tol(&g.adjacency_matrix(), cfg.tol).rank;
        rep.record("K4 rank 4, uniform gains", r == 4, &g, || format!("rank {r}"));
    }
    if cfg.gain_set == GainSet::Hurwitz {
        // switching puts gain 1 on the star at vertex 0; the three
        // remaining gains range over all Hurwitz units
        let h = hurwitz_units::<Rational>();
        let mut found = 0;
        for a in &h {
            for b in &h {
                for c in &h {
                    let one = Quaternion::one();
                    let g = GainGraph::from_edges(
                        4,
                        [(0, 1, one.clone()), (0, 2, one.clone()), (0, 3, one), (1, 2, a.clone()), (1, 3, b.clone()), (2, 3, c.clone())],
                    )
                    .expect("K4");
                    let r = g.rank();
                    found += usize::from(r != 4);
                    rep.record("K4 rank 4, all Hurwitz gains up to switching", r == 4, &g, || format!("rank {r}"));
                }
            }
        }
        rep.notes.push(format!("{found} of {} switching classes of Hurwitz K4 have rank other than 4", h.len().pow(3)));
    }
    rep
}

// ---------------------------------------------------------------- unicyclic

/// Canonical unicyclic instances in the suite.
pub const UNICYCLIC_INSTANCES: usize = 50;

fn unicyclic_suite(cfg: &HarnessConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Unicyclic);
    let mut rng = rng_for(cfg.seed, 6);
    let set = exact_set(cfg);
    for i in 0..UNICYCLIC_INSTANCES {
        let g = 3 + i % 6;
        let t = rng.random_range(1..=g);
        let mut positions: Vec<usize> = (0..g).collect();
        for j in (1..g).rev() {
            positions.swap(j, rng.random_range(0..=j));
        }
        positions.truncate(t);
        positions.sort_unstable();
        let stars: Vec<(usize, usize)> = positions.iter().map(|&p| (p, rng.random_range(1..=3))).collect();
        let shape = families::canonical_unicyclic::<Rational>(g, &stars);
        let graph = random_graph(shape.order(), &shape.edge_list(), &set, &mut rng);
        // gaps between consecutive starred positions, wrapping around
        let k = (0..t).filter(|&j| (positions[(j + 1) % t] + g - positions[j] - 1) % g % 2 == 0).count();
        let recognized = recognize(&graph).ok().and_then(|r| {
            r.find(|f| matches!(f, Family::CanonicalUnicyclic { .. })).map(|(f, _)| f.clone())
        });
        let rank = graph.rank();
        let formula = canonical_unicyclic_rank(&graph).ok();
        let ok = recognized == Some(Family::CanonicalUnicyclic { g, t, k }) && formula == Some(g + k) && rank == g + k && (g + k) % 2 == 0;
        rep.record("canonical unicyclic rank g + k", ok, &graph, || {
            format!("g {g} t {t} expected k {k}: recognized {recognized:?}, formula {formula:?}, rank {rank}")
        });
        let even_distances = g % 2 == 0 && k == 0;
        rep.record("rank = g iff even girth and even star distances", (rank == g) == even_distances, &graph, || {
            format!("g {g} t {t} k {k} rank {rank}")
        });
    }
    rep
}
