//! `qgg`: rank, girth and classification queries on quaternion unit gain
//! graphs, plus the verification suites.
//!
//! Exit codes: 0 pass, 1 mathematical disagreement or falsification,
//! 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qgg_core::graph::{parse_qgg, GainGraph};
use qgg_core::qlinalg::{rank_with, RankMethod, DEFAULT_TOL};
use qgg_core::quat::{sample_from_set, sample_uniform_unit, hurwitz_units, lipschitz_units, GainSet, Rational, Scalar};
use qgg_core::reduce::{recognize, reduced_graph, trim_pendant_pairs};
use qgg_core::theorems::{classify, run, write_witnesses, HarnessConfig, Suite, MAX_CORPUS_N};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "qgg", version, about = "Rank and girth of quaternion unit gain graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Rank algorithm.
    #[arg(long, value_enum, default_value_t = Method::Elim, global = true)]
    method: Method,
    /// Exact rationals or f64.
    #[arg(long, value_enum, default_value_t = Tower::Exact, global = true)]
    tower: Tower,
    /// Relative zero threshold for the float tower.
    #[arg(long, default_value_t = DEFAULT_TOL, global = true)]
    tol: f64,
    /// Largest corpus order for `verify`.
    #[arg(long, default_value_t = 6, global = true)]
    max_n: usize,
    /// Gain samples per corpus graph.
    #[arg(long, default_value_t = 10, global = true)]
    samples: usize,
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Gains::Lipschitz, global = true)]
    gain_set: Gains,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Write the result here instead of stdout.
    #[arg(short = 'o', global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of the adjacency matrix.
    Rank { file: PathBuf },
    /// Girth and a shortest cycle.
    Girth { file: PathBuf },
    /// Relation of rank to girth and the matching characterization.
    Classify { file: PathBuf },
    /// Reduced graph: pendant twins and multiple vertices removed.
    Reduce { file: PathBuf },
    /// Random gains on an underlying graph; `e u v` lines may omit gains.
    Random { file: PathBuf },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`; repeatable.
        #[arg(long = "suite", default_value = "all")]
        suites: Vec<String>,
        /// Permit an order-8 corpus (about 2^28 masks).
        #[arg(long)]
        allow_n8: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Elim,
    Adjoint,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Tower {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Gains {
    Lipschitz,
    Hurwitz,
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// Bad usage or input; exit code 2.
struct Fail(String);

impl From<qgg_core::Error> for Fail {
    fn from(e: qgg_core::Error) -> Self {
        Fail(e.to_string())
    }
}

/// What a command produced: text, JSON, and whether it passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            let body = match cli.opts.output {
                Output::Text => out.text,
                Output::Json => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
            };
            if let Err(e) = emit(&cli.opts, &body) {
                eprintln!("qgg: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Fail(msg)) => {
            eprintln!("qgg: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(opts: &Opts, body: &str) -> std::io::Result<()> {
    match &opts.out {
        Some(p) => std::fs::write(p, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Fail> {
    let o = &cli.opts;
    match &cli.command {
        Command::Rank { file } => with_tower(o, file, rank_cmd),
        Command::Girth { file } => with_tower(o, file, girth_cmd),
        Command::Classify { file } => with_tower(o, file, classify_cmd),
        Command::Reduce { file } => with_tower(o, file, reduce_cmd),
        Command::Random { file } => random_cmd(o, file),
        Command::Verify { suites, allow_n8 } => verify_cmd(o, suites, *allow_n8),
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn with_tower(o: &Opts, file: &Path, f: fn(&Opts, GraphIn) -> Result<Outcome, Fail>) -> Result<Outcome, Fail> {
    let text = read(file)?;
    let g = match o.tower {
        Tower::Exact => GraphIn::Exact(parse_qgg(&text)?),
        Tower::Float => GraphIn::Float(parse_qgg(&text)?),
    };
    f(o, g)
}

enum GraphIn {
    Exact(GainGraph<Rational>),
    Float(GainGraph<f64>),
}

macro_rules! on_graph {
    ($g:expr, $f:ident $(, $arg:expr)*) => {
        match $g {
            GraphIn::Exact(g) => $f(&g $(, $arg)*),
            GraphIn::Float(g) => $f(&g $(, $arg)*),
        }
    };
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn joined(v: &[usize]) -> String {
    v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn tower_name(o: &Opts) -> &'static str {
    match o.tower {
        Tower::Exact => "exact",
        Tower::Float => "float",
    }
}

fn rank_cmd(o: &Opts, g: GraphIn) -> Result<Outcome, Fail> {
    fn go<S: Scalar>(g: &GainGraph<S>, o: &Opts) -> Result<Outcome, Fail> {
        let method = match o.method {
            Method::Elim => RankMethod::Elimination,
            Method::Adjoint => RankMethod::Adjoint,
            Method::Both => RankMethod::Both,
        };
        let r = rank_with(&g.adjacency_matrix(), method, o.tol)?;
        let ok = r.agrees();
        let text = match r.cross_check {
            Some(d) => format!("rank {} (elimination {}, adjoint {d}, {})\n", r.rank, r.rank, if ok { "agree" } else { "DISAGREE" }),
            None => format!("rank {}\n", r.rank),
        };
        let json = json!({
            "rank": r.rank,
            "method": r.method,
            "tower": tower_name(o),
            "tolerance": r.tolerance,
            "adjoint_rank": r.cross_check,
            "agrees": ok,
        });
        Ok(Outcome { text, json, ok })
    }
    on_graph!(g, go, o)
}

fn girth_cmd(_o: &Opts, g: GraphIn) -> Result<Outcome, Fail> {
    fn go<S: Scalar>(g: &GainGraph<S>) -> Result<Outcome, Fail> {
        Ok(match g.girth() {
            Some(gi) => Outcome {
                text: format!("girth {}\ncycle {}\n", gi.length, joined(&gi.cycle)),
                json: json!({ "girth": gi.length, "cycle": one_based(&gi.cycle) }),
                ok: true,
            },
            None => Outcome { text: "acyclic\n".into(), json: json!({ "girth": null, "cycle": null }), ok: true },
        })
    }
    on_graph!(g, go)
}

fn classify_cmd(_o: &Opts, g: GraphIn) -> Result<Outcome, Fail> {
    fn go<S: Scalar>(g: &GainGraph<S>) -> Result<Outcome, Fail> {
        let r = classify(g)?;
        let shape = recognize(g)?;
        let girth = r.girth.map_or("none".to_string(), |v| v.to_string());
        let mut text = format!("girth {girth}\nrank {}\nrelation {}\ncase {}\nfamily {:?}\n", r.rank, r.relation, r.case_label(), r.family);
        if let (Some(c), Some(t)) = (&r.shortest_cycle, r.shortest_cycle_type) {
            text += &format!("shortest cycle {} ({t})\n", joined(c));
        }
        for c in &r.checks {
            let verdict = if c.ok { "ok" } else { "FALSIFIED" };
            let cases: Vec<String> = c.cases.iter().map(|x| x.to_string()).collect();
            text += &format!("  {}: rank condition {}, cases [{}] {verdict}\n", c.theorem.label(), c.rank_condition, cases.join("; "));
        }
        if r.ambiguous {
            text += "warning: a float cycle-type decision was ambiguous\n";
        }
        let checks: Vec<Value> = r
            .checks
            .iter()
            .map(|c| {
                json!({
                    "theorem": c.theorem.label(),
                    "rank_condition": c.rank_condition,
                    "cases": c.cases.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "sufficient_only": c.theorem.sufficient_only(),
                    "ok": c.ok,
                })
            })
            .collect();
        let json = json!({
            "girth": r.girth,
            "rank": r.rank,
            "relation": r.relation,
            "case": r.case_label(),
            "prediction_agrees": r.prediction_agrees,
            "family": r.family,
            "matches": shape.matches.iter().map(|(f, _)| f).collect::<Vec<_>>(),
            "shortest_cycle": r.shortest_cycle.as_deref().map(one_based),
            "shortest_cycle_type": r.shortest_cycle_type,
            "checks": checks,
            "ambiguous": r.ambiguous,
        });
        Ok(Outcome { text, json, ok: r.prediction_agrees })
    }
    on_graph!(g, go)
}

fn reduce_cmd(o: &Opts, g: GraphIn) -> Result<Outcome, Fail> {
    fn go<S: Scalar>(g: &GainGraph<S>, o: &Opts) -> Result<Outcome, Fail> {
        let red = reduced_graph(g);
        let pairs = trim_pendant_pairs(g).pairs;
        let graph = red.graph.to_qgg();
        let ledger = format!("# removed {}\n# kept {}\n# pendant pairs {pairs}\n", joined(&red.removed), joined(&red.kept));
        // the ledger rides along as comments after the header
        let text = match graph.split_once('\n') {
            Some((h, rest)) if o.output == Output::Text => format!("{h}\n{ledger}{rest}"),
            _ => graph.clone(),
        };
        let json = json!({
            "graph": graph,
            "removed": one_based(&red.removed),
            "kept": one_based(&red.kept),
            "pendant_pairs": pairs,
        });
        Ok(Outcome { text, json, ok: true })
    }
    on_graph!(g, go, o)
}

/// Accepts `e u v` lines without gains by filling in gain 1.
fn underlying(text: &str) -> String {
    text.lines()
        .map(|l| {
            let body = l.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() == 3 && toks[0] == "e" {
                format!("e {} {} 1 0 0 0", toks[1], toks[2])
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn random_cmd(o: &Opts, file: &Path) -> Result<Outcome, Fail> {
    let base: GainGraph<Rational> = parse_qgg(&underlying(&read(file)?))?;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let edges = base.edge_list();
    let text = match o.gain_set {
        Gains::Uniform => GainGraph::from_edges(base.order(), edges.iter().map(|&(u, v)| (u, v, sample_uniform_unit(&mut rng))))?.to_qgg(),
        Gains::Lipschitz | Gains::Hurwitz => {
            if o.tower == Tower::Float {
                return Err(Fail("finite gain sets are sampled exactly; drop --tower float".into()));
            }
            let set = if o.gain_set == Gains::Hurwitz { hurwitz_units() } else { lipschitz_units() };
            GainGraph::<Rational>::from_edges(base.order(), edges.iter().map(|&(u, v)| (u, v, sample_from_set(&set, &mut rng))))?.to_qgg()
        }
    };
    let json = json!({ "graph": text, "seed": o.seed });
    Ok(Outcome { text, json, ok: true })
}

fn verify_cmd(o: &Opts, names: &[String], allow_n8: bool) -> Result<Outcome, Fail> {
    let mut suites = Vec::new();
    for n in names {
        suites.extend(Suite::parse(n).ok_or_else(|| Fail(format!("unknown suite {n:?}")))?);
    }
    if o.max_n >= MAX_CORPUS_N && !allow_n8 && suites.iter().any(|s| s.uses_corpus()) {
        return Err(Fail(format!("a corpus of order {MAX_CORPUS_N} needs --allow-n8")));
    }
    let gain_set = match o.gain_set {
        Gains::Lipschitz => GainSet::Lipschitz,
        Gains::Hurwitz => GainSet::Hurwitz,
        Gains::Uniform => GainSet::Uniform,
    };
    let cfg = HarnessConfig { max_n: o.max_n, samples: o.samples, seed: o.seed, gain_set, tol: o.tol, threads: None };
    let report = run(&cfg, &suites)?;
    let mut text = String::new();
    for s in &report.suites {
        let t = s.total();
        text += &format!(
            "{} {}: {} passed, {} failed, {} ambiguous, {} unmatched\n",
            if s.passed() { "PASS" } else { "FAIL" },
            s.suite,
            t.passed,
            t.failed,
            t.ambiguous,
            t.unmatched
        );
        for (k, v) in &s.checks {
            text += &format!("    {k}: {}/{}\n", v.passed, v.passed + v.failed);
        }
        for n in &s.notes {
            text += &format!("    note: {n}\n");
        }
    }
    let mut witnesses = Vec::new();
    if !report.passed {
        let dir = o.out.as_deref().and_then(Path::parent).filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        witnesses = write_witnesses(&report, dir).map_err(|e| Fail(format!("writing witnesses: {e}")))?;
        for w in &witnesses {
            text += &format!("witness {}\n", w.display());
        }
    }
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["witness_files"] = json!(witnesses.iter().map(|p| p.display().to_string()).collect::<Vec<_>>());
    Ok(Outcome { text, json, ok: report.passed })
}
