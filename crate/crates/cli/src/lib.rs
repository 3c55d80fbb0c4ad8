//! Command implementations for `smpinv`. Each command returns a [`Report`]:
//! a JSON-serialisable [`OutputDocument`] plus its plain-text rendering.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use signed_mpinv::enumerate::{matrix_tree_count, spanning_trees, tu_subgraphs, vol_squared};
use signed_mpinv::generate::{all_connected_signed_graphs, random_connected};
use signed_mpinv::mpinv::{laplacian_pinv, pinv, signed_resistance, MethodChoice};
use signed_mpinv::sgraph::Balance;
use signed_mpinv::verify::{verify_graph, Check};
use signed_mpinv::{EdgeCap, RatMatrix, Rational, Scalar, SignedGraph};

pub const RESISTANCE_BANNER: &str =
    "conjecture: the signed resistance identity is checked on trees and balanced graphs, not proven";

#[derive(Debug, Parser)]
#[command(name = "smpinv", version, about = "Exact Moore-Penrose inverses of signed-graph incidence and Laplacian matrices")]
pub struct Cli {
    /// Emit a JSON output document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized verification steps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest edge count accepted by the spanning-structure enumerations.
    #[arg(long, global = true, default_value_t = EdgeCap::default().0)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, connectivity, balance and incidence rank.
    Info { path: PathBuf },
    /// Incidence matrix N.
    Incidence { path: PathBuf },
    /// Moore-Penrose inverse of N.
    Pinv {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Also compute the rank-factorization oracle and require equality.
        #[arg(long)]
        check: bool,
    },
    /// Laplacian L = D - A.
    Laplacian { path: PathBuf },
    /// Moore-Penrose inverse of L.
    Lpinv { path: PathBuf },
    /// Signed resistance matrix of a balanced graph.
    Resistance { path: PathBuf },
    /// Spanning trees or spanning TU-subgraphs.
    Enumerate(EnumerateArgs),
    /// Squared volume of N.
    Vol { path: PathBuf },
    /// Run the invariant suite on a file or on generated graphs.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Tree,
    Unicyclic,
    General,
    Oracle,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Tree => MethodChoice::Tree,
            MethodArg::Unicyclic => MethodChoice::Unicyclic,
            MethodArg::General => MethodChoice::General,
            MethodArg::Oracle => MethodChoice::Oracle,
        }
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub path: PathBuf,
    /// Spanning trees (default for balanced graphs).
    #[arg(long, conflicts_with = "tu")]
    pub trees: bool,
    /// Spanning TU-subgraphs (default for unbalanced graphs).
    #[arg(long)]
    pub tu: bool,
    /// Report counts only.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VerifyArgs {
    /// Edge-list file to verify.
    pub path: Option<PathBuf>,
    /// One random connected graph with random bidirections.
    #[arg(long, num_args = 3, value_names = ["N", "M", "SEED"])]
    pub random: Option<Vec<u64>>,
    /// Every connected signed graph on at most NMAX vertices.
    #[arg(long, value_name = "NMAX")]
    pub exhaustive: Option<usize>,
}

/// Machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: String,
    /// SHA-256 of the normalised edge list(s) the command read.
    pub input_digest: String,
    pub result: Value,
    pub verification: Verification,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub method: Option<String>,
    /// `[AXA = A, XAX = X, AX symmetric, XA symmetric]`.
    pub penrose: Option<[bool; 4]>,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub doc: OutputDocument,
    pub text: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.doc.verification.passed
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.doc).expect("documents serialise") + "\n"
        } else {
            self.text.clone()
        }
    }
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(rational_json).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

/// Parses a matrix payload produced by [`matrix_json`].
pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    let rows = v["rows"].as_u64().context("rows")? as usize;
    let cols = v["cols"].as_u64().context("cols")? as usize;
    let mut data = Vec::with_capacity(rows * cols);
    for row in v["entries"].as_array().context("entries")? {
        for cell in row.as_array().context("row")? {
            let s = cell.as_str().context("entry is not a string")?;
            data.push(s.parse::<Rational>().map_err(|e| anyhow::anyhow!("{s}: {e}"))?);
        }
    }
    Ok(RatMatrix::new(rows, cols, data)?)
}

fn digest(texts: &[String]) -> String {
    let mut h = Sha256::new();
    for t in texts {
        h.update(t.as_bytes());
    }
    hex::encode(h.finalize())
}

pub fn load(path: &Path) -> Result<SignedGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SignedGraph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn one_based(edges: &[usize]) -> Vec<usize> {
    edges.iter().map(|e| e + 1).collect()
}

fn doc(command: &str, g: &SignedGraph, result: Value, verification: Verification) -> OutputDocument {
    OutputDocument {
        command: command.to_string(),
        input_digest: digest(&[g.to_edge_list()]),
        result,
        verification,
    }
}

fn passed() -> Verification {
    Verification {
        passed: true,
        ..Verification::default()
    }
}

fn matrix_report(command: &str, g: &SignedGraph, m: &RatMatrix, verification: Verification) -> Report {
    Report {
        doc: doc(command, g, json!({ "matrix": matrix_json(m) }), verification),
        text: m.to_string(),
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let cap = EdgeCap(cli.cap);
    match &cli.command {
        Command::Info { path } => cmd_info(&load(path)?),
        Command::Incidence { path } => {
            let g = load(path)?;
            Ok(matrix_report("incidence", &g, &g.incidence(), passed()))
        }
        Command::Pinv { path, method, check } => cmd_pinv(&load(path)?, *method, *check, cap),
        Command::Laplacian { path } => {
            let g = load(path)?;
            Ok(matrix_report("laplacian", &g, &g.laplacian(), passed()))
        }
        Command::Lpinv { path } => cmd_lpinv(&load(path)?, cap),
        Command::Resistance { path } => cmd_resistance(&load(path)?, cap),
        Command::Enumerate(a) => cmd_enumerate(&load(&a.path)?, a.trees, a.tu, a.count_only, cap),
        Command::Vol { path } => cmd_vol(&load(path)?, cap),
        Command::Verify(a) => {
            if let Some(path) = &a.path {
                cmd_verify(vec![load(path)?], "file", cli.seed, cap)
            } else if let Some(r) = &a.random {
                let (n, m, seed) = (r[0] as usize, r[1] as usize, r[2]);
                if n == 0 {
                    bail!("--random needs at least one vertex");
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = random_connected(&mut rng, n, m, true);
                cmd_verify(vec![g], "random", cli.seed, cap)
            } else {
                let nmax = a.exhaustive.expect("clap enforces one source");
                if nmax > 6 {
                    bail!("--exhaustive is limited to at most 6 vertices");
                }
                let graphs = (1..=nmax).flat_map(all_connected_signed_graphs).collect();
                cmd_verify(graphs, "exhaustive", cli.seed, cap)
            }
        }
    }
}

pub fn cmd_info(g: &SignedGraph) -> Result<Report> {
    let connected = g.is_connected();
    let rank = g.incidence::<Rational>().rank();
    let balance = if connected { Some(g.balance()?) } else { None };
    let (balanced, cycle) = match &balance {
        Some(Balance::Balanced { .. }) => (Some(true), None),
        Some(Balance::Unbalanced { cycle }) => (Some(false), Some(one_based(cycle))),
        None => (None, None),
    };
    let result = json!({
        "n": g.n(),
        "m": g.m(),
        "connected": connected,
        "balanced": balanced,
        "unbalanced_cycle": cycle,
        "rank": rank,
    });
    let mut text = format!("n: {}\nm: {}\nconnected: {connected}\n", g.n(), g.m());
    match (balanced, &cycle) {
        (Some(true), _) => text.push_str("balanced: true\n"),
        (Some(false), Some(c)) => {
            let ids: Vec<String> = c.iter().map(|e| format!("e{e}")).collect();
            let _ = writeln!(text, "balanced: false (unbalanced cycle {})", ids.join(" "));
        }
        _ => text.push_str("balanced: n/a (disconnected)\n"),
    }
    let _ = writeln!(text, "rank N: {rank}");
    Ok(Report {
        doc: doc("info", g, result, passed()),
        text,
    })
}

pub fn cmd_pinv(g: &SignedGraph, method: MethodArg, check: bool, cap: EdgeCap) -> Result<Report> {
    let r = pinv::<Rational>(g, method.into(), cap)?;
    let mut checks = Vec::new();
    if check {
        let oracle = g.incidence::<Rational>().pinv_oracle();
        checks.push(CheckRecord {
            name: "oracle".into(),
            passed: oracle == r.matrix,
            detail: format!("{} vs rank-factorization oracle", r.method),
        });
    }
    let verification = Verification {
        method: Some(r.method.to_string()),
        penrose: Some(r.penrose.as_array()),
        passed: r.penrose.all() && checks.iter().all(|c| c.passed),
        checks,
    };
    let mut text = format!("method: {}\n{}", r.method, r.matrix);
    for c in &verification.checks {
        let _ = writeln!(text, "{}: {}", c.name, if c.passed { "ok" } else { "FAIL" });
    }
    Ok(Report {
        doc: doc("pinv", g, json!({ "matrix": matrix_json(&r.matrix) }), verification),
        text,
    })
}

pub fn cmd_lpinv(g: &SignedGraph, cap: EdgeCap) -> Result<Report> {
    let r = laplacian_pinv::<Rational>(g, cap)?;
    let verification = Verification {
        method: Some(r.method.to_string()),
        penrose: Some(r.penrose.as_array()),
        checks: Vec::new(),
        passed: r.penrose.all(),
    };
    Ok(matrix_report("lpinv", g, &r.matrix, verification))
}

pub fn cmd_resistance(g: &SignedGraph, cap: EdgeCap) -> Result<Report> {
    let r = signed_resistance::<Rational>(g, cap)?;
    Ok(Report {
        doc: doc(
            "resistance",
            g,
            json!({ "matrix": matrix_json(&r), "note": RESISTANCE_BANNER }),
            passed(),
        ),
        text: format!("# {RESISTANCE_BANNER}\n{r}"),
    })
}

pub fn cmd_enumerate(g: &SignedGraph, trees: bool, tu: bool, count_only: bool, cap: EdgeCap) -> Result<Report> {
    g.is_connected().then_some(()).context("graph is disconnected")?;
    let balanced = g.is_balanced()?;
    let want_trees = trees || (!tu && balanced);
    let vol2 = vol_squared(g, cap)?;
    let det = g.laplacian::<Rational>().det()?;
    let mut checks = Vec::new();
    let mut text = String::new();
    let mut result = json!({});
    if want_trees {
        let list = spanning_trees(g, cap)?;
        let _ = writeln!(text, "spanning trees: {}", list.len());
        result["kind"] = json!("spanning-trees");
        result["count"] = json!(list.len());
        if !count_only {
            let sets: Vec<Vec<usize>> = list.iter().map(|t| one_based(t.edge_indices())).collect();
            for s in &sets {
                let _ = writeln!(text, "  {s:?}");
            }
            result["items"] = json!(sets);
        }
    } else {
        let list = tu_subgraphs(g, cap)?;
        let _ = writeln!(text, "TU-subgraphs: {}", list.len());
        result["kind"] = json!("tu-subgraphs");
        result["count"] = json!(list.len());
        if !count_only {
            let items: Vec<Value> = list
                .iter()
                .map(|h| json!({ "edges": one_based(h.edge_indices()), "c": h.c() }))
                .collect();
            for h in &list {
                let _ = writeln!(text, "  {:?} c={}", one_based(h.edge_indices()), h.c());
            }
            result["items"] = json!(items);
        }
    }
    result["vol_squared"] = json!(vol2.to_string());
    result["det_laplacian"] = rational_json(&det);
    let _ = writeln!(text, "vol²: {vol2}\ndet L: {det}");
    if !balanced {
        checks.push(CheckRecord {
            name: "det-laplacian".into(),
            passed: det == Rational::from_i128(vol2 as i128),
            detail: format!("det L = {det}, vol² = {vol2}"),
        });
    }
    let verification = Verification {
        passed: checks.iter().all(|c| c.passed),
        checks,
        ..Verification::default()
    };
    Ok(Report {
        doc: doc("enumerate", g, result, verification),
        text,
    })
}

pub fn cmd_vol(g: &SignedGraph, cap: EdgeCap) -> Result<Report> {
    let vol2 = vol_squared(g, cap)?;
    let balanced = g.is_balanced()?;
    let det = g.laplacian::<Rational>().det()?;
    let (check, detail) = if balanced {
        let tau = matrix_tree_count(g)?;
        (det == Rational::from_i128(0) && vol2 == g.n() as u128 * tau, format!("det L = 0, vol² = n τ, τ = {tau}"))
    } else {
        (det == Rational::from_i128(vol2 as i128), "det L = vol²".to_string())
    };
    let result = json!({ "vol_squared": vol2.to_string(), "balanced": balanced, "det_laplacian": rational_json(&det) });
    let verification = Verification {
        checks: vec![CheckRecord {
            name: "volume".into(),
            passed: check,
            detail,
        }],
        passed: check,
        ..Verification::default()
    };
    Ok(Report {
        doc: doc("vol", g, result, verification),
        text: format!("vol²: {vol2}\nbalanced: {balanced}\ndet L: {det}\n"),
    })
}

/// Number of random bidirection redraws checked per graph in `verify`.
const ETA_REDRAWS: usize = 3;

/// Volume must not depend on bidirections: compares against `ETA_REDRAWS`
/// copies with randomly reversed edges.
fn eta_redraw_check(g: &SignedGraph, seed: u64, cap: EdgeCap) -> Result<Check> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = vol_squared(g, cap)?;
    for _ in 0..ETA_REDRAWS {
        let mut h = g.clone();
        for i in 0..g.m() {
            if rng.gen() {
                h = h.with_edge_flipped(i)?;
            }
        }
        let v = vol_squared(&h, cap)?;
        if v != base {
            return Ok(Check {
                name: "eta-invariance",
                passed: false,
                detail: format!("vol² {base} became {v}"),
            });
        }
    }
    Ok(Check {
        name: "eta-invariance",
        passed: true,
        detail: format!("vol² = {base} under {ETA_REDRAWS} redraws"),
    })
}

pub fn cmd_verify(graphs: Vec<SignedGraph>, source: &str, seed: u64, cap: EdgeCap) -> Result<Report> {
    let mut failures: Vec<Value> = Vec::new();
    let mut totals: std::collections::BTreeMap<&'static str, (usize, usize)> = Default::default();
    let mut text = String::new();
    let single = graphs.len() == 1;
    for (k, g) in graphs.iter().enumerate() {
        let mut checks = verify_graph(g, cap)?;
        checks.push(eta_redraw_check(g, seed.wrapping_add(k as u64), cap)?);
        for c in &checks {
            let t = totals.entry(c.name).or_default();
            t.0 += 1;
            if c.passed {
                t.1 += 1;
            } else {
                failures.push(json!({ "graph": g.to_edge_list(), "check": c.name, "detail": c.detail }));
            }
            if single {
                let _ = writeln!(text, "{c}");
            }
        }
    }
    let records: Vec<CheckRecord> = totals
        .iter()
        .map(|(name, (run, ok))| CheckRecord {
            name: name.to_string(),
            passed: run == ok,
            detail: format!("{ok}/{run} passed"),
        })
        .collect();
    if !single {
        for r in &records {
            let _ = writeln!(text, "{:4} {}: {}", if r.passed { "ok" } else { "FAIL" }, r.name, r.detail);
        }
    }
    let all_ok = failures.is_empty();
    let _ = writeln!(text, "{} graph(s): {}", graphs.len(), if all_ok { "all checks passed" } else { "FAILURES" });
    for f in failures.iter().take(10) {
        let _ = writeln!(text, "  {} on {}", f["check"], f["graph"].as_str().unwrap_or("").replace('\n', "; "));
    }
    let texts: Vec<String> = graphs.iter().map(SignedGraph::to_edge_list).collect();
    Ok(Report {
        doc: OutputDocument {
            command: "verify".into(),
            input_digest: digest(&texts),
            result: json!({ "source": source, "graphs": graphs.len(), "failures": failures }),
            verification: Verification {
                passed: all_ok,
                checks: records,
                ..Verification::default()
            },
        },
        text,
    })
}
