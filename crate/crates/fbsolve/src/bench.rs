//! Benchmark harness: runs solvers over generated instance suites and
//! records decisions, effort counters and wall time as CSV rows. The
//! counters are what the acceptance tests compare against the
//! theoretical branch bounds.
//!
//! A suite file holds one run per line (`#` comments allowed):
//!
//! ```text
//! <solver> <generator> key=value ...
//! ```
//!
//! Solvers: `mid`, `mid-oracle`, `mdd-search`, `mdd-dp`, `mdd-ilp`,
//! `mdd-oracle`, `bdd`, `bdd-oracle`. Generators: `random` (keys `n`,
//! `m`, `seed`; directed for MID solvers), `budget` (keys `n`, `se`,
//! `seed`) and `forest` (keys `n`, `seed`), both undirected. Instance
//! keys: `wc` (1-based, default 1), `k` (default 1), `d` (default 1 for
//! BDD), and `cap=exact` to run MID with an exact minimum feedback
//! vertex set size.

use std::fmt::Write as _;
use std::time::Instant;

use fbsolve_core::bdd::solve_bdd;
use fbsolve_core::feedback::{
    min_feedback_edge_set, min_feedback_vertex_set_directed, min_feedback_vertex_set_undirected,
};
use fbsolve_core::graph::{VertexId, VertexSet};
use fbsolve_core::mdd::{mdd_search, mdd_solv, AnnotatedBackend};
use fbsolve_core::mid::solve_mid;
use fbsolve_core::oracle::{
    oracle_bdd, oracle_mdd, oracle_mid, BddInstance, MddInstance, MidInstance,
};

use crate::gen::{gen_forest, gen_random_directed, gen_random_undirected, gen_with_feedback_budget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchDecision {
    Yes,
    No,
    Skip,
}

impl BenchDecision {
    fn as_str(self) -> &'static str {
        match self {
            BenchDecision::Yes => "YES",
            BenchDecision::No => "NO",
            BenchDecision::Skip => "SKIP",
        }
    }
}

/// One benchmark row; serializes to the fixed CSV schema
/// `instance,solver,n,m,k,d,s_e,s_v,decision,explored,micros`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub instance: String,
    pub solver: String,
    pub n: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub s_e: Option<usize>,
    pub s_v: Option<usize>,
    pub decision: BenchDecision,
    pub explored: u64,
    pub micros: u64,
}

pub const CSV_HEADER: &str = "instance,solver,n,m,k,d,s_e,s_v,decision,explored,micros";

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.instance,
            r.solver,
            r.n,
            r.m,
            opt(r.k),
            opt(r.d),
            opt(r.s_e),
            opt(r.s_v),
            r.decision.as_str(),
            r.explored,
            r.micros
        )
        .unwrap();
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => return Err(format!("bad CSV header: {other:?}")),
    }
    let parse_opt = |s: &str| -> Result<Option<usize>, String> {
        if s.is_empty() {
            Ok(None)
        } else {
            s.parse().map(Some).map_err(|e| format!("{e}"))
        }
    };
    let mut out = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 11 {
            return Err(format!("bad CSV row: {line:?}"));
        }
        out.push(BenchRecord {
            instance: f[0].to_string(),
            solver: f[1].to_string(),
            n: f[2].parse().map_err(|e| format!("{e}"))?,
            m: f[3].parse().map_err(|e| format!("{e}"))?,
            k: parse_opt(f[4])?,
            d: parse_opt(f[5])?,
            s_e: parse_opt(f[6])?,
            s_v: parse_opt(f[7])?,
            decision: match f[8] {
                "YES" => BenchDecision::Yes,
                "NO" => BenchDecision::No,
                "SKIP" => BenchDecision::Skip,
                other => return Err(format!("bad decision {other:?}")),
            },
            explored: f[9].parse().map_err(|e| format!("{e}"))?,
            micros: f[10].parse().map_err(|e| format!("{e}"))?,
        });
    }
    Ok(out)
}

struct RunSpec {
    solver: String,
    generator: String,
    n: usize,
    m: Option<usize>,
    se: Option<usize>,
    seed: u64,
    wc: usize,
    k: usize,
    d: usize,
    exact_cap: bool,
}

fn parse_suite_line(line: &str, lineno: usize) -> Result<RunSpec, String> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() < 2 {
        return Err(format!("suite line {lineno}: need <solver> <generator> key=value..."));
    }
    let mut spec = RunSpec {
        solver: toks[0].to_string(),
        generator: toks[1].to_string(),
        n: 0,
        m: None,
        se: None,
        seed: 0,
        wc: 0,
        k: 1,
        d: 1,
        exact_cap: false,
    };
    for t in &toks[2..] {
        let Some((key, value)) = t.split_once('=') else {
            return Err(format!("suite line {lineno}: malformed token {t:?}"));
        };
        let num = || value.parse::<usize>().map_err(|e| format!("suite line {lineno}: {e}"));
        match key {
            "n" => spec.n = num()?,
            "m" => spec.m = Some(num()?),
            "se" => spec.se = Some(num()?),
            "seed" => {
                spec.seed =
                    value.parse().map_err(|e| format!("suite line {lineno}: {e}"))?;
            }
            "wc" => {
                let v = num()?;
                if v == 0 {
                    return Err(format!("suite line {lineno}: wc is 1-based"));
                }
                spec.wc = v - 1;
            }
            "k" => spec.k = num()?,
            "d" => spec.d = num()?,
            "cap" => spec.exact_cap = value == "exact",
            other => return Err(format!("suite line {lineno}: unknown key {other:?}")),
        }
    }
    if spec.n == 0 {
        return Err(format!("suite line {lineno}: n is required"));
    }
    Ok(spec)
}

fn undirected_graph_for(
    spec: &RunSpec,
) -> Result<fbsolve_core::graph::UndirectedGraph, String> {
    match spec.generator.as_str() {
        "budget" => {
            let se = spec.se.ok_or("budget generator needs se=")?;
            gen_with_feedback_budget(spec.n, se, spec.seed).map_err(|e| format!("{e}"))
        }
        "forest" => Ok(gen_forest(spec.n, spec.seed)),
        "random" => {
            let m = spec.m.ok_or("random generator needs m=")?;
            gen_random_undirected(spec.n, m, spec.seed).map_err(|e| format!("{e}"))
        }
        other => Err(format!("unknown generator {other:?}")),
    }
}

/// Runs every line of a suite, returning one record per run in file
/// order.
pub fn bench_run(suite: &str) -> Result<Vec<BenchRecord>, String> {
    let mut records = Vec::new();
    for (idx, raw) in suite.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let spec = parse_suite_line(line, idx + 1)?;
        let instance_name = format!(
            "{}-n{}{}{}-seed{}",
            spec.generator,
            spec.n,
            spec.m.map(|m| format!("-m{m}")).unwrap_or_default(),
            spec.se.map(|s| format!("-se{s}")).unwrap_or_default(),
            spec.seed
        );
        let record = match spec.solver.as_str() {
            "mid" | "mid-oracle" => {
                let g = match spec.generator.as_str() {
                    "random" => {
                        let m = spec.m.ok_or("random generator needs m=")?;
                        gen_random_directed(spec.n, m, spec.seed).map_err(|e| format!("{e}"))?
                    }
                    other => return Err(format!("MID solvers need the random generator, got {other:?}")),
                };
                let (n, m) = (g.vertex_count(), g.arc_count());
                let inst = MidInstance::new(g, VertexId::new(spec.wc), spec.k)
                    .map_err(|e| format!("{e}"))?;
                let s_v = if spec.exact_cap || spec.solver == "mid" {
                    Some(
                        min_feedback_vertex_set_directed(&inst.g, &VertexSet::empty())
                            .map_err(|e| format!("{e}"))?
                            .size(),
                    )
                } else {
                    None
                };
                let start = Instant::now();
                let (decision, explored) = if spec.solver == "mid" {
                    let cap = if spec.exact_cap { s_v } else { None };
                    let (res, stats) = solve_mid(&inst, cap);
                    (
                        if res.decision { BenchDecision::Yes } else { BenchDecision::No },
                        stats.subsets_tried,
                    )
                } else {
                    match oracle_mid(&inst, None) {
                        Ok(res) => (
                            if res.decision { BenchDecision::Yes } else { BenchDecision::No },
                            res.explored,
                        ),
                        Err(_) => (BenchDecision::Skip, 0),
                    }
                };
                BenchRecord {
                    instance: instance_name,
                    solver: spec.solver.clone(),
                    n,
                    m,
                    k: Some(spec.k),
                    d: None,
                    s_e: None,
                    s_v,
                    decision,
                    explored,
                    micros: start.elapsed().as_micros() as u64,
                }
            }
            "mdd-search" | "mdd-dp" | "mdd-ilp" | "mdd-oracle" => {
                let g = undirected_graph_for(&spec)?;
                let (n, m) = (g.vertex_count(), g.edge_count());
                let s_e = min_feedback_edge_set(&g).size();
                let inst = MddInstance::new(g, VertexId::new(spec.wc), spec.k)
                    .map_err(|e| format!("{e}"))?;
                let start = Instant::now();
                let outcome = match spec.solver.as_str() {
                    "mdd-search" => {
                        let fes = min_feedback_edge_set(&inst.g);
                        mdd_search(&inst, &fes).map(|r| (r.decision, r.explored)).ok()
                    }
                    "mdd-oracle" => oracle_mid_like_mdd(&inst),
                    backend => {
                        let fvs = min_feedback_vertex_set_undirected(
                            &inst.g,
                            &VertexSet::singleton(inst.w_c),
                        )
                        .map_err(|e| format!("{e}"))?;
                        let b = if backend == "mdd-dp" {
                            AnnotatedBackend::Dp
                        } else {
                            AnnotatedBackend::Ilp
                        };
                        mdd_solv(&inst, &fvs, b).map(|r| (r.decision, r.explored)).ok()
                    }
                };
                let (decision, explored) = match outcome {
                    Some((true, e)) => (BenchDecision::Yes, e),
                    Some((false, e)) => (BenchDecision::No, e),
                    None => (BenchDecision::Skip, 0),
                };
                BenchRecord {
                    instance: instance_name,
                    solver: spec.solver.clone(),
                    n,
                    m,
                    k: Some(spec.k),
                    d: None,
                    s_e: Some(s_e),
                    s_v: None,
                    decision,
                    explored,
                    micros: start.elapsed().as_micros() as u64,
                }
            }
            "bdd" | "bdd-oracle" => {
                let g = undirected_graph_for(&spec)?;
                let (n, m) = (g.vertex_count(), g.edge_count());
                let s_e = min_feedback_edge_set(&g).size();
                let inst =
                    BddInstance::new(g, spec.d, spec.k).map_err(|e| format!("{e}"))?;
                let start = Instant::now();
                let outcome = if spec.solver == "bdd" {
                    let fes = min_feedback_edge_set(&inst.g);
                    solve_bdd(&inst, &fes).map(|r| (r.decision, r.explored)).ok()
                } else {
                    oracle_bdd(&inst, None).map(|r| (r.decision, r.explored)).ok()
                };
                let (decision, explored) = match outcome {
                    Some((true, e)) => (BenchDecision::Yes, e),
                    Some((false, e)) => (BenchDecision::No, e),
                    None => (BenchDecision::Skip, 0),
                };
                BenchRecord {
                    instance: instance_name,
                    solver: spec.solver.clone(),
                    n,
                    m,
                    k: Some(spec.k),
                    d: Some(spec.d),
                    s_e: Some(s_e),
                    s_v: None,
                    decision,
                    explored,
                    micros: start.elapsed().as_micros() as u64,
                }
            }
            other => return Err(format!("unknown solver {other:?}")),
        };
        records.push(record);
    }
    Ok(records)
}

fn oracle_mid_like_mdd(inst: &MddInstance) -> Option<(bool, u64)> {
    oracle_mdd(inst, None).map(|r| (r.decision, r.explored)).ok()
}
