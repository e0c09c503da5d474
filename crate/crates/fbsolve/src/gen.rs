//! Seeded random instance generators. All of them draw from
//! [`SplitMix64`], so a (generator, seed) pair pins the instance
//! exactly.

use fbsolve_core::graph::{DirectedGraph, GraphError, UndirectedGraph};

use crate::prng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    Infeasible(String),
    Graph(GraphError),
}

impl std::fmt::Display for GenError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenError::Infeasible(msg) => write!(f, "infeasible generator parameters: {msg}"),
            GenError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GenError {}

/// Uniform simple undirected graph with exactly `m` edges.
pub fn gen_random_undirected(n: usize, m: usize, seed: u64) -> Result<UndirectedGraph, GenError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GenError::Infeasible(format!("m={m} exceeds C({n},2)={max}")));
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut rng = SplitMix64::new(seed);
    // Partial Fisher-Yates: the first m entries become the sample.
    for i in 0..m {
        let j = i + rng.index(pairs.len() - i);
        pairs.swap(i, j);
    }
    UndirectedGraph::new(n, &pairs[..m]).map_err(GenError::Graph)
}

/// Uniform simple digraph with exactly `m` arcs.
pub fn gen_random_directed(n: usize, m: usize, seed: u64) -> Result<DirectedGraph, GenError> {
    let max = n * n.saturating_sub(1);
    if m > max {
        return Err(GenError::Infeasible(format!("m={m} exceeds n(n-1)={max}")));
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut rng = SplitMix64::new(seed);
    for i in 0..m {
        let j = i + rng.index(pairs.len() - i);
        pairs.swap(i, j);
    }
    DirectedGraph::new(n, &pairs[..m]).map_err(GenError::Graph)
}

/// Random forest: every vertex beyond the first attaches to a random
/// earlier vertex with probability 3/4, otherwise starts a new tree.
pub fn gen_forest(n: usize, seed: u64) -> UndirectedGraph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.chance(3, 4) {
            edges.push((rng.index(v), v));
        }
    }
    UndirectedGraph::new(n, &edges).expect("forest construction stays simple")
}

/// Random connected graph whose minimum feedback edge set has size
/// exactly `s_e`: a random spanning tree plus `s_e` distinct extra
/// edges.
pub fn gen_with_feedback_budget(
    n: usize,
    s_e: usize,
    seed: u64,
) -> Result<UndirectedGraph, GenError> {
    if n == 0 {
        return Err(GenError::Infeasible("need at least one vertex".into()));
    }
    let spare = n * (n - 1) / 2 - (n - 1);
    if s_e > spare {
        return Err(GenError::Infeasible(format!(
            "s_e={s_e} exceeds the {spare} non-tree edges available on {n} vertices"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1 + s_e);
    let mut in_tree = std::collections::BTreeSet::new();
    for v in 1..n {
        let p = rng.index(v);
        edges.push((p, v));
        in_tree.insert((p.min(v), p.max(v)));
    }
    let mut extras: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|p| !in_tree.contains(p))
        .collect();
    for i in 0..s_e {
        let j = i + rng.index(extras.len() - i);
        extras.swap(i, j);
    }
    edges.extend_from_slice(&extras[..s_e]);
    UndirectedGraph::new(n, &edges).map_err(GenError::Graph)
}
