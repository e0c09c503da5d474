//! Brute-force ground-truth solvers for every decision problem in the
//! library, plus the definitional verifiers used to re-check solver
//! witnesses.
//!
//! Correctness is by construction: each oracle enumerates candidate
//! deletion sets in ascending size, lexicographic within a size, so the
//! returned witness is deterministic and minimum-cardinality. Oracles
//! refuse instances above a configurable vertex cap (default
//! [`DEFAULT_ORACLE_CAP`]); the `fbsolve` CLI exposes the
//! `FBSOLVE_MAX_ORACLE_N` override.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{DirectedGraph, UndirectedGraph, VertexId, VertexSet};
use crate::subsets;
use crate::SolveError;

/// Exhaustive enumeration refuses instances with more vertices.
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// Decision plus optional witness and an enumeration counter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: bool,
    pub witness: Option<VertexSet>,
    /// Candidate sets (or branches) examined.
    pub explored: u64,
}

impl SolveResult {
    pub fn no(explored: u64) -> Self {
        SolveResult { decision: false, witness: None, explored }
    }

    pub fn yes(witness: VertexSet, explored: u64) -> Self {
        SolveResult { decision: true, witness: Some(witness), explored }
    }
}

/// Minimum Indegree Deletion instance: digraph, distinguished vertex,
/// deletion budget.
#[derive(Debug, Clone)]
pub struct MidInstance {
    pub g: DirectedGraph,
    pub w_c: VertexId,
    pub k: usize,
}

impl MidInstance {
    pub fn new(g: DirectedGraph, w_c: VertexId, k: usize) -> Result<Self, SolveError> {
        if w_c.index() >= g.vertex_count() {
            return Err(SolveError::Precondition(format!(
                "distinguished vertex {w_c} out of range"
            )));
        }
        if k >= g.vertex_count() {
            return Err(SolveError::Precondition(format!(
                "budget k={k} must be at most n-1={}",
                g.vertex_count() - 1
            )));
        }
        Ok(MidInstance { g, w_c, k })
    }
}

/// Minimum Degree Deletion instance.
#[derive(Debug, Clone)]
pub struct MddInstance {
    pub g: UndirectedGraph,
    pub w_c: VertexId,
    pub k: usize,
}

impl MddInstance {
    pub fn new(g: UndirectedGraph, w_c: VertexId, k: usize) -> Result<Self, SolveError> {
        if w_c.index() >= g.vertex_count() {
            return Err(SolveError::Precondition(format!(
                "distinguished vertex {w_c} out of range"
            )));
        }
        if k >= g.vertex_count() {
            return Err(SolveError::Precondition(format!(
                "budget k={k} must be at most n-1={}",
                g.vertex_count() - 1
            )));
        }
        Ok(MddInstance { g, w_c, k })
    }
}

/// Bounded Degree Deletion instance: degree bound `d`, budget `k`.
#[derive(Debug, Clone)]
pub struct BddInstance {
    pub g: UndirectedGraph,
    pub d: usize,
    pub k: usize,
}

impl BddInstance {
    pub fn new(g: UndirectedGraph, d: usize, k: usize) -> Result<Self, SolveError> {
        if k > g.vertex_count() {
            return Err(SolveError::Precondition(format!(
                "budget k={k} exceeds vertex count {}",
                g.vertex_count()
            )));
        }
        Ok(BddInstance { g, d, k })
    }
}

fn check_cap(n: usize, cap: usize) -> Result<(), SolveError> {
    if n > cap {
        Err(SolveError::OracleCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// True iff `w_c` has strictly smaller indegree than every other vertex
/// of `g` (vacuously true on the single-vertex graph).
pub fn is_unique_min_indegree(g: &DirectedGraph, w_c: VertexId) -> bool {
    let dw = g.in_degree(w_c);
    g.vertices().all(|v| v == w_c || g.in_degree(v) > dw)
}

/// Undirected counterpart of [`is_unique_min_indegree`].
pub fn is_unique_min_degree(g: &UndirectedGraph, w_c: VertexId) -> bool {
    let dw = g.degree(w_c);
    g.vertices().all(|v| v == w_c || g.degree(v) > dw)
}

/// Definitional MID witness check: `w_c` not deleted, set within
/// budget, and uniquely minimum indegree afterwards.
pub fn verify_mid_solution(inst: &MidInstance, witness: &VertexSet) -> bool {
    if witness.contains(inst.w_c) || witness.len() > inst.k {
        return false;
    }
    if witness.validate(inst.g.vertex_count()).is_err() {
        return false;
    }
    let (h, map) = inst.g.delete_vertices(witness);
    is_unique_min_indegree(&h, map.new_id(inst.w_c).expect("w_c survives"))
}

/// Definitional MDD witness check.
pub fn verify_mdd_solution(inst: &MddInstance, witness: &VertexSet) -> bool {
    if witness.contains(inst.w_c) || witness.len() > inst.k {
        return false;
    }
    if witness.validate(inst.g.vertex_count()).is_err() {
        return false;
    }
    let (h, map) = inst.g.delete_vertices(witness);
    is_unique_min_degree(&h, map.new_id(inst.w_c).expect("w_c survives"))
}

/// Definitional BDD witness check: within budget and all remaining
/// degrees at most `d`.
pub fn verify_bdd_solution(inst: &BddInstance, witness: &VertexSet) -> bool {
    if witness.len() > inst.k || witness.validate(inst.g.vertex_count()).is_err() {
        return false;
    }
    let (h, _) = inst.g.delete_vertices(witness);
    h.vertices().all(|v| h.degree(v) <= inst.d)
}

/// Shared enumeration core of the undirected deletion oracles: walks
/// subsets of `pool` (ascending size, lexicographic), maintaining live
/// degrees incrementally, and returns the first subset passing `check`
/// (given the live degrees and alive mask).
fn search_undirected_deletions(
    g: &UndirectedGraph,
    pool: &[VertexId],
    max_size: usize,
    explored: &mut u64,
    mut check: impl FnMut(&[usize], &[bool]) -> bool,
) -> Option<VertexSet> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(VertexId::new(v))).collect();
    let mut alive = alloc::vec![true; n];
    subsets::find_subset_ascending(pool.len(), max_size, |combo| {
        *explored += 1;
        for &ci in combo {
            alive[pool[ci].index()] = false;
        }
        for &ci in combo {
            for &w in g.neighbors(pool[ci]) {
                if alive[w.index()] {
                    deg[w.index()] -= 1;
                }
            }
        }
        let ok = check(&deg, &alive);
        for &ci in combo {
            for &w in g.neighbors(pool[ci]) {
                if alive[w.index()] {
                    deg[w.index()] += 1;
                }
            }
        }
        for &ci in combo {
            alive[pool[ci].index()] = true;
        }
        if ok {
            Some(VertexSet::from_vec(combo.iter().map(|&ci| pool[ci]).collect()))
        } else {
            None
        }
    })
}

/// Enumerates all `W' ⊆ V \ {w_c}` with `|W'| ≤ k` in ascending size;
/// yes iff some deletion leaves `w_c` the unique minimum-indegree
/// vertex.
pub fn oracle_mid(inst: &MidInstance, cap: Option<usize>) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    let n = inst.g.vertex_count();
    check_cap(n, cap)?;
    let pool: Vec<VertexId> = inst.g.vertices().filter(|&v| v != inst.w_c).collect();
    let mut indeg: Vec<usize> = (0..n).map(|v| inst.g.in_degree(VertexId::new(v))).collect();
    let mut alive = alloc::vec![true; n];
    let mut explored = 0u64;
    let hit = subsets::find_subset_ascending(pool.len(), inst.k, |combo| {
        explored += 1;
        for &ci in combo {
            alive[pool[ci].index()] = false;
        }
        for &ci in combo {
            for &w in inst.g.out_neighbors(pool[ci]) {
                if alive[w.index()] {
                    indeg[w.index()] -= 1;
                }
            }
        }
        let dw = indeg[inst.w_c.index()];
        let ok = (0..n).all(|v| !alive[v] || v == inst.w_c.index() || indeg[v] > dw);
        for &ci in combo {
            for &w in inst.g.out_neighbors(pool[ci]) {
                if alive[w.index()] {
                    indeg[w.index()] += 1;
                }
            }
        }
        for &ci in combo {
            alive[pool[ci].index()] = true;
        }
        if ok {
            Some(VertexSet::from_vec(combo.iter().map(|&ci| pool[ci]).collect()))
        } else {
            None
        }
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Undirected counterpart of [`oracle_mid`].
pub fn oracle_mdd(inst: &MddInstance, cap: Option<usize>) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(inst.g.vertex_count(), cap)?;
    let pool: Vec<VertexId> = inst.g.vertices().filter(|&v| v != inst.w_c).collect();
    let wc = inst.w_c.index();
    let n = inst.g.vertex_count();
    let mut explored = 0u64;
    let hit = search_undirected_deletions(&inst.g, &pool, inst.k, &mut explored, |deg, alive| {
        let dw = deg[wc];
        (0..n).all(|v| !alive[v] || v == wc || deg[v] > dw)
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Enumerates all `V' ⊆ V` with `|V'| ≤ k`; yes iff some deletion
/// leaves maximum degree at most `d`.
pub fn oracle_bdd(inst: &BddInstance, cap: Option<usize>) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(inst.g.vertex_count(), cap)?;
    let pool: Vec<VertexId> = inst.g.vertices().collect();
    let n = inst.g.vertex_count();
    let mut explored = 0u64;
    let hit = search_undirected_deletions(&inst.g, &pool, inst.k, &mut explored, |deg, alive| {
        (0..n).all(|v| !alive[v] || deg[v] <= inst.d)
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Brute-force Annotated Minimum Degree Deletion: enumerates
/// `M* ⊆ V \ (V_f ∪ {w_c})`; yes iff `w_c` ends with degree exactly `i`
/// and every other vertex with degree at least `i + 1`.
///
/// Preconditions (checked): `w_c ∉ V_f` and every vertex other than
/// `w_c` has degree at least `i + 1`.
pub fn oracle_annotated_mdd(
    g: &UndirectedGraph,
    v_f: &VertexSet,
    w_c: VertexId,
    k: usize,
    i: usize,
    cap: Option<usize>,
) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(g.vertex_count(), cap)?;
    if v_f.contains(w_c) {
        return Err(SolveError::Precondition(format!("w_c={w_c} lies in the feedback set")));
    }
    for v in g.vertices() {
        if v != w_c && g.degree(v) < i + 1 {
            return Err(SolveError::Precondition(format!(
                "vertex {v} has degree {} < i+1 = {}",
                g.degree(v),
                i + 1
            )));
        }
    }
    let pool: Vec<VertexId> =
        g.vertices().filter(|&v| v != w_c && !v_f.contains(v)).collect();
    let wc = w_c.index();
    let n = g.vertex_count();
    let mut explored = 0u64;
    let hit = search_undirected_deletions(g, &pool, k, &mut explored, |deg, alive| {
        deg[wc] == i && (0..n).all(|v| !alive[v] || v == wc || deg[v] > i)
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Brute-force Annotated Bounded Degree Deletion: enumerates
/// `V' ⊆ V \ U` with `|V'| ≤ k`.
pub fn oracle_annotated_bdd(
    g: &UndirectedGraph,
    unremovable: &VertexSet,
    d: usize,
    k: usize,
    cap: Option<usize>,
) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(g.vertex_count(), cap)?;
    let pool: Vec<VertexId> = g.vertices().filter(|&v| !unremovable.contains(v)).collect();
    let n = g.vertex_count();
    let mut explored = 0u64;
    let hit = search_undirected_deletions(g, &pool, k, &mut explored, |deg, alive| {
        (0..n).all(|v| !alive[v] || deg[v] <= d)
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Minimum size of an unremovable-avoiding deletion set driving all
/// degrees to at most `d`, or `None` if no such set exists. Arbiter for
/// the forest solver's optimality.
pub fn oracle_annotated_bdd_optimum(
    g: &UndirectedGraph,
    unremovable: &VertexSet,
    d: usize,
    cap: Option<usize>,
) -> Result<Option<usize>, SolveError> {
    let n = g.vertex_count();
    let free = n - unremovable.len();
    let res = oracle_annotated_bdd(g, unremovable, d, free, cap)?;
    Ok(res.witness.map(|w| w.len()))
}

/// Dominating Set oracle: `V'` of size at most `k` such that every
/// vertex is in `V'` or adjacent to it.
pub fn oracle_dominating_set(
    g: &UndirectedGraph,
    k: usize,
    cap: Option<usize>,
) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(g.vertex_count(), cap)?;
    let n = g.vertex_count();
    let mut explored = 0u64;
    let hit = subsets::find_subset_ascending(n, k, |combo| {
        explored += 1;
        let set = VertexSet::from_indices(combo);
        let dominated = g.vertices().all(|v| {
            set.contains(v) || g.neighbors(v).iter().any(|&u| set.contains(u))
        });
        if dominated {
            Some(set)
        } else {
            None
        }
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Independent Set oracle: `V'` of size at least `k` with no edges
/// inside. Only sets of size exactly `k` need checking.
pub fn oracle_independent_set(
    g: &UndirectedGraph,
    k: usize,
    cap: Option<usize>,
) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(g.vertex_count(), cap)?;
    let n = g.vertex_count();
    if k > n {
        return Ok(SolveResult::no(0));
    }
    let mut explored = 0u64;
    let hit = subsets::find_combination(n, k, |combo| {
        explored += 1;
        let independent = combo
            .iter()
            .all(|&a| combo.iter().all(|&b| a == b || !g.has_edge(VertexId::new(a), VertexId::new(b))));
        if independent {
            Some(VertexSet::from_indices(combo))
        } else {
            None
        }
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Small Universe Hitting Set oracle over a universe `1..=d`: a subset
/// `U'` of size at most `k` meeting every set. The witness encodes the
/// chosen universe elements as 0-based [`VertexId`]s.
pub fn oracle_hitting_set(
    universe_size: usize,
    sets: &[Vec<usize>],
    k: usize,
    cap: Option<usize>,
) -> Result<SolveResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_ORACLE_CAP);
    check_cap(universe_size, cap)?;
    for s in sets {
        if s.is_empty() {
            return Err(SolveError::Precondition("empty set cannot be hit".into()));
        }
        if s.iter().any(|&e| e == 0 || e > universe_size) {
            return Err(SolveError::Precondition(format!(
                "set element out of universe 1..={universe_size}"
            )));
        }
    }
    let mut explored = 0u64;
    let hit = subsets::find_subset_ascending(universe_size, k, |combo| {
        explored += 1;
        // combo holds 0-based universe indices; sets hold 1-based elements.
        let hits_all = sets.iter().all(|s| s.iter().any(|&e| combo.contains(&(e - 1))));
        if hits_all {
            Some(VertexSet::from_indices(combo))
        } else {
            None
        }
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}
