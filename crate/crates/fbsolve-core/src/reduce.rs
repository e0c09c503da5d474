//! Constructive instance transformations: Dominating Set to Minimum
//! Indegree Deletion, Independent Set to Minimum Degree Deletion, and
//! Small Universe Hitting Set to Minimum Degree Deletion.
//!
//! Every construction is deterministic (all "arbitrary" choices are
//! fixed to round-robin or ascending-id picks) and carries a legend
//! mapping construction roles to vertex sets so a human can inspect
//! gadget structure in the serialized instance.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{DirectedGraph, UndirectedGraph, VertexId, VertexSet};
use crate::oracle::{MddInstance, MidInstance};
use crate::SolveError;

/// The instance produced by a reduction.
#[derive(Debug, Clone)]
pub enum ReducedInstance {
    Mid(MidInstance),
    Mdd(MddInstance),
}

/// A reduction's target instance plus inspection metadata.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub instance: ReducedInstance,
    /// Construction role -> vertices, partitioning the target's vertex
    /// set.
    pub legend: Vec<(String, VertexSet)>,
    /// Source-to-target parameter map.
    pub parameter_note: String,
}

impl ReductionOutput {
    pub fn legend_set(&self, role: &str) -> Option<&VertexSet> {
        self.legend.iter().find(|(name, _)| name == role).map(|(_, s)| s)
    }
}

fn range_set(start: usize, len: usize) -> VertexSet {
    VertexSet::from_vec((start..start + len).map(VertexId::new).collect())
}

/// Dominating Set `(g*, k)` to Minimum Indegree Deletion
/// `(G, w_c, n - k)`.
///
/// The target consists of `w_c`, the dominator shadow `V`, the
/// dominated shadow `D`, three biclique layers `X`, `Y`, `Z` of `k + 1`
/// vertices each (any of them is a feedback vertex set), and per
/// dominated vertex a punishment block `S_i` of `6n` vertices whose
/// indegrees collapse if anything outside `V` gets deleted.
pub fn reduce_ds_to_mid(g_star: &UndirectedGraph, k: usize) -> Result<ReductionOutput, SolveError> {
    let n = g_star.vertex_count();
    if k == 0 || k > n {
        return Err(SolveError::Precondition(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let w_c = 0usize;
    let v_base = 1;
    let d_base = v_base + n;
    let x_base = d_base + n;
    let y_base = x_base + (k + 1);
    let z_base = y_base + (k + 1);
    let s_base = z_base + (k + 1);
    let total = s_base + 6 * n * n;
    let s_vertex = |i: usize, j: usize| s_base + i * 6 * n + j; // i, j 0-based

    let mut arcs: Vec<(usize, usize)> = Vec::new();
    // v_i -> d_j iff v*_i dominates v*_j.
    for i in 0..n {
        for j in 0..n {
            let dominates = i == j
                || g_star.has_edge(VertexId::new(i), VertexId::new(j));
            if dominates {
                arcs.push((v_base + i, d_base + j));
            }
        }
    }
    // V -> w_c.
    for i in 0..n {
        arcs.push((v_base + i, w_c));
    }
    // X -> Y -> Z -> X bicliques.
    for a in 0..k + 1 {
        for b in 0..k + 1 {
            arcs.push((x_base + a, y_base + b));
            arcs.push((y_base + a, z_base + b));
            arcs.push((z_base + a, x_base + b));
        }
    }
    // Fillers: k distinct sources into each D vertex, k + 1 into each V
    // vertex, round-robin over X then Y then Z in ascending id order.
    let xyz: Vec<usize> = (0..k + 1)
        .map(|t| x_base + t)
        .chain((0..k + 1).map(|t| y_base + t))
        .chain((0..k + 1).map(|t| z_base + t))
        .collect();
    let mut cursor = 0usize;
    let mut fill = |target: usize, count: usize, arcs: &mut Vec<(usize, usize)>| {
        for _ in 0..count {
            arcs.push((xyz[cursor % xyz.len()], target));
            cursor += 1;
        }
    };
    for j in 0..n {
        fill(d_base + j, k, &mut arcs);
    }
    for i in 0..n {
        fill(v_base + i, k + 1, &mut arcs);
    }
    // d_i -> every vertex of S_i.
    for i in 0..n {
        for j in 0..6 * n {
            arcs.push((d_base + i, s_vertex(i, j)));
        }
    }
    // The concrete table assignment: each row sends one arc from every
    // start vertex to every end vertex; every S vertex ends up with
    // exactly k of them and every X/Y/Z vertex keeps at least n
    // outneighbors in the union of the S blocks.
    let rows: [(usize, usize, usize); 6] = [
        (x_base, 0, n),         // x_1..x_k -> columns 1..n
        (x_base + 1, n, 2 * n), // x_2..x_{k+1}
        (y_base, 2 * n, 3 * n),
        (y_base + 1, 3 * n, 4 * n),
        (z_base, 4 * n, 5 * n),
        (z_base + 1, 5 * n, 6 * n),
    ];
    for &(start_base, col_lo, col_hi) in &rows {
        for t in 0..k {
            for i in 0..n {
                for j in col_lo..col_hi {
                    arcs.push((start_base + t, s_vertex(i, j)));
                }
            }
        }
    }

    let g = DirectedGraph::new(total, &arcs).expect("construction stays simple");
    let instance = MidInstance::new(g, VertexId::new(w_c), n - k)?;
    let mut legend = alloc::vec![
        (String::from("w_c"), VertexSet::singleton(VertexId::new(w_c))),
        (String::from("V"), range_set(v_base, n)),
        (String::from("D"), range_set(d_base, n)),
        (String::from("X"), range_set(x_base, k + 1)),
        (String::from("Y"), range_set(y_base, k + 1)),
        (String::from("Z"), range_set(z_base, k + 1)),
    ];
    for i in 0..n {
        legend.push((format!("S_{}", i + 1), range_set(s_vertex(i, 0), 6 * n)));
    }
    Ok(ReductionOutput {
        instance: ReducedInstance::Mid(instance),
        legend,
        parameter_note: format!(
            "source (n, k) = ({n}, {k}); target budget n - k = {}; s_v <= k + 1 = {}; s_a <= (k+1)^2 = {}",
            n - k,
            k + 1,
            (k + 1) * (k + 1)
        ),
    })
}

/// Ensures an even edge count while preserving Independent Set answers
/// for `k >= 2`: odd `m` with odd `n` gains one universal vertex, odd
/// `m` with even `n` gains a universal triangle.
pub fn make_edge_count_even(g_star: &UndirectedGraph) -> UndirectedGraph {
    let n = g_star.vertex_count();
    let m = g_star.edge_count();
    if m.is_multiple_of(2) {
        return g_star.clone();
    }
    let mut edges: Vec<(usize, usize)> =
        g_star.edges().iter().map(|&(u, v)| (u.index(), v.index())).collect();
    if n % 2 == 1 {
        for v in 0..n {
            edges.push((v, n));
        }
        UndirectedGraph::new(n + 1, &edges).expect("universal vertex addition stays simple")
    } else {
        for t in 0..3 {
            for v in 0..n {
                edges.push((v, n + t));
            }
        }
        edges.push((n, n + 1));
        edges.push((n, n + 2));
        edges.push((n + 1, n + 2));
        UndirectedGraph::new(n + 3, &edges).expect("universal triangle addition stays simple")
    }
}

/// Independent Set `(g*, k)` to Minimum Degree Deletion `(G, w_c, k)`.
/// Requires an even edge count (see [`make_edge_count_even`]) and
/// `2 <= k <= n`.
///
/// Per source vertex there are two cliques `C_{v_i}` and `C_i` of size
/// `n - k + 1`, per source edge one clique `C_{e_j}` of size `n - k`;
/// `w_c` is adjacent to all of `V` and must reach degree `n - k`.
pub fn reduce_is_to_mdd(g_star: &UndirectedGraph, k: usize) -> Result<ReductionOutput, SolveError> {
    let n = g_star.vertex_count();
    let m = g_star.edge_count();
    if !m.is_multiple_of(2) {
        return Err(SolveError::Precondition(
            "edge count must be even; apply make_edge_count_even first".into(),
        ));
    }
    if k < 2 || k > n {
        return Err(SolveError::Precondition(format!("need 2 <= k <= n, got k={k}, n={n}")));
    }
    let q_big = n - k + 1; // |C_{v_i}| = |C_i|
    let q_small = n - k; // |C_{e_j}|

    let w_c = 0usize;
    let v_base = 1;
    let e_base = v_base + n;
    let cv_base = e_base + m;
    // Layout: C_{v_1}, C_1, C_{v_2}, C_2, ..., then C_{e_1}..C_{e_m}.
    let cv = |i: usize, t: usize| cv_base + 2 * q_big * i + t;
    let ci = |i: usize, t: usize| cv_base + 2 * q_big * i + q_big + t;
    let ce_base = cv_base + 2 * q_big * n;
    let ce = |j: usize, t: usize| ce_base + q_small * j + t;
    let total = ce_base + q_small * m;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        edges.push((w_c, v_base + i));
    }
    let source_edges = g_star.edges();
    for (j, &(a, b)) in source_edges.iter().enumerate() {
        edges.push((v_base + a.index(), e_base + j));
        edges.push((v_base + b.index(), e_base + j));
    }
    let clique = |base: &dyn Fn(usize) -> usize, size: usize, edges: &mut Vec<(usize, usize)>| {
        for s in 0..size {
            for t in s + 1..size {
                edges.push((base(s), base(t)));
            }
        }
    };
    for i in 0..n {
        clique(&|t| cv(i, t), q_big, &mut edges);
        clique(&|t| ci(i, t), q_big, &mut edges);
        // Perfect matching C_{v_i} <-> C_i.
        for t in 0..q_big {
            edges.push((cv(i, t), ci(i, t)));
        }
        // Exactly n - k clique vertices attach to v_i.
        for t in 0..q_small {
            edges.push((cv(i, t), v_base + i));
        }
    }
    for j in 0..m {
        clique(&|t| ce(j, t), q_small, &mut edges);
        // All n - k clique vertices attach to e_j.
        for t in 0..q_small {
            edges.push((ce(j, t), e_base + j));
        }
    }
    // Perfect matchings C_{e_j} <-> C_{e_{j+1}} for odd j (1-based).
    for j in (0..m).step_by(2) {
        for t in 0..q_small {
            edges.push((ce(j, t), ce(j + 1, t)));
        }
    }

    let g = UndirectedGraph::new(total, &edges).expect("construction stays simple");
    let instance = MddInstance::new(g, VertexId::new(w_c), k)?;
    let mut legend = alloc::vec![
        (String::from("w_c"), VertexSet::singleton(VertexId::new(w_c))),
        (String::from("V"), range_set(v_base, n)),
        (String::from("E"), range_set(e_base, m)),
    ];
    for i in 0..n {
        legend.push((format!("C_{{v_{}}}", i + 1), range_set(cv(i, 0), q_big)));
        legend.push((format!("C_{}", i + 1), range_set(ci(i, 0), q_big)));
    }
    for j in 0..m {
        legend.push((format!("C_{{e_{}}}", j + 1), range_set(ce(j, 0), q_small)));
    }
    Ok(ReductionOutput {
        instance: ReducedInstance::Mdd(instance),
        legend,
        parameter_note: format!("source (n, m, k) = ({n}, {m}, {k}); target budget k = {k}"),
    })
}

/// Small Universe Hitting Set `(universe 1..=d, sets, k)` to Minimum
/// Degree Deletion `(G, w_c, d - k)`.
///
/// Universe elements and sets become vertices, a clique `C` of size
/// `k + 1` plus `d` pendant-ish vertices `L` pin every non-`w_c` degree
/// to at least `k + 1`, and `C ∪ U` is a vertex cover of size
/// `k + 1 + d` avoiding `w_c` (so the parameter map is
/// `(s_c*, k') = (d + 1 + k, d - k)`).
pub fn reduce_suhs_to_mdd(
    universe_size: usize,
    sets: &[Vec<usize>],
    k: usize,
) -> Result<ReductionOutput, SolveError> {
    let d = universe_size;
    if k > d {
        return Err(SolveError::Precondition(format!("need k <= d, got k={k}, d={d}")));
    }
    for s in sets {
        if s.is_empty() {
            return Err(SolveError::Precondition("sets must be nonempty".into()));
        }
        if s.iter().any(|&e| e == 0 || e > d) {
            return Err(SolveError::Precondition(format!("set element outside universe 1..={d}")));
        }
    }
    let n_sets = sets.len();
    let w_c = 0usize;
    let u_base = 1;
    let s_base = u_base + d;
    let c_base = s_base + n_sets;
    let l_base = c_base + (k + 1);
    let total = l_base + d;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..d {
        edges.push((w_c, u_base + i));
    }
    for (j, s) in sets.iter().enumerate() {
        let mut elems: Vec<usize> = s.clone();
        elems.sort_unstable();
        elems.dedup();
        for e in elems {
            edges.push((u_base + (e - 1), s_base + j));
        }
    }
    for a in 0..k + 1 {
        for b in a + 1..k + 1 {
            edges.push((c_base + a, c_base + b));
        }
    }
    for l in 0..d {
        for c in 0..k + 1 {
            edges.push((l_base + l, c_base + c));
        }
    }
    // Each universe and set vertex attaches to the first k clique
    // vertices.
    for i in 0..d {
        for c in 0..k {
            edges.push((u_base + i, c_base + c));
        }
    }
    for j in 0..n_sets {
        for c in 0..k {
            edges.push((s_base + j, c_base + c));
        }
    }

    let g = UndirectedGraph::new(total, &edges).expect("construction stays simple");
    let instance = MddInstance::new(g, VertexId::new(w_c), d - k)?;
    let legend = alloc::vec![
        (String::from("w_c"), VertexSet::singleton(VertexId::new(w_c))),
        (String::from("U"), range_set(u_base, d)),
        (String::from("S"), range_set(s_base, n_sets)),
        (String::from("C"), range_set(c_base, k + 1)),
        (String::from("L"), range_set(l_base, d)),
    ];
    Ok(ReductionOutput {
        instance: ReducedInstance::Mdd(instance),
        legend,
        parameter_note: format!(
            "source (d, k) = ({d}, {k}); target (s_c*, k') = (d+1+k, d-k) = ({}, {})",
            d + 1 + k,
            d - k
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feedback::{min_feedback_arc_set, min_feedback_vertex_set_directed};
    use crate::oracle::{
        oracle_dominating_set, oracle_hitting_set, oracle_independent_set, oracle_mdd, oracle_mid,
    };

    fn all_graphs(n: usize) -> impl Iterator<Item = UndirectedGraph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        (0u64..(1 << pairs.len())).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            UndirectedGraph::new(n, &edges).unwrap()
        })
    }

    #[test]
    fn ds_to_mid_structure() {
        let g = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let k = 2;
        let out = reduce_ds_to_mid(&g, k).unwrap();
        let ReducedInstance::Mid(inst) = &out.instance else { panic!("wrong kind") };
        let n = 3;
        assert_eq!(inst.g.vertex_count(), 1 + 2 * n + 3 * (k + 1) + 6 * n * n);
        assert_eq!(inst.k, n - k);
        // Degree audit.
        assert_eq!(inst.g.in_degree(inst.w_c), n);
        for v in out.legend_set("V").unwrap().iter() {
            assert_eq!(inst.g.in_degree(v), k + 1, "V indegree");
        }
        for (name, set) in &out.legend {
            if name.starts_with("S_") {
                for v in set.iter() {
                    assert_eq!(inst.g.in_degree(v), k + 1, "S indegree");
                }
            }
        }
        for role in ["X", "Y", "Z"] {
            for v in out.legend_set(role).unwrap().iter() {
                assert_eq!(inst.g.in_degree(v), k + 1, "{role} indegree");
            }
        }
        for v in out.legend_set("D").unwrap().iter() {
            assert!(inst.g.in_degree(v) > k, "D indegree");
        }
        // The legend partitions the vertex set.
        let total: usize = out.legend.iter().map(|(_, s)| s.len()).sum();
        assert_eq!(total, inst.g.vertex_count());
        // X is a feedback vertex set, so the minimum has size <= k + 1;
        // removing all X->Y arcs breaks every cycle, so the minimum
        // feedback arc set has size <= (k+1)^2.
        let fvs = min_feedback_vertex_set_directed(&inst.g, &VertexSet::empty()).unwrap();
        assert!(fvs.size() <= k + 1);
        let fas = min_feedback_arc_set(&inst.g);
        assert!(fas.size() <= (k + 1) * (k + 1));
    }

    #[test]
    fn ds_to_mid_rejects_bad_parameters() {
        let g = UndirectedGraph::new(2, &[(0, 1)]).unwrap();
        assert!(reduce_ds_to_mid(&g, 0).is_err());
        assert!(reduce_ds_to_mid(&g, 3).is_err());
    }

    #[test]
    fn ds_to_mid_equivalence_small() {
        for n in 1..=3usize {
            for g in all_graphs(n) {
                for k in 1..=n.min(2) {
                    let src = oracle_dominating_set(&g, k, None).unwrap();
                    let out = reduce_ds_to_mid(&g, k).unwrap();
                    let ReducedInstance::Mid(inst) = out.instance else { unreachable!() };
                    let tgt = oracle_mid(&inst, Some(inst.g.vertex_count())).unwrap();
                    assert_eq!(src.decision, tgt.decision, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn edge_count_evening() {
        // Already even: unchanged.
        let g = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(make_edge_count_even(&g), g);

        // P2: one edge, two vertices (even n) -> universal triangle,
        // 1 + 3*2 + 3 = 10 edges.
        let p2 = UndirectedGraph::new(2, &[(0, 1)]).unwrap();
        let evened = make_edge_count_even(&p2);
        assert_eq!(evened.vertex_count(), 5);
        assert_eq!(evened.edge_count(), 10);

        // Odd m, odd n -> one universal vertex.
        let g = UndirectedGraph::new(3, &[(0, 1)]).unwrap();
        let evened = make_edge_count_even(&g);
        assert_eq!(evened.vertex_count(), 4);
        assert_eq!(evened.edge_count(), 4);

        // Independent Set answers at k >= 2 are preserved.
        for n in 2..=5usize {
            for g in all_graphs(n) {
                let evened = make_edge_count_even(&g);
                assert_eq!(evened.edge_count() % 2, 0);
                for k in 2..=n {
                    let a = oracle_independent_set(&g, k, None).unwrap().decision;
                    let b = oracle_independent_set(&evened, k, None).unwrap().decision;
                    assert_eq!(a, b, "IS preservation n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn is_to_mdd_structure() {
        let g = UndirectedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k = 2;
        let out = reduce_is_to_mdd(&g, k).unwrap();
        let ReducedInstance::Mdd(inst) = &out.instance else { panic!("wrong kind") };
        let (n, m) = (4, 4);
        assert_eq!(inst.g.degree(inst.w_c), n);
        for v in out.legend_set("E").unwrap().iter() {
            assert_eq!(inst.g.degree(v), n - k + 2, "e_j degree");
        }
        for (name, set) in &out.legend {
            if name.starts_with("C_{e") || (name.starts_with("C_") && !name.contains('{')) {
                for v in set.iter() {
                    assert_eq!(inst.g.degree(v), n - k + 1, "{name} member degree");
                }
            }
            if name.starts_with("C_{v") {
                for v in set.iter() {
                    let deg = inst.g.degree(v);
                    assert!(deg == n - k + 1 || deg == n - k + 2, "{name} member degree {deg}");
                }
            }
        }
        for v in out.legend_set("V").unwrap().iter() {
            assert!(inst.g.degree(v) > n - k);
        }
        let total: usize = out.legend.iter().map(|(_, s)| s.len()).sum();
        assert_eq!(total, inst.g.vertex_count());
        assert_eq!(
            inst.g.vertex_count(),
            1 + n + m + 2 * n * (n - k + 1) + m * (n - k)
        );
    }

    #[test]
    fn is_to_mdd_rejects_bad_parameters() {
        let odd = UndirectedGraph::new(3, &[(0, 1)]).unwrap();
        assert!(reduce_is_to_mdd(&odd, 2).is_err());
        let even = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(reduce_is_to_mdd(&even, 1).is_err());
        assert!(reduce_is_to_mdd(&even, 4).is_err());
    }

    #[test]
    fn is_to_mdd_equivalence_small() {
        for n in 2..=4usize {
            for g in all_graphs(n) {
                let evened = make_edge_count_even(&g);
                for k in 2..=n.min(3) {
                    let src = oracle_independent_set(&g, k, None).unwrap();
                    let out = reduce_is_to_mdd(&evened, k).unwrap();
                    let ReducedInstance::Mdd(inst) = out.instance else { unreachable!() };
                    let tgt = oracle_mdd(&inst, Some(inst.g.vertex_count())).unwrap();
                    assert_eq!(src.decision, tgt.decision, "n={n} k={k} m={}", g.edge_count());
                }
            }
        }
    }

    #[test]
    fn empty_graph_is_yes_through_reduction() {
        let g = UndirectedGraph::new(4, &[]).unwrap();
        let out = reduce_is_to_mdd(&g, 3).unwrap();
        let ReducedInstance::Mdd(inst) = out.instance else { unreachable!() };
        assert!(oracle_mdd(&inst, Some(inst.g.vertex_count())).unwrap().decision);
    }

    #[test]
    fn suhs_to_mdd_structure_and_parameter_map() {
        let sets = alloc::vec![alloc::vec![1usize, 2], alloc::vec![2usize, 3], alloc::vec![3usize]];
        let (d, k) = (4usize, 2usize);
        let out = reduce_suhs_to_mdd(d, &sets, k).unwrap();
        let ReducedInstance::Mdd(inst) = &out.instance else { panic!("wrong kind") };
        assert_eq!(inst.k, d - k);
        assert_eq!(inst.g.degree(inst.w_c), d);
        for v in inst.g.vertices() {
            if v != inst.w_c {
                assert!(inst.g.degree(v) > k, "vertex {v} degree too small");
            }
        }
        // C ∪ U is a vertex cover of size k + 1 + d avoiding w_c.
        let cover = out.legend_set("C").unwrap().union(out.legend_set("U").unwrap());
        assert_eq!(cover.len(), k + 1 + d);
        assert!(!cover.contains(inst.w_c));
        for (u, v) in inst.g.edges() {
            assert!(cover.contains(u) || cover.contains(v), "edge ({u},{v}) uncovered");
        }
        assert!(out.parameter_note.contains("(7, 2)"));
    }

    #[test]
    fn suhs_to_mdd_rejects_bad_input() {
        assert!(reduce_suhs_to_mdd(2, &[alloc::vec![]], 1).is_err());
        assert!(reduce_suhs_to_mdd(2, &[alloc::vec![3]], 1).is_err());
        assert!(reduce_suhs_to_mdd(2, &[alloc::vec![1]], 3).is_err());
    }

    #[test]
    fn suhs_to_mdd_equivalence_small() {
        let families: &[(usize, &[&[usize]])] = &[
            (2, &[&[1], &[2]]),
            (2, &[&[1, 2]]),
            (3, &[&[1], &[2, 3]]),
            (3, &[&[1, 2], &[2, 3], &[1, 3]]),
            (4, &[&[1, 2], &[3, 4]]),
            (4, &[&[1], &[2], &[3], &[4]]),
            (5, &[&[1, 2, 3], &[3, 4, 5], &[1, 5]]),
        ];
        for &(d, family) in families {
            let sets: Vec<Vec<usize>> = family.iter().map(|s| s.to_vec()).collect();
            for k in 0..=d.min(3) {
                let src = oracle_hitting_set(d, &sets, k, None).unwrap();
                let out = reduce_suhs_to_mdd(d, &sets, k).unwrap();
                let ReducedInstance::Mdd(inst) = out.instance else { unreachable!() };
                let tgt = oracle_mdd(&inst, Some(inst.g.vertex_count())).unwrap();
                assert_eq!(src.decision, tgt.decision, "d={d} k={k} sets={sets:?}");
            }
        }
    }

    #[test]
    fn constructions_are_deterministic() {
        let g = UndirectedGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let a = reduce_ds_to_mid(&g, 2).unwrap();
        let b = reduce_ds_to_mid(&g, 2).unwrap();
        let (ReducedInstance::Mid(ia), ReducedInstance::Mid(ib)) = (&a.instance, &b.instance)
        else {
            unreachable!()
        };
        assert_eq!(ia.g, ib.g);
        assert_eq!(a.legend, b.legend);
    }
}
