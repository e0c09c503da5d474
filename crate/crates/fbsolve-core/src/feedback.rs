//! Exact computation of minimum feedback sets.
//!
//! A minimum feedback edge set falls out of a DFS spanning forest in
//! polynomial time. Minimum feedback vertex sets and feedback arc sets
//! are NP-hard; this crate targets desk-scale instances and solves them
//! by ascending-cardinality subset enumeration with cycle-membership
//! pruning, returning the lexicographically smallest minimum set. The
//! literature offers heavily parameterized alternatives, but exhaustive
//! search is exact and entirely adequate at the sizes the solvers and
//! test sweeps use.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DirectedGraph, UndirectedGraph, VertexId, VertexSet};
use crate::subsets;
use crate::SolveError;

/// Set of undirected edges whose removal leaves a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackEdgeSet {
    pub edges: Vec<(VertexId, VertexId)>,
}

impl FeedbackEdgeSet {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// Set of vertices whose removal makes the graph acyclic; `directed`
/// records which acyclicity notion applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackVertexSet {
    pub vertices: VertexSet,
    pub directed: bool,
}

impl FeedbackVertexSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Set of arcs whose deletion makes the digraph acyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackArcSet {
    pub arcs: Vec<(VertexId, VertexId)>,
}

impl FeedbackArcSet {
    pub fn size(&self) -> usize {
        self.arcs.len()
    }
}

/// Minimum feedback edge set: the non-spanning-forest edges of a DFS
/// forest. Its size is exactly `m - n + #components`.
pub fn min_feedback_edge_set(g: &UndirectedGraph) -> FeedbackEdgeSet {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; n]; // tree_edge[v]: edge (parent[v], v) is in the forest
    let mut parent: Vec<usize> = (0..n).collect();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(VertexId::new(u)) {
                if !visited[w.index()] {
                    visited[w.index()] = true;
                    parent[w.index()] = u;
                    tree_edge[w.index()] = true;
                    stack.push(w.index());
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let in_tree = (tree_edge[u.index()] && parent[u.index()] == v.index())
            || (tree_edge[v.index()] && parent[v.index()] == u.index());
        if !in_tree {
            edges.push((u, v));
        }
    }
    FeedbackEdgeSet { edges }
}

/// Vertices that can lie on an undirected cycle: survivors of
/// exhaustively stripping degree-at-most-one vertices.
fn undirected_cycle_core(g: &UndirectedGraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(VertexId::new(v))).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(u) = queue.pop() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for &w in g.neighbors(VertexId::new(u)) {
            if alive[w.index()] {
                deg[w.index()] -= 1;
                if deg[w.index()] <= 1 {
                    queue.push(w.index());
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).map(VertexId::new).collect()
}

/// Vertices that can lie on a directed cycle are a subset of the
/// survivors of exhaustively stripping sources and sinks.
fn directed_cycle_core(g: &DirectedGraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(VertexId::new(v))).collect();
    let mut outdeg: Vec<usize> = (0..n).map(|v| g.out_degree(VertexId::new(v))).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
    while let Some(u) = queue.pop() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for &w in g.out_neighbors(VertexId::new(u)) {
            if alive[w.index()] {
                indeg[w.index()] -= 1;
                if indeg[w.index()] == 0 {
                    queue.push(w.index());
                }
            }
        }
        for &w in g.in_neighbors(VertexId::new(u)) {
            if alive[w.index()] {
                outdeg[w.index()] -= 1;
                if outdeg[w.index()] == 0 {
                    queue.push(w.index());
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).map(VertexId::new).collect()
}

fn min_fvs_generic<F>(
    candidates: Vec<VertexId>,
    forbidden: &VertexSet,
    directed: bool,
    acyclic_after: F,
) -> Result<FeedbackVertexSet, SolveError>
where
    F: Fn(&VertexSet) -> bool,
{
    let pool: Vec<VertexId> = candidates.into_iter().filter(|&v| !forbidden.contains(v)).collect();
    let hit = subsets::find_subset_ascending(pool.len(), pool.len(), |combo| {
        let set = VertexSet::from_vec(combo.iter().map(|&i| pool[i]).collect());
        if acyclic_after(&set) {
            Some(set)
        } else {
            None
        }
    });
    match hit {
        Some(vertices) => Ok(FeedbackVertexSet { vertices, directed }),
        None => Err(SolveError::InfeasibleForbidden),
    }
}

/// Minimum-cardinality feedback vertex set of an undirected graph,
/// disjoint from `forbidden`. Errors when every feedback vertex set
/// intersects `forbidden`.
pub fn min_feedback_vertex_set_undirected(
    g: &UndirectedGraph,
    forbidden: &VertexSet,
) -> Result<FeedbackVertexSet, SolveError> {
    min_fvs_generic(undirected_cycle_core(g), forbidden, false, |set| {
        g.delete_vertices(set).0.is_acyclic()
    })
}

/// Directed counterpart of [`min_feedback_vertex_set_undirected`].
pub fn min_feedback_vertex_set_directed(
    g: &DirectedGraph,
    forbidden: &VertexSet,
) -> Result<FeedbackVertexSet, SolveError> {
    min_fvs_generic(directed_cycle_core(g), forbidden, true, |set| {
        g.delete_vertices(set).0.is_acyclic()
    })
}

/// Minimum-cardinality feedback arc set, by ascending enumeration over
/// the arcs that lie on at least one cycle.
pub fn min_feedback_arc_set(g: &DirectedGraph) -> FeedbackArcSet {
    // An arc (u, v) lies on a cycle iff v reaches u.
    let n = g.vertex_count();
    let mut reaches = vec![vec![false; n]; n];
    for (s, row) in reaches.iter_mut().enumerate() {
        let mut stack = vec![s];
        row[s] = true;
        while let Some(u) = stack.pop() {
            for &w in g.out_neighbors(VertexId::new(u)) {
                if !row[w.index()] {
                    row[w.index()] = true;
                    stack.push(w.index());
                }
            }
        }
    }
    let pool: Vec<(VertexId, VertexId)> =
        g.arcs().into_iter().filter(|&(u, v)| reaches[v.index()][u.index()]).collect();
    let hit = subsets::find_subset_ascending(pool.len(), pool.len(), |combo| {
        let arcs: Vec<_> = combo.iter().map(|&i| pool[i]).collect();
        if g.delete_arcs(&arcs).is_acyclic() {
            Some(arcs)
        } else {
            None
        }
    });
    FeedbackArcSet { arcs: hit.expect("deleting all cycle arcs leaves an acyclic graph") }
}

/// A feedback vertex set found greedily: repeatedly remove the vertex
/// of highest total degree that lies in a nontrivial strongly connected
/// component. Not necessarily minimum; its size is a valid loop cap for
/// the combined-parameter MID search, which does not depend on
/// minimality.
pub fn greedy_fvs_upper_bound(g: &DirectedGraph) -> FeedbackVertexSet {
    let mut current = g.clone();
    let mut removed_orig: Vec<VertexId> = Vec::new();
    let mut orig_ids: Vec<VertexId> = g.vertices().collect();
    loop {
        let on_cycle = vertices_in_nontrivial_scc(&current);
        if on_cycle.iter().all(|&b| !b) {
            break;
        }
        let pick = (0..current.vertex_count())
            .filter(|&v| on_cycle[v])
            .max_by_key(|&v| {
                let id = VertexId::new(v);
                (current.in_degree(id) + current.out_degree(id), core::cmp::Reverse(v))
            })
            .expect("some vertex lies on a cycle");
        removed_orig.push(orig_ids[pick]);
        let (next, mapping) = current.delete_vertices(&VertexSet::singleton(VertexId::new(pick)));
        orig_ids = (0..next.vertex_count())
            .map(|nv| orig_ids[mapping.old_id(VertexId::new(nv)).index()])
            .collect();
        current = next;
    }
    FeedbackVertexSet { vertices: VertexSet::from_vec(removed_orig), directed: true }
}

/// Marks vertices belonging to a strongly connected component with at
/// least two vertices (simple graphs have no self-loops, so exactly
/// these lie on directed cycles).
fn vertices_in_nontrivial_scc(g: &DirectedGraph) -> Vec<bool> {
    // Iterative Tarjan.
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut result = vec![false; n];

    enum Frame {
        Enter(usize),
        Resume(usize, usize),
    }

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call = vec![Frame::Enter(root)];
        while let Some(frame) = call.pop() {
            match frame {
                Frame::Enter(u) => {
                    index[u] = next_index;
                    low[u] = next_index;
                    next_index += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    call.push(Frame::Resume(u, 0));
                }
                Frame::Resume(u, mut i) => {
                    let outs = g.out_neighbors(VertexId::new(u));
                    let mut descended = false;
                    while i < outs.len() {
                        let w = outs[i].index();
                        i += 1;
                        if index[w] == usize::MAX {
                            call.push(Frame::Resume(u, i));
                            call.push(Frame::Enter(w));
                            descended = true;
                            break;
                        } else if on_stack[w] {
                            low[u] = low[u].min(index[w]);
                        }
                    }
                    if descended {
                        continue;
                    }
                    if low[u] == index[u] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == u {
                                break;
                            }
                        }
                        if comp.len() >= 2 {
                            for w in comp {
                                result[w] = true;
                            }
                        }
                    }
                    // Propagate low to the parent frame.
                    if let Some(Frame::Resume(p, _)) = call.last() {
                        let p = *p;
                        low[p] = low[p].min(low[u]);
                    }
                }
            }
        }
    }
    result
}

/// True iff deleting the edges leaves a forest.
pub fn verify_feedback_edge_set(g: &UndirectedGraph, candidate: &FeedbackEdgeSet) -> bool {
    g.delete_edges(&candidate.edges).is_acyclic()
}

/// True iff deleting the vertices makes the graph acyclic (undirected
/// sense).
pub fn verify_feedback_vertex_set_undirected(g: &UndirectedGraph, candidate: &VertexSet) -> bool {
    candidate.validate(g.vertex_count()).is_ok() && g.delete_vertices(candidate).0.is_acyclic()
}

/// True iff deleting the vertices makes the digraph acyclic.
pub fn verify_feedback_vertex_set_directed(g: &DirectedGraph, candidate: &VertexSet) -> bool {
    candidate.validate(g.vertex_count()).is_ok() && g.delete_vertices(candidate).0.is_acyclic()
}

/// True iff deleting the arcs makes the digraph acyclic.
pub fn verify_feedback_arc_set(g: &DirectedGraph, candidate: &FeedbackArcSet) -> bool {
    g.delete_arcs(&candidate.arcs).is_acyclic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DirectedGraph, UndirectedGraph};

    /// Undirected example graph: cycle u1..u7 plus chord u2-u5
    /// (0-based: 0..6, chord 1-4).
    pub(crate) fn figu() -> UndirectedGraph {
        UndirectedGraph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 4)],
        )
        .unwrap()
    }

    /// Directed example graph d1..d7 (0-based 0..6).
    pub(crate) fn figd() -> DirectedGraph {
        DirectedGraph::new(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 0),
                (1, 4),
                (5, 1),
                (3, 6),
                (0, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fes_on_tree_is_empty() {
        let tree = UndirectedGraph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(min_feedback_edge_set(&tree).size(), 0);
    }

    #[test]
    fn fes_on_single_cycle_is_one() {
        let c5 = UndirectedGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let fes = min_feedback_edge_set(&c5);
        assert_eq!(fes.size(), 1);
        assert!(verify_feedback_edge_set(&c5, &fes));
    }

    #[test]
    fn fes_figu_has_size_two() {
        let g = figu();
        let fes = min_feedback_edge_set(&g);
        assert_eq!(fes.size(), 2);
        assert!(verify_feedback_edge_set(&g, &fes));
    }

    #[test]
    fn fvs_figu_is_u2() {
        let g = figu();
        let fvs = min_feedback_vertex_set_undirected(&g, &VertexSet::empty()).unwrap();
        assert_eq!(fvs.size(), 1);
        assert_eq!(fvs.vertices.as_slice(), &[VertexId(1)]);
        assert!(verify_feedback_vertex_set_undirected(&g, &fvs.vertices));
    }

    #[test]
    fn fvs_figd_has_size_two() {
        let g = figd();
        let fvs = min_feedback_vertex_set_directed(&g, &VertexSet::empty()).unwrap();
        assert_eq!(fvs.size(), 2);
        assert_eq!(fvs.vertices.as_slice(), &[VertexId(0), VertexId(1)]);
        assert!(verify_feedback_vertex_set_directed(&g, &fvs.vertices));
    }

    #[test]
    fn fvs_on_acyclic_graph_is_empty() {
        let dag = DirectedGraph::new(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        let forbidden = VertexSet::from_indices(&[0, 2]);
        let fvs = min_feedback_vertex_set_directed(&dag, &forbidden).unwrap();
        assert!(fvs.vertices.is_empty());
    }

    #[test]
    fn fvs_infeasible_when_forbidden_covers_all_cycles() {
        let g = UndirectedGraph::new(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let forbidden = VertexSet::from_indices(&[0, 1, 2]);
        assert_eq!(
            min_feedback_vertex_set_undirected(&g, &forbidden),
            Err(SolveError::InfeasibleForbidden)
        );
    }

    #[test]
    fn fas_on_dag_is_empty() {
        let dag = DirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(min_feedback_arc_set(&dag).size(), 0);
    }

    #[test]
    fn fas_two_cycle_is_one() {
        let g = DirectedGraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(min_feedback_arc_set(&g).size(), 1);
    }

    #[test]
    fn fas_figd() {
        let g = figd();
        // The documented example set {(d2,d3), (d2,d5), (d1,d6)} is a
        // valid feedback arc set of size three.
        let example = FeedbackArcSet {
            arcs: alloc::vec![
                (VertexId(1), VertexId(2)),
                (VertexId(1), VertexId(4)),
                (VertexId(0), VertexId(5)),
            ],
        };
        assert!(verify_feedback_arc_set(&g, &example));
        // The exact minimum is smaller: {(d7,d1), (d6,d2)} already
        // leaves a digraph whose arcs all point forward in the identity
        // order. The cycles d1-d6-d7 and d2-d5-d6 are arc-disjoint, so
        // one arc never suffices.
        let fas = min_feedback_arc_set(&g);
        assert_eq!(fas.size(), 2);
        assert!(verify_feedback_arc_set(&g, &fas));
    }

    #[test]
    fn verify_rejects_non_feedback_sets() {
        let g = figu();
        // u3 alone leaves the outer cycle broken but u1..u2,u5..u7,u1?
        // The 7-cycle needs u2 or similar; u3 (index 2) keeps cycle
        // u2-u5-u6-u7-u1-u2 via the chord.
        assert!(!verify_feedback_vertex_set_undirected(&g, &VertexSet::singleton(VertexId(2))));
        assert!(verify_feedback_vertex_set_undirected(&g, &VertexSet::singleton(VertexId(1))));
    }

    #[test]
    fn greedy_upper_bound_is_valid_and_not_smaller_than_min() {
        let dag = DirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(greedy_fvs_upper_bound(&dag).size(), 0);

        let two = DirectedGraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(greedy_fvs_upper_bound(&two).size(), 1);

        let g = figd();
        let greedy = greedy_fvs_upper_bound(&g);
        assert!(verify_feedback_vertex_set_directed(&g, &greedy.vertices));
        let min = min_feedback_vertex_set_directed(&g, &VertexSet::empty()).unwrap();
        assert!(greedy.size() >= min.size());
        assert!(greedy.size() >= 2);
    }

    #[test]
    fn figu_fixture_details() {
        let g = figu();
        // deg(u2) counts its three incident edges.
        assert_eq!(g.degree(VertexId(1)), 3);
        // Removing u2 leaves a 6-vertex tree.
        let (h, _) = g.delete_vertices(&VertexSet::singleton(VertexId(1)));
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 5);
        assert!(h.is_acyclic());
    }

    #[test]
    fn parameter_ordering_fvs_below_fes_and_fas() {
        // For every feedback edge/arc set there is a feedback vertex
        // set of at most the same size; check the minima on seeded
        // samples up to 9 vertices.
        let mut state = 0xabcu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 2..=9usize {
            for _ in 0..40 {
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if next() % 3 == 0 {
                            edges.push((a, b));
                        }
                    }
                }
                let g = UndirectedGraph::new(n, &edges).unwrap();
                let fvs = min_feedback_vertex_set_undirected(&g, &VertexSet::empty()).unwrap();
                let fes = min_feedback_edge_set(&g);
                assert!(fvs.size() <= fes.size());
                // Exactness: |min FES| = m - n + #components.
                let comps = g.connected_components().len();
                assert_eq!(fes.size(), g.edge_count() + comps - n);

                let mut arcs = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        if a != b && next() % 4 == 0 {
                            arcs.push((a, b));
                        }
                    }
                }
                let d = DirectedGraph::new(n, &arcs).unwrap();
                let dfvs = min_feedback_vertex_set_directed(&d, &VertexSet::empty()).unwrap();
                let fas = min_feedback_arc_set(&d);
                assert!(dfvs.size() <= fas.size());
                assert!(verify_feedback_arc_set(&d, &fas));
                assert!(verify_feedback_vertex_set_directed(&d, &dfvs.vertices));
            }
        }
    }

    #[test]
    fn fes_size_formula() {
        // |min FES| = m - n + #components.
        let g = UndirectedGraph::new(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (4, 5), (5, 6), (6, 4), (4, 7), (5, 7)],
        )
        .unwrap();
        let comps = g.connected_components().len();
        let fes = min_feedback_edge_set(&g);
        assert_eq!(fes.size(), g.edge_count() - g.vertex_count() + comps);
        assert!(verify_feedback_edge_set(&g, &fes));
    }
}
