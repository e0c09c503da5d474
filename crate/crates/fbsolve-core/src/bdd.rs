//! Bounded Degree Deletion: an exact forest algorithm for the annotated
//! variant driven by a per-vertex decision step, and the general solver
//! branching three ways over a feedback edge set.

use alloc::vec;
use alloc::vec::Vec;

use crate::feedback::FeedbackEdgeSet;
use crate::graph::{UndirectedGraph, VertexId, VertexSet};
use crate::oracle::{verify_bdd_solution, BddInstance, SolveResult};
use crate::SolveError;

/// Annotated Bounded Degree Deletion instance: vertices in
/// `unremovable` may not be deleted.
#[derive(Debug, Clone)]
pub struct AnnotatedBddInstance {
    pub g: UndirectedGraph,
    pub unremovable: VertexSet,
    pub d: usize,
    pub k: usize,
}

impl AnnotatedBddInstance {
    pub fn new(
        g: UndirectedGraph,
        unremovable: VertexSet,
        d: usize,
        k: usize,
    ) -> Result<Self, SolveError> {
        if unremovable.validate(g.vertex_count()).is_err() {
            return Err(SolveError::Precondition("unremovable vertex out of range".into()));
        }
        Ok(AnnotatedBddInstance { g, unremovable, d, k })
    }
}

/// Root selection for [`RootedForest`]. The algorithm's optimality must
/// not depend on it; tests run both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootRule {
    #[default]
    SmallestId,
    LargestId,
}

/// Rooting of an acyclic graph: parent links and depths per component.
#[derive(Debug, Clone)]
pub struct RootedForest {
    pub parent: Vec<Option<VertexId>>,
    pub depth: Vec<usize>,
}

impl RootedForest {
    /// Roots each component at its smallest (or largest) vertex id.
    pub fn build(g: &UndirectedGraph, rule: RootRule) -> Result<Self, SolveError> {
        if !g.is_acyclic() {
            return Err(SolveError::CyclicInput("the forest algorithm needs an acyclic graph"));
        }
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let roots: Vec<usize> = match rule {
            RootRule::SmallestId => (0..n).collect(),
            RootRule::LargestId => (0..n).rev().collect(),
        };
        for root in roots {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(VertexId::new(u)) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        parent[w.index()] = Some(VertexId::new(u));
                        depth[w.index()] = depth[u] + 1;
                        stack.push(w.index());
                    }
                }
            }
        }
        Ok(RootedForest { parent, depth })
    }
}

/// Mutable traversal state of the forest algorithm.
#[derive(Debug, Clone)]
pub struct ForestState {
    forest: RootedForest,
    unremovable: Vec<bool>,
    d: usize,
    alive: Vec<bool>,
    deg: Vec<usize>,
    settled: Vec<bool>,
    removed: Vec<VertexId>,
    adjacency: Vec<Vec<VertexId>>,
}

impl ForestState {
    pub fn new(inst: &AnnotatedBddInstance, rule: RootRule) -> Result<Self, SolveError> {
        let forest = RootedForest::build(&inst.g, rule)?;
        let n = inst.g.vertex_count();
        let mut unremovable = vec![false; n];
        for v in inst.unremovable.iter() {
            unremovable[v.index()] = true;
        }
        Ok(ForestState {
            forest,
            unremovable,
            d: inst.d,
            alive: vec![true; n],
            deg: (0..n).map(|v| inst.g.degree(VertexId::new(v))).collect(),
            settled: vec![false; n],
            removed: Vec::new(),
            adjacency: (0..n).map(|v| inst.g.neighbors(VertexId::new(v)).to_vec()).collect(),
        })
    }

    fn remove(&mut self, v: VertexId) {
        debug_assert!(self.alive[v.index()] && !self.unremovable[v.index()]);
        self.alive[v.index()] = false;
        self.settled[v.index()] = true;
        self.removed.push(v);
        for w in self.adjacency[v.index()].clone() {
            if self.alive[w.index()] {
                self.deg[w.index()] -= 1;
            }
        }
    }

    fn degree(&self, v: VertexId) -> usize {
        self.deg[v.index()]
    }

    /// Live parent, treating a removed parent like a missing one.
    fn live_parent(&self, v: VertexId) -> Option<VertexId> {
        self.forest.parent[v.index()].filter(|p| self.alive[p.index()])
    }

    fn removable(&self, v: VertexId) -> bool {
        !self.unremovable[v.index()]
    }

    /// Next vertex to process: unsettled, ordered by depth descending,
    /// then live degree descending, then id ascending.
    fn next_vertex(&self) -> Option<VertexId> {
        (0..self.alive.len())
            .filter(|&v| self.alive[v] && !self.settled[v])
            .map(VertexId::new)
            .max_by(|&a, &b| {
                let ka = (self.forest.depth[a.index()], self.deg[a.index()]);
                let kb = (self.forest.depth[b.index()], self.deg[b.index()]);
                ka.cmp(&kb).then(b.cmp(&a))
            })
    }
}

/// Outcome of one decision step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// `x` was settled; `removed` lists what got deleted (possibly the
    /// parent or grandparent instead of, or in addition to, `x`).
    Settled { removed: Vec<VertexId>, marked: Option<VertexId> },
    /// A no-instance was detected.
    NoInstance,
}

/// One decision step for vertex `x`, per the case table. Preconditions:
/// all children of `x` (and of its siblings) are settled and no
/// unsettled sibling has larger degree — guaranteed by the processing
/// order of [`solve_annotated_bdd_forest`].
pub fn decision_step(state: &mut ForestState, x: VertexId) -> Decision {
    let d = state.d;
    let deg_x = state.degree(x);
    let parent = state.live_parent(x);
    let parent_removable = parent.map(|p| state.removable(p));

    if !state.removable(x) {
        // Case A: x is unremovable. A missing parent acts like an
        // unremovable one.
        return match (deg_x.cmp(&(d + 1)), parent_removable) {
            (core::cmp::Ordering::Greater, _) => Decision::NoInstance,
            (core::cmp::Ordering::Equal, Some(true)) => {
                let p = parent.unwrap();
                state.remove(p);
                state.settled[x.index()] = true;
                Decision::Settled { removed: vec![p], marked: Some(x) }
            }
            (core::cmp::Ordering::Equal, _) => Decision::NoInstance,
            (core::cmp::Ordering::Less, _) => {
                state.settled[x.index()] = true;
                Decision::Settled { removed: vec![], marked: Some(x) }
            }
        };
    }

    // Case B: x is removable.
    match parent_removable {
        Some(true) | None => {
            // B.1 (a missing parent behaves like a removable one except
            // in the tie case, where x itself goes).
            if deg_x < d + 1 {
                state.settled[x.index()] = true;
                Decision::Settled { removed: vec![], marked: Some(x) }
            } else if deg_x > d + 1 {
                state.remove(x);
                Decision::Settled { removed: vec![x], marked: None }
            } else {
                match parent {
                    Some(p) => {
                        state.remove(p);
                        state.settled[x.index()] = true;
                        Decision::Settled { removed: vec![p], marked: Some(x) }
                    }
                    None => {
                        state.remove(x);
                        Decision::Settled { removed: vec![x], marked: None }
                    }
                }
            }
        }
        Some(false) => {
            let p = parent.unwrap();
            if deg_x > d {
                // B.2.a
                state.remove(x);
                Decision::Settled { removed: vec![x], marked: None }
            } else if state.degree(p) < d + 1 {
                // B.2.b
                state.settled[x.index()] = true;
                Decision::Settled { removed: vec![], marked: Some(x) }
            } else {
                // B.2.c: the unremovable parent is still too big. Remove
                // the grandparent when possible (it may help elsewhere),
                // then remove x only if the parent still exceeds d.
                let mut removed = Vec::new();
                if let Some(pp) = state.live_parent(p) {
                    if state.removable(pp) {
                        state.remove(pp);
                        removed.push(pp);
                    }
                }
                if state.degree(p) > d {
                    state.remove(x);
                    removed.push(x);
                    Decision::Settled { removed, marked: None }
                } else {
                    state.settled[x.index()] = true;
                    Decision::Settled { removed, marked: Some(x) }
                }
            }
        }
    }
}

/// Computes a minimum unremovable-avoiding deletion set bounding all
/// degrees by `d` on an acyclic graph. Returns yes iff that minimum is
/// within the budget.
pub fn solve_annotated_bdd_forest(inst: &AnnotatedBddInstance) -> Result<SolveResult, SolveError> {
    solve_annotated_bdd_forest_with(inst, RootRule::SmallestId)
}

/// As [`solve_annotated_bdd_forest`] with an explicit root rule.
pub fn solve_annotated_bdd_forest_with(
    inst: &AnnotatedBddInstance,
    rule: RootRule,
) -> Result<SolveResult, SolveError> {
    let mut state = ForestState::new(inst, rule)?;
    let mut steps = 0u64;
    while let Some(x) = state.next_vertex() {
        steps += 1;
        match decision_step(&mut state, x) {
            Decision::Settled { .. } => {
                // Ensure clause: x is gone or marked with degree <= d.
                debug_assert!(
                    !state.alive[x.index()] || state.degree(x) <= inst.d,
                    "decision step left x marked above the bound"
                );
            }
            Decision::NoInstance => return Ok(SolveResult::no(steps)),
        }
    }
    let witness = VertexSet::from_vec(state.removed);
    debug_assert!(witness.is_disjoint(&inst.unremovable));
    if witness.len() <= inst.k {
        Ok(SolveResult::yes(witness, steps))
    } else {
        Ok(SolveResult::no(steps))
    }
}

/// Minimum deletion-set size on a forest, `None` when the unremovable
/// vertices make the instance infeasible.
pub fn forest_optimum(
    g: &UndirectedGraph,
    unremovable: &VertexSet,
    d: usize,
    rule: RootRule,
) -> Result<Option<usize>, SolveError> {
    let inst = AnnotatedBddInstance::new(g.clone(), unremovable.clone(), d, g.vertex_count())?;
    let res = solve_annotated_bdd_forest_with(&inst, rule)?;
    Ok(res.witness.map(|w| w.len()))
}

fn validate_fes(g: &UndirectedGraph, fes: &FeedbackEdgeSet) -> Result<(), SolveError> {
    let n = g.vertex_count();
    for &(u, v) in &fes.edges {
        if u.index() >= n || v.index() >= n || !g.has_edge(u, v) {
            return Err(SolveError::InvalidFeedbackSet);
        }
    }
    if !g.delete_edges(&fes.edges).is_acyclic() {
        return Err(SolveError::InvalidFeedbackSet);
    }
    Ok(())
}

/// Working graph of the branching phase: the input graph plus gadget
/// leaves, with plain adjacency lists.
#[derive(Clone)]
struct BranchGraph {
    adjacency: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    unremovable: Vec<bool>,
    /// Vertices `>= original_n` are gadget leaves.
    original_n: usize,
}

impl BranchGraph {
    fn new(g: &UndirectedGraph, extra_capacity: usize) -> Self {
        let n = g.vertex_count();
        let mut adjacency: Vec<Vec<VertexId>> =
            (0..n).map(|v| g.neighbors(VertexId::new(v)).to_vec()).collect();
        adjacency.reserve(extra_capacity);
        BranchGraph {
            adjacency,
            alive: vec![true; n],
            unremovable: vec![false; n],
            original_n: n,
        }
    }

    fn remove_vertex(&mut self, v: VertexId) {
        self.alive[v.index()] = false;
        let neighbors = core::mem::take(&mut self.adjacency[v.index()]);
        for w in neighbors {
            self.adjacency[w.index()].retain(|&u| u != v);
        }
    }

    fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.adjacency[u.index()].retain(|&w| w != v);
        self.adjacency[v.index()].retain(|&w| w != u);
    }

    fn add_leaf(&mut self, at: VertexId) -> VertexId {
        let id = VertexId::new(self.adjacency.len());
        self.adjacency.push(vec![at]);
        self.alive.push(true);
        self.unremovable.push(true);
        self.adjacency[at.index()].push(id);
        id
    }

    fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.alive[u.index()] && self.alive[v.index()] && self.adjacency[u.index()].contains(&v)
    }

    /// Compacts into a plain graph plus original ids of its vertices.
    fn materialize(&self) -> (UndirectedGraph, Vec<VertexId>, VertexSet) {
        let ids: Vec<VertexId> = (0..self.adjacency.len())
            .map(VertexId::new)
            .filter(|v| self.alive[v.index()])
            .collect();
        let mut pos = vec![usize::MAX; self.adjacency.len()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v.index()] = i;
        }
        let mut edges = Vec::new();
        for &v in &ids {
            for &w in &self.adjacency[v.index()] {
                if v < w {
                    edges.push((pos[v.index()], pos[w.index()]));
                }
            }
        }
        let g = UndirectedGraph::new(ids.len(), &edges).expect("branch graph stays simple");
        let unremovable = ids
            .iter()
            .enumerate()
            .filter(|(_, v)| self.unremovable[v.index()])
            .map(|(i, _)| VertexId::new(i))
            .collect();
        (g, ids, unremovable)
    }
}

/// Search-tree solver for Bounded Degree Deletion over a feedback edge
/// set: for each feedback edge `{x, y}` branch on removing `x`,
/// removing `y`, or keeping both (replacing the edge by two unremovable
/// pendant leaves to preserve degrees). Leaves are acyclic and solved
/// by the forest algorithm. `SolveResult::explored` counts leaves,
/// bounded by `3^{s_e}`.
pub fn solve_bdd(inst: &BddInstance, fes: &FeedbackEdgeSet) -> Result<SolveResult, SolveError> {
    validate_fes(&inst.g, fes)?;
    let mut graph = BranchGraph::new(&inst.g, 2 * fes.size());
    let mut leaves = 0u64;
    let witness = branch(inst, &mut graph, &fes.edges, 0, 0, &mut leaves)?;
    Ok(match witness {
        Some(w) => {
            debug_assert!(verify_bdd_solution(inst, &w));
            SolveResult::yes(w, leaves)
        }
        None => SolveResult::no(leaves),
    })
}

fn branch(
    inst: &BddInstance,
    graph: &mut BranchGraph,
    fes: &[(VertexId, VertexId)],
    edge_idx: usize,
    removed: usize,
    leaves: &mut u64,
) -> Result<Option<VertexSet>, SolveError> {
    if removed > inst.k {
        return Ok(None);
    }
    // Next feedback edge still present in this branch.
    let next = (edge_idx..fes.len()).find(|&i| {
        let (x, y) = fes[i];
        graph.has_edge(x, y)
    });
    let Some(i) = next else {
        *leaves += 1;
        let (g, ids, unremovable) = graph.materialize();
        debug_assert!(g.is_acyclic());
        let ann = AnnotatedBddInstance::new(g, unremovable, inst.d, inst.k - removed)?;
        let res = solve_annotated_bdd_forest(&ann)?;
        if !res.decision {
            return Ok(None);
        }
        let local = res.witness.expect("accepting forest solver returns a witness");
        // Gadget leaves are unremovable, so every chosen vertex maps
        // back into the original graph.
        let lifted: Vec<VertexId> = local.iter().map(|v| ids[v.index()]).collect();
        debug_assert!(lifted.iter().all(|v| v.index() < graph.original_n));
        let mut all: Vec<VertexId> = lifted;
        all.extend(
            (0..graph.original_n)
                .map(VertexId::new)
                .filter(|v| !graph.alive[v.index()]),
        );
        return Ok(Some(VertexSet::from_vec(all)));
    };

    let (x, y) = fes[i];
    // Branch 1/2: remove one endpoint (skipped if an earlier gadget
    // committed to keeping it).
    for v in [x, y] {
        if !graph.unremovable[v.index()] {
            let mut sub = graph.clone();
            sub.remove_vertex(v);
            if let Some(w) = branch(inst, &mut sub, fes, i + 1, removed + 1, leaves)? {
                return Ok(Some(w));
            }
        }
    }
    // Branch 3: keep both; replace the edge by degree-preserving
    // unremovable leaves.
    let mut sub = graph.clone();
    sub.remove_edge(x, y);
    sub.add_leaf(x);
    sub.add_leaf(y);
    sub.unremovable[x.index()] = true;
    sub.unremovable[y.index()] = true;
    branch(inst, &mut sub, fes, i + 1, removed, leaves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feedback::min_feedback_edge_set;
    use crate::oracle::{oracle_annotated_bdd_optimum, oracle_bdd};

    #[test]
    fn decision_step_examples() {
        // Removable leaf with degree 1 <= d: marked.
        let g = UndirectedGraph::new(2, &[(0, 1)]).unwrap();
        let inst = AnnotatedBddInstance::new(g, VertexSet::empty(), 1, 0).unwrap();
        let mut state = ForestState::new(&inst, RootRule::SmallestId).unwrap();
        let x = state.next_vertex().unwrap();
        assert_eq!(x, VertexId(1)); // deeper vertex first
        assert_eq!(
            decision_step(&mut state, x),
            Decision::Settled { removed: alloc::vec![], marked: Some(VertexId(1)) }
        );

        // Unremovable x with degree d + 2 and no removable neighbor:
        // no-instance (everything unremovable here).
        let star = UndirectedGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let all = VertexSet::from_indices(&[0, 1, 2, 3]);
        let inst = AnnotatedBddInstance::new(star, all, 1, 3).unwrap();
        let mut state = ForestState::new(&inst, RootRule::SmallestId).unwrap();
        // The leaves are marked (degree 1 < d + 1), then the center with
        // degree 3 = d + 2 cancels.
        for leaf in [VertexId(1), VertexId(2), VertexId(3)] {
            assert!(matches!(decision_step(&mut state, leaf), Decision::Settled { .. }));
        }
        assert_eq!(decision_step(&mut state, VertexId(0)), Decision::NoInstance);
        assert!(!solve_annotated_bdd_forest(&inst).unwrap().decision);

        // Removable x, removable parent, deg(x) = d + 1: parent removed.
        let path = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = AnnotatedBddInstance::new(path, VertexSet::empty(), 0, 1).unwrap();
        let mut state = ForestState::new(&inst, RootRule::SmallestId).unwrap();
        let x = state.next_vertex().unwrap();
        assert_eq!(x, VertexId(2));
        assert_eq!(
            decision_step(&mut state, x),
            Decision::Settled { removed: alloc::vec![VertexId(1)], marked: Some(VertexId(2)) }
        );
    }

    #[test]
    fn forest_solver_rejects_cyclic_input() {
        let g = UndirectedGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = AnnotatedBddInstance::new(g, VertexSet::empty(), 1, 1).unwrap();
        assert!(matches!(solve_annotated_bdd_forest(&inst), Err(SolveError::CyclicInput(_))));
    }

    #[test]
    fn forest_examples() {
        // Path P4, d = 1: one middle vertex must go.
        let p4 = UndirectedGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let opt = forest_optimum(&p4, &VertexSet::empty(), 1, RootRule::SmallestId).unwrap();
        assert_eq!(
            opt,
            oracle_annotated_bdd_optimum(&p4, &VertexSet::empty(), 1, None).unwrap()
        );

        // Star K1,4 with the center unremovable, d = 1: delete 3 leaves.
        let star = UndirectedGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let unrem = VertexSet::singleton(VertexId(0));
        let opt = forest_optimum(&star, &unrem, 1, RootRule::SmallestId).unwrap();
        assert_eq!(opt, Some(3));
        assert_eq!(opt, oracle_annotated_bdd_optimum(&star, &unrem, 1, None).unwrap());
    }

    fn random_forest(n: usize, next: &mut impl FnMut() -> u64) -> UndirectedGraph {
        let mut edges = Vec::new();
        for v in 1..n {
            if !next().is_multiple_of(4) {
                let p = (next() % v as u64) as usize;
                edges.push((p, v));
            }
        }
        UndirectedGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn forest_optimality_sweep() {
        let mut state = 2024u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..400 {
            let n = 2 + (next() % 9) as usize;
            let g = random_forest(n, &mut next);
            let unrem: VertexSet =
                (0..n).filter(|_| next() % 4 == 0).map(VertexId::new).collect();
            for d in 0..3 {
                let truth = oracle_annotated_bdd_optimum(&g, &unrem, d, None).unwrap();
                for rule in [RootRule::SmallestId, RootRule::LargestId] {
                    let got = forest_optimum(&g, &unrem, d, rule).unwrap();
                    assert_eq!(got, truth, "forest optimum n={n} d={d} rule={rule:?}");
                }
            }
        }
    }

    #[test]
    fn solve_bdd_on_acyclic_input_equals_forest_solver() {
        let g = UndirectedGraph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let fes = FeedbackEdgeSet { edges: alloc::vec![] };
        for d in 0..3 {
            for k in 0..3 {
                let inst = BddInstance::new(g.clone(), d, k).unwrap();
                let res = solve_bdd(&inst, &fes).unwrap();
                assert_eq!(res.explored, 1);
                let ann =
                    AnnotatedBddInstance::new(g.clone(), VertexSet::empty(), d, k).unwrap();
                let forest = solve_annotated_bdd_forest(&ann).unwrap();
                assert_eq!(res.decision, forest.decision);
            }
        }
    }

    #[test]
    fn c4_example_matches_oracle() {
        let c4 = UndirectedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let fes = min_feedback_edge_set(&c4);
        let inst = BddInstance::new(c4, 1, 1).unwrap();
        let truth = oracle_bdd(&inst, None).unwrap();
        let res = solve_bdd(&inst, &fes).unwrap();
        // Frozen from the brute force: deleting one C4 vertex leaves a
        // path with maximum degree 2 > 1, but deleting one vertex is
        // still enough? The oracle decides; both must agree.
        assert_eq!(res.decision, truth.decision);
        assert!(!truth.decision);
    }

    #[test]
    fn gadget_preserves_degrees() {
        let c4 = UndirectedGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mut bg = BranchGraph::new(&c4, 2);
        let before_x = bg.adjacency[0].len();
        let before_y = bg.adjacency[1].len();
        bg.remove_edge(VertexId(0), VertexId(1));
        bg.add_leaf(VertexId(0));
        bg.add_leaf(VertexId(1));
        assert_eq!(bg.adjacency[0].len(), before_x);
        assert_eq!(bg.adjacency[1].len(), before_y);
    }

    #[test]
    fn exhaustive_small_graphs_match_oracle() {
        // All graphs on 4 vertices, d <= 2, k <= 3.
        for mask in 0u32..(1 << 6) {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let g = UndirectedGraph::new(4, &edges).unwrap();
            let fes = min_feedback_edge_set(&g);
            for d in 0..3 {
                for k in 0..4 {
                    let inst = BddInstance::new(g.clone(), d, k).unwrap();
                    let truth = oracle_bdd(&inst, None).unwrap();
                    let res = solve_bdd(&inst, &fes).unwrap();
                    assert_eq!(res.decision, truth.decision, "mask={mask} d={d} k={k}");
                    assert!(res.explored <= 3u64.pow(fes.size() as u32));
                    if let Some(w) = res.witness {
                        assert!(verify_bdd_solution(&inst, &w));
                    }
                }
            }
        }
    }
}
