//! Simple directed and undirected graphs with the degree, neighborhood,
//! deletion and acyclicity primitives shared by every solver.
//!
//! Graphs are immutable after construction. Vertices are dense 0-based
//! indices internally (instance files are 1-based, see the `fbsolve`
//! crate). Deleting vertices produces a re-indexed graph together with a
//! stable old-to-new mapping, so all structural invariants can be
//! re-checked after every step. Neighbor lists are kept sorted, which
//! makes graph equality and serialization deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a vertex, 0-based, dense within its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn new(index: usize) -> Self {
        VertexId(index as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors from graph or vertex-set construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(VertexId),
    DuplicateEdge(VertexId, VertexId),
    VertexOutOfRange { id: VertexId, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge/arc ({u}, {v})"),
            GraphError::VertexOutOfRange { id, n } => {
                write!(f, "vertex {id} out of range for {n} vertices")
            }
        }
    }
}

/// A sorted, duplicate-free set of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet { members: Vec::new() }
    }

    /// Builds a set from arbitrary ids, sorting and deduplicating.
    pub fn from_vec(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet { members: ids }
    }

    pub fn from_indices(ids: &[usize]) -> Self {
        Self::from_vec(ids.iter().map(|&i| VertexId::new(i)).collect())
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet { members: vec![v] }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn insert(&mut self, v: VertexId) {
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut all: Vec<VertexId> = self.members.iter().chain(other.members.iter()).copied().collect();
        all.sort_unstable();
        all.dedup();
        VertexSet { members: all }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self.members.iter().copied().filter(|&v| other.contains(v)).collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self.members.iter().copied().filter(|&v| !other.contains(v)).collect(),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }

    /// All members must index into a graph with `n` vertices.
    pub fn validate(&self, n: usize) -> Result<(), GraphError> {
        for &v in &self.members {
            if v.index() >= n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
        }
        Ok(())
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        Self::from_vec(iter.into_iter().collect())
    }
}

/// Mapping produced by [`UndirectedGraph::delete_vertices`] and
/// [`DirectedGraph::delete_vertices`]: survivors keep their relative
/// order and are re-indexed densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMapping {
    old_to_new: Vec<Option<VertexId>>,
    new_to_old: Vec<VertexId>,
}

impl VertexMapping {
    fn from_deleted(n: usize, deleted: &VertexSet) -> Self {
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(n - deleted.len());
        for (old, slot) in old_to_new.iter_mut().enumerate() {
            let id = VertexId::new(old);
            if !deleted.contains(id) {
                *slot = Some(VertexId::new(new_to_old.len()));
                new_to_old.push(id);
            }
        }
        VertexMapping { old_to_new, new_to_old }
    }

    /// New id of a surviving vertex, `None` if it was deleted.
    pub fn new_id(&self, old: VertexId) -> Option<VertexId> {
        self.old_to_new[old.index()]
    }

    /// Original id of a vertex of the reduced graph.
    pub fn old_id(&self, new: VertexId) -> VertexId {
        self.new_to_old[new.index()]
    }

    pub fn map_set(&self, set: &VertexSet) -> Option<VertexSet> {
        let mut out = Vec::with_capacity(set.len());
        for v in set.iter() {
            out.push(self.new_id(v)?);
        }
        Some(VertexSet::from_vec(out))
    }

    /// Translates a set of reduced-graph vertices back to original ids.
    pub fn unmap_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vec(set.iter().map(|v| self.old_id(v)).collect())
    }
}

/// Simple undirected graph: no self-loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    m: usize,
    adjacency: Vec<Vec<VertexId>>,
}

impl UndirectedGraph {
    /// Builds a graph on `n` vertices from an edge list. Rejects
    /// self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            let (u, v) = (VertexId::new(a), VertexId::new(b));
            if a >= n {
                return Err(GraphError::VertexOutOfRange { id: u, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[a].push(v);
            adjacency[b].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(VertexId::new(u), w[0]));
            }
        }
        Ok(UndirectedGraph { n, m: edges.len(), adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId::new)
    }

    /// Number of neighbors of `v`. Panics on an invalid vertex id.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.index()].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.index()]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adjacency[u] {
                if (u as u32) < v.0 {
                    out.push((VertexId::new(u), v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `V \ s`, re-indexed, plus the index mapping.
    pub fn delete_vertices(&self, s: &VertexSet) -> (UndirectedGraph, VertexMapping) {
        debug_assert!(s.validate(self.n).is_ok());
        let mapping = VertexMapping::from_deleted(self.n, s);
        let nn = mapping.new_to_old.len();
        let mut adjacency = vec![Vec::new(); nn];
        let mut m = 0;
        for (new, &old) in mapping.new_to_old.iter().enumerate() {
            for &w in &self.adjacency[old.index()] {
                if let Some(nw) = mapping.new_id(w) {
                    adjacency[new].push(nw);
                    if nw.index() > new {
                        m += 1;
                    }
                }
            }
        }
        (UndirectedGraph { n: nn, m, adjacency }, mapping)
    }

    /// Removes a set of edges (each as an unordered pair) without
    /// touching vertices. Edges absent from the graph are ignored.
    pub fn delete_edges(&self, edges: &[(VertexId, VertexId)]) -> UndirectedGraph {
        let mut g = self.clone();
        for &(u, v) in edges {
            let (a, b) = (u.index(), v.index());
            if let Ok(pos) = g.adjacency[a].binary_search(&v) {
                g.adjacency[a].remove(pos);
                let pos = g.adjacency[b].binary_search(&u).expect("symmetric adjacency");
                g.adjacency[b].remove(pos);
                g.m -= 1;
            }
        }
        g
    }

    /// True iff the graph is a forest.
    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for u in 0..self.n {
            for &v in &self.adjacency[u] {
                if v.index() > u {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v.index()));
                    if ru == rv {
                        return false;
                    }
                    parent[ru] = rv;
                }
            }
        }
        true
    }

    /// Partition of the vertices into maximal connected sets, each
    /// sorted, the list ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(VertexId::new(u));
                for &v in &self.adjacency[u] {
                    if !seen[v.index()] {
                        seen[v.index()] = true;
                        stack.push(v.index());
                    }
                }
            }
            out.push(VertexSet::from_vec(comp));
        }
        out
    }
}

/// Simple directed graph: no self-loops, no multi-arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    m: usize,
    out_adjacency: Vec<Vec<VertexId>>,
    in_adjacency: Vec<Vec<VertexId>>,
}

impl DirectedGraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut out_adjacency = vec![Vec::new(); n];
        let mut in_adjacency = vec![Vec::new(); n];
        for &(a, b) in arcs {
            let (u, v) = (VertexId::new(a), VertexId::new(b));
            if a >= n {
                return Err(GraphError::VertexOutOfRange { id: u, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(u));
            }
            out_adjacency[a].push(v);
            in_adjacency[b].push(u);
        }
        for (u, list) in out_adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(VertexId::new(u), w[0]));
            }
        }
        for list in &mut in_adjacency {
            list.sort_unstable();
        }
        Ok(DirectedGraph { n, m: arcs.len(), out_adjacency, in_adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId::new)
    }

    /// Number of inneighbors of `v`. Panics on an invalid vertex id.
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adjacency[v.index()].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adjacency[v.index()].len()
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adjacency[v.index()]
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adjacency[v.index()]
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Arcs as `(tail, head)` pairs, sorted.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.out_adjacency[u] {
                out.push((VertexId::new(u), v));
            }
        }
        out
    }

    pub fn delete_vertices(&self, s: &VertexSet) -> (DirectedGraph, VertexMapping) {
        debug_assert!(s.validate(self.n).is_ok());
        let mapping = VertexMapping::from_deleted(self.n, s);
        let nn = mapping.new_to_old.len();
        let mut out_adjacency = vec![Vec::new(); nn];
        let mut in_adjacency = vec![Vec::new(); nn];
        let mut m = 0;
        for (new, &old) in mapping.new_to_old.iter().enumerate() {
            for &w in &self.out_adjacency[old.index()] {
                if let Some(nw) = mapping.new_id(w) {
                    out_adjacency[new].push(nw);
                    m += 1;
                }
            }
            for &w in &self.in_adjacency[old.index()] {
                if let Some(nw) = mapping.new_id(w) {
                    in_adjacency[new].push(nw);
                }
            }
        }
        (DirectedGraph { n: nn, m, out_adjacency, in_adjacency }, mapping)
    }

    pub fn delete_arcs(&self, arcs: &[(VertexId, VertexId)]) -> DirectedGraph {
        let mut g = self.clone();
        for &(u, v) in arcs {
            if let Ok(pos) = g.out_adjacency[u.index()].binary_search(&v) {
                g.out_adjacency[u.index()].remove(pos);
                let pos = g.in_adjacency[v.index()].binary_search(&u).expect("consistent in/out lists");
                g.in_adjacency[v.index()].remove(pos);
                g.m -= 1;
            }
        }
        g
    }

    /// True iff there is no directed cycle (a topological order exists).
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_adjacency[v].len()).collect();
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop() {
            seen += 1;
            for &v in &self.out_adjacency[u] {
                indeg[v.index()] -= 1;
                if indeg[v.index()] == 0 {
                    queue.push(v.index());
                }
            }
        }
        seen == self.n
    }
}
