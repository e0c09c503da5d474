//! Internal mutable views over immutable graphs: an alive mask plus a
//! degree-counter array, so cascade-style deletion loops run in O(deg)
//! per removal without rebuilding adjacency. Original vertex ids stay
//! stable, which keeps witness assembly trivial.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DirectedGraph, UndirectedGraph, VertexId, VertexSet};

#[derive(Clone)]
pub(crate) struct LiveUndirected<'a> {
    g: &'a UndirectedGraph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    alive_count: usize,
}

impl<'a> LiveUndirected<'a> {
    pub fn new(g: &'a UndirectedGraph) -> Self {
        let n = g.vertex_count();
        LiveUndirected {
            g,
            alive: vec![true; n],
            deg: (0..n).map(|v| g.degree(VertexId::new(v))).collect(),
            alive_count: n,
        }
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        debug_assert!(self.alive[v.index()]);
        self.deg[v.index()]
    }

    pub fn remove(&mut self, v: VertexId) {
        debug_assert!(self.alive[v.index()]);
        self.alive[v.index()] = false;
        self.alive_count -= 1;
        for &w in self.g.neighbors(v) {
            if self.alive[w.index()] {
                self.deg[w.index()] -= 1;
            }
        }
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| VertexId::new(i))
    }

    pub fn live_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&w| self.alive[w.index()])
    }

    /// Smallest-id alive vertex other than `skip` with degree at most
    /// `threshold`.
    pub fn min_id_low_degree(&self, threshold: usize, skip: VertexId) -> Option<VertexId> {
        self.alive_vertices().find(|&v| v != skip && self.deg[v.index()] <= threshold)
    }

    /// Compacts the live view into a fresh graph plus the original ids
    /// of its vertices in index order.
    pub fn materialize(&self) -> (UndirectedGraph, Vec<VertexId>) {
        let ids: Vec<VertexId> = self.alive_vertices().collect();
        let mut pos = vec![usize::MAX; self.g.vertex_count()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v.index()] = i;
        }
        let mut edges = Vec::new();
        for &v in &ids {
            for w in self.live_neighbors(v) {
                if v < w {
                    edges.push((pos[v.index()], pos[w.index()]));
                }
            }
        }
        let g = UndirectedGraph::new(ids.len(), &edges).expect("live view stays simple");
        (g, ids)
    }

    pub fn removed_set(&self) -> VertexSet {
        VertexSet::from_vec(
            self.alive.iter().enumerate().filter(|(_, &a)| !a).map(|(i, _)| VertexId::new(i)).collect(),
        )
    }
}

#[derive(Clone)]
pub(crate) struct LiveDirected<'a> {
    g: &'a DirectedGraph,
    alive: Vec<bool>,
    indeg: Vec<usize>,
    alive_count: usize,
}

impl<'a> LiveDirected<'a> {
    pub fn new(g: &'a DirectedGraph) -> Self {
        let n = g.vertex_count();
        LiveDirected {
            g,
            alive: vec![true; n],
            indeg: (0..n).map(|v| g.in_degree(VertexId::new(v))).collect(),
            alive_count: n,
        }
    }

    pub fn remove(&mut self, v: VertexId) {
        debug_assert!(self.alive[v.index()]);
        self.alive[v.index()] = false;
        self.alive_count -= 1;
        for &w in self.g.out_neighbors(v) {
            if self.alive[w.index()] {
                self.indeg[w.index()] -= 1;
            }
        }
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| VertexId::new(i))
    }

    /// Smallest-id alive vertex other than `skip` with indegree at most
    /// `threshold`.
    pub fn min_id_low_indegree(&self, threshold: usize, skip: VertexId) -> Option<VertexId> {
        self.alive_vertices().find(|&v| v != skip && self.indeg[v.index()] <= threshold)
    }
}
