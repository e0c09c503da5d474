//! Fixed-parameter backends for Annotated Minimum Degree Deletion: a
//! dynamic program over to-remain-tuples, a three-case method built on
//! two small integer programs, and an enumeration reference algorithm
//! used as an arbiter in tests.
//!
//! An annotated instance carries an undirected graph, a feedback vertex
//! set `V_f` avoiding the distinguished vertex `w_c`, a budget `k` and a
//! target final degree `i`; every vertex except `w_c` starts with degree
//! at least `i + 1`. The question is whether deleting at most `k`
//! vertices outside `V_f ∪ {w_c}` leaves `w_c` with degree exactly `i`
//! and everything else with degree at least `i + 1`.
//!
//! Because `G - V_f` is a forest, the components of
//! `G[V \ (V_f ∪ {w_c})]` hanging off distinct `w_c`-neighbors are
//! pairwise disjoint. Deleting a neighbor therefore forces a cascade
//! confined to its own component (its *affected set*), and distinct
//! neighbors' cascades never interact, which is what makes both the
//! dynamic program and the grouping of the integer programs work.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{UndirectedGraph, VertexId, VertexSet};
use crate::ip::{solve_bounded_ip, BoundedIntProgram, IntVar, LinearConstraint};
use crate::live::LiveUndirected;
use crate::oracle::SolveResult;
use crate::subsets;
use crate::SolveError;

/// Instance of Annotated Minimum Degree Deletion.
#[derive(Debug, Clone)]
pub struct AnnotatedMddInstance {
    pub g: UndirectedGraph,
    pub v_f: VertexSet,
    pub w_c: VertexId,
    pub k: usize,
    pub i: usize,
}

impl AnnotatedMddInstance {
    pub fn new(
        g: UndirectedGraph,
        v_f: VertexSet,
        w_c: VertexId,
        k: usize,
        i: usize,
    ) -> Result<Self, SolveError> {
        let inst = AnnotatedMddInstance { g, v_f, w_c, k, i };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        let n = self.g.vertex_count();
        if self.w_c.index() >= n {
            return Err(SolveError::Precondition("w_c out of range".into()));
        }
        if self.v_f.validate(n).is_err() {
            return Err(SolveError::Precondition("feedback set member out of range".into()));
        }
        if self.v_f.contains(self.w_c) {
            return Err(SolveError::Precondition("w_c must not lie in the feedback set".into()));
        }
        if !self.g.delete_vertices(&self.v_f).0.is_acyclic() {
            return Err(SolveError::Precondition("V_f is not a feedback vertex set".into()));
        }
        for v in self.g.vertices() {
            if v != self.w_c && self.g.degree(v) < self.i + 1 {
                return Err(SolveError::Precondition(format!(
                    "vertex {v} has degree {} < i+1 = {}",
                    self.g.degree(v),
                    self.i + 1
                )));
            }
        }
        Ok(())
    }

    /// Vertices eligible for deletion: `V \ (V_f ∪ {w_c})`.
    fn is_removable(&self, v: VertexId) -> bool {
        v != self.w_c && !self.v_f.contains(v)
    }
}

/// Witness check against the defining conditions (final degree of `w_c`
/// exactly `i`, everyone else at least `i + 1`).
pub fn verify_annotated_exact(inst: &AnnotatedMddInstance, witness: &VertexSet) -> bool {
    if witness.len() > inst.k
        || witness.validate(inst.g.vertex_count()).is_err()
        || witness.iter().any(|v| !inst.is_removable(v))
    {
        return false;
    }
    let (h, map) = inst.g.delete_vertices(witness);
    let wc = map.new_id(inst.w_c).expect("w_c not removable");
    h.degree(wc) == inst.i && h.vertices().all(|v| v == wc || h.degree(v) > inst.i)
}

/// Nearly-solution check: final degree of `w_c` exactly `i - 1`,
/// everyone else at least `i`. A nearly-solution still makes `w_c` the
/// unique minimum-degree vertex, which is what the unannotated solvers
/// need.
pub fn verify_annotated_nearly(inst: &AnnotatedMddInstance, witness: &VertexSet) -> bool {
    if inst.i == 0
        || witness.len() > inst.k
        || witness.validate(inst.g.vertex_count()).is_err()
        || witness.iter().any(|v| !inst.is_removable(v))
    {
        return false;
    }
    let (h, map) = inst.g.delete_vertices(witness);
    let wc = map.new_id(inst.w_c).expect("w_c not removable");
    h.degree(wc) == inst.i - 1 && h.vertices().all(|v| v == wc || h.degree(v) >= inst.i)
}

/// Per-neighbor cascade data. For each neighbor `x` of `w_c` this
/// records whether `x` may be deleted at all, the affected set `A[x]`
/// (the vertices forced out when `x` is deleted), its cost `|A[x]|`,
/// and the number of `A[x]`-neighbors of every feedback vertex.
#[derive(Debug, Clone)]
pub struct AffectedSets {
    /// Sorted neighbors of `w_c`, aligned with `entries`.
    pub neighbors: Vec<VertexId>,
    pub entries: Vec<AffectedEntry>,
}

#[derive(Debug, Clone)]
pub struct AffectedEntry {
    pub x: VertexId,
    /// False exactly when `x` lies in the feedback set (the instance
    /// never allows deleting it; its cost is treated as infinite).
    pub deletable: bool,
    pub set: VertexSet,
    pub cost: usize,
    /// `e(v_j, x)` for each feedback vertex, in `V_f` order.
    pub vf_hits: Vec<u32>,
}

impl AffectedSets {
    pub fn entry_for(&self, x: VertexId) -> Option<&AffectedEntry> {
        self.entries.iter().find(|e| e.x == x)
    }
}

/// Computes the affected set of every `w_c`-neighbor: the fixpoint of
/// "a removable vertex whose degree would drop to at most `i` must also
/// be deleted", confined to `G[V \ (V_f ∪ {w_c})]`.
pub fn compute_affected(inst: &AnnotatedMddInstance) -> AffectedSets {
    let g = &inst.g;
    let vf: Vec<VertexId> = inst.v_f.iter().collect();
    let neighbors: Vec<VertexId> = g.neighbors(inst.w_c).to_vec();
    let mut entries = Vec::with_capacity(neighbors.len());
    let mut affected_anywhere = vec![false; g.vertex_count()];

    for &x in &neighbors {
        if !inst.is_removable(x) {
            entries.push(AffectedEntry {
                x,
                deletable: false,
                set: VertexSet::empty(),
                cost: 0,
                vf_hits: vec![0; vf.len()],
            });
            continue;
        }
        let mut in_set = vec![false; g.vertex_count()];
        let mut deg_left: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(VertexId::new(v))).collect();
        let mut queue = vec![x];
        in_set[x.index()] = true;
        let mut members = vec![x];
        while let Some(a) = queue.pop() {
            for &w in g.neighbors(a) {
                if inst.is_removable(w) && !in_set[w.index()] {
                    deg_left[w.index()] -= 1;
                    if deg_left[w.index()] <= inst.i {
                        in_set[w.index()] = true;
                        members.push(w);
                        queue.push(w);
                    }
                }
            }
        }
        let set = VertexSet::from_vec(members);
        // Affected sets of distinct neighbors live in distinct
        // components of the forest part and never overlap.
        debug_assert!(
            set.iter().all(|v| !affected_anywhere[v.index()]),
            "affected sets of distinct neighbors must be disjoint"
        );
        for v in set.iter() {
            affected_anywhere[v.index()] = true;
        }
        let vf_hits = vf
            .iter()
            .map(|&v_j| g.neighbors(v_j).iter().filter(|&&w| set.contains(w)).count() as u32)
            .collect();
        entries.push(AffectedEntry { x, deletable: true, cost: set.len(), set, vf_hits });
    }
    AffectedSets { neighbors, entries }
}

/// Per-feedback-vertex requirement vector: entry `j` is how many more
/// neighbors of `v_j` from the still-undecided region must survive.
/// Entries are clamped to `0..=i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToRemainTuple(pub Vec<u32>);

/// Initial to-remain-tuple: `s⁰_j = max(0, i+1 - |N(v_j) ∩ U|)` where
/// `U` is the set of vertices no deletion can ever remove, i.e.
/// everything outside the union of the affected sets (in particular all
/// of `V_f` and `w_c` itself).
pub fn initial_tuple(inst: &AnnotatedMddInstance, affected: &AffectedSets) -> ToRemainTuple {
    let mut in_some_a = vec![false; inst.g.vertex_count()];
    for e in &affected.entries {
        for v in e.set.iter() {
            in_some_a[v.index()] = true;
        }
    }
    let tuple = inst
        .v_f
        .iter()
        .map(|v_j| {
            let unaffected = inst
                .g
                .neighbors(v_j)
                .iter()
                .filter(|&&w| !in_some_a[w.index()])
                .count();
            ((inst.i + 1).saturating_sub(unaffected)) as u32
        })
        .collect();
    ToRemainTuple(tuple)
}

/// Orientation of the `remain()` update. The recurrence looks up the
/// predecessor state when a neighbor is fixed to remain; with the
/// table's initialization (cost 0 exactly at tuples dominating `s⁰`)
/// and acceptance at the all-zero tuple, the additive form is the sound
/// one, as the oracle sweeps confirm. The subtractive variant is kept
/// selectable for the same sweeps to demonstrate the difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemainVariant {
    #[default]
    Additive,
    Subtractive,
}

/// Componentwise update of a to-remain-tuple when the neighbor `x` is
/// fixed to remain: `min(max(0, s_j ± e(v_j, {x})), i+1)`.
pub fn remain(
    s: &ToRemainTuple,
    x: VertexId,
    inst: &AnnotatedMddInstance,
    affected: &AffectedSets,
    variant: RemainVariant,
) -> ToRemainTuple {
    let e = &affected.entry_for(x).expect("x must be a neighbor of w_c").vf_hits;
    let cap = (inst.i + 1) as u32;
    ToRemainTuple(
        s.0.iter()
            .zip(e)
            .map(|(&sj, &ej)| {
                let v = match variant {
                    RemainVariant::Additive => sj.saturating_add(ej),
                    RemainVariant::Subtractive => sj.saturating_sub(ej),
                };
                v.min(cap)
            })
            .collect(),
    )
}

/// Dynamic-programming table statistics.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpTable {
    /// Tuple-space size actually allocated (product of per-component
    /// ranges after clamping to the initial requirement).
    pub tuple_states: u64,
    /// Total table cells across all layers.
    pub cells: u64,
}

const INF: u64 = u64::MAX / 4;

/// Dynamic program over `(processed neighbors, deletions, tuple)`
/// states with the default (additive) `remain` orientation.
pub fn annotated_mdd_dp(inst: &AnnotatedMddInstance) -> SolveResult {
    annotated_mdd_dp_with(inst, RemainVariant::Additive).0
}

/// As [`annotated_mdd_dp`], returning the table statistics and using
/// the given `remain` orientation.
pub fn annotated_mdd_dp_with(
    inst: &AnnotatedMddInstance,
    variant: RemainVariant,
) -> (SolveResult, DpTable) {
    debug_assert!(inst.validate().is_ok());
    let deg_wc = inst.g.degree(inst.w_c);
    if deg_wc < inst.i {
        return (SolveResult::no(0), DpTable::default());
    }
    let z_target = deg_wc - inst.i;

    let affected = compute_affected(inst);
    let s0 = initial_tuple(inst, &affected);

    // Components above the initial requirement behave identically, so
    // the stored range of component j is 0..=s0_j.
    let radices: Vec<u32> = s0.0.iter().map(|&s| s + 1).collect();
    let tuple_states: u64 = radices.iter().map(|&r| r as u64).product();
    let index_of = |t: &[u32]| -> usize {
        let mut idx = 0usize;
        for (j, &v) in t.iter().enumerate() {
            idx = idx * radices[j] as usize + v as usize;
        }
        idx
    };
    let tuple_at = |mut idx: usize| -> Vec<u32> {
        let mut t = vec![0u32; radices.len()];
        for j in (0..radices.len()).rev() {
            t[j] = (idx % radices[j] as usize) as u32;
            idx /= radices[j] as usize;
        }
        t
    };

    let ts = tuple_states as usize;
    let layer_cells = (z_target + 1) * ts;
    // Layer x: cost of deciding the first x neighbors with z deletions
    // realizing a given tuple. All layers are kept for backtracking.
    let mut layers: Vec<Vec<u64>> = Vec::with_capacity(affected.neighbors.len() + 1);
    let mut base = vec![INF; layer_cells];
    base[index_of(&s0.0)] = 0; // z = 0 block starts at offset 0
    layers.push(base);

    for e in &affected.entries {
        let prev = layers.last().expect("at least the base layer");
        let mut cur = vec![INF; layer_cells];
        for z in 0..=z_target {
            for idx in 0..ts {
                let tuple = tuple_at(idx);
                let mut best = INF;
                if z > 0 && e.deletable {
                    let c = prev[(z - 1) * ts + idx].saturating_add(e.cost as u64);
                    best = best.min(c);
                }
                // Fix this neighbor to remain: look up the predecessor
                // tuple via remain(), clamped into the stored range.
                let pred = remain(&ToRemainTuple(tuple), e.x, inst, &affected, variant);
                let clamped: Vec<u32> =
                    pred.0.iter().zip(&s0.0).map(|(&p, &cap)| p.min(cap)).collect();
                best = best.min(prev[z * ts + index_of(&clamped)]);
                cur[z * ts + idx] = best;
            }
        }
        layers.push(cur);
    }

    let table = DpTable { tuple_states, cells: (layers.len() as u64) * layer_cells as u64 };
    let zero_idx = index_of(&vec![0u32; radices.len()]);
    let final_cost = layers[affected.neighbors.len()][z_target * ts + zero_idx];
    if final_cost > inst.k as u64 {
        return (SolveResult::no(table.cells), table);
    }

    // Backtrack to recover which neighbors were deleted.
    let mut deleted: Vec<usize> = Vec::new();
    let mut z = z_target;
    let mut tuple: Vec<u32> = vec![0; radices.len()];
    for x in (0..affected.neighbors.len()).rev() {
        let e = &affected.entries[x];
        let cur_val = layers[x + 1][z * ts + index_of(&tuple)];
        let pred = remain(&ToRemainTuple(tuple.clone()), e.x, inst, &affected, variant);
        let clamped: Vec<u32> = pred.0.iter().zip(&s0.0).map(|(&p, &cap)| p.min(cap)).collect();
        if layers[x][z * ts + index_of(&clamped)] == cur_val {
            tuple = clamped;
        } else {
            debug_assert!(z > 0 && e.deletable);
            deleted.push(x);
            z -= 1;
        }
    }
    debug_assert_eq!(z, 0);

    let mut witness = VertexSet::empty();
    for x in deleted {
        witness = witness.union(&affected.entries[x].set);
    }
    debug_assert!(
        variant != RemainVariant::Additive || verify_annotated_exact(inst, &witness),
        "DP witness failed the definitional check"
    );
    (SolveResult::yes(witness, table.cells), table)
}

/// Reference algorithm: branch over every size-`i` subset of `N(w_c)`
/// to retain, delete the rest, cascade, and check. Exponential in `i`;
/// refuses when the number of branches exceeds `max_branches`.
pub fn annotated_mdd_xp(
    inst: &AnnotatedMddInstance,
    max_branches: u128,
) -> Result<SolveResult, SolveError> {
    debug_assert!(inst.validate().is_ok());
    let neighbors: Vec<VertexId> = inst.g.neighbors(inst.w_c).to_vec();
    if neighbors.len() < inst.i {
        return Ok(SolveResult::no(0));
    }
    let branches = subsets::binomial(neighbors.len(), inst.i);
    if branches > max_branches {
        return Err(SolveError::BranchBudgetExceeded { branches, budget: max_branches });
    }
    let mut explored = 0u64;
    let hit = subsets::find_combination(neighbors.len(), inst.i, |keep| {
        explored += 1;
        let mut live = LiveUndirected::new(&inst.g);
        let mut keep_iter = keep.iter().copied().peekable();
        let mut ok = true;
        for (idx, &v) in neighbors.iter().enumerate() {
            if keep_iter.peek() == Some(&idx) {
                keep_iter.next();
            } else if inst.is_removable(v) {
                live.remove(v);
            } else {
                ok = false; // cannot delete a feedback-set neighbor
                break;
            }
        }
        if !ok {
            return None;
        }
        loop {
            match live.min_id_low_degree(inst.i, inst.w_c) {
                Some(v) if inst.is_removable(v) => live.remove(v),
                Some(_) => return None, // would force a feedback vertex
                None => break,
            }
        }
        let witness = live.removed_set();
        if witness.len() <= inst.k && live.degree(inst.w_c) == inst.i {
            debug_assert!(verify_annotated_exact(inst, &witness));
            Some(witness)
        } else {
            None
        }
    });
    Ok(match hit {
        Some(w) => SolveResult::yes(w, explored),
        None => SolveResult::no(explored),
    })
}

/// Polynomial routine for target degrees 0 and 1: the retained
/// neighborhood has at most one element, so plain branching is linear.
pub fn annotated_low_i(inst: &AnnotatedMddInstance) -> SolveResult {
    debug_assert!(inst.i <= 1);
    annotated_mdd_xp(inst, u128::MAX).expect("unlimited budget never refuses")
}

/// Grouping of the removable `w_c`-neighbors by their feedback-set
/// neighborhood signature. Only realized groups are materialized.
#[derive(Debug, Clone)]
pub struct NeighborGroup {
    /// `N(x) ∩ V_f`, identical for every member.
    pub signature: VertexSet,
    /// Members, ascending.
    pub members: Vec<VertexId>,
    /// Members that must stay when no cascades are allowed (they have a
    /// neighbor other than `w_c` of degree exactly `i + 1`).
    pub forced_keep: Vec<VertexId>,
}

/// Groups the removable neighbors of `w_c` by `N(x) ∩ V_f`, recording
/// the coefficients of the two integer programs.
pub fn neighbor_groups(inst: &AnnotatedMddInstance) -> Vec<NeighborGroup> {
    let mut groups: Vec<NeighborGroup> = Vec::new();
    for &x in inst.g.neighbors(inst.w_c) {
        if !inst.is_removable(x) {
            continue;
        }
        let signature: VertexSet =
            inst.g.neighbors(x).iter().copied().filter(|&v| inst.v_f.contains(v)).collect();
        let forced = inst
            .g
            .neighbors(x)
            .iter()
            .any(|&y| y != inst.w_c && inst.g.degree(y) == inst.i + 1);
        match groups.iter_mut().find(|g| g.signature == signature) {
            Some(g) => {
                g.members.push(x);
                if forced {
                    g.forced_keep.push(x);
                }
            }
            None => groups.push(NeighborGroup {
                signature,
                members: vec![x],
                forced_keep: if forced { vec![x] } else { Vec::new() },
            }),
        }
    }
    for g in &mut groups {
        g.members.sort_unstable();
        g.forced_keep.sort_unstable();
    }
    groups
}

fn vf_row_constraints(
    inst: &AnnotatedMddInstance,
    groups: &[NeighborGroup],
    rhs_target: usize,
) -> Vec<LinearConstraint> {
    // For v_q in V_f: (neighbors outside the removable neighborhood,
    // which always survive) + (retained group members adjacent to v_q)
    // must reach the target degree.
    inst.v_f
        .iter()
        .map(|v_q| {
            let removable_neighbor =
                |w: VertexId| inst.is_removable(w) && inst.g.has_edge(w, inst.w_c);
            let always_surviving =
                inst.g.neighbors(v_q).iter().filter(|&&w| !removable_neighbor(w)).count() as i64;
            LinearConstraint {
                coeffs: groups
                    .iter()
                    .map(|g| if g.signature.contains(v_q) { 1 } else { 0 })
                    .collect(),
                bound: rhs_target as i64 - always_surviving,
            }
        })
        .collect()
}

/// ILP-1: how many vertices of each neighbor group stay so that `w_c`
/// can reach degree `i` with a solution contained in its neighborhood.
/// Forced-keep members give the lower bounds; feedback vertices need
/// final degree at least `i + 1`.
pub fn build_ilp1(inst: &AnnotatedMddInstance) -> BoundedIntProgram {
    let groups = neighbor_groups(inst);
    BoundedIntProgram {
        vars: groups
            .iter()
            .map(|g| IntVar { lo: g.forced_keep.len() as i64, hi: g.members.len() as i64 })
            .collect(),
        constraints: vf_row_constraints(inst, &groups, inst.i + 1),
    }
}

/// ILP-2: like ILP-1 but for nearly-solutions — no forced-keep lower
/// bounds and feedback vertices only need final degree at least `i`.
pub fn build_ilp2(inst: &AnnotatedMddInstance) -> BoundedIntProgram {
    let groups = neighbor_groups(inst);
    BoundedIntProgram {
        vars: groups.iter().map(|g| IntVar { lo: 0, hi: g.members.len() as i64 }).collect(),
        constraints: vf_row_constraints(inst, &groups, inst.i),
    }
}

/// Turns group retention counts into a concrete deletion set. Extra
/// retention beyond the optimum is distributed in group order until
/// exactly `target_keep` neighbors stay. With `keep_forced_first`, each
/// group retains its forced members before padding by ascending id
/// (the ILP-1 shape); otherwise retention is plain ascending id.
fn witness_from_counts(
    groups: &[NeighborGroup],
    counts: &[i64],
    target_keep: usize,
    keep_forced_first: bool,
) -> Option<VertexSet> {
    let total_members: usize = groups.iter().map(|g| g.members.len()).sum();
    let optimum: i64 = counts.iter().sum();
    if (optimum as usize) > target_keep || target_keep > total_members {
        return None;
    }
    let mut keep: Vec<i64> = counts.to_vec();
    let mut slack = target_keep as i64 - optimum;
    for (j, g) in groups.iter().enumerate() {
        if slack == 0 {
            break;
        }
        let room = g.members.len() as i64 - keep[j];
        let add = room.min(slack);
        keep[j] += add;
        slack -= add;
    }
    if slack != 0 {
        return None;
    }
    let mut deleted = Vec::new();
    for (j, g) in groups.iter().enumerate() {
        let mut kept: Vec<VertexId> = if keep_forced_first { g.forced_keep.clone() } else { Vec::new() };
        debug_assert!(kept.len() as i64 <= keep[j]);
        for &m in &g.members {
            if kept.len() as i64 >= keep[j] {
                break;
            }
            if !kept.contains(&m) {
                kept.push(m);
            }
        }
        for &m in &g.members {
            if !kept.contains(&m) {
                deleted.push(m);
            }
        }
    }
    Some(VertexSet::from_vec(deleted))
}

/// Outcome detail of [`annotated_mdd_via_ilp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IlpOutcome {
    /// Deleting every removable neighbor (plus its cascade) works.
    AllNeighborsDeleted,
    /// A neighborhood-only solution set exists (ILP-1).
    ExactWithinNeighborhood,
    /// A neighborhood-only nearly-solution exists (ILP-2): `w_c` ends
    /// with degree `i - 1` and everyone else with at least `i`.
    Nearly,
    No,
}

/// Three-case method. Cases 1 and 2 certify the instance itself; case 3
/// certifies a *nearly-solution*, which leaves `w_c` the unique minimum
/// at degree `i - 1` instead of exactly `i`. The unannotated MDD solver
/// accepts either outcome, so the returned decision is the disjunction;
/// [`IlpOutcome`] tells which case fired and every witness is checked
/// against its own definition before being accepted.
///
/// Targets `i ≤ 1` are dispatched to the polynomial routine
/// [`annotated_low_i`] (exact semantics).
pub fn annotated_mdd_via_ilp(inst: &AnnotatedMddInstance) -> (SolveResult, IlpOutcome) {
    debug_assert!(inst.validate().is_ok());
    if inst.i <= 1 {
        let res = annotated_low_i(inst);
        let outcome = if res.decision { IlpOutcome::ExactWithinNeighborhood } else { IlpOutcome::No };
        return (res, outcome);
    }
    let deg_wc = inst.g.degree(inst.w_c);
    let vf_neighbors =
        inst.g.neighbors(inst.w_c).iter().filter(|&&v| inst.v_f.contains(v)).count();
    let mut explored = 0u64;

    // Case 1: every removable neighbor is deleted, cascades included.
    explored += 1;
    {
        let mut live = LiveUndirected::new(&inst.g);
        let removable: Vec<VertexId> = inst
            .g
            .neighbors(inst.w_c)
            .iter()
            .copied()
            .filter(|&v| inst.is_removable(v))
            .collect();
        for v in removable {
            live.remove(v);
        }
        let mut feasible = true;
        loop {
            match live.min_id_low_degree(inst.i, inst.w_c) {
                Some(v) if inst.is_removable(v) => live.remove(v),
                Some(_) => {
                    feasible = false;
                    break;
                }
                None => break,
            }
        }
        if feasible {
            let witness = live.removed_set();
            if verify_annotated_exact(inst, &witness) {
                return (SolveResult::yes(witness, explored), IlpOutcome::AllNeighborsDeleted);
            }
        }
    }

    let groups = neighbor_groups(inst);

    // Case 2: a solution inside N(w_c); w_c keeps i neighbors in total.
    explored += 1;
    if inst.i >= vf_neighbors && deg_wc >= inst.i && deg_wc - inst.i <= inst.k {
        let keep_target = inst.i - vf_neighbors;
        if let Some((counts, optimum)) = solve_bounded_ip(&build_ilp1(inst)) {
            if optimum <= keep_target as i64 {
                if let Some(witness) = witness_from_counts(&groups, &counts, keep_target, true) {
                    if verify_annotated_exact(inst, &witness) {
                        return (
                            SolveResult::yes(witness, explored),
                            IlpOutcome::ExactWithinNeighborhood,
                        );
                    }
                }
            }
        }
    }

    // Case 3: a nearly-solution inside N(w_c); w_c keeps i - 1 in total.
    explored += 1;
    if inst.i > vf_neighbors && deg_wc >= inst.i - 1 && deg_wc - (inst.i - 1) <= inst.k {
        let keep_target = inst.i - 1 - vf_neighbors;
        if let Some((counts, optimum)) = solve_bounded_ip(&build_ilp2(inst)) {
            if optimum <= keep_target as i64 {
                if let Some(witness) = witness_from_counts(&groups, &counts, keep_target, false) {
                    if verify_annotated_nearly(inst, &witness) {
                        return (SolveResult::yes(witness, explored), IlpOutcome::Nearly);
                    }
                }
            }
        }
    }

    (SolveResult::no(explored), IlpOutcome::No)
}
