//! Minimum Degree Deletion: the low-final-degree polynomial check, the
//! Remove Low Degree kernelization with its 2·s_e vertex guarantee, the
//! feedback-edge-set search tree, and the feedback-vertex-set driver
//! that delegates to the annotated backends.

use alloc::vec::Vec;

use crate::annotated::{annotated_mdd_dp, annotated_mdd_via_ilp, AnnotatedMddInstance};
use crate::feedback::{min_feedback_edge_set, FeedbackEdgeSet, FeedbackVertexSet};
use crate::graph::{VertexId, VertexSet};
use crate::live::LiveUndirected;
use crate::oracle::{verify_mdd_solution, MddInstance, SolveResult};
use crate::subsets;
use crate::SolveError;

/// Result of applying the Remove Low Degree data reduction.
#[derive(Debug, Clone)]
pub struct KernelOutput {
    /// The reduced instance. When `resolved` is `Some(true)` this is
    /// the trivial single-vertex instance with budget zero.
    pub reduced: MddInstance,
    /// `Some(decision)` when the rule already decided the instance.
    pub resolved: Option<bool>,
    /// Vertices removed by the degree-at-most-two cascade.
    pub removed_count: usize,
    /// The cascade removals, in order, as original vertex ids.
    pub trace: Vec<VertexId>,
    /// Witness for a `Some(true)` resolution, in original ids.
    pub resolution_witness: Option<VertexSet>,
    /// Original id of each reduced-instance vertex, in index order.
    pub vertex_origin: Vec<VertexId>,
}

/// Looks for a witness of size at most `k` under which `w_c` becomes
/// the unique minimum-degree vertex with final degree at most one.
///
/// Tries final degree zero (remove the whole neighborhood) and final
/// degree one (each retained neighbor in ascending order), then
/// cascades away every vertex whose degree is at most the current
/// degree of `w_c`. Branches exceeding the budget abort early, keeping
/// the whole check within the O(n²·k) step budget.
pub fn check_low_degree_solution(inst: &MddInstance) -> Option<VertexSet> {
    let live = LiveUndirected::new(&inst.g);
    low_degree_solution_live(&live, inst.w_c, inst.k)
}

fn low_degree_solution_live(
    live: &LiveUndirected<'_>,
    w_c: VertexId,
    budget: usize,
) -> Option<VertexSet> {
    let neighbors: Vec<VertexId> = live.live_neighbors(w_c).collect();
    let mut retained_choices: Vec<Option<VertexId>> = Vec::with_capacity(neighbors.len() + 1);
    retained_choices.push(None);
    retained_choices.extend(neighbors.iter().map(|&u| Some(u)));

    'branch: for retained in retained_choices {
        let mut sim = live.clone();
        let mut removed: Vec<VertexId> = Vec::new();
        for &u in &neighbors {
            if Some(u) != retained {
                sim.remove(u);
                removed.push(u);
                if removed.len() > budget {
                    continue 'branch;
                }
            }
        }
        loop {
            let threshold = sim.degree(w_c);
            match sim.min_id_low_degree(threshold, w_c) {
                Some(v) => {
                    sim.remove(v);
                    removed.push(v);
                    if removed.len() > budget {
                        continue 'branch;
                    }
                }
                None => break,
            }
        }
        debug_assert!(sim.degree(w_c) <= 1);
        return Some(VertexSet::from_vec(removed));
    }
    None
}

enum LiveKernelOutcome {
    ResolvedYes(VertexSet),
    ResolvedNo,
    Reduced,
}

/// Applies Remove Low Degree on a live view. Mutates `live` and
/// `budget`, appending cascade removals to `trace`.
fn remove_low_degree_live(
    live: &mut LiveUndirected<'_>,
    w_c: VertexId,
    budget: &mut i64,
    trace: &mut Vec<VertexId>,
) -> LiveKernelOutcome {
    if *budget >= 0 {
        if let Some(w) = low_degree_solution_live(live, w_c, *budget as usize) {
            return LiveKernelOutcome::ResolvedYes(w);
        }
    }
    // No solution leaves w_c with final degree <= 1, so every other
    // vertex of degree <= 2 is forced into the solution; removing one
    // together with a budget decrement preserves that property.
    while let Some(v) = live.min_id_low_degree(2, w_c) {
        live.remove(v);
        trace.push(v);
        *budget -= 1;
        if *budget < 0 {
            return LiveKernelOutcome::ResolvedNo;
        }
    }
    LiveKernelOutcome::Reduced
}

/// Remove Low Degree: either resolves the instance outright via
/// [`check_low_degree_solution`], or iteratively deletes every vertex
/// other than `w_c` of degree at most two (decrementing the budget), so
/// that the reduced instance has minimum non-`w_c` degree at least
/// three.
pub fn remove_low_degree(inst: &MddInstance) -> KernelOutput {
    let mut live = LiveUndirected::new(&inst.g);
    let mut budget = inst.k as i64;
    let mut trace = Vec::new();
    let outcome = remove_low_degree_live(&mut live, inst.w_c, &mut budget, &mut trace);
    match outcome {
        LiveKernelOutcome::ResolvedYes(extra) => {
            let witness = VertexSet::from_vec(trace.clone()).union(&extra);
            let trivial = crate::graph::UndirectedGraph::new(1, &[]).expect("single vertex");
            KernelOutput {
                reduced: MddInstance { g: trivial, w_c: VertexId(0), k: 0 },
                resolved: Some(true),
                removed_count: trace.len(),
                trace,
                resolution_witness: Some(witness),
                vertex_origin: alloc::vec![inst.w_c],
            }
        }
        LiveKernelOutcome::ResolvedNo => {
            let (g, origin) = live.materialize();
            let w_c = VertexId::new(
                origin.iter().position(|&v| v == inst.w_c).expect("w_c never removed"),
            );
            KernelOutput {
                reduced: MddInstance { g, w_c, k: 0 },
                resolved: Some(false),
                removed_count: trace.len(),
                trace,
                resolution_witness: None,
                vertex_origin: origin,
            }
        }
        LiveKernelOutcome::Reduced => {
            let (g, origin) = live.materialize();
            let w_c = VertexId::new(
                origin.iter().position(|&v| v == inst.w_c).expect("w_c never removed"),
            );
            KernelOutput {
                reduced: MddInstance { g, w_c, k: budget as usize },
                resolved: None,
                removed_count: trace.len(),
                trace,
                resolution_witness: None,
                vertex_origin: origin,
            }
        }
    }
}

/// Kernel size guarantee: an unresolved reduced instance has at most
/// `2 · s_e` vertices, where `s_e` is its minimum feedback edge set
/// size.
pub fn kernel_size_bound(reduced: &MddInstance) -> bool {
    let s_e = min_feedback_edge_set(&reduced.g).size();
    reduced.g.vertex_count() <= 2 * s_e
}

fn validate_fes(inst: &MddInstance, fes: &FeedbackEdgeSet) -> Result<(), SolveError> {
    let n = inst.g.vertex_count();
    for &(u, v) in &fes.edges {
        if u.index() >= n || v.index() >= n || !inst.g.has_edge(u, v) {
            return Err(SolveError::InvalidFeedbackSet);
        }
    }
    if !inst.g.delete_edges(&fes.edges).is_acyclic() {
        return Err(SolveError::InvalidFeedbackSet);
    }
    Ok(())
}

/// Search-tree solver over a feedback edge set: kernelize, branch over
/// the deleted subset of the `w_c`-neighbors reached through feedback
/// edges, re-kernelize, branch over the remaining neighbors, then
/// cascade away everything of degree at most `deg(w_c)`.
///
/// `SolveResult::explored` counts the leaf branches, which stay within
/// `2^{s_e}`.
pub fn mdd_search(inst: &MddInstance, fes: &FeedbackEdgeSet) -> Result<SolveResult, SolveError> {
    validate_fes(inst, fes)?;
    let mut branches = 0u64;

    let mut live0 = LiveUndirected::new(&inst.g);
    let mut k0 = inst.k as i64;
    let mut trace = Vec::new();
    match remove_low_degree_live(&mut live0, inst.w_c, &mut k0, &mut trace) {
        LiveKernelOutcome::ResolvedYes(extra) => {
            let witness = live0.removed_set().union(&extra);
            debug_assert!(verify_mdd_solution(inst, &witness));
            return Ok(SolveResult::yes(witness, branches));
        }
        LiveKernelOutcome::ResolvedNo => return Ok(SolveResult::no(branches)),
        LiveKernelOutcome::Reduced => {}
    }

    // Neighbors of w_c joined through feedback edges, among survivors.
    let n_e: Vec<VertexId> = fes
        .edges
        .iter()
        .filter_map(|&(u, v)| {
            if u == inst.w_c {
                Some(v)
            } else if v == inst.w_c {
                Some(u)
            } else {
                None
            }
        })
        .filter(|&x| live0.is_alive(x))
        .collect();
    let n_e = VertexSet::from_vec(n_e);

    let outer: Vec<VertexId> = n_e.iter().collect();
    let mut answer: Option<VertexSet> = None;
    subsets::find_subset_ascending::<()>(outer.len(), outer.len(), |combo| {
        let mut live1 = live0.clone();
        let mut k1 = k0 - combo.len() as i64;
        if k1 < 0 {
            return None;
        }
        for &ci in combo {
            live1.remove(outer[ci]);
        }
        let mut trace1 = Vec::new();
        match remove_low_degree_live(&mut live1, inst.w_c, &mut k1, &mut trace1) {
            LiveKernelOutcome::ResolvedYes(extra) => {
                answer = Some(live1.removed_set().union(&extra));
                return Some(());
            }
            LiveKernelOutcome::ResolvedNo => return None,
            LiveKernelOutcome::Reduced => {}
        }
        let inner: Vec<VertexId> =
            live1.live_neighbors(inst.w_c).filter(|&x| !n_e.contains(x)).collect();
        subsets::find_subset_ascending::<()>(inner.len(), inner.len(), |combo2| {
            branches += 1;
            let mut live2 = live1.clone();
            let mut k2 = k1 - combo2.len() as i64;
            if k2 < 0 {
                return None;
            }
            for &ci in combo2 {
                live2.remove(inner[ci]);
            }
            // Cascade below the (now final) degree of w_c. A cascade
            // that would delete a retained neighbor contradicts the
            // branch's commitment, so the branch is abandoned; the
            // branch matching the true deleted neighborhood never
            // trips this.
            loop {
                let threshold = live2.degree(inst.w_c);
                match live2.min_id_low_degree(threshold, inst.w_c) {
                    Some(v) => {
                        if inst.g.has_edge(v, inst.w_c) {
                            return None;
                        }
                        live2.remove(v);
                        k2 -= 1;
                        if k2 < 0 {
                            return None;
                        }
                    }
                    None => break,
                }
            }
            answer = Some(live2.removed_set());
            Some(())
        })
    });

    Ok(match answer {
        Some(witness) => {
            debug_assert!(verify_mdd_solution(inst, &witness));
            SolveResult::yes(witness, branches)
        }
        None => SolveResult::no(branches),
    })
}

/// Annotated-subproblem backend selection for [`mdd_solv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnotatedBackend {
    Dp,
    Ilp,
}

/// Feedback-vertex-set driver: guesses the solution's intersection with
/// the feedback vertex set, iterates the final degree `i` of `w_c`,
/// cascades forced deletions, and hands the rest to an annotated
/// backend. `fvs` must avoid `w_c`.
///
/// `SolveResult::explored` counts backend invocations.
pub fn mdd_solv(
    inst: &MddInstance,
    fvs: &FeedbackVertexSet,
    backend: AnnotatedBackend,
) -> Result<SolveResult, SolveError> {
    if fvs.vertices.contains(inst.w_c) {
        return Err(SolveError::Precondition(
            "the driver needs a feedback vertex set avoiding w_c".into(),
        ));
    }
    if fvs.vertices.validate(inst.g.vertex_count()).is_err()
        || !inst.g.delete_vertices(&fvs.vertices).0.is_acyclic()
    {
        return Err(SolveError::InvalidFeedbackSet);
    }

    let vf: Vec<VertexId> = fvs.vertices.iter().collect();
    let mut calls = 0u64;
    let mut result: Option<VertexSet> = None;

    subsets::find_subset_ascending::<()>(vf.len(), vf.len().min(inst.k), |combo| {
        let mut live1 = LiveUndirected::new(&inst.g);
        for &ci in combo {
            live1.remove(vf[ci]);
        }
        let k1 = inst.k - combo.len();
        let vf_rest: Vec<VertexId> = vf
            .iter()
            .enumerate()
            .filter(|(j, _)| !combo.contains(j))
            .map(|(_, &v)| v)
            .collect();

        'degree: for i in 0..=vf_rest.len() {
            let mut live2 = live1.clone();
            let mut k2 = k1 as i64;
            // Forced deletions: any vertex at degree <= i cannot stay.
            // A remaining feedback vertex forced out contradicts the
            // guessed intersection; the superset branch covers it.
            while let Some(v) = live2.min_id_low_degree(i, inst.w_c) {
                if vf_rest.contains(&v) {
                    continue 'degree;
                }
                live2.remove(v);
                k2 -= 1;
                if k2 < 0 {
                    continue 'degree;
                }
            }
            if live2.degree(inst.w_c) < i {
                continue;
            }
            let (g2, origin) = live2.materialize();
            let pos = |v: VertexId| {
                VertexId::new(origin.iter().position(|&o| o == v).expect("alive vertex"))
            };
            let ann = AnnotatedMddInstance::new(
                g2,
                vf_rest.iter().map(|&v| pos(v)).collect(),
                pos(inst.w_c),
                k2 as usize,
                i,
            )
            .expect("cascade establishes the annotated preconditions");
            calls += 1;
            let res = match backend {
                AnnotatedBackend::Dp => annotated_mdd_dp(&ann),
                AnnotatedBackend::Ilp => annotated_mdd_via_ilp(&ann).0,
            };
            if res.decision {
                let sub = res.witness.expect("accepting backends return witnesses");
                let lifted: VertexSet = sub.iter().map(|v| origin[v.index()]).collect();
                result = Some(live2.removed_set().union(&lifted));
                return Some(());
            }
        }
        None
    });

    Ok(match result {
        Some(witness) => {
            debug_assert!(verify_mdd_solution(inst, &witness));
            SolveResult::yes(witness, calls)
        }
        None => SolveResult::no(calls),
    })
}
