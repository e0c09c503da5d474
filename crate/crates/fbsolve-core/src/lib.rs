//! Exact solvers for three degree-based vertex deletion problems on
//! simple graphs: Minimum Indegree Deletion (directed), Minimum Degree
//! Deletion (undirected) and Bounded Degree Deletion (undirected), all
//! parameterized by feedback set sizes.
//!
//! The crate is organized around three layers:
//!
//! * [`graph`] and [`feedback`] provide the graph model and exact
//!   feedback edge/vertex/arc set computation,
//! * [`oracle`] provides brute-force ground-truth solvers used as the
//!   arbiter for every non-trivial algorithm,
//! * [`mid`], [`mdd`], [`annotated`], [`bdd`] and [`reduce`] implement
//!   the parameterized algorithms, kernelization and hardness-reduction
//!   constructions.
//!
//! Everything is pure: solvers take immutable inputs and return results,
//! so independent invocations can run concurrently. The crate is
//! `no_std` (with `alloc`); file formats, generators and the CLI live in
//! the companion `fbsolve` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod annotated;
pub mod bdd;
pub mod feedback;
pub mod graph;
pub mod ip;
mod live;
pub mod mdd;
pub mod mid;
pub mod oracle;
pub mod reduce;
pub mod subsets;

pub use graph::{DirectedGraph, GraphError, UndirectedGraph, VertexId, VertexSet};
pub use oracle::SolveResult;

use alloc::string::String;
use core::fmt;

/// Errors reported by solver entry points. Graph construction errors
/// are separate, see [`graph::GraphError`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The brute-force oracle refuses instances above its vertex cap.
    OracleCapExceeded { n: usize, cap: usize },
    /// An enumeration-based reference algorithm refuses an instance
    /// whose branch count exceeds the given budget.
    BranchBudgetExceeded { branches: u128, budget: u128 },
    /// The input graph was required to be acyclic but is not.
    CyclicInput(&'static str),
    /// A given feedback set does not actually make the graph acyclic.
    InvalidFeedbackSet,
    /// Every feedback vertex set intersects the forbidden set.
    InfeasibleForbidden,
    /// An instance precondition does not hold.
    Precondition(String),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::OracleCapExceeded { n, cap } => {
                write!(f, "oracle refuses n={n} vertices (cap {cap}); raise the cap to force")
            }
            SolveError::BranchBudgetExceeded { branches, budget } => {
                write!(f, "refusing {branches} branches (budget {budget})")
            }
            SolveError::CyclicInput(hint) => write!(f, "input graph is cyclic; {hint}"),
            SolveError::InvalidFeedbackSet => {
                write!(f, "the supplied feedback set does not make the graph acyclic")
            }
            SolveError::InfeasibleForbidden => {
                write!(f, "no feedback vertex set avoids the forbidden vertices")
            }
            SolveError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}
