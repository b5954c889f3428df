//! Double Roman domination toolkit.
//!
//! * [`graph`]: graphs, family generators, path decomposition, small-graph
//!   enumeration and the edge-list format.
//! * [`labeling`]: {0,1,2,3}-labelings, DRDF validation, closed forms.
//! * [`solver`]: exact γ_dR by branch and bound plus a brute-force oracle.
//! * [`construct`]: reduction engine producing DRDFs with an audit trace,
//!   and the 12n/11 bound report.
//! * [`harness`]: random models and parallel verification sweeps.
//! * [`cli`]: the `drdf` command line.

pub mod cli;
pub mod construct;
pub mod graph;
pub mod harness;
pub mod labeling;
pub mod solver;

pub use graph::{Graph, GraphError};
pub use labeling::{Labeling, LabelingError, Violation, ViolationKind};
pub use solver::{gamma_dr, gamma_dr_naive, SolveOptions, SolveResult, SolveStatus};
pub use construct::{check_bound, construct_drdf, BoundReport, ConstructOptions, ReductionTrace, RuleId};
