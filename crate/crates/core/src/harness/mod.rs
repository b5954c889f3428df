//! Experiment harness: random models, parallel sweeps and report files.

mod random;
mod sweep;

use std::path::PathBuf;

use thiserror::Error;

use crate::graph::GraphError;
use crate::solver::SolverError;

pub use random::{
    cycle_union, instance_rng, min_deg2_probability, random_family, random_graph,
    random_spider_legs, uniform_min_deg2, RandomModel,
};
pub use sweep::{
    matches_spec, degree_bound, run_sweep, summary_path, ReportRow, SweepConfig, SweepMode, SweepOutcome,
    SweepProperty, SweepSource, SweepSummary,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("worker pool: {0}")]
    Pool(String),
}
