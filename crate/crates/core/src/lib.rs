//! Computation and verification toolkit for the variable symmetric division
//! deg index on undirected simple graphs.
//!
//! The crate provides:
//!
//! - [`graph`]: the graph representation, edge-list parsing, degree and
//!   component queries;
//! - [`indices`]: SDD_a and the companion degree-based indices (variable
//!   Zagreb, variable inverse sum deg, modified Narumi-Katayama);
//! - [`bounds`]: per-graph evaluation of the classical inequalities on
//!   SDD_a, with equality flags and slack;
//! - [`enumerate`]: exhaustive certification of those inequalities over all
//!   small labeled graphs;
//! - [`ensembles`]: Erdos-Renyi and bipartite random-graph ensembles with
//!   reproducible parallel averaging, parameter sweeps, closed-form
//!   predictions, and the scaling collapse.

pub mod bounds;
pub mod ensembles;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod indices;

pub use bounds::{
    check_all, check_monotonicity, classify_edges, dd_two_sided, delta_plus_one_exact, isd_lower,
    m1_sandwich, m2_sandwich, nk_lower, BoundReport, EdgeClassCounts, TheoremCheck, TheoremId,
};
pub use ensembles::{
    collapse, collapse_points_to_csv, default_replicas, ensemble_average, fmt_f64, parse_sweep_csv,
    predict, replica_rng, run_ensemble, sample_br, sample_er, summarize, sweep, sweep_rows_to_csv,
    ClosedFormPrediction, CollapsePoint, EnsembleRun, EnsembleSpec, ModelKind, ModelSpec,
    PredictionKind, SweepModel, SweepRow, DEFAULT_ALPHAS, DEFAULT_SEED,
};
pub use enumerate::{
    certify, labeled_graphs, labeled_graphs_with_edges, random_labeled_graphs, CertifySummary,
};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, DegreeExtremes, Graph, ParsedGraph};
pub use indices::{
    edge_term, isd_a, isi, log_nk_star, m1_alpha, m2_alpha, sdd_alpha, Exponent, IndexKind,
    IndexResult,
};
