//! Transport norms on pointed metric spaces, stretched edge labelings,
//! and orbit reductions over forests.
//!
//! The crate realizes one pipeline at finite scale:
//!
//! 1. [`metric`] / [`vector`] — finite pointed metric spaces (all
//!    distances at most 1, a basepoint `*` at distance exactly 1 from
//!    everything) and the sparse signed vectors over their points.
//! 2. [`norm`] — the transport norm of such a vector, computed as a
//!    minimum-cost transshipment with both a flow certificate and a
//!    1-Lipschitz dual certificate, plus an exhaustive oracle and a
//!    mass-times-spread lower bound.
//! 3. [`labeling`] — edge labelings of finite graphs turned into metric
//!    spaces on the labels via power-graph colorings, with a verified
//!    stretch constant.
//! 4. [`forest`] — signed path labels on forests and their algebra;
//!    under a stretched labeling, path labels from any root are
//!    uniformly separated in the transport norm.
//! 5. [`reduction`] — vertices mapped to translation orbits of their
//!    path-label sets: connectivity in the forest holds exactly when the
//!    images differ by a translation, and the whole property is
//!    machine-checked per instance.
//!
//! Everything is generic over a [`scalar::Scalar`] backend: exact
//! rationals for certificate-grade runs, `f64` with a pinned tolerance
//! for larger sweeps. The [`cli`] module exposes the same pipeline as
//! the `fbr` binary; [`instance`], [`generate`], and [`report`] handle
//! instance files, seeded instance generation, and machine-readable run
//! reports.

pub mod cli;
pub mod error;
pub mod forest;
pub mod generate;
pub mod instance;
pub mod labeling;
pub mod metric;
pub mod norm;
pub mod reduction;
pub mod report;
pub mod scalar;
pub mod vector;

pub use error::{Error, Result};
pub use forest::{assert_forest, compose, path_label, separation, Forest, LabelVector, PathLabel};
pub use generate::{random_connected_graph, random_forest, random_pointed_space};
pub use instance::{
    graph_to_instance, instance_digest, instance_to_graph, parse_instance, parse_instance_file,
    to_canonical_json, InstanceFile,
};
pub use labeling::{
    build_edge_graph, greedy_proper_coloring, power_graph, stretch_labeling, verify_stretched,
    ColoringSequence, LabelGraph, LabeledGraph, StretchedLabeling,
};
pub use metric::{
    adjoin_basepoint, normalize_metric, validate_space, PointedMetricSpace, RawMetric,
    ValidationReport, Violation, BASEPOINT,
};
pub use norm::{
    check_certificates, lower_bound_eq2, norm, norm_bruteforce, norm_dual, norm_primal,
    LipschitzPotential, Move, NormResult, TransportPlan,
};
pub use reduction::{
    orbit_equivalent, reduce_all, reduce_point, translate, verify_reduction,
    verify_reduction_table, OrbitWitness, ReductionPoint,
};
pub use report::{Metrics, RunReport, SuiteOutcome};
pub use scalar::{Rational, Scalar};
pub use vector::{parse_vector, FreeVector};
