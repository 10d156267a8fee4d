//! Instance files.
//!
//! An instance is a JSON object describing a labeled graph:
//!
//! ```json
//! {
//!   "vertices": ["x", "y", "z"],
//!   "edges": [
//!     {"tail": "x", "head": "y", "label": "e0"},
//!     {"tail": "z", "head": "y", "label": "e1"}
//!   ],
//!   "label_metric": {"type": "discrete"}
//! }
//! ```
//!
//! `label_metric` is optional (discrete when absent) or explicit:
//! `{"type": "explicit", "labels": [...], "matrix": [[...]]}` with
//! entries given as numbers or as exact strings like `"3/10"`.
//! Generated instances also record `seed`, `size`, and `max_degree` so
//! they can be reproduced.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::labeling::LabeledGraph;
use crate::metric::RawMetric;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_metric: Option<LabelMetricSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub tail: String,
    pub head: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum LabelMetricSpec {
    Discrete,
    Explicit {
        labels: Vec<String>,
        matrix: Vec<Vec<ScalarSpec>>,
    },
}

/// A numeric entry in an instance file: a JSON number, or a string such
/// as `"3/10"` for exact rational input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Number(f64),
    Text(String),
}

impl ScalarSpec {
    pub fn to_scalar<S: Scalar>(&self) -> Result<S> {
        match self {
            ScalarSpec::Number(x) => S::from_f64(*x)
                .ok_or_else(|| Error::Parse(format!("non-finite number {x}"))),
            ScalarSpec::Text(t) => S::parse_text(t)
                .ok_or_else(|| Error::Parse(format!("unreadable scalar {t:?}"))),
        }
    }

    pub fn from_scalar<S: Scalar>(s: &S) -> ScalarSpec {
        if S::EXACT {
            ScalarSpec::Text(s.to_string())
        } else {
            ScalarSpec::Number(s.to_f64())
        }
    }
}

/// Decodes the JSON layer only; schema violations come back with line
/// and column.
pub fn parse_instance_file(bytes: &[u8]) -> Result<InstanceFile> {
    serde_json::from_slice(bytes).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })
}

/// Builds the validated graph out of a decoded instance.
pub fn instance_to_graph<S: Scalar>(file: &InstanceFile) -> Result<LabeledGraph<S>> {
    let edges = file
        .edges
        .iter()
        .map(|e| (e.tail.clone(), e.head.clone(), e.label.clone()))
        .collect();
    let metric = match &file.label_metric {
        None | Some(LabelMetricSpec::Discrete) => None,
        Some(LabelMetricSpec::Explicit { labels, matrix }) => {
            if matrix.len() != labels.len()
                || matrix.iter().any(|row| row.len() != labels.len())
            {
                return Err(Error::Dimension(format!(
                    "label metric matrix must be {n} x {n}",
                    n = labels.len()
                )));
            }
            // Reorder rows and columns into sorted label order, the
            // order LabeledGraph keys everything by.
            let mut sorted: Vec<&String> = labels.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != labels.len() {
                return Err(Error::InvalidInstance(
                    "label metric lists a label twice".into(),
                ));
            }
            let slot = |l: &String| labels.iter().position(|x| x == l).unwrap();
            let mut dist = Vec::with_capacity(labels.len());
            for l1 in &sorted {
                let r = slot(l1);
                let mut row = Vec::with_capacity(labels.len());
                for l2 in &sorted {
                    row.push(matrix[r][slot(l2)].to_scalar::<S>()?);
                }
                dist.push(row);
            }
            Some(RawMetric::new(
                sorted.into_iter().cloned().collect(),
                dist,
            )?)
        }
    };
    LabeledGraph::new(file.vertices.clone(), edges, metric)
}

/// One-step decode: bytes to validated graph.
pub fn parse_instance<S: Scalar>(bytes: &[u8]) -> Result<LabeledGraph<S>> {
    instance_to_graph(&parse_instance_file(bytes)?)
}

/// The instance describing a graph; inverse of [`instance_to_graph`] up
/// to metric renormalization.
pub fn graph_to_instance<S: Scalar>(graph: &LabeledGraph<S>) -> InstanceFile {
    let edges = graph
        .edges()
        .iter()
        .map(|e| EdgeSpec {
            tail: graph.vertices()[e.tail].clone(),
            head: graph.vertices()[e.head].clone(),
            label: graph.labels()[e.label].clone(),
        })
        .collect();
    let label_metric = graph.explicit_label_metric().map(|m| LabelMetricSpec::Explicit {
        labels: graph.labels().to_vec(),
        matrix: m
            .iter()
            .map(|row| row.iter().map(ScalarSpec::from_scalar).collect())
            .collect(),
    });
    InstanceFile {
        vertices: graph.vertices().to_vec(),
        edges,
        label_metric,
        seed: None,
        size: None,
        max_degree: None,
    }
}

/// Canonical serialized form: pretty JSON plus a trailing newline.
pub fn to_canonical_json(file: &InstanceFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("instance files always serialize");
    s.push('\n');
    s
}

/// Hex SHA-256 of the exact bytes.
pub fn instance_digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    hash.iter().map(|b| format!("{b:02x}")).collect()
}
