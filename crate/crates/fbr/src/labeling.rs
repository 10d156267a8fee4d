//! Stretched edge labelings of finite graphs.
//!
//! Labels of a graph become points of a metric space: two labels are
//! neighbors when their edges share an endpoint, and a tower of proper
//! colorings of the powers of that label graph (radii 1, 2, 4, ...)
//! separates labels at every scale. The induced distance
//! `min(1, (d'(l1,l2) + sum 2^{-n} [colors differ at level n]) / 2)`
//! shrinks no faster than `1/(4k)` for labels at label-graph distance
//! `k`, which is the stretch property the rest of the crate relies on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::metric::{adjoin_basepoint, PointedMetricSpace, RawMetric, BASEPOINT};
use crate::scalar::Scalar;

/// Identity tag preventing label vectors of one graph from mixing with
/// another graph's, even when the two look alike.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphToken(u64);

static NEXT_GRAPH_TOKEN: AtomicU64 = AtomicU64::new(1);

impl GraphToken {
    fn fresh() -> Self {
        GraphToken(NEXT_GRAPH_TOKEN.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub label: usize,
}

/// A finite simple graph with distinctly labeled, oriented edges and an
/// optional base metric on the labels (discrete when absent).
#[derive(Clone, Debug)]
pub struct LabeledGraph<S> {
    token: GraphToken,
    vertices: Vec<String>,
    vertex_index: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    labels: Vec<String>,
    label_metric: Option<Vec<Vec<S>>>,
}

/// Structural equality; the freshness token is deliberately ignored so
/// that a serialization round trip compares equal.
impl<S: PartialEq> PartialEq for LabeledGraph<S> {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.labels == other.labels
            && self.label_metric == other.label_metric
    }
}

impl<S: PartialEq> Eq for LabeledGraph<S> {}

impl<S: Scalar> LabeledGraph<S> {
    /// Builds and validates a labeled graph from named edge triples
    /// `(tail, head, label)`. Vertices are as declared; labels end up
    /// sorted. Self-loops, repeated labels, repeated vertex pairs (in
    /// either orientation), and undeclared endpoints are refused. An
    /// explicit label metric must list labels exactly; entries above 1
    /// are tamed with the bounded renormalization `t / (1 + t)`.
    pub fn new(
        vertices: Vec<String>,
        edge_list: Vec<(String, String, String)>,
        label_metric: Option<RawMetric<S>>,
    ) -> Result<Self> {
        let mut vertex_index = BTreeMap::new();
        for (i, name) in vertices.iter().enumerate() {
            if name == BASEPOINT {
                return Err(Error::InvalidInstance(format!(
                    "vertex name {BASEPOINT:?} is reserved"
                )));
            }
            if vertex_index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidInstance(format!(
                    "duplicate vertex {name:?}"
                )));
            }
        }

        let mut labels: Vec<String> = edge_list.iter().map(|(_, _, l)| l.clone()).collect();
        labels.sort();
        labels.dedup();
        if labels.len() != edge_list.len() {
            return Err(Error::InvalidInstance(
                "edge labels must be pairwise distinct".into(),
            ));
        }
        if labels.iter().any(|l| l == BASEPOINT) {
            return Err(Error::InvalidInstance(format!(
                "label name {BASEPOINT:?} is reserved"
            )));
        }
        let label_index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();

        let mut seen_pairs = BTreeSet::new();
        let mut edges = Vec::with_capacity(edge_list.len());
        for (tail, head, label) in &edge_list {
            let t = *vertex_index
                .get(tail)
                .ok_or_else(|| Error::UnknownVertex(tail.clone()))?;
            let h = *vertex_index
                .get(head)
                .ok_or_else(|| Error::UnknownVertex(head.clone()))?;
            if t == h {
                return Err(Error::InvalidInstance(format!(
                    "self-loop at {tail:?}"
                )));
            }
            if !seen_pairs.insert((t.min(h), t.max(h))) {
                return Err(Error::InvalidInstance(format!(
                    "repeated edge between {tail:?} and {head:?}"
                )));
            }
            edges.push(Edge {
                tail: t,
                head: h,
                label: label_index[label.as_str()],
            });
        }
        edges.sort_by_key(|e| e.label);

        let label_metric = match label_metric {
            None => None,
            Some(raw) => {
                if raw.names != labels {
                    return Err(Error::InvalidInstance(
                        "label metric must list the edge labels in sorted order".into(),
                    ));
                }
                let tol = S::default_tolerance();
                let report = raw.validate(&tol);
                if !report.ok() {
                    return Err(Error::InvalidMetric(report));
                }
                let one = S::one();
                let needs_taming = raw.dist.iter().flatten().any(|d| *d > one);
                let matrix = if needs_taming {
                    raw.normalize(&tol)?.dist
                } else {
                    raw.dist
                };
                Some(matrix)
            }
        };

        Ok(LabeledGraph {
            token: GraphToken::fresh(),
            vertices,
            vertex_index,
            edges,
            labels,
            label_metric,
        })
    }

    pub fn token(&self) -> GraphToken {
        self.token
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Labels in sorted order; index `i` here is label index `i`
    /// everywhere else in the crate.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel(label.into()))
    }

    /// Base distance between two labels: the explicit metric when one
    /// was supplied, otherwise the discrete metric.
    pub fn base_distance(&self, l1: usize, l2: usize) -> S {
        if l1 == l2 {
            return S::zero();
        }
        match &self.label_metric {
            Some(m) => m[l1][l2].clone(),
            None => S::one(),
        }
    }

    /// The explicit label metric (already tamed to entries at most 1),
    /// indexed like [`LabeledGraph::labels`]; `None` means discrete.
    pub fn explicit_label_metric(&self) -> Option<&[Vec<S>]> {
        self.label_metric.as_deref()
    }

    /// The base label metric as a standalone matrix, discrete filled in.
    pub fn base_metric_matrix(&self) -> Vec<Vec<S>> {
        let m = self.labels.len();
        (0..m)
            .map(|i| (0..m).map(|j| self.base_distance(i, j)).collect())
            .collect()
    }

    /// Connected-component id per vertex, ids dense in discovery order.
    pub fn vertex_component_ids(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            adjacency[e.tail].push(e.head);
            adjacency[e.head].push(e.tail);
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if ids[start] != usize::MAX {
                continue;
            }
            ids[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[u] {
                    if ids[w] == usize::MAX {
                        ids[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        ids
    }

    pub fn vertex_component_count(&self) -> usize {
        self.vertex_component_ids()
            .into_iter()
            .max()
            .map_or(0, |c| c + 1)
    }
}

/// An unlabeled simple graph on the labels of some [`LabeledGraph`],
/// kept as sorted adjacency sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl LabelGraph {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, l: usize) -> &BTreeSet<usize> {
        &self.adjacency[l]
    }

    pub fn adjacent(&self, l1: usize, l2: usize) -> bool {
        self.adjacency[l1].contains(&l2)
    }

    /// Hop distances from `start` to every label; `None` marks a
    /// different component.
    pub fn distances_from(&self, start: usize) -> Vec<Option<u64>> {
        let mut dist = vec![None; self.adjacency.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest finite hop distance between any two labels.
    pub fn max_component_diameter(&self) -> u64 {
        let mut diameter = 0;
        for start in 0..self.adjacency.len() {
            for d in self.distances_from(start).into_iter().flatten() {
                diameter = diameter.max(d);
            }
        }
        diameter
    }
}

/// The graph on labels in which two labels are adjacent exactly when
/// their edges share an endpoint.
pub fn build_edge_graph<S: Scalar>(graph: &LabeledGraph<S>) -> LabelGraph {
    let mut adjacency = vec![BTreeSet::new(); graph.labels().len()];
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); graph.vertex_count()];
    for e in graph.edges() {
        touching[e.tail].push(e.label);
        touching[e.head].push(e.label);
    }
    for at_vertex in &touching {
        for (i, &l1) in at_vertex.iter().enumerate() {
            for &l2 in &at_vertex[i + 1..] {
                adjacency[l1].insert(l2);
                adjacency[l2].insert(l1);
            }
        }
    }
    LabelGraph { adjacency }
}

/// Same labels, adjacency between distinct labels at hop distance at
/// most `radius` in `g`.
pub fn power_graph(g: &LabelGraph, radius: u64) -> LabelGraph {
    let mut adjacency = vec![BTreeSet::new(); g.len()];
    for start in 0..g.len() {
        for (other, d) in g.distances_from(start).into_iter().enumerate() {
            if let Some(d) = d {
                if d >= 1 && d <= radius {
                    adjacency[start].insert(other);
                }
            }
        }
    }
    LabelGraph { adjacency }
}

/// First-fit coloring in label order: each label takes the smallest
/// color unused among its already-colored neighbors. Proper by
/// construction and deterministic because labels are sorted.
pub fn greedy_proper_coloring(g: &LabelGraph) -> Vec<u32> {
    let mut colors: Vec<Option<u32>> = vec![None; g.len()];
    for l in 0..g.len() {
        let taken: BTreeSet<u32> = g
            .neighbors(l)
            .iter()
            .filter_map(|&w| colors[w])
            .collect();
        let mut c = 0;
        while taken.contains(&c) {
            c += 1;
        }
        colors[l] = Some(c);
    }
    colors.into_iter().map(|c| c.unwrap()).collect()
}

/// Proper colorings of the powers of the label graph at radii
/// `2^0, ..., 2^depth`; `colors[n][l]` is the color of label `l` at
/// level `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSequence {
    pub colors: Vec<Vec<u32>>,
}

impl ColoringSequence {
    pub fn depth(&self) -> usize {
        self.colors.len().saturating_sub(1)
    }

    /// Levels at which the two labels receive different colors.
    pub fn disagreements(&self, l1: usize, l2: usize) -> Vec<usize> {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, level)| level[l1] != level[l2])
            .map(|(n, _)| n)
            .collect()
    }
}

/// A labeled graph together with the coloring tower and the metric
/// space its labels generate. `epsilon` is the verified stretch
/// constant: the exact minimum of `k * dist` over constrained label
/// pairs, which the construction keeps at or above 1/4.
#[derive(Clone, Debug)]
pub struct StretchedLabeling<S> {
    pub graph: LabeledGraph<S>,
    pub edge_graph: LabelGraph,
    pub colorings: ColoringSequence,
    pub label_space: PointedMetricSpace<S>,
    pub epsilon: S,
}

impl<S: Scalar> StretchedLabeling<S> {
    /// Point index of a label in `label_space` (the basepoint sits at 0).
    pub fn space_index(&self, label: usize) -> usize {
        label + 1
    }

    pub fn label_distance(&self, l1: usize, l2: usize) -> S {
        self.label_space
            .dist(self.space_index(l1), self.space_index(l2))
    }
}

fn ceil_log2(x: u64) -> u32 {
    x.next_power_of_two().trailing_zeros()
}

/// Builds the coloring tower and the label metric. The tower depth `N`
/// is the least `n` with `2^n` at least the largest component diameter
/// of the label graph, so every pair of labels in a common component is
/// adjacent in some colored power. Distances are
/// `min(1, (d'(l1,l2) + sum_{n<=N} 2^{-n} [colors differ at n]) / 2)`,
/// a genuine metric with all values at most 1, and the resulting
/// pointed space is validated before being returned. The stored
/// `epsilon` is the exact [`verify_stretched`] value of the result.
pub fn stretch_labeling<S: Scalar>(graph: &LabeledGraph<S>) -> Result<StretchedLabeling<S>> {
    let edge_graph = build_edge_graph(graph);
    let depth = ceil_log2(edge_graph.max_component_diameter().max(1));
    let mut colors = Vec::with_capacity(depth as usize + 1);
    for n in 0..=depth {
        let radius = 1u64
            .checked_shl(n)
            .expect("coloring depth stays far below 64");
        colors.push(greedy_proper_coloring(&power_graph(&edge_graph, radius)));
    }
    let colorings = ColoringSequence { colors };

    let labels = graph.labels().to_vec();
    let m = labels.len();
    let one = S::one();
    let half = S::from_ratio(1, 2);
    let mut dist = vec![vec![S::zero(); m]; m];
    for l1 in 0..m {
        for l2 in l1 + 1..m {
            let mut sum = graph.base_distance(l1, l2);
            for n in colorings.disagreements(l1, l2) {
                sum = sum + S::from_ratio(1, 1i64 << n);
            }
            let mut d = half.clone() * sum;
            if d > one {
                d = one.clone();
            }
            dist[l1][l2] = d.clone();
            dist[l2][l1] = d;
        }
    }

    let raw = RawMetric::new(labels, dist)?;
    let label_space = adjoin_basepoint(&raw, &S::default_tolerance())?;
    let mut labeling = StretchedLabeling {
        graph: graph.clone(),
        edge_graph,
        colorings,
        label_space,
        epsilon: S::one(),
    };
    labeling.epsilon = verify_stretched(&labeling);
    Ok(labeling)
}

/// Empirical stretch constant: the least `k * dist(l1, l2)` over label
/// pairs at finite label-graph distance `k >= 1`, or 1 when no such
/// pair exists. The construction keeps this at or above `epsilon`.
pub fn verify_stretched<S: Scalar>(labeling: &StretchedLabeling<S>) -> S {
    let g = &labeling.edge_graph;
    let mut best: Option<S> = None;
    for l1 in 0..g.len() {
        for (l2, hop) in g.distances_from(l1).into_iter().enumerate() {
            if l2 <= l1 {
                continue;
            }
            let Some(k) = hop else { continue };
            if k == 0 {
                continue;
            }
            let scaled = S::from_int(k as i64) * labeling.label_distance(l1, l2);
            match &best {
                Some(b) if *b <= scaled => {}
                _ => best = Some(scaled),
            }
        }
    }
    best.unwrap_or_else(S::one)
}
