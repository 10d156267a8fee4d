//! Forests and signed path labels.
//!
//! In a forest any two vertices of a component are joined by a unique
//! simple path. Reading off the edge labels along that path, signed by
//! orientation (+1 with the edge, -1 against), gives an integer vector
//! over the labels — the path label. Path labels compose like
//! differences: `p(x,y) + p(y,z) = p(x,z)` and `p(y,x) = -p(x,y)`,
//! and under a stretched labeling distinct targets stay uniformly
//! separated in the transport norm.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::labeling::{GraphToken, LabeledGraph, StretchedLabeling};
use crate::norm::norm_primal;
use crate::scalar::Scalar;
use crate::vector::FreeVector;

/// An integer vector over the labels of one particular graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabelVector {
    token: GraphToken,
    coeffs: BTreeMap<usize, i64>,
}

impl LabelVector {
    pub fn zero(token: GraphToken) -> Self {
        LabelVector {
            token,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn token(&self) -> GraphToken {
        self.token
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, label: usize) -> i64 {
        self.coeffs.get(&label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(l, c)| (*l, *c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    fn bump(&mut self, label: usize, delta: i64) {
        let entry = self.coeffs.entry(label).or_insert(0);
        *entry += delta;
        if *entry == 0 {
            self.coeffs.remove(&label);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.token != other.token {
            return Err(Error::GraphMismatch);
        }
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.bump(l, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LabelVector {
            token: self.token,
            coeffs: self.coeffs.iter().map(|(l, c)| (*l, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The same vector inside the free space over the labeling's label
    /// metric; label `l` is point `l + 1` there.
    pub fn to_free_vector<S: Scalar>(
        &self,
        labeling: &StretchedLabeling<S>,
    ) -> Result<FreeVector<S>> {
        if labeling.graph.token() != self.token {
            return Err(Error::GraphMismatch);
        }
        let entries = self
            .coeffs
            .iter()
            .map(|(l, c)| (labeling.space_index(*l), S::from_int(*c)));
        Ok(FreeVector::from_indexed(&labeling.label_space, entries)?.0)
    }

    pub fn display(&self, labels: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (l, c) in self.coeffs.iter() {
            if out.is_empty() {
                if *c < 0 {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            let mag = c.abs();
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&labels[*l]);
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
struct HalfEdge {
    to: usize,
    label: usize,
    sign: i64,
}

/// A labeled graph with no cycles, with its components precomputed.
#[derive(Clone, Debug)]
pub struct Forest {
    token: GraphToken,
    vertices: Vec<String>,
    adjacency: Vec<Vec<HalfEdge>>,
    component: Vec<usize>,
    labels: Vec<String>,
}

/// Checks acyclicity and wraps the graph as a [`Forest`]. A cycle is
/// reported with its vertex sequence as the witness.
pub fn assert_forest<S: Scalar>(graph: &LabeledGraph<S>) -> Result<Forest> {
    let n = graph.vertex_count();
    let mut adjacency: Vec<Vec<HalfEdge>> = vec![Vec::new(); n];
    for e in graph.edges() {
        adjacency[e.tail].push(HalfEdge {
            to: e.head,
            label: e.label,
            sign: 1,
        });
        adjacency[e.head].push(HalfEdge {
            to: e.tail,
            label: e.label,
            sign: -1,
        });
    }
    for row in adjacency.iter_mut() {
        row.sort_by_key(|h| h.to);
    }

    let mut component = vec![usize::MAX; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut next_component = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = next_component;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for h in &adjacency[u] {
                if component[h.to] == usize::MAX {
                    component[h.to] = next_component;
                    parent[h.to] = Some(u);
                    queue.push_back(h.to);
                } else if parent[u] != Some(h.to) && parent[h.to] != Some(u) && h.to != u {
                    return Err(Error::Cycle(cycle_witness(
                        graph,
                        &parent,
                        u,
                        h.to,
                    )));
                }
            }
        }
        next_component += 1;
    }

    Ok(Forest {
        token: graph.token(),
        vertices: graph.vertices().to_vec(),
        adjacency,
        component,
        labels: graph.labels().to_vec(),
    })
}

/// Vertex names around the cycle closed by the non-tree edge `u ~ w`.
fn cycle_witness<S: Scalar>(
    graph: &LabeledGraph<S>,
    parent: &[Option<usize>],
    u: usize,
    w: usize,
) -> Vec<String> {
    let mut up_from_u = vec![u];
    let mut p = u;
    while let Some(q) = parent[p] {
        up_from_u.push(q);
        p = q;
    }
    let position: BTreeMap<usize, usize> = up_from_u
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, i))
        .collect();
    let mut down_to_w = vec![w];
    let mut p = w;
    while !position.contains_key(&p) {
        p = parent[p].expect("walk meets an ancestor of u");
        down_to_w.push(p);
    }
    let meet = position[&p];
    let mut cycle: Vec<usize> = up_from_u[..=meet].to_vec();
    cycle.extend(down_to_w.into_iter().rev().skip(1));
    cycle.into_iter().map(|v| graph.vertices()[v].clone()).collect()
}

impl Forest {
    pub fn token(&self) -> GraphToken {
        self.token
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn same_component(&self, x: usize, y: usize) -> bool {
        self.component[x] == self.component[y]
    }

    /// Vertices of the component containing `x`, ascending.
    pub fn component_vertices(&self, x: usize) -> Vec<usize> {
        let c = self.component[x];
        (0..self.vertices.len())
            .filter(|v| self.component[*v] == c)
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component.iter().copied().max().map_or(0, |c| c + 1)
    }

    /// Path labels from `x` to every vertex in its component, by one
    /// breadth-first sweep.
    pub fn labels_from(&self, x: usize) -> BTreeMap<usize, LabelVector> {
        let mut out = BTreeMap::new();
        out.insert(x, LabelVector::zero(self.token));
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            let here = out[&u].clone();
            for h in &self.adjacency[u] {
                if !out.contains_key(&h.to) {
                    let mut next = here.clone();
                    next.bump(h.label, h.sign);
                    out.insert(h.to, next);
                    queue.push_back(h.to);
                }
            }
        }
        out
    }
}

/// The signed label vector of the unique simple path between two
/// vertices, tagged with its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathLabel {
    pub start: usize,
    pub end: usize,
    pub vector: LabelVector,
}

impl fmt::Display for PathLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p({} -> {})", self.start, self.end)
    }
}

/// The path label from `x` to `y`; both must lie in one component.
pub fn path_label(forest: &Forest, x: usize, y: usize) -> Result<PathLabel> {
    if x >= forest.vertex_count() {
        return Err(Error::UnknownVertex(format!("index {x}")));
    }
    if y >= forest.vertex_count() {
        return Err(Error::UnknownVertex(format!("index {y}")));
    }
    if !forest.same_component(x, y) {
        return Err(Error::DifferentComponents(
            forest.vertex_name(x).into(),
            forest.vertex_name(y).into(),
        ));
    }
    let vector = forest.labels_from(x).remove(&y).expect("same component");
    Ok(PathLabel { start: x, end: y, vector })
}

/// Concatenation: the label of `x -> y` followed by `y -> z` is the
/// label of `x -> z`. The inner endpoints must agree.
pub fn compose(first: &PathLabel, second: &PathLabel) -> Result<PathLabel> {
    if first.end != second.start {
        return Err(Error::EndpointMismatch(
            first.end.to_string(),
            second.start.to_string(),
        ));
    }
    Ok(PathLabel {
        start: first.start,
        end: second.end,
        vector: first.vector.add(&second.vector)?,
    })
}

/// The least transport-norm distance between labels of distinct targets
/// seen from the root `x`:
/// `min { |p(x,y') - p(x,y)| : y, y' in component(x), y != y' }`.
/// `None` when the component has a single vertex. Under a stretched
/// labeling this is at least `epsilon / 2` regardless of the root.
pub fn separation<S: Scalar>(
    forest: &Forest,
    labeling: &StretchedLabeling<S>,
    x: usize,
) -> Result<Option<S>> {
    if forest.token() != labeling.graph.token() {
        return Err(Error::GraphMismatch);
    }
    if x >= forest.vertex_count() {
        return Err(Error::UnknownVertex(format!("index {x}")));
    }
    let from_root = forest.labels_from(x);
    let entries: Vec<&LabelVector> = from_root.values().collect();
    let mut best: Option<S> = None;
    for (i, v1) in entries.iter().enumerate() {
        for v2 in &entries[i + 1..] {
            let diff = v2.sub(v1)?.to_free_vector(labeling)?;
            let (value, _) = norm_primal(&labeling.label_space, &diff)?;
            match &best {
                Some(b) if *b <= value => {}
                _ => best = Some(value),
            }
        }
    }
    Ok(best)
}
