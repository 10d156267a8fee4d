//! Seeded instance generators.
//!
//! Everything here is a pure function of its arguments: a fixed PRNG
//! (ChaCha8) and fixed iteration orders make output identical across
//! platforms and runs, so any failing instance is reproducible from its
//! seed alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::labeling::LabeledGraph;
use crate::metric::{adjoin_basepoint, PointedMetricSpace, RawMetric};
use crate::scalar::Scalar;
use crate::vector::FreeVector;

/// Probability that a vertex starts a new component.
const BREAK_PROBABILITY: f64 = 0.125;

/// A random forest on `n` vertices: components grow one vertex at a
/// time (each new vertex attaches uniformly to a degree-eligible vertex
/// of the component currently being grown) and a fresh component starts
/// with probability 1/8, so component sizes are geometric-ish with mean
/// around 8. Edge orientations are random; labels are `e0000`, `e0001`,
/// ... in creation order.
pub fn random_forest<S: Scalar>(n: usize, max_degree: usize, seed: u64) -> LabeledGraph<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_degree = max_degree.max(1);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut degree = vec![0usize; n];
    let mut current: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    for i in 0..n {
        let eligible: Vec<usize> = current
            .iter()
            .copied()
            .filter(|&v| degree[v] < max_degree)
            .collect();
        if i == 0 || eligible.is_empty() || rng.random_bool(BREAK_PROBABILITY) {
            current = vec![i];
            continue;
        }
        let parent = eligible[rng.random_range(0..eligible.len())];
        degree[parent] += 1;
        degree[i] += 1;
        let (tail, head) = if rng.random_bool(0.5) {
            (parent, i)
        } else {
            (i, parent)
        };
        edges.push((
            vertices[tail].clone(),
            vertices[head].clone(),
            format!("e{:04}", edges.len()),
        ));
        current.push(i);
    }
    LabeledGraph::new(vertices, edges, None).expect("generated forests are structurally valid")
}

/// A random connected graph: a random recursive spanning tree plus up
/// to `extra_edges` additional edges between non-adjacent vertex pairs.
pub fn random_connected_graph<S: Scalar>(
    n: usize,
    extra_edges: usize,
    seed: u64,
) -> LabeledGraph<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x636f6e6e));
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut pairs = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    let push = |a: usize, b: usize, edges: &mut Vec<(String, String, String)>, rng: &mut ChaCha8Rng| {
        let (tail, head) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
        edges.push((
            format!("v{tail}"),
            format!("v{head}"),
            format!("e{:04}", edges.len()),
        ));
    };
    for i in 1..n {
        let parent = rng.random_range(0..i);
        pairs.insert((parent.min(i), parent.max(i)));
        push(parent, i, &mut edges, &mut rng);
    }
    if n >= 2 {
        let mut attempts = 0;
        let mut added = 0;
        while added < extra_edges && attempts < 20 * extra_edges + 100 {
            attempts += 1;
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a == b || !pairs.insert((a.min(b), a.max(b))) {
                continue;
            }
            push(a, b, &mut edges, &mut rng);
            added += 1;
        }
    }
    LabeledGraph::new(vertices, edges, None).expect("generated graphs are structurally valid")
}

/// A random pointed metric space on `n` points: distances start as
/// random multiples of 1/24 in (0, 1] and are closed under shortest
/// relay paths, which forces the triangle inequality while keeping
/// every entry rational, positive, and at most 1.
pub fn random_pointed_space<S: Scalar>(n: usize, seed: u64) -> PointedMetricSpace<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x73706163));
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut dist = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = S::from_ratio(rng.random_range(1..=24), 24);
            dist[i][j] = w.clone();
            dist[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let via = dist[i][k].clone() + dist[k][j].clone();
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    let raw = RawMetric::new(names, dist).expect("square by construction");
    adjoin_basepoint(&raw, &S::default_tolerance())
        .expect("shortest-path closure of positive weights is a metric")
}

fn random_support(space_len: usize, max_support: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let available = space_len.saturating_sub(1);
    if available == 0 {
        return Vec::new();
    }
    let size = rng.random_range(1..=max_support.min(available));
    let mut points: Vec<usize> = (1..space_len).collect();
    points.shuffle(rng);
    points.truncate(size);
    points.sort_unstable();
    points
}

/// A random vector with nonzero integer coefficients bounded by
/// `max_abs` on at most `max_support` points; zero only when the space
/// has no points besides the basepoint.
pub fn random_integer_vector<S: Scalar>(
    space: &PointedMetricSpace<S>,
    max_support: usize,
    max_abs: i64,
    rng: &mut ChaCha8Rng,
) -> FreeVector<S> {
    let entries: Vec<(usize, S)> = random_support(space.len(), max_support, rng)
        .into_iter()
        .map(|p| {
            let magnitude = rng.random_range(1..=max_abs);
            let signed = if rng.random_bool(0.5) { magnitude } else { -magnitude };
            (p, S::from_int(signed))
        })
        .collect();
    FreeVector::from_indexed(space, entries)
        .expect("support indices are in range")
        .0
}

/// A random vector with nonzero rational coefficients `±num/den`,
/// `num <= max_num`, `den <= max_den`.
pub fn random_rational_vector<S: Scalar>(
    space: &PointedMetricSpace<S>,
    max_support: usize,
    max_num: i64,
    max_den: i64,
    rng: &mut ChaCha8Rng,
) -> FreeVector<S> {
    let entries: Vec<(usize, S)> = random_support(space.len(), max_support, rng)
        .into_iter()
        .map(|p| {
            let num = rng.random_range(1..=max_num);
            let den = rng.random_range(1..=max_den);
            let signed = if rng.random_bool(0.5) { num } else { -num };
            (p, S::from_ratio(signed, den))
        })
        .collect();
    FreeVector::from_indexed(space, entries)
        .expect("support indices are in range")
        .0
}
