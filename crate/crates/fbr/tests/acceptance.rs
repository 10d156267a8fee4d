//! Acceptance gate for the whole pipeline: ten criteria, one test and
//! one printed verdict line each (run with `-- --nocapture` to see the
//! lines even on success).
//!
//! Every tolerance and budget is pinned here as a constant. Exact-mode
//! checks compare rationals with `==`; float-mode checks use
//! [`FLOAT_TOL`]. All randomness is seeded and therefore reproducible.

use std::collections::BTreeMap;
use std::time::Instant;

use fbr::forest::{assert_forest, path_label, separation, Forest};
use fbr::generate::{
    random_connected_graph, random_forest, random_integer_vector, random_pointed_space,
    random_rational_vector,
};
use fbr::labeling::{stretch_labeling, verify_stretched, LabeledGraph};
use fbr::norm::{check_certificates, lower_bound_eq2, norm, norm_bruteforce, norm_primal};
use fbr::reduction::{reduce_all, verify_reduction_table, ReductionPoint};
use fbr::scalar::{Rational, Scalar};
use fbr::vector::FreeVector;
use fbr::Error;

use num::traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Absolute tolerance for every float-mode comparison in this file.
const FLOAT_TOL: f64 = 1e-9;
/// Wall-clock budgets, generous on purpose: they guard against
/// regressions in asymptotics, not against scheduler noise.
const DUALITY_BUDGET_MS: u128 = 10_000;
const STRETCH_BUDGET_MS: u128 = 30_000;
const REDUCTION_BUDGET_MS: u128 = 60_000;

fn verdict(id: u32, name: &str, failures: &[String], detail: String) {
    let status = if failures.is_empty() { "pass" } else { "FAIL" };
    println!("acceptance {id:02} {name}: {status} ({detail})");
    for f in failures.iter().take(5) {
        println!("    {f}");
    }
}

fn rational(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

/// Criterion 1: the primal plan and the dual potential certify the same
/// value — exactly over rationals, within `FLOAT_TOL` over floats — on
/// 200 seeded instances with at most 12 points and support at most 6.
#[test]
fn criterion_01_duality() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut max_gap = 0.0f64;

    for i in 0..200u64 {
        let points = 2 + (i as usize) % 10;
        let space = random_pointed_space::<Rational>(points, i);
        let mut rng = ChaCha8Rng::seed_from_u64(1_000 + i);
        let v = random_rational_vector(&space, 6, 9, 7, &mut rng);

        let result = norm(&space, &v).unwrap();
        if !result.gap.is_zero() {
            failures.push(format!("instance {i}: exact duality gap {}", result.gap));
        }
        let certs = check_certificates(&space, &v, &result, &Rational::zero()).unwrap();
        if !certs.ok() {
            failures.push(format!("instance {i}: exact certificates: {certs}"));
        }

        let space_f = random_pointed_space::<f64>(points, i);
        let mut rng_f = ChaCha8Rng::seed_from_u64(1_000 + i);
        let v_f = random_rational_vector(&space_f, 6, 9, 7, &mut rng_f);
        let result_f = norm(&space_f, &v_f).unwrap();
        max_gap = max_gap.max(result_f.gap.abs());
        if result_f.gap.abs() > FLOAT_TOL {
            failures.push(format!("instance {i}: float duality gap {}", result_f.gap));
        }
        let certs_f = check_certificates(&space_f, &v_f, &result_f, &FLOAT_TOL).unwrap();
        if !certs_f.ok() {
            failures.push(format!("instance {i}: float certificates: {certs_f}"));
        }
    }

    let elapsed = started.elapsed().as_millis();
    if elapsed >= DUALITY_BUDGET_MS {
        failures.push(format!("took {elapsed} ms, budget {DUALITY_BUDGET_MS} ms"));
    }
    verdict(
        1,
        "duality",
        &failures,
        format!("200 exact + 200 float instances, max float gap {max_gap:.2e}, {elapsed} ms"),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 2: the solver agrees exactly with the exhaustive oracle on
/// 120 seeded integer vectors inside the oracle budget.
#[test]
fn criterion_02_oracle_agreement() {
    let mut failures = Vec::new();
    let mut checked = 0u32;

    for i in 0..120u64 {
        let points = 2 + (i as usize) % 4;
        let space = random_pointed_space::<Rational>(points, 40_000 + i);
        let mut rng = ChaCha8Rng::seed_from_u64(41_000 + i);
        let v = if i % 2 == 0 {
            random_integer_vector(&space, 3, 2, &mut rng)
        } else {
            random_integer_vector(&space, 5, 1, &mut rng)
        };
        let (fast, _) = norm_primal(&space, &v).unwrap();
        let slow = norm_bruteforce(&space, &v).unwrap();
        checked += 1;
        if fast != slow {
            failures.push(format!(
                "instance {i}: solver {fast} vs oracle {slow} on {}",
                v.display(&space)
            ));
        }
    }

    assert!(checked >= 100, "need at least 100 oracle cases, got {checked}");
    verdict(2, "oracle_agreement", &failures, format!("{checked} exact cases"));
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 3: point differences embed isometrically — the norm of
/// `1*p - 1*q` equals `dist(p, q)` exactly, for every ordered pair in
/// 50 seeded spaces.
#[test]
fn criterion_03_isometric_embedding() {
    let mut failures = Vec::new();
    let mut pairs = 0u32;

    for s in 0..50u64 {
        let points = 2 + (s as usize) % 9;
        let space = random_pointed_space::<Rational>(points, 50_000 + s);
        for p in 0..space.len() {
            for q in 0..space.len() {
                if p == q {
                    continue;
                }
                let (v, _) = FreeVector::from_indexed(
                    &space,
                    [(p, Rational::one()), (q, -Rational::one())],
                )
                .unwrap();
                let (value, _) = norm_primal(&space, &v).unwrap();
                pairs += 1;
                if value != space.dist(p, q) {
                    failures.push(format!(
                        "space {s}: |{} - {}| = {value}, dist {}",
                        space.name(p),
                        space.name(q),
                        space.dist(p, q)
                    ));
                }
            }
        }
    }

    verdict(
        3,
        "isometric_embedding",
        &failures,
        format!("50 spaces, {pairs} ordered pairs, exact"),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 4: the mass-times-spread lower bound never exceeds the
/// norm, on 500 fuzzed integer vectors with support at least 2.
#[test]
fn criterion_04_mass_spread_bound() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(60_000);
    let mut accepted = 0u32;
    let mut i = 0u64;

    while accepted < 500 {
        i += 1;
        assert!(i < 5_000, "vector fuzzing starved");
        let points = 3 + (i as usize) % 8;
        let space = random_pointed_space::<Rational>(points, 61_000 + i);
        let v = random_integer_vector(&space, 5, 3, &mut rng);
        if v.support_len() < 2 {
            continue;
        }
        accepted += 1;
        let bound = lower_bound_eq2(&space, &v).unwrap();
        let (value, _) = norm_primal(&space, &v).unwrap();
        if value < bound {
            failures.push(format!(
                "vector {}: norm {value} below bound {bound}",
                v.display(&space)
            ));
        }
    }

    verdict(4, "mass_spread_bound", &failures, format!("{accepted} vectors, exact"));
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 5: norm axioms on 500 fuzzed pairs — homogeneity and the
/// triangle inequality exactly over rationals (300 pairs), the triangle
/// inequality within `FLOAT_TOL` over floats (200 pairs).
#[test]
fn criterion_05_norm_axioms() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(70_000);

    for i in 0..300u64 {
        let points = 3 + (i as usize) % 6;
        let space = random_pointed_space::<Rational>(points, 71_000 + i);
        let u = random_rational_vector(&space, 4, 5, 4, &mut rng);
        let v = random_rational_vector(&space, 4, 5, 4, &mut rng);
        let nu = norm_primal(&space, &u).unwrap().0;
        let nv = norm_primal(&space, &v).unwrap().0;

        let c = rational(-7, 3);
        let scaled = norm_primal(&space, &u.scale(&c)).unwrap().0;
        if scaled != c.abs() * nu.clone() {
            failures.push(format!("pair {i}: homogeneity broke on {}", u.display(&space)));
        }
        let sum = norm_primal(&space, &u.add(&v).unwrap()).unwrap().0;
        if sum > nu.clone() + nv.clone() {
            failures.push(format!(
                "pair {i}: exact triangle broke: {sum} > {nu} + {nv}"
            ));
        }
        if !u.is_zero() && nu <= Rational::zero() {
            failures.push(format!("pair {i}: positivity broke on {}", u.display(&space)));
        }
    }

    for i in 0..200u64 {
        let points = 3 + (i as usize) % 6;
        let space = random_pointed_space::<f64>(points, 72_000 + i);
        let u = random_rational_vector(&space, 4, 5, 4, &mut rng);
        let v = random_rational_vector(&space, 4, 5, 4, &mut rng);
        let nu = norm_primal(&space, &u).unwrap().0;
        let nv = norm_primal(&space, &v).unwrap().0;
        let sum = norm_primal(&space, &u.add(&v).unwrap()).unwrap().0;
        if sum > nu + nv + FLOAT_TOL {
            failures.push(format!(
                "pair {i}: float triangle broke: {sum} > {nu} + {nv}"
            ));
        }
        let c = -1.5f64;
        let scaled = norm_primal(&space, &u.scale(&c)).unwrap().0;
        if (scaled - c.abs() * nu).abs() > FLOAT_TOL {
            failures.push(format!("pair {i}: float homogeneity broke on {}", u.display(&space)));
        }
    }

    verdict(5, "norm_axioms", &failures, "300 exact + 200 float pairs".into());
    assert!(failures.is_empty(), "{failures:#?}");
}

fn graph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> LabeledGraph<f64> {
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = pairs
        .iter()
        .enumerate()
        .map(|(k, (a, b))| (format!("v{a}"), format!("v{b}"), format!("e{k:04}")))
        .collect();
    LabeledGraph::new(vertices, edges, None).unwrap()
}

fn path_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn star_pairs(leaves: usize) -> Vec<(usize, usize)> {
    (1..=leaves).map(|i| (0, i)).collect()
}

fn binary_tree_pairs(depth: u32) -> Vec<(usize, usize)> {
    let n = (1usize << (depth + 1)) - 1;
    (1..n).map(|i| ((i - 1) / 2, i)).collect()
}

/// Criterion 6: the constructed labeling is a stretched labeling with
/// constant at least 1/4 on 100 seeded connected graphs of up to 200
/// edges and on path, star, and binary-tree families.
#[test]
fn criterion_06_stretch_constant() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut graphs = 0u32;
    let mut worst = f64::INFINITY;

    let check = |name: String, graph: &LabeledGraph<f64>, failures: &mut Vec<String>| {
        let labeling = stretch_labeling(graph).unwrap();
        let eps = verify_stretched(&labeling);
        if eps < 0.25 {
            failures.push(format!("{name}: stretch constant {eps} below 1/4"));
        }
        if (eps - labeling.epsilon).abs() > 0.0 {
            failures.push(format!(
                "{name}: stored epsilon {} disagrees with recomputed {eps}",
                labeling.epsilon
            ));
        }
        eps
    };

    for i in 0..100u64 {
        let n = 5 + ((i as usize) * 97) % 96;
        let extra = ((i as usize) * 13) % 41;
        let extra = extra.min(201 - n);
        let graph = random_connected_graph::<f64>(n, extra, 80_000 + i);
        assert!(graph.edges().len() <= 200);
        let eps = check(format!("random {i} (n={n})"), &graph, &mut failures);
        worst = worst.min(eps);
        graphs += 1;
    }
    for n in [2, 9, 33, 130, 200] {
        let eps = check(
            format!("path {n}"),
            &graph_from_pairs(n + 1, &path_pairs(n + 1)),
            &mut failures,
        );
        worst = worst.min(eps);
        graphs += 1;
    }
    for leaves in [2, 7, 31, 120, 199] {
        let eps = check(
            format!("star {leaves}"),
            &graph_from_pairs(leaves + 1, &star_pairs(leaves)),
            &mut failures,
        );
        worst = worst.min(eps);
        graphs += 1;
    }
    for depth in [1, 2, 4, 6] {
        let pairs = binary_tree_pairs(depth);
        let eps = check(
            format!("binary tree depth {depth}"),
            &graph_from_pairs(pairs.len() + 1, &pairs),
            &mut failures,
        );
        worst = worst.min(eps);
        graphs += 1;
    }

    let elapsed = started.elapsed().as_millis();
    if elapsed >= STRETCH_BUDGET_MS {
        failures.push(format!("took {elapsed} ms, budget {STRETCH_BUDGET_MS} ms"));
    }
    verdict(
        6,
        "stretch_constant",
        &failures,
        format!("{graphs} graphs, worst constant {worst:.4}, {elapsed} ms"),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 7: path-label images are uniformly separated — at least
/// half the stretch constant, hence at least 1/8 — from every root of
/// 50 seeded forests with up to 100 vertices.
#[test]
fn criterion_07_uniform_separation() {
    let mut failures = Vec::new();
    let mut roots = 0u32;
    let mut worst = f64::INFINITY;

    for i in 0..50u64 {
        let n = 20 + ((i as usize) * 83) % 81;
        let graph = random_forest::<f64>(n, 2 + (i as usize) % 3, 90_000 + i);
        let labeling = stretch_labeling(&graph).unwrap();
        let forest = assert_forest(&graph).unwrap();
        let floor = labeling.epsilon / 2.0;
        for x in 0..forest.vertex_count() {
            let Some(sep) = separation(&forest, &labeling, x).unwrap() else {
                continue;
            };
            roots += 1;
            worst = worst.min(sep);
            if sep < floor - FLOAT_TOL || sep < 0.125 - FLOAT_TOL {
                failures.push(format!(
                    "forest {i}, root {}: separation {sep} below {floor}",
                    forest.vertex_name(x)
                ));
            }
        }
    }

    verdict(
        7,
        "uniform_separation",
        &failures,
        format!("50 forests, {roots} roots, worst separation {worst:.4}"),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 8: the telescoping identity `p(x,y) + p(y,z) = p(x,z)`
/// holds for every same-component triple — exhaustive and exact — over
/// a family of forests with up to 40 vertices.
#[test]
fn criterion_08_cocycle_identity() {
    let mut failures = Vec::new();
    let mut triples = 0u64;

    let mut forests: Vec<(String, Forest)> = Vec::new();
    for i in 0..15u64 {
        let n = 10 + ((i as usize) % 4) * 10;
        let graph = random_forest::<f64>(n, 2 + (i as usize) % 3, 100_000 + i);
        forests.push((format!("random {i}"), assert_forest(&graph).unwrap()));
    }
    forests.push((
        "path 40".into(),
        assert_forest(&graph_from_pairs(40, &path_pairs(40))).unwrap(),
    ));
    forests.push((
        "star 39".into(),
        assert_forest(&graph_from_pairs(40, &star_pairs(39))).unwrap(),
    ));
    let tree = binary_tree_pairs(4);
    forests.push((
        "binary tree depth 4".into(),
        assert_forest(&graph_from_pairs(tree.len() + 1, &tree)).unwrap(),
    ));

    for (name, forest) in &forests {
        assert!(forest.vertex_count() <= 40);
        let mut seen = vec![false; forest.vertex_count()];
        for v in 0..forest.vertex_count() {
            if seen[v] {
                continue;
            }
            let comp = forest.component_vertices(v);
            for &u in &comp {
                seen[u] = true;
            }
            let maps: BTreeMap<usize, _> = comp
                .iter()
                .map(|&x| (x, forest.labels_from(x)))
                .collect();
            for &x in &comp {
                for &y in &comp {
                    for &z in &comp {
                        triples += 1;
                        let lhs = maps[&x][&y].add(&maps[&y][&z]).unwrap();
                        if lhs != maps[&x][&z] {
                            failures.push(format!(
                                "{name}: identity broke at ({}, {}, {})",
                                forest.vertex_name(x),
                                forest.vertex_name(y),
                                forest.vertex_name(z)
                            ));
                        }
                    }
                }
            }
        }
    }

    verdict(
        8,
        "cocycle_identity",
        &failures,
        format!("{} forests, {triples} triples, exact", forests.len()),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Criterion 9: connectivity holds exactly when the images are
/// translates — for all vertex pairs of 50 seeded forests — and
/// doctored tables are rejected with witnesses.
#[test]
fn criterion_09_orbit_reduction() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut injections = 0u32;

    for i in 0..50u64 {
        let n = 20 + ((i as usize) * 83 + 7) % 81;
        let graph = random_forest::<f64>(n, 2 + (i as usize) % 3, 110_000 + i);
        let forest = assert_forest(&graph).unwrap();
        let table = reduce_all(&forest).unwrap();
        let honest = verify_reduction_table(&forest, &table).unwrap();
        if !honest.ok() {
            failures.push(format!("forest {i}: honest table rejected: {honest}"));
            continue;
        }

        if i % 10 != 0 {
            continue;
        }

        // Injection A: bend one entry of one image by a nonzero vector.
        let edge = &graph.edges()[0];
        let bend = path_label(&forest, edge.tail, edge.head).unwrap().vector;
        let x = edge.tail;
        let y = edge.head;
        let mut entries = table[x].entries().clone();
        entries.insert(y, entries[&y].add(&bend).unwrap());
        let mut doctored = table.clone();
        doctored[x] = ReductionPoint::assemble(&forest, x, entries).unwrap();
        let report = verify_reduction_table(&forest, &doctored).unwrap();
        let caught = report
            .violations
            .iter()
            .any(|v| v.axiom == "connected_implies_equivalent" && !v.witness.is_empty());
        if !caught {
            failures.push(format!("forest {i}: bent entry not caught"));
        }
        injections += 1;

        // Injection B: swap images across two components.
        if forest.component_count() >= 2 {
            let a = 0;
            let b = (0..forest.vertex_count())
                .find(|&v| !forest.same_component(a, v))
                .unwrap();
            let mut doctored = table.clone();
            doctored.swap(a, b);
            let report = verify_reduction_table(&forest, &doctored).unwrap();
            let both = ["connected_implies_equivalent", "equivalent_implies_connected"]
                .iter()
                .all(|axiom| {
                    report
                        .violations
                        .iter()
                        .any(|v| v.axiom == *axiom && !v.witness.is_empty())
                });
            if !both {
                failures.push(format!("forest {i}: cross-component swap not caught"));
            }
            injections += 1;
        }
    }

    assert!(injections >= 5, "too few fault injections ran: {injections}");
    let elapsed = started.elapsed().as_millis();
    if elapsed >= REDUCTION_BUDGET_MS {
        failures.push(format!("took {elapsed} ms, budget {REDUCTION_BUDGET_MS} ms"));
    }
    verdict(
        9,
        "orbit_reduction",
        &failures,
        format!("50 forests, {injections} fault injections, {elapsed} ms"),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Enumerates every simple path from `x` to `y` straight off the edge
/// list — independently of the forest machinery — returning each path's
/// signed label sum.
fn enumerate_simple_paths(
    graph: &LabeledGraph<f64>,
    x: usize,
    y: usize,
) -> Vec<BTreeMap<usize, i64>> {
    let n = graph.vertex_count();
    let mut adjacency: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); n];
    for e in graph.edges() {
        adjacency[e.tail].push((e.head, e.label, 1));
        adjacency[e.head].push((e.tail, e.label, -1));
    }
    let mut found = Vec::new();
    let mut visited = vec![false; n];
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();

    fn dfs(
        adjacency: &[Vec<(usize, usize, i64)>],
        visited: &mut [bool],
        acc: &mut BTreeMap<usize, i64>,
        found: &mut Vec<BTreeMap<usize, i64>>,
        at: usize,
        target: usize,
    ) {
        if at == target {
            found.push(acc.clone());
            return;
        }
        visited[at] = true;
        for &(next, label, sign) in &adjacency[at] {
            if visited[next] {
                continue;
            }
            *acc.entry(label).or_insert(0) += sign;
            if acc[&label] == 0 {
                acc.remove(&label);
            }
            dfs(adjacency, visited, acc, found, next, target);
            *acc.entry(label).or_insert(0) -= sign;
            if acc[&label] == 0 {
                acc.remove(&label);
            }
        }
        visited[at] = false;
    }

    dfs(&adjacency, &mut visited, &mut acc, &mut found, x, y);
    found
}

/// Criterion 10: on a fixed family of forests with at most 12 vertices,
/// brute-force path enumeration finds exactly one simple path per
/// ordered same-component pair (none across components), whose signed
/// label sum matches `path_label`.
#[test]
fn criterion_10_path_uniqueness() {
    let mut failures = Vec::new();
    let mut pairs = 0u64;

    let mut family: Vec<(String, LabeledGraph<f64>)> = Vec::new();
    for n in 1..=12 {
        family.push((format!("path {n}"), graph_from_pairs(n, &path_pairs(n))));
    }
    for leaves in 2..=11 {
        family.push((
            format!("star {leaves}"),
            graph_from_pairs(leaves + 1, &star_pairs(leaves)),
        ));
    }
    for depth in [1, 2] {
        let t = binary_tree_pairs(depth);
        family.push((
            format!("binary tree {depth}"),
            graph_from_pairs(t.len() + 1, &t),
        ));
    }
    // Broom: a handle with a fan at its end.
    family.push((
        "broom".into(),
        graph_from_pairs(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7), (4, 8)]),
    ));
    // Spider: three legs of length three.
    family.push((
        "spider".into(),
        graph_from_pairs(
            10,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)],
        ),
    ));
    // Two and three components.
    family.push((
        "two paths".into(),
        graph_from_pairs(12, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 9)]),
    ));
    family.push((
        "star plus path plus point".into(),
        graph_from_pairs(11, &[(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 7), (7, 8), (9, 10)]),
    ));
    for i in 0..20u64 {
        let n = 5 + (i as usize) % 8;
        family.push((
            format!("random {i}"),
            random_forest::<f64>(n, 3, 120_000 + i),
        ));
    }

    for (name, graph) in &family {
        assert!(graph.vertex_count() <= 12);
        let forest = assert_forest(graph).unwrap();
        for x in 0..forest.vertex_count() {
            for y in 0..forest.vertex_count() {
                pairs += 1;
                let paths = enumerate_simple_paths(graph, x, y);
                if forest.same_component(x, y) {
                    if paths.len() != 1 {
                        failures.push(format!(
                            "{name}: {} paths from {} to {}",
                            paths.len(),
                            forest.vertex_name(x),
                            forest.vertex_name(y)
                        ));
                        continue;
                    }
                    let label = path_label(&forest, x, y).unwrap();
                    let got: BTreeMap<usize, i64> = label.vector.iter().collect();
                    if got != paths[0] {
                        failures.push(format!(
                            "{name}: label mismatch from {} to {}",
                            forest.vertex_name(x),
                            forest.vertex_name(y)
                        ));
                    }
                } else {
                    if !paths.is_empty() {
                        failures.push(format!(
                            "{name}: cross-component path from {} to {}",
                            forest.vertex_name(x),
                            forest.vertex_name(y)
                        ));
                    }
                    match path_label(&forest, x, y) {
                        Err(Error::DifferentComponents(_, _)) => {}
                        other => failures.push(format!(
                            "{name}: expected a component refusal, got {other:?}"
                        )),
                    }
                }
            }
        }
    }

    verdict(
        10,
        "path_uniqueness",
        &failures,
        format!("{} forests, {pairs} ordered pairs", family.len()),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}
