//! The whole pipeline on a seeded random instance.
//!
//! Generates a random forest, serializes it to the instance format,
//! reads it back, builds the stretched labeling, and runs the full
//! verification — metric axioms, duality with certificates, the oracle,
//! path-label algebra, separation, and the orbit-reduction check — the
//! same work `fbr verify` does, driven through the library API.
//!
//! Run with: `cargo run --example generate_and_verify [seed]`

use fbr::forest::{assert_forest, separation};
use fbr::generate::{random_forest, random_integer_vector};
use fbr::instance::{instance_to_graph, parse_instance_file, to_canonical_json, graph_to_instance, instance_digest};
use fbr::labeling::stretch_labeling;
use fbr::metric::validate_space;
use fbr::norm::{check_certificates, norm, norm_bruteforce};
use fbr::reduction::{reduce_all, verify_reduction_table};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fbr::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be a u64"))
        .unwrap_or(42);

    // Generate, serialize, digest, and reload — the reload is what any
    // other consumer of the instance file would see.
    let graph = random_forest::<f64>(32, 3, seed);
    let bytes = to_canonical_json(&graph_to_instance(&graph)).into_bytes();
    println!("seed {seed}: {} vertices, {} edges, instance digest {}",
        graph.vertex_count(),
        graph.edges().len(),
        &instance_digest(&bytes)[..16]
    );
    let graph = instance_to_graph::<f64>(&parse_instance_file(&bytes)?)?;

    // Labeling: a metric on the labels with a verified stretch constant.
    let labeling = stretch_labeling(&graph)?;
    let axioms = validate_space(&labeling.label_space, &1e-9);
    println!("stretch constant {:.4}, label-space axioms {}",
        labeling.epsilon,
        if axioms.ok() { "clean" } else { "VIOLATED" }
    );

    // Norm spot checks over the label space: duality gap, certificates,
    // and the exhaustive oracle on in-budget vectors.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_gap = 0.0f64;
    let mut oracle_ok = true;
    for _ in 0..25 {
        let v = random_integer_vector(&labeling.label_space, 3, 2, &mut rng);
        let result = norm(&labeling.label_space, &v)?;
        max_gap = max_gap.max(result.gap.abs());
        let certs = check_certificates(&labeling.label_space, &v, &result, &1e-9)?;
        assert!(certs.ok(), "certificates must re-verify: {certs}");
        oracle_ok &= (norm_bruteforce(&labeling.label_space, &v)? - result.value).abs() <= 1e-9;
    }
    println!("25 norm checks: max duality gap {max_gap:.2e}, oracle agreement {oracle_ok}");

    // Forest structure, separation from every root, and the reduction.
    let forest = assert_forest(&graph)?;
    let mut worst = f64::INFINITY;
    for x in 0..forest.vertex_count() {
        if let Some(s) = separation(&forest, &labeling, x)? {
            worst = worst.min(s);
        }
    }
    println!(
        "{} components; worst separation {:.4} (floor epsilon/2 = {:.4})",
        forest.component_count(),
        worst,
        labeling.epsilon / 2.0
    );

    let table = reduce_all(&forest)?;
    let report = verify_reduction_table(&forest, &table)?;
    println!(
        "orbit reduction over {} vertex pairs: {}",
        forest.vertex_count() * forest.vertex_count(),
        if report.ok() { "verified" } else { "REJECTED" }
    );
    Ok(())
}
