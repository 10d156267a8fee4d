//! Transport norms with both certificates, exact and float.
//!
//! Builds a four-point pointed metric space by hand, computes the norm
//! of a signed vector, and prints the optimal transport plan (primal
//! certificate) next to the 1-Lipschitz potential (dual certificate).
//! Both are then re-verified from scratch, cross-checked against the
//! exhaustive oracle, and compared across the rational and float
//! backends.
//!
//! Run with: `cargo run --example norm_certificates`

use fbr::metric::{adjoin_basepoint, RawMetric};
use fbr::norm::{check_certificates, lower_bound_eq2, norm, norm_bruteforce};
use fbr::scalar::{Rational, Scalar};
use fbr::vector::parse_vector;

use num::traits::Zero;

fn main() -> fbr::Result<()> {
    // Distances are rationals in [0, 1]; the basepoint `*` is adjoined
    // at distance exactly 1 from everything.
    let q = Rational::from_ratio;
    let raw = RawMetric::new(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        vec![
            vec![q(0, 1), q(3, 10), q(1, 2), q(7, 10)],
            vec![q(3, 10), q(0, 1), q(2, 5), q(3, 5)],
            vec![q(1, 2), q(2, 5), q(0, 1), q(1, 4)],
            vec![q(7, 10), q(3, 5), q(1, 4), q(0, 1)],
        ],
    )?;
    let space = adjoin_basepoint(&raw, &Rational::zero())?;

    let (v, _) = parse_vector(&space, "2*a - 1*b - 1*c + 1*d")?;
    println!("space: a, b, c, d plus basepoint *");
    println!("vector: {}\n", v.display(&space));

    // One call produces the value and both certificates.
    let result = norm(&space, &v)?;
    println!("norm = {}   (duality gap {})", result.value, result.gap);

    println!("\nprimal certificate — a transport plan meeting the vector's divergence:");
    for m in &result.plan.moves {
        println!("  ship {} from {} to {}", m.mass, space.name(m.source), space.name(m.target));
    }
    println!("  plan cost = {}", result.plan.cost(&space));

    println!("\ndual certificate — a 1-Lipschitz potential vanishing at *:");
    for (p, value) in &result.potential.phi {
        println!("  phi({}) = {}", space.name(*p), value);
    }
    println!("  potential value = {}", result.potential.value(&v));

    // Certificates are re-verified from the raw data, not trusted.
    let report = check_certificates(&space, &v, &result, &Rational::zero())?;
    println!("\ncertificate verification: {}", if report.ok() { "clean" } else { "FAILED" });

    // The exhaustive oracle decomposes every flow into permutation
    // routings; it agrees exactly because both sides are rational.
    let oracle = norm_bruteforce(&space, &v)?;
    println!("exhaustive oracle: {} (match: {})", oracle, oracle == result.value);

    // A cheap a-priori bound: half the total mass times the minimum
    // pairwise support distance.
    let bound = lower_bound_eq2(&space, &v)?;
    println!("mass-times-spread lower bound: {} <= {}", bound, result.value);

    // The float backend solves the same instance within 1e-9.
    let raw_f = RawMetric::new(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        vec![
            vec![0.0, 0.3, 0.5, 0.7],
            vec![0.3, 0.0, 0.4, 0.6],
            vec![0.5, 0.4, 0.0, 0.25],
            vec![0.7, 0.6, 0.25, 0.0],
        ],
    )?;
    let space_f = adjoin_basepoint(&raw_f, &1e-9)?;
    let (v_f, _) = parse_vector(&space_f, "2*a - 1*b - 1*c + 1*d")?;
    let result_f = norm(&space_f, &v_f)?;
    println!(
        "\nfloat backend: norm = {} (exact value {} ~ {})",
        result_f.value,
        result.value,
        result.value.to_f64()
    );
    Ok(())
}
