//! Finite pointed metric spaces.
//!
//! A pointed space carries a distinguished basepoint `*` at internal index
//! 0, every other point sits at distance exactly 1 from it, and all
//! distances are at most 1. Point identifiers are strings; dense indices
//! follow input order.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{le_within, within, Scalar};

/// Name reserved for the basepoint.
pub const BASEPOINT: &str = "*";

static NEXT_SPACE: AtomicU64 = AtomicU64::new(1);

/// Identity of one constructed space; clones share it, independent
/// constructions never do. Used to reject cross-space vector arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpaceToken(u64);

fn fresh_token() -> SpaceToken {
    SpaceToken(NEXT_SPACE.fetch_add(1, Ordering::Relaxed))
}

/// One failed axiom with a concrete witness.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
    pub magnitude: f64,
}

impl Violation {
    pub fn new(axiom: &str, witness: Vec<String>, magnitude: f64) -> Self {
        Violation {
            axiom: axiom.to_string(),
            witness,
            magnitude,
        }
    }
}

/// Outcome of a verification pass: empty means every axiom held.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &str, witness: Vec<String>, magnitude: f64) {
        self.violations.push(Violation::new(axiom, witness, magnitude));
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} at ({})", v.axiom, v.witness.join(", "))?;
        }
        Ok(())
    }
}

/// A plain finite metric: named points and a symmetric distance matrix,
/// with no basepoint adjoined yet.
#[derive(Clone, Debug, PartialEq)]
pub struct RawMetric<S> {
    pub names: Vec<String>,
    pub dist: Vec<Vec<S>>,
}

impl<S: Scalar> RawMetric<S> {
    /// Structural checks only; axiom checks live in [`RawMetric::validate`].
    pub fn new(names: Vec<String>, dist: Vec<Vec<S>>) -> Result<Self> {
        if dist.len() != names.len() {
            return Err(Error::Dimension(format!(
                "{} rows for {} points",
                dist.len(),
                names.len()
            )));
        }
        for (i, row) in dist.iter().enumerate() {
            if row.len() != names.len() {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries for {} points",
                    i,
                    row.len(),
                    names.len()
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if n == BASEPOINT {
                return Err(Error::InvalidInstance(format!(
                    "point name `{BASEPOINT}` is reserved for the basepoint"
                )));
            }
            if !seen.insert(n.clone()) {
                return Err(Error::InvalidInstance(format!("duplicate point `{n}`")));
            }
        }
        Ok(RawMetric { names, dist })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Checks the metric axioms (zero diagonal, symmetry, positivity on
    /// distinct points, triangle inequality) and reports every violation
    /// with a witness tuple.
    pub fn validate(&self, tol: &S) -> ValidationReport {
        validate_matrix(&self.names, &self.dist, tol)
    }

    /// Entry-wise `t -> t / (t + 1)`. Rejects non-metrics; the output is a
    /// metric with all values below 1 and the same distance ordering.
    pub fn normalize(&self, tol: &S) -> Result<RawMetric<S>> {
        let report = self.validate(tol);
        if !report.ok() {
            return Err(Error::InvalidMetric(report));
        }
        let one = S::one();
        let dist = self
            .dist
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| t.clone() / (t.clone() + one.clone()))
                    .collect()
            })
            .collect();
        Ok(RawMetric {
            names: self.names.clone(),
            dist,
        })
    }
}

/// Entry-wise normalization of an already validated metric.
pub fn normalize_metric<S: Scalar>(raw: &RawMetric<S>, tol: &S) -> Result<RawMetric<S>> {
    raw.normalize(tol)
}

fn validate_matrix<S: Scalar>(names: &[String], dist: &[Vec<S>], tol: &S) -> ValidationReport {
    let n = names.len();
    let mut report = ValidationReport::default();
    let zero = S::zero();
    for i in 0..n {
        if !within(&dist[i][i], &zero, tol) {
            report.push(
                "identity",
                vec![names[i].clone()],
                dist[i][i].to_f64().abs(),
            );
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !within(&dist[i][j], &dist[j][i], tol) {
                report.push(
                    "symmetry",
                    vec![names[i].clone(), names[j].clone()],
                    (dist[i][j].clone() - dist[j][i].clone()).to_f64().abs(),
                );
            }
            if dist[i][j] <= *tol {
                report.push(
                    "positivity",
                    vec![names[i].clone(), names[j].clone()],
                    dist[i][j].to_f64(),
                );
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let via = dist[i][j].clone() + dist[j][k].clone();
                if !le_within(&dist[i][k], &via, tol) {
                    report.push(
                        "triangle",
                        vec![names[i].clone(), names[j].clone(), names[k].clone()],
                        (dist[i][k].clone() - via).to_f64(),
                    );
                }
            }
        }
    }
    report
}

/// Finite metric space with basepoint `*` at index 0.
#[derive(Clone, Debug)]
pub struct PointedMetricSpace<S> {
    token: SpaceToken,
    names: Vec<String>,
    dist: Vec<Vec<S>>,
}

impl<S> PartialEq for PointedMetricSpace<S>
where
    S: PartialEq,
{
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.dist == other.dist
    }
}

impl<S: Scalar> PointedMetricSpace<S> {
    /// Builds a space from a full matrix that already includes the
    /// basepoint row/column at index 0. Only structural properties are
    /// enforced here; run [`validate_space`] for the axioms.
    pub fn from_parts(point_names: Vec<String>, dist: Vec<Vec<S>>) -> Result<Self> {
        let mut names = Vec::with_capacity(point_names.len() + 1);
        names.push(BASEPOINT.to_string());
        names.extend(point_names);
        if dist.len() != names.len() || dist.iter().any(|r| r.len() != names.len()) {
            return Err(Error::Dimension(format!(
                "matrix does not match {} points plus basepoint",
                names.len() - 1
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::InvalidInstance(format!("duplicate point `{n}`")));
            }
        }
        Ok(PointedMetricSpace {
            token: fresh_token(),
            names,
            dist,
        })
    }

    pub fn token(&self) -> SpaceToken {
        self.token
    }

    /// Number of points including the basepoint.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the basepoint is always present
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn dist(&self, a: usize, b: usize) -> S {
        self.dist[a][b].clone()
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.dist
    }
}

/// Adjoins the basepoint to a validated metric with entries at most 1:
/// every new distance to `*` is exactly 1. The triangle inequality through
/// `*` holds because the original entries do not exceed 1.
pub fn adjoin_basepoint<S: Scalar>(raw: &RawMetric<S>, tol: &S) -> Result<PointedMetricSpace<S>> {
    let report = raw.validate(tol);
    if !report.ok() {
        return Err(Error::InvalidMetric(report));
    }
    let one = S::one();
    for i in 0..raw.len() {
        for j in 0..raw.len() {
            if !le_within(&raw.dist[i][j], &one, tol) {
                return Err(Error::DistanceAboveOne(format!(
                    "d({}, {}) = {}",
                    raw.names[i], raw.names[j], raw.dist[i][j]
                )));
            }
        }
    }
    let n = raw.len() + 1;
    let mut dist = vec![vec![S::zero(); n]; n];
    for i in 1..n {
        dist[0][i] = one.clone();
        dist[i][0] = one.clone();
        for j in 1..n {
            if i != j {
                dist[i][j] = raw.dist[i - 1][j - 1].clone();
            }
        }
    }
    PointedMetricSpace::from_parts(raw.names.clone(), dist)
}

/// Reports every violated pointed-space axiom: the plain metric axioms,
/// unit distance from each point to the basepoint, and the global bound
/// `d <= 1`.
pub fn validate_space<S: Scalar>(space: &PointedMetricSpace<S>, tol: &S) -> ValidationReport {
    let mut report = validate_matrix(&space.names, &space.dist, tol);
    let one = S::one();
    for i in 1..space.len() {
        if !within(&space.dist[0][i], &one, tol) {
            report.push(
                "basepoint_distance",
                vec![space.names[i].clone()],
                (space.dist[0][i].clone() - one.clone()).to_f64().abs(),
            );
        }
    }
    for i in 0..space.len() {
        for j in 0..space.len() {
            if !le_within(&space.dist[i][j], &one, tol) {
                report.push(
                    "bounded_by_one",
                    vec![space.names[i].clone(), space.names[j].clone()],
                    (space.dist[i][j].clone() - one.clone()).to_f64(),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num::traits::{One, Zero};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn raw2(d_ab: Rational) -> RawMetric<Rational> {
        RawMetric::new(
            vec!["a".into(), "b".into()],
            vec![
                vec![Rational::zero(), d_ab.clone()],
                vec![d_ab, Rational::zero()],
            ],
        )
        .unwrap()
    }

    #[test]
    fn valid_two_point_space() {
        let space = adjoin_basepoint(&raw2(q(1, 2)), &Rational::zero()).unwrap();
        assert!(validate_space(&space, &Rational::zero()).ok());
        assert_eq!(space.name(0), BASEPOINT);
        assert_eq!(space.dist(0, 1), Rational::one());
        assert_eq!(space.dist(1, 2), q(1, 2));
    }

    #[test]
    fn positivity_violation_reported() {
        let raw = raw2(Rational::zero());
        let report = raw.validate(&Rational::zero());
        assert!(!report.ok());
        assert_eq!(report.violations[0].axiom, "positivity");
        assert_eq!(report.violations[0].witness, vec!["a", "b"]);
    }

    #[test]
    fn triangle_violation_reported_with_witness() {
        // d(a,c) = 0.9 but d(a,b) + d(b,c) = 0.6
        let raw = RawMetric::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec![q(0, 1), q(3, 10), q(9, 10)],
                vec![q(3, 10), q(0, 1), q(3, 10)],
                vec![q(9, 10), q(3, 10), q(0, 1)],
            ],
        )
        .unwrap();
        let report = raw.validate(&Rational::zero());
        let t = report
            .violations
            .iter()
            .find(|v| v.axiom == "triangle")
            .expect("triangle violation");
        assert_eq!(t.witness, vec!["a", "b", "c"]);
        assert!((t.magnitude - 0.3).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch_is_structural() {
        let err = RawMetric::new(
            vec!["a".into(), "b".into()],
            vec![vec![Rational::zero()]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
    }

    #[test]
    fn normalize_maps_known_values() {
        let raw = RawMetric::new(
            vec!["a".into(), "b".into()],
            vec![
                vec![Rational::zero(), Rational::from_int(3)],
                vec![Rational::from_int(3), Rational::zero()],
            ],
        )
        .unwrap();
        let n = raw.normalize(&Rational::zero()).unwrap();
        assert_eq!(n.dist[0][1], q(3, 4));
        assert_eq!(n.dist[0][0], Rational::zero());

        let unit = raw2(Rational::one()).normalize(&Rational::zero()).unwrap();
        assert_eq!(unit.dist[0][1], q(1, 2));
    }

    #[test]
    fn normalize_rejects_non_metric() {
        let raw = raw2(Rational::zero());
        assert!(matches!(
            raw.normalize(&Rational::zero()),
            Err(Error::InvalidMetric(_))
        ));
    }

    #[test]
    fn adjoin_rejects_entries_above_one() {
        let raw = raw2(q(3, 2));
        assert!(matches!(
            adjoin_basepoint(&raw, &Rational::zero()),
            Err(Error::DistanceAboveOne(_))
        ));
    }

    #[test]
    fn adjoin_empty_point_set() {
        let raw = RawMetric::<Rational>::new(vec![], vec![]).unwrap();
        let space = adjoin_basepoint(&raw, &Rational::zero()).unwrap();
        assert_eq!(space.len(), 1);
        assert!(validate_space(&space, &Rational::zero()).ok());
    }

    #[test]
    fn single_point_sits_at_unit_distance() {
        let raw = RawMetric::new(vec!["p".into()], vec![vec![Rational::zero()]]).unwrap();
        let space = adjoin_basepoint(&raw, &Rational::zero()).unwrap();
        assert_eq!(space.dist(0, 1), Rational::one());
        assert!(validate_space(&space, &Rational::zero()).ok());
    }
}
