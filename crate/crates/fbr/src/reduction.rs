//! From connectivity to orbit equivalence.
//!
//! Each vertex `x` of a forest is sent to the set of pairs
//! `(p(x,y), y)` over all `y` in its component — a [`ReductionPoint`].
//! Label vectors act on such sets by translating the first coordinate.
//! Two vertices lie in the same component exactly when some vector
//! translates one image onto the other, and the cocycle identity pins
//! that translator down to `p(x2, x1)`, so equivalence is decidable by
//! checking a single candidate.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::forest::{separation, Forest, LabelVector};
use crate::labeling::{GraphToken, StretchedLabeling};
use crate::metric::ValidationReport;
use crate::scalar::Scalar;

/// The image of one vertex: for every vertex `y` of its component, the
/// path label from the base to `y`. Equality deliberately ignores which
/// base produced the set — the set itself is the point.
#[derive(Clone, Debug)]
pub struct ReductionPoint {
    base: usize,
    token: GraphToken,
    entries: BTreeMap<usize, LabelVector>,
}

impl PartialEq for ReductionPoint {
    fn eq(&self, other: &Self) -> bool {
        self.token == other.token && self.entries == other.entries
    }
}

impl Eq for ReductionPoint {}

impl ReductionPoint {
    /// The vertex this point was computed from (not part of equality).
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn token(&self) -> GraphToken {
        self.token
    }

    pub fn entries(&self) -> &BTreeMap<usize, LabelVector> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Assembles a candidate image by hand — the way to feed doctored
    /// tables to [`verify_reduction_table`] and watch them get caught.
    /// Only the token discipline is enforced here; whether the entries
    /// form a genuine image is exactly what verification decides.
    pub fn assemble(
        forest: &Forest,
        base: usize,
        entries: BTreeMap<usize, LabelVector>,
    ) -> Result<ReductionPoint> {
        if base >= forest.vertex_count() {
            return Err(Error::UnknownVertex(format!("index {base}")));
        }
        for (y, h) in &entries {
            if *y >= forest.vertex_count() {
                return Err(Error::UnknownVertex(format!("index {y}")));
            }
            if h.token() != forest.token() {
                return Err(Error::GraphMismatch);
            }
        }
        Ok(ReductionPoint {
            base,
            token: forest.token(),
            entries,
        })
    }
}

/// `f(x)`: the set `{(p(x,y), y) : y in component(x)}`.
pub fn reduce_point(forest: &Forest, x: usize) -> Result<ReductionPoint> {
    if x >= forest.vertex_count() {
        return Err(Error::UnknownVertex(format!("index {x}")));
    }
    Ok(ReductionPoint {
        base: x,
        token: forest.token(),
        entries: forest.labels_from(x),
    })
}

/// The action: `g . {(h, y)} = {(g + h, y)}`.
pub fn translate(point: &ReductionPoint, g: &LabelVector) -> Result<ReductionPoint> {
    if point.token != g.token() {
        return Err(Error::GraphMismatch);
    }
    let entries = point
        .entries
        .iter()
        .map(|(y, h)| Ok((*y, g.add(h)?)))
        .collect::<Result<_>>()?;
    Ok(ReductionPoint {
        base: point.base,
        token: point.token,
        entries,
    })
}

/// Outcome of an orbit-equivalence test; when `equivalent` holds, the
/// translator carries the first point exactly onto the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitWitness {
    pub equivalent: bool,
    pub translator: Option<LabelVector>,
}

impl OrbitWitness {
    fn no() -> Self {
        OrbitWitness {
            equivalent: false,
            translator: None,
        }
    }

    fn yes(translator: LabelVector) -> Self {
        OrbitWitness {
            equivalent: true,
            translator: Some(translator),
        }
    }
}

/// Decides whether some vector translates `p1` onto `p2` and returns it
/// if so. The vertex sets must match, and the difference of the two
/// vectors at any shared vertex is the only possible translator, so one
/// candidate is computed and then checked everywhere.
pub fn orbit_equivalent(p1: &ReductionPoint, p2: &ReductionPoint) -> Result<OrbitWitness> {
    if p1.token != p2.token {
        return Err(Error::GraphMismatch);
    }
    if p1.entries.len() != p2.entries.len()
        || !p1.entries.keys().eq(p2.entries.keys())
    {
        return Ok(OrbitWitness::no());
    }
    let Some((anchor, h1)) = p1.entries.iter().next() else {
        return Ok(OrbitWitness::yes(LabelVector::zero(p1.token)));
    };
    let translator = p2.entries[anchor].sub(h1)?;
    for (y, h) in &p1.entries {
        if translator.add(h)? != p2.entries[y] {
            return Ok(OrbitWitness::no());
        }
    }
    Ok(OrbitWitness::yes(translator))
}

/// `f(x)` for every vertex, indexed by vertex.
pub fn reduce_all(forest: &Forest) -> Result<Vec<ReductionPoint>> {
    (0..forest.vertex_count())
        .map(|x| reduce_point(forest, x))
        .collect()
}

/// Checks the defining property of the reduction over an explicit table
/// of images: vertices share a component exactly when their table
/// entries are orbit equivalent, and every claimed witness really
/// translates one point onto the other. Violations are reported with
/// the offending vertex pair.
pub fn verify_reduction_table(
    forest: &Forest,
    table: &[ReductionPoint],
) -> Result<ValidationReport> {
    if table.len() != forest.vertex_count() {
        return Err(Error::Dimension(format!(
            "{} images for {} vertices",
            table.len(),
            forest.vertex_count()
        )));
    }
    let mut report = ValidationReport::default();
    let n = forest.vertex_count();
    for x in 0..n {
        for y in 0..n {
            let related = forest.same_component(x, y);
            let witness = orbit_equivalent(&table[x], &table[y])?;
            match (related, witness.translator) {
                (true, None) => report.push(
                    "connected_implies_equivalent",
                    vec![forest.vertex_name(x).into(), forest.vertex_name(y).into()],
                    1.0,
                ),
                (false, Some(_)) => report.push(
                    "equivalent_implies_connected",
                    vec![forest.vertex_name(x).into(), forest.vertex_name(y).into()],
                    1.0,
                ),
                (true, Some(g)) => {
                    if translate(&table[x], &g)? != table[y] {
                        report.push(
                            "witness_translates",
                            vec![
                                forest.vertex_name(x).into(),
                                forest.vertex_name(y).into(),
                            ],
                            1.0,
                        );
                    }
                }
                (false, None) => {}
            }
        }
    }
    Ok(report)
}

/// End-to-end check that the map is a reduction on this instance:
/// [`verify_reduction_table`] on the honest images, plus the uniform
/// discreteness bound — from every root, distinct targets stay at least
/// `epsilon / 2` apart in the transport norm.
pub fn verify_reduction<S: Scalar>(
    forest: &Forest,
    labeling: &StretchedLabeling<S>,
) -> Result<ValidationReport> {
    if forest.token() != labeling.graph.token() {
        return Err(Error::GraphMismatch);
    }
    let mut report = verify_reduction_table(forest, &reduce_all(forest)?)?;
    let two = S::from_int(2);
    let floor = labeling.epsilon.clone() / two;
    for x in 0..forest.vertex_count() {
        if let Some(s) = separation(forest, labeling, x)? {
            if s < floor {
                report.push(
                    "separation",
                    vec![forest.vertex_name(x).into()],
                    s.to_f64(),
                );
            }
        }
    }
    Ok(report)
}
