//! The transport norm on finitely supported vectors.
//!
//! `norm_primal` solves the uncapacitated minimum-cost transshipment
//! problem on the complete digraph over the vector's support plus the
//! basepoint: minimize the mass-weighted travel distance over all
//! nonnegative flows whose divergence matches the coefficients. The
//! solver is successive shortest paths with node potentials, so a
//! 1-Lipschitz dual certificate falls out of the same run. Both
//! certificates are re-checkable from raw data via [`check_certificates`],
//! and an exhaustive oracle (`norm_bruteforce`) covers small integer
//! instances independently of the solver.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::metric::{PointedMetricSpace, ValidationReport};
use crate::scalar::{ge_within, le_within, within, Scalar};
use crate::vector::FreeVector;

/// A nonnegative flow witnessing an upper bound for the norm. Endpoints
/// are point indices into the ambient space.
#[derive(Clone, Debug, PartialEq)]
pub struct TransportPlan<S> {
    pub moves: Vec<Move<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Move<S> {
    pub source: usize,
    pub target: usize,
    pub mass: S,
}

impl<S: Scalar> TransportPlan<S> {
    pub fn cost(&self, space: &PointedMetricSpace<S>) -> S {
        self.moves
            .iter()
            .map(|m| m.mass.clone() * space.dist(m.source, m.target))
            .sum()
    }
}

/// A 1-Lipschitz function vanishing at the basepoint; its pairing with the
/// vector is a lower bound for the norm. Keys are point indices and always
/// include the basepoint.
#[derive(Clone, Debug, PartialEq)]
pub struct LipschitzPotential<S> {
    pub phi: BTreeMap<usize, S>,
}

impl<S: Scalar> LipschitzPotential<S> {
    /// The pairing `sum coeff(p) * phi(p)`.
    pub fn value(&self, v: &FreeVector<S>) -> S {
        v.iter()
            .map(|(idx, c)| {
                c.clone() * self.phi.get(&idx).cloned().unwrap_or_else(S::zero)
            })
            .sum()
    }
}

#[derive(Clone, Debug)]
pub struct NormResult<S> {
    pub value: S,
    pub plan: TransportPlan<S>,
    pub potential: LipschitzPotential<S>,
    /// `cost(plan) - value(potential)`; zero at optimality in exact mode.
    pub gap: S,
}

struct Solution<S> {
    nodes: Vec<usize>, // node -> point index; nodes[0] is the basepoint
    flow: Vec<Vec<S>>,
    potential: Vec<S>, // phi per node, phi[0] = 0
}

#[derive(Clone, Copy)]
enum Step {
    Forward,
    Backward,
}

/// Successive shortest paths on the complete digraph over
/// `support(v) + {*}`. Node potentials keep every reduced cost
/// nonnegative, so each search is a plain Dijkstra; flow-carrying arcs
/// stay tight, which makes the final potentials an optimal dual.
fn solve<S: Scalar>(space: &PointedMetricSpace<S>, v: &FreeVector<S>) -> Result<Solution<S>> {
    if v.space_token() != space.token() {
        return Err(Error::SpaceMismatch);
    }
    let mut nodes = vec![0usize];
    nodes.extend(v.support());
    let n = nodes.len();

    let cost: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| space.dist(nodes[i], nodes[j])).collect())
        .collect();

    // Divergence targets: coefficients on support nodes, balance at *.
    let mut excess: Vec<S> = Vec::with_capacity(n);
    let total: S = v.iter().map(|(_, c)| c.clone()).sum();
    excess.push(-total);
    for (_, c) in v.iter() {
        excess.push(c.clone());
    }

    let mut flow = vec![vec![S::zero(); n]; n];
    let mut pi = vec![S::zero(); n];
    let zero = S::zero();
    // Sub-tolerance residue from float accumulation is not worth routing;
    // the exact backend's tolerance is zero, so it never skips anything.
    let slack = S::default_tolerance();

    loop {
        let Some(src) = (0..n).find(|&p| excess[p] > slack) else {
            break;
        };

        // Dijkstra over reduced costs in the residual graph.
        let mut dist: Vec<Option<S>> = vec![None; n];
        let mut via: Vec<Option<(usize, Step)>> = vec![None; n];
        let mut done = vec![false; n];
        dist[src] = Some(S::zero());
        loop {
            let mut u = None;
            for p in 0..n {
                if done[p] || dist[p].is_none() {
                    continue;
                }
                match u {
                    None => u = Some(p),
                    Some(q) => {
                        if dist[p].as_ref().unwrap() < dist[q].as_ref().unwrap() {
                            u = Some(p);
                        }
                    }
                }
            }
            let Some(u) = u else { break };
            done[u] = true;
            let du = dist[u].clone().unwrap();
            for w in 0..n {
                if w == u || done[w] {
                    continue;
                }
                let rc_forward = cost[u][w].clone() + pi[u].clone() - pi[w].clone();
                let mut rc = rc_forward;
                let mut step = Step::Forward;
                if flow[w][u] > zero {
                    let rc_backward = pi[u].clone() - pi[w].clone() - cost[w][u].clone();
                    if rc_backward < rc {
                        rc = rc_backward;
                        step = Step::Backward;
                    }
                }
                // Guard against float round-off; exact mode never clamps.
                if rc < zero {
                    rc = S::zero();
                }
                let cand = du.clone() + rc;
                let better = match &dist[w] {
                    None => true,
                    Some(d) => cand < *d,
                };
                if better {
                    dist[w] = Some(cand);
                    via[w] = Some((u, step));
                }
            }
        }

        let sink = (0..n)
            .filter(|&p| excess[p] < zero && dist[p].is_some())
            .min_by(|a, b| {
                dist[*a]
                    .as_ref()
                    .unwrap()
                    .partial_cmp(dist[*b].as_ref().unwrap())
                    .unwrap()
            })
            .expect("balanced divergence leaves a reachable deficit node");

        // Bottleneck: endpoint imbalances and backward-arc flow.
        let mut delta = excess[src].clone();
        let sink_room = -excess[sink].clone();
        if sink_room < delta {
            delta = sink_room;
        }
        let mut p = sink;
        while p != src {
            let (q, step) = via[p].clone().expect("path back to source");
            if let Step::Backward = step {
                if flow[p][q] < delta {
                    delta = flow[p][q].clone();
                }
            }
            p = q;
        }

        let mut p = sink;
        while p != src {
            let (q, step) = via[p].clone().unwrap();
            match step {
                Step::Forward => flow[q][p] = flow[q][p].clone() + delta.clone(),
                Step::Backward => flow[p][q] = flow[p][q].clone() - delta.clone(),
            }
            p = q;
        }
        excess[src] = excess[src].clone() - delta.clone();
        excess[sink] = excess[sink].clone() + delta.clone();

        for p in 0..n {
            if let Some(d) = &dist[p] {
                pi[p] = pi[p].clone() + d.clone();
            }
        }
    }

    let potential = (0..n).map(|p| pi[0].clone() - pi[p].clone()).collect();
    Ok(Solution {
        nodes,
        flow,
        potential,
    })
}

impl<S: Scalar> Solution<S> {
    fn plan(&self) -> TransportPlan<S> {
        let n = self.nodes.len();
        let zero = S::zero();
        let mut moves = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.flow[a][b] > zero {
                    moves.push(Move {
                        source: self.nodes[a],
                        target: self.nodes[b],
                        mass: self.flow[a][b].clone(),
                    });
                }
            }
        }
        moves
            .sort_by_key(|m| (m.source, m.target));
        TransportPlan { moves }
    }

    fn lipschitz(&self) -> LipschitzPotential<S> {
        let phi = self
            .nodes
            .iter()
            .zip(self.potential.iter())
            .map(|(p, v)| (*p, v.clone()))
            .collect();
        LipschitzPotential { phi }
    }
}

/// Exact minimum of the transshipment problem together with an attaining
/// plan. The zero vector yields value 0 and an empty plan.
pub fn norm_primal<S: Scalar>(
    space: &PointedMetricSpace<S>,
    v: &FreeVector<S>,
) -> Result<(S, TransportPlan<S>)> {
    let solution = solve(space, v)?;
    let plan = solution.plan();
    let value = plan.cost(space);
    Ok((value, plan))
}

/// Best lower bound `sum coeff(p) * phi(p)` over 1-Lipschitz potentials
/// vanishing at the basepoint. The returned value is evaluated from the
/// potential itself, so comparing it with the primal cost is a genuine
/// optimality check.
pub fn norm_dual<S: Scalar>(
    space: &PointedMetricSpace<S>,
    v: &FreeVector<S>,
) -> Result<(S, LipschitzPotential<S>)> {
    let solution = solve(space, v)?;
    let potential = solution.lipschitz();
    let value = potential.value(v);
    Ok((value, potential))
}

/// Primal and dual certificates from one solve, with the observed gap.
pub fn norm<S: Scalar>(
    space: &PointedMetricSpace<S>,
    v: &FreeVector<S>,
) -> Result<NormResult<S>> {
    let solution = solve(space, v)?;
    let plan = solution.plan();
    let potential = solution.lipschitz();
    let value = plan.cost(space);
    let gap = value.clone() - potential.value(v);
    Ok(NormResult {
        value,
        plan,
        potential,
        gap,
    })
}

const ORACLE_MASS_BUDGET: i64 = 6;
const ORACLE_SUPPORT_BUDGET: usize = 5;

/// Exhaustive oracle for small integer vectors: some optimal flow is
/// integral and decomposes into unit source-to-sink shipments, so the
/// minimum over all unit assignments, each routed along a cheapest relay
/// path (Floyd-Warshall closure over `support + {*}`), is the exact norm.
/// Budget overruns are refused outright.
pub fn norm_bruteforce<S: Scalar>(space: &PointedMetricSpace<S>, v: &FreeVector<S>) -> Result<S> {
    if v.space_token() != space.token() {
        return Err(Error::SpaceMismatch);
    }
    if v.is_zero() {
        return Ok(S::zero());
    }
    if v.support_len() > ORACLE_SUPPORT_BUDGET {
        return Err(Error::OracleBudget(format!(
            "support size {} exceeds {}",
            v.support_len(),
            ORACLE_SUPPORT_BUDGET
        )));
    }
    let mut coeffs: Vec<(usize, i64)> = Vec::new();
    let mut mass = 0i64;
    for (idx, c) in v.iter() {
        let int = c.as_int().ok_or_else(|| {
            Error::OracleBudget(format!(
                "non-integer coefficient {} on {}",
                c,
                space.name(idx)
            ))
        })?;
        mass += int.abs();
        coeffs.push((idx, int));
    }
    if mass > ORACLE_MASS_BUDGET {
        return Err(Error::OracleBudget(format!(
            "total mass {mass} exceeds {ORACLE_MASS_BUDGET}"
        )));
    }

    let mut nodes = vec![0usize];
    nodes.extend(coeffs.iter().map(|(idx, _)| *idx));
    let n = nodes.len();
    let mut balance = vec![0i64; n];
    for (slot, (_, c)) in coeffs.iter().enumerate() {
        balance[slot + 1] = *c;
        balance[0] -= *c;
    }

    // All-pairs cheapest relay costs restricted to these nodes.
    let mut closure: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| space.dist(nodes[i], nodes[j])).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = closure[i][k].clone() + closure[k][j].clone();
                if via < closure[i][j] {
                    closure[i][j] = via;
                }
            }
        }
    }

    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    for p in 0..n {
        for _ in 0..balance[p].abs() {
            if balance[p] > 0 {
                sources.push(p);
            } else {
                sinks.push(p);
            }
        }
    }
    debug_assert_eq!(sources.len(), sinks.len());

    let mut best: Option<S> = None;
    let mut order: Vec<usize> = (0..sinks.len()).collect();
    for_each_permutation(&mut order, &mut |perm| {
        let total: S = sources
            .iter()
            .zip(perm.iter())
            .map(|(&s, &t)| closure[s][sinks[t]].clone())
            .sum();
        match &best {
            Some(b) if *b <= total => {}
            _ => best = Some(total),
        }
    });
    Ok(best.unwrap_or_else(S::zero))
}

/// Heap's algorithm; calls `f` on every permutation of `items`.
fn for_each_permutation<F: FnMut(&[usize])>(items: &mut [usize], f: &mut F) {
    fn go<F: FnMut(&[usize])>(k: usize, items: &mut [usize], f: &mut F) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            go(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    go(items.len(), items, f);
}

/// Half the total mass times the smallest pairwise distance among the
/// support points. Needs at least two support points; refused otherwise.
pub fn lower_bound_eq2<S: Scalar>(space: &PointedMetricSpace<S>, v: &FreeVector<S>) -> Result<S> {
    if v.space_token() != space.token() {
        return Err(Error::SpaceMismatch);
    }
    let support = v.support();
    if support.len() < 2 {
        return Err(Error::SupportTooSmall);
    }
    let mut min_dist: Option<S> = None;
    for (i, &p) in support.iter().enumerate() {
        for &q in &support[i + 1..] {
            let d = space.dist(p, q);
            match &min_dist {
                Some(m) if *m <= d => {}
                _ => min_dist = Some(d),
            }
        }
    }
    let half = S::from_ratio(1, 2);
    Ok(half * v.total_mass() * min_dist.unwrap())
}

/// Re-verifies a [`NormResult`] from raw data, independent of solver
/// internals: plan feasibility (nonnegative masses on `support + {*}`
/// with the right divergence), potential feasibility (1-Lipschitz,
/// vanishing at `*`), the weak-duality sandwich, and a gap within
/// tolerance. Failures are reported, never thrown.
pub fn check_certificates<S: Scalar>(
    space: &PointedMetricSpace<S>,
    v: &FreeVector<S>,
    result: &NormResult<S>,
    tol: &S,
) -> Result<ValidationReport> {
    if v.space_token() != space.token() {
        return Err(Error::SpaceMismatch);
    }
    let mut report = ValidationReport::default();
    let zero = S::zero();

    let mut allowed: Vec<usize> = vec![0];
    allowed.extend(v.support());

    let mut out_minus_in: BTreeMap<usize, S> = BTreeMap::new();
    for m in &result.plan.moves {
        if !ge_within(&m.mass, &zero, tol) {
            report.push(
                "nonnegative_mass",
                vec![space.name(m.source).into(), space.name(m.target).into()],
                m.mass.to_f64(),
            );
        }
        for &endpoint in &[m.source, m.target] {
            if endpoint >= space.len() || !allowed.contains(&endpoint) {
                report.push(
                    "support_attainment",
                    vec![if endpoint < space.len() {
                        space.name(endpoint).into()
                    } else {
                        format!("index {endpoint}")
                    }],
                    m.mass.to_f64(),
                );
            }
        }
        let src = out_minus_in.entry(m.source).or_insert_with(S::zero);
        *src = src.clone() + m.mass.clone();
        let dst = out_minus_in.entry(m.target).or_insert_with(S::zero);
        *dst = dst.clone() - m.mass.clone();
    }
    let mut total = S::zero();
    for (idx, c) in v.iter() {
        total = total + c.clone();
        let net = out_minus_in.get(&idx).cloned().unwrap_or_else(S::zero);
        if !within(&net, c, tol) {
            report.push(
                "divergence",
                vec![space.name(idx).into()],
                (net - c.clone()).to_f64().abs(),
            );
        }
    }
    let net_base = out_minus_in.get(&0).cloned().unwrap_or_else(S::zero);
    if !within(&net_base, &-total.clone(), tol) {
        report.push(
            "divergence",
            vec![space.name(0).into()],
            (net_base + total).to_f64().abs(),
        );
    }

    let phi = &result.potential.phi;
    match phi.get(&0) {
        Some(base) if within(base, &zero, tol) => {}
        Some(base) => report.push("potential_basepoint", vec![space.name(0).into()], base.to_f64()),
        None => report.push("potential_basepoint", vec![space.name(0).into()], f64::NAN),
    }
    for (idx, _) in v.iter() {
        if !phi.contains_key(&idx) {
            report.push("potential_domain", vec![space.name(idx).into()], f64::NAN);
        }
    }
    let keys: Vec<usize> = phi.keys().copied().filter(|k| *k < space.len()).collect();
    for (i, &a) in keys.iter().enumerate() {
        for &b in &keys[i + 1..] {
            let diff = (phi[&a].clone() - phi[&b].clone()).abs();
            let d = space.dist(a, b);
            if !le_within(&diff, &d, tol) {
                report.push(
                    "lipschitz",
                    vec![space.name(a).into(), space.name(b).into()],
                    (diff - d).to_f64(),
                );
            }
        }
    }

    let plan_cost = result.plan.cost(space);
    let dual_value = result.potential.value(v);
    if !le_within(&dual_value, &result.value, tol) {
        report.push(
            "weak_duality",
            vec!["dual > value".into()],
            (dual_value.clone() - result.value.clone()).to_f64(),
        );
    }
    if !le_within(&result.value, &plan_cost, tol) {
        report.push(
            "weak_duality",
            vec!["value > plan cost".into()],
            (result.value.clone() - plan_cost.clone()).to_f64(),
        );
    }
    let gap = plan_cost - dual_value;
    if !within(&gap, &result.gap, tol) {
        report.push(
            "gap_consistency",
            vec![],
            (gap.clone() - result.gap.clone()).to_f64().abs(),
        );
    }
    if !le_within(&gap.abs(), tol, tol) {
        report.push("gap", vec![], gap.to_f64());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{adjoin_basepoint, RawMetric};
    use crate::scalar::Rational;
    use crate::vector::parse_vector;
    use num::traits::{One, Zero};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn two_point_space(d_ab: Rational) -> PointedMetricSpace<Rational> {
        let raw = RawMetric::new(
            vec!["a".into(), "b".into()],
            vec![
                vec![Rational::zero(), d_ab.clone()],
                vec![d_ab, Rational::zero()],
            ],
        )
        .unwrap();
        adjoin_basepoint(&raw, &Rational::zero()).unwrap()
    }

    #[test]
    fn single_point_ships_to_basepoint() {
        let s = two_point_space(q(3, 10));
        let v = FreeVector::point(&s, "a").unwrap();
        let (value, plan) = norm_primal(&s, &v).unwrap();
        assert_eq!(value, Rational::one());
        assert_eq!(plan.moves.len(), 1);
        assert_eq!(plan.moves[0].target, 0);

        let (dual, potential) = norm_dual(&s, &v).unwrap();
        assert_eq!(dual, Rational::one());
        assert_eq!(potential.phi[&1], Rational::one());
    }

    #[test]
    fn difference_recovers_distance() {
        let s = two_point_space(q(3, 10));
        let (v, _) = parse_vector(&s, "1*a - 1*b").unwrap();
        let (value, _) = norm_primal(&s, &v).unwrap();
        assert_eq!(value, q(3, 10));
    }

    #[test]
    fn homogeneity_on_scaled_difference() {
        let s = two_point_space(q(3, 10));
        let (v, _) = parse_vector(&s, "2*a - 2*b").unwrap();
        let (value, _) = norm_primal(&s, &v).unwrap();
        let oracle = norm_bruteforce(&s, &v).unwrap();
        assert_eq!(value, q(6, 10));
        assert_eq!(value, oracle);
    }

    #[test]
    fn far_pair_ships_both_units_out() {
        let s = two_point_space(Rational::one());
        let (v, _) = parse_vector(&s, "1*a + 1*b").unwrap();
        let (value, potential) = norm_dual(&s, &v).unwrap();
        assert_eq!(value, Rational::from_int(2));
        assert_eq!(potential.phi[&1], Rational::one());
        assert_eq!(potential.phi[&2], Rational::one());
    }

    #[test]
    fn zero_vector_is_free() {
        let s = two_point_space(q(1, 2));
        let v = FreeVector::zero(&s);
        let (value, plan) = norm_primal(&s, &v).unwrap();
        assert!(value.is_zero());
        assert!(plan.moves.is_empty());
        assert_eq!(norm_bruteforce(&s, &v).unwrap(), Rational::zero());
        let (dual, _) = norm_dual(&s, &v).unwrap();
        assert!(dual.is_zero());
    }

    #[test]
    fn oracle_agrees_on_direct_route() {
        let s = two_point_space(q(3, 10));
        let (v, _) = parse_vector(&s, "1*a - 1*b").unwrap();
        assert_eq!(norm_bruteforce(&s, &v).unwrap(), q(3, 10));
        let single = FreeVector::point(&s, "a").unwrap();
        assert_eq!(norm_bruteforce(&s, &single).unwrap(), Rational::one());
    }

    #[test]
    fn oracle_refuses_over_budget() {
        let s = two_point_space(q(1, 2));
        let (v, _) = parse_vector(&s, "7*a").unwrap();
        assert!(matches!(
            norm_bruteforce(&s, &v),
            Err(Error::OracleBudget(_))
        ));
        let (w, _) = parse_vector(&s, "1/2*a").unwrap();
        assert!(matches!(
            norm_bruteforce(&s, &w),
            Err(Error::OracleBudget(_))
        ));
    }

    #[test]
    fn lower_bound_instances() {
        let s = two_point_space(q(1, 2));
        let (sum, _) = parse_vector(&s, "1*a + 1*b").unwrap();
        assert_eq!(lower_bound_eq2(&s, &sum).unwrap(), q(1, 2));

        let (diff, _) = parse_vector(&s, "1*a - 1*b").unwrap();
        assert_eq!(lower_bound_eq2(&s, &diff).unwrap(), q(1, 2));
        let (value, _) = norm_primal(&s, &diff).unwrap();
        assert_eq!(value, q(1, 2));

        let t = two_point_space(q(2, 10));
        let (v, _) = parse_vector(&t, "3*a + 3*b").unwrap();
        assert_eq!(lower_bound_eq2(&t, &v).unwrap(), q(6, 10));

        let single = FreeVector::point(&s, "a").unwrap();
        assert!(matches!(
            lower_bound_eq2(&s, &single),
            Err(Error::SupportTooSmall)
        ));
    }

    #[test]
    fn certificates_pass_and_perturbations_fail() {
        let s = two_point_space(q(3, 10));
        let (v, _) = parse_vector(&s, "2*a - 1*b").unwrap();
        let result = norm(&s, &v).unwrap();
        let tol = Rational::zero();
        assert!(check_certificates(&s, &v, &result, &tol).unwrap().ok());

        let mut broken = result.clone();
        broken.plan.moves[0].mass = broken.plan.moves[0].mass.clone() + q(1, 7);
        let report = check_certificates(&s, &v, &broken, &tol).unwrap();
        assert!(report.violations.iter().any(|x| x.axiom == "divergence"));

        let mut infeasible = result.clone();
        infeasible
            .potential
            .phi
            .insert(1, q(3, 2));
        let report = check_certificates(&s, &v, &infeasible, &tol).unwrap();
        assert!(report.violations.iter().any(|x| x.axiom == "lipschitz"));
    }

    #[test]
    fn duality_holds_exactly() {
        let raw = RawMetric::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec![q(0, 1), q(2, 10), q(5, 10)],
                vec![q(2, 10), q(0, 1), q(4, 10)],
                vec![q(5, 10), q(4, 10), q(0, 1)],
            ],
        )
        .unwrap();
        let s = adjoin_basepoint(&raw, &Rational::zero()).unwrap();
        for text in ["1*a - 1*c", "2*a - 1*b - 1*c", "1*a + 1*b + 1*c", "3*a - 2*b"] {
            let (v, _) = parse_vector(&s, text).unwrap();
            let (p, _) = norm_primal(&s, &v).unwrap();
            let (d, _) = norm_dual(&s, &v).unwrap();
            let oracle = norm_bruteforce(&s, &v).unwrap();
            assert_eq!(p, d, "duality gap on {text}");
            assert_eq!(p, oracle, "oracle mismatch on {text}");
        }
    }
}
