//! The `fbr` command-line driver.
//!
//! Subcommands: `validate`, `norm`, `label`, `paths`, `reduce`,
//! `verify`, `gen`. Every input-taking command reads a JSON instance
//! (see [`crate::instance`]), runs its checks, and emits a
//! [`RunReport`] as text or JSON. Exit status: 0 when every suite
//! passed, 1 when some check failed (the report carries witnesses), 2
//! for usage or input errors. `--exact` switches to the rational
//! backend with zero tolerance; `FBR_SEED` overrides `--seed`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forest::{assert_forest, compose, path_label, separation, Forest};
use crate::generate::{random_forest, random_integer_vector, random_rational_vector};
use crate::instance::{
    graph_to_instance, instance_digest, instance_to_graph, parse_instance_file,
    to_canonical_json, InstanceFile,
};
use crate::labeling::{stretch_labeling, LabeledGraph, StretchedLabeling};
use crate::metric::{
    adjoin_basepoint, validate_space, PointedMetricSpace, RawMetric, BASEPOINT,
};
use crate::norm::{check_certificates, lower_bound_eq2, norm, norm_bruteforce};
use crate::reduction::{reduce_all, reduce_point, verify_reduction_table};
use crate::report::{
    LabelingSection, MoveOut, NormSection, PathQueryOut, PotentialOut,
    ReductionEntryOut, ReductionSection, RunReport, SuiteOutcome,
};
use crate::scalar::{ge_within, within, Rational, Scalar};
use crate::vector::{parse_vector, FreeVector};

#[derive(Parser, Debug)]
#[command(
    name = "fbr",
    version,
    about = "Transport norms, stretched edge labelings, and orbit reductions on finite instances"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check instance structure and the label-metric axioms
    Validate(InputArgs),
    /// Transport norm of a vector over the instance's base label metric
    Norm(NormArgs),
    /// Construct the stretched labeling and verify its constant
    Label(InputArgs),
    /// Path-label queries and algebra spot-checks on a forest
    Paths(PathsArgs),
    /// Emit the reduction image of one vertex
    Reduce(ReduceArgs),
    /// Full verification suite for an instance
    Verify(InputArgs),
    /// Write a seeded random forest instance
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exact rational backend (comparisons at tolerance 0)
    #[arg(long)]
    pub exact: bool,
    /// Seed for randomized checks; the FBR_SEED env var overrides it
    #[arg(long)]
    pub seed: Option<u64>,
    /// Absolute comparison tolerance in float mode
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Instance file (JSON)
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct NormArgs {
    /// Instance file (JSON)
    #[arg(long)]
    pub input: PathBuf,
    /// Vector over the labels, e.g. "1*a - 1*b" or "3/2*a"
    #[arg(long)]
    pub vector: String,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct PathsArgs {
    /// Instance file (JSON)
    #[arg(long)]
    pub input: PathBuf,
    /// Query: start vertex (needs --to)
    #[arg(long, requires = "to")]
    pub from: Option<String>,
    /// Query: end vertex (needs --from)
    #[arg(long, requires = "from")]
    pub to: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    /// Instance file (JSON)
    #[arg(long)]
    pub input: PathBuf,
    /// Vertex whose image to emit (default: the first vertex)
    #[arg(long)]
    pub root: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Number of vertices
    #[arg(long, default_value_t = 24)]
    pub size: usize,
    /// Maximum vertex degree
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    /// Write the instance here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Parses `argv` and runs the command, writing report or instance to
/// `out`. Returns the process exit code: 0 all checks passed, 1 some
/// check failed, 2 usage or input error.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 { 0 } else { 2 };
        }
    };
    match execute(cli, out) {
        Ok(all_ok) => i32::from(!all_ok),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

macro_rules! dispatch {
    ($args:expr, $out:expr, $command:ident) => {
        if $args.common.exact {
            $command::<Rational>($args, $out)
        } else {
            $command::<f64>($args, $out)
        }
    };
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Validate(a) => dispatch!(a, out, validate_command),
        Command::Norm(a) => dispatch!(a, out, norm_command),
        Command::Label(a) => dispatch!(a, out, label_command),
        Command::Paths(a) => dispatch!(a, out, paths_command),
        Command::Reduce(a) => dispatch!(a, out, reduce_command),
        Command::Verify(a) => dispatch!(a, out, verify_command),
        Command::Gen(a) => gen_command(a, out),
    }
}

fn backend_tolerance<S: Scalar>(common: &CommonArgs) -> S {
    if S::EXACT {
        S::zero()
    } else {
        S::from_f64(common.tolerance).unwrap_or_else(S::default_tolerance)
    }
}

fn resolve_seed(flag: Option<u64>, instance: Option<u64>) -> Result<u64> {
    if let Ok(text) = std::env::var("FBR_SEED") {
        return text
            .parse()
            .map_err(|_| Error::Parse(format!("FBR_SEED is not a u64: {text:?}")));
    }
    Ok(flag.or(instance).unwrap_or(0))
}

fn finish(
    mut report: RunReport,
    format: Format,
    started: Instant,
    out: &mut dyn Write,
) -> Result<bool> {
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    match format {
        Format::Json => out.write_all(report.to_json().as_bytes())?,
        Format::Text => out.write_all(report.to_string().as_bytes())?,
    }
    Ok(report.all_ok())
}

struct Loaded {
    bytes: Vec<u8>,
    file: InstanceFile,
}

fn load(input: &PathBuf) -> Result<Loaded> {
    let bytes = fs::read(input)?;
    let file = parse_instance_file(&bytes)?;
    Ok(Loaded { bytes, file })
}

/// The instance's base label metric with the basepoint adjoined: the
/// playground space for direct norm queries.
fn base_space<S: Scalar>(graph: &LabeledGraph<S>, tol: &S) -> Result<PointedMetricSpace<S>> {
    let raw = RawMetric::new(graph.labels().to_vec(), graph.base_metric_matrix())?;
    adjoin_basepoint(&raw, tol)
}

fn validate_command<S: Scalar>(args: &InputArgs, out: &mut dyn Write) -> Result<bool> {
    let started = Instant::now();
    let loaded = load(&args.input)?;
    let tol = backend_tolerance::<S>(&args.common);
    let mut report = RunReport::new("validate");
    report.instance_digest = Some(instance_digest(&loaded.bytes));
    match instance_to_graph::<S>(&loaded.file) {
        Ok(graph) => {
            report.suites.push(SuiteOutcome::pass("structure"));
            match base_space(&graph, &tol) {
                Ok(space) => report.suites.push(SuiteOutcome::from_report(
                    "label_metric",
                    &validate_space(&space, &tol),
                )),
                Err(Error::InvalidMetric(r)) => {
                    report
                        .suites
                        .push(SuiteOutcome::from_report("label_metric", &r));
                }
                Err(e) => return Err(e),
            }
        }
        Err(Error::InvalidMetric(r)) => {
            report.suites.push(SuiteOutcome::pass("structure"));
            report
                .suites
                .push(SuiteOutcome::from_report("label_metric", &r));
        }
        Err(e) => {
            report
                .suites
                .push(SuiteOutcome::fail("structure", vec![e.to_string()]));
        }
    }
    finish(report, args.common.format, started, out)
}

fn norm_command<S: Scalar>(args: &NormArgs, out: &mut dyn Write) -> Result<bool> {
    let started = Instant::now();
    let loaded = load(&args.input)?;
    let tol = backend_tolerance::<S>(&args.common);
    let graph = instance_to_graph::<S>(&loaded.file)?;
    let space = base_space(&graph, &tol)?;
    let (v, dropped) = parse_vector(&space, &args.vector)?;

    let mut report = RunReport::new("norm");
    report.instance_digest = Some(instance_digest(&loaded.bytes));
    if dropped {
        report.suites.push(SuiteOutcome::pass_with_note(
            "input",
            format!("coefficient on {BASEPOINT} dropped (the norm ignores the basepoint)"),
        ));
    }

    let result = norm(&space, &v)?;
    report.suites.push(SuiteOutcome::from_report(
        "certificates",
        &check_certificates(&space, &v, &result, &tol)?,
    ));
    match norm_bruteforce(&space, &v) {
        Ok(oracle) => {
            let ok = within(&oracle, &result.value, &tol);
            report.suites.push(if ok {
                SuiteOutcome::pass("oracle")
            } else {
                SuiteOutcome::fail(
                    "oracle",
                    vec![format!(
                        "solver {} vs oracle {}",
                        result.value.to_f64(),
                        oracle.to_f64()
                    )],
                )
            });
        }
        Err(Error::OracleBudget(_)) => {}
        Err(e) => return Err(e),
    }

    report.metrics.duality_gap = Some(result.gap.to_f64());
    let exact = |s: &S| S::EXACT.then(|| s.to_string());
    report.norm = Some(NormSection {
        vector: v.display(&space),
        value: result.value.to_f64(),
        value_exact: exact(&result.value),
        gap: result.gap.to_f64(),
        plan: result
            .plan
            .moves
            .iter()
            .map(|m| MoveOut {
                source: space.name(m.source).into(),
                target: space.name(m.target).into(),
                mass: m.mass.to_f64(),
                mass_exact: exact(&m.mass),
            })
            .collect(),
        potential: result
            .potential
            .phi
            .iter()
            .map(|(p, value)| PotentialOut {
                point: space.name(*p).into(),
                value: value.to_f64(),
                value_exact: exact(value),
            })
            .collect(),
    });
    finish(report, args.common.format, started, out)
}

fn labeling_section<S: Scalar>(labeling: &StretchedLabeling<S>) -> LabelingSection {
    let labels = labeling.graph.labels().to_vec();
    let m = labels.len();
    LabelingSection {
        labels,
        depth: labeling.colorings.depth(),
        colorings: labeling.colorings.colors.clone(),
        label_metric: (0..m)
            .map(|i| (0..m).map(|j| labeling.label_distance(i, j).to_f64()).collect())
            .collect(),
        epsilon: labeling.epsilon.to_f64(),
    }
}

fn stretch_suites<S: Scalar>(
    labeling: &StretchedLabeling<S>,
    tol: &S,
) -> Vec<SuiteOutcome> {
    let floor = S::from_ratio(1, 4);
    let mut suites = Vec::new();
    suites.push(if ge_within(&labeling.epsilon, &floor, tol) {
        SuiteOutcome::pass("stretch_constant")
    } else {
        SuiteOutcome::fail(
            "stretch_constant",
            vec![format!("epsilon {} below 1/4", labeling.epsilon.to_f64())],
        )
    });
    suites.push(SuiteOutcome::from_report(
        "label_space",
        &validate_space(&labeling.label_space, tol),
    ));
    suites
}

fn label_command<S: Scalar>(args: &InputArgs, out: &mut dyn Write) -> Result<bool> {
    let started = Instant::now();
    let loaded = load(&args.input)?;
    let tol = backend_tolerance::<S>(&args.common);
    let graph = instance_to_graph::<S>(&loaded.file)?;
    let labeling = stretch_labeling(&graph)?;

    let mut report = RunReport::new("label");
    report.instance_digest = Some(instance_digest(&loaded.bytes));
    report.suites.extend(stretch_suites(&labeling, &tol));
    report.metrics.epsilon = Some(labeling.epsilon.to_f64());
    report.labeling = Some(labeling_section(&labeling));
    finish(report, args.common.format, started, out)
}

/// Exhaustive when small, seeded sampling when large: anti-symmetry of
/// path labels over same-component pairs and the telescoping identity
/// over same-component triples.
fn path_algebra_suites(forest: &Forest, seed: u64) -> Result<Vec<SuiteOutcome>> {
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; forest.vertex_count()];
    for v in 0..forest.vertex_count() {
        if !seen[v] {
            let comp = forest.component_vertices(v);
            for &u in &comp {
                seen[u] = true;
            }
            components.push(comp);
        }
    }

    let mut anti_fail = Vec::new();
    let mut cocycle_fail = Vec::new();
    let pair_budget: usize = components.iter().map(|c| c.len() * c.len()).sum();
    let triple_budget: usize = components
        .iter()
        .map(|c| c.len() * c.len() * c.len())
        .sum();

    let mut check_pair = |forest: &Forest, x: usize, y: usize| -> Result<()> {
        let p = path_label(forest, x, y)?;
        let q = path_label(forest, y, x)?;
        if p.vector != q.vector.neg() {
            anti_fail.push(format!(
                "p({},{}) != -p({},{})",
                forest.vertex_name(x),
                forest.vertex_name(y),
                forest.vertex_name(y),
                forest.vertex_name(x)
            ));
        }
        Ok(())
    };
    let mut check_triple = |forest: &Forest, x: usize, y: usize, z: usize| -> Result<()> {
        let xy = path_label(forest, x, y)?;
        let yz = path_label(forest, y, z)?;
        let xz = path_label(forest, x, z)?;
        if compose(&xy, &yz)? != xz {
            cocycle_fail.push(format!(
                "p({x_n},{y_n}) + p({y_n},{z_n}) != p({x_n},{z_n})",
                x_n = forest.vertex_name(x),
                y_n = forest.vertex_name(y),
                z_n = forest.vertex_name(z),
            ));
        }
        Ok(())
    };

    if pair_budget <= 20_000 {
        for comp in &components {
            for &x in comp {
                for &y in comp {
                    check_pair(forest, x, y)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        for _ in 0..500 {
            let comp = pick_weighted(&components, &mut rng);
            let x = comp[rand::Rng::random_range(&mut rng, 0..comp.len())];
            let y = comp[rand::Rng::random_range(&mut rng, 0..comp.len())];
            check_pair(forest, x, y)?;
        }
    }
    if triple_budget <= 64_000 {
        for comp in &components {
            for &x in comp {
                for &y in comp {
                    for &z in comp {
                        check_triple(forest, x, y, z)?;
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
        for _ in 0..500 {
            let comp = pick_weighted(&components, &mut rng);
            let x = comp[rand::Rng::random_range(&mut rng, 0..comp.len())];
            let y = comp[rand::Rng::random_range(&mut rng, 0..comp.len())];
            let z = comp[rand::Rng::random_range(&mut rng, 0..comp.len())];
            check_triple(forest, x, y, z)?;
        }
    }

    let anti = if anti_fail.is_empty() {
        SuiteOutcome::pass("antisymmetry")
    } else {
        SuiteOutcome::fail("antisymmetry", anti_fail)
    };
    let cocycle = if cocycle_fail.is_empty() {
        SuiteOutcome::pass("cocycle")
    } else {
        SuiteOutcome::fail("cocycle", cocycle_fail)
    };
    Ok(vec![anti, cocycle])
}

fn pick_weighted<'a>(components: &'a [Vec<usize>], rng: &mut ChaCha8Rng) -> &'a Vec<usize> {
    let total: usize = components.iter().map(|c| c.len()).sum();
    let mut at = rand::Rng::random_range(rng, 0..total);
    for c in components {
        if at < c.len() {
            return c;
        }
        at -= c.len();
    }
    components.last().expect("nonempty component list")
}

fn paths_command<S: Scalar>(args: &PathsArgs, out: &mut dyn Write) -> Result<bool> {
    let started = Instant::now();
    let loaded = load(&args.input)?;
    let graph = instance_to_graph::<S>(&loaded.file)?;
    let seed = resolve_seed(args.common.seed, loaded.file.seed)?;

    let mut report = RunReport::new("paths");
    report.instance_digest = Some(instance_digest(&loaded.bytes));
    report.seed = Some(seed);

    let forest = match assert_forest(&graph) {
        Ok(f) => f,
        Err(Error::Cycle(witness)) => {
            report.suites.push(SuiteOutcome::fail(
                "forest",
                vec![format!("cycle: {}", witness.join(" - "))],
            ));
            return finish(report, args.common.format, started, out);
        }
        Err(e) => return Err(e),
    };
    report.suites.push(SuiteOutcome::pass("forest"));

    if let (Some(from), Some(to)) = (&args.from, &args.to) {
        let x = forest.vertex_index(from)?;
        let y = forest.vertex_index(to)?;
        match path_label(&forest, x, y) {
            Ok(p) => {
                report.suites.push(SuiteOutcome::pass("path_query"));
                report.paths = Some(vec![PathQueryOut {
                    start: from.clone(),
                    end: to.clone(),
                    vector: p.vector.display(forest.labels()),
                }]);
            }
            Err(Error::DifferentComponents(a, b)) => {
                report.suites.push(SuiteOutcome::fail(
                    "path_query",
                    vec![format!("{a} and {b} lie in different components")],
                ));
            }
            Err(e) => return Err(e),
        }
    } else {
        report.suites.extend(path_algebra_suites(&forest, seed)?);
    }
    finish(report, args.common.format, started, out)
}

fn reduce_command<S: Scalar>(args: &ReduceArgs, out: &mut dyn Write) -> Result<bool> {
    let started = Instant::now();
    let loaded = load(&args.input)?;
    let graph = instance_to_graph::<S>(&loaded.file)?;
    if graph.vertex_count() == 0 {
        return Err(Error::InvalidInstance("instance has no vertices".into()));
    }

    let mut report = RunReport::new("reduce");
    report.instance_digest = Some(instance_digest(&loaded.bytes));

    let forest = match assert_forest(&graph) {
        Ok(f) => f,
        Err(Error::Cycle(witness)) => {
            report.suites.push(SuiteOutcome::fail(
                "forest",
                vec![format!("cycle: {}", witness.join(" - "))],
            ));
            return finish(report, args.common.format, started, out);
        }
        Err(e) => return Err(e),
    };
    report.suites.push(SuiteOutcome::pass("forest"));

    let root = match &args.root {
        Some(name) => forest.vertex_index(name)?,
        None => 0,
    };
    let point = reduce_point(&forest, root)?;

    let component = forest.component_vertices(root);
    let keys: Vec<usize> = point.entries().keys().copied().collect();
    let zero_at_base = point.entries()[&root].is_zero();
    report.suites.push(if keys == component && zero_at_base {
        SuiteOutcome::pass("image_invariants")
    } else {
        SuiteOutcome::fail(
            "image_invariants",
            vec!["image must list exactly the component, zero at the base".into()],
        )
    });

    report.reduction = Some(ReductionSection {
        base: forest.vertex_name(root).into(),
        entries: point
            .entries()
            .iter()
            .map(|(y, vec)| ReductionEntryOut {
                vertex: forest.vertex_name(*y).into(),
                vector: vec.display(forest.labels()),
            })
            .collect(),
    });
    finish(report, args.common.format, started, out)
}

fn verify_command<S: Scalar>(args: &InputArgs, out: &mut dyn Write) -> Result<bool> {
    let started = Instant::now();
    let loaded = load(&args.input)?;
    let tol = backend_tolerance::<S>(&args.common);
    let seed = resolve_seed(args.common.seed, loaded.file.seed)?;

    let mut report = RunReport::new("verify");
    report.instance_digest = Some(instance_digest(&loaded.bytes));
    report.seed = Some(seed);

    let graph = match instance_to_graph::<S>(&loaded.file) {
        Ok(g) => {
            report.suites.push(SuiteOutcome::pass("structure"));
            g
        }
        Err(Error::InvalidMetric(r)) => {
            report.suites.push(SuiteOutcome::pass("structure"));
            report
                .suites
                .push(SuiteOutcome::from_report("label_metric", &r));
            return finish(report, args.common.format, started, out);
        }
        Err(e) => return Err(e),
    };

    let labeling = stretch_labeling(&graph)?;
    report.suites.extend(stretch_suites(&labeling, &tol));
    report.metrics.epsilon = Some(labeling.epsilon.to_f64());
    report
        .suites
        .extend(norm_suites(&labeling.label_space, &tol, seed)?);

    let forest = match assert_forest(&graph) {
        Ok(f) => f,
        Err(Error::Cycle(witness)) => {
            report.suites.push(SuiteOutcome::fail(
                "forest",
                vec![format!("cycle: {}", witness.join(" - "))],
            ));
            return finish(report, args.common.format, started, out);
        }
        Err(e) => return Err(e),
    };
    report.suites.push(SuiteOutcome::pass("forest"));
    report.suites.extend(path_algebra_suites(&forest, seed)?);

    // Uniform discreteness from every root, against epsilon / 2.
    let floor = labeling.epsilon.clone() / S::from_int(2);
    let mut worst: Option<S> = None;
    let mut sep_fail = Vec::new();
    for x in 0..forest.vertex_count() {
        if let Some(s) = separation(&forest, &labeling, x)? {
            if !ge_within(&s, &floor, &tol) {
                sep_fail.push(format!(
                    "root {}: separation {}",
                    forest.vertex_name(x),
                    s.to_f64()
                ));
            }
            worst = match worst {
                Some(w) if w <= s => Some(w),
                _ => Some(s),
            };
        }
    }
    report.metrics.separation = worst.as_ref().map(|s| s.to_f64());
    report.suites.push(if sep_fail.is_empty() {
        SuiteOutcome::pass("separation")
    } else {
        SuiteOutcome::fail("separation", sep_fail)
    });

    report.suites.push(SuiteOutcome::from_report(
        "reduction",
        &verify_reduction_table(&forest, &reduce_all(&forest)?)?,
    ));
    finish(report, args.common.format, started, out)
}

/// Randomized norm checks over a space: duality gap within tolerance
/// with certificates intact, agreement with the exhaustive oracle, the
/// mass-times-spread lower bound, and the norm axioms.
fn norm_suites<S: Scalar>(
    space: &PointedMetricSpace<S>,
    tol: &S,
    seed: u64,
) -> Result<Vec<SuiteOutcome>> {
    let mut suites = Vec::new();
    if space.len() <= 1 {
        suites.push(SuiteOutcome::pass_with_note(
            "duality",
            "vacuous: no labels".into(),
        ));
        return Ok(suites);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let note = |i: usize, detail: String| format!("seed {seed}, item {i}: {detail}");

    let mut duality_fail = Vec::new();
    for i in 0..40 {
        let v = random_rational_vector(space, 4, 6, 4, &mut rng);
        let r = norm(space, &v)?;
        if r.gap.abs() > *tol {
            duality_fail.push(note(i, format!("gap {:e} on {}", r.gap.to_f64(), v.display(space))));
        }
        let certs = check_certificates(space, &v, &r, tol)?;
        if !certs.ok() {
            duality_fail.push(note(i, format!("certificates: {certs}")));
        }
    }
    suites.push(if duality_fail.is_empty() {
        SuiteOutcome::pass("duality")
    } else {
        SuiteOutcome::fail("duality", duality_fail)
    });

    let mut oracle_fail = Vec::new();
    for i in 0..30 {
        let v = random_integer_vector(space, 3, 2, &mut rng);
        let fast = norm(space, &v)?.value;
        let slow = norm_bruteforce(space, &v)?;
        if !within(&fast, &slow, tol) {
            oracle_fail.push(note(
                i,
                format!("solver {} vs oracle {} on {}", fast.to_f64(), slow.to_f64(), v.display(space)),
            ));
        }
    }
    suites.push(if oracle_fail.is_empty() {
        SuiteOutcome::pass("oracle")
    } else {
        SuiteOutcome::fail("oracle", oracle_fail)
    });

    if space.len() > 2 {
        let mut eq2_fail = Vec::new();
        let mut checked = 0;
        let mut i = 0;
        while checked < 40 && i < 400 {
            i += 1;
            let v = random_integer_vector(space, 4, 2, &mut rng);
            if v.support_len() < 2 {
                continue;
            }
            checked += 1;
            let bound = lower_bound_eq2(space, &v)?;
            let value = norm(space, &v)?.value;
            if !ge_within(&value, &bound, tol) {
                eq2_fail.push(note(
                    i,
                    format!("norm {} below bound {} on {}", value.to_f64(), bound.to_f64(), v.display(space)),
                ));
            }
        }
        suites.push(if eq2_fail.is_empty() {
            SuiteOutcome::pass("lower_bound")
        } else {
            SuiteOutcome::fail("lower_bound", eq2_fail)
        });
    } else {
        suites.push(SuiteOutcome::pass_with_note(
            "lower_bound",
            "vacuous: needs two labels".into(),
        ));
    }

    let mut axiom_fail = Vec::new();
    let zero_norm = norm(space, &FreeVector::zero(space))?.value;
    if !within(&zero_norm, &S::zero(), tol) {
        axiom_fail.push(format!("zero vector has norm {}", zero_norm.to_f64()));
    }
    for i in 0..40 {
        let u = random_rational_vector(space, 3, 4, 3, &mut rng);
        let v = random_rational_vector(space, 3, 4, 3, &mut rng);
        let nu = norm(space, &u)?.value;
        let nv = norm(space, &v)?.value;
        if !u.is_zero() && nu <= S::zero() {
            axiom_fail.push(note(i, format!("positivity fails on {}", u.display(space))));
        }
        let c = S::from_ratio(-3, 2);
        let scaled = norm(space, &u.scale(&c))?.value;
        if !within(&scaled, &(c.abs() * nu.clone()), tol) {
            axiom_fail.push(note(i, format!("homogeneity fails on {}", u.display(space))));
        }
        let sum_norm = norm(space, &u.add(&v)?)?.value;
        if !le_within_sum(&sum_norm, &nu, &nv, tol) {
            axiom_fail.push(note(
                i,
                format!(
                    "triangle fails: |u+v| = {} vs {} + {}",
                    sum_norm.to_f64(),
                    nu.to_f64(),
                    nv.to_f64()
                ),
            ));
        }
    }
    suites.push(if axiom_fail.is_empty() {
        SuiteOutcome::pass("norm_axioms")
    } else {
        SuiteOutcome::fail("norm_axioms", axiom_fail)
    });

    Ok(suites)
}

fn le_within_sum<S: Scalar>(a: &S, b1: &S, b2: &S, tol: &S) -> bool {
    a.clone() <= b1.clone() + b2.clone() + tol.clone()
}

fn gen_command(args: &GenArgs, out: &mut dyn Write) -> Result<bool> {
    let seed = resolve_seed(args.common.seed, None)?;
    let graph: LabeledGraph<f64> = random_forest(args.size, args.max_degree, seed);
    let mut file = graph_to_instance(&graph);
    file.seed = Some(seed);
    file.size = Some(args.size);
    file.max_degree = Some(args.max_degree);
    let json = to_canonical_json(&file);
    match &args.output {
        Some(path) => fs::write(path, json)?,
        None => out.write_all(json.as_bytes())?,
    }
    Ok(true)
}
