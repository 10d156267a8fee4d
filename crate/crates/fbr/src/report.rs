//! Machine-readable run reports.
//!
//! Every CLI invocation emits one [`RunReport`]: the command, a digest
//! of the exact input bytes, the seed in effect, one outcome per check
//! suite (failures always carry witnesses), headline metrics, and any
//! command-specific payload. JSON output is stable field-for-field, so
//! two runs with the same command, input, and seed differ only in
//! `elapsed_ms`.

use std::fmt;

use serde::Serialize;

use crate::metric::ValidationReport;

const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub ok: bool,
    pub witnesses: Vec<String>,
}

impl SuiteOutcome {
    pub fn pass(name: &str) -> Self {
        SuiteOutcome {
            name: name.into(),
            ok: true,
            witnesses: Vec::new(),
        }
    }

    pub fn pass_with_note(name: &str, note: String) -> Self {
        SuiteOutcome {
            name: name.into(),
            ok: true,
            witnesses: vec![note],
        }
    }

    pub fn fail(name: &str, witnesses: Vec<String>) -> Self {
        let mut w = witnesses;
        if w.len() > MAX_WITNESSES {
            let extra = w.len() - MAX_WITNESSES;
            w.truncate(MAX_WITNESSES);
            w.push(format!("... and {extra} more"));
        }
        SuiteOutcome {
            name: name.into(),
            ok: false,
            witnesses: w,
        }
    }

    /// Collapses a validation report into a suite outcome.
    pub fn from_report(name: &str, report: &ValidationReport) -> Self {
        if report.ok() {
            return Self::pass(name);
        }
        let witnesses = report
            .violations
            .iter()
            .map(|v| {
                format!(
                    "{} ({}) magnitude {:.3e}",
                    v.axiom,
                    v.witness.join(", "),
                    v.magnitude
                )
            })
            .collect();
        Self::fail(name, witnesses)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Metrics {
    pub epsilon: Option<f64>,
    pub separation: Option<f64>,
    pub duality_gap: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormSection {
    pub vector: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_exact: Option<String>,
    pub gap: f64,
    pub plan: Vec<MoveOut>,
    pub potential: Vec<PotentialOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoveOut {
    pub source: String,
    pub target: String,
    pub mass: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_exact: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PotentialOut {
    pub point: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_exact: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelingSection {
    pub labels: Vec<String>,
    pub depth: usize,
    pub colorings: Vec<Vec<u32>>,
    pub label_metric: Vec<Vec<f64>>,
    pub epsilon: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PathQueryOut {
    pub start: String,
    pub end: String,
    pub vector: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSection {
    pub base: String,
    pub entries: Vec<ReductionEntryOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionEntryOut {
    pub vertex: String,
    pub vector: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub suites: Vec<SuiteOutcome>,
    pub metrics: Metrics,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm: Option<NormSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<LabelingSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<PathQueryOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionSection>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            instance_digest: None,
            seed: None,
            suites: Vec::new(),
            metrics: Metrics::default(),
            norm: None,
            labeling: None,
            paths: None,
            reduction: None,
            elapsed_ms: 0,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.suites.iter().all(|s| s.ok)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        if let Some(d) = &self.instance_digest {
            writeln!(f, "instance: {d}")?;
        }
        if let Some(s) = self.seed {
            writeln!(f, "seed: {s}")?;
        }
        for suite in &self.suites {
            let mark = if suite.ok { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}", suite.name)?;
            for w in &suite.witnesses {
                writeln!(f, "     - {w}")?;
            }
        }
        if let Some(e) = self.metrics.epsilon {
            writeln!(f, "epsilon: {e}")?;
        }
        if let Some(s) = self.metrics.separation {
            writeln!(f, "separation: {s}")?;
        }
        if let Some(g) = self.metrics.duality_gap {
            writeln!(f, "duality_gap: {g:e}")?;
        }
        if let Some(n) = &self.norm {
            match &n.value_exact {
                Some(exact) => writeln!(f, "norm {} = {} ({})", n.vector, exact, n.value)?,
                None => writeln!(f, "norm {} = {}", n.vector, n.value)?,
            }
            for m in &n.plan {
                writeln!(f, "  move {} -> {}: {}", m.source, m.target, m.mass)?;
            }
            for p in &n.potential {
                writeln!(f, "  phi({}) = {}", p.point, p.value)?;
            }
        }
        if let Some(l) = &self.labeling {
            writeln!(
                f,
                "labeling: {} labels, depth {}, epsilon {}",
                l.labels.len(),
                l.depth,
                l.epsilon
            )?;
        }
        if let Some(paths) = &self.paths {
            for p in paths {
                writeln!(f, "path {} -> {}: {}", p.start, p.end, p.vector)?;
            }
        }
        if let Some(r) = &self.reduction {
            writeln!(f, "reduction point at {}:", r.base)?;
            for e in &r.entries {
                writeln!(f, "  ({}, {})", e.vector, e.vertex)?;
            }
        }
        writeln!(f, "elapsed_ms: {}", self.elapsed_ms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_capped() {
        let long: Vec<String> = (0..20).map(|i| format!("w{i}")).collect();
        let s = SuiteOutcome::fail("big", long);
        assert_eq!(s.witnesses.len(), MAX_WITNESSES + 1);
        assert!(s.witnesses.last().unwrap().contains("12 more"));
    }

    #[test]
    fn json_shape_is_stable() {
        let mut r = RunReport::new("verify");
        r.suites.push(SuiteOutcome::pass("duality"));
        r.metrics.epsilon = Some(1.0);
        let json = r.to_json();
        assert!(json.contains("\"command\": \"verify\""));
        assert!(json.contains("\"suites\""));
        assert!(json.contains("\"elapsed_ms\""));
        assert!(!json.contains("\"norm\""), "empty sections stay absent");
    }
}
