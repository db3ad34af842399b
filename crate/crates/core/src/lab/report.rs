use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::digraph::{Digraph, Hom};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    /// The claim's hypothesis does not hold for this instance.
    Skipped,
    Indeterminate,
    Fail,
}

impl Verdict {
    /// Process exit code: 0 success, 1 counterexample, 2 guard or budget.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass | Verdict::Skipped => 0,
            Verdict::Fail => 1,
            Verdict::Indeterminate => 2,
        }
    }

    /// Worst of two verdicts, with `Skipped` absorbed by anything else.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Skipped, v) | (v, Verdict::Skipped) => v,
            (a, b) => a.max(b),
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Skipped => "SKIPPED",
            Verdict::Indeterminate => "INDETERMINATE",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessKind {
    Hom {
        source: String,
        target: String,
        map: Vec<usize>,
    },
    Colouring {
        graph: String,
        colours: Vec<usize>,
    },
    Path {
        path: String,
    },
    Digraph {
        graph: Value,
    },
    Fact {
        value: Value,
    },
    Note {
        text: String,
    },
    Report {
        report: Box<VerifyReport>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub label: String,
    #[serde(flatten)]
    pub kind: WitnessKind,
}

/// Outcome of one claim check.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub claim: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub seed: Option<u64>,
    pub timing_ms: u64,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// A recorded fact by label.
    pub fn fact(&self, label: &str) -> Option<&Value> {
        self.witnesses.iter().find_map(|w| match &w.kind {
            WitnessKind::Fact { value } if w.label == label => Some(value),
            _ => None,
        })
    }

    pub fn witness(&self, label: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.label == label)
    }

    pub fn clear_timing(&mut self) {
        self.timing_ms = 0;
        for w in &mut self.witnesses {
            if let WitnessKind::Report { report } = &mut w.kind {
                report.clear_timing();
            }
        }
    }
}

pub(crate) fn graph_id(g: &Digraph) -> String {
    g.name().map_or_else(|| g.to_json(), str::to_owned)
}

/// Accumulates witnesses while a check runs.
pub(crate) struct ReportBuilder {
    claim: String,
    params: BTreeMap<String, Value>,
    witnesses: Vec<Witness>,
    seed: Option<u64>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim: &str) -> Self {
        ReportBuilder {
            claim: claim.to_owned(),
            params: BTreeMap::new(),
            witnesses: Vec::new(),
            seed: None,
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(
            key.to_owned(),
            serde_json::to_value(value).expect("parameter serializes"),
        );
        self
    }

    pub fn graph_param(&mut self, key: &str, g: &Digraph) -> &mut Self {
        let v: Value = serde_json::from_str(&g.to_json()).expect("digraph JSON");
        self.params.insert(key.to_owned(), v);
        self
    }

    pub fn seed(&mut self, seed: u64) -> &mut Self {
        self.seed = Some(seed);
        self
    }

    fn push(&mut self, label: &str, kind: WitnessKind) -> &mut Self {
        self.witnesses.push(Witness {
            label: label.to_owned(),
            kind,
        });
        self
    }

    pub fn fact(&mut self, label: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("fact serializes");
        self.push(label, WitnessKind::Fact { value })
    }

    pub fn note(&mut self, label: &str, text: impl Into<String>) -> &mut Self {
        self.push(label, WitnessKind::Note { text: text.into() })
    }

    pub fn hom(&mut self, label: &str, h: &Hom, source: &Digraph, target: &Digraph) -> &mut Self {
        self.push(
            label,
            WitnessKind::Hom {
                source: graph_id(source),
                target: graph_id(target),
                map: h.map.clone(),
            },
        )
    }

    pub fn colouring(&mut self, label: &str, g: &Digraph, colours: &[usize]) -> &mut Self {
        self.push(
            label,
            WitnessKind::Colouring {
                graph: graph_id(g),
                colours: colours.to_vec(),
            },
        )
    }

    pub fn path(&mut self, label: &str, p: &crate::constructions::OrientedPath) -> &mut Self {
        self.push(
            label,
            WitnessKind::Path {
                path: p.to_string(),
            },
        )
    }

    pub fn digraph(&mut self, label: &str, g: &Digraph) -> &mut Self {
        let graph = serde_json::from_str(&g.to_json()).expect("digraph JSON");
        self.push(label, WitnessKind::Digraph { graph })
    }

    pub fn nested(&mut self, label: &str, report: VerifyReport) -> &mut Self {
        self.push(
            label,
            WitnessKind::Report {
                report: Box::new(report),
            },
        )
    }

    pub fn finish(&self, verdict: Verdict) -> VerifyReport {
        VerifyReport {
            claim: self.claim.clone(),
            params: self.params.clone(),
            verdict,
            witnesses: self.witnesses.clone(),
            seed: self.seed,
            timing_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Folds many instance reports of one claim into a single report. The
/// first failing (or else indeterminate) instance is embedded in full.
pub(crate) fn aggregate(
    claim: &str,
    seed: Option<u64>,
    reports: Vec<VerifyReport>,
) -> VerifyReport {
    let mut b = ReportBuilder::new(claim);
    if let Some(s) = seed {
        b.seed(s);
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    b.param("instances", reports.len())
        .fact("passed", count(Verdict::Pass))
        .fact("failed", count(Verdict::Fail))
        .fact("indeterminate", count(Verdict::Indeterminate))
        .fact("skipped", count(Verdict::Skipped));
    let verdict = reports
        .iter()
        .map(|r| r.verdict)
        .fold(Verdict::Skipped, Verdict::and);
    let verdict = if reports.is_empty() {
        Verdict::Pass
    } else {
        verdict
    };
    let worst = reports
        .iter()
        .position(|r| r.verdict == Verdict::Fail)
        .or_else(|| {
            reports
                .iter()
                .position(|r| r.verdict == Verdict::Indeterminate)
        });
    if let Some(i) = worst {
        b.nested("counterexample", reports[i].clone());
    }
    let mut report = b.finish(verdict);
    report.timing_ms = reports
        .iter()
        .map(|r| r.timing_ms)
        .sum::<u64>()
        .max(report.timing_ms);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_combination() {
        use Verdict::*;
        assert_eq!(Pass.and(Skipped), Pass);
        assert_eq!(Skipped.and(Skipped), Skipped);
        assert_eq!(Pass.and(Indeterminate), Indeterminate);
        assert_eq!(Indeterminate.and(Fail), Fail);
        assert_eq!(Fail.exit_code(), 1);
    }

    #[test]
    fn report_schema_fields() {
        let mut b = ReportBuilder::new("demo");
        b.param("k", 2).seed(7).fact("ok", true);
        let mut r = b.finish(Verdict::Pass);
        r.clear_timing();
        assert_eq!(
            r.to_json(),
            r#"{"claim":"demo","params":{"k":2},"verdict":"PASS","witnesses":[{"label":"ok","kind":"fact","value":true}],"seed":7,"timing_ms":0}"#
        );
        assert_eq!(r.fact("ok"), Some(&Value::Bool(true)));
    }
}
