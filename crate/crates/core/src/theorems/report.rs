use std::collections::BTreeMap;

use serde::Serialize;

use crate::format::to_text;
use crate::graph::GainGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    /// The hypothesis did not apply to this graph.
    Skipped,
}

/// The concrete numbers behind a verdict.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Witness {
    /// The graph in `gaingraph v1` text, when it is not the input itself.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    /// Vertex, cycle or component the numbers refer to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<String>,
    pub values: BTreeMap<String, i64>,
}

impl Witness {
    pub fn new() -> Witness {
        Witness::default()
    }

    pub fn value(mut self, name: &str, v: impl TryInto<i64>) -> Witness {
        let v = v.try_into().unwrap_or(i64::MAX);
        self.values.insert(name.to_string(), v);
        self
    }

    pub fn at(mut self, location: impl Into<String>) -> Witness {
        self.location = Some(location.into());
        self
    }

    pub fn graph(mut self, g: &GainGraph) -> Witness {
        self.graph = Some(to_text(g));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub subject: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TheoremReport {
    pub fn holds(subject: impl Into<String>) -> TheoremReport {
        TheoremReport { subject: subject.into(), verdict: Verdict::Holds, witness: None }
    }

    /// A failure always carries its numbers.
    pub fn fails(subject: impl Into<String>, witness: Witness) -> TheoremReport {
        TheoremReport { subject: subject.into(), verdict: Verdict::Fails, witness: Some(witness) }
    }

    pub fn skipped(subject: impl Into<String>) -> TheoremReport {
        TheoremReport { subject: subject.into(), verdict: Verdict::Skipped, witness: None }
    }

    /// `holds` or `fails` with the same witness depending on `ok`.
    pub fn check(subject: impl Into<String>, ok: bool, witness: Witness) -> TheoremReport {
        TheoremReport {
            subject: subject.into(),
            verdict: if ok { Verdict::Holds } else { Verdict::Fails },
            witness: Some(witness),
        }
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fails
    }
}
