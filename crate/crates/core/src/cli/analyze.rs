use serde::Serialize;

use crate::blocks::cycle_structure;
use crate::graph::GainGraph;
use crate::matching::matching_number;
use crate::spectral::{inertia, Inertia};
use crate::theorems::lemmas::run_basic_checks;
use crate::theorems::optimality::characterization_report;
use crate::theorems::{
    check_bounds, gain_subgroup, run_lemma_checks, CycleType, GainSubgroup, OptimalityKind, Profile, TheoremReport,
    Verdict, DEFAULT_RE_TOL,
};

/// One cycle of a graph whose cycles are pairwise vertex-disjoint.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleEntry {
    pub vertices: Vec<usize>,
    pub length: usize,
    /// Cycle gain along the listed traversal, as a `gaingraph v1` token.
    pub gain: String,
    #[serde(rename = "type")]
    pub cycle_type: CycleType,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsSummary {
    /// `m - c`.
    pub lower: i64,
    /// `m + c`.
    pub upper: i64,
    pub verdict: Verdict,
    pub report: TheoremReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KindVerdict {
    pub kind: OptimalityKind,
    pub structural: bool,
    pub spectral: bool,
    /// Whether the two sides agree on every component.
    pub equivalence: Verdict,
    pub reports: Vec<TheoremReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentSummary {
    pub vertices: Vec<usize>,
    pub matching: usize,
    pub cyclomatic: usize,
    pub inertia: Inertia,
    /// `(kind, structural, spectral)` for this component.
    pub optimality: Vec<ComponentKind>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentKind {
    pub kind: OptimalityKind,
    pub structural: bool,
    pub spectral: bool,
}

/// Everything `analyze` reports. Field names are documented in
/// `docs/report-schema.md`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub cyclomatic: usize,
    pub matching: usize,
    pub inertia: Inertia,
    pub rank: usize,
    pub exact_gains: bool,
    pub gain_subgroup: GainSubgroup,
    pub cycles_vertex_disjoint: bool,
    pub cycles: Vec<CycleEntry>,
    pub bounds: BoundsSummary,
    pub optimality: Vec<KindVerdict>,
    /// Per-component detail, present for disconnected graphs.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentSummary>,
    pub lemmas: Vec<TheoremReport>,
}

impl AnalysisReport {
    /// Every failing theorem verdict in the report.
    pub fn failures(&self) -> Vec<&TheoremReport> {
        std::iter::once(&self.bounds.report)
            .chain(self.optimality.iter().flat_map(|k| &k.reports))
            .chain(&self.lemmas)
            .filter(|r| r.failed())
            .collect()
    }
}

/// Builds the full report. Disconnected graphs are split into components;
/// a graph is structurally optimal when each component is.
pub fn analyze(g: &GainGraph) -> AnalysisReport {
    let i = inertia(g);
    let m = matching_number(g);
    let c = g.cyclomatic_number();
    let cs = cycle_structure(g);
    let cycles = cs
        .cycles
        .iter()
        .map(|cyc| {
            let phi = g.gain_of_cycle(cyc).expect("listed cycle");
            CycleEntry {
                vertices: cyc.clone(),
                length: cyc.len(),
                gain: phi.token(),
                cycle_type: crate::theorems::cycles::classify_gain(cyc.len(), phi, DEFAULT_RE_TOL),
            }
        })
        .collect();

    let component_sets = g.connected_components();
    let profiles: Vec<(Vec<usize>, Profile)> = component_sets
        .iter()
        .map(|comp| (comp.clone(), Profile::new(&g.induced_subgraph(comp).expect("component"))))
        .collect();

    let optimality = OptimalityKind::ALL
        .into_iter()
        .map(|kind| {
            let reports: Vec<TheoremReport> = profiles
                .iter()
                .enumerate()
                .map(|(idx, (_, p))| {
                    let mut r = characterization_report(p, kind);
                    if profiles.len() > 1 {
                        r.subject = format!("{}/component-{idx}", r.subject);
                    }
                    r
                })
                .collect();
            KindVerdict {
                kind,
                structural: profiles.iter().all(|(_, p)| p.structural(kind)),
                spectral: kind.index(i) as i64 == kind.bound(m, c),
                equivalence: if reports.iter().any(TheoremReport::failed) { Verdict::Fails } else { Verdict::Holds },
                reports,
            }
        })
        .collect();

    let components = if profiles.len() > 1 {
        profiles
            .iter()
            .map(|(vertices, p)| ComponentSummary {
                vertices: vertices.clone(),
                matching: p.matching,
                cyclomatic: p.cyclomatic,
                inertia: p.inertia,
                optimality: OptimalityKind::ALL
                    .into_iter()
                    .map(|kind| ComponentKind { kind, structural: p.structural(kind), spectral: p.spectral(kind) })
                    .collect(),
            })
            .collect()
    } else {
        Vec::new()
    };

    let bounds_report = check_bounds(g);
    let mut lemmas = run_basic_checks(g);
    lemmas.extend(run_lemma_checks(g));

    AnalysisReport {
        vertex_count: g.order(),
        edge_count: g.size(),
        component_count: component_sets.len(),
        cyclomatic: c,
        matching: m,
        inertia: i,
        rank: i.rank(),
        exact_gains: g.is_exact(),
        gain_subgroup: gain_subgroup(g),
        cycles_vertex_disjoint: cs.vertex_disjoint,
        cycles,
        bounds: BoundsSummary {
            lower: m as i64 - c as i64,
            upper: (m + c) as i64,
            verdict: bounds_report.verdict,
            report: bounds_report,
        },
        optimality,
        components,
        lemmas,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::named::*;

    fn kind<'a>(r: &'a AnalysisReport, k: OptimalityKind) -> &'a KindVerdict {
        r.optimality.iter().find(|v| v.kind == k).unwrap()
    }

    #[test]
    fn triangle_report() {
        let r = analyze(&cycle(3));
        assert_eq!(r.inertia, Inertia::new(1, 2, 0));
        assert_eq!((r.matching, r.cyclomatic), (1, 1));
        assert_eq!(r.cycles[0].cycle_type, CycleType::D);
        assert!(kind(&r, OptimalityKind::NUpper).spectral);
        assert!(r.failures().is_empty());
    }

    #[test]
    fn tree_report_has_coinciding_kinds() {
        let r = analyze(&path(5));
        assert_eq!(r.inertia, Inertia::new(2, 2, 1));
        assert!(r.optimality.iter().all(|k| k.structural && k.spectral));
    }

    #[test]
    fn disconnected_report_lists_components() {
        let g = cycle(4).disjoint_union(&cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::MINUS_ONE]));
        let r = analyze(&g);
        assert_eq!(r.components.len(), 2);
        assert!(!kind(&r, OptimalityKind::PLower).structural);
        assert!(!kind(&r, OptimalityKind::PLower).spectral);
        assert!(r.failures().is_empty());
    }
}
