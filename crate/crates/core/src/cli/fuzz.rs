use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::format::to_text;
use crate::generators::{random_gain_graph, GainMode};
use crate::graph::GainGraph;
use crate::matching::{matching_number, matching_number_bruteforce, BRUTEFORCE_EDGE_LIMIT};
use crate::spectral::{inertia, inertia_exact, inertia_float_default};
use crate::theorems::lemmas::{
    acyclic_inertia, component_additivity, cyclomatic_vertex_deletion, edgeless_iff_zero_index,
    induced_subgraph_monotonicity, inertia_vertex_deletion, matching_vertex_deletion, pendant_inertia_reduction,
    pendant_matching,
};
use crate::theorems::{check_bounds, TheoremReport, Verdict, Witness};

/// Random subsets drawn per graph for the induced-subgraph check.
const SUBSETS_PER_GRAPH: usize = 4;
/// Failures echoed in full in the summary.
const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzFailure {
    pub trial: usize,
    pub graph: String,
    pub report: TheoremReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub trials: usize,
    pub n_max: usize,
    pub mode: GainMode,
    pub seed: u64,
    pub vertices_total: usize,
    pub edges_total: usize,
    pub violations: usize,
    pub by_subject: BTreeMap<String, VerdictCounts>,
    /// The first failures, in trial order.
    pub failures: Vec<FuzzFailure>,
}

/// The graph for trial `trial`: order uniform in `0..=n_max`, edge
/// probability uniform in `[0, 1)`.
pub fn fuzz_graph(trial: usize, n_max: usize, mode: GainMode, seed: u64) -> GainGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let n = rng.gen_range(0..=n_max);
    let p: f64 = rng.gen();
    random_gain_graph(n, p, mode, rng.gen())
}

/// Bounds, spectral invariants, and vertex-deletion inequalities on one graph.
pub fn fuzz_checks(g: &GainGraph, subset_seed: u64) -> Vec<TheoremReport> {
    let mut reports = vec![check_bounds(g)];

    let i = inertia(g);
    let w = Witness::new().value("p", i.positive).value("n", i.negative).value("eta", i.zero).value("order", g.order());
    reports.push(TheoremReport::check("inertia-sums-to-order", i.order() == g.order(), w));

    if g.is_exact() {
        if let Ok(exact) = inertia_exact(g) {
            let float = inertia_float_default(g);
            let w = Witness::new()
                .value("p_exact", exact.positive)
                .value("n_exact", exact.negative)
                .value("p_float", float.positive)
                .value("n_float", float.negative);
            reports.push(TheoremReport::check("inertia-exact-equals-float", exact == float, w));
        }
    }
    if g.size() <= BRUTEFORCE_EDGE_LIMIT {
        let fast = matching_number(g);
        let slow = matching_number_bruteforce(g).expect("within limit");
        let w = Witness::new().value("blossom", fast).value("bruteforce", slow);
        reports.push(TheoremReport::check("matching-blossom-equals-bruteforce", fast == slow, w));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(subset_seed);
    let subsets: Vec<Vec<usize>> = (0..SUBSETS_PER_GRAPH)
        .map(|_| {
            let mut vs: Vec<usize> = (0..g.order()).collect();
            vs.shuffle(&mut rng);
            vs.truncate(rng.gen_range(0..=g.order()));
            vs
        })
        .collect();

    reports.extend([
        component_additivity(g),
        edgeless_iff_zero_index(g),
        acyclic_inertia(g),
        induced_subgraph_monotonicity(g, &subsets),
        pendant_inertia_reduction(g),
        inertia_vertex_deletion(g),
        matching_vertex_deletion(g),
        pendant_matching(g),
        cyclomatic_vertex_deletion(g),
    ]);
    reports
}

/// Runs `trials` random graphs through [`fuzz_checks`] in parallel.
pub fn fuzz(trials: usize, n_max: usize, mode: GainMode, seed: u64) -> FuzzSummary {
    let per_trial: Vec<(GainGraph, Vec<TheoremReport>)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let g = fuzz_graph(t, n_max, mode, seed);
            let reports = fuzz_checks(&g, seed ^ (t as u64).rotate_left(32));
            (g, reports)
        })
        .collect();

    let mut summary = FuzzSummary {
        trials,
        n_max,
        mode,
        seed,
        vertices_total: 0,
        edges_total: 0,
        violations: 0,
        by_subject: BTreeMap::new(),
        failures: Vec::new(),
    };
    for (trial, (g, reports)) in per_trial.into_iter().enumerate() {
        summary.vertices_total += g.order();
        summary.edges_total += g.size();
        for r in reports {
            let counts = summary.by_subject.entry(r.subject.clone()).or_default();
            match r.verdict {
                Verdict::Holds => counts.holds += 1,
                Verdict::Skipped => counts.skipped += 1,
                Verdict::Fails => {
                    counts.fails += 1;
                    summary.violations += 1;
                    if summary.failures.len() < MAX_REPORTED_FAILURES {
                        summary.failures.push(FuzzFailure { trial, graph: to_text(&g), report: r });
                    }
                }
            }
        }
    }
    summary
}
