//! Validators for the structural facts surrounding the inertia bounds.
//!
//! Each validator checks one statement on a concrete graph and returns a
//! [`TheoremReport`]; statements whose hypothesis the graph does not meet
//! report [`Verdict::Skipped`](super::Verdict::Skipped).

use super::cycles::{classify_gain, cycle_inertia_closed_form, CycleType, DEFAULT_RE_TOL};
use super::optimality::{is_optimal, OptimalityKind};
use super::report::{TheoremReport, Witness};
use crate::blocks::{cycle_structure, in_cyclic_class, vertices_on_cycles, vertices_on_multiple_cycles};
use crate::gain::Gain;
use crate::graph::GainGraph;
use crate::matching::{every_max_matching_saturates, exists_max_matching_avoiding, matching_number};
use crate::spectral::{inertia, Inertia};

fn delete(g: &GainGraph, vs: &[usize]) -> GainGraph {
    g.delete_vertices(vs).expect("vertices of g").0
}

/// Combines per-location checks into one report: the first failure wins.
fn first_failure(subject: &str, checks: impl IntoIterator<Item = Option<Witness>>) -> TheoremReport {
    let mut any = false;
    for failure in checks {
        any = true;
        if let Some(w) = failure {
            return TheoremReport::fails(subject, w);
        }
    }
    if any {
        TheoremReport::holds(subject)
    } else {
        TheoremReport::skipped(subject)
    }
}

/// `m(G) - 1 <= m(G - v) <= m(G)` for every vertex.
pub fn matching_vertex_deletion(g: &GainGraph) -> TheoremReport {
    let m = matching_number(g);
    first_failure(
        "matching-vertex-deletion",
        (0..g.order()).map(|v| {
            let mv = matching_number(&delete(g, &[v]));
            (mv > m || mv + 1 < m).then(|| Witness::new().at(format!("vertex {v}")).value("m", m).value("m_minus_v", mv))
        }),
    )
}

/// Joining an even cycle `c` at `cycle_vertex` by one edge to
/// `attach_vertex` of a connected `h` gives `m = m(C) + m(H)`.
pub fn even_cycle_attachment(c: &GainGraph, cycle_vertex: usize, h: &GainGraph, attach_vertex: usize) -> TheoremReport {
    const SUBJECT: &str = "even-cycle-attachment";
    let is_even_cycle = c.order() >= 4 && c.order() % 2 == 0 && c.is_connected() && (0..c.order()).all(|v| c.degree(v) == 2);
    if !is_even_cycle || !h.is_connected() || h.order() == 0 {
        return TheoremReport::skipped(SUBJECT);
    }
    let joined = c
        .disjoint_union(h)
        .with_edge(cycle_vertex, c.order() + attach_vertex, Gain::ONE)
        .expect("vertices in range");
    let (mg, mc, mh) = (matching_number(&joined), matching_number(c), matching_number(h));
    let w = Witness::new().value("m", mg).value("m_cycle", mc).value("m_rest", mh);
    TheoremReport::check(SUBJECT, mg == mc + mh, w)
}

/// For a pendant `x` with neighbor `y`: `m(G) = m(G - y) + 1 = m(G - x - y) + 1`.
pub fn pendant_matching(g: &GainGraph) -> TheoremReport {
    let m = matching_number(g);
    first_failure(
        "pendant-matching",
        g.pendant_vertices().into_iter().map(|x| {
            let y = g.neighbors(x).next().expect("pendant");
            let my = matching_number(&delete(g, &[y]));
            let mxy = matching_number(&delete(g, &[x, y]));
            (my + 1 != m || mxy + 1 != m).then(|| {
                Witness::new().at(format!("pendant {x}, neighbor {y}")).value("m", m).value("m_minus_y", my).value("m_minus_xy", mxy)
            })
        }),
    )
}

/// For graphs with at least one cycle whose cycles are pairwise disjoint
/// and all odd: `m(T_G) = m(G - O(G))` iff some maximum matching avoids `F(G)`.
pub fn boundary_avoiding_matching(g: &GainGraph) -> TheoremReport {
    const SUBJECT: &str = "boundary-avoiding-matching";
    let cs = cycle_structure(g);
    if !cs.vertex_disjoint || cs.cycles.is_empty() || cs.cycles.iter().any(|c| c.len() % 2 == 0) {
        return TheoremReport::skipped(SUBJECT);
    }
    let mt = matching_number(cs.contracted.as_ref().expect("disjoint"));
    let mo = matching_number(&delete(g, &cs.cycle_vertices));
    let boundary = cs.boundary_edges.as_deref().expect("disjoint");
    let avoiding = exists_max_matching_avoiding(g, boundary).expect("boundary edges are edges");
    let w = Witness::new()
        .value("m_contracted", mt)
        .value("m_outside_cycles", mo)
        .value("avoiding_matching", avoiding as i64);
    TheoremReport::check(SUBJECT, (mt == mo) == avoiding, w)
}

/// In the class of graphs with disjoint cycles that are not a mere union
/// of cycles and trees, `m(T_G) = m(G - O(G))` forces a pendant vertex and
/// keeps every quasi-pendant vertex off the cycles.
pub fn cyclic_class_pendant(g: &GainGraph) -> TheoremReport {
    const SUBJECT: &str = "cyclic-class-pendant";
    if !in_cyclic_class(g) {
        return TheoremReport::skipped(SUBJECT);
    }
    let cs = cycle_structure(g);
    let mt = matching_number(cs.contracted.as_ref().expect("disjoint"));
    let mo = matching_number(&delete(g, &cs.cycle_vertices));
    if mt != mo {
        return TheoremReport::skipped(SUBJECT);
    }
    let pendants = g.pendant_vertices().len();
    let quasi_on_cycle = g.quasi_pendant_vertices().into_iter().filter(|&v| cs.on_cycle(v)).count();
    let w = Witness::new().value("pendants", pendants).value("quasi_pendants_on_cycles", quasi_on_cycle);
    TheoremReport::check(SUBJECT, pendants > 0 && quasi_on_cycle == 0, w)
}

/// `c(G - x) = c(G)` off cycles, `<= c(G) - 1` on a cycle, `<= c(G) - 2`
/// on two distinct cycles.
pub fn cyclomatic_vertex_deletion(g: &GainGraph) -> TheoremReport {
    let c = g.cyclomatic_number() as i64;
    let on = vertices_on_cycles(g);
    let multi = vertices_on_multiple_cycles(g);
    first_failure(
        "cyclomatic-vertex-deletion",
        (0..g.order()).map(|x| {
            let cx = delete(g, &[x]).cyclomatic_number() as i64;
            let ok = if multi.binary_search(&x).is_ok() {
                cx <= c - 2
            } else if on.binary_search(&x).is_ok() {
                cx <= c - 1
            } else {
                cx == c
            };
            (!ok).then(|| Witness::new().at(format!("vertex {x}")).value("c", c).value("c_minus_x", cx))
        }),
    )
}

/// A gain cycle has the inertia its type prescribes.
pub fn cycle_inertia(g: &GainGraph) -> TheoremReport {
    const SUBJECT: &str = "cycle-inertia";
    let n = g.order();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return TheoremReport::skipped(SUBJECT);
    }
    let cycle = &cycle_structure(g).cycles[0];
    let t = classify_gain(n, g.gain_of_cycle(cycle).expect("cycle"), DEFAULT_RE_TOL);
    let expected = cycle_inertia_closed_form(n, t).expect("type matches parity");
    let actual = inertia(g);
    let w = inertia_witness(actual, "").at(format!("type {t}")).value("expected_p", expected.positive).value("expected_n", expected.negative);
    TheoremReport::check(SUBJECT, actual == expected, w)
}

fn inertia_witness(i: Inertia, suffix: &str) -> Witness {
    Witness::new()
        .value(&format!("p{suffix}"), i.positive)
        .value(&format!("n{suffix}"), i.negative)
        .value(&format!("eta{suffix}"), i.zero)
}

/// `p(H) <= p(G)` and `n(H) <= n(G)` for the induced subgraphs on `subsets`.
pub fn induced_subgraph_monotonicity(g: &GainGraph, subsets: &[Vec<usize>]) -> TheoremReport {
    let whole = inertia(g);
    first_failure(
        "induced-subgraph-monotonicity",
        subsets.iter().map(|s| {
            let h = g.induced_subgraph(s).expect("subset of vertices");
            let ih = inertia(&h);
            (ih.positive > whole.positive || ih.negative > whole.negative)
                .then(|| inertia_witness(whole, "").at(format!("subset {s:?}")).value("p_sub", ih.positive).value("n_sub", ih.negative))
        }),
    )
}

/// Inertia is the sum over connected components.
pub fn component_additivity(g: &GainGraph) -> TheoremReport {
    let whole = inertia(g);
    let summed: Inertia = g
        .connected_components()
        .iter()
        .map(|comp| inertia(&g.induced_subgraph(comp).expect("component")))
        .sum();
    let w = inertia_witness(whole, "").value("p_sum", summed.positive).value("n_sum", summed.negative).value("eta_sum", summed.zero);
    TheoremReport::check("component-additivity", whole == summed, w)
}

/// `p = 0` iff `n = 0` iff there are no edges.
pub fn edgeless_iff_zero_index(g: &GainGraph) -> TheoremReport {
    let i = inertia(g);
    let edgeless = g.size() == 0;
    let ok = (i.positive == 0) == edgeless && (i.negative == 0) == edgeless;
    TheoremReport::check("edgeless-iff-zero-index", ok, inertia_witness(i, "").value("edges", g.size()))
}

/// Acyclic graphs have `p = n = m`.
pub fn acyclic_inertia(g: &GainGraph) -> TheoremReport {
    const SUBJECT: &str = "acyclic-inertia";
    if g.cyclomatic_number() != 0 {
        return TheoremReport::skipped(SUBJECT);
    }
    let i = inertia(g);
    let m = matching_number(g);
    TheoremReport::check(SUBJECT, i.positive == m && i.negative == m, inertia_witness(i, "").value("m", m))
}

/// For a pendant `u` with neighbor `v`: `p(G) = p(G - v) + 1 = p(G - u - v) + 1`, likewise `n`.
pub fn pendant_inertia_reduction(g: &GainGraph) -> TheoremReport {
    let whole = inertia(g);
    first_failure(
        "pendant-inertia-reduction",
        g.pendant_vertices().into_iter().map(|u| {
            let v = g.neighbors(u).next().expect("pendant");
            let iv = inertia(&delete(g, &[v]));
            let iuv = inertia(&delete(g, &[u, v]));
            let ok = [iv, iuv].iter().all(|i| i.positive + 1 == whole.positive && i.negative + 1 == whole.negative);
            (!ok).then(|| {
                inertia_witness(whole, "")
                    .at(format!("pendant {u}, neighbor {v}"))
                    .value("p_minus_v", iv.positive)
                    .value("n_minus_v", iv.negative)
                    .value("p_minus_uv", iuv.positive)
                    .value("n_minus_uv", iuv.negative)
            })
        }),
    )
}

/// `p(G) - 1 <= p(G - u) <= p(G)`, likewise `n`, for every vertex.
pub fn inertia_vertex_deletion(g: &GainGraph) -> TheoremReport {
    let whole = inertia(g);
    let within = |a: usize, b: usize| a <= b && b <= a + 1;
    first_failure(
        "inertia-vertex-deletion",
        (0..g.order()).map(|u| {
            let iu = inertia(&delete(g, &[u]));
            let ok = within(iu.positive, whole.positive) && within(iu.negative, whole.negative);
            (!ok).then(|| inertia_witness(whole, "").at(format!("vertex {u}")).value("p_minus_u", iu.positive).value("n_minus_u", iu.negative))
        }),
    )
}

/// The whole-graph validators that need no extra input, other than the
/// optimality-related ones in [`run_lemma_checks`].
pub fn run_basic_checks(g: &GainGraph) -> Vec<TheoremReport> {
    vec![
        matching_vertex_deletion(g),
        pendant_matching(g),
        boundary_avoiding_matching(g),
        cyclomatic_vertex_deletion(g),
        cycle_inertia(g),
        component_additivity(g),
        edgeless_iff_zero_index(g),
        acyclic_inertia(g),
        pendant_inertia_reduction(g),
        inertia_vertex_deletion(g),
    ]
}

/// A graph attains the bound for `kind` iff each component does.
pub fn componentwise_optimality(g: &GainGraph, kind: OptimalityKind) -> TheoremReport {
    let whole = is_optimal(g, kind);
    let comps = g.connected_components();
    let each = comps.iter().all(|c| is_optimal(&g.induced_subgraph(c).expect("component"), kind));
    let w = Witness::new().value("whole", whole as i64).value("every_component", each as i64).value("components", comps.len());
    TheoremReport::check(format!("componentwise-optimality/{kind}"), whole == each, w)
}

/// In an optimal graph, deleting a cycle vertex `v` drops `c` by one,
/// drops `m` by one (lower) or keeps it (upper), moves the index
/// accordingly, and `G - v` is optimal; `v` lies on one cycle only and is
/// not quasi-pendant.
pub fn optimal_cycle_vertex_deletion(g: &GainGraph, kind: OptimalityKind) -> TheoremReport {
    let subject = format!("optimal-cycle-vertex-deletion/{kind}");
    if !is_optimal(g, kind) {
        return TheoremReport::skipped(subject);
    }
    let (m, c) = (matching_number(g), g.cyclomatic_number());
    let index = kind.index(inertia(g));
    let multi = vertices_on_multiple_cycles(g);
    let quasi = g.quasi_pendant_vertices();
    first_failure(
        &subject,
        vertices_on_cycles(g).into_iter().map(|v| {
            let h = delete(g, &[v]);
            let (mv, cv) = (matching_number(&h), h.cyclomatic_number());
            let iv = kind.index(inertia(&h));
            let (index_step, matching_step) = if kind.is_lower() { (0, 1) } else { (1, 0) };
            let ok = index == iv + index_step
                && iv as i64 == kind.bound(mv, cv)
                && c == cv + 1
                && m == mv + matching_step
                && multi.binary_search(&v).is_err()
                && quasi.binary_search(&v).is_err();
            (!ok).then(|| {
                Witness::new()
                    .at(format!("vertex {v}"))
                    .value("index", index)
                    .value("index_minus_v", iv)
                    .value("m", m)
                    .value("m_minus_v", mv)
                    .value("c", c)
                    .value("c_minus_v", cv)
            })
        }),
    )
}

/// Removing a pendant vertex and its neighbor preserves optimality.
pub fn pendant_pair_deletion(g: &GainGraph, kind: OptimalityKind) -> TheoremReport {
    let subject = format!("pendant-pair-deletion/{kind}");
    if !is_optimal(g, kind) {
        return TheoremReport::skipped(subject);
    }
    first_failure(
        &subject,
        g.pendant_vertices().into_iter().map(|x| {
            let y = g.neighbors(x).next().expect("pendant");
            let h = delete(g, &[x, y]);
            (!is_optimal(&h, kind)).then(|| {
                let i = inertia(&h);
                Witness::new()
                    .at(format!("pendant {x}, neighbor {y}"))
                    .graph(&h)
                    .value("index", kind.index(i))
                    .value("m", matching_number(&h))
                    .value("c", h.cyclomatic_number())
            })
        }),
    )
}

/// The single cycle of an optimal graph with `c = 1` has the required type.
pub fn unicyclic_optimal_type(g: &GainGraph, kind: OptimalityKind) -> TheoremReport {
    let subject = format!("unicyclic-optimal-type/{kind}");
    if g.cyclomatic_number() != 1 || !is_optimal(g, kind) {
        return TheoremReport::skipped(subject);
    }
    let cycle = &cycle_structure(g).cycles[0];
    let t = classify_gain(cycle.len(), g.gain_of_cycle(cycle).expect("cycle"), DEFAULT_RE_TOL);
    let w = Witness::new().at(format!("cycle {cycle:?} of type {t}")).value("length", cycle.len());
    TheoremReport::check(subject, t == kind.required_type(), w)
}

/// A cycle `C` hanging off the rest `H` by a single edge `uv`, `u` on `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantCycleAttachment {
    pub cycle: Vec<usize>,
    pub cycle_vertex: usize,
    pub outside_vertex: usize,
}

/// Pendant cycles attached by exactly one edge, in a graph whose cycles are
/// pairwise vertex-disjoint.
pub fn pendant_cycle_attachments(g: &GainGraph) -> Vec<PendantCycleAttachment> {
    let cs = cycle_structure(g);
    let Some(boundary) = cs.boundary_edges.as_ref() else {
        return Vec::new();
    };
    cs.cycles
        .iter()
        .filter_map(|cycle| {
            let mut leaving = boundary.iter().filter_map(|&(a, b)| match (cycle.contains(&a), cycle.contains(&b)) {
                (true, _) => Some((a, b)),
                (_, true) => Some((b, a)),
                _ => None,
            });
            let (u, v) = leaving.next()?;
            leaving.next().is_none().then(|| PendantCycleAttachment { cycle: cycle.clone(), cycle_vertex: u, outside_vertex: v })
        })
        .collect()
}

/// For a lower-optimal graph built by joining a cycle `C` at `u` to `v` in
/// `H`: every cycle has type A, `uv` lies in no maximum matching, every
/// maximum matching of `H` saturates `v`, `m(H + u) = m(H)`, and both `H`
/// and `H + u` are lower-optimal.
pub fn pendant_cycle_attachment(g: &GainGraph, kind: OptimalityKind) -> TheoremReport {
    let subject = format!("pendant-cycle-attachment/{kind}");
    if !kind.is_lower() || !is_optimal(g, kind) {
        return TheoremReport::skipped(subject);
    }
    let attachments = pendant_cycle_attachments(g);
    let cs = cycle_structure(g);
    first_failure(
        &subject,
        attachments.iter().map(|a| {
            let all_a = cs
                .cycles
                .iter()
                .all(|c| classify_gain(c.len(), g.gain_of_cycle(c).expect("cycle"), DEFAULT_RE_TOL) == CycleType::A);
            let m = matching_number(g);
            let (u, v) = (a.cycle_vertex, a.outside_vertex);
            let edge_avoided = matching_number(&delete(g, &[u, v])) + 1 != m;
            let (h, ids) = g.delete_vertices(&a.cycle).expect("cycle vertices");
            let v_in_h = ids.binary_search(&v).expect("outside vertex survives");
            let saturated = every_max_matching_saturates(&h, v_in_h).expect("vertex of h");
            let mut with_u: Vec<usize> = ids.clone();
            with_u.push(u);
            let k = g.induced_subgraph(&with_u).expect("vertices of g");
            let (mh, mk) = (matching_number(&h), matching_number(&k));
            let h_opt = is_optimal(&h, kind);
            let k_opt = is_optimal(&k, kind);
            let ok = all_a && edge_avoided && saturated && mh == mk && h_opt && k_opt;
            (!ok).then(|| {
                Witness::new()
                    .at(format!("cycle {:?} joined at {u}-{v}", a.cycle))
                    .value("all_type_a", all_a as i64)
                    .value("edge_in_no_max_matching", edge_avoided as i64)
                    .value("v_always_saturated", saturated as i64)
                    .value("m_rest", mh)
                    .value("m_rest_plus_u", mk)
                    .value("rest_optimal", h_opt as i64)
                    .value("rest_plus_u_optimal", k_opt as i64)
            })
        }),
    )
}

/// A connected lower-optimal graph has a maximum matching avoiding `F(G)`,
/// and `m(G) = m(G - O(G)) + Σ m(C)` over its cycles.
pub fn optimal_matching_decomposition(g: &GainGraph, kind: OptimalityKind) -> TheoremReport {
    let subject = format!("optimal-matching-decomposition/{kind}");
    if !kind.is_lower() || !g.is_connected() || !is_optimal(g, kind) {
        return TheoremReport::skipped(subject);
    }
    let cs = cycle_structure(g);
    let Some(boundary) = cs.boundary_edges.as_ref() else {
        return TheoremReport::fails(subject, Witness::new().at("cycles share vertices").value("disjoint", 0));
    };
    let avoiding = exists_max_matching_avoiding(g, boundary).expect("boundary edges");
    let m = matching_number(g);
    let mo = matching_number(&delete(g, &cs.cycle_vertices));
    let cycles_sum: usize = cs.cycles.iter().map(|c| c.len() / 2).sum();
    let w = Witness::new()
        .value("avoiding_matching", avoiding as i64)
        .value("m", m)
        .value("m_outside_cycles", mo)
        .value("cycle_matching_sum", cycles_sum);
    TheoremReport::check(subject, avoiding && m == mo + cycles_sum, w)
}

/// Every applicable optimality-related check on `g`, for all four kinds,
/// plus the pendant condition for the cyclic class.
pub fn run_lemma_checks(g: &GainGraph) -> Vec<TheoremReport> {
    let mut reports = Vec::new();
    for kind in OptimalityKind::ALL {
        reports.push(componentwise_optimality(g, kind));
        reports.push(optimal_cycle_vertex_deletion(g, kind));
        reports.push(pendant_pair_deletion(g, kind));
        reports.push(unicyclic_optimal_type(g, kind));
        if kind.is_lower() {
            reports.push(pendant_cycle_attachment(g, kind));
            reports.push(optimal_matching_decomposition(g, kind));
        }
    }
    reports.push(cyclic_class_pendant(g));
    reports
}
