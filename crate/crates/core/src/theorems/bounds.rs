use super::report::{TheoremReport, Witness};
use crate::graph::GainGraph;
use crate::matching::matching_number;
use crate::spectral::inertia;

pub const SUBJECT: &str = "inertia-bounds";

/// Checks `m - c <= p <= m + c` and `m - c <= n <= m + c` on every
/// connected component, and on the whole graph via additivity.
pub fn check_bounds(g: &GainGraph) -> TheoremReport {
    let mut totals = (0i64, 0i64, 0i64, 0i64);
    for (idx, comp) in g.connected_components().iter().enumerate() {
        let h = g.induced_subgraph(comp).expect("component vertices");
        let (m, c) = (matching_number(&h) as i64, h.cyclomatic_number() as i64);
        let i = inertia(&h);
        let (p, n) = (i.positive as i64, i.negative as i64);
        totals = (totals.0 + m, totals.1 + c, totals.2 + p, totals.3 + n);
        let ok = |x: i64| m - c <= x && x <= m + c;
        if !(ok(p) && ok(n)) {
            let w = Witness::new()
                .at(format!("component {idx}"))
                .graph(&h)
                .value("m", m)
                .value("c", c)
                .value("p", p)
                .value("n", n);
            return TheoremReport::fails(SUBJECT, w);
        }
    }
    let (m, c, p, n) = totals;
    let ok = |x: i64| m - c <= x && x <= m + c;
    let w = Witness::new().value("m", m).value("c", c).value("p", p).value("n", n);
    TheoremReport::check(SUBJECT, ok(p) && ok(n), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::named::*;
    use crate::theorems::Verdict;

    fn values(r: &TheoremReport) -> [i64; 4] {
        let w = r.witness.as_ref().unwrap();
        ["m", "c", "p", "n"].map(|k| w.values[k])
    }

    #[test]
    fn tree_is_tight_on_both_ends() {
        let r = check_bounds(&path(5));
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(values(&r), [2, 0, 2, 2]);
    }

    #[test]
    fn triangles() {
        let r = check_bounds(&cycle(3));
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(values(&r), [1, 1, 1, 2]);
        let signed = cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::MINUS_ONE]);
        assert_eq!(values(&check_bounds(&signed)), [1, 1, 2, 1]);
    }

    #[test]
    fn disconnected_sums() {
        let g = cycle(3).disjoint_union(&complete(4)).disjoint_union(&GainGraph::empty(2));
        let r = check_bounds(&g);
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(values(&r)[..2], [3, 4]);
    }
}
