use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GenerateError;
use crate::format::to_text;
use crate::gain::Gain;
use crate::generators::{AssignmentPolicy, Enumeration};
use crate::theorems::optimality::characterization_report;
use crate::theorems::{OptimalityKind, Profile, Witness};

const MAX_REPORTED_MISMATCHES: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    pub structural: usize,
    pub spectral: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderSummary {
    pub order: usize,
    pub underlying_graphs: u64,
    pub graphs: usize,
    pub kinds: BTreeMap<OptimalityKind, KindCounts>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub kind: OptimalityKind,
    pub graph: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationSummary {
    pub n_max: usize,
    pub gain_set: Vec<String>,
    pub policy: AssignmentPolicy,
    pub seed: u64,
    pub graphs: usize,
    pub kinds: BTreeMap<OptimalityKind, KindCounts>,
    pub mismatches: usize,
    pub orders: Vec<OrderSummary>,
    pub mismatch_examples: Vec<Mismatch>,
}

/// Compares the structural and spectral sides for each of `kinds` on
/// every connected labeled graph with `1 <= n <= n_max` vertices.
pub fn enumerate(
    n_max: usize,
    gain_set: &[Gain],
    kinds: &[OptimalityKind],
    policy: AssignmentPolicy,
    seed: u64,
) -> Result<EnumerationSummary, GenerateError> {
    let mut summary = EnumerationSummary {
        n_max,
        gain_set: gain_set.iter().map(|g| g.token()).collect(),
        policy,
        seed,
        graphs: 0,
        kinds: kinds.iter().map(|&k| (k, KindCounts::default())).collect(),
        mismatches: 0,
        orders: Vec::new(),
        mismatch_examples: Vec::new(),
    };
    let enumerations = (1..=n_max)
        .map(|n| Ok(Enumeration::new(n, gain_set)?.connected_only(true).policy(policy).seed(seed)))
        .collect::<Result<Vec<_>, GenerateError>>()?;

    for e in enumerations {
        // Per mask: (graph count, per-kind (structural, spectral, mismatch) flags, mismatches).
        type MaskResult = (usize, Vec<KindCounts>, Vec<Mismatch>);
        let per_mask: Vec<MaskResult> = (0..e.mask_count())
            .into_par_iter()
            .map(|mask| {
                let graphs = e.graphs_for_mask(mask);
                let mut counts = vec![KindCounts::default(); kinds.len()];
                let mut bad = Vec::new();
                for g in &graphs {
                    let profile = Profile::new(g);
                    for (slot, &kind) in counts.iter_mut().zip(kinds) {
                        let structural = profile.structural(kind);
                        let spectral = profile.spectral(kind);
                        slot.structural += structural as usize;
                        slot.spectral += spectral as usize;
                        if structural != spectral {
                            slot.mismatches += 1;
                            let r = characterization_report(&profile, kind);
                            bad.push(Mismatch { kind, graph: to_text(g), witness: r.witness.unwrap_or_default() });
                        }
                    }
                }
                (graphs.len(), counts, bad)
            })
            .collect();

        let mut order = OrderSummary {
            order: e.order(),
            underlying_graphs: e.mask_count(),
            graphs: 0,
            kinds: kinds.iter().map(|&k| (k, KindCounts::default())).collect(),
        };
        for (count, kind_counts, bad) in per_mask {
            order.graphs += count;
            for (&kind, c) in kinds.iter().zip(kind_counts) {
                for target in [order.kinds.get_mut(&kind).unwrap(), summary.kinds.get_mut(&kind).unwrap()] {
                    target.structural += c.structural;
                    target.spectral += c.spectral;
                    target.mismatches += c.mismatches;
                }
                summary.mismatches += c.mismatches;
            }
            let room = MAX_REPORTED_MISMATCHES - summary.mismatch_examples.len();
            summary.mismatch_examples.extend(bad.into_iter().take(room));
        }
        summary.graphs += order.graphs;
        summary.orders.push(order);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_not_p_lower() {
        let s = enumerate(3, &[Gain::ONE], &[OptimalityKind::PLower], AssignmentPolicy::Auto, 0).unwrap();
        // K1, K2, three paths P3, one triangle.
        assert_eq!(s.graphs, 6);
        let c = &s.kinds[&OptimalityKind::PLower];
        assert_eq!((c.structural, c.spectral, c.mismatches), (5, 5, 0));
    }

    #[test]
    fn order_bound() {
        assert!(matches!(
            enumerate(8, &[Gain::ONE], &OptimalityKind::ALL, AssignmentPolicy::Auto, 0),
            Err(GenerateError::BoundExceeded(_))
        ));
    }
}
