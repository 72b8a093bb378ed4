use serde::Serialize;

use crate::gain::Gain;
use crate::graph::GainGraph;

/// The smallest named family the gains fall into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GainSubgroup {
    /// All gains `1`: an ordinary graph.
    Simple,
    /// Gains in `{1, -1}`: a signed graph.
    Signed,
    /// Gains in `{1, i, -i}`: a mixed graph.
    Mixed,
    General,
}

/// Checked in the order simple, signed, mixed.
pub fn gain_subgroup(g: &GainGraph) -> GainSubgroup {
    let exponents: Option<Vec<u8>> = g.edges().iter().map(|e| e.gain.exact_exponent()).collect();
    let Some(exponents) = exponents else {
        return GainSubgroup::General;
    };
    let within = |allowed: &[u8]| exponents.iter().all(|k| allowed.contains(k));
    let one = Gain::ONE.exact_exponent().unwrap();
    let minus_one = Gain::MINUS_ONE.exact_exponent().unwrap();
    let (i, minus_i) = (Gain::I.exact_exponent().unwrap(), Gain::MINUS_I.exact_exponent().unwrap());
    if within(&[one]) {
        GainSubgroup::Simple
    } else if within(&[one, minus_one]) {
        GainSubgroup::Signed
    } else if within(&[one, i, minus_i]) {
        GainSubgroup::Mixed
    } else {
        GainSubgroup::General
    }
}
