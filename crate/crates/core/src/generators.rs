//! Graph families: random graphs, typed cycles, extremal graphs built by
//! construct-then-verify, and exhaustive enumeration of small labeled graphs.
//!
//! All randomness comes from `ChaCha8Rng` seeded with a `u64`, so equal
//! seeds give byte-identical output.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::blocks::cycle_structure;
use crate::error::GenerateError;
use crate::gain::Gain;
use crate::graph::GainGraph;
use crate::matching::every_max_matching_saturates;
use crate::theorems::{CycleType, OptimalityKind, Profile};

/// How edge gains are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GainMode {
    AllOnes,
    Signed,
    FourthRoots,
    UniformAngle,
}

impl GainMode {
    pub const ALL: [GainMode; 4] = [GainMode::AllOnes, GainMode::Signed, GainMode::FourthRoots, GainMode::UniformAngle];

    pub fn name(self) -> &'static str {
        match self {
            GainMode::AllOnes => "all_ones",
            GainMode::Signed => "signed",
            GainMode::FourthRoots => "fourth_roots",
            GainMode::UniformAngle => "uniform_angle",
        }
    }

    pub fn draw<R: Rng>(self, rng: &mut R) -> Gain {
        match self {
            GainMode::AllOnes => Gain::ONE,
            GainMode::Signed => Gain::quarter_turns(2 * rng.gen_range(0..2)),
            GainMode::FourthRoots => Gain::quarter_turns(rng.gen_range(0..4)),
            GainMode::UniformAngle => Gain::from_angle_degrees(rng.gen_range(0.0..360.0)).expect("finite angle"),
        }
    }

    /// Whether every gain this mode draws is a fourth root of unity.
    pub fn is_exact(self) -> bool {
        self != GainMode::UniformAngle
    }
}

impl fmt::Display for GainMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GainMode {
    type Err = String;

    fn from_str(s: &str) -> Result<GainMode, String> {
        let key = s.replace('-', "_").to_ascii_lowercase();
        GainMode::ALL
            .into_iter()
            .find(|m| m.name() == key)
            .ok_or_else(|| format!("unknown gain mode {s:?} (expected all_ones, signed, fourth_roots or uniform_angle)"))
    }
}

/// Erdős–Rényi graph `G(n, edge_probability)` with gains drawn per `mode`.
///
/// Panics unless `edge_probability` lies in `[0, 1]`.
pub fn random_gain_graph(n: usize, edge_probability: f64, mode: GainMode, seed: u64) -> GainGraph {
    assert!((0.0..=1.0).contains(&edge_probability), "edge probability {edge_probability} outside [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_probability) {
                edges.push((u, v, mode.draw(&mut rng)));
            }
        }
    }
    GainGraph::new(n, edges).expect("distinct pairs")
}

/// Gain the cycle `C_n` must carry to have type `t`.
fn target_cycle_gain(n: usize, t: CycleType) -> Gain {
    // i^n = (-1)^{n/2} for even n; i^{n-1} = (-1)^{(n-1)/2} for odd n.
    let base = if n % 2 == 0 { n } else { n - 1 } as i64;
    let offset = match t {
        CycleType::A | CycleType::C => 0,
        CycleType::B | CycleType::D => 2,
        CycleType::E => 1,
    };
    Gain::quarter_turns(base + offset)
}

/// `C_n` on `0..n` with every gain `1` except the closing edge `n-1 -> 0`,
/// which makes the cycle gain hit type `t`.
pub fn build_typed_cycle(n: usize, t: CycleType) -> Result<GainGraph, GenerateError> {
    t.check_length(n)?;
    let mut gains = vec![Gain::ONE; n];
    gains[n - 1] = target_cycle_gain(n, t);
    Ok(crate::graph::named::cycle_with_gains(&gains))
}

/// Recipe for a graph attaining one of the four bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub kind: OptimalityKind,
    /// Cycle lengths: all even for the lower kinds, all odd for the upper.
    pub cycle_lengths: Vec<usize>,
    /// Sizes of the trees joining the cycles.
    pub tree_sizes: Vec<usize>,
    pub seed: u64,
    pub gain_mode: GainMode,
    /// Randomly relabel the vertices of the result.
    pub shuffle_labels: bool,
}

impl FamilySpec {
    pub fn new(kind: OptimalityKind, cycle_lengths: Vec<usize>, tree_sizes: Vec<usize>, seed: u64) -> FamilySpec {
        FamilySpec { kind, cycle_lengths, tree_sizes, seed, gain_mode: GainMode::FourthRoots, shuffle_labels: false }
    }

    pub fn validate(&self) -> Result<(), GenerateError> {
        if self.cycle_lengths.is_empty() && self.tree_sizes.is_empty() {
            return Err(GenerateError::InvalidSpec("no cycles and no trees".into()));
        }
        if self.tree_sizes.contains(&0) {
            return Err(GenerateError::InvalidSpec("tree sizes must be positive".into()));
        }
        let t = self.kind.required_type();
        for &n in &self.cycle_lengths {
            t.check_length(n)?;
        }
        Ok(())
    }
}

pub const EXTREMAL_RETRIES: usize = 100;

/// A connected graph whose cycles are vertex-disjoint, all of the type
/// `spec.kind` requires, and with `m(T_G) = m(G - O(G))`.
///
/// Pieces are joined in random order. Each cycle hangs off a tree vertex
/// saturated by every maximum matching of the contracted graph built so
/// far; trees join earlier pieces through a vertex saturated by every
/// maximum matching of the tree itself when one exists. The result is
/// verified directly and rebuilt with a fresh stream on failure.
pub fn build_extremal(spec: &FamilySpec) -> Result<GainGraph, GenerateError> {
    spec.validate()?;
    for attempt in 0..EXTREMAL_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(attempt as u64);
        let g = assemble(spec, &mut rng);
        if g.is_connected() && Profile::new(&g).structural(spec.kind) {
            return Ok(if spec.shuffle_labels {
                let mut perm: Vec<usize> = (0..g.order()).collect();
                perm.shuffle(&mut rng);
                g.permute(&perm)
            } else {
                g
            });
        }
    }
    Err(GenerateError::RetriesExhausted(EXTREMAL_RETRIES))
}

enum Piece {
    Cycle(usize),
    Tree(usize),
}

fn random_tree<R: Rng>(size: usize, mode: GainMode, rng: &mut R) -> GainGraph {
    let edges: Vec<_> = (1..size).map(|v| (rng.gen_range(0..v), v, mode.draw(rng))).collect();
    GainGraph::new(size, edges).expect("tree edges")
}

/// Cycle gains drawn from `mode` on all but one edge, which fixes the product.
fn random_typed_cycle<R: Rng>(n: usize, t: CycleType, mode: GainMode, rng: &mut R) -> GainGraph {
    let mut gains: Vec<Gain> = (0..n - 1).map(|_| mode.draw(rng)).collect();
    let partial = gains.iter().fold(Gain::ONE, |acc, &g| acc * g);
    gains.push(target_cycle_gain(n, t) * partial.conj());
    crate::graph::named::cycle_with_gains(&gains)
}

fn assemble<R: Rng>(spec: &FamilySpec, rng: &mut R) -> GainGraph {
    let t = spec.kind.required_type();
    let mut pieces: Vec<Piece> = spec
        .cycle_lengths
        .iter()
        .map(|&n| Piece::Cycle(n))
        .chain(spec.tree_sizes.iter().map(|&s| Piece::Tree(s)))
        .collect();
    pieces.shuffle(rng);
    // Cycles need a tree vertex to hang from, so lead with a tree if any.
    if let Some(first_tree) = pieces.iter().position(|p| matches!(p, Piece::Tree(_))) {
        pieces.swap(0, first_tree);
    }

    let mut g = GainGraph::empty(0);
    let mut tree_vertices: Vec<usize> = Vec::new();
    let mut cycle_vertices: Vec<usize> = Vec::new();
    for piece in pieces {
        let shift = g.order();
        match piece {
            Piece::Tree(size) => {
                let tree = random_tree(size, spec.gain_mode, rng);
                let inner: Vec<usize> = (0..size).filter(|&v| every_max_matching_saturates(&tree, v).unwrap()).collect();
                let local = match inner.choose(rng) {
                    Some(&v) => v,
                    None => rng.gen_range(0..size),
                };
                let joined = g.disjoint_union(&tree);
                let anchor = tree_vertices.choose(rng).or(cycle_vertices.choose(rng)).copied();
                g = match anchor {
                    Some(a) => joined.with_edge(a, shift + local, spec.gain_mode.draw(rng)).expect("new edge"),
                    None => joined,
                };
                tree_vertices.extend(shift..shift + size);
            }
            Piece::Cycle(n) => {
                let cycle = random_typed_cycle(n, t, spec.gain_mode, rng);
                let anchor = saturated_tree_vertex(&g, &tree_vertices, rng)
                    .or_else(|| tree_vertices.choose(rng).copied())
                    .or_else(|| cycle_vertices.choose(rng).copied());
                let joined = g.disjoint_union(&cycle);
                let on_cycle = shift + rng.gen_range(0..n);
                g = match anchor {
                    Some(a) => joined.with_edge(a, on_cycle, spec.gain_mode.draw(rng)).expect("new edge"),
                    None => joined,
                };
                cycle_vertices.extend(shift..shift + n);
            }
        }
    }
    g
}

/// A tree vertex saturated by every maximum matching of the current `T_G`.
fn saturated_tree_vertex<R: Rng>(g: &GainGraph, tree_vertices: &[usize], rng: &mut R) -> Option<usize> {
    let cs = cycle_structure(g);
    let contracted = cs.contracted.as_ref()?;
    let candidates: Vec<usize> = tree_vertices
        .iter()
        .copied()
        .filter(|&v| every_max_matching_saturates(contracted, cs.contraction[v]).unwrap())
        .collect();
    candidates.choose(rng).copied()
}

/// How many gain assignments each underlying graph receives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AssignmentPolicy {
    /// Every assignment when `|E| · log2|gain set| <= 16`, otherwise a
    /// sample of 64.
    Auto,
    /// Every assignment.
    All,
    /// A seeded sample of this many distinct assignments (or all of them
    /// when there are fewer).
    Sample(usize),
}

pub const MAX_ENUMERATION_ORDER: usize = 7;
const AUTO_BITS: f64 = 16.0;
const AUTO_SAMPLE: usize = 64;

/// Exhaustive enumeration of labeled simple graphs with gains from a finite set.
///
/// Underlying graphs on `n` vertices are indexed by a bitmask over the pairs
/// `(u, v)`, `u < v`, in lexicographic order. Sampled assignments depend only
/// on the seed and the mask, so any range of masks can be processed
/// independently.
#[derive(Clone, Debug)]
pub struct Enumeration {
    order: usize,
    gain_set: Vec<Gain>,
    connected_only: bool,
    policy: AssignmentPolicy,
    seed: u64,
}

impl Enumeration {
    pub fn new(order: usize, gain_set: &[Gain]) -> Result<Enumeration, GenerateError> {
        if order > MAX_ENUMERATION_ORDER {
            return Err(GenerateError::BoundExceeded(format!("order {order} exceeds {MAX_ENUMERATION_ORDER}")));
        }
        let mut gains: Vec<Gain> = Vec::new();
        for &g in gain_set {
            if !gains.iter().any(|h| h.approx_eq(g, crate::gain::SNAP_TOLERANCE)) {
                gains.push(g);
            }
        }
        if gains.is_empty() {
            return Err(GenerateError::InvalidSpec("empty gain set".into()));
        }
        Ok(Enumeration { order, gain_set: gains, connected_only: false, policy: AssignmentPolicy::Auto, seed: 0 })
    }

    pub fn connected_only(mut self, yes: bool) -> Enumeration {
        self.connected_only = yes;
        self
    }

    pub fn policy(mut self, policy: AssignmentPolicy) -> Enumeration {
        self.policy = policy;
        self
    }

    pub fn seed(mut self, seed: u64) -> Enumeration {
        self.seed = seed;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.order).flat_map(|u| (u + 1..self.order).map(move |v| (u, v))).collect()
    }

    /// `2^(n(n-1)/2)`.
    pub fn mask_count(&self) -> u64 {
        1u64 << (self.order * self.order.saturating_sub(1) / 2)
    }

    /// The unit-gain underlying graph for `mask`, unfiltered.
    pub fn underlying(&self, mask: u64) -> GainGraph {
        let edges = self
            .pairs()
            .into_iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, (u, v))| (u, v, Gain::ONE));
        GainGraph::new(self.order, edges).expect("distinct pairs")
    }

    /// Every emitted gain graph whose underlying graph is `mask`.
    pub fn graphs_for_mask(&self, mask: u64) -> Vec<GainGraph> {
        let base = self.underlying(mask);
        if self.connected_only && !base.is_connected() {
            return Vec::new();
        }
        let edges: Vec<(usize, usize)> = base.edges().iter().map(|e| (e.u, e.v)).collect();
        let k = self.gain_set.len();
        let total = (k as u128).checked_pow(edges.len() as u32);
        let sample = match self.policy {
            AssignmentPolicy::All => None,
            AssignmentPolicy::Sample(s) => Some(s),
            AssignmentPolicy::Auto => {
                (edges.len() as f64 * (k as f64).log2() > AUTO_BITS).then_some(AUTO_SAMPLE)
            }
        };
        let build = |digits: &[usize]| {
            let gained = edges.iter().zip(digits).map(|(&(u, v), &d)| (u, v, self.gain_set[d]));
            GainGraph::new(self.order, gained).expect("distinct pairs")
        };
        match (sample, total) {
            (Some(s), total) if total.map_or(true, |t| t > s as u128) => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(mask);
                let mut seen = BTreeSet::new();
                let mut out = Vec::with_capacity(s);
                while out.len() < s {
                    let digits: Vec<usize> = (0..edges.len()).map(|_| rng.gen_range(0..k)).collect();
                    if seen.insert(digits.clone()) {
                        out.push(build(&digits));
                    }
                }
                out
            }
            _ => {
                let total = total.expect("fits when enumerating all") as usize;
                (0..total)
                    .map(|mut index| {
                        let digits: Vec<usize> = (0..edges.len())
                            .map(|_| {
                                let d = index % k;
                                index /= k;
                                d
                            })
                            .collect();
                        build(&digits)
                    })
                    .collect()
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = GainGraph> + '_ {
        (0..self.mask_count()).flat_map(move |mask| self.graphs_for_mask(mask))
    }
}

/// All labeled simple graphs on exactly `n` vertices with gains from
/// `gain_set`, under the default assignment policy.
pub fn enumerate_graphs(n: usize, gain_set: &[Gain], connected_only: bool) -> Result<Vec<GainGraph>, GenerateError> {
    Ok(Enumeration::new(n, gain_set)?.connected_only(connected_only).iter().collect())
}

/// Named gain sets accepted on the command line.
pub fn parse_gain_set(s: &str) -> Result<Vec<Gain>, String> {
    match s.to_ascii_lowercase().replace('-', "_").as_str() {
        "ones" | "one" | "simple" | "all_ones" => return Ok(vec![Gain::ONE]),
        "signed" | "pm1" => return Ok(vec![Gain::ONE, Gain::MINUS_ONE]),
        "fourth_roots" | "gaussian" => return Ok(vec![Gain::ONE, Gain::MINUS_ONE, Gain::I, Gain::MINUS_I]),
        _ => {}
    }
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(',')
        .map(|tok| match crate::format::parse_gain(tok.trim())? {
            crate::gain::GainSpec::Token(g) => Ok(g),
            other => other.to_gain().map_err(|e| e.to_string()),
        })
        .collect::<Result<Vec<_>, String>>()
        .and_then(|v| if v.is_empty() { Err("empty gain set".into()) } else { Ok(v) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::to_text;
    use crate::theorems::{check_spectral, classify_cycle, DEFAULT_RE_TOL};

    #[test]
    fn random_graph_edge_cases_and_determinism() {
        assert_eq!(random_gain_graph(5, 0.0, GainMode::FourthRoots, 3).size(), 0);
        let k4 = random_gain_graph(4, 1.0, GainMode::AllOnes, 3);
        assert_eq!(k4.size(), 6);
        assert!(k4.edges().iter().all(|e| e.gain == Gain::ONE));
        let a = random_gain_graph(8, 0.4, GainMode::FourthRoots, 42);
        let b = random_gain_graph(8, 0.4, GainMode::FourthRoots, 42);
        assert_eq!(to_text(&a), to_text(&b));
        assert!(!random_gain_graph(8, 0.5, GainMode::UniformAngle, 1).is_exact());
    }

    #[test]
    fn typed_cycles_classify_back() {
        for n in 3..=12 {
            for t in CycleType::ALL {
                match build_typed_cycle(n, t) {
                    Ok(g) => {
                        let cyc: Vec<usize> = (0..n).collect();
                        assert_eq!(classify_cycle(&g, &cyc, DEFAULT_RE_TOL).unwrap(), t);
                    }
                    Err(_) => assert_ne!(n % 2 == 0, t.for_even()),
                }
            }
        }
        let c3e = build_typed_cycle(3, CycleType::E).unwrap();
        assert_eq!(c3e.gain(2, 0), Some(Gain::MINUS_I));
        let c3c = build_typed_cycle(3, CycleType::C).unwrap();
        assert_eq!(c3c.gain(2, 0), Some(Gain::MINUS_ONE));
    }

    #[test]
    fn extremal_examples() {
        let g = build_extremal(&FamilySpec::new(OptimalityKind::PLower, vec![4], vec![2], 1)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        let g = build_extremal(&FamilySpec::new(OptimalityKind::PUpper, vec![3, 5], vec![3], 7)).unwrap();
        assert!(check_spectral(&g, OptimalityKind::PUpper).unwrap());
        let g = build_extremal(&FamilySpec::new(OptimalityKind::NUpper, vec![3], vec![], 1)).unwrap();
        assert_eq!(g.order(), 3);
        assert!(check_spectral(&g, OptimalityKind::NUpper).unwrap());
    }

    #[test]
    fn extremal_rejects_bad_specs() {
        let parity = FamilySpec::new(OptimalityKind::PLower, vec![3], vec![], 1);
        assert!(matches!(build_extremal(&parity), Err(GenerateError::Theorem(_))));
        let empty = FamilySpec::new(OptimalityKind::PLower, vec![], vec![], 1);
        assert!(matches!(build_extremal(&empty), Err(GenerateError::InvalidSpec(_))));
        let cycles_only = FamilySpec::new(OptimalityKind::PLower, vec![4, 4], vec![], 1);
        assert_eq!(build_extremal(&cycles_only), Err(GenerateError::RetriesExhausted(EXTREMAL_RETRIES)));
    }

    #[test]
    fn enumeration_counts() {
        let ones = [Gain::ONE];
        assert_eq!(enumerate_graphs(2, &ones, false).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3, &ones, true).unwrap().len(), 4);
        let signed = [Gain::ONE, Gain::MINUS_ONE];
        assert_eq!(enumerate_graphs(3, &signed, true).unwrap().len(), 20);
        for n in 0..=5 {
            let e = Enumeration::new(n, &ones).unwrap();
            assert_eq!(e.iter().count() as u64, 1u64 << (n * n.saturating_sub(1) / 2));
        }
        assert!(matches!(Enumeration::new(8, &ones), Err(GenerateError::BoundExceeded(_))));
    }

    #[test]
    fn sampling_is_seeded_and_distinct() {
        let gaussian = parse_gain_set("fourth_roots").unwrap();
        let e = Enumeration::new(5, &gaussian).unwrap().seed(9);
        let full = e.pairs().len() as u64;
        let mask = (1u64 << full) - 1;
        let a: Vec<String> = e.graphs_for_mask(mask).iter().map(to_text).collect();
        let b: Vec<String> = e.graphs_for_mask(mask).iter().map(to_text).collect();
        assert_eq!(a.len(), 64);
        assert_eq!(a, b);
        assert_eq!(a.iter().collect::<BTreeSet<_>>().len(), 64);
        // Three edges at two bits each fit under the threshold: all 64 assignments.
        assert_eq!(e.graphs_for_mask(0b111).len(), 64);
    }

    #[test]
    fn gain_set_parsing() {
        assert_eq!(parse_gain_set("{+1,-1}").unwrap(), vec![Gain::ONE, Gain::MINUS_ONE]);
        assert_eq!(parse_gain_set("signed").unwrap().len(), 2);
        assert!(parse_gain_set("{+2}").is_err());
    }
}
