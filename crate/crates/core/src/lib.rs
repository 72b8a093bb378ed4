//! Complex unit gain graphs: inertia indices of the Hermitian adjacency
//! matrix, matching and cyclomatic numbers, cycle gain types, and checkers
//! for the bounds `m - c <= p, n <= m + c` and the graphs attaining them.
//!
//! The crate is organized bottom-up:
//!
//! - [`gain`], [`graph`], [`blocks`]: the data model and combinatorial structure.
//! - [`spectral`]: adjacency matrices and inertia on two independent routes.
//! - [`matching`]: blossom matching, a brute-force oracle, and matching predicates.
//! - [`theorems`]: cycle types, bound and optimality checkers, lemma validators.
//! - [`generators`]: random, typed, extremal, and enumerated graph families.
//! - [`format`]: the `gaingraph v1` text format.
//! - [`cli`]: the commands behind the `gain-inertia` binary.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod blocks;
pub mod cli;
pub mod error;
pub mod format;
pub mod gain;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod spectral;
pub mod theorems;

pub use blocks::{block_decomposition, cycle_structure, CycleStructure};
pub use gain::{Gain, GainSpec};
pub use graph::{build_graph, GainGraph};
pub use matching::{matching_number, max_matching};
pub use spectral::{inertia, Inertia};
pub use theorems::{CycleType, OptimalityKind, TheoremReport, Verdict};

use serde::Serialize;

/// Combinatorial invariants of a graph's underlying simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub cyclomatic: usize,
    pub matching: usize,
    pub pendant_vertices: Vec<usize>,
    pub quasi_pendant_vertices: Vec<usize>,
}

impl GraphInvariants {
    pub fn of(g: &GainGraph) -> GraphInvariants {
        GraphInvariants {
            vertex_count: g.order(),
            edge_count: g.size(),
            component_count: g.component_count(),
            cyclomatic: g.cyclomatic_number(),
            matching: matching_number(g),
            pendant_vertices: g.pendant_vertices(),
            quasi_pendant_vertices: g.quasi_pendant_vertices(),
        }
    }
}
