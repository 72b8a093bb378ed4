//! Cycle gain types, the inertia bounds in terms of matching and cyclomatic
//! numbers, the characterizations of graphs attaining them, and validators
//! for the supporting structural facts.

mod bounds;
pub(crate) mod cycles;
pub mod lemmas;
pub(crate) mod optimality;
mod report;
mod subgroup;

pub use bounds::check_bounds;
pub use cycles::{classify_cycle, cycle_inertia_closed_form, CycleType, DEFAULT_RE_TOL};
pub use lemmas::run_lemma_checks;
pub use optimality::{
    check_spectral, check_structural, is_optimal, verify_characterization, OptimalityKind, Profile,
};
pub use report::{TheoremReport, Verdict, Witness};
pub use subgroup::{gain_subgroup, GainSubgroup};
