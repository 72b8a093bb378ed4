//! Run the structural fact validators on one graph and list the verdicts.
//!
//! `cargo run --example structural_checks`

use std::fmt::Write;

use gain_inertia::generators::{build_extremal, FamilySpec};
use gain_inertia::theorems::lemmas::run_basic_checks;
use gain_inertia::theorems::run_lemma_checks;
use gain_inertia::{OptimalityKind, Verdict};

pub fn run_example() -> String {
    let spec = FamilySpec::new(OptimalityKind::NLower, vec![4, 6], vec![4], 11);
    let g = build_extremal(&spec).unwrap();
    let mut out = String::new();
    for r in run_basic_checks(&g).into_iter().chain(run_lemma_checks(&g)) {
        assert_ne!(r.verdict, Verdict::Fails, "{r:?}");
        writeln!(out, "{:<45} {:?}", r.subject, r.verdict).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
