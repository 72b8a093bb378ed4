//! Generate graphs attaining each bound and confirm both sides of the
//! characterization.
//!
//! `cargo run --example extremal_family`

use std::fmt::Write;

use gain_inertia::format::to_text;
use gain_inertia::generators::{build_extremal, FamilySpec};
use gain_inertia::theorems::{check_spectral, check_structural};
use gain_inertia::{inertia, matching_number, OptimalityKind};

pub fn run_example() -> String {
    let mut out = String::new();
    for (k, kind) in OptimalityKind::ALL.into_iter().enumerate() {
        let lengths = if kind.is_lower() { vec![4, 6] } else { vec![3, 5] };
        let spec = FamilySpec::new(kind, lengths, vec![3, 2], 40 + k as u64);
        let g = build_extremal(&spec).expect("feasible spec");
        assert!(check_structural(&g, kind).unwrap() && check_spectral(&g, kind).unwrap());
        let i = inertia(&g);
        writeln!(
            out,
            "{kind}: order {}, m = {}, c = {}, (p, n) = ({}, {})",
            g.order(),
            matching_number(&g),
            g.cyclomatic_number(),
            i.positive,
            i.negative
        )
        .unwrap();
        if k == 0 {
            out.push_str(&to_text(&g));
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
