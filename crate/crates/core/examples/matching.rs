//! Maximum matchings with the blossom algorithm, checked against brute
//! force, plus the saturation and avoidance predicates.
//!
//! `cargo run --example matching`

use std::fmt::Write;

use gain_inertia::graph::named::{cycle, path, petersen};
use gain_inertia::matching::{every_max_matching_saturates, exists_max_matching_avoiding, matching_number_bruteforce};
use gain_inertia::{max_matching, Gain};

pub fn run_example() -> String {
    let mut out = String::new();
    let g = petersen();
    let m = max_matching(&g);
    assert_eq!(m.size(), matching_number_bruteforce(&g).unwrap());
    writeln!(out, "petersen: perfect matching {:?}", m.edges).unwrap();

    // Odd cycle with a pendant path: the path end is not always saturated.
    let lollipop = cycle(5).disjoint_union(&path(2)).with_edge(0, 5, Gain::ONE).unwrap();
    let m = max_matching(&lollipop);
    writeln!(out, "C5 + P2: m = {}, matching {:?}", m.size(), m.edges).unwrap();
    for v in [0, 5, 6] {
        let always = every_max_matching_saturates(&lollipop, v).unwrap();
        writeln!(out, "  vertex {v} saturated by every maximum matching: {always}").unwrap();
    }
    let avoid = exists_max_matching_avoiding(&lollipop, &[(0, 5)]).unwrap();
    writeln!(out, "  some maximum matching avoids 0-5: {avoid}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
