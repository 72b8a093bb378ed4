//! Check `m - c <= p, n <= m + c` on random gain graphs.
//!
//! `cargo run --example inertia_bounds`

use std::fmt::Write;

use gain_inertia::generators::{random_gain_graph, GainMode};
use gain_inertia::theorems::check_bounds;
use gain_inertia::{inertia, matching_number, Verdict};

pub fn run_example() -> String {
    let mut out = String::new();
    for mode in GainMode::ALL {
        let mut tight = 0;
        for seed in 0..200 {
            let g = random_gain_graph(9, 0.35, mode, seed);
            assert_eq!(check_bounds(&g).verdict, Verdict::Holds);
            let (m, c, i) = (matching_number(&g) as i64, g.cyclomatic_number() as i64, inertia(&g));
            let touches = [i.positive as i64, i.negative as i64].iter().any(|&x| x == m - c || x == m + c);
            tight += touches as usize;
        }
        writeln!(out, "{mode}: 200 graphs, bounds hold, {tight} attain a bound").unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
