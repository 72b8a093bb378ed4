//! Build a cycle of every length and gain type and compare its inertia with
//! the closed form.
//!
//! `cargo run --example cycle_types`

use std::fmt::Write;

use gain_inertia::generators::build_typed_cycle;
use gain_inertia::theorems::{classify_cycle, cycle_inertia_closed_form, CycleType, DEFAULT_RE_TOL};
use gain_inertia::{inertia, GainGraph};

pub fn run_example() -> String {
    let mut out = String::from("n  type  gain  inertia (p, n, zero)\n");
    for n in 3..=8 {
        for t in CycleType::ALL.into_iter().filter(|t| t.for_even() == (n % 2 == 0)) {
            let g: GainGraph = build_typed_cycle(n, t).expect("matching parity");
            let cycle: Vec<usize> = (0..n).collect();
            assert_eq!(classify_cycle(&g, &cycle, DEFAULT_RE_TOL).unwrap(), t);
            let i = inertia(&g);
            assert_eq!(i, cycle_inertia_closed_form(n, t).unwrap());
            let gain = g.gain_of_cycle(&cycle).unwrap().token();
            writeln!(out, "{n:<2} {t:<5} {gain:<5} ({}, {}, {})", i.positive, i.negative, i.zero).unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
