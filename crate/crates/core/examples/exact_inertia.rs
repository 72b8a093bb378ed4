//! Exact inertia from the integer characteristic polynomial, next to the
//! floating-point Sturm count.
//!
//! `cargo run --example exact_inertia`

use std::fmt::Write;

use gain_inertia::graph::named::petersen;
use gain_inertia::spectral::{adjacency_matrix, char_poly_exact, default_zero_tol, inertia_exact, inertia_float};
use gain_inertia::generators::{random_gain_graph, GainMode};

pub fn run_example() -> String {
    let mut out = String::new();
    let graphs = [("petersen", petersen()), ("random signed", random_gain_graph(8, 0.5, GainMode::Signed, 7)), (
        "random fourth roots",
        random_gain_graph(8, 0.5, GainMode::FourthRoots, 7),
    )];
    for (name, g) in graphs {
        let poly = char_poly_exact(&g).expect("exact gains");
        let exact = inertia_exact(&g).unwrap();
        let float = inertia_float(&adjacency_matrix(&g), default_zero_tol(&g)).unwrap();
        assert_eq!(exact, float);
        writeln!(out, "{name}: coefficients (low to high) {:?}", poly.coefficients).unwrap();
        writeln!(out, "  zero roots {}, sign changes {}, inertia {exact:?}", poly.trailing_zeros(), poly.sign_changes())
            .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
