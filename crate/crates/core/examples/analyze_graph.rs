//! Parse a `gaingraph v1` text and print the analysis report as JSON.
//!
//! `cargo run --example analyze_graph`

use gain_inertia::cli::analyze;
use gain_inertia::format::parse;

const TEXT: &str = "\
gaingraph v1
n 6
# a triangle with gain -1 and a path hanging off it
e 0 1 +1
e 1 2 +1
e 2 0 -1
e 0 3 +1
e 3 4 +i
e 4 5 +1
";

pub fn run_example() -> String {
    let g = parse(TEXT).expect("valid text");
    let report = analyze(&g);
    assert!(report.failures().is_empty());
    serde_json::to_string_pretty(&report).expect("serializable")
}

#[allow(dead_code)]
fn main() {
    println!("{}", run_example());
}
