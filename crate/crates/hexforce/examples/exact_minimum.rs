//! Compute exact minimum complete forcing sets of small systems, listing
//! the nice cycles that act as constraints.

use hexforce::families::{generate, FamilySpec};
use hexforce::forcing::{enumerate_nice_cycles, min_complete_forcing};
use hexforce::hexgrid::format_edge_set;

fn main() {
    for (p, q) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let spec = FamilySpec::Parallelogram { p, q };
        let hs = generate(&spec).unwrap().system;
        let cycles = enumerate_nice_cycles(&hs).unwrap();
        let (cf, witness) = min_complete_forcing(&hs).unwrap();
        println!("{spec}: {} nice cycles, cf = {cf}", cycles.len());
        print!("{}", indent(&format_edge_set(&witness)));
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
