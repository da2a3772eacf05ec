//! Enumerate the perfect matchings of small parallelograms and test which
//! sub-matchings force a given one.

use hexforce::families::{generate, FamilySpec};
use hexforce::hexgrid::EdgeSet;
use hexforce::matchings::{enumerate_perfect_matchings, is_forcing_set};

fn main() {
    for q in 1..=5 {
        let spec = FamilySpec::Parallelogram { p: 2, q };
        let hs = generate(&spec).unwrap().system;
        let matchings = enumerate_perfect_matchings(&hs);
        println!("{spec}: {} perfect matchings", matchings.len());
    }

    // Forcing within a single matching: the smallest subset that pins it down.
    let hs = generate(&FamilySpec::Parallelogram { p: 1, q: 2 }).unwrap().system;
    let matchings = enumerate_perfect_matchings(&hs);
    let m = &matchings[0];
    println!("\nfirst matching of the 1x2 parallelogram: {:?}", m.edges);
    for e in &m.edges {
        let f: EdgeSet = [*e].into_iter().collect();
        println!(
            "  {{{e}}} forces it: {}",
            is_forcing_set(&hs, m, &f).unwrap()
        );
    }
}
