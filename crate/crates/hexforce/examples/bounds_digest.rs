//! Print the bounds digest for a few systems: fixed edges, normality,
//! edge classes, and the lower/upper bounds they yield.

use hexforce::bounds::bounds_report;
use hexforce::families::{generate, FamilySpec};

fn main() {
    let specs = [
        FamilySpec::Parallelogram { p: 2, q: 2 },
        FamilySpec::Hexagon { p: 2 },
        FamilySpec::ProlateRectangle { p: 3, q: 2 },
    ];
    for spec in specs {
        let hs = generate(&spec).unwrap().system;
        println!("=== {spec} ===");
        println!("{}", bounds_report(&hs).unwrap());
    }
}
