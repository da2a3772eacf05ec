//! Certify the explicit constructions for a sweep of family members:
//! each certificate checks completeness and matches a lower bound, so no
//! exhaustive search is involved.

use hexforce::families::{certify, FamilySpec};

fn main() {
    let mut specs = vec![FamilySpec::Hexagon { p: 2 }, FamilySpec::Hexagon { p: 3 }];
    for p in 1..=4 {
        specs.push(FamilySpec::Parallelogram { p, q: 4 });
    }
    for q in 2..=4 {
        specs.push(FamilySpec::OblateRectangle { p: 3, q });
        specs.push(FamilySpec::ProlateRectangle { p: 3, q });
    }
    for spec in specs {
        let report = certify(&spec).unwrap();
        println!("{report}\n");
    }
}
