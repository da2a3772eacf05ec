//! Split a non-normal system into its normal components and recover its
//! complete forcing number additively.

use hexforce::bounds::{cf_by_decomposition, fixed_edges, normal_components};
use hexforce::families::{generate, FamilySpec};
use hexforce::forcing::min_complete_forcing;

fn main() {
    let spec = FamilySpec::ProlateRectangle { p: 5, q: 3 };
    let hs = generate(&spec).unwrap().system;

    let fixed = fixed_edges(&hs).unwrap();
    println!(
        "{spec}: {} fixed-single edges, normal: {}",
        fixed.fixed_single.len(),
        fixed.is_normal()
    );

    let parts = normal_components(&hs).unwrap();
    for (k, part) in parts.iter().enumerate() {
        let (cf, _) = min_complete_forcing(part).unwrap();
        println!("component {}: {} hexagons, cf = {cf}", k + 1, part.hexagon_count());
    }

    let (total, _) = cf_by_decomposition(&hs).unwrap();
    println!("cf of the whole system = {total}");
}
