//! Check candidate edge sets with both verifiers and show the
//! counterexample frame when one fails.

use hexforce::families::{construct_cfs, generate, FamilySpec};
use hexforce::forcing::{
    first_unhit_frame, is_complete_forcing_set_def, is_complete_forcing_set_nice,
};
use hexforce::hexgrid::format_edge_set;

fn main() {
    let spec = FamilySpec::Parallelogram { p: 2, q: 2 };
    let hs = generate(&spec).unwrap().system;

    let good = construct_cfs(&spec).unwrap();
    println!(
        "construction of size {}: nice-verifier {}, definitional {}",
        good.len(),
        is_complete_forcing_set_nice(&hs, &good).unwrap(),
        is_complete_forcing_set_def(&hs, &good).unwrap()
    );

    // Drop one edge and watch the witness appear.
    let mut bad = good.clone();
    let dropped = *bad.iter().next().unwrap();
    bad.remove(&dropped);
    println!("\nafter removing {dropped}:");
    match first_unhit_frame(&hs, &bad).unwrap() {
        Some(w) => {
            println!("unhit frame of a {}-cycle:", w.cycle.len());
            print!("{}", format_edge_set(&w.frame));
        }
        None => println!("still complete"),
    }
}
