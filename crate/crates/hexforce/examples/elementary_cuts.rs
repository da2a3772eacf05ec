//! Elementary cuts: test the two equivalent definitions, check a cut cover,
//! and assemble a complete forcing set from it.

use hexforce::ecut::{cfs_from_ecuts, is_ecut, is_ecut_dual, is_ecut_cover, parallel_class_bound};
use hexforce::families::{generate, FamilySpec};
use hexforce::forcing::is_complete_forcing_set_nice;
use hexforce::hexgrid::{EdgeSet, HexRole};

fn main() {
    // A single row of three hexagons.
    let layout = generate(&FamilySpec::Parallelogram { p: 1, q: 3 }).unwrap();
    let hs = &layout.system;
    let edge = |col, role| layout.system.hexagon_edge(layout.hexagon(1, col).unwrap(), role).unwrap();

    // The four vertical edges form one elementary cut crossing the row.
    let vertical: EdgeSet = [
        edge(1, HexRole::L),
        edge(1, HexRole::R),
        edge(2, HexRole::R),
        edge(3, HexRole::R),
    ]
    .into_iter()
    .collect();
    println!(
        "vertical cut: is_ecut {} (dual-cycle test agrees: {})",
        is_ecut(hs, &vertical),
        is_ecut(hs, &vertical) == is_ecut_dual(hs, &vertical)
    );

    // Each hexagon's top-left/bottom-right pair is a two-edge cut; together
    // the three pairs cover every face.
    let cuts: Vec<EdgeSet> = (1..=3)
        .map(|col| [edge(col, HexRole::Tl), edge(col, HexRole::Br)].into_iter().collect())
        .collect();
    println!("three short cuts cover every face: {:?}", is_ecut_cover(hs, &cuts));
    let s = cfs_from_ecuts(hs, &cuts).unwrap();
    println!(
        "their union ({} edges) is a complete forcing set: {}",
        s.len(),
        is_complete_forcing_set_nice(hs, &s).unwrap()
    );

    // A one-cut cover from the vertical class alone also works, but is larger
    // than necessary only when the class is not the smallest one.
    let (dir, class) = parallel_class_bound(hs).unwrap();
    println!("smallest direction class: {dir} with {} edges (upper bound on cf)", class.len());
    println!("single-cut cover: {:?}", is_ecut_cover(hs, &[vertical]));
}
