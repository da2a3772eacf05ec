//! Build a small hexagonal system by hand and poke at its anatomy:
//! vertices, edges, hexagon roles, frames, and the dual graph.

use std::collections::BTreeSet;

use hexforce::hexgrid::{build_hexsystem, HexCenter, HexRole};

fn main() {
    // A 2x2 parallelogram, centers given directly in lattice coordinates.
    let centers: BTreeSet<HexCenter> = [(0, 0), (2, 0), (1, 3), (3, 3)]
        .map(|(x, y)| HexCenter::new(x, y))
        .into();
    let hs = build_hexsystem(&centers).unwrap();

    println!(
        "{} hexagons, {} vertices, {} edges",
        hs.hexagon_count(),
        hs.vertices().len(),
        hs.edges().len()
    );

    let h = HexCenter::new(0, 0);
    let (f1, f2) = hs.hexagon_frames(h).unwrap();
    println!("\nhexagon {h:?}");
    for role in [HexRole::L, HexRole::Tl, HexRole::Tr, HexRole::R, HexRole::Br, HexRole::Bl] {
        let e = hs.hexagon_edge(h, role).unwrap();
        let frame = if f1.contains(&e) {
            1
        } else {
            assert!(f2.contains(&e));
            2
        };
        let side = if hs.is_peripheral(&e).unwrap() { "peripheral" } else { "inner" };
        println!("  {role:?}: {e} (frame {frame}, {side})");
    }

    let dual = hs.dual_graph();
    println!(
        "\ndual graph: {} vertices (including the exterior), {} edges",
        dual.vertex_count(),
        dual.edges().len()
    );

    println!("\nserialized:\n{}", hs.to_hexsys());
}
