//! Randomized properties of the formats and verifiers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use hexforce::forcing::{is_complete_forcing_set_nice, min_complete_forcing};
use hexforce::hexgrid::{
    build_hexsystem, format_edge_set, parse_edge_set, parse_hexsys, EdgeSet, HexCenter, HexSystem,
};

/// Candidate centers: a 3x3 parallelogram block.
fn block() -> Vec<HexCenter> {
    let mut cells = Vec::new();
    for i in 0i64..3 {
        for j in 0i64..3 {
            cells.push(HexCenter::new(2 * j + i, 3 * i));
        }
    }
    cells
}

fn center_subset() -> impl Strategy<Value = BTreeSet<HexCenter>> {
    let cells = block();
    proptest::collection::btree_set(0..cells.len(), 1..=cells.len())
        .prop_map(move |idx| idx.into_iter().map(|i| cells[i]).collect())
}

/// Subsets of the block that form a valid hexagonal system.
fn system() -> impl Strategy<Value = HexSystem> {
    center_subset().prop_filter_map("connected and simply connected", |centers| {
        build_hexsystem(&centers).ok()
    })
}

proptest! {
    #[test]
    fn hexsys_text_round_trips(hs in system()) {
        let text = hs.to_hexsys();
        let back = parse_hexsys(&text).unwrap();
        prop_assert_eq!(back.centers(), hs.centers());
        prop_assert_eq!(back.to_hexsys(), text);
    }

    #[test]
    fn edge_set_text_round_trips(hs in system(), mask in any::<u64>()) {
        let s: EdgeSet = hs
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << (i % 64)) != 0)
            .map(|(_, e)| *e)
            .collect();
        let text = format_edge_set(&s);
        prop_assert_eq!(parse_edge_set(&text).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn completeness_is_monotone(mask in any::<u32>(), extra in any::<u32>()) {
        let centers: BTreeSet<HexCenter> =
            [(0, 0), (2, 0), (1, 3), (3, 3)].map(|(x, y)| HexCenter::new(x, y)).into();
        let hs = build_hexsystem(&centers).unwrap();
        let pick = |bits: u32| -> EdgeSet {
            hs.edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| bits & (1 << (i % 32)) != 0)
                .map(|(_, e)| *e)
                .collect()
        };
        let s = pick(mask);
        if is_complete_forcing_set_nice(&hs, &s).unwrap() {
            let mut bigger = s.clone();
            bigger.extend(pick(extra));
            prop_assert!(is_complete_forcing_set_nice(&hs, &bigger).unwrap());
        }
    }

    #[test]
    fn minimum_witness_is_complete_and_irredundant(hs in system()) {
        prop_assume!(hs.hexagon_count() <= 4);
        let Ok((cf, witness)) = min_complete_forcing(&hs) else {
            return Ok(()); // no perfect matching; nothing to check
        };
        prop_assert_eq!(witness.len(), cf);
        prop_assert!(is_complete_forcing_set_nice(&hs, &witness).unwrap());
        for e in &witness {
            let mut smaller = witness.clone();
            smaller.remove(e);
            prop_assert!(!is_complete_forcing_set_nice(&hs, &smaller).unwrap());
        }
    }
}
