//! End-to-end acceptance gate. Each test covers one numbered criterion and
//! prints a single `criterion N: PASS` line on success (visible with
//! `--nocapture`); a failed assertion fails the test and suppresses the line.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hexforce::bounds::{
    cf_by_decomposition, dual_subgraphs, edge_class_partition, edge_cover_number,
    lower_bound_matching, normal_components,
};
use hexforce::ecut::{is_ecut, is_ecut_dual};
use hexforce::families::{certify, construct_cfs, formula_cf, generate, FamilySpec, Verdict};
use hexforce::forcing::{
    is_complete_forcing_set_def, is_complete_forcing_set_nice, min_complete_forcing,
};
use hexforce::hexgrid::{build_hexsystem, EdgeSet, HexCenter, HexSystem};
use hexforce::matchings::Graph;

fn hs(centers: &[(i64, i64)]) -> HexSystem {
    let set: BTreeSet<HexCenter> = centers.iter().map(|&(x, y)| HexCenter::new(x, y)).collect();
    build_hexsystem(&set).unwrap()
}

fn parallelogram(p: usize, q: usize) -> FamilySpec {
    FamilySpec::Parallelogram { p, q }
}

/// The full construction matrix exercised by criteria 2, 3, 6 and 9.
fn construction_matrix() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for p in 1..=6 {
        for q in 1..=6 {
            specs.push(parallelogram(p, q));
        }
    }
    for p in 2..=4 {
        specs.push(FamilySpec::Hexagon { p });
    }
    for p in [3, 5] {
        for q in 2..=5 {
            specs.push(FamilySpec::OblateRectangle { p, q });
            specs.push(FamilySpec::ProlateRectangle { p, q });
        }
    }
    specs
}

#[test]
fn criterion_1_exact_parallelogram_minima() {
    for (p, q) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)] {
        let layout = generate(&parallelogram(p, q)).unwrap();
        let (cf, witness) = min_complete_forcing(&layout.system).unwrap();
        assert_eq!(cf, p * q + 1, "parallelogram p={p} q={q}");
        assert_eq!(
            is_complete_forcing_set_nice(&layout.system, &witness),
            Ok(true),
            "parallelogram p={p} q={q}"
        );
    }
    println!("criterion 1: PASS - exact minima equal p*q + 1 on six small parallelograms");
}

#[test]
fn criterion_2_constructions_verify_at_formula_size() {
    let specs = construction_matrix();
    for spec in &specs {
        let layout = generate(spec).unwrap();
        let s = construct_cfs(spec).unwrap();
        assert_eq!(s.len(), formula_cf(spec).unwrap(), "{spec}");
        assert_eq!(
            is_complete_forcing_set_nice(&layout.system, &s),
            Ok(true),
            "{spec}"
        );
    }
    println!(
        "criterion 2: PASS - {} constructions verified complete at their formula sizes",
        specs.len()
    );
}

#[test]
fn criterion_3_certificates_without_search() {
    let specs = construction_matrix();
    for spec in &specs {
        let report = certify(spec).unwrap();
        assert_eq!(report.verdict, Verdict::Optimal, "{spec}\n{report}");
        assert_eq!(report.construction_size, report.lower_bound, "{spec}");
    }
    println!(
        "criterion 3: PASS - certify returned OPTIMAL for all {} specs without exact search",
        specs.len()
    );
}

#[test]
fn criterion_4_verifier_equivalence() {
    // Exhaustive on the single hexagon.
    let single = hs(&[(0, 0)]);
    for mask in 0u32..(1 << 6) {
        let s: EdgeSet = single
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| *e)
            .collect();
        assert_eq!(
            is_complete_forcing_set_nice(&single, &s),
            is_complete_forcing_set_def(&single, &s),
            "subset mask {mask:#b}"
        );
    }
    // Random subsets of three small parallelograms.
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut checked = 0usize;
    for system in [hs(&[(0, 0), (2, 0)]), generate(&parallelogram(1, 3)).unwrap().system, generate(&parallelogram(2, 2)).unwrap().system] {
        for _ in 0..500 {
            let s: EdgeSet = system
                .edges()
                .iter()
                .filter(|_| rng.gen_bool(0.5))
                .copied()
                .collect();
            assert_eq!(
                is_complete_forcing_set_nice(&system, &s),
                is_complete_forcing_set_def(&system, &s),
                "random subset {s:?}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 1500);
    println!("criterion 4: PASS - both verifiers agree on 64 exhaustive and 1500 random subsets");
}

#[test]
fn criterion_5_ecut_definitions_agree() {
    let mut checked = 0usize;
    for system in [hs(&[(0, 0)]), hs(&[(0, 0), (2, 0)])] {
        let edges = system.edges();
        let m = edges.len();
        for mask in 0u32..(1 << m) {
            if mask.count_ones() > 4 {
                continue;
            }
            let d: EdgeSet = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| *e)
                .collect();
            assert_eq!(is_ecut(&system, &d), is_ecut_dual(&system, &d), "subset {d:?}");
            checked += 1;
        }
    }
    println!(
        "criterion 5: PASS - elementary-cut and dual-cycle tests agree on {checked} subsets"
    );
}

#[test]
fn criterion_6_gallai_identity_on_dual_subgraphs() {
    /// Brute-force minimum edge cover by increasing subset size.
    fn brute_cover(g: &Graph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        assert!(m <= 20, "brute force needs a small edge set, got {m}");
        (0..=m)
            .find(|&k| {
                (0u64..(1 << m)).any(|mask| {
                    if mask.count_ones() as usize != k {
                        return false;
                    }
                    let mut covered = vec![false; g.vertex_count()];
                    for (i, &(u, v)) in edges.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            covered[u] = true;
                            covered[v] = true;
                        }
                    }
                    covered.iter().all(|&c| c)
                })
            })
            .expect("a cover exists without isolated vertices")
    }

    let mut compared = 0usize;
    for spec in construction_matrix() {
        let layout = generate(&spec).unwrap();
        let partition = edge_class_partition(&layout.system);
        for (_, g) in dual_subgraphs(&layout.system, &partition) {
            if g.vertex_count() > 10 || g.edges().len() > 20 {
                continue;
            }
            if (0..g.vertex_count()).any(|v| g.degree(v) == 0) {
                continue;
            }
            assert_eq!(edge_cover_number(&g).unwrap(), brute_cover(&g), "{spec}");
            compared += 1;
        }
    }
    assert!(compared >= 50, "expected many small dual subgraphs, got {compared}");
    println!("criterion 6: PASS - edge cover equals |V| - nu on {compared} dual subgraphs");
}

#[test]
fn criterion_7_decomposition_additivity() {
    let spec = FamilySpec::ProlateRectangle { p: 3, q: 2 };
    let layout = generate(&spec).unwrap();
    let (exact, _) = min_complete_forcing(&layout.system).unwrap();
    let (decomposed, witness) = cf_by_decomposition(&layout.system).unwrap();
    assert_eq!(exact, 6);
    assert_eq!(decomposed, 6);
    assert_eq!(
        is_complete_forcing_set_nice(&layout.system, &witness),
        Ok(true)
    );

    let parts = normal_components(&layout.system).unwrap();
    assert_eq!(parts.len(), 2);
    let reference: Vec<(i64, i64)> = generate(&parallelogram(1, 2))
        .unwrap()
        .system
        .centers()
        .iter()
        .map(|c| (c.cx, c.cy))
        .collect();
    for part in &parts {
        let mut centers: Vec<(i64, i64)> = part.centers().iter().map(|c| (c.cx, c.cy)).collect();
        let (dx, dy) = (
            centers[0].0 - reference[0].0,
            centers[0].1 - reference[0].1,
        );
        for c in &mut centers {
            *c = (c.0 - dx, c.1 - dy);
        }
        assert_eq!(centers, reference, "component is a translated 1x2 parallelogram");
    }
    println!("criterion 7: PASS - cf(prolate 3x2) = 6 both ways, two 1x2 parallelogram components");
}

/// Grows a catacondensed chain by attaching each new hexagon to the current
/// end, adjacent to exactly one existing hexagon.
fn random_catacondensed_chain(rng: &mut ChaCha8Rng, len: usize) -> HexSystem {
    'restart: loop {
        let mut centers: BTreeSet<HexCenter> = [HexCenter::new(0, 0)].into_iter().collect();
        let mut tail = HexCenter::new(0, 0);
        let mut attempts = 0;
        while centers.len() < len {
            attempts += 1;
            if attempts > 100 {
                continue 'restart;
            }
            let options = tail.neighbor_positions();
            let cand = options[rng.gen_range(0..options.len())];
            if centers.contains(&cand) {
                continue;
            }
            let touching = cand
                .neighbor_positions()
                .iter()
                .filter(|n| centers.contains(n))
                .count();
            if touching != 1 {
                continue;
            }
            centers.insert(cand);
            tail = cand;
        }
        let system = build_hexsystem(&centers).expect("chain attachment keeps the system valid");
        assert!(system.is_catacondensed());
        return system;
    }
}

#[test]
fn criterion_8_catacondensed_chains_meet_the_matching_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xCA7A);
    let mut chains = Vec::new();
    for _ in 0..10 {
        for len in 1..=6 {
            chains.push(random_catacondensed_chain(&mut rng, len));
        }
    }
    for chain in &chains {
        let (cf, _) = min_complete_forcing(chain).unwrap();
        assert_eq!(
            Ok(cf),
            lower_bound_matching(chain),
            "chain {:?}",
            chain.centers()
        );
    }
    println!(
        "criterion 8: PASS - exact minimum equals the class-matching bound on {} random chains",
        chains.len()
    );
}

#[test]
fn criterion_9_edge_class_partition_sanity() {
    let mut systems: Vec<HexSystem> = construction_matrix()
        .iter()
        .map(|spec| generate(spec).unwrap().system)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xCA7A);
    for len in 1..=6 {
        systems.push(random_catacondensed_chain(&mut rng, len));
    }
    for system in &systems {
        let partition = edge_class_partition(system);
        let slots: usize = partition.hexagons.iter().map(Vec::len).sum();
        assert_eq!(slots, 2 * system.hexagon_count());
        for &c in system.centers() {
            let owning = partition
                .hexagons
                .iter()
                .filter(|hexes| hexes.contains(&c))
                .count();
            assert_eq!(owning, 2, "hexagon {c:?} must sit in exactly two classes");
        }
    }
    println!(
        "criterion 9: PASS - frame classes assign every hexagon to exactly two of them on {} systems",
        systems.len()
    );
}
