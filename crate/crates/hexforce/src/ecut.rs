//! Elementary edge cuts, e-cut covers, and the cut-based sufficiency
//! pipeline for complete forcing sets.
//!
//! An elementary edge cut (e-cut) splits the system into exactly two
//! components with all cut edges meeting black vertices of one side (the
//! black bank) and white vertices of the other. The definitional test is the
//! source of truth; the dual-cycle form is an independent cross-check of the
//! same property through the dual graph.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::forcing::{self, NoPerfectMatching};
use crate::hexgrid::{Color, Direction, DualVertex, EdgeSet, HexSystem, Vertex};

/// The two banks of a valid e-cut, as full vertex sets of the two
/// components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcutBanks {
    pub black_bank: BTreeSet<Vertex>,
    pub white_bank: BTreeSet<Vertex>,
}

/// Components of `hs` after removing the edges of `d`, as a component id per
/// vertex id, plus the component count.
fn components_without(hs: &HexSystem, d: &[bool]) -> (Vec<usize>, usize) {
    let n = hs.vertices().len();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, ei) in &hs.adjacency()[v] {
                if !d[ei] && comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

fn edge_mask(hs: &HexSystem, d: &EdgeSet) -> Option<Vec<bool>> {
    let mut mask = vec![false; hs.edges().len()];
    for e in d {
        mask[hs.edge_id(e)?] = true;
    }
    Some(mask)
}

/// Checks the bank condition against a 2-component split: all black
/// endpoints of `d` in one component, all white endpoints in the other.
/// Returns the (black component id, white component id) on success.
fn bank_sides(hs: &HexSystem, d: &EdgeSet, comp: &[usize]) -> Option<(usize, usize)> {
    let mut black_side = None;
    let mut white_side = None;
    for e in d {
        let (black, white) = match e.u().color() {
            Color::Black => (e.u(), e.v()),
            Color::White => (e.v(), e.u()),
        };
        let bc = comp[hs.vertex_id(&black).unwrap()];
        let wc = comp[hs.vertex_id(&white).unwrap()];
        if *black_side.get_or_insert(bc) != bc || *white_side.get_or_insert(wc) != wc {
            return None;
        }
    }
    match (black_side, white_side) {
        (Some(b), Some(w)) if b != w => Some((b, w)),
        _ => None,
    }
}

/// Definitional e-cut test. Returns the two banks when `d` is an e-cut.
pub fn ecut_banks(hs: &HexSystem, d: &EdgeSet) -> Option<EcutBanks> {
    if d.is_empty() {
        return None;
    }
    let mask = edge_mask(hs, d)?;
    let (comp, count) = components_without(hs, &mask);
    if count != 2 {
        return None;
    }
    // Every cut edge must join the two components.
    for e in d {
        let cu = comp[hs.vertex_id(&e.u()).unwrap()];
        let cv = comp[hs.vertex_id(&e.v()).unwrap()];
        if cu == cv {
            return None;
        }
    }
    let (black_side, white_side) = bank_sides(hs, d, &comp)?;
    let mut banks = EcutBanks {
        black_bank: BTreeSet::new(),
        white_bank: BTreeSet::new(),
    };
    for (vi, v) in hs.vertices().iter().enumerate() {
        if comp[vi] == black_side {
            banks.black_bank.insert(*v);
        } else {
            debug_assert_eq!(comp[vi], white_side);
            banks.white_bank.insert(*v);
        }
    }
    Some(banks)
}

/// Definitional e-cut test (boolean form).
pub fn is_ecut(hs: &HexSystem, d: &EdgeSet) -> bool {
    ecut_banks(hs, d).is_some()
}

/// Dual-graph e-cut test: the dual edges crossing `d` form a single cycle of
/// the dual multigraph, and the endpoints of `d` have consistent colors on
/// the two sides. Must agree with [`is_ecut`].
pub fn is_ecut_dual(hs: &HexSystem, d: &EdgeSet) -> bool {
    if d.is_empty() {
        return false;
    }
    let mask = match edge_mask(hs, d) {
        Some(m) => m,
        None => return false,
    };
    // Degree of each dual vertex in the crossing sub-multigraph.
    let dual = hs.dual_graph();
    let mut degree: BTreeMap<DualVertex, usize> = BTreeMap::new();
    let mut dual_adj: BTreeMap<DualVertex, Vec<(DualVertex, usize)>> = BTreeMap::new();
    for (i, de) in dual.edges().iter().enumerate() {
        if !d.contains(&de.crosses) {
            continue;
        }
        *degree.entry(de.a).or_default() += 1;
        *degree.entry(de.b).or_default() += 1;
        dual_adj.entry(de.a).or_default().push((de.b, i));
        dual_adj.entry(de.b).or_default().push((de.a, i));
    }
    // A single cycle: every touched vertex has degree 2, the sub-multigraph
    // is connected, and there are at least 2 edges.
    if d.len() < 2 || degree.values().any(|&deg| deg != 2) {
        return false;
    }
    let start = *degree.keys().next().unwrap();
    let mut seen_vertices = BTreeSet::new();
    let mut seen_edges = vec![false; dual.edges().len()];
    let mut stack = vec![start];
    seen_vertices.insert(start);
    while let Some(v) = stack.pop() {
        for &(w, i) in &dual_adj[&v] {
            if !seen_edges[i] {
                seen_edges[i] = true;
                if seen_vertices.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    if seen_vertices.len() != degree.len() {
        return false;
    }
    // Same-color side condition, derived from the two components of H - D
    // rather than from a geometric inside/outside computation.
    let (comp, count) = components_without(hs, &mask);
    count == 2 && bank_sides(hs, d, &comp).is_some()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EcutError {
    #[error("cut #{0} is not an elementary edge cut")]
    NotAnECut(usize),
    #[error("a nice cycle avoids every given cut")]
    UncoveredNiceCycle(EdgeSet),
    #[error(transparent)]
    NoPerfectMatching(#[from] NoPerfectMatching),
}

/// True iff every hexagon boundary and the peripheral cycle intersect at
/// least one of the given e-cuts.
pub fn is_ecut_cover(hs: &HexSystem, cuts: &[EdgeSet]) -> Result<bool, EcutError> {
    for (i, cut) in cuts.iter().enumerate() {
        if !is_ecut(hs, cut) {
            return Err(EcutError::NotAnECut(i));
        }
    }
    let union: EdgeSet = cuts.iter().flatten().copied().collect();
    for &c in hs.centers() {
        let boundary = hs.hexagon_boundary(c).expect("center of this system");
        if boundary.intersection(&union).next().is_none() {
            return Ok(false);
        }
    }
    let peripheral: EdgeSet = hs.peripheral_cycle().into_iter().collect();
    Ok(peripheral.intersection(&union).next().is_some())
}

/// The cut-based sufficiency pipeline: if every nice cycle of `hs`
/// intersects some cut, the union of the cuts is a complete forcing set and
/// is returned. Otherwise the first uncovered nice cycle is reported.
pub fn cfs_from_ecuts(hs: &HexSystem, cuts: &[EdgeSet]) -> Result<EdgeSet, EcutError> {
    for (i, cut) in cuts.iter().enumerate() {
        if !is_ecut(hs, cut) {
            return Err(EcutError::NotAnECut(i));
        }
    }
    let union: EdgeSet = cuts.iter().flatten().copied().collect();
    for cycle in forcing::enumerate_nice_cycles(hs)? {
        if cycle.edges().intersection(&union).next().is_none() {
            return Err(EcutError::UncoveredNiceCycle(cycle.edges().clone()));
        }
    }
    debug_assert_eq!(forcing::is_complete_forcing_set_nice(hs, &union), Ok(true));
    Ok(union)
}

/// The three direction classes of the edge set.
pub fn direction_classes(hs: &HexSystem) -> [(Direction, EdgeSet); 3] {
    let class = |dir: Direction| -> EdgeSet {
        hs.edges()
            .iter()
            .filter(|e| e.direction() == dir)
            .copied()
            .collect()
    };
    [
        (Direction::Vert, class(Direction::Vert)),
        (Direction::Pos, class(Direction::Pos)),
        (Direction::Neg, class(Direction::Neg)),
    ]
}

/// The smallest of the three parallel-edge direction classes, which is a
/// complete forcing set; hence `cf(hs)` is at most its size.
pub fn parallel_class_bound(
    hs: &HexSystem,
    ) -> Result<(Direction, EdgeSet), NoPerfectMatching> {
    if !crate::matchings::hexsystem_has_perfect_matching(hs) {
        return Err(NoPerfectMatching);
    }
    let classes = direction_classes(hs);
    let (dir, class) = classes
        .iter()
        .min_by_key(|(_, c)| c.len())
        .cloned()
        .expect("three classes");
    debug_assert_eq!(forcing::is_complete_forcing_set_nice(hs, &class), Ok(true));
    Ok((dir, class))
}
