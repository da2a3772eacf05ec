//! Fixed edges, normal components, decomposition of the complete forcing
//! number, and its lower bounds.
//!
//! An edge is fixed when it lies in every perfect matching (fixed double) or
//! in none (fixed single). A system without fixed edges is normal. Deleting
//! the fixed edges splits a non-normal system into normal components, and
//! the complete forcing number is additive over them. For a normal system
//! with `n` hexagons, `cf >= n + 1` and `cf >= 2n - Σ ν(H_i♯)`, where the
//! `H_i♯` are the dual subgraphs induced by the frame-generated edge classes
//! and `ν` is the matching number.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::ecut;
use crate::forcing::{self, NoPerfectMatching};
use crate::hexgrid::{build_hexsystem, Direction, EdgeSet, HexCenter, HexSystem};
use crate::matchings::{
    extend_to_perfect_matching, hexsystem_has_perfect_matching, max_matching, Graph,
};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum BoundsError {
    #[error(transparent)]
    NoPerfectMatching(#[from] NoPerfectMatching),
    #[error("the system has fixed edges; this bound applies to normal systems only")]
    NotNormal,
}

/// The fixed edges of a system: those in every perfect matching, those in
/// none, and the free remainder. The three sets partition the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedEdgeReport {
    /// Edges contained in every perfect matching.
    pub fixed_double: EdgeSet,
    /// Edges contained in no perfect matching.
    pub fixed_single: EdgeSet,
    /// Edges contained in some but not all perfect matchings.
    pub free: EdgeSet,
}

impl FixedEdgeReport {
    pub fn is_normal(&self) -> bool {
        self.fixed_double.is_empty() && self.fixed_single.is_empty()
    }
}

/// The vertex/edge graph of `hs` with one edge removed.
fn graph_without_edge(hs: &HexSystem, skip: usize) -> Graph {
    let mut g = Graph::new(hs.vertices().len());
    for (ei, e) in hs.edges().iter().enumerate() {
        if ei == skip {
            continue;
        }
        g.add_edge(
            hs.vertex_id(&e.u()).unwrap(),
            hs.vertex_id(&e.v()).unwrap(),
        );
    }
    g
}

/// Classifies every edge as fixed double, fixed single, or free.
pub fn fixed_edges(hs: &HexSystem) -> Result<FixedEdgeReport, NoPerfectMatching> {
    if !hexsystem_has_perfect_matching(hs) {
        return Err(NoPerfectMatching);
    }
    let mut report = FixedEdgeReport {
        fixed_double: EdgeSet::new(),
        fixed_single: EdgeSet::new(),
        free: EdgeSet::new(),
    };
    for (ei, e) in hs.edges().iter().enumerate() {
        let in_some = extend_to_perfect_matching(hs, &[*e].into_iter().collect()).is_some();
        if !in_some {
            report.fixed_single.insert(*e);
        } else if !crate::matchings::has_perfect_matching(&graph_without_edge(hs, ei)) {
            report.fixed_double.insert(*e);
        } else {
            report.free.insert(*e);
        }
    }
    Ok(report)
}

/// True iff `hs` has a perfect matching and no fixed edges.
pub fn is_normal(hs: &HexSystem) -> Result<bool, NoPerfectMatching> {
    Ok(fixed_edges(hs)?.is_normal())
}

/// The normal components of `hs`: the hexagonal systems left after deleting
/// all fixed edges. A normal system is its own single component.
pub fn normal_components(hs: &HexSystem) -> Result<Vec<HexSystem>, NoPerfectMatching> {
    let fixed = fixed_edges(hs)?;
    if fixed.is_normal() {
        return Ok(vec![hs.clone()]);
    }
    let mut free = vec![true; hs.edges().len()];
    for e in fixed.fixed_double.iter().chain(&fixed.fixed_single) {
        free[hs.edge_id(e).unwrap()] = false;
    }
    // Connected components of the free-edge subgraph, labeled per edge.
    let mut comp = vec![usize::MAX; hs.edges().len()];
    let mut count = 0;
    for start in 0..hs.edges().len() {
        if !free[start] || comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(ei) = stack.pop() {
            let e = hs.edges()[ei];
            for v in [e.u(), e.v()] {
                for &(_, fi) in &hs.adjacency()[hs.vertex_id(&v).unwrap()] {
                    if free[fi] && comp[fi] == usize::MAX {
                        comp[fi] = count;
                        stack.push(fi);
                    }
                }
            }
        }
        count += 1;
    }
    // A hexagon belongs to the component holding all six of its edges.
    let mut center_sets: Vec<BTreeSet<HexCenter>> = vec![BTreeSet::new(); count];
    for &c in hs.centers() {
        let boundary = hs.hexagon_boundary(c).unwrap();
        let comps: BTreeSet<usize> = boundary
            .iter()
            .map(|e| comp[hs.edge_id(e).unwrap()])
            .collect();
        if comps.len() == 1 {
            let only = *comps.iter().next().unwrap();
            if only != usize::MAX {
                center_sets[only].insert(c);
            }
        }
    }
    let mut out = Vec::new();
    for centers in center_sets {
        if !centers.is_empty() {
            out.push(build_hexsystem(&centers).expect("component of a valid system"));
        }
    }
    Ok(out)
}

/// The complete forcing number via additivity over normal components,
/// together with the union of the per-component minimum witnesses.
pub fn cf_by_decomposition(hs: &HexSystem) -> Result<(usize, EdgeSet), NoPerfectMatching> {
    let mut total = 0;
    let mut witness = EdgeSet::new();
    for part in normal_components(hs)? {
        let (cf, set) = forcing::min_complete_forcing(&part)?;
        total += cf;
        witness.extend(set);
    }
    debug_assert_eq!(
        forcing::is_complete_forcing_set_nice(hs, &witness),
        Ok(true)
    );
    Ok((total, witness))
}

/// For a normal system with `n` hexagons, `cf >= n + 1`.
pub fn lower_bound_hexagons(hs: &HexSystem) -> Result<usize, BoundsError> {
    if !is_normal(hs)? {
        return Err(BoundsError::NotNormal);
    }
    Ok(hs.hexagon_count() + 1)
}

/// The partition of the edge set generated by frame co-membership: two edges
/// are related when some hexagon has a frame containing both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassPartition {
    /// The edge classes `E_1, ..., E_k`, ordered by least edge.
    pub classes: Vec<EdgeSet>,
    /// `hexagons[i]`: the hexagons having a frame inside `classes[i]`.
    pub hexagons: Vec<Vec<HexCenter>>,
}

impl EdgeClassPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

pub fn edge_class_partition(hs: &HexSystem) -> EdgeClassPartition {
    // Union-find over edge ids; each frame merges its three edges.
    let mut parent: Vec<usize> = (0..hs.edges().len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &c in hs.centers() {
        let (f1, f2) = hs.hexagon_frames(c).unwrap();
        for frame in [&f1, &f2] {
            let ids: Vec<usize> = frame.iter().map(|e| hs.edge_id(e).unwrap()).collect();
            let r = find(&mut parent, ids[0]);
            for &id in &ids[1..] {
                let s = find(&mut parent, id);
                parent[s] = r;
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut class_of_root: Vec<usize> = vec![usize::MAX; hs.edges().len()];
    let mut classes: Vec<EdgeSet> = Vec::new();
    for ei in 0..hs.edges().len() {
        let r = find(&mut parent, ei);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = classes.len();
            roots.push(r);
            classes.push(EdgeSet::new());
        }
        classes[class_of_root[r]].insert(hs.edges()[ei]);
    }
    let mut hexagons: Vec<Vec<HexCenter>> = vec![Vec::new(); classes.len()];
    for &c in hs.centers() {
        let (f1, f2) = hs.hexagon_frames(c).unwrap();
        for frame in [&f1, &f2] {
            let id = hs.edge_id(frame.iter().next().unwrap()).unwrap();
            let r = find(&mut parent, id);
            hexagons[class_of_root[r]].push(c);
        }
    }
    EdgeClassPartition { classes, hexagons }
}

/// The dual subgraphs `H_i♯` of the edge classes: vertices are the hexagons
/// of `ℋ_i`, edges are the dual edges of the inner edges in `E_i`.
pub fn dual_subgraphs(hs: &HexSystem, partition: &EdgeClassPartition) -> Vec<(Vec<HexCenter>, Graph)> {
    partition
        .classes
        .iter()
        .zip(&partition.hexagons)
        .map(|(class, hexes)| {
            let index: std::collections::BTreeMap<HexCenter, usize> =
                hexes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let mut g = Graph::new(hexes.len());
            for e in class {
                let touching = hs.hexagons_of_edge(e).unwrap();
                if touching.len() == 2 {
                    g.add_edge(index[&touching[0]], index[&touching[1]]);
                }
            }
            (hexes.clone(), g)
        })
        .collect()
}

/// For a normal system with `n` hexagons, `cf >= 2n - Σ ν(H_i♯)`.
pub fn lower_bound_matching(hs: &HexSystem) -> Result<usize, BoundsError> {
    if !is_normal(hs)? {
        return Err(BoundsError::NotNormal);
    }
    let matched: usize = dual_subgraphs(hs, &edge_class_partition(hs))
        .iter()
        .map(|(_, g)| max_matching(g).len())
        .sum();
    Ok(2 * hs.hexagon_count() - matched)
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("vertex {0} is isolated; no edge cover exists")]
pub struct IsolatedVertex(pub usize);

/// Minimum number of edges covering every vertex, via the Gallai identity
/// `ρ = |V| - ν`.
pub fn edge_cover_number(g: &Graph) -> Result<usize, IsolatedVertex> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(IsolatedVertex(v));
    }
    Ok(g.vertex_count() - max_matching(g).len())
}

/// A digest of everything known about `cf(hs)` without an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub hexagon_count: usize,
    pub fixed: FixedEdgeReport,
    pub normal_component_sizes: Vec<usize>,
    /// `n + 1`, when the system is normal.
    pub lower_hexagons: Option<usize>,
    /// `2n - Σ ν(H_i♯)`, when the system is normal.
    pub lower_matching: Option<usize>,
    pub edge_class_count: usize,
    pub upper_direction: Direction,
    /// Size of the smallest parallel direction class, always an upper bound.
    pub upper_parallel: usize,
}

impl BoundsReport {
    pub fn best_lower(&self) -> Option<usize> {
        self.lower_hexagons.max(self.lower_matching)
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hexagons: {}", self.hexagon_count)?;
        writeln!(
            f,
            "fixed edges: {} double, {} single",
            self.fixed.fixed_double.len(),
            self.fixed.fixed_single.len()
        )?;
        writeln!(f, "normal: {}", self.fixed.is_normal())?;
        if !self.fixed.is_normal() {
            let sizes: Vec<String> = self
                .normal_component_sizes
                .iter()
                .map(usize::to_string)
                .collect();
            writeln!(f, "normal components (hexagons): {}", sizes.join(" "))?;
        }
        writeln!(f, "edge classes: {}", self.edge_class_count)?;
        match (self.lower_hexagons, self.lower_matching) {
            (Some(a), Some(b)) => {
                writeln!(f, "lower bound (hexagon count): {a}")?;
                writeln!(f, "lower bound (class matchings): {b}")?;
            }
            _ => writeln!(f, "lower bounds: n/a (system is not normal)")?,
        }
        writeln!(
            f,
            "upper bound (parallel class {}): {}",
            self.upper_direction, self.upper_parallel
        )
    }
}

pub fn bounds_report(hs: &HexSystem) -> Result<BoundsReport, NoPerfectMatching> {
    let fixed = fixed_edges(hs)?;
    let normal = fixed.is_normal();
    let components = normal_components(hs)?;
    let (upper_direction, upper_class) = ecut::parallel_class_bound(hs)?;
    Ok(BoundsReport {
        hexagon_count: hs.hexagon_count(),
        fixed,
        normal_component_sizes: components.iter().map(HexSystem::hexagon_count).collect(),
        lower_hexagons: normal.then(|| hs.hexagon_count() + 1),
        lower_matching: if normal {
            Some(lower_bound_matching(hs).expect("system is normal"))
        } else {
            None
        },
        edge_class_count: edge_class_partition(hs).class_count(),
        upper_direction,
        upper_parallel: upper_class.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{enumerate_nice_cycles, min_complete_forcing};
    use std::collections::BTreeSet;

    fn hs(centers: &[(i64, i64)]) -> HexSystem {
        let set: BTreeSet<HexCenter> =
            centers.iter().map(|&(x, y)| HexCenter::new(x, y)).collect();
        build_hexsystem(&set).unwrap()
    }

    fn p12() -> HexSystem {
        hs(&[(0, 0), (2, 0)])
    }

    fn p22() -> HexSystem {
        hs(&[(0, 0), (2, 0), (1, 3), (3, 3)])
    }

    /// Prolate rectangle with outer rows of 2 hexagons and a single middle
    /// hexagon nestled between them (the perylene skeleton).
    fn rp32() -> HexSystem {
        hs(&[(0, 0), (2, 0), (1, 3), (0, 6), (2, 6)])
    }

    #[test]
    fn parallelograms_are_normal() {
        for system in [hs(&[(0, 0)]), p12(), p22()] {
            let fixed = fixed_edges(&system).unwrap();
            assert!(fixed.is_normal(), "{fixed:?}");
            assert_eq!(is_normal(&system), Ok(true));
            assert_eq!(normal_components(&system).unwrap().len(), 1);
        }
    }

    #[test]
    fn normality_matches_nice_hexagon_boundaries() {
        // A system is normal exactly when every hexagon boundary is a nice
        // cycle.
        for system in [hs(&[(0, 0)]), p12(), p22(), rp32()] {
            let nice: BTreeSet<EdgeSet> = enumerate_nice_cycles(&system)
                .unwrap()
                .into_iter()
                .map(|c| c.edges().clone())
                .collect();
            let all_boundaries_nice = system
                .centers()
                .iter()
                .all(|&c| nice.contains(&system.hexagon_boundary(c).unwrap()));
            assert_eq!(is_normal(&system).unwrap(), all_boundaries_nice);
        }
    }

    #[test]
    fn fixed_edges_against_matching_enumeration() {
        for system in [p12(), p22(), rp32()] {
            let matchings = crate::matchings::enumerate_perfect_matchings(&system);
            let fixed = fixed_edges(&system).unwrap();
            for e in system.edges() {
                let appearances = matchings.iter().filter(|m| m.edges.contains(e)).count();
                assert_eq!(fixed.fixed_double.contains(e), appearances == matchings.len());
                assert_eq!(fixed.fixed_single.contains(e), appearances == 0);
            }
        }
    }

    #[test]
    fn prolate_rectangle_decomposes_into_two_chains() {
        let system = rp32();
        assert_eq!(is_normal(&system), Ok(false));
        let parts = normal_components(&system).unwrap();
        assert_eq!(parts.len(), 2);
        for part in &parts {
            assert_eq!(part.hexagon_count(), 2);
            assert_eq!(is_normal(part), Ok(true));
        }
        let (cf, witness) = cf_by_decomposition(&system).unwrap();
        assert_eq!(cf, 6);
        assert_eq!(min_complete_forcing(&system).unwrap().0, 6);
        assert_eq!(
            crate::forcing::is_complete_forcing_set_nice(&system, &witness),
            Ok(true)
        );
    }

    #[test]
    fn decomposition_agrees_with_exact_search_when_normal() {
        for system in [hs(&[(0, 0)]), p12(), p22()] {
            assert_eq!(
                cf_by_decomposition(&system).unwrap().0,
                min_complete_forcing(&system).unwrap().0
            );
        }
    }

    #[test]
    fn edge_class_counts() {
        assert_eq!(edge_class_partition(&hs(&[(0, 0)])).class_count(), 2);
        assert_eq!(edge_class_partition(&p12()).class_count(), 3);
        assert_eq!(
            edge_class_partition(&hs(&[(0, 0), (2, 0), (4, 0)])).class_count(),
            4
        );
    }

    #[test]
    fn edge_classes_partition_and_count_hexagon_slots() {
        for system in [hs(&[(0, 0)]), p12(), p22(), rp32()] {
            let partition = edge_class_partition(&system);
            assert!(partition.class_count() >= 2);
            let mut union = EdgeSet::new();
            let mut total = 0;
            for class in &partition.classes {
                assert!(union.is_disjoint(class));
                union.extend(class.iter().copied());
                total += class.len();
            }
            assert_eq!(total, system.edges().len());
            // Each hexagon's two frames land in two distinct classes.
            let slot_count: usize = partition.hexagons.iter().map(Vec::len).sum();
            assert_eq!(slot_count, 2 * system.hexagon_count());
            for &c in system.centers() {
                let owning: Vec<usize> = (0..partition.class_count())
                    .filter(|&i| partition.hexagons[i].contains(&c))
                    .collect();
                assert_eq!(owning.len(), 2);
            }
        }
    }

    #[test]
    fn matching_lower_bound_values() {
        // P(1,2): classes of sizes 5/3/3; the size-5 class holds one inner
        // edge joining both hexagons, so Σν = 1 and the bound is 2·2 − 1 = 3.
        assert_eq!(lower_bound_matching(&p12()), Ok(3));
        assert_eq!(lower_bound_hexagons(&p12()), Ok(3));
        assert_eq!(min_complete_forcing(&p12()).unwrap().0, 3);

        assert_eq!(lower_bound_hexagons(&p22()), Ok(5));
        let lb = lower_bound_matching(&p22()).unwrap();
        assert!(lb <= 5);
        assert_eq!(min_complete_forcing(&p22()).unwrap().0, 5);

        assert_eq!(lower_bound_hexagons(&rp32()), Err(BoundsError::NotNormal));
        assert_eq!(lower_bound_matching(&rp32()), Err(BoundsError::NotNormal));
    }

    #[test]
    fn bounds_bracket_the_true_value() {
        for system in [hs(&[(0, 0)]), p12(), p22(), hs(&[(0, 0), (2, 0), (3, 3)])] {
            let cf = min_complete_forcing(&system).unwrap().0;
            let report = bounds_report(&system).unwrap();
            let lower = report.best_lower().unwrap();
            assert!(lower <= cf, "lower {lower} > cf {cf}");
            assert!(cf <= report.upper_parallel, "cf {cf} > upper {}", report.upper_parallel);
        }
    }

    #[test]
    fn gallai_identity_against_brute_force() {
        use rand::{Rng, SeedableRng};
        // Brute-force minimum edge cover on small random connected graphs.
        fn brute_cover(g: &Graph) -> usize {
            let edges = g.edges();
            let m = edges.len();
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
                .expect("a cover always exists without isolated vertices")
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut tried = 0;
        while tried < 40 {
            let n = rng.gen_range(2..=7);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            if (0..n).any(|v| g.degree(v) == 0) {
                assert!(edge_cover_number(&g).is_err());
                continue;
            }
            assert_eq!(edge_cover_number(&g).unwrap(), brute_cover(&g));
            tried += 1;
        }
    }

    #[test]
    fn edge_cover_of_a_hexagonal_system() {
        let system = p12();
        let mut g = Graph::new(system.vertices().len());
        for e in system.edges() {
            g.add_edge(
                system.vertex_id(&e.u()).unwrap(),
                system.vertex_id(&e.v()).unwrap(),
            );
        }
        // 10 vertices, perfect matching of size 5: the cover equals ν's
        // complement, 10 − 5 = 5.
        assert_eq!(edge_cover_number(&g).unwrap(), 5);
        assert_eq!(edge_cover_number(&Graph::new(1)), Err(IsolatedVertex(0)));
    }

    #[test]
    fn report_renders_one_fact_per_line() {
        let text = bounds_report(&p12()).unwrap().to_string();
        assert!(text.contains("hexagons: 2"));
        assert!(text.contains("normal: true"));
        assert!(text.contains("upper bound"));
        let rp = bounds_report(&rp32()).unwrap().to_string();
        assert!(rp.contains("normal: false"));
        assert!(rp.contains("normal components (hexagons): 2 2"));
        assert!(rp.contains("lower bounds: n/a"));
    }

    #[test]
    fn fixed_edges_of_prolate_rectangle_touch_the_middle_row() {
        let system = rp32();
        let fixed = fixed_edges(&system).unwrap();
        // The middle hexagon's two vertical edges lie in no perfect matching:
        // both their top endpoints are black, and a matching using one would
        // strand a vertex of the outer rows.
        assert!(fixed.fixed_double.is_empty());
        assert!(!fixed.fixed_single.is_empty());
        for e in &fixed.fixed_single {
            assert_eq!(e.direction(), Direction::Vert);
        }
    }
}
