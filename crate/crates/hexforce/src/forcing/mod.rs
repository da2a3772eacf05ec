//! Nice cycles, complete-forcing-set verifiers, and exact minimum complete
//! forcing sets.
//!
//! The characterization in use: an edge set `S` is a complete forcing set
//! iff it intersects both frames of every nice cycle. The frame-based
//! verifier exploits that every frame of every nice cycle arises as `C ∩ M`
//! for some perfect matching `M` and some `M`-alternating cycle `C`, so a
//! violation is exactly an alternating cycle none of whose matched edges lie
//! in `S` — detectable per matching in linear time, without materializing
//! the (possibly huge) nice-cycle list.

mod hitting;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::hexgrid::{Color, EdgeRef, EdgeSet, Frame, HexSystem, Vertex};
use crate::matchings::{
    self, for_each_perfect_matching_ids, forces_residual, hexsystem_has_perfect_matching,
};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("the system has no perfect matching")]
pub struct NoPerfectMatching;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("the system is not catacondensed (a vertex lies in three hexagons)")]
pub struct NotCatacondensed;

/// An even cycle whose vertex-complement admits a perfect matching,
/// together with its two frames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceCycle {
    vertices: Vec<Vertex>,
    edges: EdgeSet,
    frame_a: Frame,
    frame_b: Frame,
}

impl NiceCycle {
    /// Cycle vertices in boundary order, starting at the least vertex.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// The frame containing the canonically least cycle edge.
    pub fn frame_a(&self) -> &Frame {
        &self.frame_a
    }

    pub fn frame_b(&self) -> &Frame {
        &self.frame_b
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Builds a `NiceCycle` from its edge set: orders the vertices along the
/// cycle and splits the edges into the two frames.
fn nice_cycle_from_edges(edges: &EdgeSet) -> NiceCycle {
    let mut incident: BTreeMap<Vertex, Vec<EdgeRef>> = BTreeMap::new();
    for e in edges {
        incident.entry(e.u()).or_default().push(*e);
        incident.entry(e.v()).or_default().push(*e);
    }
    let start = *incident.keys().next().expect("cycle is nonempty");
    let mut vertices = vec![start];
    let mut order: Vec<EdgeRef> = Vec::with_capacity(edges.len());
    let mut cur = start;
    let mut prev: Option<EdgeRef> = None;
    loop {
        let mut next_edges: Vec<EdgeRef> = incident[&cur]
            .iter()
            .copied()
            .filter(|e| Some(*e) != prev)
            .collect();
        next_edges.sort();
        let e = next_edges[0];
        let nxt = if e.u() == cur { e.v() } else { e.u() };
        order.push(e);
        prev = Some(e);
        cur = nxt;
        if cur == start {
            break;
        }
        vertices.push(cur);
    }
    debug_assert_eq!(order.len(), edges.len());
    let even: Frame = order.iter().step_by(2).copied().collect();
    let odd: Frame = order.iter().skip(1).step_by(2).copied().collect();
    let least = *edges.iter().next().unwrap();
    let (frame_a, frame_b) = if even.contains(&least) {
        (even, odd)
    } else {
        (odd, even)
    };
    NiceCycle {
        vertices,
        edges: edges.clone(),
        frame_a,
        frame_b,
    }
}

/// The alternating-structure digraph of one perfect matching: one node per
/// matched edge, one arc per non-matching edge, oriented so that directed
/// cycles correspond exactly to M-alternating cycles.
struct AlternatingDigraph {
    /// node -> matched edge id
    node_edge: Vec<usize>,
    /// node -> outgoing (target node, connecting hs edge id)
    arcs: Vec<Vec<(usize, usize)>>,
}

fn build_alternating_digraph(
    hs: &HexSystem,
    matching_ids: &[usize],
    skip_matched: Option<&[bool]>,
) -> AlternatingDigraph {
    let n_vertices = hs.vertices().len();
    let mut node_of_vertex = vec![usize::MAX; n_vertices];
    let mut node_edge = Vec::new();
    let mut in_matching = vec![false; hs.edges().len()];
    for &ei in matching_ids {
        in_matching[ei] = true;
        if skip_matched.map_or(false, |s| s[ei]) {
            continue;
        }
        let e = hs.edges()[ei];
        let node = node_edge.len();
        node_edge.push(ei);
        node_of_vertex[hs.vertex_id(&e.u()).unwrap()] = node;
        node_of_vertex[hs.vertex_id(&e.v()).unwrap()] = node;
    }
    let mut arcs = vec![Vec::new(); node_edge.len()];
    for (ei, e) in hs.edges().iter().enumerate() {
        if in_matching[ei] {
            continue;
        }
        let (black, white) = match e.u().color() {
            Color::Black => (e.u(), e.v()),
            Color::White => (e.v(), e.u()),
        };
        let from = node_of_vertex[hs.vertex_id(&white).unwrap()];
        let to = node_of_vertex[hs.vertex_id(&black).unwrap()];
        if from != usize::MAX && to != usize::MAX && from != to {
            arcs[from].push((to, ei));
        }
    }
    for a in &mut arcs {
        a.sort_unstable();
    }
    AlternatingDigraph { node_edge, arcs }
}

impl AlternatingDigraph {
    /// Finds one directed cycle, if any, returning its node sequence and the
    /// connecting hs edge ids in order.
    fn find_cycle(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.node_edge.len();
        let mut color = vec![WHITE; n];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        for root in 0..n {
            if color[root] != WHITE {
                continue;
            }
            // Iterative DFS with an explicit arc cursor per node.
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            color[root] = GRAY;
            while let Some(top) = stack.len().checked_sub(1) {
                let (v, cursor) = stack[top];
                if cursor < self.arcs[v].len() {
                    stack[top].1 += 1;
                    let (w, via) = self.arcs[v][cursor];
                    match color[w] {
                        WHITE => {
                            color[w] = GRAY;
                            parent[w] = Some((v, via));
                            stack.push((w, 0));
                        }
                        GRAY => {
                            // Back edge: cycle w -> ... -> v -> w.
                            let mut nodes = vec![v];
                            let mut vias = vec![via];
                            let mut cur = v;
                            while cur != w {
                                let (p, pv) = parent[cur].expect("gray node has a parent");
                                nodes.push(p);
                                vias.push(pv);
                                cur = p;
                            }
                            return Some((nodes, vias));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = BLACK;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Enumerates every directed simple cycle, invoking `emit` with the node
    /// sequence and connecting edge ids. Each cycle is rooted at its minimum
    /// node.
    fn for_each_cycle(&self, mut emit: impl FnMut(&[usize], &[usize])) {
        let n = self.node_edge.len();
        let mut on_path = vec![false; n];
        let mut path: Vec<usize> = Vec::new();
        let mut vias: Vec<usize> = Vec::new();
        for root in 0..n {
            path.push(root);
            on_path[root] = true;
            self.dfs_cycles(root, root, &mut on_path, &mut path, &mut vias, &mut emit);
            on_path[root] = false;
            path.pop();
        }
    }

    fn dfs_cycles(
        &self,
        root: usize,
        v: usize,
        on_path: &mut Vec<bool>,
        path: &mut Vec<usize>,
        vias: &mut Vec<usize>,
        emit: &mut impl FnMut(&[usize], &[usize]),
    ) {
        for &(w, via) in &self.arcs[v] {
            if w == root {
                vias.push(via);
                emit(path, vias);
                vias.pop();
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                vias.push(via);
                self.dfs_cycles(root, w, on_path, path, vias, emit);
                vias.pop();
                path.pop();
                on_path[w] = false;
            }
        }
    }
}

/// All nice cycles of `hs`, each with both frames, ordered by their sorted
/// edge lists.
pub fn enumerate_nice_cycles(hs: &HexSystem) -> Result<Vec<NiceCycle>, NoPerfectMatching> {
    if !hexsystem_has_perfect_matching(hs) {
        return Err(NoPerfectMatching);
    }
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let _: ControlFlow<()> = for_each_perfect_matching_ids(hs, |matching| {
        let dg = build_alternating_digraph(hs, matching, None);
        dg.for_each_cycle(|nodes, vias| {
            let mut ids: Vec<usize> = nodes
                .iter()
                .map(|&n| dg.node_edge[n])
                .chain(vias.iter().copied())
                .collect();
            ids.sort_unstable();
            seen.entry(ids).or_insert(());
        });
        ControlFlow::Continue(())
    });
    Ok(seen
        .keys()
        .map(|ids| {
            let edges: EdgeSet = ids.iter().map(|&i| hs.edges()[i]).collect();
            nice_cycle_from_edges(&edges)
        })
        .collect())
}

/// A witness that an edge set fails the frame characterization: a nice cycle
/// and the frame of it that the set misses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnhitFrame {
    pub cycle: EdgeSet,
    pub frame: Frame,
}

/// Finds a nice cycle one of whose frames misses `s`, if any.
pub fn first_unhit_frame(hs: &HexSystem, s: &EdgeSet) -> Result<Option<UnhitFrame>, NoPerfectMatching> {
    if !hexsystem_has_perfect_matching(hs) {
        return Err(NoPerfectMatching);
    }
    let mut in_s = vec![false; hs.edges().len()];
    for e in s {
        if let Some(id) = hs.edge_id(e) {
            in_s[id] = true;
        }
    }
    let found = for_each_perfect_matching_ids(hs, |matching| {
        let dg = build_alternating_digraph(hs, matching, Some(&in_s));
        match dg.find_cycle() {
            Some((nodes, vias)) => {
                let frame: Frame = nodes.iter().map(|&n| hs.edges()[dg.node_edge[n]]).collect();
                let mut cycle = frame.clone();
                cycle.extend(vias.iter().map(|&i| hs.edges()[i]));
                ControlFlow::Break(UnhitFrame { cycle, frame })
            }
            None => ControlFlow::Continue(()),
        }
    });
    match found {
        ControlFlow::Break(w) => Ok(Some(w)),
        ControlFlow::Continue(()) => Ok(None),
    }
}

/// Frame-based (characterization) verifier: true iff `s` intersects both
/// frames of every nice cycle.
pub fn is_complete_forcing_set_nice(hs: &HexSystem, s: &EdgeSet) -> Result<bool, NoPerfectMatching> {
    Ok(first_unhit_frame(hs, s)?.is_none())
}

/// Definitional verifier: true iff for every perfect matching `m`, the
/// restriction `s ∩ m` forces `m`.
pub fn is_complete_forcing_set_def(hs: &HexSystem, s: &EdgeSet) -> Result<bool, NoPerfectMatching> {
    if !hexsystem_has_perfect_matching(hs) {
        return Err(NoPerfectMatching);
    }
    let mut in_s = vec![false; hs.edges().len()];
    for e in s {
        if let Some(id) = hs.edge_id(e) {
            in_s[id] = true;
        }
    }
    let outcome = for_each_perfect_matching_ids(hs, |matching| {
        let restriction: EdgeSet = matching
            .iter()
            .filter(|&&ei| in_s[ei])
            .map(|&ei| hs.edges()[ei])
            .collect();
        if forces_residual(hs, &restriction) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(outcome.is_continue())
}

/// Catacondensed shortcut: true iff `s` intersects both frames of every
/// hexagon.
pub fn is_complete_forcing_set_cata(hs: &HexSystem, s: &EdgeSet) -> Result<bool, NotCatacondensed> {
    if !hs.is_catacondensed() {
        return Err(NotCatacondensed);
    }
    for &c in hs.centers() {
        let (f1, f2) = hs.hexagon_frames(c).expect("center of this system");
        if f1.intersection(s).next().is_none() || f2.intersection(s).next().is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The complete forcing number of `hs` together with a minimum complete
/// forcing set, computed as an exact minimum hitting set over the frames of
/// all nice cycles. The witness is the lexicographically least optimal set
/// under the canonical edge order.
pub fn min_complete_forcing(hs: &HexSystem) -> Result<(usize, EdgeSet), NoPerfectMatching> {
    let cycles = enumerate_nice_cycles(hs)?;
    let mut constraints = Vec::with_capacity(cycles.len() * 2);
    for c in &cycles {
        for frame in [c.frame_a(), c.frame_b()] {
            constraints.push(
                matchings::ids_from_edge_set(hs, frame).expect("frame edges belong to the system"),
            );
        }
    }
    let (value, witness_ids) = hitting::min_hitting_set(hs.edges().len(), constraints);
    let witness: EdgeSet = witness_ids.iter().map(|&i| hs.edges()[i]).collect();
    debug_assert_eq!(is_complete_forcing_set_nice(hs, &witness), Ok(true));
    Ok((value, witness))
}
