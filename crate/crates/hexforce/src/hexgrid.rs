//! Canonical lattice representation of hexagonal systems.
//!
//! Hexagon centers live on an integer lattice with `cy ≡ 0 (mod 3)` and
//! `cx ≡ cy/3 (mod 2)`. Each center spawns six vertices; vertices and edges
//! shared between hexagons are deduplicated. Vertex color, edge direction and
//! per-hexagon edge roles are all pure integer arithmetic on this lattice.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A hexagon center on the canonical lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexCenter {
    pub cx: i64,
    pub cy: i64,
}

impl HexCenter {
    pub fn new(cx: i64, cy: i64) -> Self {
        HexCenter { cx, cy }
    }

    /// Lattice invariants: `cy ≡ 0 (mod 3)` and `cx ≡ cy/3 (mod 2)`.
    pub fn is_valid(&self) -> bool {
        self.cy.rem_euclid(3) == 0 && (self.cx - self.cy / 3).rem_euclid(2) == 0
    }

    /// The six vertices of this hexagon, in role order T, TL, BL, B, BR, TR.
    pub fn corner_vertices(&self) -> [Vertex; 6] {
        let (cx, cy) = (self.cx, self.cy);
        [
            Vertex::new(cx, cy + 2),     // T
            Vertex::new(cx - 1, cy + 1), // TL
            Vertex::new(cx - 1, cy - 1), // BL
            Vertex::new(cx, cy - 2),     // B
            Vertex::new(cx + 1, cy - 1), // BR
            Vertex::new(cx + 1, cy + 1), // TR
        ]
    }

    /// Centers of the six lattice positions that would share an edge.
    pub fn neighbor_positions(&self) -> [HexCenter; 6] {
        let (cx, cy) = (self.cx, self.cy);
        [
            HexCenter::new(cx - 2, cy),
            HexCenter::new(cx + 2, cy),
            HexCenter::new(cx - 1, cy + 3),
            HexCenter::new(cx + 1, cy + 3),
            HexCenter::new(cx - 1, cy - 3),
            HexCenter::new(cx + 1, cy - 3),
        ]
    }
}

impl fmt::Display for HexCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.cx, self.cy)
    }
}

/// Vertex color; adjacent vertices always differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

/// A vertex of a hexagonal system. Color is determined by `y mod 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }

    pub fn color(&self) -> Color {
        if self.y.rem_euclid(3) == 1 {
            Color::Black
        } else {
            Color::White
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Direction class of an edge: vertical, positive slope, or negative slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Vert,
    Pos,
    Neg,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Vert => write!(f, "VERT"),
            Direction::Pos => write!(f, "POS"),
            Direction::Neg => write!(f, "NEG"),
        }
    }
}

/// Canonical edge identity: vertex pair ordered lexicographically by (x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    u: Vertex,
    v: Vertex,
}

impl EdgeRef {
    /// Builds an edge from two endpoints, canonicalizing the order.
    /// Returns `None` unless the displacement is one of the three lattice
    /// edge vectors.
    pub fn try_new(a: Vertex, b: Vertex) -> Option<EdgeRef> {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        let d = (v.x - u.x, v.y - u.y);
        match d {
            (0, 2) | (1, 1) | (1, -1) => Some(EdgeRef { u, v }),
            _ => None,
        }
    }

    pub(crate) fn between(a: Vertex, b: Vertex) -> EdgeRef {
        EdgeRef::try_new(a, b).expect("not a lattice edge")
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn direction(&self) -> Direction {
        match (self.v.x - self.u.x, self.v.y - self.u.y) {
            (0, 2) => Direction::Vert,
            (1, 1) => Direction::Pos,
            (1, -1) => Direction::Neg,
            _ => unreachable!("EdgeRef invariant violated"),
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.u.x, self.u.y, self.v.x, self.v.y)
    }
}

/// Edge sets are kept sorted by the canonical edge order.
pub type EdgeSet = BTreeSet<EdgeRef>;

/// Role of an edge within one hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HexRole {
    L,
    Tl,
    Tr,
    R,
    Br,
    Bl,
}

impl HexRole {
    pub const ALL: [HexRole; 6] = [
        HexRole::L,
        HexRole::Tl,
        HexRole::Tr,
        HexRole::R,
        HexRole::Br,
        HexRole::Bl,
    ];
}

/// One of the two perfect matchings of a hexagon boundary (or of any even
/// cycle).
pub type Frame = EdgeSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("empty center set")]
    Empty,
    #[error("center {0} violates the lattice parity invariants")]
    ParityViolation(HexCenter),
    #[error("hexagon-adjacency graph is not connected")]
    Disconnected,
    #[error("center set encloses a hole; only simply-connected systems are supported")]
    NotSimplyConnected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("hexagon {0} is not part of this system")]
pub struct UnknownHexagon(pub HexCenter);

/// An immutable hexagonal system: hexagon centers plus the derived
/// vertex/edge graph.
#[derive(Debug, Clone)]
pub struct HexSystem {
    centers: Vec<HexCenter>,
    vertices: Vec<Vertex>,
    edges: Vec<EdgeRef>,
    /// vertex id -> (neighbor vertex id, edge id)
    adj: Vec<Vec<(usize, usize)>>,
    /// edge id -> hexagon (center) indices, 1 or 2 entries
    edge_hexes: Vec<Vec<usize>>,
    /// center idx -> edge ids in role order [L, Tl, Tr, R, Br, Bl]
    hex_edges: Vec<[usize; 6]>,
}

/// Builds a hexagonal system from a set of centers.
pub fn build_hexsystem(centers: &BTreeSet<HexCenter>) -> Result<HexSystem, BuildError> {
    if centers.is_empty() {
        return Err(BuildError::Empty);
    }
    for c in centers {
        if !c.is_valid() {
            return Err(BuildError::ParityViolation(*c));
        }
    }
    let center_vec: Vec<HexCenter> = centers.iter().copied().collect();
    let center_idx: BTreeMap<HexCenter, usize> =
        center_vec.iter().enumerate().map(|(i, c)| (*c, i)).collect();

    // Connectivity of the hexagon-adjacency graph.
    let mut seen = vec![false; center_vec.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for nb in center_vec[i].neighbor_positions() {
            if let Some(&j) = center_idx.get(&nb) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(BuildError::Disconnected);
    }

    let mut vertex_set: BTreeSet<Vertex> = BTreeSet::new();
    let mut edge_set: BTreeSet<EdgeRef> = BTreeSet::new();
    for c in &center_vec {
        let vs = c.corner_vertices();
        vertex_set.extend(vs);
        for k in 0..6 {
            edge_set.insert(EdgeRef::between(vs[k], vs[(k + 1) % 6]));
        }
    }
    let vertices: Vec<Vertex> = vertex_set.into_iter().collect();
    let edges: Vec<EdgeRef> = edge_set.into_iter().collect();

    // Euler check: a simply-connected system satisfies V - E + n = 1.
    let (v, e, n) = (vertices.len() as i64, edges.len() as i64, center_vec.len() as i64);
    if v - e + n != 1 {
        return Err(BuildError::NotSimplyConnected);
    }

    let vertex_idx: BTreeMap<Vertex, usize> =
        vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let edge_idx: BTreeMap<EdgeRef, usize> =
        edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();

    let mut adj = vec![Vec::new(); vertices.len()];
    for (ei, e) in edges.iter().enumerate() {
        let ui = vertex_idx[&e.u];
        let vi = vertex_idx[&e.v];
        adj[ui].push((vi, ei));
        adj[vi].push((ui, ei));
    }
    for a in &mut adj {
        a.sort_unstable();
    }

    let mut edge_hexes = vec![Vec::new(); edges.len()];
    let mut hex_edges = Vec::with_capacity(center_vec.len());
    for (ci, c) in center_vec.iter().enumerate() {
        let vs = c.corner_vertices();
        // role order [L, Tl, Tr, R, Br, Bl]; vs = [T, TL, BL, B, BR, TR]
        let role_edges = [
            EdgeRef::between(vs[1], vs[2]), // L  = (TL, BL)
            EdgeRef::between(vs[0], vs[1]), // Tl = (T, TL)
            EdgeRef::between(vs[0], vs[5]), // Tr = (T, TR)
            EdgeRef::between(vs[5], vs[4]), // R  = (TR, BR)
            EdgeRef::between(vs[3], vs[4]), // Br = (B, BR)
            EdgeRef::between(vs[3], vs[2]), // Bl = (B, BL)
        ];
        let ids = role_edges.map(|e| edge_idx[&e]);
        for id in ids {
            edge_hexes[id].push(ci);
        }
        hex_edges.push(ids);
    }

    Ok(HexSystem {
        centers: center_vec,
        vertices,
        edges,
        adj,
        edge_hexes,
        hex_edges,
    })
}

impl HexSystem {
    pub fn centers(&self) -> &[HexCenter] {
        &self.centers
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// Number of hexagons.
    pub fn hexagon_count(&self) -> usize {
        self.centers.len()
    }

    pub fn edge_id(&self, e: &EdgeRef) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub fn vertex_id(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub(crate) fn center_id(&self, c: &HexCenter) -> Option<usize> {
        self.centers.binary_search(c).ok()
    }

    /// Neighbor list of a vertex: (neighbor vertex id, edge id) pairs.
    pub(crate) fn adjacency(&self) -> &[Vec<(usize, usize)>] {
        &self.adj
    }

    pub fn is_peripheral(&self, e: &EdgeRef) -> Option<bool> {
        self.edge_id(e).map(|id| self.edge_hexes[id].len() == 1)
    }

    /// The hexagons (as centers) that contain the given edge.
    pub fn hexagons_of_edge(&self, e: &EdgeRef) -> Option<Vec<HexCenter>> {
        self.edge_id(e)
            .map(|id| self.edge_hexes[id].iter().map(|&ci| self.centers[ci]).collect())
    }

    /// The edge playing the given role in hexagon `h`.
    pub fn hexagon_edge(&self, h: HexCenter, role: HexRole) -> Result<EdgeRef, UnknownHexagon> {
        let ci = self.center_id(&h).ok_or(UnknownHexagon(h))?;
        let k = match role {
            HexRole::L => 0,
            HexRole::Tl => 1,
            HexRole::Tr => 2,
            HexRole::R => 3,
            HexRole::Br => 4,
            HexRole::Bl => 5,
        };
        Ok(self.edges[self.hex_edges[ci][k]])
    }

    /// All six boundary edges of hexagon `h`.
    pub fn hexagon_boundary(&self, h: HexCenter) -> Result<EdgeSet, UnknownHexagon> {
        let ci = self.center_id(&h).ok_or(UnknownHexagon(h))?;
        Ok(self.hex_edges[ci].iter().map(|&id| self.edges[id]).collect())
    }

    /// The two frames of hexagon `h`. The first frame contains the R edge.
    pub fn hexagon_frames(&self, h: HexCenter) -> Result<(Frame, Frame), UnknownHexagon> {
        let ci = self.center_id(&h).ok_or(UnknownHexagon(h))?;
        let ids = self.hex_edges[ci];
        // [L, Tl, Tr, R, Br, Bl]
        let f1: Frame = [ids[1], ids[5], ids[3]].iter().map(|&id| self.edges[id]).collect();
        let f2: Frame = [ids[0], ids[4], ids[2]].iter().map(|&id| self.edges[id]).collect();
        Ok((f1, f2))
    }

    /// True when no vertex belongs to three hexagons.
    pub fn is_catacondensed(&self) -> bool {
        let mut count = vec![0u8; self.vertices.len()];
        for c in &self.centers {
            for v in c.corner_vertices() {
                count[self.vertex_id(&v).unwrap()] += 1;
            }
        }
        count.iter().all(|&c| c < 3)
    }

    /// The dual graph: hexagon centers plus one exterior vertex, one dual
    /// edge per edge of the system.
    pub fn dual_graph(&self) -> DualGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| {
                let hexes = &self.edge_hexes[id];
                let a = DualVertex::Hexagon(self.centers[hexes[0]]);
                let b = if hexes.len() == 2 {
                    DualVertex::Hexagon(self.centers[hexes[1]])
                } else {
                    DualVertex::Exterior
                };
                DualEdge { a, b, crosses: *e }
            })
            .collect();
        DualGraph {
            hexagons: self.centers.clone(),
            edges,
        }
    }

    /// The cycle bounding the exterior face, as edges ordered along the
    /// boundary. Starts at the least boundary vertex and proceeds toward its
    /// least peripheral neighbor.
    pub fn peripheral_cycle(&self) -> Vec<EdgeRef> {
        let peripheral: Vec<bool> = self.edge_hexes.iter().map(|h| h.len() == 1).collect();
        let start = (0..self.vertices.len())
            .find(|&vi| self.adj[vi].iter().any(|&(_, ei)| peripheral[ei]))
            .expect("a hexagonal system always has peripheral edges");
        let mut cycle = Vec::new();
        let mut prev_edge = usize::MAX;
        let mut cur = start;
        loop {
            let (next, ei) = self.adj[cur]
                .iter()
                .copied()
                .find(|&(_, ei)| peripheral[ei] && ei != prev_edge)
                .expect("boundary vertex with fewer than two peripheral edges");
            cycle.push(self.edges[ei]);
            prev_edge = ei;
            cur = next;
            if cur == start {
                break;
            }
        }
        debug_assert_eq!(cycle.len(), peripheral.iter().filter(|&&p| p).count());
        cycle
    }

    /// Serializes to the HEXSYS text format.
    pub fn to_hexsys(&self) -> String {
        let mut out = String::from("HEXSYS 1\n");
        for c in &self.centers {
            out.push_str(&format!("{} {}\n", c.cx, c.cy));
        }
        out
    }
}

/// A vertex of the dual graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualVertex {
    Hexagon(HexCenter),
    Exterior,
}

/// A dual edge, tagged with the system edge it crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    pub a: DualVertex,
    pub b: DualVertex,
    pub crosses: EdgeRef,
}

/// The dual graph of a hexagonal system (a multigraph).
#[derive(Debug, Clone)]
pub struct DualGraph {
    hexagons: Vec<HexCenter>,
    edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn hexagons(&self) -> &[HexCenter] {
        &self.hexagons
    }

    pub fn vertex_count(&self) -> usize {
        self.hexagons.len() + 1
    }

    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    pub fn degree(&self, v: DualVertex) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }
}

/// Parses the HEXSYS text format.
pub fn parse_hexsys(text: &str) -> Result<HexSystem, ParseError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((i, line)) => {
                let line = strip_comment(line);
                if line.is_empty() {
                    continue;
                }
                break (i, line);
            }
            None => {
                return Err(ParseError::Syntax {
                    line: 0,
                    msg: "missing HEXSYS header".into(),
                })
            }
        }
    };
    if header.1 != "HEXSYS 1" {
        return Err(ParseError::Syntax {
            line: header.0 + 1,
            msg: format!("expected \"HEXSYS 1\", found \"{}\"", header.1),
        });
    }
    let mut centers = BTreeSet::new();
    for (i, raw) in lines {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let center = (|| {
            let cx = parts.next()?.parse().ok()?;
            let cy = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return None;
            }
            Some(HexCenter::new(cx, cy))
        })()
        .ok_or_else(|| ParseError::Syntax {
            line: i + 1,
            msg: format!("expected \"cx cy\", found \"{line}\""),
        })?;
        if !centers.insert(center) {
            return Err(ParseError::Syntax {
                line: i + 1,
                msg: format!("duplicate center {center}"),
            });
        }
    }
    Ok(build_hexsystem(&centers)?)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// Serializes an edge set, one edge per line as "x1 y1 x2 y2".
pub fn format_edge_set<'a>(edges: impl IntoIterator<Item = &'a EdgeRef>) -> String {
    let mut out = String::new();
    for e in edges {
        out.push_str(&format!("{e}\n"));
    }
    out
}

/// Parses an edge-set file: one edge per line as "x1 y1 x2 y2".
pub fn parse_edge_set(text: &str) -> Result<EdgeSet, ParseError> {
    let mut set = EdgeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        set.insert(parse_edge_line(line, i)?);
    }
    Ok(set)
}

/// Parses a list of edge sets separated by blank lines (the cut-list format).
pub fn parse_cut_list(text: &str) -> Result<Vec<EdgeSet>, ParseError> {
    let mut cuts = Vec::new();
    let mut current = EdgeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            if !current.is_empty() {
                cuts.push(std::mem::take(&mut current));
            }
            continue;
        }
        current.insert(parse_edge_line(line, i)?);
    }
    if !current.is_empty() {
        cuts.push(current);
    }
    Ok(cuts)
}

/// Serializes a list of edge sets as blank-line-separated blocks.
pub fn format_cut_list(cuts: &[EdgeSet]) -> String {
    cuts.iter()
        .map(|c| format_edge_set(c))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_edge_line(line: &str, i: usize) -> Result<EdgeRef, ParseError> {
    let nums: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
    let err = |msg: String| ParseError::Syntax { line: i + 1, msg };
    let nums = nums.map_err(|_| err(format!("expected \"x1 y1 x2 y2\", found \"{line}\"")))?;
    if nums.len() != 4 {
        return Err(err(format!("expected 4 integers, found {}", nums.len())));
    }
    EdgeRef::try_new(Vertex::new(nums[0], nums[1]), Vertex::new(nums[2], nums[3]))
        .ok_or_else(|| err(format!("\"{line}\" is not a lattice edge")))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hs(centers: &[(i64, i64)]) -> HexSystem {
        let set: BTreeSet<HexCenter> =
            centers.iter().map(|&(x, y)| HexCenter::new(x, y)).collect();
        build_hexsystem(&set).unwrap()
    }

    #[test]
    fn single_hexagon_counts() {
        let h = hs(&[(0, 0)]);
        assert_eq!(h.vertices().len(), 6);
        assert_eq!(h.edges().len(), 6);
    }

    #[test]
    fn two_hexagons_share_one_edge() {
        let h = hs(&[(0, 0), (2, 0)]);
        assert_eq!(h.vertices().len(), 10);
        assert_eq!(h.edges().len(), 11);
        let shared: Vec<_> = h
            .edges()
            .iter()
            .filter(|e| h.is_peripheral(e) == Some(false))
            .collect();
        assert_eq!(shared.len(), 1);
    }

    #[test]
    fn parity_violation_rejected() {
        let set: BTreeSet<HexCenter> = [HexCenter::new(1, 0)].into_iter().collect();
        assert_eq!(
            build_hexsystem(&set).unwrap_err(),
            BuildError::ParityViolation(HexCenter::new(1, 0))
        );
    }

    #[test]
    fn disconnected_rejected() {
        let set: BTreeSet<HexCenter> = [HexCenter::new(0, 0), HexCenter::new(4, 0)]
            .into_iter()
            .collect();
        assert_eq!(build_hexsystem(&set).unwrap_err(), BuildError::Disconnected);
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(build_hexsystem(&BTreeSet::new()).unwrap_err(), BuildError::Empty);
    }

    #[test]
    fn hexagon_ring_with_hole_rejected() {
        // Six hexagons around a missing center enclose a hole.
        let ring: BTreeSet<HexCenter> = HexCenter::new(0, 0)
            .neighbor_positions()
            .into_iter()
            .collect();
        assert_eq!(
            build_hexsystem(&ring).unwrap_err(),
            BuildError::NotSimplyConnected
        );
    }

    #[test]
    fn hexagon_edge_roles() {
        let h = hs(&[(0, 0)]);
        let c = HexCenter::new(0, 0);
        assert_eq!(
            h.hexagon_edge(c, HexRole::L).unwrap(),
            EdgeRef::between(Vertex::new(-1, -1), Vertex::new(-1, 1))
        );
        assert_eq!(
            h.hexagon_edge(c, HexRole::Tr).unwrap(),
            EdgeRef::between(Vertex::new(0, 2), Vertex::new(1, 1))
        );
        assert!(h.hexagon_edge(HexCenter::new(2, 0), HexRole::L).is_err());
    }

    #[test]
    fn frames_partition_the_hexagon() {
        let h = hs(&[(0, 0)]);
        let c = HexCenter::new(0, 0);
        let (f1, f2) = h.hexagon_frames(c).unwrap();
        assert_eq!(f1.len(), 3);
        assert_eq!(f2.len(), 3);
        assert!(f1.is_disjoint(&f2));
        let union: EdgeSet = f1.union(&f2).copied().collect();
        assert_eq!(union, h.edges().iter().copied().collect());
        assert!(f1.contains(&h.hexagon_edge(c, HexRole::R).unwrap()));
        // Each frame covers all six vertices.
        for f in [&f1, &f2] {
            let covered: BTreeSet<Vertex> =
                f.iter().flat_map(|e| [e.u(), e.v()]).collect();
            assert_eq!(covered.len(), 6);
        }
    }

    #[test]
    fn edges_join_black_and_white() {
        let h = hs(&[(0, 0), (2, 0), (1, 3)]);
        for e in h.edges() {
            assert_ne!(e.u().color(), e.v().color());
        }
    }

    #[test]
    fn direction_classes_within_a_hexagon() {
        let h = hs(&[(0, 0)]);
        for dir in [Direction::Vert, Direction::Pos, Direction::Neg] {
            assert_eq!(h.edges().iter().filter(|e| e.direction() == dir).count(), 2);
        }
    }

    #[test]
    fn shared_edge_role_duality() {
        // For each adjacent hexagon pair the shared edge's roles pair up as
        // R/L, Tr/Bl or Tl/Br.
        let h = hs(&[(0, 0), (2, 0), (1, 3), (3, 3)]);
        for e in h.edges() {
            let hexes = h.hexagons_of_edge(e).unwrap();
            if hexes.len() != 2 {
                continue;
            }
            let mut roles = Vec::new();
            for c in &hexes {
                for role in HexRole::ALL {
                    if h.hexagon_edge(*c, role).unwrap() == *e {
                        roles.push(role);
                    }
                }
            }
            roles.sort();
            assert!(
                roles == vec![HexRole::L, HexRole::R]
                    || roles == vec![HexRole::Tl, HexRole::Br]
                    || roles == vec![HexRole::Tr, HexRole::Bl],
                "unexpected role pair {roles:?}"
            );
        }
    }

    #[test]
    fn dual_graph_single_hexagon() {
        let h = hs(&[(0, 0)]);
        let d = h.dual_graph();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edges().len(), 6);
        assert!(d.edges().iter().all(|e| e.b == DualVertex::Exterior));
        assert_eq!(d.degree(DualVertex::Hexagon(HexCenter::new(0, 0))), 6);
    }

    #[test]
    fn dual_graph_two_hexagons() {
        let h = hs(&[(0, 0), (2, 0)]);
        let d = h.dual_graph();
        assert_eq!(d.vertex_count(), 3);
        let inner = d
            .edges()
            .iter()
            .filter(|e| e.b != DualVertex::Exterior)
            .count();
        assert_eq!(inner, 1);
        assert_eq!(d.edges().len() - inner, 10);
    }

    #[test]
    fn dual_graph_p22() {
        // 4-hexagon parallelogram: count shared edges by incidence scan.
        let h = hs(&[(0, 0), (2, 0), (1, 3), (3, 3)]);
        let expected_inner = h
            .edges()
            .iter()
            .filter(|e| h.is_peripheral(e) == Some(false))
            .count();
        // Five adjacent pairs: two within each row, two between h(1,1)/h(1,2)
        // and h(2,1), one between h(1,2) and h(2,2).
        assert_eq!(expected_inner, 5);
        let d = h.dual_graph();
        assert_eq!(d.vertex_count(), 5);
        assert_eq!(
            d.edges().iter().filter(|e| e.b != DualVertex::Exterior).count(),
            5
        );
        assert_eq!(d.edges().len(), h.edges().len());
    }

    #[test]
    fn peripheral_cycle_shapes() {
        assert_eq!(hs(&[(0, 0)]).peripheral_cycle().len(), 6);
        assert_eq!(hs(&[(0, 0), (2, 0)]).peripheral_cycle().len(), 10);
        assert_eq!(
            hs(&[(0, 0), (2, 0), (1, 3), (3, 3)]).peripheral_cycle().len(),
            14
        );
    }

    #[test]
    fn peripheral_cycle_is_closed() {
        let h = hs(&[(0, 0), (2, 0), (1, 3), (3, 3)]);
        let cyc = h.peripheral_cycle();
        for w in cyc.windows(2) {
            let (a, b) = (w[0], w[1]);
            let shared = [a.u(), a.v()]
                .iter()
                .filter(|v| **v == b.u() || **v == b.v())
                .count();
            assert_eq!(shared, 1);
        }
    }

    #[test]
    fn hexsys_round_trip() {
        let h = hs(&[(0, 0), (2, 0), (1, 3), (3, 3)]);
        let text = h.to_hexsys();
        let back = parse_hexsys(&text).unwrap();
        assert_eq!(back.centers(), h.centers());
    }

    #[test]
    fn hexsys_parse_errors() {
        assert!(matches!(
            parse_hexsys("HEXSYS 1\n1 0\n"),
            Err(ParseError::Build(BuildError::ParityViolation(_)))
        ));
        assert!(matches!(
            parse_hexsys("HEXSYS 2\n0 0\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_hexsys("HEXSYS 1\n0 0\n0 0\n"),
            Err(ParseError::Syntax { .. })
        ));
        let single = parse_hexsys("HEXSYS 1\n0 0\n").unwrap();
        assert_eq!(single.hexagon_count(), 1);
    }

    #[test]
    fn edge_set_round_trip() {
        let h = hs(&[(0, 0), (2, 0)]);
        let set: EdgeSet = h.edges().iter().copied().collect();
        let text = format_edge_set(&set);
        assert_eq!(parse_edge_set(&text).unwrap(), set);
    }
}
