//! Perfect-matching existence, enumeration, maximum matching on general
//! graphs, and per-matching forcing-set verification.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::hexgrid::{EdgeRef, EdgeSet, HexSystem};

/// A small abstract undirected graph on vertices `0..n`.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.adj.len() && v < self.adj.len());
        if !self.adj[u].contains(&v) {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as ordered pairs (u < v), sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// A matching of an abstract graph, as disjoint vertex pairs (u < v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Maximum-cardinality matching via augmenting paths with blossom
/// contraction. Correct on non-bipartite graphs.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // Greedy warm start.
    for u in 0..n {
        if mate[u].is_none() {
            for &v in g.neighbors(u) {
                if mate[v].is_none() {
                    mate[u] = Some(v);
                    mate[v] = Some(u);
                    break;
                }
            }
        }
    }

    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        augment_from(g, root, &mut mate);
    }

    let mut edges: Vec<(usize, usize)> = mate
        .iter()
        .enumerate()
        .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
        .collect();
    edges.sort_unstable();
    Matching { edges }
}

/// One phase of the blossom algorithm: BFS an alternating tree from `root`,
/// contracting odd cycles via the `base` array, and flip the augmenting path
/// if one is found.
fn augment_from(g: &Graph, root: usize, mate: &mut [Option<usize>]) {
    let n = g.vertex_count();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_queue = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(root);
    in_queue[root] = true;

    let lca = |base: &[usize], parent: &[Option<usize>], mate: &[Option<usize>], mut a: usize, mut b: usize| -> usize {
        let mut used = vec![false; n];
        loop {
            a = base[a];
            used[a] = true;
            match mate[a] {
                Some(m) => a = parent[m].expect("matched vertex in tree has a parent"),
                None => break,
            }
        }
        loop {
            b = base[b];
            if used[b] {
                return b;
            }
            b = parent[mate[b].expect("tree vertex is matched")].expect("tree parent");
        }
    };

    let mark_path = |base: &mut [usize],
                     parent: &mut [Option<usize>],
                     mate: &[Option<usize>],
                     blossom: &mut [bool],
                     mut v: usize,
                     b: usize,
                     mut child: usize| {
        while base[v] != b {
            blossom[base[v]] = true;
            let m = mate[v].expect("blossom vertex is matched");
            blossom[base[m]] = true;
            parent[v] = Some(child);
            child = m;
            v = parent[m].expect("tree parent");
        }
    };

    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if base[u] == base[v] || mate[u] == Some(v) {
                continue;
            }
            if v == root || mate[v].map_or(false, |m| parent[m].is_some()) {
                // Odd cycle: contract the blossom.
                let b = lca(&base, &parent, mate, u, v);
                let mut blossom = vec![false; n];
                mark_path(&mut base, &mut parent, mate, &mut blossom, u, b, v);
                mark_path(&mut base, &mut parent, mate, &mut blossom, v, b, u);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = b;
                        if !in_queue[i] {
                            in_queue[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[v].is_none() {
                parent[v] = Some(u);
                match mate[v] {
                    None => {
                        // Augmenting path found: flip it.
                        let mut v = v;
                        loop {
                            let p = parent[v].expect("path to root");
                            let pm = mate[p];
                            mate[v] = Some(p);
                            mate[p] = Some(v);
                            match pm {
                                Some(next) => v = next,
                                None => return,
                            }
                        }
                    }
                    Some(m) => {
                        if !in_queue[m] {
                            in_queue[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
}

/// True iff `g` admits a perfect matching. The empty graph counts as true.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.vertex_count();
    n % 2 == 0 && max_matching(g).len() * 2 == n
}

/// A perfect matching of a hexagonal system (a Kekulé structure).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PerfectMatching {
    pub edges: EdgeSet,
}

impl PerfectMatching {
    /// Checks the defining invariant against `hs`: edges pairwise disjoint
    /// and covering every vertex.
    pub fn is_valid_for(&self, hs: &HexSystem) -> bool {
        let mut covered = BTreeSet::new();
        for e in &self.edges {
            if hs.edge_id(e).is_none() {
                return false;
            }
            if !covered.insert(e.u()) || !covered.insert(e.v()) {
                return false;
            }
        }
        covered.len() == hs.vertices().len()
    }
}

/// Visits every perfect matching of `hs` as a set of edge ids. Branches on
/// the uncovered vertex with the fewest available extensions, so forced
/// moves propagate first. Returns `Break` if the visitor stops early.
pub(crate) fn for_each_perfect_matching_ids<B>(
    hs: &HexSystem,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = hs.vertices().len();
    if n % 2 != 0 {
        return ControlFlow::Continue(());
    }
    let adj = hs.adjacency();
    let mut covered = vec![false; n];
    let mut chosen: Vec<usize> = Vec::with_capacity(n / 2);
    fn rec<B>(
        adj: &[Vec<(usize, usize)>],
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        // Pick the uncovered vertex with the fewest uncovered neighbors.
        let mut best: Option<(usize, usize)> = None;
        for v in 0..covered.len() {
            if covered[v] {
                continue;
            }
            let choices = adj[v].iter().filter(|&&(w, _)| !covered[w]).count();
            if choices == 0 {
                return ControlFlow::Continue(()); // dead end
            }
            if best.map_or(true, |(c, _)| choices < c) {
                best = Some((choices, v));
                if choices == 1 {
                    break;
                }
            }
        }
        let (_, v) = match best {
            Some(b) => b,
            None => return visit(chosen),
        };
        covered[v] = true;
        for &(w, ei) in &adj[v] {
            if covered[w] {
                continue;
            }
            covered[w] = true;
            chosen.push(ei);
            rec(adj, covered, chosen, visit)?;
            chosen.pop();
            covered[w] = false;
        }
        covered[v] = false;
        ControlFlow::Continue(())
    }
    rec(adj, &mut covered, &mut chosen, &mut visit)
}

/// All perfect matchings of `hs`, sorted lexicographically by their sorted
/// edge lists. Empty iff none exist.
pub fn enumerate_perfect_matchings(hs: &HexSystem) -> Vec<PerfectMatching> {
    let mut out: Vec<PerfectMatching> = Vec::new();
    let _: ControlFlow<()> = for_each_perfect_matching_ids(hs, |ids| {
        let edges: EdgeSet = ids.iter().map(|&i| hs.edges()[i]).collect();
        out.push(PerfectMatching { edges });
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// Counts perfect matchings of the subgraph of `hs` induced by the vertices
/// where `alive` is true, stopping once the count reaches `limit`.
pub(crate) fn count_perfect_matchings_upto(hs: &HexSystem, alive: &[bool], limit: usize) -> usize {
    let adj = hs.adjacency();
    let mut covered: Vec<bool> = alive.iter().map(|&a| !a).collect();
    if covered.iter().filter(|&&c| !c).count() % 2 != 0 {
        return 0;
    }
    let mut count = 0usize;
    fn rec(
        adj: &[Vec<(usize, usize)>],
        covered: &mut [bool],
        count: &mut usize,
        limit: usize,
    ) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..covered.len() {
            if covered[v] {
                continue;
            }
            let choices = adj[v].iter().filter(|&&(w, _)| !covered[w]).count();
            if choices == 0 {
                return false;
            }
            if best.map_or(true, |(c, _)| choices < c) {
                best = Some((choices, v));
                if choices == 1 {
                    break;
                }
            }
        }
        let (_, v) = match best {
            Some(b) => b,
            None => {
                *count += 1;
                return *count >= limit;
            }
        };
        covered[v] = true;
        for wi in 0..adj[v].len() {
            let (w, _) = adj[v][wi];
            if covered[w] {
                continue;
            }
            covered[w] = true;
            let stop = rec(adj, covered, count, limit);
            covered[w] = false;
            if stop {
                covered[v] = false;
                return true;
            }
        }
        covered[v] = false;
        false
    }
    rec(adj, &mut covered, &mut count, limit);
    count
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForcingError {
    #[error("the candidate set is not a subset of the matching")]
    NotASubset,
    #[error("the given edge set is not a perfect matching of the system")]
    NotAMatching,
}

/// True iff `m` is the unique perfect matching of `hs` containing `f`.
/// Checks by deleting the vertices covered by `f` and testing whether the
/// residual graph has exactly one perfect matching.
pub fn is_forcing_set(hs: &HexSystem, m: &PerfectMatching, f: &EdgeSet) -> Result<bool, ForcingError> {
    if !m.is_valid_for(hs) {
        return Err(ForcingError::NotAMatching);
    }
    if !f.is_subset(&m.edges) {
        return Err(ForcingError::NotASubset);
    }
    Ok(forces_residual(hs, f))
}

/// Core of the definitional check: the subgraph left after removing the
/// vertices covered by `f` has exactly one perfect matching.
pub(crate) fn forces_residual(hs: &HexSystem, f: &EdgeSet) -> bool {
    let mut alive = vec![true; hs.vertices().len()];
    for e in f {
        alive[hs.vertex_id(&e.u()).unwrap()] = false;
        alive[hs.vertex_id(&e.v()).unwrap()] = false;
    }
    count_perfect_matchings_upto(hs, &alive, 2) == 1
}

/// Extends a partial matching `partial` (a set of disjoint edges of `hs`)
/// to a full perfect matching, if one exists.
pub(crate) fn extend_to_perfect_matching(hs: &HexSystem, partial: &EdgeSet) -> Option<PerfectMatching> {
    let mut alive = vec![true; hs.vertices().len()];
    for e in partial {
        alive[hs.vertex_id(&e.u()).unwrap()] = false;
        alive[hs.vertex_id(&e.v()).unwrap()] = false;
    }
    let adj = hs.adjacency();
    let mut covered: Vec<bool> = alive.iter().map(|&a| !a).collect();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(adj: &[Vec<(usize, usize)>], covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..covered.len() {
            if covered[v] {
                continue;
            }
            let choices = adj[v].iter().filter(|&&(w, _)| !covered[w]).count();
            if choices == 0 {
                return false;
            }
            if best.map_or(true, |(c, _)| choices < c) {
                best = Some((choices, v));
                if choices == 1 {
                    break;
                }
            }
        }
        let (_, v) = match best {
            Some(b) => b,
            None => return true,
        };
        covered[v] = true;
        for &(w, ei) in &adj[v] {
            if covered[w] {
                continue;
            }
            covered[w] = true;
            chosen.push(ei);
            if rec(adj, covered, chosen) {
                return true;
            }
            chosen.pop();
            covered[w] = false;
        }
        covered[v] = false;
        false
    }
    if rec(adj, &mut covered, &mut chosen) {
        let mut edges: EdgeSet = partial.clone();
        edges.extend(chosen.iter().map(|&i| hs.edges()[i]));
        Some(PerfectMatching { edges })
    } else {
        None
    }
}

/// True iff the hexagonal system has a perfect matching.
pub fn hexsystem_has_perfect_matching(hs: &HexSystem) -> bool {
    extend_to_perfect_matching(hs, &EdgeSet::new()).is_some()
}

#[allow(unused)]
pub(crate) fn edge_set_from_ids(hs: &HexSystem, ids: &[usize]) -> EdgeSet {
    ids.iter().map(|&i| hs.edges()[i]).collect()
}

pub(crate) fn ids_from_edge_set(hs: &HexSystem, set: &EdgeSet) -> Option<Vec<usize>> {
    set.iter().map(|e| hs.edge_id(e)).collect()
}

#[allow(unused)]
pub(crate) fn edge_ref_set(edges: &[EdgeRef]) -> EdgeSet {
    edges.iter().copied().collect()
}
