//! Exact minimum hitting set by branch and bound.
//!
//! Universe elements are `0..n`; constraints are sorted element lists. The
//! solver returns the minimum cardinality together with the lexicographically
//! least optimal witness (as a sorted element list).

/// Branch-and-bound state over a fixed constraint family.
struct Solver {
    /// Deduplicated, inclusion-minimal constraints, each sorted.
    constraints: Vec<Vec<usize>>,
    /// element -> indices of constraints containing it
    containing: Vec<Vec<usize>>,
    /// per-constraint count of chosen elements hitting it
    hit: Vec<u32>,
}

impl Solver {
    fn new(n: usize, mut constraints: Vec<Vec<usize>>) -> Self {
        for c in &mut constraints {
            c.sort_unstable();
            c.dedup();
        }
        constraints.sort();
        constraints.dedup();
        // Drop constraints that are supersets of another; hitting the subset
        // hits them too.
        constraints.sort_by_key(|c| c.len());
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        'outer: for c in constraints {
            for m in &minimal {
                if m.iter().all(|e| c.binary_search(e).is_ok()) {
                    continue 'outer;
                }
            }
            minimal.push(c);
        }
        let mut containing = vec![Vec::new(); n];
        for (i, c) in minimal.iter().enumerate() {
            for &e in c {
                containing[e].push(i);
            }
        }
        let hit = vec![0; minimal.len()];
        Solver {
            constraints: minimal,
            containing,
            hit,
        }
    }

    fn choose(&mut self, e: usize) {
        for &ci in &self.containing[e] {
            self.hit[ci] += 1;
        }
    }

    fn unchoose(&mut self, e: usize) {
        for &ci in &self.containing[e] {
            self.hit[ci] -= 1;
        }
    }

    /// Greedy packing of pairwise element-disjoint unhit constraints,
    /// counting only elements `>= lo`. Its size lower-bounds the number of
    /// further elements required. Returns `usize::MAX` when some unhit
    /// constraint has no element `>= lo` left.
    fn lower_bound(&self, lo: usize, used: &mut Vec<bool>) -> usize {
        used.iter_mut().for_each(|u| *u = false);
        let mut bound = 0;
        for (ci, c) in self.constraints.iter().enumerate() {
            if self.hit[ci] > 0 {
                continue;
            }
            let avail: Vec<usize> = c.iter().copied().filter(|&e| e >= lo).collect();
            if avail.is_empty() {
                return usize::MAX;
            }
            if avail.iter().all(|&e| !used[e]) {
                for &e in &avail {
                    used[e] = true;
                }
                bound += 1;
            }
        }
        bound
    }

    /// Is there a hitting set of the currently unhit constraints with at most
    /// `budget` elements, all `>= lo`?
    fn exists(&mut self, budget: usize, lo: usize, scratch: &mut Vec<bool>) -> bool {
        // Branch on the unhit constraint with the fewest available elements.
        let mut pick: Option<usize> = None;
        let mut pick_len = usize::MAX;
        for (ci, c) in self.constraints.iter().enumerate() {
            if self.hit[ci] > 0 {
                continue;
            }
            let len = c.iter().filter(|&&e| e >= lo).count();
            if len < pick_len {
                pick_len = len;
                pick = Some(ci);
            }
        }
        let ci = match pick {
            None => return true,
            Some(ci) => ci,
        };
        if budget == 0 || pick_len == 0 {
            return false;
        }
        let lb = self.lower_bound(lo, scratch);
        if lb > budget {
            return false;
        }
        let elems: Vec<usize> = self.constraints[ci]
            .iter()
            .copied()
            .filter(|&e| e >= lo)
            .collect();
        for e in elems {
            self.choose(e);
            let ok = self.exists(budget - 1, lo, scratch);
            if ok {
                self.unchoose(e);
                return true;
            }
            self.unchoose(e);
        }
        false
    }
}

/// Minimum hitting set of `constraints` over elements `0..n`.
///
/// Returns `(cardinality, witness)` where the witness is the
/// lexicographically least optimal hitting set under element order.
pub(crate) fn min_hitting_set(n: usize, constraints: Vec<Vec<usize>>) -> (usize, Vec<usize>) {
    let mut solver = Solver::new(n, constraints);
    if solver.constraints.is_empty() {
        return (0, Vec::new());
    }
    let mut scratch = vec![false; n];

    let start = solver.lower_bound(0, &mut scratch);
    debug_assert_ne!(start, usize::MAX, "unhittable constraint");
    let mut opt = start.max(1);
    while !solver.exists(opt, 0, &mut scratch) {
        opt += 1;
    }

    // Lexicographically least witness: fix elements in ascending order,
    // keeping one exactly when the rest can still be completed within budget
    // using strictly larger elements.
    let mut witness = Vec::with_capacity(opt);
    let mut budget = opt;
    let mut lo = 0;
    while budget > 0 {
        let mut advanced = false;
        for e in lo..n {
            solver.choose(e);
            if solver.exists(budget - 1, e + 1, &mut scratch) {
                witness.push(e);
                budget -= 1;
                lo = e + 1;
                advanced = true;
                break;
            }
            solver.unchoose(e);
        }
        assert!(advanced, "witness reconstruction failed");
    }
    (opt, witness)
}
