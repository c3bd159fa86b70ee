//! Point loads and exact maximum cliques.

use alloc::vec::Vec;

use crate::model::{ElementId, Geometry};
use crate::{Error, Result};

/// Default element limit for the exact clique search.
pub const DEFAULT_CLIQUE_LIMIT: usize = 25;

/// Hard ceiling imposed by the 64-bit vertex sets used in the search.
pub const MAX_CLIQUE_LIMIT: usize = 64;

/// Coverage count at every position of the circle or line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadProfile {
    pub loads: Vec<usize>,
    /// `K`: the fewest elements covering any single position.
    pub min_load: usize,
    pub max_load: usize,
    pub argmin_point: usize,
    pub argmax_point: usize,
}

/// Exact per-position coverage. Ties for argmin/argmax go to the smallest
/// position.
pub fn load_profile<G: Geometry + ?Sized>(g: &G) -> LoadProfile {
    let size = g.domain_size();
    let mut delta = alloc::vec![0isize; size + 1];
    for id in 0..g.element_count() {
        for r in g.span(id).segments().iter() {
            delta[r.start] += 1;
            delta[r.end] -= 1;
        }
    }
    let mut loads = Vec::with_capacity(size);
    let mut running = 0isize;
    for d in &delta[..size] {
        running += d;
        loads.push(running as usize);
    }
    let (mut argmin_point, mut argmax_point) = (0, 0);
    for (p, &l) in loads.iter().enumerate() {
        if l < loads[argmin_point] {
            argmin_point = p;
        }
        if l > loads[argmax_point] {
            argmax_point = p;
        }
    }
    LoadProfile {
        min_load: loads[argmin_point],
        max_load: loads[argmax_point],
        loads,
        argmin_point,
        argmax_point,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueReport {
    pub omega: usize,
    /// Sorted ids of one maximum clique.
    pub witness: Vec<ElementId>,
}

/// Exact `ω` with the default element limit.
pub fn max_clique<G: Geometry + ?Sized>(g: &G) -> Result<CliqueReport> {
    max_clique_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

/// Exact `ω` by branch and bound over the intersection graph, pruning with
/// greedy-coloring bounds. Refuses instances above `limit` elements
/// (`limit` is clamped to [`MAX_CLIQUE_LIMIT`]).
pub fn max_clique_with_limit<G: Geometry + ?Sized>(g: &G, limit: usize) -> Result<CliqueReport> {
    let n = g.element_count();
    let limit = limit.min(MAX_CLIQUE_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { elements: n, limit });
    }
    let adjacency: Vec<u64> = g
        .adjacency()
        .iter()
        .map(|ns| ns.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search { adjacency, best: Vec::new() };
    search.expand(&mut Vec::new(), all);
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(CliqueReport { omega: witness.len(), witness })
}

struct Search {
    adjacency: Vec<u64>,
    best: Vec<ElementId>,
}

impl Search {
    /// Greedy sequential coloring of `candidates`; returns vertices in
    /// nondecreasing color order together with their colors.
    fn color_sort(&self, candidates: u64) -> Vec<(ElementId, usize)> {
        let mut out = Vec::with_capacity(candidates.count_ones() as usize);
        let mut uncolored = candidates;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut q = uncolored;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !self.adjacency[v] & !(1 << v);
                uncolored &= !(1 << v);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, clique: &mut Vec<ElementId>, mut candidates: u64) {
        let ordered = self.color_sort(candidates);
        for &(v, bound) in ordered.iter().rev() {
            if clique.len() + bound <= self.best.len() {
                return;
            }
            clique.push(v);
            let next = candidates & self.adjacency[v];
            if next == 0 {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            candidates &= !(1 << v);
        }
    }
}
