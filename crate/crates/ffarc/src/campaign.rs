//! Seeded trial samplers and an order-preserving parallel map.
//!
//! Every sampler is a pure function of its seed, so a trial can be replayed
//! from the seed printed in any report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use ffarc_core::{
    auto_cut, expand_order, load_profile, unfold, ArcInstance, ElementId, Instance,
    IntervalInstance, PresentationOrder,
};
use rand::Rng;

use crate::gen::{random_arcs, random_intervals, random_order, rng_for};

/// Runs `f(0..count)` on `jobs` worker threads and returns results in index
/// order, independent of `jobs`.
pub fn par_map<T, F>(count: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.max(1).min(count.max(1));
    if jobs == 1 {
        return (0..count).map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut chunks: Vec<Vec<(usize, T)>> = thread::scope(|s| {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                s.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= count {
                            break out;
                        }
                        out.push((i, f(i)));
                    }
                })
            })
            .collect();
        workers.into_iter().map(|w| w.join().expect("worker panicked")).collect()
    });
    let mut all: Vec<(usize, T)> = chunks.drain(..).flatten().collect();
    all.sort_by_key(|(i, _)| *i);
    all.into_iter().map(|(_, t)| t).collect()
}

/// An unfolded interval instance with an order that presents one split
/// arc's pieces consecutively at `pause_index`, `pause_index + 1`.
#[derive(Clone, Debug)]
pub struct Lemma1Trial {
    pub seed: u64,
    pub arcs: ArcInstance,
    pub unfolded: IntervalInstance,
    pub order: PresentationOrder,
    pub pause_index: usize,
    pub special: ElementId,
}

pub const LEMMA1_CIRCLE: usize = 36;
pub const LEMMA1_MAX_INTERVALS: usize = 14;
pub const LEMMA1_MAX_OMEGA: usize = 5;

/// Arcs on a circle of 36, cut at the minimum-load point with `K >= 1`; at
/// most 14 intervals after unfolding and `ω <= 5`.
pub fn sample_lemma1(seed: u64) -> Lemma1Trial {
    let mut rng = rng_for(seed);
    loop {
        let m = rng.gen_range(2..=9);
        let arcs = random_arcs(&mut rng, m, LEMMA1_CIRCLE, 3, 18);
        let lp = load_profile(&arcs);
        if lp.min_load == 0 || m + lp.min_load > LEMMA1_MAX_INTERVALS || lp.max_load > LEMMA1_MAX_OMEGA {
            continue;
        }
        let (unfolded, mapping) = unfold(&arcs, auto_cut(&arcs)).expect("cut is on the circle");
        let arc_order = random_order(&mut rng, m);
        let order = expand_order(&arc_order, &mapping).expect("order over the same arcs");
        let pair = mapping.split_pairs[rng.gen_range(0..mapping.k())];
        let pause_index = order.position_of(pair.left).expect("left piece is in the order");
        return Lemma1Trial { seed, arcs, unfolded, order, pause_index, special: pair.arc };
    }
}

#[derive(Clone, Debug)]
pub struct SplitMergeTrial {
    pub seed: u64,
    pub arcs: ArcInstance,
    pub order: PresentationOrder,
    pub special: ElementId,
    pub cut_point: usize,
}

/// Arcs with every position covered, a random cut point and a random arc
/// through it.
pub fn sample_split_merge(seed: u64) -> SplitMergeTrial {
    let mut rng = rng_for(seed);
    loop {
        let circle = rng.gen_range(6..=30);
        let m = rng.gen_range(2..=12);
        let arcs = random_arcs(&mut rng, m, circle, 1, circle - 1);
        if load_profile(&arcs).min_load == 0 {
            continue;
        }
        let cut_point = rng.gen_range(0..circle);
        let through: Vec<ElementId> = (0..m).filter(|&a| arcs.covers(a, cut_point)).collect();
        let special = through[rng.gen_range(0..through.len())];
        let order = random_order(&mut rng, m);
        return SplitMergeTrial { seed, arcs, order, special, cut_point };
    }
}

/// An arc instance on `circle` positions for unfold accounting.
pub fn sample_unfold(seed: u64) -> ArcInstance {
    let mut rng = rng_for(seed);
    let circle = rng.gen_range(3..=36);
    let m = rng.gen_range(0..=14);
    random_arcs(&mut rng, m, circle, 1, circle - 1)
}

pub fn sample_intervals(seed: u64) -> IntervalInstance {
    let mut rng = rng_for(seed);
    let m = rng.gen_range(0..=20);
    random_intervals(&mut rng, m, 36, 12)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Arc,
    Interval,
}

/// A random instance of `n` elements on a domain of `size`, plus a random
/// order.
pub fn sample_instance(seed: u64, kind: Kind, n: usize, size: usize) -> (Instance, PresentationOrder) {
    let mut rng = rng_for(seed);
    let instance: Instance = match kind {
        Kind::Arc => random_arcs(&mut rng, n, size, 1, size / 2).into(),
        Kind::Interval => random_intervals(&mut rng, n, size, size / 3).into(),
    };
    let order = random_order(&mut rng, n);
    (instance, order)
}

/// Twenty fixed instances with at most seven elements: intervals, arcs with
/// `K = 1`, and general arcs.
pub fn bound_corpus() -> Vec<Instance> {
    let mut corpus: Vec<Instance> = Vec::with_capacity(20);
    let mut seed = 0xC0FFEE;
    let mut next_rng = || {
        seed += 1;
        rng_for(seed)
    };
    for n in [4, 5, 6, 7, 7, 6] {
        corpus.push(random_intervals(&mut next_rng(), n, 20, 8).into());
    }
    while corpus.len() < 13 {
        let n = 4 + corpus.len() % 4;
        let g = random_arcs(&mut next_rng(), n, 16, 2, 10);
        if load_profile(&g).min_load == 1 {
            corpus.push(g.into());
        }
    }
    corpus.push(ffarc_core::build_construction(3).expect("w = 3").instance.into());
    while corpus.len() < 20 {
        let n = 4 + corpus.len() % 4;
        corpus.push(random_arcs(&mut next_rng(), n, 12, 2, 11).into());
    }
    corpus
}
