//! Seeded random instances and orders.

use ffarc_core::{ArcInstance, IntervalInstance, PresentationOrder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

/// Per-trial seed derived from a base seed (splitmix64 finalizer).
pub fn trial_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_for(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` arcs on a circle of size `circle`, lengths uniform in `min_len..=max_len`
/// (clamped to `1..circle`).
pub fn random_arcs(rng: &mut TrialRng, n: usize, circle: usize, min_len: usize, max_len: usize) -> ArcInstance {
    assert!(circle >= 2, "a circle needs at least two positions");
    let hi = max_len.clamp(1, circle - 1);
    let lo = min_len.clamp(1, hi);
    let spans: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let start = rng.gen_range(0..circle);
            let len = rng.gen_range(lo..=hi);
            (start, (start + len) % circle)
        })
        .collect();
    ArcInstance::from_spans(circle, &spans).expect("lengths stay within 1..circle")
}

/// `n` intervals on a line of size `line`, lengths uniform in `1..=max_len`.
pub fn random_intervals(rng: &mut TrialRng, n: usize, line: usize, max_len: usize) -> IntervalInstance {
    let hi = max_len.clamp(1, line);
    let spans: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=hi);
            let start = rng.gen_range(0..=line - len);
            (start, start + len)
        })
        .collect();
    IntervalInstance::from_spans(line, &spans).expect("intervals fit the line")
}

pub fn random_order(rng: &mut TrialRng, n: usize) -> PresentationOrder {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    PresentationOrder::new(ids).expect("shuffle of 0..n")
}
