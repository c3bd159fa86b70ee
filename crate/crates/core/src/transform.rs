//! Cut-and-unfold: from a circular-arc instance to an interval instance.
//!
//! Cutting a circle of size `M` at position `c` produces a line of size
//! `M + 1`. Line position `q` in `1..M` holds circle position `(c + q) mod M`;
//! the cut position itself appears at both ends, as line position `0` (for
//! pieces that begin at the cut) and line position `M` (for pieces that end
//! at it). Every arc covering `c` is split into a left piece ending at
//! `M + 1` and a right piece starting at `0`, so exactly `load(c)` arcs are
//! split and both pieces are always nonempty. All other arcs keep their
//! length and relative position.

use alloc::vec::Vec;

use crate::analysis::load_profile;
use crate::model::{
    ArcInstance, ElementId, Interval, IntervalInstance, PresentationOrder, SplitPair, UnfoldMapping,
};
use crate::{Error, Result};

/// Cut point minimizing the number of severed arcs (smallest position on
/// ties).
pub fn auto_cut(g: &ArcInstance) -> usize {
    load_profile(g).argmin_point
}

/// Unfolds `g` at `cut_point`. Interval ids follow arc id order; a split arc
/// takes two consecutive ids, left piece first.
pub fn unfold(g: &ArcInstance, cut_point: usize) -> Result<(IntervalInstance, UnfoldMapping)> {
    let m = g.circle_size();
    if cut_point >= m {
        return Err(Error::CutOutOfRange { cut: cut_point, size: m });
    }
    let mut intervals = Vec::with_capacity(2 * g.len());
    let mut split_pairs = Vec::new();
    let mut passthrough = Vec::new();
    for arc in g.arcs() {
        let len = g.arc_len(arc.id);
        let next = intervals.len();
        if g.covers(arc.id, cut_point) {
            let to_cut = (cut_point + m - arc.start) % m;
            let (left, right) = (next, next + 1);
            intervals.push(Interval { id: left, start: m - to_cut, end: m + 1 });
            intervals.push(Interval { id: right, start: 0, end: len - to_cut });
            split_pairs.push(SplitPair { arc: arc.id, left, right });
        } else {
            let start = (arc.start + m - cut_point) % m;
            intervals.push(Interval { id: next, start, end: start + len });
            passthrough.push((arc.id, next));
        }
    }
    let unfolded = IntervalInstance::new(m + 1, intervals)?;
    Ok((unfolded, UnfoldMapping { cut_point, split_pairs, passthrough }))
}

/// Rewrites an order over arcs into one over the unfolded intervals, putting
/// each split arc's left and right pieces consecutively in its place.
pub fn expand_order(order: &PresentationOrder, mapping: &UnfoldMapping) -> Result<PresentationOrder> {
    let arcs = mapping.arc_count();
    if order.len() != arcs {
        return Err(Error::MappingMismatch { reason: "order length differs from arc count" });
    }
    let mut image: Vec<Option<(ElementId, Option<ElementId>)>> = alloc::vec![None; arcs];
    for &(arc, interval) in &mapping.passthrough {
        *image.get_mut(arc).ok_or(Error::MappingMismatch { reason: "arc id out of range" })? =
            Some((interval, None));
    }
    for p in &mapping.split_pairs {
        *image.get_mut(p.arc).ok_or(Error::MappingMismatch { reason: "arc id out of range" })? =
            Some((p.left, Some(p.right)));
    }
    let mut ids = Vec::with_capacity(mapping.interval_count());
    for &arc in order.ids() {
        match image[arc] {
            Some((first, second)) => {
                ids.push(first);
                ids.extend(second);
            }
            None => return Err(Error::MappingMismatch { reason: "arc missing from mapping" }),
        }
    }
    PresentationOrder::new(ids)
}
