//! Online First-Fit coloring.
//!
//! Every step presents one element and gives it the least positive color not
//! used by an already-presented neighbor. Three entry points share that rule:
//! [`ff_color`] is the plain online process, [`ff_split_merge`] colors one
//! designated arc through the left/right/merge decomposition, and
//! [`ff_paused`] pins chosen elements to caller-supplied colors.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::model::{ArcInstance, ChromaticSequence, Color, ElementId, Geometry, PresentationOrder};
use crate::{Error, Result};

/// Least positive integer not in `blocked`.
pub fn lowest_available(blocked: &BTreeSet<Color>) -> Color {
    lowest_available_from(blocked, 1)
}

/// Least integer `>= floor` (and `>= 1`) not in `blocked`.
pub fn lowest_available_from(blocked: &BTreeSet<Color>, floor: Color) -> Color {
    let mut candidate = floor.max(1);
    for &c in blocked.range(candidate..) {
        if c != candidate {
            break;
        }
        candidate += 1;
    }
    candidate
}

/// Left/right/merge colors recorded at the special arc's step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitDiagnostics {
    pub special: ElementId,
    pub cut_point: usize,
    /// Color available against left-part neighbors only.
    pub left: Color,
    /// Color available against right-part neighbors only.
    pub right: Color,
    /// Least color `>= max(left, right)` available against all neighbors.
    pub merged: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfRun {
    pub order: PresentationOrder,
    pub colors: ChromaticSequence,
    /// Colors of already-presented neighbors at each step.
    pub per_step_blocked: Vec<BTreeSet<Color>>,
    pub split: Option<SplitDiagnostics>,
}

impl FfRun {
    pub fn colors_used(&self) -> Color {
        self.colors.colors_used()
    }
}

struct Progress {
    adjacency: Vec<Vec<ElementId>>,
    assigned: Vec<Option<Color>>,
    colors: Vec<Color>,
    blocked: Vec<BTreeSet<Color>>,
}

impl Progress {
    fn new<G: Geometry + ?Sized>(g: &G, order: &PresentationOrder) -> Result<Self> {
        order.check_against(g.element_count())?;
        Ok(Progress {
            adjacency: g.adjacency(),
            assigned: alloc::vec![None; order.len()],
            colors: Vec::with_capacity(order.len()),
            blocked: Vec::with_capacity(order.len()),
        })
    }

    fn neighbor_colors(&self, id: ElementId) -> BTreeSet<Color> {
        self.adjacency[id].iter().filter_map(|&n| self.assigned[n]).collect()
    }

    fn assign(&mut self, id: ElementId, color: Color, blocked: BTreeSet<Color>) {
        self.assigned[id] = Some(color);
        self.colors.push(color);
        self.blocked.push(blocked);
    }

    fn first_fit(&mut self, id: ElementId) {
        let blocked = self.neighbor_colors(id);
        let color = lowest_available(&blocked);
        self.assign(id, color, blocked);
    }

    fn finish(self, order: &PresentationOrder, split: Option<SplitDiagnostics>) -> FfRun {
        FfRun {
            order: order.clone(),
            colors: ChromaticSequence::new(self.colors).expect("colors are positive"),
            per_step_blocked: self.blocked,
            split,
        }
    }
}

/// Plain First-Fit along `order`. Works for any [`Geometry`].
pub fn ff_color<G: Geometry + ?Sized>(g: &G, order: &PresentationOrder) -> Result<FfRun> {
    let mut p = Progress::new(g, order)?;
    for &id in order.ids() {
        p.first_fit(id);
    }
    Ok(p.finish(order, None))
}

/// First-Fit where arc `special` is colored in three steps: `L` against its
/// left-part neighbors, `R` against its right-part neighbors, then the least
/// color `>= max(L, R)` free against all neighbors.
///
/// `special` must cover `cut_point`. Its left part runs from its start up to
/// and including the cut position, its right part from the cut position to
/// its end, matching the two pieces produced by [`crate::unfold`]. A neighbor
/// may fall in both parts.
pub fn ff_split_merge(
    g: &ArcInstance,
    order: &PresentationOrder,
    special: ElementId,
    cut_point: usize,
) -> Result<FfRun> {
    let m = g.circle_size();
    if cut_point >= m {
        return Err(Error::CutOutOfRange { cut: cut_point, size: m });
    }
    if special >= g.len() {
        return Err(Error::UnknownElement { id: special });
    }
    if !g.covers(special, cut_point) {
        return Err(Error::NotCrossing { id: special, cut: cut_point });
    }
    let start = g.arcs()[special].start;
    let to_cut = (cut_point + m - start) % m;
    let len = g.arc_len(special);
    let left_part: Vec<usize> = (0..=to_cut).map(|k| (start + k) % m).collect();
    let right_part: Vec<usize> = (to_cut..len).map(|k| (start + k) % m).collect();

    let mut p = Progress::new(g, order)?;
    let mut diagnostics = None;
    for &id in order.ids() {
        if id != special {
            p.first_fit(id);
            continue;
        }
        let mut left = BTreeSet::new();
        let mut right = BTreeSet::new();
        for &n in &p.adjacency[id] {
            let Some(c) = p.assigned[n] else { continue };
            if left_part.iter().any(|&q| g.covers(n, q)) {
                left.insert(c);
            }
            if right_part.iter().any(|&q| g.covers(n, q)) {
                right.insert(c);
            }
        }
        let l = lowest_available(&left);
        let r = lowest_available(&right);
        let all: BTreeSet<Color> = left.union(&right).copied().collect();
        let merged = lowest_available_from(&all, l.max(r));
        diagnostics = Some(SplitDiagnostics { special, cut_point, left: l, right: r, merged });
        p.assign(id, merged, all);
    }
    Ok(p.finish(order, diagnostics))
}

/// First-Fit that pauses after `pause_after` steps, gives the next
/// `pinned.len()` elements exactly their pinned colors, then resumes.
///
/// `pinned[k].0` must sit at order position `pause_after + k` (0-based).
/// Pinned colors bypass the First-Fit rule but stay visible to later
/// neighbors. Pinned colors may clash with earlier neighbors; run
/// [`ChromaticSequence::verify_proper`] when that matters.
pub fn ff_paused<G: Geometry + ?Sized>(
    g: &G,
    order: &PresentationOrder,
    pause_after: usize,
    pinned: &[(ElementId, Color)],
) -> Result<FfRun> {
    let mut p = Progress::new(g, order)?;
    if pause_after + pinned.len() > order.len() {
        return Err(Error::PauseOutOfRange { pause: pause_after, len: order.len() });
    }
    for (k, &(id, color)) in pinned.iter().enumerate() {
        if order.ids()[pause_after + k] != id {
            return Err(Error::PinnedOutOfPlace { id, expected_position: pause_after + k });
        }
        if color == 0 {
            return Err(Error::ZeroColor { index: pause_after + k });
        }
    }
    for (t, &id) in order.ids().iter().enumerate() {
        match t.checked_sub(pause_after).and_then(|k| pinned.get(k)) {
            Some(&(_, color)) => {
                let blocked = p.neighbor_colors(id);
                p.assign(id, color, blocked);
            }
            None => p.first_fit(id),
        }
    }
    Ok(p.finish(order, None))
}
