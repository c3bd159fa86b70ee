use alloc::vec::Vec;
use core::fmt;

use crate::analysis::load_profile;
use crate::ffengine::{ff_color, ff_paused};
use crate::model::{ChromaticSequence, Color, ElementId, Geometry, IntervalInstance, PresentationOrder};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Lemma1Options {
    /// Pinned color. Defaults to `8ω + 1`.
    pub delta: Option<Color>,
    /// Also require the pinned pair to be the unique leftmost and unique
    /// rightmost intervals.
    pub strict_extremal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Paused color exceeds the non-paused color.
    Dominance,
    /// Non-paused color exceeds `8ω`.
    Ceiling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 1-based position in the order.
    pub j: usize,
    pub paused: Color,
    pub nonpaused: Color,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VIOLATION j={} paused={} nonpaused={}", self.j, self.paused, self.nonpaused)
    }
}

/// Elementwise comparison of a paused run against the plain run on the same
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceReport {
    pub order: PresentationOrder,
    /// Steps completed before the pinned pair (`i`).
    pub pause_index: usize,
    pub delta: Color,
    /// Exact `ω` of the interval instance.
    pub omega: usize,
    pub paused: ChromaticSequence,
    pub nonpaused: ChromaticSequence,
    pub violations: Vec<Violation>,
}

impl DominanceReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// Positions compared, i.e. the suffix after the pinned pair.
    pub fn compared(&self) -> usize {
        self.order.len() - self.pause_index - 2
    }

    fn suffix_max(&self, colors: &ChromaticSequence) -> Color {
        colors.colors()[self.pause_index + 2..].iter().copied().max().unwrap_or(0)
    }

    pub fn paused_suffix_max(&self) -> Color {
        self.suffix_max(&self.paused)
    }

    pub fn nonpaused_suffix_max(&self) -> Color {
        self.suffix_max(&self.nonpaused)
    }
}

/// Runs the non-paused process and the paused process that pins the
/// elements at order positions `pause_index`, `pause_index + 1` (0-based) to
/// `Δ`, then compares every later position: a violation is a paused color
/// above the non-paused one, or a non-paused color above `8ω`.
pub fn check_lemma1(
    g: &IntervalInstance,
    order: &PresentationOrder,
    pause_index: usize,
    opts: Lemma1Options,
) -> Result<DominanceReport> {
    if order.len() != g.len() {
        return Err(Error::OrderLength { expected: g.len(), found: order.len() });
    }
    if pause_index + 2 > order.len() {
        return Err(Error::PauseOutOfRange { pause: pause_index, len: order.len() });
    }
    let (left, right) = (order.ids()[pause_index], order.ids()[pause_index + 1]);
    if g.overlaps(left, right) {
        return Err(Error::PinnedPairOverlaps { left, right });
    }
    if opts.strict_extremal {
        check_extremal(g, left, right)?;
    }
    // Helly: ω of an interval instance is its maximum point load.
    let omega = load_profile(g).max_load;
    let ceiling = 8 * omega as Color;
    let delta = opts.delta.unwrap_or(ceiling + 1);

    let nonpaused = ff_color(g, order)?.colors;
    let paused = ff_paused(g, order, pause_index, &[(left, delta), (right, delta)])?.colors;
    let violations = (pause_index + 2..order.len())
        .filter_map(|t| {
            let (p, np) = (paused.colors()[t], nonpaused.colors()[t]);
            let kind = if p > np {
                ViolationKind::Dominance
            } else if np > ceiling {
                ViolationKind::Ceiling
            } else {
                return None;
            };
            Some(Violation { j: t + 1, paused: p, nonpaused: np, kind })
        })
        .collect();
    Ok(DominanceReport {
        order: order.clone(),
        pause_index,
        delta,
        omega,
        paused,
        nonpaused,
        violations,
    })
}

fn check_extremal(g: &IntervalInstance, a: ElementId, b: ElementId) -> Result<()> {
    let iv = g.intervals();
    let unique_min_start = |id: ElementId| iv.iter().all(|x| x.id == id || x.start > iv[id].start);
    let unique_max_end = |id: ElementId| iv.iter().all(|x| x.id == id || x.end < iv[id].end);
    let (lo, hi) = if iv[a].start <= iv[b].start { (a, b) } else { (b, a) };
    if !unique_min_start(lo) {
        return Err(Error::NotExtremal { id: lo });
    }
    if !unique_max_end(hi) {
        return Err(Error::NotExtremal { id: hi });
    }
    Ok(())
}
