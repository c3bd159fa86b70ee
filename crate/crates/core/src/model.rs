//! Instances, presentation orders, chromatic sequences and unfold mappings.
//!
//! Positions are discrete. An arc on a circle of size `M` with endpoints
//! `(start, end)` occupies `{start, start+1, ..., end-1} mod M`; wrap-around is
//! encoded by `start >= end`. An interval `(start, end)` on a line occupies
//! `{start, ..., end-1}` and must satisfy `start < end`. Touching endpoints do
//! not overlap.

use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Result};

pub type ElementId = usize;
pub type Color = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CircularArc {
    pub id: ElementId,
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub id: ElementId,
    pub start: usize,
    pub end: usize,
}

/// The occupied region of a single element, detached from its instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Span {
    Arc { start: usize, end: usize, circle_size: usize },
    Interval { start: usize, end: usize },
}

impl Span {
    /// Occupied positions as at most two half-open ranges.
    pub fn segments(&self) -> Segments {
        match *self {
            Span::Interval { start, end } => Segments::one(start..end),
            Span::Arc { start, end, circle_size } => {
                if start < end {
                    Segments::one(start..end)
                } else if end == 0 {
                    Segments::one(start..circle_size)
                } else {
                    Segments { parts: [start..circle_size, 0..end], len: 2 }
                }
            }
        }
    }

    /// Number of occupied positions.
    pub fn len(&self) -> usize {
        self.segments().iter().map(|r| r.end - r.start).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn covers(&self, position: usize) -> bool {
        self.segments().iter().any(|r| r.contains(&position))
    }

    fn intersects(&self, other: &Span) -> bool {
        let ours = self.segments();
        let theirs = other.segments();
        ours.iter()
            .any(|a| theirs.iter().any(|b| a.start.max(b.start) < a.end.min(b.end)))
    }
}

/// Up to two disjoint position ranges.
#[derive(Clone, Debug)]
pub struct Segments {
    parts: [Range<usize>; 2],
    len: usize,
}

impl Segments {
    fn one(r: Range<usize>) -> Self {
        Segments { parts: [r, 0..0], len: 1 }
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Range<usize>> {
        self.parts[..self.len].iter()
    }
}

/// Intersection test between two detached spans.
///
/// Arcs on circles of different sizes, or an arc against an interval, are a
/// usage error.
pub fn overlaps(a: &Span, b: &Span) -> Result<bool> {
    match (a, b) {
        (Span::Interval { .. }, Span::Interval { .. }) => Ok(a.intersects(b)),
        (Span::Arc { circle_size: m1, .. }, Span::Arc { circle_size: m2, .. }) if m1 == m2 => {
            Ok(a.intersects(b))
        }
        _ => Err(Error::MismatchedKinds),
    }
}

/// Common read-only view over arc and interval instances.
pub trait Geometry {
    fn element_count(&self) -> usize;

    /// Circle size for arcs, line size for intervals.
    fn domain_size(&self) -> usize;

    /// Span of element `id`. Panics on an unknown id.
    fn span(&self, id: ElementId) -> Span;

    fn overlaps(&self, a: ElementId, b: ElementId) -> bool {
        self.span(a).intersects(&self.span(b))
    }

    /// Neighbor lists of the intersection graph, indexed by id.
    fn adjacency(&self) -> Vec<Vec<ElementId>> {
        let n = self.element_count();
        let spans: Vec<Span> = (0..n).map(|i| self.span(i)).collect();
        let mut adj = alloc::vec![Vec::new(); n];
        for a in 0..n {
            for b in (a + 1)..n {
                if spans[a].intersects(&spans[b]) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        adj
    }
}

fn check_ids(ids: impl Iterator<Item = ElementId>) -> Result<()> {
    for (expected, found) in ids.enumerate() {
        if found != expected {
            return Err(if found < expected {
                Error::DuplicateId { id: found }
            } else {
                Error::NonContiguousIds { expected, found }
            });
        }
    }
    Ok(())
}

/// A set of arcs on an integer circle: the circular-arc graph `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcInstance {
    circle_size: usize,
    arcs: Vec<CircularArc>,
}

impl ArcInstance {
    /// Validates and sorts `arcs` by id. Ids must be exactly `0..arcs.len()`
    /// and every arc must occupy between 1 and `circle_size - 1` positions.
    pub fn new(circle_size: usize, mut arcs: Vec<CircularArc>) -> Result<Self> {
        if circle_size == 0 {
            return Err(Error::ZeroDomain);
        }
        arcs.sort_by_key(|a| a.id);
        check_ids(arcs.iter().map(|a| a.id))?;
        for a in &arcs {
            for position in [a.start, a.end] {
                if position >= circle_size {
                    return Err(Error::PositionOutOfRange { id: a.id, position, size: circle_size });
                }
            }
            // start == end would be either 0 or M positions; both are invalid.
            if a.start == a.end {
                return Err(Error::FullCircle { id: a.id });
            }
        }
        Ok(ArcInstance { circle_size, arcs })
    }

    /// Builds an instance from `(start, end)` pairs, assigning ids in order.
    pub fn from_spans(circle_size: usize, spans: &[(usize, usize)]) -> Result<Self> {
        let arcs = spans
            .iter()
            .enumerate()
            .map(|(id, &(start, end))| CircularArc { id, start, end })
            .collect();
        Self::new(circle_size, arcs)
    }

    pub fn circle_size(&self) -> usize {
        self.circle_size
    }

    pub fn arcs(&self) -> &[CircularArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Number of positions occupied by arc `id`.
    pub fn arc_len(&self, id: ElementId) -> usize {
        let a = &self.arcs[id];
        (a.end + self.circle_size - a.start) % self.circle_size
    }

    pub fn covers(&self, id: ElementId, position: usize) -> bool {
        let a = &self.arcs[id];
        (position + self.circle_size - a.start) % self.circle_size < self.arc_len(id)
    }
}

impl Geometry for ArcInstance {
    fn element_count(&self) -> usize {
        self.arcs.len()
    }

    fn domain_size(&self) -> usize {
        self.circle_size
    }

    fn span(&self, id: ElementId) -> Span {
        let a = &self.arcs[id];
        Span::Arc { start: a.start, end: a.end, circle_size: self.circle_size }
    }
}

/// A set of intervals on an integer line: the unfolded graphs `G'`/`G''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalInstance {
    line_size: usize,
    intervals: Vec<Interval>,
}

impl IntervalInstance {
    pub fn new(line_size: usize, mut intervals: Vec<Interval>) -> Result<Self> {
        if line_size == 0 {
            return Err(Error::ZeroDomain);
        }
        intervals.sort_by_key(|i| i.id);
        check_ids(intervals.iter().map(|i| i.id))?;
        for i in &intervals {
            if i.start >= i.end {
                return Err(Error::EmptyInterval { id: i.id });
            }
            if i.end > line_size {
                return Err(Error::PositionOutOfRange { id: i.id, position: i.end, size: line_size });
            }
        }
        Ok(IntervalInstance { line_size, intervals })
    }

    pub fn from_spans(line_size: usize, spans: &[(usize, usize)]) -> Result<Self> {
        let intervals = spans
            .iter()
            .enumerate()
            .map(|(id, &(start, end))| Interval { id, start, end })
            .collect();
        Self::new(line_size, intervals)
    }

    pub fn line_size(&self) -> usize {
        self.line_size
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

impl Geometry for IntervalInstance {
    fn element_count(&self) -> usize {
        self.intervals.len()
    }

    fn domain_size(&self) -> usize {
        self.line_size
    }

    fn span(&self, id: ElementId) -> Span {
        let i = &self.intervals[id];
        Span::Interval { start: i.start, end: i.end }
    }

    fn overlaps(&self, a: ElementId, b: ElementId) -> bool {
        let (x, y) = (&self.intervals[a], &self.intervals[b]);
        x.start.max(y.start) < x.end.min(y.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Arcs(ArcInstance),
    Intervals(IntervalInstance),
}

impl Instance {
    pub fn is_circular(&self) -> bool {
        matches!(self, Instance::Arcs(_))
    }

    /// Instance-level overlap test by id.
    pub fn overlaps_checked(&self, a: ElementId, b: ElementId) -> Result<bool> {
        let n = self.element_count();
        for id in [a, b] {
            if id >= n {
                return Err(Error::UnknownElement { id });
            }
        }
        Ok(Geometry::overlaps(self, a, b))
    }
}

impl Geometry for Instance {
    fn element_count(&self) -> usize {
        match self {
            Instance::Arcs(a) => a.element_count(),
            Instance::Intervals(i) => i.element_count(),
        }
    }

    fn domain_size(&self) -> usize {
        match self {
            Instance::Arcs(a) => a.domain_size(),
            Instance::Intervals(i) => i.domain_size(),
        }
    }

    fn span(&self, id: ElementId) -> Span {
        match self {
            Instance::Arcs(a) => a.span(id),
            Instance::Intervals(i) => i.span(id),
        }
    }
}

impl From<ArcInstance> for Instance {
    fn from(a: ArcInstance) -> Self {
        Instance::Arcs(a)
    }
}

impl From<IntervalInstance> for Instance {
    fn from(i: IntervalInstance) -> Self {
        Instance::Intervals(i)
    }
}

/// The arrival sequence `Σ`: a permutation of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentationOrder(Vec<ElementId>);

impl PresentationOrder {
    pub fn new(ids: Vec<ElementId>) -> Result<Self> {
        let mut seen = alloc::vec![false; ids.len()];
        for &id in &ids {
            match seen.get_mut(id) {
                None => return Err(Error::NotAPermutation { reason: "id out of range" }),
                Some(true) => return Err(Error::NotAPermutation { reason: "repeated id" }),
                Some(slot) => *slot = true,
            }
        }
        Ok(PresentationOrder(ids))
    }

    pub fn identity(n: usize) -> Self {
        PresentationOrder((0..n).collect())
    }

    pub fn ids(&self) -> &[ElementId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position of `id` in the order.
    pub fn position_of(&self, id: ElementId) -> Option<usize> {
        self.0.iter().position(|&x| x == id)
    }

    pub(crate) fn check_against(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::OrderLength { expected: n, found: self.0.len() });
        }
        Ok(())
    }
}

/// The colors `X` assigned along a presentation order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChromaticSequence(Vec<Color>);

impl ChromaticSequence {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(index) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor { index });
        }
        Ok(ChromaticSequence(colors))
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest color in the sequence, 0 when empty.
    pub fn colors_used(&self) -> Color {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Color per element id, given the order the sequence is aligned with.
    pub fn by_id(&self, order: &PresentationOrder) -> Vec<Color> {
        let mut out = alloc::vec![0; order.len()];
        for (&id, &c) in order.ids().iter().zip(&self.0) {
            out[id] = c;
        }
        out
    }

    /// Fails with the first overlapping pair that shares a color.
    pub fn verify_proper<G: Geometry + ?Sized>(&self, g: &G, order: &PresentationOrder) -> Result<()> {
        order.check_against(g.element_count())?;
        if self.0.len() != order.len() {
            return Err(Error::OrderLength { expected: order.len(), found: self.0.len() });
        }
        let by_id = self.by_id(order);
        let n = by_id.len();
        for a in 0..n {
            for b in (a + 1)..n {
                if by_id[a] == by_id[b] && g.overlaps(a, b) {
                    return Err(Error::Improper { a, b, color: by_id[a] });
                }
            }
        }
        Ok(())
    }
}

/// Arc split by an unfold: `arc` became intervals `left` (ending at the cut)
/// and `right` (beginning at it).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub arc: ElementId,
    pub left: ElementId,
    pub right: ElementId,
}

/// Correspondence between the arcs of `G` and the intervals of the unfolded
/// instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnfoldMapping {
    pub cut_point: usize,
    pub split_pairs: Vec<SplitPair>,
    pub passthrough: Vec<(ElementId, ElementId)>,
}

impl UnfoldMapping {
    /// Number of arcs severed by the cut.
    pub fn k(&self) -> usize {
        self.split_pairs.len()
    }

    pub fn arc_count(&self) -> usize {
        self.split_pairs.len() + self.passthrough.len()
    }

    pub fn interval_count(&self) -> usize {
        2 * self.split_pairs.len() + self.passthrough.len()
    }

    pub fn split_of(&self, arc: ElementId) -> Option<&SplitPair> {
        self.split_pairs.iter().find(|p| p.arc == arc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(start: usize, end: usize) -> Span {
        Span::Interval { start, end }
    }

    fn arc(start: usize, end: usize, m: usize) -> Span {
        Span::Arc { start, end, circle_size: m }
    }

    #[test]
    fn touching_intervals_do_not_overlap() {
        assert!(!overlaps(&iv(0, 5), &iv(5, 9)).unwrap());
    }

    #[test]
    fn wrapping_arc_overlaps() {
        assert!(overlaps(&arc(10, 2, 12), &arc(0, 3, 12)).unwrap());
        assert!(arc(10, 2, 12).covers(11) && arc(10, 2, 12).covers(1));
        assert_eq!(arc(10, 2, 12).len(), 4);
    }

    #[test]
    fn identical_intervals_overlap() {
        assert!(overlaps(&iv(2, 4), &iv(2, 4)).unwrap());
    }

    #[test]
    fn mixed_kinds_rejected() {
        assert_eq!(overlaps(&iv(0, 3), &arc(0, 3, 12)), Err(Error::MismatchedKinds));
        assert_eq!(overlaps(&arc(0, 3, 10), &arc(0, 3, 12)), Err(Error::MismatchedKinds));
    }

    #[test]
    fn arc_ending_at_zero() {
        let s = arc(9, 0, 12);
        assert_eq!(s.len(), 3);
        assert!(s.covers(11) && !s.covers(0));
    }

    #[test]
    fn full_circle_rejected() {
        assert_eq!(ArcInstance::from_spans(12, &[(3, 3)]), Err(Error::FullCircle { id: 0 }));
    }

    #[test]
    fn bad_ids_rejected() {
        let dup = [CircularArc { id: 0, start: 0, end: 1 }, CircularArc { id: 0, start: 2, end: 3 }];
        assert_eq!(ArcInstance::new(12, dup.to_vec()), Err(Error::DuplicateId { id: 0 }));
        let gap = [Interval { id: 0, start: 0, end: 1 }, Interval { id: 2, start: 2, end: 3 }];
        assert!(matches!(
            IntervalInstance::new(12, gap.to_vec()),
            Err(Error::NonContiguousIds { expected: 1, found: 2 })
        ));
        assert_eq!(
            IntervalInstance::from_spans(5, &[(3, 3)]),
            Err(Error::EmptyInterval { id: 0 })
        );
        assert!(IntervalInstance::from_spans(5, &[(3, 6)]).is_err());
    }

    #[test]
    fn order_must_be_permutation() {
        assert!(PresentationOrder::new(vec![0, 2, 1]).is_ok());
        assert!(PresentationOrder::new(vec![0, 0, 1]).is_err());
        assert!(PresentationOrder::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn zero_color_rejected() {
        assert_eq!(ChromaticSequence::new(vec![1, 0]), Err(Error::ZeroColor { index: 1 }));
    }

    #[test]
    fn verify_proper_finds_clash() {
        let g = IntervalInstance::from_spans(10, &[(0, 4), (3, 6), (6, 8)]).unwrap();
        let order = PresentationOrder::identity(3);
        let ok = ChromaticSequence::new(vec![1, 2, 1]).unwrap();
        assert!(ok.verify_proper(&g, &order).is_ok());
        let bad = ChromaticSequence::new(vec![1, 1, 2]).unwrap();
        assert_eq!(bad.verify_proper(&g, &order), Err(Error::Improper { a: 0, b: 1, color: 1 }));
    }

    fn arc_instance() -> impl Strategy<Value = ArcInstance> {
        (2usize..20).prop_flat_map(|m| {
            prop::collection::vec((0..m, 1..m), 0..8).prop_map(move |v| {
                let spans: Vec<(usize, usize)> =
                    v.into_iter().map(|(s, len)| (s, (s + len) % m)).collect();
                ArcInstance::from_spans(m, &spans).unwrap()
            })
        })
    }

    fn interval_instance() -> impl Strategy<Value = IntervalInstance> {
        prop::collection::vec((0usize..20, 1usize..10), 0..8).prop_map(|v| {
            let spans: Vec<(usize, usize)> = v.into_iter().map(|(s, len)| (s, s + len)).collect();
            IntervalInstance::from_spans(30, &spans).unwrap()
        })
    }

    // Set-based reference for the overlap relation.
    fn occupied(s: &Span, size: usize) -> Vec<bool> {
        (0..size).map(|p| s.covers(p)).collect()
    }

    proptest! {
        #[test]
        fn arc_overlap_matches_position_sets(g in arc_instance()) {
            let m = g.circle_size();
            for a in 0..g.len() {
                prop_assert!(g.overlaps(a, a));
                prop_assert_eq!(g.span(a).len(), g.arc_len(a));
                for b in 0..g.len() {
                    let (sa, sb) = (occupied(&g.span(a), m), occupied(&g.span(b), m));
                    let shared = sa.iter().zip(&sb).any(|(x, y)| *x && *y);
                    prop_assert_eq!(g.overlaps(a, b), shared);
                    prop_assert_eq!(g.overlaps(a, b), g.overlaps(b, a));
                }
            }
        }

        #[test]
        fn interval_overlap_is_max_min(g in interval_instance()) {
            for x in g.intervals() {
                for y in g.intervals() {
                    let expect = x.start.max(y.start) < x.end.min(y.end);
                    prop_assert_eq!(g.overlaps(x.id, y.id), expect);
                    prop_assert_eq!(g.span(x.id).intersects(&g.span(y.id)), expect);
                }
            }
        }
    }
}
