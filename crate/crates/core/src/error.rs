use core::fmt;

use crate::model::{Color, ElementId};

/// Errors raised by the model, engine, analysis and property checkers.
///
/// Every variant is a usage error: the caller handed over data that breaks a
/// documented precondition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ZeroDomain,
    PositionOutOfRange { id: ElementId, position: usize, size: usize },
    FullCircle { id: ElementId },
    EmptyInterval { id: ElementId },
    DuplicateId { id: ElementId },
    NonContiguousIds { expected: ElementId, found: ElementId },
    MismatchedKinds,
    UnknownElement { id: ElementId },
    NotAPermutation { reason: &'static str },
    OrderLength { expected: usize, found: usize },
    ZeroColor { index: usize },
    CutOutOfRange { cut: usize, size: usize },
    NotCrossing { id: ElementId, cut: usize },
    PinnedOutOfPlace { id: ElementId, expected_position: usize },
    PauseOutOfRange { pause: usize, len: usize },
    PinnedPairOverlaps { left: ElementId, right: ElementId },
    NotExtremal { id: ElementId },
    TooLarge { elements: usize, limit: usize },
    ConstructionTooSmall { w: usize },
    MappingMismatch { reason: &'static str },
    Improper { a: ElementId, b: ElementId, color: Color },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDomain => write!(f, "circle or line size must be positive"),
            Error::PositionOutOfRange { id, position, size } => {
                write!(f, "element {id}: position {position} outside 0..{size}")
            }
            Error::FullCircle { id } => write!(f, "arc {id} covers the whole circle"),
            Error::EmptyInterval { id } => write!(f, "interval {id} is empty"),
            Error::DuplicateId { id } => write!(f, "duplicate id {id}"),
            Error::NonContiguousIds { expected, found } => {
                write!(f, "ids must be contiguous: expected {expected}, found {found}")
            }
            Error::MismatchedKinds => write!(f, "cannot mix arcs and intervals"),
            Error::UnknownElement { id } => write!(f, "unknown element id {id}"),
            Error::NotAPermutation { reason } => write!(f, "order is not a permutation: {reason}"),
            Error::OrderLength { expected, found } => {
                write!(f, "order has {found} entries, instance has {expected} elements")
            }
            Error::ZeroColor { index } => write!(f, "color at position {index} is not positive"),
            Error::CutOutOfRange { cut, size } => write!(f, "cut point {cut} outside 0..{size}"),
            Error::NotCrossing { id, cut } => write!(f, "arc {id} does not cover cut point {cut}"),
            Error::PinnedOutOfPlace { id, expected_position } => {
                write!(f, "pinned element {id} is not at order position {expected_position}")
            }
            Error::PauseOutOfRange { pause, len } => {
                write!(f, "pause index {pause} leaves no room for two pinned elements in an order of length {len}")
            }
            Error::PinnedPairOverlaps { left, right } => {
                write!(f, "pinned elements {left} and {right} overlap")
            }
            Error::NotExtremal { id } => {
                write!(f, "pinned element {id} is not the unique leftmost/rightmost interval")
            }
            Error::TooLarge { elements, limit } => {
                write!(f, "exact clique search refused: {elements} elements exceeds limit {limit}")
            }
            Error::ConstructionTooSmall { w } => write!(f, "construction needs w >= 3, got {w}"),
            Error::MappingMismatch { reason } => write!(f, "order does not match mapping: {reason}"),
            Error::Improper { a, b, color } => {
                write!(f, "overlapping elements {a} and {b} share color {color}")
            }
        }
    }
}

impl core::error::Error for Error {}
