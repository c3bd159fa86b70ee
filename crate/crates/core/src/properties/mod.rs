//! Executable forms of the coloring claims: the pause/non-pause dominance
//! checker, the forcing construction, and the color-bound verdicts.

mod bounds;
mod construction;
mod dominance;

pub use bounds::{bound_verdicts, check_bounds, BoundName, BoundVerdict};
pub use construction::{build_construction, expected_sequence, Construction};
pub use dominance::{check_lemma1, DominanceReport, Lemma1Options, Violation, ViolationKind};
