//! First-Fit online coloring of interval and circular-arc graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It provides the instance
//! model, the First-Fit engine (plain, split/merge, and paused runs), exact
//! structural analysis (point loads and maximum clique), the cut-and-unfold
//! reduction from arcs to intervals, and executable checks for the
//! dominance property and the 8ω / 8ω+1 / 8ω+K / 9ω color bounds.
//!
//! Text formats, random campaigns and the command-line driver live in the
//! companion `ffarc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
mod error;
pub mod ffengine;
pub mod model;
pub mod properties;
pub mod transform;

pub use analysis::{load_profile, max_clique, max_clique_with_limit, CliqueReport, LoadProfile};
pub use error::Error;
pub use ffengine::{ff_color, ff_paused, ff_split_merge, lowest_available, FfRun, SplitDiagnostics};
pub use model::{
    ArcInstance, ChromaticSequence, CircularArc, Color, ElementId, Geometry, Instance, Interval,
    IntervalInstance, PresentationOrder, Span, SplitPair, UnfoldMapping,
};
pub use properties::{
    build_construction, check_bounds, check_lemma1, BoundName, BoundVerdict, Construction,
    DominanceReport, Lemma1Options,
};
pub use transform::{auto_cut, expand_order, unfold};

pub type Result<T, E = Error> = core::result::Result<T, E>;
