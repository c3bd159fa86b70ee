//! Text formats, seeded random campaigns, probes and the command-line driver
//! for `ffarc-core`.

pub mod campaign;
pub mod cli;
pub mod format;
pub mod gen;
pub mod probe;
