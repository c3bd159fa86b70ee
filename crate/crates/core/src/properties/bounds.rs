use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{load_profile, max_clique_with_limit, MAX_CLIQUE_LIMIT};
use crate::ffengine::ff_color;
use crate::model::{Color, Geometry, Instance, PresentationOrder};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    /// `8ω` for interval instances.
    Raman8w,
    /// `8ω + 1` for arc instances with `K = 1`.
    Prop1,
    /// `8ω + K` for arc instances.
    Theorem8wK,
    /// `9ω` for arc instances.
    Corollary9w,
}

impl BoundName {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::Raman8w => "raman8w",
            BoundName::Prop1 => "prop1",
            BoundName::Theorem8wK => "theorem8wK",
            BoundName::Corollary9w => "corollary9w",
        }
    }

    pub fn value(&self, omega: usize, k: usize) -> usize {
        match self {
            BoundName::Raman8w => 8 * omega,
            BoundName::Prop1 => 8 * omega + 1,
            BoundName::Theorem8wK => 8 * omega + k,
            BoundName::Corollary9w => 9 * omega,
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundVerdict {
    pub name: BoundName,
    pub omega: usize,
    pub k: usize,
    pub colors_used: Color,
    pub bound_value: usize,
    pub satisfied: bool,
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BOUND {} omega={} K={} used={} bound={} {}",
            self.name,
            self.omega,
            self.k,
            self.colors_used,
            self.bound_value,
            if self.satisfied { "PASS" } else { "FAIL" }
        )
    }
}

/// Verdicts that apply to an instance kind: `raman8w` for intervals;
/// `prop1` (only when `K = 1`), `theorem8wK` and `corollary9w` for arcs.
pub fn bound_verdicts(circular: bool, omega: usize, k: usize, colors_used: Color) -> Vec<BoundVerdict> {
    let names: &[BoundName] = match (circular, k) {
        (false, _) => &[BoundName::Raman8w],
        (true, 1) => &[BoundName::Prop1, BoundName::Theorem8wK, BoundName::Corollary9w],
        (true, _) => &[BoundName::Theorem8wK, BoundName::Corollary9w],
    };
    names
        .iter()
        .map(|&name| {
            let bound_value = name.value(omega, k);
            BoundVerdict {
                name,
                omega,
                k,
                colors_used,
                bound_value,
                satisfied: colors_used as usize <= bound_value,
            }
        })
        .collect()
}

/// Runs First-Fit on `order`, computes exact `ω` and `K = min_load`, and
/// returns one verdict per applicable bound. Arc instances above
/// [`MAX_CLIQUE_LIMIT`] elements are refused.
pub fn check_bounds(instance: &Instance, order: &PresentationOrder) -> Result<Vec<BoundVerdict>> {
    let run = ff_color(instance, order)?;
    let lp = load_profile(instance);
    let omega = match instance {
        // Helly property; no size limit needed.
        Instance::Intervals(_) => lp.max_load,
        Instance::Arcs(_) => max_clique_with_limit(instance, MAX_CLIQUE_LIMIT)?.omega,
    };
    debug_assert!(instance.element_count() == order.len());
    Ok(bound_verdicts(instance.is_circular(), omega, lp.min_load, run.colors_used()))
}
