use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{ArcInstance, ChromaticSequence, Color, ElementId, PresentationOrder};
use crate::{Error, Result};

/// Arc family that forces First-Fit to spend one color above `ω` on the
/// last arc `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub w: usize,
    pub instance: ArcInstance,
    /// `<b_1, c_1, a_2..a_w, c_2..c_{w-1}, b_2..b_{w-2}, δ>`.
    pub order: PresentationOrder,
    pub expected: ChromaticSequence,
    /// `δ`, the only arc through `cut_point`.
    pub special: ElementId,
    pub cut_point: usize,
    /// `{c_1, a_2, ..., a_w}`, sorted.
    pub clique_witness: Vec<ElementId>,
    /// Family label per arc id (`b_1`, `c_1`, `a_2`, ..., `delta`).
    pub labels: Vec<String>,
}

/// `<1, 1, 2..w, 2..w-1, 2..w-2, w+1>`.
pub fn expected_sequence(w: usize) -> Vec<Color> {
    let w = w as Color;
    let mut x = alloc::vec![1, 1];
    x.extend(2..=w);
    x.extend(2..w);
    x.extend(2..w - 1);
    x.push(w + 1);
    x
}

// Circle of 9 positions, cut at 0. Layout (circle positions):
//   delta        6,7,8,0,1        the only arc through 0
//   c_1          1..4             reaches the a-stack at 4
//   c_2..c_{w-1} 1,2
//   a_2..a_{w-1} 4
//   a_w          4,5,6            links the a-stack to delta's left part
//   b_1..b_{w-2} 6,7
// Right of the cut delta meets c_1..c_{w-1} (colors 1..w-1, so R = w);
// left of it b_1..b_{w-2} and a_w (colors 1..w-2 and w, so L = w-1).
const CIRCLE: usize = 9;
const CUT: usize = 0;
const DELTA: (usize, usize) = (6, 2);
const C_FIRST: (usize, usize) = (1, 5);
const C_REST: (usize, usize) = (1, 3);
const A_REST: (usize, usize) = (4, 5);
const A_LAST: (usize, usize) = (4, 7);
const B_ALL: (usize, usize) = (6, 8);

/// Builds the construction for `w >= 3`. Arc ids equal their position in the
/// returned order.
pub fn build_construction(w: usize) -> Result<Construction> {
    if w < 3 {
        return Err(Error::ConstructionTooSmall { w });
    }
    let mut spans = Vec::with_capacity(3 * w - 3);
    let mut labels = Vec::with_capacity(3 * w - 3);
    let mut push = |span: (usize, usize), label: String| {
        spans.push(span);
        labels.push(label);
    };

    push(B_ALL, String::from("b_1"));
    push(C_FIRST, String::from("c_1"));
    for k in 2..=w {
        push(if k == w { A_LAST } else { A_REST }, format!("a_{k}"));
    }
    for k in 2..w {
        push(C_REST, format!("c_{k}"));
    }
    for k in 2..w - 1 {
        push(B_ALL, format!("b_{k}"));
    }
    push(DELTA, String::from("delta"));

    let instance = ArcInstance::from_spans(CIRCLE, &spans)?;
    let n = instance.len();
    // c_1 has id 1, a_k has id k.
    let clique_witness = (1..=w).collect();
    Ok(Construction {
        w,
        order: PresentationOrder::identity(n),
        expected: ChromaticSequence::new(expected_sequence(w))?,
        special: n - 1,
        cut_point: CUT,
        clique_witness,
        labels,
        instance,
    })
}
