//! Line-based text formats for instances, orders, colorings and reports.
//!
//! ```text
//! # comment
//! circle 12          (or: line 20)
//! arc 0 10 2         (or: int <id> <start> <end>)
//! order 0            optional
//! colors 1           optional, aligned with the preceding order
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use ffarc_core::{
    ArcInstance, ChromaticSequence, CircularArc, Geometry, Instance, Interval,
    IntervalInstance, PresentationOrder, UnfoldMapping,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Everything a file may carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub instance: Instance,
    pub order: Option<PresentationOrder>,
    pub colors: Option<ChromaticSequence>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Circle,
    Line,
}

fn numbers(line: usize, fields: &[&str], want: usize) -> Result<Vec<usize>, ParseError> {
    if fields.len() != want {
        return Err(ParseError::new(line, format!("expected {want} numbers, found {}", fields.len())));
    }
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| ParseError::new(line, format!("not a non-negative integer: {f:?}"))))
        .collect()
}

fn id_list(line: usize, fields: &[&str]) -> Result<Vec<usize>, ParseError> {
    numbers(line, fields, fields.len())
}

/// Parses a full document. Order and colors lines are optional; colors
/// require a preceding order of the same length.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut header: Option<(Kind, usize, usize)> = None;
    let mut elements: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut order: Option<(usize, Vec<usize>)> = None;
    let mut colors: Option<(usize, Vec<usize>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.split('#').next().unwrap_or("").trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let (keyword, rest) = (fields[0], &fields[1..]);
        match keyword {
            "circle" | "line" => {
                if header.is_some() {
                    return Err(ParseError::new(line, "second header"));
                }
                let size = numbers(line, rest, 1)?[0];
                if size == 0 {
                    return Err(ParseError::new(line, "size must be positive"));
                }
                let kind = if keyword == "circle" { Kind::Circle } else { Kind::Line };
                header = Some((kind, size, line));
            }
            "arc" | "int" => {
                let Some((kind, size, _)) = header else {
                    return Err(ParseError::new(line, "element before header"));
                };
                let expected = if kind == Kind::Circle { "arc" } else { "int" };
                if keyword != expected {
                    return Err(ParseError::new(line, format!("`{keyword}` in a {expected} instance")));
                }
                let v = numbers(line, rest, 3)?;
                let (id, start, end) = (v[0], v[1], v[2]);
                if let Some(first) = seen.insert(id, line) {
                    return Err(ParseError::new(line, format!("duplicate id {id} (first on line {first})")));
                }
                match kind {
                    Kind::Circle => {
                        if start >= size || end >= size {
                            return Err(ParseError::new(line, format!("endpoint outside 0..{size}")));
                        }
                        if start == end {
                            return Err(ParseError::new(line, format!("arc {id} covers all {size} positions")));
                        }
                    }
                    Kind::Line => {
                        if start >= end {
                            return Err(ParseError::new(line, format!("interval {id} is empty")));
                        }
                        if end > size {
                            return Err(ParseError::new(line, format!("endpoint beyond line size {size}")));
                        }
                    }
                }
                elements.push((id, start, end, line));
            }
            "order" => {
                if order.is_some() {
                    return Err(ParseError::new(line, "second order line"));
                }
                order = Some((line, id_list(line, rest)?));
            }
            "colors" => {
                if colors.is_some() {
                    return Err(ParseError::new(line, "second colors line"));
                }
                colors = Some((line, id_list(line, rest)?));
            }
            other => return Err(ParseError::new(line, format!("unknown keyword {other:?}"))),
        }
    }

    let Some((kind, size, header_line)) = header else {
        return Err(ParseError::new(text.lines().count().max(1), "missing `circle` or `line` header"));
    };
    let n = elements.len();
    if let Some(&(id, _, _, line)) = elements.iter().find(|e| e.0 >= n) {
        return Err(ParseError::new(line, format!("id {id} breaks contiguous numbering 0..{n}")));
    }
    let instance: Instance = match kind {
        Kind::Circle => ArcInstance::new(
            size,
            elements.iter().map(|&(id, start, end, _)| CircularArc { id, start, end }).collect(),
        )
        .map(Instance::Arcs),
        Kind::Line => IntervalInstance::new(
            size,
            elements.iter().map(|&(id, start, end, _)| Interval { id, start, end }).collect(),
        )
        .map(Instance::Intervals),
    }
    .map_err(|e| ParseError::new(header_line, e.to_string()))?;

    let order = match order {
        None => None,
        Some((line, ids)) => Some(parse_order_ids(line, ids, n)?),
    };
    let colors = match colors {
        None => None,
        Some((line, cs)) => {
            let Some(o) = &order else {
                return Err(ParseError::new(line, "colors without a preceding order"));
            };
            if cs.len() != o.len() {
                return Err(ParseError::new(line, "colors not aligned with order"));
            }
            let cs = cs.into_iter().map(|c| c as u32).collect();
            Some(ChromaticSequence::new(cs).map_err(|e| ParseError::new(line, e.to_string()))?)
        }
    };
    Ok(Document { instance, order, colors })
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    parse_document(text).map(|d| d.instance)
}

fn parse_order_ids(line: usize, ids: Vec<usize>, n: usize) -> Result<PresentationOrder, ParseError> {
    if ids.len() != n {
        return Err(ParseError::new(line, format!("order lists {} ids, instance has {n}", ids.len())));
    }
    PresentationOrder::new(ids).map_err(|e| ParseError::new(line, e.to_string()))
}

/// Parses a single `order <id> ...` line (the keyword is optional) against an
/// instance of `n` elements. Comment and blank lines are skipped.
pub fn parse_order(text: &str, n: usize) -> Result<PresentationOrder, ParseError> {
    for (idx, raw) in text.lines().enumerate() {
        let trimmed = raw.split('#').next().unwrap_or("").trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields[0] == "order" {
            fields.remove(0);
        }
        return parse_order_ids(idx + 1, id_list(idx + 1, &fields)?, n);
    }
    parse_order_ids(1, Vec::new(), n)
}

/// Canonical rendering: header, then elements by id.
pub fn render_instance(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Arcs(g) => {
            writeln!(out, "circle {}", g.circle_size()).unwrap();
            for a in g.arcs() {
                writeln!(out, "arc {} {} {}", a.id, a.start, a.end).unwrap();
            }
        }
        Instance::Intervals(g) => {
            writeln!(out, "line {}", g.line_size()).unwrap();
            for i in g.intervals() {
                writeln!(out, "int {} {} {}", i.id, i.start, i.end).unwrap();
            }
        }
    }
    out
}

fn join<T: ToString>(keyword: &str, items: impl IntoIterator<Item = T>) -> String {
    let mut s = String::from(keyword);
    for x in items {
        s.push(' ');
        s.push_str(&x.to_string());
    }
    s
}

pub fn render_order(order: &PresentationOrder) -> String {
    join("order", order.ids())
}

pub fn render_colors(colors: &ChromaticSequence) -> String {
    join("colors", colors.colors())
}

/// `cut`, `split` and `pass` lines for an unfold mapping.
pub fn render_mapping(mapping: &UnfoldMapping) -> String {
    let mut out = format!("cut {}\n", mapping.cut_point);
    for p in &mapping.split_pairs {
        writeln!(out, "split {} -> {} {}", p.arc, p.left, p.right).unwrap();
    }
    for (arc, interval) in &mapping.passthrough {
        writeln!(out, "pass {arc} -> {interval}").unwrap();
    }
    out
}

/// Instance text with a comment naming each element, e.g. for constructions.
pub fn render_labeled(instance: &Instance, labels: &[String]) -> String {
    let base = render_instance(instance);
    let mut out = String::new();
    for (k, line) in base.lines().enumerate() {
        out.push_str(line);
        if k > 0 {
            if let Some(label) = labels.get(k - 1) {
                out.push_str("  # ");
                out.push_str(label);
            }
        }
        out.push('\n');
    }
    out
}

/// Ids of `g`, used when a document carries no order.
pub fn ascending_order<G: Geometry>(g: &G) -> PresentationOrder {
    PresentationOrder::identity(g.element_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_single_arc() {
        let g = parse_instance("circle 12\narc 0 10 2\n").unwrap();
        assert_eq!(g, Instance::Arcs(ArcInstance::from_spans(12, &[(10, 2)]).unwrap()));
    }

    #[test]
    fn parses_intervals() {
        let g = parse_instance("line 20\nint 0 0 5\nint 1 5 9\n").unwrap();
        let Instance::Intervals(iv) = &g else { panic!() };
        assert_eq!(iv.len(), 2);
        assert!(!iv.overlaps(0, 1));
    }

    #[test]
    fn full_circle_is_error() {
        let e = parse_instance("circle 12\narc 0 3 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("covers all"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_instance("# x\ncircle 12\narc 0 1 2\narc 0 4 5\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("duplicate id 0"));
        assert_eq!(parse_instance("circle 12\narc 0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("circle 12\narc 0 1 20\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("circle 12\narc 1 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("arc 0 1 2\n").unwrap_err().line, 1);
        assert_eq!(parse_instance("line 9\nint 0 4 4\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("line 9\narc 0 1 4\n").unwrap_err().line, 2);
        assert_eq!(parse_instance("line 9\nbogus\n").unwrap_err().line, 2);
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn document_with_order_and_colors() {
        let d = parse_document("circle 12\narc 0 0 3\narc 1 2 5\norder 1 0\ncolors 1 2\n").unwrap();
        assert_eq!(d.order.unwrap().ids(), &[1, 0]);
        assert_eq!(d.colors.unwrap().colors(), &[1, 2]);
        let e = parse_document("circle 12\narc 0 0 3\narc 1 2 5\norder 1\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(parse_document("circle 12\narc 0 0 3\ncolors 1\n").is_err());
    }

    #[test]
    fn order_line_parsing() {
        assert_eq!(parse_order("order 2 0 1\n", 3).unwrap().ids(), &[2, 0, 1]);
        assert_eq!(parse_order("2 0 1", 3).unwrap().ids(), &[2, 0, 1]);
        assert!(parse_order("order 2 0", 3).is_err());
        assert!(parse_order("order 2 0 0", 3).is_err());
        assert!(parse_order("", 0).unwrap().is_empty());
    }

    #[test]
    fn render_sorted_by_id() {
        let g: Instance = ArcInstance::new(
            12,
            vec![CircularArc { id: 1, start: 4, end: 6 }, CircularArc { id: 0, start: 10, end: 2 }],
        )
        .unwrap()
        .into();
        assert_eq!(render_instance(&g), "circle 12\narc 0 10 2\narc 1 4 6\n");
    }

    #[test]
    fn renders_mapping_lines() {
        let g = ArcInstance::from_spans(12, &[(10, 2), (3, 5)]).unwrap();
        let (_, map) = ffarc_core::unfold(&g, 0).unwrap();
        assert_eq!(render_mapping(&map), "cut 0\nsplit 0 -> 0 1\npass 1 -> 2\n");
    }

    fn any_instance() -> impl Strategy<Value = Instance> {
        let arcs = (2usize..30).prop_flat_map(|m| {
            prop::collection::vec((0..m, 1..m), 0..12).prop_map(move |v| {
                let spans: Vec<_> = v.into_iter().map(|(s, l)| (s, (s + l) % m)).collect();
                Instance::Arcs(ArcInstance::from_spans(m, &spans).unwrap())
            })
        });
        let lines = prop::collection::vec((0usize..40, 1usize..10), 0..12).prop_map(|v| {
            let spans: Vec<_> = v.into_iter().map(|(s, l)| (s, s + l)).collect();
            Instance::Intervals(IntervalInstance::from_spans(50, &spans).unwrap())
        });
        prop_oneof![arcs, lines]
    }

    proptest! {
        #[test]
        fn parse_render_roundtrip(g in any_instance()) {
            let text = render_instance(&g);
            prop_assert_eq!(parse_instance(&text).unwrap(), g);
        }
    }
}
