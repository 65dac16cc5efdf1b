//! SVG pictures of paths: the usual lattice picture and the stretched diagram.
//!
//! Output uses integer pixel coordinates only, so it is byte-for-byte
//! deterministic. Colors carry a monochrome fallback: `+` on up arrows, `-`
//! on down arrows and `*` in dinv cells.

use std::fmt::Write as _;

use crate::diagram::{Color, PathDiagram};
use crate::error::{Error, Result};
use crate::paths::{Step, StepWord};
use crate::statistics::dinv_cell_list;

const CELL: i64 = 40;
const COLUMN: i64 = 40;
const ROW: i64 = 16;
const MARGIN: i64 = 30;

const RED: &str = "#d62728";
const BLUE: &str = "#1f77b4";
const GREEN: &str = "#2ca02c";
const GRID: &str = "#cccccc";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Lattice picture with the diagonal and the dinv cells.
    Grid,
    /// Stretched arrow diagram.
    Diagram,
}

pub fn render(word: &StepWord, style: Style, highlight: Option<usize>) -> Result<String> {
    word.require_dyck()?;
    if let Some(column) = highlight {
        if column == 0 || column > word.len() {
            return Err(Error::IndexOutOfRange {
                index: column,
                len: word.len(),
            });
        }
    }
    match style {
        Style::Grid => render_grid(word, highlight),
        Style::Diagram => Ok(render_diagram(word, highlight)),
    }
}

fn header(out: &mut String, width: i64, height: i64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
}

/// Lattice picture: grid, diagonal, path, and the cells counted by dinv.
pub fn render_grid(word: &StepWord, highlight: Option<usize>) -> Result<String> {
    let params = word.params();
    let (east, north) = (params.east_count() as i64, params.north_count() as i64);
    let (width, height) = (east * CELL + 2 * MARGIN, north * CELL + 2 * MARGIN);
    let px = |x: i64| MARGIN + x * CELL;
    let py = |y: i64| MARGIN + (north - y) * CELL;

    let mut out = String::new();
    header(&mut out, width, height);
    writeln!(out, r#"<g class="dinv-cells">"#).unwrap();
    for (x, y) in dinv_cell_list(word)? {
        let (x, y) = (x as i64, y as i64);
        writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{GREEN}" fill-opacity="0.35"/><text x="{}" y="{}" text-anchor="middle">*</text>"#,
            px(x),
            py(y + 1),
            px(x) + CELL / 2,
            py(y) - CELL / 2 + 4
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r#"<g class="lattice" stroke="{GRID}">"#).unwrap();
    for x in 0..=east {
        writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(0),
            py(north)
        )
        .unwrap();
    }
    for y in 0..=north {
        writeln!(
            out,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            py(y),
            px(0),
            px(east)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(
        out,
        r#"<line class="diagonal" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-dasharray="4 3"/>"#,
        px(0),
        py(0),
        px(east),
        py(north)
    )
    .unwrap();

    let mut points = vec![(0i64, 0i64)];
    for &s in word.steps() {
        let (x, y) = *points.last().unwrap();
        points.push(match s {
            Step::North => (x, y + 1),
            Step::East => (x + 1, y),
        });
    }
    let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    writeln!(
        out,
        r#"<polyline class="path" points="{}" fill="none" stroke="black" stroke-width="3"/>"#,
        coords.join(" ")
    )
    .unwrap();
    for (i, (&(x, y), rank)) in points.iter().zip(word.vertex_ranks()).enumerate() {
        let fill = if highlight == Some(i + 1) { GREEN } else { "black" };
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="3" fill="{fill}"/><text x="{}" y="{}">{rank}</text>"#,
            px(x),
            py(y),
            px(x) + 4,
            py(y) - 4
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Stretched diagram: one arrow per column on the `(dm+dn) x dmn` rectangle,
/// circled start levels, and an optional green sweep line.
pub fn render_diagram(word: &StepWord, highlight: Option<usize>) -> String {
    let diagram = PathDiagram::new(word);
    let params = word.params();
    let columns = word.len() as i64;
    let rows = diagram.rows();
    let (lo, hi) = (rows.start, rows.end);
    let label = 4 * 8;
    let width = label + columns * COLUMN + 2 * MARGIN;
    let height = (hi - lo) * ROW + 2 * MARGIN + 16;
    let px = |x: i64| MARGIN + label + x * COLUMN;
    let py = |level: i64| MARGIN + (hi - level) * ROW;

    let mut out = String::new();
    header(&mut out, width, height);
    writeln!(out, r#"<g class="levels" stroke="{GRID}">"#).unwrap();
    for level in lo..=hi {
        let (left, right, y) = (px(0), px(columns), py(level));
        writeln!(
            out,
            r#"<line x1="{left}" y1="{y}" x2="{right}" y2="{y}"/><text x="{}" y="{}" stroke="none" fill="black" text-anchor="end">{level}</text>"#,
            left - 4,
            y + 4
        )
        .unwrap();
    }
    for x in 0..=columns {
        writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(lo),
            py(hi)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    if let Some(column) = highlight {
        // a line of small positive slope through the start of the step
        let (x0, y0) = (px(column as i64 - 1), py(word.rank(column)));
        let (x1, x2) = (px(0), px(columns));
        let rise = |x: i64| (x - x0) * 2 / COLUMN;
        writeln!(
            out,
            r#"<line class="sweep-line" x1="{x1}" y1="{}" x2="{x2}" y2="{}" stroke="{GREEN}" stroke-width="3"/>"#,
            y0 - rise(x1),
            y0 - rise(x2)
        )
        .unwrap();
    }

    for arrow in diagram.arrows() {
        let c = arrow.column as i64;
        let (x1, y1) = (px(c - 1), py(arrow.start_rank));
        let (x2, y2) = (px(c), py(arrow.end_rank(params)));
        let (class, color, mark) = match arrow.color {
            Color::Red => ("up", RED, "+"),
            Color::Blue => ("down", BLUE, "-"),
        };
        writeln!(
            out,
            r#"<g class="{class}"><line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}" fill="{color}">{mark}</text></g>"#,
            (x1 + x2) / 2 + 4,
            (y1 + y2) / 2
        )
        .unwrap();
        writeln!(
            out,
            r#"<circle class="start" cx="{x1}" cy="{y1}" r="7" fill="white" stroke="black"/><text x="{x1}" y="{}" text-anchor="middle" font-size="9">{}</text>"#,
            y1 + 3,
            arrow.start_rank
        )
        .unwrap();
        let letter = word.steps()[arrow.column - 1].letter();
        writeln!(
            out,
            r#"<text class="letter" x="{}" y="{}" text-anchor="middle">{letter}</text>"#,
            x1 + COLUMN / 2,
            py(lo) + 16
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
