//! SVG drawings of planar penny realizations.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::framework::Framework;

/// SVG units per unit distance.
pub const SCALE: f64 = 100.0;
/// Space around the sphere centres, in unit distances.
pub const MARGIN: f64 = 0.6;

const FILL: &str = "#e8eef5";
const STROKE: &str = "#27475f";
const ALERT: &str = "#c0392b";

/// Decimal with at most three fractional digits, trailing zeros and
/// negative zero removed.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn escape(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '&' => "&amp;".to_string(),
            '<' => "&lt;".to_string(),
            '>' => "&gt;".to_string(),
            '"' => "&quot;".to_string(),
            '\'' => "&apos;".to_string(),
            c => c.to_string(),
        })
        .collect()
}

/// Non-adjacent pairs at distance at most 1, whose discs overlap or touch.
fn overlapping_pairs(f: &Framework) -> Vec<(usize, usize)> {
    let g = f.graph();
    let n = g.len();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v) && f.distance(u, v) <= 1.0)
        .collect()
}

/// One disc of radius 1/2 per vertex, one segment per edge, and a dashed
/// segment between every overlapping non-adjacent pair, whose discs are
/// outlined in red. Output is deterministic.
pub fn render_svg(f: &Framework) -> Result<String> {
    if f.dim() != 2 {
        return Err(Error::DimensionUnsupported(f.dim()));
    }
    let g = f.graph();
    let at = |v: usize| (f.point(v)[0] * SCALE, -f.point(v)[1] * SCALE);
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for v in 0..g.len() {
        let (x, y) = at(v);
        if v == 0 {
            (lo_x, lo_y, hi_x, hi_y) = (x, y, x, y);
        }
        lo_x = lo_x.min(x);
        lo_y = lo_y.min(y);
        hi_x = hi_x.max(x);
        hi_y = hi_y.max(y);
    }
    let m = MARGIN * SCALE;
    let (vx, vy, w, h) = (lo_x - m, lo_y - m, hi_x - lo_x + 2.0 * m, hi_y - lo_y + 2.0 * m);
    let overlaps = overlapping_pairs(f);
    let flagged = |v: usize| overlaps.iter().any(|&(a, b)| a == v || b == v);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(vx),
        num(vy),
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(s, "  <g fill=\"{FILL}\" fill-opacity=\"0.8\" stroke=\"{STROKE}\" stroke-width=\"2\">");
    for v in 0..g.len() {
        let (x, y) = at(v);
        let alert = if flagged(v) { format!(" stroke=\"{ALERT}\" stroke-width=\"4\"") } else { String::new() };
        let _ = writeln!(
            s,
            "    <circle data-vertex=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"{alert}/>",
            escape(g.label(v)),
            num(x),
            num(y),
            num(SCALE / 2.0)
        );
    }
    s.push_str("  </g>\n");
    let _ = writeln!(s, "  <g stroke=\"{STROKE}\" stroke-width=\"3\" stroke-linecap=\"round\">");
    for (u, v) in g.edges() {
        line(&mut s, at(u), at(v));
    }
    s.push_str("  </g>\n");
    if !overlaps.is_empty() {
        let _ = writeln!(s, "  <g stroke=\"{ALERT}\" stroke-width=\"3\" stroke-dasharray=\"8 6\">");
        for &(u, v) in &overlaps {
            line(&mut s, at(u), at(v));
        }
        s.push_str("  </g>\n");
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn line(s: &mut String, a: (f64, f64), b: (f64, f64)) {
    let _ = writeln!(
        s,
        "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        num(a.0),
        num(a.1),
        num(b.0),
        num(b.1)
    );
}
