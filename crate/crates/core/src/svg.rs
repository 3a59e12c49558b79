//! Deterministic SVG drawings of polygons with rectangles, support graphs and points.

use crate::geom::{Point, Rect, SimplePolygon};
use crate::hypergraph::SupportGraph;
use std::fmt::Write;

const UNIT: f64 = 20.0;
const MARGIN: f64 = 20.0;
const TITLE: f64 = 18.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

/// One drawing of the polygon with its own overlays.
#[derive(Debug, Clone, Default)]
pub struct Panel {
    pub title: String,
    /// Filled translucent rectangles.
    pub rects: Vec<Rect>,
    /// Graph over `rects`; vertices sit at rectangle centers.
    pub graph: Option<SupportGraph>,
    pub points: Vec<Point>,
}

/// Panels side by side, each showing the whole polygon.
pub fn render(poly: &SimplePolygon, panels: &[Panel]) -> String {
    let bb = poly.bbox();
    let (w, h) = (bb.width() as f64 * UNIT, bb.height() as f64 * UNIT);
    let n = panels.len().max(1) as f64;
    let total_w = n * (w + 2.0 * MARGIN);
    let total_h = h + 2.0 * MARGIN + TITLE;
    let mut s = String::new();
    writeln!(s, r##"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w:.0}" height="{total_h:.0}" viewBox="0 0 {total_w:.0} {total_h:.0}">"##).unwrap();
    writeln!(s, r##"<rect width="100%" height="100%" fill="white"/>"##).unwrap();
    let empty = [Panel::default()];
    let panels = if panels.is_empty() { &empty[..] } else { panels };
    for (k, p) in panels.iter().enumerate() {
        let ox = k as f64 * (w + 2.0 * MARGIN) + MARGIN;
        let oy = MARGIN + TITLE;
        // y grows downward in SVG
        let tx = |x: f64| ox + (x - bb.x1 as f64) * UNIT;
        let ty = |y: f64| oy + (bb.y2 as f64 - y) * UNIT;
        writeln!(s, r##"<g id="panel{k}">"##).unwrap();
        if !p.title.is_empty() {
            writeln!(s, r##"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="14">{}</text>"##, ox, MARGIN + 4.0, escape(&p.title)).unwrap();
        }
        for (i, r) in p.rects.iter().enumerate() {
            let c = PALETTE[i % PALETTE.len()];
            writeln!(
                s,
                r##"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="{c}" fill-opacity="0.25" stroke="{c}" stroke-width="1"/>"##,
                tx(r.x1 as f64),
                ty(r.y2 as f64),
                r.width() as f64 * UNIT,
                r.height() as f64 * UNIT
            )
            .unwrap();
        }
        let pts: Vec<String> = poly.vertices().iter().map(|&(x, y)| format!("{:.1},{:.1}", tx(x as f64), ty(y as f64))).collect();
        writeln!(s, r##"<polygon points="{}" fill="none" stroke="black" stroke-width="3"/>"##, pts.join(" ")).unwrap();
        if let Some(g) = &p.graph {
            let center = |i: usize| {
                let r = p.rects[i];
                (tx((r.x1 + r.x2) as f64 / 2.0), ty((r.y1 + r.y2) as f64 / 2.0))
            };
            for &(a, b) in &g.edges {
                let ((x1, y1), (x2, y2)) = (center(a), center(b));
                writeln!(s, r##"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#444" stroke-width="1.5"/>"##).unwrap();
            }
            for i in 0..g.n.min(p.rects.len()) {
                let (x, y) = center(i);
                let fill = if g.outer.contains(&i) { "#d62728" } else { "#222" };
                writeln!(s, r##"<circle cx="{x:.1}" cy="{y:.1}" r="4" fill="{fill}"/>"##).unwrap();
            }
        }
        for q in &p.points {
            let (x, y) = q.to_f64();
            writeln!(s, r##"<circle cx="{:.1}" cy="{:.1}" r="2.5" fill="#2ca02c"/>"##, tx(x), ty(y)).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_from_vertices;

    #[test]
    fn box_with_cover() {
        let p = polygon_from_vertices(&[(0, 0), (3, 0), (3, 2), (0, 2)]).unwrap();
        let panel = Panel { title: "cover".into(), rects: vec![Rect::new(0, 0, 3, 2).unwrap()], ..Panel::default() };
        let a = render(&p, std::slice::from_ref(&panel));
        assert_eq!(a, render(&p, &[panel]));
        assert_eq!(a.matches("<rect ").count(), 2);
        assert!(a.contains(r##"<polygon points="20.0,78.0 80.0,78.0 80.0,38.0 20.0,38.0""##));
    }
}
