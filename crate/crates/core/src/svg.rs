//! SVG rendering of an [`Embedding`]. Presentation only.

use std::fmt::Write as _;

use crate::embedding::{EdgeClass, Embedding, GraphEdge};
use crate::geometry::Point;

const PAD: f64 = 20.0;

fn stroke(edge: GraphEdge, class: Option<EdgeClass>) -> &'static str {
    match (edge, class) {
        (GraphEdge::Path { .. }, _) => "#222222",
        (_, Some(EdgeClass::X)) => "#1f77b4",
        (_, Some(EdgeClass::Y)) => "#d62728",
        (_, Some(EdgeClass::Z)) => "#2ca02c",
        (_, Some(EdgeClass::W)) => "#9467bd",
        (_, None) => "#555555",
    }
}

/// Renders with coordinates divided by `max(1, mn / 1000)` and the y axis
/// pointing up.
pub fn render_svg(emb: &Embedding, m: usize, n: usize) -> String {
    let scale = ((m as f64 * n as f64) / 1000.0).max(1.0);
    let points = emb
        .vertices
        .values()
        .chain(emb.edges.iter().flat_map(|e| e.polyline.iter()));
    let (mut x0, mut y0, mut x1, mut y1) = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
    for p in points {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    if x0 > x1 {
        (x0, y0, x1, y1) = (0, 0, 0, 0);
    }
    let width = (x1 - x0) as f64 / scale + 2.0 * PAD;
    let height = (y1 - y0) as f64 / scale + 2.0 * PAD;
    let map = |p: Point| ((p.x - x0) as f64 / scale + PAD, (y1 - p.y) as f64 / scale + PAD);
    let unit = (width.max(height) / 400.0).max(0.5);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.2} {height:.2}" width="{width:.0}" height="{height:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for e in &emb.edges {
        let pts: Vec<String> = e
            .polyline
            .iter()
            .map(|&p| {
                let (x, y) = map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let width = if matches!(e.edge, GraphEdge::Path { .. }) {
            2.0 * unit
        } else {
            unit
        };
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="{width:.2}" stroke-linejoin="round"/>"#,
            pts.join(" "),
            stroke(e.edge, e.class)
        );
    }
    for (v, &p) in &emb.vertices {
        let (x, y) = map(p);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="black"/>"#,
            2.5 * unit
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="{:.2}" font-family="sans-serif">{v}</text>"#,
            x + 3.0 * unit,
            y - 3.0 * unit,
            8.0 * unit
        );
    }
    out.push_str("</svg>\n");
    out
}
