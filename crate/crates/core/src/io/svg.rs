use std::fmt::Write;

use crate::algebra::rational::to_f64;
use crate::algebra::{LinearForm, Point};
use crate::lines::{line_census, used_two_node_lines_through};
use crate::nodeset::{CorrectSet, NodeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvgOptions {
    /// Draw census lines through at least this many nodes.
    pub min_k: usize,
    /// Node to highlight together with the used 2-node lines through it.
    pub highlight: Option<usize>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { min_k: 3, highlight: None }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn coords(p: &Point) -> (f64, f64) {
    (to_f64(&p.x), -to_f64(&p.y))
}

/// Segment covering the nodes on `line`, extended by `margin` at both ends.
fn segment(line: &LinearForm, nodes: &[Point], margin: f64) -> (f64, f64, f64, f64) {
    let (_, dir) = line.parametrization();
    let (dx, dy) = (to_f64(&dir.x), -to_f64(&dir.y));
    let norm = (dx * dx + dy * dy).sqrt();
    let (ux, uy) = (dx / norm, dy / norm);
    let proj = |p: &Point| {
        let (x, y) = coords(p);
        x * ux + y * uy
    };
    let lo = nodes.iter().min_by(|a, b| proj(a).total_cmp(&proj(b))).expect("at least one node");
    let hi = nodes.iter().max_by(|a, b| proj(a).total_cmp(&proj(b))).expect("at least one node");
    let (x1, y1) = coords(lo);
    let (x2, y2) = coords(hi);
    (x1 - margin * ux, y1 - margin * uy, x2 + margin * ux, y2 + margin * uy)
}

/// Deterministic SVG of a node set: census lines through at least `min_k` nodes
/// (maximal lines styled apart), then one circle per node in document order. The y axis
/// points up; the view box is the bounding box grown by 10% per side.
pub fn render_svg(x: &NodeSet, options: &SvgOptions) -> String {
    let pts: Vec<(f64, f64)> = x.nodes().iter().map(coords).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(px, py)) = pts.first() {
        (x0, y0, x1, y1) = (px, py, px, py);
        for &(px, py) in &pts {
            x0 = x0.min(px);
            x1 = x1.max(px);
            y0 = y0.min(py);
            y1 = y1.max(py);
        }
    }
    let span = (x1 - x0).max(y1 - y0);
    let span = if span > 0.0 { span } else { 1.0 };
    let (w, h) = ((x1 - x0).max(span * 0.2), (y1 - y0).max(span * 0.2));
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let (vx, vy, vw, vh) = (cx - w * 0.6, cy - h * 0.6, w * 1.2, h * 1.2);
    let radius = span * 0.018;
    let stroke = span * 0.006;
    let margin = span * 0.05;

    let mut out = String::new();
    let px_w = 640.0;
    let px_h = (px_w * vh / vw).round();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        num(px_w),
        num(px_h)
    )
    .unwrap();
    writeln!(
        out,
        "<style>.line{{stroke:#8a8a8a;stroke-width:{s}}} .maximal{{stroke:#1f5fbf;stroke-width:{m}}} .used2{{stroke:#d0461e;stroke-width:{m};stroke-dasharray:{d}}} .node{{fill:#111}} .highlight{{fill:#d0461e}}</style>",
        s = num(stroke),
        m = num(stroke * 1.5),
        d = num(stroke * 4.0)
    )
    .unwrap();

    let census = line_census(x);
    let maximal_k = x.degree() + 1;
    out.push_str("<g class=\"lines\">\n");
    for e in census.iter().filter(|e| e.k() >= options.min_k.max(2)) {
        let (a, b, c, d) = segment(&e.line, &e.nodes_on, margin);
        let class = if e.k() == maximal_k { "line maximal" } else { "line" };
        writeln!(
            out,
            r#"<line class="{class}" data-k="{}" x1="{}" y1="{}" x2="{}" y2="{}"><title>{}</title></line>"#,
            e.k(),
            num(a),
            num(b),
            num(c),
            num(d),
            e.line
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    let highlight = options.highlight.filter(|&i| i < x.len());
    if let Some(b) = highlight {
        out.push_str("<g class=\"used\">\n");
        if let Ok(cs) = CorrectSet::new(x.clone()) {
            for u in used_two_node_lines_through(&cs, x.node(b)).expect("node of the set") {
                let (a1, b1, c1, d1) = segment(&u.line, &[x.node(b).clone(), u.a.clone()], margin);
                writeln!(
                    out,
                    r#"<line class="used2" x1="{}" y1="{}" x2="{}" y2="{}"><title>{} used by {}</title></line>"#,
                    num(a1),
                    num(b1),
                    num(c1),
                    num(d1),
                    u.line,
                    u.c
                )
                .unwrap();
            }
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"nodes\">\n");
    for (i, (p, &(px, py))) in x.nodes().iter().zip(&pts).enumerate() {
        let class = if Some(i) == highlight { "node highlight" } else { "node" };
        let r = if Some(i) == highlight { radius * 1.5 } else { radius };
        writeln!(
            out,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"><title>#{i} {p}</title></circle>"#,
            num(px),
            num(py),
            num(r)
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
