//! Deterministic SVG 1.1 rendering of a patch: faces as filled polygons in two
//! colors, edges as lines, optional vertex dots.

use std::fmt::Write as _;

use super::{PatternPatch, TileKind};

#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub px_per_unit: f64,
    /// Blank border around the patch disk, in edge units.
    pub margin_units: f64,
    pub stroke: String,
    pub stroke_width: f64,
    pub fill_thick: String,
    pub fill_thin: String,
    /// Vertex dot radius in pixels; 0 disables dots.
    pub vertex_radius: f64,
    pub background: Option<String>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            px_per_unit: 48.0,
            margin_units: 0.75,
            stroke: "#3a3a44".to_string(),
            stroke_width: 1.0,
            fill_thick: "#e9c46a".to_string(),
            fill_thin: "#8ab6d6".to_string(),
            vertex_radius: 0.0,
            background: Some("#fffdf7".to_string()),
        }
    }
}

/// Fixed-point pixel formatting; normalizes negative zero so equal patches
/// render to identical bytes.
fn px(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.3}")
}

pub fn render_svg(patch: &PatternPatch, opts: &RenderOptions) -> String {
    let half = (patch.radius + opts.margin_units) * opts.px_per_unit;
    let side = 2.0 * half;
    let place = |p: (f64, f64)| (half + p.0 * opts.px_per_unit, half - p.1 * opts.px_per_unit);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{w}\" viewBox=\"0 0 {w} {w}\">",
        w = px(side)
    );
    if let Some(bg) = &opts.background {
        let _ = writeln!(
            out,
            "  <rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{w}\" fill=\"{bg}\"/>",
            w = px(side)
        );
    }

    let _ = writeln!(
        out,
        "  <g stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\">",
        opts.stroke, opts.stroke_width
    );
    for face in &patch.faces {
        let fill = match face.kind {
            TileKind::Thick => &opts.fill_thick,
            TileKind::Thin => &opts.fill_thin,
        };
        let mut pts = String::new();
        for (i, &v) in face.verts.iter().enumerate() {
            let (x, y) = place(patch.points[v].pos);
            if i > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{},{}", px(x), px(y));
        }
        let _ = writeln!(out, "    <polygon points=\"{pts}\" fill=\"{fill}\"/>");
    }
    for &(i, j) in &patch.edges {
        let (x1, y1) = place(patch.points[i].pos);
        let (x2, y2) = place(patch.points[j].pos);
        let _ = writeln!(
            out,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            px(x1),
            px(y1),
            px(x2),
            px(y2)
        );
    }
    let _ = writeln!(out, "  </g>");

    if opts.vertex_radius > 0.0 {
        let _ = writeln!(out, "  <g fill=\"{}\">", opts.stroke);
        for p in &patch.points {
            let (x, y) = place(p.pos);
            let _ = writeln!(
                out,
                "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                px(x),
                px(y),
                opts.vertex_radius
            );
        }
        let _ = writeln!(out, "  </g>");
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{build_edges_faces, generate, Shift};

    #[test]
    fn empty_patch_is_valid_svg() {
        let patch = PatternPatch {
            shift: Shift::zero(),
            radius: 1.0,
            points: Vec::new(),
            edges: Vec::new(),
            faces: Vec::new(),
            singular: false,
            witness: None,
        };
        let svg = render_svg(&patch, &RenderOptions::default());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("polygon"));
    }

    #[test]
    fn faces_render_as_polygons_in_two_fills() {
        // generic shift so both rhomb classes already occur this close in
        let shift: Shift = "1/7,0,0,0,0".parse().unwrap();
        let mut patch = generate(&shift, 3.0).unwrap();
        build_edges_faces(&mut patch);
        let opts = RenderOptions::default();
        let svg = render_svg(&patch, &opts);
        let polys = svg.matches("<polygon").count();
        assert_eq!(polys, patch.faces.len());
        assert!(svg.contains(&opts.fill_thick));
        assert!(svg.contains(&opts.fill_thin));
        let lines = svg.matches("<line").count();
        assert_eq!(lines, patch.edges.len());
    }

    #[test]
    fn rendering_is_deterministic() {
        let mut patch = generate(&Shift::zero(), 2.0).unwrap();
        build_edges_faces(&mut patch);
        let a = render_svg(&patch, &RenderOptions::default());
        let b = render_svg(&patch, &RenderOptions::default());
        assert_eq!(a, b);
    }

    #[test]
    fn vertex_dots_are_optional() {
        let mut patch = generate(&Shift::zero(), 1.7).unwrap();
        build_edges_faces(&mut patch);
        let plain = render_svg(&patch, &RenderOptions::default());
        assert!(!plain.contains("<circle"));
        let dotted = render_svg(
            &patch,
            &RenderOptions {
                vertex_radius: 2.0,
                ..RenderOptions::default()
            },
        );
        assert_eq!(dotted.matches("<circle").count(), patch.points.len());
    }
}
