//! SVG 1.1 rendering of layouts with optional overlays.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::geometry::{sees, Axis, Layout, Orientation, Strip};

/// Overlays drawn on top of the rectangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RenderOptions {
    /// One line per visibility edge, between rectangle centers.
    pub edges: bool,
    /// Ids of a staircase whose strips are shaded.
    pub strips: Vec<String>,
    /// Dashed bounding box.
    pub bbox: bool,
}

const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn num(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    let s = format!("{r:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    x0: f64,
    y1: f64,
}

impl Frame {
    fn x(&self, c: &Coord) -> f64 {
        MARGIN + (c.to_f64() - self.x0) * SCALE
    }

    fn y(&self, c: &Coord) -> f64 {
        MARGIN + (self.y1 - c.to_f64()) * SCALE
    }
}

/// Renders `layout`. The y axis points up. Strips that cannot be formed from
/// `options.strips` are skipped. Output is deterministic.
pub fn render_svg(layout: &Layout, options: &RenderOptions) -> String {
    let mut out = String::new();
    let Ok(bb) = layout.bounding_box() else {
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"40\" height=\"40\" viewBox=\"0 0 40 40\">\n</svg>\n");
        return out;
    };
    let f = Frame { x0: bb.x_lo().to_f64(), y1: bb.y_hi().to_f64() };
    let w = (bb.x_hi().to_f64() - bb.x_lo().to_f64()) * SCALE + 2.0 * MARGIN;
    let h = (bb.y_hi().to_f64() - bb.y_lo().to_f64()) * SCALE + 2.0 * MARGIN;
    let (w, h) = (num(w), num(h));
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">");

    if !options.strips.is_empty() {
        let ids: Vec<&str> = options.strips.iter().map(String::as_str).collect();
        if let Ok(strips) = layout.strips(&ids) {
            out.push_str("<g class=\"strips\" fill=\"#f2d16b\" fill-opacity=\"0.45\" stroke=\"none\">\n");
            for s in &strips {
                let _ = writeln!(out, "<polygon points=\"{}\"/>", strip_points(&f, s, &bb));
            }
            out.push_str("</g>\n");
        }
    }

    out.push_str("<g class=\"rects\" fill=\"#cfe0f3\" fill-opacity=\"0.6\" stroke=\"#1f3b5a\" stroke-width=\"1.5\">\n");
    for r in layout.rects() {
        let _ = writeln!(
            out,
            "<rect data-id=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
            escape(r.id()),
            num(f.x(r.x_lo())),
            num(f.y(r.y_hi())),
            num(f.x(r.x_hi()) - f.x(r.x_lo())),
            num(f.y(r.y_lo()) - f.y(r.y_hi())),
        );
    }
    out.push_str("</g>\n");

    if options.edges {
        let rects = layout.rects();
        out.push_str("<g class=\"edges\" stroke=\"#b03a2e\" stroke-width=\"1\">\n");
        for a in 0..rects.len() {
            for b in a + 1..rects.len() {
                if sees(&rects[a], &rects[b], Axis::H) || sees(&rects[a], &rects[b], Axis::V) {
                    let (ax, ay) = center(&f, &rects[a]);
                    let (bx, by) = center(&f, &rects[b]);
                    let _ = writeln!(
                        out,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                        num(ax),
                        num(ay),
                        num(bx),
                        num(by)
                    );
                }
            }
        }
        out.push_str("</g>\n");
    }

    if options.bbox {
        let _ = writeln!(
            out,
            "<path class=\"bbox\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 3\" d=\"M {} {} H {} V {} H {} Z\"/>",
            num(f.x(bb.x_lo())),
            num(f.y(bb.y_hi())),
            num(f.x(bb.x_hi())),
            num(f.y(bb.y_lo())),
            num(f.x(bb.x_lo())),
        );
    }

    out.push_str("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n");
    for r in layout.rects() {
        let (cx, cy) = center(&f, r);
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\">{}</text>", num(cx), num(cy), escape(r.id()));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn center(f: &Frame, r: &crate::geometry::Rect) -> (f64, f64) {
    ((f.x(r.x_lo()) + f.x(r.x_hi())) / 2.0, (f.y(r.y_lo()) + f.y(r.y_hi())) / 2.0)
}

fn strip_points(f: &Frame, s: &Strip, bb: &crate::geometry::Rect) -> String {
    let (x0, x1, y0, y1) = match s.orientation {
        Orientation::Vertical => (f.x(&s.lo), f.x(&s.hi), f.y(bb.y_hi()), f.y(bb.y_lo())),
        Orientation::Horizontal => (f.x(bb.x_lo()), f.x(bb.x_hi()), f.y(&s.hi), f.y(&s.lo)),
    };
    format!("{},{} {},{} {},{} {},{}", num(x0), num(y0), num(x1), num(y0), num(x1), num(y1), num(x0), num(y1))
}
