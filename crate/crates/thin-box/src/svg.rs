//! Plain SVG rendering: 20px per unit (10px per doubled unit), `y` up.

use std::fmt::Write;

use crate::BoxModel;

const PX: i64 = 10;
const MARGIN: i64 = 20;

pub fn class_color(class: Option<u8>) -> &'static str {
    match class {
        Some(1) => "#1f77b4",
        Some(2) => "#d62728",
        Some(_) => "#2ca02c",
        None => "#333333",
    }
}

/// Canvas helper shared with path renderers: maps doubled coordinates to
/// pixels inside a bounding box.
#[derive(Debug, Clone, Copy)]
pub struct Canvas {
    pub min_x: i64,
    pub max_x: i64,
    pub min_y: i64,
    pub max_y: i64,
}

impl Canvas {
    pub fn fit(points: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut c = Canvas { min_x: i64::MAX, max_x: i64::MIN, min_y: i64::MAX, max_y: i64::MIN };
        for (x, y) in points {
            c.min_x = c.min_x.min(x);
            c.max_x = c.max_x.max(x);
            c.min_y = c.min_y.min(y);
            c.max_y = c.max_y.max(y);
        }
        if c.min_x > c.max_x {
            c = Canvas { min_x: 0, max_x: 0, min_y: 0, max_y: 0 };
        }
        c
    }

    pub fn px(&self, x: i64, y: i64) -> (i64, i64) {
        (MARGIN + (x - self.min_x) * PX, MARGIN + (self.max_y - y) * PX)
    }

    pub fn header(&self) -> String {
        let w = 2 * MARGIN + (self.max_x - self.min_x) * PX;
        let h = 2 * MARGIN + (self.max_y - self.min_y) * PX;
        format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n")
    }

    /// Dashed segment of `y = x + d` clipped to the canvas, if visible.
    pub fn diagonal(&self, d: i64) -> Option<String> {
        let x_lo = self.min_x.max(self.min_y - d);
        let x_hi = self.max_x.min(self.max_y - d);
        (x_lo < x_hi).then(|| {
            let (a, b) = (self.px(x_lo, x_lo + d), self.px(x_hi, x_hi + d));
            format!("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n", a.0, a.1, b.0, b.1)
        })
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(m: &BoxModel, names: Option<&[String]>) -> String {
    let c = Canvas::fit(m.boxes.iter().flat_map(|b| [(b.x1, b.y1), (b.x2, b.y2)]));
    let mut out = c.header();
    for d in [m.d1, m.d2] {
        if let Some(line) = c.diagonal(d) {
            out.push_str(&line);
        }
    }
    for b in &m.boxes {
        let (x, y) = c.px(b.x1, b.y2);
        let color = class_color(b.class);
        let label = names.and_then(|n| n.get(b.vertex)).cloned().unwrap_or_else(|| b.vertex.to_string());
        let _ = writeln!(
            out,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{}\" height=\"{}\" fill=\"{color}\" fill-opacity=\"0.12\" stroke=\"{color}\"><title>{}</title></rect>",
            (b.x2 - b.x1) * PX,
            (b.y2 - b.y1) * PX,
            escape(&label)
        );
        let (tx, ty) = c.px(b.x2, b.y2);
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\" font-size=\"10\" fill=\"{color}\">{}</text>", tx + 2, ty - 2, escape(&label));
    }
    out.push_str("</svg>\n");
    out
}
