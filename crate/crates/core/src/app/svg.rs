//! SVG figures: points as dots, disks as stroked circles, half-planes as a
//! boundary line over a translucent region clipped to the view.
//!
//! Drawing uses `f64`; nothing here feeds back into exact computations.

use std::fmt::Write;

use crate::kernel::rational::to_f64;
use crate::kernel::{GeneralizedDisk, RPoint};

const PREC: usize = 4;

#[derive(Clone, Copy, Debug)]
struct Rect {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Rect {
    fn include(&mut self, x: f64, y: f64) {
        self.x0 = self.x0.min(x);
        self.y0 = self.y0.min(y);
        self.x1 = self.x1.max(x);
        self.y1 = self.y1.max(y);
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.PREC$}");
    // avoid "-0.0000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        format!("{:.PREC$}", 0.0)
    } else {
        s
    }
}

/// Clips the rectangle to `a*x + b*y <= c` (one Sutherland-Hodgman pass).
fn clip(r: &Rect, a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    let corners = [(r.x0, r.y0), (r.x1, r.y0), (r.x1, r.y1), (r.x0, r.y1)];
    let f = |p: (f64, f64)| a * p.0 + b * p.1 - c;
    let mut out = Vec::new();
    for i in 0..4 {
        let p = corners[i];
        let q = corners[(i + 1) % 4];
        let (fp, fq) = (f(p), f(q));
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

/// Endpoints of the part of `a*x + b*y = c` inside the rectangle.
fn chord(r: &Rect, a: f64, b: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if b != 0.0 {
        for x in [r.x0, r.x1] {
            let y = (c - a * x) / b;
            if y >= r.y0 && y <= r.y1 {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [r.y0, r.y1] {
            let x = (c - b * y) / a;
            if x >= r.x0 && x <= r.x1 {
                hits.push((x, y));
            }
        }
    }
    let first = *hits.first()?;
    let far = hits
        .iter()
        .copied()
        .max_by(|p, q| {
            let d = |s: &(f64, f64)| (s.0 - first.0).powi(2) + (s.1 - first.1).powi(2);
            d(p).total_cmp(&d(q))
        })?;
    Some((first, far))
}

/// Renders the figure. The view encloses all points and finite disks (and
/// the point of each half-plane boundary nearest the points), plus a 10%
/// margin; `y` points up.
pub fn render(points: &[RPoint], disks: &[GeneralizedDisk]) -> String {
    let pts: Vec<(f64, f64)> = points.iter().map(|p| (to_f64(&p.x), to_f64(&p.y))).collect();
    let mut bb: Option<Rect> = None;
    let mut add = |x: f64, y: f64| match bb.as_mut() {
        Some(r) => r.include(x, y),
        None => bb = Some(Rect { x0: x, y0: y, x1: x, y1: y }),
    };
    for &(x, y) in &pts {
        add(x, y);
    }
    let (cx, cy) = if pts.is_empty() {
        (0.0, 0.0)
    } else {
        let k = pts.len() as f64;
        (pts.iter().map(|p| p.0).sum::<f64>() / k, pts.iter().map(|p| p.1).sum::<f64>() / k)
    };
    for d in disks {
        match d {
            GeneralizedDisk::Disk { center, r2 } => {
                let (x, y, r) = (to_f64(&center.x), to_f64(&center.y), to_f64(r2).sqrt());
                add(x - r, y - r);
                add(x + r, y + r);
            }
            GeneralizedDisk::HalfPlane { a, b, c } => {
                let (a, b, c) = (to_f64(a), to_f64(b), to_f64(c));
                let t = (a * cx + b * cy - c) / (a * a + b * b);
                add(cx - t * a, cy - t * b);
            }
        }
    }
    let mut r = bb.unwrap_or(Rect { x0: -1.0, y0: -1.0, x1: 1.0, y1: 1.0 });
    let span = (r.x1 - r.x0).max(r.y1 - r.y0).max(1e-9);
    let m = 0.1 * span;
    r = Rect { x0: r.x0 - m, y0: r.y0 - m, x1: r.x1 + m, y1: r.y1 + m };
    let dot = span / 100.0;
    let stroke = span / 300.0;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt(r.x0),
        fmt(-r.y1),
        fmt(r.x1 - r.x0),
        fmt(r.y1 - r.y0)
    );
    let _ = writeln!(
        s,
        "<style>.disk{{fill:none;stroke:#1f5fa8;stroke-width:{w}}} \
         .boundary{{stroke:#a8321f;stroke-width:{w}}} \
         .halfplane{{fill:#a8321f;fill-opacity:0.12;stroke:none}} \
         .dot{{fill:#000}}</style>",
        w = fmt(stroke)
    );
    for d in disks {
        match d {
            GeneralizedDisk::Disk { center, r2 } => {
                let _ = writeln!(
                    s,
                    "<circle class=\"disk\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    fmt(to_f64(&center.x)),
                    fmt(-to_f64(&center.y)),
                    fmt(to_f64(r2).sqrt())
                );
            }
            GeneralizedDisk::HalfPlane { a, b, c } => {
                let (a, b, c) = (to_f64(a), to_f64(b), to_f64(c));
                let poly: Vec<String> = clip(&r, a, b, c)
                    .iter()
                    .map(|&(x, y)| format!("{},{}", fmt(x), fmt(-y)))
                    .collect();
                let _ = writeln!(s, "<polygon class=\"halfplane\" points=\"{}\"/>", poly.join(" "));
                let ((x1, y1), (x2, y2)) = chord(&r, a, b, c).unwrap_or(((r.x0, r.y0), (r.x0, r.y0)));
                let _ = writeln!(
                    s,
                    "<line class=\"boundary\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    fmt(x1),
                    fmt(-y1),
                    fmt(x2),
                    fmt(-y2)
                );
            }
        }
    }
    for &(x, y) in &pts {
        let _ = writeln!(
            s,
            "<ellipse class=\"dot\" cx=\"{}\" cy=\"{}\" rx=\"{d}\" ry=\"{d}\"/>",
            fmt(x),
            fmt(-y),
            d = fmt(dot)
        );
    }
    s.push_str("</svg>\n");
    s
}
