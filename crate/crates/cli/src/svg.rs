//! Standalone SVG rendering of bar drawings.

use std::fmt::Write;

use bar1vis::checker::sweep_crossings;
use bar1vis::BarDrawing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SvgOptions {
    /// Pixels per grid unit.
    pub unit: u32,
    /// Mark every point where a segment passes through a bar.
    pub highlight_crossings: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            unit: 20,
            highlight_crossings: false,
        }
    }
}

/// Renders bars as horizontal strokes and segments as vertical ones, with
/// the y axis pointing up. Output depends only on the drawing and options.
pub fn render_svg(d: &BarDrawing, opts: &SvgOptions) -> String {
    let u = i64::from(opts.unit.max(1));
    let (x_lo, x_hi) = d.x_range().unwrap_or((0, 0));
    let (y_lo, y_hi) = d.y_range().unwrap_or((0, 0));
    let px = |x: i64| (x - x_lo + 1) * u;
    let py = |y: i64| (y_hi - y + 1) * u;
    let (w, h) = ((x_hi - x_lo + 2) * u, (y_hi - y_lo + 2) * u);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(out, r##"<g stroke="#1f4e79" stroke-width="{}">"##, (u / 4).max(1));
    for b in &d.bars {
        let _ = writeln!(
            out,
            r#"<line class="bar" data-v="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            b.v,
            px(b.x0),
            py(b.y),
            px(b.x1),
            py(b.y)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r##"<g stroke="#333333" stroke-width="{}">"##,
        (u / 10).max(1)
    );
    for s in &d.segments {
        let _ = writeln!(
            out,
            r#"<line class="edge" data-u="{}" data-v="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            s.u,
            s.v,
            px(s.x),
            py(s.y0),
            px(s.x),
            py(s.y1)
        );
    }
    let _ = writeln!(out, "</g>");
    if opts.highlight_crossings {
        let _ = writeln!(out, r##"<g fill="#c00000">"##);
        for (s, crossed) in d.segments.iter().zip(sweep_crossings(d)) {
            for v in crossed {
                let y = d.bar(v).map_or(0, |b| b.y);
                let _ = writeln!(
                    out,
                    r#"<circle class="crossing" cx="{}" cy="{}" r="{}"/>"#,
                    px(s.x),
                    py(y),
                    (u / 5).max(1)
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bar1vis::{draw_diagonal_grid, DiagonalGridParams};

    #[test]
    fn empty_drawing_is_valid_svg() {
        let svg = render_svg(&BarDrawing::default(), &SvgOptions::default());
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<line"));
    }

    #[test]
    fn strokes_match_elements() {
        let d = draw_diagonal_grid(DiagonalGridParams { p: 2, q: 2 }).unwrap();
        let opts = SvgOptions {
            unit: 10,
            highlight_crossings: true,
        };
        let svg = render_svg(&d, &opts);
        assert_eq!(svg.matches(r#"class="bar""#).count(), 4);
        assert_eq!(svg.matches(r#"class="edge""#).count(), 6);
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 1);
        assert_eq!(svg, render_svg(&d, &opts));
    }
}
