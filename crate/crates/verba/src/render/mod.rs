//! Deterministic SVG rendering of shapes and HTML derivation reports.

use std::fmt::Write as _;
use std::path::Path;

use crate::engine::Derivation;
use crate::geom::{Point, Shape};

/// Rendering options. The default viewport auto-fits every segment endpoint
/// and labelled point with a 5% margin.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    /// Explicit viewport (min, max); auto-fit when absent.
    pub viewport: Option<(Point, Point)>,
    /// Stroke width in plane units; a fraction of the viewport when absent.
    pub stroke_width: Option<f64>,
    /// Margin fraction for auto-fit viewports.
    pub margin: f64,
    /// Segments and labels to emphasize, drawn in an accent color on top.
    pub highlight: Option<Shape>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            viewport: None,
            stroke_width: None,
            margin: 0.05,
            highlight: None,
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{:.6}", v)
}

fn viewport_for(shape: &Shape, spec: &RenderSpec) -> (Point, Point) {
    if let Some(v) = spec.viewport {
        return v;
    }
    let mut bounds = shape.bounds();
    if let Some(h) = &spec.highlight {
        bounds = match (bounds, h.bounds()) {
            (Some((lo, hi)), Some((hlo, hhi))) => Some((
                Point::raw(lo.x.min(hlo.x), lo.y.min(hlo.y)),
                Point::raw(hi.x.max(hhi.x), hi.y.max(hhi.y)),
            )),
            (None, b) => b,
            (b, None) => b,
        };
    }
    match bounds {
        None => (Point::raw(0.0, 0.0), Point::raw(1.0, 1.0)),
        Some((lo, hi)) => {
            let w = (hi.x - lo.x).max(1e-6);
            let h = (hi.y - lo.y).max(1e-6);
            let m = spec.margin * w.max(h);
            (
                Point::raw(lo.x - m, lo.y - m),
                Point::raw(hi.x + m, hi.y + m),
            )
        }
    }
}

fn draw_group(out: &mut String, shape: &Shape, stroke: f64, dot: f64, color: &str) {
    let _ = writeln!(
        out,
        "  <g fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\" stroke-linecap=\"round\">",
        fmt(stroke)
    );
    for s in shape.segments() {
        let _ = writeln!(
            out,
            "    <path d=\"M {} {} L {} {}\" />",
            fmt(s.p().x),
            fmt(s.p().y),
            fmt(s.q().x),
            fmt(s.q().y)
        );
    }
    for l in shape.labels() {
        let _ = writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{color}\" stroke=\"none\" />",
            fmt(l.at().x),
            fmt(l.at().y),
            fmt(dot)
        );
    }
    let _ = writeln!(out, "  </g>");
}

/// Renders a shape as an SVG 1.1 document: one path per segment, one filled
/// circle per labelled point (radius 2% of the viewport). Output bytes are
/// deterministic for equal inputs.
pub fn shape_svg(shape: &Shape, spec: &RenderSpec) -> String {
    let (lo, hi) = viewport_for(shape, spec);
    let w = hi.x - lo.x;
    let h = hi.y - lo.y;
    let dot = 0.02 * w.max(h);
    let stroke = spec.stroke_width.unwrap_or(0.0075 * w.max(h));

    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"240\" height=\"{}\">",
        fmt(lo.x),
        fmt(lo.y),
        fmt(w),
        fmt(h),
        fmt(240.0 * h / w),
    );
    // Plane coordinates have y pointing up; flip into SVG's y-down frame.
    let _ = writeln!(
        out,
        " <g transform=\"matrix(1 0 0 -1 0 {})\">",
        fmt(lo.y + hi.y)
    );
    draw_group(&mut out, shape, stroke, dot, "#222222");
    if let Some(hl) = &spec.highlight {
        draw_group(&mut out, hl, stroke * 1.4, dot, "#c03020");
    }
    let _ = writeln!(out, " </g>");
    let _ = writeln!(out, "</svg>");
    out
}

/// Two-panel SVG for one derivation step: the arrangement before, and after
/// with the placed right-hand side highlighted.
pub fn step_panels_svg(before: &Shape, after: &Shape, placed: &Shape) -> String {
    let union = before.sum(after);
    let (lo, hi) = viewport_for(&union, &RenderSpec::default());
    let w = hi.x - lo.x;
    let h = hi.y - lo.y;
    let gap = 0.15 * w;
    let spec_before = RenderSpec {
        viewport: Some((lo, hi)),
        ..Default::default()
    };
    let spec_after = RenderSpec {
        viewport: Some((lo, hi)),
        highlight: Some(placed.clone()),
        ..Default::default()
    };
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {} {}\" width=\"520\" height=\"{}\">",
        fmt(2.0 * w + gap),
        fmt(h),
        fmt(520.0 * h / (2.0 * w + gap)),
    );
    let panel = |s: &Shape, spec: &RenderSpec, dx: f64| {
        let inner = shape_svg(s, spec);
        // Re-wrap the inner document as a translated group.
        let body: String = inner
            .lines()
            .skip(2)
            .take_while(|l| !l.starts_with("</svg>"))
            .collect::<Vec<_>>()
            .join("\n");
        format!(
            " <g transform=\"translate({} {})\">\n{}\n </g>\n",
            fmt(dx - lo.x),
            fmt(-lo.y),
            body
        )
    };
    out.push_str(&panel(before, &spec_before, 0.0));
    out.push_str(&panel(after, &spec_after, w + gap));
    let _ = writeln!(out, "</svg>");
    out
}

fn escape_html(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Replaces `<shapeN>` references in a description with inline image
/// references to that step's bound shape renderings.
fn description_html(text: &str, step_index: usize) -> String {
    let mut out = String::new();
    for word in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        let (core, trailing_dot) = match word.strip_suffix('.') {
            Some(core) => (core, true),
            None => (word, false),
        };
        match core {
            "<shape1>" | "<shape2>" => {
                let n = &core[1..core.len() - 1];
                let _ = write!(
                    out,
                    "<img class=\"shape-ref\" src=\"step_{step_index:03}_{n}.svg\" alt=\"{n}\" />"
                );
            }
            _ => out.push_str(&escape_html(core)),
        }
        if trailing_dot {
            out.push('.');
        }
    }
    out
}

/// Writes the full derivation report into `dir`: `trace.json`, one
/// two-panel SVG and two bound-shape SVGs per step, and an `index.html`
/// whose descriptions carry inline shape images.
pub fn write_report(dir: &Path, derivation: &Derivation) -> Result<(), crate::Error> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("trace.json"), derivation.trace_string())?;

    let mut html = String::new();
    html.push_str("<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\" />\n");
    html.push_str("<title>Derivation report</title>\n<style>\n");
    html.push_str("body { font-family: sans-serif; margin: 2em; }\n");
    html.push_str(".shape-ref { height: 2.2em; vertical-align: middle; }\n");
    html.push_str(".desc { margin: 0.4em 0; }\n");
    html.push_str(".verdict { color: #555; font-size: 0.9em; margin-left: 0.7em; }\n");
    html.push_str("</style>\n</head>\n<body>\n");
    let _ = writeln!(html, "<h1>Derivation</h1>");
    let _ = writeln!(
        html,
        "<p>{} step(s); terminated: {}.</p>",
        derivation.steps.len(),
        derivation.termination.name()
    );

    for step in &derivation.steps {
        let panels = step_panels_svg(&step.shape_before, &step.shape_after, &step.shape2);
        let panels_name = format!("step_{:03}.svg", step.index);
        std::fs::write(dir.join(&panels_name), panels)?;
        for (name, shape) in [("shape1", &step.shape1), ("shape2", &step.shape2)] {
            let file = format!("step_{:03}_{}.svg", step.index, name);
            std::fs::write(dir.join(file), shape_svg(shape, &RenderSpec::default()))?;
        }

        let _ = writeln!(
            html,
            "<h2>Step {} &mdash; rule {}</h2>",
            step.index,
            escape_html(&step.rule)
        );
        let _ = writeln!(html, "<p><img src=\"{panels_name}\" alt=\"before/after\" /></p>");
        for d in &step.descriptions {
            let _ = writeln!(
                html,
                "<p class=\"desc\">{}<span class=\"verdict\">[{} &middot; {}]</span></p>",
                description_html(&d.text, step.index),
                d.style.name(),
                escape_html(&d.verification.summary()),
            );
        }
    }
    html.push_str("</body>\n</html>\n");
    std::fs::write(dir.join("index.html"), html)?;
    Ok(())
}
