//! Schematic SVG drawings of chord diagrams.
//!
//! Point `i` of a `2m`-point diagram sits at angle `i * 360 / 2m` degrees,
//! counterclockwise from the positive horizontal axis. Chords are straight
//! segments. All coordinates are printed with three decimals so output is
//! byte-stable.

use std::fmt::Write as _;
use std::path::Path;

use crate::diagram::{Chord, ChordDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub radius: f64,
    pub margin: f64,
    pub point_radius: f64,
    pub chord_stroke: String,
    pub highlight_stroke: String,
    pub labels: bool,
    pub highlight: Vec<Chord>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            radius: 100.0,
            margin: 24.0,
            point_radius: 2.5,
            chord_stroke: "#555555".into(),
            highlight_stroke: "#d62728".into(),
            labels: true,
            highlight: Vec::new(),
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

impl RenderSpec {
    fn centre(&self) -> f64 {
        self.radius + self.margin
    }

    /// SVG coordinates of point `i` on a circle of `points` points at `scale * radius`.
    pub fn position(&self, i: usize, points: usize, scale: f64) -> (f64, f64) {
        let theta = std::f64::consts::TAU * i as f64 / points as f64;
        let r = self.radius * scale;
        (
            self.centre() + r * theta.cos(),
            self.centre() - r * theta.sin(),
        )
    }
}

pub fn render_svg(c: &ChordDiagram, spec: &RenderSpec) -> Result<String> {
    for &h in &spec.highlight {
        if !c.contains_chord(h) {
            return Err(Error::NotAChord(h.a, h.b));
        }
    }
    let size = 2.0 * spec.centre();
    let n = c.points();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = num(size)
    );
    let _ = writeln!(
        out,
        r#"  <circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="1"/>"#,
        c = num(spec.centre()),
        r = num(spec.radius)
    );
    let line = |out: &mut String, ch: Chord, class: &str, stroke: &str, width: &str| {
        let (x1, y1) = spec.position(ch.a, n, 1.0);
        let (x2, y2) = spec.position(ch.b, n, 1.0);
        let _ = writeln!(
            out,
            r#"    <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{width}"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    };
    let _ = writeln!(out, r#"  <g id="chords">"#);
    for ch in c
        .chords()
        .into_iter()
        .filter(|ch| !spec.highlight.contains(ch))
    {
        line(&mut out, ch, "chord", &spec.chord_stroke, "1.5");
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g id="witness">"#);
    let mut highlighted: Vec<Chord> = spec.highlight.clone();
    highlighted.sort();
    highlighted.dedup();
    for ch in highlighted {
        line(&mut out, ch, "witness", &spec.highlight_stroke, "3");
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g id="points">"#);
    for i in 0..n {
        let (x, y) = spec.position(i, n, 1.0);
        let _ = writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(x),
            num(y),
            num(spec.point_radius)
        );
        if spec.labels {
            let (lx, ly) = spec.position(i, n, 1.0 + 12.0 / spec.radius);
            let _ = writeln!(
                out,
                r#"    <text x="{}" y="{}" font-family="sans-serif" font-size="9" text-anchor="middle" dominant-baseline="central">{i}</text>"#,
                num(lx),
                num(ly)
            );
        }
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

pub fn render_to_file(c: &ChordDiagram, spec: &RenderSpec, path: &Path) -> Result<()> {
    let svg = render_svg(c, spec)?;
    std::fs::write(path, svg).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::{find_obstruction, make_c};

    #[test]
    fn empty_diagram_is_just_a_circle() {
        let svg = render_svg(&ChordDiagram::empty(), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<line"));
    }

    #[test]
    fn highlights_exactly_the_witness() {
        let c: ChordDiagram = "0-1 2-3 4-5 6-7".parse().unwrap();
        let w = find_obstruction(&c).unwrap();
        let spec = RenderSpec {
            highlight: w.chords.clone(),
            ..RenderSpec::default()
        };
        let svg = render_svg(&c, &spec).unwrap();
        assert_eq!(svg.matches(r#"class="witness""#).count(), 3);
        assert_eq!(svg.matches(r#"class="chord""#).count(), 1);
    }

    #[test]
    fn point_placement() {
        let spec = RenderSpec::default();
        let (x, y) = spec.position(0, 6, 1.0);
        assert_eq!(
            (num(x), num(y)),
            ("224.000".to_string(), "124.000".to_string())
        );
        let svg = render_svg(&make_c(1).unwrap(), &spec).unwrap();
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg, render_svg(&make_c(1).unwrap(), &spec).unwrap());
    }

    #[test]
    fn rejects_foreign_highlight() {
        let spec = RenderSpec {
            highlight: vec![Chord::new(0, 2)],
            ..RenderSpec::default()
        };
        assert_eq!(
            render_svg(&make_c(1).unwrap(), &spec),
            Err(Error::NotAChord(0, 2))
        );
    }
}
