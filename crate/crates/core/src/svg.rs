//! SVG rendering of two-page drawings.
//!
//! Purely presentational: vertices sit at exact regular angles, so several
//! chords may meet in one point in the picture. The caption always reports
//! the combinatorial crossing count.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::cyclic::Chord;
use crate::drawing::{count_crossings, Page, TwoPageDrawing};

const TOP_COLOR: &str = "#1f77b4";
const BOTTOM_COLOR: &str = "#d62728";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvgLayout {
    /// Top disc on the left, bottom disc on the right.
    SideBySide,
    /// One circle; top chords inside, bottom chords bulging outside.
    InsideOutside,
}

#[derive(Clone, Copy, Debug)]
pub struct SvgOptions {
    pub layout: SvgLayout,
    /// Height of the canvas in pixels; the side-by-side layout is twice as wide.
    pub size: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { layout: SvgLayout::SideBySide, size: 400 }
    }
}

struct Disc {
    cx: f64,
    cy: f64,
    r: f64,
}

impl Disc {
    fn vertex(&self, i: u32, n: u32) -> (f64, f64) {
        let angle = 2.0 * PI * i as f64 / n as f64;
        (self.cx + self.r * angle.cos(), self.cy + self.r * angle.sin())
    }

    fn straight(&self, chord: Chord, n: u32) -> String {
        let (x0, y0) = self.vertex(chord.lo(), n);
        let (x1, y1) = self.vertex(chord.hi(), n);
        format!("M {x0:.3} {y0:.3} L {x1:.3} {y1:.3}")
    }

    /// Quadratic curve through a control point outside the circle, pushed
    /// further out for chords spanning a longer arc.
    fn outer(&self, chord: Chord, n: u32) -> String {
        let (x0, y0) = self.vertex(chord.lo(), n);
        let (x1, y1) = self.vertex(chord.hi(), n);
        let span = (chord.hi() - chord.lo()).min(n - (chord.hi() - chord.lo()));
        let mid_angle = if chord.hi() - chord.lo() <= n / 2 {
            PI * (chord.lo() + chord.hi()) as f64 / n as f64
        } else {
            PI * (chord.lo() + chord.hi() + n) as f64 / n as f64
        };
        let reach = self.r * (1.0 + 0.9 * span as f64 / n as f64);
        let cx = self.cx + reach * mid_angle.cos();
        let cy = self.cy + reach * mid_angle.sin();
        format!("M {x0:.3} {y0:.3} Q {cx:.3} {cy:.3} {x1:.3} {y1:.3}")
    }
}

pub fn render_svg(d: &TwoPageDrawing, options: &SvgOptions) -> String {
    let n = d.n();
    let size = options.size.max(64) as f64;
    let (width, discs) = match options.layout {
        SvgLayout::SideBySide => {
            let r = size * 0.38;
            (2.0 * size, vec![Disc { cx: size * 0.5, cy: size * 0.47, r }, Disc { cx: size * 1.5, cy: size * 0.47, r }])
        }
        SvgLayout::InsideOutside => (size, vec![Disc { cx: size * 0.5, cy: size * 0.47, r: size * 0.26 }]),
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{size:.0}\" viewBox=\"0 0 {width:.0} {size:.0}\">"
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    for disc in &discs {
        let _ = writeln!(
            out,
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"{:.3}\" fill=\"none\" stroke=\"#bbbbbb\"/>",
            disc.cx, disc.cy, disc.r
        );
    }

    for (chord, page) in d.chords() {
        let geometry = match (options.layout, page) {
            (SvgLayout::SideBySide, Page::Top) => discs[0].straight(chord, n),
            (SvgLayout::SideBySide, Page::Bottom) => discs[1].straight(chord, n),
            (SvgLayout::InsideOutside, Page::Top) => discs[0].straight(chord, n),
            (SvgLayout::InsideOutside, Page::Bottom) => discs[0].outer(chord, n),
        };
        let (class, color) = match page {
            Page::Top => ("top", TOP_COLOR),
            Page::Bottom => ("bottom", BOTTOM_COLOR),
        };
        let _ = writeln!(
            out,
            "<path class=\"{class}\" d=\"{geometry}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.2\"/>"
        );
    }

    for disc in &discs {
        for i in 0..n {
            let (x, y) = disc.vertex(i, n);
            let _ = writeln!(out, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"black\"/>");
        }
    }

    let _ = writeln!(
        out,
        "<text x=\"{:.0}\" y=\"{:.0}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">n: {n}, crossings: {}</text>",
        width / 2.0,
        size - 10.0,
        count_crossings(d)
    );
    out.push_str("</svg>\n");
    out
}
