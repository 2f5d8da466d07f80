//! Static SVG line charts: one panel per quantifier, one polyline per series.

use std::fmt::Write as _;

use thiserror::Error;

use crate::config::{Scale, SweepSpec};
use crate::sweep::CsvRow;

/// Panel title and the row field it plots.
type Panel = (&'static str, fn(&CsvRow) -> f64);

/// Vertex cap per polyline.
pub const MAX_VERTICES: usize = 2000;

const PANEL_W: f64 = 360.0;
const PANEL_H: f64 = 280.0;
const MARGIN_L: f64 = 60.0;
const MARGIN_T: f64 = 40.0;
const GAP: f64 = 80.0;
const LEGEND_ROW: f64 = 22.0;
const LEGEND_COLS: usize = 4;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#7f7f7f", "#bcbd22",
];

#[derive(Debug, Error, PartialEq)]
pub enum RenderError {
    #[error("no rows to plot")]
    EmptyData,
}

/// Display name of a parameter for axis labels and legends.
pub fn display_name(key: &str) -> &str {
    match key {
        "t_hawking" => "T_H",
        "t_unruh" => "T_U",
        "r0" => "R₀",
        "alpha" => "α",
        "phi" => "φ",
        "omega" => "ω",
        "kappa0" => "κ₀",
        "epsilon" => "ε",
        "ratio" => "Ω",
        "time" => "t",
        other => other,
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Keeps at most `max` points, evenly spaced in index, always including both ends.
pub fn decimate<T: Copy>(points: &[T], max: usize) -> Vec<T> {
    let n = points.len();
    if n <= max || max < 2 {
        return points.to_vec();
    }
    (0..max)
        .map(|i| points[(i * (n - 1) + (max - 1) / 2) / (max - 1)])
        .collect()
}

fn legend_text(spec: &SweepSpec, label: &str) -> String {
    let (base, conv) = match label.rsplit_once(':') {
        Some((b, c)) => (b, Some(c)),
        None => (label, None),
    };
    let mut text = if spec.series.len() == 1 && !base.is_empty() {
        format!("{} = {base}", display_name(&spec.series[0].0))
    } else {
        base.split(';')
            .filter(|s| !s.is_empty())
            .map(|kv| match kv.split_once('=') {
                Some((k, v)) => format!("{} = {v}", display_name(k)),
                None => kv.to_string(),
            })
            .collect::<Vec<_>>()
            .join(", ")
    };
    if let Some(c) = conv {
        if !text.is_empty() {
            text.push(' ');
        }
        let _ = write!(text, "({c})");
    }
    text
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    log: bool,
}

impl Frame {
    fn fx(&self, x: f64) -> f64 {
        let (a, b, v) = if self.log {
            (self.x0.log10(), self.x1.log10(), x.log10())
        } else {
            (self.x0, self.x1, x)
        };
        (v - a) / (b - a) * PANEL_W
    }

    fn fy(&self, y: f64) -> f64 {
        PANEL_H - (y - self.y0) / (self.y1 - self.y0) * PANEL_H
    }
}

fn ticks(lo: f64, hi: f64, log: bool) -> Vec<f64> {
    if log {
        let (a, b) = (lo.log10().ceil() as i32, hi.log10().floor() as i32);
        let t: Vec<f64> = (a..=b).map(|e| 10f64.powi(e)).collect();
        if t.len() >= 2 {
            return t;
        }
        return vec![lo, hi];
    }
    (0..=4).map(|i| lo + (hi - lo) * i as f64 / 4.0).collect()
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if !(1e-3..1e4).contains(&a) {
        format!("{v:.0e}")
    } else if a >= 100.0 {
        format!("{v:.0}")
    } else if a >= 1.0 {
        format!("{v:.2}")
    } else {
        format!("{v:.3}")
    }
}

/// Renders a self-contained SVG 1.1 document.
pub fn render_svg(rows: &[CsvRow], spec: &SweepSpec) -> Result<String, RenderError> {
    if rows.is_empty() {
        return Err(RenderError::EmptyData);
    }
    let mut labels: Vec<&str> = Vec::new();
    for r in rows {
        if !labels.contains(&r.series.as_str()) {
            labels.push(&r.series);
        }
    }
    let panels: [Panel; 3] = [
        ("C_H", |r| r.coherence),
        ("D_T", |r| r.discord),
        ("B_d", |r| r.bures),
    ];

    let legend_rows = if labels.len() > 1 || !labels[0].is_empty() {
        labels.len().div_ceil(LEGEND_COLS)
    } else {
        0
    };
    let width = MARGIN_L + 3.0 * PANEL_W + 2.0 * GAP + 30.0;
    let legend_top = MARGIN_T + PANEL_H + 60.0;
    let height = legend_top + legend_rows as f64 * LEGEND_ROW + 20.0;
    let log = spec.axis.scale == Scale::Log;
    let x_label = escape(display_name(&spec.axis.name));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="12">
<rect width="100%" height="100%" fill="white"/>"#
    );

    for (pi, (title, value)) in panels.iter().enumerate() {
        let finite: Vec<f64> = rows.iter().map(value).filter(|v| v.is_finite()).collect();
        let (mut y0, mut y1) = finite
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        if !y0.is_finite() {
            (y0, y1) = (0.0, 1.0);
        }
        if y1 - y0 < 1e-12 {
            y0 -= 0.5;
            y1 += 0.5;
        } else {
            let pad = 0.05 * (y1 - y0);
            y0 -= pad;
            y1 += pad;
        }
        let frame = Frame {
            x0: spec.axis.start,
            x1: spec.axis.stop,
            y0,
            y1,
            log,
        };
        let ox = MARGIN_L + pi as f64 * (PANEL_W + GAP);
        let _ = writeln!(svg, r#"<g transform="translate({ox:.1},{MARGIN_T:.1})">"#);
        let _ = writeln!(
            svg,
            r##"<rect width="{PANEL_W}" height="{PANEL_H}" fill="none" stroke="#333"/>"##
        );
        for t in ticks(frame.x0, frame.x1, log) {
            let x = frame.fx(t);
            let _ = writeln!(
                svg,
                r##"<line x1="{x:.2}" y1="{PANEL_H}" x2="{x:.2}" y2="{:.0}" stroke="#333"/><text x="{x:.2}" y="{:.0}" text-anchor="middle">{}</text>"##,
                PANEL_H + 5.0,
                PANEL_H + 18.0,
                tick_label(t)
            );
        }
        for t in ticks(y0, y1, false) {
            let y = frame.fy(t);
            let _ = writeln!(
                svg,
                r##"<line x1="-5" y1="{y:.2}" x2="0" y2="{y:.2}" stroke="#333"/><text x="-8" y="{:.2}" text-anchor="end">{}</text>"##,
                y + 4.0,
                tick_label(t)
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.0}" text-anchor="middle">{x_label}</text>"#,
            PANEL_W / 2.0,
            PANEL_H + 38.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="-12" text-anchor="middle" font-size="14">{title}</text>"#,
            PANEL_W / 2.0
        );
        for (si, label) in labels.iter().enumerate() {
            let pts: Vec<(f64, f64)> = rows
                .iter()
                .filter(|r| r.series == *label)
                .map(|r| (r.axis, value(r)))
                .filter(|(x, y)| x.is_finite() && y.is_finite() && (!log || *x > 0.0))
                .collect();
            let pts = decimate(&pts, MAX_VERTICES);
            let coords: Vec<String> = pts
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", frame.fx(x), frame.fy(y)))
                .collect();
            let _ = writeln!(
                svg,
                r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
                PALETTE[si % PALETTE.len()],
                coords.join(" ")
            );
        }
        svg.push_str("</g>\n");
    }

    if legend_rows > 0 {
        let col_w = (width - MARGIN_L) / LEGEND_COLS as f64;
        for (si, label) in labels.iter().enumerate() {
            let x = MARGIN_L + (si % LEGEND_COLS) as f64 * col_w;
            let y = legend_top + (si / LEGEND_COLS) as f64 * LEGEND_ROW;
            let _ = writeln!(
                svg,
                r#"<line x1="{x:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="{}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{}</text>"#,
                x + 24.0,
                PALETTE[si % PALETTE.len()],
                x + 30.0,
                y + 4.0,
                escape(&legend_text(spec, label))
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::sweep::{run_sweep, RunOptions};

    fn spec(text: &str) -> SweepSpec {
        parse_config(text).unwrap()
    }

    #[test]
    fn empty_rows_rejected() {
        let s = spec("scenario = unruh\n[axis]\nname = t_unruh\nstart = 1\nstop = 2\n");
        assert_eq!(render_svg(&[], &s), Err(RenderError::EmptyData));
    }

    #[test]
    fn one_polyline_per_series_and_panel() {
        let s = spec(
            "scenario = gisin-hawking\n[axis]\nname = t_hawking\nstart = 0.1\nstop = 20\npoints = 20\n[series]\nalpha = 0.2, 0.4, 0.6, 0.8, 1.0\n",
        );
        let rows = run_sweep(&s, &RunOptions::default()).unwrap();
        let svg = render_svg(&rows, &s).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 15);
        assert!(svg.contains(">T_H</text>"));
        assert!(svg.contains("α = 0.2"));
        assert!(svg.starts_with("<?xml"));
        assert!(!svg.contains("href"));
    }

    #[test]
    fn single_series_has_no_legend() {
        let s = spec("scenario = unruh\n[axis]\nname = t_unruh\nstart = 1\nstop = 2\npoints = 3\n");
        let rows = run_sweep(&s, &RunOptions::default()).unwrap();
        let svg = render_svg(&rows, &s).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert_eq!(svg.matches("stroke-width=\"2\"").count(), 0);
    }

    #[test]
    fn long_series_are_decimated() {
        let s = spec("scenario = unruh\n[axis]\nname = t_unruh\nstart = 0.1\nstop = 50\npoints = 10000\n");
        let rows = run_sweep(&s, &RunOptions::default()).unwrap();
        let svg = render_svg(&rows, &s).unwrap();
        for line in svg.lines().filter(|l| l.starts_with("<polyline")) {
            let points = line.split("points=\"").nth(1).unwrap();
            assert!(points.split(' ').count() <= MAX_VERTICES);
        }
    }

    #[test]
    fn decimation_keeps_ends() {
        let v: Vec<usize> = (0..10_000).collect();
        let d = decimate(&v, 2000);
        assert_eq!(d.len(), 2000);
        assert_eq!((d[0], d[1999]), (0, 9999));
        assert!(d.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(decimate(&v[..5], 2000), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn escapes_markup() {
        assert_eq!(escape("a<b & \"c\""), "a&lt;b &amp; &quot;c&quot;");
    }
}
