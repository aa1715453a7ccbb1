//! Images of circles `|z| = r` under a map, as SVG polylines or CSV samples.

use std::f64::consts::TAU;
use std::fmt::Write;

use num_complex::Complex64;
use spirallike::HarmonicMapSpec;

use crate::format::fmt9;
use crate::CliError;

pub const DEFAULT_RADII: [f64; 7] = [0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.99];
pub const DEFAULT_SAMPLES: usize = 720;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub radii: Vec<f64>,
    pub samples_per_circle: usize,
    pub format: PlotFormat,
    pub width: u32,
    pub height: u32,
}

impl Default for PlotSpec {
    fn default() -> Self {
        Self {
            radii: DEFAULT_RADII.to_vec(),
            samples_per_circle: DEFAULT_SAMPLES,
            format: PlotFormat::Svg,
            width: 800,
            height: 800,
        }
    }
}

impl PlotSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.radii.is_empty() {
            return Err(CliError::Usage("at least one radius is required".into()));
        }
        if let Some(r) = self.radii.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(CliError::Usage(format!("radius {r} is outside (0, 1)")));
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Usage("radii must be strictly increasing".into()));
        }
        if self.samples_per_circle < 64 {
            return Err(CliError::Usage(format!("samples_per_circle = {} must be at least 64", self.samples_per_circle)));
        }
        if self.width == 0 || self.height == 0 {
            return Err(CliError::Usage("canvas must be non-empty".into()));
        }
        Ok(())
    }
}

/// One sampled circle image.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub r: f64,
    pub theta: Vec<f64>,
    pub points: Vec<Complex64>,
}

pub fn sample_curves(m: &HarmonicMapSpec, spec: &PlotSpec) -> Result<Vec<Curve>, CliError> {
    spec.validate()?;
    let n = spec.samples_per_circle;
    spec.radii
        .iter()
        .map(|&r| {
            let theta: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
            let points = theta
                .iter()
                .map(|&t| m.eval_f(Complex64::from_polar(r, t)).map_err(CliError::from))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(w) = points.iter().find(|w| !(w.re.is_finite() && w.im.is_finite())) {
                return Err(CliError::Usage(format!("map value {w} is not finite on |z| = {r}")));
            }
            Ok(Curve { r, theta, points })
        })
        .collect()
}

pub fn to_csv(curves: &[Curve]) -> String {
    let mut s = String::from("r,theta,re,im\n");
    for c in curves {
        for (t, w) in c.theta.iter().zip(&c.points) {
            writeln!(s, "{},{},{},{}", fmt9(c.r), fmt9(*t), fmt9(w.re), fmt9(w.im)).unwrap();
        }
    }
    s
}

/// `(min_x, min_y, width, height)` of the flipped data with 5% padding on each side.
fn view_box(curves: &[Curve]) -> (f64, f64, f64, f64) {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for w in curves.iter().flat_map(|c| &c.points) {
        x0 = x0.min(w.re);
        x1 = x1.max(w.re);
        y0 = y0.min(-w.im);
        y1 = y1.max(-w.im);
    }
    let (w, h) = ((x1 - x0).max(1e-12), (y1 - y0).max(1e-12));
    (x0 - 0.05 * w, y0 - 0.05 * h, 1.1 * w, 1.1 * h)
}

pub fn to_svg(curves: &[Curve], spec: &PlotSpec) -> String {
    let (x, y, w, h) = view_box(curves);
    let stroke = 0.002 * w.max(h);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        spec.width,
        spec.height,
        fmt9(x),
        fmt9(y),
        fmt9(w),
        fmt9(h)
    )
    .unwrap();
    for c in curves {
        let mut pts = String::new();
        for p in c.points.iter().chain(c.points.first()) {
            if !pts.is_empty() {
                pts.push(' ');
            }
            write!(pts, "{},{}", fmt9(p.re), fmt9(-p.im)).unwrap();
        }
        writeln!(
            s,
            "<polyline data-r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" points=\"{}\"/>",
            fmt9(c.r),
            fmt9(stroke),
            pts
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

pub fn render(m: &HarmonicMapSpec, spec: &PlotSpec) -> Result<String, CliError> {
    let curves = sample_curves(m, spec)?;
    Ok(match spec.format {
        PlotFormat::Svg => to_svg(&curves, spec),
        PlotFormat::Csv => to_csv(&curves),
    })
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn on_segment(p: Complex64, a: Complex64, b: Complex64) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

/// Closed-segment intersection test.
pub fn segments_intersect(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(p1, q1, q2))
        || (d2 == 0.0 && on_segment(p2, q1, q2))
        || (d3 == 0.0 && on_segment(q1, p1, p2))
        || (d4 == 0.0 && on_segment(q2, p1, p2))
}

/// First pair of non-adjacent edges of the closed polygon that meet, if any.
pub fn self_intersection(points: &[Complex64]) -> Option<(usize, usize)> {
    let n = points.len();
    if n < 4 {
        return None;
    }
    let edge = |i: usize| (points[i], points[(i + 1) % n]);
    let boxes: Vec<(f64, f64, f64, f64)> = (0..n)
        .map(|i| {
            let (a, b) = edge(i);
            (a.re.min(b.re), a.re.max(b.re), a.im.min(b.im), a.im.max(b.im))
        })
        .collect();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (bi, bj) = (boxes[i], boxes[j]);
            if bi.1 < bj.0 || bj.1 < bi.0 || bi.3 < bj.2 || bj.3 < bi.2 {
                continue;
            }
            let (a, b) = edge(i);
            let (c, d) = edge(j);
            if segments_intersect(a, b, c, d) {
                return Some((i, j));
            }
        }
    }
    None
}
