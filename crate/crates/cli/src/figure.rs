//! Hand-written SVG figures. World coordinates go straight into the
//! `viewBox` with `y` negated, so the picture is y-up and every vertex can
//! be read back from the file.

use std::fmt::Write;

use convex_means::containment::minkowski_asymmetry;
use convex_means::golden::{golden_house, hexagon_family};
use convex_means::means::means_chain;
use convex_means::{ConvexPolygon, Error, Scalar, F64, Q5};

#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub points: Vec<[f64; 2]>,
    pub stroke: String,
    pub label: String,
}

/// A dashed segment, for support lines.
#[derive(Clone, Debug, PartialEq)]
pub struct Annotation {
    pub from: [f64; 2],
    pub to: [f64; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub struct Viewport {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureSpec {
    pub layers: Vec<Layer>,
    pub dashed: Vec<Annotation>,
    pub viewport: Viewport,
}

pub const MARGIN: f64 = 0.05;
const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

fn bounds(points: impl Iterator<Item = [f64; 2]>) -> Viewport {
    let mut v = Viewport {
        min: [f64::INFINITY; 2],
        max: [f64::NEG_INFINITY; 2],
    };
    for p in points {
        for (k, x) in p.into_iter().enumerate() {
            v.min[k] = v.min[k].min(x);
            v.max[k] = v.max[k].max(x);
        }
    }
    v
}

impl FigureSpec {
    /// Fit the viewport to all layers and annotations with a 5% margin on
    /// each side.
    pub fn new(layers: Vec<Layer>, dashed: Vec<Annotation>) -> Self {
        let b = bounds(
            layers
                .iter()
                .flat_map(|l| l.points.iter().copied())
                .chain(dashed.iter().flat_map(|a| [a.from, a.to])),
        );
        let pad = |k: usize| MARGIN * (b.max[k] - b.min[k]);
        let viewport = Viewport {
            min: [b.min[0] - pad(0), b.min[1] - pad(1)],
            max: [b.max[0] + pad(0), b.max[1] + pad(1)],
        };
        FigureSpec {
            layers,
            dashed,
            viewport,
        }
    }

    pub fn to_svg(&self) -> String {
        let v = &self.viewport;
        let (w, h) = (v.max[0] - v.min[0], v.max[1] - v.min[1]);
        let width = 600.0;
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{:.0}" viewBox="{} {} {} {}">"#,
            width * h / w,
            num(v.min[0]),
            num(-v.max[1]),
            num(w),
            num(h)
        );
        for l in &self.layers {
            let pts: Vec<String> = l.points.iter().map(|p| format!("{},{}", num(p[0]), num(-p[1]))).collect();
            let _ = writeln!(
                out,
                r#"  <polygon points="{}" fill="none" stroke="{}" stroke-width="2" vector-effect="non-scaling-stroke"><title>{}</title></polygon>"#,
                pts.join(" "),
                l.stroke,
                l.label
            );
        }
        for a in &self.dashed {
            let _ = writeln!(
                out,
                r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#555555" stroke-width="1" stroke-dasharray="6 4" vector-effect="non-scaling-stroke"/>"##,
                num(a.from[0]),
                num(-a.from[1]),
                num(a.to[0]),
                num(-a.to[1])
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Fixed six decimals so that repeated runs give identical bytes.
fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn layer<S: Scalar>(p: &ConvexPolygon<S>, stroke: &str, label: &str) -> Layer {
    Layer {
        points: p.vertices().iter().map(|v| v.to_array()).collect(),
        stroke: stroke.into(),
        label: label.into(),
    }
}

fn color(colors: &[String], i: usize) -> &str {
    colors.get(i).map(String::as_str).unwrap_or(PALETTE[i % PALETTE.len()])
}

/// The golden house, `−φ·GH`, and the dashed support lines `x = ±1`.
pub fn golden_house_figure(colors: &[String]) -> Result<FigureSpec, Error> {
    let gh = golden_house::<Q5>();
    let scaled = gh.negate().scale(&Q5::phi())?;
    let layers = vec![layer(&gh, color(colors, 0), "C"), layer(&scaled, color(colors, 1), "-phi C")];
    let b = bounds(layers.iter().flat_map(|l| l.points.iter().copied()));
    let dashed = [-1.0, 1.0]
        .iter()
        .map(|&x| Annotation {
            from: [x, b.min[1]],
            to: [x, b.max[1]],
        })
        .collect();
    Ok(FigureSpec::new(layers, dashed))
}

/// The four symmetrizations of the golden house.
pub fn symmetrizations_figure(colors: &[String]) -> Result<FigureSpec, Error> {
    let ch = means_chain(&golden_house::<Q5>())?;
    let names = ["minimum", "harmonic", "arithmetic", "maximum"];
    let layers = ch
        .as_array()
        .iter()
        .zip(names)
        .enumerate()
        .map(|(i, (p, n))| layer(*p, color(colors, i), n))
        .collect();
    Ok(FigureSpec::new(layers, Vec::new()))
}

/// A hexagon of the golden-house family together with `−s·C`.
pub fn family_figure(tau: f64, colors: &[String]) -> Result<FigureSpec, Error> {
    let c = hexagon_family(&F64(tau))?;
    let s = minkowski_asymmetry(&c)?.s;
    let overlay = c.negate().scale(&s)?;
    let layers = vec![layer(&c, color(colors, 0), "C"), layer(&overlay, color(colors, 1), "-s C")];
    Ok(FigureSpec::new(layers, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn viewport_has_margin() {
        let f = golden_house_figure(&[]).unwrap();
        let b = bounds(f.layers.iter().flat_map(|l| l.points.iter().copied()));
        let v = &f.viewport;
        for k in 0..2 {
            let pad = MARGIN * (b.max[k] - b.min[k]);
            assert!((b.min[k] - v.min[k] - pad).abs() < 1e-12);
            assert!((v.max[k] - b.max[k] - pad).abs() < 1e-12);
        }
    }

    #[test]
    fn golden_house_figure_layers() {
        let f = golden_house_figure(&["red".into()]).unwrap();
        assert_eq!(f.layers.len(), 2);
        assert_eq!(f.layers[0].stroke, "red");
        assert_eq!(f.layers[1].stroke, PALETTE[1]);
        // −φ·GH has its lowest vertex at −φ²
        let low = f.layers[1].points.iter().map(|p| p[1]).fold(f64::INFINITY, f64::min);
        assert!((low + F64::phi().0 * F64::phi().0).abs() < 1e-12);
        assert!(f.dashed.iter().all(|a| a.from[0] == a.to[0] && a.from[0].abs() == 1.0));
    }

    #[test]
    fn negative_zero_is_printed_once() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(1.5), "1.500000");
    }
}
