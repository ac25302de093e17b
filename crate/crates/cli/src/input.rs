use std::io::Read;

use clap::{Args, ValueEnum};
use convex_means::containment::recenter;
use convex_means::golden::{golden_house, hexagon_family, regular_ngon};
use convex_means::json::{parse_polygon, AnyPolygon};
use convex_means::{Error, Scalar, F64, Q5};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Q5,
    F64,
}

/// Where the polygon comes from. Exactly one source is allowed.
#[derive(Args, Debug, Clone)]
pub struct PolygonInput {
    /// Polygon JSON document, `-` for stdin
    pub path: Option<String>,
    /// Use the golden house
    #[arg(long, conflicts_with_all = ["path", "ngon", "family"])]
    pub golden_house: bool,
    /// Use the regular n-gon with unit circumradius
    #[arg(long, value_name = "N", conflicts_with_all = ["path", "family"])]
    pub ngon: Option<usize>,
    /// Use the centered golden house with (0, -TAU) added, 1 <= TAU <= φ²;
    /// exact values like `3/2` or `3/2+1/2*r5` are accepted
    #[arg(long, value_name = "TAU", conflicts_with = "path")]
    pub family: Option<String>,
    /// Translate the body to its Minkowski center first
    #[arg(long)]
    pub recenter: bool,
    /// Scalar backend; defaults to the one of the source
    #[arg(long, value_enum)]
    pub backend: Option<Backend>,
}

fn read_source(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Json(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

/// An exact field element such as `3/2+1/2*r5`, or a decimal, which is
/// taken as the exact value of its binary double.
pub fn parse_scalar(text: &str) -> Result<Q5, Error> {
    match text.parse::<Q5>() {
        Ok(q) => Ok(q),
        Err(e) => match text.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Q5::from_f64(v)),
            _ => Err(e.into()),
        },
    }
}

impl PolygonInput {
    pub fn load(&self) -> Result<AnyPolygon, Error> {
        let raw = if self.golden_house {
            match self.backend.unwrap_or(Backend::Q5) {
                Backend::Q5 => AnyPolygon::Q5(golden_house()),
                Backend::F64 => AnyPolygon::F64(golden_house()),
            }
        } else if let Some(n) = self.ngon {
            let p = regular_ngon(n)?;
            match self.backend.unwrap_or(Backend::F64) {
                Backend::Q5 => AnyPolygon::Q5(p.convert()?),
                Backend::F64 => AnyPolygon::F64(p),
            }
        } else if let Some(tau) = &self.family {
            match self.backend.unwrap_or(Backend::Q5) {
                Backend::Q5 => AnyPolygon::Q5(hexagon_family(&parse_scalar(tau)?)?),
                Backend::F64 => AnyPolygon::F64(hexagon_family(&F64(parse_scalar(tau)?.to_f64()))?),
            }
        } else {
            let path = self.path.as_deref().unwrap_or("-");
            let doc = parse_polygon(&read_source(path)?)?;
            match (doc, self.backend) {
                (AnyPolygon::Q5(p), Some(Backend::F64)) => AnyPolygon::F64(p.to_f64()),
                (AnyPolygon::F64(p), Some(Backend::Q5)) => AnyPolygon::Q5(p.convert()?),
                (doc, _) => doc,
            }
        };
        if !self.recenter {
            return Ok(raw);
        }
        Ok(match raw {
            AnyPolygon::Q5(p) => AnyPolygon::Q5(recenter(&p)?),
            AnyPolygon::F64(p) => AnyPolygon::F64(recenter(&p)?),
        })
    }
}
