//! The golden house and the threshold theorem around it.

mod proof;
mod search;

pub use proof::{gamma, h_of_a, Membership, ProofConfiguration, proof_configuration};
pub use search::{
    distance_to_golden_house, hill_climb, normalize_extremal, random_linear, random_sample, sample,
    search_many, search_records, threshold_search, HillClimbResult, MirrorShape, SampleKind,
    SearchConfig, SearchRecord, SearchReport,
};

use std::cmp::Ordering;

use serde::Serialize;

use crate::containment::{is_minkowski_centered, is_opt_contained, minkowski_asymmetry, recenter};
use crate::error::{Error, Result};
use crate::means::{means_chain, MeansChain};
use crate::polygon::{ConvexPolygon, Mat2, Point2};
use crate::scalar::{Scalar, F64};

/// `conv{(−1,−1), (1,−1), (1,0), (0,φ), (−1,0)}`.
pub fn golden_house<S: Scalar>() -> ConvexPolygon<S> {
    ConvexPolygon::from_points(&golden_house_points()).expect("golden house is a pentagon")
}

/// `p¹ … p⁵` in the order of the theorem.
pub fn golden_house_points<S: Scalar>() -> [Point2<S>; 5] {
    [
        Point2::from_i64(-1, -1),
        Point2::from_i64(-1, 0),
        Point2::new(S::zero(), S::phi()),
        Point2::from_i64(1, 0),
        Point2::from_i64(1, -1),
    ]
}

/// The construction facts of the golden house and the two ratio
/// identities that pin its asymmetry to φ.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldenHouseReport<S> {
    pub s: S,
    pub p2_is_minus_p4: bool,
    pub equal_roof_sides: bool,
    pub g: Point2<S>,
    pub alpha: S,
    pub beta: S,
    pub alpha_over_beta: S,
    pub alpha_plus_beta_over_alpha: S,
    pub similar_triangles: bool,
}

impl<S: Scalar> GoldenHouseReport<S> {
    pub fn all_hold(&self) -> bool {
        let phi = S::phi();
        self.p2_is_minus_p4
            && self.equal_roof_sides
            && self.similar_triangles
            && self.s.eq_s(&phi)
            && self.alpha_over_beta.eq_s(&phi)
            && self.alpha_plus_beta_over_alpha.eq_s(&phi)
    }
}

fn norm<S: Scalar>(p: &Point2<S>) -> Result<S> {
    p.norm2().try_sqrt().ok_or(Error::NotRepresentable(S::NAME))
}

/// Intersection of the lines through `a, b` and `c, d`.
fn line_intersection<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>, d: &Point2<S>) -> Option<Point2<S>> {
    let r = b.clone() - a.clone();
    let q = d.clone() - c.clone();
    let den = r.cross(&q);
    if den.is_zero_s() {
        return None;
    }
    let t = (c.clone() - a.clone()).cross(&q) / den;
    Some(a.clone() + r.scale(&t))
}

fn sorted_sides<S: Scalar>(t: [&Point2<S>; 3]) -> [S; 3] {
    let mut v = [
        (t[0].clone() - t[1].clone()).norm2(),
        (t[1].clone() - t[2].clone()).norm2(),
        (t[2].clone() - t[0].clone()).norm2(),
    ];
    v.sort_by(|a, b| a.exact_cmp(b));
    v
}

fn similar<S: Scalar>(a: [&Point2<S>; 3], b: [&Point2<S>; 3]) -> bool {
    let x = sorted_sides(a);
    let y = sorted_sides(b);
    (x[0].clone() * y[1].clone()).eq_s(&(x[1].clone() * y[0].clone()))
        && (x[0].clone() * y[2].clone()).eq_s(&(x[2].clone() * y[0].clone()))
}

pub fn golden_house_invariants<S: Scalar>() -> Result<GoldenHouseReport<S>> {
    let gh = golden_house::<S>();
    let [p1, p2, p3, p4, p5] = golden_house_points::<S>();
    let s = minkowski_asymmetry(&gh)?.s;
    let far = p3.scale(&-s.clone());
    let g = line_intersection(&p1, &p5, &p3, &far)
        .ok_or_else(|| Error::Inconsistent("bottom edge parallel to the axis".into()))?;
    let alpha = norm(&(p3.clone() - g.clone()))?;
    let beta = norm(&p3)?;
    Ok(GoldenHouseReport {
        p2_is_minus_p4: p2.eq_s(&-p4.clone()),
        equal_roof_sides: (p2.clone() - p3.clone()).norm2().eq_s(&(p4.clone() - p3.clone()).norm2()),
        similar_triangles: similar([&p1, &far, &p5], [&p2, &p3, &p4]),
        alpha_over_beta: alpha.clone() / beta.clone(),
        alpha_plus_beta_over_alpha: (alpha.clone() + beta.clone()) / alpha.clone(),
        g,
        alpha,
        beta,
        s,
    })
}

/// A boundary point `p` with `−p` on the boundary as well, both supported
/// by the parallel lines `a·x = ρ` and `a·x = −ρ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S> {
    pub p: Point2<S>,
    pub a: Point2<S>,
    pub rho: S,
}

impl<S: Scalar> Witness<S> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p.to_array(),
            "a": self.a.to_array(),
            "rho": self.rho.to_f64(),
        })
    }

    /// The witness of `l·C`.
    pub fn linear(&self, l: &Mat2<S>) -> Result<Self> {
        Ok(Witness {
            p: l.apply(&self.p),
            a: l.inverse()?.transpose().apply(&self.a),
            rho: self.rho.clone(),
        })
    }
}

/// Overlap of two collinear point sets (faces of one support line),
/// returned as a point of both, if any.
fn face_overlap<S: Scalar>(f: &[Point2<S>], g: &[Point2<S>], dir: &Point2<S>) -> Option<Point2<S>> {
    let range = |pts: &[Point2<S>]| {
        let vals: Vec<S> = pts.iter().map(|p| dir.dot(p)).collect();
        let lo = vals.iter().cloned().reduce(S::min_s).expect("nonempty face");
        let hi = vals.into_iter().reduce(S::max_s).expect("nonempty face");
        (lo, hi)
    };
    let (flo, fhi) = range(f);
    let (glo, ghi) = range(g);
    let lo = flo.max_s(glo);
    let hi = fhi.min_s(ghi);
    if lo.cmp_s(&hi) == Ordering::Greater {
        return None;
    }
    f.iter()
        .chain(g)
        .find(|p| {
            let v = dir.dot(p);
            v.cmp_s(&lo) != Ordering::Less && v.cmp_s(&hi) != Ordering::Greater
        })
        .cloned()
}

/// Condition (iii) of the equivalence theorem: parallel support lines at
/// `p` and `−p`. Only edge normals of `C` and `−C` need to be tried: the
/// admissible directions at a fixed `p` form the cone `N_C(p) ∩ −N_C(−p)`,
/// whose boundary rays are edge normals of `C` or `−C`.
pub fn condition_iii<S: Scalar>(c: &ConvexPolygon<S>) -> Result<Option<Witness<S>>> {
    if !c.has_origin_in_interior() {
        return Err(Error::OriginNotInterior);
    }
    let normals = c.edge_normals();
    let dirs = normals.iter().cloned().chain(normals.iter().map(|a| -a.clone()));
    for a in dirs {
        let plus = c.support(&a)?;
        let minus = c.support(&-a.clone())?;
        if !plus.value.eq_s(&minus.value) {
            continue;
        }
        let reflected: Vec<Point2<S>> = minus.face.iter().map(|p| -p.clone()).collect();
        if let Some(p) = face_overlap(&plus.face, &reflected, &a.perp()) {
            return Ok(Some(Witness { p, a, rho: plus.value }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport<S> {
    /// `C ∩ (−C) ⊂^opt conv(C ∪ (−C))`
    pub cond_i: bool,
    /// harmonic mean of `C`, `−C` optimally contained in their arithmetic mean
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub witness: Option<Witness<S>>,
}

impl<S: Scalar> EquivalenceReport<S> {
    pub fn consistent(&self) -> bool {
        self.cond_i == self.cond_ii && self.cond_ii == self.cond_iii
    }
}

/// `1 − ρ` for harmonic in arithmetic mean shrinks quadratically as a body
/// approaches the optimal configurations (arithmetic against geometric
/// mean of the two gauges), while `1 − ρ` for minimum in maximum shrinks
/// linearly. A float decision at the common tolerance would accept
/// (ii) for bodies still about `√EPS` away, so (ii) is decided more tightly.
/// Rounding noise on bodies satisfying (iii) stays below `2e-13`.
pub const HARMONIC_TOL: f64 = 1e-12;

/// Evaluate the three conditions separately: (i) and (ii) by the
/// containment LP, (iii) by direct search.
pub fn equivalence_report<S: Scalar>(c: &ConvexPolygon<S>) -> Result<EquivalenceReport<S>> {
    if !c.has_origin_in_interior() || !is_minkowski_centered(c)? {
        return Err(Error::NotCentered);
    }
    let chain = means_chain(c)?;
    equivalence_from_chain(c, &chain)
}

pub(crate) fn equivalence_from_chain<S: Scalar>(
    c: &ConvexPolygon<S>,
    chain: &MeansChain<S>,
) -> Result<EquivalenceReport<S>> {
    let cond_i = is_opt_contained(&chain.minimum, &chain.maximum)?.optimal;
    let ii = is_opt_contained(&chain.harmonic, &chain.arithmetic)?;
    let cond_ii = ii.optimal && (S::one() - ii.rho).to_f64().abs() <= HARMONIC_TOL;
    let witness = condition_iii(c)?;
    Ok(EquivalenceReport {
        cond_i,
        cond_ii,
        cond_iii: witness.is_some(),
        witness,
    })
}

/// The golden house with `(0, −τ)` added, Minkowski centered by the
/// asymmetry LP. Returns the body and the translation that was applied.
pub fn hexagon_family_with_shift<S: Scalar>(tau: &S) -> Result<(ConvexPolygon<S>, Point2<S>)> {
    let phi2 = S::phi() * S::phi();
    if tau.cmp_s(&S::one()) == Ordering::Less || tau.cmp_s(&phi2) == Ordering::Greater {
        return Err(Error::OutOfRange(format!("τ = {tau} outside [1, φ²]")));
    }
    let mut pts = golden_house_points::<S>().to_vec();
    pts.push(Point2::new(S::zero(), -tau.clone()));
    let raw = ConvexPolygon::from_points(&pts)?;
    let centered = recenter(&raw)?;
    let shift = centered.vertices()[0].clone() - raw.vertices()[0].clone();
    Ok((centered, shift))
}

pub fn hexagon_family<S: Scalar>(tau: &S) -> Result<ConvexPolygon<S>> {
    hexagon_family_with_shift(tau).map(|(p, _)| p)
}

/// Regular `n`-gon with unit circumradius, one vertex at `(0, 1)`.
pub fn regular_ngon(n: usize) -> Result<ConvexPolygon<F64>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("a polygon needs at least 3 vertices, got {n}")));
    }
    let pts: Vec<Point2<F64>> = (0..n)
        .map(|k| {
            let t = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * k as f64 / n as f64;
            Point2::new(F64(t.cos()), F64(t.sin()))
        })
        .collect();
    ConvexPolygon::from_points(&pts)
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagSummary {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
}

impl<S: Scalar> From<&EquivalenceReport<S>> for FlagSummary {
    fn from(r: &EquivalenceReport<S>) -> Self {
        FlagSummary {
            cond_i: r.cond_i,
            cond_ii: r.cond_ii,
            cond_iii: r.cond_iii,
        }
    }
}
