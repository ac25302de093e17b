//! Optimal containment and Minkowski asymmetry through linear programming.
//!
//! The homothety LP is written for any dimension: bodies are given as a
//! vertex list (the contained body) and a facet list (the container).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lp::{dot, lp_lexmin, lp_solve, LPProblem, VarKind};
use crate::polygon::{orient, ConvexPolygon, Point2};
use crate::scalar::Scalar;

/// Halfspace `{x : normal·x <= offset}` in any dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet<S> {
    pub normal: Vec<S>,
    pub offset: S,
}

impl<S: Scalar> Facet<S> {
    pub fn new(normal: Vec<S>, offset: S) -> Self {
        Facet { normal, offset }
    }

    pub fn slack(&self, x: &[S]) -> S {
        self.offset.clone() - dot(&self.normal, x)
    }
}

/// A contact of the optimal containment: `point` of the inner body lies on
/// the facet with outer `normal`; `weight` is its share in the convex
/// combination of normals that vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct Touching<S> {
    pub point: Vec<S>,
    pub normal: Vec<S>,
    pub weight: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContainmentResult<S> {
    pub rho: S,
    pub t: Vec<S>,
    pub touching: Vec<Touching<S>>,
}

impl<S: Scalar> ContainmentResult<S> {
    /// `Σ weight·normal`, which is zero for an unconstrained translation.
    pub fn normal_combination(&self) -> Vec<S> {
        let n = self.t.len();
        self.touching.iter().fold(vec![S::zero(); n], |acc, c| {
            acc.into_iter()
                .zip(&c.normal)
                .map(|(s, a)| s + c.weight.clone() * a.clone())
                .collect()
        })
    }
}

fn support<S: Scalar>(points: &[Vec<S>], u: &[S]) -> (S, usize) {
    let mut best = (dot(u, &points[0]), 0);
    for (i, p) in points.iter().enumerate().skip(1) {
        let v = dot(u, p);
        if v.cmp_s(&best.0) == Ordering::Greater {
            best = (v, i);
        }
    }
    best
}

fn check_dims<S: Scalar>(k: &[Vec<S>], c: &[Facet<S>]) -> Result<usize> {
    let n = k.first().map(Vec::len).unwrap_or(0);
    if n == 0 || k.len() <= n || c.len() <= n {
        return Err(Error::Degenerate(format!(
            "need more than {n} vertices and facets, got {} and {}",
            k.len(),
            c.len()
        )));
    }
    if k.iter().any(|v| v.len() != n) || c.iter().any(|f| f.normal.len() != n) {
        return Err(Error::Degenerate("mixed dimensions".into()));
    }
    Ok(n)
}

/// Smallest `ρ >= 0` and a translation `t` with `K ⊆ t + ρC`.
///
/// Variables are `(ρ, t)`; each facet `a·x <= b` of `C` gives the row
/// `a·t + ρb >= h_K(a)`. The row duals `y` satisfy `Σ y a = 0` and
/// `Σ y b = 1` when the translation is free, and the facets with positive
/// dual are reported as contacts. With `fix_translation`, `t` is pinned.
pub fn min_homothety<S: Scalar>(
    k: &[Vec<S>],
    c: &[Facet<S>],
    fix_translation: Option<&[S]>,
) -> Result<ContainmentResult<S>> {
    let n = check_dims(k, c)?;
    let mut objective = vec![S::zero(); n + 1];
    objective[0] = S::one();
    let mut vars = vec![VarKind::NonNegative];
    vars.extend(std::iter::repeat_n(VarKind::Free, n));
    let mut lp = LPProblem::new(objective, vars);
    let supports: Vec<(S, usize)> = c.iter().map(|f| support(k, &f.normal)).collect();
    for (f, (h, _)) in c.iter().zip(&supports) {
        let mut row = vec![f.offset.clone()];
        row.extend(f.normal.iter().cloned());
        lp.add_ge(row, h.clone());
    }
    if let Some(t) = fix_translation {
        if t.len() != n {
            return Err(Error::Degenerate("translation has the wrong dimension".into()));
        }
        for (j, tj) in t.iter().enumerate() {
            let mut row = vec![S::zero(); n + 1];
            row[j + 1] = S::one();
            lp.add_eq(row, tj.clone());
        }
    }
    let sol = lp_solve(&lp)?;
    let duals = &sol.duals[..c.len()];
    let total = duals.iter().fold(S::zero(), |acc, y| acc + y.clone());
    let touching = if total.is_pos() {
        c.iter()
            .zip(&supports)
            .zip(duals)
            .filter(|(_, y)| y.is_pos())
            .map(|((f, (_, idx)), y)| Touching {
                point: k[*idx].clone(),
                normal: f.normal.clone(),
                weight: y.clone() / total.clone(),
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(ContainmentResult {
        rho: sol.x[0].clone(),
        t: sol.x[1..].to_vec(),
        touching,
    })
}

pub fn polygon_points<S: Scalar>(p: &ConvexPolygon<S>) -> Vec<Vec<S>> {
    p.vertices().iter().map(|v| vec![v.x.clone(), v.y.clone()]).collect()
}

pub fn polygon_facets<S: Scalar>(p: &ConvexPolygon<S>) -> Vec<Facet<S>> {
    p.halfplanes()
        .into_iter()
        .map(|h| Facet::new(vec![h.a.x, h.a.y], h.rho))
        .collect()
}

fn to_point<S: Scalar>(v: &[S]) -> Point2<S> {
    Point2::new(v[0].clone(), v[1].clone())
}

/// [`min_homothety`] for two polygons.
pub fn min_homothety_polygons<S: Scalar>(
    k: &ConvexPolygon<S>,
    c: &ConvexPolygon<S>,
) -> Result<ContainmentResult<S>> {
    min_homothety(&polygon_points(k), &polygon_facets(c), None)
}

/// Outcome of an optimal-containment test `K ⊂^opt C`.
#[derive(Clone, Debug, PartialEq)]
pub struct OptContainment<S> {
    pub optimal: bool,
    /// Minimal homothety factor, `<= 1` since `K ⊆ C`.
    pub rho: S,
    /// A translation with `K ⊆ t + ρC`.
    pub t: Point2<S>,
    /// Contacts `p ∈ K ∩ bd(C)` with outer normals whose weighted sum is 0;
    /// empty unless `optimal`.
    pub touching: Vec<Touching<S>>,
    /// For 0-symmetric `K`, `C`: whether `K` meets `bd(C)`.
    pub boundary_contact: Option<bool>,
}

fn centered_symmetric<S: Scalar>(p: &ConvexPolygon<S>) -> bool {
    p.is_symmetric().is_some_and(|c| c.is_zero_s())
}

/// Decide `K ⊂^opt C`. For 0-symmetric bodies the answer is also read off
/// boundary contact and the two answers must agree.
pub fn is_opt_contained<S: Scalar>(
    k: &ConvexPolygon<S>,
    c: &ConvexPolygon<S>,
) -> Result<OptContainment<S>> {
    if !c.contains_polygon(k) {
        return Err(Error::NotContained);
    }
    let res = min_homothety_polygons(k, c)?;
    let optimal = res.rho.eq_s(&S::one());
    // contact through the gauge of C, so that the tolerance matches the one
    // applied to ρ
    let boundary_contact = (centered_symmetric(k) && centered_symmetric(c)).then(|| {
        let hs = c.halfplanes();
        k.vertices()
            .iter()
            .map(|v| {
                hs.iter()
                    .map(|h| h.a.dot(v) / h.rho.clone())
                    .reduce(S::max_s)
                    .expect("polygon has edges")
            })
            .any(|g| g.eq_s(&S::one()))
    });
    if let Some(contact) = boundary_contact {
        if contact != optimal {
            return Err(Error::Inconsistent(format!(
                "boundary contact {contact} but homothety factor {}",
                res.rho
            )));
        }
    }
    let t = to_point(&res.t);
    Ok(OptContainment {
        optimal,
        rho: res.rho,
        t,
        touching: if optimal { res.touching } else { Vec::new() },
        boundary_contact,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymmetryResult<S> {
    pub s: S,
    /// The lexicographically smallest Minkowski center.
    pub center: Point2<S>,
    /// Points of `bd(C−c) ∩ bd(−s(C−c))`.
    pub touching: Vec<Point2<S>>,
}

/// Rows `a·d − ρ·b <= min_v a·v` over `(ρ, d)`; the center is `d/(ρ+1)`.
fn asymmetry_lp<S: Scalar>(points: &[Vec<S>], facets: &[Facet<S>]) -> Result<LPProblem<S>> {
    let n = check_dims(points, facets)?;
    let mut objective = vec![S::zero(); n + 1];
    objective[0] = S::one();
    let mut vars = vec![VarKind::NonNegative];
    vars.extend(std::iter::repeat_n(VarKind::Free, n));
    let mut lp = LPProblem::new(objective, vars);
    for f in facets {
        let neg: Vec<S> = f.normal.iter().map(|a| -a.clone()).collect();
        let min = -support(points, &neg).0;
        let mut row = vec![-f.offset.clone()];
        row.extend(f.normal.iter().cloned());
        lp.add_le(row, min);
    }
    Ok(lp)
}

fn unit_objective<S: Scalar>(len: usize, j: usize, sign: i64) -> Vec<S> {
    let mut v = vec![S::zero(); len];
    v[j] = S::from_i64(sign);
    v
}

/// Asymmetry and lexicographically extreme centers of a body in any
/// dimension: `(s, lexmin center, lexmax center)`.
pub fn asymmetry_generic<S: Scalar>(
    points: &[Vec<S>],
    facets: &[Facet<S>],
) -> Result<(S, Vec<S>, Vec<S>)> {
    let lp = asymmetry_lp(points, facets)?;
    let n = points[0].len();
    let lo: Vec<_> = (0..n).map(|j| unit_objective(n + 1, j + 1, 1)).collect();
    let hi: Vec<_> = (0..n).map(|j| unit_objective(n + 1, j + 1, -1)).collect();
    let (first, dmin) = lp_lexmin(&lp, &lo)?;
    let (_, dmax) = lp_lexmin(&lp, &hi)?;
    let s = first.value;
    let scale = s.clone() + S::one();
    let center = |d: Vec<S>| d[1..].iter().map(|v| v.clone() / scale.clone()).collect();
    Ok((s, center(dmin), center(dmax)))
}

/// Minkowski asymmetry `s(C)` and a center `c` with `C − c ⊆ s(c − C)`.
pub fn minkowski_asymmetry<S: Scalar>(c: &ConvexPolygon<S>) -> Result<AsymmetryResult<S>> {
    let (s, center, _) = asymmetry_generic(&polygon_points(c), &polygon_facets(c))?;
    let center = to_point(&center);
    let shifted = c.translate(&-center.clone());
    let touching = contacts(&shifted, &s)?;
    Ok(AsymmetryResult { s, center, touching })
}

/// Both ends of the lexicographic order on the Minkowski center set.
pub fn center_set<S: Scalar>(c: &ConvexPolygon<S>) -> Result<(Point2<S>, Point2<S>)> {
    let (_, lo, hi) = asymmetry_generic(&polygon_points(c), &polygon_facets(c))?;
    Ok((to_point(&lo), to_point(&hi)))
}

/// Points of `C ∩ bd(−sC)`, for `C ⊆ −sC`.
fn contacts<S: Scalar>(c: &ConvexPolygon<S>, s: &S) -> Result<Vec<Point2<S>>> {
    let outer = c.scale(&-s.clone())?;
    let mut pts: Vec<Point2<S>> = Vec::new();
    for (a, b) in outer.edges() {
        let u = -(b.clone() - a.clone()).perp();
        if !c.support_value(&u).eq_s(&u.dot(a)) {
            continue;
        }
        let face = c.support(&u)?.face;
        let dir = u.perp();
        let proj = |p: &Point2<S>| dir.dot(p);
        let (lo, hi) = (proj(a), proj(b));
        let (lo, hi) = if lo.cmp_s(&hi) == Ordering::Greater { (hi, lo) } else { (lo, hi) };
        let inside = |p: &Point2<S>| {
            let v = proj(p);
            v.cmp_s(&lo) != Ordering::Less && v.cmp_s(&hi) != Ordering::Greater
        };
        let mut cand: Vec<Point2<S>> = face.iter().filter(|p| inside(p)).cloned().collect();
        if face.len() == 2 {
            cand.extend([a, b].into_iter().filter(|p| {
                let (f0, f1) = (proj(&face[0]), proj(&face[1]));
                let (f0, f1) = if f0.cmp_s(&f1) == Ordering::Greater { (f1, f0) } else { (f0, f1) };
                let v = proj(p);
                v.cmp_s(&f0) != Ordering::Less && v.cmp_s(&f1) != Ordering::Greater
            }).cloned());
        }
        for p in cand {
            if !pts.iter().any(|q| q.eq_s(&p)) {
                pts.push(p);
            }
        }
    }
    Ok(pts)
}

/// `0` is a Minkowski center: `C ⊆ −s(C)·C`.
pub fn is_minkowski_centered<S: Scalar>(c: &ConvexPolygon<S>) -> Result<bool> {
    let s = minkowski_asymmetry(c)?.s;
    Ok(c.halfplanes().iter().all(|h| {
        let lhs = c.support_value(&-h.a.clone());
        lhs.cmp_s(&(s.clone() * h.rho.clone())) != Ordering::Greater
    }))
}

/// Translate `C` so that its (lexicographically smallest) Minkowski center
/// is the origin.
pub fn recenter<S: Scalar>(c: &ConvexPolygon<S>) -> Result<ConvexPolygon<S>> {
    let center = minkowski_asymmetry(c)?.center;
    Ok(c.translate(&-center))
}

/// Three contact points of `bd(C) ∩ bd(−sC)` whose hull contains 0.
pub fn touching_hull_contains_zero<S: Scalar>(
    c: &ConvexPolygon<S>,
) -> Result<[Point2<S>; 3]> {
    let asym = minkowski_asymmetry(c)?;
    if asym.s.eq_s(&S::one()) {
        return Err(Error::Symmetric);
    }
    if !is_minkowski_centered(c)? {
        return Err(Error::NotCentered);
    }
    let pts = contacts(c, &asym.s)?;
    let o = Point2::origin();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, q) = (&pts[i], &pts[j], &pts[k]);
                let signs = [orient(a, b, &o), orient(b, q, &o), orient(q, a, &o)];
                let pos = signs.iter().all(|s| *s != Ordering::Less);
                let neg = signs.iter().all(|s| *s != Ordering::Greater);
                // a collinear triple only qualifies if 0 lies on one of its segments
                let flat = orient(a, b, q) == Ordering::Equal;
                if (pos || neg) && (!flat || on_any_segment(&[a, b, q], &o)) {
                    return Ok([a.clone(), b.clone(), q.clone()]);
                }
            }
        }
    }
    Err(Error::Inconsistent(
        "no three contact points contain the origin".into(),
    ))
}

fn on_any_segment<S: Scalar>(pts: &[&Point2<S>], o: &Point2<S>) -> bool {
    pts.iter().enumerate().any(|(i, &a)| {
        pts[i + 1..].iter().any(|&b| {
            orient(a, b, o) == Ordering::Equal
                && (a.clone() - o.clone()).dot(&(b.clone() - o.clone())).cmp_s(&S::zero()) != Ordering::Greater
        })
    })
}
