//! Planar convex polygons in canonical form.
//!
//! A [`ConvexPolygon`] stores its vertices counterclockwise, without collinear
//! triples, starting at the lexicographically smallest vertex (x, then y).
//! Every constructor goes through [`convex_hull`], so two polygons describing
//! the same set compare equal as plain vertex lists (exactly on [`Q5`], up to
//! tolerance via [`ConvexPolygon::same_as`] on [`F64`]).
//!
//! [`Q5`]: crate::scalar::Q5
//! [`F64`]: crate::scalar::F64

use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, F64};

#[derive(Clone, Debug, PartialEq)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(S::zero(), S::zero())
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Point2::new(S::from_i64(x), S::from_i64(y))
    }

    pub fn dot(&self, o: &Self) -> S {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone()
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, o: &Self) -> S {
        self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone()
    }

    pub fn scale(&self, k: &S) -> Self {
        Point2::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn norm2(&self) -> S {
        self.dot(self)
    }

    /// Counterclockwise quarter turn; for a CCW edge vector `(x, y)` the
    /// outer normal is `(y, −x)`, i.e. `-perp()`.
    pub fn perp(&self) -> Self {
        Point2::new(-self.y.clone(), self.x.clone())
    }

    pub fn is_zero_s(&self) -> bool {
        self.x.is_zero_s() && self.y.is_zero_s()
    }

    pub fn eq_s(&self, o: &Self) -> bool {
        self.x.eq_s(&o.x) && self.y.eq_s(&o.y)
    }

    /// Tolerant lexicographic comparison, x first.
    pub fn lex_cmp(&self, o: &Self) -> Ordering {
        self.x.cmp_s(&o.x).then_with(|| self.y.cmp_s(&o.y))
    }

    pub fn to_f64(&self) -> Point2<F64> {
        Point2::new(F64(self.x.to_f64()), F64(self.y.to_f64()))
    }

    pub fn to_array(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }

    pub fn lerp(&self, o: &Self, t: &S) -> Self {
        self.clone() + (o.clone() - self.clone()).scale(t)
    }
}

impl<S: Scalar> Add for Point2<S> {
    type Output = Point2<S>;
    fn add(self, o: Self) -> Self {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl<S: Scalar> Sub for Point2<S> {
    type Output = Point2<S>;
    fn sub(self, o: Self) -> Self {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl<S: Scalar> Neg for Point2<S> {
    type Output = Point2<S>;
    fn neg(self) -> Self {
        Point2::new(-self.x, -self.y)
    }
}

/// Sign of the turn `a → b → c`; `Greater` is a left (CCW) turn.
pub fn orient<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>) -> Ordering {
    (b.clone() - a.clone()).cross(&(c.clone() - a.clone())).sign()
}

/// Row-major 2×2 matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Mat2::diag(S::one(), S::one())
    }

    pub fn diag(a: S, d: S) -> Self {
        Mat2::new(a, S::zero(), S::zero(), d)
    }

    pub fn det(&self) -> S {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn apply(&self, p: &Point2<S>) -> Point2<S> {
        let [[a, b], [c, d]] = &self.m;
        Point2::new(
            a.clone() * p.x.clone() + b.clone() * p.y.clone(),
            c.clone() * p.x.clone() + d.clone() * p.y.clone(),
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero_s() {
            return Err(Error::SingularMap);
        }
        let [[a, b], [c, d]] = &self.m;
        Ok(Mat2::new(
            d.clone() / det.clone(),
            -b.clone() / det.clone(),
            -c.clone() / det.clone(),
            a.clone() / det,
        ))
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Mat2::new(a.clone(), c.clone(), b.clone(), d.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        let [[e, f], [g, h]] = &o.m;
        Mat2::new(
            a.clone() * e.clone() + b.clone() * g.clone(),
            a.clone() * f.clone() + b.clone() * h.clone(),
            c.clone() * e.clone() + d.clone() * g.clone(),
            c.clone() * f.clone() + d.clone() * h.clone(),
        )
    }
}

/// Closed half-plane `{x : a·x <= rho}`. The normal is never normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfPlane<S> {
    pub a: Point2<S>,
    pub rho: S,
}

impl<S: Scalar> HalfPlane<S> {
    pub fn new(a: Point2<S>, rho: S) -> Result<Self> {
        if a.is_zero_s() {
            return Err(Error::ZeroDirection);
        }
        Ok(HalfPlane { a, rho })
    }

    pub fn slack(&self, x: &Point2<S>) -> S {
        self.rho.clone() - self.a.dot(x)
    }

    pub fn contains(&self, x: &Point2<S>) -> bool {
        !self.slack(x).is_neg()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

/// Support value `max u·x` and the vertices attaining it (one vertex, or the
/// two endpoints of an edge in CCW order).
#[derive(Clone, Debug, PartialEq)]
pub struct Support<S> {
    pub value: S,
    pub face: Vec<Point2<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon<S> {
    vertices: Vec<Point2<S>>,
}

/// Andrew's monotone chain. Collinear and duplicate points are dropped; the
/// result starts at the lexicographically smallest point.
pub fn convex_hull<S: Scalar>(points: &[Point2<S>]) -> Result<ConvexPolygon<S>> {
    let mut pts: Vec<Point2<S>> = points.to_vec();
    pts.sort_by(|a, b| a.x.exact_cmp(&b.x).then_with(|| a.y.exact_cmp(&b.y)));
    pts.dedup_by(|a, b| a.eq_s(b));
    if pts.len() < 3 {
        return Err(Error::Degenerate(format!(
            "{} distinct point(s), need at least 3",
            pts.len()
        )));
    }
    let mut hull: Vec<Point2<S>> = Vec::with_capacity(2 * pts.len());
    for p in pts.iter() {
        while hull.len() >= 2 && orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p) != Ordering::Greater {
            hull.pop();
        }
        hull.push(p.clone());
    }
    let lower = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower
            && orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p) != Ordering::Greater
        {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(Error::Degenerate("points are collinear".into()));
    }
    Ok(ConvexPolygon { vertices: hull })
}

impl<S: Scalar> ConvexPolygon<S> {
    pub fn from_points(points: &[Point2<S>]) -> Result<Self> {
        convex_hull(points)
    }

    /// Build from integer coordinates; convenient for fixtures and tests.
    pub fn from_i64(points: &[(i64, i64)]) -> Result<Self> {
        let pts: Vec<_> = points.iter().map(|&(x, y)| Point2::from_i64(x, y)).collect();
        convex_hull(&pts)
    }

    pub fn vertices(&self) -> &[Point2<S>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `(v_i, v_{i+1})` in CCW order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2<S>, &Point2<S>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Edge half-planes with outer normals `(dy, −dx)` of each CCW edge.
    pub fn halfplanes(&self) -> Vec<HalfPlane<S>> {
        self.edges()
            .map(|(a, b)| {
                let d = b.clone() - a.clone();
                let normal = -d.perp();
                let rho = normal.dot(a);
                HalfPlane { a: normal, rho }
            })
            .collect()
    }

    /// Outer edge normals, one per edge.
    pub fn edge_normals(&self) -> Vec<Point2<S>> {
        self.halfplanes().into_iter().map(|h| h.a).collect()
    }

    pub fn support_value(&self, u: &Point2<S>) -> S {
        self.vertices
            .iter()
            .map(|v| u.dot(v))
            .reduce(S::max_s)
            .expect("polygon has vertices")
    }

    pub fn min_value(&self, u: &Point2<S>) -> S {
        self.vertices
            .iter()
            .map(|v| u.dot(v))
            .reduce(S::min_s)
            .expect("polygon has vertices")
    }

    pub fn support(&self, u: &Point2<S>) -> Result<Support<S>> {
        if u.is_zero_s() {
            return Err(Error::ZeroDirection);
        }
        let value = self.support_value(u);
        let n = self.vertices.len();
        let idx: Vec<usize> = (0..n).filter(|&i| u.dot(&self.vertices[i]).eq_s(&value)).collect();
        let face = match idx.as_slice() {
            [0, j] if *j == n - 1 => vec![self.vertices[n - 1].clone(), self.vertices[0].clone()],
            _ => idx.iter().map(|&i| self.vertices[i].clone()).collect(),
        };
        Ok(Support { value, face })
    }

    pub fn contains_point(&self, x: &Point2<S>) -> Location {
        let mut on_edge = false;
        for (a, b) in self.edges() {
            match orient(a, b, x) {
                Ordering::Less => return Location::Outside,
                Ordering::Equal => on_edge = true,
                Ordering::Greater => {}
            }
        }
        if on_edge {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    /// `other ⊆ self`, tested on the vertices of `other`.
    pub fn contains_polygon(&self, other: &ConvexPolygon<S>) -> bool {
        other
            .vertices
            .iter()
            .all(|v| self.contains_point(v) != Location::Outside)
    }

    pub fn has_origin_in_interior(&self) -> bool {
        self.contains_point(&Point2::origin()) == Location::Interior
    }

    /// Image under `x ↦ L x + t`.
    pub fn transform(&self, l: &Mat2<S>, t: &Point2<S>) -> Result<Self> {
        if l.det().is_zero_s() {
            return Err(Error::SingularMap);
        }
        let pts: Vec<_> = self.vertices.iter().map(|v| l.apply(v) + t.clone()).collect();
        convex_hull(&pts)
    }

    pub fn linear(&self, l: &Mat2<S>) -> Result<Self> {
        self.transform(l, &Point2::origin())
    }

    pub fn negate(&self) -> Self {
        let pts: Vec<_> = self.vertices.iter().map(|v| -v.clone()).collect();
        convex_hull(&pts).expect("negation preserves full dimension")
    }

    /// ρ-dilatation; ρ must be nonzero (negative ρ reflects through 0).
    pub fn scale(&self, rho: &S) -> Result<Self> {
        if rho.is_zero_s() {
            return Err(Error::SingularMap);
        }
        let pts: Vec<_> = self.vertices.iter().map(|v| v.scale(rho)).collect();
        convex_hull(&pts)
    }

    pub fn translate(&self, t: &Point2<S>) -> Self {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| v.clone() + t.clone()).collect(),
        }
    }

    /// Twice the signed area (positive for canonical polygons).
    pub fn area2(&self) -> S {
        self.edges()
            .map(|(a, b)| a.cross(b))
            .fold(S::zero(), |acc, x| acc + x)
    }

    pub fn vertex_centroid(&self) -> Point2<S> {
        let n = S::from_i64(self.vertices.len() as i64);
        let sum = self
            .vertices
            .iter()
            .cloned()
            .fold(Point2::origin(), |acc, v| acc + v);
        Point2::new(sum.x / n.clone(), sum.y / n)
    }

    /// Center `c` with `P = 2c − P`, if the polygon is centrally symmetric.
    pub fn is_symmetric(&self) -> Option<Point2<S>> {
        if !self.vertices.len().is_multiple_of(2) {
            return None;
        }
        let c = self.vertex_centroid();
        let t = c.scale(&S::from_i64(2));
        let mirrored = self.negate().translate(&t);
        self.same_as(&mirrored).then_some(c)
    }

    /// Tolerant equality of vertex cycles, independent of the starting vertex.
    pub fn same_as(&self, other: &ConvexPolygon<S>) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() {
            return false;
        }
        (0..n).any(|shift| {
            (0..n).all(|i| self.vertices[i].eq_s(&other.vertices[(i + shift) % n]))
        })
    }

    /// Hausdorff distance, evaluated in floating point.
    pub fn hausdorff_distance(&self, other: &ConvexPolygon<S>) -> f64 {
        let a = self.to_f64();
        let b = other.to_f64();
        let one_way = |p: &ConvexPolygon<F64>, q: &ConvexPolygon<F64>| {
            p.vertices
                .iter()
                .map(|v| q.distance_to(v))
                .fold(0.0, f64::max)
        };
        one_way(&a, &b).max(one_way(&b, &a))
    }

    pub fn to_f64(&self) -> ConvexPolygon<F64> {
        ConvexPolygon {
            vertices: self.vertices.iter().map(Point2::to_f64).collect(),
        }
    }

    /// Convert into another backend, re-canonicalizing.
    pub fn convert<T: Scalar>(&self) -> Result<ConvexPolygon<T>> {
        let pts: Vec<_> = self
            .vertices
            .iter()
            .map(|v| Point2::new(T::from_f64(v.x.to_f64()), T::from_f64(v.y.to_f64())))
            .collect();
        convex_hull(&pts)
    }
}

impl ConvexPolygon<F64> {
    /// Euclidean distance from `x` to the polygon (0 inside).
    pub fn distance_to(&self, x: &Point2<F64>) -> f64 {
        if self.contains_point(x) != Location::Outside {
            return 0.0;
        }
        self.edges()
            .map(|(a, b)| segment_distance(a.to_array(), b.to_array(), x.to_array()))
            .fold(f64::INFINITY, f64::min)
    }
}

fn segment_distance(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> f64 {
    let d = [b[0] - a[0], b[1] - a[1]];
    let w = [p[0] - a[0], p[1] - a[1]];
    let len2 = d[0] * d[0] + d[1] * d[1];
    let t = if len2 > 0.0 {
        ((w[0] * d[0] + w[1] * d[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * d[0] - p[0], a[1] + t * d[1] - p[1]];
    (q[0] * q[0] + q[1] * q[1]).sqrt()
}
