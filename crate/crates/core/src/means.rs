//! The four means of two planar bodies: minimum (intersection), harmonic
//! (polar of the averaged polars), arithmetic (averaged Minkowski sum) and
//! maximum (hull of the union).

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polygon::{convex_hull, ConvexPolygon, HalfPlane, Point2};
use crate::scalar::Scalar;

/// 0 for directions with angle in (−π/2, π/2], 1 for (π/2, 3π/2].
fn half_turn<S: Scalar>(d: &Point2<S>) -> u8 {
    match d.x.sign() {
        Ordering::Greater => 0,
        Ordering::Less => 1,
        Ordering::Equal => u8::from(!d.y.is_pos()),
    }
}

/// Angular order of edge directions starting just after straight down,
/// which is the order of edges of a canonical polygon. Cross products only.
fn angle_cmp<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> Ordering {
    half_turn(a)
        .cmp(&half_turn(b))
        .then_with(|| b.cross(a).sign())
}

fn edge_vectors<S: Scalar>(p: &ConvexPolygon<S>) -> Vec<Point2<S>> {
    p.edges().map(|(a, b)| b.clone() - a.clone()).collect()
}

/// Minkowski sum by merging the two edge sequences by angle.
pub fn minkowski_sum<S: Scalar>(p: &ConvexPolygon<S>, q: &ConvexPolygon<S>) -> ConvexPolygon<S> {
    let ep = edge_vectors(p);
    let eq = edge_vectors(q);
    let mut cur = p.vertices()[0].clone() + q.vertices()[0].clone();
    let mut pts = Vec::with_capacity(ep.len() + eq.len());
    let (mut i, mut j) = (0, 0);
    while i < ep.len() || j < eq.len() {
        pts.push(cur.clone());
        let ord = if i == ep.len() {
            Ordering::Greater
        } else if j == eq.len() {
            Ordering::Less
        } else {
            angle_cmp(&ep[i], &eq[j])
        };
        match ord {
            Ordering::Less => {
                cur = cur + ep[i].clone();
                i += 1;
            }
            Ordering::Greater => {
                cur = cur + eq[j].clone();
                j += 1;
            }
            Ordering::Equal => {
                cur = cur + ep[i].clone() + eq[j].clone();
                i += 1;
                j += 1;
            }
        }
    }
    convex_hull(&pts).expect("sum of two bodies is full-dimensional")
}

fn clip<S: Scalar>(poly: &[Point2<S>], h: &HalfPlane<S>) -> Vec<Point2<S>> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let sa = h.slack(a);
        let sb = h.slack(b);
        if !sa.is_neg() {
            out.push(a.clone());
        }
        if (sa.is_pos() && sb.is_neg()) || (sa.is_neg() && sb.is_pos()) {
            let t = sa.clone() / (sa - sb);
            out.push(a.lerp(b, &t));
        }
    }
    out
}

/// Intersection by clipping `p` against every edge half-plane of `q`.
pub fn intersect<S: Scalar>(p: &ConvexPolygon<S>, q: &ConvexPolygon<S>) -> Result<ConvexPolygon<S>> {
    let mut pts = p.vertices().to_vec();
    for h in q.halfplanes() {
        pts = clip(&pts, &h);
        if pts.is_empty() {
            return Err(Error::EmptyIntersection);
        }
    }
    convex_hull(&pts).map_err(|_| Error::EmptyIntersection)
}

/// Polar body: the edge `{a·x <= ρ}` becomes the vertex `a/ρ`.
pub fn polar<S: Scalar>(p: &ConvexPolygon<S>) -> Result<ConvexPolygon<S>> {
    let pts = p
        .halfplanes()
        .into_iter()
        .map(|h| {
            if h.rho.is_pos() {
                Ok(Point2::new(h.a.x / h.rho.clone(), h.a.y / h.rho))
            } else {
                Err(Error::OriginNotInterior)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    convex_hull(&pts)
}

pub fn mean_min<S: Scalar>(k: &ConvexPolygon<S>, c: &ConvexPolygon<S>) -> Result<ConvexPolygon<S>> {
    intersect(k, c)
}

pub fn mean_max<S: Scalar>(k: &ConvexPolygon<S>, c: &ConvexPolygon<S>) -> ConvexPolygon<S> {
    let mut pts = k.vertices().to_vec();
    pts.extend_from_slice(c.vertices());
    convex_hull(&pts).expect("union of bodies is full-dimensional")
}

/// `(1−λ)K + λC` for λ ∈ [0, 1].
pub fn mean_arith_weighted<S: Scalar>(
    k: &ConvexPolygon<S>,
    c: &ConvexPolygon<S>,
    lambda: &S,
) -> Result<ConvexPolygon<S>> {
    check_weight(lambda)?;
    if lambda.is_zero_s() {
        return Ok(k.clone());
    }
    let mu = S::one() - lambda.clone();
    if mu.is_zero_s() {
        return Ok(c.clone());
    }
    Ok(minkowski_sum(&k.scale(&mu)?, &c.scale(lambda)?))
}

/// `((1−λ)K° + λC°)°` for λ ∈ [0, 1].
pub fn mean_harm_weighted<S: Scalar>(
    k: &ConvexPolygon<S>,
    c: &ConvexPolygon<S>,
    lambda: &S,
) -> Result<ConvexPolygon<S>> {
    let kp = polar(k)?;
    let cp = polar(c)?;
    polar(&mean_arith_weighted(&kp, &cp, lambda)?)
}

pub fn mean_arith<S: Scalar>(k: &ConvexPolygon<S>, c: &ConvexPolygon<S>) -> ConvexPolygon<S> {
    let sum = minkowski_sum(k, c);
    sum.scale(&S::from_ratio(1, 2)).expect("nonzero factor")
}

pub fn mean_harm<S: Scalar>(k: &ConvexPolygon<S>, c: &ConvexPolygon<S>) -> Result<ConvexPolygon<S>> {
    polar(&mean_arith(&polar(k)?, &polar(c)?))
}

fn check_weight<S: Scalar>(lambda: &S) -> Result<()> {
    if lambda.is_neg() || lambda.cmp_s(&S::one()) == Ordering::Greater {
        Err(Error::OutOfRange(format!("weight {lambda} outside [0, 1]")))
    } else {
        Ok(())
    }
}

/// The four symmetrizations of `C`, i.e. the means of `C` and `−C`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeansChain<S> {
    pub minimum: ConvexPolygon<S>,
    pub harmonic: ConvexPolygon<S>,
    pub arithmetic: ConvexPolygon<S>,
    pub maximum: ConvexPolygon<S>,
}

impl<S: Scalar> MeansChain<S> {
    pub fn as_array(&self) -> [&ConvexPolygon<S>; 4] {
        [&self.minimum, &self.harmonic, &self.arithmetic, &self.maximum]
    }

    /// Support dominance `h_min <= h_harm <= h_arith <= h_max` at every
    /// facet normal of the four bodies.
    pub fn inclusions_hold(&self) -> bool {
        let bodies = self.as_array();
        let normals: Vec<Point2<S>> = bodies.iter().flat_map(|b| b.edge_normals()).collect();
        normals.iter().all(|u| {
            bodies
                .windows(2)
                .all(|w| w[0].support_value(u).cmp_s(&w[1].support_value(u)) != Ordering::Greater)
        })
    }
}

pub fn means_chain<S: Scalar>(c: &ConvexPolygon<S>) -> Result<MeansChain<S>> {
    if !c.has_origin_in_interior() {
        return Err(Error::OriginNotInterior);
    }
    let neg = c.negate();
    Ok(MeansChain {
        minimum: mean_min(c, &neg)?,
        harmonic: mean_harm(c, &neg)?,
        arithmetic: mean_arith(c, &neg),
        maximum: mean_max(c, &neg),
    })
}
