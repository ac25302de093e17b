//! The quantities of the extremal argument: `h(a)`, `γ(s, a)` and the
//! normalized configuration `p = (1,0)`, `q² = (1/s, −a)`, `q³ = (−1/s, −1)`
//! with support lines `x = ±1`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polygon::{ConvexPolygon, Location, Point2};
use crate::scalar::Scalar;

fn check_a<S: Scalar>(a: &S) -> Result<()> {
    // the domain is checked without tolerance
    if a.exact_cmp(&S::zero()) != Ordering::Greater || a.exact_cmp(&S::one()) == Ordering::Greater {
        return Err(Error::OutOfRange(format!("a = {a} outside (0, 1]")));
    }
    Ok(())
}

/// `h(a) = 2a/(a+1)² + sqrt(1 + 4a²/(a+1)⁴)`, the largest `s` with
/// `(s²−1)(a+1)² − 4as <= 0`.
pub fn h_of_a<S: Scalar>(a: &S) -> Result<S> {
    check_a(a)?;
    let t = (a.clone() + S::one()) * (a.clone() + S::one());
    let two_a = S::from_i64(2) * a.clone();
    let r = S::one() + two_a.clone() * two_a.clone() / (t.clone() * t.clone());
    let root = r.try_sqrt().ok_or(Error::NotRepresentable(S::NAME))?;
    Ok(two_a / t + root)
}

/// `γ = (s−1)(a+1)² / (4a − (s−1)(a−1)²)`.
pub fn gamma<S: Scalar>(s: &S, a: &S) -> Result<S> {
    let sm1 = s.clone() - S::one();
    let am1 = a.clone() - S::one();
    let ap1 = a.clone() + S::one();
    let den = S::from_i64(4) * a.clone() - sm1.clone() * am1.clone() * am1;
    if !den.is_pos() {
        return Err(Error::OutOfRange(format!(
            "γ undefined: denominator {den} is not positive"
        )));
    }
    Ok(sm1 * ap1.clone() * ap1 / den)
}

/// Where `point` lies relative to the triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership<S> {
    pub point: Point2<S>,
    pub triangle: [Point2<S>; 3],
    pub location: Location,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProofConfiguration<S> {
    pub a: S,
    pub s: S,
    pub gamma: S,
    /// `−γd¹ = (1−λ)(−sq²) + λ(−sq³)`
    pub lambda: S,
    pub p: Point2<S>,
    pub q1: Point2<S>,
    pub q2: Point2<S>,
    pub q3: Point2<S>,
    pub d1: Point2<S>,
    pub d2: Point2<S>,
    pub d3: Point2<S>,
}

fn membership<S: Scalar>(point: Point2<S>, triangle: [Point2<S>; 3]) -> Result<Membership<S>> {
    let location = ConvexPolygon::from_points(&triangle)?.contains_point(&point);
    Ok(Membership {
        point,
        triangle,
        location,
    })
}

impl<S: Scalar> ProofConfiguration<S> {
    /// The three triangle memberships of a valid situation:
    /// `−sq¹ ∈ conv{q², q³, d¹}`, `−sq³ ∈ conv{p, q¹, d³}`,
    /// `−sq² ∈ conv{−p, q¹, d²}`.
    pub fn memberships(&self) -> Result<[Membership<S>; 3]> {
        let ms = -self.s.clone();
        Ok([
            membership(self.q1.scale(&ms), [self.q2.clone(), self.q3.clone(), self.d1.clone()])?,
            membership(self.q3.scale(&ms), [self.p.clone(), self.q1.clone(), self.d3.clone()])?,
            membership(self.q2.scale(&ms), [-self.p.clone(), self.q1.clone(), self.d2.clone()])?,
        ])
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.memberships()?.iter().all(|m| m.location != Location::Outside))
    }

    /// `conv{−d¹/s, ±p/s, q², q³}`, the body whose negative dilate has the
    /// configuration on its boundary in the extremal case.
    pub fn body(&self) -> Result<ConvexPolygon<S>> {
        let inv = self.s.recip();
        ConvexPolygon::from_points(&[
            self.d1.scale(&-inv.clone()),
            self.p.scale(&inv),
            self.p.scale(&-inv),
            self.q2.clone(),
            self.q3.clone(),
        ])
    }
}

/// Materialize the configuration at `s = h(a)` with `q¹ = −γd¹`.
pub fn proof_configuration<S: Scalar>(a: &S) -> Result<ProofConfiguration<S>> {
    let s = h_of_a(a)?;
    let one = S::one();
    let inv_s = s.recip();
    let ap1 = a.clone() + one.clone();
    let d1 = Point2::new(
        (a.clone() - one.clone()) / ap1.clone(),
        -(S::from_i64(2) * a.clone()) / ((one.clone() - inv_s.clone()) * ap1),
    );
    let g = gamma(&s, a)?;
    let q1 = d1.scale(&-g.clone());
    let lambda = (one.clone() - g.clone() * d1.x.clone()).half();
    let p = Point2::new(one.clone(), S::zero());
    let q2 = Point2::new(inv_s.clone(), -a.clone());
    let q3 = Point2::new(-inv_s, -one.clone());
    // d², d³ on x = ∓1 with [d², d³] through q¹ parallel to [q³, q²]
    let dir = q2.clone() - q3.clone();
    let along = |x: S| {
        let t = (x - q1.x.clone()) / dir.x.clone();
        q1.clone() + dir.scale(&t)
    };
    let d2 = along(-one.clone());
    let d3 = along(one);
    Ok(ProofConfiguration {
        a: a.clone(),
        s,
        gamma: g,
        lambda,
        p,
        q1,
        q2,
        q3,
        d1,
        d2,
        d3,
    })
}
