//! Independent oracles shared by the integration tests. None of them call
//! the LP solver.
#![allow(dead_code)]

use convex_means::{ConvexPolygon, Point2, Scalar, F64, Q5};
use rand::Rng;

pub fn p(x: f64, y: f64) -> Point2<F64> {
    Point2::new(F64(x), F64(y))
}

/// `(normal, offset)` pairs of the edges, unit normals.
fn unit_halfplanes(c: &ConvexPolygon<F64>) -> Vec<([f64; 2], f64)> {
    c.halfplanes()
        .iter()
        .map(|h| {
            let (a, b) = (h.a.x.0, h.a.y.0);
            let n = a.hypot(b);
            ([a / n, b / n], h.rho.0 / n)
        })
        .collect()
}

/// Is `{x : a·x <= b for all rows}` nonempty? Brute force over all pairwise
/// line intersections.
fn feasible_2d(rows: &[([f64; 2], f64)], tol: f64) -> bool {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a, b) = (rows[i].0, rows[j].0);
            let det = a[0] * b[1] - a[1] * b[0];
            if det.abs() < 1e-14 {
                continue;
            }
            let x = (rows[i].1 * b[1] - a[1] * rows[j].1) / det;
            let y = (a[0] * rows[j].1 - rows[i].1 * b[0]) / det;
            if rows.iter().all(|(n, r)| n[0] * x + n[1] * y <= r + tol) {
                return true;
            }
        }
    }
    false
}

/// Minkowski asymmetry by bisection on `ρ`: `C − c ⊆ ρ(c − C)` is the
/// system `(1+ρ) a·c <= ρb + min_v a·v` over the facets `a·x <= b`.
pub fn asymmetry_oracle(c: &ConvexPolygon<F64>) -> f64 {
    let hs = unit_halfplanes(c);
    let verts: Vec<[f64; 2]> = c.vertices().iter().map(Point2::to_array).collect();
    let rows_at = |rho: f64| -> Vec<([f64; 2], f64)> {
        hs.iter()
            .map(|(a, b)| {
                let min = verts.iter().map(|v| a[0] * v[0] + a[1] * v[1]).fold(f64::INFINITY, f64::min);
                ([a[0] * (1.0 + rho), a[1] * (1.0 + rho)], rho * b + min)
            })
            .collect()
    };
    let (mut lo, mut hi) = (1.0 - 1e-9, 2.0 + 1e-9);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if feasible_2d(&rows_at(mid), 1e-13) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Cone `{αn1 + βn2 : α, β >= 0}` with `n1 → n2` counterclockwise,
/// opening angle below π.
#[derive(Clone, Copy, Debug)]
struct Cone([f64; 2], [f64; 2]);

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

impl Cone {
    fn contains(&self, u: [f64; 2], tol: f64) -> bool {
        let dot = |a: [f64; 2], b: [f64; 2]| a[0] * b[0] + a[1] * b[1];
        cross(self.0, u) >= -tol && cross(u, self.1) >= -tol && (dot(self.0, u) > 0.0 || dot(self.1, u) > 0.0)
    }

    fn meets(&self, other: &Cone, tol: f64) -> bool {
        self.contains(other.0, tol) || self.contains(other.1, tol) || other.contains(self.0, tol) || other.contains(self.1, tol)
    }

    fn neg(&self) -> Cone {
        Cone([-self.0[0], -self.0[1]], [-self.1[0], -self.1[1]])
    }
}

/// Normal cone of `c` at the boundary point `x`.
fn normal_cone(c: &ConvexPolygon<F64>, x: [f64; 2], tol: f64) -> Option<Cone> {
    let hs = unit_halfplanes(c);
    let tight: Vec<usize> = (0..hs.len())
        .filter(|&i| (hs[i].0[0] * x[0] + hs[i].0[1] * x[1] - hs[i].1).abs() <= tol)
        .collect();
    match tight.as_slice() {
        [i] => Some(Cone(hs[*i].0, hs[*i].0)),
        // edge i ends at vertex i+1, where edge i+1 starts
        [i, j] if *j == i + 1 => Some(Cone(hs[*i].0, hs[*j].0)),
        [i, j] if *i == 0 && *j == hs.len() - 1 => Some(Cone(hs[*j].0, hs[*i].0)),
        _ => None,
    }
}

/// Points of `bd C ∩ bd(−C)`: proper edge crossings and the endpoints of
/// collinear overlaps.
fn boundary_intersections(c: &ConvexPolygon<F64>, tol: f64) -> Vec<[f64; 2]> {
    let a: Vec<[f64; 2]> = c.vertices().iter().map(Point2::to_array).collect();
    let b: Vec<[f64; 2]> = a.iter().map(|v| [-v[0], -v[1]]).collect();
    let on_bd = |poly: &[[f64; 2]], x: [f64; 2]| {
        (0..poly.len()).any(|i| {
            let (s, e) = (poly[i], poly[(i + 1) % poly.len()]);
            let d = [e[0] - s[0], e[1] - s[1]];
            let len = d[0].hypot(d[1]);
            let w = [x[0] - s[0], x[1] - s[1]];
            let t = (w[0] * d[0] + w[1] * d[1]) / (len * len);
            cross(d, w).abs() / len <= tol && (-tol..=1.0 + tol).contains(&t)
        })
    };
    let mut out = Vec::new();
    for &v in a.iter().chain(&b) {
        if on_bd(&a, v) && on_bd(&b, v) {
            out.push(v);
        }
    }
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            let (p0, p1) = (a[i], a[(i + 1) % n]);
            let (q0, q1) = (b[j], b[(j + 1) % n]);
            let r = [p1[0] - p0[0], p1[1] - p0[1]];
            let s = [q1[0] - q0[0], q1[1] - q0[1]];
            let den = cross(r, s);
            if den.abs() < 1e-14 {
                continue;
            }
            let qp = [q0[0] - p0[0], q0[1] - p0[1]];
            let t = cross(qp, s) / den;
            let u = cross(qp, r) / den;
            if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
                out.push([p0[0] + t * r[0], p0[1] + t * r[1]]);
            }
        }
    }
    out
}

/// Condition (iii) by a route independent of the edge-normal enumeration:
/// some `p ∈ bd C ∩ bd(−C)` has `N_C(p) ∩ −N_C(−p) ≠ {0}`.
pub fn cond_iii_oracle(c: &ConvexPolygon<F64>) -> bool {
    let tol = 1e-9;
    boundary_intersections(c, tol).into_iter().any(|x| {
        let (Some(np), Some(nm)) = (normal_cone(c, x, tol), normal_cone(c, [-x[0], -x[1]], tol)) else {
            return false;
        };
        np.meets(&nm.neg(), 1e-9)
    })
}

/// Random lattice polygon with coordinates in `[−r, r]²`.
pub fn random_lattice_polygon<R: Rng>(rng: &mut R, n: usize, r: i64) -> ConvexPolygon<Q5> {
    loop {
        let pts: Vec<(i64, i64)> = (0..n).map(|_| (rng.random_range(-r..=r), rng.random_range(-r..=r))).collect();
        if let Ok(p) = ConvexPolygon::<Q5>::from_i64(&pts) {
            return p;
        }
    }
}

/// Random float polygon with `>= 3` vertices from points on an annulus.
pub fn random_float_polygon<R: Rng>(rng: &mut R, n: usize) -> ConvexPolygon<F64> {
    loop {
        let pts: Vec<Point2<F64>> = (0..n)
            .map(|_| {
                let r = rng.random_range(0.5f64..1.0);
                let t = rng.random_range(0.0..std::f64::consts::TAU);
                p(r * t.cos() + 0.3, r * t.sin() - 0.2)
            })
            .collect();
        if let Ok(p) = ConvexPolygon::from_points(&pts) {
            return p;
        }
    }
}

/// Integer matrix with nonzero determinant.
pub fn random_int_map<R: Rng>(rng: &mut R) -> convex_means::Mat2<Q5> {
    loop {
        let e: Vec<i64> = (0..4).map(|_| rng.random_range(-4..=4)).collect();
        if e[0] * e[3] - e[1] * e[2] != 0 {
            return convex_means::Mat2::new(Q5::from_i64(e[0]), Q5::from_i64(e[1]), Q5::from_i64(e[2]), Q5::from_i64(e[3]));
        }
    }
}

pub fn phi() -> f64 {
    F64::phi().0
}
