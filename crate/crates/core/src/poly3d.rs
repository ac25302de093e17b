//! The regular simplex `T = conv{(1,1,1), (1,−1,−1), (−1,1,−1), (−1,−1,1)}`
//! and its four means with `−T`, as hand-derived double descriptions.
//!
//! `T° = −T` for this `T`, so the minimum is the cross polytope, the
//! arithmetic mean `(T − T)/2` the cuboctahedron, the harmonic mean its
//! polar (a rhombic dodecahedron) and the maximum the cube.

use std::fmt;
use std::str::FromStr;

use crate::containment::{asymmetry_generic, min_homothety, ContainmentResult, Facet};
use crate::error::{Error, Result};
use crate::lp::{dot, lp_solve, LPProblem, VarKind};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    Simplex,
    NegSimplex,
    CrossPolytope,
    RhombicDodecahedron,
    Cuboctahedron,
    Cube,
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::Simplex,
        Fixture::NegSimplex,
        Fixture::CrossPolytope,
        Fixture::RhombicDodecahedron,
        Fixture::Cuboctahedron,
        Fixture::Cube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Simplex => "simplex",
            Fixture::NegSimplex => "neg_simplex",
            Fixture::CrossPolytope => "cross_polytope",
            Fixture::RhombicDodecahedron => "rhombic_dodecahedron",
            Fixture::Cuboctahedron => "cuboctahedron",
            Fixture::Cube => "cube",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown fixture `{s}`")))
    }
}

/// A 3D polytope by vertices and facets `normal·x <= offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeVH<S> {
    pub vertices: Vec<Vec<S>>,
    pub facets: Vec<Facet<S>>,
}

fn v<S: Scalar>(x: i64, y: i64, z: i64) -> Vec<S> {
    vec![S::from_i64(x), S::from_i64(y), S::from_i64(z)]
}

const SIMPLEX: [[i64; 3]; 4] = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]];

fn signs() -> impl Iterator<Item = [i64; 3]> {
    (0..8).map(|m| [1 - 2 * (m & 1), 1 - (m & 2), 1 - ((m & 4) >> 1)])
}

fn units() -> impl Iterator<Item = [i64; 3]> {
    (0..3).flat_map(|i| {
        [1, -1].map(|s| {
            let mut e = [0; 3];
            e[i] = s;
            e
        })
    })
}

/// `(±1, ±1, 0)` and permutations.
fn pairs() -> impl Iterator<Item = [i64; 3]> {
    [(0, 1), (0, 2), (1, 2)].into_iter().flat_map(|(i, j)| {
        [(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(a, b)| {
            let mut e = [0; 3];
            e[i] = a;
            e[j] = b;
            e
        })
    })
}

fn facet<S: Scalar>(n: [i64; 3], offset: S) -> Facet<S> {
    Facet::new(v(n[0], n[1], n[2]), offset)
}

fn vert<S: Scalar>(p: [i64; 3]) -> Vec<S> {
    v(p[0], p[1], p[2])
}

/// The fixture with exact coordinates.
pub fn canonical<S: Scalar>(which: Fixture) -> PolytopeVH<S> {
    let one = S::one;
    let (vertices, facets): (Vec<Vec<S>>, Vec<Facet<S>>) = match which {
        // the facet opposite `w` is `−w·x <= 1`
        Fixture::Simplex => (
            SIMPLEX.iter().map(|&p| vert(p)).collect(),
            SIMPLEX.iter().map(|&[a, b, c]| facet([-a, -b, -c], one())).collect(),
        ),
        Fixture::NegSimplex => (
            SIMPLEX.iter().map(|&[a, b, c]| vert([-a, -b, -c])).collect(),
            SIMPLEX.iter().map(|&p| facet(p, one())).collect(),
        ),
        Fixture::CrossPolytope => (units().map(vert).collect(), signs().map(|n| facet(n, one())).collect()),
        Fixture::RhombicDodecahedron => {
            let half = S::one().half();
            let mut vs: Vec<Vec<S>> = units().map(vert).collect();
            vs.extend(signs().map(|p| p.iter().map(|&c| S::from_i64(c) * half.clone()).collect()));
            (vs, pairs().map(|n| facet(n, one())).collect())
        }
        Fixture::Cuboctahedron => {
            let mut fs: Vec<Facet<S>> = units().map(|n| facet(n, one())).collect();
            fs.extend(signs().map(|n| facet(n, S::from_i64(2))));
            (pairs().map(vert).collect(), fs)
        }
        Fixture::Cube => (signs().map(vert).collect(), units().map(|n| facet(n, one())).collect()),
    };
    PolytopeVH { vertices, facets }
}

pub fn canonical_by_name<S: Scalar>(name: &str) -> Result<PolytopeVH<S>> {
    Ok(canonical(name.parse()?))
}

impl<S: Scalar> PolytopeVH<S> {
    /// Every vertex satisfies every facet and is tight on at least three;
    /// every facet is tight at at least three vertices.
    pub fn is_consistent(&self) -> bool {
        let tight = |f: &Facet<S>, x: &[S]| f.slack(x).is_zero_s();
        self.vertices
            .iter()
            .all(|x| self.facets.iter().all(|f| !f.slack(x).is_neg()))
            && self
                .vertices
                .iter()
                .all(|x| self.facets.iter().filter(|f| tight(f, x)).count() >= 3)
            && self
                .facets
                .iter()
                .all(|f| self.vertices.iter().filter(|x| tight(f, x)).count() >= 3)
    }

    pub fn is_symmetric(&self) -> bool {
        self.vertices.iter().all(|x| {
            let neg: Vec<S> = x.iter().map(|c| -c.clone()).collect();
            self.vertices.iter().any(|y| y.iter().zip(&neg).all(|(a, b)| a.eq_s(b)))
        })
    }

    /// `max u·x` over the vertices.
    pub fn support_vertices(&self, u: &[S]) -> S {
        self.vertices
            .iter()
            .map(|x| dot(u, x))
            .reduce(S::max_s)
            .expect("fixtures have vertices")
    }

    /// `max u·x` subject to the facet inequalities.
    pub fn support_facets(&self, u: &[S]) -> Result<S> {
        let neg: Vec<S> = u.iter().map(|c| -c.clone()).collect();
        let mut lp = LPProblem::new(neg, vec![VarKind::Free; u.len()]);
        for f in &self.facets {
            lp.add_le(f.normal.clone(), f.offset.clone());
        }
        Ok(-lp_solve(&lp)?.value)
    }

    pub fn scale(&self, f: &S) -> Self {
        PolytopeVH {
            vertices: self
                .vertices
                .iter()
                .map(|x| x.iter().map(|c| c.clone() * f.clone()).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|g| Facet::new(g.normal.clone(), g.offset.clone() * f.clone()))
                .collect(),
        }
    }

    /// Smallest `ρ`, `t` with `self ⊆ t + ρ·other`.
    pub fn homothety_into(&self, other: &Self) -> Result<ContainmentResult<S>> {
        min_homothety(&self.vertices, &other.facets, None)
    }

    pub fn asymmetry(&self) -> Result<S> {
        Ok(asymmetry_generic(&self.vertices, &self.facets)?.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainLink<S> {
    pub inner: Fixture,
    pub outer: Fixture,
    /// factor applied to the outer fixture
    pub outer_scale: i64,
    pub result: ContainmentResult<S>,
}

impl<S: Scalar> ChainLink<S> {
    pub fn label(&self) -> String {
        if self.outer_scale == 1 {
            format!("{} in {}", self.inner, self.outer)
        } else {
            format!("{} in {}*{}", self.inner, self.outer_scale, self.outer)
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.result.rho.eq_s(&S::one())
    }
}

/// `ρ` for cross ⊂ rhombic dodecahedron ⊂ cuboctahedron ⊂ cube, for the
/// skip pair cross ⊂ cube, and for `T ⊂ 3·(−T)`.
pub fn chain_optimality_3d<S: Scalar>() -> Result<Vec<ChainLink<S>>> {
    use Fixture::*;
    [
        (CrossPolytope, RhombicDodecahedron, 1),
        (RhombicDodecahedron, Cuboctahedron, 1),
        (Cuboctahedron, Cube, 1),
        (CrossPolytope, Cube, 1),
        (Simplex, NegSimplex, 3),
    ]
    .into_iter()
    .map(|(inner, outer, k)| {
        let result = canonical::<S>(inner).homothety_into(&canonical::<S>(outer).scale(&S::from_i64(k)))?;
        Ok(ChainLink {
            inner,
            outer,
            outer_scale: k,
            result,
        })
    })
    .collect()
}
