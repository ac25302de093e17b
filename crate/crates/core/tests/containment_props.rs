mod common;

use common::*;
use convex_means::containment::{
    is_minkowski_centered, is_opt_contained, min_homothety, min_homothety_polygons, minkowski_asymmetry, polygon_facets,
    polygon_points, recenter, Facet,
};
use convex_means::{ConvexPolygon, Point2, Scalar, F64, Q5};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn asymmetry_matches_bisection_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let c = random_float_polygon(&mut rng, 3 + i % 10);
        let s = minkowski_asymmetry(&c).unwrap().s.0;
        let oracle = asymmetry_oracle(&c);
        assert!((s - oracle).abs() < 1e-9, "polygon {i}: LP {s}, oracle {oracle}");
    }
}

#[test]
fn oracle_sanity() {
    let tri = ConvexPolygon::<F64>::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap();
    assert!((asymmetry_oracle(&tri) - 2.0).abs() < 1e-9);
    let sq = ConvexPolygon::<F64>::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    assert!((asymmetry_oracle(&sq) - 1.0).abs() < 1e-9);
}

#[test]
fn exact_asymmetry_is_linearly_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let c = random_lattice_polygon(&mut rng, 6, 8);
        let l = random_int_map(&mut rng);
        let lc = c.linear(&l).unwrap();
        let a = minkowski_asymmetry(&c).unwrap();
        assert_eq!(minkowski_asymmetry(&lc).unwrap().s, a.s);
        // the predicate is invariant, centers map along
        let centered = c.translate(&-a.center.clone());
        assert!(is_minkowski_centered(&centered).unwrap());
        assert!(is_minkowski_centered(&centered.linear(&l).unwrap()).unwrap());
        let shifted = c.translate(&Point2::new(Q5::from_i64(1), Q5::from_ratio(1, 3)));
        let off = recenter(&shifted).unwrap().translate(&Point2::new(Q5::from_ratio(1, 2), Q5::zero()));
        if a.s != Q5::one() {
            assert_eq!(
                is_minkowski_centered(&off).unwrap(),
                is_minkowski_centered(&off.linear(&l).unwrap()).unwrap()
            );
        }
    }
}

fn convex_hull_contains_origin(normals: &[Point2<Q5>]) -> bool {
    // exact: 0 is a convex combination iff it lies in the hull of the points
    match normals.len() {
        0 | 1 => false,
        2 => {
            let (a, b) = (&normals[0], &normals[1]);
            a.cross(b).is_zero_s() && a.dot(b).is_neg()
        }
        _ => {
            if let Ok(h) = ConvexPolygon::from_points(normals) {
                h.contains_point(&Point2::origin()) != convex_means::Location::Outside
            } else {
                // collinear: some pair points in opposite directions
                normals.iter().any(|a| normals.iter().any(|b| a.cross(b).is_zero_s() && a.dot(b).is_neg()))
            }
        }
    }
}

#[test]
fn optimality_certificates_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = [0usize; 2];
    for _ in 0..150 {
        let k = random_lattice_polygon(&mut rng, 5, 6);
        let c = random_lattice_polygon(&mut rng, 7, 9);
        let r = min_homothety_polygons(&k, &c).unwrap();
        // place K optimally, then optionally blow the container up
        let t = Point2::new(r.t[0].clone(), r.t[1].clone());
        let inner = k.translate(&-t).scale(&r.rho.recip()).unwrap();
        let grow = if rng.random_bool(0.5) { Q5::one() } else { Q5::from_ratio(11, 10) };
        let z = c.vertex_centroid();
        let outer = c.translate(&-z.clone()).scale(&grow).unwrap().translate(&z);
        let res = is_opt_contained(&inner, &outer).unwrap();
        seen[res.optimal as usize] += 1;
        if res.optimal {
            let normals: Vec<Point2<Q5>> = res
                .touching
                .iter()
                .map(|t| Point2::new(t.normal[0].clone(), t.normal[1].clone()))
                .collect();
            assert!((2..=3).contains(&normals.len()));
            assert!(convex_hull_contains_origin(&normals));
            for t in &res.touching {
                let p = Point2::new(t.point[0].clone(), t.point[1].clone());
                assert_eq!(outer.contains_point(&p), convex_means::Location::Boundary);
            }
        } else {
            assert_eq!(res.rho.exact_cmp(&Q5::one()), std::cmp::Ordering::Less);
            let moved = outer.scale(&res.rho).unwrap().translate(&res.t);
            assert!(moved.contains_polygon(&inner));
        }
    }
    assert!(seen[0] > 20 && seen[1] > 20, "{seen:?}");
}

#[test]
fn dilatation_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let k = random_lattice_polygon(&mut rng, 6, 5);
        let c = random_lattice_polygon(&mut rng, 6, 5);
        let lam = Q5::from_ratio(rng.random_range(1..20), rng.random_range(1..20));
        let r1 = min_homothety_polygons(&k, &c).unwrap().rho;
        let r2 = min_homothety_polygons(&k, &c.scale(&lam).unwrap()).unwrap().rho;
        assert_eq!(r2, r1 / lam);
    }
}

#[test]
fn symmetric_container_placements_reach_the_origin() {
    // An optimal placement in a 0-symmetric container can slide when only
    // two antipodal normals touch; such a triangle misses 0.
    let c = ConvexPolygon::<Q5>::from_i64(&[(-2, -1), (2, -1), (2, 1), (-2, 1)]).unwrap();
    let slid = ConvexPolygon::<Q5>::from_points(&[
        Point2::new(Q5::one(), -Q5::one()),
        Point2::new(Q5::from_ratio(3, 2), Q5::one()),
        Point2::new(Q5::from_ratio(19, 10), -Q5::one()),
    ])
    .unwrap();
    assert!(is_opt_contained(&slid, &c).unwrap().optimal);
    assert_eq!(slid.contains_point(&Point2::origin()), convex_means::Location::Outside);

    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut unique_cases = 0;
    for _ in 0..300 {
        let p = random_lattice_polygon(&mut rng, 5, 6);
        let half = random_lattice_polygon(&mut rng, 4, 6);
        let pts: Vec<_> = half.vertices().iter().flat_map(|v| [v.clone(), -v.clone()]).collect();
        let c = ConvexPolygon::from_points(&pts).unwrap();
        let r = min_homothety_polygons(&p, &c).unwrap();
        let t = Point2::new(r.t[0].clone(), r.t[1].clone());
        let placed = p.translate(&-t).scale(&r.rho.recip()).unwrap();
        assert!(is_opt_contained(&placed, &c).unwrap().optimal);
        // some optimal translate always contains 0: pin t inside P
        let facets = polygon_facets(&c);
        let rows: Vec<(Vec<Q5>, Q5)> = polygon_facets(&placed).into_iter().map(|f| (f.normal, f.offset)).collect();
        let pinned = pinned_homothety(&polygon_points(&placed), &facets, &rows);
        assert_eq!(pinned, Q5::one());
        // three touching normals, no two antipodal: the placement is unique
        let res = is_opt_contained(&placed, &c).unwrap();
        let normals: Vec<Point2<Q5>> = res
            .touching
            .iter()
            .map(|t| Point2::new(t.normal[0].clone(), t.normal[1].clone()))
            .collect();
        let antipodal = normals
            .iter()
            .any(|a| normals.iter().any(|b| a.cross(b).is_zero_s() && a.dot(b).is_neg()));
        if normals.len() == 3 && !antipodal {
            unique_cases += 1;
            assert_ne!(placed.contains_point(&Point2::origin()), convex_means::Location::Outside);
        }
    }
    assert!(unique_cases >= 5, "only {unique_cases} unique placements");
}

/// `min ρ` with `K ⊆ t + ρC` and additionally `a·t <= b` for each row.
fn pinned_homothety(k: &[Vec<Q5>], facets: &[Facet<Q5>], rows: &[(Vec<Q5>, Q5)]) -> Q5 {
    use convex_means::lp::{lp_solve, LPProblem, VarKind};
    let mut lp = LPProblem::new(vec![Q5::one(), Q5::zero(), Q5::zero()], vec![VarKind::NonNegative, VarKind::Free, VarKind::Free]);
    for f in facets.iter() {
        let h = k.iter().map(|v| f.normal[0].clone() * v[0].clone() + f.normal[1].clone() * v[1].clone()).reduce(Q5::max_s).unwrap();
        lp.add_ge(vec![f.offset.clone(), f.normal[0].clone(), f.normal[1].clone()], h);
    }
    for (a, b) in rows {
        lp.add_le(vec![Q5::zero(), a[0].clone(), a[1].clone()], b.clone());
    }
    let unpinned = min_homothety(k, facets, None).unwrap().rho;
    assert_eq!(unpinned, Q5::one());
    lp_solve(&lp).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn float_asymmetry_is_linearly_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_float_polygon(&mut rng, 8);
        let l = convex_means::golden::random_linear(&mut rng);
        let a = minkowski_asymmetry(&c).unwrap();
        let b = minkowski_asymmetry(&c.linear(&l).unwrap()).unwrap();
        prop_assert!((a.s.0 - b.s.0).abs() < 1e-9);
        prop_assert!((1.0 - 1e-12..=2.0 + 1e-12).contains(&a.s.0));
        let centered = c.translate(&-a.center);
        prop_assert!(is_minkowski_centered(&centered.linear(&l).unwrap()).unwrap());
    }

    #[test]
    fn containment_certificate_holds(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_float_polygon(&mut rng, 6);
        let c = random_float_polygon(&mut rng, 6);
        let r = min_homothety_polygons(&k, &c).unwrap();
        let t = Point2::new(r.t[0], r.t[1]);
        prop_assert!(c.scale(&r.rho).unwrap().translate(&t).contains_polygon(&k));
        let w = r.normal_combination();
        prop_assert!(w[0].0.abs() < 1e-9 && w[1].0.abs() < 1e-9);
    }
}
