mod common;

use common::*;
use convex_means::means::{means_chain, mean_arith, mean_harm, mean_max, mean_min, minkowski_sum, polar};
use convex_means::{convex_hull, ConvexPolygon, Location, Point2, Scalar, Q5};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pairwise_sum_oracle(p: &ConvexPolygon<Q5>, q: &ConvexPolygon<Q5>) -> ConvexPolygon<Q5> {
    let sums: Vec<_> = p
        .vertices()
        .iter()
        .flat_map(|a| q.vertices().iter().map(move |b| a.clone() + b.clone()))
        .collect();
    convex_hull(&sums).unwrap()
}

#[test]
fn edge_merge_matches_pairwise_sums_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let p = random_lattice_polygon(&mut rng, 7, 10);
        let q = random_lattice_polygon(&mut rng, 7, 10);
        assert_eq!(minkowski_sum(&p, &q), pairwise_sum_oracle(&p, &q));
    }
}

/// Lattice polygon containing 0 in its interior.
fn around_origin(rng: &mut ChaCha8Rng) -> ConvexPolygon<Q5> {
    loop {
        let p = random_lattice_polygon(rng, 7, 6);
        if p.has_origin_in_interior() {
            return p;
        }
    }
}

#[test]
fn four_means_are_nested() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..500 {
        let k = around_origin(&mut rng).to_f64();
        let c = around_origin(&mut rng).to_f64();
        let chain = [
            mean_min(&k, &c).unwrap(),
            mean_harm(&k, &c).unwrap(),
            mean_arith(&k, &c),
            mean_max(&k, &c),
        ];
        let normals: Vec<_> = chain.iter().flat_map(|b| b.edge_normals()).collect();
        for u in &normals {
            let h: Vec<f64> = chain.iter().map(|b| b.support_value(u).0).collect();
            assert!(h.windows(2).all(|w| w[0] <= w[1] + 1e-9), "{h:?}");
        }
    }
}

#[test]
fn exact_means_are_linearly_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..40 {
        let k = around_origin(&mut rng);
        let c = around_origin(&mut rng);
        let l = random_int_map(&mut rng);
        let (lk, lc) = (k.linear(&l).unwrap(), c.linear(&l).unwrap());
        assert_eq!(mean_min(&lk, &lc).unwrap(), mean_min(&k, &c).unwrap().linear(&l).unwrap());
        assert_eq!(mean_harm(&lk, &lc).unwrap(), mean_harm(&k, &c).unwrap().linear(&l).unwrap());
        assert_eq!(mean_arith(&lk, &lc), mean_arith(&k, &c).linear(&l).unwrap());
        assert_eq!(mean_max(&lk, &lc), mean_max(&k, &c).linear(&l).unwrap());
        // (L K)° = L⁻ᵀ K°
        let lt = l.inverse().unwrap().transpose();
        assert_eq!(polar(&lk).unwrap(), polar(&k).unwrap().linear(&lt).unwrap());
    }
}

#[test]
fn support_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let p = random_lattice_polygon(&mut rng, 9, 10);
    let q = random_lattice_polygon(&mut rng, 9, 10);
    let s = minkowski_sum(&p, &q);
    for i in 0..100 {
        let u = Point2::new(Q5::from_i64(i - 50), Q5::from_i64((i * 37) % 23 - 11));
        if u.x.is_zero_s() && u.y.is_zero_s() {
            continue;
        }
        assert_eq!(s.support_value(&u), p.support_value(&u) + q.support_value(&u));
    }
}

#[test]
fn symmetric_bodies_are_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..50 {
        let half = random_lattice_polygon(&mut rng, 5, 8);
        let pts: Vec<_> = half.vertices().iter().flat_map(|v| [v.clone(), -v.clone()]).collect();
        let c = ConvexPolygon::from_points(&pts).unwrap();
        let chain = means_chain(&c).unwrap();
        for b in chain.as_array() {
            assert_eq!(b, &c);
        }
    }
}

#[test]
fn bipolar() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..100 {
        let c = around_origin(&mut rng);
        assert_eq!(polar(&polar(&c).unwrap()).unwrap(), c);
        let outside = c.translate(&Point2::new(Q5::from_i64(20), Q5::zero()));
        assert_eq!(outside.contains_point(&Point2::origin()), Location::Outside);
        assert!(polar(&outside).is_err());
    }
}
