//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{asymmetry_oracle, random_float_polygon, random_lattice_polygon};
use convex_means::containment::{min_homothety_polygons, minkowski_asymmetry};
use convex_means::golden::{
    condition_iii, equivalence_report, gamma, golden_house, h_of_a, hexagon_family, random_sample, regular_ngon,
    threshold_search, SearchConfig,
};
use convex_means::matrix::{bm_determinant_check, bohnenblust_k_check, eigenvalues, harm_arith_matrix_gap, SPDMatrix};
use convex_means::means::{means_chain, minkowski_sum};
use convex_means::poly3d::{canonical, chain_optimality_3d, Fixture};
use convex_means::{convex_hull, ConvexPolygon, Scalar, F64, Q5};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: String, bad: String) -> Outcome {
    if cond {
        Ok(ok)
    } else {
        Err(bad)
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

const SAMPLE_SEED: u64 = 1234;
const SAMPLE_SIZE: usize = 1000;

fn ac1() -> Outcome {
    let start = Instant::now();
    let exact = minkowski_asymmetry(&golden_house::<Q5>()).map_err(err)?;
    let float = minkowski_asymmetry(&golden_house::<F64>()).map_err(err)?;
    let elapsed = start.elapsed();
    let text = exact.s.to_string();
    let dev = (float.s.0 - F64::phi().0).abs();
    check(
        text == "1/2+1/2*r5" && exact.s == Q5::phi() && dev < 1e-12 && elapsed < Duration::from_secs(1),
        format!("s(GH) = {text} exactly, float deviation {dev:.1e}, {elapsed:.2?}"),
        format!("s(GH) = {text}, float deviation {dev:.1e}, {elapsed:.2?}"),
    )
}

fn ac2() -> Outcome {
    // affine image of the equilateral triangle with centroid 0
    let t = ConvexPolygon::<Q5>::from_i64(&[(1, 0), (0, 1), (-1, -1)]).map_err(err)?;
    let chain = means_chain(&t).map_err(err)?;
    let ha = min_homothety_polygons(&chain.harmonic, &chain.arithmetic).map_err(err)?.rho;
    let mm = min_homothety_polygons(&chain.minimum, &chain.maximum).map_err(err)?.rho;
    check(
        ha == Q5::from_ratio(8, 9) && mm == Q5::from_ratio(2, 3),
        format!("harmonic in arithmetic ρ = {ha}, minimum in maximum ρ = {mm}"),
        format!("got ρ = {ha} and {mm}, expected 8/9 and 2/3"),
    )
}

fn ac3() -> Outcome {
    let p = regular_ngon(5).map_err(err)?;
    let s = minkowski_asymmetry(&p).map_err(err)?.s.0;
    let expected = 2.0 / F64::phi().0;
    let w = condition_iii(&p).map_err(err)?;
    let r = equivalence_report(&p).map_err(err)?;
    check(
        (s - expected).abs() < 1e-9 && w.is_none() && !r.cond_i && !r.cond_ii && !r.cond_iii,
        format!("s = {s:.12}, no support witness, report all false"),
        format!("s = {s}, witness {:?}, report {:?}", w.is_some(), (r.cond_i, r.cond_ii, r.cond_iii)),
    )
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let sample = random_sample(SAMPLE_SEED, SAMPLE_SIZE, 5..=12).map_err(err)?;
    let mut bad = Vec::new();
    let mut holds = 0;
    for (i, (_, c)) in sample.iter().enumerate() {
        let r = equivalence_report(c).map_err(err)?;
        holds += r.cond_iii as usize;
        if !r.consistent() {
            bad.push(i);
        }
    }
    let elapsed = start.elapsed();
    check(
        bad.is_empty() && elapsed < Duration::from_secs(60),
        format!("{SAMPLE_SIZE} polygons consistent ({holds} satisfy all three), {elapsed:.2?}"),
        format!("inconsistent samples {bad:?}, {elapsed:.2?}"),
    )
}

fn ac5() -> Outcome {
    let phi = F64::phi().0;
    let cfg = SearchConfig {
        seed: SAMPLE_SEED,
        iterations: SAMPLE_SIZE,
        vertex_range: 5..=12,
        filter: true,
        hill_climbs: 100,
    };
    let r = threshold_search(&cfg).map_err(err)?;
    let hill = r.hill_max.unwrap_or(f64::NAN);
    let all_max = r.max_s.max(hill);
    check(
        all_max <= phi + 1e-7 && hill >= phi - 1e-4,
        format!(
            "{} sampled with (iii), max s = {:.9}; hill-climb max = {hill:.9} (minus φ: {:+.1e})",
            r.accepted,
            r.max_s,
            hill - phi
        ),
        format!("sample max {}, hill-climb max {hill}", r.max_s),
    )
}

fn ac6() -> Outcome {
    let phi = F64::phi().0;
    let top = phi * phi;
    let grid: Vec<f64> = (0..50).map(|k| if k == 49 { top } else { 1.0 + (top - 1.0) * k as f64 / 49.0 }).collect();
    let mut s = Vec::new();
    let mut witnesses = true;
    for t in &grid {
        let h = hexagon_family(&F64(*t)).map_err(err)?;
        s.push(minkowski_asymmetry(&h).map_err(err)?.s.0);
        witnesses &= condition_iii(&h).map_err(err)?.is_some();
    }
    let monotone = s.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    check(
        monotone && witnesses && (s[0] - phi).abs() < 1e-9 && (s[49] - 1.0).abs() < 1e-9,
        format!("s from {:.9} down to {:.9} over 50 values of τ, every body satisfies (iii)", s[0], s[49]),
        format!("monotone {monotone}, witnesses {witnesses}, ends {} and {}", s[0], s[49]),
    )
}

fn ac7() -> Outcome {
    let h1 = h_of_a(&Q5::one()).map_err(err)?;
    let vals: Vec<f64> = (1..=1000).map(|i| h_of_a(&F64(i as f64 / 1000.0)).map(|h| h.0)).collect::<Result<_, _>>().map_err(err)?;
    let increasing = vals.windows(2).all(|w| w[0] < w[1]);
    let g = gamma(&Q5::phi(), &Q5::one()).map_err(err)?;
    let mut worst: f64 = 0.0;
    for a in [0.25, 0.5, 1.0] {
        let s = h_of_a(&F64(a)).map_err(err)?;
        let g = gamma(&s, &F64(a)).map_err(err)?;
        worst = worst.max(((s * g).0 - 1.0).abs());
    }
    check(
        h1 == Q5::phi() && increasing && g == Q5::phi() - Q5::one() && worst < 1e-12,
        format!("h(1) = {h1}, h increasing, γ(φ,1) = {g}, |sγ − 1| <= {worst:.1e}"),
        format!("h(1) = {h1}, increasing {increasing}, γ(φ,1) = {g}, |sγ − 1| = {worst:.1e}"),
    )
}

fn ac8() -> Outcome {
    let links = chain_optimality_3d::<Q5>().map_err(err)?;
    let pairs: Vec<_> = links.iter().filter(|l| l.outer_scale == 1).collect();
    let all_one = pairs.len() == 4 && pairs.iter().all(|l| l.result.rho == Q5::one());
    let s = canonical::<Q5>(Fixture::Simplex).asymmetry().map_err(err)?;
    check(
        all_one && s == Q5::from_i64(3),
        format!("ρ = 1 for all four containments, simplex asymmetry {s}"),
        format!(
            "ρ values {:?}, simplex asymmetry {s}",
            pairs.iter().map(|l| l.result.rho.to_string()).collect::<Vec<_>>()
        ),
    )
}

fn ac9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut min_gap = f64::INFINITY;
    let mut min_strict = f64::INFINITY;
    let mut worst_bm: f64 = f64::NEG_INFINITY;
    let mut worst_k: f64 = f64::NEG_INFINITY;
    for i in 0..500 {
        let n = [2, 3, 5][i % 3];
        let a = SPDMatrix::random(&mut rng, n);
        let b = SPDMatrix::random(&mut rng, n);
        let distinct = (a.matrix() - b.matrix()).norm() > 1e-6;
        for j in 0..=10 {
            let l = j as f64 / 10.0;
            let e = *eigenvalues(&harm_arith_matrix_gap(&a, &b, l).map_err(err)?).last().unwrap();
            min_gap = min_gap.min(e);
            if distinct && j > 0 && j < 10 {
                min_strict = min_strict.min(e);
            }
            let d = bm_determinant_check(&a, &b, l).map_err(err)?;
            worst_bm = worst_bm.max(d.rhs - d.lhs).max(d.rhs - d.det_of_mean);
            for k in 1..=n {
                let (lhs, rhs) = bohnenblust_k_check(&a, &b, l, k).map_err(err)?;
                worst_k = worst_k.max(lhs - rhs);
            }
        }
    }
    check(
        min_gap >= -1e-10 && min_strict > 1e-12 && worst_bm <= 1e-10 && worst_k <= 1e-10,
        format!(
            "min gap eigenvalue {min_gap:.1e} (interior λ: {min_strict:.1e}), worst violations {worst_bm:.1e} and {worst_k:.1e}"
        ),
        format!("min gap {min_gap:e}, strict {min_strict:e}, determinant {worst_bm:e}, eigenproduct {worst_k:e}"),
    )
}

fn ac10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let c = random_float_polygon(&mut rng, 3 + i % 10);
        let s = minkowski_asymmetry(&c).map_err(err)?.s.0;
        worst = worst.max((s - asymmetry_oracle(&c)).abs());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut mismatches = 0;
    for _ in 0..200 {
        let p = random_lattice_polygon(&mut rng, 7, 10);
        let q = random_lattice_polygon(&mut rng, 7, 10);
        let sums: Vec<_> = p
            .vertices()
            .iter()
            .flat_map(|a| q.vertices().iter().map(move |b| a.clone() + b.clone()))
            .collect();
        if minkowski_sum(&p, &q) != convex_hull(&sums).map_err(err)? {
            mismatches += 1;
        }
    }
    check(
        worst < 1e-9 && mismatches == 0,
        format!("asymmetry within {worst:.1e} of the bisection oracle, 200 exact sums equal the pairwise hull"),
        format!("asymmetry deviation {worst:e}, {mismatches} sum mismatches"),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden house asymmetry", ac1),
        ("triangle factors", ac2),
        ("regular pentagon", ac3),
        ("equivalence of the three conditions", ac4),
        ("asymmetry threshold", ac5),
        ("hexagon family", ac6),
        ("threshold formulas", ac7),
        ("3D chain", ac8),
        ("matrix inequalities", ac9),
        ("oracle agreement", ac10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("[PASS] AC-{} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
