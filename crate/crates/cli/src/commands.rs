use convex_means::containment::{is_opt_contained, minkowski_asymmetry};
use convex_means::golden::{equivalence_report, Witness, HARMONIC_TOL};
use convex_means::json::{point_to_json, polygon_to_json, JsonScalar};
use convex_means::matrix::{bm_determinant_check, bohnenblust_k_check, eigenvalues, harm_arith_matrix_gap, SPDMatrix};
use convex_means::means::means_chain;
use convex_means::poly3d::chain_optimality_3d;
use convex_means::{ConvexPolygon, Error, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn optimal<S: Scalar>(k: &ConvexPolygon<S>, c: &ConvexPolygon<S>, tol: Option<f64>) -> Result<bool, Error> {
    let r = is_opt_contained(k, c)?;
    Ok(r.optimal && tol.is_none_or(|t| (S::one() - r.rho).to_f64().abs() <= t))
}

pub fn means<S: JsonScalar>(c: &ConvexPolygon<S>) -> Result<Value, Error> {
    let ch = means_chain(c)?;
    // harmonic in arithmetic is decided as in the equivalence report
    Ok(json!({
        "body": polygon_to_json(c),
        "minimum": polygon_to_json(&ch.minimum),
        "harmonic": polygon_to_json(&ch.harmonic),
        "arithmetic": polygon_to_json(&ch.arithmetic),
        "maximum": polygon_to_json(&ch.maximum),
        // the two containments of the equivalence theorem
        "optimal": {
            "minimum_in_maximum": optimal(&ch.minimum, &ch.maximum, None)?,
            "harmonic_in_arithmetic": optimal(&ch.harmonic, &ch.arithmetic, Some(HARMONIC_TOL))?,
        },
        "links": {
            "minimum_in_harmonic": optimal(&ch.minimum, &ch.harmonic, None)?,
            "arithmetic_in_maximum": optimal(&ch.arithmetic, &ch.maximum, None)?,
        },
    }))
}

pub fn asymmetry<S: JsonScalar>(c: &ConvexPolygon<S>) -> Result<Value, Error> {
    let a = minkowski_asymmetry(c)?;
    Ok(json!({
        "s": a.s.to_json(),
        "s_f64": a.s.to_f64(),
        "center": point_to_json(&a.center),
        "touching": a.touching.iter().map(point_to_json).collect::<Vec<_>>(),
    }))
}

fn witness_json<S: JsonScalar>(w: &Witness<S>) -> Value {
    json!({ "p": point_to_json(&w.p), "a": point_to_json(&w.a), "rho": w.rho.to_json() })
}

pub fn check<S: JsonScalar>(c: &ConvexPolygon<S>) -> Result<Value, Error> {
    let r = equivalence_report(c)?;
    Ok(json!({
        "cond_i": r.cond_i,
        "cond_ii": r.cond_ii,
        "cond_iii": r.cond_iii,
        "consistent": r.consistent(),
        "witness": r.witness.as_ref().map(witness_json),
    }))
}

const TOL: f64 = 1e-10;

/// The matrix mean inequalities on `trials` random pairs of `n × n` SPD
/// matrices, at λ = 0, 0.1, ..., 1.
pub fn matrix(n: usize, seed: u64, trials: usize) -> Result<Value, Error> {
    if n == 0 {
        return Err(Error::OutOfRange("matrix dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_gap = f64::INFINITY;
    let mut worst_det = f64::NEG_INFINITY;
    let mut worst_k = f64::NEG_INFINITY;
    for _ in 0..trials {
        let a = SPDMatrix::random(&mut rng, n);
        let b = SPDMatrix::random(&mut rng, n);
        for j in 0..=10 {
            let l = j as f64 / 10.0;
            let gap = harm_arith_matrix_gap(&a, &b, l)?;
            min_gap = min_gap.min(*eigenvalues(&gap).last().expect("n > 0"));
            let d = bm_determinant_check(&a, &b, l)?;
            worst_det = worst_det.max(d.rhs - d.lhs).max(d.rhs - d.det_of_mean);
            for k in 1..=n {
                let (lhs, rhs) = bohnenblust_k_check(&a, &b, l, k)?;
                worst_k = worst_k.max(lhs - rhs);
            }
        }
    }
    let psd = min_gap >= -TOL;
    let det = worst_det <= TOL;
    let eig = worst_k <= TOL;
    Ok(json!({
        "n": n,
        "seed": seed,
        "trials": trials,
        "tolerance": TOL,
        "harmonic_below_arithmetic": { "pass": psd, "min_eigenvalue": min_gap },
        "determinant": { "pass": det, "worst_violation": worst_det },
        "eigenvalue_products": { "pass": eig, "worst_violation": worst_k },
        "pass": psd && det && eig,
    }))
}

/// One line per containment of the 3D chain.
pub fn three_d<S: Scalar>() -> Result<Vec<String>, Error> {
    Ok(chain_optimality_3d::<S>()?
        .iter()
        .map(|l| {
            format!(
                "{}: rho = {}{}",
                l.label(),
                l.result.rho,
                if l.is_optimal() { " (optimal)" } else { "" }
            )
        })
        .collect())
}
