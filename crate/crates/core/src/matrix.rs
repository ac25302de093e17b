//! Matrix counterparts of the means: the harmonic–arithmetic inequality for
//! positive definite matrices, the determinantal Brunn–Minkowski inequality
//! and its `k`-eigenproduct refinement.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::means::{mean_arith_weighted, mean_harm_weighted};
use crate::polygon::{ConvexPolygon, Point2};
use crate::scalar::F64;

/// Minimum eigenvalue accepted as positive definite.
pub const SPD_EPS: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct SPDMatrix {
    m: DMatrix<f64>,
    /// eigenvalues, descending
    eig: Vec<f64>,
}

fn check_lambda(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("λ = {lambda} outside [0, 1]")))
    }
}

/// Eigenvalues of a symmetric matrix in descending order.
pub fn eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut e: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

impl SPDMatrix {
    /// Validates symmetry (to 1e-12 relative) and the eigenvalue threshold.
    /// The stored matrix is the exact symmetric part.
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::NotPositiveDefinite);
        }
        let scale = m.amax().max(1.0);
        if (&m - m.transpose()).amax() > 1e-12 * scale {
            return Err(Error::NotPositiveDefinite);
        }
        let m = (&m + m.transpose()) * 0.5;
        let eig = eigenvalues(&m);
        if eig.iter().any(|e| !e.is_finite()) || *eig.last().unwrap() <= SPD_EPS {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(SPDMatrix { m, eig })
    }

    pub fn from_row_slice(n: usize, data: &[f64]) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::OutOfRange(format!("{} entries for a {n}×{n} matrix", data.len())));
        }
        Self::new(DMatrix::from_row_slice(n, n, data))
    }

    pub fn diag(d: &[f64]) -> Result<Self> {
        Self::new(DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(d)))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(DMatrix::identity(n, n)).expect("identity is positive definite")
    }

    /// `GGᵀ/n + I/10` with standard normal `G`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        let g = DMatrix::<f64>::from_fn(n, n, |_, _| rng.sample(StandardNormal));
        let m = &g * g.transpose() / n as f64 + DMatrix::identity(n, n) * 0.1;
        Self::new(m).expect("random matrix is positive definite")
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eig
    }

    pub fn det(&self) -> f64 {
        self.eig.iter().product()
    }

    /// Product of the `k` greatest eigenvalues.
    pub fn eig_product(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.dim() {
            return Err(Error::OutOfRange(format!("k = {k} outside 1..={}", self.dim())));
        }
        Ok(self.eig[..k].iter().product())
    }

    pub fn inverse(&self) -> Self {
        let inv = self.m.clone().cholesky().expect("positive definite").inverse();
        Self::new(inv).expect("inverse of a positive definite matrix")
    }

    /// `(1−λ)A + λB`
    pub fn combine(&self, other: &Self, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        if self.dim() != other.dim() {
            return Err(Error::OutOfRange("dimension mismatch".into()));
        }
        Self::new(&self.m * (1.0 - lambda) + &other.m * lambda)
    }

    /// `((1−λ)A⁻¹ + λB⁻¹)⁻¹`
    pub fn harmonic(&self, other: &Self, lambda: f64) -> Result<Self> {
        Ok(self.inverse().combine(&other.inverse(), lambda)?.inverse())
    }

    /// `MᵀAM`
    pub fn congruence(&self, m: &DMatrix<f64>) -> Result<Self> {
        Self::new(m.transpose() * &self.m * m)
    }

    /// Support function `sqrt(uᵀAu)` of the ellipse `{x : xᵀA⁻¹x <= 1}`.
    pub fn ellipse_support(&self, u: [f64; 2]) -> f64 {
        let m = &self.m;
        (u[0] * u[0] * m[(0, 0)] + 2.0 * u[0] * u[1] * m[(0, 1)] + u[1] * u[1] * m[(1, 1)]).sqrt()
    }

    /// Inscribed `n`-gon of the ellipse `{x : xᵀA⁻¹x <= 1}` (2×2 only).
    pub fn ellipse_polygon(&self, n: usize) -> Result<ConvexPolygon<F64>> {
        if self.dim() != 2 {
            return Err(Error::OutOfRange("ellipses are planar".into()));
        }
        let root = self.sqrt();
        let pts: Vec<_> = (0..n)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / n as f64;
                let (c, s) = (t.cos(), t.sin());
                Point2::new(
                    F64(root[(0, 0)] * c + root[(0, 1)] * s),
                    F64(root[(1, 0)] * c + root[(1, 1)] * s),
                )
            })
            .collect();
        ConvexPolygon::from_points(&pts)
    }

    fn sqrt(&self) -> DMatrix<f64> {
        let e = SymmetricEigen::new(self.m.clone());
        let d = DMatrix::from_diagonal(&e.eigenvalues.map(f64::sqrt));
        &e.eigenvectors * d * e.eigenvectors.transpose()
    }
}

/// `G = (1−λ)A + λB − ((1−λ)A⁻¹ + λB⁻¹)⁻¹`, positive semidefinite.
pub fn harm_arith_matrix_gap(a: &SPDMatrix, b: &SPDMatrix, lambda: f64) -> Result<DMatrix<f64>> {
    Ok(a.combine(b, lambda)?.matrix() - a.harmonic(b, lambda)?.matrix())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeterminantCheck {
    /// `((1−λ)det A + λ det B)^{1/n}`
    pub lhs: f64,
    /// `det((1−λ)A)^{1/n} + det(λB)^{1/n}`
    pub rhs: f64,
    /// `det((1−λ)A + λB)^{1/n}`, the usual Minkowski determinant form
    pub det_of_mean: f64,
}

impl DeterminantCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.lhs >= self.rhs - tol && self.det_of_mean >= self.rhs - tol
    }
}

pub fn bm_determinant_check(a: &SPDMatrix, b: &SPDMatrix, lambda: f64) -> Result<DeterminantCheck> {
    let mean = a.combine(b, lambda)?;
    let n = a.dim() as f64;
    let root = |x: f64| x.powf(1.0 / n);
    Ok(DeterminantCheck {
        lhs: root((1.0 - lambda) * a.det() + lambda * b.det()),
        rhs: root((1.0 - lambda).powf(n) * a.det()) + root(lambda.powf(n) * b.det()),
        det_of_mean: root(mean.det()),
    })
}

/// `(|(1−λ)A⁻¹ + λB⁻¹|_k^{−1/k}, ((1−λ)|A|_k^{−1/k} + λ|B|_k^{−1/k})^{−1})`;
/// the first never exceeds the second.
pub fn bohnenblust_k_check(a: &SPDMatrix, b: &SPDMatrix, lambda: f64, k: usize) -> Result<(f64, f64)> {
    let m = a.inverse().combine(&b.inverse(), lambda)?;
    let kf = k as f64;
    let lhs = m.eig_product(k)?.powf(-1.0 / kf);
    let rhs = 1.0 / ((1.0 - lambda) * a.eig_product(k)?.powf(-1.0 / kf) + lambda * b.eig_product(k)?.powf(-1.0 / kf));
    Ok((lhs, rhs))
}

pub const ELLIPSE_SIDES: usize = 512;
pub const ELLIPSE_TOL: f64 = 1e-2;

/// Support comparison of the ellipses of the matrix means against the
/// means of the polygonal ellipses, over `ELLIPSE_SIDES` directions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseCrossCheck {
    /// `E(harmonic matrix) ⊆ harmonic body mean`, worst support excess
    pub harm_matrix_excess: f64,
    /// `harmonic body ⊆ arithmetic body`
    pub harm_body_excess: f64,
    /// `arithmetic body ⊆ E(arithmetic matrix)`
    pub arith_body_excess: f64,
    /// largest support gap between the two matrix ellipses
    pub matrix_gap: f64,
}

impl EllipseCrossCheck {
    pub fn holds(&self) -> bool {
        self.harm_matrix_excess <= ELLIPSE_TOL && self.harm_body_excess <= ELLIPSE_TOL && self.arith_body_excess <= ELLIPSE_TOL
    }
}

pub fn ellipsoid_mean_crosscheck(a: &SPDMatrix, b: &SPDMatrix, lambda: f64) -> Result<EllipseCrossCheck> {
    let pa = a.ellipse_polygon(ELLIPSE_SIDES)?;
    let pb = b.ellipse_polygon(ELLIPSE_SIDES)?;
    let lam = F64(lambda);
    let harm_body = mean_harm_weighted(&pa, &pb, &lam)?;
    let arith_body = mean_arith_weighted(&pa, &pb, &lam)?;
    let harm_m = a.harmonic(b, lambda)?;
    let arith_m = a.combine(b, lambda)?;
    let mut out = EllipseCrossCheck {
        harm_matrix_excess: f64::NEG_INFINITY,
        harm_body_excess: f64::NEG_INFINITY,
        arith_body_excess: f64::NEG_INFINITY,
        matrix_gap: 0.0,
    };
    for i in 0..ELLIPSE_SIDES {
        let t = std::f64::consts::TAU * (i as f64 + 0.5) / ELLIPSE_SIDES as f64;
        let u = [t.cos(), t.sin()];
        let up = Point2::new(F64(u[0]), F64(u[1]));
        let hb = harm_body.support_value(&up).0;
        let ab = arith_body.support_value(&up).0;
        let hm = harm_m.ellipse_support(u);
        let am = arith_m.ellipse_support(u);
        out.harm_matrix_excess = out.harm_matrix_excess.max(hm - hb);
        out.harm_body_excess = out.harm_body_excess.max(hb - ab);
        out.arith_body_excess = out.arith_body_excess.max(ab - am);
        out.matrix_gap = out.matrix_gap.max(am - hm);
    }
    Ok(out)
}
