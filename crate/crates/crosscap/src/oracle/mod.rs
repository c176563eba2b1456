//! Floating-point cross-validation of the exact pipeline.
//!
//! Real singular points come out of the eigenstructure of a random
//! multiplication matrix on the quotient algebra (Stickelberger), get
//! polished by Gauss-Newton on the overdetermined minor system, and are
//! sign-classified through the determinant criterion for cross-caps.

pub mod eigen;
pub mod fmat;

use crate::matrix::{jacobian, PolyMatrix};
use crate::polynomial::PolynomialMap;
use crate::rational::f64_to_rat;
use crate::trace_form::AlgebraTables;
use eigen::eig;
use fmat::{jacobi_symmetric, lu_solve, orthonormal_completion, FMat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error(transparent)]
    Eigen(#[from] eigen::EigenError),
    #[error("point fails the corank-1 rank test: sigma_min = {sigma_min:.3e}, next = {sigma_next:.3e}")]
    RankTest { sigma_min: f64, sigma_next: f64 },
    #[error("determinant {det:.3e} is degenerate relative to column scale {scale:.3e}; not a cross-cap")]
    DegenerateDeterminant { det: f64, scale: f64 },
}

/// Numeric tolerances for the oracle. The residual and dedup knobs are the
/// ones exposed on the command line.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Acceptance bound on the scaled residual of a refined point.
    pub residual: f64,
    /// Points closer than this are one point.
    pub dedup: f64,
    /// Relative determinant bound below which a sign is refused.
    pub det_degeneracy: f64,
    /// Relative singular-value bound for numeric rank decisions.
    pub rank: f64,
    /// Relative imaginary-part bound for keeping an eigenvalue candidate.
    pub imag: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: 1e-8,
            dedup: 1e-6,
            det_degeneracy: 1e-8,
            rank: 1e-6,
            imag: 1e-3,
        }
    }
}

/// An approximate real singular point.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ApproxPoint {
    /// Coordinates in the domain.
    pub coordinates: Vec<f64>,
    /// `max_i |mu_i(p)|`, evaluated exactly at the stored floats.
    pub residual: f64,
    /// Residual relative to the term-magnitude sum of each component.
    pub residual_scaled: f64,
    /// Smallest singular value of `Df(p)` off the kernel direction.
    pub condition: f64,
}

/// A sign-classified cross-cap.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SignedCrossCap {
    pub point: ApproxPoint,
    /// `+1` or `-1`.
    pub sign: i64,
    /// The classifying determinant; `sign = -sgn(det_value)`.
    pub det_value: f64,
}

/// Aggregate of a classification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Totals {
    pub count: usize,
    pub positives: usize,
    pub negatives: usize,
    pub signed_sum: i64,
}

/// Locates the real points of the singular locus.
///
/// Builds a seeded random integer combination of the variable
/// multiplication matrices, reads candidate coordinates off its
/// eigenvectors, refines each candidate by Gauss-Newton on `mu = 0`, and
/// keeps deduplicated points whose exact residual passes the tolerance.
pub fn solve_singular_points(
    tables: &AlgebraTables,
    mu: &PolynomialMap,
    df: &PolyMatrix,
    seed: u64,
    tol: &Tolerances,
) -> Result<Vec<ApproxPoint>, OracleError> {
    let d = tables.dimension();
    if d == 0 {
        return Ok(Vec::new());
    }
    let m = mu.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = (0..m)
        .map(|_| loop {
            let c: i32 = rng.gen_range(-9..=9);
            if c != 0 {
                break c as f64;
            }
        })
        .collect();
    let var_mats: Vec<FMat> = (0..m)
        .map(|l| {
            let q = tables.variable_matrix(l);
            FMat {
                rows: q.rows(),
                cols: q.cols(),
                data: q.to_f64(),
            }
        })
        .collect();
    let mut mc = FMat::zeros(d, d);
    for (l, c) in coeffs.iter().enumerate() {
        for (dst, src) in mc.data.iter_mut().zip(&var_mats[l].data) {
            *dst += c * src;
        }
    }
    let decomp = eig(&mc)?;
    let dmu = jacobian(mu);

    let mut kept: Vec<(Vec<f64>, f64)> = Vec::new();
    for k in 0..d {
        if decomp.im[k].abs() > tol.imag * (1.0 + decomp.re[k].abs()) {
            continue;
        }
        let v = decomp.vectors.column(k);
        let vv: f64 = v.iter().map(|x| x * x).sum();
        if vv <= 0.0 {
            continue;
        }
        let candidate: Vec<f64> = var_mats
            .iter()
            .map(|ml| {
                let mv = ml.matvec(&v);
                mv.iter().zip(&v).map(|(a, b)| a * b).sum::<f64>() / vv
            })
            .collect();
        let Some(refined) = gauss_newton(mu, &dmu, candidate) else {
            continue;
        };
        let rnorm = float_residual(mu, &refined);
        // cluster: keep the better representative of close points
        let mut replaced = false;
        let mut duplicate = false;
        for (point, prev_res) in kept.iter_mut() {
            let dist: f64 = point
                .iter()
                .zip(&refined)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            if dist < tol.dedup {
                duplicate = true;
                if rnorm < *prev_res {
                    *point = refined.clone();
                    *prev_res = rnorm;
                    replaced = true;
                }
                break;
            }
        }
        let _ = replaced;
        if !duplicate {
            kept.push((refined, rnorm));
        }
    }

    let mut points = Vec::new();
    for (coords, _) in kept {
        let (raw, scaled) = exact_residual(mu, &coords);
        if scaled > tol.residual {
            continue;
        }
        let condition = corank_condition(df, &coords).1;
        points.push(ApproxPoint {
            coordinates: coords,
            residual: raw,
            residual_scaled: scaled,
            condition,
        });
    }
    // lexicographic order with a half-dedup deadband per coordinate, so the
    // ordering does not depend on last-bit jitter between runs
    let band = 0.5 * tol.dedup;
    points.sort_by(|a, b| {
        a.coordinates
            .iter()
            .zip(&b.coordinates)
            .map(|(x, y)| {
                if (x - y).abs() <= band {
                    std::cmp::Ordering::Equal
                } else {
                    x.total_cmp(y)
                }
            })
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(points)
}

/// Max-abs float residual of the minor system.
fn float_residual(mu: &PolynomialMap, point: &[f64]) -> f64 {
    mu.components()
        .iter()
        .map(|p| p.evaluate_f64(point).expect("lengths match").abs())
        .fold(0.0, f64::max)
}

/// Exact residual at the float point: raw max and scaled max.
fn exact_residual(mu: &PolynomialMap, point: &[f64]) -> (f64, f64) {
    let rat_point: Vec<crate::rational::Rat> = point
        .iter()
        .map(|&x| f64_to_rat(x).expect("finite coordinates"))
        .collect();
    let mut raw: f64 = 0.0;
    let mut scaled: f64 = 0.0;
    for p in mu.components() {
        let value = crate::rational::rat_to_f64(
            &p.evaluate_rat(&rat_point).expect("lengths match"),
        )
        .abs();
        raw = raw.max(value);
        let magnitude = p.eval_magnitude_f64(point);
        scaled = scaled.max(value / (1.0 + magnitude));
    }
    (raw, scaled)
}

/// Gauss-Newton on the overdetermined system `mu = 0` with step halving.
/// Accepts only improving steps, so the residual decreases monotonically.
fn gauss_newton(mu: &PolynomialMap, dmu: &PolyMatrix, start: Vec<f64>) -> Option<Vec<f64>> {
    let m = mu.nvars();
    let mut x = start;
    if x.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let mut rnorm = float_residual(mu, &x);
    for _ in 0..50 {
        let scale: f64 = mu
            .components()
            .iter()
            .map(|p| p.eval_magnitude_f64(&x))
            .fold(0.0, f64::max);
        if rnorm <= 1e-15 * (1.0 + scale) {
            break;
        }
        let jdata = dmu.evaluate_f64(&x);
        let j = FMat {
            rows: dmu.rows(),
            cols: dmu.cols(),
            data: jdata,
        };
        let residuals: Vec<f64> = mu
            .components()
            .iter()
            .map(|p| p.evaluate_f64(&x).expect("lengths match"))
            .collect();
        let jt = j.transpose();
        let jtj = jt.matmul(&j);
        let mut rhs = jt.matvec(&residuals);
        for v in &mut rhs {
            *v = -*v;
        }
        let Some(delta) = lu_solve(&jtj, &rhs) else {
            break;
        };
        let mut improved = false;
        let mut step = 1.0;
        for _ in 0..25 {
            let trial: Vec<f64> = (0..m).map(|i| x[i] + step * delta[i]).collect();
            let trial_norm = float_residual(mu, &trial);
            if trial_norm < rnorm {
                x = trial;
                rnorm = trial_norm;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    Some(x)
}

/// Exact determinant of a float matrix via fraction-free elimination over
/// the rationals (every finite `f64` converts exactly). Rounded back to a
/// float for reporting; the sign is exact.
fn det_exact(a: &FMat) -> f64 {
    use crate::rational::Rat;
    use num_traits::{One, Zero};
    let n = a.rows;
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| f64_to_rat(a[(i, j)]).expect("finite entries"))
                .collect()
        })
        .collect();
    let mut det = Rat::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
            return 0.0;
        };
        if pivot != k {
            rows.swap(k, pivot);
            det = -det;
        }
        det *= rows[k][k].clone();
        for r in k + 1..n {
            if rows[r][k].is_zero() {
                continue;
            }
            let factor = &rows[r][k] / &rows[k][k];
            for c in k..n {
                let delta = &factor * &rows[k][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
    }
    crate::rational::rat_to_f64(&det)
}

/// Smallest two singular values of `Df` at a point: `(sigma_min, sigma_next)`.
fn corank_condition(df: &PolyMatrix, point: &[f64]) -> (f64, f64) {
    let data = df.evaluate_f64(point);
    let j = FMat {
        rows: df.rows(),
        cols: df.cols(),
        data,
    };
    let (evals, _) = jacobi_symmetric(&j.gram());
    let s0 = evals[0].max(0.0).sqrt();
    let s1 = if evals.len() > 1 {
        evals[1].max(0.0).sqrt()
    } else {
        s0
    };
    (s0, s1)
}

/// Per-map context for sign classification: the Jacobian and all second
/// derivatives, differentiated once symbolically.
pub struct SignContext {
    df: PolyMatrix,
    /// `hessians[i]` is the symmetric matrix of second partials of `f_i`.
    hessians: Vec<Vec<crate::polynomial::Polynomial>>,
    m: usize,
    n: usize,
}

impl SignContext {
    pub fn new(f: &PolynomialMap) -> Self {
        let m = f.nvars();
        let n = f.ncomponents();
        let df = jacobian(f);
        let hessians = f
            .components()
            .iter()
            .map(|p| {
                let grads: Vec<_> = (0..m)
                    .map(|a| p.differentiate(a).expect("in range"))
                    .collect();
                (0..m)
                    .flat_map(|a| {
                        let ga = &grads[a];
                        (0..m)
                            .map(move |b| ga.differentiate(b).expect("in range"))
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        SignContext { df, hessians, m, n }
    }

    fn hessian_at(&self, i: usize, point: &[f64]) -> FMat {
        let m = self.m;
        let mut h = FMat::zeros(m, m);
        for a in 0..m {
            for b in 0..m {
                h[(a, b)] = self.hessians[i][a * m + b]
                    .evaluate_f64(point)
                    .expect("lengths match");
            }
        }
        h
    }
}

/// Classifies one cross-cap by the determinant criterion.
///
/// Picks the kernel direction of `Df(p)`, completes it to a positively
/// oriented orthonormal frame, assembles the `(2m-1) x (2m-1)` matrix of
/// first derivatives in the complement directions and second derivatives
/// along the kernel, and reads the sign off the determinant: negative
/// determinant means a positive cross-cap.
pub fn crosscap_sign_at(
    ctx: &SignContext,
    point: &ApproxPoint,
    tol: &Tolerances,
) -> Result<SignedCrossCap, OracleError> {
    let m = ctx.m;
    let n = ctx.n;
    let p = &point.coordinates;
    let dfp = FMat {
        rows: n,
        cols: m,
        data: ctx.df.evaluate_f64(p),
    };
    let scale = dfp.frobenius();
    let (evals, evecs) = jacobi_symmetric(&dfp.gram());
    let sigma_min = evals[0].max(0.0).sqrt();
    let sigma_next = evals[1].max(0.0).sqrt();
    if sigma_min > tol.rank * (1.0 + scale) || sigma_next <= tol.rank * (1.0 + scale) {
        return Err(OracleError::RankTest {
            sigma_min,
            sigma_next,
        });
    }
    let kernel = evecs.column(0);
    sign_from_kernel(ctx, point, &kernel, tol)
}

/// Sign classification with an explicit kernel direction. The result does
/// not depend on the orientation of `kernel` (for odd `m` the determinant
/// picks up an even number of column flips).
fn sign_from_kernel(
    ctx: &SignContext,
    point: &ApproxPoint,
    kernel: &[f64],
    tol: &Tolerances,
) -> Result<SignedCrossCap, OracleError> {
    let m = ctx.m;
    let n = ctx.n;
    let p = &point.coordinates;
    let dfp = FMat {
        rows: n,
        cols: m,
        data: ctx.df.evaluate_f64(p),
    };
    let phi = orthonormal_completion(kernel);
    let kernel: Vec<f64> = phi.column(0);

    let mut a1 = FMat::zeros(n, n);
    // first derivatives along the complement directions
    for l in 1..m {
        let col = dfp.matvec(&phi.column(l));
        for i in 0..n {
            a1[(i, l - 1)] = col[i];
        }
    }
    // second derivatives along the kernel direction
    let hessian_kernel: Vec<Vec<f64>> = (0..n)
        .map(|i| ctx.hessian_at(i, p).matvec(&kernel))
        .collect();
    for j in 0..m {
        let pj = phi.column(j);
        for i in 0..n {
            let val: f64 = pj.iter().zip(&hessian_kernel[i]).map(|(a, b)| a * b).sum();
            a1[(i, m - 1 + j)] = val;
        }
    }
    // the float entries are exact dyadic rationals, so the determinant can
    // be taken exactly; LU would be fine most of the time but near-parallel
    // columns (which genuinely occur) make its noise floor hard to judge
    let det = det_exact(&a1);
    let mean_col_norm = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| a1[(i, j)] * a1[(i, j)])
                .sum::<f64>()
                .sqrt()
        })
        .sum::<f64>()
        / n as f64;
    if det.abs() <= tol.det_degeneracy * (1.0 + mean_col_norm) {
        return Err(OracleError::DegenerateDeterminant {
            det,
            scale: mean_col_norm,
        });
    }
    Ok(SignedCrossCap {
        point: point.clone(),
        sign: if det > 0.0 { -1 } else { 1 },
        det_value: det,
    })
}

/// Locates and classifies every real cross-cap of `f`.
pub fn classify_all(
    f: &PolynomialMap,
    tables: &AlgebraTables,
    mu: &PolynomialMap,
    seed: u64,
    tol: &Tolerances,
) -> Result<(Vec<SignedCrossCap>, Totals), OracleError> {
    let ctx = SignContext::new(f);
    let points = solve_singular_points(tables, mu, &ctx.df, seed, tol)?;
    let mut classified = Vec::with_capacity(points.len());
    for p in &points {
        classified.push(crosscap_sign_at(&ctx, p, tol)?);
    }
    let positives = classified.iter().filter(|c| c.sign > 0).count();
    let negatives = classified.len() - positives;
    let totals = Totals {
        count: classified.len(),
        positives,
        negatives,
        signed_sum: positives as i64 - negatives as i64,
    };
    Ok((classified, totals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::reduced_groebner;
    use crate::parser::parse_polynomial;
    use crate::polynomial::{PolynomialMap, Variables};

    fn map(names: &[&str], comps: &[&str]) -> PolynomialMap {
        let v = Variables::new(names).unwrap();
        PolynomialMap::new(
            &v,
            comps
                .iter()
                .map(|s| parse_polynomial(s, &v).unwrap())
                .collect(),
        )
    }

    fn tables_for(system: &PolynomialMap) -> AlgebraTables {
        let gb = reduced_groebner(system.variables(), system.components());
        AlgebraTables::new(&gb.quotient_basis().unwrap())
    }

    #[test]
    fn known_roots_of_simple_system() {
        // mu = (x^2 - 2, y - 1): roots (+-sqrt(2), 1)
        let mu = map(&["x", "y"], &["x^2 - 2", "y - 1"]);
        let tables = tables_for(&mu);
        // any full-rank df stand-in works for the condition column
        let df = jacobian(&mu);
        let pts =
            solve_singular_points(&tables, &mu, &df, 0, &Tolerances::default()).unwrap();
        assert_eq!(pts.len(), 2);
        let s = 2f64.sqrt();
        assert!((pts[0].coordinates[0] + s).abs() < 1e-9);
        assert!((pts[1].coordinates[0] - s).abs() < 1e-9);
        for p in &pts {
            assert!((p.coordinates[1] - 1.0).abs() < 1e-9);
            assert!(p.residual < 1e-10);
        }
    }

    #[test]
    fn reseeding_finds_the_same_points() {
        let mu = map(&["x", "y"], &["x^3 - 3*x + 1", "y^2 - x"]);
        let tables = tables_for(&mu);
        let df = jacobian(&mu);
        let a = solve_singular_points(&tables, &mu, &df, 1, &Tolerances::default()).unwrap();
        let b = solve_singular_points(&tables, &mu, &df, 99, &Tolerances::default()).unwrap();
        assert_eq!(a.len(), b.len());
        for (pa, pb) in a.iter().zip(&b) {
            for (x, y) in pa.coordinates.iter().zip(&pb.coordinates) {
                assert!((x - y).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn whitney_sign_at_origin() {
        let f = map(&["x", "y", "z"], &["x^2", "y", "z", "x*y", "x*z"]);
        let ctx = SignContext::new(&f);
        let origin = ApproxPoint {
            coordinates: vec![0.0, 0.0, 0.0],
            residual: 0.0,
            residual_scaled: 0.0,
            condition: 1.0,
        };
        let signed = crosscap_sign_at(&ctx, &origin, &Tolerances::default()).unwrap();
        // the classifying determinant is +2 for the normal form
        assert!((signed.det_value - 2.0).abs() < 1e-9);
        assert_eq!(signed.sign, -1);
    }

    #[test]
    fn whitney_m5_sign_at_origin() {
        let f = map(
            &["x1", "x2", "x3", "x4", "x5"],
            &[
                "x1^2", "x2", "x3", "x4", "x5", "x1*x2", "x1*x3", "x1*x4", "x1*x5",
            ],
        );
        let ctx = SignContext::new(&f);
        let origin = ApproxPoint {
            coordinates: vec![0.0; 5],
            residual: 0.0,
            residual_scaled: 0.0,
            condition: 1.0,
        };
        let signed = crosscap_sign_at(&ctx, &origin, &Tolerances::default()).unwrap();
        assert!((signed.det_value - 2.0).abs() < 1e-9);
        assert_eq!(signed.sign, -1);
    }

    #[test]
    fn regular_point_fails_rank_test() {
        let f = map(&["x", "y", "z"], &["x", "y", "z", "0", "0"]);
        let ctx = SignContext::new(&f);
        let pt = ApproxPoint {
            coordinates: vec![0.3, -0.1, 0.9],
            residual: 0.0,
            residual_scaled: 0.0,
            condition: 1.0,
        };
        assert!(matches!(
            crosscap_sign_at(&ctx, &pt, &Tolerances::default()),
            Err(OracleError::RankTest { .. })
        ));
    }

    #[test]
    fn sign_stable_under_kernel_flip() {
        // for odd m the determinant picks up an even number of column
        // flips when the kernel direction is negated
        let f = map(&["x", "y", "z"], &["x^2", "y", "z", "x*y", "x*z"]);
        let ctx = SignContext::new(&f);
        let origin = ApproxPoint {
            coordinates: vec![0.0; 3],
            residual: 0.0,
            residual_scaled: 0.0,
            condition: 1.0,
        };
        let v = [1.0, 0.0, 0.0];
        let neg = [-1.0, 0.0, 0.0];
        let s1 = sign_from_kernel(&ctx, &origin, &v, &Tolerances::default()).unwrap();
        let s2 = sign_from_kernel(&ctx, &origin, &neg, &Tolerances::default()).unwrap();
        assert_eq!(s1.sign, s2.sign);
        assert!((s1.det_value - s2.det_value).abs() < 1e-12);
    }

    #[test]
    fn classify_regular_map_is_empty() {
        let f = map(&["x", "y", "z"], &["x", "y", "z", "0", "0"]);
        let df = jacobian(&f);
        let mu_polys = df.minors(3).unwrap();
        let mu = PolynomialMap::new(f.variables(), mu_polys);
        let tables = tables_for(&mu);
        let (list, totals) =
            classify_all(&f, &tables, &mu, 0, &Tolerances::default()).unwrap();
        assert!(list.is_empty());
        assert_eq!(
            totals,
            Totals {
                count: 0,
                positives: 0,
                negatives: 0,
                signed_sum: 0
            }
        );
    }

    #[test]
    fn gauss_newton_polishes_to_tiny_residual() {
        let mu = map(&["x", "y"], &["x^2 - 2", "x*y - x"]);
        let dmu = jacobian(&mu);
        let x = gauss_newton(&mu, &dmu, vec![1.3, 1.2]).unwrap();
        assert!(float_residual(&mu, &x) < 1e-10);
        assert!((x[0] - 2f64.sqrt()).abs() < 1e-9);
        assert!((x[1] - 1.0).abs() < 1e-9);
    }
}
