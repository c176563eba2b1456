//! The cross-cap pipelines: problem setup from a polynomial map,
//! genericity checking, signed counts over semialgebraic regions via the
//! two trace-form signatures, and intersection numbers of sphere
//! immersions through the augmented map.

use crate::groebner::{reduced_groebner, GroebnerBasis, GroebnerError, QuotientAlgebra};
use crate::matrix::{jacobian, PolyMatrix};
use crate::oracle::{self, ApproxPoint, OracleError, Tolerances};
use crate::polynomial::{Polynomial, PolynomialMap, Variables};
use crate::rational::Rat;
use crate::trace_form::{signature, AlgebraTables, QMat};
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("expected an odd number of variables m >= 3 with {expected} components, got m = {m}, components = {c}")]
    Shape { m: usize, c: usize, expected: String },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("hypothesis `{hypothesis}` still fails after {retries} row-transform retries")]
    HypothesisFailure { hypothesis: String, retries: u32 },
    #[error("trace form {which} is degenerate (kernel dimension {n_zero}); a singular point may sit on the region boundary -- perturb the radius and retry")]
    DegenerateForm { which: String, n_zero: usize },
    #[error("a singular point {point:?} sits on the region boundary (|u| = {value:.3e})")]
    BoundaryHit { point: Vec<f64>, value: f64 },
    #[error("the map is not an immersion on the sphere{}", witness_note(.witness))]
    NotImmersion { witness: Option<Vec<f64>> },
    #[error("parity violation: count_real = {count_real} and zeta = {zeta} differ mod 2")]
    Parity { count_real: i64, zeta: i64 },
    #[error("invalid region: {0}")]
    BadRegion(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

fn witness_note(w: &Option<Vec<f64>>) -> String {
    match w {
        Some(p) => format!(" (witness near {p:?})"),
        None => String::new(),
    }
}

/// A square integer matrix with determinant +1, used to rotate the target
/// coordinates when the pivot-minor hypothesis fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// A random product of transvections (row additions), so the
    /// determinant is exactly +1 and entries stay small.
    pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut m = Self::identity(n);
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let c: i64 = loop {
                let c = rng.gen_range(-2..=2);
                if c != 0 {
                    break c;
                }
            };
            // row_i += c * row_j
            for k in 0..n {
                m.data[i * n + k] += c * m.data[j * n + k];
            }
        }
        m
    }
}

/// Applies an integer row transform to a polynomial matrix.
fn transform_rows(mx: &PolyMatrix, r: &IntMatrix) -> PolyMatrix {
    assert_eq!(mx.rows(), r.size());
    let vars = mx.variables().clone();
    let mut entries = Vec::with_capacity(mx.rows() * mx.cols());
    for i in 0..mx.rows() {
        for j in 0..mx.cols() {
            let mut acc = Polynomial::zero(&vars);
            for k in 0..mx.rows() {
                let c = r.entry(i, k);
                if c != 0 {
                    acc = &acc + &mx.entry(k, j).scale(&crate::rational::rat(c));
                }
            }
            entries.push(acc);
        }
    }
    PolyMatrix::new(mx.rows(), mx.cols(), entries).expect("shape preserved")
}

/// Composes a linear target change `a` with `f`: the new components are
/// the rows of `a` applied to the old ones.
pub fn apply_target_transform(f: &PolynomialMap, a: &QMat) -> PolynomialMap {
    assert_eq!(a.cols(), f.ncomponents());
    let vars = f.variables().clone();
    let comps = (0..a.rows())
        .map(|i| {
            let mut acc = Polynomial::zero(&vars);
            for j in 0..a.cols() {
                if !a[(i, j)].is_zero() {
                    acc = &acc + &f.component(j).scale(&a[(i, j)]);
                }
            }
            acc
        })
        .collect();
    PolynomialMap::new(&vars, comps)
}

/// A cross-cap counting problem: the map, its Jacobian, the minor map
/// whose zeros are the singular points, and the quotient algebra of the
/// minor ideal.
pub struct CrossCapProblem {
    f: PolynomialMap,
    df: PolyMatrix,
    mu: PolynomialMap,
    gb: GroebnerBasis,
    qa: QuotientAlgebra,
    tables: AlgebraTables,
}

impl CrossCapProblem {
    pub fn map(&self) -> &PolynomialMap {
        &self.f
    }

    pub fn jacobian(&self) -> &PolyMatrix {
        &self.df
    }

    /// The minor map: all `m x m` minors of the Jacobian.
    pub fn minor_map(&self) -> &PolynomialMap {
        &self.mu
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.qa
    }

    pub fn tables(&self) -> &AlgebraTables {
        &self.tables
    }

    /// Domain dimension `m`.
    pub fn m(&self) -> usize {
        self.f.nvars()
    }

    pub fn dimension(&self) -> usize {
        self.qa.dimension()
    }

    /// Real singular points found by the numeric oracle.
    pub fn oracle_points(
        &self,
        seed: u64,
        tol: &Tolerances,
    ) -> Result<Vec<ApproxPoint>, EngineError> {
        Ok(oracle::solve_singular_points(
            &self.tables,
            &self.mu,
            &self.df,
            seed,
            tol,
        )?)
    }
}

/// Validates the shape of `f` and assembles the whole exact skeleton:
/// Jacobian, minor map, reduced Gröbner basis, staircase algebra.
pub fn build_problem(f: PolynomialMap) -> Result<CrossCapProblem, EngineError> {
    let m = f.nvars();
    let c = f.ncomponents();
    if m < 3 || m % 2 == 0 || c != 2 * m - 1 {
        return Err(EngineError::Shape {
            m,
            c,
            expected: "2m-1".into(),
        });
    }
    let df = jacobian(&f);
    let minors = df.minors(m).expect("m <= min(2m-1, m)");
    let mu = PolynomialMap::new(f.variables(), minors);
    let gb = reduced_groebner(f.variables(), mu.components());
    let qa = gb.quotient_basis()?;
    let tables = AlgebraTables::new(&qa);
    Ok(CrossCapProblem {
        f,
        df,
        mu,
        gb,
        qa,
        tables,
    })
}

/// A compact region `{u >= 0}` with regular boundary.
#[derive(Clone, Debug)]
pub enum Region {
    /// Closed ball of the given squared radius.
    Ball { radius_sq: Rat },
    /// Closed annulus between two squared radii.
    Annulus { r1_sq: Rat, r2_sq: Rat },
    /// Caller-supplied region polynomial; boundedness is trusted.
    Custom { u: Polynomial },
}

impl Region {
    pub fn ball(radius_sq: Rat) -> Self {
        Region::Ball { radius_sq }
    }

    pub fn annulus(r1_sq: Rat, r2_sq: Rat) -> Self {
        Region::Annulus { r1_sq, r2_sq }
    }

    /// The region polynomial over the given variables.
    pub fn polynomial(&self, vars: &Variables) -> Result<Polynomial, EngineError> {
        match self {
            Region::Ball { radius_sq } => {
                if !radius_sq.is_positive() {
                    return Err(EngineError::BadRegion(
                        "ball radius squared must be positive".into(),
                    ));
                }
                Ok(&Polynomial::constant(vars, radius_sq.clone()) - &omega(vars))
            }
            Region::Annulus { r1_sq, r2_sq } => {
                if !r1_sq.is_positive() || r2_sq <= r1_sq {
                    return Err(EngineError::BadRegion(
                        "annulus needs 0 < r1^2 < r2^2".into(),
                    ));
                }
                let w = omega(vars);
                let inner = &w - &Polynomial::constant(vars, r1_sq.clone());
                let outer = &Polynomial::constant(vars, r2_sq.clone()) - &w;
                Ok(&inner * &outer)
            }
            Region::Custom { u } => {
                if u.is_zero() {
                    return Err(EngineError::BadRegion(
                        "region polynomial must be nonzero".into(),
                    ));
                }
                assert_eq!(u.variables(), vars, "region over wrong variables");
                Ok(u.clone())
            }
        }
    }
}

/// Sum of squares of the coordinates.
pub fn omega(vars: &Variables) -> Polynomial {
    let mut acc = Polynomial::zero(vars);
    for i in 0..vars.len() {
        let xi = Polynomial::variable(vars, i).expect("in range");
        acc = &acc + &(&xi * &xi);
    }
    acc
}

/// The bordered-minor data entering the two trace forms.
#[derive(Clone, Debug)]
pub struct DeltaData {
    /// The pivot minor `m(x)` (rows 1..k-1, columns 2..k).
    pub pivot_minor: Polynomial,
    /// The bordered minors, one per row `k..n`.
    pub deltas: Vec<Polynomial>,
    /// Jacobian determinant of the bordered minors.
    pub delta: Polynomial,
    /// The integer row transform that was applied to the Jacobian.
    pub row_transform: IntMatrix,
}

/// Builds the pivot minor, the bordered minors, and their Jacobian
/// determinant from the (optionally row-transformed) Jacobian.
pub fn build_delta(
    problem: &CrossCapProblem,
    row_transform: Option<&IntMatrix>,
) -> DeltaData {
    let m = problem.m();
    let n_rows = 2 * m - 1;
    let transform = row_transform
        .cloned()
        .unwrap_or_else(|| IntMatrix::identity(n_rows));
    let df = if transform.is_identity() {
        problem.df.clone()
    } else {
        transform_rows(&problem.df, &transform)
    };
    let top_rows: Vec<usize> = (0..m - 1).collect();
    let pivot_cols: Vec<usize> = (1..m).collect();
    let pivot_minor = df
        .submatrix(&top_rows, &pivot_cols)
        .det()
        .expect("square pivot block");
    let all_cols: Vec<usize> = (0..m).collect();
    let deltas: Vec<Polynomial> = (m - 1..n_rows)
        .map(|i| {
            let mut rows = top_rows.clone();
            rows.push(i);
            df.submatrix(&rows, &all_cols)
                .det()
                .expect("square bordered block")
        })
        .collect();
    let jac_entries: Vec<Polynomial> = deltas
        .iter()
        .flat_map(|d| (0..m).map(move |j| d.differentiate(j).expect("in range")))
        .collect();
    let delta = PolyMatrix::new(m, m, jac_entries)
        .expect("m x m")
        .det()
        .expect("square");
    DeltaData {
        pivot_minor,
        deltas,
        delta,
        row_transform: transform,
    }
}

/// Which hypotheses of the signature formula were verified on a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct HypothesisReport {
    /// The quotient algebra is finite-dimensional.
    pub finite_dimension: bool,
    /// `1` lies in the minor ideal plus the pivot minor.
    pub unit_pivot: bool,
    /// The form weighted by `delta` is non-degenerate.
    pub theta_delta_nondegenerate: bool,
    /// The form weighted by `u * delta` is non-degenerate.
    pub theta_u_delta_nondegenerate: bool,
    /// No oracle point sits numerically on the region boundary.
    pub boundary_clear: bool,
}

/// Result of a signed count over a region.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ZetaResult {
    /// The signed number of cross-caps in the region.
    pub zeta: i64,
    pub sig_delta: i64,
    pub sig_u_delta: i64,
    pub dim_a: usize,
    pub retries_used: u32,
    pub hypotheses: HypothesisReport,
}

/// Signed count of cross-caps over a region by the signature formula.
///
/// When `1` is not in the ideal plus the pivot minor, the target is rotated
/// by a fresh seeded determinant-plus-one integer transform (the count is
/// invariant under such rotations) up to `max_retries` times.
pub fn zeta(
    problem: &CrossCapProblem,
    region: &Region,
    seed: u64,
    max_retries: u32,
    tol: &Tolerances,
) -> Result<ZetaResult, EngineError> {
    let vars = problem.f.variables().clone();
    let u = region.polynomial(&vars)?;
    if problem.dimension() == 0 {
        // no singular points at all, even complex ones
        return Ok(ZetaResult {
            zeta: 0,
            sig_delta: 0,
            sig_u_delta: 0,
            dim_a: 0,
            retries_used: 0,
            hypotheses: HypothesisReport {
                finite_dimension: true,
                unit_pivot: true,
                theta_delta_nondegenerate: true,
                theta_u_delta_nondegenerate: true,
                boundary_clear: true,
            },
        });
    }

    // boundary regularity side-check at the oracle points
    let points = problem.oracle_points(seed, tol)?;
    for p in &points {
        let value = u
            .evaluate_f64(&p.coordinates)
            .expect("lengths match");
        let scale = 1.0 + u.eval_magnitude_f64(&p.coordinates);
        if value.abs() <= 1e-7 * scale {
            return Err(EngineError::BoundaryHit {
                point: p.coordinates.clone(),
                value,
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: Option<(DeltaData, u32)> = None;
    for attempt in 0..=max_retries {
        let transform = if attempt == 0 {
            None
        } else {
            Some(IntMatrix::random_unimodular(2 * problem.m() - 1, &mut rng))
        };
        let dd = build_delta(problem, transform.as_ref());
        if dd.pivot_minor.is_zero() {
            continue;
        }
        if unit_with_extra(problem, std::slice::from_ref(&dd.pivot_minor)) {
            chosen = Some((dd, attempt));
            break;
        }
    }
    let Some((dd, retries_used)) = chosen else {
        return Err(EngineError::HypothesisFailure {
            hypothesis: "1 in I + <pivot minor>".into(),
            retries: max_retries,
        });
    };

    let theta_delta = problem.tables.theta(&dd.delta);
    if !theta_delta.inertia.is_nondegenerate() {
        return Err(EngineError::DegenerateForm {
            which: "Theta_delta".into(),
            n_zero: theta_delta.inertia.n_zero,
        });
    }
    let u_delta = &u * &dd.delta;
    let theta_u_delta = problem.tables.theta(&u_delta);
    if !theta_u_delta.inertia.is_nondegenerate() {
        return Err(EngineError::DegenerateForm {
            which: "Theta_u_delta".into(),
            n_zero: theta_u_delta.inertia.n_zero,
        });
    }
    let sig_delta = theta_delta.inertia.signature();
    let sig_u_delta = theta_u_delta.inertia.signature();
    let sum = sig_delta + sig_u_delta;
    if sum % 2 != 0 {
        return Err(EngineError::Internal(format!(
            "signature sum {sum} is odd"
        )));
    }
    Ok(ZetaResult {
        zeta: -(sum / 2),
        sig_delta,
        sig_u_delta,
        dim_a: problem.dimension(),
        retries_used,
        hypotheses: HypothesisReport {
            finite_dimension: true,
            unit_pivot: true,
            theta_delta_nondegenerate: true,
            theta_u_delta_nondegenerate: true,
            boundary_clear: true,
        },
    })
}

/// Number of distinct real singular points: the signature of `Theta_1`.
pub fn count_real(problem: &CrossCapProblem) -> i64 {
    if problem.dimension() == 0 {
        return 0;
    }
    signature(problem.tables.theta1_gram())
        .expect("Theta_1 Gram matrices are symmetric")
        .signature()
}

/// Signed and unsigned totals over all of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalZeta {
    pub zeta: i64,
    pub positives: i64,
    pub negatives: i64,
    /// The squared radius of the ball that was certified to contain every
    /// real singular point.
    pub radius_sq: Rat,
}

/// Squared radius of a ball safely enclosing all oracle points: one more
/// than the ceiling of the largest point norm, squared.
pub fn auto_radius_sq(points: &[ApproxPoint]) -> Rat {
    let max_norm = points
        .iter()
        .map(|p| {
            p.coordinates
                .iter()
                .map(|x| x * x)
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    let r = max_norm.ceil() as i64 + 1;
    crate::rational::rat(r * r)
}

/// Runs `zeta` over a ball enclosing every real singular point and splits
/// the count into positive and negative cross-caps.
pub fn total_zeta(
    problem: &CrossCapProblem,
    seed: u64,
    max_retries: u32,
    tol: &Tolerances,
) -> Result<TotalZeta, EngineError> {
    let points = problem.oracle_points(seed, tol)?;
    let radius_sq = auto_radius_sq(&points);
    let result = zeta(
        problem,
        &Region::ball(radius_sq.clone()),
        seed,
        max_retries,
        tol,
    )?;
    let count = count_real(problem);
    if (count + result.zeta) % 2 != 0 {
        return Err(EngineError::Parity {
            count_real: count,
            zeta: result.zeta,
        });
    }
    let positives = (count + result.zeta) / 2;
    Ok(TotalZeta {
        zeta: result.zeta,
        positives,
        negatives: count - positives,
        radius_sq,
    })
}

/// Per-point verdicts of the genericity check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PointGenericity {
    pub coordinates: Vec<f64>,
    /// `Df` has numeric rank exactly m-1 here.
    pub corank_one: bool,
    /// `D(mu)` has full numeric rank m here.
    pub transversal: bool,
    pub sigma_df: f64,
    pub sigma_dmu: f64,
    pub residual: f64,
}

/// Outcome of the genericity check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct GenericityReport {
    /// Exact verdict that the corank-2 locus is empty over the complex
    /// numbers, when the check ran.
    pub rank_drop_exact: Option<bool>,
    /// Exact verdict that the transversality locus is empty over the
    /// complex numbers, when the check ran.
    pub transversality_exact: Option<bool>,
    pub points: Vec<PointGenericity>,
    /// Every real singular point is a cross-cap.
    pub generic: bool,
}

/// Bound on how many exact minors the transversality check may generate
/// before falling back to the per-point numeric test.
const MAX_EXACT_MINORS: usize = 10_000;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Checks that every singular point is a cross-cap: the corank-2 locus is
/// empty and the minor map is a submersion on the singular set.
///
/// Exact ideal checks decide genericity outright when they certify
/// emptiness over the complex numbers; otherwise every real oracle point
/// is tested numerically and the verdict is the conjunction.
pub fn check_generic(
    problem: &CrossCapProblem,
    seed: u64,
    tol: &Tolerances,
) -> Result<GenericityReport, EngineError> {
    let m = problem.m();

    // (a) corank >= 2 locus: I + <(m-1)-minors of Df>
    let sub_minors = problem.df.minors(m - 1).expect("size in range");
    let rank_drop_exact = Some(unit_with_extra(problem, &sub_minors));

    // (b) transversality: I + <m-minors of D(mu)>. A minor only matters
    // modulo I, and replacing a row by its normal form changes the
    // determinant by an element of I, so the entries can be reduced first.
    let dmu = jacobian(&problem.mu);
    let minor_count = binomial(dmu.rows(), m);
    let transversality_exact = if minor_count <= MAX_EXACT_MINORS {
        let mut reduced_entries = Vec::with_capacity(dmu.rows() * dmu.cols());
        for i in 0..dmu.rows() {
            for j in 0..dmu.cols() {
                reduced_entries.push(integer_primitive(
                    &problem.gb.normal_form(dmu.entry(i, j)),
                ));
            }
        }
        let reduced_dmu = PolyMatrix::new(dmu.rows(), dmu.cols(), reduced_entries)
            .expect("shape preserved");
        let trans_minors = reduced_dmu.minors(m).expect("size in range");
        let primitives: Vec<Polynomial> =
            trans_minors.iter().map(integer_primitive).collect();
        Some(unit_with_extra(problem, &primitives))
    } else {
        None
    };

    // (c) numeric per-point fallback
    let oracle_points = problem.oracle_points(seed, tol)?;
    let mut points = Vec::with_capacity(oracle_points.len());
    let mut all_pass = true;
    for p in &oracle_points {
        let (df_min, df_next) = smallest_two_sigmas(&problem.df, &p.coordinates);
        let df_scale = frob(&problem.df, &p.coordinates);
        let corank_one =
            df_min <= tol.rank * (1.0 + df_scale) && df_next > tol.rank * (1.0 + df_scale);
        let (dmu_min, _) = smallest_two_sigmas(&dmu, &p.coordinates);
        let dmu_scale = frob(&dmu, &p.coordinates);
        let transversal = dmu_min > tol.rank * (1.0 + dmu_scale);
        all_pass &= corank_one && transversal;
        points.push(PointGenericity {
            coordinates: p.coordinates.clone(),
            corank_one,
            transversal,
            sigma_df: df_next,
            sigma_dmu: dmu_min,
            residual: p.residual,
        });
    }

    let generic = match (rank_drop_exact, transversality_exact) {
        (Some(true), Some(true)) => true,
        _ => all_pass,
    };
    Ok(GenericityReport {
        rank_drop_exact,
        transversality_exact,
        points,
        generic,
    })
}

/// Is `I + <extra>` the unit ideal?
///
/// Equivalent to the residue classes of `extra` generating the unit ideal
/// of the finite quotient algebra, which is a linear-algebra question: grow
/// the span of the classes under multiplication by the variables and check
/// whether it fills the whole algebra.
fn unit_with_extra(problem: &CrossCapProblem, extra: &[Polynomial]) -> bool {
    let d = problem.qa.dimension();
    if d == 0 {
        return true;
    }
    let nvars = problem.f.nvars();
    let mut echelon = RatEchelon::new(d);
    let mut queue: Vec<Vec<Rat>> = extra
        .iter()
        .map(|p| problem.qa.coordinates(p))
        .collect();
    while let Some(v) = queue.pop() {
        if echelon.dimension() == d {
            return true;
        }
        if echelon.insert(v.clone()) {
            for l in 0..nvars {
                queue.push(problem.tables.variable_matrix(l).matvec(&v));
            }
        }
    }
    echelon.dimension() == d
}

/// Incremental reduced row span over the rationals; rows are kept
/// integer-primitive to bound coefficient growth.
struct RatEchelon {
    width: usize,
    /// `(pivot column, row)` pairs, each row with a nonzero pivot entry
    /// and zeros in every earlier row's pivot column.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RatEchelon {
    fn new(width: usize) -> Self {
        RatEchelon {
            width,
            rows: Vec::new(),
        }
    }

    fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; inserts and returns true when
    /// independent.
    fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = &v[*pivot] / &row[*pivot];
            for k in 0..self.width {
                if !row[k].is_zero() {
                    let delta = &factor * &row[k];
                    v[k] = &v[k] - &delta;
                }
            }
        }
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        // integer-primitive normalization
        let mut denom_lcm = num_bigint::BigInt::from(1);
        for c in &v {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
        }
        let mut content = num_bigint::BigInt::from(0);
        let ints: Vec<num_bigint::BigInt> = v
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        for c in &ints {
            content = num_integer::Integer::gcd(&content, c);
        }
        let normalized: Vec<Rat> = ints
            .into_iter()
            .map(|c| Rat::from_integer(c / &content))
            .collect();
        self.rows.push((pivot, normalized));
        true
    }
}

/// Rescales a polynomial by a positive rational so its coefficients are
/// coprime integers (same ideal member, tame coefficient growth).
fn integer_primitive(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let mut denom_lcm = num_bigint::BigInt::from(1);
    for (_, c) in p.terms() {
        denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
    }
    let mut content = num_bigint::BigInt::from(0);
    for (_, c) in p.terms() {
        let int = c.numer() * (&denom_lcm / c.denom());
        content = num_integer::Integer::gcd(&content, &int);
    }
    p.scale(&Rat::new(denom_lcm, content))
}

fn smallest_two_sigmas(mx: &PolyMatrix, point: &[f64]) -> (f64, f64) {
    let data = mx.evaluate_f64(point);
    let fm = oracle::fmat::FMat {
        rows: mx.rows(),
        cols: mx.cols(),
        data,
    };
    let (evals, _) = oracle::fmat::jacobi_symmetric(&fm.gram());
    let s0 = evals[0].max(0.0).sqrt();
    let s1 = if evals.len() > 1 {
        evals[1].max(0.0).sqrt()
    } else {
        s0
    };
    (s0, s1)
}

fn frob(mx: &PolyMatrix, point: &[f64]) -> f64 {
    mx.evaluate_f64(point)
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
}

/// Builds the augmented map `(omega, g)` for an immersion problem:
/// `g` must have `m` variables (odd, at least 3) and `2m-2` components.
pub fn augmented_map(g: &PolynomialMap) -> Result<PolynomialMap, EngineError> {
    let m = g.nvars();
    let c = g.ncomponents();
    if m < 3 || m % 2 == 0 || c != 2 * m - 2 {
        return Err(EngineError::Shape {
            m,
            c,
            expected: "2m-2".into(),
        });
    }
    let vars = g.variables().clone();
    let mut comps = vec![omega(&vars)];
    comps.extend(g.components().iter().cloned());
    Ok(PolynomialMap::new(&vars, comps))
}

/// Outcome of the sphere-immersion test.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ImmersionCheck {
    pub immersion: bool,
    /// Approximate rank-drop point on the sphere, when one exists.
    pub witness: Option<Vec<f64>>,
    /// True when the exact unit-ideal check already certified emptiness
    /// over the complex numbers.
    pub exact_unit: bool,
}

/// Decides whether `g` restricted to the sphere of the given squared
/// radius is an immersion.
///
/// First tries the exact sufficient check (the rank-drop ideal plus the
/// sphere equation is the unit ideal); if that fails, counts the real
/// points of the system exactly and extracts a witness from the oracle.
pub fn immersion_check(
    g: &PolynomialMap,
    radius_sq: &Rat,
    seed: u64,
    tol: &Tolerances,
) -> Result<ImmersionCheck, EngineError> {
    if !radius_sq.is_positive() {
        return Err(EngineError::BadRegion(
            "sphere radius squared must be positive".into(),
        ));
    }
    let aug = augmented_map(g)?;
    let vars = aug.variables().clone();
    let m = aug.nvars();
    let daug = jacobian(&aug);
    let mut gens = daug.minors(m).expect("size in range");
    let sphere = &omega(&vars) - &Polynomial::constant(&vars, radius_sq.clone());
    gens.push(sphere.clone());
    let gb = reduced_groebner(&vars, &gens);
    if gb.is_unit_ideal() {
        return Ok(ImmersionCheck {
            immersion: true,
            witness: None,
            exact_unit: true,
        });
    }
    let qa = gb.quotient_basis()?;
    let tables = AlgebraTables::new(&qa);
    let real_count = signature(tables.theta1_gram())
        .expect("symmetric")
        .signature();
    if real_count == 0 {
        return Ok(ImmersionCheck {
            immersion: true,
            witness: None,
            exact_unit: false,
        });
    }
    // rank-drop points exist on the sphere: fetch a witness numerically
    let system = PolynomialMap::new(&vars, gens);
    let points = oracle::solve_singular_points(&tables, &system, &daug, seed, tol)?;
    Ok(ImmersionCheck {
        immersion: false,
        witness: points.first().map(|p| p.coordinates.clone()),
        exact_unit: false,
    })
}

/// Intersection number of `g` on the sphere of squared radius `radius_sq`,
/// computed as the signed cross-cap count of the augmented map over the
/// enclosed ball.
pub fn intersection_number(
    g: &PolynomialMap,
    radius_sq: &Rat,
    seed: u64,
    max_retries: u32,
    tol: &Tolerances,
) -> Result<(i64, ZetaResult), EngineError> {
    let check = immersion_check(g, radius_sq, seed, tol)?;
    if !check.immersion {
        return Err(EngineError::NotImmersion {
            witness: check.witness,
        });
    }
    let problem = build_problem(augmented_map(g)?)?;
    let result = zeta(
        &problem,
        &Region::ball(radius_sq.clone()),
        seed,
        max_retries,
        tol,
    )?;
    Ok((result.zeta, result))
}

/// Difference of intersection numbers over two spheres, computed in one
/// shot as the signed count over the annulus between them.
pub fn intersection_difference(
    g: &PolynomialMap,
    r1_sq: &Rat,
    r2_sq: &Rat,
    seed: u64,
    max_retries: u32,
    tol: &Tolerances,
) -> Result<(i64, ZetaResult), EngineError> {
    if r2_sq <= r1_sq {
        return Err(EngineError::BadRegion("need r1^2 < r2^2".into()));
    }
    for r in [r1_sq, r2_sq] {
        let check = immersion_check(g, r, seed, tol)?;
        if !check.immersion {
            return Err(EngineError::NotImmersion {
                witness: check.witness,
            });
        }
    }
    let problem = build_problem(augmented_map(g)?)?;
    let result = zeta(
        &problem,
        &Region::annulus(r1_sq.clone(), r2_sq.clone()),
        seed,
        max_retries,
        tol,
    )?;
    Ok((result.zeta, result))
}

/// Classifies each real cross-cap of the problem by the determinant
/// criterion and aggregates the totals.
pub fn classify(
    problem: &CrossCapProblem,
    seed: u64,
    tol: &Tolerances,
) -> Result<(Vec<oracle::SignedCrossCap>, oracle::Totals), EngineError> {
    Ok(oracle::classify_all(
        &problem.f,
        &problem.tables,
        &problem.mu,
        seed,
        tol,
    )?)
}

/// Sum of oracle signs over the points lying inside the region; the float
/// cross-check for `zeta`.
pub fn oracle_signed_sum_inside(
    problem: &CrossCapProblem,
    region: &Region,
    seed: u64,
    tol: &Tolerances,
) -> Result<i64, EngineError> {
    let u = region.polynomial(problem.f.variables())?;
    let (signed, _) = classify(problem, seed, tol)?;
    let mut acc = 0;
    for s in &signed {
        let value = u
            .evaluate_f64(&s.point.coordinates)
            .expect("lengths match");
        if value > 0.0 {
            acc += s.sign;
        }
    }
    Ok(acc)
}
