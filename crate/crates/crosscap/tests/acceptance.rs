//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Reference values live next to the checks that assert them; everything
//! exact is asserted as an exact integer, everything numeric carries its
//! stated tolerance.

mod support;

use crosscap::cli;
use crosscap::engine::{
    self, apply_target_transform, augmented_map, build_problem, check_generic, count_real,
    intersection_number, total_zeta, zeta, Region,
};
use crosscap::oracle::Tolerances;
use crosscap::rational::{rat, ratio, Rat};
use crosscap::trace_form::QMat;
use support::{fixture_path, load_map, map_from, point_norm};

#[test]
fn criterion_1_zeta_of_the_degree_three_surface_map() {
    let start = std::time::Instant::now();
    let path = fixture_path("surface_deg3.json");
    let (out, code) = cli::run([
        "zeta",
        path.as_str(),
        "--radius-squared",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{out}");
    let report: cli::Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.zeta, Some(2), "zeta over the ball of radius sqrt(3)");
    let (out, code) = cli::run([
        "zeta",
        path.as_str(),
        "--radius-squared",
        "100",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{out}");
    let report: cli::Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.zeta, Some(1), "zeta over the ball of radius 10");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() <= 120,
        "both runs should fit the time budget, took {elapsed:?}"
    );
    println!("acceptance 1 PASS: zeta = 2 at r^2 = 3 and 1 at r^2 = 100 ({elapsed:?})");
}

#[test]
fn criterion_2_eleven_crosscaps_split_six_five() {
    let problem = build_problem(load_map("surface_deg3.json")).unwrap();
    assert_eq!(count_real(&problem), 11);
    let (signed, totals) = engine::classify(&problem, 0, &Tolerances::default()).unwrap();
    assert_eq!(totals.count, 11);
    assert_eq!(totals.positives, 6);
    assert_eq!(totals.negatives, 5);
    for s in &signed {
        assert!(
            s.point.residual < 1e-8,
            "residual {} at {:?}",
            s.point.residual,
            s.point.coordinates
        );
    }
    println!("acceptance 2 PASS: count_real = 11, split 6 positive / 5 negative, residuals < 1e-8");
}

#[test]
fn criterion_3_surface_map_is_generic() {
    let path = fixture_path("surface_deg3.json");
    let (out, code) = cli::run(["generic", path.as_str(), "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let report: cli::Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.generic, Some(true));
    println!("acceptance 3 PASS: generic = true with exit code 0");
}

#[test]
fn criterion_4_fivefold_stress_case() {
    let start = std::time::Instant::now();
    let problem = build_problem(load_map("fivefold.json")).unwrap();
    assert_eq!(count_real(&problem), 3);
    let tol = Tolerances::default();
    let expectations = [(ratio(1, 100), 0i64), (rat(4), -1), (rat(1_000_000), 1)];
    for (radius_sq, expected) in expectations {
        let r = zeta(&problem, &Region::ball(radius_sq.clone()), 0, 8, &tol).unwrap();
        assert_eq!(
            r.zeta, expected,
            "zeta over the ball with squared radius {radius_sq}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 1800,
        "stress case exceeded its 30 minute allowance: {elapsed:?}"
    );
    println!(
        "acceptance 4 PASS: count_real = 3, zeta = 0 / -1 / 1 at r^2 = 1/100, 4, 10^6 ({elapsed:?})"
    );
}

#[test]
fn criterion_5_sphere_immersion_intersection_numbers() {
    let g = load_map("sphere_immersion.json");
    let tol = Tolerances::default();
    let aug = augmented_map(&g).unwrap();
    let problem = build_problem(aug).unwrap();
    let (signed, totals) = engine::classify(&problem, 0, &tol).unwrap();
    assert_eq!(
        (totals.count, totals.positives, totals.negatives, totals.signed_sum),
        (8, 5, 3, 2)
    );

    let path = fixture_path("sphere_immersion.json");
    let (out, code) = cli::run([
        "inumber",
        path.as_str(),
        "--auto-large-radius",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{out}");
    let report: cli::Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.intersection_number, Some(2));

    // sampled admissible radii: below the closest singular point, between
    // consecutive ones, and beyond the farthest
    let mut norms: Vec<f64> = signed.iter().map(|s| point_norm(&s.point.coordinates)).collect();
    norms.sort_by(f64::total_cmp);
    let mut radii: Vec<Rat> = vec![ratio(1, 4)];
    for pair in norms.windows(2) {
        let mid = (pair[0] + pair[1]) / 2.0;
        if mid - pair[0] > 1e-3 {
            let q = (mid * 1000.0).round() as i64;
            radii.push(ratio(q * q, 1_000_000));
        }
    }
    radii.push(engine::auto_radius_sq(
        &problem.oracle_points(0, &tol).unwrap(),
    ));
    let mut sampled = 0;
    for radius_sq in &radii {
        match intersection_number(&g, radius_sq, 0, 8, &tol) {
            Ok((i, _)) => {
                assert!(
                    (-3..=5).contains(&i),
                    "intersection number {i} out of [-3, 5] at r^2 = {radius_sq}"
                );
                sampled += 1;
            }
            Err(engine::EngineError::NotImmersion { .. }) => {
                // a sampled radius may graze a singular point; skip it
            }
            Err(other) => panic!("unexpected error at r^2 = {radius_sq}: {other}"),
        }
    }
    assert!(sampled >= 6, "too few admissible radii sampled: {sampled}");
    println!(
        "acceptance 5 PASS: totals (8, 5, 3, 2), auto-radius intersection number 2, {sampled} sampled radii within [-3, 5]"
    );
}

#[test]
fn criterion_6_normal_form_has_one_negative_crosscap() {
    let tol = Tolerances::default();
    for (tag, f) in [
        (
            "m = 3",
            map_from(&["x", "y", "z"], &["x^2", "y", "z", "x*y", "x*z"]),
        ),
        (
            "m = 5",
            map_from(
                &["x1", "x2", "x3", "x4", "x5"],
                &[
                    "x1^2", "x2", "x3", "x4", "x5", "x1*x2", "x1*x3", "x1*x4", "x1*x5",
                ],
            ),
        ),
    ] {
        let problem = build_problem(f).unwrap();
        assert_eq!(count_real(&problem), 1, "{tag}");
        let (signed, totals) = engine::classify(&problem, 0, &tol).unwrap();
        assert_eq!(totals.count, 1, "{tag}");
        assert_eq!(signed[0].sign, -1, "{tag}");
        let r = zeta(&problem, &Region::ball(rat(1)), 0, 8, &tol).unwrap();
        assert_eq!(r.zeta, -1, "{tag}");
    }
    println!("acceptance 6 PASS: normal form m = 3 and m = 5 each give one negative cross-cap, zeta = -1");
}

#[test]
fn criterion_7_property_suite_on_random_maps() {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let tol = Tolerances::default();
    let vars = ["x", "y", "z"];
    let mut instances = 0usize;
    let mut hypothesis_failures: Vec<String> = Vec::new();
    let mut attempts = 0usize;

    while instances < 20 && attempts < 200 {
        attempts += 1;
        let degree = if instances % 2 == 0 { 2 } else { 3 };
        let f = random_dense_map(&mut rng, &vars, degree);
        let Ok(problem) = build_problem(f.clone()) else {
            continue; // non-isolated singular set, draw again
        };
        if problem.dimension() == 0 {
            continue; // no singular points at all, draw again
        }
        let points = match problem.oracle_points(instances as u64, &tol) {
            Ok(p) => p,
            Err(e) => {
                hypothesis_failures.push(format!("instance {instances}: oracle failed: {e}"));
                instances += 1;
                continue;
            }
        };

        // (e) exact real count agrees with the oracle
        assert_eq!(
            count_real(&problem),
            points.len() as i64,
            "count_real mismatch on instance {instances}"
        );

        // radii that dodge the points: between them and beyond the farthest
        let mut norms: Vec<f64> = points.iter().map(|p| point_norm(&p.coordinates)).collect();
        norms.sort_by(f64::total_cmp);
        let outer = engine::auto_radius_sq(&points);
        let inner = inner_radius(&norms);
        let seed = 1000 + instances as u64;

        let run = || -> Result<(), engine::EngineError> {
            let ball_outer = zeta(&problem, &Region::ball(outer.clone()), seed, 8, &tol)?;
            // (a) parity of the two signatures
            assert_eq!(
                (ball_outer.sig_delta + ball_outer.sig_u_delta) % 2,
                0,
                "parity violated on instance {instances}"
            );
            // (c) exact count equals the oracle signed sum in the region
            let oracle_sum = engine::oracle_signed_sum_inside(
                &problem,
                &Region::ball(outer.clone()),
                seed,
                &tol,
            )?;
            assert_eq!(
                ball_outer.zeta, oracle_sum,
                "oracle cross-check failed on instance {instances}"
            );

            if let Some(inner_sq) = &inner {
                // (b) additivity over ball + annulus
                let ball_inner =
                    zeta(&problem, &Region::ball(inner_sq.clone()), seed, 8, &tol)?;
                let ring = zeta(
                    &problem,
                    &Region::annulus(inner_sq.clone(), outer.clone()),
                    seed,
                    8,
                    &tol,
                )?;
                assert_eq!(
                    ball_outer.zeta,
                    ball_inner.zeta + ring.zeta,
                    "additivity violated on instance {instances}"
                );
            }

            // (d) rotation invariance and reflection antisymmetry
            let n = 2 * 3 - 1;
            let rot = random_rotation_like(&mut rng.clone(), n);
            let rotated = build_problem(apply_target_transform(&f, &rot))?;
            let rot_zeta = zeta(&rotated, &Region::ball(outer.clone()), seed, 8, &tol)?;
            assert_eq!(
                rot_zeta.zeta, ball_outer.zeta,
                "rotation invariance violated on instance {instances}"
            );
            let mut refl = QMat::identity(n);
            refl[(0, 0)] = -Rat::from_integer(1.into());
            let reflected = build_problem(apply_target_transform(&f, &refl))?;
            let refl_zeta = zeta(&reflected, &Region::ball(outer.clone()), seed, 8, &tol)?;
            assert_eq!(
                refl_zeta.zeta, -ball_outer.zeta,
                "reflection antisymmetry violated on instance {instances}"
            );
            Ok(())
        };
        match run() {
            Ok(()) => {}
            Err(
                e @ (engine::EngineError::HypothesisFailure { .. }
                | engine::EngineError::DegenerateForm { .. }
                | engine::EngineError::BoundaryHit { .. }),
            ) => {
                hypothesis_failures.push(format!("instance {instances}: {e}"));
            }
            Err(other) => panic!("instance {instances}: unexpected error {other}"),
        }
        instances += 1;
    }

    assert_eq!(instances, 20, "could not build 20 instances in {attempts} draws");
    for line in &hypothesis_failures {
        println!("acceptance 7 REPORT: hypothesis failure, not silently skipped -> {line}");
    }
    assert!(
        hypothesis_failures.len() <= 5,
        "too many hypothesis failures: {hypothesis_failures:?}"
    );
    println!(
        "acceptance 7 PASS: 20 random maps, properties (a)-(e) hold on every instance with passing hypotheses ({} reported failures)",
        hypothesis_failures.len()
    );
}

fn random_dense_map(
    rng: &mut rand_chacha::ChaCha8Rng,
    names: &[&str],
    degree: u32,
) -> crosscap::polynomial::PolynomialMap {
    use crosscap::monomial::Monomial;
    use crosscap::polynomial::{Polynomial, Variables};
    use rand::Rng;
    let vars = Variables::new(names).unwrap();
    let m = names.len();
    let mut monomials = Vec::new();
    for a in 0..=degree {
        for b in 0..=degree - a {
            for c in 0..=degree - a - b {
                monomials.push(Monomial::from_exps(&[a, b, c]));
            }
        }
    }
    let _ = m;
    let comps = (0..5)
        .map(|_| {
            Polynomial::from_terms(
                &vars,
                monomials.iter().map(|mono| {
                    let c: i64 = rng.gen_range(-3..=3);
                    (mono.clone(), rat(c))
                }),
            )
        })
        .collect();
    crosscap::polynomial::PolynomialMap::new(&vars, comps)
}

fn inner_radius(norms: &[f64]) -> Option<Rat> {
    // a squared radius strictly between two consecutive point norms (or
    // below the smallest), quantized so the region misses every point
    if norms.is_empty() {
        return None;
    }
    let target = if norms.len() == 1 {
        norms[0] / 2.0
    } else {
        (norms[0] + norms[1]) / 2.0
    };
    if target < 1e-3 {
        return None;
    }
    let q = (target * 1000.0).round() as i64;
    if q == 0 {
        return None;
    }
    Some(ratio(q * q, 1_000_000))
}

fn random_rotation_like(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> QMat {
    use rand::Rng;
    // determinant +1 integer matrix from a few row additions
    let mut m = QMat::identity(n);
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
        for k in 0..n {
            let add = &m[(j, k)] * &rat(c);
            let cur = &m[(i, k)] + &add;
            m[(i, k)] = cur;
        }
    }
    m
}

#[test]
fn criterion_8_exact_layer_unit_oracles() {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);

    // signature vs an independent characteristic-polynomial bisection count
    let mut checked = 0;
    for trial in 0..40 {
        let n = 1 + (trial % 8);
        let mut g = QMat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let num: i64 = rng.gen_range(-6..=6);
                let den: i64 = rng.gen_range(1..=3);
                let v = ratio(num, den);
                g[(i, j)] = v.clone();
                g[(j, i)] = v;
            }
        }
        let inertia = crosscap::trace_form::signature(&g).unwrap();
        let (op, om, oz) = oracle::inertia_by_bisection(&g);
        assert_eq!(
            (inertia.n_plus, inertia.n_minus, inertia.n_zero),
            (op, om, oz),
            "inertia oracle mismatch on trial {trial}"
        );
        checked += 1;
    }
    // crafted degenerate shapes
    for diag in [vec![0i64, 0, 0], vec![1, 1, -1], vec![2, 0, -2], vec![5, 5, 5]] {
        let n = diag.len();
        let mut g = QMat::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            g[(i, i)] = rat(*d);
        }
        let inertia = crosscap::trace_form::signature(&g).unwrap();
        let (op, om, oz) = oracle::inertia_by_bisection(&g);
        assert_eq!((inertia.n_plus, inertia.n_minus, inertia.n_zero), (op, om, oz));
        checked += 1;
    }

    // Groebner canonicity under shuffles and rescalings
    let vars = crosscap::polynomial::Variables::new(&["x", "y", "z"]).unwrap();
    let parse = |s: &str| crosscap::parser::parse_polynomial(s, &vars).unwrap();
    let gens: Vec<_> = [
        "x^2 + y*z - 1",
        "y^2 - x*z",
        "z^3 - x - y",
        "x*y*z - z",
    ]
    .iter()
    .map(|s| parse(s))
    .collect();
    let reference = crosscap::reduced_groebner(&vars, &gens);
    for round in 0..6 {
        let mut order: Vec<usize> = (0..gens.len()).collect();
        for i in (1..order.len()).rev() {
            let j = rng.gen_range(0..=i);
            order.swap(i, j);
        }
        let scale = ratio(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let shuffled: Vec<_> = order.iter().map(|&i| gens[i].scale(&scale)).collect();
        assert_eq!(
            crosscap::reduced_groebner(&vars, &shuffled),
            reference,
            "canonicity failed on round {round}"
        );
    }

    // normal-form idempotence on random polynomials
    let gb = reference;
    for _ in 0..30 {
        let p = random_poly(&mut rng, &vars, 4);
        let once = gb.normal_form(&p);
        assert_eq!(gb.normal_form(&once), once, "normal form not idempotent");
    }
    println!(
        "acceptance 8 PASS: {checked} signature oracles, 6 canonicity shuffles, 30 idempotence checks"
    );
}

fn random_poly(
    rng: &mut rand_chacha::ChaCha8Rng,
    vars: &crosscap::polynomial::Variables,
    max_degree: u32,
) -> crosscap::Polynomial {
    use rand::Rng;
    let mut terms = Vec::new();
    for _ in 0..12 {
        let exps: Vec<u32> = (0..vars.len())
            .map(|_| rng.gen_range(0..=max_degree) / 2)
            .collect();
        let c: i64 = rng.gen_range(-5..=5);
        terms.push((crosscap::Monomial::from_exps(&exps), rat(c)));
    }
    crosscap::Polynomial::from_terms(vars, terms)
}

/// Independent inertia oracle: interpolate the characteristic polynomial
/// from exact determinant evaluations, then count roots by sign with a
/// Sturm chain refined by interval bisection. Falls back to an exact
/// congruence diagonalization when the spectrum is not simple.
mod oracle {
    use crosscap::rational::{rat, Rat};
    use crosscap::trace_form::QMat;
    use num_traits::{One, Signed, Zero};

    /// Exact determinant by fraction-free Gaussian elimination.
    fn det(rows: &mut Vec<Vec<Rat>>) -> Rat {
        let n = rows.len();
        let mut result = Rat::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
                return Rat::zero();
            };
            if p != k {
                rows.swap(k, p);
                result = -result;
            }
            result *= rows[k][k].clone();
            for r in k + 1..n {
                if rows[r][k].is_zero() {
                    continue;
                }
                let f = &rows[r][k] / &rows[k][k];
                for c in k..n {
                    let d = &f * &rows[k][c];
                    rows[r][c] = &rows[r][c] - &d;
                }
            }
        }
        result
    }

    /// Coefficients of `det(tI - G)` (degree n, leading 1, index 0 =
    /// constant term) by Newton interpolation at integer nodes.
    fn charpoly(g: &QMat) -> Vec<Rat> {
        let n = g.rows();
        let nodes: Vec<Rat> = (0..=n as i64).map(rat).collect();
        let values: Vec<Rat> = nodes
            .iter()
            .map(|t| {
                let mut rows: Vec<Vec<Rat>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i == j {
                                    t - &g[(i, j)]
                                } else {
                                    -g[(i, j)].clone()
                                }
                            })
                            .collect()
                    })
                    .collect();
                det(&mut rows)
            })
            .collect();
        // divided differences
        let mut table = values;
        let mut coeffs_newton = vec![table[0].clone()];
        for level in 1..=n {
            for i in 0..table.len() - 1 {
                let num = &table[i + 1] - &table[i];
                let den = &nodes[i + level] - &nodes[i];
                table[i] = num / den;
            }
            table.pop();
            coeffs_newton.push(table[0].clone());
        }
        // expand the Newton form into monomial coefficients
        let mut coeffs = vec![Rat::zero(); n + 1];
        let mut basis = vec![Rat::one()]; // product of (t - nodes[k])
        for (k, cn) in coeffs_newton.iter().enumerate() {
            for (d, b) in basis.iter().enumerate() {
                coeffs[d] += cn * b;
            }
            if k < n {
                // basis *= (t - nodes[k])
                let mut next = vec![Rat::zero(); basis.len() + 1];
                for (d, b) in basis.iter().enumerate() {
                    next[d + 1] += b.clone();
                    next[d] -= &nodes[k] * b;
                }
                basis = next;
            }
        }
        coeffs
    }

    fn eval(p: &[Rat], x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in p.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    fn derivative(p: &[Rat]) -> Vec<Rat> {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect()
    }

    fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
        while p.len() > 1 && p.last().unwrap().is_zero() {
            p.pop();
        }
        p
    }

    /// Remainder of polynomial division.
    fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut r: Vec<Rat> = a.to_vec();
        let db = b.len() - 1;
        let lead = b.last().unwrap();
        while r.len() - 1 >= db && r.len() > 1 {
            let dr = r.len() - 1;
            let f = r.last().unwrap() / lead;
            for k in 0..=db {
                let delta = &f * &b[k];
                r[dr - db + k] = &r[dr - db + k] - &delta;
            }
            r = trim(r);
            if r.len() == 1 && r[0].is_zero() {
                break;
            }
        }
        r
    }

    fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
        let mut chain = vec![trim(p.to_vec()), trim(derivative(p))];
        loop {
            let last = &chain[chain.len() - 1];
            if last.len() == 1 {
                break;
            }
            let prev = &chain[chain.len() - 2];
            let r = rem(prev, last);
            if r.len() == 1 && r[0].is_zero() {
                break;
            }
            chain.push(r.iter().map(|c| -c.clone()).collect());
        }
        chain
    }

    fn variations(chain: &[Vec<Rat>], x: &Rat) -> usize {
        let mut signs = Vec::new();
        for p in chain {
            let v = eval(p, x);
            if !v.is_zero() {
                signs.push(v.is_positive());
            }
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn distinct_roots_in(chain: &[Vec<Rat>], a: &Rat, b: &Rat) -> usize {
        variations(chain, a) - variations(chain, b)
    }

    /// Counts roots in `(lo, hi]` by bisecting until each piece isolates a
    /// single distinct root; valid as a multiplicity count only for
    /// square-free polynomials.
    fn bisect_count(chain: &[Vec<Rat>], lo: &Rat, hi: &Rat, depth: usize) -> usize {
        let k = distinct_roots_in(chain, lo, hi);
        if k == 0 {
            return 0;
        }
        if k == 1 || depth == 0 {
            return k;
        }
        let mid = (lo + hi) / rat(2);
        bisect_count(chain, lo, &mid, depth - 1) + bisect_count(chain, &mid, hi, depth - 1)
    }

    pub fn inertia_by_bisection(g: &QMat) -> (usize, usize, usize) {
        let n = g.rows();
        if n == 0 {
            return (0, 0, 0);
        }
        let p = charpoly(g);
        let n_zero = p.iter().take_while(|c| c.is_zero()).count();
        let q: Vec<Rat> = p[n_zero..].to_vec();
        if q.len() == 1 {
            return (0, 0, n_zero);
        }
        // square-free test: all eigenvalues simple?
        let chain = sturm_chain(&q);
        let gcd_nontrivial = chain.last().map(|c| c.len() > 1).unwrap_or(false);
        if gcd_nontrivial {
            return inertia_by_congruence(g);
        }
        // Cauchy bound
        let lead = q.last().unwrap();
        let mut bound = Rat::one();
        for c in &q[..q.len() - 1] {
            let ratio = (c / lead).abs();
            if ratio > bound {
                bound = ratio;
            }
        }
        bound += Rat::one();
        // q has a nonzero constant term, so (-B, 0] holds exactly the
        // negative roots
        let zero = Rat::zero();
        let n_plus = bisect_count(&chain, &zero, &bound, 64);
        let n_minus = bisect_count(&chain, &(-bound.clone()), &zero, 64);
        (n_plus, n_minus, n_zero)
    }

    /// Exact symmetric congruence diagonalization, for spectra with
    /// repeated eigenvalues.
    pub fn inertia_by_congruence(g: &QMat) -> (usize, usize, usize) {
        let n = g.rows();
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| g[(i, j)].clone()).collect())
            .collect();
        let (mut plus, mut minus, mut zero) = (0usize, 0usize, 0usize);
        for k in 0..n {
            if a[k][k].is_zero() {
                // bring a nonzero diagonal entry (or create one) into place
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    a.swap(k, j);
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some((i, j)) = nonzero_off_diagonal(&a, k) {
                    // row/col addition makes the diagonal nonzero
                    for c in 0..n {
                        let add = a[j][c].clone();
                        a[i][c] += add;
                    }
                    for r in 0..n {
                        let add = a[r][j].clone();
                        a[r][i] += add;
                    }
                    if i != k {
                        a.swap(k, i);
                        for row in a.iter_mut() {
                            row.swap(k, i);
                        }
                    }
                } else {
                    zero += n - k;
                    break;
                }
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            // congruence elimination: clear row k, then column k, using the
            // untouched mirror entries so the result is E A E^T
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &pivot;
                for c in 0..n {
                    let d = &f * &a[k][c];
                    a[r][c] = &a[r][c] - &d;
                }
            }
            for c in k + 1..n {
                if a[k][c].is_zero() {
                    continue;
                }
                let f = &a[k][c] / &pivot;
                for r in 0..n {
                    let d = &f * &a[r][k];
                    a[r][c] = &a[r][c] - &d;
                }
            }
        }
        (plus, minus, zero)
    }

    fn nonzero_off_diagonal(a: &[Vec<Rat>], k: usize) -> Option<(usize, usize)> {
        let n = a.len();
        for i in k..n {
            for j in i + 1..n {
                if !a[i][j].is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}
