use crosscap::engine::*;
use crosscap::oracle::Tolerances;
use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::rational::rat;

fn main() {
    let v = Variables::new(&["x", "y", "z"]).unwrap();
    let comps = [
        "12*y^2+z",
        "6*x^2+y^2+6*y",
        "18*x*y+13*y^2+9*x",
        "8*x^2*z+10*x*z^2+5*x^2+3*x*z",
        "x^2*y+4*x*y*z+y*z+4*z^2",
    ];
    let f = PolynomialMap::new(&v, comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect());
    let t0 = std::time::Instant::now();
    let p = build_problem(f).unwrap();
    println!("dim A = {} ({:?})", p.dimension(), t0.elapsed());
    let tol = Tolerances::default();

    let t = std::time::Instant::now();
    println!("count_real = {} ({:?})", count_real(&p), t.elapsed());

    let t = std::time::Instant::now();
    let pts = p.oracle_points(0, &tol).unwrap();
    println!("oracle points: {} ({:?})", pts.len(), t.elapsed());
    for q in &pts {
        let norm: f64 = q.coordinates.iter().map(|x| x * x).sum::<f64>().sqrt();
        println!(
            "  {:>8.5?} |p| = {:.4} res = {:.2e} scaled = {:.2e} cond = {:.2e}",
            q.coordinates, norm, q.residual, q.residual_scaled, q.condition
        );
    }

    let t = std::time::Instant::now();
    let r3 = zeta(&p, &Region::ball(rat(3)), 0, 8, &tol).unwrap();
    println!("zeta(B(sqrt3)) = {} sig ({}, {}) retries {} ({:?})", r3.zeta, r3.sig_delta, r3.sig_u_delta, r3.retries_used, t.elapsed());

    let t = std::time::Instant::now();
    let r100 = zeta(&p, &Region::ball(rat(100)), 0, 8, &tol).unwrap();
    println!("zeta(B(10)) = {} sig ({}, {}) ({:?})", r100.zeta, r100.sig_delta, r100.sig_u_delta, t.elapsed());

    let t = std::time::Instant::now();
    let (signed, totals) = classify(&p, 0, &tol).unwrap();
    println!("classified: {:?} ({:?})", totals, t.elapsed());
    for s in &signed {
        println!("  sign {:+} det {:.3e} at {:?}", s.sign, s.det_value, s.point.coordinates);
    }

    let t = std::time::Instant::now();
    let g = check_generic(&p, 0, &tol).unwrap();
    println!("generic = {} exact ({:?}, {:?}) ({:?})", g.generic, g.rank_drop_exact, g.transversality_exact, t.elapsed());

    let tz = total_zeta(&p, 0, 8, &tol).unwrap();
    println!("total = {:?} radius_sq = {}", (tz.zeta, tz.positives, tz.negatives), tz.radius_sq);
}
