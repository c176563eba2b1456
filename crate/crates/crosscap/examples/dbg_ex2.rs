use crosscap::engine::*;
use crosscap::oracle::Tolerances;
use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::rational::{rat, ratio};

fn main() {
    let v = Variables::new(&["s", "t", "x", "y", "z"]).unwrap();
    let comps = [
        "y", "z", "t",
        "20*x^2+17*s*z+x",
        "13*s*y+13*s*z+5*t",
        "25*s*t+4*x^2+28*z",
        "3*x^2+19*y*z+22*s",
        "11*t*s^2+8*t^2*z+x*z",
        "27*t*x*y+9*s*x*z+20*s*t",
    ];
    let f = PolynomialMap::new(&v, comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect());
    let t0 = std::time::Instant::now();
    let p = build_problem(f).unwrap();
    println!("dim A = {} ({:?})", p.dimension(), t0.elapsed());
    println!("count_real = {}", count_real(&p));
    let tol = Tolerances::default();
    let pts = p.oracle_points(0, &tol).unwrap();
    for q in &pts {
        let norm: f64 = q.coordinates.iter().map(|x| x * x).sum::<f64>().sqrt();
        println!("  {:?} |p| = {:.4} res = {:.2e} scaled = {:.2e}", q.coordinates, norm, q.residual, q.residual_scaled);
    }
    for (tag, r) in [("1/100", ratio(1, 100)), ("4", rat(4)), ("10^6", rat(1_000_000))] {
        let t = std::time::Instant::now();
        match zeta(&p, &Region::ball(r), 0, 8, &tol) {
            Ok(res) => println!("zeta(r^2={tag}) = {} sig ({}, {}) retries {} ({:?})", res.zeta, res.sig_delta, res.sig_u_delta, res.retries_used, t.elapsed()),
            Err(e) => println!("zeta(r^2={tag}) ERROR: {e}"),
        }
    }
    let (signed, totals) = classify(&p, 0, &tol).unwrap();
    println!("totals {:?}", totals);
    for s in &signed { println!("  {:+} at {:?}", s.sign, s.point.coordinates); }
}
