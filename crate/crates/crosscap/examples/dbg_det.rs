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
    let p = build_problem(f).unwrap();
    let tol = Tolerances::default();
    println!("count_real = {}", count_real(&p));
    let pts = p.oracle_points(0, &tol).unwrap();
    println!("{} oracle points:", pts.len());
    for q in &pts {
        let norm: f64 = q.coordinates.iter().map(|x| x * x).sum::<f64>().sqrt();
        println!("  |p| = {:.6}  {:?}", norm, q.coordinates);
    }
    // exact sign of each point via annulus/ball isolation
    let mut norms: Vec<f64> = pts.iter().map(|q| q.coordinates.iter().map(|x| x*x).sum::<f64>().sqrt()).collect();
    norms.sort_by(f64::total_cmp);
    // cuts between consecutive norms
    let mut cuts = vec![ratio(1, 100)];
    for w in norms.windows(2) {
        let mid = (w[0] + w[1]) / 2.0;
        let midr = (mid * 1000.0).round() as i64;
        cuts.push(ratio(midr * midr, 1_000_000));
    }
    cuts.push(rat(1_000_000));
    let mut prev = 0i64;
    for (i, c) in cuts.iter().enumerate() {
        let r = zeta(&p, &Region::ball(c.clone()), 0, 8, &tol).unwrap();
        if i > 0 {
            println!("point {} (|p| = {:.4}): exact sign {:+}", i - 1, norms[i - 1], r.zeta - prev);
        }
        prev = r.zeta;
    }
}
