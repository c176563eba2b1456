use crosscap::engine::*;
use crosscap::oracle::Tolerances;
use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::rational::{rat, ratio, Rat};

fn main() {
    let v = Variables::new(&["x", "y", "z"]).unwrap();
    let comps = [
        "-3*y^2+5*y*z-x+2",
        "-4*x^2+z^2+9*y-6*z+5",
        "4*x^2*z-2*x^2+2*x*y-y-3",
        "3*y^2*z+x*y-4*y*z+4*x-5*y-5",
    ];
    let g = PolynomialMap::new(&v, comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect());
    let tol = Tolerances::default();
    let aug = augmented_map(&g).unwrap();
    let p = build_problem(aug).unwrap();
    println!("dim A = {}, count_real = {}", p.dimension(), count_real(&p));
    let (signed, totals) = classify(&p, 0, &tol).unwrap();
    println!("totals {:?}", totals);
    let mut norms: Vec<f64> = Vec::new();
    for s in &signed {
        let norm: f64 = s.point.coordinates.iter().map(|x| x * x).sum::<f64>().sqrt();
        norms.push(norm);
        println!("  {:+} |p| = {:.6} at {:?}", s.sign, norm, s.point.coordinates);
    }
    // auto large radius intersection number
    let pts = p.oracle_points(0, &tol).unwrap();
    let big = auto_radius_sq(&pts);
    println!("auto radius^2 = {}", big);
    let (i, _) = intersection_number(&g, &big, 0, 8, &tol).unwrap();
    println!("I(g|S(R)) = {i}");
    // sampled admissible radii: midpoints between consecutive norms + small + large
    norms.sort_by(f64::total_cmp);
    let mut radii: Vec<Rat> = vec![ratio(1, 4)];
    for w in norms.windows(2) {
        let mid = (w[0] + w[1]) / 2.0;
        if mid - w[0] > 1e-3 {
            let q = (mid * 1000.0).round() as i64;
            radii.push(ratio(q * q, 1_000_000));
        }
    }
    radii.push(big.clone());
    for r in &radii {
        match intersection_number(&g, r, 0, 8, &tol) {
            Ok((i, _)) => println!("  I at r^2 = {} -> {}", r, i),
            Err(e) => println!("  I at r^2 = {} -> error {}", r, e),
        }
    }
    // a bad radius: exactly a point norm (squared, rounded) should fail immersion or boundary
    let bad = norms[1];
    let q = (bad * 10000.0).round() as i64;
    let bad_r = ratio(q * q, 100_000_000);
    match intersection_number(&g, &bad_r, 0, 8, &tol) {
        Ok((i, _)) => println!("bad radius gave I = {i} (point not exactly on sphere)"),
        Err(e) => println!("bad radius error: {e}"),
    }
}
