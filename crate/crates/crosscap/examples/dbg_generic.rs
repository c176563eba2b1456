use crosscap::engine::*;
use crosscap::matrix::{jacobian, PolyMatrix};
use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::groebner::reduced_groebner;

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
    let p = build_problem(f).unwrap();
    let gb = p.groebner_basis();

    let t = std::time::Instant::now();
    let sub = p.jacobian().minors(2).unwrap();
    println!("2-minors of Df: {} in {:?}", sub.len(), t.elapsed());
    let t = std::time::Instant::now();
    let mut gens = gb.generators().to_vec();
    for q in &sub { let nf = gb.normal_form(q); if !nf.is_zero() { gens.push(nf); } }
    println!("nf pass: {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let u = reduced_groebner(&v, &gens);
    println!("GB(I + 2minors): unit={} in {:?}", u.is_unit_ideal(), t.elapsed());

    let t = std::time::Instant::now();
    let dmu = jacobian(p.minor_map());
    println!("dmu {}x{} in {:?}", dmu.rows(), dmu.cols(), t.elapsed());
    let t = std::time::Instant::now();
    let mut red = Vec::new();
    for i in 0..dmu.rows() { for j in 0..dmu.cols() { red.push(gb.normal_form(dmu.entry(i, j))); } }
    println!("entry NF in {:?}", t.elapsed());
    let rdmu = PolyMatrix::new(dmu.rows(), dmu.cols(), red).unwrap();
    let t = std::time::Instant::now();
    let tm = rdmu.minors(3).unwrap();
    println!("3-minors of reduced dmu: {} in {:?}", tm.len(), t.elapsed());
    let t = std::time::Instant::now();
    let mut gens = gb.generators().to_vec();
    for q in &tm { let nf = gb.normal_form(q); if !nf.is_zero() { gens.push(nf); } }
    println!("minor NF pass in {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let u = reduced_groebner(&v, &gens);
    println!("GB(I + trans): unit={} in {:?}", u.is_unit_ideal(), t.elapsed());
}
