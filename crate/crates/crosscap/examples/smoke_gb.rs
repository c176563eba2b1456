use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::parser::parse_polynomial;
use crosscap::matrix::jacobian;
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
    let f = PolynomialMap::new(
        &v,
        comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect(),
    );
    let df = jacobian(&f);
    let t0 = std::time::Instant::now();
    let minors = df.minors(3).unwrap();
    println!("minors: {} in {:?}", minors.len(), t0.elapsed());
    let t1 = std::time::Instant::now();
    let gb = reduced_groebner(&v, &minors);
    println!("gb size: {} in {:?}", gb.generators().len(), t1.elapsed());
    let qa = gb.quotient_basis().unwrap();
    println!("dim A = {}", qa.dimension());
}
