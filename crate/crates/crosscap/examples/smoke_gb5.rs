use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::parser::parse_polynomial;
use crosscap::matrix::jacobian;
use crosscap::groebner::reduced_groebner;

fn main() {
    let v = Variables::new(&["s", "t", "x", "y", "z"]).unwrap();
    let comps = [
        "y",
        "z",
        "t",
        "20*x^2+17*s*z+x",
        "13*s*y+13*s*z+5*t",
        "25*s*t+4*x^2+28*z",
        "3*x^2+19*y*z+22*s",
        "11*t*s^2+8*t^2*z+x*z",
        "27*t*x*y+9*s*x*z+20*s*t",
    ];
    let f = PolynomialMap::new(
        &v,
        comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect(),
    );
    let df = jacobian(&f);
    let t0 = std::time::Instant::now();
    let minors = df.minors(5).unwrap();
    println!("minors: {} in {:?}", minors.len(), t0.elapsed());
    let nonzero = minors.iter().filter(|m| !m.is_zero()).count();
    println!("nonzero: {nonzero}");
    let t1 = std::time::Instant::now();
    let gb = reduced_groebner(&v, &minors);
    println!("gb size: {} in {:?}", gb.generators().len(), t1.elapsed());
    let qa = gb.quotient_basis().unwrap();
    println!("dim A = {}", qa.dimension());
}
