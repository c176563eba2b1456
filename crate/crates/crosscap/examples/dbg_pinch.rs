use crosscap::engine::*;
use crosscap::oracle::Tolerances;
use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::rational::rat;

fn main() {
    let v = Variables::new(&["x", "y", "z"]).unwrap();
    let comps = ["x - 1", "z", "y^2 + y*z", "y*x - y"];
    let g = PolynomialMap::new(&v, comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect());
    let tol = Tolerances::default();
    for r in [1i64, 4, 9] {
        match immersion_check(&g, &rat(r), 0, &tol) {
            Ok(c) => println!("r^2 = {r}: immersion = {} exact_unit = {} witness = {:?}", c.immersion, c.exact_unit, c.witness),
            Err(e) => println!("r^2 = {r}: error {e}"),
        }
    }
    let aug = augmented_map(&g).unwrap();
    match build_problem(aug) {
        Ok(p) => {
            println!("aug dim A = {} count_real = {}", p.dimension(), count_real(&p));
            let pts = p.oracle_points(0, &tol).unwrap();
            for q in &pts { println!("  pt {:?}", q.coordinates); }
        }
        Err(e) => println!("aug problem error: {e}"),
    }
}
