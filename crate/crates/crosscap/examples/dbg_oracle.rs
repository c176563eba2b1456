use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::parser::parse_polynomial;
use crosscap::groebner::reduced_groebner;
use crosscap::trace_form::AlgebraTables;
use crosscap::matrix::jacobian;
use crosscap::oracle::{solve_singular_points, Tolerances};

fn main() {
    let v = Variables::new(&["x", "y"]).unwrap();
    let comps = ["x^3 - 3*x + 1", "y^2 - x"];
    let mu = PolynomialMap::new(&v, comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect());
    let gb = reduced_groebner(&v, mu.components());
    let qa = gb.quotient_basis().unwrap();
    println!("dim A = {}", qa.dimension());
    let tables = AlgebraTables::new(&qa);
    let df = jacobian(&mu);
    for seed in [1u64, 99] {
        let pts = solve_singular_points(&tables, &mu, &df, seed, &Tolerances::default()).unwrap();
        println!("seed {seed}: {} points", pts.len());
        for p in &pts {
            println!("  {:?} res {:.2e} scaled {:.2e}", p.coordinates, p.residual, p.residual_scaled);
        }
    }
}
