use crosscap::groebner::reduced_groebner;
use crosscap::matrix::jacobian;
use crosscap::monomial::Monomial;
use crosscap::polynomial::{Polynomial, PolynomialMap, Variables};
use crosscap::rational::rat;
use rand::Rng;
use rand::SeedableRng;

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let vars = Variables::new(&["x", "y", "z"]).unwrap();
    let degree = 2u32;
    let mut monomials = Vec::new();
    for a in 0..=degree {
        for b in 0..=degree - a {
            for c in 0..=degree - a - b {
                monomials.push(Monomial::from_exps(&[a, b, c]));
            }
        }
    }
    let comps: Vec<Polynomial> = (0..5)
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
    let f = PolynomialMap::new(&vars, comps);
    let df = jacobian(&f);
    let t = std::time::Instant::now();
    let minors = df.minors(3).unwrap();
    println!("minors in {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let gb = reduced_groebner(&vars, &minors);
    println!("gb size {} in {:?}", gb.generators().len(), t.elapsed());
    let t = std::time::Instant::now();
    let qa = gb.quotient_basis().unwrap();
    println!("dim A = {} in {:?}", qa.dimension(), t.elapsed());
    let t = std::time::Instant::now();
    let tables = crosscap::trace_form::AlgebraTables::new(&qa);
    println!("tables in {:?}", t.elapsed());
    let _ = tables;
}
