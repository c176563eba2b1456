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
    for i in 0..8 {
        let degree = if i % 2 == 0 { 2u32 } else { 3 };
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
        let minors = df.minors(3).unwrap();
        let t = std::time::Instant::now();
        let gb = reduced_groebner(&vars, &minors);
        let gb_time = t.elapsed();
        let t = std::time::Instant::now();
        match gb.quotient_basis() {
            Ok(qa) => {
                let d = qa.dimension();
                let t2 = std::time::Instant::now();
                let tables = crosscap::trace_form::AlgebraTables::new(&qa);
                println!(
                    "i={i} deg={degree}: gb {} gens in {:?}; dim {} in {:?}; tables {:?}",
                    gb.generators().len(),
                    gb_time,
                    d,
                    t.elapsed(),
                    t2.elapsed()
                );
                let _ = tables;
            }
            Err(e) => println!("i={i} deg={degree}: gb in {gb_time:?}; {e}"),
        }
    }
}
