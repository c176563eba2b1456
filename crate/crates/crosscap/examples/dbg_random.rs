use crosscap::engine::build_problem;
use crosscap::monomial::Monomial;
use crosscap::polynomial::{Polynomial, PolynomialMap, Variables};
use crosscap::rational::rat;
use rand::Rng;
use rand::SeedableRng;

fn random_dense_map(rng: &mut rand_chacha::ChaCha8Rng, degree: u32) -> PolynomialMap {
    let vars = Variables::new(&["x", "y", "z"]).unwrap();
    let mut monomials = Vec::new();
    for a in 0..=degree {
        for b in 0..=degree - a {
            for c in 0..=degree - a - b {
                monomials.push(Monomial::from_exps(&[a, b, c]));
            }
        }
    }
    let comps = (0..5)
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
    PolynomialMap::new(&vars, comps)
}

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for i in 0..6 {
        let degree = if i % 2 == 0 { 2 } else { 3 };
        let f = random_dense_map(&mut rng, degree);
        let t = std::time::Instant::now();
        match build_problem(f) {
            Ok(p) => println!(
                "instance {i} (deg {degree}): dim A = {} in {:?}",
                p.dimension(),
                t.elapsed()
            ),
            Err(e) => println!("instance {i} (deg {degree}): {e} in {:?}", t.elapsed()),
        }
    }
}
