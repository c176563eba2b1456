//! Shared helpers for the integration suites.

use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};

pub fn fixture_path(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_map(name: &str) -> PolynomialMap {
    let file = crosscap::cli::ProblemFile::load(&fixture_path(name)).expect("fixture loads");
    file.to_map().expect("fixture parses")
}

pub fn map_from(names: &[&str], comps: &[&str]) -> PolynomialMap {
    let vars = Variables::new(names).unwrap();
    PolynomialMap::new(
        &vars,
        comps
            .iter()
            .map(|s| parse_polynomial(s, &vars).unwrap())
            .collect(),
    )
}

pub fn point_norm(coords: &[f64]) -> f64 {
    coords.iter().map(|x| x * x).sum::<f64>().sqrt()
}
