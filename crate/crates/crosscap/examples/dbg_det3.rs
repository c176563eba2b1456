use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{PolynomialMap, Variables};
use crosscap::oracle::{crosscap_sign_at, ApproxPoint, SignContext, Tolerances};

fn main() {
    let v = Variables::new(&["s", "t", "x", "y", "z"]).unwrap();
    let comps = [
        "y", "z", "t",
        "20*x^2+17*s*z+x",
        "13*s*y+13*s*z+5*t",
        "25*s*t+4*x^2+28*z",
        "3*x^2+19*y*z+22*s",
        "11*t*s^2+8*t^2*z+x*z",
        "27*t*x*y+9*s*x*z+20*s*t",
    ];
    let f = PolynomialMap::new(&v, comps.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect());
    let ctx = SignContext::new(&f);
    let point = ApproxPoint {
        coordinates: vec![3.58456860774716, 1.1733333333333336, 0.365277986071958, -9.217922573901532, 9.217922573901532],
        residual: 0.0, residual_scaled: 0.0, condition: 65.0,
    };
    match crosscap_sign_at(&ctx, &point, &Tolerances::default()) {
        Ok(s) => println!("sign {:+} det {}", s.sign, s.det_value),
        Err(e) => println!("error: {e}"),
    }
}
