use crosscap::matrix::jacobian;
use crosscap::parser::parse_polynomial;
use crosscap::polynomial::{Polynomial, PolynomialMap, Variables};
use crosscap::rational::{f64_to_rat, rat_to_f64, Rat};
use crosscap::oracle::fmat::{orthonormal_completion, jacobi_symmetric, FMat, lu_det};
use num_traits::Zero;

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
    let m = 5usize;
    let n = 9usize;
    let point = [3.58456860774716, 1.1733333333333336, 0.365277986071958, -9.217922573901532, 9.217922573901532];
    let df = jacobian(&f);
    let dfp = FMat { rows: n, cols: m, data: df.evaluate_f64(&point) };
    let (evals, evecs) = jacobi_symmetric(&dfp.gram());
    println!("sigma: {:?}", evals.iter().map(|e| e.max(0.0).sqrt()).collect::<Vec<_>>());
    let kernel = evecs.column(0);
    let phi = orthonormal_completion(&kernel);
    // exact A1
    let pr: Vec<Rat> = point.iter().map(|&x| f64_to_rat(x).unwrap()).collect();
    let phir: Vec<Vec<Rat>> = (0..m).map(|j| phi.column(j).iter().map(|&x| f64_to_rat(x).unwrap()).collect()).collect();
    let kr: Vec<Rat> = phir[0].clone();
    let mut a1: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]; n];
    // first derivative columns
    for l in 1..m {
        for i in 0..n {
            let mut acc = Rat::zero();
            for a in 0..m {
                let e = df.entry(i, a).evaluate_rat(&pr).unwrap();
                acc += e * &phir[l][a];
            }
            a1[i][l - 1] = acc;
        }
    }
    // second derivative columns
    for j in 0..m {
        for i in 0..n {
            let mut acc = Rat::zero();
            for a in 0..m {
                for b in 0..m {
                    let h = f.component(i).differentiate(a).unwrap().differentiate(b).unwrap().evaluate_rat(&pr).unwrap();
                    acc += h * &kr[a] * &phir[j][b];
                }
            }
            a1[i][m - 1 + j] = acc;
        }
    }
    // exact determinant by fraction-free elimination over Rat (Gaussian, exact)
    let mut mat = a1.clone();
    let mut det = Rat::from_integer(1.into());
    for k in 0..n {
        let piv = (k..n).find(|&r| !mat[r][k].is_zero());
        let Some(piv) = piv else { println!("exact det = 0"); return; };
        if piv != k { mat.swap(k, piv); det = -det; }
        det *= mat[k][k].clone();
        for r in k + 1..n {
            let fac = &mat[r][k] / &mat[k][k];
            for c in k..n {
                let d = &fac * &mat[k][c];
                mat[r][c] = &mat[r][c] - &d;
            }
        }
    }
    println!("exact det = {}", rat_to_f64(&det));
    // float det for comparison
    let mut fa = FMat::zeros(n, n);
    for i in 0..n { for j in 0..n { fa[(i, j)] = rat_to_f64(&a1[i][j]); } }
    println!("float det = {}", lu_det(&fa));
    let had: f64 = (0..n).map(|j| (0..n).map(|i| fa[(i,j)]*fa[(i,j)]).sum::<f64>().sqrt()).product();
    println!("hadamard = {:.3e}, relative = {:.3e}", had, rat_to_f64(&det).abs() / had);
}
