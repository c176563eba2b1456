//! Multiplication matrices on the quotient algebra, the trace functional,
//! trace quadratic forms, and exact signatures of symmetric matrices.
//!
//! Signatures come from the characteristic polynomial (Berkowitz, division
//! free) and Descartes' sign-variation count, which is exact here because a
//! symmetric matrix has only real eigenvalues. No pivoting exceptions, no
//! floating point.

use crate::groebner::QuotientAlgebra;
use crate::polynomial::Polynomial;
use crate::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (entries ({i},{j}) and ({j},{i}) differ)")]
    NotSymmetric { i: usize, j: usize },
    #[error("the quotient algebra is trivial (dimension 0)")]
    TrivialAlgebra,
}

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> QMat {
        let mut out = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn matmul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cur = &out[(i, j)] + &prod;
                    out[(i, j)] = cur;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut acc = Rat::zero();
        for i in 0..self.rows {
            acc += self[(i, i)].clone();
        }
        acc
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(crate::rational::rat_to_f64).collect()
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }
}

/// Exact inertia of a symmetric rational matrix.
pub fn signature(gram: &QMat) -> Result<Inertia, FormError> {
    if !gram.is_square() {
        return Err(FormError::NotSquare {
            rows: gram.rows,
            cols: gram.cols,
        });
    }
    if let Some((i, j)) = gram.symmetry_defect() {
        return Err(FormError::NotSymmetric { i, j });
    }
    let n = gram.rows;
    if n == 0 {
        return Ok(Inertia {
            n_plus: 0,
            n_minus: 0,
            n_zero: 0,
        });
    }
    // scale by the positive lcm of denominators: congruent by sqrt(L) I,
    // inertia unchanged, entries now integers
    let mut denom_lcm = BigInt::one();
    for v in &gram.data {
        denom_lcm = denom_lcm.lcm(v.denom());
    }
    let ints: Vec<BigInt> = gram
        .data
        .iter()
        .map(|v| v.numer() * (&denom_lcm / v.denom()))
        .collect();
    let charpoly = berkowitz_charpoly(&ints, n);
    Ok(inertia_from_charpoly(&charpoly))
}

/// Characteristic polynomial `det(lambda I - A)` of an integer matrix by
/// the Berkowitz algorithm. Returns coefficients `c[0..=n]` with `c[k]` the
/// coefficient of `lambda^(n-k)`; `c[0] = 1`.
pub fn berkowitz_charpoly(a: &[BigInt], n: usize) -> Vec<BigInt> {
    assert_eq!(a.len(), n * n);
    let at = |i: usize, j: usize| &a[i * n + j];
    // p holds the char poly of the leading r x r principal submatrix,
    // coefficients from lambda^r down to the constant
    let mut p: Vec<BigInt> = vec![BigInt::one(), -at(0, 0).clone()];
    for r in 1..n {
        // column S = A[0..r][r], row R = A[r][0..r], corner = A[r][r]
        let s: Vec<BigInt> = (0..r).map(|i| at(i, r).clone()).collect();
        let row: Vec<BigInt> = (0..r).map(|j| at(r, j).clone()).collect();
        // Toeplitz column: 1, -corner, -R S, -R A S, -R A^2 S, ...
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-at(r, r).clone());
        let mut w = s.clone();
        for _ in 0..r {
            let dot: BigInt = row.iter().zip(&w).map(|(x, y)| x * y).sum();
            col.push(-dot);
            // w <- A_{r x r} w
            let mut next = vec![BigInt::zero(); r];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut acc = BigInt::zero();
                for (j, wj) in w.iter().enumerate() {
                    if !wj.is_zero() {
                        acc += at(i, j) * wj;
                    }
                }
                *slot = acc;
            }
            w = next;
        }
        // p_new[u] = sum_{v} col[u - v] * p[v], a lower-triangular Toeplitz
        // product; p has r + 1 entries, the result r + 2
        let mut next = vec![BigInt::zero(); r + 2];
        for (u, slot) in next.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for (v, pv) in p.iter().enumerate().take(u + 1) {
                if u - v < col.len() && !pv.is_zero() {
                    acc += &col[u - v] * pv;
                }
            }
            *slot = acc;
        }
        p = next;
    }
    p
}

/// Inertia of a symmetric matrix from its characteristic polynomial via
/// Descartes' rule (exact: all roots are real).
fn inertia_from_charpoly(coeffs: &[BigInt]) -> Inertia {
    let n = coeffs.len() - 1;
    // multiplicity of the root 0 = number of trailing zero coefficients
    let n_zero = coeffs
        .iter()
        .rev()
        .take_while(|c| c.is_zero())
        .count()
        .min(n);
    let reduced = &coeffs[..=n - n_zero];
    let n_plus = sign_variations(reduced.iter());
    // p(-lambda): flip signs of odd-degree coefficients; degree of term k
    // in `reduced` is (n - n_zero) - k
    let deg = n - n_zero;
    let flipped: Vec<BigInt> = reduced
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if (deg - k) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            }
        })
        .collect();
    let n_minus = sign_variations(flipped.iter());
    debug_assert_eq!(n_plus + n_minus + n_zero, n);
    Inertia {
        n_plus,
        n_minus,
        n_zero,
    }
}

fn sign_variations<'a, I: Iterator<Item = &'a BigInt>>(coeffs: I) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let s = c.is_positive();
        if let Some(prev) = last {
            if prev != s {
                variations += 1;
            }
        }
        last = Some(s);
    }
    variations
}

/// The matrix of multiplication by `h` on the quotient algebra, in the
/// staircase basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicationMatrix {
    pub element: Polynomial,
    pub matrix: QMat,
}

/// Builds the multiplication matrix of `h`. Errors on the trivial algebra.
pub fn multiplication_matrix(
    h: &Polynomial,
    qa: &QuotientAlgebra,
) -> Result<MultiplicationMatrix, FormError> {
    let d = qa.dimension();
    if d == 0 {
        return Err(FormError::TrivialAlgebra);
    }
    let vars = qa.variables().clone();
    let mut m = QMat::zeros(d, d);
    for (j, b) in qa.basis().iter().enumerate() {
        let hb = h.mul_term(b, &Rat::one());
        let col = qa.coordinates(&hb);
        for (i, c) in col.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    let _ = vars;
    Ok(MultiplicationMatrix {
        element: h.clone(),
        matrix: m,
    })
}

/// The trace functional `T(h)`: trace of multiplication by `h`. Zero on the
/// trivial algebra.
pub fn trace(h: &Polynomial, qa: &QuotientAlgebra) -> Rat {
    if qa.dimension() == 0 {
        return Rat::zero();
    }
    multiplication_matrix(h, qa)
        .expect("nontrivial algebra")
        .matrix
        .trace()
}

/// A trace quadratic form `a -> T(h a^2)` with its Gram matrix and inertia.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceForm {
    pub weight: Polynomial,
    pub gram: QMat,
    pub inertia: Inertia,
}

/// Builds the Gram matrix of the form `Theta_h` in the staircase basis and
/// computes its exact inertia.
///
/// One-off convenience; batch callers should go through [`AlgebraTables`].
pub fn trace_quadratic_form(h: &Polynomial, qa: &QuotientAlgebra) -> TraceForm {
    AlgebraTables::new(qa).theta(h)
}

/// Precomputed multiplication structure of a finite quotient algebra:
/// variable matrices, the full basis multiplication tensor, the trace
/// vector, and the Gram matrix of `Theta_1`.
///
/// Building the tensor costs one matrix-vector product per basis pair;
/// afterwards every trace form is a couple of dense passes.
pub struct AlgebraTables {
    qa: QuotientAlgebra,
    /// `tab[mu][j]` = coordinates of `basis[mu] * basis[j]` in the basis.
    tab: Vec<Vec<Vec<Rat>>>,
    /// `trace_vec[mu] = T(basis[mu])`.
    trace_vec: Vec<Rat>,
    /// `theta1[(mu, j)] = T(basis[mu] * basis[j])`, the Gram matrix of
    /// `Theta_1`.
    theta1: QMat,
    var_matrices: Vec<QMat>,
}

impl AlgebraTables {
    pub fn new(qa: &QuotientAlgebra) -> Self {
        let d = qa.dimension();
        let nvars = qa.variables().len();
        let vars = qa.variables().clone();
        if d == 0 {
            return AlgebraTables {
                qa: qa.clone(),
                tab: Vec::new(),
                trace_vec: Vec::new(),
                theta1: QMat::zeros(0, 0),
                var_matrices: vec![QMat::zeros(0, 0); nvars],
            };
        }
        let var_matrices: Vec<QMat> = (0..nvars)
            .map(|l| {
                let xl = Polynomial::variable(&vars, l).expect("in range");
                multiplication_matrix(&xl, qa)
                    .expect("nontrivial")
                    .matrix
            })
            .collect();
        // tab[mu] by peeling one variable off basis[mu]: if
        // basis[mu] = x_l * basis[nu] then row mu = M_l * row nu.
        // The staircase is closed under division, so nu is always present.
        let index: HashMapIndex = qa
            .basis()
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut tab: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); d];
        for mu in 0..d {
            let m = &qa.basis()[mu];
            if m.is_one() {
                tab[mu] = (0..d)
                    .map(|j| {
                        let mut e = vec![Rat::zero(); d];
                        e[j] = Rat::one();
                        e
                    })
                    .collect();
                continue;
            }
            let l = m.exps().iter().position(|&e| e > 0).expect("not one");
            let mut exps = m.exps().to_vec();
            exps[l] -= 1;
            let nu = *index
                .get(&crate::monomial::Monomial::from_exps(&exps))
                .expect("staircase closed under division");
            debug_assert!(nu < mu, "basis sorted ascending");
            let ml = &var_matrices[l];
            tab[mu] = (0..d).map(|j| ml.matvec(&tab[nu][j])).collect();
        }
        let trace_vec: Vec<Rat> = (0..d)
            .map(|mu| {
                let mut acc = Rat::zero();
                for j in 0..d {
                    acc += tab[mu][j][j].clone();
                }
                acc
            })
            .collect();
        let mut theta1 = QMat::zeros(d, d);
        for mu in 0..d {
            for j in 0..d {
                let mut acc = Rat::zero();
                for (k, t) in trace_vec.iter().enumerate() {
                    if !tab[mu][j][k].is_zero() && !t.is_zero() {
                        acc += &tab[mu][j][k] * t;
                    }
                }
                theta1[(mu, j)] = acc;
            }
        }
        AlgebraTables {
            qa: qa.clone(),
            tab,
            trace_vec,
            theta1,
            var_matrices,
        }
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.qa
    }

    pub fn dimension(&self) -> usize {
        self.qa.dimension()
    }

    pub fn variable_matrix(&self, l: usize) -> &QMat {
        &self.var_matrices[l]
    }

    /// Gram matrix of `Theta_1`; its signature counts real points of `V(I)`.
    pub fn theta1_gram(&self) -> &QMat {
        &self.theta1
    }

    /// `T(h)` via the precomputed trace vector.
    pub fn trace_of(&self, h: &Polynomial) -> Rat {
        let coords = self.qa.coordinates(h);
        let mut acc = Rat::zero();
        for (c, t) in coords.iter().zip(&self.trace_vec) {
            if !c.is_zero() && !t.is_zero() {
                acc += c * t;
            }
        }
        acc
    }

    /// Builds the trace form `Theta_h` using the multiplication tensor.
    pub fn theta(&self, h: &Polynomial) -> TraceForm {
        let d = self.dimension();
        if d == 0 {
            return TraceForm {
                weight: h.clone(),
                gram: QMat::zeros(0, 0),
                inertia: Inertia {
                    n_plus: 0,
                    n_minus: 0,
                    n_zero: 0,
                },
            };
        }
        let nf_h = self.qa.coordinates(h);
        // c_i = coordinates of h * basis[i] = sum_mu nf_h[mu] tab[mu][i]
        let mut gram = QMat::zeros(d, d);
        for i in 0..d {
            let mut ci = vec![Rat::zero(); d];
            for (mu, hm) in nf_h.iter().enumerate() {
                if hm.is_zero() {
                    continue;
                }
                for (k, t) in self.tab[mu][i].iter().enumerate() {
                    if !t.is_zero() {
                        ci[k] += hm * t;
                    }
                }
            }
            // Gram[i][j] = T(h b_i b_j) = sum_mu ci[mu] * theta1[mu][j]
            for j in 0..d {
                let mut acc = Rat::zero();
                for (mu, c) in ci.iter().enumerate() {
                    if !c.is_zero() && !self.theta1[(mu, j)].is_zero() {
                        acc += c * &self.theta1[(mu, j)];
                    }
                }
                gram[(i, j)] = acc;
            }
        }
        let inertia = signature(&gram).expect("Gram matrices are symmetric");
        TraceForm {
            weight: h.clone(),
            gram,
            inertia,
        }
    }
}

type HashMapIndex = std::collections::HashMap<crate::monomial::Monomial, usize>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;
    use crate::polynomial::Variables;
    use crate::rational::{rat, ratio};

    fn algebra(names: &[&str], gens: &[&str]) -> QuotientAlgebra {
        let v = Variables::new(names).unwrap();
        let gens: Vec<Polynomial> = gens
            .iter()
            .map(|t| parse_polynomial(t, &v).unwrap())
            .collect();
        crate::groebner::reduced_groebner(&v, &gens)
            .quotient_basis()
            .unwrap()
    }

    #[test]
    fn companion_matrix_of_x2_minus_2() {
        let qa = algebra(&["x"], &["x^2 - 2"]);
        let v = qa.variables().clone();
        let x = parse_polynomial("x", &v).unwrap();
        let m = multiplication_matrix(&x, &qa).unwrap();
        assert_eq!(m.matrix[(0, 0)], rat(0));
        assert_eq!(m.matrix[(0, 1)], rat(2));
        assert_eq!(m.matrix[(1, 0)], rat(1));
        assert_eq!(m.matrix[(1, 1)], rat(0));
    }

    #[test]
    fn identity_multiplication_matrix() {
        let qa = algebra(&["x", "y"], &["x^2 - 1", "y^2 - 1"]);
        let one = Polynomial::one(qa.variables());
        let m = multiplication_matrix(&one, &qa).unwrap();
        assert_eq!(m.matrix, QMat::identity(4));
    }

    #[test]
    fn multiplication_matrices_commute() {
        let qa = algebra(&["x", "y"], &["x^2 - 1", "y^2 - 1"]);
        let v = qa.variables().clone();
        let mx = multiplication_matrix(&parse_polynomial("x", &v).unwrap(), &qa)
            .unwrap()
            .matrix;
        let my = multiplication_matrix(&parse_polynomial("y", &v).unwrap(), &qa)
            .unwrap()
            .matrix;
        assert_eq!(mx.matmul(&my), my.matmul(&mx));
        // and multiplication is a homomorphism: M_{xy} = M_x M_y
        let mxy = multiplication_matrix(&parse_polynomial("x*y", &v).unwrap(), &qa)
            .unwrap()
            .matrix;
        assert_eq!(mxy, mx.matmul(&my));
    }

    #[test]
    fn trivial_algebra_rejected() {
        let qa = algebra(&["x"], &["1"]);
        let one = Polynomial::one(qa.variables());
        assert_eq!(
            multiplication_matrix(&one, &qa),
            Err(FormError::TrivialAlgebra)
        );
        assert_eq!(trace(&one, &qa), rat(0));
    }

    #[test]
    fn trace_examples() {
        let qa = algebra(&["x"], &["x^2 - 2"]);
        let v = qa.variables().clone();
        assert_eq!(trace(&Polynomial::one(&v), &qa), rat(2));
        assert_eq!(trace(&parse_polynomial("x", &v).unwrap(), &qa), rat(0));
        assert_eq!(trace(&parse_polynomial("x^2", &v).unwrap(), &qa), rat(4));
        // linearity
        let a = parse_polynomial("3*x + 1", &v).unwrap();
        let b = parse_polynomial("x^2 - x", &v).unwrap();
        assert_eq!(trace(&(&a + &b), &qa), trace(&a, &qa) + trace(&b, &qa));
    }

    #[test]
    fn theta_one_counts_real_points() {
        // x^2 - 2: two real roots -> inertia (2, 0, 0)
        let qa = algebra(&["x"], &["x^2 - 2"]);
        let form = trace_quadratic_form(&Polynomial::one(qa.variables()), &qa);
        assert_eq!(form.gram[(0, 0)], rat(2));
        assert_eq!(form.gram[(0, 1)], rat(0));
        assert_eq!(form.gram[(1, 1)], rat(4));
        assert_eq!(
            form.inertia,
            Inertia { n_plus: 2, n_minus: 0, n_zero: 0 }
        );

        // x^2 + 1: no real roots -> signature 0
        let qa = algebra(&["x"], &["x^2 + 1"]);
        let form = trace_quadratic_form(&Polynomial::one(qa.variables()), &qa);
        assert_eq!(form.gram[(0, 0)], rat(2));
        assert_eq!(form.gram[(1, 1)], rat(-2));
        assert_eq!(
            form.inertia,
            Inertia { n_plus: 1, n_minus: 1, n_zero: 0 }
        );
    }

    #[test]
    fn zero_weight_gives_null_form() {
        let qa = algebra(&["x"], &["x^3 - x"]);
        let zero = Polynomial::zero(qa.variables());
        let form = trace_quadratic_form(&zero, &qa);
        assert_eq!(
            form.inertia,
            Inertia { n_plus: 0, n_minus: 0, n_zero: 3 }
        );
        assert!(form.gram.data.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn theta_linear_in_weight() {
        let qa = algebra(&["x", "y"], &["x^2 - y", "y^2 - 2"]);
        let v = qa.variables().clone();
        let tables = AlgebraTables::new(&qa);
        let h1 = parse_polynomial("x*y - 3", &v).unwrap();
        let h2 = parse_polynomial("y^2 + x", &v).unwrap();
        let lhs = tables.theta(&(&h1 + &h2)).gram;
        let a = tables.theta(&h1).gram;
        let b = tables.theta(&h2).gram;
        for i in 0..lhs.rows() {
            for j in 0..lhs.cols() {
                assert_eq!(lhs[(i, j)], &a[(i, j)] + &b[(i, j)]);
            }
        }
    }

    #[test]
    fn tables_match_direct_computation() {
        let qa = algebra(&["x", "y"], &["x^3 - 2*x - 1", "y^2 - x"]);
        let v = qa.variables().clone();
        let tables = AlgebraTables::new(&qa);
        let h = parse_polynomial("x^2*y - y + 2", &v).unwrap();
        // direct Gram entry: T(h b_i b_j) via multiplication matrices
        let form = tables.theta(&h);
        for (i, bi) in qa.basis().iter().enumerate() {
            for (j, bj) in qa.basis().iter().enumerate() {
                let prod = h.mul_term(bi, &Rat::one()).mul_term(bj, &Rat::one());
                assert_eq!(form.gram[(i, j)], trace(&prod, &qa), "entry ({i},{j})");
            }
        }
        assert_eq!(tables.trace_of(&h), trace(&h, &qa));
    }

    #[test]
    fn signature_basics() {
        assert_eq!(
            signature(&QMat::identity(3)).unwrap(),
            Inertia { n_plus: 3, n_minus: 0, n_zero: 0 }
        );
        let mut d = QMat::zeros(2, 2);
        d[(0, 0)] = rat(1);
        d[(1, 1)] = rat(-1);
        let i = signature(&d).unwrap();
        assert_eq!(i, Inertia { n_plus: 1, n_minus: 1, n_zero: 0 });
        assert_eq!(i.signature(), 0);

        let mut asym = QMat::zeros(2, 2);
        asym[(0, 1)] = rat(1);
        assert!(matches!(
            signature(&asym),
            Err(FormError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn signature_with_rational_entries_and_kernel() {
        // diag(1/2, 0, -3/4) -> (1, 1, 1)
        let mut m = QMat::zeros(3, 3);
        m[(0, 0)] = ratio(1, 2);
        m[(2, 2)] = ratio(-3, 4);
        assert_eq!(
            signature(&m).unwrap(),
            Inertia { n_plus: 1, n_minus: 1, n_zero: 1 }
        );
    }

    #[test]
    fn berkowitz_small_cases() {
        // [[2, 1], [1, 2]]: charpoly = l^2 - 4l + 3
        let a: Vec<BigInt> = [2, 1, 1, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(
            berkowitz_charpoly(&a, 2),
            vec![BigInt::from(1), BigInt::from(-4), BigInt::from(3)]
        );
        // companion of l^3 - 2: charpoly = l^3 - 2
        let c: Vec<BigInt> = [0, 0, 2, 1, 0, 0, 0, 1, 0]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(
            berkowitz_charpoly(&c, 3),
            vec![
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(0),
                BigInt::from(-2)
            ]
        );
    }
}
