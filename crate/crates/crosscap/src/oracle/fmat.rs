//! Small dense float matrices and the handful of factorizations the
//! oracle needs: LU with partial pivoting, Jacobi eigenvalues for symmetric
//! matrices, and pivoted Gram-Schmidt completion.

/// Dense row-major `f64` matrix.
#[derive(Clone, Debug)]
pub struct FMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl FMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        FMat {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().copied()).collect(),
        }
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)] * v[j])
                    .sum()
            })
            .collect()
    }

    pub fn matmul(&self, other: &FMat) -> FMat {
        assert_eq!(self.cols, other.rows);
        let mut out = FMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FMat {
        let mut out = FMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// `A^T A`, symmetric Gram matrix of the columns.
    pub fn gram(&self) -> FMat {
        let mut out = FMat::zeros(self.cols, self.cols);
        for i in 0..self.cols {
            for j in i..self.cols {
                let mut acc = 0.0;
                for r in 0..self.rows {
                    acc += self[(r, i)] * self[(r, j)];
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc;
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for FMat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `A x = b` by LU with partial pivoting. `None` when singular to
/// working precision.
pub fn lu_solve(a: &FMat, b: &[f64]) -> Option<Vec<f64>> {
    assert_eq!(a.rows, a.cols);
    assert_eq!(a.rows, b.len());
    let n = a.rows;
    let mut lu = a.clone();
    let mut x: Vec<f64> = b.to_vec();
    for k in 0..n {
        let (pivot_row, pivot) = (k..n)
            .map(|r| (r, lu[(r, k)].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pivot < f64::EPSILON * (1.0 + lu.frobenius()) {
            return None;
        }
        if pivot_row != k {
            for j in 0..n {
                let t = lu[(k, j)];
                lu[(k, j)] = lu[(pivot_row, j)];
                lu[(pivot_row, j)] = t;
            }
            x.swap(k, pivot_row);
        }
        for i in k + 1..n {
            let f = lu[(i, k)] / lu[(k, k)];
            lu[(i, k)] = 0.0;
            for j in k + 1..n {
                lu[(i, j)] -= f * lu[(k, j)];
            }
            x[i] -= f * x[k];
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            x[i] -= lu[(i, j)] * x[j];
        }
        x[i] /= lu[(i, i)];
    }
    Some(x)
}

/// Determinant by LU with partial pivoting.
pub fn lu_det(a: &FMat) -> f64 {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut lu = a.clone();
    let mut det = 1.0;
    for k in 0..n {
        let (pivot_row, pivot) = (k..n)
            .map(|r| (r, lu[(r, k)].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pivot == 0.0 {
            return 0.0;
        }
        if pivot_row != k {
            for j in 0..n {
                let t = lu[(k, j)];
                lu[(k, j)] = lu[(pivot_row, j)];
                lu[(pivot_row, j)] = t;
            }
            det = -det;
        }
        det *= lu[(k, k)];
        for i in k + 1..n {
            let f = lu[(i, k)] / lu[(k, k)];
            for j in k + 1..n {
                lu[(i, j)] -= f * lu[(k, j)];
            }
        }
    }
    det
}

/// Eigenvalues (ascending) and eigenvectors of a symmetric matrix by the
/// cyclic Jacobi method. Plenty for the small Gram matrices the oracle
/// builds from Jacobians.
pub fn jacobi_symmetric(a: &FMat) -> (Vec<f64>, FMat) {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut m = a.clone();
    let mut v = FMat::identity(n);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if off.sqrt() <= 1e-14 * (1.0 + m.frobenius()) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let evals = order.iter().map(|&i| m[(i, i)]).collect();
    let mut evecs = FMat::zeros(n, n);
    for (newj, &oldj) in order.iter().enumerate() {
        for i in 0..n {
            evecs[(i, newj)] = v[(i, oldj)];
        }
    }
    (evals, evecs)
}

/// Singular values (ascending) of a tall or square matrix, as square roots
/// of the eigenvalues of `A^T A`.
pub fn singular_values(a: &FMat) -> Vec<f64> {
    let (evals, _) = jacobi_symmetric(&a.gram());
    evals.iter().map(|&l| l.max(0.0).sqrt()).collect()
}

/// An orthonormal matrix whose first column is `v / |v|`, completed by
/// pivoted Gram-Schmidt over the standard basis, with the last column
/// flipped if needed so the determinant is +1.
pub fn orthonormal_completion(v: &[f64]) -> FMat {
    let n = v.len();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    assert!(norm > 0.0, "cannot complete a zero vector");
    let mut cols: Vec<Vec<f64>> = vec![v.iter().map(|x| x / norm).collect()];
    while cols.len() < n {
        // candidate standard basis vector with the largest residual
        let mut best: Option<(f64, Vec<f64>)> = None;
        for k in 0..n {
            let mut e = vec![0.0; n];
            e[k] = 1.0;
            for c in &cols {
                let dot: f64 = c.iter().zip(&e).map(|(a, b)| a * b).sum();
                for (ei, ci) in e.iter_mut().zip(c) {
                    *ei -= dot * ci;
                }
            }
            let r = e.iter().map(|x| x * x).sum::<f64>().sqrt();
            if best.as_ref().map_or(true, |(br, _)| r > *br) {
                best = Some((r, e));
            }
        }
        let (r, mut e) = best.unwrap();
        for x in &mut e {
            *x /= r;
        }
        cols.push(e);
    }
    let mut m = FMat::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = c[i];
        }
    }
    if lu_det(&m) < 0.0 {
        for i in 0..n {
            m[(i, n - 1)] = -m[(i, n - 1)];
        }
    }
    m
}
