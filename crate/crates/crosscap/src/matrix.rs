//! Matrices of polynomials: Jacobians, minors, exact determinants.

use crate::polynomial::{Polynomial, PolynomialMap, Variables};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSize { size: usize, rows: usize, cols: usize },
    #[error("entry count {got} does not match {rows}x{cols}")]
    EntryCount { got: usize, rows: usize, cols: usize },
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// A dense rows x cols matrix of polynomials over one variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                got: entries.len(),
                rows,
                cols,
            });
        }
        if let Some(first) = entries.first() {
            for e in &entries {
                assert_eq!(
                    e.variables(),
                    first.variables(),
                    "matrix entries over different variable lists"
                );
            }
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.cols + col]
    }

    pub fn variables(&self) -> &Variables {
        self.entries
            .first()
            .expect("empty matrix has no variables")
            .variables()
    }

    /// Submatrix picked by row and column index lists (kept in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.entry(r, c).clone()))
            .collect();
        PolyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Evaluates every entry at a float point, row-major.
    pub fn evaluate_f64(&self, point: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|p| p.evaluate_f64(point).expect("point length checked by caller"))
            .collect()
    }

    /// Exact determinant via fraction-free Bareiss elimination.
    ///
    /// Row swaps handle zero pivots; every division in the Bareiss update is
    /// exact by construction.
    pub fn det(&self) -> Result<Polynomial, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let vars = self.variables().clone();
        if n == 0 {
            return Ok(Polynomial::one(&vars));
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev_pivot = Polynomial::one(&vars);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Ok(Polynomial::zero(&vars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev_pivot)
                        .expect("Bareiss division is exact");
                }
                a[i][k] = Polynomial::zero(&vars);
            }
            prev_pivot = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if sign {
            det = -&det;
        }
        Ok(det)
    }

    /// All `size x size` minors, in lexicographic order on the
    /// (row set, column set) pair.
    ///
    /// Shares work across overlapping index sets: each sub-determinant is
    /// expanded along its last column and memoized, so the full family costs
    /// far less than independent expansions.
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>, MatrixError> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(MatrixError::MinorSize {
                size,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let vars = self.variables().clone();
        let mut memo: HashMap<(u64, u64), Polynomial> = HashMap::new();
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.minor_memo(rs, cs, &vars, &mut memo));
            }
        }
        Ok(out)
    }

    fn minor_memo(
        &self,
        rows: &[usize],
        cols: &[usize],
        vars: &Variables,
        memo: &mut HashMap<(u64, u64), Polynomial>,
    ) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::one(vars);
        }
        let key = (bitmask(rows), bitmask(cols));
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let last_col = *cols.last().unwrap();
        let inner_cols = &cols[..cols.len() - 1];
        let mut acc = Polynomial::zero(vars);
        for (pos, &r) in rows.iter().enumerate() {
            let e = self.entry(r, last_col);
            if e.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pos)
                .map(|(_, &x)| x)
                .collect();
            let sub = self.minor_memo(&sub_rows, inner_cols, vars, memo);
            // cofactor sign for entry in row position `pos`, last column
            let term = e * &sub;
            if (pos + cols.len()) % 2 == 1 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        memo.insert(key, acc.clone());
        acc
    }
}

fn bitmask(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| {
        debug_assert!(i < 64);
        m | (1 << i)
    })
}

/// All `k`-element subsets of `{0, .., n-1}` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for i in start..=(n - remaining) {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut current, &mut out);
    }
    out
}

/// The Jacobian matrix of `f`: entry `(i, j)` is the partial derivative of
/// component `i` with respect to variable `j`.
pub fn jacobian(f: &PolynomialMap) -> PolyMatrix {
    let rows = f.ncomponents();
    let cols = f.nvars();
    let entries = (0..rows)
        .flat_map(|i| {
            (0..cols).map(move |j| {
                f.component(i)
                    .differentiate(j)
                    .expect("variable index in range")
            })
        })
        .collect();
    PolyMatrix::new(rows, cols, entries).expect("dimensions consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;
    use crate::rational::rat;

    fn vars() -> Variables {
        Variables::new(&["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &vars()).unwrap()
    }

    fn whitney3() -> PolynomialMap {
        let v = vars();
        PolynomialMap::new(
            &v,
            ["x^2", "y", "z", "x*y", "x*z"].iter().map(|s| p(s)).collect(),
        )
    }

    #[test]
    fn jacobian_of_whitney_normal_form() {
        let j = jacobian(&whitney3());
        assert_eq!((j.rows(), j.cols()), (5, 3));
        assert_eq!(*j.entry(0, 0), p("2*x"));
        assert_eq!(*j.entry(1, 0), p("0"));
        assert_eq!(*j.entry(3, 0), p("y"));
        assert_eq!(*j.entry(4, 0), p("z"));
        assert_eq!(*j.entry(3, 1), p("x"));
    }

    #[test]
    fn jacobian_of_padded_identity() {
        let v = vars();
        let f = PolynomialMap::new(&v, ["x", "y", "z", "0", "0"].iter().map(|s| p(s)).collect());
        let j = jacobian(&f);
        for i in 0..3 {
            for c in 0..3 {
                let expect = if i == c { p("1") } else { p("0") };
                assert_eq!(*j.entry(i, c), expect);
            }
        }
        for i in 3..5 {
            for c in 0..3 {
                assert!(j.entry(i, c).is_zero());
            }
        }
    }

    #[test]
    fn single_two_by_two_minor() {
        let m = PolyMatrix::new(2, 2, vec![p("x"), p("y"), p("z"), p("z")]).unwrap();
        let minors = m.minors(2).unwrap();
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[0], p("x*z - y*z"));
    }

    #[test]
    fn whitney_minors_count_and_first() {
        let j = jacobian(&whitney3());
        let minors = j.minors(3).unwrap();
        assert_eq!(minors.len(), 10);
        // rows {0,1,2}: det [[2x,0,0],[0,1,0],[0,0,1]] = 2x
        assert_eq!(minors[0], p("2*x"));
        assert!(j.minors(4).is_err());
        assert!(j.minors(0).is_err());
    }

    #[test]
    fn rank_deficient_minors_vanish() {
        // third column = first + second, every 3-minor must vanish
        let v = vars();
        let mut entries = Vec::new();
        for r in 0..5 {
            let a = p(&format!("x^{}", r + 1));
            let b = p(&format!("y^{}", r + 1));
            let c = &a + &b;
            entries.extend([a, b, c]);
        }
        let m = PolyMatrix::new(5, 3, entries).unwrap();
        for minor in m.minors(3).unwrap() {
            assert!(minor.is_zero());
        }
        let _ = v;
    }

    #[test]
    fn bareiss_matches_cofactor_on_random_matrices() {
        // deterministic "random" entries via a small linear congruence
        let v = vars();
        let mut state = 41u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for n in 1..=4 {
            let mut entries = Vec::new();
            for _ in 0..n * n {
                // sparse mix of constants and variables
                let c = next();
                let which = next().rem_euclid(3) as usize;
                let base = Polynomial::variable(&v, which).unwrap();
                let poly = &base.scale(&rat(c)) + &Polynomial::constant(&v, rat(next()));
                entries.push(poly);
            }
            let m = PolyMatrix::new(n, n, entries).unwrap();
            let bareiss = m.det().unwrap();
            let all: Vec<usize> = (0..n).collect();
            let mut memo = HashMap::new();
            let cofactor = m.minor_memo(&all, &all, &v, &mut memo);
            assert_eq!(bareiss, cofactor, "n = {n}");
        }
    }

    #[test]
    fn combinations_order() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
