//! Dense real eigenvalue decomposition: Householder reduction to
//! Hessenberg form followed by the implicit double-shift QR iteration,
//! with accumulated transformations and eigenvector back-substitution.
//!
//! This follows the classical Algol `orthes`/`hqr2` procedures of Martin
//! and Wilkinson (Handbook for Automatic Computation, Vol. II) as carried
//! into EISPACK and JAMA.

use super::fmat::FMat;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenError {
    #[error("QR iteration failed to converge after {iterations} sweeps")]
    NonConvergence { iterations: usize },
}

/// Eigenvalues `re[k] + i im[k]` and eigenvectors of a real square matrix.
///
/// For a real eigenvalue `k`, column `k` of `vectors` is its eigenvector.
/// A complex conjugate pair occupies two consecutive slots `k`, `k+1` with
/// `im[k] = -im[k+1] > 0` storing the real and imaginary vector parts.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
    pub vectors: FMat,
}

/// Full eigenvalue decomposition of a dense real matrix.
pub fn eig(a: &FMat) -> Result<Eigen, EigenError> {
    assert_eq!(a.rows, a.cols, "eig needs a square matrix");
    let n = a.rows;
    if n == 0 {
        return Ok(Eigen {
            re: Vec::new(),
            im: Vec::new(),
            vectors: FMat::zeros(0, 0),
        });
    }
    let mut h = a.clone();
    let mut v = FMat::identity(n);
    orthes(n, &mut h, &mut v);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    hqr2(n, &mut d, &mut e, &mut h, &mut v)?;
    Ok(Eigen {
        re: d,
        im: e,
        vectors: v,
    })
}

/// Householder reduction to upper Hessenberg form, accumulating the
/// orthogonal similarity in `v`.
fn orthes(n: usize, h: &mut FMat, v: &mut FMat) {
    if n < 3 {
        return;
    }
    let high = n - 1;
    let mut ort = vec![0.0; n];
    for m in 1..high {
        let mut scale = 0.0;
        for i in m..=high {
            scale += h[(i, m - 1)].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut hh = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[(i, m - 1)] / scale;
            hh += ort[i] * ort[i];
        }
        let mut g = hh.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hh -= ort[m] * g;
        ort[m] -= g;

        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * h[(i, j)];
            }
            f /= hh;
            for i in m..=high {
                h[(i, j)] -= f * ort[i];
            }
        }
        for i in 0..=high {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * h[(i, j)];
            }
            f /= hh;
            for j in m..=high {
                h[(i, j)] -= f * ort[j];
            }
        }
        ort[m] *= scale;
        h[(m, m - 1)] = scale * g;
    }

    for m in (1..high).rev() {
        if h[(m, m - 1)] == 0.0 {
            continue;
        }
        for i in m + 1..=high {
            ort[i] = h[(i, m - 1)];
        }
        for j in m..=high {
            let mut g = 0.0;
            for i in m..=high {
                g += ort[i] * v[(i, j)];
            }
            // double division avoids possible underflow
            g = (g / ort[m]) / h[(m, m - 1)];
            for i in m..=high {
                v[(i, j)] += g * ort[i];
            }
        }
    }
}

/// Scaled complex division `(xr + i xi) / (yr + i yi)`.
fn cdiv(xr: f64, xi: f64, yr: f64, yi: f64) -> (f64, f64) {
    if yr.abs() > yi.abs() {
        let r = yi / yr;
        let d = yr + r * yi;
        ((xr + r * xi) / d, (xi - r * xr) / d)
    } else {
        let r = yr / yi;
        let d = yi + r * yr;
        ((r * xr + xi) / d, (r * xi - xr) / d)
    }
}

/// Hessenberg to real Schur form with eigenvectors.
#[allow(clippy::too_many_lines)]
fn hqr2(
    size: usize,
    d: &mut [f64],
    e: &mut [f64],
    h: &mut FMat,
    v: &mut FMat,
) -> Result<(), EigenError> {
    let nn = size as isize;
    let mut n = nn - 1;
    let low: isize = 0;
    let high = nn - 1;
    let eps = 2.0f64.powi(-52);
    let mut exshift = 0.0;
    let (mut p, mut q, mut r, mut s, mut z) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let (mut t, mut w, mut x, mut y);

    let hget = |h: &FMat, i: isize, j: isize| h[(i as usize, j as usize)];

    let mut norm = 0.0;
    for i in 0..nn {
        for j in (i - 1).max(0)..nn {
            norm += hget(h, i, j).abs();
        }
    }

    let mut iter = 0;
    let mut total_iter = 0usize;
    let iter_budget = 100 * size.max(1);
    while n >= low {
        // find a single small subdiagonal element
        let mut l = n;
        while l > low {
            s = hget(h, l - 1, l - 1).abs() + hget(h, l, l).abs();
            if s == 0.0 {
                s = norm;
            }
            if hget(h, l, l - 1).abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // one root found
            let hnn = hget(h, n, n) + exshift;
            h[(n as usize, n as usize)] = hnn;
            d[n as usize] = hnn;
            e[n as usize] = 0.0;
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            // two roots found
            w = hget(h, n, n - 1) * hget(h, n - 1, n);
            p = (hget(h, n - 1, n - 1) - hget(h, n, n)) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            let hnn = hget(h, n, n) + exshift;
            h[(n as usize, n as usize)] = hnn;
            let hn1 = hget(h, n - 1, n - 1) + exshift;
            h[((n - 1) as usize, (n - 1) as usize)] = hn1;
            x = hnn;

            if q >= 0.0 {
                // real pair
                z = if p >= 0.0 { p + z } else { p - z };
                d[(n - 1) as usize] = x + z;
                d[n as usize] = d[(n - 1) as usize];
                if z != 0.0 {
                    d[n as usize] = x - w / z;
                }
                e[(n - 1) as usize] = 0.0;
                e[n as usize] = 0.0;
                x = hget(h, n, n - 1);
                s = x.abs() + z.abs();
                p = x / s;
                q = z / s;
                r = (p * p + q * q).sqrt();
                p /= r;
                q /= r;
                for j in (n - 1)..nn {
                    z = hget(h, n - 1, j);
                    h[((n - 1) as usize, j as usize)] = q * z + p * hget(h, n, j);
                    h[(n as usize, j as usize)] = q * hget(h, n, j) - p * z;
                }
                for i in 0..=n {
                    z = hget(h, i, n - 1);
                    h[(i as usize, (n - 1) as usize)] = q * z + p * hget(h, i, n);
                    h[(i as usize, n as usize)] = q * hget(h, i, n) - p * z;
                }
                for i in low..=high {
                    z = v[(i as usize, (n - 1) as usize)];
                    v[(i as usize, (n - 1) as usize)] =
                        q * z + p * v[(i as usize, n as usize)];
                    v[(i as usize, n as usize)] =
                        q * v[(i as usize, n as usize)] - p * z;
                }
            } else {
                // complex pair
                d[(n - 1) as usize] = x + p;
                d[n as usize] = x + p;
                e[(n - 1) as usize] = z;
                e[n as usize] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // no convergence yet: form a shift
            x = hget(h, n, n);
            y = 0.0;
            w = 0.0;
            if l < n {
                y = hget(h, n - 1, n - 1);
                w = hget(h, n, n - 1) * hget(h, n - 1, n);
            }

            // Wilkinson's original ad hoc shift
            if iter == 10 {
                exshift += x;
                for i in low..=n {
                    let cur = hget(h, i, i);
                    h[(i as usize, i as usize)] = cur - x;
                }
                s = hget(h, n, n - 1).abs() + hget(h, n - 1, n - 2).abs();
                y = 0.75 * s;
                x = y;
                w = -0.4375 * s * s;
            }

            // MATLAB's new ad hoc shift
            if iter == 30 {
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in low..=n {
                        let cur = hget(h, i, i);
                        h[(i as usize, i as usize)] = cur - s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = x;
                    w = x;
                }
            }

            iter += 1;
            total_iter += 1;
            if total_iter > iter_budget {
                return Err(EigenError::NonConvergence {
                    iterations: total_iter,
                });
            }

            // two consecutive small subdiagonal elements
            let mut m = n - 2;
            while m >= l {
                z = hget(h, m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / hget(h, m + 1, m) + hget(h, m, m + 1);
                q = hget(h, m + 1, m + 1) - z - r - s;
                r = hget(h, m + 2, m + 1);
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if hget(h, m, m - 1).abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (hget(h, m - 1, m - 1).abs()
                                + z.abs()
                                + hget(h, m + 1, m + 1).abs()))
                {
                    break;
                }
                m -= 1;
            }

            for i in (m + 2)..=n {
                h[(i as usize, (i - 2) as usize)] = 0.0;
                if i > m + 2 {
                    h[(i as usize, (i - 3) as usize)] = 0.0;
                }
            }

            // double QR step on rows l..=n, columns m..=n
            for k in m..n {
                let notlast = k != n - 1;
                if k != m {
                    p = hget(h, k, k - 1);
                    q = hget(h, k + 1, k - 1);
                    r = if notlast { hget(h, k + 2, k - 1) } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s == 0.0 {
                    continue;
                }
                if k != m {
                    h[(k as usize, (k - 1) as usize)] = -s * x;
                } else if l != m {
                    h[(k as usize, (k - 1) as usize)] = -hget(h, k, k - 1);
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for j in k..nn {
                    p = hget(h, k, j) + q * hget(h, k + 1, j);
                    if notlast {
                        p += r * hget(h, k + 2, j);
                        h[((k + 2) as usize, j as usize)] = hget(h, k + 2, j) - p * z;
                    }
                    h[(k as usize, j as usize)] = hget(h, k, j) - p * x;
                    h[((k + 1) as usize, j as usize)] = hget(h, k + 1, j) - p * y;
                }
                for i in 0..=n.min(k + 3) {
                    p = x * hget(h, i, k) + y * hget(h, i, k + 1);
                    if notlast {
                        p += z * hget(h, i, k + 2);
                        h[(i as usize, (k + 2) as usize)] = hget(h, i, k + 2) - p * r;
                    }
                    h[(i as usize, k as usize)] = hget(h, i, k) - p;
                    h[(i as usize, (k + 1) as usize)] = hget(h, i, k + 1) - p * q;
                }
                for i in low..=high {
                    p = x * v[(i as usize, k as usize)]
                        + y * v[(i as usize, (k + 1) as usize)];
                    if notlast {
                        p += z * v[(i as usize, (k + 2) as usize)];
                        v[(i as usize, (k + 2) as usize)] -= p * r;
                    }
                    v[(i as usize, k as usize)] -= p;
                    v[(i as usize, (k + 1) as usize)] -= p * q;
                }
            }
        }
    }

    // back-substitution: eigenvectors of the quasi-triangular form
    if norm == 0.0 {
        return Ok(());
    }
    for nidx in (0..nn).rev() {
        p = d[nidx as usize];
        q = e[nidx as usize];

        if q == 0.0 {
            // real vector
            let mut l = nidx;
            h[(nidx as usize, nidx as usize)] = 1.0;
            for i in (0..nidx).rev() {
                w = hget(h, i, i) - p;
                r = 0.0;
                for j in l..=nidx {
                    r += hget(h, i, j) * hget(h, j, nidx);
                }
                if e[i as usize] < 0.0 {
                    z = w;
                    s = r;
                } else {
                    l = i;
                    if e[i as usize] == 0.0 {
                        h[(i as usize, nidx as usize)] = if w != 0.0 {
                            -r / w
                        } else {
                            -r / (eps * norm)
                        };
                    } else {
                        // solve the real 2x2 system for rows i, i+1
                        x = hget(h, i, i + 1);
                        y = hget(h, i + 1, i);
                        q = (d[i as usize] - p) * (d[i as usize] - p)
                            + e[i as usize] * e[i as usize];
                        t = (x * s - z * r) / q;
                        h[(i as usize, nidx as usize)] = t;
                        h[((i + 1) as usize, nidx as usize)] = if x.abs() > z.abs() {
                            (-r - w * t) / x
                        } else {
                            (-s - y * t) / z
                        };
                    }
                    // overflow control
                    t = hget(h, i, nidx).abs();
                    if (eps * t) * t > 1.0 {
                        for j in i..=nidx {
                            let cur = hget(h, j, nidx);
                            h[(j as usize, nidx as usize)] = cur / t;
                        }
                    }
                }
            }
        } else if q < 0.0 {
            // complex vector for the pair (nidx-1, nidx)
            let mut l = nidx - 1;

            if hget(h, nidx, nidx - 1).abs() > hget(h, nidx - 1, nidx).abs() {
                h[((nidx - 1) as usize, (nidx - 1) as usize)] =
                    q / hget(h, nidx, nidx - 1);
                h[((nidx - 1) as usize, nidx as usize)] =
                    -(hget(h, nidx, nidx) - p) / hget(h, nidx, nidx - 1);
            } else {
                let (cr, ci) = cdiv(
                    0.0,
                    -hget(h, nidx - 1, nidx),
                    hget(h, nidx - 1, nidx - 1) - p,
                    q,
                );
                h[((nidx - 1) as usize, (nidx - 1) as usize)] = cr;
                h[((nidx - 1) as usize, nidx as usize)] = ci;
            }
            h[(nidx as usize, (nidx - 1) as usize)] = 0.0;
            h[(nidx as usize, nidx as usize)] = 1.0;
            for i in (0..nidx - 1).rev() {
                let mut ra = 0.0;
                let mut sa = 0.0;
                for j in l..=nidx {
                    ra += hget(h, i, j) * hget(h, j, nidx - 1);
                    sa += hget(h, i, j) * hget(h, j, nidx);
                }
                w = hget(h, i, i) - p;

                if e[i as usize] < 0.0 {
                    z = w;
                    r = ra;
                    s = sa;
                } else {
                    l = i;
                    if e[i as usize] == 0.0 {
                        let (cr, ci) = cdiv(-ra, -sa, w, q);
                        h[(i as usize, (nidx - 1) as usize)] = cr;
                        h[(i as usize, nidx as usize)] = ci;
                    } else {
                        // solve the complex 2x2 system
                        x = hget(h, i, i + 1);
                        y = hget(h, i + 1, i);
                        let mut vr = (d[i as usize] - p) * (d[i as usize] - p)
                            + e[i as usize] * e[i as usize]
                            - q * q;
                        let vi = (d[i as usize] - p) * 2.0 * q;
                        if vr == 0.0 && vi == 0.0 {
                            vr = eps
                                * norm
                                * (w.abs() + q.abs() + x.abs() + y.abs() + z.abs());
                        }
                        let (cr, ci) = cdiv(
                            x * r - z * ra + q * sa,
                            x * s - z * sa - q * ra,
                            vr,
                            vi,
                        );
                        h[(i as usize, (nidx - 1) as usize)] = cr;
                        h[(i as usize, nidx as usize)] = ci;
                        if x.abs() > z.abs() + q.abs() {
                            h[((i + 1) as usize, (nidx - 1) as usize)] = (-ra
                                - w * hget(h, i, nidx - 1)
                                + q * hget(h, i, nidx))
                                / x;
                            h[((i + 1) as usize, nidx as usize)] = (-sa
                                - w * hget(h, i, nidx)
                                - q * hget(h, i, nidx - 1))
                                / x;
                        } else {
                            let (cr, ci) = cdiv(
                                -r - y * hget(h, i, nidx - 1),
                                -s - y * hget(h, i, nidx),
                                z,
                                q,
                            );
                            h[((i + 1) as usize, (nidx - 1) as usize)] = cr;
                            h[((i + 1) as usize, nidx as usize)] = ci;
                        }
                    }
                    // overflow control
                    t = hget(h, i, nidx - 1).abs().max(hget(h, i, nidx).abs());
                    if (eps * t) * t > 1.0 {
                        for j in i..=nidx {
                            let cr = hget(h, j, nidx - 1) / t;
                            let ci = hget(h, j, nidx) / t;
                            h[(j as usize, (nidx - 1) as usize)] = cr;
                            h[(j as usize, nidx as usize)] = ci;
                        }
                    }
                }
            }
        }
    }

    // back-transform to eigenvectors of the original matrix
    for j in (low..nn).rev() {
        for i in low..=high {
            z = 0.0;
            for k in low..=j.min(high) {
                z += v[(i as usize, k as usize)] * hget(h, k, j);
            }
            v[(i as usize, j as usize)] = z;
        }
    }
    Ok(())
}
