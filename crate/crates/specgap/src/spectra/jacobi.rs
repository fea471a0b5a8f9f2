//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Deterministic: fixed row-major sweep order, no randomized pivoting.
//! Terminates when the off-diagonal Frobenius norm falls below
//! `tol.eig * ||M||_F`; errors after 100 sweeps.

use super::SpectraError;
use crate::tol::Tolerances;

/// Dense symmetric matrix, row-major full storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> SymMatrix {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> SymMatrix {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both (i, j) and (j, i).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// y = M x
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = vec![0.0; n];
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }
}

/// Eigenvalues ascending; `vectors[k]` is the (orthonormal) eigenvector for
/// `values[k]`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

pub fn eigen_symmetric(m: &SymMatrix, tol: &Tolerances) -> Result<Eigen, SpectraError> {
    eigen_impl(m, tol, true)
}

/// Eigenvalues only; skips eigenvector accumulation.
pub fn eigen_values(m: &SymMatrix, tol: &Tolerances) -> Result<Vec<f64>, SpectraError> {
    Ok(eigen_impl(m, tol, false)?.values)
}

fn eigen_impl(m: &SymMatrix, tol: &Tolerances, want_vectors: bool) -> Result<Eigen, SpectraError> {
    let n = m.n();
    for i in 0..n {
        for j in (i + 1)..n {
            if (m.data[i * n + j] - m.data[j * n + i]).abs() > tol.eig {
                return Err(SpectraError::NotSymmetric);
            }
        }
    }
    if n == 0 {
        return Ok(Eigen {
            values: vec![],
            vectors: vec![],
        });
    }

    let norm = m.frobenius();
    let target = tol.eig * norm;
    let mut a = m.clone();
    // vt[j] is the j-th eigenvector candidate (a row of V^T), so rotations
    // touch two contiguous rows
    let mut vt = if want_vectors {
        let mut vt = vec![0.0f64; n * n];
        for i in 0..n {
            vt[i * n + i] = 1.0;
        }
        vt
    } else {
        Vec::new()
    };

    let mut sweeps = 0usize;
    loop {
        let mut off_abs_sum = 0.0f64;
        let mut off_sq_sum = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                let v = a.data[i * n + j];
                off_abs_sum += v.abs();
                off_sq_sum += v * v;
            }
        }
        if (2.0 * off_sq_sum).sqrt() <= target {
            break;
        }
        sweeps += 1;
        if sweeps > 100 {
            return Err(SpectraError::NoConvergence);
        }
        // rotating at barely-nonzero entries wastes whole sweeps on banded
        // input; the early-sweep threshold chases only significant mass
        let thresh = if sweeps <= 3 {
            0.2 * off_abs_sum / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.data[p * n + q];
                if apq == 0.0 || apq.abs() <= thresh {
                    continue;
                }
                let app = a.data[p * n + p];
                let aqq = a.data[q * n + q];
                // entries that cannot move anything at working precision
                if apq.abs() <= f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) && sweeps > 4 {
                    a.data[p * n + q] = 0.0;
                    a.data[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                // rows p and q of A are contiguous; update them, then mirror
                // into the columns to keep both triangles in sync
                let (head, tail) = a.data.split_at_mut(q * n);
                let row_p = &mut head[p * n..p * n + n];
                let row_q = &mut tail[..n];
                for k in 0..n {
                    let akp = row_p[k];
                    let akq = row_q[k];
                    row_p[k] = akp - s * (akq + tau * akp);
                    row_q[k] = akq + s * (akp - tau * akq);
                }
                a.data[p * n + p] = app - t * apq;
                a.data[q * n + q] = aqq + t * apq;
                a.data[p * n + q] = 0.0;
                a.data[q * n + p] = 0.0;
                for k in 0..n {
                    if k != p && k != q {
                        a.data[k * n + p] = a.data[p * n + k];
                        a.data[k * n + q] = a.data[q * n + k];
                    }
                }
                if want_vectors {
                    let (head, tail) = vt.split_at_mut(q * n);
                    let row_p = &mut head[p * n..p * n + n];
                    let row_q = &mut tail[..n];
                    for k in 0..n {
                        let vkp = row_p[k];
                        let vkq = row_q[k];
                        row_p[k] = vkp - s * (vkq + tau * vkp);
                        row_q[k] = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(i, i)
            .partial_cmp(&a.get(j, j))
            .expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors: Vec<Vec<f64>> = if want_vectors {
        order
            .iter()
            .map(|&row| vt[row * n..row * n + n].to_vec())
            .collect()
    } else {
        Vec::new()
    };
    Ok(Eigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &SymMatrix, expect: &[f64]) {
        let e = eigen_symmetric(m, &Tolerances::default()).unwrap();
        for (got, want) in e.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-10, "got {got}, want {want}");
        }
        // residuals
        for (lam, vec) in e.values.iter().zip(&e.vectors) {
            let mv = m.mul_vec(vec);
            let resid: f64 = mv
                .iter()
                .zip(vec)
                .map(|(a, b)| (a - lam * b) * (a - lam * b))
                .sum::<f64>()
                .sqrt();
            assert!(resid < 1e-8, "residual {resid}");
        }
    }

    #[test]
    fn two_by_two_swap() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, 1.0);
        check(&m, &[-1.0, 1.0]);
    }

    #[test]
    fn k5_laplacian_spectrum() {
        let m = SymMatrix::from_fn(5, |i, j| if i == j { 4.0 } else { -1.0 });
        check(&m, &[0.0, 5.0, 5.0, 5.0, 5.0]);
    }

    #[test]
    fn p4_laplacian_matches_closed_form() {
        let mut m = SymMatrix::zeros(4);
        for v in 0..4usize {
            let d = if v == 0 || v == 3 { 1.0 } else { 2.0 };
            m.set(v, v, d);
        }
        for v in 0..3usize {
            m.set(v, v + 1, -1.0);
        }
        let expect: Vec<f64> = (0..4)
            .map(|i| 2.0 * (1.0 - (i as f64 * std::f64::consts::PI / 4.0).cos()))
            .collect();
        check(&m, &expect);
    }

    #[test]
    fn asymmetric_rejected() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, 1.0);
        m.data[1] = 1.0 + 1e-6; // break symmetry directly
        assert!(matches!(
            eigen_symmetric(&m, &Tolerances::default()),
            Err(SpectraError::NotSymmetric)
        ));
    }
}
