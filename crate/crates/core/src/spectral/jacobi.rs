use crate::error::{Error, Result};

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both (i, j) and (j, i).
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let a = self.get(i, j);
                s += 2.0 * a * a;
            }
        }
        s.sqrt()
    }
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`, if requested.
    pub vectors: Option<Vec<Vec<f64>>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi. Sweeps until the off-diagonal Frobenius norm drops below
/// `rel_tol * ||A||_F`.
pub fn jacobi_eigen(
    matrix: &SymMatrix,
    want_vectors: bool,
    rel_tol: f64,
    max_sweeps: usize,
) -> Result<EigenDecomposition> {
    let n = matrix.n;
    let mut a = matrix.clone();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    let target = rel_tol * matrix.frobenius();
    let mut sweeps = 0;
    while a.off_diagonal() > target {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence(max_sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.data[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a.data[p * n + p];
                let aqq = a.data[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.data[k * n + p];
                    let akq = a.data[k * n + q];
                    let new_kp = akp - s * (akq + tau * akp);
                    let new_kq = akq + s * (akp - tau * akq);
                    a.data[k * n + p] = new_kp;
                    a.data[p * n + k] = new_kp;
                    a.data[k * n + q] = new_kq;
                    a.data[q * n + k] = new_kq;
                }
                a.data[p * n + p] = app - t * apq;
                a.data[q * n + q] = aqq + t * apq;
                a.data[p * n + q] = 0.0;
                a.data[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    // Columns of v accumulate the rotations.
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp - s * (vkq + tau * vkp);
                        v[k * n + q] = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = v.map(|v| {
        order
            .iter()
            .map(|&col| (0..n).map(|k| v[k * n + col]).collect())
            .collect()
    });
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
    })
}
