use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{connection_set, FamilySpec, Graph};

use super::jacobi::{jacobi_eigen, EigenDecomposition, SymMatrix};

/// Off-diagonal stopping threshold relative to ||A||_F.
pub const JACOBI_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralMethod {
    Dense,
    CharacterSum,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub n: usize,
    pub degree: usize,
    /// λ1 >= ... >= λn.
    pub eigenvalues: Vec<f64>,
    /// max |λi| over i >= 2.
    pub lambda: f64,
    /// d - λ2.
    pub theta2: f64,
    /// d - λn.
    pub theta_n: f64,
    pub method: SpectralMethod,
}

impl SpectralSummary {
    pub fn from_eigenvalues(degree: usize, mut eigenvalues: Vec<f64>, method: SpectralMethod) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let n = eigenvalues.len();
        let lambda = eigenvalues.iter().skip(1).map(|x| x.abs()).fold(0.0, f64::max);
        let d = degree as f64;
        let theta2 = eigenvalues.get(1).map_or(0.0, |l2| d - l2);
        let theta_n = eigenvalues.last().map_or(0.0, |ln| d - ln);
        SpectralSummary {
            n,
            degree,
            eigenvalues,
            lambda,
            theta2,
            theta_n,
            method,
        }
    }

    /// Number of eigenvalues within `tol` of the degree.
    pub fn degree_multiplicity(&self, tol: f64) -> usize {
        let d = self.degree as f64;
        self.eigenvalues.iter().filter(|&&x| (x - d).abs() <= tol).count()
    }

    /// Largest elementwise gap between two sorted spectra.
    pub fn max_deviation(&self, other: &SpectralSummary) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

fn require_regular(g: &Graph) -> Result<usize> {
    g.regular_degree()
        .ok_or_else(|| Error::BadParameter("spectral summary needs a regular graph".into()))
}

/// Full eigendecomposition of the adjacency matrix.
pub fn dense_eigen(g: &Graph, max_n: usize, max_sweeps: usize, vectors: bool) -> Result<EigenDecomposition> {
    if g.n() > max_n {
        return Err(Error::TooLarge {
            what: "dense eigensolve",
            n: g.n(),
            limit: max_n,
        });
    }
    jacobi_eigen(&adjacency_matrix(g), vectors, JACOBI_REL_TOL, max_sweeps)
}

pub fn dense_spectrum(g: &Graph, max_n: usize, max_sweeps: usize) -> Result<SpectralSummary> {
    let d = require_regular(g)?;
    let e = dense_eigen(g, max_n, max_sweeps, false)?;
    Ok(SpectralSummary::from_eigenvalues(d, e.values, SpectralMethod::Dense))
}

/// Eigenvalue of each character, indexed like the vertices: for (Z_p)^m,
/// λ_u = Σ_s cos(2π<u,s>/p); for (Z_2)^N a Walsh–Hadamard transform of
/// the connection-set indicator.
pub fn cayley_character_eigenvalues(family: &FamilySpec) -> Result<Vec<f64>> {
    let conn = connection_set(family)?;
    match *family {
        FamilySpec::Euclidean { q, m, .. } => {
            let n = (q as usize).pow(m);
            let cos: Vec<f64> = (0..q).map(|t| (2.0 * PI * t as f64 / q as f64).cos()).collect();
            let digits = |mut v: usize| -> Vec<u64> {
                (0..m)
                    .map(|_| {
                        let d = (v % q as usize) as u64;
                        v /= q as usize;
                        d
                    })
                    .collect()
            };
            let conn_digits: Vec<Vec<u64>> = conn.iter().map(|&s| digits(s as usize)).collect();
            Ok((0..n)
                .into_par_iter()
                .map(|u| {
                    let ud = digits(u);
                    conn_digits
                        .iter()
                        .map(|sd| {
                            let dot: u64 = ud.iter().zip(sd).map(|(a, b)| a * b).sum();
                            cos[(dot % q as u64) as usize]
                        })
                        .sum()
                })
                .collect())
        }
        FamilySpec::CodeBch { .. } | FamilySpec::CodeAlon { .. } => {
            let n = family.vertex_count() as usize;
            let mut f = vec![0i64; n];
            for &s in &conn {
                f[s as usize] = 1;
            }
            walsh_hadamard(&mut f);
            Ok(f.into_iter().map(|x| x as f64).collect())
        }
        FamilySpec::NonEuclidean { .. } => Err(Error::UnsupportedFamily(family.to_string())),
    }
}

/// In-place unnormalized fast Walsh–Hadamard transform.
pub fn walsh_hadamard(f: &mut [i64]) {
    let n = f.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in f.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

pub fn cayley_spectrum_abelian(family: &FamilySpec) -> Result<SpectralSummary> {
    let values = cayley_character_eigenvalues(family)?;
    let degree = connection_set(family)?.len();
    Ok(SpectralSummary::from_eigenvalues(degree, values, SpectralMethod::CharacterSum))
}

/// Character sums for abelian Cayley families, dense Jacobi otherwise.
pub fn spectrum(g: &Graph, max_n: usize, max_sweeps: usize) -> Result<SpectralSummary> {
    match g.family() {
        Some(f) if !matches!(f, FamilySpec::NonEuclidean { .. }) => cayley_spectrum_abelian(f),
        _ => dense_spectrum(g, max_n, max_sweeps),
    }
}
