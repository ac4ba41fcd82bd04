use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::summary::SpectralSummary;

/// Slack allowed on every floating-point comparison against a spectral bound.
pub const SPECTRAL_TOL: f64 = 1e-6;

/// Alon: an (n, d, λ)-graph has toughness t > (1/3)(d^2/(λd + λ^2) - 1).
pub fn alon_toughness_bound(d: f64, lambda: f64) -> Result<f64> {
    if d <= 0.0 || lambda <= 0.0 || !lambda.is_finite() {
        return Err(Error::BadParameter(format!(
            "toughness bound needs d > 0 and λ > 0, got d = {d}, λ = {lambda}"
        )));
    }
    Ok((d * d / (lambda * d + lambda * lambda) - 1.0) / 3.0)
}

/// Ratio bound α <= n (θn - d) / θn. Returns n when θn <= d (vacuous).
pub fn ratio_independence_bound(n: f64, d: f64, theta_n: f64) -> f64 {
    if d <= 0.0 || theta_n <= d {
        return n;
    }
    n * (theta_n - d) / theta_n
}

/// (n θ2 / 4, n θn / 4): the bisection estimate (without its unquantified
/// 1 + o(1) factor) and the bip upper bound.
pub fn bisection_and_bip_bounds(n: f64, theta2: f64, theta_n: f64) -> (f64, f64) {
    (n * theta2 / 4.0, n * theta_n / 4.0)
}

/// χ >= n / α.
pub fn chromatic_lower_bound(n: f64, independence_upper: f64) -> f64 {
    n / independence_upper
}

/// Σ_{uv ∈ E} (x_u - x_v)^2 / Σ x_u^2 after projecting x orthogonally to
/// the all-ones vector.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch(x.len(), g.n()));
    }
    let mean = x.iter().sum::<f64>() / x.len().max(1) as f64;
    let y: Vec<f64> = x.iter().map(|v| v - mean).collect();
    let norm2: f64 = y.iter().map(|v| v * v).sum();
    if norm2.sqrt() < 1e-9 {
        return Err(Error::ZeroVector);
    }
    let num: f64 = g.edges().map(|(u, v)| (y[u] - y[v]).powi(2)).sum();
    Ok(num / norm2)
}

/// Every eigenvalue after the first satisfies |λ| <= 2 √q (+ tolerance).
pub fn ramanujan_check(summary: &SpectralSummary, q: u32) -> bool {
    let cap = 2.0 * (q as f64).sqrt() + SPECTRAL_TOL;
    summary.eigenvalues.iter().skip(1).all(|l| l.abs() <= cap)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralBounds {
    pub toughness_lower: f64,
    pub independence_upper: f64,
    pub bisection_lower: f64,
    pub bip_upper: f64,
    pub chromatic_lower: f64,
}

impl SpectralBounds {
    /// Bounds from a measured spectrum.
    pub fn from_summary(s: &SpectralSummary) -> Result<Self> {
        Self::from_parameters(s.n as f64, s.degree as f64, s.lambda, s.theta2, s.theta_n)
    }

    /// Bounds with λ replaced by the 2√q cap: θ2 >= d - 2√q, θn <= d + 2√q.
    pub fn from_cap(n: f64, d: f64, q: u32) -> Result<Self> {
        let cap = 2.0 * (q as f64).sqrt();
        Self::from_parameters(n, d, cap, d - cap, d + cap)
    }

    fn from_parameters(n: f64, d: f64, lambda: f64, theta2: f64, theta_n: f64) -> Result<Self> {
        let independence_upper = ratio_independence_bound(n, d, theta_n);
        let (bisection_lower, bip_upper) = bisection_and_bip_bounds(n, theta2, theta_n);
        Ok(SpectralBounds {
            toughness_lower: alon_toughness_bound(d, lambda)?,
            independence_upper,
            bisection_lower,
            bip_upper,
            chromatic_lower: chromatic_lower_bound(n, independence_upper),
        })
    }
}
