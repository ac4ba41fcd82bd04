use serde::{Deserialize, Serialize};

/// Environment variable overriding [`Limits::max_n`].
pub const MAX_N_ENV: &str = "RAMSEY_FORGE_MAX_N";

/// Resource caps shared by builders, oracles and the eigensolver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest graph any builder will materialize.
    pub max_n: u64,
    pub dense_max_n: usize,
    pub jacobi_max_sweeps: usize,
    pub toughness_max_n: usize,
    pub independence_max_n: usize,
    /// Branch-and-bound node budget for exact independence.
    pub node_budget: u64,
    pub cut_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 200_000,
            dense_max_n: 2500,
            jacobi_max_sweeps: 100,
            toughness_max_n: 16,
            independence_max_n: 300,
            node_budget: 100_000_000,
            cut_max_n: 20,
        }
    }
}

impl Limits {
    /// Defaults, with `max_n` taken from the environment when set.
    pub fn from_env() -> Result<Self, String> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_N_ENV) {
            limits.max_n = raw
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_N_ENV}={raw:?} is not a vertex count"))?;
        }
        Ok(limits)
    }
}
