//! Explicit triangle-free graphs from finite geometry.
//!
//! Builds quadrance graphs D_q^m(a), finite upper-half-plane graphs
//! V_q(σ, a) and the binary code graphs, measures them with exact
//! combinatorial oracles and a dense eigensolver, and emits machine-checkable
//! certificates (including R(3, k) lower bounds).

pub mod algebra;
pub mod certify;
pub mod error;
pub mod exactmetrics;
pub mod graphs;
pub mod limits;
pub mod spectral;

pub use error::{Error, Result};
pub use graphs::{FamilySpec, Graph};
pub use limits::Limits;
