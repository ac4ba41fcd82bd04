//! Adjacency spectra (dense Jacobi and exact character sums) and the
//! spectral bounds on toughness, independence, cuts and chromatic number.

mod bounds;
mod jacobi;
mod summary;

pub use bounds::{
    alon_toughness_bound, bisection_and_bip_bounds, chromatic_lower_bound, ramanujan_check,
    ratio_independence_bound, rayleigh_quotient, SpectralBounds, SPECTRAL_TOL,
};
pub use jacobi::{jacobi_eigen, EigenDecomposition, SymMatrix};
pub use summary::{
    adjacency_matrix, cayley_character_eigenvalues, cayley_spectrum_abelian, dense_eigen,
    dense_spectrum, spectrum, walsh_hadamard, SpectralMethod, SpectralSummary, JACOBI_REL_TOL,
};
