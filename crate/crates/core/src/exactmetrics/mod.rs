//! Ground-truth combinatorics: BFS metrics, triangle counts and the
//! exponential-time exact oracles used to check spectral bounds.

mod bfs;
mod bitset;
mod coloring;
mod cut;
mod independence;
mod toughness;
mod triangles;

pub use bfs::{
    bfs_distances, connected_components, diameter, eccentricity, eccentricity_uniformity_check,
    girth, metrics_report, sample_vertices, Components, Length, MetricsReport,
};
pub use coloring::{greedy_coloring, is_proper, Coloring, ColoringOrder};
pub use cut::{cut_size, exact_max_cut_and_bisection, CutResult};
pub use independence::{exact_independence, greedy_independent_set, is_independent, IndependenceResult};
pub use toughness::{exact_toughness, Toughness, ToughnessResult};
pub use triangles::triangle_count;
