//! The four graph families as CSR adjacency with frozen vertex codecs.

mod build;
mod export;
mod family;
mod graph;

pub use build::{
    alon_connection_set, bch_connection_set, build, build_code_graph_alon, build_code_graph_bch,
    build_euclidean, build_non_euclidean, connection_set, euclidean_connection_set, AlonConnection,
};
pub use export::{export_graph, read_dimacs, ExportFormat};
pub use family::{euclidean_degree, euclidean_degree_unit_form, FamilySpec};
pub use graph::Graph;
