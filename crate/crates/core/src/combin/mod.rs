//! Pure combinatorics: weak separation and sortedness, interlacing lattice paths,
//! enumerations, chord graphs on the circle, alcove geometry and grid paths.

mod alcove;
mod cliques;
mod graph2;
mod gridpath;
mod lattice;
mod nonneg;
mod separation;
mod sorted;

pub use alcove::{
    affine_dimension, count_alcoves, entry_label, entry_labels, is_sort_closed, maximal_sorted_within, separating_hyperplanes,
    separation_distance, sorting_witness, IntervalHyperplane,
};
pub use cliques::maximal_cliques;
pub use graph2::{
    catalan, complete_to_maximal_thrackle, complete_to_triangulation, edges_cross, enumerate_maximal_thrackles,
    enumerate_triangulations, maximal_thrackles_by_cliques, Graph2, ThrackleShape,
};
pub use gridpath::{grid_paths, transposed_grid_paths, GridPath};
pub use lattice::{classify_pair, dyck_rotation, lattice_path, pair_from_params, Classification, LatticePath, PairClass, Step};
pub use nonneg::{nonneg_gr2_bruteforce, nonneg_gr2_max, nonneg_gr2_optimum, Gr2Optimum};
pub use separation::{
    greedy_ws_completion, is_maximal_ws, is_sorted, is_sorted_collection, is_weakly_separated, is_ws_collection, lex_k_subsets,
};
pub use sorted::{enumerate_maximal_sorted, enumerate_maximal_ws, eulerian, eulerian_by_descents};
