//! Plabic graphs: strands, reducedness, face labels, moves, honeycombs and chain reactions.

mod dot;
mod graph;
mod honeycomb;
mod moves;
mod strands;

use thiserror::Error;

pub use dot::export_dot;
pub use graph::{Color, PlabicGraph};
pub use honeycomb::{
    chain_reaction, honeycomb, honeycomb_with_blocks, layered_chain_reaction, layered_honeycomb, plabic_from_collection, project_pi, Blocks,
    ChainReaction, Honeycomb,
};
pub use moves::{apply_move, apply_move_mut, is_square_face, normalize, random_move, square_move_at, Move, MoveColor, MoveScript};
pub use strands::{DecoratedPermutation, FaceLabeling, Faces, Strand, Violation};

#[derive(Debug, Error)]
pub enum PlabicError {
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("graph is not reduced: {0}")]
    NotReduced(Violation),
    #[error("move does not apply: {0}")]
    PatternMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
