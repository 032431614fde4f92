//! Hexagon-board solvers.

pub(crate) mod walk;
pub(crate) mod gather;
pub(crate) mod gadget;
pub(crate) mod gaits;
pub(crate) mod push;
pub use push::{hex_push, zigzag_column, ZigzagDirection};
pub(crate) mod turn;
pub(crate) mod move_holes;
pub use gadget::{sort_with_six_holes, transpose_adjacent};
pub use gather::gather_holes;
