//! Sliding-piece puzzles on square grids and hexagon parallelograms.
//!
//! The crate models the discrete configuration spaces of both tilings, where
//! one time step moves any number of pieces into holes simultaneously. It
//! provides construction of linear-depth mesh sorting networks, solvers that
//! drive any configuration home in a number of steps linear in the board
//! side, and exact breadth-first-search and matching oracles that verify
//! traces, distances, and connectivity claims on small boards.

pub mod board;
pub mod config;
pub mod error;
pub mod moves;
pub mod sortnet;
pub mod region;
pub(crate) mod rec;
pub mod sq;
pub mod oracle;
pub mod hex;

pub use board::{BoardGeometry, BoardKind, Ordering, Position};
pub use config::{Cell, Configuration};
pub use error::Error;
pub use moves::{AtomicMove, MoveTrace, ParallelStep};
