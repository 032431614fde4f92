//! Square-board algorithms: segment pushing, hole turning, hole moving, the
//! numerical-order solver, block-pair sorting, and the linear-step main
//! solver. Every operation emits a validated [`MoveTrace`].

pub(crate) mod block_pair;
pub(crate) mod holes;
pub(crate) mod homing;
pub(crate) mod main_solver;
pub(crate) mod naive;

pub use block_pair::{sort_block_pair, LowBlock};
pub use main_solver::{choose_block_side, solve_main};
pub use naive::solve_naive;

use crate::board::{BoardKind, Position};
use crate::config::Configuration;
use crate::error::Error;
use crate::moves::MoveTrace;
use crate::rec::Recorder;
use crate::region::{RegionRef, View};

/// Which end of a segment the holes are pushed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentEnd {
    /// The (top, left) end of the segment.
    Low,
    /// The (bottom, right) end.
    High,
}

fn segment_cells(segment: RegionRef, toward: SegmentEnd) -> Result<Vec<Position>, Error> {
    if segment.rows != 1 && segment.cols != 1 {
        return Err(Error::precondition("push_segment needs a 1 x m or m x 1 segment"));
    }
    let view = View::of(segment);
    let mut cells: Vec<Position> = if segment.rows == 1 {
        (0..view.cols()).map(|c| view.at(0, c)).collect()
    } else {
        (0..segment.rows).map(|r| View::of(segment).at(r, 0)).collect()
    };
    // Holes pack at the tail of the cell order.
    if toward == SegmentEnd::Low {
        cells.reverse();
    }
    Ok(cells)
}

/// Pushes the holes of a one-cell-wide segment from one end to the other.
/// The holes must form a prefix at the opposite end; the pipelined schedule
/// finishes within `segment length` steps.
pub fn push_segment(c: &Configuration, segment: RegionRef, toward: SegmentEnd) -> Result<MoveTrace, Error> {
    check_square(c)?;
    check_region(c, segment)?;
    let cells = segment_cells(segment, toward)?;
    let holes = cells.iter().filter(|&&p| c.is_hole(p)).count();
    // Precondition: holes form a prefix at the start of the packing order.
    let prefix_ok = cells.iter().take(holes).all(|&p| c.is_hole(p));
    if !prefix_ok {
        return Err(Error::precondition("segment holes must form a prefix at the far end"));
    }
    let mut rec = Recorder::new(c.clone());
    rec.extend(holes::pack_holes_to_end_steps(&rec.cfg, &cells));
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

/// The number of steps the pipelined schedule needs: zero when the segment is
/// all holes or all pieces, one less than the length otherwise.
pub fn pipelined_push_steps(len: usize, holes: usize) -> usize {
    if holes == 0 || holes == len {
        0
    } else {
        len - 1
    }
}

/// Turns the holes of a region from the column-major prefix into the
/// row-major prefix of the same size. Both region sides must be powers of
/// two.
pub fn turn_holes(c: &Configuration, region: RegionRef) -> Result<MoveTrace, Error> {
    check_square(c)?;
    check_region(c, region)?;
    if !region.rows.is_power_of_two() || !region.cols.is_power_of_two() {
        return Err(Error::precondition("turn_holes needs power-of-two region sides"));
    }
    let view = View::of(region);
    let n = holes::hole_count(c, &view);
    if !holes::is_cm_prefix(c, &view, n) {
        return Err(Error::precondition("turn_holes starts from the column-major hole prefix"));
    }
    let mut rec = Recorder::new(c.clone());
    holes::turn_cm_to_rm(&mut rec, &view)?;
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

/// Moves the board's holes, wherever they start, into the row-major prefix.
/// The board side must be a power of two.
pub fn move_holes(c: &Configuration) -> Result<MoveTrace, Error> {
    check_square(c)?;
    let geom = *c.geometry();
    if geom.rows != geom.cols || !geom.rows.is_power_of_two() {
        return Err(Error::precondition("move_holes runs on power-of-two square boards"));
    }
    let mut rec = Recorder::new(c.clone());
    holes::move_to_rm(&mut rec, &View::of(RegionRef::full(geom.rows, geom.cols)))?;
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

fn check_square(c: &Configuration) -> Result<(), Error> {
    if c.geometry().kind != BoardKind::Square {
        return Err(Error::precondition("square-board operation"));
    }
    Ok(())
}

fn check_region(c: &Configuration, region: RegionRef) -> Result<(), Error> {
    let geom = c.geometry();
    if region.rows == 0
        || region.cols == 0
        || region.top + region.rows > geom.rows
        || region.left + region.cols > geom.cols
    {
        return Err(Error::precondition("region out of bounds"));
    }
    Ok(())
}
