//! The one-move-per-step solver that walks pieces home in numerical order
//! along the peeling home configuration: top row, left column, remainder of
//! the second row, and so on.

use crate::board::{BoardKind, Position};
use crate::config::{home_naive, naive_peel_order, Configuration};
use crate::error::Error;
use crate::moves::MoveTrace;
use crate::rec::Recorder;
use crate::region::{RegionRef, View};
use crate::sq::homing::Engine;

/// Solves a labeled square configuration to [`home_naive`]. Every step is a
/// single move; the move count grows linearly in `n * m`.
pub fn solve_naive(c: &Configuration) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    if geom.kind != BoardKind::Square || geom.rows != geom.cols {
        return Err(Error::precondition("solve_naive runs on square m x m boards"));
    }
    let m = geom.rows;
    let n = c.piece_count();
    if n + 2 > geom.cell_count() {
        return Err(Error::precondition(format!("solve_naive needs two holes: n={n}, m={m}")));
    }
    if n > 0 && !c.is_labeled() {
        return Err(Error::precondition("solve_naive needs a labeled configuration"));
    }

    let order = naive_peel_order(m);
    let mut rec = Recorder::new(c.clone());
    let view = View::of(RegionRef::full(m, m));
    let mut eng = Engine::new(&mut rec, view)?;

    // Peel segments: shell l contributes its row cells then its column cells.
    let mut rank = 0usize;
    for l in 0..m {
        let row_seg: Vec<Position> = (l..m).map(|cc| Position::new(l, cc)).collect();
        let col_seg: Vec<Position> = (l + 1..m).map(|r| Position::new(r, l)).collect();
        for seg in [row_seg, col_seg] {
            if seg.is_empty() || rank >= n {
                continue;
            }
            let assigned = (n - rank).min(seg.len());
            if assigned == seg.len() && seg.len() >= 2 {
                for (i, &cell) in seg[..seg.len() - 2].iter().enumerate() {
                    eng.place((rank + i) as u32 + 1, cell)?;
                }
                let a_rank = rank + seg.len() - 2;
                // The overflow cell sits one step past the segment end,
                // perpendicular to it: below for row segments, right for
                // column segments.
                let last = seg[seg.len() - 1];
                let overflow = if seg[0].row == last.row {
                    Position::new(last.row + 1, last.col)
                } else {
                    Position::new(last.row, last.col + 1)
                };
                eng.place_last_two(
                    (a_rank as u32 + 1, seg[seg.len() - 2]),
                    (a_rank as u32 + 2, last),
                    overflow,
                )?;
            } else {
                for (i, &cell) in seg[..assigned].iter().enumerate() {
                    eng.place((rank + i) as u32 + 1, cell)?;
                }
            }
            rank += assigned;
        }
        if rank >= n {
            break;
        }
    }

    let home = home_naive(n, m)?;
    if rec.cfg != home {
        return Err(Error::internal("solve_naive did not reach the home configuration"));
    }
    Ok(MoveTrace::new(c.clone(), rec.steps))
}
