//! Hexagon hole moving: from any configuration in the large connected
//! component to the row-major hole prefix, in steps linear in the board side.
//! Fewer than eight holes are carried directly by the pair walkers. Otherwise
//! eight holes gather into the corner, split into four adjacent pairs, and
//! one pair walks into each quadrant; the quadrants then recurse into
//! column-major order and the half-boards merge and turn as on squares.

use std::collections::HashSet;

use crate::board::Position;
use crate::error::Error;
use crate::rec::Recorder;
use crate::region::View;
use crate::sq::holes::parallel_regions;

use super::gather::{gather_pattern, gather_to_cells, order_with_adjacent_park};
use super::push::{hex_merge_cm, hole_count, is_rm_prefix};
use super::turn::hex_turn_cm_to_rm;
use super::walk::walk_pair;

fn prefix_cells(view: &View, n: usize, row_major: bool) -> Vec<Position> {
    let (h, w) = (view.rows() as usize, view.cols() as usize);
    (0..n)
        .map(|rank| {
            if row_major {
                view.at((rank / w) as u16, (rank % w) as u16)
            } else {
                view.at((rank % h) as u16, (rank / h) as u16)
            }
        })
        .collect()
}

/// Moves the view's holes into its row-major prefix (or column-major with
/// `row_major = false`). The view's holes must not all be isolated unless
/// they already sit on the prefix.
pub(crate) fn hex_move_to_prefix(rec: &mut Recorder, view: &View, row_major: bool) -> Result<(), Error> {
    if !row_major {
        // The column-major prefix is the row-major prefix of the transposed
        // view, and every primitive is transpose-invariant.
        return hex_move_to_prefix(rec, &view.transposed(), true);
    }
    let n = hole_count(&rec.cfg, view);
    let done = |cfg: &crate::config::Configuration| is_rm_prefix(cfg, view, n);
    if done(&rec.cfg) {
        return Ok(());
    }

    if n < 8 || view.rows().min(view.cols()) <= 2 {
        // Carry them all directly.
        let targets =
            order_with_adjacent_park(rec.cfg.geometry(), &prefix_cells(view, n, true))?;
        gather_to_cells(rec, view, &targets)
            .map_err(|e| Error::internal(format!("direct carry on {:?}: {e}", view.region())))?;
    } else {
        let (h, w) = (view.rows(), view.cols());
        let (hh, hw) = (h / 2, w / 2);
        let quads = [
            view.sub(0, 0, hh, hw),
            view.sub(0, hw, hh, hw),
            view.sub(hh, 0, hh, hw),
            view.sub(hh, hw, hh, hw),
        ];

        // Preliminary: an adjacent hole pair in every quadrant. Eight holes
        // gather into the corner and split into four pairs, the farthest
        // quadrant served first.
        let need_pairs = quads.iter().any(|q| !has_interior_pair(rec, q));
        if need_pairs {
            let pattern: Vec<Position> = gather_pattern(h, w, 8)?
                .into_iter()
                .map(|p| view.at(p.row, p.col))
                .collect();
            let pattern = order_with_adjacent_park(rec.cfg.geometry(), &pattern)?;
            gather_to_cells(rec, view, &pattern)
                .map_err(|e| Error::internal(format!("gather-8: {e}")))?;
            // The gathered block: columns 0..2 of the top three rows hold
            // eight holes forming four disjoint adjacent pairs.
            let pairs = [
                (view.at(0, 2), view.at(1, 2)),
                (view.at(2, 0), view.at(2, 1)),
                (view.at(0, 1), view.at(1, 1)),
                (view.at(0, 0), view.at(1, 0)),
            ];
            let mut parked: HashSet<Position> = pattern.iter().copied().collect();
            // Farthest quadrants first: lower-right, lower-left, upper-right,
            // then upper-left keeps the closest pair.
            let order = [3usize, 2, 1, 0];
            for (pair, qi) in pairs.iter().zip(order) {
                let q = quads[qi];
                parked.remove(&pair.0);
                parked.remove(&pair.1);
                let forbidden: HashSet<Position> = parked.clone();
                let end = walk_pair(rec, view, *pair, &forbidden, |a, b| {
                    q.contains(a) && q.contains(b)
                })
                .map_err(|e| Error::internal(format!("pair delivery to {:?}: {e}", q.region())))?;
                parked.insert(end.0);
                parked.insert(end.1);
            }
        }

        // Quadrants into column-major order (the transposed recursion).
        {
            let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = quads
                .into_iter()
                .map(|q| {
                    Box::new(move |r: &mut Recorder| hex_move_to_prefix(r, &q, false)) as Box<_>
                })
                .collect();
            parallel_regions(rec, tasks)?;
        }
        // Merge the quadrant pairs into half-board column-major prefixes.
        {
            let upper = view.sub(0, 0, hh, w);
            let lower = view.sub(hh, 0, hh, w);
            let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = vec![
                Box::new(move |r: &mut Recorder| hex_merge_cm(r, &upper)),
                Box::new(move |r: &mut Recorder| hex_merge_cm(r, &lower)),
            ];
            parallel_regions(rec, tasks)?;
        }
        // Turn the half-boards.
        {
            let upper = view.sub(0, 0, hh, w);
            let lower = view.sub(hh, 0, hh, w);
            let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = vec![
                Box::new(move |r: &mut Recorder| hex_turn_cm_to_rm(r, &upper)),
                Box::new(move |r: &mut Recorder| hex_turn_cm_to_rm(r, &lower)),
            ];
            parallel_regions(rec, tasks)?;
        }
        // Merge the halves upward.
        hex_merge_cm(rec, &view.transposed())?;
    }

    if !done(&rec.cfg) {
        return Err(Error::internal("hexagon hole moving missed the prefix"));
    }
    Ok(())
}

fn has_interior_pair(rec: &Recorder, q: &View) -> bool {
    let geom = rec.cfg.geometry();
    for p in q.positions() {
        if rec.cfg.is_hole(p) {
            for nb in geom.neighbors(p).expect("in bounds") {
                if nb > p && q.contains(nb) && rec.cfg.is_hole(nb) {
                    return true;
                }
            }
        }
    }
    false
}
