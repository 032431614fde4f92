//! Hexagon hole turning: column-major prefix to row-major prefix on a region
//! with power-of-two sides. Same three phases as the square version —
//! redistribute holes horizontally to the row-major quadrant counts, turn the
//! quadrants, merge the vertical halves — with every push realized by the
//! hexagon merge machinery. Tiny regions and small hole counts are carried
//! directly by the hole-pair walkers.

use crate::error::Error;
use crate::rec::Recorder;
use crate::region::View;
use crate::sq::holes::parallel_regions;

use super::gather::{gather_to_cells, order_with_adjacent_park};
use super::push::{hex_merge_cm, hex_split_cm, hole_count, is_cm_prefix, is_rm_prefix};

fn rm_cells(view: &View, n: usize) -> Vec<crate::board::Position> {
    let w = view.cols() as usize;
    (0..n)
        .map(|rank| view.at((rank / w) as u16, (rank % w) as u16))
        .collect()
}

/// Carries the view's holes directly onto the row-major prefix.
fn carry_to_rm(rec: &mut Recorder, view: &View, n: usize) -> Result<(), Error> {
    let targets = order_with_adjacent_park(rec.cfg.geometry(), &rm_cells(view, n))?;
    gather_to_cells(rec, view, &targets)
}

pub(crate) fn hex_turn_cm_to_rm(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let n = hole_count(&rec.cfg, view);
    debug_assert!(is_cm_prefix(&rec.cfg, view, n), "hex turn source not a cm prefix");
    if is_rm_prefix(&rec.cfg, view, n) {
        return Ok(());
    }
    if h.min(w) <= 2 || n <= 6 {
        carry_to_rm(rec, view, n)?;
    } else {
        let (hh, hw) = (h / 2, w / 2);
        let qcap = hh as usize * hw as usize;
        let quads = [
            view.sub(0, 0, hh, hw),
            view.sub(0, hw, hh, hw),
            view.sub(hh, 0, hh, hw),
            view.sub(hh, hw, hh, hw),
        ];
        let a0 = hole_count(&rec.cfg, &quads[0]);
        let b0 = hole_count(&rec.cfg, &quads[1]);
        let c0 = hole_count(&rec.cfg, &quads[2]);
        let d0 = hole_count(&rec.cfg, &quads[3]);
        let (astar, cstar) = rm_quadrant_left_targets(view, n);
        let (u0, d_low) = (a0 + b0, c0 + d0);
        let nl = astar + cstar;

        let lo = [
            0isize,
            u0 as isize - qcap as isize,
            nl as isize - qcap as isize,
            nl as isize - d_low as isize,
        ]
        .into_iter()
        .max()
        .unwrap();
        let hi = [
            qcap as isize,
            u0 as isize,
            nl as isize,
            qcap as isize + nl as isize - d_low as isize,
        ]
        .into_iter()
        .min()
        .unwrap();
        if lo > hi {
            return Err(Error::internal(format!("hex turn redistribution infeasible: {lo}..{hi}")));
        }
        // Prefer the exact target share; nudge away from splits that would
        // leave two lone holes facing each other across a merge.
        let fatal = |x: usize, y: usize| x == 1 && y == 1;
        let mut a1 = (astar as isize).clamp(lo, hi) as usize;
        let score = |a1: usize| {
            let (b1, c1) = (u0 - a1, nl - a1);
            let d1 = d_low - c1;
            fatal(a1, b1) || fatal(c1, d1) || fatal(a1, c1) || fatal(b1, d1)
        };
        if score(a1) {
            if let Some(alt) = (lo..=hi).map(|v| v as usize).find(|v| !score(*v)) {
                a1 = alt;
            }
        }
        let b1 = u0 - a1;
        let c1 = nl - a1;
        let d1 = d_low - c1;

        {
            let upper = view.sub(0, 0, hh, w);
            let lower = view.sub(hh, 0, hh, w);
            let mut tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = Vec::new();
            if (a0, b0) != (a1, b1) {
                tasks.push(Box::new(move |r: &mut Recorder| {
                    hex_merge_cm(r, &upper)?;
                    hex_split_cm(r, &upper, a1)
                }));
            }
            if (c0, d0) != (c1, d1) {
                tasks.push(Box::new(move |r: &mut Recorder| {
                    hex_merge_cm(r, &lower)?;
                    hex_split_cm(r, &lower, c1)
                }));
            }
            parallel_regions(rec, tasks)?;
        }
        {
            let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = quads
                .into_iter()
                .map(|q| Box::new(move |r: &mut Recorder| hex_turn_cm_to_rm(r, &q)) as Box<_>)
                .collect();
            parallel_regions(rec, tasks)?;
        }
        {
            let left = view.sub(0, 0, h, hw);
            let right = view.sub(0, hw, h, hw);
            let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = vec![
                Box::new(move |r: &mut Recorder| hex_merge_cm(r, &left.transposed())),
                Box::new(move |r: &mut Recorder| hex_merge_cm(r, &right.transposed())),
            ];
            parallel_regions(rec, tasks)?;
        }
        let _ = (b1, d1);
    }

    if !is_rm_prefix(&rec.cfg, view, n) {
        return Err(Error::internal("hex turn did not reach the row-major prefix"));
    }
    Ok(())
}

/// Left-half shares of the row-major prefix, split by upper/lower quadrants.
fn rm_quadrant_left_targets(view: &View, n: usize) -> (usize, usize) {
    let (h, w) = (view.rows() as usize, view.cols() as usize);
    let (hh, hw) = (h / 2, w / 2);
    let mut upper = 0usize;
    let mut lower = 0usize;
    for r in 0..h {
        let count = n.saturating_sub(r * w).min(w);
        let left = count.min(hw);
        if r < hh {
            upper += left;
        } else {
            lower += left;
        }
    }
    (upper, lower)
}
