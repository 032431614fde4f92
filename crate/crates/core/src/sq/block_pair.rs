//! Sorting a pair of adjacent square blocks with one hole each: the lesser
//! half of the labels ends in the low block in snake order with the hole at
//! the block's snake-end cell, the greater half likewise in the high block.
//! Used as the comparison step when a sorting network runs on blocks.

use crate::board::{Ordering, Position};
use crate::config::{Cell, Configuration};
use crate::error::Error;
use crate::moves::MoveTrace;
use crate::rec::Recorder;
use crate::region::{RegionRef, View};
use crate::sq::homing::solve_region_to_target;

/// Which block of the pair receives the lesser labels: the first block is the
/// top (vertical pair) or left (horizontal pair) one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowBlock {
    First,
    Second,
}

fn block_views(region: RegionRef) -> Result<(u16, View, View), Error> {
    let (h, w) = (region.rows, region.cols);
    let view = View::of(region);
    if h * 2 == w {
        Ok((h, view.sub(0, 0, h, h), view.sub(0, h, h, h)))
    } else if w * 2 == h {
        Ok((w, view.sub(0, 0, w, w), view.sub(w, 0, w, w)))
    } else {
        Err(Error::precondition(format!("block pair must be r x 2r or 2r x r, got {h}x{w}")))
    }
}

/// The target contents of one block: `labels` in local snake order with the
/// hole at the local snake-end cell.
fn fill_block_target(target: &mut Configuration, block: &View, labels: &[u32]) {
    let r = block.rows();
    debug_assert_eq!(labels.len() as usize, (r as usize * r as usize) - 1);
    for rank in 0..r as usize * r as usize {
        let lp = Ordering::SnakeRowMajor.position_at(r, r, rank);
        let p = block.at(lp.row, lp.col);
        let cell = if rank < labels.len() { Cell::Labeled(labels[rank]) } else { Cell::Hole };
        target.set_cell(p, cell);
    }
}

pub(crate) fn block_pair_target(
    cfg: &Configuration,
    region: RegionRef,
    low: LowBlock,
    swap_buckets: bool,
) -> Result<Configuration, Error> {
    let (r, first, second) = block_views(region)?;
    for (name, block) in [("first", &first), ("second", &second)] {
        let holes = block.positions().iter().filter(|&&p| cfg.is_hole(p)).count();
        if holes != 1 {
            return Err(Error::precondition(format!(
                "{name} block must hold exactly one hole, found {holes}"
            )));
        }
    }
    let _ = r;
    let mut labels: Vec<u32> = View::of(region)
        .positions()
        .iter()
        .filter_map(|&p| match cfg.cell(p) {
            Cell::Labeled(l) => Some(l),
            _ => None,
        })
        .collect();
    if labels.len() != View::of(region).cell_count() - 2 {
        return Err(Error::precondition("block pair must be fully labeled"));
    }
    labels.sort_unstable();
    let half = labels.len() / 2;
    let (low_view, high_view) = match low {
        LowBlock::First => (&first, &second),
        LowBlock::Second => (&second, &first),
    };
    let mut target = cfg.clone();
    if swap_buckets {
        // Routing step: the blocks exchange their contents wholesale; each
        // block ends snake-sorted with its hole at the snake end.
        let firsts: Vec<u32> = first
            .positions()
            .iter()
            .filter_map(|&p| match cfg.cell(p) {
                Cell::Labeled(l) => Some(l),
                _ => None,
            })
            .collect();
        let mut to_second = firsts;
        to_second.sort_unstable();
        let mut to_first: Vec<u32> = second
            .positions()
            .iter()
            .filter_map(|&p| match cfg.cell(p) {
                Cell::Labeled(l) => Some(l),
                _ => None,
            })
            .collect();
        to_first.sort_unstable();
        fill_block_target(&mut target, &first, &to_first);
        fill_block_target(&mut target, &second, &to_second);
    } else {
        fill_block_target(&mut target, low_view, &labels[..half]);
        fill_block_target(&mut target, high_view, &labels[half..]);
    }
    Ok(target)
}

pub(crate) fn sort_block_pair_in(
    rec: &mut Recorder,
    region: RegionRef,
    low: LowBlock,
    swap_buckets: bool,
) -> Result<(), Error> {
    let target = block_pair_target(&rec.cfg, region, low, swap_buckets)?;
    solve_region_to_target(rec, &View::of(region), &target)
}

/// Sorts an `r x 2r` or `2r x r` labeled region holding exactly one hole per
/// block. The step count depends only on `r`.
pub fn sort_block_pair(c: &Configuration, region: RegionRef, low: LowBlock) -> Result<MoveTrace, Error> {
    let mut rec = Recorder::new(c.clone());
    sort_block_pair_in(&mut rec, region, low, false)?;
    Ok(MoveTrace::new(c.clone(), rec.steps))
}
