//! The main square solver: distribute one hole per block, then run the mesh
//! sorting network on the block grid, each comparison step sorting an
//! adjacent block pair. The step count grows linearly in the board side.

use crate::board::{BoardKind, Position};
use crate::config::{block_snake_hole_cells, home_block_snake_with_n, Cell, Configuration};
use crate::error::Error;
use crate::moves::{merge_parallel, MoveTrace, ParallelStep};
use crate::rec::Recorder;
use crate::region::{RegionRef, View};
use crate::sortnet::{build_mesh_network, Element};
use crate::sq::block_pair::{sort_block_pair_in, LowBlock};
use crate::sq::holes::move_to_cells;
use crate::sq::homing::solve_region_to_target;

/// Least power of two `r` with `alpha < (r^2 - 1) / r^2`, i.e. blocks large
/// enough that the density leaves a hole per block.
pub fn choose_block_side(alpha: f64) -> Result<u16, Error> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::precondition(format!("alpha must lie in (0,1), got {alpha}")));
    }
    let mut r: u16 = 2;
    loop {
        let rr = r as f64 * r as f64;
        if alpha < (rr - 1.0) / rr {
            return Ok(r);
        }
        r = r
            .checked_mul(2)
            .ok_or_else(|| Error::precondition(format!("no block side fits alpha={alpha}")))?;
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg.into()))
    }
}

/// Solves a labeled square configuration with `alpha*m^2/2 < n <= alpha*m^2`
/// to the block-snake home. Surplus holes beyond one per block are frozen as
/// virtual pieces while the network runs: the solver plans on the padded
/// board and drops the virtual pieces' moves, which stays legal because
/// deleting a piece only creates holes.
pub fn solve_main(c: &Configuration, alpha: f64) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    require(geom.kind == BoardKind::Square && geom.rows == geom.cols, "solve_main runs on m x m square boards")?;
    let m = geom.rows;
    require(m.is_power_of_two(), format!("m={m} must be a power of 2"))?;
    let n = c.piece_count();
    let mm = m as f64 * m as f64;
    require(
        alpha * mm / 2.0 < n as f64 && n as f64 <= alpha * mm,
        format!("n={n} outside (alpha*m^2/2, alpha*m^2] for alpha={alpha}, m={m}"),
    )?;
    require(n == 0 || c.is_labeled(), "solve_main needs a labeled configuration")?;
    let r = choose_block_side(alpha)?;
    require(r <= m, format!("block side r={r} exceeds m={m}"))?;

    let home = home_block_snake_with_n(BoardKind::Square, n, m, r, 1)?;
    let mut rec = Recorder::new(c.clone());

    if r == m {
        // Single block: no network to run; home the pieces directly using the
        // board's at-least-two holes.
        solve_region_to_target(&mut rec, &View::of(RegionRef::full(m, m)), &home)?;
        return finish(c, rec, &home);
    }

    let blocks = (m / r) as usize * (m / r) as usize;
    let holes = geom.cell_count() - n;
    require(holes >= blocks, format!("{holes} holes cannot fill {blocks} blocks"))?;

    // Phase 1: holes to the home's hole cells (one per block plus the tail
    // that the virtual pieces will occupy).
    let target_holes = home.holes();
    move_to_cells(&mut rec, &View::of(RegionRef::full(m, m)), &target_holes)?;

    // Phase 2: pad with virtual pieces on the tail hole cells. The reserved
    // per-block cells stay holes.
    let reserved: Vec<Position> = block_snake_hole_cells(m, r, 1)?
        .into_iter()
        .flatten()
        .collect();
    let mut abstract_cfg = rec.cfg.clone();
    let mut next_virtual = n as u32;
    for p in &target_holes {
        if !reserved.contains(p) {
            next_virtual += 1;
            abstract_cfg.set_cell(*p, Cell::Labeled(next_virtual));
        }
    }
    debug_assert_eq!(abstract_cfg.hole_count(), blocks);
    let n_real = n as u32;

    // Phase 3: run the network on the block grid; comparators sort block
    // pairs on the padded board, and each merged step is projected onto the
    // real board by dropping moves of virtual pieces.
    let side = m / r;
    let net = build_mesh_network(side)?;
    let mut abs = Recorder::new(abstract_cfg);
    for layer in net.layers() {
        let mut sequences: Vec<Vec<ParallelStep>> = Vec::new();
        for e in layer.elements() {
            let (a, b) = e.cells();
            let (region, low) = pair_region(a, b, r);
            let mut sub = Recorder::new(abs.cfg.clone());
            match e {
                Element::Compare(cmp) => {
                    let low_block = if (cmp.low, cmp.high) == low { LowBlock::First } else { LowBlock::Second };
                    sort_block_pair_in(&mut sub, region, low_block, false)?;
                }
                Element::Route(_) => {
                    sort_block_pair_in(&mut sub, region, LowBlock::First, true)?;
                }
            }
            sequences.push(sub.steps);
        }
        for step in merge_parallel(sequences) {
            let real_moves: Vec<_> = step
                .moves()
                .iter()
                .filter(|mv| match abs.cfg.cell(mv.from) {
                    Cell::Labeled(l) => l <= n_real,
                    _ => false,
                })
                .copied()
                .collect();
            abs.push(step);
            if !real_moves.is_empty() {
                rec.push(ParallelStep::new(real_moves));
            }
        }
    }

    finish(c, rec, &home)
}

/// Board region of two adjacent block-grid cells, with the block pair ordered
/// top/left first.
fn pair_region(a: Position, b: Position, r: u16) -> (RegionRef, (Position, Position)) {
    let (first, second) = if (a.row, a.col) <= (b.row, b.col) { (a, b) } else { (b, a) };
    let region = if first.row == second.row {
        RegionRef::new(first.row * r, first.col * r, r, 2 * r)
    } else {
        RegionRef::new(first.row * r, first.col * r, 2 * r, r)
    };
    (region, (first, second))
}

fn finish(c: &Configuration, rec: Recorder, home: &Configuration) -> Result<MoveTrace, Error> {
    if rec.cfg != *home {
        return Err(Error::internal("solve_main did not reach the block-snake home"));
    }
    Ok(MoveTrace::new(c.clone(), rec.steps))
}
