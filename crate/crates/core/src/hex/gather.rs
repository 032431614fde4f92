//! Gathering hexagon holes onto prescribed cells: the mobile pair retrieves
//! strays one at a time, carries each as a connected triple to its deposit
//! cell, and finally parks itself on the last two target cells.

use std::collections::HashSet;

use crate::board::Position;
use crate::config::Configuration;
use crate::error::Error;
use crate::moves::MoveTrace;
use crate::rec::Recorder;
use crate::region::{RegionRef, View};

use super::walk::{walk_pair, walk_trio};

/// Moves `targets.len()` of the view's holes onto `targets`. Deposits run in
/// order over `targets[..k-2]` (innermost pattern cells first), and the
/// mobile pair finally parks on the last two targets, which must be adjacent.
/// Holes beyond `targets.len()` are left wherever they end up as strays.
pub(crate) fn gather_to_cells(
    rec: &mut Recorder,
    view: &View,
    targets: &[Position],
) -> Result<(), Error> {
    let k = targets.len();
    if k == 0 {
        return Ok(());
    }
    let total_holes = view.positions().iter().filter(|&&p| rec.cfg.is_hole(p)).count();
    if k > total_holes {
        return Err(Error::precondition(format!(
            "cannot gather {k} holes, the region has {total_holes}"
        )));
    }
    if k == 1 {
        // A lone hole cannot move; it must already sit on the target.
        return if rec.cfg.is_hole(targets[0]) {
            Ok(())
        } else {
            Err(Error::IsolatedHoles)
        };
    }
    let (park_a, park_b) = (targets[k - 2], targets[k - 1]);
    if !rec.cfg.geometry().are_adjacent(park_a, park_b) {
        return Err(Error::precondition("the last two gather targets must be adjacent"));
    }

    let geom = *rec.cfg.geometry();
    let mut pair = find_pair_in_view(&rec.cfg, view).ok_or(Error::IsolatedHoles)?;
    let mut frozen: HashSet<Position> = HashSet::new();

    // Deposits, innermost target first.
    for &t in targets[..k - 2].iter() {
        // The pair itself must not be broken up by freezing; if a pair member
        // sits on the target, walk the pair one step off first by treating
        // the deposit uniformly below.
        if rec.cfg.is_hole(t) && t != pair.0 && t != pair.1 {
            // A stray already sits there.
            frozen.insert(t);
            continue;
        }
        // Retrieve the nearest stray.
        let stray = nearest_stray(&rec.cfg, view, pair, &frozen)
            .ok_or_else(|| Error::internal("gather ran out of strays"))?;
        pair = walk_pair(rec, view, pair, &frozen, |a, b| {
            geom.are_adjacent(a, stray) || geom.are_adjacent(b, stray)
        })
        .map_err(|e| Error::internal(format!("fetch stray {stray} from {pair:?}: {e}")))?;
        // Carry the triple until one member stands on the target and the
        // other two stay adjacent to each other.
        let trio = walk_trio(rec, view, [pair.0, pair.1, stray], &frozen, |t3| {
            t3.contains(&t) && {
                let rest: Vec<Position> = t3.iter().copied().filter(|p| *p != t).collect();
                geom.are_adjacent(rest[0], rest[1])
            }
        })?;
        frozen.insert(t);
        let rest: Vec<Position> = trio.iter().copied().filter(|p| *p != t).collect();
        pair = (rest[0], rest[1]);
    }

    // Park the pair on the final two targets.
    let (pa, pb) = (park_a.min(park_b), park_a.max(park_b));
    walk_pair(rec, view, pair, &frozen, |a, b| a == pa && b == pb)
        .map_err(|e| Error::internal(format!("park {pair:?} on ({pa},{pb}): {e}")))?;
    Ok(())
}

fn find_pair_in_view(cfg: &Configuration, view: &View) -> Option<(Position, Position)> {
    let geom = cfg.geometry();
    for p in view.positions() {
        if cfg.is_hole(p) {
            for n in geom.neighbors(p).expect("in bounds") {
                if n > p && view.contains(n) && cfg.is_hole(n) {
                    return Some((p, n));
                }
            }
        }
    }
    None
}

fn nearest_stray(
    cfg: &Configuration,
    view: &View,
    pair: (Position, Position),
    frozen: &HashSet<Position>,
) -> Option<Position> {
    let geom = cfg.geometry();
    let mut best: Option<(u32, Position)> = None;
    for p in view.positions() {
        if !cfg.is_hole(p) || p == pair.0 || p == pair.1 || frozen.contains(&p) {
            continue;
        }
        let d = geom
            .grid_distance(pair.0, p)
            .unwrap()
            .min(geom.grid_distance(pair.1, p).unwrap());
        if best.is_none() || (d, p) < best.unwrap() {
            best = Some((d, p));
        }
    }
    best.map(|(_, p)| p)
}

/// The fixed pattern of the gathered hole block: the first `k` cells of the
/// column-major order of the top three-row strip. For `k = 6` this is the
/// 3 x 2 parallelogram in the upper-left corner.
pub fn gather_pattern(view_rows: u16, view_cols: u16, k: usize) -> Result<Vec<Position>, Error> {
    let strip_rows = view_rows.min(3);
    if k > strip_rows as usize * view_cols as usize {
        return Err(Error::precondition(format!("gather pattern of {k} does not fit the top strip")));
    }
    Ok((0..k)
        .map(|rank| Position::new((rank % strip_rows as usize) as u16, (rank / strip_rows as usize) as u16))
        .collect())
}

/// Reorders target cells so the final two are adjacent (the gather pair parks
/// there); picks the adjacent pair latest in the given order.
pub(crate) fn order_with_adjacent_park(
    geom: &crate::board::BoardGeometry,
    cells: &[Position],
) -> Result<Vec<Position>, Error> {
    if cells.len() < 2 {
        return Ok(cells.to_vec());
    }
    let mut best: Option<(usize, usize)> = None;
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if geom.are_adjacent(cells[i], cells[j]) {
                best = Some((i, j));
            }
        }
    }
    let (i, j) = best.ok_or_else(|| {
        Error::precondition("gather targets contain no adjacent pair to park on")
    })?;
    let mut out: Vec<Position> = cells
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != i && *k != j)
        .map(|(_, p)| *p)
        .collect();
    out.push(cells[i]);
    out.push(cells[j]);
    Ok(out)
}

/// Gathers `k` of the configuration's holes into the upper-left pattern
/// (a 3 x 2 parallelogram for `k = 6`). Fails when all holes are isolated.
pub fn gather_holes(c: &Configuration, k: usize) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    if geom.kind != crate::board::BoardKind::Hexagon {
        return Err(Error::precondition("gather_holes runs on hexagon boards"));
    }
    let view = View::of(RegionRef::full(geom.rows, geom.cols));
    let pattern: Vec<Position> = gather_pattern(geom.rows, geom.cols, k)?
        .into_iter()
        .map(|p| view.at(p.row, p.col))
        .collect();
    let pattern = order_with_adjacent_park(&geom, &pattern)?;
    let mut rec = Recorder::new(c.clone());
    gather_to_cells(&mut rec, &view, &pattern)?;
    Ok(MoveTrace::new(c.clone(), rec.steps))
}
