//! Fixed micro-move sequences for hexagon hole groups. A vertical pair or
//! triple of holes advances by pivoting its members through shared neighbor
//! cells; each gait below is a verified sequence of piece moves relative to
//! the group's top cell. Columns of holes standing next to a full hole column
//! move like square holes, each move witnessed by the neighbor column.

use crate::board::Position;
use crate::config::Configuration;
use crate::error::Error;
use crate::moves::{AtomicMove, ParallelStep};
use crate::rec::Recorder;
use crate::region::View;

/// A piece move relative to an anchor, in logical view coordinates.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RelMove {
    pub from: (i32, i32),
    pub to: (i32, i32),
    pub other: (i32, i32),
}

pub(crate) const fn rm(from: (i32, i32), to: (i32, i32), other: (i32, i32)) -> RelMove {
    RelMove { from, to, other }
}

impl RelMove {
    pub fn at(&self, view: &View, anchor: (u16, u16)) -> AtomicMove {
        let abs = |(dr, dc): (i32, i32)| {
            view.at((anchor.0 as i32 + dr) as u16, (anchor.1 as i32 + dc) as u16)
        };
        AtomicMove::hex(abs(self.from), abs(self.to), abs(self.other))
    }
}

/// Vertical hole pair at rows {0,1} of the anchor column moves one column
/// left (three moves) or right, or diagonally down-left / up-right (two).
pub(crate) const PAIR_LEFT: [RelMove; 3] = [
    rm((1, -1), (0, 0), (1, 0)),
    rm((0, 0), (1, 0), (1, -1)),
    rm((0, -1), (0, 0), (1, -1)),
];

pub(crate) const PAIR_RIGHT: [RelMove; 3] = [
    rm((0, 1), (1, 0), (0, 0)),
    rm((1, 0), (0, 0), (0, 1)),
    rm((1, 1), (1, 0), (0, 1)),
];

pub(crate) const PAIR_DIAG_DOWN_LEFT: [RelMove; 2] = [
    rm((1, -1), (0, 0), (1, 0)),
    rm((2, -1), (1, 0), (1, -1)),
];

pub(crate) const PAIR_DIAG_UP_RIGHT: [RelMove; 2] = [
    rm((0, 1), (1, 0), (0, 0)),
    rm((-1, 1), (0, 0), (0, 1)),
];

/// Vertical hole triple at rows {0,1,2} of the anchor column.
pub(crate) const TRIPLE_LEFT: [RelMove; 5] = [
    rm((1, -1), (0, 0), (1, 0)),
    rm((2, -1), (1, 0), (1, -1)),
    rm((1, 0), (2, 0), (2, -1)),
    rm((0, 0), (1, 0), (1, -1)),
    rm((0, -1), (0, 0), (1, -1)),
];

pub(crate) const TRIPLE_RIGHT: [RelMove; 5] = [
    rm((1, 1), (2, 0), (1, 0)),
    rm((0, 1), (1, 0), (0, 0)),
    rm((1, 0), (0, 0), (0, 1)),
    rm((2, 0), (1, 0), (1, 1)),
    rm((2, 1), (2, 0), (1, 1)),
];

pub(crate) const TRIPLE_DIAG_DOWN_LEFT: [RelMove; 3] = [
    rm((1, -1), (0, 0), (1, 0)),
    rm((2, -1), (1, 0), (1, -1)),
    rm((3, -1), (2, 0), (2, -1)),
];

pub(crate) const TRIPLE_DIAG_UP_RIGHT: [RelMove; 3] = [
    rm((1, 1), (2, 0), (1, 0)),
    rm((0, 1), (1, 0), (0, 0)),
    rm((-1, 1), (0, 0), (0, 1)),
];

/// Ribbon triple: pair at the anchor column plus a bottom-row single one
/// column right; moves one column left in four moves, keeping its shape.
pub(crate) const RIBBON_TRIPLE_LEFT: [RelMove; 4] = [
    rm((1, -1), (0, 0), (1, 0)),
    rm((0, 1), (1, 1), (1, 0)),
    rm((0, 0), (0, 1), (1, 0)),
    rm((0, -1), (0, 0), (1, -1)),
];

/// Packs the holes of `cells` (consecutive cells of one column, ordered so
/// holes collect at the tail) like the square wavefront, with each move
/// witnessed by the hole in the full neighbor column `witness_col`.
/// `witness_col` is a logical column index of the view.
pub(crate) fn witnessed_column_pack(
    rec: &mut Recorder,
    view: &View,
    col: u16,
    pack_to_top: bool,
    witness_col: u16,
) -> Result<(), Error> {
    let h = view.rows();
    // Holes collect at the tail of the row order.
    let rows: Vec<u16> = if pack_to_top {
        (0..h).rev().collect()
    } else {
        (0..h).collect()
    };
    // Witness for a piece moving from cells[i] into the hole at cells[i-1]:
    // the witness column hole adjacent to both. For the hexagon offsets the
    // right witness cell depends on direction and side.
    let geom = *rec.cfg.geometry();
    let mut occ: Vec<bool> = rows.iter().map(|&r| rec.cfg.is_piece(view.at(r, col))).collect();
    loop {
        let mut moves = Vec::new();
        for i in 1..rows.len() {
            if occ[i] && !occ[i - 1] {
                let from = view.at(rows[i], col);
                let to = view.at(rows[i - 1], col);
                let witness = [view.at(rows[i], witness_col), view.at(rows[i - 1], witness_col)]
                    .into_iter()
                    .find(|&w| {
                        rec.cfg.is_hole(w) && geom.are_adjacent(w, to) && geom.are_adjacent(w, from)
                    });
                let Some(witness) = witness else {
                    return Err(Error::internal(format!(
                        "witnessed pack: no witness for {from}->{to} beside column {witness_col}"
                    )));
                };
                moves.push(AtomicMove::hex(from, to, witness));
            }
        }
        if moves.is_empty() {
            break;
        }
        for mv in &moves {
            let (fi, _) = view.logical(mv.from);
            let (ti, _) = view.logical(mv.to);
            let fi = rows.iter().position(|&r| r == fi).unwrap();
            let ti = rows.iter().position(|&r| r == ti).unwrap();
            occ[fi] = false;
            occ[ti] = true;
        }
        rec.push(ParallelStep::new(moves));
    }
    Ok(())
}

/// Walks one hole along cells that always have a static hole witness beside
/// them (for instance down the column right of a full hole column). Plain BFS
/// over single-hole positions.
pub(crate) fn walk_single(
    rec: &mut Recorder,
    view: &View,
    hole: Position,
    forbidden: &std::collections::HashSet<Position>,
    goal: Position,
) -> Result<(), Error> {
    use std::collections::{HashMap, VecDeque};
    if hole == goal {
        return Ok(());
    }
    let geom = *rec.cfg.geometry();
    let statics: std::collections::HashSet<Position> = rec
        .cfg
        .holes()
        .into_iter()
        .filter(|h| view.contains(*h) && *h != hole)
        .collect();
    let mut parent: HashMap<Position, (Position, Position)> = HashMap::new();
    let mut q = VecDeque::new();
    parent.insert(hole, (hole, hole));
    q.push_back(hole);
    let mut found = false;
    'bfs: while let Some(cur) = q.pop_front() {
        for next in geom.neighbors(cur).expect("in bounds") {
            if parent.contains_key(&next)
                || !view.contains(next)
                || forbidden.contains(&next)
                || statics.contains(&next)
            {
                continue;
            }
            let witness = geom
                .neighbors(next)
                .expect("in bounds")
                .into_iter()
                .find(|w| statics.contains(w) && geom.are_adjacent(*w, cur));
            let Some(witness) = witness else { continue };
            parent.insert(next, (cur, witness));
            if next == goal {
                found = true;
                break 'bfs;
            }
            q.push_back(next);
        }
    }
    if !found {
        return Err(Error::internal("single hole walk: goal unreachable"));
    }
    let mut chain = Vec::new();
    let mut cur = goal;
    while cur != hole {
        let (prev, witness) = parent[&cur];
        chain.push(AtomicMove::hex(cur, prev, witness));
        cur = prev;
    }
    chain.reverse();
    for mv in chain {
        rec.push(ParallelStep::single(mv));
    }
    Ok(())
}
