//! The hexagon hole-pushing machinery: merging the column-major hole prefixes
//! of a region's two half-boards into one column-major prefix of the region,
//! in a number of steps linear in the region perimeter.
//!
//! With a full hole column on the right half the board splits into two-row
//! ribbons; each ribbon's hole pairs march left in pipelined three-move
//! gaits, a lone bottom hole rides its neighbor pair as a group of three, and
//! one ragged column is finally packed against the full column beside it.
//! Without a full column the right holes zigzag down to the bottom rows using
//! the spare column, march left in disjoint row bands, and pack upward. A
//! single right hole is retrieved by a pair walking over from the left.

use std::collections::HashSet;

use crate::board::Position;
use crate::config::Configuration;
use crate::error::Error;
use crate::moves::{AtomicMove, MoveTrace, ParallelStep};
use crate::rec::Recorder;
use crate::region::{RegionRef, View};

use super::gaits::{
    walk_single, witnessed_column_pack, RelMove, PAIR_DIAG_DOWN_LEFT, PAIR_DIAG_UP_RIGHT,
    PAIR_LEFT, PAIR_RIGHT, RIBBON_TRIPLE_LEFT, TRIPLE_DIAG_DOWN_LEFT, TRIPLE_DIAG_UP_RIGHT,
    TRIPLE_LEFT, TRIPLE_RIGHT,
};
use super::gather::{gather_to_cells, order_with_adjacent_park};
use super::walk::{walk_pair, walk_trio};

pub(crate) fn hole_count(cfg: &Configuration, view: &View) -> usize {
    view.positions().iter().filter(|&&p| cfg.is_hole(p)).count()
}

pub(crate) fn is_cm_prefix(cfg: &Configuration, view: &View, n: usize) -> bool {
    for r in 0..view.rows() {
        for c in 0..view.cols() {
            if cfg.is_hole(view.at(r, c)) != (view.cm_rank(r, c) < n) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn is_rm_prefix(cfg: &Configuration, view: &View, n: usize) -> bool {
    is_cm_prefix(cfg, &view.transposed(), n)
}

/// Cells of the view's column-major prefix of size `n`, in rank order.
fn cm_cells(view: &View, n: usize) -> Vec<Position> {
    (0..n)
        .map(|rank| {
            let (r, c) = view.cm_position(rank);
            view.at(r, c)
        })
        .collect()
}

// ---- slot scheduling ---------------------------------------------------------

/// Collects gait moves from concurrently advancing groups: slot `i` of every
/// group runs in the same time step.
struct Slots {
    slots: Vec<Vec<AtomicMove>>,
}

impl Slots {
    fn new() -> Self {
        Slots { slots: Vec::new() }
    }

    fn add(&mut self, view: &View, anchor: (u16, u16), gait: &[RelMove]) {
        while self.slots.len() < gait.len() {
            self.slots.push(Vec::new());
        }
        for (i, m) in gait.iter().enumerate() {
            self.slots[i].push(m.at(view, anchor));
        }
    }

    fn flush(self, rec: &mut Recorder) {
        for slot in self.slots {
            if !slot.is_empty() {
                rec.push(ParallelStep::new(slot));
            }
        }
    }
}

// ---- zigzag ------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GroupKind {
    Pair,
    Triple,
}

#[derive(Debug, Clone, Copy)]
struct Group {
    kind: GroupKind,
    top: u16,
}

impl Group {
    fn len(&self) -> u16 {
        match self.kind {
            GroupKind::Pair => 2,
            GroupKind::Triple => 3,
        }
    }
}

/// Bottom-up grouping of a contiguous run of `k >= 2` holes into pairs with
/// one leading triple when `k` is odd.
fn group_run(top: u16, k: u16) -> Vec<Group> {
    debug_assert!(k >= 2);
    let mut groups = Vec::new();
    let mut bottom = top + k;
    while bottom - top >= 4 {
        groups.push(Group { kind: GroupKind::Pair, top: bottom - 2 });
        bottom -= 2;
    }
    if bottom - top == 2 {
        groups.push(Group { kind: GroupKind::Pair, top });
    } else {
        groups.push(Group { kind: GroupKind::Triple, top });
    }
    groups.reverse(); // top group first
    groups
}

/// Advances a contiguous column run of holes `dist` rows down (or up), using
/// the column to the right as the zigzag workspace: every group steps
/// sideways together, then diagonally back.
fn zigzag_shift(
    rec: &mut Recorder,
    view: &View,
    col: u16,
    groups: &mut [Group],
    dist: u16,
    down: bool,
) {
    for _ in 0..dist {
        if down {
            let mut s = Slots::new();
            for g in groups.iter() {
                let gait: &[RelMove] =
                    if g.kind == GroupKind::Pair { &PAIR_RIGHT } else { &TRIPLE_RIGHT };
                s.add(view, (g.top, col), gait);
            }
            s.flush(rec);
            let mut s = Slots::new();
            for g in groups.iter_mut() {
                let gait: &[RelMove] = if g.kind == GroupKind::Pair {
                    &PAIR_DIAG_DOWN_LEFT
                } else {
                    &TRIPLE_DIAG_DOWN_LEFT
                };
                s.add(view, (g.top, col + 1), gait);
                g.top += 1;
            }
            s.flush(rec);
        } else {
            let mut s = Slots::new();
            for g in groups.iter_mut() {
                let gait: &[RelMove] = if g.kind == GroupKind::Pair {
                    &PAIR_DIAG_UP_RIGHT
                } else {
                    &TRIPLE_DIAG_UP_RIGHT
                };
                s.add(view, (g.top, col), gait);
                g.top -= 1;
            }
            s.flush(rec);
            let mut s = Slots::new();
            for g in groups.iter() {
                let gait: &[RelMove] =
                    if g.kind == GroupKind::Pair { &PAIR_LEFT } else { &TRIPLE_LEFT };
                s.add(view, (g.top, col + 1), gait);
            }
            s.flush(rec);
        }
    }
}

/// Marches vertically disjoint groups from their column to per-group target
/// columns, all in lockstep.
fn march_bands(rec: &mut Recorder, view: &View, groups: &mut [(Group, u16, u16)]) {
    // (group, current col, target col)
    loop {
        let mut s = Slots::new();
        let mut moved = false;
        for (g, col, target) in groups.iter_mut() {
            if col > target {
                let gait: &[RelMove] =
                    if g.kind == GroupKind::Pair { &PAIR_LEFT } else { &TRIPLE_LEFT };
                s.add(view, (g.top, *col), gait);
                *col -= 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
        s.flush(rec);
    }
}

// ---- ribbon march (full right columns) ----------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EntityKind {
    Pair,
    /// Pair at the entity column plus a bottom-row single one column right.
    Triple,
}

#[derive(Debug, Clone, Copy)]
struct Entity {
    kind: EntityKind,
    col: u16,
}

struct Ribbon {
    top: u16,
    q: u16,
    single: bool,
    entities: Vec<Entity>,
}

impl Ribbon {
    fn pack_front(&self) -> u16 {
        self.q + if self.single { 1 } else { 0 }
    }
}

fn ribbon_march(rec: &mut Recorder, view: &View, ribbons: &mut [Ribbon]) {
    loop {
        let mut s = Slots::new();
        let mut fusions: Vec<(usize, usize)> = Vec::new();
        let mut any = false;
        for (ri, rb) in ribbons.iter_mut().enumerate() {
            let mut prev_blocked_march = false;
            let mut prev_occupied: Option<u16> = None;
            for (ei, e) in rb.entities.iter_mut().enumerate() {
                let front = rb.q + if rb.single { 1 } else { 0 };
                if e.col == front {
                    // Arrival handled after the march slots.
                    if ei == 0 {
                        fusions.push((ri, 0));
                    }
                    prev_occupied = Some(match e.kind {
                        EntityKind::Pair => e.col,
                        EntityKind::Triple => e.col + 1,
                    });
                    prev_blocked_march = true;
                    continue;
                }
                let clearance = match prev_occupied {
                    None => e.col > front,
                    Some(po) => e.col > po + 1,
                };
                if clearance && !prev_blocked_march {
                    let gait: &[RelMove] = match e.kind {
                        EntityKind::Pair => &PAIR_LEFT,
                        EntityKind::Triple => &RIBBON_TRIPLE_LEFT,
                    };
                    s.add(view, (rb.top, e.col), gait);
                    e.col -= 1;
                    any = true;
                    prev_blocked_march = true;
                } else {
                    prev_blocked_march = false;
                }
                prev_occupied = Some(match e.kind {
                    EntityKind::Pair => e.col,
                    EntityKind::Triple => e.col + 1,
                });
            }
        }
        s.flush(rec);

        for (ri, _) in fusions {
            let rb = &mut ribbons[ri];
            let e = rb.entities.remove(0);
            let (r, q) = (rb.top, rb.q);
            match (e.kind, rb.single) {
                (EntityKind::Pair, false) => {
                    rb.q += 1;
                }
                (EntityKind::Pair, true) => {
                    // Pair at q+1 fuses past the top single.
                    rec.push(ParallelStep::single(AtomicMove::hex(
                        view.at(r + 1, q),
                        view.at(r + 1, q + 1),
                        view.at(r, q + 1),
                    )));
                    rb.q += 1;
                }
                (EntityKind::Triple, false) => {
                    // Pair absorbed at q; flip the trailing bottom single up.
                    rec.push(ParallelStep::single(AtomicMove::hex(
                        view.at(r, q + 1),
                        view.at(r + 1, q + 1),
                        view.at(r + 1, q),
                    )));
                    rb.q += 1;
                    rb.single = true;
                }
                (EntityKind::Triple, true) => {
                    // Pair at q+1 with its single at q+2: three moves close
                    // both columns.
                    rec.push(ParallelStep::single(AtomicMove::hex(
                        view.at(r, q + 2),
                        view.at(r + 1, q + 2),
                        view.at(r + 1, q + 1),
                    )));
                    rec.push(ParallelStep::single(AtomicMove::hex(
                        view.at(r + 1, q),
                        view.at(r + 1, q + 1),
                        view.at(r, q + 1),
                    )));
                    rec.push(ParallelStep::single(AtomicMove::hex(
                        view.at(r + 1, q + 1),
                        view.at(r, q + 2),
                        view.at(r, q + 1),
                    )));
                    rb.q += 2;
                    rb.single = false;
                }
            }
        }
        if !any && ribbons.iter().all(|rb| rb.entities.is_empty()) {
            break;
        }
    }
}

// ---- the merge ---------------------------------------------------------------

/// Merges a view whose left and right halves each hold their holes in a
/// column-major prefix into one column-major prefix of the whole view.
pub(crate) fn hex_merge_cm(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    debug_assert!(w % 2 == 0);
    let left = view.sub(0, 0, h, w / 2);
    let right = view.sub(0, w / 2, h, w / 2);
    let a = hole_count(&rec.cfg, &left);
    let b = hole_count(&rec.cfg, &right);
    let total = a + b;
    debug_assert!(is_cm_prefix(&rec.cfg, &left, a), "left half not a cm prefix");
    debug_assert!(is_cm_prefix(&rec.cfg, &right, b), "right half not a cm prefix");

    if is_cm_prefix(&rec.cfg, view, total) {
        return Ok(());
    }
    if total == 2 && a == 1 {
        // One hole per half and not already merged: the pair is immobile.
        return Err(Error::IsolatedHoles);
    }
    if h.min(w) <= 2 || total <= 4 {
        // Tiny regions and tiny hole counts: carry directly.
        let targets = order_with_adjacent_park(rec.cfg.geometry(), &cm_cells(view, total))?;
        gather_to_cells(rec, view, &targets)?;
    } else if b == 1 {
        retrieve_single(rec, view, a)?;
    } else if b < h as usize {
        case_b(rec, view, a, b)?;
    } else {
        case_a(rec, view, a, b)?;
    }

    if !is_cm_prefix(&rec.cfg, view, total) {
        return Err(Error::internal(format!(
            "hexagon merge failed on {:?} (a={a}, b={b})",
            view.region()
        )));
    }
    Ok(())
}

/// Case with at least one full right column: bottom-align the right partial
/// column, march ribbon entities left, pack the ragged column upward.
fn case_a(rec: &mut Recorder, view: &View, a: usize, b: usize) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let half = w / 2;
    let hh = h as usize;
    let (fl, pl) = ((a / hh) as u16, a % hh);
    let (fr, pr) = ((b / hh) as u16, b % hh);
    debug_assert!(fr >= 1);

    // Bottom-align the short column against the full column to its left.
    if pr > 0 {
        witnessed_column_pack(rec, view, half + fr, false, half + fr - 1)?;
    }

    // Ribbons.
    let mut ribbons = Vec::new();
    for i in 0..h / 2 {
        let top = 2 * i;
        let q = fl + if (top as usize + 1) < pl { 1 } else { 0 };
        let single = pl == top as usize + 1;
        let mut entities: Vec<Entity> =
            (half..half + fr).map(|col| Entity { kind: EntityKind::Pair, col }).collect();
        let boundary = h as usize - pr;
        if pr > 0 {
            if boundary <= top as usize {
                entities.push(Entity { kind: EntityKind::Pair, col: half + fr });
            } else if boundary == top as usize + 1 {
                let last = entities.last_mut().expect("fr >= 1");
                *last = Entity { kind: EntityKind::Triple, col: last.col };
            }
        }
        ribbons.push(Ribbon { top, q, single, entities });
    }
    ribbon_march(rec, view, &mut ribbons);

    // Pack the one ragged column upward against the full column beside it.
    let total = a + b;
    let fstar = (total / hh) as u16;
    if total % hh > 0 {
        witnessed_column_pack(rec, view, fstar, true, fstar - 1)?;
    }
    Ok(())
}

/// Case with only a partial right column (2 <= b < rows): zigzag it to the
/// bottom, march the groups left in disjoint row bands, and close the prefix.
/// Groups whose rows collide with the existing left prefix stop one column
/// short; each cell still missing from the prefix column is then filled by a
/// single move that pulls the row-aligned spill hole across, and the spill
/// column packs upward against the now-full column.
fn case_b(rec: &mut Recorder, view: &View, a: usize, b: usize) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let half = w / 2;
    let hh = h as usize;
    let (fl, pl) = ((a / hh) as u16, (a % hh) as u16);

    // Down to the bottom rows.
    let descent = h - b as u16;
    let mut groups = group_run(0, b as u16);
    zigzag_shift(rec, view, half, &mut groups, descent, true);

    // Groups below the prefix boundary fit in column fl; the rest spill one
    // column right. The fit groups are the bottom segment of the run.
    let mut fit: Vec<(Group, u16, u16)> = Vec::new();
    let mut spill: Vec<(Group, u16, u16)> = Vec::new();
    for g in groups {
        if g.top >= pl {
            fit.push((g, half, fl));
        } else {
            spill.push((g, half, fl + 1));
        }
    }
    let fit_cells: u16 = fit.iter().map(|(g, _, _)| g.len()).sum();
    march_bands(rec, view, &mut fit);

    if spill.is_empty() {
        // Close the gap [pl, h - b) by packing upward.
        if fit_cells > 0 && h - b as u16 > pl {
            if fl >= 1 {
                witnessed_column_pack(rec, view, fl, true, fl - 1)?;
            } else {
                let mut gs = group_run(h - fit_cells, fit_cells);
                zigzag_shift(rec, view, fl, &mut gs, h - fit_cells - pl, false);
            }
        }
        return Ok(());
    }

    march_bands(rec, view, &mut spill);
    // Missing prefix cells [pl, h - fit_cells) are filled from the spill
    // column: the piece at each slides into the hole pair above it, handing
    // its cell a hole and consuming the spill hole one row up.
    for row in pl..h - fit_cells {
        rec.push(ParallelStep::single(AtomicMove::hex(
            view.at(row, fl),
            view.at(row - 1, fl + 1),
            view.at(row - 1, fl),
        )));
    }
    // Pack what remains of the spill column against the full column.
    witnessed_column_pack(rec, view, fl + 1, true, fl)?;
    Ok(())
}

/// A single right hole: a pair of holes walks over from the left prefix,
/// retrieves it, and the triple settles on the three prefix cells it owes.
fn retrieve_single(rec: &mut Recorder, view: &View, a: usize) -> Result<(), Error> {
    let geom = *rec.cfg.geometry();
    let (h, w) = (view.rows(), view.cols());
    let lone = {
        let right = view.sub(0, w / 2, h, w / 2);
        right
            .positions()
            .into_iter()
            .find(|&p| rec.cfg.is_hole(p))
            .ok_or_else(|| Error::internal("retrieval: right hole missing"))?
    };
    // A mobile pair among the prefix holes.
    let prefix = cm_cells(view, a);
    let mut pair: Option<(Position, Position)> = None;
    for (i, &x) in prefix.iter().enumerate().rev() {
        for &y in prefix.iter().take(i) {
            if geom.are_adjacent(x, y) {
                pair = Some((y.min(x), y.max(x)));
                break;
            }
        }
        if pair.is_some() {
            break;
        }
    }
    let pair = pair.ok_or(Error::IsolatedHoles)?;
    let home = pair;
    let forbidden: HashSet<Position> =
        prefix.iter().copied().filter(|p| *p != pair.0 && *p != pair.1).collect();

    let pair = walk_pair(rec, view, pair, &forbidden, |x, y| {
        geom.are_adjacent(x, lone) || geom.are_adjacent(y, lone)
    })?;
    // Deposit the retrieved hole on the next prefix cell, then walk the pair
    // back to its own cells.
    let (nr, nc) = view.cm_position(a);
    let deposit = view.at(nr, nc);
    let trio = walk_trio(rec, view, [pair.0, pair.1, lone], &forbidden, |t| {
        t.contains(&deposit) && {
            let rest: Vec<Position> = t.iter().copied().filter(|p| *p != deposit).collect();
            geom.are_adjacent(rest[0], rest[1])
        }
    })?;
    let rest: Vec<Position> = trio.iter().copied().filter(|p| *p != deposit).collect();
    let mut forbidden = forbidden;
    forbidden.insert(deposit);
    walk_pair(rec, view, (rest[0], rest[1]), &forbidden, |x, y| {
        (x, y) == (home.0.min(home.1), home.0.max(home.1))
    })?;
    Ok(())
}

// ---- public wrappers -----------------------------------------------------------

/// Direction of a zigzag column shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigzagDirection {
    Down,
    Up,
}

/// Advances a contiguous column segment of holes `count` positions along the
/// column, zigzagging through the spare column to its right. The segment is
/// grouped into adjacent pairs and one triple when its length is odd.
pub fn zigzag_column(
    c: &Configuration,
    col: u16,
    direction: ZigzagDirection,
    count: u16,
) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    if geom.kind != crate::board::BoardKind::Hexagon {
        return Err(Error::precondition("zigzag_column runs on hexagon boards"));
    }
    if col + 1 >= geom.cols {
        return Err(Error::precondition("zigzag needs a spare column to the right"));
    }
    let view = View::of(RegionRef::full(geom.rows, geom.cols));
    let rows: Vec<u16> = (0..geom.rows).filter(|&r| c.is_hole(view.at(r, col))).collect();
    if rows.is_empty() || count == 0 {
        return Ok(MoveTrace::identity(c.clone()));
    }
    let k = rows.len() as u16;
    if rows.windows(2).any(|p| p[1] != p[0] + 1) {
        return Err(Error::precondition("zigzag needs a contiguous column segment of holes"));
    }
    if k < 2 {
        return Err(Error::precondition("a lone hole cannot zigzag"));
    }
    let top = rows[0];
    match direction {
        ZigzagDirection::Down => {
            if top + k + count > geom.rows {
                return Err(Error::precondition("zigzag runs off the bottom of the board"));
            }
        }
        ZigzagDirection::Up => {
            if count > top {
                return Err(Error::precondition("zigzag runs off the top of the board"));
            }
        }
    }
    for r in 0..geom.rows {
        if c.is_hole(view.at(r, col + 1)) {
            return Err(Error::precondition("the spare column must be free of holes"));
        }
    }
    let mut rec = Recorder::new(c.clone());
    let mut groups = group_run(top, k);
    zigzag_shift(&mut rec, &view, col, &mut groups, count, direction == ZigzagDirection::Down);
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

/// Merges the half-board column-major hole prefixes of a region into the
/// region's column-major prefix; `merge = false` plays the same trace
/// backwards, splitting the prefix into the two half-board prefixes with the
/// given left share.
pub fn hex_push(c: &Configuration, region: RegionRef, merge: bool, left_share: usize) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    if geom.kind != crate::board::BoardKind::Hexagon {
        return Err(Error::precondition("hex_push runs on hexagon boards"));
    }
    if region.rows % 2 != 0 || region.cols % 2 != 0 {
        return Err(Error::precondition("hex_push needs even region sides"));
    }
    let view = View::of(region);
    let mut rec = Recorder::new(c.clone());
    if merge {
        hex_merge_cm(&mut rec, &view)?;
    } else {
        hex_split_cm(&mut rec, &view, left_share)?;
    }
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

/// Splits the view's column-major prefix into per-half prefixes `(a, b)` by
/// reversing the merge built from the split state.
pub(crate) fn hex_split_cm(rec: &mut Recorder, view: &View, a: usize) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let total = hole_count(&rec.cfg, view);
    let b = total
        .checked_sub(a)
        .ok_or_else(|| Error::precondition("left share exceeds the hole count"))?;
    debug_assert!(is_cm_prefix(&rec.cfg, view, total), "split source not a cm prefix");
    let mut scratch = rec.cfg.unlabeled();
    for r in 0..h {
        for c in 0..w {
            let local = if c < w / 2 { c } else { c - w / 2 };
            let rank = local as usize * h as usize + r as usize;
            let hole = if c < w / 2 { rank < a } else { rank < b };
            scratch.set_cell(
                view.at(r, c),
                if hole { crate::config::Cell::Hole } else { crate::config::Cell::Unlabeled },
            );
        }
    }
    let mut sub = Recorder::new(scratch);
    hex_merge_cm(&mut sub, view)?;
    rec.extend_reversed(sub.steps);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{pos, BoardGeometry};
    use crate::config::Cell;

    fn split_state(rows: u16, cols: u16, a: usize, b: usize) -> Configuration {
        let g = BoardGeometry::hexagon(rows, cols).unwrap();
        let mut c = Configuration::from_occupied(g, &g.all_positions().collect::<Vec<_>>()).unwrap();
        let half = cols / 2;
        for (base, count) in [(0u16, a), (half, b)] {
            for k in 0..count {
                let (r, cc) = ((k % rows as usize) as u16, (k / rows as usize) as u16);
                c.set_cell(pos(r, base + cc), Cell::Hole);
            }
        }
        c
    }

    #[test]
    fn merge_exhaustive_4x8() {
        let view = View::of(RegionRef::full(4, 8));
        let cap = 4 * 4;
        for a in 0..=cap {
            for b in 0..=cap {
                if b == 1 && a <= 1 {
                    continue; // immobile: a lone right hole with no helpers
                }
                let c = split_state(4, 8, a, b);
                let mut rec = Recorder::new(c);
                hex_merge_cm(&mut rec, &view).unwrap_or_else(|e| panic!("a={a} b={b}: {e}"));
                assert!(is_cm_prefix(&rec.cfg, &view, a + b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn merge_rejects_isolated_pair() {
        let c = split_state(4, 8, 1, 1);
        let view = View::of(RegionRef::full(4, 8));
        let mut rec = Recorder::new(c);
        match hex_merge_cm(&mut rec, &view) {
            Err(Error::IsolatedHoles) => {}
            other => panic!("expected isolated holes, got {other:?}"),
        }
    }

    #[test]
    fn merge_exhaustive_6x8_sampled() {
        let view = View::of(RegionRef::full(6, 8));
        let cap = 6 * 4;
        for a in [0usize, 1, 2, 3, 5, 6, 7, 11, 12, 13, 17, 23, 24] {
            for b in [0usize, 1, 2, 3, 5, 6, 7, 11, 12, 13, 17, 23, 24] {
                if b == 1 && a <= 1 {
                    continue;
                }
                if a > cap || b > cap {
                    continue;
                }
                let c = split_state(6, 8, a, b);
                let mut rec = Recorder::new(c);
                hex_merge_cm(&mut rec, &view).unwrap_or_else(|e| panic!("a={a} b={b}: {e}"));
                assert!(is_cm_prefix(&rec.cfg, &view, a + b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn merge_step_bound_linear() {
        for (h, w) in [(4u16, 8u16), (8, 8), (8, 16), (16, 16)] {
            let cap = h as usize * w as usize / 2;
            for (a, b) in [(cap / 3, cap / 2), (2, cap / 2), (cap / 2, 3), (cap - 1, cap / 4)] {
                let c = split_state(h, w, a, b);
                let view = View::of(RegionRef::full(h, w));
                let mut rec = Recorder::new(c);
                hex_merge_cm(&mut rec, &view).unwrap();
                assert!(
                    rec.steps.len() <= 30 * (h as usize + w as usize),
                    "{h}x{w} a={a} b={b}: {} steps",
                    rec.steps.len()
                );
            }
        }
    }

    #[test]
    fn split_then_merge_round_trip() {
        let g = BoardGeometry::hexagon(4, 8).unwrap();
        let view = View::of(RegionRef::full(4, 8));
        for total in [3usize, 7, 12, 20] {
            for a in [0usize, 2, 5, 8] {
                if a > total || a > 16 || total - a > 16 {
                    continue;
                }
                if total == 2 && a == 1 {
                    continue;
                }
                let mut c =
                    Configuration::from_occupied(g, &g.all_positions().collect::<Vec<_>>()).unwrap();
                for k in 0..total {
                    let (r, cc) = view.cm_position(k);
                    c.set_cell(view.at(r, cc), Cell::Hole);
                }
                let mut rec = Recorder::new(c);
                if hex_split_cm(&mut rec, &view, a).is_err() {
                    continue; // impossible splits (isolated) are fine to skip
                }
                let left = view.sub(0, 0, 4, 4);
                let right = view.sub(0, 4, 4, 4);
                assert!(is_cm_prefix(&rec.cfg, &left, a), "total={total} a={a}");
                assert!(is_cm_prefix(&rec.cfg, &right, total - a), "total={total} a={a}");
            }
        }
    }

    #[test]
    fn zigzag_public_op() {
        let g = BoardGeometry::hexagon(8, 4).unwrap();
        // 6-hole column at rows 0..6 of column 1.
        let holes: Vec<Position> = (0..6).map(|r| pos(r, 1)).collect();
        let occ: Vec<Position> = g.all_positions().filter(|p| !holes.contains(p)).collect();
        let c = Configuration::from_occupied(g, &occ).unwrap();
        let t = zigzag_column(&c, 1, ZigzagDirection::Down, 2).unwrap();
        let end = t.apply().unwrap();
        let want: Vec<Position> = (2..8).map(|r| pos(r, 1)).collect();
        assert_eq!(end.holes(), want);

        // Back up again.
        let t2 = zigzag_column(&end, 1, ZigzagDirection::Up, 2).unwrap();
        assert_eq!(t2.apply().unwrap().holes(), holes);

        // Count zero is the identity.
        assert_eq!(zigzag_column(&c, 1, ZigzagDirection::Down, 0).unwrap().step_count(), 0);
    }

    #[test]
    fn zigzag_five_holes_groups_triple_and_pair() {
        let g = BoardGeometry::hexagon(8, 4).unwrap();
        let holes: Vec<Position> = (0..5).map(|r| pos(r, 1)).collect();
        let occ: Vec<Position> = g.all_positions().filter(|p| !holes.contains(p)).collect();
        let c = Configuration::from_occupied(g, &occ).unwrap();
        let t = zigzag_column(&c, 1, ZigzagDirection::Down, 3).unwrap();
        let end = t.apply().unwrap();
        let want: Vec<Position> = (3..8).map(|r| pos(r, 1)).collect();
        assert_eq!(end.holes(), want);
    }
}
