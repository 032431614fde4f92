//! The six-hole sorting gadget: with the holes gathered into a 3 x 2 block,
//! any two pieces can be transposed while everything else is restored. The
//! block shifts around the board in fixed six-move sequences; inside a 3 x 4
//! window with the block at its left, the five swaps of consecutive
//! window-order pieces are realized by move sequences found once by
//! breadth-first search and cached. Composing transpositions sorts the board
//! to any target.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::board::{BoardGeometry, Position};
use crate::config::{Cell, Configuration};
use crate::error::Error;
use crate::moves::{AtomicMove, MoveTrace, ParallelStep};
use crate::oracle::legal_moves;
use crate::rec::Recorder;
use crate::region::{RegionRef, View};

use super::gather::{gather_pattern, gather_to_cells, order_with_adjacent_park};

/// A move in window- or block-relative coordinates.
#[derive(Debug, Clone, Copy)]
struct RelMove {
    from: (i32, i32),
    to: (i32, i32),
    other: (i32, i32),
}

impl RelMove {
    fn at(&self, origin: Position) -> AtomicMove {
        let abs = |(dr, dc): (i32, i32)| {
            Position::new((origin.row as i32 + dr) as u16, (origin.col as i32 + dc) as u16)
        };
        AtomicMove::hex(abs(self.from), abs(self.to), abs(self.other))
    }
}

// ---- hole block shifts -------------------------------------------------------

/// Six-move sequences moving the 3 x 2 hole block one step. Each constant is
/// relative to the block's top-left cell; the displaced pieces travel around
/// the block (shifting right sends the column right of the block to its left,
/// and so on).
const SHIFT_RIGHT: [RelMove; 6] = [
    RelMove { from: (0, 2), to: (0, 1), other: (1, 1) },
    RelMove { from: (1, 2), to: (1, 1), other: (0, 2) },
    RelMove { from: (2, 2), to: (2, 1), other: (1, 2) },
    RelMove { from: (0, 1), to: (0, 0), other: (1, 0) },
    RelMove { from: (1, 1), to: (1, 0), other: (0, 1) },
    RelMove { from: (2, 1), to: (2, 0), other: (1, 1) },
];

const SHIFT_LEFT: [RelMove; 6] = [
    RelMove { from: (2, -1), to: (2, 0), other: (1, 0) },
    RelMove { from: (1, -1), to: (1, 0), other: (0, 0) },
    RelMove { from: (0, -1), to: (0, 0), other: (1, -1) },
    RelMove { from: (2, 0), to: (2, 1), other: (1, 1) },
    RelMove { from: (1, 0), to: (1, 1), other: (0, 1) },
    RelMove { from: (0, 0), to: (0, 1), other: (1, 0) },
];

const SHIFT_DOWN: [RelMove; 6] = [
    RelMove { from: (3, 0), to: (2, 0), other: (2, 1) },
    RelMove { from: (2, 0), to: (1, 0), other: (1, 1) },
    RelMove { from: (1, 0), to: (0, 0), other: (0, 1) },
    RelMove { from: (3, 1), to: (2, 1), other: (3, 0) },
    RelMove { from: (2, 1), to: (1, 1), other: (2, 0) },
    RelMove { from: (1, 1), to: (0, 1), other: (1, 0) },
];

const SHIFT_UP: [RelMove; 6] = [
    RelMove { from: (-1, 1), to: (0, 1), other: (0, 0) },
    RelMove { from: (0, 1), to: (1, 1), other: (1, 0) },
    RelMove { from: (1, 1), to: (2, 1), other: (2, 0) },
    RelMove { from: (-1, 0), to: (0, 0), other: (-1, 1) },
    RelMove { from: (0, 0), to: (1, 0), other: (0, 1) },
    RelMove { from: (1, 0), to: (2, 0), other: (1, 1) },
];

fn emit_rel(rec: &mut Recorder, origin: Position, seq: &[RelMove]) {
    for rm in seq {
        rec.push(ParallelStep::single(rm.at(origin)));
    }
}

// ---- the 3 x 4 core swaps ----------------------------------------------------

/// The canonical core window: a 3 x 4 hexagon board with holes in the first
/// two columns and pieces 1..6 in column-major order in the last two.
fn core_start() -> Configuration {
    let g = BoardGeometry::hexagon(3, 4).unwrap();
    let mut cells = vec![Cell::Hole; 12];
    for k in 0..6u32 {
        let (r, c) = ((k % 3) as u16, 2 + (k / 3) as u16);
        cells[g.cell_index(Position::new(r, c))] = Cell::Labeled(k + 1);
    }
    Configuration::from_cells(g, cells).unwrap()
}

/// Move sequences realizing the five consecutive swaps (1 2), (2 3), ... on
/// the canonical core window, restoring the hole block and every other piece.
fn core_swaps() -> &'static [Vec<RelMove>; 5] {
    static CORE: OnceLock<[Vec<RelMove>; 5]> = OnceLock::new();
    CORE.get_or_init(|| {
        let start = core_start();
        let mut targets: Vec<Configuration> = Vec::new();
        for k in 1..=5u32 {
            let mut t = start.clone();
            let positions = start.label_positions();
            t.set_cell(positions[k as usize - 1], Cell::Labeled(k + 1));
            t.set_cell(positions[k as usize], Cell::Labeled(k));
            targets.push(t);
        }
        let mut found: Vec<Option<Vec<RelMove>>> = vec![None; 5];
        let mut remaining = 5;
        let mut parent: HashMap<Configuration, (Configuration, AtomicMove)> = HashMap::new();
        let mut q = VecDeque::new();
        parent.insert(start.clone(), (start.clone(), AtomicMove::square(Position::new(0, 0), Position::new(0, 0))));
        q.push_back(start.clone());
        while let Some(cur) = q.pop_front() {
            if remaining == 0 {
                break;
            }
            for mv in legal_moves(&cur) {
                let mut next = cur.clone();
                let cell = next.cell(mv.from);
                next.set_cell(mv.from, Cell::Hole);
                next.set_cell(mv.to, cell);
                if parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next.clone(), (cur.clone(), mv));
                if let Some(i) = targets.iter().position(|t| *t == next) {
                    if found[i].is_none() {
                        let mut seq = Vec::new();
                        let mut node = next.clone();
                        while node != start {
                            let (prev, m) = parent[&node].clone();
                            seq.push(RelMove {
                                from: (m.from.row as i32, m.from.col as i32),
                                to: (m.to.row as i32, m.to.col as i32),
                                other: {
                                    let s = m.spare_hole().expect("hex move");
                                    (s.row as i32, s.col as i32)
                                },
                            });
                            node = prev;
                        }
                        seq.reverse();
                        found[i] = Some(seq);
                        remaining -= 1;
                        if remaining == 0 {
                            break;
                        }
                    }
                }
                q.push_back(next);
            }
        }
        let mut out: [Vec<RelMove>; 5] = Default::default();
        for (i, f) in found.into_iter().enumerate() {
            out[i] = f.expect("core swap reachable");
        }
        out
    })
}

// ---- the gadget driver -------------------------------------------------------

/// Locates the 3 x 2 hole block of the view, as its top-left corner in view
/// coordinates.
fn locate_block(cfg: &Configuration, view: &View) -> Result<(u16, u16), Error> {
    let holes: Vec<(u16, u16)> = (0..view.rows())
        .flat_map(|r| (0..view.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| cfg.is_hole(view.at(r, c)))
        .collect();
    if holes.len() != 6 {
        return Err(Error::precondition(format!("gadget needs exactly 6 holes, found {}", holes.len())));
    }
    let top = holes.iter().map(|h| h.0).min().unwrap();
    let left = holes.iter().map(|h| h.1).min().unwrap();
    for r in top..top + 3 {
        for c in left..left + 2 {
            if !holes.contains(&(r, c)) {
                return Err(Error::precondition("the six holes must form a 3 x 2 block"));
            }
        }
    }
    Ok((top, left))
}

struct Gadget<'a, 'b> {
    rec: &'a mut Recorder,
    view: View,
    block: (u16, u16),
    _marker: std::marker::PhantomData<&'b ()>,
}

impl<'a, 'b> Gadget<'a, 'b> {
    fn new(rec: &'a mut Recorder, view: View) -> Result<Self, Error> {
        let block = locate_block(&rec.cfg, &view)?;
        Ok(Gadget { rec, view, block, _marker: std::marker::PhantomData })
    }

    fn shift_to_col(&mut self, col: u16) {
        while self.block.1 < col {
            emit_rel(self.rec, self.view.at(self.block.0, self.block.1), &SHIFT_RIGHT);
            self.block.1 += 1;
        }
        while self.block.1 > col {
            emit_rel(self.rec, self.view.at(self.block.0, self.block.1), &SHIFT_LEFT);
            self.block.1 -= 1;
        }
    }

    fn shift_to_row(&mut self, row: u16) {
        while self.block.0 < row {
            emit_rel(self.rec, self.view.at(self.block.0, self.block.1), &SHIFT_DOWN);
            self.block.0 += 1;
        }
        while self.block.0 > row {
            emit_rel(self.rec, self.view.at(self.block.0, self.block.1), &SHIFT_UP);
            self.block.0 -= 1;
        }
    }

    /// The pieces of the block's three rows in strip column-major order.
    fn strip_sequence(&self) -> Vec<Position> {
        let mut out = Vec::new();
        for c in 0..self.view.cols() {
            for r in self.block.0..self.block.0 + 3 {
                let p = self.view.at(r, c);
                if self.rec.cfg.is_piece(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Swaps the pieces at strip sequence positions `t` and `t + 1`
    /// (0-indexed) by positioning the block and running a core sequence.
    fn core_swap(&mut self, t: usize) {
        let w = self.view.cols() as usize;
        let j = ((t / 3) as isize).clamp(0, w as isize - 4) as usize;
        debug_assert!((1..=5).contains(&(t + 1 - 3 * j)), "t={t} j={j}");
        self.shift_to_col(j as u16);
        let seq = &core_swaps()[t - 3 * j];
        let origin = self.view.at(self.block.0, j as u16);
        for rm in seq {
            self.rec.push(ParallelStep::single(rm.at(origin)));
        }
    }

    /// Transposes the pieces at strip sequence positions `i < j` and restores
    /// everything else: bubble up, swap, bubble back.
    fn strip_swap(&mut self, i: usize, j: usize) {
        debug_assert!(i < j);
        for t in i..j - 1 {
            self.core_swap(t);
        }
        self.core_swap(j - 1);
        for t in (i..j - 1).rev() {
            self.core_swap(t);
        }
    }
}

/// Transposes two adjacent pieces while restoring every other piece and the
/// hole block. The configuration must carry its six holes as a 3 x 2 block.
pub fn transpose_adjacent(c: &Configuration, p: Position, q: Position) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    let view = View::of(RegionRef::full(geom.rows, geom.cols));
    let mut rec = Recorder::new(c.clone());
    transpose_adjacent_in(&mut rec, &view, p, q)?;
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

pub(crate) fn transpose_adjacent_in(
    rec: &mut Recorder,
    view: &View,
    p: Position,
    q: Position,
) -> Result<(), Error> {
    let geom = *rec.cfg.geometry();
    if geom.kind != crate::board::BoardKind::Hexagon {
        return Err(Error::precondition("the transposition gadget runs on hexagon boards"));
    }
    if !geom.are_adjacent(p, q) || !rec.cfg.is_piece(p) || !rec.cfg.is_piece(q) {
        return Err(Error::precondition("transpose_adjacent needs two adjacent pieces"));
    }
    let (lp, lq) = match (rec.cfg.cell(p), rec.cfg.cell(q)) {
        (Cell::Labeled(a), Cell::Labeled(b)) => (a, b),
        _ => return Err(Error::precondition("transpose_adjacent needs labeled pieces")),
    };
    let before = rec.cfg.clone();

    let (pl, ql) = (view.logical(p), view.logical(q));
    let mut g = Gadget::new(rec, *view)?;
    let (rows, cols) = (g.view.rows(), g.view.cols());
    if rows < 3 {
        return Err(Error::precondition("gadget needs at least three rows"));
    }

    // Pick target block columns not containing the pieces' final columns
    // after the horizontal travel. Only pieces in the block's three rows are
    // displaced, two columns toward the side the block came from; pieces
    // outside those rows stay put.
    let start_col = g.block.1 as i32;
    let block_rows = g.block.0..g.block.0 + 3;
    let mut target_col: Option<u16> = None;
    for a in 0..=cols.saturating_sub(2) {
        let a = a as i32;
        let shifted = |(row, col): (u16, u16)| -> i32 {
            let col = col as i32;
            if !block_rows.contains(&row) {
                return col;
            }
            if a > start_col && col >= start_col + 2 && col <= a + 1 {
                col - 2
            } else if a < start_col && col >= a && col <= start_col - 1 {
                col + 2
            } else {
                col
            }
        };
        let (pc, qc) = (shifted(pl), shifted(ql));
        if pc != a && pc != a + 1 && qc != a && qc != a + 1 && a + 1 < cols as i32 {
            target_col = Some(a as u16);
            break;
        }
    }
    let target_col = target_col
        .ok_or_else(|| Error::precondition("board too narrow to park the block beside the pieces"))?;

    let mark = g.rec.steps.len();
    g.shift_to_col(target_col);
    // Vertical travel only displaces pieces in the block's two columns, which
    // exclude p and q by choice of target_col.
    let p_now = position_of_label(&g.rec.cfg, lp);
    let q_now = position_of_label(&g.rec.cfg, lq);
    let (pr, qr) = (g.view.logical(p_now).0, g.view.logical(q_now).0);
    let mut target_row = pr.min(qr).min(rows - 3);
    if pr.max(qr) > target_row + 2 {
        target_row = pr.max(qr) - 2;
    }
    g.shift_to_row(target_row);
    let positioning: Vec<ParallelStep> = g.rec.steps[mark..].to_vec();

    // Swap within the strip.
    let seq = g.strip_sequence();
    let p_now = position_of_label(&g.rec.cfg, lp);
    let q_now = position_of_label(&g.rec.cfg, lq);
    let strip_err = || {
        Error::internal(format!(
            "piece left the strip: p={p} q={q} p_now={p_now} q_now={q_now} block={:?} target_col={target_col} target_row={target_row} start_col={start_col}",
            g.block
        ))
    };
    let i = seq.iter().position(|&x| x == p_now).ok_or_else(strip_err)?;
    let j = seq.iter().position(|&x| x == q_now).ok_or_else(strip_err)?;
    let (i, j) = (i.min(j), i.max(j));
    g.strip_swap(i, j);
    g.shift_to_col(target_col);
    debug_assert_eq!(g.block, (target_row, target_col));

    rec.extend_reversed(positioning);

    // Everything restored except the two pieces.
    let mut expect = before.clone();
    expect.set_cell(p, Cell::Labeled(lq));
    expect.set_cell(q, Cell::Labeled(lp));
    if rec.cfg != expect {
        return Err(Error::internal("transposition gadget failed to restore the board"));
    }
    Ok(())
}

fn position_of_label(cfg: &Configuration, label: u32) -> Position {
    cfg.geometry()
        .all_positions()
        .find(|&p| cfg.cell(p) == Cell::Labeled(label))
        .expect("label present")
}

/// Sorts a labeled hexagon configuration with exactly six holes to an
/// arbitrary target of the same label set: gather the holes to the corner
/// block, realize the remaining permutation as adjacent transpositions, and
/// undo the target's gathering.
pub fn sort_with_six_holes(c: &Configuration, target: &Configuration) -> Result<MoveTrace, Error> {
    let geom = *c.geometry();
    let view = View::of(RegionRef::full(geom.rows, geom.cols));
    let mut rec = Recorder::new(c.clone());
    sort_with_six_holes_in(&mut rec, &view, target)?;
    Ok(MoveTrace::new(c.clone(), rec.steps))
}

pub(crate) fn sort_with_six_holes_in(
    rec: &mut Recorder,
    view: &View,
    target: &Configuration,
) -> Result<(), Error> {
    let geom = *rec.cfg.geometry();
    if geom.kind != crate::board::BoardKind::Hexagon {
        return Err(Error::precondition("sort_with_six_holes runs on hexagon boards"));
    }
    if view.rows() < 3 || view.cols() < 4 {
        return Err(Error::precondition("sort_with_six_holes needs a region of at least 3 x 4"));
    }
    let in_view_holes =
        |cfg: &Configuration| view.positions().iter().filter(|&&p| cfg.is_hole(p)).count();
    if in_view_holes(&rec.cfg) != 6 || in_view_holes(target) != 6 {
        return Err(Error::precondition("sort_with_six_holes needs exactly six holes"));
    }
    let mut here: Vec<u32> = Vec::new();
    let mut there: Vec<u32> = Vec::new();
    for p in view.positions() {
        if let Cell::Labeled(l) = rec.cfg.cell(p) {
            here.push(l);
        }
        if let Cell::Labeled(l) = target.cell(p) {
            there.push(l);
        }
    }
    here.sort_unstable();
    there.sort_unstable();
    if here != there {
        return Err(Error::precondition("target holds a different label set"));
    }

    // Gather both sides' holes onto the corner pattern.
    let pattern: Vec<Position> = gather_pattern(view.rows(), view.cols(), 6)?
        .into_iter()
        .map(|p| view.at(p.row, p.col))
        .collect();
    let pattern = order_with_adjacent_park(&geom, &pattern)?;
    gather_to_cells(rec, view, &pattern)?;

    let mut synth = rec.cfg.clone();
    for p in view.positions() {
        synth.set_cell(p, target.cell(p));
    }
    let mut sub = Recorder::new(synth);
    gather_to_cells(&mut sub, view, &pattern)?;

    // Selection sort by adjacent transpositions, targets placed bottom row
    // first. Within a row targets run right to left, except the row directly
    // below the corner block, which runs left to right so the cells hugging
    // the block never become a walled-off pocket.
    let mut cells: Vec<Position> = view.positions();
    let w = view.cols() as usize;
    cells.sort_by_key(|p| {
        let (r, c) = view.logical(*p);
        let col_rank = if r == 3 { c as usize } else { w - 1 - c as usize };
        (std::cmp::Reverse(r), col_rank)
    });
    let mut locked: HashSet<Position> = HashSet::new();
    for cell in cells {
        let want = match sub.cfg.cell(cell) {
            Cell::Labeled(l) => l,
            _ => continue, // hole cell of the gathered pattern
        };
        loop {
            let at = position_of_label(&rec.cfg, want);
            if at == cell {
                break;
            }
            let path = piece_path(&rec.cfg, view, at, cell, &locked)?;
            transpose_pieces(rec, view, path[0], path[1])?;
        }
        locked.insert(cell);
    }
    rec.extend_reversed(sub.steps);

    for p in view.positions() {
        if rec.cfg.cell(p) != target.cell(p) {
            return Err(Error::internal("six-hole sort missed its target"));
        }
    }
    Ok(())
}

fn transpose_pieces(rec: &mut Recorder, view: &View, p: Position, q: Position) -> Result<(), Error> {
    transpose_adjacent_in(rec, view, p, q)
}

/// Shortest path between two piece cells across unlocked piece cells.
fn piece_path(
    cfg: &Configuration,
    view: &View,
    from: Position,
    to: Position,
    locked: &HashSet<Position>,
) -> Result<Vec<Position>, Error> {
    let geom = *cfg.geometry();
    let ok = |p: Position| view.contains(p) && !locked.contains(&p) && cfg.is_piece(p);
    let mut parent: HashMap<Position, Position> = HashMap::new();
    let mut q = VecDeque::new();
    parent.insert(from, from);
    q.push_back(from);
    while let Some(cur) = q.pop_front() {
        if cur == to {
            let mut path = vec![to];
            let mut node = to;
            while node != from {
                node = parent[&node];
                path.push(node);
            }
            path.reverse();
            return Ok(path);
        }
        for nb in geom.neighbors(cur).expect("in bounds") {
            if !parent.contains_key(&nb) && ok(nb) {
                parent.insert(nb, cur);
                q.push_back(nb);
            }
        }
    }
    Err(Error::internal(format!(
        "no piece path {from} -> {to} (locked {} cells)",
        locked.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn canonical_3x4() -> Configuration {
        core_start()
    }

    #[test]
    fn core_swaps_exist_and_are_short() {
        let swaps = core_swaps();
        for (i, seq) in swaps.iter().enumerate() {
            assert!(!seq.is_empty(), "swap {i}");
            assert!(seq.len() <= 40, "swap {i} long: {}", seq.len());
        }
    }

    #[test]
    fn fig_style_first_swaps_on_3x4() {
        // Swapping pieces 1 and 2 on the canonical 3 x 4 board returns the
        // exact start and end states of the gadget; same for (2 3), (3 4).
        let start = canonical_3x4();
        for (a, b) in [(1u32, 2u32), (2, 3), (3, 4), (4, 5), (5, 6)] {
            let pa = position_of_label(&start, a);
            let pb = position_of_label(&start, b);
            // Consecutive column-major pieces need not be board-adjacent;
            // drive the strip machinery directly.
            let mut rec = Recorder::new(start.clone());
            let view = View::of(RegionRef::full(3, 4));
            let mut g = Gadget::new(&mut rec, view).unwrap();
            g.strip_swap(a as usize - 1, b as usize - 1);
            let end = rec.cfg;
            let mut expect = start.clone();
            expect.set_cell(pa, Cell::Labeled(b));
            expect.set_cell(pb, Cell::Labeled(a));
            assert_eq!(end, expect, "swap ({a} {b})");
        }
    }

    #[test]
    fn transpose_is_involution() {
        let mut rng = StdRng::seed_from_u64(71);
        let g = BoardGeometry::hexagon(5, 5).unwrap();
        // Block in the corner, pieces labeled everywhere else.
        let pat = gather_pattern(5, 5, 6).unwrap();
        let cells: Vec<Position> = g.all_positions().filter(|p| !pat.contains(p)).collect();
        let mut shuffled = cells.clone();
        shuffled.shuffle(&mut rng);
        let c = Configuration::from_labels(g, &shuffled).unwrap();
        // Pick an adjacent piece pair away from the block.
        let p = Position::new(3, 2);
        let q = Position::new(3, 3);
        let t = transpose_adjacent(&c, p, q).unwrap();
        let once = t.apply().unwrap();
        assert_ne!(once, c);
        let t2 = transpose_adjacent(&once, p, q).unwrap();
        assert_eq!(t2.apply().unwrap(), c);
    }

    #[test]
    fn transpose_deep_pair_shifts_block() {
        let mut rng = StdRng::seed_from_u64(72);
        let g = BoardGeometry::hexagon(5, 5).unwrap();
        let pat = gather_pattern(5, 5, 6).unwrap();
        let cells: Vec<Position> = g.all_positions().filter(|p| !pat.contains(p)).collect();
        let mut shuffled = cells.clone();
        shuffled.shuffle(&mut rng);
        let c = Configuration::from_labels(g, &shuffled).unwrap();
        // Pieces in the bottom rows force both travels.
        let p = Position::new(4, 3);
        let q = Position::new(4, 4);
        let before_p = c.cell(p);
        let before_q = c.cell(q);
        let t = transpose_adjacent(&c, p, q).unwrap();
        let end = t.apply().unwrap();
        assert_eq!(end.cell(p), before_q);
        assert_eq!(end.cell(q), before_p);
        // Every other cell unchanged.
        for x in g.all_positions() {
            if x != p && x != q {
                assert_eq!(end.cell(x), c.cell(x), "cell {x} changed");
            }
        }
    }

    #[test]
    fn six_hole_sort_reaches_random_targets() {
        let mut rng = StdRng::seed_from_u64(73);
        let g = BoardGeometry::hexagon(5, 5).unwrap();
        for _ in 0..5 {
            let (a, b) = loop {
                let mut cells: Vec<Position> = g.all_positions().collect();
                cells.shuffle(&mut rng);
                let a = Configuration::from_labels(g, &cells[..19]).unwrap();
                let mut cells2: Vec<Position> = g.all_positions().collect();
                cells2.shuffle(&mut rng);
                let b = Configuration::from_labels(g, &cells2[..19]).unwrap();
                if !a.all_holes_isolated() && !b.all_holes_isolated() {
                    break (a, b);
                }
            };
            let t = sort_with_six_holes(&a, &b).unwrap();
            assert_eq!(t.apply().unwrap(), b);
        }
    }

    #[test]
    fn identity_target_round_trips() {
        let mut rng = StdRng::seed_from_u64(74);
        let g = BoardGeometry::hexagon(5, 5).unwrap();
        let c = loop {
            let mut cells: Vec<Position> = g.all_positions().collect();
            cells.shuffle(&mut rng);
            let c = Configuration::from_labels(g, &cells[..19]).unwrap();
            if !c.all_holes_isolated() {
                break c;
            }
        };
        let t = sort_with_six_holes(&c, &c).unwrap();
        assert_eq!(t.apply().unwrap(), c);
    }
}
