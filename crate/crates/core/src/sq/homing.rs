//! Piece homing on square boards with at least two holes: BFS hole routing
//! around locked cells, one-piece placement, and the staged rotation that
//! finishes a row or column segment whose last two cells would otherwise
//! deadlock. All emitted steps are single moves.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::board::Position;
use crate::config::{Cell, Configuration};
use crate::error::Error;
use crate::moves::{AtomicMove, ParallelStep};
use crate::rec::Recorder;
use crate::region::View;

pub(crate) struct Engine<'a> {
    pub rec: &'a mut Recorder,
    pub view: View,
    pub locked: HashSet<Position>,
    pos_of: HashMap<u32, Position>,
}

impl<'a> Engine<'a> {
    pub fn new(rec: &'a mut Recorder, view: View) -> Result<Self, Error> {
        let mut pos_of = HashMap::new();
        for p in view.positions() {
            if let Cell::Labeled(l) = rec.cfg.cell(p) {
                pos_of.insert(l, p);
            }
        }
        Ok(Engine { rec, view, locked: HashSet::new(), pos_of })
    }

    pub fn position_of(&self, label: u32) -> Position {
        self.pos_of[&label]
    }

    fn emit(&mut self, mv: AtomicMove) {
        if let Cell::Labeled(l) = self.rec.cfg.cell(mv.from) {
            self.pos_of.insert(l, mv.to);
        }
        self.rec.push(ParallelStep::single(mv));
    }

    fn passable(&self, p: Position, protect: &[Position]) -> bool {
        self.view.contains(p) && !self.locked.contains(&p) && !protect.contains(&p)
    }

    /// Shortest path over passable view cells, neighbors expanded in
    /// lexicographic order so ties break deterministically.
    fn bfs_path(&self, from: Position, to: Position, protect: &[Position]) -> Option<Vec<Position>> {
        if from == to {
            return Some(vec![from]);
        }
        let geom = *self.rec.cfg.geometry();
        let mut parent: HashMap<Position, Position> = HashMap::new();
        let mut q = VecDeque::new();
        q.push_back(from);
        parent.insert(from, from);
        while let Some(p) = q.pop_front() {
            for nb in geom.neighbors(p).expect("in bounds") {
                if parent.contains_key(&nb) || !self.passable(nb, protect) {
                    continue;
                }
                parent.insert(nb, p);
                if nb == to {
                    let mut path = vec![nb];
                    let mut cur = nb;
                    while cur != from {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                q.push_back(nb);
            }
        }
        None
    }

    /// Nearest hole to `target` over passable cells, lexicographic tie-break.
    fn nearest_hole(&self, target: Position, protect: &[Position]) -> Option<Position> {
        let geom = *self.rec.cfg.geometry();
        if self.rec.cfg.is_hole(target) {
            return Some(target);
        }
        let mut seen: HashSet<Position> = HashSet::new();
        let mut q = VecDeque::new();
        seen.insert(target);
        q.push_back(target);
        while let Some(p) = q.pop_front() {
            for nb in geom.neighbors(p).expect("in bounds") {
                if seen.contains(&nb) || !self.passable(nb, protect) {
                    continue;
                }
                seen.insert(nb);
                if self.rec.cfg.is_hole(nb) {
                    return Some(nb);
                }
                q.push_back(nb);
            }
        }
        None
    }

    /// Brings a hole to `target`, walking it around locked and protected
    /// cells by sliding the passed pieces one at a time.
    pub fn route_hole_to(&mut self, target: Position, protect: &[Position]) -> Result<(), Error> {
        if self.rec.cfg.is_hole(target) {
            return Ok(());
        }
        let start = self
            .nearest_hole(target, protect)
            .ok_or_else(|| Error::internal(format!("no hole reachable from {target}")))?;
        let path = self
            .bfs_path(start, target, protect)
            .ok_or_else(|| Error::internal(format!("no hole path {start} -> {target}")))?;
        let mut hole = start;
        for &next in &path[1..] {
            if self.rec.cfg.is_hole(next) {
                hole = next;
                continue;
            }
            self.emit(AtomicMove::square(next, hole));
            hole = next;
        }
        debug_assert!(self.rec.cfg.is_hole(target));
        Ok(())
    }

    /// Walks the piece to `target` one cell at a time, fetching a hole ahead
    /// of each step.
    pub fn move_piece_to(&mut self, label: u32, target: Position) -> Result<(), Error> {
        loop {
            let at = self.position_of(label);
            if at == target {
                return Ok(());
            }
            let path = self
                .bfs_path(at, target, &[])
                .ok_or_else(|| Error::internal(format!("piece {label} cannot reach {target}")))?;
            let next = path[1];
            if !self.rec.cfg.is_hole(next) {
                self.route_hole_to(next, &[at])?;
            }
            self.emit(AtomicMove::square(at, next));
        }
    }

    /// Places the piece and locks its cell.
    pub fn place(&mut self, label: u32, target: Position) -> Result<(), Error> {
        self.move_piece_to(label, target)?;
        self.locked.insert(target);
        Ok(())
    }

    /// Places the final two pieces of a segment: `a` belongs just before `b`
    /// at the segment end. Both are staged (`a` on `b`'s home, `b` on the
    /// overflow cell behind it) and rotated in with two slides.
    pub fn place_last_two(
        &mut self,
        a: (u32, Position),
        b: (u32, Position),
        overflow: Position,
    ) -> Result<(), Error> {
        let (a_label, a_home) = a;
        let (b_label, b_home) = b;
        if self.position_of(a_label) == a_home && self.position_of(b_label) == b_home {
            self.locked.insert(a_home);
            self.locked.insert(b_home);
            return Ok(());
        }
        let a_temp = b_home;
        let b_temp = overflow;
        self.move_piece_to(a_label, a_temp)?;
        self.locked.insert(a_temp);
        self.move_piece_to(b_label, b_temp)?;
        self.locked.insert(b_temp);
        self.locked.remove(&a_temp);
        self.locked.remove(&b_temp);
        self.route_hole_to(a_home, &[a_temp, b_temp])?;
        self.emit(AtomicMove::square(a_temp, a_home));
        self.emit(AtomicMove::square(b_temp, a_temp));
        self.locked.insert(a_home);
        self.locked.insert(b_home);
        Ok(())
    }
}

/// Drives the view's pieces so that the piece with the k-th smallest label
/// sits at the k-th cell in the view's logical row-major order, holes filling
/// the remaining suffix. Needs at least two holes and a view of at least two
/// rows and two columns.
pub(crate) fn solve_to_rank_order(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    if h < 2 || w < 2 {
        return Err(Error::precondition("homing needs a region of at least 2x2"));
    }
    let mut labels: Vec<u32> = view
        .positions()
        .iter()
        .filter_map(|&p| match rec.cfg.cell(p) {
            Cell::Labeled(l) => Some(l),
            Cell::Unlabeled => None,
            Cell::Hole => None,
        })
        .collect();
    let piece_cells = view
        .positions()
        .iter()
        .filter(|&&p| rec.cfg.is_piece(p))
        .count();
    if labels.len() != piece_cells {
        return Err(Error::precondition("homing needs labeled pieces"));
    }
    labels.sort_unstable();
    let n = labels.len();
    let cells = h as usize * w as usize;
    if n + 2 > cells {
        return Err(Error::precondition("homing needs at least two holes"));
    }

    let mut eng = Engine::new(rec, *view)?;
    let label_at_rank = |k: usize| labels[k];

    let mut row: u16 = 0;
    while row < h {
        let row_start = row as usize * w as usize;
        let in_row = n.saturating_sub(row_start).min(w as usize);
        if in_row == 0 {
            break;
        }
        let rows_left = h - row;
        let lower = n.saturating_sub((row as usize + 1) * w as usize).min(w as usize);
        if rows_left >= 3 || (rows_left == 2 && lower == 0) {
            if in_row == w as usize {
                for c in 0..w - 2 {
                    eng.place(label_at_rank(row_start + c as usize), view.at(row, c))?;
                }
                eng.place_last_two(
                    (label_at_rank(row_start + w as usize - 2), view.at(row, w - 2)),
                    (label_at_rank(row_start + w as usize - 1), view.at(row, w - 1)),
                    view.at(row + 1, w - 1),
                )?;
            } else {
                for c in 0..in_row as u16 {
                    eng.place(label_at_rank(row_start + c as usize), view.at(row, c))?;
                }
                break;
            }
            row += 1;
        } else {
            // Final two rows, filled column by column with a staged rotation
            // per column pair, then the upper row's last two cells.
            let k_lower = lower as u16;
            for c in 0..k_lower.min(w - 2) {
                let u = (label_at_rank(row_start + c as usize), view.at(row, c));
                let l = (label_at_rank(row_start + w as usize + c as usize), view.at(row + 1, c));
                place_column_pair(&mut eng, u, l, view.at(row + 1, c + 1))?;
            }
            for c in k_lower..w - 2 {
                eng.place(label_at_rank(row_start + c as usize), view.at(row, c))?;
            }
            eng.place_last_two(
                (label_at_rank(row_start + w as usize - 2), view.at(row, w - 2)),
                (label_at_rank(row_start + w as usize - 1), view.at(row, w - 1)),
                view.at(row + 1, w - 1),
            )?;
            break;
        }
    }
    Ok(())
}

/// Stages the upper piece on the lower home and the lower piece one cell
/// right of it, then rotates both into place.
fn place_column_pair(
    eng: &mut Engine,
    upper: (u32, Position),
    lower: (u32, Position),
    side_temp: Position,
) -> Result<(), Error> {
    let (u_label, u_home) = upper;
    let (l_label, l_home) = lower;
    if eng.position_of(u_label) == u_home && eng.position_of(l_label) == l_home {
        eng.locked.insert(u_home);
        eng.locked.insert(l_home);
        return Ok(());
    }
    eng.move_piece_to(u_label, l_home)?;
    eng.locked.insert(l_home);
    eng.move_piece_to(l_label, side_temp)?;
    eng.locked.insert(side_temp);
    eng.locked.remove(&l_home);
    eng.locked.remove(&side_temp);
    eng.route_hole_to(u_home, &[l_home, side_temp])?;
    eng.emit(AtomicMove::square(l_home, u_home));
    eng.emit(AtomicMove::square(side_temp, l_home));
    eng.locked.insert(u_home);
    eng.locked.insert(l_home);
    Ok(())
}

/// Rearranges the view so its cells match `target` exactly (labels and
/// holes). `target` must hold the same label set on the view with at least
/// two holes. Composition: solve both sides to the rank order and reverse the
/// target's half.
pub(crate) fn solve_region_to_target(
    rec: &mut Recorder,
    view: &View,
    target: &Configuration,
) -> Result<(), Error> {
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
        return Err(Error::precondition("target holds a different label set on the region"));
    }

    solve_to_rank_order(rec, view)?;

    let mut synth = rec.cfg.clone();
    for p in view.positions() {
        synth.set_cell(p, target.cell(p));
    }
    let mut sub = Recorder::new(synth);
    solve_to_rank_order(&mut sub, view)?;
    rec.extend_reversed(sub.steps);

    for p in view.positions() {
        if rec.cfg.cell(p) != target.cell(p) {
            return Err(Error::internal(format!("region solve missed target at {p}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::BoardGeometry;
    use crate::region::RegionRef;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn random_labeled(rows: u16, cols: u16, n: usize, rng: &mut StdRng) -> Configuration {
        let g = BoardGeometry::square(rows, cols).unwrap();
        let mut cells: Vec<Position> = g.all_positions().collect();
        cells.shuffle(rng);
        Configuration::from_labels(g, &cells[..n]).unwrap()
    }

    #[test]
    fn rank_order_small_boards() {
        let mut rng = StdRng::seed_from_u64(3);
        for (rows, cols) in [(2u16, 2u16), (2, 4), (4, 2), (3, 3), (4, 4), (2, 8), (5, 4)] {
            let cells = rows as usize * cols as usize;
            for n in 0..=cells - 2 {
                for _ in 0..3 {
                    let c = random_labeled(rows, cols, n, &mut rng);
                    let view = View::of(RegionRef::full(rows, cols));
                    let mut rec = Recorder::new(c);
                    solve_to_rank_order(&mut rec, &view).unwrap();
                    for (k, p) in view.positions().iter().enumerate() {
                        let want = if k < n { Cell::Labeled(k as u32 + 1) } else { Cell::Hole };
                        assert_eq!(rec.cfg.cell(*p), want, "{rows}x{cols} n={n} at {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn region_to_target_round_trip() {
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..10 {
            let start = random_labeled(4, 4, 12, &mut rng);
            let target = {
                // Same labels, different placement.
                let g = *start.geometry();
                let mut cells: Vec<Position> = g.all_positions().collect();
                cells.shuffle(&mut rng);
                Configuration::from_labels(g, &cells[..12]).unwrap()
            };
            let view = View::of(RegionRef::full(4, 4));
            let mut rec = Recorder::new(start);
            solve_region_to_target(&mut rec, &view, &target).unwrap();
            assert_eq!(rec.cfg, target);
        }
    }

    #[test]
    fn homing_confined_to_subregion() {
        // Pieces outside the region never move.
        let mut rng = StdRng::seed_from_u64(5);
        let g = BoardGeometry::square(6, 6).unwrap();
        let mut cells: Vec<Position> = g.all_positions().collect();
        cells.shuffle(&mut rng);
        let c = Configuration::from_labels(g, &cells).unwrap();
        // Remove two pieces inside the region to create the two holes.
        let region = RegionRef::new(1, 2, 4, 4);
        let view = View::of(region);
        let mut start = c.clone();
        let mut removed = 0;
        let mut kept: Vec<Position> = Vec::new();
        for p in g.all_positions() {
            if region.contains(p) && removed < 2 {
                start.set_cell(p, Cell::Hole);
                removed += 1;
            } else if start.is_piece(p) {
                kept.push(p);
            }
        }
        // Relabel 1..34 to keep the bijection.
        let start = Configuration::from_labels(g, &kept).unwrap();
        let outside_before: Vec<(Position, Cell)> = g
            .all_positions()
            .filter(|p| !region.contains(*p))
            .map(|p| (p, start.cell(p)))
            .collect();
        let mut rec = Recorder::new(start);
        solve_to_rank_order(&mut rec, &view).unwrap();
        for (p, cell) in outside_before {
            assert_eq!(rec.cfg.cell(p), cell, "outside cell {p} changed");
        }
    }
}
