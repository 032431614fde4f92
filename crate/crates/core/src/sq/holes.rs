//! Unlabeled hole rearrangement on square boards: wavefront line pushes, the
//! three-step half-board merges, hole turning between column-major and
//! row-major prefixes, and the recursive hole-moving algorithm.
//!
//! All of these operate on a [`View`] and only query hole/piece status, so
//! they run unchanged on labeled boards (pieces carry their labels along).

use crate::board::Position;
use crate::config::Configuration;
use crate::error::Error;
use crate::moves::{merge_parallel, AtomicMove, ParallelStep};
use crate::rec::Recorder;
use crate::region::View;

/// Steps that pack all holes of `cells` (a grid path) at the tail of the
/// sequence: every piece with a hole directly before it slides one cell
/// toward `cells[0]`, all such pieces simultaneously, until packed. This is
/// the pipelined schedule: piece k moves at consecutive time steps once the
/// wave reaches it.
pub(crate) fn pack_holes_to_end_steps(cfg: &Configuration, cells: &[Position]) -> Vec<ParallelStep> {
    let mut occ: Vec<bool> = cells.iter().map(|&p| cfg.is_piece(p)).collect();
    let mut steps = Vec::new();
    loop {
        let mut moves = Vec::new();
        for i in 1..cells.len() {
            if occ[i] && !occ[i - 1] {
                moves.push(AtomicMove::square(cells[i], cells[i - 1]));
            }
        }
        if moves.is_empty() {
            break;
        }
        for mv in &moves {
            let i = cells.iter().position(|&p| p == mv.from).expect("on line");
            occ[i] = false;
            occ[i - 1] = true;
        }
        steps.push(ParallelStep::new(moves));
    }
    steps
}

fn row_cells(view: &View, r: u16, reversed: bool) -> Vec<Position> {
    let mut cells: Vec<Position> = (0..view.cols()).map(|c| view.at(r, c)).collect();
    if reversed {
        cells.reverse();
    }
    cells
}

fn col_cells(view: &View, c: u16, reversed: bool) -> Vec<Position> {
    let mut cells: Vec<Position> = (0..view.rows()).map(|r| view.at(r, c)).collect();
    if reversed {
        cells.reverse();
    }
    cells
}

pub(crate) fn hole_count(cfg: &Configuration, view: &View) -> usize {
    let mut n = 0;
    for r in 0..view.rows() {
        for c in 0..view.cols() {
            if cfg.is_hole(view.at(r, c)) {
                n += 1;
            }
        }
    }
    n
}

/// True iff the view's holes are exactly the first `n` cells in logical
/// column-major order.
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

/// True iff the view's holes are exactly the first `n` cells in logical
/// row-major order.
pub(crate) fn is_rm_prefix(cfg: &Configuration, view: &View, n: usize) -> bool {
    is_cm_prefix(cfg, &view.transposed(), n)
}

/// Merges a view whose left and right halves each hold their holes in a local
/// column-major prefix into a single column-major prefix of the whole view.
///
/// Three phases: push the right half's partial column to the bottom, pack
/// every row to the left, then push the one ragged column to the top.
pub(crate) fn h_merge_cm(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    debug_assert!(w % 2 == 0);
    let half = view.sub(0, 0, h, w / 2);
    let right = view.sub(0, w / 2, h, w / 2);
    let a = hole_count(&rec.cfg, &half);
    let b = hole_count(&rec.cfg, &right);
    debug_assert!(is_cm_prefix(&rec.cfg, &half, a), "left half not a cm prefix");
    debug_assert!(is_cm_prefix(&rec.cfg, &right, b), "right half not a cm prefix");
    let total = a + b;

    if b > 0 && a < h as usize * (w as usize / 2) {
        // Phase 1: bottom-align the right half's partial column.
        let fb = (b / h as usize) as u16;
        if b % h as usize > 0 {
            rec.extend(pack_holes_to_end_steps(&rec.cfg, &col_cells(view, w / 2 + fb, false)));
        }
        // Phase 2: pack all rows left, in parallel.
        let per_row: Vec<Vec<ParallelStep>> = (0..h)
            .map(|r| pack_holes_to_end_steps(&rec.cfg, &row_cells(view, r, true)))
            .collect();
        rec.extend(merge_parallel(per_row));
        // Phase 3: top-align the ragged column.
        let fstar = (total / h as usize) as u16;
        if total % h as usize > 0 {
            rec.extend(pack_holes_to_end_steps(&rec.cfg, &col_cells(view, fstar, true)));
        }
    }

    if !is_cm_prefix(&rec.cfg, view, total) {
        return Err(Error::internal(format!(
            "column-major merge failed on {:?} (a={a}, b={b})",
            view.region()
        )));
    }
    Ok(())
}

/// Merges a view whose top and bottom halves each hold their holes in a local
/// row-major prefix into a row-major prefix of the whole view.
pub(crate) fn v_merge_rm(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    h_merge_cm(rec, &view.transposed())
}

/// Inverse of [`h_merge_cm`]: from a whole-view column-major prefix to the
/// split `(a, b)` with each half in its own column-major prefix. Realized as
/// the reversal of the merge built from the split state.
pub(crate) fn h_split_cm(rec: &mut Recorder, view: &View, a: usize, b: usize) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let total = a + b;
    debug_assert!(is_cm_prefix(&rec.cfg, view, total), "split source not a cm prefix");
    // Synthesize the split state on a scratch board (hole pattern is all that
    // matters for legality; everything outside the view is a piece).
    let mut scratch = synth_unlabeled(&rec.cfg, view, |r, c| {
        let local = if c < w / 2 {
            (c as usize) * h as usize + r as usize
        } else {
            (c as usize - w as usize / 2) * h as usize + r as usize
        };
        if c < w / 2 {
            local < a
        } else {
            local < b
        }
    });
    let mut sub = Recorder::new(std::mem::replace(&mut scratch, Configuration::empty(*rec.cfg.geometry())));
    h_merge_cm(&mut sub, view)?;
    rec.extend_reversed(sub.steps);
    debug_assert!(is_cm_prefix(&rec.cfg, &view.sub(0, 0, h, w / 2), a));
    debug_assert!(is_cm_prefix(&rec.cfg, &view.sub(0, w / 2, h, w / 2), b));
    Ok(())
}

/// Scratch configuration agreeing with `cfg` outside `view`; inside the view
/// a cell is a hole iff `hole(r, c)`.
fn synth_unlabeled(
    cfg: &Configuration,
    view: &View,
    hole: impl Fn(u16, u16) -> bool,
) -> Configuration {
    let mut scratch = cfg.unlabeled();
    for r in 0..view.rows() {
        for c in 0..view.cols() {
            let p = view.at(r, c);
            scratch.set_cell(
                p,
                if hole(r, c) { crate::config::Cell::Hole } else { crate::config::Cell::Unlabeled },
            );
        }
    }
    scratch
}

/// Runs independent sub-tasks over pairwise disjoint regions "in parallel":
/// each task records its steps against a clone of the current configuration,
/// and step `i` of every task runs in the same time step of the result.
pub(crate) fn parallel_regions(
    rec: &mut Recorder,
    tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error> + '_>>,
) -> Result<(), Error> {
    let mut sequences = Vec::with_capacity(tasks.len());
    for task in tasks {
        let mut sub = Recorder::new(rec.cfg.clone());
        task(&mut sub)?;
        sequences.push(sub.steps);
    }
    rec.extend(merge_parallel(sequences));
    Ok(())
}

/// Hole counts of the four quadrants (upper-left, upper-right, lower-left,
/// lower-right).
fn quadrant_counts(cfg: &Configuration, view: &View) -> (usize, usize, usize, usize) {
    let (hh, hw) = (view.rows() / 2, view.cols() / 2);
    (
        hole_count(cfg, &view.sub(0, 0, hh, hw)),
        hole_count(cfg, &view.sub(0, hw, hh, hw)),
        hole_count(cfg, &view.sub(hh, 0, hh, hw)),
        hole_count(cfg, &view.sub(hh, hw, hh, hw)),
    )
}

/// Number of cells of the row-major prefix of size `n` that fall in each
/// quadrant; the prefix restricted to a quadrant is a row-major prefix of the
/// quadrant, so these are exactly the quadrant hole counts of the target.
fn rm_quadrant_targets(view: &View, n: usize) -> (usize, usize, usize, usize) {
    let (h, w) = (view.rows() as usize, view.cols() as usize);
    let (hh, hw) = (h / 2, w / 2);
    let mut t = (0usize, 0usize, 0usize, 0usize);
    for r in 0..h {
        let count = n.saturating_sub(r * w).min(w);
        let left = count.min(hw);
        let right = count - left;
        if r < hh {
            t.0 += left;
            t.1 += right;
        } else {
            t.2 += left;
            t.3 += right;
        }
    }
    t
}

/// Turns the view's holes from the column-major prefix into the row-major
/// prefix of the same size. Recursion: redistribute holes horizontally so the
/// quadrant counts match the target, turn the quadrants, then merge the two
/// vertical halves upward.
pub(crate) fn turn_cm_to_rm(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let n = hole_count(&rec.cfg, view);
    debug_assert!(is_cm_prefix(&rec.cfg, view, n), "turn source not a cm prefix");
    if n == 0 || n == view.cell_count() || h == 1 || w == 1 {
        // On lines and on full/empty boards the two orders coincide.
        if !is_rm_prefix(&rec.cfg, view, n) {
            return Err(Error::internal("degenerate turn: orders should coincide"));
        }
        return Ok(());
    }

    let (hh, hw) = (h / 2, w / 2);
    let qcap = hh as usize * hw as usize;
    let (a0, b0, c0, d0) = quadrant_counts(&rec.cfg, view);
    let (astar, _bstar, cstar, _dstar) = rm_quadrant_targets(view, n);
    let (u0, d_low) = (a0 + b0, c0 + d0);
    let nl = astar + cstar;

    // Choose the upper-left share of the redistribution; the split of each
    // half can be anything the quadrant capacities allow, because the phase-3
    // merges only depend on the half totals.
    let lo = [0isize, u0 as isize - qcap as isize, nl as isize - qcap as isize, nl as isize - d_low as isize]
        .into_iter()
        .max()
        .unwrap();
    let hi = [qcap as isize, u0 as isize, nl as isize, qcap as isize + nl as isize - d_low as isize]
        .into_iter()
        .min()
        .unwrap();
    if lo > hi {
        return Err(Error::internal(format!("turn redistribution infeasible: lo={lo} hi={hi}")));
    }
    let a1 = (astar as isize).clamp(lo, hi) as usize;
    let b1 = u0 - a1;
    let c1 = nl - a1;
    let d1 = d_low - c1;

    // Phase 1: horizontal redistribution within each half (parallel).
    {
        let upper = view.sub(0, 0, hh, w);
        let lower = view.sub(hh, 0, hh, w);
        let mut tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = Vec::new();
        if (a0, b0) != (a1, b1) {
            tasks.push(Box::new(move |r: &mut Recorder| {
                h_merge_cm(r, &upper)?;
                h_split_cm(r, &upper, a1, b1)
            }));
        }
        if (c0, d0) != (c1, d1) {
            tasks.push(Box::new(move |r: &mut Recorder| {
                h_merge_cm(r, &lower)?;
                h_split_cm(r, &lower, c1, d1)
            }));
        }
        parallel_regions(rec, tasks)?;
    }

    // Phase 2: turn the four quadrants (parallel).
    {
        let quads = [
            view.sub(0, 0, hh, hw),
            view.sub(0, hw, hh, hw),
            view.sub(hh, 0, hh, hw),
            view.sub(hh, hw, hh, hw),
        ];
        let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = quads
            .into_iter()
            .map(|q| Box::new(move |r: &mut Recorder| turn_cm_to_rm(r, &q)) as Box<_>)
            .collect();
        parallel_regions(rec, tasks)?;
    }

    // Phase 3: merge the two vertical halves upward (parallel).
    {
        let left = view.sub(0, 0, h, hw);
        let right = view.sub(0, hw, h, hw);
        let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = vec![
            Box::new(move |r: &mut Recorder| v_merge_rm(r, &left)),
            Box::new(move |r: &mut Recorder| v_merge_rm(r, &right)),
        ];
        parallel_regions(rec, tasks)?;
    }

    if !is_rm_prefix(&rec.cfg, view, n) {
        return Err(Error::internal("turn did not reach the row-major prefix"));
    }
    Ok(())
}

/// Moves the view's holes, wherever they start, into the row-major prefix.
/// Quadrants go to column-major (the transposed recursion), the quadrant
/// pairs merge horizontally, the half-boards turn, and the halves merge
/// upward.
pub(crate) fn move_to_rm(rec: &mut Recorder, view: &View) -> Result<(), Error> {
    let (h, w) = (view.rows(), view.cols());
    let n = hole_count(&rec.cfg, view);
    if n == 0 || n == view.cell_count() {
        return Ok(());
    }
    if h == 1 {
        rec.extend(pack_holes_to_end_steps(&rec.cfg, &row_cells(view, 0, true)));
        return Ok(());
    }
    if w == 1 {
        rec.extend(pack_holes_to_end_steps(&rec.cfg, &col_cells(view, 0, true)));
        return Ok(());
    }

    let (hh, hw) = (h / 2, w / 2);
    // Quadrants to column-major order, in parallel.
    {
        let quads = [
            view.sub(0, 0, hh, hw),
            view.sub(0, hw, hh, hw),
            view.sub(hh, 0, hh, hw),
            view.sub(hh, hw, hh, hw),
        ];
        let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = quads
            .into_iter()
            .map(|q| Box::new(move |r: &mut Recorder| move_to_rm(r, &q.transposed())) as Box<_>)
            .collect();
        parallel_regions(rec, tasks)?;
    }
    // Merge quadrant pairs into half-board column-major prefixes.
    {
        let upper = view.sub(0, 0, hh, w);
        let lower = view.sub(hh, 0, hh, w);
        let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = vec![
            Box::new(move |r: &mut Recorder| h_merge_cm(r, &upper)),
            Box::new(move |r: &mut Recorder| h_merge_cm(r, &lower)),
        ];
        parallel_regions(rec, tasks)?;
    }
    // Turn the half-boards.
    {
        let upper = view.sub(0, 0, hh, w);
        let lower = view.sub(hh, 0, hh, w);
        let tasks: Vec<Box<dyn FnOnce(&mut Recorder) -> Result<(), Error>>> = vec![
            Box::new(move |r: &mut Recorder| turn_cm_to_rm(r, &upper)),
            Box::new(move |r: &mut Recorder| turn_cm_to_rm(r, &lower)),
        ];
        parallel_regions(rec, tasks)?;
    }
    // Merge the halves upward.
    v_merge_rm(rec, view)?;

    if !is_rm_prefix(&rec.cfg, view, n) {
        return Err(Error::internal("hole moving did not reach the row-major prefix"));
    }
    Ok(())
}

/// Moves the view's holes into prescribed target cells: row-major prefix
/// first, then the reversal of the same algorithm started from the target.
pub(crate) fn move_to_cells(rec: &mut Recorder, view: &View, targets: &[Position]) -> Result<(), Error> {
    let n = hole_count(&rec.cfg, view);
    if targets.len() != n {
        return Err(Error::precondition(format!(
            "target cell count {} does not match hole count {n}",
            targets.len()
        )));
    }
    move_to_rm(rec, view)?;
    let target_set: std::collections::HashSet<Position> = targets.iter().copied().collect();
    if target_set.len() != targets.len() {
        return Err(Error::precondition("duplicate hole target cells"));
    }
    let scratch = synth_unlabeled(&rec.cfg, view, |r, c| target_set.contains(&view.at(r, c)));
    let mut sub = Recorder::new(scratch);
    move_to_rm(&mut sub, view)?;
    rec.extend_reversed(sub.steps);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{pos, BoardGeometry, Ordering};
    use crate::config::holes_first;
    use crate::region::RegionRef;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn board(rows: u16, cols: u16) -> BoardGeometry {
        BoardGeometry::square(rows, cols).unwrap()
    }

    #[test]
    fn pack_line_matches_pipelined_bound() {
        // 1x4 with holes {0,1}: holes end at {2,3} in exactly 3 steps.
        let g = board(1, 4);
        let c = holes_first(g, 2, Ordering::RowMajor).unwrap();
        let cells: Vec<Position> = (0..4).map(|i| pos(0, i)).collect();
        let mut rec = Recorder::new(c);
        let steps = pack_holes_to_end_steps(&rec.cfg, &cells);
        assert_eq!(steps.len(), 3);
        rec.extend(steps);
        assert_eq!(rec.cfg.holes(), vec![pos(0, 2), pos(0, 3)]);
    }

    #[test]
    fn pack_line_degenerate() {
        let g = board(1, 5);
        let full = holes_first(g, 0, Ordering::RowMajor).unwrap();
        let cells: Vec<Position> = (0..5).map(|i| pos(0, i)).collect();
        assert!(pack_holes_to_end_steps(&full, &cells).is_empty());
        let empty = holes_first(g, 5, Ordering::RowMajor).unwrap();
        assert!(pack_holes_to_end_steps(&empty, &cells).is_empty());
    }

    #[test]
    fn pack_line_exhaustive_bound() {
        // Any prefix of holes pushes to the other end within `len` steps.
        for len in 1..=12u16 {
            let g = board(1, len);
            for holes in 0..=len as usize {
                let c = holes_first(g, holes, Ordering::RowMajor).unwrap();
                let cells: Vec<Position> = (0..len).map(|i| pos(0, i)).collect();
                let steps = pack_holes_to_end_steps(&c, &cells);
                assert!(steps.len() <= len as usize);
                let expected = if holes == 0 || holes == len as usize { 0 } else { len as usize - 1 };
                assert_eq!(steps.len(), expected, "len={len} holes={holes}");
            }
        }
    }

    fn random_holes(g: BoardGeometry, n: usize, rng: &mut StdRng) -> Configuration {
        let mut cells: Vec<Position> = g.all_positions().collect();
        cells.shuffle(rng);
        let occupied: Vec<Position> = cells[n..].to_vec();
        Configuration::from_occupied(g, &occupied).unwrap()
    }

    #[test]
    fn merge_exhaustive_small() {
        // Every (a, b) split on several shapes merges to the exact prefix.
        for (h, w) in [(2u16, 2u16), (2, 4), (4, 4), (4, 8), (8, 4), (1, 4), (4, 2)] {
            let g = board(h, w);
            let view = View::of(RegionRef::full(h, w));
            let cap = (h as usize) * (w as usize / 2);
            for a in 0..=cap {
                for b in 0..=cap {
                    let mut c = Configuration::from_occupied(g, &g.all_positions().collect::<Vec<_>>()).unwrap();
                    for (half, count) in [(0u16, a), (w / 2, b)] {
                        for k in 0..count {
                            let (r, cc) = ((k % h as usize) as u16, (k / h as usize) as u16);
                            c.set_cell(pos(r, half + cc), crate::config::Cell::Hole);
                        }
                    }
                    let mut rec = Recorder::new(c);
                    h_merge_cm(&mut rec, &view).unwrap();
                    assert!(is_cm_prefix(&rec.cfg, &view, a + b), "h={h} w={w} a={a} b={b}");
                    // Steps bound: linear in rows + cols.
                    assert!(rec.steps.len() <= 4 * (h as usize + w as usize), "h={h} w={w} a={a} b={b}: {}", rec.steps.len());
                }
            }
        }
    }

    #[test]
    fn split_inverts_merge() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let (h, w) = (4u16, 8u16);
            let g = board(h, w);
            let view = View::of(RegionRef::full(h, w));
            let cap = (h as usize) * (w as usize / 2);
            let a = rng.random_range(0..=cap);
            let b = rng.random_range(0..=cap);
            let c = holes_first(g, a + b, Ordering::ColMajor).unwrap();
            let mut rec = Recorder::new(c);
            h_split_cm(&mut rec, &view, a, b).unwrap();
            assert!(is_cm_prefix(&rec.cfg, &view.sub(0, 0, h, w / 2), a));
            assert!(is_cm_prefix(&rec.cfg, &view.sub(0, w / 2, h, w / 2), b));
        }
    }

    #[test]
    fn turn_exhaustive_small() {
        for (h, w) in [(2u16, 2u16), (4, 4), (2, 4), (4, 2), (4, 8), (8, 4), (8, 8)] {
            let g = board(h, w);
            let view = View::of(RegionRef::full(h, w));
            for n in 0..=g.cell_count() {
                let c = holes_first(g, n, Ordering::ColMajor).unwrap();
                let mut rec = Recorder::new(c);
                turn_cm_to_rm(&mut rec, &view).unwrap();
                assert!(is_rm_prefix(&rec.cfg, &view, n), "{h}x{w} n={n}");
            }
        }
    }

    #[test]
    fn turn_rectangle_counterexample_shape() {
        // 4x8 with 5 holes exercises the redistribution that the plain
        // quadrant push cannot express.
        let g = board(4, 8);
        let view = View::of(RegionRef::full(4, 8));
        let c = holes_first(g, 5, Ordering::ColMajor).unwrap();
        let mut rec = Recorder::new(c);
        turn_cm_to_rm(&mut rec, &view).unwrap();
        assert!(is_rm_prefix(&rec.cfg, &view, 5));
    }

    #[test]
    fn turn_step_bound_linear() {
        // C_turn: measured over exhaustive small cases, steps <= 12*(h+w).
        for (h, w) in [(4u16, 4u16), (8, 8), (8, 16), (16, 16)] {
            let g = board(h, w);
            let view = View::of(RegionRef::full(h, w));
            for n in (0..=g.cell_count()).step_by(3) {
                let c = holes_first(g, n, Ordering::ColMajor).unwrap();
                let mut rec = Recorder::new(c);
                turn_cm_to_rm(&mut rec, &view).unwrap();
                assert!(
                    rec.steps.len() <= 12 * (h as usize + w as usize),
                    "{h}x{w} n={n}: {} steps",
                    rec.steps.len()
                );
            }
        }
    }

    #[test]
    fn move_exhaustive_counts_small() {
        let mut rng = StdRng::seed_from_u64(5);
        for m in [2u16, 4] {
            let g = board(m, m);
            let view = View::of(RegionRef::full(m, m));
            for n in 0..=g.cell_count() {
                for _ in 0..4 {
                    let c = random_holes(g, n, &mut rng);
                    let mut rec = Recorder::new(c);
                    move_to_rm(&mut rec, &view).unwrap();
                    assert!(is_rm_prefix(&rec.cfg, &view, n), "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn move_sampled_larger() {
        let mut rng = StdRng::seed_from_u64(6);
        for m in [8u16, 16] {
            let g = board(m, m);
            let view = View::of(RegionRef::full(m, m));
            for n in [1, 5, m as usize, 3 * m as usize, g.cell_count() - 1] {
                let c = random_holes(g, n, &mut rng);
                let mut rec = Recorder::new(c);
                move_to_rm(&mut rec, &view).unwrap();
                assert!(is_rm_prefix(&rec.cfg, &view, n), "m={m} n={n}");
                assert!(rec.steps.len() <= 30 * m as usize, "m={m} n={n}: {} steps", rec.steps.len());
            }
        }
    }

    #[test]
    fn move_to_arbitrary_cells() {
        let mut rng = StdRng::seed_from_u64(7);
        let m = 8u16;
        let g = board(m, m);
        let view = View::of(RegionRef::full(m, m));
        for n in [1usize, 4, 16, 40] {
            let c = random_holes(g, n, &mut rng);
            let mut cells: Vec<Position> = g.all_positions().collect();
            cells.shuffle(&mut rng);
            let targets: Vec<Position> = cells[..n].to_vec();
            let mut rec = Recorder::new(c);
            move_to_cells(&mut rec, &view, &targets).unwrap();
            let mut got = rec.cfg.holes();
            got.sort();
            let mut want = targets.clone();
            want.sort();
            assert_eq!(got, want, "n={n}");
        }
    }
}
