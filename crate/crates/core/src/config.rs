//! Piece configurations: occupancy of a board by labeled or unlabeled pieces,
//! hole queries, the canonical home configurations targeted by the solvers,
//! and the line-oriented text format used by the CLI.

use std::fmt;

use crate::board::{BoardGeometry, BoardKind, Ordering, Position};
use crate::error::Error;

/// Contents of one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Hole,
    /// An indistinguishable piece.
    Unlabeled,
    /// A piece labeled with a number in `1..=n`.
    Labeled(u32),
}

impl Cell {
    pub fn is_piece(&self) -> bool {
        !matches!(self, Cell::Hole)
    }
}

/// An arrangement of `n` pieces in distinct cells of a board. Labels, when
/// present, are a bijection onto `1..=n`. Holes are the complement of the
/// occupied set. Configurations are immutable values; the cell vector is the
/// canonical representation, so derived equality and hashing are well defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    geom: BoardGeometry,
    cells: Vec<Cell>,
}

impl Configuration {
    pub fn empty(geom: BoardGeometry) -> Self {
        Configuration { geom, cells: vec![Cell::Hole; geom.cell_count()] }
    }

    /// Unlabeled configuration with pieces exactly at `occupied`.
    pub fn from_occupied(geom: BoardGeometry, occupied: &[Position]) -> Result<Self, Error> {
        let mut c = Self::empty(geom);
        for &p in occupied {
            geom.check_bounds(p)?;
            let i = geom.cell_index(p);
            if c.cells[i].is_piece() {
                return Err(Error::precondition(format!("duplicate occupied cell {p}")));
            }
            c.cells[i] = Cell::Unlabeled;
        }
        Ok(c)
    }

    /// Labeled configuration; `pieces[k]` is the cell of the piece labeled `k+1`.
    pub fn from_labels(geom: BoardGeometry, pieces: &[Position]) -> Result<Self, Error> {
        let mut c = Self::empty(geom);
        for (k, &p) in pieces.iter().enumerate() {
            geom.check_bounds(p)?;
            let i = geom.cell_index(p);
            if c.cells[i].is_piece() {
                return Err(Error::precondition(format!("duplicate occupied cell {p}")));
            }
            c.cells[i] = Cell::Labeled(k as u32 + 1);
        }
        Ok(c)
    }

    pub fn from_cells(geom: BoardGeometry, cells: Vec<Cell>) -> Result<Self, Error> {
        if cells.len() != geom.cell_count() {
            return Err(Error::precondition(format!(
                "expected {} cells, got {}",
                geom.cell_count(),
                cells.len()
            )));
        }
        let c = Configuration { geom, cells };
        c.validate_labels()?;
        Ok(c)
    }

    fn validate_labels(&self) -> Result<(), Error> {
        let mut labels: Vec<u32> = Vec::new();
        let mut unlabeled = 0usize;
        for cell in &self.cells {
            match cell {
                Cell::Hole => {}
                Cell::Unlabeled => unlabeled += 1,
                Cell::Labeled(l) => labels.push(*l),
            }
        }
        if !labels.is_empty() && unlabeled > 0 {
            return Err(Error::precondition("mixed labeled and unlabeled pieces"));
        }
        if !labels.is_empty() {
            labels.sort_unstable();
            for (i, l) in labels.iter().enumerate() {
                if *l != i as u32 + 1 {
                    return Err(Error::precondition(format!(
                        "labels must be a bijection onto 1..={}, found {l}",
                        labels.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn geometry(&self) -> &BoardGeometry {
        &self.geom
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, p: Position) -> Cell {
        self.cells[self.geom.cell_index(p)]
    }

    pub fn is_hole(&self, p: Position) -> bool {
        matches!(self.cell(p), Cell::Hole)
    }

    pub fn is_piece(&self, p: Position) -> bool {
        self.cell(p).is_piece()
    }

    pub fn piece_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_piece()).count()
    }

    pub fn hole_count(&self) -> usize {
        self.geom.cell_count() - self.piece_count()
    }

    pub fn is_labeled(&self) -> bool {
        self.cells.iter().any(|c| matches!(c, Cell::Labeled(_)))
    }

    /// Exact complement of the occupied set, in row-major order.
    pub fn holes(&self) -> Vec<Position> {
        self.geom.all_positions().filter(|&p| self.is_hole(p)).collect()
    }

    pub fn occupied(&self) -> Vec<Position> {
        self.geom.all_positions().filter(|&p| self.is_piece(p)).collect()
    }

    /// Positions indexed by label: entry `k` is the cell of piece `k+1`.
    pub fn label_positions(&self) -> Vec<Position> {
        let mut out = vec![Position::new(0, 0); self.piece_count()];
        for p in self.geom.all_positions() {
            if let Cell::Labeled(l) = self.cell(p) {
                out[l as usize - 1] = p;
            }
        }
        out
    }

    /// Forget labels.
    pub fn unlabeled(&self) -> Configuration {
        let cells = self
            .cells
            .iter()
            .map(|c| if c.is_piece() { Cell::Unlabeled } else { Cell::Hole })
            .collect();
        Configuration { geom: self.geom, cells }
    }

    pub(crate) fn set_cell(&mut self, p: Position, cell: Cell) {
        let i = self.geom.cell_index(p);
        self.cells[i] = cell;
    }

    /// True iff no two holes are adjacent. On hexagon boards such a
    /// configuration admits no legal move at all.
    pub fn all_holes_isolated(&self) -> bool {
        for p in self.geom.all_positions() {
            if self.is_hole(p) {
                for n in self.geom.neighbors(p).expect("in bounds") {
                    if self.is_hole(n) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Some pair of adjacent holes, lexicographically first, if any exists.
    pub fn adjacent_hole_pair(&self) -> Option<(Position, Position)> {
        for p in self.geom.all_positions() {
            if self.is_hole(p) {
                for n in self.geom.neighbors(p).expect("in bounds") {
                    if n > p && self.is_hole(n) {
                        return Some((p, n));
                    }
                }
            }
        }
        None
    }

    // ---- text format ----------------------------------------------------

    /// Emits the row-per-line format: `.` for a hole, `#` for an unlabeled
    /// piece, the decimal label for a labeled piece, tokens separated by
    /// single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.geom.rows {
            let row: Vec<String> = (0..self.geom.cols)
                .map(|c| match self.cell(Position::new(r, c)) {
                    Cell::Hole => ".".to_string(),
                    Cell::Unlabeled => "#".to_string(),
                    Cell::Labeled(l) => l.to_string(),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses [`Configuration::to_text`] output for a known geometry.
    pub fn parse_text(geom: BoardGeometry, text: &str) -> Result<Self, Error> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() != geom.rows as usize {
            return Err(Error::Parse {
                line: lines.len(),
                msg: format!("expected {} rows, got {}", geom.rows, lines.len()),
            });
        }
        let mut cells = vec![Cell::Hole; geom.cell_count()];
        for (r, line) in lines.iter().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != geom.cols as usize {
                return Err(Error::Parse {
                    line: r + 1,
                    msg: format!("expected {} columns, got {}", geom.cols, toks.len()),
                });
            }
            for (c, tok) in toks.iter().enumerate() {
                let cell = match *tok {
                    "." => Cell::Hole,
                    "#" => Cell::Unlabeled,
                    t => Cell::Labeled(t.parse().map_err(|_| Error::Parse {
                        line: r + 1,
                        msg: format!("bad token `{t}`"),
                    })?),
                };
                cells[r * geom.cols as usize + c] = cell;
            }
        }
        Self::from_cells(geom, cells)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The home configuration family used by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomeSpec {
    /// The peeling home: labels run along the top row, then down the left
    /// column, then the remainder of the second row, and so on.
    PropNaive,
    /// Blocks of side `r` in snake order over the block grid, pieces inside
    /// each block in snake order with the block's `holes_per_block` reserved
    /// holes at the final local snake ranks.
    BlockSnake { r: u16, holes_per_block: u16 },
}

/// Cell order of the peeling home on an `m x m` board: row 0 left to right,
/// column 0 downward, remainder of row 1, remainder of column 1, and so on.
pub fn naive_peel_order(m: u16) -> Vec<Position> {
    let mut out = Vec::with_capacity(m as usize * m as usize);
    for l in 0..m {
        for c in l..m {
            out.push(Position::new(l, c));
        }
        for r in l + 1..m {
            out.push(Position::new(r, l));
        }
    }
    out
}

/// Labeled home configuration of the peeling order; requires `n <= m*m - 2`.
pub fn home_naive(n: usize, m: u16) -> Result<Configuration, Error> {
    let geom = BoardGeometry::square(m, m)?;
    if n + 2 > geom.cell_count() {
        return Err(Error::precondition(format!(
            "home_naive needs at least two holes: n={n} on {m}x{m}"
        )));
    }
    let order = naive_peel_order(m);
    let mut c = Configuration::empty(geom);
    for (k, &p) in order.iter().take(n).enumerate() {
        c.set_cell(p, Cell::Labeled(k as u32 + 1));
    }
    Ok(c)
}

/// Nesting order of the block-snake home: blocks in snake order over the
/// `(m/r) x (m/r)` block grid; within each block, local snake order with the
/// final `h` local ranks skipped (reserved for that block's holes).
pub fn block_snake_piece_order(m: u16, r: u16, h: u16) -> Result<Vec<Position>, Error> {
    check_block_spec(m, r, h)?;
    let b = m / r;
    let per_block = (r as usize) * (r as usize) - h as usize;
    let mut out = Vec::with_capacity(b as usize * b as usize * per_block);
    for block_rank in 0..(b as usize * b as usize) {
        let bp = Ordering::SnakeRowMajor.position_at(b, b, block_rank);
        for local_rank in 0..per_block {
            let lp = Ordering::SnakeRowMajor.position_at(r, r, local_rank);
            out.push(Position::new(bp.row * r + lp.row, bp.col * r + lp.col));
        }
    }
    Ok(out)
}

/// The `h` reserved hole cells of every block, grouped per block in block
/// snake order.
pub fn block_snake_hole_cells(m: u16, r: u16, h: u16) -> Result<Vec<Vec<Position>>, Error> {
    check_block_spec(m, r, h)?;
    let b = m / r;
    let cells = r as usize * r as usize;
    let mut out = Vec::new();
    for block_rank in 0..(b as usize * b as usize) {
        let bp = Ordering::SnakeRowMajor.position_at(b, b, block_rank);
        let mut block = Vec::with_capacity(h as usize);
        for local_rank in cells - h as usize..cells {
            let lp = Ordering::SnakeRowMajor.position_at(r, r, local_rank);
            block.push(Position::new(bp.row * r + lp.row, bp.col * r + lp.col));
        }
        out.push(block);
    }
    Ok(out)
}

fn check_block_spec(m: u16, r: u16, h: u16) -> Result<(), Error> {
    if r == 0 || !r.is_power_of_two() || m % r != 0 {
        return Err(Error::precondition(format!("block side {r} must be a power of 2 dividing {m}")));
    }
    if h as usize >= r as usize * r as usize {
        return Err(Error::precondition(format!("holes per block {h} must be < r^2")));
    }
    Ok(())
}

/// The block-snake home with exactly `h` holes per block, i.e. with
/// `n = m^2 - h * (m/r)^2` pieces.
pub fn home_block_snake(kind: BoardKind, m: u16, r: u16, h: u16) -> Result<Configuration, Error> {
    let b = m / r;
    let n = m as usize * m as usize - h as usize * (b as usize * b as usize);
    home_block_snake_with_n(kind, n, m, r, h)
}

/// The block-snake home truncated to `n` pieces: labels `1..=n` fill the
/// first `n` cells of the nesting order and every remaining cell is a hole.
pub fn home_block_snake_with_n(
    kind: BoardKind,
    n: usize,
    m: u16,
    r: u16,
    h: u16,
) -> Result<Configuration, Error> {
    let geom = BoardGeometry::new(kind, m, m)?;
    let order = block_snake_piece_order(m, r, h)?;
    if n > order.len() {
        return Err(Error::precondition(format!(
            "n={n} exceeds the {} piece slots of the {m}x{m} block-snake home (r={r}, h={h})",
            order.len()
        )));
    }
    let mut c = Configuration::empty(geom);
    for (k, &p) in order.iter().take(n).enumerate() {
        c.set_cell(p, Cell::Labeled(k as u32 + 1));
    }
    Ok(c)
}

/// Unlabeled configuration whose holes are exactly the first `hole_count`
/// ranks of `ord`.
pub fn holes_first(
    geom: BoardGeometry,
    hole_count: usize,
    ord: Ordering,
) -> Result<Configuration, Error> {
    if hole_count > geom.cell_count() {
        return Err(Error::precondition(format!(
            "{hole_count} holes exceed the {} cells of the board",
            geom.cell_count()
        )));
    }
    let mut c = Configuration::empty(geom);
    for p in geom.all_positions() {
        if ord.rank(geom.rows, geom.cols, p) >= hole_count {
            c.set_cell(p, Cell::Unlabeled);
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::pos;

    #[test]
    fn holes_of_full_and_empty_boards() {
        let g = BoardGeometry::square(2, 2).unwrap();
        let full = Configuration::from_occupied(g, &g.all_positions().collect::<Vec<_>>()).unwrap();
        assert!(full.holes().is_empty());
        let empty = Configuration::empty(g);
        assert_eq!(empty.holes().len(), 4);
    }

    #[test]
    fn naive_home_matches_peeling_order() {
        // 4x4, n=14: labels 1..4 along the top row, 5..7 down the left column,
        // 8..10 across the rest of row 1, 11..12 down the rest of column 1,
        // 13..14 across the rest of row 2. Holes at the two cells never reached.
        let c = home_naive(14, 4).unwrap();
        assert_eq!(c.cell(pos(0, 0)), Cell::Labeled(1));
        assert_eq!(c.cell(pos(0, 3)), Cell::Labeled(4));
        assert_eq!(c.cell(pos(1, 0)), Cell::Labeled(5));
        assert_eq!(c.cell(pos(3, 0)), Cell::Labeled(7));
        assert_eq!(c.cell(pos(1, 1)), Cell::Labeled(8));
        assert_eq!(c.cell(pos(1, 3)), Cell::Labeled(10));
        assert_eq!(c.cell(pos(2, 1)), Cell::Labeled(11));
        assert_eq!(c.cell(pos(3, 1)), Cell::Labeled(12));
        assert_eq!(c.cell(pos(2, 2)), Cell::Labeled(13));
        assert_eq!(c.cell(pos(2, 3)), Cell::Labeled(14));
        assert_eq!(c.holes(), vec![pos(3, 2), pos(3, 3)]);
    }

    #[test]
    fn naive_home_bounds() {
        assert!(home_naive(0, 2).unwrap().holes().len() == 4);
        assert!(home_naive(4, 2).is_err());
        assert!(home_naive(2, 2).is_ok());
    }

    #[test]
    fn block_snake_small_square() {
        // m=4, r=2, h=1: first block is the upper-left 2x2 in block snake
        // order; within it pieces 1,2,3 in local snake order and the hole at
        // the local snake-last cell (1,0).
        let c = home_block_snake(BoardKind::Square, 4, 2, 1).unwrap();
        assert_eq!(c.cell(pos(0, 0)), Cell::Labeled(1));
        assert_eq!(c.cell(pos(0, 1)), Cell::Labeled(2));
        assert_eq!(c.cell(pos(1, 1)), Cell::Labeled(3));
        assert_eq!(c.cell(pos(1, 0)), Cell::Hole);
        // Labels 1..12 partition into 4 blocks of 3.
        assert_eq!(c.piece_count(), 12);
        let labels = c.label_positions();
        for (k, p) in labels.iter().enumerate() {
            let block = (p.row / 2, p.col / 2);
            assert_eq!(k / 3, Ordering::SnakeRowMajor.rank(2, 2, pos(block.0, block.1)));
        }
    }

    #[test]
    fn block_snake_single_block() {
        let c = home_block_snake(BoardKind::Square, 4, 4, 1).unwrap();
        let order = block_snake_piece_order(4, 4, 1).unwrap();
        for (k, &p) in order.iter().enumerate() {
            assert_eq!(c.cell(p), Cell::Labeled(k as u32 + 1));
        }
        assert_eq!(c.holes(), vec![Ordering::SnakeRowMajor.position_at(4, 4, 15)]);
    }

    #[test]
    fn block_snake_hex_three_holes() {
        // Single 8x8 hex block with three holes: pieces 1..61 in snake order,
        // holes at snake ranks 61, 62, 63.
        let c = home_block_snake(BoardKind::Hexagon, 8, 8, 3).unwrap();
        assert_eq!(c.piece_count(), 61);
        for k in 0..61usize {
            let p = Ordering::SnakeRowMajor.position_at(8, 8, k);
            assert_eq!(c.cell(p), Cell::Labeled(k as u32 + 1));
        }
        for k in 61..64usize {
            assert!(c.is_hole(Ordering::SnakeRowMajor.position_at(8, 8, k)));
        }
        // The three holes form a connected run in the bottom row.
        assert!(!c.all_holes_isolated());
    }

    #[test]
    fn holes_first_examples() {
        let g = BoardGeometry::square(4, 4).unwrap();
        let c = holes_first(g, 5, Ordering::ColMajor).unwrap();
        let want = vec![pos(0, 0), pos(1, 0), pos(2, 0), pos(3, 0), pos(0, 1)];
        assert_eq!(c.holes(), {
            let mut w = want.clone();
            w.sort();
            w
        });

        let full = holes_first(g, 0, Ordering::RowMajor).unwrap();
        assert_eq!(full.piece_count(), 16);

        let g2 = BoardGeometry::square(2, 4).unwrap();
        let c2 = holes_first(g2, 3, Ordering::RowMajor).unwrap();
        assert_eq!(c2.holes(), vec![pos(0, 0), pos(0, 1), pos(0, 2)]);
    }

    #[test]
    fn holes_first_exhaustive_rank_property() {
        for rows in 1..=5u16 {
            for cols in 1..=5u16 {
                let g = BoardGeometry::square(rows, cols).unwrap();
                for ord in [Ordering::RowMajor, Ordering::ColMajor, Ordering::SnakeRowMajor] {
                    for k in 0..=g.cell_count() {
                        let c = holes_first(g, k, ord).unwrap();
                        for p in g.all_positions() {
                            assert_eq!(c.is_hole(p), ord.rank(rows, cols, p) < k);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn isolated_holes() {
        let g = BoardGeometry::hexagon(4, 4).unwrap();
        // 3x2 parallelogram of holes is not isolated.
        let mut occ: Vec<Position> = g.all_positions().collect();
        occ.retain(|p| !(p.row < 3 && p.col < 2));
        let c = Configuration::from_occupied(g, &occ).unwrap();
        assert!(!c.all_holes_isolated());

        // A single hole is isolated.
        let mut occ2: Vec<Position> = g.all_positions().collect();
        occ2.retain(|p| *p != pos(2, 2));
        let c2 = Configuration::from_occupied(g, &occ2).unwrap();
        assert!(c2.all_holes_isolated());

        // Two adjacent holes are not.
        let mut occ3: Vec<Position> = g.all_positions().collect();
        occ3.retain(|p| *p != pos(0, 0) && *p != pos(0, 1));
        let c3 = Configuration::from_occupied(g, &occ3).unwrap();
        assert!(!c3.all_holes_isolated());
    }

    #[test]
    fn text_round_trip() {
        let c = home_naive(14, 4).unwrap();
        let text = c.to_text();
        let back = Configuration::parse_text(*c.geometry(), &text).unwrap();
        assert_eq!(c, back);

        let g = BoardGeometry::hexagon(3, 3).unwrap();
        let u = holes_first(g, 4, Ordering::ColMajor).unwrap();
        assert_eq!(Configuration::parse_text(g, &u.to_text()).unwrap(), u);
    }

    #[test]
    fn labels_validated() {
        let g = BoardGeometry::square(2, 2).unwrap();
        let cells = vec![Cell::Labeled(1), Cell::Labeled(3), Cell::Hole, Cell::Hole];
        assert!(Configuration::from_cells(g, cells).is_err());
        let mixed = vec![Cell::Labeled(1), Cell::Unlabeled, Cell::Hole, Cell::Hole];
        assert!(Configuration::from_cells(g, mixed).is_err());
    }
}
