//! Board geometry: cells, adjacency, grid distances, and canonical cell orderings
//! for rectangular square-grid boards and parallelogram hexagon boards.
//!
//! Hexagon boards are `rows` rows of `cols` hexagons, each row shifted half a
//! cell to the right of the row above it. With that convention the six
//! neighbors of `(r, c)` are at offsets `(0, ±1)`, `(+1, 0)`, `(+1, -1)`,
//! `(-1, 0)`, `(-1, +1)`; these offsets are the single source of truth for
//! hexagon adjacency everywhere in this crate.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A cell on a board. `row` counts from the top, `col` from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: u16,
    pub col: u16,
}

impl Position {
    pub const fn new(row: u16, col: u16) -> Self {
        Position { row, col }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

/// Convenience for tests and literals.
pub const fn pos(row: u16, col: u16) -> Position {
    Position::new(row, col)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoardKind {
    Square,
    Hexagon,
}

impl fmt::Display for BoardKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoardKind::Square => write!(f, "square"),
            BoardKind::Hexagon => write!(f, "hex"),
        }
    }
}

const SQUARE_OFFSETS: [(i32, i32); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
// Rows below are shifted right, so the lower-left neighbor is (+1, -1) and the
// upper-right neighbor is (-1, +1).
const HEX_OFFSETS: [(i32, i32); 6] = [(-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)];

/// Board shape and size. Immutable once constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardGeometry {
    pub kind: BoardKind,
    pub rows: u16,
    pub cols: u16,
}

impl BoardGeometry {
    pub fn new(kind: BoardKind, rows: u16, cols: u16) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyBoard { rows, cols });
        }
        Ok(BoardGeometry { kind, rows, cols })
    }

    pub fn square(rows: u16, cols: u16) -> Result<Self, Error> {
        Self::new(BoardKind::Square, rows, cols)
    }

    pub fn hexagon(rows: u16, cols: u16) -> Result<Self, Error> {
        Self::new(BoardKind::Hexagon, rows, cols)
    }

    pub fn cell_count(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn contains(&self, p: Position) -> bool {
        p.row < self.rows && p.col < self.cols
    }

    pub fn check_bounds(&self, p: Position) -> Result<(), Error> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                pos: p,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Row-major cell index; the canonical dense index used for storage.
    pub fn cell_index(&self, p: Position) -> usize {
        p.row as usize * self.cols as usize + p.col as usize
    }

    pub fn position_of_index(&self, idx: usize) -> Position {
        Position::new((idx / self.cols as usize) as u16, (idx % self.cols as usize) as u16)
    }

    fn offsets(&self) -> &'static [(i32, i32)] {
        match self.kind {
            BoardKind::Square => &SQUARE_OFFSETS,
            BoardKind::Hexagon => &HEX_OFFSETS,
        }
    }

    fn offset_from(&self, p: Position, dr: i32, dc: i32) -> Option<Position> {
        let r = p.row as i32 + dr;
        let c = p.col as i32 + dc;
        if r < 0 || c < 0 || r >= self.rows as i32 || c >= self.cols as i32 {
            None
        } else {
            Some(Position::new(r as u16, c as u16))
        }
    }

    /// In-bounds neighbors of `p`, in (row, col) order.
    pub fn neighbors(&self, p: Position) -> Result<Vec<Position>, Error> {
        self.check_bounds(p)?;
        let mut out: Vec<Position> = self
            .offsets()
            .iter()
            .filter_map(|&(dr, dc)| self.offset_from(p, dr, dc))
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn are_adjacent(&self, a: Position, b: Position) -> bool {
        let dr = b.row as i32 - a.row as i32;
        let dc = b.col as i32 - a.col as i32;
        self.offsets().contains(&(dr, dc))
    }

    /// Length of a shortest path between `a` and `b` on the empty board.
    ///
    /// Squares use the L1 formula; hexagons use the closed-form axial distance
    /// `(|dr| + |dc| + |dr + dc|) / 2`, which matches breadth-first search on
    /// these convex boards (checked exhaustively in tests).
    pub fn grid_distance(&self, a: Position, b: Position) -> Result<u32, Error> {
        self.check_bounds(a)?;
        self.check_bounds(b)?;
        let dr = b.row as i32 - a.row as i32;
        let dc = b.col as i32 - a.col as i32;
        Ok(match self.kind {
            BoardKind::Square => (dr.abs() + dc.abs()) as u32,
            BoardKind::Hexagon => ((dr.abs() + dc.abs() + (dr + dc).abs()) / 2) as u32,
        })
    }

    pub fn all_positions(&self) -> impl Iterator<Item = Position> + '_ {
        let cols = self.cols;
        (0..self.rows).flat_map(move |r| (0..cols).map(move |c| Position::new(r, c)))
    }
}

impl fmt::Display for BoardGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}x{}", self.kind, self.rows, self.cols)
    }
}

impl FromStr for BoardGeometry {
    type Err = Error;

    /// Parses the board spec string used by the CLI: `square:M1xM2` or `hex:M1xM2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadBoardSpec(s.to_string());
        let (kind, dims) = s.split_once(':').ok_or_else(bad)?;
        let kind = match kind {
            "square" | "sq" => BoardKind::Square,
            "hex" | "hexagon" => BoardKind::Hexagon,
            _ => return Err(bad()),
        };
        let (r, c) = dims.split_once('x').ok_or_else(bad)?;
        let rows: u16 = r.parse().map_err(|_| bad())?;
        let cols: u16 = c.parse().map_err(|_| bad())?;
        BoardGeometry::new(kind, rows, cols).map_err(|_| bad())
    }
}

/// A bijection between cells and ranks `0..rows*cols`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ordering {
    RowMajor,
    ColMajor,
    /// Boustrophedon rows: the top row runs left to right, the second row
    /// right to left, and so on.
    SnakeRowMajor,
}

impl Ordering {
    /// Rank of `p` under this ordering on an `rows x cols` board.
    pub fn rank(&self, rows: u16, cols: u16, p: Position) -> usize {
        let (r, c, rows, cols) = (p.row as usize, p.col as usize, rows as usize, cols as usize);
        debug_assert!(r < rows && c < cols);
        match self {
            Ordering::RowMajor => r * cols + c,
            Ordering::ColMajor => c * rows + r,
            Ordering::SnakeRowMajor => r * cols + if r % 2 == 0 { c } else { cols - 1 - c },
        }
    }

    /// Inverse of [`Ordering::rank`].
    pub fn position_at(&self, rows: u16, cols: u16, rank: usize) -> Position {
        let (rows, cols) = (rows as usize, cols as usize);
        debug_assert!(rank < rows * cols);
        let (r, c) = match self {
            Ordering::RowMajor => (rank / cols, rank % cols),
            Ordering::ColMajor => (rank % rows, rank / rows),
            Ordering::SnakeRowMajor => {
                let r = rank / cols;
                let k = rank % cols;
                (r, if r % 2 == 0 { k } else { cols - 1 - k })
            }
        };
        Position::new(r as u16, c as u16)
    }
}

/// Rank of `p` under `ord` on the full board.
pub fn order_index(geom: &BoardGeometry, ord: Ordering, p: Position) -> Result<usize, Error> {
    geom.check_bounds(p)?;
    Ok(ord.rank(geom.rows, geom.cols, p))
}
