//! Axis-aligned sub-boards and transposable views onto them.
//!
//! Solvers recurse over quadrants and half-boards and frequently need the
//! row/column-swapped variant of an algorithm. A [`View`] maps logical
//! coordinates to board positions, optionally transposing. Transposition maps
//! both tilings' neighbor offsets onto themselves (for hexagons the offset set
//! `(0,±1),(±1,0),(+1,-1),(-1,+1)` is symmetric in `(r,c) -> (c,r)`), so any
//! move sequence derived in logical coordinates stays legal on the board.

use crate::board::Position;

/// An axis-aligned sub-board. Sub-algorithms never move pieces outside their
/// region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionRef {
    pub top: u16,
    pub left: u16,
    pub rows: u16,
    pub cols: u16,
}

impl RegionRef {
    pub fn new(top: u16, left: u16, rows: u16, cols: u16) -> Self {
        RegionRef { top, left, rows, cols }
    }

    pub fn full(rows: u16, cols: u16) -> Self {
        RegionRef { top: 0, left: 0, rows, cols }
    }

    pub fn contains(&self, p: Position) -> bool {
        p.row >= self.top
            && p.row < self.top + self.rows
            && p.col >= self.left
            && p.col < self.left + self.cols
    }
}

/// A logical window onto a region, possibly transposed. Logical coordinates
/// run `0..rows() x 0..cols()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct View {
    region: RegionRef,
    transposed: bool,
}

impl View {
    pub fn of(region: RegionRef) -> Self {
        View { region, transposed: false }
    }

    pub fn region(&self) -> RegionRef {
        self.region
    }

    pub fn rows(&self) -> u16 {
        if self.transposed {
            self.region.cols
        } else {
            self.region.rows
        }
    }

    pub fn cols(&self) -> u16 {
        if self.transposed {
            self.region.rows
        } else {
            self.region.cols
        }
    }

    pub fn cell_count(&self) -> usize {
        self.region.rows as usize * self.region.cols as usize
    }

    /// Board position of logical `(r, c)`.
    pub fn at(&self, r: u16, c: u16) -> Position {
        debug_assert!(r < self.rows() && c < self.cols());
        if self.transposed {
            Position::new(self.region.top + c, self.region.left + r)
        } else {
            Position::new(self.region.top + r, self.region.left + c)
        }
    }

    /// Logical coordinates of a board position inside the region.
    pub fn logical(&self, p: Position) -> (u16, u16) {
        debug_assert!(self.region.contains(p));
        let (r, c) = (p.row - self.region.top, p.col - self.region.left);
        if self.transposed {
            (c, r)
        } else {
            (r, c)
        }
    }

    pub fn transposed(&self) -> View {
        View { region: self.region, transposed: !self.transposed }
    }

    /// Logical sub-window.
    pub fn sub(&self, top: u16, left: u16, rows: u16, cols: u16) -> View {
        debug_assert!(top + rows <= self.rows() && left + cols <= self.cols());
        let origin = self.at(top, left);
        let region = if self.transposed {
            RegionRef::new(origin.row, origin.col, cols, rows)
        } else {
            RegionRef::new(origin.row, origin.col, rows, cols)
        };
        View { region, transposed: self.transposed }
    }

    pub fn contains(&self, p: Position) -> bool {
        self.region.contains(p)
    }

    /// All board positions of the view in logical row-major order.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::with_capacity(self.cell_count());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                out.push(self.at(r, c));
            }
        }
        out
    }

    /// Logical column-major rank of a cell; the hole patterns the hole-moving
    /// algorithms produce are prefixes of this order (or of its transpose).
    pub fn cm_rank(&self, r: u16, c: u16) -> usize {
        c as usize * self.rows() as usize + r as usize
    }

    pub fn cm_position(&self, rank: usize) -> (u16, u16) {
        let rows = self.rows() as usize;
        ((rank % rows) as u16, (rank / rows) as u16)
    }
}
