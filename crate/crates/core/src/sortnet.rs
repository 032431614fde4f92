//! Oblivious sorting networks on the m x m grid graph.
//!
//! A network is a sequence of layers; each layer is a set of comparison or
//! routing elements on disjoint pairs of grid-adjacent cells, and one layer is
//! one time step. Running the network leaves the values in snake-like row
//! major order.
//!
//! The construction recursively sorts the four quadrants, merges the two
//! halves of each vertical pair, and merges the resulting half-boards. Each
//! merge is an odd-even merge: an interchange layer lines snake parity up with
//! column parity, a fixed column unshuffle routes both parity classes into the
//! two halves, the halves are merged recursively, and a single layer of
//! compare-exchanges between snake-consecutive cells repairs the one possible
//! inversion. Merging columns bottoms out in odd-even transposition along the
//! column. The depth of every phase is linear in the side length, and the
//! finished network is padded with snake-order compare layers to exactly
//! `C_NET * m`, so the realized depth is `12 m` for every supported `m >= 2`.

use std::fmt;

use rand::Rng;

use crate::board::{Ordering, Position};
use crate::error::Error;

/// Ordered comparison element: the smaller value ends at `low`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Comparator {
    pub low: Position,
    pub high: Position,
}

/// Unconditional exchange element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Router {
    pub a: Position,
    pub b: Position,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Element {
    Compare(Comparator),
    Route(Router),
}

impl Element {
    pub fn cells(&self) -> (Position, Position) {
        match self {
            Element::Compare(c) => (c.low, c.high),
            Element::Route(r) => (r.a, r.b),
        }
    }
}

/// One time step: elements on pairwise disjoint cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkLayer {
    elements: Vec<Element>,
}

impl NetworkLayer {
    /// Elements are kept sorted by their first cell so serialization is
    /// reproducible byte for byte.
    pub fn new(mut elements: Vec<Element>) -> Self {
        elements.sort_by_key(|e| e.cells());
        let layer = NetworkLayer { elements };
        debug_assert!(layer.disjoint());
        layer
    }

    fn disjoint(&self) -> bool {
        let mut cells: Vec<Position> = self
            .elements
            .iter()
            .flat_map(|e| {
                let (a, b) = e.cells();
                [a, b]
            })
            .collect();
        let len = cells.len();
        cells.sort();
        cells.dedup();
        cells.len() == len
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// An oblivious layered schedule sorting the m x m grid into snake order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortingNetwork {
    m: u16,
    layers: Vec<NetworkLayer>,
}

/// Realized depth constant: every built network has depth exactly `C_NET * m`
/// (for `m >= 2`; the 1x1 network is empty).
pub const C_NET: usize = 12;

impl SortingNetwork {
    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn layers(&self) -> &[NetworkLayer] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Dump format used by golden tests: one line per layer, elements
    /// `C r,c>r,c` (low first) and `R r,c-r,c` separated by `;`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for layer in &self.layers {
            let parts: Vec<String> = layer
                .elements
                .iter()
                .map(|e| match e {
                    Element::Compare(c) => format!("C {}>{}", c.low, c.high),
                    Element::Route(r) => format!("R {}-{}", r.a, r.b),
                })
                .collect();
            out.push_str(&parts.join(";"));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SortingNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

fn snake_rank(m: u16, p: Position) -> usize {
    Ordering::SnakeRowMajor.rank(m, m, p)
}

struct Builder {
    m: u16,
}

impl Builder {
    fn comparator(&self, a: Position, b: Position) -> Element {
        let (low, high) = if snake_rank(self.m, a) < snake_rank(self.m, b) { (a, b) } else { (b, a) };
        Element::Compare(Comparator { low, high })
    }

    /// Odd-even transposition along one column, `h` rounds. The smaller value
    /// ends nearer the top, matching snake order.
    fn oe_column(&self, top: u16, col: u16, h: u16) -> Vec<NetworkLayer> {
        let mut layers = Vec::new();
        for round in 0..h {
            let mut elems = Vec::new();
            let mut i = round % 2;
            while i + 1 < h {
                elems.push(self.comparator(
                    Position::new(top + i, col),
                    Position::new(top + i + 1, col),
                ));
                i += 2;
            }
            if !elems.is_empty() {
                layers.push(NetworkLayer::new(elems));
            }
        }
        layers
    }

    /// Odd-even transposition along one row, `w` rounds, directed by the
    /// snake direction of the global row.
    fn oe_row(&self, row: u16, left: u16, w: u16) -> Vec<NetworkLayer> {
        let mut layers = Vec::new();
        for round in 0..w {
            let mut elems = Vec::new();
            let mut j = round % 2;
            while j + 1 < w {
                elems.push(self.comparator(
                    Position::new(row, left + j),
                    Position::new(row, left + j + 1),
                ));
                j += 2;
            }
            if !elems.is_empty() {
                layers.push(NetworkLayer::new(elems));
            }
        }
        layers
    }

    /// Router layer swapping local column pairs (2j, 2j+1) on odd global rows.
    /// Afterwards the snake-parity classes of the region coincide with its
    /// local column-parity classes.
    fn interchange(&self, top: u16, left: u16, h: u16, w: u16) -> Option<NetworkLayer> {
        let mut elems = Vec::new();
        for r in top..top + h {
            if r % 2 == 1 {
                let mut j = 0;
                while j + 1 < w {
                    elems.push(Element::Route(Router {
                        a: Position::new(r, left + j),
                        b: Position::new(r, left + j + 1),
                    }));
                    j += 2;
                }
            }
        }
        if elems.is_empty() {
            None
        } else {
            Some(NetworkLayer::new(elems))
        }
    }

    /// Router layers realizing a column permutation uniformly on every row of
    /// the region: offline odd-even transposition of the destination indexes,
    /// one layer per round that swaps anything.
    fn route_columns(&self, top: u16, left: u16, h: u16, w: u16, dest: &[usize]) -> Vec<NetworkLayer> {
        let mut order: Vec<usize> = dest.to_vec();
        let mut layers = Vec::new();
        for round in 0..w as usize {
            let mut swaps: Vec<usize> = Vec::new();
            let mut j = round % 2;
            while j + 1 < w as usize {
                if order[j] > order[j + 1] {
                    order.swap(j, j + 1);
                    swaps.push(j);
                }
                j += 2;
            }
            if !swaps.is_empty() {
                let mut elems = Vec::new();
                for r in top..top + h {
                    for &j in &swaps {
                        elems.push(Element::Route(Router {
                            a: Position::new(r, left + j as u16),
                            b: Position::new(r, left + j as u16 + 1),
                        }));
                    }
                }
                layers.push(NetworkLayer::new(elems));
            }
        }
        debug_assert!(order.windows(2).all(|p| p[0] < p[1]));
        layers
    }

    /// Unshuffle: even local columns to the left half, odd to the right,
    /// preserving order.
    fn unshuffle(&self, top: u16, left: u16, h: u16, w: u16) -> Vec<NetworkLayer> {
        let dest: Vec<usize> = (0..w as usize)
            .map(|j| if j % 2 == 0 { j / 2 } else { w as usize / 2 + j / 2 })
            .collect();
        self.route_columns(top, left, h, w, &dest)
    }

    /// The cells of the region in its snake order (global row directions).
    fn snake_cells(&self, top: u16, left: u16, h: u16, w: u16) -> Vec<Position> {
        let mut out = Vec::with_capacity(h as usize * w as usize);
        for r in top..top + h {
            if r % 2 == 0 {
                for c in left..left + w {
                    out.push(Position::new(r, c));
                }
            } else {
                for c in (left..left + w).rev() {
                    out.push(Position::new(r, c));
                }
            }
        }
        out
    }

    /// Compare-exchange snake-consecutive pairs starting at `start_parity`
    /// (1 for the odd-even merge cleanup, 0 for the complementary brick).
    fn snake_pairs_layer(&self, top: u16, left: u16, h: u16, w: u16, start_parity: usize) -> Option<NetworkLayer> {
        let cells = self.snake_cells(top, left, h, w);
        let mut elems = Vec::new();
        let mut i = start_parity;
        while i + 1 < cells.len() {
            elems.push(self.comparator(cells[i], cells[i + 1]));
            i += 2;
        }
        if elems.is_empty() {
            None
        } else {
            Some(NetworkLayer::new(elems))
        }
    }

    /// Merge a top half and bottom half, each sorted in its own snake order,
    /// into the snake order of the whole region.
    fn voem(&self, top: u16, left: u16, h: u16, w: u16) -> Vec<NetworkLayer> {
        if h <= 1 {
            return Vec::new();
        }
        if w == 1 {
            return self.oe_column(top, left, h);
        }
        let mut layers = Vec::new();
        layers.extend(self.interchange(top, left, h, w));
        let shuffle = self.unshuffle(top, left, h, w);
        layers.extend(shuffle.iter().cloned());
        layers.extend(zip_layers(vec![
            self.voem(top, left, h, w / 2),
            self.voem(top, left + w / 2, h, w / 2),
        ]));
        layers.extend(shuffle.into_iter().rev());
        layers.extend(self.interchange(top, left, h, w));
        layers.extend(self.snake_pairs_layer(top, left, h, w, 1));
        layers
    }

    /// Merge a left half and right half, each sorted in its own snake order.
    fn hoem(&self, top: u16, left: u16, h: u16, w: u16) -> Vec<NetworkLayer> {
        if w == 2 {
            // Row compare toward the snake-first cell, sort both columns,
            // then repair the partial row's parity.
            let mut layers = Vec::new();
            let paired = |layers: &mut Vec<NetworkLayer>| {
                let elems: Vec<Element> = (top..top + h)
                    .map(|r| self.comparator(Position::new(r, left), Position::new(r, left + 1)))
                    .collect();
                layers.push(NetworkLayer::new(elems));
            };
            paired(&mut layers);
            layers.extend(zip_layers(vec![
                self.oe_column(top, left, h),
                self.oe_column(top, left + 1, h),
            ]));
            paired(&mut layers);
            layers
        } else {
            let mut layers = Vec::new();
            layers.extend(self.interchange(top, left, h, w));
            let shuffle = self.unshuffle(top, left, h, w);
            layers.extend(shuffle.iter().cloned());
            layers.extend(zip_layers(vec![
                self.hoem(top, left, h, w / 2),
                self.hoem(top, left + w / 2, h, w / 2),
            ]));
            layers.extend(shuffle.into_iter().rev());
            layers.extend(self.interchange(top, left, h, w));
            layers.extend(self.snake_pairs_layer(top, left, h, w, 1));
            layers
        }
    }

    fn sort_rect(&self, top: u16, left: u16, h: u16, w: u16) -> Vec<NetworkLayer> {
        if h as usize * w as usize <= 1 {
            return Vec::new();
        }
        if h == 1 {
            return self.oe_row(top, left, w);
        }
        if w == 1 {
            return self.oe_column(top, left, h);
        }
        let (hh, hw) = (h / 2, w / 2);
        let mut layers = zip_layers(vec![
            self.sort_rect(top, left, hh, hw),
            self.sort_rect(top, left + hw, hh, hw),
            self.sort_rect(top + hh, left, hh, hw),
            self.sort_rect(top + hh, left + hw, hh, hw),
        ]);
        layers.extend(zip_layers(vec![
            self.voem(top, left, h, hw),
            self.voem(top, left + hw, h, hw),
        ]));
        layers.extend(self.hoem(top, left, h, w));
        layers
    }
}

/// Runs per-region layer sequences in parallel: step `i` of the result is the
/// union of every sequence's step `i`.
fn zip_layers(sequences: Vec<Vec<NetworkLayer>>) -> Vec<NetworkLayer> {
    let longest = sequences.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::with_capacity(longest);
    for i in 0..longest {
        let mut elems = Vec::new();
        for seq in &sequences {
            if let Some(layer) = seq.get(i) {
                elems.extend_from_slice(layer.elements());
            }
        }
        if !elems.is_empty() {
            out.push(NetworkLayer::new(elems));
        }
    }
    out
}

/// Builds the mesh sorting network for an `m x m` grid, `m` a power of two.
/// The result sorts any input into snake-like row major order and has depth
/// exactly [`C_NET`]` * m` (padding layers are snake-order compare-exchanges,
/// no-ops once the data is sorted).
pub fn build_mesh_network(m: u16) -> Result<SortingNetwork, Error> {
    let raw = build_mesh_network_raw(m)?;
    pad_network(raw)
}

/// The recursive construction without the uniform-depth padding. The padded
/// network is the public artifact; the raw one exists so tests can verify the
/// construction itself sorts (the padding layers are no-ops on sorted data).
pub(crate) fn build_mesh_network_raw(m: u16) -> Result<SortingNetwork, Error> {
    if m == 0 || !m.is_power_of_two() {
        return Err(Error::precondition(format!("mesh side {m} must be a power of 2")));
    }
    let b = Builder { m };
    let layers = b.sort_rect(0, 0, m, m);
    Ok(SortingNetwork { m, layers })
}

fn pad_network(raw: SortingNetwork) -> Result<SortingNetwork, Error> {
    let m = raw.m;
    let b = Builder { m };
    let mut layers = raw.layers;
    if m >= 2 {
        let target = C_NET * m as usize;
        if layers.len() > target {
            return Err(Error::internal(format!(
                "raw network depth {} exceeds C_NET*m = {target}",
                layers.len()
            )));
        }
        let mut parity = 1;
        while layers.len() < target {
            if let Some(layer) = b.snake_pairs_layer(0, 0, m, m, parity) {
                layers.push(layer);
            }
            parity ^= 1;
        }
    }
    Ok(SortingNetwork { m, layers })
}

/// Applies the network to one value per cell (indexed row-major).
pub fn run_network<T: Ord>(net: &SortingNetwork, values: &mut [T]) -> Result<(), Error> {
    let cells = net.m as usize * net.m as usize;
    if values.len() != cells {
        return Err(Error::precondition(format!("expected {cells} values, got {}", values.len())));
    }
    let idx = |p: Position| p.row as usize * net.m as usize + p.col as usize;
    for layer in &net.layers {
        for e in layer.elements() {
            match e {
                Element::Compare(c) => {
                    if values[idx(c.low)] > values[idx(c.high)] {
                        values.swap(idx(c.low), idx(c.high));
                    }
                }
                Element::Route(r) => values.swap(idx(r.a), idx(r.b)),
            }
        }
    }
    Ok(())
}

fn snake_sorted<T: Ord>(m: u16, values: &[T]) -> bool {
    let cells = m as usize * m as usize;
    (1..cells).all(|k| {
        let a = Ordering::SnakeRowMajor.position_at(m, m, k - 1);
        let b = Ordering::SnakeRowMajor.position_at(m, m, k);
        values[a.row as usize * m as usize + a.col as usize]
            <= values[b.row as usize * m as usize + b.col as usize]
    })
}

/// Verifies the network on 0-1 inputs: exhaustively when the board has at most
/// 16 cells, otherwise on `samples` random inputs drawn from `rng`.
pub fn check_zero_one(net: &SortingNetwork, samples: usize, rng: &mut impl Rng) -> bool {
    let cells = net.m as usize * net.m as usize;
    if cells <= 16 {
        for mask in 0u32..(1 << cells) {
            let mut v: Vec<u8> = (0..cells).map(|i| ((mask >> i) & 1) as u8).collect();
            run_network(net, &mut v).expect("sized");
            if !snake_sorted(net.m, &v) {
                return false;
            }
        }
        true
    } else {
        for _ in 0..samples {
            let mut v: Vec<u8> = (0..cells).map(|_| rng.random_range(0..2) as u8).collect();
            run_network(net, &mut v).expect("sized");
            if !snake_sorted(net.m, &v) {
                return false;
            }
        }
        true
    }
}

/// Runs the network on buckets of `k` values each: a comparator redistributes
/// the two buckets through `exec` so the least `k` values land in the bucket
/// at its low cell; a router exchanges whole buckets. After the run the least
/// `k` values of the whole input sit in the bucket at snake rank 0, the next
/// `k` in the next bucket, and so on.
pub fn lift_to_buckets<T: Ord + Clone>(
    net: &SortingNetwork,
    buckets: &mut [Vec<T>],
    mut exec: impl FnMut(&mut Vec<T>, &mut Vec<T>),
) -> Result<(), Error> {
    let cells = net.m as usize * net.m as usize;
    if buckets.len() != cells {
        return Err(Error::precondition(format!("expected {cells} buckets, got {}", buckets.len())));
    }
    let k = buckets[0].len();
    if buckets.iter().any(|b| b.len() != k) {
        return Err(Error::precondition("buckets must all hold k values"));
    }
    let idx = |p: Position| p.row as usize * net.m as usize + p.col as usize;
    for layer in &net.layers {
        for e in layer.elements() {
            match e {
                Element::Compare(c) => {
                    let (i, j) = (idx(c.low), idx(c.high));
                    let mut lo = std::mem::take(&mut buckets[i]);
                    let mut hi = std::mem::take(&mut buckets[j]);
                    exec(&mut lo, &mut hi);
                    // The redistribution contract: lo gets the least k of the
                    // combined contents.
                    if lo.len() != k || hi.len() != k || lo.iter().max() > hi.iter().min() {
                        return Err(Error::precondition(
                            "bucket redistribution violated the least-k contract",
                        ));
                    }
                    buckets[i] = lo;
                    buckets[j] = hi;
                }
                Element::Route(r) => buckets.swap(idx(r.a), idx(r.b)),
            }
        }
    }
    Ok(())
}

/// The plain redistribution: sort the union, split in half.
pub fn merge_split<T: Ord + Clone>(lo: &mut Vec<T>, hi: &mut Vec<T>) {
    let k = lo.len();
    let mut all: Vec<T> = lo.drain(..).chain(hi.drain(..)).collect();
    all.sort();
    *hi = all.split_off(k);
    *lo = all;
}


#[cfg(test)]
mod depth_probe {
    use super::*;

    #[test]
    fn raw_depth_within_budget() {
        for m in [2u16, 4, 8, 16, 32, 64, 128] {
            let raw = build_mesh_network_raw(m).unwrap();
            println!("raw depth m={m}: {} (budget {})", raw.depth(), C_NET * m as usize);
            assert!(raw.depth() <= C_NET * m as usize);
        }
    }
}
