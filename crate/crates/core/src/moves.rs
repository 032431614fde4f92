//! Atomic moves, parallel time steps, the exact legality rules of both
//! tilings, and trace application, reversal, and the line-oriented trace file
//! format.
//!
//! One parallel step moves any number of pieces simultaneously. On square
//! boards a piece slides into an adjacent hole, and a cell being vacated this
//! step does not count as a hole. On hexagon boards a piece moves into either
//! cell of a pair of adjacent holes it touches, and the hole pairs used by
//! simultaneous moves must be pairwise disjoint.

use std::collections::HashSet;
use std::fmt;

use crate::board::{BoardGeometry, BoardKind, Position};
use crate::config::{Cell, Configuration};
use crate::error::Error;

/// One piece sliding from `from` to `to`. Hexagon moves carry the unordered
/// pair of adjacent holes they use (`to` is one of them); square moves have no
/// pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AtomicMove {
    pub from: Position,
    pub to: Position,
    via: Option<(Position, Position)>,
}

impl AtomicMove {
    pub fn square(from: Position, to: Position) -> Self {
        AtomicMove { from, to, via: None }
    }

    /// Hexagon move of the piece at `from` into `to`, using the hole pair
    /// `{to, other}`.
    pub fn hex(from: Position, to: Position, other: Position) -> Self {
        let via = if to <= other { (to, other) } else { (other, to) };
        AtomicMove { from, to, via: Some(via) }
    }

    pub fn via_pair(&self) -> Option<(Position, Position)> {
        self.via
    }

    /// The pair hole not entered by this move, if this is a hexagon move.
    pub fn spare_hole(&self) -> Option<Position> {
        self.via.map(|(a, b)| if a == self.to { b } else { a })
    }

    /// The same relocation undone. The reversed hexagon move uses the hole
    /// pair `{from, spare}`: after the forward move the entered cell is
    /// occupied, so the vacated cell takes its place in the pair.
    pub fn reversed(&self) -> AtomicMove {
        match self.spare_hole() {
            None => AtomicMove::square(self.to, self.from),
            Some(spare) => AtomicMove::hex(self.to, self.from, spare),
        }
    }
}

impl fmt::Display for AtomicMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.from, self.to)?;
        if let Some((a, b)) = self.via {
            write!(f, "@{a}|{b}")?;
        }
        Ok(())
    }
}

/// A set of simultaneous moves: one time step of the parallel metric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParallelStep {
    moves: Vec<AtomicMove>,
}

impl ParallelStep {
    /// Moves are stored sorted by source cell, so equal steps compare equal.
    pub fn new(mut moves: Vec<AtomicMove>) -> Self {
        moves.sort_by_key(|m| (m.from, m.to));
        ParallelStep { moves }
    }

    pub fn single(mv: AtomicMove) -> Self {
        ParallelStep { moves: vec![mv] }
    }

    pub fn empty() -> Self {
        ParallelStep { moves: Vec::new() }
    }

    pub fn moves(&self) -> &[AtomicMove] {
        &self.moves
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn reversed(&self) -> ParallelStep {
        ParallelStep::new(self.moves.iter().map(AtomicMove::reversed).collect())
    }

    /// Union of two steps over disjoint cells.
    pub fn merged_with(&self, other: &ParallelStep) -> ParallelStep {
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        ParallelStep::new(moves)
    }
}

/// Checks every rule and reports all violations, not just the first.
pub fn validate_step(c: &Configuration, s: &ParallelStep) -> Result<(), Error> {
    let geom = *c.geometry();
    let mut violations: Vec<String> = Vec::new();
    let mut froms: HashSet<Position> = HashSet::new();
    let mut tos: HashSet<Position> = HashSet::new();
    let mut via_cells: HashSet<Position> = HashSet::new();

    for mv in s.moves() {
        let tag = format!("move {mv}");
        for p in [mv.from, mv.to].into_iter().chain(mv.via.into_iter().flat_map(|(a, b)| [a, b])) {
            if !geom.contains(p) {
                violations.push(format!("{tag}: position {p} out of bounds"));
            }
        }
        if violations.iter().any(|v| v.starts_with(&tag) && v.contains("out of bounds")) {
            continue;
        }
        if !froms.insert(mv.from) {
            violations.push(format!("{tag}: duplicate source cell"));
        }
        if !tos.insert(mv.to) {
            violations.push(format!("{tag}: duplicate destination cell"));
        }
        if !c.is_piece(mv.from) {
            violations.push(format!("{tag}: source is not a piece"));
        }
        match (geom.kind, mv.via) {
            (BoardKind::Square, None) => {
                if !geom.are_adjacent(mv.from, mv.to) {
                    violations.push(format!("{tag}: cells not adjacent"));
                }
                if !c.is_hole(mv.to) {
                    violations.push(format!(
                        "{tag}: destination is not a hole (a cell simultaneously being vacated does not count)"
                    ));
                }
            }
            (BoardKind::Hexagon, Some((a, b))) => {
                if !geom.are_adjacent(a, b) {
                    violations.push(format!("{tag}: hole pair cells not adjacent"));
                }
                if mv.to != a && mv.to != b {
                    violations.push(format!("{tag}: destination not in its hole pair"));
                }
                if !geom.are_adjacent(mv.from, a) || !geom.are_adjacent(mv.from, b) {
                    violations.push(format!("{tag}: source not adjacent to both pair holes"));
                }
                for h in [a, b] {
                    if !c.is_hole(h) {
                        violations.push(format!("{tag}: pair cell {h} is not a hole"));
                    }
                }
                for h in [a, b] {
                    if !via_cells.insert(h) {
                        violations.push(format!("{tag}: hole pair overlaps another move's pair"));
                    }
                }
            }
            (BoardKind::Square, Some(_)) => {
                violations.push(format!("{tag}: hole pair given on a square board"));
            }
            (BoardKind::Hexagon, None) => {
                violations.push(format!("{tag}: hexagon move without its hole pair"));
            }
        }
    }

    if geom.kind == BoardKind::Square {
        for mv in s.moves() {
            if froms.contains(&mv.to) && c.is_piece(mv.to) {
                violations.push(format!(
                    "move {mv}: destination is simultaneously being vacated; it must really be a hole"
                ));
            }
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::IllegalStep(violations.join("; ")))
    }
}

/// Applies a validated step, relocating pieces (labels included).
pub fn apply_step(c: &Configuration, s: &ParallelStep) -> Result<Configuration, Error> {
    validate_step(c, s)?;
    let mut out = c.clone();
    apply_step_unchecked(&mut out, s);
    Ok(out)
}

pub(crate) fn apply_step_unchecked(c: &mut Configuration, s: &ParallelStep) {
    let mut carried: Vec<(Position, Cell)> = Vec::with_capacity(s.len());
    for mv in s.moves() {
        carried.push((mv.to, c.cell(mv.from)));
        c.set_cell(mv.from, Cell::Hole);
    }
    for (to, cell) in carried {
        c.set_cell(to, cell);
    }
}

/// A full run: an initial configuration and the parallel steps applied to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveTrace {
    initial: Configuration,
    steps: Vec<ParallelStep>,
}

impl MoveTrace {
    pub fn new(initial: Configuration, steps: Vec<ParallelStep>) -> Self {
        MoveTrace { initial, steps }
    }

    pub fn identity(initial: Configuration) -> Self {
        MoveTrace { initial, steps: Vec::new() }
    }

    pub fn geometry(&self) -> &BoardGeometry {
        self.initial.geometry()
    }

    pub fn initial(&self) -> &Configuration {
        &self.initial
    }

    pub fn steps(&self) -> &[ParallelStep] {
        &self.steps
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn move_count(&self) -> usize {
        self.steps.iter().map(ParallelStep::len).sum()
    }

    /// Replays the trace, validating every step; reports the index of the
    /// first violation.
    pub fn apply(&self) -> Result<Configuration, Error> {
        let mut c = self.initial.clone();
        for (i, s) in self.steps.iter().enumerate() {
            validate_step(&c, s).map_err(|e| Error::InvalidTrace { step: i, report: e.to_string() })?;
            apply_step_unchecked(&mut c, s);
        }
        Ok(c)
    }

    /// The trace run backwards: valid from this trace's final configuration
    /// and ending at its initial one.
    pub fn reversed(&self) -> Result<MoveTrace, Error> {
        let final_config = self.apply()?;
        let steps = self.steps.iter().rev().map(ParallelStep::reversed).collect();
        Ok(MoveTrace { initial: final_config, steps })
    }

    // ---- trace file format ------------------------------------------------

    /// Header line, initial configuration block, then one line per step with
    /// moves separated by `;`.
    pub fn to_text(&self) -> String {
        let geom = self.geometry();
        let mut out = format!("board={} n={}\n", geom, self.initial.piece_count());
        out.push_str(&self.initial.to_text());
        for s in &self.steps {
            let line: Vec<String> = s.moves().iter().map(|m| m.to_string()).collect();
            out.push_str(&line.join(";"));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<MoveTrace, Error> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(Error::Parse { line: 1, msg: "empty trace".into() })?;
        let mut board: Option<BoardGeometry> = None;
        let mut n: Option<usize> = None;
        for tok in header.split_whitespace() {
            if let Some(spec) = tok.strip_prefix("board=") {
                board = Some(spec.parse()?);
            } else if let Some(v) = tok.strip_prefix("n=") {
                n = Some(v.parse().map_err(|_| Error::Parse { line: 1, msg: format!("bad n `{v}`") })?);
            } else {
                return Err(Error::Parse { line: 1, msg: format!("unexpected token `{tok}`") });
            }
        }
        let geom = board.ok_or(Error::Parse { line: 1, msg: "missing board=".into() })?;
        let n = n.ok_or(Error::Parse { line: 1, msg: "missing n=".into() })?;

        let config_lines: Vec<&str> = lines.by_ref().take(geom.rows as usize).collect();
        let initial = Configuration::parse_text(geom, &config_lines.join("\n"))?;
        if initial.piece_count() != n {
            return Err(Error::Parse {
                line: 2,
                msg: format!("header says n={n} but the configuration has {} pieces", initial.piece_count()),
            });
        }

        let mut steps = Vec::new();
        for (i, line) in lines.enumerate() {
            let lineno = 2 + geom.rows as usize + i;
            if line.trim().is_empty() {
                steps.push(ParallelStep::empty());
                continue;
            }
            let mut moves = Vec::new();
            for part in line.split(';') {
                moves.push(parse_move(part.trim(), lineno)?);
            }
            steps.push(ParallelStep::new(moves));
        }
        Ok(MoveTrace { initial, steps })
    }
}

fn parse_position(s: &str, line: usize) -> Result<Position, Error> {
    let bad = || Error::Parse { line, msg: format!("bad position `{s}`") };
    let (r, c) = s.split_once(',').ok_or_else(bad)?;
    Ok(Position::new(
        r.trim().parse().map_err(|_| bad())?,
        c.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_move(s: &str, line: usize) -> Result<AtomicMove, Error> {
    let bad = |msg: String| Error::Parse { line, msg };
    let (cells, via) = match s.split_once('@') {
        Some((cells, via)) => (cells, Some(via)),
        None => (s, None),
    };
    let (from, to) = cells
        .split_once('>')
        .ok_or_else(|| bad(format!("bad move `{s}`")))?;
    let from = parse_position(from, line)?;
    let to = parse_position(to, line)?;
    match via {
        None => Ok(AtomicMove::square(from, to)),
        Some(via) => {
            let (a, b) = via
                .split_once('|')
                .ok_or_else(|| bad(format!("bad hole pair in `{s}`")))?;
            let a = parse_position(a, line)?;
            let b = parse_position(b, line)?;
            let other = if a == to { b } else { a };
            if a != to && b != to {
                return Err(bad(format!("destination not in hole pair in `{s}`")));
            }
            Ok(AtomicMove::hex(from, to, other))
        }
    }
}

/// Merges per-region step sequences that touch pairwise disjoint cells into
/// one sequence: step `i` of the result is the union of every sequence's step
/// `i`. Steps that come out empty are dropped.
pub fn merge_parallel(sequences: Vec<Vec<ParallelStep>>) -> Vec<ParallelStep> {
    let longest = sequences.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::with_capacity(longest);
    for i in 0..longest {
        let mut moves = Vec::new();
        for seq in &sequences {
            if let Some(s) = seq.get(i) {
                moves.extend_from_slice(s.moves());
            }
        }
        if !moves.is_empty() {
            out.push(ParallelStep::new(moves));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::pos;
    use crate::config::holes_first;
    use crate::board::Ordering;

    fn square_line(cells: &str) -> Configuration {
        // '.' hole, '#' piece, single row.
        let geom = BoardGeometry::square(1, cells.len() as u16).unwrap();
        let occ: Vec<Position> = cells
            .chars()
            .enumerate()
            .filter(|(_, ch)| *ch == '#')
            .map(|(i, _)| pos(0, i as u16))
            .collect();
        Configuration::from_occupied(geom, &occ).unwrap()
    }

    #[test]
    fn square_swap_through_each_other_rejected() {
        // Two pieces exchanging cells in one step: each destination is being
        // vacated, not a hole.
        let geom = BoardGeometry::square(1, 2).unwrap();
        let c = Configuration::from_labels(geom, &[pos(0, 0), pos(0, 1)]).unwrap();
        let s = ParallelStep::new(vec![
            AtomicMove::square(pos(0, 0), pos(0, 1)),
            AtomicMove::square(pos(0, 1), pos(0, 0)),
        ]);
        let err = validate_step(&c, &s).unwrap_err().to_string();
        assert!(err.contains("not a hole"), "{err}");
    }

    #[test]
    fn hex_isolated_hole_rejected() {
        let geom = BoardGeometry::hexagon(3, 3).unwrap();
        let mut occ: Vec<Position> = geom.all_positions().collect();
        occ.retain(|p| *p != pos(1, 1));
        let c = Configuration::from_occupied(geom, &occ).unwrap();
        // Piece at (1,0) tries to enter the lone hole; any pair it names
        // contains a non-hole.
        let s = ParallelStep::single(AtomicMove::hex(pos(1, 0), pos(1, 1), pos(0, 1)));
        let err = validate_step(&c, &s).unwrap_err().to_string();
        assert!(err.contains("not a hole"), "{err}");
    }

    #[test]
    fn empty_step_is_identity() {
        let c = square_line("##..");
        let s = ParallelStep::empty();
        assert_eq!(apply_step(&c, &s).unwrap(), c);
    }

    #[test]
    fn single_square_move_swaps_hole_and_piece() {
        let c = square_line("#.");
        let s = ParallelStep::single(AtomicMove::square(pos(0, 0), pos(0, 1)));
        let after = apply_step(&c, &s).unwrap();
        assert!(after.is_hole(pos(0, 0)) && after.is_piece(pos(0, 1)));
    }

    #[test]
    fn hex_move_into_either_pair_hole() {
        // A 4x3 hexagon board with 10 pieces and two adjacent holes: the piece
        // adjacent to both holes can move into either of those positions.
        let geom = BoardGeometry::hexagon(4, 3).unwrap();
        let mut occ: Vec<Position> = geom.all_positions().collect();
        occ.retain(|p| *p != pos(1, 1) && *p != pos(1, 2));
        let c = Configuration::from_occupied(geom, &occ).unwrap();
        // (2,1) is adjacent to both (1,1) and (1,2).
        for target in [pos(1, 1), pos(1, 2)] {
            let other = if target == pos(1, 1) { pos(1, 2) } else { pos(1, 1) };
            let s = ParallelStep::single(AtomicMove::hex(pos(2, 1), target, other));
            let after = apply_step(&c, &s).unwrap();
            assert!(after.is_piece(target));
            assert!(after.is_hole(pos(2, 1)));
            assert!(after.is_hole(other));
        }
    }

    #[test]
    fn hex_disjoint_pair_rule() {
        // Two moves sharing a hole of their pairs are rejected.
        let geom = BoardGeometry::hexagon(3, 3).unwrap();
        let mut occ: Vec<Position> = geom.all_positions().collect();
        occ.retain(|p| !(p.row == 0 && p.col <= 1) && *p != pos(1, 0));
        let c = Configuration::from_occupied(geom, &occ).unwrap();
        // Holes: (0,0),(0,1),(1,0). Pieces at (1,1) and (2,0) both adjacent to
        // pairs overlapping at (1,0).
        let s = ParallelStep::new(vec![
            AtomicMove::hex(pos(1, 1), pos(1, 0), pos(0, 1)),
            AtomicMove::hex(pos(2, 0), pos(1, 0), pos(0, 0)),
        ]);
        let err = validate_step(&c, &s).unwrap_err().to_string();
        assert!(err.contains("overlaps") || err.contains("duplicate destination"), "{err}");

        let s2 = ParallelStep::new(vec![
            AtomicMove::hex(pos(1, 1), pos(0, 1), pos(1, 0)),
            AtomicMove::hex(pos(2, 0), pos(1, 0), pos(0, 0)),
        ]);
        let err2 = validate_step(&c, &s2).unwrap_err().to_string();
        assert!(err2.contains("overlaps"), "{err2}");
    }

    #[test]
    fn trace_apply_and_first_failure_index() {
        let c = square_line("#..");
        let ok = MoveTrace::new(
            c.clone(),
            vec![
                ParallelStep::single(AtomicMove::square(pos(0, 0), pos(0, 1))),
                ParallelStep::single(AtomicMove::square(pos(0, 1), pos(0, 2))),
            ],
        );
        let end = ok.apply().unwrap();
        assert!(end.is_piece(pos(0, 2)));

        let bad = MoveTrace::new(
            c.clone(),
            vec![
                ParallelStep::single(AtomicMove::square(pos(0, 0), pos(0, 1))),
                ParallelStep::single(AtomicMove::square(pos(0, 0), pos(0, 1))),
            ],
        );
        match bad.apply() {
            Err(Error::InvalidTrace { step, .. }) => assert_eq!(step, 1),
            other => panic!("expected invalid trace, got {other:?}"),
        }

        assert_eq!(MoveTrace::identity(c.clone()).apply().unwrap(), c);
    }

    #[test]
    fn reverse_is_involution_and_valid() {
        let c = square_line("##..");
        let t = MoveTrace::new(
            c.clone(),
            vec![
                ParallelStep::new(vec![AtomicMove::square(pos(0, 1), pos(0, 2))]),
                ParallelStep::new(vec![
                    AtomicMove::square(pos(0, 0), pos(0, 1)),
                    AtomicMove::square(pos(0, 2), pos(0, 3)),
                ]),
            ],
        );
        let rev = t.reversed().unwrap();
        assert_eq!(rev.apply().unwrap(), c);
        let back = rev.reversed().unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn hex_reverse_valid() {
        let geom = BoardGeometry::hexagon(3, 3).unwrap();
        let c = holes_first(geom, 3, Ordering::ColMajor).unwrap();
        // Holes (0,0),(1,0),(2,0). Move piece (1,1) into (1,0) via {(1,0),(0,0)}.
        let mv = AtomicMove::hex(pos(1, 1), pos(1, 0), pos(2, 0));
        let t = MoveTrace::new(c.clone(), vec![ParallelStep::single(mv)]);
        let rev = t.reversed().unwrap();
        assert_eq!(rev.apply().unwrap(), c);
    }

    #[test]
    fn trace_text_round_trip() {
        let geom = BoardGeometry::hexagon(3, 3).unwrap();
        let c = holes_first(geom, 3, Ordering::ColMajor).unwrap();
        let mv = AtomicMove::hex(pos(1, 1), pos(1, 0), pos(2, 0));
        let t = MoveTrace::new(c, vec![ParallelStep::single(mv)]);
        let text = t.to_text();
        let back = MoveTrace::parse_text(&text).unwrap();
        assert_eq!(t, back);
        assert_eq!(back.to_text(), text);

        let c2 = square_line("#.#.");
        let t2 = MoveTrace::new(
            c2,
            vec![ParallelStep::new(vec![
                AtomicMove::square(pos(0, 0), pos(0, 1)),
                AtomicMove::square(pos(0, 2), pos(0, 3)),
            ])],
        );
        assert_eq!(MoveTrace::parse_text(&t2.to_text()).unwrap(), t2);
    }

    #[test]
    fn merge_parallel_unions_disjoint_regions() {
        let a = vec![
            ParallelStep::single(AtomicMove::square(pos(0, 0), pos(0, 1))),
            ParallelStep::single(AtomicMove::square(pos(0, 1), pos(0, 2))),
        ];
        let b = vec![ParallelStep::single(AtomicMove::square(pos(5, 0), pos(5, 1)))];
        let merged = merge_parallel(vec![a, b]);
        assert_eq!(merged.len(), 2);
        assert_eq!(merged[0].len(), 2);
        assert_eq!(merged[1].len(), 1);
    }
}
