//! Hole-group walking on hexagon boards. A hole may move one step whenever
//! another hole remains adjacent to it through the move; the witness can be a
//! member of the walking group or any other hole standing still (deposited
//! holes routinely serve as witnesses near the gather corner). Walks of pairs
//! and triples are planned by breadth-first search over group states, with
//! members kept within grid distance two of the group so the state space
//! stays linear in the board size, and are emitted as single-move steps.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::board::{BoardGeometry, Position};
use crate::config::Configuration;
use crate::error::Error;
use crate::moves::{AtomicMove, ParallelStep};
use crate::rec::Recorder;
use crate::region::View;

/// A hole relocation: the hole at `from_hole` moves to `to_cell` (the piece
/// at `to_cell` slides into `from_hole`) witnessed by `witness`, another hole
/// adjacent to both.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HoleStep {
    pub from_hole: Position,
    pub to_cell: Position,
    pub witness: Position,
}

impl HoleStep {
    pub fn as_move(&self) -> AtomicMove {
        AtomicMove::hex(self.to_cell, self.from_hole, self.witness)
    }
}

fn canon2(a: Position, b: Position) -> (Position, Position) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn canon3(mut v: [Position; 3]) -> [Position; 3] {
    v.sort();
    v
}

const COHESION: u32 = 2;

struct WalkEnv<'a> {
    geom: BoardGeometry,
    view: &'a View,
    forbidden: &'a HashSet<Position>,
    statics: HashSet<Position>,
}

impl<'a> WalkEnv<'a> {
    fn new(rec: &Recorder, view: &'a View, forbidden: &'a HashSet<Position>, group: &[Position]) -> Self {
        // Only in-view holes count: walks inside a region must stay legal
        // when other regions move in the same time steps.
        let statics: HashSet<Position> = rec
            .cfg
            .holes()
            .into_iter()
            .filter(|h| view.contains(*h) && !group.contains(h))
            .collect();
        WalkEnv { geom: *rec.cfg.geometry(), view, forbidden, statics }
    }

    fn passable(&self, p: Position) -> bool {
        self.view.contains(p) && !self.forbidden.contains(&p) && !self.statics.contains(&p)
    }

    /// A witness for the hole step `from -> to`: a group companion or a
    /// static hole adjacent to both cells.
    fn witness(&self, companions: &[Position], from: Position, to: Position) -> Option<Position> {
        companions
            .iter()
            .copied()
            .find(|w| self.geom.are_adjacent(*w, from) && self.geom.are_adjacent(*w, to))
            .or_else(|| {
                self.geom
                    .neighbors(to)
                    .expect("in bounds")
                    .into_iter()
                    .find(|w| self.statics.contains(w) && self.geom.are_adjacent(*w, from))
            })
    }
}

/// Walks a pair of holes until `goal` is satisfied. The members stay within
/// grid distance two of each other; other holes are obstacles but may serve
/// as witnesses. Returns the final pair.
pub(crate) fn walk_pair(
    rec: &mut Recorder,
    view: &View,
    pair: (Position, Position),
    forbidden: &HashSet<Position>,
    goal: impl Fn(Position, Position) -> bool,
) -> Result<(Position, Position), Error> {
    let start = canon2(pair.0, pair.1);
    debug_assert!(rec.cfg.is_hole(start.0) && rec.cfg.is_hole(start.1));
    if goal(start.0, start.1) {
        return Ok(start);
    }
    let env = WalkEnv::new(rec, view, forbidden, &[start.0, start.1]);
    let mut parent: HashMap<(Position, Position), ((Position, Position), HoleStep)> = HashMap::new();
    let mut seen: HashSet<(Position, Position)> = HashSet::new();
    let mut q = VecDeque::new();
    seen.insert(start);
    q.push_back(start);
    let mut found: Option<(Position, Position)> = None;
    'bfs: while let Some(state) = q.pop_front() {
        let (a, b) = state;
        for (mover, other) in [(a, b), (b, a)] {
            for next in env.geom.neighbors(mover).expect("in bounds") {
                if next == other
                    || !env.passable(next)
                    || env.geom.grid_distance(next, other).expect("in bounds") > COHESION
                {
                    continue;
                }
                let Some(witness) = env.witness(&[other], mover, next) else { continue };
                let ns = canon2(next, other);
                if seen.contains(&ns) {
                    continue;
                }
                seen.insert(ns);
                parent.insert(ns, (state, HoleStep { from_hole: mover, to_cell: next, witness }));
                if goal(ns.0, ns.1) {
                    found = Some(ns);
                    break 'bfs;
                }
                q.push_back(ns);
            }
        }
    }
    let end = found.ok_or_else(|| Error::internal("hole pair walk: goal unreachable"))?;
    emit_chain(rec, &parent, start, end)?;
    Ok(end)
}

/// Walks a triple of holes until `goal` holds; cohesion as in [`walk_pair`]
/// (the triple stays connected at grid distance two).
pub(crate) fn walk_trio(
    rec: &mut Recorder,
    view: &View,
    trio: [Position; 3],
    forbidden: &HashSet<Position>,
    goal: impl Fn(&[Position; 3]) -> bool,
) -> Result<[Position; 3], Error> {
    let start = canon3(trio);
    debug_assert!(start.iter().all(|&p| rec.cfg.is_hole(p)));
    if goal(&start) {
        return Ok(start);
    }
    let env = WalkEnv::new(rec, view, forbidden, &start);
    let cohesive = |v: &[Position; 3]| {
        let d = |x: Position, y: Position| env.geom.grid_distance(x, y).expect("in bounds");
        let (d01, d02, d12) = (d(v[0], v[1]), d(v[0], v[2]), d(v[1], v[2]));
        // Connected at distance two.
        (d01 <= COHESION && (d02 <= COHESION || d12 <= COHESION)) || (d02 <= COHESION && d12 <= COHESION)
    };
    debug_assert!(cohesive(&start), "trio must start cohesive");

    let mut parent: HashMap<[Position; 3], ([Position; 3], HoleStep)> = HashMap::new();
    let mut seen: HashSet<[Position; 3]> = HashSet::new();
    let mut q = VecDeque::new();
    seen.insert(start);
    q.push_back(start);
    let mut found: Option<[Position; 3]> = None;
    'bfs: while let Some(state) = q.pop_front() {
        for i in 0..3 {
            let mover = state[i];
            let others = [state[(i + 1) % 3], state[(i + 2) % 3]];
            for next in env.geom.neighbors(mover).expect("in bounds") {
                if others.contains(&next) || !env.passable(next) {
                    continue;
                }
                let Some(witness) = env.witness(&others, mover, next) else { continue };
                let ns = canon3([next, others[0], others[1]]);
                if !cohesive(&ns) || seen.contains(&ns) {
                    continue;
                }
                seen.insert(ns);
                parent.insert(ns, (state, HoleStep { from_hole: mover, to_cell: next, witness }));
                if goal(&ns) {
                    found = Some(ns);
                    break 'bfs;
                }
                q.push_back(ns);
            }
        }
    }
    let end = found.ok_or_else(|| Error::internal("hole trio walk: goal unreachable"))?;
    emit_chain(rec, &parent, start, end)?;
    Ok(end)
}

fn emit_chain<S: std::hash::Hash + Eq + Copy>(
    rec: &mut Recorder,
    parent: &HashMap<S, (S, HoleStep)>,
    start: S,
    end: S,
) -> Result<(), Error> {
    let mut chain = Vec::new();
    let mut cur = end;
    while cur != start {
        let (prev, step) = parent[&cur];
        chain.push(step);
        cur = prev;
    }
    chain.reverse();
    for step in chain {
        rec.push(ParallelStep::single(step.as_move()));
    }
    Ok(())
}
