//! Exact ground truth at desk scale: breadth-first search over configuration
//! graphs for intrinsic metrics, diameters, and components, and matching-based
//! extrinsic metrics. Every number here is derived independently of the
//! solvers it checks.

pub(crate) mod matching;

use std::collections::{HashMap, HashSet, VecDeque};

use crate::board::BoardKind;
use crate::config::{Cell, Configuration};
use crate::error::Error;
use crate::moves::{AtomicMove, ParallelStep};

/// The four distances of the paper's metric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    L1Intrinsic,
    LinfIntrinsic,
    L1Extrinsic,
    LinfExtrinsic,
}

/// Adjacency relation for the intrinsic metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepRelation {
    /// One piece slides per step.
    SingleMove,
    /// Any legal set of simultaneous slides per step.
    Parallel,
}

pub const DEFAULT_STATE_CAP: u64 = 5_000_000;

// ---- extrinsic metrics -----------------------------------------------------

/// Extrinsic distance between two configurations of the same geometry and
/// piece count. Labeled pairs use the per-label sum (L1) or maximum (L-inf) of
/// grid distances; unlabeled pairs minimize over all matchings of the two
/// occupied sets (minimum-cost for L1, bottleneck for L-inf).
pub fn extrinsic_distance(a: &Configuration, b: &Configuration, kind: MetricKind) -> Result<u64, Error> {
    if a.geometry() != b.geometry() {
        return Err(Error::precondition("extrinsic distance needs matching geometries"));
    }
    if a.piece_count() != b.piece_count() {
        return Err(Error::precondition("extrinsic distance needs matching piece counts"));
    }
    let geom = a.geometry();
    match (kind, a.is_labeled() && b.is_labeled()) {
        (MetricKind::L1Extrinsic, true) => {
            let (pa, pb) = (a.label_positions(), b.label_positions());
            Ok(pa
                .iter()
                .zip(&pb)
                .map(|(x, y)| geom.grid_distance(*x, *y).expect("in bounds") as u64)
                .sum())
        }
        (MetricKind::LinfExtrinsic, true) => {
            let (pa, pb) = (a.label_positions(), b.label_positions());
            Ok(pa
                .iter()
                .zip(&pb)
                .map(|(x, y)| geom.grid_distance(*x, *y).expect("in bounds") as u64)
                .max()
                .unwrap_or(0))
        }
        (MetricKind::L1Extrinsic, false) => {
            let cost = distance_matrix(a, b);
            Ok(matching::min_cost_matching(&cost) as u64)
        }
        (MetricKind::LinfExtrinsic, false) => {
            // The minimum-over-labelings rule extended to the maximum edge;
            // a bottleneck matching.
            let cost = distance_matrix(a, b);
            Ok(matching::bottleneck_matching(&cost) as u64)
        }
        _ => Err(Error::precondition("extrinsic_distance takes an extrinsic metric kind")),
    }
}

fn distance_matrix(a: &Configuration, b: &Configuration) -> Vec<Vec<i64>> {
    let geom = a.geometry();
    let pa = a.occupied();
    let pb = b.occupied();
    pa.iter()
        .map(|x| pb.iter().map(|y| geom.grid_distance(*x, *y).expect("in bounds") as i64).collect())
        .collect()
}

// ---- move generation -------------------------------------------------------

/// Every legal single move of the configuration.
pub fn legal_moves(c: &Configuration) -> Vec<AtomicMove> {
    let geom = *c.geometry();
    let mut out = Vec::new();
    match geom.kind {
        BoardKind::Square => {
            for h in c.holes() {
                for p in geom.neighbors(h).expect("in bounds") {
                    if c.is_piece(p) {
                        out.push(AtomicMove::square(p, h));
                    }
                }
            }
        }
        BoardKind::Hexagon => {
            let holes = c.holes();
            for (i, &h1) in holes.iter().enumerate() {
                for &h2 in &holes[i + 1..] {
                    if !geom.are_adjacent(h1, h2) {
                        continue;
                    }
                    for p in geom.neighbors(h1).expect("in bounds") {
                        if c.is_piece(p) && geom.are_adjacent(p, h2) {
                            out.push(AtomicMove::hex(p, h1, h2));
                            out.push(AtomicMove::hex(p, h2, h1));
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|m| (m.from, m.to, m.via_pair()));
    out.dedup();
    out
}

/// Whether the configuration admits any legal step at all. On hexagon boards
/// this is exactly "not all holes are isolated".
pub fn has_any_move(c: &Configuration) -> bool {
    !legal_moves(c).is_empty()
}

/// All successor configurations under the chosen relation, deduplicated.
pub fn successors(c: &Configuration, rel: StepRelation) -> Vec<Configuration> {
    let moves = legal_moves(c);
    let mut out: Vec<Configuration> = Vec::new();
    let mut seen: HashSet<Configuration> = HashSet::new();
    match rel {
        StepRelation::SingleMove => {
            for mv in moves {
                let next = apply_moves(c, &[mv]);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
        }
        StepRelation::Parallel => {
            // Depth-first enumeration of compatible move subsets. Square
            // compatibility: distinct sources, distinct holes entered, and no
            // destination equal to another move's source. Hexagon: disjoint
            // hole pairs and distinct sources.
            let mut chosen: Vec<AtomicMove> = Vec::new();
            enumerate_subsets(c, &moves, 0, &mut chosen, &mut |subset| {
                let next = apply_moves(c, subset);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            });
        }
    }
    out
}

fn compatible(c: &Configuration, chosen: &[AtomicMove], cand: &AtomicMove) -> bool {
    let square = c.geometry().kind == BoardKind::Square;
    for mv in chosen {
        if mv.from == cand.from || mv.to == cand.to {
            return false;
        }
        if square && (mv.to == cand.from || cand.to == mv.from) {
            return false;
        }
        if let (Some((a1, b1)), Some((a2, b2))) = (mv.via_pair(), cand.via_pair()) {
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                return false;
            }
        }
    }
    true
}

fn enumerate_subsets(
    c: &Configuration,
    moves: &[AtomicMove],
    start: usize,
    chosen: &mut Vec<AtomicMove>,
    f: &mut impl FnMut(&[AtomicMove]),
) {
    for i in start..moves.len() {
        if compatible(c, chosen, &moves[i]) {
            chosen.push(moves[i]);
            f(chosen);
            enumerate_subsets(c, moves, i + 1, chosen, f);
            chosen.pop();
        }
    }
}

fn apply_moves(c: &Configuration, moves: &[AtomicMove]) -> Configuration {
    let mut next = c.clone();
    let mut carried: Vec<(crate::board::Position, Cell)> = Vec::new();
    for mv in moves {
        carried.push((mv.to, next.cell(mv.from)));
        next.set_cell(mv.from, Cell::Hole);
    }
    for (to, cell) in carried {
        next.set_cell(to, cell);
    }
    next
}

// ---- state space estimates and keys ----------------------------------------

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out.saturating_mul(n - i) / (i + 1);
    }
    out
}

/// Estimated number of configurations of `n` pieces on the board.
pub fn state_estimate(cells: usize, n: usize, labeled: bool) -> u64 {
    let mut est = binomial(cells as u64, n as u64);
    if labeled {
        for i in 1..=n as u64 {
            est = est.saturating_mul(i);
        }
    }
    est
}

fn check_cap(estimate: u64, cap: u64) -> Result<(), Error> {
    if estimate > cap {
        Err(Error::CapExceeded { estimate, cap })
    } else {
        Ok(())
    }
}

fn key_of(c: &Configuration) -> Vec<u8> {
    debug_assert!(c.geometry().cell_count() <= 256);
    let geom = c.geometry();
    if c.is_labeled() {
        let mut key = vec![0u8; c.piece_count()];
        for p in geom.all_positions() {
            if let Cell::Labeled(l) = c.cell(p) {
                key[l as usize - 1] = geom.cell_index(p) as u8;
            }
        }
        key
    } else {
        geom.all_positions()
            .filter(|&p| c.is_piece(p))
            .map(|p| geom.cell_index(p) as u8)
            .collect()
    }
}

// ---- component enumeration and distances ------------------------------------

/// The explicit component of a start configuration: state keys with their BFS
/// distances from the start.
pub struct OracleGraph {
    start: Configuration,
    rel: StepRelation,
    dist: HashMap<Vec<u8>, u32>,
}

impl OracleGraph {
    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn contains(&self, c: &Configuration) -> bool {
        self.dist.contains_key(&key_of(c))
    }

    pub fn distance_to(&self, c: &Configuration) -> Option<u32> {
        self.dist.get(&key_of(c)).copied()
    }

    pub fn eccentricity(&self) -> u32 {
        self.dist.values().copied().max().unwrap_or(0)
    }

    pub fn start(&self) -> &Configuration {
        &self.start
    }

    pub fn relation(&self) -> StepRelation {
        self.rel
    }
}

/// Breadth-first enumeration of everything reachable from `c`. Refuses boards
/// whose full space estimate exceeds the cap.
pub fn enumerate_component(c: &Configuration, rel: StepRelation, cap: u64) -> Result<OracleGraph, Error> {
    check_cap(state_estimate(c.geometry().cell_count(), c.piece_count(), c.is_labeled()), cap)?;
    let mut dist: HashMap<Vec<u8>, u32> = HashMap::new();
    let mut q: VecDeque<(Configuration, u32)> = VecDeque::new();
    dist.insert(key_of(c), 0);
    q.push_back((c.clone(), 0));
    while let Some((cur, d)) = q.pop_front() {
        for next in successors(&cur, rel) {
            let key = key_of(&next);
            if !dist.contains_key(&key) {
                dist.insert(key, d + 1);
                q.push_back((next, d + 1));
            }
        }
    }
    Ok(OracleGraph { start: c.clone(), rel, dist })
}

/// Exact intrinsic distance between two configurations, or `None` when they
/// lie in different components.
pub fn intrinsic_distance(
    a: &Configuration,
    b: &Configuration,
    kind: MetricKind,
    cap: u64,
) -> Result<Option<u32>, Error> {
    let rel = match kind {
        MetricKind::L1Intrinsic => StepRelation::SingleMove,
        MetricKind::LinfIntrinsic => StepRelation::Parallel,
        _ => return Err(Error::precondition("intrinsic_distance takes an intrinsic metric kind")),
    };
    if a.geometry() != b.geometry() || a.piece_count() != b.piece_count() {
        return Err(Error::precondition("intrinsic distance needs matching spaces"));
    }
    check_cap(state_estimate(a.geometry().cell_count(), a.piece_count(), a.is_labeled()), cap)?;
    // Plain BFS from `a` with an early exit at `b`.
    let target = key_of(b);
    let mut dist: HashMap<Vec<u8>, u32> = HashMap::new();
    let mut q: VecDeque<(Configuration, u32)> = VecDeque::new();
    let start_key = key_of(a);
    if start_key == target {
        return Ok(Some(0));
    }
    dist.insert(start_key, 0);
    q.push_back((a.clone(), 0));
    while let Some((cur, d)) = q.pop_front() {
        for next in successors(&cur, rel) {
            let key = key_of(&next);
            if key == target {
                return Ok(Some(d + 1));
            }
            if !dist.contains_key(&key) {
                dist.insert(key, d + 1);
                q.push_back((next, d + 1));
            }
        }
    }
    Ok(None)
}

/// The space of all `n`-piece configurations of a board.
#[derive(Debug, Clone, Copy)]
pub struct SpaceSpec {
    pub geom: crate::board::BoardGeometry,
    pub n: usize,
    pub labeled: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterReport {
    pub states: u64,
    pub components: usize,
    /// Maximum eccentricity over the largest component.
    pub diameter: u32,
    pub largest_component: u64,
}

fn all_configurations(spec: &SpaceSpec, mut f: impl FnMut(&Configuration)) {
    let cells: Vec<crate::board::Position> = spec.geom.all_positions().collect();
    let mut chosen: Vec<crate::board::Position> = Vec::with_capacity(spec.n);
    fn combos(
        cells: &[crate::board::Position],
        start: usize,
        left: usize,
        chosen: &mut Vec<crate::board::Position>,
        f: &mut impl FnMut(&[crate::board::Position]),
    ) {
        if left == 0 {
            f(chosen);
            return;
        }
        for i in start..=cells.len() - left {
            chosen.push(cells[i]);
            combos(cells, i + 1, left - 1, chosen, f);
            chosen.pop();
        }
    }
    let spec = *spec;
    combos(&cells, 0, spec.n, &mut chosen, &mut |occupied| {
        if spec.labeled {
            let mut perm: Vec<crate::board::Position> = occupied.to_vec();
            permutations(&mut perm, 0, &mut |placed| {
                f(&Configuration::from_labels(spec.geom, placed).expect("valid"));
            });
        } else {
            f(&Configuration::from_occupied(spec.geom, occupied).expect("valid"));
        }
    });
}

fn permutations(
    items: &mut Vec<crate::board::Position>,
    k: usize,
    f: &mut impl FnMut(&[crate::board::Position]),
) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Exact diameter of the space: eccentricity sweep over the largest
/// component. Components are identified under the chosen relation (single
/// moves and parallel steps reach the same components).
pub fn intrinsic_diameter(spec: &SpaceSpec, kind: MetricKind, cap: u64) -> Result<DiameterReport, Error> {
    let rel = match kind {
        MetricKind::L1Intrinsic => StepRelation::SingleMove,
        MetricKind::LinfIntrinsic => StepRelation::Parallel,
        _ => return Err(Error::precondition("intrinsic_diameter takes an intrinsic metric kind")),
    };
    let estimate = state_estimate(spec.geom.cell_count(), spec.n, spec.labeled);
    check_cap(estimate, cap)?;

    // Collect the whole space, then BFS components.
    let mut states: Vec<Configuration> = Vec::new();
    all_configurations(spec, |c| states.push(c.clone()));
    let mut component: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut comp_sizes: Vec<u64> = Vec::new();
    let mut members: Vec<Vec<Configuration>> = Vec::new();
    for s in &states {
        let key = key_of(s);
        if component.contains_key(&key) {
            continue;
        }
        let id = comp_sizes.len();
        let mut size = 0u64;
        let mut mem = Vec::new();
        let mut q = VecDeque::new();
        component.insert(key, id);
        q.push_back(s.clone());
        while let Some(cur) = q.pop_front() {
            size += 1;
            mem.push(cur.clone());
            for next in successors(&cur, rel) {
                let k = key_of(&next);
                if !component.contains_key(&k) {
                    component.insert(k, id);
                    q.push_back(next);
                }
            }
        }
        comp_sizes.push(size);
        members.push(mem);
    }
    let largest = comp_sizes
        .iter()
        .enumerate()
        .max_by_key(|(_, s)| **s)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut diameter = 0u32;
    for s in &members[largest] {
        let g = enumerate_component(s, rel, cap)?;
        diameter = diameter.max(g.eccentricity());
    }
    Ok(DiameterReport {
        states: states.len() as u64,
        components: comp_sizes.len(),
        diameter,
        largest_component: comp_sizes[largest],
    })
}

// ---- hexagon connectivity census --------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub states: u64,
    /// States in which some two holes are adjacent.
    pub mobile_states: u64,
    /// Size of the single component containing every mobile state, when the
    /// census property holds.
    pub large_component: u64,
    /// States in which all holes are isolated.
    pub isolated_states: u64,
    /// Every mobile state lies in one component.
    pub one_large_component: bool,
    /// Every all-isolated state admits no move.
    pub isolated_have_degree_zero: bool,
}

/// Verifies, by exhaustive enumeration, that the hexagon configuration space
/// of `n` labeled (or unlabeled) pieces splits into one large component
/// holding every configuration with an adjacent hole pair plus isolated
/// degree-zero configurations.
pub fn census_hex_components(spec: &SpaceSpec, cap: u64) -> Result<CensusReport, Error> {
    if spec.geom.kind != BoardKind::Hexagon {
        return Err(Error::precondition("census runs on hexagon boards"));
    }
    let estimate = state_estimate(spec.geom.cell_count(), spec.n, spec.labeled);
    check_cap(estimate, cap)?;

    let mut states = 0u64;
    let mut mobile = 0u64;
    let mut isolated = 0u64;
    let mut isolated_degree_zero = true;
    let mut first_mobile: Option<Configuration> = None;
    all_configurations(spec, |c| {
        states += 1;
        if c.all_holes_isolated() {
            isolated += 1;
            if has_any_move(c) {
                isolated_degree_zero = false;
            }
        } else {
            mobile += 1;
            if first_mobile.is_none() {
                first_mobile = Some(c.clone());
            }
        }
    });

    let (one_large, large_size) = match &first_mobile {
        None => (true, 0),
        Some(seed) => {
            let graph = enumerate_component(seed, StepRelation::SingleMove, cap)?;
            let mut all_in = true;
            all_configurations(spec, |c| {
                if !c.all_holes_isolated() && !graph.contains(c) {
                    all_in = false;
                }
            });
            (all_in, graph.len() as u64)
        }
    };

    Ok(CensusReport {
        states,
        mobile_states: mobile,
        large_component: large_size,
        isolated_states: isolated,
        one_large_component: one_large,
        isolated_have_degree_zero: isolated_degree_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{pos, BoardGeometry, Ordering, Position};
    use crate::config::holes_first;

    #[test]
    fn extrinsic_trivia() {
        let g = BoardGeometry::square(3, 3).unwrap();
        let a = Configuration::from_labels(g, &[pos(0, 0), pos(2, 2)]).unwrap();
        assert_eq!(extrinsic_distance(&a, &a, MetricKind::L1Extrinsic).unwrap(), 0);
        assert_eq!(extrinsic_distance(&a, &a, MetricKind::LinfExtrinsic).unwrap(), 0);

        let g13 = BoardGeometry::square(1, 3).unwrap();
        let x = Configuration::from_occupied(g13, &[pos(0, 0)]).unwrap();
        let y = Configuration::from_occupied(g13, &[pos(0, 2)]).unwrap();
        assert_eq!(extrinsic_distance(&x, &y, MetricKind::L1Extrinsic).unwrap(), 2);
    }

    #[test]
    fn half_swap_lower_bound() {
        // Swap top and bottom halves: every piece travels m/2, so the labeled
        // L1 extrinsic distance is exactly n * m/2, and the matching oracle on
        // the fully-packed halves agrees.
        for m in [4u16, 8] {
            let g = BoardGeometry::square(m, m).unwrap();
            let n = (m as usize * m as usize) / 2;
            let top: Vec<Position> = g.all_positions().filter(|p| p.row < m / 2).collect();
            let a = Configuration::from_labels(g, &top).unwrap();
            let swapped: Vec<Position> = top
                .iter()
                .map(|p| Position::new(p.row + m / 2, p.col))
                .collect();
            let b = Configuration::from_labels(g, &swapped).unwrap();
            let bound = (m as u64 / 2) * n as u64;
            assert_eq!(extrinsic_distance(&a, &b, MetricKind::L1Extrinsic).unwrap(), bound);
            // Unlabeled matching distance between the packed halves.
            let d = extrinsic_distance(&a.unlabeled(), &b.unlabeled(), MetricKind::L1Extrinsic).unwrap();
            assert_eq!(d, bound);
        }
    }

    #[test]
    fn sq222_component_has_12_states() {
        let g = BoardGeometry::square(2, 2).unwrap();
        let c = Configuration::from_labels(g, &[pos(0, 0), pos(0, 1)]).unwrap();
        let graph = enumerate_component(&c, StepRelation::SingleMove, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(graph.len(), 12);
    }

    #[test]
    fn isolated_hex_state_is_alone() {
        // All-isolated holes: component of size one.
        let g = BoardGeometry::hexagon(3, 3).unwrap();
        let mut occ: Vec<Position> = g.all_positions().collect();
        occ.retain(|p| *p != pos(0, 0) && *p != pos(1, 1) && *p != pos(2, 2));
        let c = Configuration::from_occupied(g, &occ).unwrap();
        assert!(c.all_holes_isolated());
        let graph = enumerate_component(&c, StepRelation::Parallel, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(graph.len(), 1);
    }

    #[test]
    fn intrinsic_distance_examples() {
        let g = BoardGeometry::square(1, 2).unwrap();
        let a = Configuration::from_labels(g, &[pos(0, 0)]).unwrap();
        let b = Configuration::from_labels(g, &[pos(0, 1)]).unwrap();
        assert_eq!(intrinsic_distance(&a, &a, MetricKind::L1Intrinsic, 1000).unwrap(), Some(0));
        assert_eq!(intrinsic_distance(&a, &b, MetricKind::L1Intrinsic, 1000).unwrap(), Some(1));

        // A hexagon pair one legal move apart has parallel distance 1.
        let gh = BoardGeometry::hexagon(4, 3).unwrap();
        let mut occ: Vec<Position> = gh.all_positions().collect();
        occ.retain(|p| *p != pos(1, 1) && *p != pos(1, 2));
        let c = Configuration::from_occupied(gh, &occ).unwrap();
        let mut occ2: Vec<Position> = gh.all_positions().collect();
        occ2.retain(|p| *p != pos(2, 1) && *p != pos(1, 2));
        let d = Configuration::from_occupied(gh, &occ2).unwrap();
        assert_eq!(
            intrinsic_distance(&c, &d, MetricKind::LinfIntrinsic, DEFAULT_STATE_CAP).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn linf_at_most_l1_at_most_n_linf() {
        let g = BoardGeometry::square(2, 3).unwrap();
        let a = Configuration::from_labels(g, &[pos(0, 0), pos(1, 2)]).unwrap();
        let b = Configuration::from_labels(g, &[pos(1, 1), pos(0, 2)]).unwrap();
        let l1 = intrinsic_distance(&a, &b, MetricKind::L1Intrinsic, 100_000).unwrap().unwrap();
        let linf = intrinsic_distance(&a, &b, MetricKind::LinfIntrinsic, 100_000).unwrap().unwrap();
        assert!(linf <= l1);
        assert!(l1 <= 2 * linf);
        let ext = extrinsic_distance(&a, &b, MetricKind::LinfExtrinsic).unwrap();
        assert!(ext as u32 <= linf);
    }

    #[test]
    fn diameter_trivial_and_small() {
        let spec = SpaceSpec { geom: BoardGeometry::square(1, 2).unwrap(), n: 1, labeled: true };
        let rep = intrinsic_diameter(&spec, MetricKind::L1Intrinsic, 1000).unwrap();
        assert_eq!(rep.diameter, 1);
        assert_eq!(rep.states, 2);
        assert_eq!(rep.components, 1);

        let spec2 = SpaceSpec { geom: BoardGeometry::square(2, 2).unwrap(), n: 2, labeled: true };
        let rep2 = intrinsic_diameter(&spec2, MetricKind::L1Intrinsic, 10_000).unwrap();
        assert_eq!(rep2.states, 12);
        assert_eq!(rep2.components, 1);
        // Golden value, frozen after the first exhaustive computation.
        assert_eq!(rep2.diameter, 4);
    }

    #[test]
    fn cap_refusal() {
        let spec = SpaceSpec { geom: BoardGeometry::square(6, 6).unwrap(), n: 18, labeled: true };
        match intrinsic_diameter(&spec, MetricKind::L1Intrinsic, 1000) {
            Err(Error::CapExceeded { .. }) => {}
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn hex_census_one_hole_all_isolated() {
        let spec = SpaceSpec { geom: BoardGeometry::hexagon(2, 2).unwrap(), n: 3, labeled: false };
        let rep = census_hex_components(&spec, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(rep.mobile_states, 0);
        assert!(rep.isolated_have_degree_zero);
    }

    #[test]
    fn hex_census_3x3() {
        let spec = SpaceSpec { geom: BoardGeometry::hexagon(3, 3).unwrap(), n: 3, labeled: false };
        let rep = census_hex_components(&spec, DEFAULT_STATE_CAP).unwrap();
        assert!(rep.one_large_component);
        assert!(rep.isolated_have_degree_zero);
        assert_eq!(rep.states, rep.mobile_states + rep.isolated_states);
    }

    #[test]
    fn oracle_moves_agree_with_validation() {
        use crate::moves::validate_step;
        use rand::rngs::StdRng;
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = StdRng::seed_from_u64(13);
        for kind in [BoardKind::Square, BoardKind::Hexagon] {
            for _ in 0..200 {
                let g = BoardGeometry::new(kind, 3, 3).unwrap();
                let mut cells: Vec<Position> = g.all_positions().collect();
                cells.shuffle(&mut rng);
                let c = Configuration::from_occupied(g, &cells[..5]).unwrap();
                for mv in legal_moves(&c) {
                    assert!(validate_step(&c, &ParallelStep::single(mv)).is_ok());
                }
                // Some random non-listed move should fail validation.
                let listed = legal_moves(&c);
                for p in g.all_positions() {
                    for q in g.neighbors(p).unwrap() {
                        let mv = match kind {
                            BoardKind::Square => AtomicMove::square(p, q),
                            BoardKind::Hexagon => {
                                // A candidate pair: q plus one of q's neighbors.
                                let other = g.neighbors(q).unwrap()[0];
                                if other == p {
                                    continue;
                                }
                                AtomicMove::hex(p, q, other)
                            }
                        };
                        let legal = validate_step(&c, &ParallelStep::single(mv)).is_ok();
                        assert_eq!(legal, listed.contains(&mv), "{mv} on\n{c}");
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_successors_contain_single_moves() {
        let g = BoardGeometry::square(2, 3).unwrap();
        let c = holes_first(g, 2, Ordering::RowMajor).unwrap();
        let singles = successors(&c, StepRelation::SingleMove);
        let parallels = successors(&c, StepRelation::Parallel);
        for s in &singles {
            assert!(parallels.contains(s));
        }
        assert!(parallels.len() >= singles.len());
    }
}
