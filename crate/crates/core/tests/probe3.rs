use slidesort::board::*;
use slidesort::config::*;

#[test]
fn probe_trio_space() {
    // Reproduce the retrieval trio walk manually via the oracle:
    // holes = pair near the lone + frozen prefix; can the trio reach the targets?
    let g = BoardGeometry::hexagon(4, 8).unwrap();
    // frozen: col0 full + (0,1),(1,1). trio: walked pair + lone, say {(0,3),(1,3),(0,4)}.
    let mut holes: Vec<Position> = Vec::new();
    for r in 0..4 { holes.push(pos(r, 0)); }
    holes.push(pos(0,1)); holes.push(pos(1,1));
    holes.extend([pos(0,3), pos(1,3), pos(0,4)]);
    let occ: Vec<Position> = g.all_positions().filter(|p| !holes.contains(p)).collect();
    let c = Configuration::from_occupied(g, &occ).unwrap();
    // target configuration: frozen same, trio at {(2,1),(3,1),(0,2)}
    let mut holes2: Vec<Position> = Vec::new();
    for r in 0..4 { holes2.push(pos(r, 0)); }
    holes2.push(pos(0,1)); holes2.push(pos(1,1));
    holes2.extend([pos(2,1), pos(3,1), pos(0,2)]);
    let occ2: Vec<Position> = g.all_positions().filter(|p| !holes2.contains(p)).collect();
    let target = Configuration::from_occupied(g, &occ2).unwrap();
    // oracle reachability (single moves, any holes may move)
    let d = slidesort::oracle::intrinsic_distance(&c.unlabeled(), &target.unlabeled(), slidesort::oracle::MetricKind::L1Intrinsic, 50_000_000);
    println!("oracle distance: {:?}", d);
}
