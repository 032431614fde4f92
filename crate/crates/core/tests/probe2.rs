use slidesort::board::*;
use slidesort::config::*;
use slidesort::hex::hex_push;
use slidesort::region::RegionRef;

#[test]
fn probe_a8b1() {
    let g = BoardGeometry::hexagon(4, 8).unwrap();
    let mut holes: Vec<Position> = Vec::new();
    for c in 0..2 { for r in 0..4 { holes.push(pos(r, c)); } }
    holes.push(pos(0, 4));
    let occ: Vec<Position> = g.all_positions().filter(|p| !holes.contains(p)).collect();
    let c = Configuration::from_occupied(g, &occ).unwrap();
    println!("start:\n{c}");
    match hex_push(&c, RegionRef::full(4, 8), true, 0) {
        Ok(t) => println!("ok {} steps\n{}", t.step_count(), t.apply().unwrap()),
        Err(e) => println!("ERR {e}"),
    }
}
