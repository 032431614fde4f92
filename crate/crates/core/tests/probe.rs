use slidesort::board::*;
use slidesort::config::*;
use slidesort::hex::sort_with_six_holes;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use std::time::Instant;

#[test]
fn probe_8x16_warm() {
    let mut rng = StdRng::seed_from_u64(99);
    let g = BoardGeometry::hexagon(8, 16).unwrap();
    let n = 8 * 16 - 6;
    let mk = |rng: &mut StdRng| loop {
        let mut cells: Vec<Position> = g.all_positions().collect();
        cells.shuffle(rng);
        let c = Configuration::from_labels(g, &cells[..n]).unwrap();
        if !c.all_holes_isolated() { break c; }
    };
    let a = mk(&mut rng);
    let b = mk(&mut rng);
    let _warm = sort_with_six_holes(&a, &b).unwrap(); // includes one-time BFS
    let t0 = Instant::now();
    let a2 = mk(&mut rng);
    let b2 = mk(&mut rng);
    let t = sort_with_six_holes(&a2, &b2).unwrap();
    println!("warm 8x16 sort: {} moves in {:?}", t.move_count(), t0.elapsed());
    assert_eq!(t.apply().unwrap(), b2);
}
