fn main() { println!("slidesort"); }
