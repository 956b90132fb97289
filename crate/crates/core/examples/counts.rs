//! Prints the number of graphs per order, overall and within each class.
//!
//! `cargo run --release -p reed-core --example counts -- 8`

use std::time::Instant;

use reed_core::{registry, Levels};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let start = Instant::now();
    let all = Levels::build(n_max, None).expect("order within limit");
    let counts: Vec<usize> = (1..=n_max).map(|n| all.level(n).len()).collect();
    println!("all graphs: {counts:?} ({:.1?})", start.elapsed());
    for class in registry() {
        let start = Instant::now();
        let levels = Levels::build(n_max, Some(class)).expect("order within limit");
        let counts: Vec<usize> = (1..=n_max).map(|n| levels.level(n).len()).collect();
        println!("{}: {counts:?} ({:.1?})", class.name, start.elapsed());
    }
}
