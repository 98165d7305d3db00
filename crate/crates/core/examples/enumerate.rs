//! Count graphs of a given order up to isomorphism.
//!
//! Usage: `cargo run --release --example enumerate -- [ORDER] [MIN_DEGREE]`

use apexion::enumerate::{enumerate_all, EnumSpec};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("number"));
    let order = args.next().unwrap_or(7);
    let min_degree = args.next().unwrap_or(0);
    let graphs = enumerate_all(&EnumSpec::new(order).min_degree(min_degree)).unwrap();
    let mut by_size = std::collections::BTreeMap::new();
    for g in &graphs {
        *by_size.entry(g.size()).or_insert(0usize) += 1;
    }
    println!(
        "order {order}, min degree {min_degree}: {} graphs",
        graphs.len()
    );
    for (e, c) in by_size {
        println!("  e={e:<3} {c}");
    }
    let connected = graphs.iter().filter(|g| g.is_connected()).count();
    println!("  connected: {connected}");
}
