//! Exhaustive MMNA search for small orders: enumerate every graph with
//! minimum degree 3 in the admissible size range, then run the cascade.
//!
//! Usage: `cargo run --release --example cascade_table -- [MAX_ORDER]`

use apexion::enumerate::{enumerate_all, EnumSpec};
use apexion::pipeline::{run_cascade, CascadeConfig, CountTable};

fn main() {
    let max_order: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("order"))
        .unwrap_or(8);
    let mut table = CountTable::new();
    for n in 6..=max_order {
        // K6 sits one edge above 4n - 10.
        let max_size = (4 * n - 10).max(15);
        let spec = EnumSpec::new(n)
            .sizes((3 * n).div_ceil(2), max_size)
            .min_degree(3);
        let seeds = enumerate_all(&spec).unwrap();
        let report = run_cascade(&seeds, &CascadeConfig::default()).unwrap();
        println!("n={n}: {} seeds, {} MMNA", seeds.len(), report.mmna.len());
        for ((n, e), c) in report.table.cells() {
            table.add(n, e, c);
        }
    }
    print!("{}", table.render());
}
