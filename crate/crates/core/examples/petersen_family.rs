//! The delta-wye closure of K6 and its MMNA check.

use apexion::graph6;
use apexion::mmna::is_mmna;
use apexion::named;
use apexion::transforms::{dy_closure, ClosureCaps};

fn main() {
    let family = dy_closure(&[named::complete(6)], ClosureCaps::default());
    println!("{} graphs in the closure of K6", family.len());
    for g in &family {
        println!(
            "  n={:<2} e={}  {:<12} {:?}",
            g.order(),
            g.size(),
            graph6::encode(g),
            is_mmna(g)
        );
    }
}
