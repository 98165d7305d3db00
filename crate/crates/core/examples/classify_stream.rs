//! Split a graph6 stream by apex verdict.
//!
//! Usage: `cargo run --release --example classify_stream < graphs.g6`

use std::io::{self, BufReader};

use apexion::graph6::{self, OnError};
use apexion::pipeline::classify_graphs;

fn main() {
    let report = graph6::read_stream(BufReader::new(io::stdin()), OnError::Skip).unwrap();
    let r = classify_graphs(&report.graphs);
    println!("planar:{}", r.planar.len());
    println!("apex:{}", r.apex.len());
    println!("nonapex:{}", r.nonapex.len());
    for g in &r.nonapex {
        println!("  {}", graph6::encode(g));
    }
}
