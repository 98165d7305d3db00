//! Sampled K6-minor audit of 6-regular 2-connected graphs on 13 vertices.
//!
//! Usage: `cargo run --release --example k6_audit -- [COUNT] [SEED]`

use apexion::pipeline::k6_audit;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("number"));
    let count = args.next().unwrap_or(20) as usize;
    let seed = args.next().unwrap_or(0);
    let r = k6_audit(count, seed).unwrap();
    println!("{}/{} samples have a K6 minor", r.with_k6, r.sampled);
    println!(
        "control (cone over icosahedron): {:?}, K6 minor: {}",
        r.control_apex, r.control_has_k6
    );
    println!("passed: {}", r.passed());
}
