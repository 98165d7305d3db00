//! Encode a few graphs to graph6, decode them back, and read a stream.

use std::io::Cursor;

use apexion::graph6::{self, OnError};
use apexion::named;

fn main() {
    for (name, g) in [
        ("K1", named::complete(1)),
        ("K2", named::complete(2)),
        ("K6", named::complete(6)),
        ("Petersen", named::petersen()),
    ] {
        let text = graph6::encode(&g);
        let back = graph6::decode(&text).expect("own output decodes");
        assert_eq!(back, g);
        println!("{name:>9}  {text}");
    }

    let stream = ">>graph6<<A_\n\nC~\nnot-graph6\nDQc\n";
    let report = graph6::read_stream(Cursor::new(stream), OnError::Skip).unwrap();
    println!(
        "stream: {} graphs read, {} lines skipped",
        report.graphs.len(),
        report.skipped.len()
    );
    match graph6::decode("C~~") {
        Ok(_) => unreachable!(),
        Err(e) => println!("\"C~~\" rejected: {e}"),
    }
}
