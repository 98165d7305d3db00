//! Canonical labelling, isomorphism tests and automorphisms.

use apexion::canon::{self, canonical_form};
use apexion::named;

fn main() {
    let p = named::petersen();
    let perm: Vec<usize> = vec![3, 7, 1, 9, 0, 5, 2, 8, 4, 6];
    let q = p.permute(&perm).unwrap();
    println!("petersen        {}", canonical_form(&p));
    println!("relabelled      {}", canonical_form(&q));
    println!("isomorphic: {}", canon::are_isomorphic(&p, &q));

    let labeling = canon::canonical_labeling(&p);
    println!(
        "automorphism generators found while labelling: {}",
        labeling.automorphisms.len()
    );

    let graphs = vec![
        named::complete(6),
        q,
        named::complete(6),
        p,
        named::cycle(5),
    ];
    let reps = canon::dedup(graphs);
    println!("{} graphs up to isomorphism", reps.len());
}
