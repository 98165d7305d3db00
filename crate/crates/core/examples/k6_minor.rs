//! K6-minor search with checked branch sets.

use apexion::enumerate::random_regular;
use apexion::minor::{has_k6_minor, has_minor};
use apexion::named;

fn main() {
    let k6 = named::complete(6);
    let g = random_regular(13, 6, 42).unwrap();
    match has_k6_minor(&g) {
        Some(model) => {
            println!("random 6-regular graph on 13 vertices has a K6 minor:");
            for (i, set) in model.sets.iter().enumerate() {
                println!("  branch set {i}: {:?}", set.iter().collect::<Vec<_>>());
            }
            println!("  witness valid: {}", model.is_valid(&g, &k6));
        }
        None => println!("no K6 minor (unexpected)"),
    }

    let cone = named::cone_over_icosahedron();
    println!(
        "cone over icosahedron: n={} e={} K6 minor={}",
        cone.order(),
        cone.size(),
        has_k6_minor(&cone).is_some()
    );

    let p = named::petersen();
    println!(
        "Petersen: K5 minor={} K3,3 minor={}",
        has_minor(&p, &named::complete(5)).is_some(),
        has_minor(&p, &named::complete_bipartite(3, 3)).is_some()
    );
}
