//! Left-right planarity test against a few named graphs.

use apexion::named;
use apexion::planarity::{is_planar, planarity_oracle};

fn main() {
    let cases = [
        ("K4", named::complete(4)),
        ("K5", named::complete(5)),
        ("K3,3", named::complete_bipartite(3, 3)),
        ("icosahedron", named::icosahedron()),
        ("Petersen", named::petersen()),
        ("cone over icosahedron", named::cone_over_icosahedron()),
    ];
    for (name, g) in cases {
        let oracle = planarity_oracle(&g)
            .map(|b| b.to_string())
            .unwrap_or_else(|_| "too large".into());
        println!(
            "{name:>22}  n={:<2} e={:<2} planar={:<5} minor oracle={oracle}",
            g.order(),
            g.size(),
            is_planar(&g)
        );
    }
}
