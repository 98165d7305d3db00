//! Apex verdicts and apex vertices.

use apexion::apex::{apex_vertices, classify_apex, ApexVerdict};
use apexion::named;

fn main() {
    let cases = [
        ("K5", named::complete(5)),
        ("K6", named::complete(6)),
        ("K3,3,1", named::complete_multipartite(&[3, 3, 1])),
        ("icosahedron", named::icosahedron()),
        ("cone over icosahedron", named::cone_over_icosahedron()),
        (
            "K5 + K5",
            named::complete(5)
                .disjoint_union(&named::complete(5))
                .unwrap(),
        ),
    ];
    for (name, g) in cases {
        let verdict = classify_apex(&g);
        let detail = match verdict {
            ApexVerdict::Apex { .. } => {
                let vs: Vec<usize> = apex_vertices(&g).unwrap().iter().collect();
                format!("apex vertices {vs:?}")
            }
            _ => String::new(),
        };
        println!("{name:>22}  {verdict:?} {detail}");
    }
}
