//! Delta-wye and wye-delta moves, and the closure of a graph set under both.

use std::collections::VecDeque;

use crate::canon::{self, CanonicalForm, DedupStore};
use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_ORDER};

/// Replaces triangle `abc` by a new vertex (index `order`) joined to `a`, `b`, `c`.
pub fn delta_wye(g: &SmallGraph, triangle: [usize; 3]) -> Result<SmallGraph> {
    let [a, b, c] = triangle;
    let n = g.order();
    let distinct = a != b && b != c && a != c;
    if !distinct || !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(Error::NotTriangle(triangle));
    }
    if n == MAX_ORDER {
        return Err(Error::OrderOutOfRange(n + 1));
    }
    let mut rows = g.rows().to_vec();
    rows.push(0);
    let mut out = SmallGraph::from_rows(&rows)?;
    out.clear_edge(a, b);
    out.clear_edge(b, c);
    out.clear_edge(a, c);
    for x in triangle {
        out.set_edge(n, x);
    }
    debug_assert_eq!(out.size(), g.size());
    Ok(out)
}

/// Deletes the degree-3 vertex `v` and joins its neighbours pairwise.
/// Neighbour pairs that are already adjacent collapse, so the size can drop.
pub fn wye_delta(g: &SmallGraph, v: usize) -> Result<SmallGraph> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    if g.degree(v) != 3 {
        return Err(Error::NotDegreeThree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let nb: Vec<usize> = g.neighbors(v).iter().collect();
    let mut out = *g;
    out.set_edge(nb[0], nb[1]);
    out.set_edge(nb[1], nb[2]);
    out.set_edge(nb[0], nb[2]);
    out.delete_vertex(v)
}

/// Limits for [`dy_closure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCaps {
    pub max_order: usize,
    pub max_size: usize,
    /// Also follow wye-delta moves whose neighbours were already adjacent
    /// (these lose edges).
    pub allow_collapse: bool,
}

impl Default for ClosureCaps {
    fn default() -> Self {
        ClosureCaps {
            max_order: MAX_ORDER,
            max_size: MAX_ORDER * (MAX_ORDER - 1) / 2,
            allow_collapse: false,
        }
    }
}

/// Breadth-first closure of `seeds` under both moves, one graph per
/// isomorphism class, sorted by canonical key. Returned graphs are the
/// canonical relabellings. Seeds outside the caps are dropped.
pub fn dy_closure(seeds: &[SmallGraph], caps: ClosureCaps) -> Vec<SmallGraph> {
    let within = |g: &SmallGraph| g.order() <= caps.max_order && g.size() <= caps.max_size;
    let mut seen = DedupStore::default();
    let mut queue = VecDeque::new();
    let mut next_index = 0u64;
    let mut visit = |g: SmallGraph, seen: &mut DedupStore, queue: &mut VecDeque<SmallGraph>| {
        if !within(&g) {
            return;
        }
        let canonical = canon::canonical_graph(&g);
        let key = CanonicalForm::from(&canonical);
        if seen.insert_keyed(key, next_index, canonical) {
            queue.push_back(canonical);
        }
        next_index += 1;
    };
    for &s in seeds {
        visit(s, &mut seen, &mut queue);
    }
    while let Some(g) = queue.pop_front() {
        if g.order() < MAX_ORDER {
            for t in g.triangles() {
                visit(delta_wye(&g, t).unwrap(), &mut seen, &mut queue);
            }
        }
        for v in g.degree3_vertices() {
            let nb = g.neighbors(v);
            let collapses = nb
                .iter()
                .any(|x| !g.neighbors(x).intersection(nb).is_empty());
            if collapses && !caps.allow_collapse {
                continue;
            }
            if g.order() > 1 {
                visit(wye_delta(&g, v).unwrap(), &mut seen, &mut queue);
            }
        }
    }
    seen.into_sorted()
}

/// The vertex added by [`delta_wye`].
pub fn new_vertex(g: &SmallGraph) -> usize {
    g.order() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::named;

    #[test]
    fn delta_wye_examples() {
        let k4 = named::complete(4);
        let g = delta_wye(&k4, [0, 1, 2]).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        let k6 = named::complete(6);
        let g = delta_wye(&k6, [0, 1, 2]).unwrap();
        assert_eq!((g.order(), g.size()), (7, 15));
        let mut degrees: Vec<usize> = g.vertices().iter().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 4, 4, 4, 5, 5, 5]);
        let star = delta_wye(&named::complete(3), [0, 1, 2]).unwrap();
        assert!(are_isomorphic(&star, &named::complete_bipartite(1, 3)));
        assert!(matches!(
            delta_wye(&named::path(3), [0, 1, 2]),
            Err(Error::NotTriangle(_))
        ));
    }

    #[test]
    fn wye_delta_examples() {
        let star = named::complete_bipartite(1, 3);
        assert_eq!(wye_delta(&star, 0).unwrap(), named::complete(3));
        let p = wye_delta(&named::petersen(), 0).unwrap();
        assert_eq!((p.order(), p.size()), (9, 15));
        let k4 = wye_delta(&named::complete(4), 2).unwrap();
        assert_eq!(k4, named::complete(3));
        assert!(matches!(
            wye_delta(&named::complete(5), 0),
            Err(Error::NotDegreeThree { degree: 4, .. })
        ));
    }

    #[test]
    fn round_trip() {
        let k6 = named::complete(6);
        for t in k6.triangles() {
            let y = delta_wye(&k6, t).unwrap();
            let back = wye_delta(&y, new_vertex(&y)).unwrap();
            assert!(are_isomorphic(&back, &k6));
        }
    }

    #[test]
    fn closure_examples() {
        let family = dy_closure(&[named::complete(6)], ClosureCaps::default());
        assert_eq!(family.len(), 7);
        assert!(family.iter().all(|g| g.size() == 15));
        let mut orders: Vec<usize> = family.iter().map(|g| g.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![6, 7, 7, 8, 8, 9, 10]);
        assert!(family.iter().any(|g| are_isomorphic(g, &named::petersen())));
        let k133 = named::complete_multipartite(&[1, 3, 3]);
        assert!(family.iter().any(|g| are_isomorphic(g, &k133)));

        let tri = dy_closure(&[named::complete(3)], ClosureCaps::default());
        assert_eq!(tri.len(), 2);
        assert!(dy_closure(&[], ClosureCaps::default()).is_empty());
    }

    #[test]
    fn collapsing_moves_leave_the_family() {
        let caps = ClosureCaps {
            allow_collapse: true,
            ..ClosureCaps::default()
        };
        // K4 only has collapsing wye-delta moves.
        let plain = dy_closure(&[named::complete(4)], ClosureCaps::default());
        let wide = dy_closure(&[named::complete(4)], caps);
        assert!(wide.len() > plain.len());
    }

    #[test]
    fn caps_bound_the_closure() {
        let caps = ClosureCaps {
            max_order: 8,
            ..ClosureCaps::default()
        };
        let family = dy_closure(&[named::complete(6)], caps);
        assert_eq!(family.len(), 5);
    }
}
