//! Constructors for the graphs that keep showing up: complete graphs,
//! complete multipartite graphs, cycles, Petersen, the icosahedron and its cone.

use crate::graph::{SmallGraph, VertexSet};

/// `K_n`. Panics if `n` is outside `1..=31`.
pub fn complete(n: usize) -> SmallGraph {
    let mut g = SmallGraph::empty(n).expect("order in range");
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    g
}

/// Complete multipartite graph with the given part sizes, parts laid out consecutively.
pub fn complete_multipartite(parts: &[usize]) -> SmallGraph {
    let n: usize = parts.iter().sum();
    let mut g = SmallGraph::empty(n).expect("order in range");
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.set_edge(u, v);
            }
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> SmallGraph {
    complete_multipartite(&[a, b])
}

pub fn path(n: usize) -> SmallGraph {
    let mut g = SmallGraph::empty(n).expect("order in range");
    for v in 1..n {
        g.set_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> SmallGraph {
    assert!(n >= 3);
    let mut g = path(n);
    g.set_edge(0, n - 1);
    g
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i - i+5`.
pub fn petersen() -> SmallGraph {
    let mut g = SmallGraph::empty(10).unwrap();
    for i in 0..5 {
        g.set_edge(i, (i + 1) % 5);
        g.set_edge(5 + i, 5 + (i + 2) % 5);
        g.set_edge(i, i + 5);
    }
    g
}

/// The icosahedral graph: two poles (0 and 11) and two staggered pentagons.
pub fn icosahedron() -> SmallGraph {
    let mut g = SmallGraph::empty(12).unwrap();
    for i in 0..5 {
        let upper = 1 + i;
        let lower = 6 + i;
        g.set_edge(0, upper);
        g.set_edge(11, lower);
        g.set_edge(upper, 1 + (i + 1) % 5);
        g.set_edge(lower, 6 + (i + 1) % 5);
        g.set_edge(upper, lower);
        g.set_edge(upper, 6 + (i + 4) % 5);
    }
    g
}

/// `K_1 * g`: a new last vertex joined to every vertex of `g`.
pub fn cone(g: &SmallGraph) -> SmallGraph {
    let n = g.order();
    let mut rows: Vec<u32> = g.rows().to_vec();
    for r in rows.iter_mut() {
        *r |= 1 << n;
    }
    rows.push(VertexSet::full(n).0);
    SmallGraph::from_rows(&rows).expect("cone fits capacity")
}

/// `K_1 * Ic`, order 13 and size 42; the cone vertex has index 12.
pub fn cone_over_icosahedron() -> SmallGraph {
    cone(&icosahedron())
}
