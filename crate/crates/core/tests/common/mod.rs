//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library beyond reading adjacency.

#![allow(dead_code)]

use apexion::SmallGraph;

pub fn adjacency(g: &SmallGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// graph6 for orders below 63, written straight from the format description.
pub fn graph6_reference(g: &SmallGraph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for &b in chunk {
            x = (x << 1) | b as u8;
        }
        out.push((x + 63) as char);
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (x, y) = (adjacency(a), adjacency(b));
    let n = a.order();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| (0..n).all(|v| x[u][v] == y[p[u]][p[v]])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

pub fn connected_within(g: &SmallGraph, allowed: &[bool]) -> bool {
    let n = g.order();
    let Some(start) = (0..n).find(|&v| allowed[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if allowed[v] && !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| !allowed[v] || seen[v])
}

pub fn is_2_connected(g: &SmallGraph) -> bool {
    let n = g.order();
    if n < 3 || !connected_within(g, &vec![true; n]) {
        return false;
    }
    (0..n).all(|x| {
        let allowed: Vec<bool> = (0..n).map(|v| v != x).collect();
        connected_within(g, &allowed)
    })
}

/// Checks that `sets` is a model of the complete graph on `sets.len()` vertices
/// (or of `pattern` when given): nonempty, disjoint, connected, and adjacent
/// wherever the pattern has an edge.
pub fn check_model(g: &SmallGraph, sets: &[Vec<usize>], pattern: &SmallGraph) -> bool {
    let n = g.order();
    if sets.len() != pattern.order() {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return false;
        }
        for &v in s {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        let allowed: Vec<bool> = (0..n).map(|v| owner[v] == i).collect();
        if !connected_within(g, &allowed) {
            return false;
        }
    }
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if pattern.has_edge(a, b)
                && !sets[a]
                    .iter()
                    .any(|&u| sets[b].iter().any(|&v| g.has_edge(u, v)))
            {
                return false;
            }
        }
    }
    true
}

pub fn min_degree(g: &SmallGraph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}
