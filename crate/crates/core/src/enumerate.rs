//! Exhaustive generation of small graphs up to isomorphism, plus seeded
//! random samplers.
//!
//! Generation is canonical augmentation by edges. Every graph `H` with at
//! least one edge has a designated edge `e*(H)` chosen from an isomorphism
//! invariant (endpoint degrees, then canonical labels), and `H` is accepted as
//! a child of `G = H - e` only when `H - e` and `H - e*` are isomorphic. Each
//! class therefore has exactly one parent class; isomorphic siblings are
//! merged by canonical form. No global visited set is kept.

use std::collections::HashSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{self, Labeling};
use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_ORDER};

/// Largest order accepted for exhaustive generation.
pub const EXHAUSTIVE_BUDGET: usize = 12;

/// Tree depth (in edges) up to which children are expanded in parallel.
const PARALLEL_DEPTH: usize = 6;

/// What to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub order: usize,
    pub min_size: usize,
    pub max_size: usize,
    pub min_degree: usize,
    pub connected_only: bool,
}

impl EnumSpec {
    /// All graphs of the given order.
    pub fn new(order: usize) -> Self {
        EnumSpec {
            order,
            min_size: 0,
            max_size: order * order.saturating_sub(1) / 2,
            min_degree: 0,
            connected_only: false,
        }
    }

    pub fn sizes(mut self, min: usize, max: usize) -> Self {
        self.min_size = min;
        self.max_size = max;
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn connected_only(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 || self.order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(self.order));
        }
        if self.order > EXHAUSTIVE_BUDGET {
            return Err(Error::EnumerationBudget {
                order: self.order,
                budget: EXHAUSTIVE_BUDGET,
            });
        }
        let full = self.order * (self.order - 1) / 2;
        if self.max_size > full {
            return Err(Error::Infeasible(format!(
                "max size {} exceeds {} for order {}",
                self.max_size, full, self.order
            )));
        }
        Ok(())
    }

    pub fn accepts(&self, g: &SmallGraph) -> bool {
        let m = g.size();
        g.order() == self.order
            && (self.min_size..=self.max_size).contains(&m)
            && g.min_degree() >= self.min_degree
            && (!self.connected_only || g.is_connected())
    }

    /// Can some supergraph with at most `max_size` edges reach the minimum degree?
    /// Each added edge lowers the total degree deficit by at most two.
    fn reachable(&self, g: &SmallGraph) -> bool {
        if self.min_degree == 0 {
            return true;
        }
        let deficit: usize = g
            .rows()
            .iter()
            .map(|r| self.min_degree.saturating_sub(r.count_ones() as usize))
            .sum();
        deficit <= 2 * (self.max_size - g.size())
    }
}

/// Every graph matching `spec`, one per isomorphism class, as canonical
/// relabellings, in a deterministic order.
pub fn enumerate_all(spec: &EnumSpec) -> Result<Vec<SmallGraph>> {
    spec.validate()?;
    let root = Node::new(SmallGraph::empty(spec.order)?);
    Ok(expand(spec, &root))
}

/// Sequential streaming variant of [`enumerate_all`]; same graphs, same order.
pub fn for_each_graph<F>(spec: &EnumSpec, mut f: F) -> Result<()>
where
    F: FnMut(SmallGraph),
{
    spec.validate()?;
    fn walk<F: FnMut(SmallGraph)>(spec: &EnumSpec, node: &Node, f: &mut F) {
        if spec.accepts(&node.graph) {
            f(node.labeling.graph);
        }
        for child in children(spec, node) {
            walk(spec, &child, f);
        }
    }
    walk(spec, &Node::new(SmallGraph::empty(spec.order)?), &mut f);
    Ok(())
}

struct Node {
    graph: SmallGraph,
    labeling: Labeling,
}

impl Node {
    fn new(graph: SmallGraph) -> Self {
        Node {
            labeling: canon::canonical_labeling(&graph),
            graph,
        }
    }
}

fn expand(spec: &EnumSpec, node: &Node) -> Vec<SmallGraph> {
    let mut out = Vec::new();
    if spec.accepts(&node.graph) {
        out.push(node.labeling.graph);
    }
    let kids = children(spec, node);
    if node.graph.size() < PARALLEL_DEPTH {
        let parts: Vec<Vec<SmallGraph>> = kids.par_iter().map(|c| expand(spec, c)).collect();
        out.extend(parts.into_iter().flatten());
    } else {
        for c in &kids {
            out.extend(expand(spec, c));
        }
    }
    out
}

/// Key used to pick the designated edge: larger endpoint degree, then smaller.
#[inline]
fn edge_invariant(g: &SmallGraph, u: usize, v: usize) -> (usize, usize) {
    let (a, b) = (g.degree(u), g.degree(v));
    (a.max(b), a.min(b))
}

fn children(spec: &EnumSpec, node: &Node) -> Vec<Node> {
    let g = &node.graph;
    let n = g.order();
    if g.size() >= spec.max_size {
        return Vec::new();
    }
    let orbit_rep = non_edge_orbit_representatives(g, &node.labeling);
    let parent_canon = node.labeling.graph;
    let mut siblings: HashSet<SmallGraph> = HashSet::new();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) || !orbit_rep[u * MAX_ORDER + v] {
                continue;
            }
            let mut h = *g;
            h.set_edge(u, v);
            if !spec.reachable(&h) {
                continue;
            }
            let inv = edge_invariant(&h, u, v);
            let mut best = inv;
            let mut ties = 0;
            for e in h.edges() {
                let k = edge_invariant(&h, e.u(), e.v());
                if k > best {
                    best = k;
                    break;
                }
                if k == inv {
                    ties += 1;
                }
            }
            if best > inv {
                continue;
            }
            let labeling = canon::canonical_labeling(&h);
            if ties > 1 && !is_designated(&h, &labeling, (u, v), inv, &parent_canon) {
                continue;
            }
            if siblings.insert(labeling.graph) {
                out.push(Node { graph: h, labeling });
            }
        }
    }
    out
}

/// Is `added` equivalent to the designated edge of `h`?
fn is_designated(
    h: &SmallGraph,
    labeling: &Labeling,
    added: (usize, usize),
    inv: (usize, usize),
    parent_canon: &SmallGraph,
) -> bool {
    let perm = &labeling.perm;
    let canonical_pair = |u: usize, v: usize| {
        let (a, b) = (perm[u], perm[v]);
        (a.min(b), a.max(b))
    };
    let designated = h
        .edges()
        .filter(|e| edge_invariant(h, e.u(), e.v()) == inv)
        .max_by_key(|e| canonical_pair(e.u(), e.v()))
        .unwrap();
    let (du, dv) = (designated.u(), designated.v());
    if (du, dv) == added {
        return true;
    }
    // Known automorphisms may already map the designated edge onto `added`.
    for gamma in &labeling.automorphisms {
        let (a, b) = (gamma[du] as usize, gamma[dv] as usize);
        if (a.min(b), a.max(b)) == added {
            return true;
        }
    }
    let mut parent = *h;
    parent.clear_edge(du, dv);
    canon::canonical_graph(&parent) == *parent_canon
}

/// Marks one non-edge per orbit of the known automorphisms of `g`.
fn non_edge_orbit_representatives(g: &SmallGraph, labeling: &Labeling) -> Vec<bool> {
    let n = g.order();
    let mut keep = vec![false; MAX_ORDER * MAX_ORDER];
    for u in 0..n {
        for v in u + 1..n {
            keep[u * MAX_ORDER + v] = !g.has_edge(u, v);
        }
    }
    if labeling.automorphisms.is_empty() {
        return keep;
    }
    // Union-find over vertex pairs.
    let mut parent: Vec<usize> = (0..MAX_ORDER * MAX_ORDER).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for gamma in &labeling.automorphisms {
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (gamma[u] as usize, gamma[v] as usize);
                let img = a.min(b) * MAX_ORDER + a.max(b);
                let (x, y) = (find(&mut parent, u * MAX_ORDER + v), find(&mut parent, img));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let p = u * MAX_ORDER + v;
            if keep[p] && find(&mut parent, p) != p {
                keep[p] = false;
            }
        }
    }
    keep
}

/// A uniformly random labelled graph with `n` vertices and `e` edges.
pub fn random_graph(n: usize, e: usize, seed: u64) -> Result<SmallGraph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if e > pairs.len() {
        return Err(Error::Infeasible(format!(
            "{e} edges on {n} vertices (max {})",
            pairs.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = index::sample(&mut rng, pairs.len(), e);
    SmallGraph::from_edges(n, picked.iter().map(|i| pairs[i]))
}

/// A random `d`-regular graph on `n` vertices.
///
/// Starts from a circulant and applies `100 * n * d` random degree-preserving
/// double-edge swaps. Reproducible from `seed`; not exactly uniform.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<SmallGraph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    if d >= n || (n * d) % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "no {d}-regular graph on {n} vertices"
        )));
    }
    let mut g = SmallGraph::empty(n)?;
    for v in 0..n {
        for k in 1..=d / 2 {
            g.set_edge(v, (v + k) % n);
        }
        if d % 2 == 1 {
            g.set_edge(v, (v + n / 2) % n);
        }
    }
    debug_assert!(g.rows().iter().all(|r| r.count_ones() as usize == d));
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u(), e.v())).collect();
    if edges.len() < 2 {
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 * n * d {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        if i == j {
            continue;
        }
        let (mut a, mut b) = edges[i];
        let (c, dd) = edges[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut a, &mut b);
        }
        // (a,b),(c,dd) -> (a,c),(b,dd)
        if a == c || b == dd || g.has_edge(a, c) || g.has_edge(b, dd) || a == dd || b == c {
            continue;
        }
        g.clear_edge(a, b);
        g.clear_edge(c, dd);
        g.set_edge(a, c);
        g.set_edge(b, dd);
        edges[i] = (a.min(c), a.max(c));
        edges[j] = (b.min(dd), b.max(dd));
    }
    Ok(g)
}
