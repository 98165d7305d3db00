//! Minor containment with branch-set witnesses.
//!
//! For a connected pattern `H` and a connected host component `C`, `H` is a
//! minor of `C` exactly when `V(C)` can be partitioned into `|H|` connected
//! branch sets whose quotient graph contains `H` as a subgraph: unused vertices
//! of any model can always be absorbed into a neighbouring branch set. The
//! search therefore grows branch sets by merging adjacent ones (edge
//! contraction in the quotient), checks the quotient for an `H` subgraph at
//! every step, and remembers failed quotients by canonical form.
//!
//! Sound prunes: order and size bounds (every contraction loses at least one
//! edge), planar quotients when `H` is nonplanar, apex quotients when `H` is
//! not apex. All three are minor-closed properties.

use std::collections::{HashMap, HashSet};

use crate::apex;
use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet, MAX_ORDER};
use crate::named;
use crate::planarity;

/// A minor model: branch set `sets[i]` of the host stands for pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    pub sets: Vec<VertexSet>,
}

impl BranchDecomposition {
    /// Checks the model against `host` and `pattern`, describing the first violation.
    pub fn validate(&self, host: &SmallGraph, pattern: &SmallGraph) -> Result<(), String> {
        if self.sets.len() != pattern.order() {
            return Err(format!(
                "{} branch sets for a pattern of order {}",
                self.sets.len(),
                pattern.order()
            ));
        }
        let mut used = VertexSet::EMPTY;
        for (i, &set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return Err(format!("branch set {i} is empty"));
            }
            if !set.difference(host.vertices()).is_empty() {
                return Err(format!("branch set {i} leaves the host"));
            }
            if !set.is_disjoint(used) {
                return Err(format!("branch set {i} overlaps an earlier one"));
            }
            used = used.union(set);
            // Plain BFS inside the set.
            let start = set.first().unwrap();
            let mut seen = vec![start];
            let mut k = 0;
            while k < seen.len() {
                let v = seen[k];
                k += 1;
                for w in host.neighbors(v).intersection(set) {
                    if !seen.contains(&w) {
                        seen.push(w);
                    }
                }
            }
            if seen.len() != set.len() {
                return Err(format!("branch set {i} is not connected"));
            }
        }
        for e in pattern.edges() {
            let (a, b) = (self.sets[e.u()], self.sets[e.v()]);
            let joined = a.iter().any(|x| !host.neighbors(x).is_disjoint(b));
            if !joined {
                return Err(format!(
                    "no host edge joins branch sets {} and {}",
                    e.u(),
                    e.v()
                ));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, host: &SmallGraph, pattern: &SmallGraph) -> bool {
        self.validate(host, pattern).is_ok()
    }
}

/// Switches for the minor search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip planar quotients when the pattern is nonplanar.
    pub planarity_prune: bool,
    /// Skip apex quotients when the pattern is not apex.
    pub apex_prune: bool,
    /// Remember failed quotients by canonical form.
    pub memo: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            planarity_prune: true,
            apex_prune: true,
            memo: true,
        }
    }
}

impl SearchOptions {
    /// No planarity-based prunes; used where the result must not depend on
    /// the planarity test.
    pub fn exhaustive() -> Self {
        SearchOptions {
            planarity_prune: false,
            apex_prune: false,
            memo: true,
        }
    }
}

/// Finds a model of `h` in `g`, if there is one.
///
/// # Panics
/// If `h` is disconnected; only connected patterns are supported.
pub fn has_minor(g: &SmallGraph, h: &SmallGraph) -> Option<BranchDecomposition> {
    has_minor_with(g, h, SearchOptions::default())
}

pub fn has_minor_with(
    g: &SmallGraph,
    h: &SmallGraph,
    opts: SearchOptions,
) -> Option<BranchDecomposition> {
    assert!(h.is_connected(), "minor patterns must be connected");
    if h.order() > g.order() || h.size() > g.size() {
        return None;
    }
    let mut search = Searcher::new(h, opts);
    for comp in g.components() {
        if comp.len() < h.order() {
            continue;
        }
        let q = Quotient::of_component(g, comp);
        if let Some(found) = search.run(q) {
            return Some(found);
        }
    }
    None
}

/// `K6` minor test. Same contract as `has_minor(g, &K6)`.
pub fn has_k6_minor(g: &SmallGraph) -> Option<BranchDecomposition> {
    if g.order() < 6 || g.size() < 15 {
        return None;
    }
    // An apex graph has no K6 minor: deleting the branch set that holds the
    // apex vertex would leave a K5 model in a planar graph.
    if apex::is_apex(g) {
        return None;
    }
    has_minor(g, &named::complete(6))
}

#[derive(Clone, Copy)]
struct Quotient {
    graph: SmallGraph,
    sets: [u32; MAX_ORDER],
}

impl Quotient {
    fn of_component(g: &SmallGraph, comp: VertexSet) -> Quotient {
        let graph = g.induced_subgraph(comp).expect("component is nonempty");
        let mut sets = [0u32; MAX_ORDER];
        for (k, v) in comp.iter().enumerate() {
            sets[k] = 1 << v;
        }
        Quotient { graph, sets }
    }

    fn contract(&self, u: usize, v: usize) -> Quotient {
        let graph = self.graph.contract_unchecked(u, v);
        let n = self.graph.order();
        let mut sets = [0u32; MAX_ORDER];
        let mut k = 0;
        for i in 0..n {
            if i == v {
                continue;
            }
            sets[k] = if i == u {
                self.sets[u] | self.sets[v]
            } else {
                self.sets[i]
            };
            k += 1;
        }
        Quotient { graph, sets }
    }
}

struct Searcher<'a> {
    h: &'a SmallGraph,
    h_order: usize,
    h_size: usize,
    h_order_by_bfs: Vec<usize>,
    planar_prune: bool,
    apex_prune: bool,
    memo: Option<HashSet<SmallGraph>>,
}

impl<'a> Searcher<'a> {
    fn new(h: &'a SmallGraph, opts: SearchOptions) -> Self {
        Searcher {
            h,
            h_order: h.order(),
            h_size: h.size(),
            h_order_by_bfs: bfs_order(h),
            planar_prune: opts.planarity_prune && !planarity::is_planar(h),
            apex_prune: opts.apex_prune && !apex::is_apex(h),
            memo: opts.memo.then(HashSet::new),
        }
    }

    fn run(&mut self, q: Quotient) -> Option<BranchDecomposition> {
        let n = q.graph.order();
        let m = q.graph.size();
        if n < self.h_order || m + self.h_order < self.h_size + n {
            return None;
        }
        if let Some(map) = embed(self.h, &self.h_order_by_bfs, &q.graph) {
            let sets = map.iter().map(|&x| VertexSet(q.sets[x])).collect();
            return Some(BranchDecomposition { sets });
        }
        if n == self.h_order {
            return None;
        }
        if self.planar_prune && planarity::is_planar(&q.graph) {
            return None;
        }
        if self.apex_prune && apex::is_apex(&q.graph) {
            return None;
        }
        if let Some(memo) = self.memo.as_mut() {
            if !memo.insert(canon::canonical_graph(&q.graph)) {
                return None;
            }
        }
        for (u, v) in contraction_order(&q.graph) {
            if let Some(found) = self.run(q.contract(u, v)) {
                return Some(found);
            }
        }
        None
    }
}

/// Edges to contract, low-degree endpoints first, then fewest common
/// neighbours (fewest edges lost); ties by edge order.
fn contraction_order(g: &SmallGraph) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize, usize, usize)> = g
        .edges()
        .map(|e| {
            let (u, v) = (e.u(), e.v());
            let low = g.degree(u).min(g.degree(v));
            let common = g.neighbors(u).intersection(g.neighbors(v)).len();
            (low, common, u, v)
        })
        .collect();
    edges.sort_unstable();
    edges.into_iter().map(|(_, _, u, v)| (u, v)).collect()
}

/// Pattern vertices in BFS order from a maximum-degree vertex.
fn bfs_order(h: &SmallGraph) -> Vec<usize> {
    let start = (0..h.order())
        .max_by_key(|&v| (h.degree(v), usize::MAX - v))
        .unwrap();
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut k = 0;
    while k < order.len() {
        let v = order[k];
        k += 1;
        for w in h.neighbors(v).difference(seen) {
            seen.insert(w);
            order.push(w);
        }
    }
    order
}

/// A subgraph embedding of `h` into `g`: `map[p]` is the image of pattern vertex `p`.
fn embed(h: &SmallGraph, order: &[usize], g: &SmallGraph) -> Option<Vec<usize>> {
    fn go(
        h: &SmallGraph,
        order: &[usize],
        g: &SmallGraph,
        depth: usize,
        map: &mut [usize; MAX_ORDER],
        used: VertexSet,
    ) -> bool {
        let Some(&p) = order.get(depth) else {
            return true;
        };
        let mut cand = g.vertices().difference(used);
        for &q in &order[..depth] {
            if h.has_edge(p, q) {
                cand = cand.intersection(g.neighbors(map[q]));
            }
        }
        let need = h.degree(p);
        for x in cand {
            if g.degree(x) < need {
                continue;
            }
            map[p] = x;
            let mut next = used;
            next.insert(x);
            if go(h, order, g, depth + 1, map, next) {
                return true;
            }
        }
        false
    }
    let mut map = [0usize; MAX_ORDER];
    go(h, order, g, 0, &mut map, VertexSet::EMPTY).then(|| map[..h.order()].to_vec())
}

/// Largest host order accepted by the slow oracle.
pub const ORACLE_BUDGET: usize = 9;

/// Slow reference for minor containment: recursion over single vertex
/// deletions, edge deletions and edge contractions, stopping when the pattern
/// appears as a subgraph. Results are memoised per canonical host, so one
/// oracle can be reused across many queries with the same pattern.
pub struct MinorOracle {
    pattern: SmallGraph,
    memo: HashMap<SmallGraph, bool>,
}

impl MinorOracle {
    pub fn new(pattern: SmallGraph) -> Self {
        MinorOracle {
            pattern,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, g: &SmallGraph) -> Result<bool> {
        if g.order() > ORACLE_BUDGET {
            return Err(Error::OracleBudget {
                order: g.order(),
                budget: ORACLE_BUDGET,
            });
        }
        Ok(self.recurse(g))
    }

    fn recurse(&mut self, g: &SmallGraph) -> bool {
        let h = self.pattern;
        if g.order() < h.order() || g.size() < h.size() {
            return false;
        }
        let key = canon::canonical_graph(g);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let mut found = contains_subgraph(g, &h);
        if !found {
            for e in g.edges().collect::<Vec<_>>() {
                if self.recurse(&g.delete_edge(e).unwrap())
                    || self.recurse(&g.contract_edge(e).unwrap())
                {
                    found = true;
                    break;
                }
            }
        }
        if !found && g.order() > h.order() {
            found = (0..g.order()).any(|v| self.recurse(&g.delete_vertex(v).unwrap()));
        }
        self.memo.insert(key, found);
        found
    }
}

pub fn minor_oracle(g: &SmallGraph, h: &SmallGraph) -> Result<bool> {
    MinorOracle::new(*h).contains(g)
}

/// Brute force: try every injective vertex map, in pattern-index order.
fn contains_subgraph(g: &SmallGraph, h: &SmallGraph) -> bool {
    fn go(g: &SmallGraph, h: &SmallGraph, p: usize, map: &mut Vec<usize>) -> bool {
        if p == h.order() {
            return true;
        }
        for x in 0..g.order() {
            if map.contains(&x) {
                continue;
            }
            if (0..p).all(|q| !h.has_edge(p, q) || g.has_edge(x, map[q])) {
                map.push(x);
                if go(g, h, p + 1, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(g, h, 0, &mut Vec::with_capacity(h.order()))
}
