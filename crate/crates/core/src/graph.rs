//! The `SmallGraph` value type and the minor operations everything else builds on.
//!
//! Vertex sets are single `u32` words, so a graph holds at most [`MAX_ORDER`]
//! vertices. All operations take `&self` and return fresh values; the type is
//! `Copy`, so sharing graphs between worker threads needs no synchronisation.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of vertices.
pub const MAX_ORDER: usize = 31;

/// A set of vertices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u32);

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: u8,
    v: u8,
}

impl Edge {
    /// Builds an edge from its endpoints in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Loop(a));
        }
        if a >= MAX_ORDER || b >= MAX_ORDER {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                order: MAX_ORDER,
            });
        }
        Ok(Edge::ordered(a.min(b), a.max(b)))
    }

    #[inline]
    pub(crate) fn ordered(u: usize, v: usize) -> Self {
        debug_assert!(u < v);
        Edge {
            u: u as u8,
            v: v as u8,
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u as usize
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v as usize
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Vertex degrees sorted non-increasingly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }
}

/// A simple undirected graph on at most 31 vertices.
///
/// Row `i` of the adjacency array is the neighbourhood of vertex `i`. Rows at
/// index `order` and above are always zero, so derived equality and hashing
/// compare labelled graphs exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    order: u8,
    adj: [u32; MAX_ORDER],
}

impl SmallGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(SmallGraph {
            order: n as u8,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SmallGraph::empty(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let mut g = SmallGraph::empty(rows.len())?;
        g.adj[..rows.len()].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(n: usize, rows: &[u32]) -> Self {
        let mut g = SmallGraph {
            order: n as u8,
            adj: [0; MAX_ORDER],
        };
        g.adj[..n].copy_from_slice(&rows[..n]);
        debug_assert!(g.validate().is_ok(), "{:?}", g);
        g
    }

    /// Adds the edge `a-b`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::Loop(a));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order as usize]
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && b < self.order() && self.adj[a] >> b & 1 == 1
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u32 << u) - 1))
                .iter()
                .map(move |v| Edge::ordered(u, v))
        })
    }

    /// Checks symmetry, irreflexivity and range of every adjacency row.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let all = VertexSet::full(n).0;
        for (i, &row) in self.adj.iter().enumerate() {
            if i >= n {
                if row != 0 {
                    return Err(Error::Invalid(format!("row {i} set beyond order {n}")));
                }
                continue;
            }
            if row & !all != 0 {
                return Err(Error::Invalid(format!("row {i} has bits beyond order {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::Invalid(format!("loop at vertex {i}")));
            }
            for j in VertexSet(row) {
                if self.adj[j] >> i & 1 == 0 {
                    return Err(Error::Invalid(format!("asymmetric edge {i}-{j}")));
                }
            }
        }
        Ok(())
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<SmallGraph> {
        self.check_vertex(v)?;
        if self.order() < 2 {
            return Err(Error::EmptyResult);
        }
        Ok(self.delete_vertex_unchecked(v))
    }

    #[inline]
    pub(crate) fn delete_vertex_unchecked(&self, v: usize) -> SmallGraph {
        let n = self.order();
        let low = (1u32 << v) - 1;
        let mut out = SmallGraph {
            order: (n - 1) as u8,
            adj: [0; MAX_ORDER],
        };
        let mut k = 0;
        for (i, &row) in self.adj[..n].iter().enumerate() {
            if i == v {
                continue;
            }
            out.adj[k] = (row & low) | ((row >> 1) & !low);
            k += 1;
        }
        out
    }

    pub fn delete_edge(&self, e: Edge) -> Result<SmallGraph> {
        if !self.has_edge(e.u(), e.v()) {
            return Err(Error::EdgeAbsent(e));
        }
        let mut out = *self;
        out.clear_edge(e.u(), e.v());
        Ok(out)
    }

    /// Identifies the endpoints of `e`, keeping the graph simple.
    ///
    /// The merged vertex takes index `e.u()`; vertices above `e.v()` shift down.
    pub fn contract_edge(&self, e: Edge) -> Result<SmallGraph> {
        if !self.has_edge(e.u(), e.v()) {
            return Err(Error::EdgeAbsent(e));
        }
        Ok(self.contract_unchecked(e.u(), e.v()))
    }

    /// Merges `v` into `u` (`u < v`); the pair need not be adjacent.
    #[inline]
    pub(crate) fn contract_unchecked(&self, u: usize, v: usize) -> SmallGraph {
        debug_assert!(u < v);
        let mut merged = *self;
        let nb = (merged.adj[u] | merged.adj[v]) & !(1 << u) & !(1 << v);
        for w in VertexSet(merged.adj[v]) {
            merged.adj[w] &= !(1 << v);
        }
        merged.adj[v] = 0;
        merged.adj[u] = nb;
        for w in VertexSet(nb) {
            merged.adj[w] |= 1 << u;
        }
        merged.delete_vertex_unchecked(v)
    }

    /// Subgraph induced by `keep`, relabelled in ascending vertex order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<SmallGraph> {
        let keep = keep.intersection(self.vertices());
        if keep.is_empty() {
            return Err(Error::EmptyResult);
        }
        let mut index = [0usize; MAX_ORDER];
        for (k, v) in keep.iter().enumerate() {
            index[v] = k;
        }
        let mut out = SmallGraph::empty(keep.len())?;
        for u in keep {
            for w in VertexSet(self.adj[u] & keep.0) {
                out.adj[index[u]] |= 1 << index[w];
            }
        }
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SmallGraph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Invalid(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen.insert(p);
        }
        Ok(self.permute_unchecked(perm))
    }

    #[inline]
    pub(crate) fn permute_unchecked<P: Copy + Into<usize>>(&self, perm: &[P]) -> SmallGraph {
        let n = self.order();
        let mut out = SmallGraph {
            order: self.order,
            adj: [0; MAX_ORDER],
        };
        for v in 0..n {
            let mut row = 0u32;
            for w in VertexSet(self.adj[v]) {
                row |= 1 << perm[w].into();
            }
            out.adj[perm[v].into()] = row;
        }
        out
    }

    /// Vertex-disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let n = self.order() + other.order();
        let mut out = SmallGraph::empty(n)?;
        out.adj[..self.order()].copy_from_slice(self.rows());
        let shift = self.order();
        for (i, &row) in other.rows().iter().enumerate() {
            out.adj[shift + i] = row << shift;
        }
        Ok(out)
    }

    pub fn complement(&self) -> SmallGraph {
        let n = self.order();
        let all = VertexSet::full(n).0;
        let mut out = *self;
        for v in 0..n {
            out.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = self
            .rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Vertex set of the component containing `start`, restricted to `within`.
    pub(crate) fn component_in(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u32;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & within.0 & !seen.0);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components, each a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_in(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_in(0, self.vertices()) == self.vertices()
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        let n = self.order();
        if n < 3 || !self.is_connected() {
            return false;
        }
        (0..n).all(|v| {
            let rest = self.vertices().difference(VertexSet::singleton(v));
            let start = rest.first().unwrap();
            self.component_in(start, rest) == rest
        })
    }

    /// All 3-cliques `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for e in self.edges() {
            let common = self.adj[e.u()] & self.adj[e.v()] & !((2u32 << e.v()) - 1);
            for c in VertexSet(common) {
                out.push([e.u(), e.v(), c]);
            }
        }
        out
    }

    pub fn degree3_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 3).collect()
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}; ", self.order)?;
        let mut first = true;
        for e in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
