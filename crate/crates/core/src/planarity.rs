//! Planarity testing with the left-right criterion.
//!
//! The test orients the graph by DFS, computes lowpoints and nesting depths,
//! then runs the constraint-stack phase over conflict pairs of return-edge
//! intervals. No embedding is produced. Oriented edges are indexed as
//! `32 * tail + head`, which keeps every per-edge table a flat array.

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};
use crate::minor;
use crate::named;

const SLOTS: usize = 32 * 32;
const NONE: u16 = u16::MAX;

#[inline]
fn eid(tail: usize, head: usize) -> u16 {
    (tail * 32 + head) as u16
}

#[inline]
fn tail(e: u16) -> usize {
    e as usize / 32
}

#[inline]
fn head(e: u16) -> usize {
    e as usize % 32
}

/// `true` iff `g` has a plane embedding. Disconnected graphs are handled
/// component by component.
pub fn is_planar(g: &SmallGraph) -> bool {
    let n = g.order();
    let m = g.size();
    if n < 5 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    LrState::new(g).run()
}

#[derive(Clone, Copy, Default)]
struct Interval {
    low: u16,
    high: u16,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    #[inline]
    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    g: &'a SmallGraph,
    height: [u8; 32],
    parent_edge: [u16; 32],
    oriented: [u32; 32],
    lowpt: Vec<u8>,
    lowpt2: Vec<u8>,
    nesting: Vec<u16>,
    reference: Vec<u16>,
    lowpt_edge: Vec<u16>,
    stack_bottom: Vec<u16>,
    ordered: Vec<Vec<u16>>,
    stack: Vec<ConflictPair>,
}

const UNSEEN: u8 = u8::MAX;

impl<'a> LrState<'a> {
    fn new(g: &'a SmallGraph) -> Self {
        LrState {
            g,
            height: [UNSEEN; 32],
            parent_edge: [NONE; 32],
            oriented: [0; 32],
            lowpt: vec![0; SLOTS],
            lowpt2: vec![0; SLOTS],
            nesting: vec![0; SLOTS],
            reference: vec![NONE; SLOTS],
            lowpt_edge: vec![NONE; SLOTS],
            stack_bottom: vec![0; SLOTS],
            ordered: vec![Vec::new(); g.order()],
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let n = self.g.order();
        let mut roots = Vec::new();
        for v in 0..n {
            if self.height[v] == UNSEEN {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let mut out: Vec<u16> = VertexSet(self.oriented[v])
                .iter()
                .map(|w| eid(v, w))
                .collect();
            out.sort_by_key(|&e| self.nesting[e as usize]);
            self.ordered[v] = out;
        }
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for w in self.g.neighbors(v) {
            if self.oriented[v] >> w & 1 == 1 || self.oriented[w] >> v & 1 == 1 {
                continue;
            }
            self.oriented[v] |= 1 << w;
            let vw = eid(v, w) as usize;
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == UNSEEN {
                self.parent_edge[w] = vw as u16;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as u16;
            if self.lowpt2[vw] < self.height[v] {
                self.nesting[vw] += 1;
            }
            if e != NONE {
                let e = e as usize;
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let children = std::mem::take(&mut self.ordered[v]);
        for (i, &ei) in children.iter().enumerate() {
            let w = head(ei);
            self.stack_bottom[ei as usize] = self.stack.len() as u16;
            if self.parent_edge[w] == ei {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei as usize] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei as usize] < self.height[v] {
                if i == 0 {
                    self.lowpt_edge[e as usize] = self.lowpt_edge[ei as usize];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    #[inline]
    fn conflicting(&self, interval: &Interval, b: u16) -> bool {
        !interval.is_empty() && self.lowpt[interval.high as usize] > self.lowpt[b as usize]
    }

    fn lowest(&self, p: &ConflictPair) -> u8 {
        if p.left.is_empty() {
            return self.lowpt[p.right.low as usize];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low as usize];
        }
        self.lowpt[p.left.low as usize].min(self.lowpt[p.right.low as usize])
    }

    fn add_constraints(&mut self, ei: u16, e: u16) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        let bottom = self.stack_bottom[ei as usize] as usize;
        // Merge the return edges of ei into p.right.
        loop {
            let mut q = self
                .stack
                .pop()
                .expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low as usize] > self.lowpt[e as usize] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low as usize] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low as usize] = self.lowpt_edge[e as usize];
            }
            if self.stack.len() == bottom {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.left.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low as usize] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low as usize] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: u16) {
        let u = tail(e);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && head(p.left.high) == u {
                p.left.high = self.reference[p.left.high as usize];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low as usize] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && head(p.right.high) == u {
                p.right.high = self.reference[p.right.high as usize];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low as usize] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e as usize] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let hl = top.left.high;
            let hr = top.right.high;
            self.reference[e as usize] = if hl != NONE
                && (hr == NONE || self.lowpt[hl as usize] > self.lowpt[hr as usize])
            {
                hl
            } else {
                hr
            };
        }
    }
}

/// Largest order accepted by [`planarity_oracle`].
pub const ORACLE_BUDGET: usize = 10;

/// Independent planarity decision: no `K5` minor and no `K3,3` minor.
///
/// Runs the generic minor search with every planarity-based prune disabled, so
/// it shares no code path with [`is_planar`].
pub fn planarity_oracle(g: &SmallGraph) -> Result<bool> {
    if g.order() > ORACLE_BUDGET {
        return Err(Error::OracleBudget {
            order: g.order(),
            budget: ORACLE_BUDGET,
        });
    }
    let opts = minor::SearchOptions::exhaustive();
    let k5 = named::complete(5);
    let k33 = named::complete_bipartite(3, 3);
    Ok(minor::has_minor_with(g, &k5, opts).is_none()
        && minor::has_minor_with(g, &k33, opts).is_none())
}
