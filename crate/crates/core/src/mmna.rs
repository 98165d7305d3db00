//! Minor-minimal non-apex (MMNA) verification.
//!
//! Being apex is minor-closed, so a non-apex graph is MMNA exactly when each
//! one-edge deletion and each one-edge contraction is apex. Deletions are
//! checked first, then contractions, stopping at the first non-apex minor.

use rayon::prelude::*;

use crate::apex::is_apex;
use crate::canon;
use crate::graph::{Edge, SmallGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MmnaVerdict {
    /// The graph is apex (or planar), so it is not an obstruction at all.
    NotNonApex,
    /// Deleting this edge leaves a non-apex graph.
    FailsDeletion(Edge),
    /// Contracting this edge leaves a non-apex graph.
    FailsContraction(Edge),
    Mmna,
}

impl MmnaVerdict {
    pub fn is_mmna(self) -> bool {
        self == MmnaVerdict::Mmna
    }

    pub fn counterexample(self) -> Option<Edge> {
        match self {
            MmnaVerdict::FailsDeletion(e) | MmnaVerdict::FailsContraction(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MmnaOptions {
    /// Apex-test only one minor per isomorphism class. The reported
    /// counterexample is unchanged: the first edge of a failing class comes
    /// first in edge order.
    pub dedup_minors: bool,
}

impl Default for MmnaOptions {
    fn default() -> Self {
        MmnaOptions { dedup_minors: true }
    }
}

/// One graph per edge, in edge order.
pub fn one_edge_deletions(g: &SmallGraph) -> Vec<SmallGraph> {
    g.edges().map(|e| g.delete_edge(e).unwrap()).collect()
}

/// One graph per edge, in edge order.
pub fn one_edge_contractions(g: &SmallGraph) -> Vec<SmallGraph> {
    g.edges().map(|e| g.contract_edge(e).unwrap()).collect()
}

pub fn is_mmna(g: &SmallGraph) -> MmnaVerdict {
    is_mmna_with(g, MmnaOptions::default())
}

pub fn is_mmna_with(g: &SmallGraph, opts: MmnaOptions) -> MmnaVerdict {
    if is_apex(g) {
        return MmnaVerdict::NotNonApex;
    }
    let edges: Vec<Edge> = g.edges().collect();
    let deletions = edges.iter().map(|&e| (e, g.delete_edge(e).unwrap()));
    if let Some(e) = first_non_apex(deletions, opts) {
        return MmnaVerdict::FailsDeletion(e);
    }
    let contractions = edges.iter().map(|&e| (e, g.contract_edge(e).unwrap()));
    if let Some(e) = first_non_apex(contractions, opts) {
        return MmnaVerdict::FailsContraction(e);
    }
    MmnaVerdict::Mmna
}

fn first_non_apex<I>(minors: I, opts: MmnaOptions) -> Option<Edge>
where
    I: Iterator<Item = (Edge, SmallGraph)>,
{
    let mut seen = std::collections::HashSet::new();
    for (e, m) in minors {
        if opts.dedup_minors && !seen.insert(canon::canonical_graph(&m)) {
            continue;
        }
        if !is_apex(&m) {
            return Some(e);
        }
    }
    None
}

/// Graphs split by MMNA verdict, each side in input order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MmnaPartition {
    pub mmna: Vec<SmallGraph>,
    pub not_mmna: Vec<SmallGraph>,
}

/// Classifies every graph on the rayon pool.
pub fn mmna_filter(graphs: &[SmallGraph]) -> MmnaPartition {
    let verdicts: Vec<bool> = graphs.par_iter().map(|g| is_mmna(g).is_mmna()).collect();
    let mut out = MmnaPartition::default();
    for (g, ok) in graphs.iter().zip(verdicts) {
        if ok {
            out.mmna.push(*g);
        } else {
            out.not_mmna.push(*g);
        }
    }
    log::info!(
        "mmna filter: {} mmna, {} not",
        out.mmna.len(),
        out.not_mmna.len()
    );
    out
}
