//! Batch drivers built on the library: apex classification, the deletion
//! cascade, count tables and the K6-minor audit.

pub mod audit;
pub mod cascade;
pub mod table;

use rayon::prelude::*;

use crate::apex::{classify_apex, ApexVerdict};
use crate::graph::SmallGraph;

pub use audit::{k6_audit, AuditReport};
pub use cascade::{run_cascade, Cascade, CascadeConfig, CascadeReport, LevelStats};
pub use table::CountTable;

/// Graphs split by apex verdict, each list in input order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassifyReport {
    pub planar: Vec<SmallGraph>,
    pub apex: Vec<SmallGraph>,
    pub nonapex: Vec<SmallGraph>,
}

impl ClassifyReport {
    pub fn total(&self) -> usize {
        self.planar.len() + self.apex.len() + self.nonapex.len()
    }
}

pub fn classify_graphs(graphs: &[SmallGraph]) -> ClassifyReport {
    let verdicts: Vec<ApexVerdict> = graphs.par_iter().map(classify_apex).collect();
    let mut out = ClassifyReport::default();
    for (g, v) in graphs.iter().zip(verdicts) {
        match v {
            ApexVerdict::Planar => out.planar.push(*g),
            ApexVerdict::Apex { .. } => out.apex.push(*g),
            ApexVerdict::NonApex => out.nonapex.push(*g),
        }
    }
    out
}
