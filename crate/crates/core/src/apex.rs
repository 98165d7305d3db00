//! Apex classification: planarity first, then one vertex deletion at a time.

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};
use crate::planarity::is_planar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApexVerdict {
    Planar,
    /// Nonplanar, and deleting `witness` leaves a planar graph.
    Apex {
        witness: usize,
    },
    /// No single vertex deletion gives a planar graph.
    NonApex,
}

impl ApexVerdict {
    /// Planar or apex; the minor-closed class.
    pub fn is_apex(self) -> bool {
        !matches!(self, ApexVerdict::NonApex)
    }

    pub fn witness(self) -> Option<usize> {
        match self {
            ApexVerdict::Apex { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Order in which vertices are tried for deletion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProbeOrder {
    #[default]
    Ascending,
    /// Highest degree first, ties by index. Changes the witness, never the verdict.
    DegreeDescending,
}

pub fn classify_apex(g: &SmallGraph) -> ApexVerdict {
    classify_apex_by(g, ProbeOrder::Ascending, is_planar)
}

pub fn classify_apex_with(g: &SmallGraph, order: ProbeOrder) -> ApexVerdict {
    classify_apex_by(g, order, is_planar)
}

/// [`classify_apex`] with a caller-supplied planarity test, e.g. an
/// instrumented one.
pub fn classify_apex_by<F>(g: &SmallGraph, order: ProbeOrder, mut planar: F) -> ApexVerdict
where
    F: FnMut(&SmallGraph) -> bool,
{
    if planar(g) {
        return ApexVerdict::Planar;
    }
    if g.order() == 1 {
        return ApexVerdict::NonApex;
    }
    let probe: Vec<usize> = match order {
        ProbeOrder::Ascending => (0..g.order()).collect(),
        ProbeOrder::DegreeDescending => {
            let mut vs: Vec<usize> = (0..g.order()).collect();
            vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            vs
        }
    };
    for v in probe {
        if planar(&g.delete_vertex_unchecked(v)) {
            return ApexVerdict::Apex { witness: v };
        }
    }
    ApexVerdict::NonApex
}

/// `true` unless `g` is non-apex.
pub fn is_apex(g: &SmallGraph) -> bool {
    if is_planar(g) {
        return true;
    }
    (0..g.order()).any(|v| is_planar(&g.delete_vertex_unchecked(v)))
}

/// Every vertex whose deletion leaves a planar graph.
pub fn apex_vertices(g: &SmallGraph) -> Result<VertexSet> {
    if is_planar(g) {
        return Err(Error::PlanarInput);
    }
    Ok((0..g.order())
        .filter(|&v| is_planar(&g.delete_vertex_unchecked(v)))
        .collect())
}
