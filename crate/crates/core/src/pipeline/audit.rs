//! Sampled K6-minor audit of 6-regular, 2-connected graphs of order 13.

use rayon::prelude::*;

use crate::apex::{classify_apex, ApexVerdict};
use crate::enumerate::random_regular;
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::minor::has_k6_minor;
use crate::named;

pub const AUDIT_ORDER: usize = 13;
pub const AUDIT_DEGREE: usize = 6;

/// Resampling attempts per graph before giving up on 2-connectivity.
const MAX_ATTEMPTS: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub sampled: usize,
    /// Samples with a K6 minor whose branch sets passed validation.
    pub with_k6: usize,
    /// Samples without a validated K6 minor.
    pub counterexamples: Vec<SmallGraph>,
    /// Verdict on the cone over the icosahedron, run as a control.
    pub control_apex: ApexVerdict,
    pub control_has_k6: bool,
}

impl AuditReport {
    /// All samples have K6 minors and the control came out apex with none.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && self.with_k6 == self.sampled
            && self.control_apex.is_apex()
            && !self.control_has_k6
    }
}

/// The `index`-th 2-connected sample of the audit stream for `seed`.
pub fn audit_sample(seed: u64, index: u64) -> Result<SmallGraph> {
    for attempt in 0..MAX_ATTEMPTS {
        let s = seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(index.wrapping_mul(MAX_ATTEMPTS) + attempt);
        let g = random_regular(AUDIT_ORDER, AUDIT_DEGREE, s)?;
        if g.is_2_connected() {
            return Ok(g);
        }
    }
    Err(Error::Infeasible(format!(
        "no 2-connected sample after {MAX_ATTEMPTS} attempts"
    )))
}

/// Samples `count` graphs from `seed` and checks each for a K6 minor.
pub fn k6_audit(count: usize, seed: u64) -> Result<AuditReport> {
    if count == 0 {
        return Err(Error::Invalid("audit count must be at least 1".into()));
    }
    let samples: Vec<SmallGraph> = (0..count as u64)
        .map(|i| audit_sample(seed, i))
        .collect::<Result<_>>()?;
    let found: Vec<bool> = samples
        .par_iter()
        .map(|g| has_k6_minor(g).is_some_and(|w| w.is_valid(g, &named::complete(6))))
        .collect();
    let counterexamples: Vec<SmallGraph> = samples
        .iter()
        .zip(&found)
        .filter(|(_, &ok)| !ok)
        .map(|(g, _)| *g)
        .collect();
    let control = named::cone_over_icosahedron();
    Ok(AuditReport {
        sampled: count,
        with_k6: count - counterexamples.len(),
        counterexamples,
        control_apex: classify_apex(&control),
        control_has_k6: has_k6_minor(&control).is_some(),
    })
}
