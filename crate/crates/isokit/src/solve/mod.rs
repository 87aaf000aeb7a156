//! Decision procedures and witness search for the four isomorphism
//! problems, plus dataset minimization up to subitemset isomorphism.
//!
//! Every decider returns an explicit witness on a yes-answer, and every
//! witness is checkable by the corresponding polynomial-time verifier in
//! [`verify`]. The `*_bruteforce` functions enumerate all bijections behind
//! a factorial guard and serve as reference oracles for the search-based
//! deciders.

mod brute;
mod canon;
mod gi;
mod hgi;
mod ii;
mod minimize;
mod refine;
mod si;
mod verify;

pub use brute::{
    gi_decide_bruteforce, hgi_decide_bruteforce, ii_decide_bruteforce, ii_witnesses_bruteforce,
    si_decide_bruteforce,
};
pub use canon::{canonical_form, CanonicalForm};
pub use gi::{gi_decide, gi_decide_stats, gi_decide_via_ii};
pub use hgi::{hgi_decide, hgi_decide_stats, HgiRoute};
pub use ii::{ii_decide, ii_decide_stats};
pub use minimize::{dataset_minimize, DiscardReason, MinimizeDecision, MinimizeReport};
pub use refine::{refinement_partition, RefinementPartition};
pub use si::{si_decide, si_decide_stats};
pub use verify::{verify_gi_witness, verify_hgi_witness, verify_ii_witness, verify_si_witness};

use std::time::Duration;

/// Default cap on the domain size of factorial brute-force enumeration;
/// 9! keeps oracle runs sub-second.
pub const DEFAULT_FACTORIAL_GUARD: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("brute-force guard exceeded: {requested} elements over limit {limit}")]
    GuardExceeded { limit: usize, requested: usize },
    #[error("itemsets must share one domain: {left} vs {right} elements")]
    DomainMismatch { left: usize, right: usize },
}

/// Counters describing one decider run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub prunes_by_cardinality: u64,
    pub prunes_by_refinement: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    /// Flat `key=value` report. Wall time is tracked in the struct but not
    /// rendered, keeping identical invocations byte-identical.
    pub fn report(&self) -> String {
        format!(
            "nodes_explored={}\nprunes_by_cardinality={}\nprunes_by_refinement={}\n",
            self.nodes_explored, self.prunes_by_cardinality, self.prunes_by_refinement
        )
    }
}

fn check_guard(n: usize, guard: usize) -> Result<(), SolveError> {
    if n > guard {
        return Err(SolveError::GuardExceeded {
            limit: guard,
            requested: n,
        });
    }
    Ok(())
}
