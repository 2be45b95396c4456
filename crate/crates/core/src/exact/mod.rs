//! Exact exponential-time solvers. They serve as the production fallback and
//! as the oracle every closed form is checked against.

mod clique;
mod eta;
mod gp;
mod hull;
mod psi;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use clique::{max_clique, max_independent_set};
pub use eta::eta_exact;
pub use gp::{gp_exact, GpExact};
pub use hull::{hull_numbers, HullNumbers, MAX_HULL_ORDER};
pub use psi::psi_exact;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    #[default]
    BranchAndBound,
    BruteForce,
}

/// Limits for the exponential searches. Running out aborts with
/// [`Error::BudgetExhausted`]; a partial answer is never reported as exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
    pub mode: SearchMode,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget { max_nodes: 100_000_000, max_millis: 60_000, mode: SearchMode::BranchAndBound }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_millis: u64, mode: SearchMode) -> Result<SearchBudget> {
        if max_nodes == 0 || max_millis == 0 {
            return Err(Error::Domain("search budget caps must be positive".into()));
        }
        Ok(SearchBudget { max_nodes, max_millis, mode })
    }

    pub fn brute_force() -> SearchBudget {
        SearchBudget { mode: SearchMode::BruteForce, ..SearchBudget::default() }
    }
}

/// Node counter and wall clock shared by one solver run.
pub(crate) struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
}

impl Meter {
    pub(crate) fn new(budget: &SearchBudget) -> Meter {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: Instant::now() + Duration::from_millis(budget.max_millis),
        }
    }

    /// Counts one node; `false` once a cap is hit.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        self.nodes & 0x3ff != 0 || Instant::now() < self.deadline
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}
