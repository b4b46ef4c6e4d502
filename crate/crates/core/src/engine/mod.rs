//! Semi-naive materialization of Horn theories and conjunctive-query
//! evaluation over the resulting fact store.

mod materialize;
mod query;
mod store;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::HornTheory;

pub use materialize::Materializer;
pub use query::{query, Witness};
pub use store::{FactStore, Interner, TermId};

/// Resource ceilings. Exceeding one is an error, never a verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_facts: Option<usize>,
    pub timeout: Option<Duration>,
}

impl Limits {
    pub fn none() -> Self {
        Self::default()
    }

    pub(crate) fn deadline(&self, start: Instant) -> Option<Instant> {
        self.timeout.map(|t| start + t)
    }
}

/// Counters reported by a materialization run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub rules: usize,
    pub rounds: usize,
    /// Rule-body instantiations found, including those deriving known facts.
    pub firings: u64,
    pub facts: usize,
    pub elapsed_ms: u128,
}

pub(crate) fn check_deadline(deadline: Option<Instant>, facts: usize, rounds: usize) -> Result<()> {
    match deadline {
        Some(d) if Instant::now() > d => Err(Error::ResourceLimit {
            limit: "timeout".into(),
            facts,
            rounds,
        }),
        _ => Ok(()),
    }
}

/// Compute the least fixpoint of `theory`.
pub fn materialize(theory: &HornTheory, limits: Limits) -> Result<FactStore> {
    let mut m = Materializer::new(theory, limits)?;
    m.run()?;
    Ok(m.into_store())
}
