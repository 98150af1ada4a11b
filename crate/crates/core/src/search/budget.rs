use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

/// Cooperative cancellation flag shared between a caller and running searches.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Limits for a single search. Running out is reported as
/// [`SearchOutcome::BudgetExhausted`], never as a negative answer.
#[derive(Debug, Clone, Default)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub cancel: Option<CancelToken>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget {
            node_limit: Some(limit),
            ..Self::default()
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    pub fn is_unlimited(&self) -> bool {
        self.node_limit.is_none() && self.time_limit.is_none() && self.cancel.is_none()
    }

    pub(crate) fn meter(&self) -> Meter<'_> {
        Meter {
            budget: self,
            started: Instant::now(),
            nodes: 0,
            stopped: false,
        }
    }
}

/// Counts nodes against a budget; the clock and the cancel flag are polled
/// every 1024 nodes.
pub(crate) struct Meter<'a> {
    budget: &'a SearchBudget,
    started: Instant,
    pub(crate) nodes: u64,
    stopped: bool,
}

impl Meter<'_> {
    /// Records one node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.stopped {
            return false;
        }
        self.nodes += 1;
        if self.budget.node_limit.is_some_and(|l| self.nodes > l) {
            self.stopped = true;
        } else if self.nodes & 1023 == 0 {
            let late = self
                .budget
                .time_limit
                .is_some_and(|t| self.started.elapsed() > t);
            let cancelled = self
                .budget
                .cancel
                .as_ref()
                .is_some_and(|c| c.is_cancelled());
            self.stopped = late || cancelled;
        }
        !self.stopped
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stopped
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole space was explored without success.
    Exhausted,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult<T> {
    pub outcome: SearchOutcome<T>,
    pub nodes: u64,
}

impl<T> SearchResult<T> {
    pub fn found(&self) -> Option<&T> {
        match &self.outcome {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self.outcome {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Exhausted)
    }

    pub fn is_budget_exhausted(&self) -> bool {
        matches!(self.outcome, SearchOutcome::BudgetExhausted)
    }
}
