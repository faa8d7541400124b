use std::sync::atomic::{AtomicU64, Ordering};

use crate::{Error, Result};

/// Default cap on search nodes (memo entries plus expansions).
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

/// Cap on the number of nodes a search may visit. Running out is reported as
/// [`Error::BudgetExhausted`], never as a negative answer.
#[derive(Debug)]
pub struct Budget {
    cap: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(cap: u64) -> Budget {
        Budget { cap, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Budget {
        Budget::new(u64::MAX)
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charges one node.
    pub fn tick(&self) -> Result<()> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.cap {
            Err(Error::BudgetExhausted(self.cap))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(DEFAULT_NODE_CAP)
    }
}

impl Clone for Budget {
    fn clone(&self) -> Budget {
        Budget { cap: self.cap, used: AtomicU64::new(self.used()) }
    }
}
