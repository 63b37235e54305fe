//! Per-thread operation counters for the complexity reports.
//!
//! Multiplications, inversions and Frobenius applications in the big field
//! are tallied in thread-local cells, so concurrent decodes do not interfere
//! with each other's counts.

use serde::{Deserialize, Serialize};
use std::cell::Cell;

thread_local! {
    static MULTS: Cell<u64> = const { Cell::new(0) };
    static FROBS: Cell<u64> = const { Cell::new(0) };
    static INVS: Cell<u64> = const { Cell::new(0) };
}

/// Snapshot of the field-operation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub mults: u64,
    pub frobs: u64,
    pub invs: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.mults + self.frobs + self.invs
    }
}

impl std::ops::Sub for OpCounts {
    type Output = OpCounts;
    fn sub(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            mults: self.mults - rhs.mults,
            frobs: self.frobs - rhs.frobs,
            invs: self.invs - rhs.invs,
        }
    }
}

pub fn reset() {
    MULTS.with(|c| c.set(0));
    FROBS.with(|c| c.set(0));
    INVS.with(|c| c.set(0));
}

pub fn snapshot() -> OpCounts {
    OpCounts {
        mults: MULTS.with(Cell::get),
        frobs: FROBS.with(Cell::get),
        invs: INVS.with(Cell::get),
    }
}

#[inline]
pub(crate) fn count_mul() {
    MULTS.with(|c| c.set(c.get() + 1));
}

#[inline]
pub(crate) fn count_frob() {
    FROBS.with(|c| c.set(c.get() + 1));
}

#[inline]
pub(crate) fn count_inv() {
    INVS.with(|c| c.set(c.get() + 1));
}
