//! Shared bookkeeping for the weight-indexed knapsack tables.

use bitvec::vec::BitVec;

use crate::error::{Error, Result};
use crate::instance::{Structure, SubsetInstance};

/// Row length of a table indexed by total objective weight 0..=W.
pub(super) fn width<S: Structure>(instance: &SubsetInstance<S>) -> Result<usize> {
    let total = instance.total_weight();
    usize::try_from(total)
        .ok()
        .and_then(|w| w.checked_add(1))
        .ok_or(Error::Overflow("sizing the dynamic programming table"))
}

/// n * (W + 1): every row touches every column.
pub(super) fn cell_count<S: Structure>(instance: &SubsetInstance<S>) -> u128 {
    instance.len() as u128 * (instance.total_weight() + 1)
}

pub(super) fn check_budget(cells: u128, budget: Option<u128>) -> Result<()> {
    match budget {
        Some(budget) if cells > budget => Err(Error::BudgetExceeded { cells, budget }),
        _ => Ok(()),
    }
}

/// One bit per (item, column): set when taking the item strictly improved the column.
pub(super) struct Choices {
    bits: BitVec,
    width: usize,
}

impl Choices {
    pub(super) fn new(rows: usize, width: usize) -> Result<Self> {
        let len = rows
            .checked_mul(width)
            .ok_or(Error::Overflow("sizing the choice table"))?;
        Ok(Choices {
            bits: BitVec::repeat(false, len),
            width,
        })
    }

    pub(super) fn set(&mut self, row: usize, col: usize) {
        self.bits.set(row * self.width + col, true);
    }

    /// Walks rows last to first starting at column `col`, taking an item
    /// only where its bit is set. Unset bits mean excluding was at least as good.
    pub(super) fn backtrack(&self, weights: &[u64], mut col: usize) -> Vec<usize> {
        let mut selected = Vec::new();
        for row in (0..weights.len()).rev() {
            if self.bits[row * self.width + col] {
                selected.push(row);
                col -= weights[row] as usize;
            }
        }
        selected.reverse();
        selected
    }
}
