//! Knapsack instantiations of the subset selection framework.
//!
//! [`Cover`] is the single covering constraint of the Minimum Knapsack
//! Problem, [`Packing`] the single packing constraint of the Maximum
//! Knapsack Problem. Both carry one positive size per item.

mod dp;
pub mod max;
pub mod min;

pub use max::{
    approx_half_max, brute_force_max, exact_dp_max, exact_value_max, fptas_max, MAX_HOOKS,
};
pub use min::{approx2_min, brute_force_min, exact_dp_min, exact_value_min, fptas_min, MIN_HOOKS};

use crate::error::{Error, Result};
use crate::instance::{Sense, Structure, SubsetInstance};

/// Feasible iff the selected sizes sum to at least `demand`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub sizes: Vec<u64>,
    pub demand: u64,
}

/// Feasible iff the selected sizes sum to at most `capacity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub sizes: Vec<u64>,
    pub capacity: u64,
}

pub type MinKnapsack = SubsetInstance<Cover>;
pub type MaxKnapsack = SubsetInstance<Packing>;

fn check_sizes(sizes: &[u64]) -> Result<()> {
    match sizes.iter().position(|&a| a == 0) {
        Some(i) => Err(Error::Validation(format!(
            "item {i} has size 0, sizes must be positive integers"
        ))),
        None => Ok(()),
    }
}

fn size_sum(sizes: &[u64], selected: &[usize]) -> u128 {
    selected.iter().map(|&i| sizes[i] as u128).sum()
}

fn digits(v: u64) -> usize {
    v.checked_ilog10().map_or(1, |d| d as usize + 1)
}

// One size per line plus the right-hand side, as written in instance files.
fn text_len(sizes: &[u64], rhs: u64) -> usize {
    digits(rhs) + sizes.iter().map(|&a| digits(a) + 1).sum::<usize>()
}

impl Cover {
    pub fn new(sizes: Vec<u64>, demand: u64) -> Result<Self> {
        check_sizes(&sizes)?;
        Ok(Cover { sizes, demand })
    }

    pub fn total_size(&self) -> u128 {
        self.sizes.iter().map(|&a| a as u128).sum()
    }
}

impl Structure for Cover {
    fn item_count(&self) -> usize {
        self.sizes.len()
    }

    fn is_feasible(&self, selected: &[usize]) -> bool {
        size_sum(&self.sizes, selected) >= self.demand as u128
    }

    fn encoded_len(&self) -> usize {
        text_len(&self.sizes, self.demand)
    }
}

impl Packing {
    pub fn new(sizes: Vec<u64>, capacity: u64) -> Result<Self> {
        check_sizes(&sizes)?;
        Ok(Packing { sizes, capacity })
    }
}

impl Structure for Packing {
    fn item_count(&self) -> usize {
        self.sizes.len()
    }

    fn is_feasible(&self, selected: &[usize]) -> bool {
        size_sum(&self.sizes, selected) <= self.capacity as u128
    }

    fn encoded_len(&self) -> usize {
        text_len(&self.sizes, self.capacity)
    }
}

/// Builds a MinKP instance from `(weight, size)` pairs.
pub fn min_knapsack(items: &[(u64, u64)], demand: u64) -> Result<MinKnapsack> {
    let (weights, sizes) = items.iter().copied().unzip();
    SubsetInstance::new(weights, Cover::new(sizes, demand)?, Sense::Minimize)
}

/// Builds a MaxKP instance from `(weight, size)` pairs.
pub fn max_knapsack(items: &[(u64, u64)], capacity: u64) -> Result<MaxKnapsack> {
    let (weights, sizes) = items.iter().copied().unzip();
    SubsetInstance::new(weights, Packing::new(sizes, capacity)?, Sense::Maximize)
}
