//! Subset selection instances and the reports solvers return for them.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Whether the objective is minimized or maximized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sense::Minimize => f.write_str("minimize"),
            Sense::Maximize => f.write_str("maximize"),
        }
    }
}

/// The feasibility payload of an instance. Solvers never look inside it
/// except through this trait, and scaling never modifies it.
pub trait Structure: Clone + fmt::Debug + PartialEq + Eq {
    /// Number of ground-set elements the structure describes.
    fn item_count(&self) -> usize;

    /// `selected` holds distinct item indices, sorted ascending.
    fn is_feasible(&self, selected: &[usize]) -> bool;

    /// Length in bytes of the structure's text encoding.
    fn encoded_len(&self) -> usize;
}

/// A ground set with positive integer weights, a feasibility structure and
/// an optimization sense. Item `i` is the element with id `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetInstance<S> {
    weights: Vec<u64>,
    structure: S,
    sense: Sense,
}

impl<S: Structure> SubsetInstance<S> {
    pub fn new(weights: Vec<u64>, structure: S, sense: Sense) -> Result<Self> {
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Validation(format!(
                "item {i} has weight 0, weights must be positive integers"
            )));
        }
        if structure.item_count() != weights.len() {
            return Err(Error::Validation(format!(
                "structure describes {} items but {} weights were given",
                structure.item_count(),
                weights.len()
            )));
        }
        Ok(SubsetInstance {
            weights,
            structure,
            sense,
        })
    }

    /// Same structure and sense, new weights. Used to build scaled instances.
    pub fn with_weights(&self, weights: Vec<u64>) -> Result<Self> {
        SubsetInstance::new(weights, self.structure.clone(), self.sense)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, id: usize) -> u64 {
        self.weights[id]
    }

    pub fn items(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.weights.iter().copied().enumerate()
    }

    pub fn structure(&self) -> &S {
        &self.structure
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// W, the sum of all weights.
    pub fn total_weight(&self) -> u128 {
        self.weights.iter().map(|&w| w as u128).sum()
    }

    pub fn value_of(&self, selected: &[usize]) -> u128 {
        selected.iter().map(|&i| self.weights[i] as u128).sum()
    }

    pub fn is_feasible(&self, selected: &[usize]) -> bool {
        self.structure.is_feasible(selected)
    }

    /// Builds a report for `selected`, valuing it under this instance's weights.
    pub fn report(
        &self,
        mut selected: Vec<usize>,
        guarantee: Rational,
        work: Work,
    ) -> SolutionReport {
        selected.sort_unstable();
        selected.dedup();
        SolutionReport {
            value: self.value_of(&selected),
            feasible: self.is_feasible(&selected),
            selected,
            guarantee,
            bound_used: None,
            work,
            scaling: None,
        }
    }
}

/// Counted work of a solver run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Work {
    /// Dynamic programming cells evaluated.
    pub dp_cells: u128,
    /// Elementary steps spent by an approximation algorithm.
    pub approx_steps: u64,
}

impl Work {
    pub fn cells(dp_cells: u128) -> Self {
        Work {
            dp_cells,
            approx_steps: 0,
        }
    }

    pub fn steps(approx_steps: u64) -> Self {
        Work {
            dp_cells: 0,
            approx_steps,
        }
    }
}

impl std::ops::Add for Work {
    type Output = Work;

    fn add(self, rhs: Work) -> Work {
        Work {
            dp_cells: self.dp_cells + rhs.dp_cells,
            approx_steps: self.approx_steps + rhs.approx_steps,
        }
    }
}

/// What the scaling step did, when it ran.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingSummary {
    pub z: Rational,
    /// W' of the scaled instance, `None` when the original instance was solved directly.
    pub total_scaled_weight: Option<u128>,
    pub scaled_weight_bound: u128,
    pub big_items: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    /// Selected item ids, ascending.
    pub selected: Vec<usize>,
    /// Objective value under the original weights.
    pub value: u128,
    pub feasible: bool,
    /// Proven multiplicative factor relative to the optimum: 1 for exact
    /// solvers, rho for approximations, 1 +/- epsilon for the FPTAS.
    pub guarantee: Rational,
    /// UB or LB returned by the approximation the FPTAS was seeded with.
    pub bound_used: Option<u128>,
    pub work: Work,
    pub scaling: Option<ScalingSummary>,
}

/// Cheap pre-check used by every solver entry point.
pub(crate) fn check_sense<S: Structure>(
    instance: &SubsetInstance<S>,
    expected: Sense,
) -> Result<()> {
    if instance.sense() != expected {
        return Err(Error::Domain(format!(
            "solver expects a {expected} instance, got {}",
            instance.sense()
        )));
    }
    Ok(())
}
