//! Evaluation codes: generator matrices, weight distributions and the
//! minimum distance of the dual.

mod dual;
mod matrix;
mod weights;

pub use dual::{dual_distance_upto, MAX_DUAL_SEARCH};
pub use matrix::{evaluate_system, rank, GeneratorMatrix, LinearSystemBasis};
pub use weights::{
    message_count, weight_distribution, weight_distribution_by_classes, weight_of_polynomial, WeightDistribution,
    BIG_BUDGET, DEFAULT_BUDGET,
};

use serde::Serialize;

/// `[n, k, d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl CodeParameters {
    /// `k + d <= n + 1`.
    pub fn satisfies_singleton(&self) -> bool {
        self.d.is_none_or(|d| self.k + d <= self.n + 1)
    }
}

impl std::fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{}, {}, {}]", self.n, self.k, d),
            None => write!(f, "[{}, {}, -]", self.n, self.k),
        }
    }
}
