//! Seeded random problem generation for sweeps, self-tests and benches.

use rand::Rng;

use crate::state::{BoundaryState, CostProblem, Horizon, Order};

/// Ranges for [`random_problem`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemRanges {
    pub max_order: usize,
    pub max_dim: usize,
    pub horizon: (f64, f64),
    /// Boundary values are drawn uniformly from `[-value, value]`.
    pub value: f64,
}

impl Default for ProblemRanges {
    fn default() -> Self {
        Self {
            max_order: 8,
            max_dim: 3,
            horizon: (0.1, 10.0),
            value: 5.0,
        }
    }
}

pub fn random_state<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize, value: f64) -> BoundaryState {
    let values = (0..n * d).map(|_| rng.gen_range(-value..=value)).collect();
    BoundaryState::new(n, d, values).expect("finite values of the right shape")
}

pub fn random_problem<R: Rng + ?Sized>(rng: &mut R, ranges: &ProblemRanges) -> CostProblem {
    let n = rng.gen_range(1..=ranges.max_order);
    let d = rng.gen_range(1..=ranges.max_dim);
    let h = rng.gen_range(ranges.horizon.0..=ranges.horizon.1);
    let order = Order::with_limit(n, ranges.max_order).expect("order drawn within range");
    let horizon = Horizon::new(h).expect("positive horizon range");
    let start = random_state(rng, n, d, ranges.value);
    let end = random_state(rng, n, d, ranges.value);
    CostProblem::new(order, horizon, start, end).expect("matching shapes")
}

pub fn random_problems<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    ranges: &ProblemRanges,
) -> Vec<CostProblem> {
    (0..count).map(|_| random_problem(rng, ranges)).collect()
}
