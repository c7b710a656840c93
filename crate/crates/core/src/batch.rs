//! Batch evaluation over many independent problems.
//!
//! The default entry points run on the rayon pool when the `parallel`
//! feature is on (the default) and sequentially otherwise. The
//! `*_sequential` variants are always single-threaded; results are
//! identical either way since every problem is evaluated independently.

use crate::cost::{cost_with_route, CostBreakdown, Route};
use crate::error::Result;
use crate::oracle::quadrature_cost;
use crate::par::{map_indices, map_indices_sequential};
use crate::state::CostProblem;
use crate::trajectory::solve_trajectory;

pub fn cost_batch(problems: &[CostProblem], route: Route) -> Vec<Result<CostBreakdown>> {
    map_indices(problems.len(), |i| cost_with_route(&problems[i], route))
}

pub fn cost_batch_sequential(problems: &[CostProblem], route: Route) -> Vec<Result<CostBreakdown>> {
    map_indices_sequential(problems.len(), |i| cost_with_route(&problems[i], route))
}

/// Quadrature of the optimal trajectory for each problem.
pub fn quadrature_batch(problems: &[CostProblem]) -> Vec<Result<f64>> {
    map_indices(problems.len(), |i| {
        solve_trajectory(&problems[i]).map(|p| quadrature_cost(&p))
    })
}

pub fn quadrature_batch_sequential(problems: &[CostProblem]) -> Vec<Result<f64>> {
    map_indices_sequential(problems.len(), |i| {
        solve_trajectory(&problems[i]).map(|p| quadrature_cost(&p))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{BoundaryState, Horizon, Order};

    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        let problems: Vec<CostProblem> = (1..=40)
            .map(|k| {
                let n = k % 6 + 1;
                let start = BoundaryState::new(
                    n,
                    2,
                    (0..2 * n)
                        .map(|i| (i as f64 * 0.37 + k as f64).sin())
                        .collect(),
                )
                .unwrap();
                let end = BoundaryState::new(
                    n,
                    2,
                    (0..2 * n)
                        .map(|i| (i as f64 * 1.1 - k as f64).cos())
                        .collect(),
                )
                .unwrap();
                CostProblem::new(
                    Order::new(n).unwrap(),
                    Horizon::new(0.5 + k as f64 * 0.1).unwrap(),
                    start,
                    end,
                )
                .unwrap()
            })
            .collect();
        for route in Route::ALL {
            let par = cost_batch(&problems, route);
            let seq = cost_batch_sequential(&problems, route);
            for (a, b) in par.iter().zip(&seq) {
                assert_eq!(
                    a.as_ref().unwrap().total.to_bits(),
                    b.as_ref().unwrap().total.to_bits()
                );
            }
        }
        assert_eq!(
            quadrature_batch(&problems),
            quadrature_batch_sequential(&problems)
        );
    }
}
