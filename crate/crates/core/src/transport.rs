//! Discrete Monge–Kantorovich cost between uniform measures with the mean
//! squared derivative cost as ground cost.
//!
//! For two uniform measures with the same number of atoms the optimal
//! coupling can be taken to be a permutation (Birkhoff), so the problem is a
//! linear assignment. The ground cost is not symmetric for `n >= 2`; values
//! are directed from `mu` to `nu`.

use crate::cost::cost;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::par::{map_indices, map_indices_sequential};
use crate::state::{BoundaryState, CostProblem, Horizon, Order};

/// Largest measure accepted by [`w2_uniform`].
pub const MAX_ATOMS: usize = 512;

/// Uniformly weighted atoms in `R^{dn}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    points: Vec<BoundaryState>,
}

impl DiscreteMeasure {
    pub fn new(points: Vec<BoundaryState>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyMeasure)?;
        let (n, d) = (first.order(), first.dim());
        if let Some(bad) = points.iter().position(|p| p.order() != n || p.dim() != d) {
            return Err(Error::ShapeMismatch(format!(
                "atom {bad} is {}x{}, atom 0 is {n}x{d}",
                points[bad].order(),
                points[bad].dim()
            )));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[BoundaryState] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn order(&self) -> usize {
        self.points[0].order()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransportPlan {
    /// Mean ground cost of the optimal matching.
    pub value: f64,
    /// `assignment[i]` is the atom of `nu` receiving atom `i` of `mu`.
    pub assignment: Vec<usize>,
}

fn check_pair(mu: &DiscreteMeasure, nu: &DiscreteMeasure) -> Result<Order> {
    if mu.len() != nu.len() {
        return Err(Error::SizeMismatch {
            left: mu.len(),
            right: nu.len(),
        });
    }
    if mu.order() != nu.order() || mu.dim() != nu.dim() {
        return Err(Error::ShapeMismatch(format!(
            "measures live on {}x{} and {}x{} states",
            mu.order(),
            mu.dim(),
            nu.order(),
            nu.dim()
        )));
    }
    Order::new(mu.order())
}

fn entry(order: Order, h: Horizon, from: &BoundaryState, to: &BoundaryState) -> Result<f64> {
    let problem = CostProblem::new(order, h, from.clone(), to.clone())?;
    Ok(cost(&problem)?.total)
}

fn assemble(m: usize, entries: Vec<Result<f64>>) -> Result<DenseMatrix> {
    let data = entries.into_iter().collect::<Result<Vec<f64>>>()?;
    DenseMatrix::from_row_major(m, m, data)
}

/// `m × m` matrix of costs from atom `i` of `mu` to atom `j` of `nu`.
pub fn ground_cost_matrix(
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
    h: Horizon,
) -> Result<DenseMatrix> {
    let order = check_pair(mu, nu)?;
    let m = mu.len();
    let entries = map_indices(m * m, |k| {
        entry(order, h, &mu.points[k / m], &nu.points[k % m])
    });
    assemble(m, entries)
}

pub fn ground_cost_matrix_sequential(
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
    h: Horizon,
) -> Result<DenseMatrix> {
    let order = check_pair(mu, nu)?;
    let m = mu.len();
    let entries = map_indices_sequential(m * m, |k| {
        entry(order, h, &mu.points[k / m], &nu.points[k % m])
    });
    assemble(m, entries)
}

/// Optimal uniform coupling of `mu` and `nu` and its mean cost.
pub fn w2_uniform(mu: &DiscreteMeasure, nu: &DiscreteMeasure, h: Horizon) -> Result<TransportPlan> {
    check_pair(mu, nu)?;
    if mu.len() > MAX_ATOMS {
        return Err(Error::TooManyPoints {
            size: mu.len(),
            limit: MAX_ATOMS,
        });
    }
    let costs = ground_cost_matrix(mu, nu, h)?;
    let assignment = hungarian(&costs);
    let value = assignment_cost(&costs, &assignment) / mu.len() as f64;
    Ok(TransportPlan { value, assignment })
}

/// `Σ_i C[i][σ(i)]`, summed in row order.
pub fn assignment_cost(costs: &DenseMatrix, assignment: &[usize]) -> f64 {
    assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| costs[(i, j)])
        .sum()
}

/// Minimum-cost perfect matching of a square cost matrix, `O(m³)`.
///
/// Shortest augmenting paths with row/column potentials. Ties go to the
/// lowest column index, so the result is deterministic.
pub fn hungarian(costs: &DenseMatrix) -> Vec<usize> {
    assert!(costs.is_square(), "assignment needs a square cost matrix");
    let m = costs.rows();
    // 1-based bookkeeping; column 0 is a virtual source.
    let mut u = vec![0.0f64; m + 1];
    let mut v = vec![0.0f64; m + 1];
    let mut row_of_col = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for row in 1..=m {
        row_of_col[0] = row;
        let mut col0 = 0;
        let mut min_slack = vec![f64::INFINITY; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[col0] = true;
            let i0 = row_of_col[col0];
            let mut delta = f64::INFINITY;
            let mut col1 = 0;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                let reduced = costs[(i0 - 1, j - 1)] - u[i0] - v[j];
                if reduced < min_slack[j] {
                    min_slack[j] = reduced;
                    way[j] = col0;
                }
                if min_slack[j] < delta {
                    delta = min_slack[j];
                    col1 = j;
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            col0 = col1;
            if row_of_col[col0] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col0];
            row_of_col[col0] = row_of_col[prev];
            col0 = prev;
            if col0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; m];
    for j in 1..=m {
        assignment[row_of_col[j] - 1] = j - 1;
    }
    assignment
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::free_flight_target;

    fn rest(position: f64) -> BoundaryState {
        BoundaryState::from_rows(&[vec![position], vec![0.0]]).unwrap()
    }

    #[test]
    fn rest_state_example() {
        let mu = DiscreteMeasure::new(vec![rest(0.0), rest(1.0)]).unwrap();
        let c = ground_cost_matrix(&mu, &mu, Horizon::unit()).unwrap();
        let expected = [0.0, 12.0, 12.0, 0.0];
        for (g, e) in c.data().iter().zip(expected) {
            assert!((g - e).abs() < 1e-12);
        }
        let plan = w2_uniform(&mu, &mu, Horizon::unit()).unwrap();
        assert_eq!(plan.value, 0.0);
        assert_eq!(plan.assignment, vec![0, 1]);
        assert_eq!(
            ground_cost_matrix_sequential(&mu, &mu, Horizon::unit()).unwrap(),
            c
        );
    }

    #[test]
    fn singleton_measures() {
        let a = BoundaryState::from_rows(&[vec![0.5, 1.0], vec![0.0, 2.0]]).unwrap();
        let b = BoundaryState::from_rows(&[vec![-1.0, 0.0], vec![3.0, 0.5]]).unwrap();
        let h = Horizon::new(1.5).unwrap();
        let mu = DiscreteMeasure::new(vec![a.clone()]).unwrap();
        let nu = DiscreteMeasure::new(vec![b.clone()]).unwrap();
        let direct = cost(&CostProblem::new(Order::new(2).unwrap(), h, a, b).unwrap())
            .unwrap()
            .total;
        assert_eq!(ground_cost_matrix(&mu, &nu, h).unwrap().data(), &[direct]);
        let plan = w2_uniform(&mu, &nu, h).unwrap();
        assert_eq!(plan.value, direct);
        assert_eq!(plan.assignment, vec![0]);
    }

    #[test]
    fn free_flight_images_cost_nothing() {
        let h = Horizon::new(0.7).unwrap();
        let order = Order::new(3).unwrap();
        let starts: Vec<BoundaryState> = (0..5)
            .map(|k| {
                BoundaryState::new(3, 1, vec![k as f64, 1.0 - k as f64, 0.5 * k as f64]).unwrap()
            })
            .collect();
        let mut targets: Vec<BoundaryState> = starts
            .iter()
            .map(|s| free_flight_target(order, h, s).unwrap())
            .collect();
        targets.rotate_left(2);
        let mu = DiscreteMeasure::new(starts).unwrap();
        let nu = DiscreteMeasure::new(targets).unwrap();
        let c = ground_cost_matrix(&mu, &nu, h).unwrap();
        let plan = w2_uniform(&mu, &nu, h).unwrap();
        assert_eq!(plan.value, 0.0);
        assert_eq!(plan.assignment, vec![3, 4, 0, 1, 2]);
        assert!(c.data().iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn errors() {
        let mu = DiscreteMeasure::new(vec![rest(0.0), rest(1.0)]).unwrap();
        let nu = DiscreteMeasure::new(vec![rest(0.0)]).unwrap();
        assert_eq!(
            w2_uniform(&mu, &nu, Horizon::unit()),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        );
        assert_eq!(DiscreteMeasure::new(vec![]), Err(Error::EmptyMeasure));
        let mixed = DiscreteMeasure::new(vec![rest(0.0), BoundaryState::zeros(3, 1)]);
        assert!(matches!(mixed, Err(Error::ShapeMismatch(_))));
        let other =
            DiscreteMeasure::new(vec![BoundaryState::zeros(3, 1), BoundaryState::zeros(3, 1)])
                .unwrap();
        assert!(matches!(
            ground_cost_matrix(&mu, &other, Horizon::unit()),
            Err(Error::ShapeMismatch(_))
        ));
        let big: Vec<BoundaryState> = (0..=MAX_ATOMS).map(|k| rest(k as f64)).collect();
        let big = DiscreteMeasure::new(big).unwrap();
        assert!(matches!(
            w2_uniform(&big, &big, Horizon::unit()),
            Err(Error::TooManyPoints { .. })
        ));
    }

    #[test]
    fn hungarian_small_cases() {
        let c = DenseMatrix::from_rows(&[
            vec![4.0, 1.0, 3.0],
            vec![2.0, 0.0, 5.0],
            vec![3.0, 2.0, 2.0],
        ])
        .unwrap();
        let a = hungarian(&c);
        assert_eq!(assignment_cost(&c, &a), 5.0);
        // all ties: lowest-index preference gives the identity
        let flat = DenseMatrix::from_fn(4, 4, |_, _| 1.0);
        assert_eq!(hungarian(&flat), vec![0, 1, 2, 3]);
        assert_eq!(hungarian(&DenseMatrix::zeros(0, 0)), Vec::<usize>::new());
    }
}
