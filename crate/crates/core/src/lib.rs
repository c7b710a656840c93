//! Mean squared derivative cost.
//!
//! For an order `n`, horizon `h` and two derivative stacks
//! `x = (x_0, .., x_{n-1})`, `y = (y_0, .., y_{n-1})` in `R^d`, the cost is
//!
//! ```text
//! C_{n,h}(x; y) = min ∫_0^h |ξ^(n)(t)|² dt
//! ```
//!
//! over curves whose first `n - 1` derivatives match `x` at `t = 0` and `y`
//! at `t = h`. The minimiser is a polynomial of degree `2n - 1`, and the
//! minimum is the quadratic form `bᵀ B A⁻¹ b` built from the Wronskian
//! matrix `A` of `t^n, .., t^{2n-1}` at `t = h`.
//!
//! The crate is organised as:
//!
//! * [`matrices`]: closed-form builders for `A`, `V`, `B`, `L`, `U`, their
//!   inverses, and the Gram matrix `K`.
//! * [`cost`]: the three cost routes, the symmetrised Hessian, free-flight
//!   and order-reduction helpers.
//! * [`trajectory`]: the optimal polynomial and its derivatives.
//! * [`oracle`]: independent checks (pivoted elimination, Gauss–Legendre
//!   quadrature of the functional, determinant by elimination).
//! * [`transport`]: discrete Monge–Kantorovich cost between uniform measures.
//! * [`batch`]: data-parallel batch evaluation (rayon, behind the `parallel`
//!   feature) with a sequential counterpart.
//!
//! ```
//! use msd_core::{cost, BoundaryState, CostProblem, Horizon, Order};
//!
//! // minimum jerk, rest to rest over unit distance and unit time
//! let start = BoundaryState::from_rows(&[vec![0.0], vec![0.0], vec![0.0]]).unwrap();
//! let end = BoundaryState::from_rows(&[vec![1.0], vec![0.0], vec![0.0]]).unwrap();
//! let problem = CostProblem::new(Order::new(3).unwrap(), Horizon::new(1.0).unwrap(), start, end).unwrap();
//! let c = cost::cost(&problem).unwrap();
//! assert!((c.total - 720.0).abs() < 1e-9);
//! ```

pub mod batch;
pub mod cost;
mod error;
pub mod gauss_legendre;
pub mod golden;
pub mod matrices;
mod matrix;
mod numbers;
pub mod oracle;
mod par;
pub mod sample;
pub mod selftest;
mod state;
pub mod trajectory;
pub mod transport;

pub use cost::{CostBreakdown, Route};
pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use state::{
    BoundaryState, CostProblem, Horizon, Order, DEFAULT_MAX_ORDER, SUPPORTED_MAX_ORDER,
};
pub use trajectory::{Sample, TrajectoryPolynomial};
pub use transport::{DiscreteMeasure, TransportPlan};
