//! The optimal curve: a polynomial of degree `2n - 1` per coordinate.
//!
//! Its low coefficients come straight from the start state,
//! `a_k = x_k / k!` for `k < n`, and the high block solves
//! `A (a_n, .., a_{2n-1})ᵀ = b`.

use crate::cost::build_b_vector;
use crate::error::Result;
use crate::matrices::build_a_inv;
use crate::numbers::{factorial, falling};
use crate::state::{CostProblem, Horizon, Order};

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPolynomial {
    order: Order,
    horizon: Horizon,
    dim: usize,
    /// `2n × d`, row `i` holds `a_i`.
    coeffs: Vec<f64>,
}

/// Value of one derivative at one time.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub values: Vec<f64>,
    /// `t` lies outside `[0, h]`.
    pub extrapolated: bool,
}

impl TrajectoryPolynomial {
    /// `coeffs` is row-major `2n × dim`.
    pub fn from_coefficients(
        order: Order,
        horizon: Horizon,
        dim: usize,
        coeffs: Vec<f64>,
    ) -> Option<Self> {
        (dim > 0 && coeffs.len() == 2 * order.get() * dim).then_some(Self {
            order,
            horizon,
            dim,
            coeffs,
        })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn horizon(&self) -> Horizon {
        self.horizon
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize, component: usize) -> f64 {
        self.coeffs[i * self.dim + component]
    }

    /// Number of coefficient rows, `2n`.
    pub fn len(&self) -> usize {
        2 * self.order.get()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.coeffs.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }

    /// `k`-th derivative at `t`. Orders `k >= 2n` give zeros.
    pub fn eval(&self, k: usize, t: f64) -> Sample {
        let rows = self.len();
        let mut values = vec![0.0; self.dim];
        if k < rows {
            for (c, out) in values.iter_mut().enumerate() {
                let mut acc = 0.0;
                for i in (k..rows).rev() {
                    acc = acc * t + falling(i, k) as f64 * self.coefficient(i, c);
                }
                *out = acc;
            }
        }
        Sample {
            values,
            extrapolated: !(0.0..=self.horizon.get()).contains(&t),
        }
    }

    /// `Σ_i |i!/(i-k)! a_i t^{i-k}|` per component: the absolute size of the
    /// terms summed by [`eval`](Self::eval). Rounding the coefficients alone
    /// moves the result by about `ε` times this, so it is the natural scale
    /// for judging evaluation error when the terms cancel.
    pub fn evaluation_scale(&self, k: usize, t: f64) -> Vec<f64> {
        let rows = self.len();
        let mut scale = vec![0.0; self.dim];
        if k < rows {
            let t = t.abs();
            for (c, out) in scale.iter_mut().enumerate() {
                let mut acc = 0.0;
                for i in (k..rows).rev() {
                    acc = acc * t + (falling(i, k) as f64 * self.coefficient(i, c)).abs();
                }
                *out = acc;
            }
        }
        scale
    }

    /// Shorthand for `eval(k, t).values`.
    pub fn derivative(&self, k: usize, t: f64) -> Vec<f64> {
        self.eval(k, t).values
    }
}

/// Optimal polynomial for the problem.
pub fn solve_trajectory(problem: &CostProblem) -> Result<TrajectoryPolynomial> {
    let (n, d) = (problem.n(), problem.dim());
    let b = build_b_vector(problem);
    let a_inv = build_a_inv(problem.order(), problem.horizon());
    let mut coeffs = vec![0.0; 2 * n * d];
    for k in 0..n {
        let scale = factorial(k) as f64;
        for c in 0..d {
            coeffs[k * d + c] = problem.start().get(k, c) / scale;
        }
    }
    for c in 0..d {
        let high = a_inv.mul_vec(&b.column(c));
        for (j, v) in high.into_iter().enumerate() {
            coeffs[(n + j) * d + c] = v;
        }
    }
    Ok(TrajectoryPolynomial {
        order: problem.order(),
        horizon: problem.horizon(),
        dim: d,
        coeffs,
    })
}

/// Free-function form of [`TrajectoryPolynomial::eval`].
pub fn eval_trajectory(poly: &TrajectoryPolynomial, k: usize, t: f64) -> Sample {
    poly.eval(k, t)
}
