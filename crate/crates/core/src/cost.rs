//! Cost evaluation routes and qualitative predicates.
//!
//! The multidimensional cost is block-diagonal across coordinates, so every
//! route runs a scalar pipeline per coordinate and sums.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrices::{build_a, build_a_inv, build_b};
use crate::matrix::DenseMatrix;
use crate::numbers::{factorial, falling, DoubleDouble, HPowers};
use crate::state::{BoundaryState, CostProblem, Horizon, Order};

/// Default relative tolerance for [`is_free_flight`].
pub const FREE_FLIGHT_TOL: f64 = 1e-10;

/// Negative totals within this fraction of the absolute quadratic-form mass
/// are rounding noise and are reported as zero.
pub const NEGATIVE_NOISE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Route {
    /// `bᵀ B A⁻¹ b` with `A⁻¹ = U⁻¹ L⁻¹`.
    #[default]
    Direct,
    /// `aᵀ K a` with `a = A⁻¹ b`, the coefficients of the optimal curve.
    KForm,
    /// Matrices at unit horizon, `b` rescaled, times `h^(1-2n)`.
    Scaled,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Direct, Route::KForm, Route::Scaled];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Direct => "alg51",
            Route::KForm => "kform",
            Route::Scaled => "scaled",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "alg51" | "direct" => Ok(Route::Direct),
            "kform" => Ok(Route::KForm),
            "scaled" => Ok(Route::Scaled),
            other => Err(format!(
                "unknown route `{other}` (expected alg51, kform or scaled)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostBreakdown {
    pub total: f64,
    pub route: Route,
    /// `n × d`; row `i` is `y_i` minus the `i`-th derivative at `h` of the
    /// Taylor polynomial through the start state.
    pub b_vector: DenseMatrix,
    /// Set when a slightly negative total was clamped to zero.
    pub noise_clamped: bool,
}

/// Start state propagated over `[0, h]` by its own Taylor polynomial:
/// row `i` is `Σ_{j>=i} h^{j-i}/(j-i)! x_j`.
fn propagate(n: usize, h: f64, start: &BoundaryState) -> Vec<f64> {
    let p = HPowers::new(h, 0, n);
    let d = start.dim();
    let mut out = vec![0.0; n * d];
    for i in 0..n {
        for c in 0..d {
            let mut acc = 0.0;
            for j in i..n {
                acc += p.pow((j - i) as isize) / factorial(j - i) as f64 * start.get(j, c);
            }
            out[i * d + c] = acc;
        }
    }
    out
}

/// Boundary mismatch vector `b`, `n × d`.
pub fn build_b_vector(problem: &CostProblem) -> DenseMatrix {
    let (n, d) = (problem.n(), problem.dim());
    let propagated = propagate(n, problem.h(), problem.start());
    let data = problem
        .end()
        .values()
        .iter()
        .zip(&propagated)
        .map(|(y, p)| y - p)
        .collect();
    DenseMatrix::from_row_major(n, d, data).expect("b has n × d entries")
}

/// `(vᵀ M v, Σ |v_i M_ij v_j|)`
fn quad_form(m: &DenseMatrix, v: &[f64]) -> (f64, f64) {
    let mut value = 0.0;
    let mut mass = 0.0;
    for (i, vi) in v.iter().enumerate() {
        let row = m.row(i);
        let mut acc = 0.0;
        for (mij, vj) in row.iter().zip(v) {
            acc += mij * vj;
            mass += (vi * mij * vj).abs();
        }
        value += vi * acc;
    }
    (value, mass)
}

/// `aᵀ K a` for the Gram matrix `K` of the `n`-th derivatives of
/// `t^n, .., t^{2n-1}` on `[0, h]`.
///
/// Uses `K = h D H D` with `D = diag((n+i)!/i! h^i)` and `H` the Hilbert
/// matrix, and accumulates each anti-diagonal of the form in double-double.
/// The form cancels heavily (absolute mass exceeds the value by up to ~1e8
/// at n = 8), so rounding the entries of `K` in plain `f64` costs about
/// seven digits.
fn gram_form(n: Order, h: Horizon, coeffs: &[f64]) -> (f64, f64) {
    let size = n.get();
    let p = HPowers::for_order(h.get(), size);
    let scaled: Vec<f64> = (0..size)
        .map(|i| falling(size + i, size) as f64 * coeffs[i] * p.pow(i as isize))
        .collect();
    let mut acc = DoubleDouble::default();
    let mut mass = 0.0;
    for s in 0..2 * size - 1 {
        let mut diagonal = DoubleDouble::default();
        for i in s.saturating_sub(size - 1)..=s.min(size - 1) {
            let term = DoubleDouble::product(scaled[i], scaled[s - i]);
            mass += term.hi.abs() / (s + 1) as f64;
            diagonal = diagonal.add(term);
        }
        acc = acc.add(diagonal.div_f64((s + 1) as f64));
    }
    (h.get() * acc.to_f64(), h.get() * mass)
}

fn raw_total(problem: &CostProblem, route: Route, b: &DenseMatrix) -> (f64, f64) {
    let (n, h) = (problem.order(), problem.horizon());
    let d = problem.dim();
    let mut total = 0.0;
    let mut mass = 0.0;
    match route {
        Route::Direct => {
            let m = &build_b(n, h) * &build_a_inv(n, h);
            for c in 0..d {
                let (v, w) = quad_form(&m, &b.column(c));
                total += v;
                mass += w;
            }
        }
        Route::KForm => {
            let a_inv = build_a_inv(n, h);
            for c in 0..d {
                let coeffs = a_inv.mul_vec(&b.column(c));
                let (v, w) = gram_form(n, h, &coeffs);
                total += v;
                mass += w;
            }
        }
        Route::Scaled => {
            let unit = Horizon::unit();
            let m = &build_b(n, unit) * &build_a_inv(n, unit);
            let p = HPowers::for_order(h.get(), n.get());
            let prefactor = p.pow(1 - 2 * n.get() as isize);
            for c in 0..d {
                let scaled: Vec<f64> = b
                    .column(c)
                    .iter()
                    .enumerate()
                    .map(|(i, v)| p.pow(i as isize) * v)
                    .collect();
                let (v, w) = quad_form(&m, &scaled);
                total += v;
                mass += w;
            }
            total *= prefactor;
            mass *= prefactor;
        }
    }
    (total, mass)
}

/// Cost through the requested route.
pub fn cost_with_route(problem: &CostProblem, route: Route) -> Result<CostBreakdown> {
    let b = build_b_vector(problem);
    let (total, mass) = raw_total(problem, route, &b);
    let (total, noise_clamped) = clamp_negative(total, mass)?;
    Ok(CostBreakdown {
        total,
        route,
        b_vector: b,
        noise_clamped,
    })
}

fn clamp_negative(total: f64, mass: f64) -> Result<(f64, bool)> {
    if !total.is_finite() {
        return Err(Error::NonFinite("cost total"));
    }
    if total >= 0.0 {
        return Ok((total, false));
    }
    let allowance = NEGATIVE_NOISE_TOL * (1.0 + mass);
    if total >= -allowance {
        Ok((0.0, true))
    } else {
        Err(Error::InternalConsistency { total, allowance })
    }
}

/// Cost via `bᵀ B A⁻¹ b`.
pub fn cost(problem: &CostProblem) -> Result<CostBreakdown> {
    cost_with_route(problem, Route::Direct)
}

/// Cost via `aᵀ K a` on the optimal coefficients.
pub fn cost_via_k(problem: &CostProblem) -> Result<f64> {
    cost_with_route(problem, Route::KForm).map(|c| c.total)
}

/// Cost via unit-horizon matrices and the rescaled mismatch vector. Better
/// conditioned for `h` far from one.
pub fn cost_scaled(problem: &CostProblem) -> Result<f64> {
    cost_with_route(problem, Route::Scaled).map(|c| c.total)
}

/// Symmetric part of `B A⁻¹`; the cost is `Σ_c b_cᵀ H b_c`.
pub fn hessian_h(n: Order, h: Horizon) -> DenseMatrix {
    let m = &build_b(n, h) * &build_a_inv(n, h);
    let size = n.get();
    DenseMatrix::from_fn(size, size, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]))
}

/// The end state reached at `h` by the degree `n - 1` Taylor polynomial of
/// `start`; the unique end state with zero cost.
pub fn free_flight_target(n: Order, h: Horizon, start: &BoundaryState) -> Result<BoundaryState> {
    if start.order() != n.get() {
        return Err(Error::ShapeMismatch(format!(
            "start state has {} derivative rows, order is {}",
            start.order(),
            n.get()
        )));
    }
    BoundaryState::new(n.get(), start.dim(), propagate(n.get(), h.get(), start))
}

/// True when `max |b| <= tol (1 + max |inputs|)`.
pub fn is_free_flight(problem: &CostProblem, tol: f64) -> bool {
    let b = build_b_vector(problem);
    b.max_abs() <= tol * (1.0 + problem.input_scale())
}

/// Drops the position rows: the derivative of an admissible curve is
/// admissible for the reduced problem, so its cost is no larger.
pub fn reduce_order(problem: &CostProblem) -> Result<CostProblem> {
    let lower = problem.order().lower().ok_or(Error::OrderTooSmall)?;
    CostProblem::new(
        lower,
        problem.horizon(),
        problem.start().drop_first(),
        problem.end().drop_first(),
    )
}

/// Rough condition estimate `‖A‖∞ ‖A⁻¹‖∞`, at least one.
pub fn condition_scale(n: Order, h: Horizon) -> f64 {
    (build_a(n, h).norm_inf() * build_a_inv(n, h).norm_inf()).max(1.0)
}
