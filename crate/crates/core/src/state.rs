use crate::error::{Error, Result};

/// Default upper bound on the order. Up to here `(2n - 1)!` and the
/// conditioning of the Wronskian stay comfortably inside double precision.
pub const DEFAULT_MAX_ORDER: usize = 12;

/// Hard ceiling for [`Order::with_limit`]; the quadrature oracle uses
/// `n + 1` Gauss–Legendre points and tables go up to 16.
pub const SUPPORTED_MAX_ORDER: usize = 15;

/// Validated derivative order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(usize);

impl Order {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DEFAULT_MAX_ORDER)
    }

    /// Accepts orders up to `limit`, itself capped at [`SUPPORTED_MAX_ORDER`].
    pub fn with_limit(n: usize, limit: usize) -> Result<Self> {
        let max = limit.min(SUPPORTED_MAX_ORDER);
        if n == 0 || n > max {
            return Err(Error::OrderOutOfRange { n, max });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// The order one below, if there is one.
    pub fn lower(self) -> Option<Self> {
        (self.0 > 1).then(|| Self(self.0 - 1))
    }
}

/// Validated positive, finite time horizon `h`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Horizon(f64);

impl Horizon {
    pub fn new(h: f64) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::NonPositiveHorizon(h));
        }
        Ok(Self(h))
    }

    pub fn unit() -> Self {
        Self(1.0)
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Derivative stack at one endpoint: row `k` is the `k`-th derivative, a
/// vector in `R^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryState {
    n: usize,
    d: usize,
    values: Vec<f64>,
}

impl BoundaryState {
    /// `values` is row-major `n × d`.
    pub fn new(n: usize, d: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::ShapeMismatch(format!(
                "boundary state must be non-empty, got {n}x{d}"
            )));
        }
        if values.len() != n * d {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a {n}x{d} boundary state",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("boundary state"));
        }
        Ok(Self { n, d, values })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let d = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != d) {
            return Err(Error::ShapeMismatch(format!(
                "derivative {bad} has {} components, expected {d}",
                rows[bad].len()
            )));
        }
        Self::new(rows.len(), d, rows.concat())
    }

    pub fn zeros(n: usize, d: usize) -> Self {
        Self {
            n,
            d,
            values: vec![0.0; n * d],
        }
    }

    /// Number of derivative rows.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn derivative(&self, k: usize) -> &[f64] {
        &self.values[k * self.d..(k + 1) * self.d]
    }

    pub fn get(&self, k: usize, component: usize) -> f64 {
        self.values[k * self.d + component]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|k| self.derivative(k).to_vec()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Drops the position row, leaving the stack of first and higher
    /// derivatives.
    pub(crate) fn drop_first(&self) -> Self {
        Self {
            n: self.n - 1,
            d: self.d,
            values: self.values[self.d..].to_vec(),
        }
    }

    /// Multiplies row `k` by `h^k`, the boundary data of the same problem
    /// rescaled to unit horizon.
    pub fn scaled_by_powers(&self, h: f64) -> Self {
        let mut out = self.clone();
        let mut p = 1.0;
        for k in 0..self.n {
            for v in &mut out.values[k * self.d..(k + 1) * self.d] {
                *v *= p;
            }
            p *= h;
        }
        out
    }
}

/// A complete boundary value problem for the cost.
#[derive(Debug, Clone, PartialEq)]
pub struct CostProblem {
    order: Order,
    horizon: Horizon,
    start: BoundaryState,
    end: BoundaryState,
}

impl CostProblem {
    pub fn new(
        order: Order,
        horizon: Horizon,
        start: BoundaryState,
        end: BoundaryState,
    ) -> Result<Self> {
        let n = order.get();
        for (label, s) in [("start", &start), ("end", &end)] {
            if s.order() != n {
                return Err(Error::ShapeMismatch(format!(
                    "{label} state has {} derivative rows, order is {n}",
                    s.order()
                )));
            }
        }
        if start.dim() != end.dim() {
            return Err(Error::ShapeMismatch(format!(
                "start dimension {} differs from end dimension {}",
                start.dim(),
                end.dim()
            )));
        }
        Ok(Self {
            order,
            horizon,
            start,
            end,
        })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn n(&self) -> usize {
        self.order.get()
    }

    pub fn horizon(&self) -> Horizon {
        self.horizon
    }

    pub fn h(&self) -> f64 {
        self.horizon.get()
    }

    pub fn dim(&self) -> usize {
        self.start.dim()
    }

    pub fn start(&self) -> &BoundaryState {
        &self.start
    }

    pub fn end(&self) -> &BoundaryState {
        &self.end
    }

    /// Largest absolute boundary value over both endpoints.
    pub fn input_scale(&self) -> f64 {
        self.start.max_abs().max(self.end.max_abs())
    }
}
