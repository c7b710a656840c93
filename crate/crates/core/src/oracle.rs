//! Verification paths that never touch the closed-form inverses.

use crate::error::{Error, Result};
use crate::gauss_legendre;
use crate::matrix::DenseMatrix;
use crate::trajectory::TrajectoryPolynomial;

/// Pivots below this fraction of `max |A|` are treated as zero.
pub const PIVOT_THRESHOLD: f64 = 1e-13;

/// Solves `A X = rhs` by Gaussian elimination with partial pivoting.
pub fn pivoted_solve(a: &DenseMatrix, rhs: &DenseMatrix) -> Result<DenseMatrix> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix is not square",
            a.rows(),
            a.cols()
        )));
    }
    if rhs.rows() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side has {} rows, matrix has {}",
            rhs.rows(),
            a.rows()
        )));
    }
    let n = a.rows();
    let threshold = PIVOT_THRESHOLD * a.max_abs();
    let mut m = a.clone();
    let mut x = rhs.clone();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| m[(r, col)].abs().total_cmp(&m[(s, col)].abs()))
            .expect("non-empty range");
        let pivot = m[(pivot_row, col)];
        if pivot.is_nan() || pivot.abs() <= threshold {
            return Err(Error::SingularMatrix {
                column: col,
                pivot: pivot.abs(),
                threshold,
            });
        }
        if pivot_row != col {
            swap_rows(&mut m, col, pivot_row);
            swap_rows(&mut x, col, pivot_row);
        }
        for r in col + 1..n {
            let factor = m[(r, col)] / pivot;
            if factor == 0.0 {
                continue;
            }
            m[(r, col)] = 0.0;
            for c in col + 1..n {
                m[(r, c)] -= factor * m[(col, c)];
            }
            for c in 0..x.cols() {
                x[(r, c)] -= factor * x[(col, c)];
            }
        }
    }
    for row in (0..n).rev() {
        for c in 0..x.cols() {
            let mut acc = x[(row, c)];
            for k in row + 1..n {
                acc -= m[(row, k)] * x[(k, c)];
            }
            x[(row, c)] = acc / m[(row, row)];
        }
    }
    Ok(x)
}

fn swap_rows(m: &mut DenseMatrix, a: usize, b: usize) {
    for c in 0..m.cols() {
        let tmp = m[(a, c)];
        m[(a, c)] = m[(b, c)];
        m[(b, c)] = tmp;
    }
}

/// Inverse by solving against the identity column by column.
pub fn pivoted_inverse(a: &DenseMatrix) -> Result<DenseMatrix> {
    pivoted_solve(a, &DenseMatrix::identity(a.rows()))
}

/// Determinant as the signed product of elimination pivots. Zero for a
/// singular matrix.
///
/// Rows and then columns are first scaled by powers of two so their largest
/// entry is near one. The scaling is exact and undone at the end; it keeps
/// partial pivoting accurate on the badly scaled Wronskians (about 1e-9
/// relative at n = 8 instead of 2e-8).
pub fn elimination_det(a: &DenseMatrix) -> f64 {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    let (mut m, rows, cols) = equilibrate(a);
    let exponent = -rows.iter().chain(&cols).sum::<i32>();
    let mut det = 1.0;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| m[(r, col)].abs().total_cmp(&m[(s, col)].abs()))
            .expect("non-empty range");
        let pivot = m[(pivot_row, col)];
        if pivot == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            swap_rows(&mut m, col, pivot_row);
            det = -det;
        }
        det *= pivot;
        for r in col + 1..n {
            let factor = m[(r, col)] / pivot;
            for c in col + 1..n {
                m[(r, c)] -= factor * m[(col, c)];
            }
        }
    }
    det * 2f64.powi(exponent)
}

/// Exact power-of-two scaling `R A C`, rows first. Returns the scaled matrix
/// and the exponents of `R` and `C`.
fn equilibrate(a: &DenseMatrix) -> (DenseMatrix, Vec<i32>, Vec<i32>) {
    let n = a.rows();
    let mut m = a.clone();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let e = balancing_exponent((0..n).map(|j| m[(i, j)]));
        for j in 0..n {
            m[(i, j)] *= 2f64.powi(e);
        }
        rows.push(e);
    }
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e = balancing_exponent((0..n).map(|i| m[(i, j)]));
        for i in 0..n {
            m[(i, j)] *= 2f64.powi(e);
        }
        cols.push(e);
    }
    (m, rows, cols)
}

/// Inverse through [`pivoted_inverse`] of the power-of-two equilibrated
/// matrix, `A⁻¹ = C (R A C)⁻¹ R`.
///
/// The pivot threshold of [`pivoted_solve`] is relative to `max |A|`, which
/// rejects nonsingular Wronskians whose columns span many decades (from
/// n = 8 at h = 1/2, n = 9 at h = 1). After equilibration only genuinely
/// tiny pivots are rejected.
pub fn equilibrated_inverse(a: &DenseMatrix) -> Result<DenseMatrix> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix is not square",
            a.rows(),
            a.cols()
        )));
    }
    let (m, rows, cols) = equilibrate(a);
    let inv = pivoted_inverse(&m)?;
    Ok(DenseMatrix::from_fn(a.rows(), a.cols(), |i, j| {
        inv[(i, j)] * 2f64.powi(cols[i] + rows[j])
    }))
}

/// Power of two bringing the largest magnitude near one; 0 for a zero line.
fn balancing_exponent(values: impl Iterator<Item = f64>) -> i32 {
    let max = values.fold(0.0f64, |m, v| m.max(v.abs()));
    if max > 0.0 && max.is_finite() {
        -(max.log2().round() as i32)
    } else {
        0
    }
}

/// `∫_0^h |ξ^(n)(t)|² dt` by `(n + 1)`-point Gauss–Legendre, exact for the
/// degree `2n - 2` integrand up to rounding.
pub fn quadrature_cost(poly: &TrajectoryPolynomial) -> f64 {
    let n = poly.order().get();
    let h = poly.horizon().get();
    let (nodes, weights) = gauss_legendre::rule(n + 1).expect("order within quadrature tables");
    let half = 0.5 * h;
    nodes
        .iter()
        .zip(weights)
        .map(|(x, w)| {
            let t = half * (x + 1.0);
            let sq: f64 = poly.derivative(n, t).iter().map(|v| v * v).sum();
            w * sq
        })
        .sum::<f64>()
        * half
}
