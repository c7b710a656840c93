//! Closed-form matrices of the cost, all parameterised by order `n` and
//! horizon `h`.
//!
//! Indices are 0-based throughout. With `i` the row and `j` the column:
//!
//! | matrix | entry | support |
//! |--------|-------|---------|
//! | `A`    | `(n+j)!/(n+j-i)! h^(n+j-i)` | all |
//! | `V`    | `j!/(j-i)! h^(j-i)` | `j >= i` |
//! | `B`    | `(-1)^(n-i-1) (n+j)!/(i+j-n+1)! h^(i+j-n+1)` | `i+j >= n-1` |
//! | `U`    | `j!/(j-i)! h^(n+j-i)` | `j >= i` |
//! | `L`    | `C(i,j) n!/(n-i+j)! h^(j-i)` | `j <= i` |
//! | `U⁻¹`  | `(-1)^(i+j) / (i! (j-i)!) h^(j-i-n)` | `j >= i` |
//! | `L⁻¹`  | `(-1)^(i-j) i!/j! C(n+i-j-1, i-j) h^(j-i)` | `j <= i` |
//! | `K`    | `(n!)² C(n+i,n) C(n+j,n) h^(i+j+1)/(i+j+1)` | all |
//!
//! `A` is the Wronskian of `t^n, .., t^{2n-1}` at `t = h`, `V` the Wronskian
//! of `1, t, .., t^{n-1}`, and `K` the Gram matrix of the `n`-th derivatives
//! of `t^n, .., t^{2n-1}` on `[0, h]`. `A = L U` and `A⁻¹ = U⁻¹ L⁻¹`.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::numbers::{binomial, factorial, falling, sign, HPowers};
use crate::state::{Horizon, Order};

fn powers(n: Order, h: Horizon) -> HPowers {
    HPowers::for_order(h.get(), n.get())
}

pub fn build_a(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    DenseMatrix::from_fn(n, n, |i, j| {
        falling(n + j, i) as f64 * p.pow((n + j - i) as isize)
    })
}

/// Wronskian of `1, t, .., t^{n-1}` at `t = h`; `h = 0` gives
/// `diag(0!, 1!, .., (n-1)!)`.
pub fn build_v(n: Order, h: f64) -> Result<DenseMatrix> {
    if !(h.is_finite() && h >= 0.0) {
        return Err(Error::NonPositiveHorizon(h));
    }
    let n = n.get();
    let p = HPowers::new(h, 0, n);
    Ok(DenseMatrix::from_fn(n, n, |i, j| {
        if j >= i {
            falling(j, i) as f64 * p.pow((j - i) as isize)
        } else {
            0.0
        }
    }))
}

pub fn build_b(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    DenseMatrix::from_fn(n, n, |i, j| {
        if i + j + 1 < n {
            return 0.0;
        }
        // (n+j)! / (i+j-n+1)!
        let coeff = falling(n + j, 2 * n - i - 1) as f64;
        sign(n - i - 1) * coeff * p.pow((i + j + 1 - n) as isize)
    })
}

pub fn build_l(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    DenseMatrix::from_fn(n, n, |i, j| {
        if j > i {
            return 0.0;
        }
        let coeff = binomial(i, j) * falling(n, i - j);
        coeff as f64 * p.pow(j as isize - i as isize)
    })
}

pub fn build_u(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    DenseMatrix::from_fn(n, n, |i, j| {
        if j < i {
            return 0.0;
        }
        falling(j, i) as f64 * p.pow((n + j - i) as isize)
    })
}

pub fn build_l_inv(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    DenseMatrix::from_fn(n, n, |i, j| {
        if j > i {
            return 0.0;
        }
        let k = i - j;
        let coeff = falling(i, k) * binomial(n + k - 1, k);
        sign(k) * coeff as f64 * p.pow(-(k as isize))
    })
}

pub fn build_u_inv(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    DenseMatrix::from_fn(n, n, |i, j| {
        if j < i {
            return 0.0;
        }
        let denom = (factorial(i) * factorial(j - i)) as f64;
        sign(i + j) / denom * p.pow(j as isize - i as isize - n as isize)
    })
}

/// `A⁻¹` as the product `U⁻¹ L⁻¹` of the closed-form triangular inverses.
pub fn build_a_inv(n: Order, h: Horizon) -> DenseMatrix {
    &build_u_inv(n, h) * &build_l_inv(n, h)
}

pub fn build_k(n: Order, h: Horizon) -> DenseMatrix {
    let p = powers(n, h);
    let n = n.get();
    // n! C(n+i, n) = (n+i)!/i!
    let lead: Vec<f64> = (0..n).map(|i| falling(n + i, n) as f64).collect();
    DenseMatrix::from_fn(n, n, |i, j| {
        lead[i] * lead[j] / (i + j + 1) as f64 * p.pow((i + j + 1) as isize)
    })
}

/// `det A = h^(n²) ∏_{k=1}^{n-1} k!`.
pub fn det_a(n: Order, h: Horizon) -> f64 {
    let n = n.get();
    let superfactorial: f64 = (1..n).map(|k| factorial(k) as f64).product();
    let mut hp = 1.0;
    for _ in 0..n * n {
        hp *= h.get();
    }
    superfactorial * hp
}
