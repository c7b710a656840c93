//! Exact integer combinatorics and cached powers of the horizon.
//!
//! Every factorial-like coefficient is formed in `u128` and converted to
//! `f64` once, so identical coefficients are bit-identical wherever they
//! appear. `u128` holds `34!`, well above `(2n - 1)!` for the supported
//! orders.

pub(crate) fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// `a! / (a - k)!`
pub(crate) fn falling(a: usize, k: usize) -> u128 {
    debug_assert!(k <= a);
    ((a - k + 1) as u128..=a as u128).product()
}

pub(crate) fn binomial(a: usize, k: usize) -> u128 {
    if k > a {
        return 0;
    }
    let k = k.min(a - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact: acc * (a - i) is divisible by (i + 1)
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn sign(exponent: usize) -> f64 {
    if exponent.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Table of `h^k` for `k` in `[-max_neg, max_pos]`, filled by repeated
/// multiplication in double-double so each entry is within about one ulp.
#[derive(Debug, Clone)]
pub(crate) struct HPowers {
    offset: usize,
    table: Vec<f64>,
}

impl HPowers {
    pub(crate) fn new(h: f64, max_neg: usize, max_pos: usize) -> Self {
        let mut table = vec![1.0; max_neg + max_pos + 1];
        let offset = max_neg;
        let one = DoubleDouble { hi: 1.0, lo: 0.0 };
        let mut acc = one;
        for k in 1..=max_pos {
            acc = acc.mul_f64(h);
            table[offset + k] = acc.to_f64();
        }
        let mut acc = one;
        for k in 1..=max_neg {
            acc = acc.div_f64(h);
            table[offset - k] = acc.to_f64();
        }
        Self { offset, table }
    }

    /// Covers every exponent used by the order-`n` builders: `[-2n, 2n]`.
    pub(crate) fn for_order(h: f64, n: usize) -> Self {
        Self::new(h, 2 * n, 2 * n)
    }

    pub(crate) fn pow(&self, k: isize) -> f64 {
        let idx = self.offset as isize + k;
        assert!(
            idx >= 0 && (idx as usize) < self.table.len(),
            "power {k} outside cached range"
        );
        self.table[idx as usize]
    }
}

/// Unevaluated sum `hi + lo` carrying about 106 bits.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

impl DoubleDouble {
    /// Exact product of two doubles.
    pub(crate) fn product(a: f64, b: f64) -> Self {
        let hi = a * b;
        Self {
            hi,
            lo: a.mul_add(b, -hi),
        }
    }

    pub(crate) fn mul_f64(self, f: f64) -> Self {
        let p = Self::product(self.hi, f);
        let (hi, lo) = two_sum(p.hi, p.lo + self.lo * f);
        Self { hi, lo }
    }

    pub(crate) fn add(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let (hi, lo) = two_sum(s, e + self.lo + other.lo);
        Self { hi, lo }
    }

    pub(crate) fn div_f64(self, d: f64) -> Self {
        let q = self.hi / d;
        let p = Self::product(q, d);
        let r = ((self.hi - p.hi) - p.lo + self.lo) / d;
        let (hi, lo) = two_sum(q, r);
        Self { hi, lo }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}
