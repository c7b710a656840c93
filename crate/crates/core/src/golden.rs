//! Printed closed-form tables for orders 1 to 4.
//!
//! Each entry is `coefficient * h^power`, row-major. These are transcribed
//! tables, not computed, and serve as reference data for tests and the
//! self-test runner.

use crate::matrix::DenseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    A,
    AInv,
    B,
    L,
    U,
    LInv,
    UInv,
}

impl Table {
    pub const ALL: [Table; 7] = [
        Table::A,
        Table::AInv,
        Table::B,
        Table::L,
        Table::U,
        Table::LInv,
        Table::UInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::A => "A",
            Table::AInv => "Ainv",
            Table::B => "B",
            Table::L => "L",
            Table::U => "U",
            Table::LInv => "Linv",
            Table::UInv => "Uinv",
        }
    }
}

type Entry = (f64, i32);

const Z: Entry = (0.0, 0);
const ONE: Entry = (1.0, 0);
const SIXTH: f64 = 1.0 / 6.0;

#[rustfmt::skip]
const N1: [&[Entry]; 7] = [
    &[(1.0, 1)],
    &[(1.0, -1)],
    &[ONE],
    &[ONE],
    &[(1.0, 1)],
    &[ONE],
    &[(1.0, -1)],
];

#[rustfmt::skip]
const N2: [&[Entry]; 7] = [
    &[(1.0, 2), (1.0, 3), (2.0, 1), (3.0, 2)],
    &[(3.0, -2), (-1.0, -1), (-2.0, -3), (1.0, -2)],
    &[Z, (-6.0, 0), (2.0, 0), (6.0, 1)],
    &[ONE, Z, (2.0, -1), ONE],
    &[(1.0, 2), (1.0, 3), Z, (1.0, 2)],
    &[ONE, Z, (-2.0, -1), ONE],
    &[(1.0, -2), (-1.0, -1), Z, (1.0, -2)],
];

#[rustfmt::skip]
const N3: [&[Entry]; 7] = [
    &[
        (1.0, 3), (1.0, 4), (1.0, 5),
        (3.0, 2), (4.0, 3), (5.0, 4),
        (6.0, 1), (12.0, 2), (20.0, 3),
    ],
    &[
        (10.0, -3), (-4.0, -2), (0.5, -1),
        (-15.0, -4), (7.0, -3), (-1.0, -2),
        (6.0, -5), (-3.0, -4), (0.5, -3),
    ],
    &[
        Z, Z, (120.0, 0),
        Z, (-24.0, 0), (-120.0, 1),
        (6.0, 0), (24.0, 1), (60.0, 2),
    ],
    &[
        ONE, Z, Z,
        (3.0, -1), ONE, Z,
        (6.0, -2), (6.0, -1), ONE,
    ],
    &[
        (1.0, 3), (1.0, 4), (1.0, 5),
        Z, (1.0, 3), (2.0, 4),
        Z, Z, (2.0, 3),
    ],
    &[
        ONE, Z, Z,
        (-3.0, -1), ONE, Z,
        (12.0, -2), (-6.0, -1), ONE,
    ],
    &[
        (1.0, -3), (-1.0, -2), (0.5, -1),
        Z, (1.0, -3), (-1.0, -2),
        Z, Z, (0.5, -3),
    ],
];

#[rustfmt::skip]
const N4: [&[Entry]; 7] = [
    &[
        (1.0, 4), (1.0, 5), (1.0, 6), (1.0, 7),
        (4.0, 3), (5.0, 4), (6.0, 5), (7.0, 6),
        (12.0, 2), (20.0, 3), (30.0, 4), (42.0, 5),
        (24.0, 1), (60.0, 2), (120.0, 3), (210.0, 4),
    ],
    &[
        (35.0, -4), (-15.0, -3), (2.5, -2), (-SIXTH, -1),
        (-84.0, -5), (39.0, -4), (-7.0, -3), (0.5, -2),
        (70.0, -6), (-34.0, -5), (6.5, -4), (-0.5, -3),
        (-20.0, -7), (10.0, -6), (-2.0, -5), (SIXTH, -4),
    ],
    &[
        Z, Z, Z, (-5040.0, 0),
        Z, Z, (720.0, 0), (5040.0, 1),
        Z, (-120.0, 0), (-720.0, 1), (-2520.0, 2),
        (24.0, 0), (120.0, 1), (360.0, 2), (840.0, 3),
    ],
    &[
        ONE, Z, Z, Z,
        (4.0, -1), ONE, Z, Z,
        (12.0, -2), (8.0, -1), ONE, Z,
        (24.0, -3), (36.0, -2), (12.0, -1), ONE,
    ],
    &[
        (1.0, 4), (1.0, 5), (1.0, 6), (1.0, 7),
        Z, (1.0, 4), (2.0, 5), (3.0, 6),
        Z, Z, (2.0, 4), (6.0, 5),
        Z, Z, Z, (6.0, 4),
    ],
    &[
        ONE, Z, Z, Z,
        (-4.0, -1), ONE, Z, Z,
        (20.0, -2), (-8.0, -1), ONE, Z,
        (-120.0, -3), (60.0, -2), (-12.0, -1), ONE,
    ],
    &[
        (1.0, -4), (-1.0, -3), (0.5, -2), (-SIXTH, -1),
        Z, (1.0, -4), (-1.0, -3), (0.5, -2),
        Z, Z, (0.5, -4), (-0.5, -3),
        Z, Z, Z, (SIXTH, -4),
    ],
];

/// Highest order with a printed table.
pub const MAX_TABLE_ORDER: usize = 4;

/// The printed table for order `n` evaluated at horizon `h`.
pub fn table(n: usize, which: Table, h: f64) -> Option<DenseMatrix> {
    let set = match n {
        1 => &N1,
        2 => &N2,
        3 => &N3,
        4 => &N4,
        _ => return None,
    };
    let idx = Table::ALL.iter().position(|t| *t == which).expect("listed");
    let entries = set[idx];
    let data = entries.iter().map(|&(c, p)| c * h.powi(p)).collect();
    DenseMatrix::from_row_major(n, n, data).ok()
}

/// Unit-displacement rest-to-rest cost at `h = 1` for orders 1 to 4, from
/// the printed per-order closed forms.
pub const REST_TO_REST_UNIT: [f64; 4] = [1.0, 12.0, 720.0, 100_800.0];
