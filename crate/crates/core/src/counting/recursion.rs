//! The two recursive counting formulas, evaluated bottom-up.
//!
//! Richmond–Shallit: `f_i(m) = sum_{k=0}^{m} C(m,k)^2 f_{i-1}(k)`. Every level
//! `i = 2..=d` holds the full row `f_i(0..=n)`, so the band is `(d-1) x (n+1)`.
//!
//! Fast recursion: `f_i(m) = i * sum_{k=0}^{m-1} C(m,k) C(m-1,k) f_{i-1}(k)`.
//! Each level drops both the alphabet size and the largest length by one, so
//! level `d - j` only needs `f_{d-j}(0..=n-j)`. The band is a triangle of at
//! most `min(n, d-1)` levels, and once `d > n` its shape no longer depends on
//! `d`; the alphabet size only enters as a per-level multiplier.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{BinomialTable, Count};

/// One level of a DP band: `values[m] = f_level(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpBand {
    pub level: u128,
    pub values: Vec<Count>,
}

impl DpBand {
    fn ones(level: u128, width: usize) -> Self {
        Self {
            level,
            values: vec![BigUint::one(); width],
        }
    }

    pub fn width(&self) -> usize {
        self.values.len()
    }
}

/// `w[m][k] = C(m,k)^2`.
fn richmond_weights(table: &BinomialTable) -> Vec<Vec<Count>> {
    table
        .rows()
        .iter()
        .map(|row| row.iter().map(|c| c * c).collect())
        .collect()
}

/// `w[m][k] = C(m,k) C(m-1,k)` for `k < m`.
fn fast_weights(table: &BinomialTable) -> Vec<Vec<Count>> {
    (0..=table.n_max())
        .map(|m| {
            if m == 0 {
                return Vec::new();
            }
            (0..m)
                .map(|k| table.row(m)[k].clone() * &table.row(m - 1)[k])
                .collect()
        })
        .collect()
}

/// Row `f_d(0..=n)` by the Richmond–Shallit recursion, with the number of
/// multiply-accumulates performed. Requires `d >= 1`.
pub(crate) fn richmond_row(d: u128, n: usize) -> (Vec<Count>, u64) {
    debug_assert!(d >= 1);
    let table = BinomialTable::new(n);
    let weights = richmond_weights(&table);
    let mut macs = 0u64;
    let mut band = DpBand::ones(1, n + 1);
    for level in 2..=d {
        let mut next = Vec::with_capacity(n + 1);
        for (m, row) in weights.iter().enumerate() {
            let mut acc = BigUint::zero();
            for (w, f) in row.iter().zip(&band.values[..=m]) {
                acc += w * f;
            }
            macs += (m + 1) as u64;
            next.push(acc);
        }
        band = DpBand {
            level,
            values: next,
        };
    }
    (band.values, macs)
}

/// Lowest level of the fast triangle for `f_d(n)`.
fn fast_bottom(d: u128, n: usize) -> u128 {
    let n = n as u128;
    if d > n {
        d - n
    } else {
        1
    }
}

/// Runs the fast recursion for `f_d(n)` bottom-up and hands every completed
/// band to `keep`. Returns the top band (`f_d(0..=n)`) and the MAC count.
/// Requires `d >= 1`.
fn fast_triangle(d: u128, n: usize, mut keep: impl FnMut(&DpBand)) -> (DpBand, u64) {
    debug_assert!(d >= 1);
    let table = BinomialTable::new(n);
    let weights = fast_weights(&table);
    let bottom = fast_bottom(d, n);
    let width_at = |level: u128| n + 1 - (d - level) as usize;

    let mut macs = 0u64;
    let mut band = DpBand::ones(bottom, width_at(bottom));
    keep(&band);
    for level in bottom + 1..=d {
        let multiplier = BigUint::from(level);
        let width = width_at(level);
        let mut next = Vec::with_capacity(width);
        next.push(BigUint::one());
        for (m, row) in weights.iter().enumerate().take(width).skip(1) {
            let mut acc = BigUint::zero();
            for (w, f) in row.iter().zip(&band.values[..m]) {
                acc += w * f;
            }
            macs += m as u64;
            next.push(acc * &multiplier);
        }
        band = DpBand {
            level,
            values: next,
        };
        keep(&band);
    }
    (band, macs)
}

/// Row `f_d(0..=n)` by the fast recursion, with its MAC count.
pub(crate) fn fast_row(d: u128, n: usize) -> (Vec<Count>, u64) {
    let (top, macs) = fast_triangle(d, n, |_| {});
    (top.values, macs)
}

/// The whole fast triangle for `f_d(n)`, lowest level first.
pub(crate) fn fast_bands(d: u128, n: usize) -> Vec<DpBand> {
    let mut bands = Vec::new();
    fast_triangle(d, n, |b| bands.push(b.clone()));
    bands
}
