//! Log-domain evaluation of `f_d(n)`.
//!
//! Runs the fast recursion on `ln f` instead of `f`. Each level's inner sum is
//! reduced with log-sum-exp against the largest term, so rows never overflow
//! even where `f_d(n)` is far outside the range of an `f64`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Params, Result};

/// Natural logarithm of a count.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct LogCount {
    pub log_value: f64,
}

impl LogCount {
    pub const ONE: LogCount = LogCount { log_value: 0.0 };

    pub fn new(log_value: f64) -> Self {
        Self { log_value }
    }
}

/// `ln k!` for `k = 0..=n_max`.
#[derive(Debug, Clone)]
pub struct LogFactorials {
    table: Vec<f64>,
}

impl LogFactorials {
    pub fn new(n_max: usize) -> Self {
        let mut table = Vec::with_capacity(n_max + 1);
        let mut acc = 0.0f64;
        table.push(acc);
        for k in 1..=n_max {
            acc += (k as f64).ln();
            table.push(acc);
        }
        Self { table }
    }

    pub fn n_max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn ln_factorial(&self, k: usize) -> f64 {
        self.table[k]
    }

    pub fn log_binomial(&self, n: usize, k: usize) -> Result<f64> {
        if k > n {
            return Err(Error::Domain(format!(
                "log_binomial({n}, {k}) needs k <= n"
            )));
        }
        if n > self.n_max() {
            return Err(Error::Domain(format!(
                "log_binomial({n}, {k}) beyond factorial table of size {}",
                self.n_max()
            )));
        }
        Ok(self.table[n] - self.table[k] - self.table[n - k])
    }
}

/// `ln C(n, k)`.
pub fn log_binomial(n: usize, k: usize) -> Result<f64> {
    LogFactorials::new(n).log_binomial(n, k)
}

/// `ln` of an exact count; `-inf` for zero.
pub fn ln_count(c: &BigUint) -> f64 {
    let bits = c.bits();
    if bits <= 1000 {
        return c.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    // Keep 64 significant bits and add the shift back in log space.
    let shift = bits - 64;
    let top = (c >> shift).to_f64().expect("64-bit value fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let sum: f64 = terms.iter().map(|t| (t - max).exp()).sum();
    max + sum.ln()
}

/// `ln f_d(0..=n_max)` by the fast recursion in log space, with the number of
/// log-domain multiply-accumulates.
pub(crate) fn log_row_with_macs(d: u128, n_max: usize) -> (Vec<LogCount>, u64) {
    if d == 0 {
        let row = (0..=n_max)
            .map(|n| LogCount::new(if n == 0 { 0.0 } else { f64::NEG_INFINITY }))
            .collect();
        return (row, 0);
    }
    let lf = LogFactorials::new(n_max);
    let lc = |n: usize, k: usize| lf.ln_factorial(n) - lf.ln_factorial(k) - lf.ln_factorial(n - k);
    // log weights ln(C(m,k) C(m-1,k)), k < m
    let weights: Vec<Vec<f64>> = (0..=n_max)
        .map(|m| (0..m).map(|k| lc(m, k) + lc(m - 1, k)).collect())
        .collect();

    let n = n_max as u128;
    let bottom = if d > n { d - n } else { 1 };
    let width_at = |level: u128| n_max + 1 - (d - level) as usize;

    let mut macs = 0u64;
    let mut band = vec![0.0f64; width_at(bottom)];
    let mut terms = Vec::with_capacity(n_max);
    for level in bottom + 1..=d {
        let ln_level = (level as f64).ln();
        let width = width_at(level);
        let mut next = Vec::with_capacity(width);
        next.push(0.0);
        for m in 1..width {
            terms.clear();
            terms.extend(weights[m].iter().zip(&band[..m]).map(|(w, f)| w + f));
            macs += m as u64;
            next.push(ln_level + log_sum_exp(&terms));
        }
        band = next;
    }
    (band.into_iter().map(LogCount::new).collect(), macs)
}

/// `ln f_d(n)` for any `d >= 1`, including alphabets beyond `u64`.
pub fn log_count_fast(p: Params) -> LogCount {
    log_row_with_macs(p.d, p.n).0[p.n]
}

/// `ln f_d(0..=n_max)`.
pub fn log_count_row(d: u128, n_max: usize) -> Vec<LogCount> {
    log_row_with_macs(d, n_max).0
}

/// `ln f_d(n)` for every `d` in `d_list` (rows, in input order) and every
/// `n` in `0..=n_max` (columns). Rows are computed in parallel.
pub fn curve(d_list: &[u128], n_max: usize) -> Vec<Vec<LogCount>> {
    d_list
        .par_iter()
        .map(|&d| log_count_row(d, n_max))
        .collect()
}

/// The default curve: `d = 2^0 .. 2^9`, `n = 0..=99`, 1000 points in total.
pub fn default_curve_alphabets() -> Vec<u128> {
    (0..10).map(|j| 1u128 << j).collect()
}

pub const DEFAULT_CURVE_N_MAX: usize = 99;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count_fast;

    fn close(a: f64, b: f64, rtol: f64) -> bool {
        (a - b).abs() <= rtol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn log_binomial_examples() {
        assert_eq!(log_binomial(5, 0).unwrap(), 0.0);
        assert!((log_binomial(4, 2).unwrap() - 6f64.ln()).abs() < 1e-12 * 4.0);
        assert!((log_binomial(10, 5).unwrap() - 252f64.ln()).abs() < 1e-12 * 10.0);
        assert!(matches!(log_binomial(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn log_binomial_accuracy_against_exact() {
        let lf = LogFactorials::new(200);
        let table = crate::build_binomial_table(200);
        for n in [17, 64, 120, 200] {
            for k in 0..=n {
                let exact = ln_count(&table.get(n, k));
                let got = lf.log_binomial(n, k).unwrap();
                assert!(
                    (got - exact).abs() <= 1e-12 * n as f64,
                    "C({n},{k}): {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn log_count_examples() {
        assert_eq!(log_count_fast(Params::new(7, 0)).log_value, 0.0);
        assert!(close(
            log_count_fast(Params::new(2, 4)).log_value,
            70f64.ln(),
            1e-12
        ));

        let d = 1u128 << 20;
        let exact = ln_count(&count_fast(Params::new(d, 3)));
        assert!(close(
            log_count_fast(Params::new(d, 3)).log_value,
            exact,
            1e-9
        ));
    }

    #[test]
    fn single_letter_words() {
        for d in [1u128, 10, 1_000_000, 1 << 40, 1 << 64] {
            let got = log_count_fast(Params::new(d, 1)).log_value;
            assert!(close(got, (d as f64).ln(), 1e-12), "d = {d}");
        }
    }

    #[test]
    fn ln_count_of_huge_values() {
        let big = BigUint::from(3u32).pow(5000);
        assert!(close(ln_count(&big), 5000.0 * 3f64.ln(), 1e-14));
        assert_eq!(ln_count(&BigUint::from(1u32)), 0.0);
        assert_eq!(ln_count(&BigUint::default()), f64::NEG_INFINITY);
    }

    #[test]
    fn curve_shape_and_values() {
        let c = curve(&[1], 5);
        assert_eq!(c.len(), 1);
        assert!(c[0].iter().all(|v| v.log_value == 0.0));

        let c = curve(&[2], 2);
        let expected = [1f64, 2.0, 6.0].map(f64::ln);
        for (got, want) in c[0].iter().zip(expected) {
            assert!(close(got.log_value, want, 1e-12));
        }

        let c = curve(&default_curve_alphabets(), DEFAULT_CURVE_N_MAX);
        assert_eq!(c.iter().map(Vec::len).sum::<usize>(), 1000);
        assert!(c.iter().flatten().all(|v| v.log_value.is_finite()));
    }

    #[test]
    fn rows_are_deterministic() {
        let a = log_count_row(1 << 33, 60);
        let b = log_count_row(1 << 33, 60);
        assert!(a
            .iter()
            .zip(&b)
            .all(|(x, y)| x.log_value.to_bits() == y.log_value.to_bits()));
    }
}
