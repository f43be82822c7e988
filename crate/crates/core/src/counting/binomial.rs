use num_bigint::BigUint;
use num_traits::One;

use super::Count;

/// Rows `0..=n_max` of Pascal's triangle, built by additions only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialTable {
    rows: Vec<Vec<Count>>,
}

impl BinomialTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Count>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`. Panics if `n` is beyond the table; returns zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Count {
        self.try_get(n, k).cloned().unwrap_or_default()
    }

    /// Borrowing lookup; `None` when `k > n`.
    pub fn try_get(&self, n: usize, k: usize) -> Option<&Count> {
        self.rows[n].get(k)
    }

    pub fn row(&self, n: usize) -> &[Count] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }
}

pub fn build_binomial_table(n_max: usize) -> BinomialTable {
    BinomialTable::new(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigUint {
        (1..=n).fold(BigUint::one(), |acc, i| acc * i)
    }

    #[test]
    fn base_rows() {
        let t = build_binomial_table(0);
        assert_eq!(t.rows(), &[vec![BigUint::one()]]);

        let t = build_binomial_table(2);
        let as_u32: Vec<Vec<u32>> = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| u32::try_from(c).unwrap()).collect())
            .collect();
        assert_eq!(as_u32, vec![vec![1], vec![1, 1], vec![1, 2, 1]]);
    }

    #[test]
    fn middle_of_row_ten_matches_factorials() {
        let t = build_binomial_table(10);
        let expected = factorial(10) / (factorial(5) * factorial(5));
        assert_eq!(expected, BigUint::from(252u32));
        assert_eq!(t.get(10, 5), expected);
    }

    #[test]
    fn pascal_and_symmetry_hold_on_every_row() {
        let t = build_binomial_table(60);
        for n in 0..=60 {
            let row = t.row(n);
            assert_eq!(row.len(), n + 1);
            assert!(row[0].is_one() && row[n].is_one());
            for k in 0..=n {
                assert_eq!(row[k], row[n - k]);
                if 0 < k && k < n {
                    assert_eq!(row[k], t.row(n - 1)[k - 1].clone() + &t.row(n - 1)[k]);
                }
                assert_eq!(
                    row[k],
                    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
                );
            }
        }
    }

    #[test]
    fn out_of_row_is_zero() {
        let t = build_binomial_table(4);
        assert_eq!(t.get(3, 4), BigUint::default());
        assert!(t.try_get(3, 4).is_none());
    }
}
