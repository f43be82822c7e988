//! Exact values of `f_d(n)`, the number of abelian squares of length `n + n`
//! over `d` symbols.
//!
//! Five algorithms compute the same number: the fast recursion (the default),
//! the Richmond–Shallit recursion, and three enumeration oracles that work
//! straight from the definition. An alphabet of size zero has exactly one
//! abelian square of length `0 + 0` and none longer.

mod binomial;
mod oracle;
mod recursion;
mod signature;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use binomial::{build_binomial_table, BinomialTable};
pub use oracle::{count_anagram_sum, count_brute_force, count_signature_sum};
pub use recursion::DpBand;
pub use signature::{multinomial, Signature, Symbol};

pub(crate) use oracle::check_word_budget;
pub(crate) use recursion::fast_bands;
pub(crate) use signature::Words;

use crate::{Error, Result};

/// An exact, non-negative count.
pub type Count = BigUint;

/// Alphabet size `d` and half-length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub d: u128,
    pub n: usize,
}

impl Params {
    pub fn new(d: u128, n: usize) -> Self {
        Self { d, n }
    }

    /// `Some(f)` for the zero-symbol alphabet, which none of the algorithms
    /// need to see.
    fn degenerate(self) -> Option<Count> {
        (self.d == 0).then(|| BigUint::from(u8::from(self.n == 0)))
    }
}

/// Cap on the number of words or signatures an enumeration oracle may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(10_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    #[default]
    Auto,
    Fast,
    Richmond,
    Signature,
    Anagram,
    Brute,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Auto,
        Algorithm::Fast,
        Algorithm::Richmond,
        Algorithm::Signature,
        Algorithm::Anagram,
        Algorithm::Brute,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Fast => "fast",
            Algorithm::Richmond => "richmond",
            Algorithm::Signature => "signature",
            Algorithm::Anagram => "anagram",
            Algorithm::Brute => "brute",
        }
    }

    /// The algorithm `auto` stands for.
    pub fn resolve(self) -> Algorithm {
        match self {
            Algorithm::Auto => Algorithm::Fast,
            other => other,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown algorithm `{s}`")))
    }
}

/// The two instrumented recursions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recursion {
    Fast,
    Richmond,
}

/// `f_d(n)` by the fast recursion `f_d(n) = d * sum_{k<n} C(n,k) C(n-1,k) f_{d-1}(k)`.
pub fn count_fast(p: Params) -> Count {
    if let Some(f) = p.degenerate() {
        return f;
    }
    let (mut row, _) = recursion::fast_row(p.d, p.n);
    row.swap_remove(p.n)
}

/// `f_d(0..=n_max)` in one pass of the fast recursion.
pub fn count_fast_row(d: u128, n_max: usize) -> Vec<Count> {
    if d == 0 {
        return (0..=n_max)
            .map(|n| Params::new(0, n).degenerate().unwrap())
            .collect();
    }
    recursion::fast_row(d, n_max).0
}

/// `f_d(n)` by the Richmond–Shallit recursion `f_d(n) = sum_k C(n,k)^2 f_{d-1}(k)`.
pub fn count_richmond(p: Params) -> Count {
    if let Some(f) = p.degenerate() {
        return f;
    }
    let (mut row, _) = recursion::richmond_row(p.d, p.n);
    row.swap_remove(p.n)
}

/// [`count_with_budget`] with the default enumeration budget.
pub fn count(p: Params, algorithm: Algorithm) -> Result<Count> {
    count_with_budget(p, algorithm, Budget::default())
}

pub fn count_with_budget(p: Params, algorithm: Algorithm, budget: Budget) -> Result<Count> {
    if let Some(f) = p.degenerate() {
        return Ok(f);
    }
    match algorithm.resolve() {
        Algorithm::Fast | Algorithm::Auto => Ok(count_fast(p)),
        Algorithm::Richmond => Ok(count_richmond(p)),
        Algorithm::Signature => count_signature_sum(p, budget),
        Algorithm::Anagram => count_anagram_sum(p, budget),
        Algorithm::Brute => count_brute_force(p, budget),
    }
}

/// Multiply-accumulates the recursion performs for `f_d(n)`, one per inner-sum
/// term. Runs the DP; zero when `d == 0`.
pub fn mac_count(p: Params, recursion: Recursion) -> u64 {
    if p.d == 0 {
        return 0;
    }
    evaluate(p, recursion).1
}

/// Exact value and MAC count from a single run.
pub(crate) fn evaluate(p: Params, recursion: Recursion) -> (Count, u64) {
    if let Some(f) = p.degenerate() {
        return (f, 0);
    }
    let (mut row, macs) = match recursion {
        Recursion::Fast => recursion::fast_row(p.d, p.n),
        Recursion::Richmond => recursion::richmond_row(p.d, p.n),
    };
    (row.swap_remove(p.n), macs)
}
