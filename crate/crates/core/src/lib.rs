//! Counting abelian squares.
//!
//! An abelian square of length `n + n` over an alphabet of `d` symbols is a
//! pair of words `(x, y)`, each of length `n`, where `y` is an anagram of `x`.
//! This crate computes their number `f_d(n)` exactly by several independent
//! algorithms, evaluates `ln f_d(n)` for alphabets far beyond what a double
//! can hold, draws abelian squares uniformly at random, and measures the cost
//! of the two recursive counting formulas.
//!
//! ```
//! use abelsq::{count, Algorithm, Params};
//!
//! let f = count(Params::new(3, 4), Algorithm::Auto).unwrap();
//! assert_eq!(f.to_string(), "639");
//! ```

pub mod bench;
pub mod counting;
mod error;
pub mod float_eval;
pub mod sampler;

pub use counting::{
    build_binomial_table, count, count_anagram_sum, count_brute_force, count_fast, count_fast_row,
    count_richmond, count_signature_sum, count_with_budget, mac_count, multinomial, Algorithm,
    BinomialTable, Budget, Count, DpBand, Params, Recursion, Signature, Symbol,
};
pub use error::{Error, Result};
pub use float_eval::{curve, log_binomial, log_count_fast, LogCount};
pub use sampler::{
    enumerate_abelian_squares, sample_abelian_square, trace_probability, AbelianSquares,
    SampleTrace, Sampler, WordPair,
};
