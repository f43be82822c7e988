//! Uniform random abelian squares.
//!
//! A pair `(x, y)` of length `n` over `d` symbols is built top-down, one
//! alphabet symbol per step:
//!
//! 1. pick the first symbol `a` of `x` uniformly among the `d` symbols;
//! 2. pick `k`, the number of non-`a` symbols in each word, with weight
//!    `C(n-1,k) C(n,k) f_{d-1}(k)`;
//! 3. pick which `k` of the remaining `n-1` positions of `x`, and which `k`
//!    of the `n` positions of `y`, hold non-`a` symbols; the rest are `a`;
//! 4. fill those positions, left to right, with an abelian square of length
//!    `k` over the other `d-1` symbols, drawn the same way.
//!
//! Every abelian square arises from exactly one decision path, and the path
//! probabilities multiply to `1 / f_d(n)`. The [`SampleTrace`] keeps each
//! decision as an exact ratio so this can be checked without statistics.

use std::collections::HashMap;

use num_bigint::{BigUint, RandBigInt};
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::counting::{check_word_budget, fast_bands, Words};
use crate::{BinomialTable, Budget, Count, DpBand, Params, Result, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WordPair {
    pub x: Vec<Symbol>,
    pub y: Vec<Symbol>,
}

impl WordPair {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// True when `y` is an anagram of `x`.
    pub fn is_abelian_square(&self) -> bool {
        let mut x = self.x.clone();
        let mut y = self.y.clone();
        x.sort_unstable();
        y.sort_unstable();
        x == y
    }
}

/// One random decision and its exact probability `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub choice: String,
    pub numerator: Count,
    pub denominator: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SampleTrace {
    pub decisions: Vec<Decision>,
}

impl SampleTrace {
    fn record(
        &mut self,
        choice: String,
        numerator: impl Into<Count>,
        denominator: impl Into<Count>,
    ) {
        self.decisions.push(Decision {
            choice,
            numerator: numerator.into(),
            denominator: denominator.into(),
        });
    }
}

/// Exact probability of the path recorded in `trace`.
pub fn trace_probability(trace: &SampleTrace) -> Result<Ratio<BigUint>> {
    let mut p = Ratio::one();
    for (i, dec) in trace.decisions.iter().enumerate() {
        if dec.denominator.is_zero() {
            return Err(crate::Error::MalformedTrace(format!(
                "decision {i} (`{}`) has a zero denominator",
                dec.choice
            )));
        }
        p *= Ratio::new(dec.numerator.clone(), dec.denominator.clone());
    }
    Ok(p)
}

/// Precomputed tables for repeated sampling at fixed `(d, n)`.
#[derive(Debug, Clone)]
pub struct Sampler {
    params: Params,
    binomials: BinomialTable,
    /// Fast-recursion triangle, lowest level first.
    bands: Vec<DpBand>,
}

impl Sampler {
    /// Panics if `d == 0` and `n > 0`, where there is nothing to sample.
    pub fn new(params: Params) -> Self {
        assert!(
            params.d >= 1 || params.n == 0,
            "no abelian squares of length {} over an empty alphabet",
            params.n
        );
        let bands = if params.d == 0 {
            Vec::new()
        } else {
            fast_bands(params.d, params.n)
        };
        Self {
            params,
            binomials: BinomialTable::new(params.n),
            bands,
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// `f_level(k)` from the triangle; `level == 0` is the empty alphabet.
    fn f(&self, level: u128, k: usize) -> Count {
        if level == 0 {
            return BigUint::from(u8::from(k == 0));
        }
        let bottom = self.bands[0].level;
        self.bands[(level - bottom) as usize].values[k].clone()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (WordPair, SampleTrace) {
        let n = self.params.n;
        let mut x = vec![0 as Symbol; n];
        let mut y = vec![0 as Symbol; n];
        let mut trace = SampleTrace::default();

        // Absolute positions still to fill, and symbols already used.
        let mut xs: Vec<usize> = (0..n).collect();
        let mut ys: Vec<usize> = (0..n).collect();
        let mut used: Vec<Symbol> = Vec::new();
        let mut alphabet = self.params.d;

        while !xs.is_empty() {
            let m = xs.len();

            let local = rng.gen_range(0..alphabet);
            let a = nth_unused(local, &used);
            trace.record(format!("first symbol {a}"), 1u32, alphabet);

            let weights: Vec<Count> = (0..m)
                .map(|k| {
                    self.binomials.get(m - 1, k)
                        * self.binomials.get(m, k)
                        * self.f(alphabet - 1, k)
                })
                .collect();
            let total: Count = weights.iter().sum();
            let k = inverse_cdf(&weights, &rng.gen_biguint_below(&total));
            trace.record(format!("{k} other symbols"), weights[k].clone(), total);

            let x_pick = sorted_subset(rng, m - 1, k);
            trace.record(
                format!("x positions {x_pick:?}"),
                1u32,
                self.binomials.get(m - 1, k),
            );
            let y_pick = sorted_subset(rng, m, k);
            trace.record(
                format!("y positions {y_pick:?}"),
                1u32,
                self.binomials.get(m, k),
            );

            x[xs[0]] = a;
            let next_xs: Vec<usize> = x_pick.iter().map(|&i| xs[i + 1]).collect();
            let next_ys: Vec<usize> = y_pick.iter().map(|&i| ys[i]).collect();
            fill_except(&mut x, &xs[1..], &x_pick, a);
            fill_except(&mut y, &ys, &y_pick, a);

            xs = next_xs;
            ys = next_ys;
            let at = used.partition_point(|&u| u < a);
            used.insert(at, a);
            alphabet -= 1;
        }
        (WordPair { x, y }, trace)
    }
}

/// The `i`-th symbol (from zero) not in `used`, which is sorted.
fn nth_unused(i: Symbol, used: &[Symbol]) -> Symbol {
    let mut s = i;
    for &u in used {
        if u <= s {
            s += 1;
        } else {
            break;
        }
    }
    s
}

fn inverse_cdf(weights: &[Count], r: &Count) -> usize {
    let mut acc = BigUint::zero();
    for (k, w) in weights.iter().enumerate() {
        acc += w;
        if *r < acc {
            return k;
        }
    }
    unreachable!("draw below the total weight")
}

fn sorted_subset<R: Rng + ?Sized>(rng: &mut R, len: usize, k: usize) -> Vec<usize> {
    let mut v = index::sample(rng, len, k).into_vec();
    v.sort_unstable();
    v
}

/// Writes `a` at every `slots[i]` with `i` not in `picked` (sorted).
fn fill_except(word: &mut [Symbol], slots: &[usize], picked: &[usize], a: Symbol) {
    let mut p = picked.iter().peekable();
    for (i, &slot) in slots.iter().enumerate() {
        if p.peek() == Some(&&i) {
            p.next();
        } else {
            word[slot] = a;
        }
    }
}

/// One uniformly random abelian square, reproducible from `seed`.
///
/// The generator is ChaCha8 seeded with `seed` via `SeedableRng::seed_from_u64`.
pub fn sample_abelian_square(p: Params, seed: u64) -> (WordPair, SampleTrace) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Sampler::new(p).sample(&mut rng)
}

/// Every abelian square in lexicographic order of `(x, y)`, lazily.
pub struct AbelianSquares {
    words: Vec<Vec<Symbol>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    xi: usize,
    yi: usize,
}

impl AbelianSquares {
    pub fn new(p: Params, budget: Budget) -> Result<Self> {
        check_word_budget(p, budget)?;
        let words: Vec<Vec<Symbol>> = Words::new(p.d, p.n).collect();
        let mut index_of: HashMap<Vec<Symbol>, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            let mut key = w.clone();
            key.sort_unstable();
            let c = *index_of.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
            class_of.push(c);
        }
        Ok(Self {
            words,
            class_of,
            classes,
            xi: 0,
            yi: 0,
        })
    }
}

impl Iterator for AbelianSquares {
    type Item = WordPair;

    fn next(&mut self) -> Option<WordPair> {
        let class = &self.classes[*self.class_of.get(self.xi)?];
        let pair = WordPair {
            x: self.words[self.xi].clone(),
            y: self.words[class[self.yi]].clone(),
        };
        self.yi += 1;
        if self.yi == class.len() {
            self.yi = 0;
            self.xi += 1;
        }
        Some(pair)
    }
}

/// All abelian squares of length `n + n` over `d` symbols, sorted.
pub fn enumerate_abelian_squares(p: Params, budget: Budget) -> Result<Vec<WordPair>> {
    Ok(AbelianSquares::new(p, budget)?.collect())
}
