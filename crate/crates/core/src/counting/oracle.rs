//! Enumeration oracles. Each one counts abelian squares from the definition,
//! independently of the recursive formulas, and refuses to run when the
//! number of objects it would visit exceeds the budget.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use super::signature::{multinomial_of, sparse_multiplicities, Words};
use super::{BinomialTable, Budget, Count, Params};
use crate::{Error, Result};

fn check_budget(what: &'static str, required: BigUint, budget: Budget) -> Result<()> {
    if required > BigUint::from(budget.0) {
        return Err(Error::Infeasible {
            what,
            required: required.to_string(),
            budget: budget.0,
        });
    }
    Ok(())
}

/// Number of signatures with `d` entries summing to `n`: `C(n+d-1, d-1)`.
pub(crate) fn signature_space(p: Params) -> BigUint {
    if p.d == 0 {
        return BigUint::from(u8::from(p.n == 0));
    }
    // C(n+d-1, n) by the multiplicative formula; n is small, d may not be.
    let mut acc = BigUint::one();
    for i in 1..=p.n {
        acc *= BigUint::from(p.d - 1) + i;
        acc /= i;
    }
    acc
}

/// Number of words of length `n`: `d^n`.
pub(crate) fn word_space(p: Params) -> BigUint {
    Pow::pow(BigUint::from(p.d), p.n)
}

pub(crate) fn check_word_budget(p: Params, budget: Budget) -> Result<()> {
    check_budget("word enumeration", word_space(p), budget)
}

/// Sum of squared multinomials over every signature of length-`n` words.
pub fn count_signature_sum(p: Params, budget: Budget) -> Result<Count> {
    check_budget("signature enumeration", signature_space(p), budget)?;
    if p.d == 0 {
        return Ok(BigUint::from(u8::from(p.n == 0)));
    }
    let table = BinomialTable::new(p.n);
    let mut total = BigUint::zero();
    // (position, symbols still to place, partial multinomial). The multinomial
    // of (m_1..m_d) is C(n, m_1) C(n - m_1, m_2) ...
    let mut stack: Vec<(u128, usize, Count)> = vec![(0, p.n, BigUint::one())];
    while let Some((pos, remaining, product)) = stack.pop() {
        if remaining == 0 || pos + 1 == p.d {
            total += &product * &product;
            continue;
        }
        for m in 0..=remaining {
            stack.push((
                pos + 1,
                remaining - m,
                &product * table.row(remaining)[m].clone(),
            ));
        }
    }
    Ok(total)
}

/// Sum over every word `x` of the number of anagrams of `x`.
pub fn count_anagram_sum(p: Params, budget: Budget) -> Result<Count> {
    check_word_budget(p, budget)?;
    let mut total = BigUint::zero();
    for word in Words::new(p.d, p.n) {
        total += multinomial_of(&sparse_multiplicities(&word));
    }
    Ok(total)
}

/// Groups every word by signature and sums the squared class sizes.
pub fn count_brute_force(p: Params, budget: Budget) -> Result<Count> {
    check_word_budget(p, budget)?;
    let mut classes: HashMap<Vec<u128>, u64> = HashMap::new();
    for mut word in Words::new(p.d, p.n) {
        // The sorted word encodes the signature one-to-one.
        word.sort_unstable();
        *classes.entry(word).or_default() += 1;
    }
    Ok(classes.values().map(|&c| BigUint::from(c) * c).sum())
}
