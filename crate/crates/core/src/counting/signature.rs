use num_bigint::BigUint;
use num_traits::One;

use super::Count;

/// Alphabet symbols are the integers `0..d`.
pub type Symbol = u128;

/// Parikh vector of a word: entry `i` counts occurrences of symbol `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(multiplicities: Vec<usize>) -> Self {
        Self(multiplicities)
    }

    /// Signature of `word` over an alphabet of `d` symbols.
    ///
    /// Panics if a symbol is `>= d`.
    pub fn of_word(word: &[Symbol], d: usize) -> Self {
        let mut m = vec![0; d];
        for &s in word {
            m[usize::try_from(s).expect("symbol fits in usize")] += 1;
        }
        Self(m)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of any word with this signature.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// `(m_1 + ... + m_d)! / (m_1! ... m_d!)`, built as a product of binomials so no
/// full factorial is ever formed.
pub fn multinomial(sig: &Signature) -> Count {
    multinomial_of(sig.multiplicities())
}

pub(crate) fn multinomial_of(parts: &[usize]) -> Count {
    let mut total = 0usize;
    let mut acc = BigUint::one();
    for &m in parts {
        total += m;
        acc *= binomial(total, m);
    }
    acc
}

fn binomial(n: usize, k: usize) -> Count {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc stays integral: after step i it equals C(n - k + i, i).
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Multiplicities of the distinct symbols in `word`, ignoring symbol identity.
///
/// Zero entries of the dense signature are dropped, which leaves the
/// multinomial unchanged.
pub(crate) fn sparse_multiplicities(word: &[Symbol]) -> Vec<usize> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&s| s == sorted[i]).count();
        out.push(j);
        i += j;
    }
    out
}

/// All words of length `n` over `0..d` in lexicographic order.
pub(crate) struct Words {
    d: Symbol,
    next: Option<Vec<Symbol>>,
}

impl Words {
    pub(crate) fn new(d: Symbol, n: usize) -> Self {
        let next = (d > 0 || n == 0).then(|| vec![0; n]);
        Self { d, next }
    }
}

impl Iterator for Words {
    type Item = Vec<Symbol>;

    fn next(&mut self) -> Option<Vec<Symbol>> {
        let word = self.next.take()?;
        let mut succ = word.clone();
        for pos in (0..succ.len()).rev() {
            if succ[pos] + 1 < self.d {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(word)
    }
}
