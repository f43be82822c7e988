use std::collections::HashMap;

use abelsq::{
    count_brute_force, count_fast, enumerate_abelian_squares, sample_abelian_square,
    trace_probability, Budget, Params, Sampler, WordPair,
};
use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Grid points with d^n <= limit and n >= 1.
fn small_grid(limit: u64) -> Vec<Params> {
    let mut out = Vec::new();
    for d in 1..=limit {
        let mut words = d;
        let mut n = 1;
        while words <= limit {
            out.push(Params::new(d as u128, n));
            if d == 1 && n >= 6 {
                break;
            }
            words = words.saturating_mul(d);
            n += 1;
        }
    }
    out
}

#[test]
fn sampled_pairs_follow_the_enumeration_distribution() {
    // Every sampled pair is in the enumeration, and over many draws every
    // member of the enumeration shows up.
    let p = Params::new(3, 2);
    let all = enumerate_abelian_squares(p, Budget::default()).unwrap();
    let sampler = Sampler::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut hits: HashMap<WordPair, usize> = HashMap::new();
    for _ in 0..3000 {
        *hits.entry(sampler.sample(&mut rng).0).or_default() += 1;
    }
    assert_eq!(hits.len(), all.len());
    assert!(hits.keys().all(|k| all.binary_search(k).is_ok()));
}

#[test]
fn two_samplers_with_one_seed_agree() {
    for seed in [0, 1, u64::MAX] {
        let a = sample_abelian_square(Params::new(6, 9), seed);
        let b = sample_abelian_square(Params::new(6, 9), seed);
        assert_eq!(a, b);
    }
}

#[test]
fn enumeration_size_matches_brute_force_on_small_grid() {
    for p in small_grid(300) {
        let listed = enumerate_abelian_squares(p, Budget::default()).unwrap();
        assert_eq!(
            BigUint::from(listed.len()),
            count_brute_force(p, Budget::default()).unwrap()
        );
        assert!(listed.windows(2).all(|w| w[0] < w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn every_path_is_exactly_uniform(idx in 0usize..1000, seed in any::<u64>()) {
        let grid = small_grid(10_000);
        let p = grid[idx % grid.len()];
        let (pair, trace) = sample_abelian_square(p, seed);
        prop_assert!(pair.is_abelian_square());
        prop_assert_eq!(pair.len(), p.n);
        prop_assert!(pair.x.iter().chain(&pair.y).all(|&s| s < p.d));
        prop_assert_eq!(trace_probability(&trace).unwrap(), Ratio::new(BigUint::one(), count_fast(p)));
    }

    #[test]
    fn large_alphabets_sample_valid_pairs(d in 37u128..=(1u128 << 80), n in 0usize..12, seed in any::<u64>()) {
        let (pair, trace) = sample_abelian_square(Params::new(d, n), seed);
        prop_assert!(pair.is_abelian_square());
        prop_assert!(pair.x.iter().all(|&s| s < d));
        prop_assert_eq!(
            trace_probability(&trace).unwrap(),
            Ratio::new(BigUint::one(), count_fast(Params::new(d, n)))
        );
    }
}
