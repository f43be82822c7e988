use std::thread;

use abelsq::{
    count, count_fast, count_fast_row, count_richmond, count_with_budget, mac_count, Algorithm,
    Budget, Params, Recursion,
};
use num_bigint::BigUint;
use num_traits::Pow;
use proptest::prelude::*;

/// Table of f_d(n) for d = 1..=6 and n = 0..=7.
const TABLE: [[u64; 8]; 6] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 6, 20, 70, 252, 924, 3432],
    [1, 3, 15, 93, 639, 4653, 35169, 272835],
    [1, 4, 28, 256, 2716, 31504, 387136, 4951552],
    [1, 5, 45, 545, 7885, 127905, 2241225, 41467725],
    [1, 6, 66, 996, 18306, 384156, 8848236, 218040696],
];

#[test]
fn every_algorithm_reproduces_the_table() {
    for (i, row) in TABLE.iter().enumerate() {
        let d = i as u128 + 1;
        for (n, &want) in row.iter().enumerate() {
            for a in Algorithm::ALL {
                let got = count(Params::new(d, n), a).unwrap();
                assert_eq!(got, BigUint::from(want), "f_{d}({n}) via {a}");
            }
        }
    }
}

#[test]
fn monotone_in_both_arguments() {
    let rows: Vec<Vec<BigUint>> = (1..=12).map(|d| count_fast_row(d, 12)).collect();
    for (d, pair) in rows.windows(2).enumerate() {
        for (n, (hi, lo)) in pair[1].iter().zip(&pair[0]).enumerate().skip(1) {
            assert!(hi > lo, "d: f_{}({n})", d + 2);
        }
    }
    for row in &rows[1..] {
        assert!(row.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn bounded_below_by_diagonal_pairs() {
    for d in 1..=12u32 {
        let row = count_fast_row(d as u128, 12);
        for (n, f) in row.iter().enumerate() {
            assert!(*f >= Pow::pow(BigUint::from(d), n), "f_{d}({n})");
        }
    }
}

#[test]
fn single_symbol_alphabet_up_to_64() {
    for n in 0..=64 {
        assert_eq!(
            count(Params::new(1, n), Algorithm::Auto).unwrap(),
            BigUint::from(1u8)
        );
        assert_eq!(count_richmond(Params::new(1, n)), BigUint::from(1u8));
    }
}

#[test]
fn fast_and_richmond_agree_past_the_table() {
    for d in [7u128, 11, 30] {
        for n in [8, 15, 25] {
            let p = Params::new(d, n);
            assert_eq!(count_fast(p), count_richmond(p), "{d} {n}");
        }
    }
}

#[test]
fn concurrent_calls_are_deterministic() {
    let p = Params::new(97, 31);
    let expected = count_fast(p);
    let results: Vec<BigUint> = thread::scope(|s| {
        let handles: Vec<_> = (0..8).map(|_| s.spawn(|| count_fast(p))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(results.iter().all(|r| *r == expected));
}

#[test]
fn oracles_refuse_beyond_budget() {
    let p = Params::new(7, 9);
    for a in [Algorithm::Anagram, Algorithm::Brute] {
        assert!(count_with_budget(p, a, Budget(6_000)).is_err());
    }
    assert!(count_with_budget(p, Algorithm::Signature, Budget(6_000)).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_zero_and_one(d in 1u128..=1_000_000) {
        prop_assert_eq!(count(Params::new(d, 0), Algorithm::Auto).unwrap(), BigUint::from(1u8));
        prop_assert_eq!(count(Params::new(d, 1), Algorithm::Auto).unwrap(), BigUint::from(d));
    }

    #[test]
    fn length_two_closed_form(d in 1u128..=(1u128 << 70)) {
        let big = BigUint::from(d);
        let want = BigUint::from(2u8) * &big * &big - &big;
        prop_assert_eq!(count_fast(Params::new(d, 2)), want);
    }

    #[test]
    fn fast_never_costs_more_once_alphabet_exceeds_length(n in 1usize..=12, extra in 1u128..=500) {
        let d = n as u128 + extra;
        let fast = mac_count(Params::new(d, n), Recursion::Fast);
        prop_assert!(fast <= mac_count(Params::new(d, n), Recursion::Richmond));
        prop_assert_eq!(fast, mac_count(Params::new(n as u128 + 1, n), Recursion::Fast));
    }
}
