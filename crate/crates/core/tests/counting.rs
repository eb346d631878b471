//! Counting formulas against each other and against enumeration.

use num_bigint::BigUint;
use zxcanon::{count_tableaus, count_zxcf_closed, count_zxcf_recursive, enumerate_zxcf, CountQuery};

#[test]
fn recursion_matches_closed_form() {
    for n in 0..=12 {
        for k in 0..=n {
            for p in 0..=4 {
                for o in 0..=4 {
                    let q = CountQuery::new(n, k, p, o).unwrap();
                    assert_eq!(count_zxcf_recursive(q), count_zxcf_closed(q), "{n} {k} {p} {o}");
                }
            }
        }
    }
}

#[test]
fn fresh_counts_match_tableau_counts() {
    for n in 0..=20 {
        for k in 0..=n {
            let q = CountQuery::fresh(n, k).unwrap();
            assert_eq!(count_zxcf_closed(q), count_tableaus(n, k).unwrap(), "{n} {k}");
        }
    }
}

#[test]
fn enumeration_sizes() {
    for n in 1..=4 {
        for k in 0..=n {
            let listed = enumerate_zxcf(n, k).unwrap().count();
            assert_eq!(BigUint::from(listed), count_tableaus(n, k).unwrap(), "{n} {k}");
        }
    }
}

#[test]
fn known_values() {
    // Six one-qubit states, sixty two-qubit states, thirty two-qubit codes
    // carrying one logical qubit.
    assert_eq!(count_tableaus(1, 1).unwrap(), BigUint::from(6u32));
    assert_eq!(count_tableaus(2, 2).unwrap(), BigUint::from(60u32));
    assert_eq!(count_tableaus(2, 1).unwrap(), BigUint::from(30u32));
    assert_eq!(count_tableaus(3, 0).unwrap(), BigUint::from(1u32));
    assert!(count_tableaus(2, 3).is_err());
}
