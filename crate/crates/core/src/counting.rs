//! Exact counts of stabilizer codes and of canonical diagrams.
//!
//! `f(n, k, p, o)` counts the ways to finish a diagram with `n` outputs
//! still to place, `k` of them non-pivots, after `p` pivots and `o`
//! non-pivots have been placed. Canonicity of the diagrams is the identity
//! `f(n, k, 0, 0) = count_tableaus(n, k)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountQuery {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    pub o: usize,
}

impl CountQuery {
    pub fn new(n: usize, k: usize, p: usize, o: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
        }
        Ok(CountQuery { n, k, p, o })
    }

    /// The query `f(n, k, 0, 0)`.
    pub fn fresh(n: usize, k: usize) -> Result<Self> {
        CountQuery::new(n, k, 0, 0)
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Number of distinct signed stabilizer groups with `k` generators on `n`
/// qubits: ordered lists of independent commuting generators divided by
/// the number of ordered generating sets per group.
pub fn count_tableaus(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=k {
        num *= pow2(2 * n - i + 2) - pow2(i);
        den *= pow2(k) - pow2(i - 1);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// The recursion, memoized per call.
pub fn count_zxcf_recursive(q: CountQuery) -> BigUint {
    let mut memo = HashMap::new();
    f(q, &mut memo)
}

fn f(q: CountQuery, memo: &mut HashMap<CountQuery, BigUint>) -> BigUint {
    if q.n == 0 && q.k == 0 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&q) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    if q.n > q.k {
        // next output is a pivot: any subset of the placed non-pivots
        let next = CountQuery {
            n: q.n - 1,
            p: q.p + 1,
            ..q
        };
        total += pow2(q.o) * f(next, memo);
    }
    if q.k > 0 {
        // next output is a non-pivot: 4 phases per nonempty edge set, plus
        // the 6 decorations of an isolated node
        let next = CountQuery {
            n: q.n - 1,
            k: q.k - 1,
            o: q.o + 1,
            ..q
        };
        total += (pow2(2 * q.p + q.o + 2) + 2u32) * f(next, memo);
    }
    memo.insert(q, total.clone());
    total
}

/// Closed form of the recursion.
pub fn count_zxcf_closed(q: CountQuery) -> BigUint {
    let CountQuery { n, k, p, o } = q;
    let mut num = pow2(o * (n - k));
    let mut den = BigUint::one();
    for i in 1..=k {
        num *= (pow2(n + 1) - pow2(i)) * (pow2(n - i + 1 + 2 * p + o) + 1u32);
        den *= pow2(k) - pow2(i - 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, k: usize, p: usize, o: usize) -> CountQuery {
        CountQuery::new(n, k, p, o).unwrap()
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(count_tableaus(1, 1).unwrap(), BigUint::from(6u32));
        assert_eq!(count_tableaus(2, 1).unwrap(), BigUint::from(30u32));
        assert_eq!(count_tableaus(3, 2).unwrap(), BigUint::from(1260u32));
        assert_eq!(count_tableaus(7, 0).unwrap(), BigUint::one());
        assert!(count_tableaus(1, 2).is_err());
    }

    #[test]
    fn recursion_values() {
        assert_eq!(count_zxcf_recursive(q(0, 0, 3, 5)), BigUint::one());
        assert_eq!(count_zxcf_recursive(q(1, 1, 0, 0)), BigUint::from(6u32));
        assert_eq!(count_zxcf_recursive(q(2, 1, 0, 0)), BigUint::from(30u32));
    }

    #[test]
    fn closed_values() {
        assert_eq!(count_zxcf_closed(q(2, 1, 0, 0)), BigUint::from(30u32));
        assert_eq!(count_zxcf_closed(q(3, 2, 0, 0)), BigUint::from(1260u32));
        assert_eq!(count_zxcf_closed(q(3, 0, 0, 2)), BigUint::from(64u32));
    }

    #[test]
    fn two_qubit_states_by_hand() {
        // 60 two-qubit stabilizer states: 36 products and 24 entangled.
        assert_eq!(count_tableaus(2, 2).unwrap(), BigUint::from(60u32));
        assert_eq!(count_zxcf_recursive(q(2, 2, 0, 0)), BigUint::from(60u32));
    }
}
