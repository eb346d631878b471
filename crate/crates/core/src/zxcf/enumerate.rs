//! Every canonical diagram of a given shape, each exactly once.
//!
//! Outputs are placed left to right. A new output is either the next pivot
//! (its column of `m` is the next unit vector, it may join any earlier
//! non-pivot, and it carries no decoration) or a non-pivot (its column of
//! `m` is any vector over the inputs whose pivots are already placed, it may
//! join any earlier output, and it carries one of four phases, or one of the
//! six decorations when it has no edge at all).

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

use super::ZxcfDiagram;

/// Largest `n` accepted; branch counts must fit in a `u64`.
pub const MAX_ENUMERATION_N: usize = 20;

/// The six decorations of an isolated non-pivot, in enumeration order.
const SIX: [(bool, u8); 6] = [
    (false, 0),
    (false, 1),
    (false, 2),
    (false, 3),
    (true, 0),
    (true, 2),
];

pub fn enumerate_zxcf(n: usize, k: usize) -> Result<ZxcfEnumerator> {
    if k > n {
        return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::SizeCap {
            what: "n",
            size: n,
            cap: MAX_ENUMERATION_N,
        });
    }
    Ok(ZxcfEnumerator {
        n,
        k,
        choices: vec![0; n],
        done: false,
    })
}

/// Streaming enumerator; see [`enumerate_zxcf`].
#[derive(Clone, Debug)]
pub struct ZxcfEnumerator {
    n: usize,
    k: usize,
    /// Branch taken at each output, a mixed-radix counter.
    choices: Vec<u64>,
    done: bool,
}

impl ZxcfEnumerator {
    /// Number of branches at an output given `p` pivots and `o` non-pivots
    /// already placed.
    fn radix(&self, p: usize, o: usize) -> u64 {
        let mut r = 0;
        if p < self.n - self.k {
            r += 1u64 << o;
        }
        if o < self.k {
            r += (1u64 << (2 * p + o + 2)) + 2;
        }
        r
    }

    fn radices(&self) -> Vec<u64> {
        let (mut p, mut o) = (0, 0);
        let mut out = Vec::with_capacity(self.n);
        for &c in &self.choices {
            out.push(self.radix(p, o));
            if p < self.n - self.k && c < 1u64 << o {
                p += 1;
            } else {
                o += 1;
            }
        }
        out
    }

    fn build(&self) -> ZxcfDiagram {
        let (n, k) = (self.n, self.k);
        let mut m = BitMatrix::zeros(n - k, n);
        let mut a = BitMatrix::zeros(n, n);
        let mut phase = vec![0; n];
        let mut had = vec![false; n];
        let mut pivots: Vec<usize> = Vec::new();
        let mut others: Vec<usize> = Vec::new();
        for (col, &choice) in self.choices.iter().enumerate() {
            let (p, o) = (pivots.len(), others.len());
            let mut c = choice;
            if p < n - k {
                if c < 1u64 << o {
                    m.set(p, col, true);
                    for (i, &u) in others.iter().enumerate() {
                        if c >> i & 1 == 1 {
                            a.set(u, col, true);
                            a.set(col, u, true);
                        }
                    }
                    pivots.push(col);
                    continue;
                }
                c -= 1u64 << o;
            }
            if c < 6 {
                (had[col], phase[col]) = SIX[c as usize];
            } else {
                let c = c - 6;
                phase[col] = (c % 4) as u8;
                let mask = c / 4 + 1;
                for r in 0..p {
                    if mask >> r & 1 == 1 {
                        m.set(r, col, true);
                    }
                }
                let lower = pivots.iter().chain(others.iter());
                for (i, &u) in lower.enumerate() {
                    if mask >> (p + i) & 1 == 1 {
                        a.set(u, col, true);
                        a.set(col, u, true);
                    }
                }
            }
            others.push(col);
        }
        ZxcfDiagram::new(n, k, m, a, phase, had).expect("shapes are consistent")
    }

    fn advance(&mut self) {
        let radices = self.radices();
        for i in (0..self.n).rev() {
            if self.choices[i] + 1 < radices[i] {
                self.choices[i] += 1;
                for c in &mut self.choices[i + 1..] {
                    *c = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for ZxcfEnumerator {
    type Item = ZxcfDiagram;

    fn next(&mut self) -> Option<ZxcfDiagram> {
        if self.done {
            return None;
        }
        let d = self.build();
        self.advance();
        Some(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_zxcf(0, 0).unwrap().count(), 1);
        assert_eq!(enumerate_zxcf(1, 1).unwrap().count(), 6);
        assert_eq!(enumerate_zxcf(1, 0).unwrap().count(), 1);
        assert_eq!(enumerate_zxcf(2, 1).unwrap().count(), 30);
        assert!(enumerate_zxcf(1, 2).is_err());
    }

    #[test]
    fn all_valid_and_distinct() {
        let all: Vec<_> = enumerate_zxcf(3, 1).unwrap().collect();
        assert!(all.iter().all(|d| d.is_valid()));
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }
}
