//! Signed permutations (hyperoctahedral group elements).
//!
//! A signed permutation is stored by its window `sigma_1 .. sigma_n` of
//! nonzero integers whose absolute values are a permutation of `[n]`, and
//! extends to negative arguments by `sigma(-i) = -sigma(i)`. Ordinary
//! permutations are the signed permutations with all-positive windows.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "window {:?} is not a signed permutation of [{}]",
                    window, n
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// sigma(i) for i in {-n..-1, 1..n}.
    pub fn value(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.n());
        if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            window[a - 1] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation { window }
    }

    /// (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.n(), other.n());
        let window = (1..=self.n() as i32)
            .map(|i| self.value(other.value(i)))
            .collect();
        SignedPermutation { window }
    }

    /// Parses a comma-separated window such as "2,-1,3".
    pub fn parse(text: &str) -> Result<Self> {
        let window = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// All n! ordinary permutations of [n] as signed permutations.
pub fn enumerate_permutations(n: usize) -> Vec<SignedPermutation> {
    (1..=n as i32)
        .permutations(n)
        .map(|w| SignedPermutation { window: w })
        .collect()
}

/// All 2^n n! signed permutations of [n].
pub fn enumerate_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for perm in (1..=n as i32).permutations(n) {
        for mask in 0u32..(1 << n) {
            let window = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                .collect();
            out.push(SignedPermutation { window });
        }
    }
    out
}
