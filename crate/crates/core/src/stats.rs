//! The statistics area, area', dinv and dinv' in both types, typed
//! diagonal-inversion listings, and q,t distribution tables.
//!
//! Diagonal inversions form a multiset keyed by (kind, i, j): the same pair
//! (i, j) may count under two kinds at once. Box enumeration for area'
//! delegates to the staircase rule in `paths`; nothing is re-derived here.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::labelled::{DiagonallyLabelledPathA, DiagonallyLabelledPathC, VerticallyLabelledPathA, VerticallyLabelledPathC};
use crate::paths::{area_vector_a, area_vector_c, ballot_boxes, DyckPath, LatticePath};
use crate::perm::SignedPermutation;

/// The five clauses of the type C dinv statistic, over the area vector a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InversionKind {
    /// a_i = a_j
    Eq,
    /// a_i = a_j + 1
    Shift,
    /// a_i = -a_j
    Neg,
    /// a_i = -a_j + 1
    NegShift,
    /// a_i = 0 (no second row)
    Zero,
}

/// One diagonal inversion; `j` is absent for the Zero kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypedInversion {
    pub kind: InversionKind,
    pub i: usize,
    pub j: Option<usize>,
}

impl TypedInversion {
    fn pair(kind: InversionKind, i: usize, j: usize) -> Self {
        debug_assert!(i < j);
        TypedInversion { kind, i, j: Some(j) }
    }
}

impl fmt::Display for TypedInversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            InversionKind::Eq => "EQ",
            InversionKind::Shift => "SHIFT",
            InversionKind::Neg => "NEG",
            InversionKind::NegShift => "NEGSHIFT",
            InversionKind::Zero => "ZERO",
        };
        match self.j {
            Some(j) => write!(f, "{}({},{})", kind, self.i, j),
            None => write!(f, "{}({})", kind, self.i),
        }
    }
}

/// All diagonal inversions of a path in L(n,n), in (i, j) order per kind.
pub fn typed_inversions_c(path: &LatticePath) -> Result<Vec<TypedInversion>> {
    let a = area_vector_c(path)?;
    let a = a.entries();
    let n = a.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if a[i] == a[j] {
                out.push(TypedInversion::pair(InversionKind::Eq, i + 1, j + 1));
            }
            if a[i] == a[j] + 1 {
                out.push(TypedInversion::pair(InversionKind::Shift, i + 1, j + 1));
            }
            if a[i] == -a[j] {
                out.push(TypedInversion::pair(InversionKind::Neg, i + 1, j + 1));
            }
            if a[i] == -a[j] + 1 {
                out.push(TypedInversion::pair(InversionKind::NegShift, i + 1, j + 1));
            }
        }
        if a[i] == 0 {
            out.push(TypedInversion {
                kind: InversionKind::Zero,
                i: i + 1,
                j: None,
            });
        }
    }
    Ok(out)
}

pub fn dinv_c(path: &LatticePath) -> Result<usize> {
    Ok(typed_inversions_c(path)?.len())
}

/// Type A dinv: pairs i < j with a_i = a_j or a_i = a_j + 1.
pub fn dinv_a(path: &DyckPath) -> usize {
    let a = area_vector_a(path);
    let a = a.entries();
    let mut count = 0;
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i] == a[j] || a[i] == a[j] + 1 {
                count += 1;
            }
        }
    }
    count
}

/// Whether an inversion survives the label filter of dinv'.
fn counted(inv: &TypedInversion, sigma: &SignedPermutation) -> bool {
    let si = sigma.value(inv.i as i32);
    match inv.kind {
        InversionKind::Zero => si < 0,
        _ => {
            let sj = sigma.value(inv.j.expect("paired kinds carry j") as i32);
            match inv.kind {
                InversionKind::Eq => si < sj,
                InversionKind::Shift => si > sj,
                InversionKind::Neg => si < -sj,
                InversionKind::NegShift => si > -sj,
                InversionKind::Zero => unreachable!(),
            }
        }
    }
}

pub fn dinv_prime_c(v: &VerticallyLabelledPathC) -> usize {
    typed_inversions_c(v.path())
        .expect("labelled paths are square")
        .iter()
        .filter(|inv| counted(inv, v.labels()))
        .count()
}

/// EQ pairs with sigma_i < sigma_j plus SHIFT pairs with sigma_i > sigma_j.
pub fn dinv_prime_a(v: &VerticallyLabelledPathA) -> usize {
    let a = area_vector_a(v.path());
    let a = a.entries();
    let sigma = v.labels();
    let mut count = 0;
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let (si, sj) = (sigma.value(i as i32 + 1), sigma.value(j as i32 + 1));
            if a[i] == a[j] && si < sj {
                count += 1;
            }
            if a[i] == a[j] + 1 && si > sj {
                count += 1;
            }
        }
    }
    count
}

/// Number of boxes strictly between a Dyck path and the main diagonal.
pub fn area_a(path: &DyckPath) -> usize {
    area_vector_a(path).entries().iter().sum::<i64>() as usize
}

/// Boxes of `area_a`: row j holds a_j boxes in columns j-a_j .. j-1; the box
/// in column i, row j counts iff sigma_i < sigma_j.
pub fn area_prime_a(d: &DiagonallyLabelledPathA) -> usize {
    let a = area_vector_a(d.path());
    let sigma = d.labels();
    let mut count = 0;
    for (k, &aj) in a.entries().iter().enumerate() {
        let j = k as i64 + 1;
        for i in (j - aj)..j {
            if sigma.value(i as i32) < sigma.value(j as i32) {
                count += 1;
            }
        }
    }
    count
}

/// The box in column c, row r below a ballot path counts iff w_c > w_r.
pub fn area_prime_c(d: &DiagonallyLabelledPathC) -> usize {
    ballot_boxes(d.path())
        .into_iter()
        .filter(|&(c, r)| d.word().entry(c) > d.word().entry(r))
        .count()
}

/// Joint (q-exponent, t-exponent) counts over a finite family.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtDistribution {
    counts: BTreeMap<(i64, i64), u64>,
}

impl QtDistribution {
    pub fn new() -> Self {
        QtDistribution::default()
    }

    pub fn add(&mut self, q: i64, t: i64) {
        *self.counts.entry((q, t)).or_insert(0) += 1;
    }

    /// Associative merge, so shards accumulated in parallel can be combined.
    pub fn merge(&mut self, other: &QtDistribution) {
        for (&k, &v) in &other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }

    pub fn counts(&self) -> &BTreeMap<(i64, i64), u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn q_marginal(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&(q, _), &c) in &self.counts {
            *out.entry(q).or_insert(0) += c;
        }
        out
    }

    pub fn t_marginal(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&(_, t), &c) in &self.counts {
            *out.entry(t).or_insert(0) += c;
        }
        out
    }

    /// Sorted rows under a "q,t,count" header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,t,count\n");
        for (&(q, t), &c) in &self.counts {
            out.push_str(&format!("{},{},{}\n", q, t, c));
        }
        out
    }
}

/// Accumulates a distribution from any stream of (q, t) pairs.
pub fn qt_distribution<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> QtDistribution {
    let mut dist = QtDistribution::new();
    for (q, t) in pairs {
        dist.add(q, t);
    }
    dist
}
