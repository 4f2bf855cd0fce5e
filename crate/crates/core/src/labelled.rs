//! Vertically and diagonally labelled paths, diagonal words, parking
//! functions and the Shi-pair encodings.
//!
//! The column of a North step is the number of East steps preceding it; the
//! zeroth column lies left of the starting point. Ties in the parking
//! function conversion (several labels in one column) are ordered
//! increasing by signed value, which is what the rise condition forces.

use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{enumerate_b, enumerate_d, enumerate_l, BallotPath, DyckPath, LatticePath, Step};
use crate::perm::{enumerate_permutations, enumerate_signed_permutations, SignedPermutation};
use crate::roots::{
    antichain_of_ballot, antichain_of_dyck, ballot_of_antichain, dyck_of_antichain, RootSystem,
    ShiPair,
};

/// The length-2n antisymmetric word w placed on the diagonal of a
/// ballot-path diagram: w_i = sigma(n+1-i) for i <= n and w_{2n+1-i} = -w_i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalWord {
    entries: Vec<i32>,
}

impl DiagonalWord {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.len() % 2 != 0 {
            return Err(Error::InvalidDiagonalWord("odd length".into()));
        }
        let n = entries.len() / 2;
        for i in 0..n {
            if entries[2 * n - 1 - i] != -entries[i] {
                return Err(Error::InvalidDiagonalWord(format!(
                    "entries {} and {} are not negatives of each other",
                    i + 1,
                    2 * n - i
                )));
            }
        }
        // The first half must be a signed permutation window (read reversed).
        SignedPermutation::new(entries[..n].to_vec())
            .map_err(|_| Error::InvalidDiagonalWord("first half is not a signed arrangement of [n]".into()))?;
        Ok(DiagonalWord { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// w_i with 1-based i.
    pub fn entry(&self, i: usize) -> i32 {
        self.entries[i - 1]
    }

    pub fn parse(text: &str) -> Result<Self> {
        let entries = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidDiagonalWord(format!("bad entry {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        DiagonalWord::new(entries)
    }
}

impl fmt::Display for DiagonalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// w^sigma, the diagonal word of a signed permutation.
pub fn diagonal_word(sigma: &SignedPermutation) -> DiagonalWord {
    let n = sigma.n() as i32;
    let entries = (1..=2 * n)
        .map(|i| {
            if i <= n {
                sigma.value(n + 1 - i)
            } else {
                -sigma.value(i - n)
            }
        })
        .collect();
    DiagonalWord { entries }
}

/// The unique sigma with diagonal_word(sigma) = w; rejects invalid words.
pub fn signed_perm_of_word(entries: &[i32]) -> Result<SignedPermutation> {
    let word = DiagonalWord::new(entries.to_vec())?;
    let n = word.n();
    let window = (1..=n).map(|k| word.entry(n + 1 - k)).collect();
    SignedPermutation::new(window)
}

/// A Dyck path with North-step labels increasing along columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerticallyLabelledPathA {
    path: DyckPath,
    labels: SignedPermutation,
}

impl VerticallyLabelledPathA {
    pub fn is_valid(path: &DyckPath, labels: &SignedPermutation) -> bool {
        labels.n() == path.n()
            && labels.is_unsigned()
            && path
                .path()
                .rises()
                .iter()
                .all(|&i| labels.value(i as i32) < labels.value(i as i32 + 1))
    }

    pub fn new(path: DyckPath, labels: SignedPermutation) -> Result<Self> {
        if Self::is_valid(&path, &labels) {
            Ok(VerticallyLabelledPathA { path, labels })
        } else {
            Err(Error::InvalidLabelling(format!(
                "({}, {}) is not a vertically labelled Dyck path",
                path, labels
            )))
        }
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &SignedPermutation {
        &self.labels
    }
}

/// A lattice path in L(n,n) with signed North-step labels: labels increase
/// along columns and the zeroth column carries positive labels only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerticallyLabelledPathC {
    path: LatticePath,
    labels: SignedPermutation,
}

impl VerticallyLabelledPathC {
    pub fn is_valid(path: &LatticePath, labels: &SignedPermutation) -> bool {
        if path.square_size() != Some(labels.n()) {
            return false;
        }
        if path.steps().first() == Some(&Step::N) && labels.value(1) < 0 {
            return false;
        }
        path.rises()
            .iter()
            .all(|&i| labels.value(i as i32) < labels.value(i as i32 + 1))
    }

    pub fn new(path: LatticePath, labels: SignedPermutation) -> Result<Self> {
        if Self::is_valid(&path, &labels) {
            Ok(VerticallyLabelledPathC { path, labels })
        } else {
            Err(Error::InvalidLabelling(format!(
                "({}, {}) is not a vertically labelled lattice path",
                path, labels
            )))
        }
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn labels(&self) -> &SignedPermutation {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.n()
    }
}

/// A Dyck path with diagonal labels: sigma_i < sigma_j at every valley (i,j).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonallyLabelledPathA {
    path: DyckPath,
    labels: SignedPermutation,
}

impl DiagonallyLabelledPathA {
    pub fn is_valid(path: &DyckPath, labels: &SignedPermutation) -> bool {
        labels.n() == path.n()
            && labels.is_unsigned()
            && path
                .path()
                .valleys()
                .iter()
                .all(|&(i, j)| labels.value(i as i32) < labels.value(j as i32))
    }

    pub fn new(path: DyckPath, labels: SignedPermutation) -> Result<Self> {
        if Self::is_valid(&path, &labels) {
            Ok(DiagonallyLabelledPathA { path, labels })
        } else {
            Err(Error::InvalidLabelling(format!(
                "({}, {}) is not a diagonally labelled Dyck path",
                path, labels
            )))
        }
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &SignedPermutation {
        &self.labels
    }
}

/// A ballot path with a diagonal word: w_i > w_j at every valley (i,j), and
/// w_i > 0 when the final step is the i-th East step.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonallyLabelledPathC {
    path: BallotPath,
    word: DiagonalWord,
}

impl DiagonallyLabelledPathC {
    pub fn is_valid(path: &BallotPath, word: &DiagonalWord) -> bool {
        if word.n() != path.n() {
            return false;
        }
        if !path
            .path()
            .valleys()
            .iter()
            .all(|&(i, j)| word.entry(i) > word.entry(j))
        {
            return false;
        }
        if path.path().steps().last() == Some(&Step::E) {
            let m = path.path().east_count();
            if word.entry(m) <= 0 {
                return false;
            }
        }
        true
    }

    pub fn new(path: BallotPath, word: DiagonalWord) -> Result<Self> {
        if Self::is_valid(&path, &word) {
            Ok(DiagonallyLabelledPathC { path, word })
        } else {
            Err(Error::InvalidLabelling(format!(
                "({}, {}) is not a diagonally labelled ballot path",
                path, word
            )))
        }
    }

    pub fn path(&self) -> &BallotPath {
        &self.path
    }

    pub fn word(&self) -> &DiagonalWord {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.path.n()
    }
}

/// A classical parking function: #{j : f_j <= i-1} >= i for all i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunctionA {
    values: Vec<i64>,
}

impl ParkingFunctionA {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        for i in 1..=n {
            let count = values.iter().filter(|&&f| f <= i as i64 - 1).count();
            if count < i {
                return Err(Error::NotParkingFunction(format!(
                    "only {} entries are <= {}",
                    count,
                    i - 1
                )));
            }
        }
        if values.iter().any(|&f| f < 0) {
            return Err(Error::NotParkingFunction("negative entry".into()));
        }
        Ok(ParkingFunctionA { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// A type C parking function: an integer vector with entries in [-n, n].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunctionC {
    values: Vec<i64>,
}

impl ParkingFunctionC {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len() as i64;
        if let Some(bad) = values.iter().find(|&&f| f < -n || f > n) {
            return Err(Error::NotParkingFunction(format!(
                "entry {} out of range [{}, {}]",
                bad, -n, n
            )));
        }
        Ok(ParkingFunctionC { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }
}

fn parse_signed_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::NotParkingFunction(format!("bad entry {:?}", t)))
        })
        .collect()
}

impl ParkingFunctionC {
    pub fn parse(text: &str) -> Result<Self> {
        ParkingFunctionC::new(parse_signed_list(text)?)
    }
}

impl ParkingFunctionA {
    pub fn parse(text: &str) -> Result<Self> {
        ParkingFunctionA::new(parse_signed_list(text)?)
    }
}

/// Place label i in column f_i (label -i in column -f_i when f_i < 0), sort
/// columns increasingly and draw the path.
pub fn pf_to_vertical_c(f: &ParkingFunctionC) -> VerticallyLabelledPathC {
    let n = f.n();
    let mut columns: Vec<Vec<i32>> = vec![Vec::new(); n + 1];
    for (idx, &fi) in f.values().iter().enumerate() {
        let label = idx as i32 + 1;
        if fi >= 0 {
            columns[fi as usize].push(label);
        } else {
            columns[(-fi) as usize].push(-label);
        }
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut window = Vec::with_capacity(n);
    for (j, col) in columns.iter_mut().enumerate() {
        col.sort_unstable();
        if j > 0 {
            steps.push(Step::E);
        }
        steps.extend(std::iter::repeat(Step::N).take(col.len()));
        window.extend_from_slice(col);
    }
    let path = LatticePath::new(steps).expect("n >= 1");
    let labels = SignedPermutation::new(window).expect("labels form a signed permutation");
    VerticallyLabelledPathC::new(path, labels).expect("construction satisfies the invariants")
}

/// Reads a parking function back off the columns of a labelled path.
pub fn vertical_c_to_pf(v: &VerticallyLabelledPathC) -> ParkingFunctionC {
    let n = v.n();
    let mut values = vec![0i64; n];
    for (k, &col) in v.path().easts_before_norths().iter().enumerate() {
        let label = v.labels().value(k as i32 + 1);
        if label > 0 {
            values[label as usize - 1] = col as i64;
        } else {
            values[(-label) as usize - 1] = -(col as i64);
        }
    }
    ParkingFunctionC { values }
}

/// Classical parking functions as labelled Dyck paths: label i in column f_i.
pub fn pf_to_vertical_a(f: &ParkingFunctionA) -> VerticallyLabelledPathA {
    let n = f.values().len();
    let mut columns: Vec<Vec<i32>> = vec![Vec::new(); n];
    for (idx, &fi) in f.values().iter().enumerate() {
        columns[fi as usize].push(idx as i32 + 1);
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut window = Vec::with_capacity(n);
    for (j, col) in columns.iter_mut().enumerate() {
        col.sort_unstable();
        if j > 0 {
            steps.push(Step::E);
        }
        steps.extend(std::iter::repeat(Step::N).take(col.len()));
        window.extend_from_slice(col);
    }
    steps.extend(std::iter::repeat(Step::E).take(2 * n - steps.len()));
    let path = DyckPath::new(LatticePath::new(steps).expect("n >= 1"))
        .expect("the parking condition yields a Dyck path");
    let labels = SignedPermutation::new(window).expect("labels form a permutation");
    VerticallyLabelledPathA::new(path, labels).expect("construction satisfies the invariants")
}

pub fn vertical_a_to_pf(v: &VerticallyLabelledPathA) -> ParkingFunctionA {
    let n = v.path().n();
    let mut values = vec![0i64; n];
    for (k, &col) in v.path().path().easts_before_norths().iter().enumerate() {
        let label = v.labels().value(k as i32 + 1);
        values[label as usize - 1] = col as i64;
    }
    ParkingFunctionA { values }
}

/// (beta, w^sigma) -> (A_beta, sigma), the region encoding of a diagonally
/// labelled ballot path.
pub fn diagonal_c_to_shi_pair(d: &DiagonallyLabelledPathC) -> ShiPair {
    let system = RootSystem::type_c(d.n());
    let antichain = antichain_of_ballot(d.path());
    let sigma = signed_perm_of_word(d.word().entries()).expect("word was validated");
    ShiPair::new(&system, antichain, sigma).expect("valid labellings yield valid Shi pairs")
}

/// Inverse of `diagonal_c_to_shi_pair`; rejects pairs with w(A) not positive.
pub fn shi_pair_to_diagonal_c(n: usize, pair: &ShiPair) -> Result<DiagonallyLabelledPathC> {
    let system = RootSystem::type_c(n);
    ShiPair::new(&system, pair.antichain.clone(), pair.w.clone())?;
    let beta = ballot_of_antichain(n, &pair.antichain)?;
    let word = diagonal_word(&pair.w);
    DiagonallyLabelledPathC::new(beta, word)
}

/// (pi, sigma) -> (A_pi, sigma) for diagonally labelled Dyck paths.
pub fn diagonal_a_to_shi_pair(d: &DiagonallyLabelledPathA) -> ShiPair {
    let system = RootSystem::type_a(d.path().n());
    let antichain = antichain_of_dyck(d.path());
    ShiPair::new(&system, antichain, d.labels().clone())
        .expect("valid labellings yield valid Shi pairs")
}

pub fn shi_pair_to_diagonal_a(n: usize, pair: &ShiPair) -> Result<DiagonallyLabelledPathA> {
    let system = RootSystem::type_a(n);
    ShiPair::new(&system, pair.antichain.clone(), pair.w.clone())?;
    let pi = dyck_of_antichain(n, &pair.antichain)?;
    DiagonallyLabelledPathA::new(pi, pair.w.clone())
}

pub fn enumerate_vertical_a(n: usize) -> Vec<VerticallyLabelledPathA> {
    let perms = enumerate_permutations(n);
    enumerate_d(n)
        .into_iter()
        .flat_map(|d| {
            perms
                .iter()
                .filter(|s| VerticallyLabelledPathA::is_valid(&d, s))
                .map(|s| VerticallyLabelledPathA {
                    path: d.clone(),
                    labels: s.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn enumerate_vertical_c(n: usize) -> Vec<VerticallyLabelledPathC> {
    let perms = enumerate_signed_permutations(n);
    enumerate_l(n)
        .into_iter()
        .flat_map(|p| {
            perms
                .iter()
                .filter(|s| VerticallyLabelledPathC::is_valid(&p, s))
                .map(|s| VerticallyLabelledPathC {
                    path: p.clone(),
                    labels: s.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn enumerate_diagonal_a(n: usize) -> Vec<DiagonallyLabelledPathA> {
    let perms = enumerate_permutations(n);
    enumerate_d(n)
        .into_iter()
        .flat_map(|d| {
            perms
                .iter()
                .filter(|s| DiagonallyLabelledPathA::is_valid(&d, s))
                .map(|s| DiagonallyLabelledPathA {
                    path: d.clone(),
                    labels: s.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn enumerate_diagonal_c(n: usize) -> Vec<DiagonallyLabelledPathC> {
    let words: Vec<DiagonalWord> = enumerate_signed_permutations(n)
        .iter()
        .map(diagonal_word)
        .collect();
    enumerate_b(n)
        .into_iter()
        .flat_map(|b| {
            words
                .iter()
                .filter(|w| DiagonallyLabelledPathC::is_valid(&b, w))
                .map(|w| DiagonallyLabelledPathC {
                    path: b.clone(),
                    word: w.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}
