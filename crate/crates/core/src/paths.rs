//! Step words, rises, valleys, area vectors and enumeration of path families.
//!
//! All indices are 1-based: the i-th North step, the i-th East step, row i
//! (the row crossed by the i-th North step) and column i. Enumeration order
//! is lexicographic with N < E throughout, so exported tables are
//! reproducible byte for byte.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A lattice path step: North `(0,1)` or East `(1,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// A word over {N, E}, read left to right from the starting point `(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(LatticePath { steps })
    }

    /// Parses an 'N'/'E' string with no separators.
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                'N' => steps.push(Step::N),
                'E' => steps.push(Step::E),
                other => return Err(Error::InvalidStepChar(other)),
            }
        }
        LatticePath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::N).count()
    }

    pub fn east_count(&self) -> usize {
        self.len() - self.north_count()
    }

    /// Returns n if the path lies in L(n,n), i.e. has n North and n East steps.
    pub fn square_size(&self) -> Option<usize> {
        let n = self.north_count();
        (self.len() == 2 * n).then_some(n)
    }

    fn require_square(&self) -> Result<usize> {
        self.square_size()
            .ok_or_else(|| Error::NotSquare(self.to_string()))
    }

    /// All i such that the i-th North step is immediately followed by a North step.
    pub fn rises(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut norths = 0usize;
        for pair in self.steps.windows(2) {
            if pair[0] == Step::N {
                norths += 1;
                if pair[1] == Step::N {
                    out.push(norths);
                }
            }
        }
        out
    }

    /// All (i, j) such that the i-th East step is immediately followed by the
    /// j-th North step, in path order.
    pub fn valleys(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut norths = 0usize;
        let mut easts = 0usize;
        for k in 0..self.steps.len() {
            match self.steps[k] {
                Step::N => norths += 1,
                Step::E => {
                    easts += 1;
                    if self.steps.get(k + 1) == Some(&Step::N) {
                        out.push((easts, norths + 1));
                    }
                }
            }
        }
        out
    }

    /// Every prefix has #E <= #N.
    pub fn stays_above_diagonal(&self) -> bool {
        let mut diff = 0i64;
        for s in &self.steps {
            match s {
                Step::N => diff += 1,
                Step::E => diff -= 1,
            }
            if diff < 0 {
                return false;
            }
        }
        true
    }

    pub fn is_dyck(&self) -> bool {
        self.square_size().is_some() && self.stays_above_diagonal()
    }

    pub fn is_ballot(&self) -> bool {
        self.len() % 2 == 0 && self.stays_above_diagonal()
    }

    /// For each North step, the number of East steps preceding it.
    pub fn easts_before_norths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.north_count());
        let mut easts = 0usize;
        for s in &self.steps {
            match s {
                Step::N => out.push(easts),
                Step::E => easts += 1,
            }
        }
        out
    }

    /// Reverses the step word and exchanges N and E. An involution on L(n,n).
    pub fn reverse_swap(&self) -> LatticePath {
        LatticePath {
            steps: self.steps.iter().rev().map(|s| s.flip()).collect(),
        }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticePath::parse(s)
    }
}

/// A path in L(n,n) that never goes below the main diagonal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath(LatticePath);

impl DyckPath {
    pub fn new(path: LatticePath) -> Result<Self> {
        if path.is_dyck() {
            Ok(DyckPath(path))
        } else {
            Err(Error::NotDyck)
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        DyckPath::new(LatticePath::parse(text)?)
    }

    pub fn path(&self) -> &LatticePath {
        &self.0
    }

    pub fn into_path(self) -> LatticePath {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A path of 2n steps whose every prefix has #E <= #N.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BallotPath(LatticePath);

impl BallotPath {
    pub fn new(path: LatticePath) -> Result<Self> {
        if path.is_ballot() {
            Ok(BallotPath(path))
        } else {
            Err(Error::NotBallot)
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        BallotPath::new(LatticePath::parse(text)?)
    }

    pub fn path(&self) -> &LatticePath {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Type A area vector: a_i = (i-1) - #{East steps before the i-th North step}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaVectorA(Vec<i64>);

impl AreaVectorA {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// Type C area vector: a_i = i - #{East steps before the i-th North step}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaVectorC(Vec<i64>);

impl AreaVectorC {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let n = entries.len() as i64;
        let mut prev = 0i64;
        for (k, &a) in entries.iter().enumerate() {
            let b = (k as i64 + 1) - a;
            if b < prev {
                return Err(Error::InvalidAreaVector(format!(
                    "column sequence decreases at position {}",
                    k + 1
                )));
            }
            if !(0..=n).contains(&b) {
                return Err(Error::InvalidAreaVector(format!(
                    "column b_{} = {} out of range [0, {}]",
                    k + 1,
                    b,
                    n
                )));
            }
            prev = b;
        }
        Ok(AreaVectorC(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// a_i = (i-1) - b_i where b_i counts East steps before the i-th North step.
pub fn area_vector_a(path: &DyckPath) -> AreaVectorA {
    let entries = path
        .path()
        .easts_before_norths()
        .iter()
        .enumerate()
        .map(|(k, &b)| k as i64 - b as i64)
        .collect();
    AreaVectorA(entries)
}

/// a_i = i - b_i where b_i counts East steps before the i-th North step.
pub fn area_vector_c(path: &LatticePath) -> Result<AreaVectorC> {
    path.require_square()?;
    let entries = path
        .easts_before_norths()
        .iter()
        .enumerate()
        .map(|(k, &b)| (k as i64 + 1) - b as i64)
        .collect();
    Ok(AreaVectorC(entries))
}

/// Rebuilds the unique path in L(n,n) with the given type C area vector.
pub fn path_from_area_vector_c(entries: &[i64]) -> Result<LatticePath> {
    let v = AreaVectorC::new(entries.to_vec())?;
    let n = v.entries().len();
    let cols: Vec<usize> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(k, &a)| ((k as i64 + 1) - a) as usize)
        .collect();
    let mut steps = Vec::with_capacity(2 * n);
    let mut row = 0usize;
    for col in 0..=n {
        if col > 0 {
            steps.push(Step::E);
        }
        while row < n && cols[row] == col {
            steps.push(Step::N);
            row += 1;
        }
    }
    LatticePath::new(steps)
}

/// Staircase row length for ballot paths in B_n: min(r-1, 2n+1-r).
fn staircase_row_len(n: usize, r: usize) -> usize {
    (r - 1).min(2 * n + 1 - r)
}

/// The boxes (column, row) lying below the ballot path inside the symmetric
/// staircase: in row r the columns run from one past the path to the
/// staircase boundary min(r-1, 2n+1-r).
pub fn ballot_boxes(beta: &BallotPath) -> Vec<(usize, usize)> {
    let n = beta.n();
    let easts_before = beta.path().easts_before_norths();
    let mut boxes = Vec::new();
    for (k, &b) in easts_before.iter().enumerate() {
        let r = k + 1;
        for c in (b + 1)..=staircase_row_len(n, r) {
            boxes.push((c, r));
        }
    }
    boxes
}

/// Number of boxes below the ballot path.
pub fn ballot_area(beta: &BallotPath) -> usize {
    let n = beta.n();
    beta.path()
        .easts_before_norths()
        .iter()
        .enumerate()
        .map(|(k, &b)| staircase_row_len(n, k + 1).saturating_sub(b))
        .sum()
}

fn extend_words(out: &mut Vec<LatticePath>, prefix: &mut Vec<Step>, len: usize, filter: &dyn Fn(&[Step], Step) -> bool, accept: &dyn Fn(&[Step]) -> bool) {
    if prefix.len() == len {
        if accept(prefix) {
            out.push(LatticePath { steps: prefix.clone() });
        }
        return;
    }
    for step in [Step::N, Step::E] {
        if filter(prefix, step) {
            prefix.push(step);
            extend_words(out, prefix, len, filter, accept);
            prefix.pop();
        }
    }
}

/// All paths in L(n,n), lexicographic with N < E.
pub fn enumerate_l(n: usize) -> Vec<LatticePath> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let filter = move |prefix: &[Step], step: Step| {
        let norths = prefix.iter().filter(|s| **s == Step::N).count();
        match step {
            Step::N => norths < n,
            Step::E => prefix.len() - norths < n,
        }
    };
    extend_words(&mut out, &mut Vec::new(), 2 * n, &filter, &|_| true);
    out
}

/// All Dyck paths in D_n, lexicographic with N < E.
pub fn enumerate_d(n: usize) -> Vec<DyckPath> {
    enumerate_l(n)
        .into_iter()
        .filter(|p| p.stays_above_diagonal())
        .map(DyckPath)
        .collect()
}

/// All ballot paths of length 2n, lexicographic with N < E.
pub fn enumerate_b(n: usize) -> Vec<BallotPath> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let filter = |prefix: &[Step], step: Step| {
        if step == Step::N {
            return true;
        }
        let norths = prefix.iter().filter(|s| **s == Step::N).count();
        prefix.len() - norths < norths
    };
    extend_words(&mut out, &mut Vec::new(), 2 * n, &filter, &|_| true);
    out.into_iter().map(BallotPath).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> LatticePath {
        LatticePath::parse(s).unwrap()
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        assert_eq!(path("NE").to_string(), "NE");
        assert_eq!(path("NENNNE").len(), 6);
        assert!(matches!(
            LatticePath::parse("NX"),
            Err(Error::InvalidStepChar('X'))
        ));
        assert!(matches!(LatticePath::parse(""), Err(Error::EmptyPath)));
    }

    #[test]
    fn rises_worked_examples() {
        assert_eq!(path("NENNNE").rises(), vec![2, 3]);
        assert_eq!(path("NNNNEENENEEE").rises(), vec![1, 2, 3]);
        assert_eq!(path("ENENEN").rises(), Vec::<usize>::new());
    }

    #[test]
    fn valleys_worked_examples() {
        assert_eq!(path("NENNNE").valleys(), vec![(1, 2)]);
        assert_eq!(path("NNNNEENENEEE").valleys(), vec![(2, 5), (3, 6)]);
        assert_eq!(path("NNEE").valleys(), Vec::<(usize, usize)>::new());
    }

    #[test]
    fn dyck_and_ballot_predicates() {
        assert!(path("NNEE").is_dyck());
        assert!(!path("ENNE").is_dyck());
        assert!(path("NENN").is_ballot());
        assert!(!path("NEN").is_ballot());
        assert!(!path("ENNN").is_ballot());
    }

    #[test]
    fn area_vector_a_examples() {
        let d = DyckPath::parse("NNNEENENEE").unwrap();
        assert_eq!(area_vector_a(&d).entries(), &[0, 1, 2, 1, 1]);
        let flat = DyckPath::parse("NENENE").unwrap();
        assert_eq!(area_vector_a(&flat).entries(), &[0, 0, 0]);
        let full = DyckPath::parse("NNEE").unwrap();
        assert_eq!(area_vector_a(&full).entries(), &[0, 1]);
    }

    #[test]
    fn area_vector_c_examples() {
        assert_eq!(
            area_vector_c(&path("NEEEENNNNNEE")).unwrap().entries(),
            &[1, -2, -1, 0, 1, 2]
        );
        assert_eq!(
            area_vector_c(&path("ENENENEN")).unwrap().entries(),
            &[0, 0, 0, 0]
        );
        assert_eq!(
            area_vector_c(&path("EEENNNNE")).unwrap().entries(),
            &[-2, -1, 0, 1]
        );
        assert!(area_vector_c(&path("NEN")).is_err());
    }

    #[test]
    fn path_from_area_vector_c_examples() {
        assert_eq!(
            path_from_area_vector_c(&[1, -2, -1, 0, 1, 2]).unwrap(),
            path("NEEEENNNNNEE")
        );
        assert_eq!(path_from_area_vector_c(&[1, 2, 3]).unwrap(), path("NNNEEE"));
        assert!(path_from_area_vector_c(&[2, 1]).is_err());
    }

    #[test]
    fn area_vector_c_roundtrip_exhaustive() {
        for n in 1..=5 {
            for p in enumerate_l(n) {
                let a = area_vector_c(&p).unwrap();
                assert_eq!(path_from_area_vector_c(a.entries()).unwrap(), p);
            }
        }
    }

    #[test]
    fn dyck_area_vectors_compatible() {
        // a^C_i = a^A_i + 1 on Dyck paths.
        for n in 1..=5 {
            for d in enumerate_d(n) {
                let a = area_vector_a(&d);
                let c = area_vector_c(d.path()).unwrap();
                for (x, y) in a.entries().iter().zip(c.entries()) {
                    assert_eq!(x + 1, *y);
                }
            }
        }
    }

    #[test]
    fn ballot_boxes_examples() {
        let b = BallotPath::parse("NNENNE").unwrap();
        assert_eq!(ballot_boxes(&b), vec![(1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(ballot_area(&b), 4);
        let b = BallotPath::parse("NENE").unwrap();
        assert!(ballot_boxes(&b).is_empty());
        let b = BallotPath::parse("NNNN").unwrap();
        assert_eq!(ballot_boxes(&b), vec![(1, 2), (1, 3), (2, 3), (1, 4)]);
        let b = BallotPath::parse("NN").unwrap();
        assert_eq!(ballot_area(&b), 1);
    }

    #[test]
    fn ballot_area_b2_profile() {
        let areas: Vec<usize> = ["NNNN", "NNNE", "NNEN", "NNEE", "NENN", "NENE"]
            .iter()
            .map(|s| ballot_area(&BallotPath::parse(s).unwrap()))
            .collect();
        assert_eq!(areas, vec![4, 3, 2, 1, 1, 0]);
    }

    #[test]
    fn reverse_swap_examples() {
        assert_eq!(path("NNEENE").reverse_swap(), path("NENNEE"));
        assert_eq!(path("NE").reverse_swap(), path("NE"));
        assert_eq!(path("NNEE").reverse_swap(), path("NNEE"));
        for p in enumerate_l(4) {
            assert_eq!(p.reverse_swap().reverse_swap(), p);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_l(2).len(), 6);
        assert_eq!(enumerate_b(2).len(), 6);
        assert_eq!(enumerate_b(3).len(), 20);
        assert_eq!(enumerate_d(3).len(), 5);
        // |B_n| = |L_{n,n}| = C(2n,n) for n <= 6.
        let binom = [2usize, 6, 20, 70, 252, 924];
        for n in 1..=6 {
            assert_eq!(enumerate_l(n).len(), binom[n - 1]);
            assert_eq!(enumerate_b(n).len(), binom[n - 1]);
        }
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for n in 1..=4 {
            let l = enumerate_l(n);
            assert!(l.windows(2).all(|w| w[0] < w[1]));
            let b = enumerate_b(n);
            assert!(b.windows(2).all(|w| w[0].path() < w[1].path()));
        }
    }

    #[test]
    fn ballot_endpoint_and_box_bounds() {
        for n in 1..=5 {
            let mut max_area = 0;
            for b in enumerate_b(n) {
                let k = b.path().north_count();
                assert_eq!(b.path().east_count(), 2 * n - k);
                for (c, r) in ballot_boxes(&b) {
                    assert!(c <= staircase_row_len(n, r));
                    assert!(r <= k);
                }
                max_area = max_area.max(ballot_area(&b));
            }
            assert_eq!(max_area, n * n);
            // attained uniquely by the all-North path
            let unique: Vec<_> = enumerate_b(n)
                .into_iter()
                .filter(|b| ballot_area(b) == n * n)
                .collect();
            assert_eq!(unique.len(), 1);
            assert_eq!(unique[0].path().east_count(), 0);
        }
    }
}
