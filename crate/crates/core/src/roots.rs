//! Root data for A_{n-1} and C_n, the root poset, antichains, the
//! path/antichain bijections and the (A, w) encoding of Shi regions.
//!
//! Roots are stored structurally (kind plus indices) rather than as
//! coordinate vectors; coordinates are derived on demand. This keeps the
//! three cases of the ballot-path antichain map and the poset order exact
//! and readable.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{BallotPath, DyckPath, LatticePath, Step};
use crate::perm::SignedPermutation;

/// A positive root of A_{n-1} or C_n, written with 1-based indices.
///
/// `Diff { i, j }` is e_i - e_j, `Sum { i, j }` is e_i + e_j (i > j, type C
/// only) and `Twice { i }` is 2e_i (type C only). In type A the positive
/// difference roots have i < j, in type C they have i > j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    Diff { i: usize, j: usize },
    Sum { i: usize, j: usize },
    Twice { i: usize },
}

impl Root {
    /// Coordinate vector in the ambient n-space.
    pub fn coords(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        match *self {
            Root::Diff { i, j } => {
                v[i - 1] += 1;
                v[j - 1] -= 1;
            }
            Root::Sum { i, j } => {
                v[i - 1] += 1;
                v[j - 1] += 1;
            }
            Root::Twice { i } => v[i - 1] = 2,
        }
        v
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff { i, j } => write!(f, "e{}-e{}", i, j),
            Root::Sum { i, j } => write!(f, "e{}+e{}", i, j),
            Root::Twice { i } => write!(f, "2e{}", i),
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRoot(s.to_string());
        if let Some(rest) = s.strip_prefix("2e") {
            let i = rest.parse().map_err(|_| bad())?;
            return Ok(Root::Twice { i });
        }
        let rest = s.strip_prefix('e').ok_or_else(bad)?;
        for (sep, sum) in [('-', false), ('+', true)] {
            if let Some((a, b)) = rest.split_once(sep) {
                let i = a.parse().map_err(|_| bad())?;
                let j = b.strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                return Ok(if sum { Root::Sum { i, j } } else { Root::Diff { i, j } });
            }
        }
        Err(bad())
    }
}

/// A root with a sign, as produced by the Weyl group action on a positive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedRoot {
    pub root: Root,
    pub positive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum RootSystemKind {
    A,
    C,
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemKind::A => write!(f, "A"),
            RootSystemKind::C => write!(f, "C"),
        }
    }
}

/// Root data for A_{n-1} (ambient n-space, sum-zero slice) or C_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootSystemKind,
    n: usize,
}

impl RootSystem {
    pub fn new(kind: RootSystemKind, n: usize) -> Self {
        assert!(n >= 1);
        RootSystem { kind, n }
    }

    pub fn type_a(n: usize) -> Self {
        RootSystem::new(RootSystemKind::A, n)
    }

    pub fn type_c(n: usize) -> Self {
        RootSystem::new(RootSystemKind::C, n)
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    /// The ambient dimension n (the system is A_{n-1} or C_n).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.n;
        match self.kind {
            RootSystemKind::A => {
                let mut out = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        out.push(Root::Diff { i, j });
                    }
                }
                out
            }
            RootSystemKind::C => {
                let mut out = Vec::new();
                for i in 2..=n {
                    for j in 1..i {
                        out.push(Root::Diff { i, j });
                    }
                }
                for i in 2..=n {
                    for j in 1..i {
                        out.push(Root::Sum { i, j });
                    }
                }
                for i in 1..=n {
                    out.push(Root::Twice { i });
                }
                out
            }
        }
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        let n = self.n;
        match self.kind {
            RootSystemKind::A => (1..n).map(|i| Root::Diff { i, j: i + 1 }).collect(),
            RootSystemKind::C => {
                let mut out = vec![Root::Twice { i: 1 }];
                out.extend((1..n).map(|i| Root::Diff { i: i + 1, j: i }));
                out
            }
        }
    }

    pub fn highest_root(&self) -> Root {
        match self.kind {
            RootSystemKind::A => Root::Diff { i: 1, j: self.n },
            RootSystemKind::C => Root::Twice { i: self.n },
        }
    }

    pub fn is_positive_root(&self, root: &Root) -> bool {
        let n = self.n;
        match (self.kind, *root) {
            (RootSystemKind::A, Root::Diff { i, j }) => i < j && j <= n && i >= 1,
            (RootSystemKind::C, Root::Diff { i, j }) | (RootSystemKind::C, Root::Sum { i, j }) => {
                i > j && i <= n && j >= 1
            }
            (RootSystemKind::C, Root::Twice { i }) => (1..=n).contains(&i),
            _ => false,
        }
    }

    /// Recognises a coordinate vector as plus or minus a positive root.
    pub fn root_from_coords(&self, v: &[i64]) -> Option<SignedRoot> {
        let nz: Vec<(usize, i64)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(k, x)| (k + 1, *x))
            .collect();
        let signed = |root: Root, positive: bool| {
            self.is_positive_root(&root).then_some(SignedRoot { root, positive })
        };
        match (self.kind, nz.as_slice()) {
            (RootSystemKind::C, &[(i, 2)]) => signed(Root::Twice { i }, true),
            (RootSystemKind::C, &[(i, -2)]) => signed(Root::Twice { i }, false),
            (RootSystemKind::A, &[(p, 1), (q, -1)]) => signed(Root::Diff { i: p, j: q }, true),
            (RootSystemKind::A, &[(p, -1), (q, 1)]) => signed(Root::Diff { i: p, j: q }, false),
            (RootSystemKind::C, &[(p, a), (q, b)]) if a.abs() == 1 && b.abs() == 1 => {
                match (a, b) {
                    (1, 1) => signed(Root::Sum { i: q, j: p }, true),
                    (-1, -1) => signed(Root::Sum { i: q, j: p }, false),
                    (-1, 1) => signed(Root::Diff { i: q, j: p }, true),
                    (1, -1) => signed(Root::Diff { i: q, j: p }, false),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Expands `v` in the simple-root basis, returning the coefficients if
    /// they are all nonnegative integers. The basis is triangular in both
    /// types, so the solution is unique.
    fn nonneg_simple_expansion(&self, v: &[i64]) -> Option<Vec<i64>> {
        let n = self.n;
        match self.kind {
            RootSystemKind::A => {
                // alpha_k = e_k - e_{k+1}; coefficient c_k is the k-th partial sum.
                if v.iter().sum::<i64>() != 0 {
                    return None;
                }
                let mut coeffs = Vec::with_capacity(n - 1);
                let mut acc = 0i64;
                for &x in &v[..n - 1] {
                    acc += x;
                    if acc < 0 {
                        return None;
                    }
                    coeffs.push(acc);
                }
                Some(coeffs)
            }
            RootSystemKind::C => {
                // alpha_0 = 2e_1, alpha_k = e_{k+1} - e_k; c_k (k >= 1) is the
                // suffix sum v_{k+1} + .. + v_n and 2 c_0 = v_1 + c_1.
                let mut coeffs = vec![0i64; n];
                let mut acc = 0i64;
                for k in (1..n).rev() {
                    acc += v[k];
                    if acc < 0 {
                        return None;
                    }
                    coeffs[k] = acc;
                }
                let twice_c0 = v[0] + acc;
                if twice_c0 < 0 || twice_c0 % 2 != 0 {
                    return None;
                }
                coeffs[0] = twice_c0 / 2;
                Some(coeffs)
            }
        }
    }

    /// Root poset order: alpha <= beta iff beta - alpha is a nonnegative
    /// integer combination of simple roots.
    pub fn leq_root_poset(&self, alpha: &Root, beta: &Root) -> bool {
        let a = alpha.coords(self.n);
        let b = beta.coords(self.n);
        let diff: Vec<i64> = b.iter().zip(&a).map(|(x, y)| x - y).collect();
        self.nonneg_simple_expansion(&diff).is_some()
    }

    pub fn is_antichain(&self, roots: &BTreeSet<Root>) -> bool {
        for a in roots {
            for b in roots {
                if a != b && self.leq_root_poset(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Weyl group action on roots: w(e_i) = sgn(sigma_i) e_{|sigma_i|}.
    pub fn act(&self, w: &SignedPermutation, root: &Root) -> SignedRoot {
        debug_assert_eq!(w.n(), self.n);
        let v = root.coords(self.n);
        let mut out = vec![0i64; self.n];
        for (k, &x) in v.iter().enumerate() {
            if x != 0 {
                let s = w.window()[k];
                out[s.unsigned_abs() as usize - 1] += x * s.signum() as i64;
            }
        }
        self.root_from_coords(&out)
            .expect("the Weyl group permutes the root set")
    }

    /// All antichains in the root poset, by subset enumeration.
    pub fn antichains(&self) -> Vec<BTreeSet<Root>> {
        let pos = self.positive_roots();
        let m = pos.len();
        assert!(m <= 20, "antichain enumeration is a desk-scale operation");
        let mut out = Vec::new();
        for mask in 0u64..(1 << m) {
            let set: BTreeSet<Root> = pos
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << *k) != 0)
                .map(|(_, r)| *r)
                .collect();
            if self.is_antichain(&set) {
                out.push(set);
            }
        }
        out
    }
}

/// A set of pairwise incomparable positive roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Antichain {
    roots: BTreeSet<Root>,
}

impl Antichain {
    pub fn new(system: &RootSystem, roots: BTreeSet<Root>) -> Result<Self> {
        for r in &roots {
            if !system.is_positive_root(r) {
                return Err(Error::InvalidRoot(r.to_string()));
            }
        }
        if !system.is_antichain(&roots) {
            return Err(Error::NotAntichain);
        }
        Ok(Antichain { roots })
    }

    pub fn roots(&self) -> &BTreeSet<Root> {
        &self.roots
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r)?;
        }
        write!(f, "]")
    }
}

/// An antichain together with a group element w such that w(A) is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShiPair {
    pub antichain: Antichain,
    pub w: SignedPermutation,
}

impl ShiPair {
    pub fn new(system: &RootSystem, antichain: Antichain, w: SignedPermutation) -> Result<Self> {
        if !is_shi_pair(system, antichain.roots(), &w) {
            return Err(Error::InvalidShiPair(format!(
                "w = {} does not map {} into the positive system",
                w, antichain
            )));
        }
        Ok(ShiPair { antichain, w })
    }
}

/// True iff `roots` is an antichain and w maps every element to a positive root.
pub fn is_shi_pair(system: &RootSystem, roots: &BTreeSet<Root>, w: &SignedPermutation) -> bool {
    system.is_antichain(roots) && roots.iter().all(|r| system.act(w, r).positive)
}

/// Valleys (i, j) become the roots e_i - e_j of A_{n-1}.
pub fn antichain_of_dyck(path: &DyckPath) -> Antichain {
    let roots: BTreeSet<Root> = path
        .path()
        .valleys()
        .into_iter()
        .map(|(i, j)| Root::Diff { i, j })
        .collect();
    Antichain { roots }
}

/// The three-case antichain of a ballot path in the C_n root poset.
pub fn antichain_of_ballot(beta: &BallotPath) -> Antichain {
    let n = beta.n();
    let mut roots = BTreeSet::new();
    for (a, b) in beta.path().valleys() {
        if b <= n {
            roots.insert(Root::Diff { i: n + 1 - a, j: n + 1 - b });
        } else {
            roots.insert(Root::Sum { i: n + 1 - a, j: b - n });
        }
    }
    if beta.path().steps().last() == Some(&Step::E) {
        let m = beta.path().east_count();
        roots.insert(Root::Twice { i: n + 1 - m });
    }
    Antichain { roots }
}

/// Builds the path with the given valley set (sorted by East index), total
/// numbers of North and East steps, in valley-block form.
fn path_from_valleys(valleys: &[(usize, usize)], norths: usize, easts: usize) -> Option<LatticePath> {
    let mut steps = Vec::with_capacity(norths + easts);
    let mut prev_e = 0usize;
    let mut prev_n = 0usize;
    for &(i, j) in valleys {
        if i <= prev_e || j <= prev_n || j > norths || i > easts {
            return None;
        }
        // norths up to j-1, then easts up to i; the j-th North follows.
        steps.extend(std::iter::repeat(Step::N).take(j - 1 - prev_n));
        steps.extend(std::iter::repeat(Step::E).take(i - prev_e));
        prev_n = j - 1;
        prev_e = i;
    }
    steps.extend(std::iter::repeat(Step::N).take(norths - prev_n));
    steps.extend(std::iter::repeat(Step::E).take(easts - prev_e));
    LatticePath::new(steps).ok()
}

/// Inverse of `antichain_of_dyck`: rejects non-antichains.
pub fn dyck_of_antichain(n: usize, antichain: &Antichain) -> Result<DyckPath> {
    let system = RootSystem::type_a(n);
    let antichain = Antichain::new(&system, antichain.roots().clone())?;
    let mut valleys: Vec<(usize, usize)> = antichain
        .roots()
        .iter()
        .map(|r| match *r {
            Root::Diff { i, j } => (i, j),
            _ => unreachable!("validated as type A roots"),
        })
        .collect();
    valleys.sort();
    let path = path_from_valleys(&valleys, n, n)
        .and_then(|p| DyckPath::new(p).ok())
        .ok_or(Error::NotAntichain)?;
    if antichain_of_dyck(&path).roots() != antichain.roots() {
        return Err(Error::NotAntichain);
    }
    Ok(path)
}

/// Inverse of `antichain_of_ballot`: rejects non-antichains.
pub fn ballot_of_antichain(n: usize, antichain: &Antichain) -> Result<BallotPath> {
    let system = RootSystem::type_c(n);
    let antichain = Antichain::new(&system, antichain.roots().clone())?;
    let mut valleys = Vec::new();
    let mut last_east = None;
    for r in antichain.roots() {
        match *r {
            Root::Diff { i, j } => valleys.push((n + 1 - i, n + 1 - j)),
            Root::Sum { i, j } => valleys.push((n + 1 - i, j + n)),
            Root::Twice { i } => last_east = Some(n + 1 - i),
        }
    }
    valleys.sort();
    let easts = match last_east {
        Some(m) => m,
        None => valleys.last().map(|&(i, _)| i).unwrap_or(0),
    };
    if easts > 2 * n {
        return Err(Error::NotAntichain);
    }
    let path = path_from_valleys(&valleys, 2 * n - easts, easts)
        .and_then(|p| BallotPath::new(p).ok())
        .ok_or(Error::NotAntichain)?;
    if antichain_of_ballot(&path).roots() != antichain.roots() {
        return Err(Error::NotAntichain);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_b, enumerate_d};
    use crate::perm::enumerate_signed_permutations;

    fn root(s: &str) -> Root {
        s.parse().unwrap()
    }

    fn set(roots: &[&str]) -> BTreeSet<Root> {
        roots.iter().map(|s| root(s)).collect()
    }

    #[test]
    fn positive_roots_examples() {
        let c2 = RootSystem::type_c(2);
        assert_eq!(
            c2.positive_roots(),
            vec![root("e2-e1"), root("e2+e1"), root("2e1"), root("2e2")]
        );
        let a3 = RootSystem::type_a(3);
        assert_eq!(
            a3.positive_roots(),
            vec![root("e1-e2"), root("e1-e3"), root("e2-e3")]
        );
        assert_eq!(RootSystem::type_c(3).positive_roots().len(), 9);
        assert_eq!(RootSystem::type_a(4).positive_roots().len(), 6);
    }

    #[test]
    fn root_text_roundtrip() {
        for s in ["e3-e2", "e2+e1", "2e2"] {
            assert_eq!(root(s).to_string(), s);
        }
        assert!("x2".parse::<Root>().is_err());
    }

    #[test]
    fn poset_order_examples() {
        let c2 = RootSystem::type_c(2);
        assert!(c2.leq_root_poset(&root("2e1"), &root("e2+e1")));
        for r in c2.positive_roots() {
            assert!(c2.leq_root_poset(&r, &r));
        }
        let a3 = RootSystem::type_a(3);
        assert!(!a3.leq_root_poset(&root("e1-e2"), &root("e2-e3")));
    }

    #[test]
    fn poset_is_partial_order() {
        for system in [
            RootSystem::type_a(2),
            RootSystem::type_a(3),
            RootSystem::type_a(4),
            RootSystem::type_c(2),
            RootSystem::type_c(3),
            RootSystem::type_c(4),
        ] {
            let pos = system.positive_roots();
            for a in &pos {
                for b in &pos {
                    if system.leq_root_poset(a, b) && system.leq_root_poset(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &pos {
                        if system.leq_root_poset(a, b) && system.leq_root_poset(b, c) {
                            assert!(system.leq_root_poset(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn antichain_examples() {
        let c3 = RootSystem::type_c(3);
        assert!(c3.is_antichain(&set(&["e3-e2", "2e2"])));
        assert!(c3.is_antichain(&BTreeSet::new()));
        let c2 = RootSystem::type_c(2);
        assert!(!c2.is_antichain(&set(&["2e1", "e2+e1"])));
    }

    #[test]
    fn antichain_of_dyck_examples() {
        let p = DyckPath::parse("NNNNEENENEEE").unwrap();
        assert_eq!(antichain_of_dyck(&p).roots(), &set(&["e2-e5", "e3-e6"]));
        let zig = DyckPath::parse("NENENE").unwrap();
        assert_eq!(antichain_of_dyck(&zig).roots(), &set(&["e1-e2", "e2-e3"]));
        let full = DyckPath::parse("NNNEEE").unwrap();
        assert!(antichain_of_dyck(&full).roots().is_empty());
    }

    #[test]
    fn antichain_of_ballot_examples() {
        let p = BallotPath::parse("NENNNE").unwrap();
        assert_eq!(antichain_of_ballot(&p).roots(), &set(&["e3-e2", "2e2"]));
        let all_north = BallotPath::parse("NNNNNN").unwrap();
        assert!(antichain_of_ballot(&all_north).roots().is_empty());
        let b = BallotPath::parse("NNENNE").unwrap();
        assert_eq!(antichain_of_ballot(&b).roots(), &set(&["e3-e1", "2e2"]));
    }

    #[test]
    fn antichain_inverses() {
        let c3 = RootSystem::type_c(3);
        let a = Antichain::new(&c3, set(&["e3-e2", "2e2"])).unwrap();
        assert_eq!(ballot_of_antichain(3, &a).unwrap().to_string(), "NENNNE");
        let empty = Antichain::new(&RootSystem::type_c(2), BTreeSet::new()).unwrap();
        assert_eq!(ballot_of_antichain(2, &empty).unwrap().to_string(), "NNNN");
        let a3 = RootSystem::type_a(3);
        assert!(Antichain::new(&a3, set(&["e1-e2", "e1-e3"])).is_err());
    }

    #[test]
    fn dyck_antichain_bijection() {
        // Catalan counts 1, 2, 5, 14, 42 and exact image match.
        for n in 1..=5 {
            let system = RootSystem::type_a(n);
            let mut images = BTreeSet::new();
            for d in enumerate_d(n) {
                let a = antichain_of_dyck(&d);
                assert!(system.is_antichain(a.roots()));
                assert_eq!(dyck_of_antichain(n, &a).unwrap(), d);
                assert!(images.insert(a.roots().clone()));
            }
            let all: BTreeSet<_> = system.antichains().into_iter().collect();
            assert_eq!(images, all);
        }
    }

    #[test]
    fn ballot_antichain_bijection() {
        // Central binomial counts 2, 6, 20, 70 and exact image match.
        for n in 1..=4 {
            let system = RootSystem::type_c(n);
            let mut images = BTreeSet::new();
            for b in enumerate_b(n) {
                let a = antichain_of_ballot(&b);
                assert!(system.is_antichain(a.roots()));
                assert_eq!(ballot_of_antichain(n, &a).unwrap(), b);
                assert!(images.insert(a.roots().clone()));
            }
            let all: BTreeSet<_> = system.antichains().into_iter().collect();
            assert_eq!(images, all);
        }
    }

    #[test]
    fn act_examples() {
        let a3 = RootSystem::type_a(3);
        let w = SignedPermutation::new(vec![2, 1, 3]).unwrap();
        let r = a3.act(&w, &root("e1-e2"));
        assert_eq!(r.root, root("e1-e2"));
        assert!(!r.positive);

        let c3 = RootSystem::type_c(3);
        let w = SignedPermutation::new(vec![-3, 2, -1]).unwrap();
        let r = c3.act(&w, &root("2e2"));
        assert_eq!(r.root, root("2e2"));
        assert!(r.positive);
        let r = c3.act(&w, &root("e3-e2"));
        assert_eq!(r.root, root("e2+e1"));
        assert!(!r.positive);
    }

    #[test]
    fn act_is_group_action() {
        let c3 = RootSystem::type_c(3);
        let pos = c3.positive_roots();
        let elems = enumerate_signed_permutations(3);
        for u in elems.iter().step_by(7) {
            for v in elems.iter().step_by(5) {
                let uv = u.compose(v);
                for r in &pos {
                    let inner = c3.act(v, r);
                    let mut outer = c3.act(u, &inner.root);
                    if !inner.positive {
                        outer.positive = !outer.positive;
                    }
                    assert_eq!(c3.act(&uv, r), outer);
                }
            }
        }
    }

    #[test]
    fn shi_pair_examples() {
        let c3 = RootSystem::type_c(3);
        assert!(is_shi_pair(&c3, &set(&["e3-e2", "2e2"]), &SignedPermutation::identity(3)));
        let w = SignedPermutation::new(vec![-3, 2, -1]).unwrap();
        assert!(is_shi_pair(&c3, &set(&["2e2"]), &w));
        let c2 = RootSystem::type_c(2);
        let w = SignedPermutation::new(vec![2, 1]).unwrap();
        assert!(!is_shi_pair(&c2, &set(&["e2-e1"]), &w));
    }

    #[test]
    fn shi_pair_counts() {
        // (2n+1)^n in type C_n, (n+1)^{n-1} in type A_{n-1}.
        for (system, elems, expected) in [
            (RootSystem::type_c(2), enumerate_signed_permutations(2), 25usize),
            (RootSystem::type_c(3), enumerate_signed_permutations(3), 343),
            (RootSystem::type_a(3), crate::perm::enumerate_permutations(3), 16),
            (RootSystem::type_a(4), crate::perm::enumerate_permutations(4), 125),
        ] {
            let antichains = system.antichains();
            let count: usize = antichains
                .iter()
                .map(|a| elems.iter().filter(|w| is_shi_pair(&system, a, w)).count())
                .sum();
            assert_eq!(count, expected);
        }
    }
}
