//! The zeta maps in types A and C, their labelled refinements, table-based
//! inverses, the sweep map, and the valley-label characterization.
//!
//! Stage structure of the type C map: for each stage i = n down to 0, a
//! left-to-right pass emits E per area-vector entry -i-1 and N per entry -i,
//! matched in encounter order, then a right-to-left pass emits E per entry
//! i+1 and N per entry i. Every entry v emits exactly two steps over all
//! stages (at stages |v| and |v|-1, or twice at stage 0 when v = 0), so the
//! output always has 2n steps.
//!
//! No closed-form inverse is implemented; inversion goes through an
//! exhaustive forward table per n, which can be cached on disk.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::labelled::{DiagonallyLabelledPathA, DiagonallyLabelledPathC, DiagonalWord, VerticallyLabelledPathA, VerticallyLabelledPathC};
use crate::paths::{area_vector_a, area_vector_c, enumerate_l, BallotPath, DyckPath, LatticePath, Step};
use crate::perm::SignedPermutation;

/// Largest n for which an unlabelled inverse table is built by default.
pub const MAX_TABLE_N: usize = 8;
/// Largest n for which labelled inversion is offered.
pub const MAX_LABELLED_TABLE_N: usize = 5;

/// Classical zeta: stages i = 0..n, one left-to-right pass each, emitting E
/// per entry i-1 and N per entry i.
pub fn zeta_a(path: &DyckPath) -> DyckPath {
    let a = area_vector_a(path);
    let a = a.entries();
    let n = a.len();
    let mut steps = Vec::with_capacity(2 * n);
    for i in 0..=n as i64 {
        for &v in a {
            if v == i - 1 {
                steps.push(Step::E);
            }
            if v == i {
                steps.push(Step::N);
            }
        }
    }
    DyckPath::new(LatticePath::new(steps).expect("n >= 1")).expect("the image is a Dyck path")
}

/// Type C zeta, in the two-pass staged form described above.
pub fn zeta_c(path: &LatticePath) -> Result<BallotPath> {
    let a = area_vector_c(path)?;
    let a = a.entries();
    let n = a.len();
    let mut steps = Vec::with_capacity(2 * n);
    for i in (0..=n as i64).rev() {
        for &v in a {
            if v == -i - 1 {
                steps.push(Step::E);
            }
            if v == -i {
                steps.push(Step::N);
            }
        }
        for &v in a.iter().rev() {
            if v == i + 1 {
                steps.push(Step::E);
            }
            if v == i {
                steps.push(Step::N);
            }
        }
    }
    debug_assert_eq!(steps.len(), 2 * n);
    Ok(BallotPath::new(LatticePath::new(steps)?).expect("the image is a ballot path"))
}

/// The diagonal read order of the labelled type C map: for i = n down to 1,
/// rows with area i from top to bottom carrying sign +, then rows with area
/// -i+1 from bottom to top carrying sign -. Depends only on the path.
fn diagonal_positions_c(path: &LatticePath) -> Result<Vec<(usize, i32)>> {
    let a = area_vector_c(path)?;
    let a = a.entries();
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    for i in (1..=n as i64).rev() {
        for j in (1..=n).rev() {
            if a[j - 1] == i {
                out.push((j, 1));
            }
        }
        for j in 1..=n {
            if a[j - 1] == -i + 1 {
                out.push((j, -1));
            }
        }
    }
    debug_assert_eq!(out.len(), n);
    Ok(out)
}

/// Labelled type C zeta: the diagonal word reads the path labels in the
/// order of `diagonal_positions_c`, completed by negatives in reverse.
pub fn zeta_labelled_c(v: &VerticallyLabelledPathC) -> DiagonallyLabelledPathC {
    let n = v.n();
    let positions = diagonal_positions_c(v.path()).expect("labelled paths are square");
    let mut entries = Vec::with_capacity(2 * n);
    for &(j, s) in &positions {
        entries.push(s * v.labels().value(j as i32));
    }
    for k in (0..n).rev() {
        let e = entries[k];
        entries.push(-e);
    }
    let beta = zeta_c(v.path()).expect("labelled paths are square");
    let word = DiagonalWord::new(entries).expect("antisymmetric by construction");
    DiagonallyLabelledPathC::new(beta, word).expect("the image is a valid labelled ballot path")
}

/// Labelled classical zeta: for i = 0..n read labels of area-i rows bottom
/// to top onto the diagonal.
pub fn zeta_labelled_a(v: &VerticallyLabelledPathA) -> DiagonallyLabelledPathA {
    let a = area_vector_a(v.path());
    let a = a.entries();
    let n = a.len();
    let mut window = Vec::with_capacity(n);
    for i in 0..=n as i64 {
        for j in 1..=n {
            if a[j - 1] == i {
                window.push(v.labels().value(j as i32));
            }
        }
    }
    let labels = SignedPermutation::new(window).expect("a permutation of the input labels");
    DiagonallyLabelledPathA::new(zeta_a(v.path()), labels)
        .expect("the image is a valid labelled Dyck path")
}

const TABLE_MAGIC: &[u8; 4] = b"SZIT";
const TABLE_VERSION: u32 = 1;

/// Exhaustive forward table inverting `zeta_c` at one rank.
pub struct InverseTable {
    n: usize,
    map: HashMap<LatticePath, LatticePath>,
}

impl InverseTable {
    /// Builds the table by applying the forward map to all of L(n,n).
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_N {
            return Err(Error::RankTooLarge { n, max: MAX_TABLE_N });
        }
        let mut map = HashMap::new();
        for p in enumerate_l(n) {
            let image = zeta_c(&p)?.path().clone();
            let prior = map.insert(image, p);
            debug_assert!(prior.is_none(), "forward map must be injective");
        }
        Ok(InverseTable { n, map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn invert(&self, beta: &BallotPath) -> Result<LatticePath> {
        self.map
            .get(beta.path())
            .cloned()
            .ok_or_else(|| Error::MissingPreimage(beta.to_string()))
    }

    /// Versioned binary layout: magic, version, n, entry count, then
    /// length-prefixed (image, preimage) step words.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(TABLE_MAGIC)?;
        w.write_all(&TABLE_VERSION.to_le_bytes())?;
        w.write_all(&(self.n as u32).to_le_bytes())?;
        w.write_all(&(self.map.len() as u64).to_le_bytes())?;
        let mut entries: Vec<_> = self.map.iter().collect();
        entries.sort();
        for (image, preimage) in entries {
            for word in [image, preimage] {
                let text = word.to_string();
                w.write_all(&(text.len() as u32).to_le_bytes())?;
                w.write_all(text.as_bytes())?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut r = BufReader::new(File::open(path)?);
        let corrupt = |msg: &str| Error::CorruptTable(msg.to_string());
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != TABLE_MAGIC {
            return Err(corrupt("bad magic"));
        }
        let mut buf4 = [0u8; 4];
        r.read_exact(&mut buf4)?;
        if u32::from_le_bytes(buf4) != TABLE_VERSION {
            return Err(corrupt("unsupported version"));
        }
        r.read_exact(&mut buf4)?;
        let n = u32::from_le_bytes(buf4) as usize;
        let mut buf8 = [0u8; 8];
        r.read_exact(&mut buf8)?;
        let count = u64::from_le_bytes(buf8) as usize;
        let mut map = HashMap::with_capacity(count);
        let read_word = |r: &mut BufReader<File>| -> Result<LatticePath> {
            let mut buf4 = [0u8; 4];
            r.read_exact(&mut buf4)?;
            let len = u32::from_le_bytes(buf4) as usize;
            if len > 2 * MAX_TABLE_N {
                return Err(Error::CorruptTable("oversized word".to_string()));
            }
            let mut bytes = vec![0u8; len];
            r.read_exact(&mut bytes)?;
            let text = std::str::from_utf8(&bytes)
                .map_err(|_| Error::CorruptTable("non-ascii word".to_string()))?;
            LatticePath::parse(text)
        };
        for _ in 0..count {
            let image = read_word(&mut r)?;
            let preimage = read_word(&mut r)?;
            if preimage.square_size() != Some(n) || !image.is_ballot() {
                return Err(corrupt("entry shape mismatch"));
            }
            map.insert(image, preimage);
        }
        if map.len() != count {
            return Err(corrupt("duplicate entries"));
        }
        Ok(InverseTable { n, map })
    }

    /// Loads `zeta-c-inverse-{n}.tbl` from `dir` if present, else builds the
    /// table and caches it there (best effort).
    pub fn load_or_build(n: usize, dir: Option<&Path>) -> Result<Self> {
        if let Some(dir) = dir {
            let file = dir.join(format!("zeta-c-inverse-{}.tbl", n));
            if file.is_file() {
                if let Ok(table) = InverseTable::load(&file) {
                    if table.n == n {
                        return Ok(table);
                    }
                }
            }
            let table = InverseTable::build(n)?;
            let _ = std::fs::create_dir_all(dir);
            let _ = table.save(&file);
            return Ok(table);
        }
        InverseTable::build(n)
    }
}

/// One-shot inverse of `zeta_c`; builds the rank-n table internally.
pub fn zeta_c_inverse(beta: &BallotPath) -> Result<LatticePath> {
    InverseTable::build(beta.n())?.invert(beta)
}

/// Labelled inverse against a prebuilt table: the path comes from the table,
/// the labels unscramble directly since the diagonal read order is
/// determined by the preimage path alone.
pub fn zeta_labelled_c_invert_with(table: &InverseTable, d: &DiagonallyLabelledPathC) -> Result<VerticallyLabelledPathC> {
    let n = d.n();
    if n > MAX_LABELLED_TABLE_N {
        return Err(Error::RankTooLarge { n, max: MAX_LABELLED_TABLE_N });
    }
    let pi = table.invert(d.path())?;
    let positions = diagonal_positions_c(&pi)?;
    let mut window = vec![0i32; n];
    for (p, &(j, s)) in positions.iter().enumerate() {
        window[j - 1] = s * d.word().entry(p + 1);
    }
    let labels = SignedPermutation::new(window)?;
    VerticallyLabelledPathC::new(pi, labels)
}

/// One-shot labelled inverse; builds the rank-n table internally.
pub fn zeta_labelled_c_inverse(d: &DiagonallyLabelledPathC) -> Result<VerticallyLabelledPathC> {
    let n = d.n();
    if n > MAX_LABELLED_TABLE_N {
        return Err(Error::RankTooLarge { n, max: MAX_LABELLED_TABLE_N });
    }
    zeta_labelled_c_invert_with(&InverseTable::build(n)?, d)
}

/// Step labels and the sorted-step collection of the sweep map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepLabelling {
    labels: Vec<i64>,
    x: Vec<(Step, i64)>,
}

impl SweepLabelling {
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// The (step, sort-key) pairs, in construction order.
    pub fn x(&self) -> &[(Step, i64)] {
        &self.x
    }
}

/// l(s_1) = 0, then +(2n+1) after a North step and -2n after an East step;
/// X collects (s_i, l(s_i)) when l < 0, (s_{i-1}, -l(s_i)) when l > 0, and
/// (s_{2n}, -n) for the start.
pub fn sweep_labels(path: &LatticePath) -> Result<SweepLabelling> {
    let n = path
        .square_size()
        .ok_or_else(|| Error::NotSquare(path.to_string()))? as i64;
    let steps = path.steps();
    let mut labels = Vec::with_capacity(steps.len());
    let mut l = 0i64;
    for &s in steps {
        labels.push(l);
        l += match s {
            Step::N => 2 * n + 1,
            Step::E => -2 * n,
        };
    }
    let mut x = Vec::with_capacity(steps.len());
    for (k, &l) in labels.iter().enumerate() {
        if k == 0 {
            x.push((steps[steps.len() - 1], -n));
        } else if l < 0 {
            x.push((steps[k], l));
        } else {
            x.push((steps[k - 1], -l));
        }
    }
    let mut keys: Vec<i64> = x.iter().map(|&(_, k)| k).collect();
    keys.sort_unstable();
    keys.dedup();
    assert_eq!(keys.len(), x.len(), "sweep keys must be distinct");
    Ok(SweepLabelling { labels, x })
}

/// The steps of X in increasing key order.
pub fn sweep(path: &LatticePath) -> Result<BallotPath> {
    let labelling = sweep_labels(path)?;
    let mut x = labelling.x;
    x.sort_by_key(|&(_, k)| k);
    let steps = x.into_iter().map(|(s, _)| s).collect();
    BallotPath::new(LatticePath::new(steps)?)
}

/// Label pairs (sigma_i, sigma_{i+1}) at the rises of a vertically labelled
/// path, plus the label of a starting North step if there is one.
pub fn rise_labels(v: &VerticallyLabelledPathC) -> (Vec<(i32, i32)>, Option<i32>) {
    let pairs = v
        .path()
        .rises()
        .iter()
        .map(|&i| (v.labels().value(i as i32), v.labels().value(i as i32 + 1)))
        .collect();
    let start = (v.path().steps().first() == Some(&Step::N)).then(|| v.labels().value(1));
    (pairs, start)
}

/// Label pairs (w_i, w_j) at the valleys of a diagonally labelled ballot
/// path, plus the label w_m of a final East step if there is one.
pub fn valley_labels(d: &DiagonallyLabelledPathC) -> (Vec<(i32, i32)>, Option<i32>) {
    let pairs = d
        .path()
        .path()
        .valleys()
        .iter()
        .map(|&(i, j)| (d.word().entry(i), d.word().entry(j)))
        .collect();
    let last = (d.path().path().steps().last() == Some(&Step::E))
        .then(|| d.word().entry(d.path().path().east_count()));
    (pairs, last)
}

/// Canonical representative of a pair under the involution (x,y) -> (-y,-x).
fn canon(p: (i32, i32)) -> (i32, i32) {
    p.min((-p.1, -p.0))
}

/// A valley labelled (a, b) must correspond to a rise labelled (b, a) or
/// (-a, -b), as multisets; a final East label must equal the starting North
/// label. True iff the correspondence is exact.
pub fn check_valley_characterization(v: &VerticallyLabelledPathC, d: &DiagonallyLabelledPathC) -> bool {
    let (rises, start) = rise_labels(v);
    let (valleys, last) = valley_labels(d);
    if start != last {
        return false;
    }
    let mut lhs: Vec<(i32, i32)> = rises.into_iter().map(canon).collect();
    let mut rhs: Vec<(i32, i32)> = valleys.into_iter().map(|(a, b)| canon((b, a))).collect();
    lhs.sort_unstable();
    rhs.sort_unstable();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelled::enumerate_vertical_c;
    use crate::paths::{enumerate_b, path_from_area_vector_c};

    fn lp(s: &str) -> LatticePath {
        LatticePath::parse(s).unwrap()
    }

    #[test]
    fn zeta_a_examples() {
        let from_vec = |a: &[i64]| {
            // area vector to Dyck path: a_i = (i-1) - b_i
            let cols: Vec<i64> = a.iter().enumerate().map(|(k, &v)| k as i64 - v).collect();
            let c: Vec<i64> = cols
                .iter()
                .enumerate()
                .map(|(k, &b)| (k as i64 + 1) - b)
                .collect();
            DyckPath::new(path_from_area_vector_c(&c).unwrap()).unwrap()
        };
        assert_eq!(zeta_a(&from_vec(&[0, 1, 2, 1, 1])).to_string(), "NENNNENEEE");
        assert_eq!(zeta_a(&DyckPath::parse("NENENE").unwrap()).to_string(), "NNNEEE");
        assert_eq!(zeta_a(&DyckPath::parse("NE").unwrap()).to_string(), "NE");
    }

    #[test]
    fn zeta_c_examples() {
        assert_eq!(zeta_c(&lp("NEEEENNNNNEE")).unwrap().to_string(), "NNENENNENENE");
        assert_eq!(zeta_c(&lp("EN")).unwrap().to_string(), "NN");
        assert_eq!(zeta_c(&lp("NE")).unwrap().to_string(), "NE");
        assert_eq!(
            zeta_c(&path_from_area_vector_c(&[1, 0, 1]).unwrap()).unwrap().to_string(),
            "NNNENE"
        );
        assert_eq!(zeta_c(&lp("NEEENN")).unwrap().to_string(), "NNENNE");
        assert!(zeta_c(&lp("NEN")).is_err());
    }

    #[test]
    fn zeta_c_bijective_with_area_transport() {
        use crate::stats::dinv_c;
        for n in 1..=6 {
            let mut images = std::collections::BTreeSet::new();
            for p in enumerate_l(n) {
                let b = zeta_c(&p).unwrap();
                assert_eq!(crate::paths::ballot_area(&b), dinv_c(&p).unwrap());
                assert!(images.insert(b.path().clone()));
            }
            assert_eq!(images.len(), enumerate_b(n).len());
        }
    }

    #[test]
    fn zeta_labelled_c_examples() {
        let v = |path: &str, labels: &str| {
            VerticallyLabelledPathC::new(lp(path), SignedPermutation::parse(labels).unwrap())
                .unwrap()
        };
        let d = zeta_labelled_c(&v("NEEEENNNNNEE", "1,-5,-4,2,3,6"));
        assert_eq!(d.path().to_string(), "NNENENNENENE");
        assert_eq!(d.word().entries(), &[5, 6, 4, 3, 1, -2, 2, -1, -3, -4, -6, -5]);

        let d = zeta_labelled_c(&v("NEENNE", "2,-1,3"));
        assert_eq!(d.path().to_string(), "NNNENE");
        assert_eq!(d.word().entries(), &[3, 2, 1, -1, -2, -3]);

        let d = zeta_labelled_c(&v("NEEENN", "2,1,3"));
        assert_eq!(d.path().to_string(), "NNENNE");
        assert_eq!(d.word().entries(), &[-1, 2, -3, 3, -2, 1]);
    }

    #[test]
    fn zeta_labelled_a_examples() {
        let v = VerticallyLabelledPathA::new(
            DyckPath::parse("NNNEENENEE").unwrap(),
            SignedPermutation::parse("1,2,4,3,5").unwrap(),
        )
        .unwrap();
        let d = zeta_labelled_a(&v);
        assert_eq!(d.path().to_string(), "NENNNENEEE");
        assert_eq!(d.labels().window(), &[1, 2, 3, 5, 4]);

        let v = VerticallyLabelledPathA::new(
            DyckPath::parse("NE").unwrap(),
            SignedPermutation::identity(1),
        )
        .unwrap();
        let d = zeta_labelled_a(&v);
        assert_eq!(d.path().to_string(), "NE");
        assert_eq!(d.labels().window(), &[1]);
    }

    #[test]
    fn labelled_transport_small() {
        use crate::stats::{area_prime_c, dinv_prime_c};
        for n in 1..=3 {
            let mut images = std::collections::BTreeSet::new();
            for v in enumerate_vertical_c(n) {
                let d = zeta_labelled_c(&v);
                assert_eq!(area_prime_c(&d), dinv_prime_c(&v));
                assert!(images.insert(d));
            }
            assert_eq!(images.len(), (2 * n + 1).pow(n as u32));
        }
    }

    #[test]
    fn inverse_table_roundtrip() {
        for n in 1..=4 {
            let table = InverseTable::build(n).unwrap();
            for p in enumerate_l(n) {
                assert_eq!(table.invert(&zeta_c(&p).unwrap()).unwrap(), p);
            }
        }
        assert_eq!(
            zeta_c_inverse(&BallotPath::parse("NNENENNENENE").unwrap()).unwrap(),
            lp("NEEEENNNNNEE")
        );
        assert_eq!(zeta_c_inverse(&BallotPath::parse("NN").unwrap()).unwrap(), lp("EN"));
        assert_eq!(zeta_c_inverse(&BallotPath::parse("NE").unwrap()).unwrap(), lp("NE"));
        assert!(InverseTable::build(MAX_TABLE_N + 1).is_err());
    }

    #[test]
    fn inverse_table_disk_roundtrip() {
        let dir = std::env::temp_dir().join("shizeta-table-test");
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("zeta-c-inverse-3.tbl");
        let table = InverseTable::build(3).unwrap();
        table.save(&file).unwrap();
        let loaded = InverseTable::load(&file).unwrap();
        assert_eq!(loaded.n(), 3);
        assert_eq!(loaded.len(), table.len());
        for p in enumerate_l(3) {
            assert_eq!(loaded.invert(&zeta_c(&p).unwrap()).unwrap(), p);
        }
        let cached = InverseTable::load_or_build(3, Some(&dir)).unwrap();
        assert_eq!(cached.len(), table.len());
        std::fs::write(&file, b"garbage").unwrap();
        assert!(InverseTable::load(&file).is_err());
        // load_or_build falls back to rebuilding over a corrupt cache
        assert_eq!(InverseTable::load_or_build(3, Some(&dir)).unwrap().len(), table.len());
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn labelled_inverse_roundtrip() {
        for n in 1..=3 {
            let table = InverseTable::build(n).unwrap();
            for v in enumerate_vertical_c(n) {
                let d = zeta_labelled_c(&v);
                assert_eq!(zeta_labelled_c_invert_with(&table, &d).unwrap(), v);
            }
        }
        let d = zeta_labelled_c(
            &VerticallyLabelledPathC::new(lp("NEENNE"), SignedPermutation::parse("2,-1,3").unwrap())
                .unwrap(),
        );
        assert_eq!(zeta_labelled_c_inverse(&d).unwrap().path(), &lp("NEENNE"));
    }

    #[test]
    fn sweep_label_examples() {
        let l = sweep_labels(&lp("NEEEENNNNNEE")).unwrap();
        assert_eq!(l.labels(), &[0, 13, 1, -11, -23, -35, -22, -9, 4, 17, 30, 18]);
        assert!(l.x().contains(&(Step::E, -6)));

        let l = sweep_labels(&lp("NE")).unwrap();
        assert_eq!(l.labels(), &[0, 3]);
        let mut x = l.x().to_vec();
        x.sort_by_key(|&(_, k)| k);
        assert_eq!(x, vec![(Step::N, -3), (Step::E, -1)]);
    }

    #[test]
    fn sweep_examples() {
        assert_eq!(sweep(&lp("NEEEENNNNNEE")).unwrap().to_string(), "NNENENNENENE");
        assert_eq!(sweep(&lp("NE")).unwrap().to_string(), "NE");
        assert_eq!(sweep(&lp("EN")).unwrap().to_string(), "NN");
    }

    #[test]
    fn sweep_equals_zeta() {
        for n in 1..=6 {
            for p in enumerate_l(n) {
                assert_eq!(sweep(&p).unwrap(), zeta_c(&p).unwrap());
            }
        }
    }

    #[test]
    fn dyck_compatibility() {
        use crate::paths::enumerate_d;
        for n in 1..=6 {
            for d in enumerate_d(n) {
                let via_a = zeta_a(&d).path().reverse_swap();
                assert_eq!(zeta_c(d.path()).unwrap().path(), &via_a);
            }
        }
    }

    #[test]
    fn rise_and_valley_label_examples() {
        let v = VerticallyLabelledPathC::new(
            lp("NENEEENN"),
            SignedPermutation::parse("2,-3,-4,1").unwrap(),
        )
        .unwrap();
        let (rises, start) = rise_labels(&v);
        assert_eq!(rises, vec![(-4, 1)]);
        assert_eq!(start, Some(2));

        let d = DiagonallyLabelledPathC::new(
            BallotPath::parse("NNENNE").unwrap(),
            DiagonalWord::parse("-1,2,-3,3,-2,1").unwrap(),
        )
        .unwrap();
        let (valleys, last) = valley_labels(&d);
        assert_eq!(valleys, vec![(-1, -3)]);
        assert_eq!(last, Some(2));

        let d = DiagonallyLabelledPathC::new(
            BallotPath::parse("NNNNNN").unwrap(),
            DiagonalWord::parse("3,2,1,-1,-2,-3").unwrap(),
        )
        .unwrap();
        let (valleys, last) = valley_labels(&d);
        assert!(valleys.is_empty());
        assert_eq!(last, None);
    }

    #[test]
    fn valley_characterization_examples() {
        let v = VerticallyLabelledPathC::new(
            lp("NEEEENNNNNEE"),
            SignedPermutation::parse("1,-5,-4,2,3,6").unwrap(),
        )
        .unwrap();
        assert!(check_valley_characterization(&v, &zeta_labelled_c(&v)));

        let v = VerticallyLabelledPathC::new(lp("NEEENN"), SignedPermutation::parse("2,1,3").unwrap())
            .unwrap();
        let d = zeta_labelled_c(&v);
        assert!(check_valley_characterization(&v, &d));
        let wrong = DiagonallyLabelledPathC::new(
            d.path().clone(),
            DiagonalWord::parse("-2,1,-3,3,-1,2").unwrap(),
        )
        .unwrap();
        assert!(!check_valley_characterization(&v, &wrong));
    }

    #[test]
    fn valley_characterization_exhaustive_small() {
        for n in 1..=3 {
            for v in enumerate_vertical_c(n) {
                assert!(check_valley_characterization(&v, &zeta_labelled_c(&v)));
            }
        }
    }
}
