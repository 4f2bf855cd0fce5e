//! The verification suite: each check sweeps a whole family exhaustively and
//! reports pass/fail with counterexamples. Sweeps fan out over rayon's
//! global thread pool; results merge deterministically.

use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{default_box, enumerate_regions, verify_region_bijection};
use crate::labelled::{
    enumerate_diagonal_a, enumerate_diagonal_c, enumerate_vertical_a, enumerate_vertical_c,
    pf_to_vertical_c, vertical_c_to_pf, DiagonalWord, DiagonallyLabelledPathA,
    DiagonallyLabelledPathC, ParkingFunctionC, VerticallyLabelledPathA, VerticallyLabelledPathC,
};
use crate::paths::{ballot_area, enumerate_b, enumerate_d, enumerate_l, BallotPath, DyckPath, LatticePath};
use crate::perm::SignedPermutation;
use crate::roots::{antichain_of_ballot, antichain_of_dyck, RootSystem};
use crate::stats::{
    area_a, area_prime_a, area_prime_c, dinv_a, dinv_c, dinv_prime_a, dinv_prime_c,
    qt_distribution, typed_inversions_c,
};
use crate::zeta::{
    check_valley_characterization, sweep, sweep_labels, zeta_a, zeta_c, zeta_labelled_a,
    zeta_labelled_c,
};

/// One verification check: a name, a verdict, and failure details (empty on
/// pass, first counterexamples otherwise).
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub details: Vec<String>,
}

const MAX_DETAILS: usize = 10;

fn check(name: &'static str, mut failures: Vec<String>) -> Check {
    let pass = failures.is_empty();
    failures.truncate(MAX_DETAILS);
    Check { name, pass, details: failures }
}

fn expect<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, label: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{}: got {:?}, want {:?}", label, got, want));
    }
}

/// Criterion 1: the frozen worked examples reproduce exactly.
pub fn check_examples() -> Check {
    let mut f = Vec::new();
    let lp = |s: &str| LatticePath::parse(s).unwrap();

    let ex1_dyck = lp("NNNNEENENEEE");
    expect(&mut f, "ex1 rises", ex1_dyck.rises(), vec![1, 2, 3]);
    expect(&mut f, "ex1 valleys", ex1_dyck.valleys(), vec![(2, 5), (3, 6)]);
    expect(
        &mut f,
        "ex1 dyck antichain",
        antichain_of_dyck(&DyckPath::new(ex1_dyck).unwrap()).to_string(),
        "[e2-e5,e3-e6]".to_string(),
    );
    expect(
        &mut f,
        "ex1 ballot antichain",
        antichain_of_ballot(&BallotPath::parse("NENNNE").unwrap()).to_string(),
        "[e3-e2,2e2]".to_string(),
    );

    let ex2 = DyckPath::parse("NENNNENEEE").unwrap();
    expect(&mut f, "ex2 area", area_a(&ex2), 5);
    let ex2_lab = DiagonallyLabelledPathA::new(ex2, SignedPermutation::parse("1,2,3,5,4").unwrap()).unwrap();
    expect(&mut f, "ex2 area'", area_prime_a(&ex2_lab), 4);

    let ex3 = BallotPath::parse("NNENNE").unwrap();
    expect(&mut f, "ex3 area", ballot_area(&ex3), 4);
    let ex3_lab = DiagonallyLabelledPathC::new(ex3, DiagonalWord::parse("-1,2,-3,3,-2,1").unwrap()).unwrap();
    expect(&mut f, "ex3 area'", area_prime_c(&ex3_lab), 1);

    let ex4: Vec<usize> = ["NNNN", "NNNE", "NNEN", "NNEE", "NENN", "NENE"]
        .iter()
        .map(|s| ballot_area(&BallotPath::parse(s).unwrap()))
        .collect();
    expect(&mut f, "ex4 areas", ex4, vec![4, 3, 2, 1, 1, 0]);

    let ex6 = pf_to_vertical_c(&ParkingFunctionC::new(vec![4, 0, -1, -4]).unwrap());
    expect(&mut f, "ex6 path", ex6.path().to_string(), "NENEEENN".to_string());
    expect(&mut f, "ex6 labels", ex6.labels().to_string(), "2,-3,-4,1".to_string());
    expect(&mut f, "ex6 inverse", vertical_c_to_pf(&ex6).values().to_vec(), vec![4, 0, -1, -4]);

    let ex7 = DyckPath::parse("NNNEENENEE").unwrap();
    expect(&mut f, "ex7 dinv", dinv_a(&ex7), 5);
    let ex7_lab = VerticallyLabelledPathA::new(ex7, SignedPermutation::parse("1,2,4,3,5").unwrap()).unwrap();
    expect(&mut f, "ex7 dinv'", dinv_prime_a(&ex7_lab), 4);

    let ex8 = lp("NEEEENNNNNEE");
    expect(&mut f, "ex8 dinv", dinv_c(&ex8).unwrap(), 9);
    let mut invs: Vec<String> = typed_inversions_c(&ex8).unwrap().iter().map(|t| t.to_string()).collect();
    invs.sort();
    let mut want = vec![
        "EQ(1,5)", "SHIFT(1,4)", "NEG(1,3)", "NEG(2,6)", "NEG(3,5)", "NEGSHIFT(1,4)",
        "NEGSHIFT(3,6)", "NEGSHIFT(4,5)", "ZERO(4)",
    ];
    want.sort();
    expect(&mut f, "ex8 typed inversions", invs, want.iter().map(|s| s.to_string()).collect());
    let ex8_lab = VerticallyLabelledPathC::new(ex8.clone(), SignedPermutation::parse("1,-5,-4,2,3,6").unwrap()).unwrap();
    expect(&mut f, "ex8 dinv'", dinv_prime_c(&ex8_lab), 6);

    let ex10 = VerticallyLabelledPathA::new(
        DyckPath::parse("NNNEENENEE").unwrap(),
        SignedPermutation::parse("1,2,4,3,5").unwrap(),
    )
    .unwrap();
    let d10 = zeta_labelled_a(&ex10);
    expect(&mut f, "ex10 image", d10.path().to_string(), "NENNNENEEE".to_string());
    expect(&mut f, "ex10 labels", d10.labels().to_string(), "1,2,3,5,4".to_string());

    let d11 = zeta_labelled_c(&ex8_lab);
    expect(&mut f, "ex11 image", d11.path().to_string(), "NNENENNENENE".to_string());
    expect(
        &mut f,
        "ex11 word",
        d11.word().entries().to_vec(),
        vec![5, 6, 4, 3, 1, -2, 2, -1, -3, -4, -6, -5],
    );

    let ex12 = VerticallyLabelledPathC::new(lp("NEENNE"), SignedPermutation::parse("2,-1,3").unwrap()).unwrap();
    let d12 = zeta_labelled_c(&ex12);
    expect(&mut f, "ex12 image", d12.path().to_string(), "NNNENE".to_string());
    expect(&mut f, "ex12 word", d12.word().entries().to_vec(), vec![3, 2, 1, -1, -2, -3]);
    expect(&mut f, "ex12 dinv'", dinv_prime_c(&ex12), 5);

    let ex13 = VerticallyLabelledPathC::new(lp("NEEENN"), SignedPermutation::parse("2,1,3").unwrap()).unwrap();
    let d13 = zeta_labelled_c(&ex13);
    expect(&mut f, "ex13 image", d13.path().to_string(), "NNENNE".to_string());
    expect(&mut f, "ex13 word", d13.word().entries().to_vec(), vec![-1, 2, -3, 3, -2, 1]);
    expect(&mut f, "ex13 dinv", dinv_c(&lp("NEEENN")).unwrap(), 4);
    expect(&mut f, "ex13 dinv'", dinv_prime_c(&ex13), 1);

    let ex14 = sweep_labels(&ex8).unwrap();
    expect(
        &mut f,
        "ex14 labels",
        ex14.labels().to_vec(),
        vec![0, 13, 1, -11, -23, -35, -22, -9, 4, 17, 30, 18],
    );
    expect(&mut f, "ex14 image", sweep(&ex8).unwrap().to_string(), "NNENENNENENE".to_string());

    check("examples", f)
}

/// Criterion 2: zeta_C is injective on L(n,n) and transports dinv to area.
pub fn check_zeta_bijection(max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        let paths = enumerate_l(n);
        let mut failures: Vec<String> = paths
            .par_iter()
            .filter_map(|p| {
                let b = zeta_c(p).ok()?;
                (ballot_area(&b) != dinv_c(p).ok()?)
                    .then(|| format!("n={}: area(zeta({})) != dinv", n, p))
            })
            .collect();
        f.append(&mut failures);
        let images: std::collections::BTreeSet<_> =
            paths.iter().map(|p| zeta_c(p).unwrap()).collect();
        expect(&mut f, &format!("n={} image count", n), images.len(), paths.len());
        expect(&mut f, &format!("n={} codomain size", n), images.len(), enumerate_b(n).len());
    }
    check("zeta-bijection", f)
}

/// Criterion 3: the labelled map is a bijection carrying dinv' to area'.
pub fn check_labelled_transport(max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        let objects = enumerate_vertical_c(n);
        expect(
            &mut f,
            &format!("n={} vertical count", n),
            objects.len(),
            (2 * n + 1).pow(n as u32),
        );
        let images: Vec<_> = objects
            .par_iter()
            .map(|v| {
                let d = zeta_labelled_c(v);
                let ok = area_prime_c(&d) == dinv_prime_c(v);
                (d, ok)
            })
            .collect();
        for (d, ok) in &images {
            if !ok {
                f.push(format!("n={}: transport fails at image {} {}", n, d.path(), d.word()));
            }
        }
        let distinct: std::collections::BTreeSet<_> = images.iter().map(|(d, _)| d).collect();
        expect(&mut f, &format!("n={} distinct images", n), distinct.len(), objects.len());
        let valid = enumerate_diagonal_c(n).len();
        expect(&mut f, &format!("n={} diagonal count", n), distinct.len(), valid);
    }
    check("labelled-transport", f)
}

/// Criterion 4: the sweep map agrees with zeta_C everywhere.
pub fn check_sweep_equivalence(max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        let mut failures: Vec<String> = enumerate_l(n)
            .par_iter()
            .filter_map(|p| {
                (sweep(p).ok() != zeta_c(p).ok()).then(|| format!("n={}: sweep({}) != zeta", n, p))
            })
            .collect();
        f.append(&mut failures);
    }
    check("sweep-equivalence", f)
}

/// Criterion 5: valley labels of the image match rise labels of the source.
pub fn check_valley_characterization_all(max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        let mut failures: Vec<String> = enumerate_vertical_c(n)
            .par_iter()
            .filter_map(|v| {
                (!check_valley_characterization(v, &zeta_labelled_c(v)))
                    .then(|| format!("n={}: characterization fails at {} {}", n, v.path(), v.labels()))
            })
            .collect();
        f.append(&mut failures);
    }
    check("valley-characterization", f)
}

/// Criterion 6: restriction to Dyck paths recovers the classical map, and
/// the type A labelled map transports dinv' to area'.
pub fn check_dyck_compatibility(max_n: usize, labelled_max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        for d in enumerate_d(n) {
            let via_a = zeta_a(&d).path().reverse_swap();
            if zeta_c(d.path()).unwrap().path() != &via_a {
                f.push(format!("n={}: zeta_C != reverse_swap(zeta_A) at {}", n, d));
            }
            if dinv_c(d.path()).unwrap() != dinv_a(&d) {
                f.push(format!("n={}: dinv_C != dinv_A at {}", n, d));
            }
        }
    }
    for n in 1..=labelled_max_n {
        let objects = enumerate_vertical_a(n);
        expect(
            &mut f,
            &format!("n={} parking function count", n),
            objects.len(),
            (n + 1).pow(n as u32 - 1),
        );
        let mut failures: Vec<String> = objects
            .par_iter()
            .filter_map(|v| {
                let d = zeta_labelled_a(v);
                let bad_labelled = area_prime_a(&d) != dinv_prime_a(v);
                let bad_area = area_a(d.path()) != dinv_a(v.path());
                (bad_labelled || bad_area)
                    .then(|| format!("n={}: type A transport fails at {} {}", n, v.path(), v.labels()))
            })
            .collect();
        f.append(&mut failures);
    }
    check("dyck-compatibility", f)
}

/// Criterion 7: geometric region counts, dominant counts, and the perfect
/// region-to-labelled-path matching with coheight = area'.
pub fn check_geometry(box_scale: i64) -> Check {
    let mut f = Vec::new();
    let scaled = |n: usize| default_box(n) * box_scale;

    for (system, expected, dominant) in [
        (RootSystem::type_c(1), 3usize, 2usize),
        (RootSystem::type_c(2), 25, 6),
        (RootSystem::type_c(3), 343, 20),
        (RootSystem::type_a(3), 16, 5),
        (RootSystem::type_a(4), 125, 14),
    ] {
        let n = system.n();
        let tag = format!("{}_{}", system.kind(), n);
        let regions = enumerate_regions(&system, scaled(n));
        expect(&mut f, &format!("{} region count", tag), regions.len(), expected);
        let n_pos = system.positive_roots().len();
        let found_dominant = regions
            .iter()
            .filter(|r| (0..n_pos).all(|p| r.signs()[p]))
            .count();
        expect(&mut f, &format!("{} dominant count", tag), found_dominant, dominant);
    }

    for system in [
        RootSystem::type_c(2),
        RootSystem::type_c(3),
        RootSystem::type_a(3),
        RootSystem::type_a(4),
    ] {
        let n = system.n();
        let tag = format!("{}_{}", system.kind(), n);
        match verify_region_bijection(&system, scaled(n)) {
            Ok(report) if report.pass() => {}
            Ok(report) => {
                f.push(format!("{}: bijection report fails", tag));
                f.extend(report.mismatches.into_iter().take(3));
            }
            Err(e) => f.push(format!("{}: {}", tag, e)),
        }
    }
    check("geometry", f)
}

/// Criterion 8: equal dinv'/area' distributions without invoking the map.
pub fn check_distribution_identity(max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        let lhs_c = qt_distribution(
            enumerate_vertical_c(n).par_iter().map(|v| (dinv_prime_c(v) as i64, 0)).collect::<Vec<_>>(),
        );
        let rhs_c = qt_distribution(
            enumerate_diagonal_c(n).par_iter().map(|d| (area_prime_c(d) as i64, 0)).collect::<Vec<_>>(),
        );
        if lhs_c != rhs_c {
            f.push(format!("type C n={}: dinv' and area' distributions differ", n));
        }
        let lhs_a = qt_distribution(
            enumerate_vertical_a(n).par_iter().map(|v| (dinv_prime_a(v) as i64, 0)).collect::<Vec<_>>(),
        );
        let rhs_a = qt_distribution(
            enumerate_diagonal_a(n).par_iter().map(|d| (area_prime_a(d) as i64, 0)).collect::<Vec<_>>(),
        );
        if lhs_a != rhs_a {
            f.push(format!("type A n={}: dinv' and area' distributions differ", n));
        }
    }
    check("distribution-identity", f)
}

/// Independent area oracle: a staircase box counts iff a leftward ray from
/// its center crosses the path's vertical segments an odd number of times.
fn ballot_area_raycast(beta: &BallotPath) -> usize {
    let n = beta.n();
    let segments: Vec<(usize, usize)> = beta
        .path()
        .easts_before_norths()
        .iter()
        .enumerate()
        .map(|(k, &b)| (b, k + 1))
        .collect();
    let rows = beta.path().north_count();
    let mut area = 0;
    for r in 1..=rows {
        let row_len = (r - 1).min(2 * n + 1 - r);
        for c in 1..=row_len {
            // center (c - 1/2, r - 1/2) in doubled coordinates
            let (cy, cx) = (2 * r - 1, 2 * c - 1);
            let crossings = segments
                .iter()
                .filter(|&&(b, k)| 2 * (k - 1) < cy && cy < 2 * k && 2 * b < cx)
                .count();
            if crossings % 2 == 1 {
                area += 1;
            }
        }
    }
    area
}

/// Criterion 9: the staircase area formula against the ray-casting oracle,
/// and M-vs-2M invariance of the region enumeration.
pub fn check_oracle_crosschecks(max_n: usize) -> Check {
    let mut f = Vec::new();
    for n in 1..=max_n {
        for b in enumerate_b(n) {
            if ballot_area(&b) != ballot_area_raycast(&b) {
                f.push(format!("n={}: area formula and ray-cast differ at {}", n, b));
            }
        }
    }
    for system in [RootSystem::type_c(2), RootSystem::type_a(4)] {
        let n = system.n();
        let m = default_box(n);
        let small: Vec<String> = enumerate_regions(&system, m).iter().map(|r| r.sign_string()).collect();
        let large: Vec<String> = enumerate_regions(&system, 2 * m).iter().map(|r| r.sign_string()).collect();
        if small != large {
            f.push(format!("{}_{}: region lists differ between M and 2M", system.kind(), n));
        }
    }
    check("oracle-crosschecks", f)
}

/// Runs every check at its acceptance bound.
pub fn run_all() -> Vec<Check> {
    vec![
        check_examples(),
        check_zeta_bijection(6),
        check_labelled_transport(4),
        check_sweep_equivalence(6),
        check_valley_characterization_all(4),
        check_dyck_compatibility(6, 5),
        check_geometry(1),
        check_distribution_identity(4),
        check_oracle_crosschecks(5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        let c = check_examples();
        assert!(c.pass, "{:?}", c.details);
    }

    #[test]
    fn small_sweeps_pass() {
        for c in [
            check_zeta_bijection(4),
            check_labelled_transport(3),
            check_sweep_equivalence(4),
            check_valley_characterization_all(3),
            check_dyck_compatibility(4, 4),
            check_distribution_identity(3),
            check_oracle_crosschecks(4),
        ] {
            assert!(c.pass, "{}: {:?}", c.name, c.details);
        }
    }

    #[test]
    fn raycast_matches_formula() {
        for n in 1..=4 {
            for b in enumerate_b(n) {
                assert_eq!(ballot_area(&b), ballot_area_raycast(&b));
            }
        }
    }

    #[test]
    fn geometry_check_small() {
        // restricted to the cheap ranks through the public entry points
        let report = verify_region_bijection(&RootSystem::type_c(2), default_box(2)).unwrap();
        assert!(report.pass());
    }
}
