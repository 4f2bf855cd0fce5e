//! Exact-rational enumeration of Shi-arrangement regions at small rank, with
//! coheight, chambers, floors, and the end-to-end check against the
//! combinatorial (A, w) encoding.
//!
//! Every feasibility question is answered by an exact simplex: maximize a
//! slack t (capped at 1) over the strict constraints relaxed to `>= d + t`
//! inside the box |x_i| <= M; the system is strictly feasible iff the
//! optimum is positive. Type A works in the ambient n-space with the
//! equality sum x_i = 0 appended to every query.
//!
//! Coheight convention: a hyperplane through the origin never separates a
//! region from the origin, so coheight counts exactly the alpha with
//! 0 < <x, alpha> < 1 on the region. This reading is validated by the
//! distribution equality with area'.

mod simplex;

use std::collections::BTreeSet;

use num::{BigRational, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::labelled::{shi_pair_to_diagonal_a, shi_pair_to_diagonal_c, DiagonallyLabelledPathA, DiagonallyLabelledPathC};
use crate::perm::SignedPermutation;
use crate::roots::{Antichain, Root, RootSystem, RootSystemKind, ShiPair};
use crate::stats::{area_prime_a, area_prime_c};
use simplex::{maximize, Constraint, Rel};

/// H_alpha^d = { x : <x, alpha> = d }, d in {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub root: Root,
    pub level: u8,
}

/// All 2|Phi+| Shi hyperplanes: level 0 for every positive root in
/// `positive_roots` order, then level 1. This is also the DFS branching
/// order, so sign vectors are reproducible.
pub fn shi_hyperplanes(system: &RootSystem) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for level in [0u8, 1] {
        for root in system.positive_roots() {
            out.push(Hyperplane { root, level });
        }
    }
    out
}

/// Default bounding-box half-width; adequacy is enforced by the count and
/// M-vs-2M checks rather than by an a priori vertex bound.
pub fn default_box(n: usize) -> i64 {
    4 * (n as i64 + 1)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Searches for a point satisfying every `strict` constraint
/// `<a, x> > d` strictly and every equality `<a, x> = d`, within
/// |x_i| <= box_bound. Returns a witness or None (infeasible is a value).
pub fn feasible_point(
    n: usize,
    strict: &[(Vec<i64>, i64)],
    equalities: &[(Vec<i64>, i64)],
    box_bound: i64,
) -> Option<Vec<BigRational>> {
    // Shifted variables y = (z_1..z_n, tau) with z = x + M, tau = t + 2,
    // so y >= 0 covers the whole box and t ranges over [-2, 1].
    let m = box_bound;
    let mut constraints = Vec::new();
    for (a, d) in strict {
        let sum: i64 = a.iter().sum();
        let mut coeffs: Vec<BigRational> = a.iter().map(|&v| rat(v)).collect();
        coeffs.push(rat(-1));
        constraints.push(Constraint {
            coeffs,
            rel: Rel::Ge,
            rhs: rat(d + m * sum - 2),
        });
    }
    for (a, d) in equalities {
        let sum: i64 = a.iter().sum();
        let mut coeffs: Vec<BigRational> = a.iter().map(|&v| rat(v)).collect();
        coeffs.push(rat(0));
        constraints.push(Constraint {
            coeffs,
            rel: Rel::Eq,
            rhs: rat(d + m * sum),
        });
    }
    for i in 0..n {
        let mut coeffs = vec![rat(0); n + 1];
        coeffs[i] = rat(1);
        constraints.push(Constraint { coeffs, rel: Rel::Le, rhs: rat(2 * m) });
    }
    let mut coeffs = vec![rat(0); n + 1];
    coeffs[n] = rat(1);
    constraints.push(Constraint { coeffs, rel: Rel::Le, rhs: rat(3) });

    let mut objective = vec![rat(0); n + 1];
    objective[n] = rat(1);
    let (value, point) = maximize(&objective, &constraints)?;
    if value <= rat(2) {
        return None;
    }
    Some(point[..n].iter().map(|z| z - rat(m)).collect())
}

/// An open region of the Shi arrangement: one sign per hyperplane in
/// `shi_hyperplanes` order, plus a strictly interior witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    signs: Vec<bool>,
    witness: Vec<BigRational>,
}

impl Region {
    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
    }

    pub fn witness(&self) -> &[BigRational] {
        &self.witness
    }
}

struct Enumerator {
    coords: Vec<(Vec<i64>, i64)>,
    equalities: Vec<(Vec<i64>, i64)>,
    n: usize,
    n_pos: usize,
    box_bound: i64,
    out: Vec<Region>,
}

impl Enumerator {
    /// The strict constraint asserting sign `s` for hyperplane `k`.
    fn constraint(&self, k: usize, s: bool) -> (Vec<i64>, i64) {
        let (a, d) = &self.coords[k];
        if s {
            (a.clone(), *d)
        } else {
            (a.iter().map(|v| -v).collect(), -d)
        }
    }

    fn dfs(&mut self, signs: &mut Vec<bool>, active: &mut Vec<(Vec<i64>, i64)>, witness: Vec<BigRational>) {
        let k = signs.len();
        if k == self.coords.len() {
            self.out.push(Region { signs: signs.clone(), witness });
            return;
        }
        let (a, d) = &self.coords[k];
        let value: BigRational = a
            .iter()
            .zip(&witness)
            .map(|(&c, w)| rat(c) * w)
            .sum::<BigRational>()
            - rat(*d);
        for s in [true, false] {
            // A positive sign at level 1 requires a positive sign at level 0.
            if s && k >= self.n_pos && !signs[k - self.n_pos] {
                continue;
            }
            let inherited = if s { value.is_positive() } else { value.is_negative() };
            let next_witness = if inherited {
                Some(witness.clone())
            } else {
                active.push(self.constraint(k, s));
                let w = feasible_point(self.n, active, &self.equalities, self.box_bound);
                active.pop();
                w
            };
            if let Some(w) = next_witness {
                signs.push(s);
                active.push(self.constraint(k, s));
                self.dfs(signs, active, w);
                active.pop();
                signs.pop();
            }
        }
    }
}

/// Depth-first sign-vector enumeration of all Shi regions, each with a
/// strictly interior witness, in sign-vector branch order (+ before -).
pub fn enumerate_regions(system: &RootSystem, box_bound: i64) -> Vec<Region> {
    let n = system.n();
    let hyperplanes = shi_hyperplanes(system);
    let coords = hyperplanes
        .iter()
        .map(|h| (h.root.coords(n), h.level as i64))
        .collect::<Vec<_>>();
    let equalities = match system.kind() {
        RootSystemKind::A => vec![(vec![1i64; n], 0)],
        RootSystemKind::C => Vec::new(),
    };
    let mut e = Enumerator {
        n_pos: coords.len() / 2,
        coords,
        equalities,
        n,
        box_bound,
        out: Vec::new(),
    };
    let origin_witness = feasible_point(n, &[], &e.equalities, box_bound)
        .expect("the empty system is feasible");
    e.dfs(&mut Vec::new(), &mut Vec::new(), origin_witness);
    e.out
}

/// Number of positive roots with 0 < <x, alpha> < 1 on the region.
pub fn coheight(region: &Region) -> usize {
    let n_pos = region.signs.len() / 2;
    (0..n_pos)
        .filter(|&p| region.signs[p] && !region.signs[n_pos + p])
        .count()
}

/// The unique w with w^{-1} . witness in the dominant chamber
/// (0 < y_1 < .. < y_n in type C; y_1 > .. > y_n in type A).
pub fn chamber_of(system: &RootSystem, region: &Region) -> SignedPermutation {
    let n = system.n();
    let x = &region.witness;
    let mut order: Vec<usize> = (1..=n).collect();
    let window: Vec<i32> = match system.kind() {
        RootSystemKind::C => {
            order.sort_by(|&p, &q| x[p - 1].abs().cmp(&x[q - 1].abs()));
            order
                .iter()
                .map(|&p| {
                    debug_assert!(!x[p - 1].is_zero());
                    if x[p - 1].is_positive() { p as i32 } else { -(p as i32) }
                })
                .collect()
        }
        RootSystemKind::A => {
            order.sort_by(|&p, &q| x[q - 1].cmp(&x[p - 1]));
            order.iter().map(|&p| p as i32).collect()
        }
    };
    SignedPermutation::new(window).expect("witness coordinates are generic")
}

/// The level-1 hyperplanes separating the region from the origin and
/// supporting a facet: the region lies on the positive side and the wall
/// system (this constraint as equality, all others strict) is feasible.
pub fn floors(system: &RootSystem, region: &Region, box_bound: i64) -> Vec<Hyperplane> {
    let n = system.n();
    let pos = system.positive_roots();
    let n_pos = pos.len();
    let coords: Vec<(Vec<i64>, i64)> = shi_hyperplanes(system)
        .iter()
        .map(|h| (h.root.coords(n), h.level as i64))
        .collect();
    let mut equalities = match system.kind() {
        RootSystemKind::A => vec![(vec![1i64; n], 0)],
        RootSystemKind::C => Vec::new(),
    };
    let mut out = Vec::new();
    for (p, root) in pos.iter().enumerate() {
        let k = n_pos + p;
        if !region.signs[k] {
            continue;
        }
        let mut strict = Vec::with_capacity(coords.len() - 1);
        for (j, (a, d)) in coords.iter().enumerate() {
            if j == k {
                continue;
            }
            if region.signs[j] {
                strict.push((a.clone(), *d));
            } else {
                strict.push((a.iter().map(|v| -v).collect(), -d));
            }
        }
        equalities.push((coords[k].0.clone(), 1));
        if feasible_point(n, &strict, &equalities, box_bound).is_some() {
            out.push(Hyperplane { root: *root, level: 1 });
        }
        equalities.pop();
    }
    out
}

/// The combinatorial address of a region: w is its chamber and
/// A = w^{-1}(floor roots), which is always a valid Shi pair.
pub fn region_to_shi_pair(system: &RootSystem, region: &Region, box_bound: i64) -> Result<ShiPair> {
    let w = chamber_of(system, region);
    let w_inv = w.inverse();
    let mut roots = BTreeSet::new();
    for h in floors(system, region, box_bound) {
        let signed = system.act(&w_inv, &h.root);
        if !signed.positive {
            return Err(Error::InvalidShiPair(format!(
                "floor root {} maps negatively under the chamber inverse",
                h.root
            )));
        }
        roots.insert(signed.root);
    }
    let antichain = Antichain::new(system, roots)?;
    ShiPair::new(system, antichain, w)
}

/// JSON-facing summary of one region.
#[derive(Debug, Clone, Serialize)]
pub struct RegionReport {
    pub signs: String,
    pub witness: Vec<String>,
    pub coheight: usize,
    pub chamber: Vec<i32>,
    pub floors: Vec<String>,
    pub antichain: String,
}

pub fn region_report(system: &RootSystem, region: &Region, box_bound: i64) -> Result<RegionReport> {
    let pair = region_to_shi_pair(system, region, box_bound)?;
    Ok(RegionReport {
        signs: region.sign_string(),
        witness: region.witness.iter().map(|w| w.to_string()).collect(),
        coheight: coheight(region),
        chamber: pair.w.window().to_vec(),
        floors: floors(system, region, box_bound)
            .iter()
            .map(|h| h.root.to_string())
            .collect(),
        antichain: pair.antichain.to_string(),
    })
}

/// Outcome of the geometric cross-check of the combinatorial encoding.
#[derive(Debug, Clone, Serialize)]
pub struct RegionBijectionReport {
    pub kind: RootSystemKind,
    pub n: usize,
    pub expected_regions: usize,
    pub found_regions: usize,
    pub matched: usize,
    pub mismatches: Vec<String>,
}

impl RegionBijectionReport {
    pub fn pass(&self) -> bool {
        self.expected_regions == self.found_regions
            && self.matched == self.found_regions
            && self.mismatches.is_empty()
    }
}

enum LabelledImage {
    A(DiagonallyLabelledPathA),
    C(DiagonallyLabelledPathC),
}

/// Enumerates all regions and checks: expected count; region -> (A, w) ->
/// diagonally labelled path is injective onto distinct objects; and
/// coheight equals area' on every match. Rank bounds keep this desk-scale.
pub fn verify_region_bijection(system: &RootSystem, box_bound: i64) -> Result<RegionBijectionReport> {
    let n = system.n();
    let (max, expected) = match system.kind() {
        RootSystemKind::C => (3usize, (2 * n + 1).pow(n as u32)),
        RootSystemKind::A => (4usize, (n + 1).pow(n as u32 - 1)),
    };
    if n > max {
        return Err(Error::RankTooLarge { n, max });
    }
    let regions = enumerate_regions(system, box_bound);
    let mut report = RegionBijectionReport {
        kind: system.kind(),
        n,
        expected_regions: expected,
        found_regions: regions.len(),
        matched: 0,
        mismatches: Vec::new(),
    };
    let mut seen = BTreeSet::new();
    for region in &regions {
        let tag = region.sign_string();
        let pair = match region_to_shi_pair(system, region, box_bound) {
            Ok(p) => p,
            Err(e) => {
                report.mismatches.push(format!("{}: {}", tag, e));
                continue;
            }
        };
        let image = match system.kind() {
            RootSystemKind::C => shi_pair_to_diagonal_c(n, &pair).map(LabelledImage::C),
            RootSystemKind::A => shi_pair_to_diagonal_a(n, &pair).map(LabelledImage::A),
        };
        let image = match image {
            Ok(image) => image,
            Err(e) => {
                report.mismatches.push(format!("{}: {}", tag, e));
                continue;
            }
        };
        let (key, area) = match &image {
            LabelledImage::A(d) => (format!("{} {}", d.path(), d.labels()), area_prime_a(d)),
            LabelledImage::C(d) => (format!("{} {}", d.path(), d.word()), area_prime_c(d)),
        };
        if !seen.insert(key.clone()) {
            report.mismatches.push(format!("{}: duplicate image {}", tag, key));
            continue;
        }
        if coheight(region) != area {
            report.mismatches.push(format!(
                "{}: coheight {} != area' {} for {}",
                tag,
                coheight(region),
                area,
                key
            ));
            continue;
        }
        report.matched += 1;
    }
    Ok(report)
}
