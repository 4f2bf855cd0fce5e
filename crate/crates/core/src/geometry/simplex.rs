//! Dense two-phase primal simplex over exact rationals.
//!
//! Bland's rule throughout (smallest eligible index enters, smallest basis
//! index leaves on ties), which rules out cycling. All problems solved here
//! carry explicit upper bounds on every variable, so phase 2 can never be
//! unbounded.

use num::{BigRational, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub(crate) struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rel: Rel,
    pub rhs: BigRational,
}

/// Maximizes `objective . y` over y >= 0 subject to `constraints`.
/// Returns the optimum and an optimal point, or None if infeasible.
pub(crate) fn maximize(
    objective: &[BigRational],
    constraints: &[Constraint],
) -> Option<(BigRational, Vec<BigRational>)> {
    let n = objective.len();
    let m = constraints.len();

    // Column layout: structural 0..n, one slack/surplus per row, then one
    // artificial per Ge/Eq row; the final column is the rhs.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rels: Vec<Rel> = Vec::with_capacity(m);
    for c in constraints {
        debug_assert_eq!(c.coeffs.len(), n);
        let mut coeffs = c.coeffs.clone();
        let mut rel = c.rel;
        let mut rhs = c.rhs.clone();
        if rhs.is_negative() {
            for x in &mut coeffs {
                *x = -x.clone();
            }
            rhs = -rhs;
            rel = match rel {
                Rel::Le => Rel::Ge,
                Rel::Ge => Rel::Le,
                Rel::Eq => Rel::Eq,
            };
        }
        coeffs.push(rhs);
        rows.push(coeffs);
        rels.push(rel);
    }

    let n_artificial = rels.iter().filter(|r| !matches!(r, Rel::Le)).count();
    let total = n + m + n_artificial;
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut artificial_start = n + m;
    let mut next_artificial = artificial_start;
    for (i, mut row) in rows.into_iter().enumerate() {
        let rhs = row.pop().unwrap();
        let mut full = vec![BigRational::zero(); total + 1];
        full[..n].clone_from_slice(&row);
        match rels[i] {
            Rel::Le => {
                full[n + i] = BigRational::from_integer(1.into());
                basis.push(n + i);
            }
            Rel::Ge => {
                full[n + i] = BigRational::from_integer((-1).into());
                full[next_artificial] = BigRational::from_integer(1.into());
                basis.push(next_artificial);
                next_artificial += 1;
            }
            Rel::Eq => {
                full[next_artificial] = BigRational::from_integer(1.into());
                basis.push(next_artificial);
                next_artificial += 1;
            }
        }
        full[total] = rhs;
        tableau.push(full);
    }
    debug_assert_eq!(next_artificial, total);

    // Phase 1: maximize minus the sum of artificials.
    if n_artificial > 0 {
        let mut phase1 = vec![BigRational::zero(); total];
        for c in phase1.iter_mut().take(total).skip(artificial_start) {
            *c = BigRational::from_integer((-1).into());
        }
        let value = run(&mut tableau, &mut basis, &phase1, total);
        if !value.is_zero() {
            return None;
        }
        // Pivot leftover artificials out of the basis, or drop their rows.
        let mut i = 0;
        while i < tableau.len() {
            if basis[i] >= artificial_start {
                let col = (0..artificial_start).find(|&j| !tableau[i][j].is_zero());
                match col {
                    Some(j) => pivot(&mut tableau, &mut basis, i, j, total),
                    None => {
                        tableau.remove(i);
                        basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        // Drop artificial columns entirely.
        for row in &mut tableau {
            let rhs = row[total].clone();
            row.truncate(artificial_start);
            row.push(rhs);
        }
    } else {
        artificial_start = total;
    }
    let total = artificial_start;

    let mut phase2 = vec![BigRational::zero(); total];
    phase2[..n].clone_from_slice(objective);
    let value = run(&mut tableau, &mut basis, &phase2, total);

    let mut point = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            point[b] = tableau[i][total].clone();
        }
    }
    Some((value, point))
}

/// Simplex iterations for one phase; returns the optimal objective value.
fn run(
    tableau: &mut Vec<Vec<BigRational>>,
    basis: &mut [usize],
    cost: &[BigRational],
    total: usize,
) -> BigRational {
    loop {
        // Reduced cost of column j: c_j - c_B . column_j.
        let mut entering = None;
        for j in 0..total {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = cost[j].clone();
            for (i, &b) in basis.iter().enumerate() {
                if !cost[b].is_zero() && !tableau[i][j].is_zero() {
                    reduced -= cost[b].clone() * tableau[i][j].clone();
                }
            }
            if reduced.is_positive() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else {
            let mut value = BigRational::zero();
            for (i, &b) in basis.iter().enumerate() {
                if !cost[b].is_zero() {
                    value += cost[b].clone() * tableau[i][total].clone();
                }
            }
            return value;
        };
        let mut leaving: Option<(usize, BigRational)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = row[total].clone() / row[j].clone();
                let better = match &leaving {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && basis[i] < basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let (i, _) = leaving.expect("bounded problems cannot be unbounded");
        pivot(tableau, basis, i, j, total);
    }
}

fn pivot(tableau: &mut [Vec<BigRational>], basis: &mut [usize], i: usize, j: usize, total: usize) {
    let p = tableau[i][j].clone();
    for x in tableau[i].iter_mut() {
        *x /= p.clone();
    }
    for r in 0..tableau.len() {
        if r != i && !tableau[r][j].is_zero() {
            let f = tableau[r][j].clone();
            for k in 0..=total {
                let delta = f.clone() * tableau[i][k].clone();
                tableau[r][k] -= delta;
            }
        }
    }
    basis[i] = j;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn basic_maximization() {
        // max x + y s.t. x + y <= 4, x <= 3, y <= 3
        let (value, point) = maximize(
            &[q(1, 1), q(1, 1)],
            &[
                Constraint { coeffs: vec![q(1, 1), q(1, 1)], rel: Rel::Le, rhs: q(4, 1) },
                Constraint { coeffs: vec![q(1, 1), q(0, 1)], rel: Rel::Le, rhs: q(3, 1) },
                Constraint { coeffs: vec![q(0, 1), q(1, 1)], rel: Rel::Le, rhs: q(3, 1) },
            ],
        )
        .unwrap();
        assert_eq!(value, q(4, 1));
        assert_eq!(point[0].clone() + point[1].clone(), q(4, 1));
    }

    #[test]
    fn equality_and_ge() {
        // max y s.t. x + y = 2, x >= 1, y <= 5
        let (value, point) = maximize(
            &[q(0, 1), q(1, 1)],
            &[
                Constraint { coeffs: vec![q(1, 1), q(1, 1)], rel: Rel::Eq, rhs: q(2, 1) },
                Constraint { coeffs: vec![q(1, 1), q(0, 1)], rel: Rel::Ge, rhs: q(1, 1) },
                Constraint { coeffs: vec![q(0, 1), q(1, 1)], rel: Rel::Le, rhs: q(5, 1) },
            ],
        )
        .unwrap();
        assert_eq!(value, q(1, 1));
        assert_eq!(point, vec![q(1, 1), q(1, 1)]);
    }

    #[test]
    fn infeasible_detected() {
        // x <= 1 and x >= 2
        let result = maximize(
            &[q(1, 1)],
            &[
                Constraint { coeffs: vec![q(1, 1)], rel: Rel::Le, rhs: q(1, 1) },
                Constraint { coeffs: vec![q(1, 1)], rel: Rel::Ge, rhs: q(2, 1) },
            ],
        );
        assert!(result.is_none());
    }

    #[test]
    fn negative_rhs_normalization() {
        // max x s.t. -x <= -1, x <= 3  (i.e. 1 <= x <= 3)
        let (value, _) = maximize(
            &[q(1, 1)],
            &[
                Constraint { coeffs: vec![q(-1, 1)], rel: Rel::Le, rhs: q(-1, 1) },
                Constraint { coeffs: vec![q(1, 1)], rel: Rel::Le, rhs: q(3, 1) },
            ],
        )
        .unwrap();
        assert_eq!(value, q(3, 1));
    }

    #[test]
    fn degenerate_equalities() {
        // x = 1, x + y = 1, max y => y = 0
        let (value, point) = maximize(
            &[q(0, 1), q(1, 1)],
            &[
                Constraint { coeffs: vec![q(1, 1), q(0, 1)], rel: Rel::Eq, rhs: q(1, 1) },
                Constraint { coeffs: vec![q(1, 1), q(1, 1)], rel: Rel::Eq, rhs: q(1, 1) },
            ],
        )
        .unwrap();
        assert_eq!(value, q(0, 1));
        assert_eq!(point, vec![q(1, 1), q(0, 1)]);
    }

    #[test]
    fn redundant_equality_rows() {
        // x + y = 2 stated twice plus x - y = 0
        let (value, point) = maximize(
            &[q(1, 1), q(0, 1)],
            &[
                Constraint { coeffs: vec![q(1, 1), q(1, 1)], rel: Rel::Eq, rhs: q(2, 1) },
                Constraint { coeffs: vec![q(1, 1), q(1, 1)], rel: Rel::Eq, rhs: q(2, 1) },
                Constraint { coeffs: vec![q(1, 1), q(-1, 1)], rel: Rel::Eq, rhs: q(0, 1) },
            ],
        )
        .unwrap();
        assert_eq!(value, q(1, 1));
        assert_eq!(point, vec![q(1, 1), q(1, 1)]);
    }
}
