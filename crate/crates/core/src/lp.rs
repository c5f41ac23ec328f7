//! Exact rational feasibility LP (two-phase simplex with Bland's rule).
//!
//! Only feasibility is ever asked of it: separating hyperplanes between
//! cones and positive gradings of polynomial rings. Problems are tiny, so a
//! dense tableau is used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn from_ints(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        Constraint {
            coeffs: coeffs.iter().map(|&c| int(c)).collect(),
            relation,
            rhs: int(rhs),
        }
    }
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Finds a point satisfying every constraint, with all `num_vars` variables
/// unrestricted in sign. Returns `None` when the system is infeasible.
pub fn find_feasible(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    // columns: x+ (num_vars), x- (num_vars), one slack/surplus per inequality,
    // one artificial per row
    let m = constraints.len();
    let n_ineq = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let n_struct = 2 * num_vars + n_ineq;
    let width = n_struct + m + 1;
    let mut tab = vec![vec![BigRational::zero(); width]; m];
    let mut basis = vec![0usize; m];
    let mut slack = 2 * num_vars;
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), num_vars, "constraint width mismatch");
        let flip = c.rhs.is_negative();
        let sign = if flip {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        for (j, a) in c.coeffs.iter().enumerate() {
            tab[i][j] = a * &sign;
            tab[i][num_vars + j] = -(a * &sign);
        }
        match c.relation {
            Relation::Le => {
                tab[i][slack] = sign.clone();
                slack += 1;
            }
            Relation::Ge => {
                tab[i][slack] = -sign.clone();
                slack += 1;
            }
            Relation::Eq => {}
        }
        tab[i][n_struct + i] = BigRational::one();
        tab[i][width - 1] = &c.rhs * &sign;
        basis[i] = n_struct + i;
    }

    // phase one objective: minimise the sum of artificials, stored as a
    // reduced-cost row
    let mut cost = vec![BigRational::zero(); width];
    for row in &tab {
        for j in 0..n_struct {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    loop {
        // Bland: lowest-index column with negative reduced cost
        let Some(enter) = (0..n_struct + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][width - 1] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // unbounded phase-one objective cannot happen (it is bounded below by 0)
            unreachable!("phase-one objective is bounded");
        };
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut values = vec![BigRational::zero(); n_struct + m];
    for (i, &b) in basis.iter().enumerate() {
        values[b] = tab[i][width - 1].clone();
    }
    Some(
        (0..num_vars)
            .map(|j| &values[j] - &values[num_vars + j])
            .collect(),
    )
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let p = tab[pr][pc].clone();
    for x in tab[pr].iter_mut() {
        *x /= &p;
    }
    let prow = tab[pr].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// Checks a candidate point against the constraints.
pub fn satisfies(point: &[BigRational], constraints: &[Constraint]) -> bool {
    constraints.iter().all(|c| {
        let lhs: BigRational = c.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
        match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Ge => lhs >= c.rhs,
            Relation::Eq => lhs == c.rhs,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_feasible_region() {
        let cs = vec![
            Constraint::from_ints(&[1, 1], Relation::Le, 4),
            Constraint::from_ints(&[1, -1], Relation::Ge, 1),
            Constraint::from_ints(&[0, 1], Relation::Ge, -3),
        ];
        let x = find_feasible(2, &cs).expect("feasible");
        assert!(satisfies(&x, &cs));
    }

    #[test]
    fn infeasible_region() {
        let cs = vec![
            Constraint::from_ints(&[1, 0], Relation::Ge, 2),
            Constraint::from_ints(&[1, 0], Relation::Le, 1),
        ];
        assert!(find_feasible(2, &cs).is_none());
    }

    #[test]
    fn equalities_and_negative_rhs() {
        let cs = vec![
            Constraint::from_ints(&[2, 1], Relation::Eq, -3),
            Constraint::from_ints(&[1, 0], Relation::Le, -5),
        ];
        let x = find_feasible(2, &cs).expect("feasible");
        assert!(satisfies(&x, &cs));
    }

    #[test]
    fn degenerate_cycle_free() {
        // positive functional on degrees (1,0), (-5,1), (0,1)
        let cs = vec![
            Constraint::from_ints(&[1, 0], Relation::Ge, 1),
            Constraint::from_ints(&[-5, 1], Relation::Ge, 1),
            Constraint::from_ints(&[0, 1], Relation::Ge, 1),
        ];
        let x = find_feasible(2, &cs).expect("feasible");
        assert!(satisfies(&x, &cs));
        // (1,0) and (-1,0) admit no positive functional
        let cs = vec![
            Constraint::from_ints(&[1], Relation::Ge, 1),
            Constraint::from_ints(&[-1], Relation::Ge, 1),
        ];
        assert!(find_feasible(1, &cs).is_none());
    }
}
