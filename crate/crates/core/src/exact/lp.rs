//! Two-phase dense simplex method over exact rationals, Bland's rule.
//!
//! Problems here are tiny (tens of rows), so a full tableau is fine.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

/// Minimize `objective . x` subject to the constraints. Variables flagged
/// free are unrestricted in sign, all others are `>= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            free: vec![false; num_vars],
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    /// All variables unrestricted in sign.
    pub fn new_free(num_vars: usize) -> Self {
        let mut lp = Self::new(num_vars);
        lp.free = vec![true; num_vars];
        lp
    }

    pub fn set_free(&mut self, var: usize, free: bool) {
        self.free[var] = free;
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// A feasible point if one exists.
    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        let mut lp = self.clone();
        lp.objective = vec![Rational::zero(); self.num_vars];
        match lp.solve() {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible_point().is_some()
    }

    pub fn solve(&self) -> LpOutcome {
        // Column layout: for each original variable one column (plus a
        // negative-part column when free), then slack columns, then one
        // artificial column per row.
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.num_vars);
        let mut ncols = 0;
        for &f in &self.free {
            if f {
                col_of.push((ncols, Some(ncols + 1)));
                ncols += 2;
            } else {
                col_of.push((ncols, None));
                ncols += 1;
            }
        }
        let structural = ncols;
        let m = self.constraints.len();
        let slack_count = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let first_art = structural + slack_count;
        let total = first_art + m;

        // tableau rows: [coeffs..., rhs]
        let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut basis: Vec<usize> = Vec::with_capacity(m);
        let mut slack = structural;
        for (r, c) in self.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); total + 1];
            for (v, a) in c.coeffs.iter().enumerate() {
                let (pos, neg) = col_of[v];
                row[pos] = a.clone();
                if let Some(neg) = neg {
                    row[neg] = -a.clone();
                }
            }
            match c.relation {
                Relation::Le => {
                    row[slack] = Rational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[total] = c.rhs.clone();
            if row[total].is_negative() {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
            }
            row[first_art + r] = Rational::one();
            t.push(row);
            basis.push(first_art + r);
        }

        // Phase 1: minimize the sum of artificials.
        let mut phase1 = vec![Rational::zero(); total];
        for c in phase1.iter_mut().skip(first_art) {
            *c = Rational::one();
        }
        let allowed: Vec<bool> = (0..total).map(|_| true).collect();
        if run_simplex(&mut t, &mut basis, &phase1, &allowed).is_err() {
            unreachable!("phase 1 objective is bounded below by zero");
        }
        let infeasibility: Rational = basis
            .iter()
            .zip(&t)
            .filter(|(&b, _)| b >= first_art)
            .map(|(_, row)| row[total].clone())
            .sum();
        if !infeasibility.is_zero() {
            return LpOutcome::Infeasible;
        }

        // Drive remaining (zero-valued) artificials out of the basis.
        let mut r = 0;
        while r < t.len() {
            if basis[r] >= first_art {
                match (0..first_art).find(|&c| !t[r][c].is_zero()) {
                    Some(c) => pivot(&mut t, &mut basis, r, c),
                    None => {
                        t.remove(r);
                        basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }

        // Phase 2.
        let mut cost = vec![Rational::zero(); total];
        for (v, c) in self.objective.iter().enumerate() {
            let (pos, neg) = col_of[v];
            cost[pos] = c.clone();
            if let Some(neg) = neg {
                cost[neg] = -c.clone();
            }
        }
        let allowed: Vec<bool> = (0..total).map(|c| c < first_art).collect();
        if run_simplex(&mut t, &mut basis, &cost, &allowed).is_err() {
            return LpOutcome::Unbounded;
        }

        let mut values = vec![Rational::zero(); total];
        for (row, &b) in t.iter().zip(&basis) {
            values[b] = row[total].clone();
        }
        let x: Vec<Rational> = col_of
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect();
        let value = x
            .iter()
            .zip(&self.objective)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        LpOutcome::Optimal { x, value }
    }
}

struct Unbounded;

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], r: usize, c: usize) {
    let p = t[r][c].clone();
    for v in t[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    basis[r] = c;
}

/// Minimizes `cost` from the current basic feasible tableau. Bland's rule:
/// smallest eligible entering index, ties in the ratio test broken by the
/// smallest basic index.
fn run_simplex(
    t: &mut [Vec<Rational>],
    basis: &mut [usize],
    cost: &[Rational],
    allowed: &[bool],
) -> Result<(), Unbounded> {
    let total = cost.len();
    loop {
        // reduced cost of column c: cost[c] - sum_r cost[basis[r]] * t[r][c]
        let entering = (0..total).find(|&c| {
            if !allowed[c] || basis.contains(&c) {
                return false;
            }
            let mut rc = cost[c].clone();
            for (row, &b) in t.iter().zip(basis.iter()) {
                if !cost[b].is_zero() && !row[c].is_zero() {
                    rc -= &cost[b] * &row[c];
                }
            }
            rc.is_negative()
        });
        let Some(c) = entering else {
            return Ok(());
        };
        let mut best: Option<(usize, Rational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[c].is_positive() {
                let ratio = &row[total] / &row[c];
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && basis[r] < basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
        }
        match best {
            Some((r, _)) => pivot(t, basis, r, c),
            None => return Err(Unbounded),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    #[test]
    fn small_optimum() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6  ->  x = 8/5, y = 6/5
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![rat(-1), rat(-1)]);
        lp.add(vec![rat(1), rat(2)], Relation::Le, rat(4));
        lp.add(vec![rat(3), rat(1)], Relation::Le, rat(6));
        match lp.solve() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, vec![ratio(8, 5), ratio(6, 5)]);
                assert_eq!(value, ratio(-14, 5));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new_free(1);
        lp.add(vec![rat(1)], Relation::Ge, rat(1));
        lp.add(vec![rat(1)], Relation::Le, rat(0));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new_free(1);
        lp.set_objective(vec![rat(1)]);
        lp.add(vec![rat(1)], Relation::Le, rat(3));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // x free, x + y = -2, y >= 0, minimize y -> x = -2
        let mut lp = LinearProgram::new(2);
        lp.set_free(0, true);
        lp.set_objective(vec![rat(0), rat(1)]);
        lp.add(vec![rat(1), rat(1)], Relation::Eq, rat(-2));
        match lp.solve() {
            LpOutcome::Optimal { x, .. } => assert_eq!(x, vec![rat(-2), rat(0)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_redundant_rows() {
        let mut lp = LinearProgram::new(2);
        lp.add(vec![rat(1), rat(1)], Relation::Eq, rat(1));
        lp.add(vec![rat(2), rat(2)], Relation::Eq, rat(2));
        lp.add(vec![rat(1), rat(0)], Relation::Ge, rat(0));
        assert!(lp.is_feasible());
    }
}
