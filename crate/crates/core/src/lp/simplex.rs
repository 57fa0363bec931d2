//! Dense two-phase primal simplex over exact rationals.
//!
//! Pivoting follows Bland's rule throughout (lowest-index entering column
//! with negative reduced cost, lowest-index basic variable among tied
//! ratios), which guarantees termination. Variables are reduced to
//! nonnegative ones before the tableau is built: finite lower bounds are
//! shifted out, free variables are split into a difference of two, and
//! finite upper bounds become ordinary `<=` rows.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{display, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// Minimise `objective . x` subject to the constraints and per-variable
/// bounds. `None` is an infinite bound.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn status(&self) -> &'static str {
        match self {
            LpOutcome::Optimal { .. } => "optimal",
            LpOutcome::Infeasible => "infeasible",
            LpOutcome::Unbounded => "unbounded",
        }
    }
}

impl LinearProgram {
    /// `n` variables with bounds `0 <= x` and zero objective.
    pub fn new(n: usize) -> Self {
        LinearProgram {
            objective: vec![Rational::zero(); n],
            constraints: Vec::new(),
            lower: vec![Some(Rational::zero()); n],
            upper: vec![None; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, sense, rhs });
    }

    pub fn check_dimensions(&self) -> Result<()> {
        let n = self.num_vars();
        if self.lower.len() != n || self.upper.len() != n {
            return Err(Error::Dimension(format!(
                "{} variables but {} lower and {} upper bounds",
                n,
                self.lower.len(),
                self.upper.len()
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::Dimension(format!("row {i} has {} coefficients, expected {n}", c.coeffs.len())));
            }
        }
        Ok(())
    }

    /// Exact feasibility of a point.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let bounds_ok = x.iter().enumerate().all(|(j, v)| {
            self.lower[j].as_ref().is_none_or(|l| v >= l) && self.upper[j].as_ref().is_none_or(|u| v <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
                match c.sense {
                    Sense::Le => lhs <= c.rhs,
                    Sense::Ge => lhs >= c.rhs,
                    Sense::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Human-readable listing with exact fractions, one constraint per line.
    pub fn to_text(&self) -> String {
        let term = |coeffs: &[Rational]| {
            let parts: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(j, a)| format!("{} x{j}", display(a)))
                .collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        let mut s = format!("minimize {}\nsubject to\n", term(&self.objective));
        for c in &self.constraints {
            s.push_str(&format!("  {} {} {}\n", term(&c.coeffs), c.sense, display(&c.rhs)));
        }
        s.push_str("bounds\n");
        for j in 0..self.num_vars() {
            let lo = self.lower[j].as_ref().map_or("-inf".to_string(), display);
            let hi = self.upper[j].as_ref().map_or("+inf".to_string(), display);
            s.push_str(&format!("  {lo} <= x{j} <= {hi}\n"));
        }
        s
    }
}

/// How an original variable maps onto nonnegative tableau columns.
enum VarMap {
    /// `x = shift + col`
    Shifted { col: usize, shift: Rational },
    /// `x = shift - col` (only an upper bound was finite)
    Mirrored { col: usize, shift: Rational },
    /// `x = pos - neg`
    Split { pos: usize, neg: usize },
}

pub fn lp_solve_min(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.check_dimensions()?;
    let n = lp.num_vars();

    // Map every variable onto nonnegative structural columns.
    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0;
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for j in 0..n {
        match (&lp.lower[j], &lp.upper[j]) {
            (Some(l), u) => {
                if let Some(u) = u {
                    if u < l {
                        return Ok(LpOutcome::Infeasible);
                    }
                    bound_rows.push((ncols, u - l));
                }
                maps.push(VarMap::Shifted { col: ncols, shift: l.clone() });
                ncols += 1;
            }
            (None, Some(u)) => {
                maps.push(VarMap::Mirrored { col: ncols, shift: u.clone() });
                ncols += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split { pos: ncols, neg: ncols + 1 });
                ncols += 2;
            }
        }
    }

    // Structural rows: sum_k a_k x_k = sum over columns after substitution.
    let mut rows: Vec<(Vec<Rational>, Sense, Rational)> = Vec::new();
    let mut cost = vec![Rational::zero(); ncols];
    let mut cost_offset = Rational::zero();
    let substitute = |coeffs: &[Rational], out: &mut Vec<Rational>, offset: &mut Rational| {
        for (j, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &maps[j] {
                VarMap::Shifted { col, shift } => {
                    out[*col] += a;
                    *offset += a * shift;
                }
                VarMap::Mirrored { col, shift } => {
                    out[*col] -= a;
                    *offset += a * shift;
                }
                VarMap::Split { pos, neg } => {
                    out[*pos] += a;
                    out[*neg] -= a;
                }
            }
        }
    };
    substitute(&lp.objective, &mut cost, &mut cost_offset);
    for c in &lp.constraints {
        let mut row = vec![Rational::zero(); ncols];
        let mut offset = Rational::zero();
        substitute(&c.coeffs, &mut row, &mut offset);
        rows.push((row, c.sense, &c.rhs - offset));
    }
    for (col, cap) in bound_rows {
        let mut row = vec![Rational::zero(); ncols];
        row[col] = Rational::one();
        rows.push((row, Sense::Le, cap));
    }

    let Some(y) = Tableau::solve(ncols, &cost, rows)? else {
        return Ok(LpOutcome::Infeasible);
    };
    let Some(y) = y else {
        return Ok(LpOutcome::Unbounded);
    };

    let x: Vec<Rational> = maps
        .iter()
        .map(|m| match m {
            VarMap::Shifted { col, shift } => shift + &y[*col],
            VarMap::Mirrored { col, shift } => shift - &y[*col],
            VarMap::Split { pos, neg } => &y[*pos] - &y[*neg],
        })
        .collect();
    let value = lp.objective_value(&x);
    debug_assert!(lp.is_feasible(&x));
    Ok(LpOutcome::Optimal { value, x })
}

struct Tableau {
    /// Constraint rows over all columns; the right-hand side is kept apart.
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
    /// Columns allowed to enter the basis.
    active: Vec<bool>,
}

impl Tableau {
    /// `Ok(None)`: infeasible; `Ok(Some(None))`: unbounded; otherwise the
    /// optimal values of the `ncols` structural columns.
    #[allow(clippy::type_complexity)]
    fn solve(
        ncols: usize,
        cost: &[Rational],
        rows: Vec<(Vec<Rational>, Sense, Rational)>,
    ) -> Result<Option<Option<Vec<Rational>>>> {
        let m = rows.len();
        // Orient every row to a nonnegative right-hand side.
        let rows: Vec<_> = rows
            .into_iter()
            .map(|(r, s, b)| {
                if b.is_negative() {
                    let s = match s {
                        Sense::Le => Sense::Ge,
                        Sense::Ge => Sense::Le,
                        Sense::Eq => Sense::Eq,
                    };
                    (r.into_iter().map(|v| -v).collect::<Vec<_>>(), s, -b)
                } else {
                    (r, s, b)
                }
            })
            .collect();
        let nslack = rows.iter().filter(|(_, s, _)| *s != Sense::Eq).count();
        let nart = rows.iter().filter(|(_, s, _)| *s != Sense::Le).count();
        let total = ncols + nslack + nart;
        let art_start = ncols + nslack;

        let mut a = Vec::with_capacity(m);
        let mut b = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut next_slack, mut next_art) = (ncols, art_start);
        for (r, s, rhs) in rows {
            let mut row = r;
            row.resize(total, Rational::zero());
            match s {
                Sense::Le => {
                    row[next_slack] = Rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Sense::Ge => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Sense::Eq => {
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            a.push(row);
            b.push(rhs);
        }
        let mut t = Tableau { a, b, basis, active: vec![true; total] };

        if nart > 0 {
            let mut phase1 = vec![Rational::zero(); total];
            for c in &mut phase1[art_start..] {
                *c = Rational::one();
            }
            let (value, bounded) = t.optimize(&phase1);
            debug_assert!(bounded);
            if value.is_positive() {
                return Ok(None);
            }
            t.expel_artificials(art_start);
            for flag in &mut t.active[art_start..] {
                *flag = false;
            }
        }

        let mut phase2 = cost.to_vec();
        phase2.resize(total, Rational::zero());
        let (_, bounded) = t.optimize(&phase2);
        if !bounded {
            return Ok(Some(None));
        }
        let mut y = vec![Rational::zero(); ncols];
        for (i, &bv) in t.basis.iter().enumerate() {
            if bv < ncols {
                y[bv] = t.b[i].clone();
            }
        }
        Ok(Some(Some(y)))
    }

    /// Reduced costs of `cost` with respect to the current basis.
    fn reduced(&self, cost: &[Rational]) -> (Vec<Rational>, Rational) {
        let mut d = cost.to_vec();
        let mut z = Rational::zero();
        for (i, &bv) in self.basis.iter().enumerate() {
            let cb = &cost[bv];
            if cb.is_zero() {
                continue;
            }
            for (dj, aij) in d.iter_mut().zip(&self.a[i]) {
                if !aij.is_zero() {
                    *dj -= cb * aij;
                }
            }
            z += cb * &self.b[i];
        }
        (d, z)
    }

    /// Runs Bland pivots to optimality. Returns the objective value and
    /// whether the problem is bounded.
    fn optimize(&mut self, cost: &[Rational]) -> (Rational, bool) {
        let (mut d, mut z) = self.reduced(cost);
        loop {
            let Some(enter) = (0..d.len()).find(|&j| self.active[j] && d[j].is_negative()) else {
                return (z, true);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                let aie = &self.a[i][enter];
                if !aie.is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / aie;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return (z, false);
            };
            self.pivot(r, enter);
            // Update the cost row with the normalised pivot row.
            let de = d[enter].clone();
            if !de.is_zero() {
                for (dj, arj) in d.iter_mut().zip(&self.a[r]) {
                    if !arj.is_zero() {
                        *dj -= &de * arj;
                    }
                }
                z += &de * &self.b[r];
            }
        }
    }

    fn pivot(&mut self, r: usize, enter: usize) {
        let p = self.a[r][enter].clone();
        if !p.is_one() {
            for v in self.a[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
            self.b[r] /= &p;
        }
        let nz: Vec<usize> = (0..self.a[r].len()).filter(|&j| !self.a[r][j].is_zero()).collect();
        let (pivot_row, br) = (self.a[r].clone(), self.b[r].clone());
        for i in 0..self.a.len() {
            if i == r || self.a[i][enter].is_zero() {
                continue;
            }
            let f = self.a[i][enter].clone();
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                self.a[i][j] -= delta;
            }
            self.b[i] -= &f * &br;
        }
        self.basis[r] = enter;
    }

    /// After a zero-value phase one, pivots artificial columns out of the
    /// basis, dropping rows that turn out to be redundant.
    fn expel_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] >= art_start {
                match (0..art_start).find(|&j| !self.a[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.a.remove(i);
                        self.b.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn optimal(out: LpOutcome) -> (Rational, Vec<Rational>) {
        match out {
            LpOutcome::Optimal { value, x } => (value, x),
            other => panic!("expected optimum, got {}", other.status()),
        }
    }

    #[test]
    fn single_lower_bound_row() {
        let mut lp = LinearProgram::new(1);
        lp.objective = row(&[1]);
        lp.add_constraint(row(&[1]), Sense::Ge, int(3));
        assert_eq!(optimal(lp_solve_min(&lp).unwrap()).0, int(3));
    }

    #[test]
    fn two_line_intersection() {
        let mut lp = LinearProgram::new(2);
        lp.objective = row(&[1, 1]);
        lp.add_constraint(row(&[1, 2]), Sense::Ge, int(4));
        lp.add_constraint(row(&[2, 1]), Sense::Ge, int(4));
        let (v, x) = optimal(lp_solve_min(&lp).unwrap());
        assert_eq!(v, frac(8, 3));
        assert_eq!(x, vec![frac(4, 3), frac(4, 3)]);
        assert!(lp.is_feasible(&x));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.objective = row(&[1]);
        lp.add_constraint(row(&[1]), Sense::Le, int(-1));
        assert_eq!(lp_solve_min(&lp).unwrap(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(1);
        lp.objective = row(&[-1]);
        lp.add_constraint(row(&[1]), Sense::Ge, int(1));
        assert_eq!(lp_solve_min(&lp).unwrap(), LpOutcome::Unbounded);

        let mut lp = LinearProgram::new(1);
        lp.lower[0] = Some(int(2));
        lp.upper[0] = Some(int(1));
        assert_eq!(lp_solve_min(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn equality_rows_free_and_shifted_variables() {
        // min x - y  s.t.  x + y = 1,  -2 <= x,  y free, y <= 5
        let mut lp = LinearProgram::new(2);
        lp.objective = row(&[1, -1]);
        lp.add_constraint(row(&[1, 1]), Sense::Eq, int(1));
        lp.lower = vec![Some(int(-2)), None];
        lp.upper = vec![None, Some(int(5))];
        let (v, x) = optimal(lp_solve_min(&lp).unwrap());
        assert_eq!(x, vec![int(-2), int(3)]);
        assert_eq!(v, int(-5));

        // Free variable only: min |x - 7/2| style via two rows.
        let mut lp = LinearProgram::new(2);
        lp.objective = row(&[0, 1]);
        lp.lower = vec![None, None];
        lp.add_constraint(vec![int(1), int(-1)], Sense::Le, frac(-7, 2));
        lp.add_constraint(vec![int(-1), int(-1)], Sense::Le, frac(7, 2));
        let (v, _) = optimal(lp_solve_min(&lp).unwrap());
        assert_eq!(v, int(0));
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.objective = row(&[1, 2]);
        lp.add_constraint(row(&[1, 1]), Sense::Eq, int(2));
        lp.add_constraint(row(&[2, 2]), Sense::Eq, int(4));
        let (v, x) = optimal(lp_solve_min(&lp).unwrap());
        assert_eq!(v, int(2));
        assert_eq!(x, row(&[2, 0]));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::new(4);
        lp.objective = vec![frac(-3, 4), int(150), frac(-1, 50), int(6)];
        lp.add_constraint(vec![frac(1, 4), int(-60), frac(-1, 25), int(9)], Sense::Le, int(0));
        lp.add_constraint(vec![frac(1, 2), int(-90), frac(-1, 50), int(3)], Sense::Le, int(0));
        lp.add_constraint(vec![int(0), int(0), int(1), int(0)], Sense::Le, int(1));
        let (v, x) = optimal(lp_solve_min(&lp).unwrap());
        assert_eq!(v, frac(-1, 20));
        assert!(lp.is_feasible(&x));
    }

    #[test]
    fn dimension_errors() {
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(row(&[1]), Sense::Le, int(1));
        assert!(matches!(lp_solve_min(&lp), Err(Error::Dimension(_))));
    }

    #[test]
    fn text_dump() {
        let mut lp = LinearProgram::new(2);
        lp.objective = row(&[2, 3]);
        lp.upper[1] = Some(int(1));
        lp.add_constraint(vec![int(1), frac(1, 2)], Sense::Ge, int(1));
        let text = lp.to_text();
        assert!(text.contains("minimize 2 x0 + 3 x1"));
        assert!(text.contains("1 x0 + 1/2 x1 >= 1"));
        assert!(text.contains("0 <= x1 <= 1"));
    }
}
