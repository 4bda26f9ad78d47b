//! Exact two-phase simplex over [`Rational`].
//!
//! Problems have the form
//!
//! ```text
//! minimize    c . x
//! subject to  A_eq x  = b_eq
//!             A_le x <= b_le
//!             x >= 0
//! ```
//!
//! The solver works on a dense tableau and uses Bland's rule for both the
//! entering and leaving variable, so it terminates on degenerate problems.
//! Every row gets an artificial variable in phase 1; the final phase-1
//! reduced costs of those artificials give the dual vector used as a Farkas
//! certificate when the problem is infeasible.

use crate::error::{Error, Result};
use crate::rational::{dot, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub eq_matrix: Vec<Vec<Rational>>,
    pub eq_rhs: Vec<Rational>,
    pub le_matrix: Vec<Vec<Rational>>,
    pub le_rhs: Vec<Rational>,
    pub num_vars: usize,
}

impl LinearProgram {
    /// A program in `num_vars` variables with zero objective and no rows.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            objective: vec![Rational::zero(); num_vars],
            num_vars,
            ..Default::default()
        }
    }

    pub fn minimize(mut self, objective: Vec<Rational>) -> Self {
        self.objective = objective;
        self
    }

    pub fn add_eq(&mut self, row: Vec<Rational>, rhs: Rational) {
        self.eq_matrix.push(row);
        self.eq_rhs.push(rhs);
    }

    pub fn add_le(&mut self, row: Vec<Rational>, rhs: Rational) {
        self.le_matrix.push(row);
        self.le_rhs.push(rhs);
    }

    /// Adds `row . x >= rhs` as `-row . x <= -rhs`.
    pub fn add_ge(&mut self, row: Vec<Rational>, rhs: Rational) {
        self.add_le(row.into_iter().map(|x| -x).collect(), -rhs);
    }

    pub fn num_rows(&self) -> usize {
        self.eq_matrix.len() + self.le_matrix.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars;
        if self.objective.len() != n {
            return Err(Error::MalformedLp(format!(
                "objective has {} entries for {n} variables",
                self.objective.len()
            )));
        }
        if self.eq_matrix.len() != self.eq_rhs.len() || self.le_matrix.len() != self.le_rhs.len() {
            return Err(Error::MalformedLp(
                "row and right-hand side counts differ".into(),
            ));
        }
        let rows = self.eq_matrix.iter().chain(&self.le_matrix);
        if let Some((i, row)) = rows.enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedLp(format!(
                "row {i} has {} entries for {n} variables",
                row.len()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of [`solve`].
///
/// * `Optimal`: `point` is an optimal basic feasible solution and `optimum`
///   its objective value.
/// * `Infeasible`: `certificate` holds `y = (y_eq, y_le)` with `y_le >= 0`,
///   `y^T A >= 0` and `y^T b < 0`.
/// * `Unbounded`: `point` is feasible and `certificate` holds a direction
///   `d >= 0` with `A_eq d = 0`, `A_le d <= 0` and `c . d < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub optimum: Option<Rational>,
    pub point: Option<Vec<Rational>>,
    pub certificate: Option<Vec<Rational>>,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// reduced costs followed by `-z`
    cost: Vec<Rational>,
    basis: Vec<usize>,
    num_cols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.num_cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip().expect("nonzero pivot");
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            eliminate(row, &pivot_row, c);
        }
        if !self.cost[c].is_zero() {
            eliminate(&mut self.cost, &pivot_row, c);
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Runs Bland's rule over columns `0..allowed` until optimal. Returns the
    /// entering column when an unbounded direction is found.
    fn optimize(&mut self, allowed: usize) -> Option<usize> {
        loop {
            let c = (0..allowed).find(|&j| self.cost[j].is_negative())?;
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.num_cols] / &row[c];
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Some(c),
            }
        }
    }
}

fn eliminate(row: &mut [Rational], pivot_row: &[Rational], c: usize) {
    let factor = row[c].clone();
    for (x, p) in row.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *x -= &(&factor * p);
        }
    }
}

/// Solves `lp` exactly. Errors only on malformed input.
pub fn solve(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;
    let n = lp.num_vars;
    let m_eq = lp.eq_matrix.len();
    let m_le = lp.le_matrix.len();
    let m = m_eq + m_le;
    // columns: original | slacks | artificials | rhs
    let slack0 = n;
    let art0 = n + m_le;
    let num_cols = art0 + m;

    let mut flipped = vec![false; m];
    let mut rows = Vec::with_capacity(m);
    let sources = lp
        .eq_matrix
        .iter()
        .zip(&lp.eq_rhs)
        .chain(lp.le_matrix.iter().zip(&lp.le_rhs));
    for (i, (coeffs, rhs)) in sources.enumerate() {
        let mut row = vec![Rational::zero(); num_cols + 1];
        row[..n].clone_from_slice(coeffs);
        if i >= m_eq {
            row[slack0 + i - m_eq] = Rational::one();
        }
        row[num_cols] = rhs.clone();
        if rhs.is_negative() {
            flipped[i] = true;
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        row[art0 + i] = Rational::one();
        rows.push(row);
    }

    // phase 1: minimize the sum of artificials
    let mut cost = vec![Rational::zero(); num_cols + 1];
    for row in &rows {
        for (j, x) in row.iter().enumerate() {
            if j < art0 || j == num_cols {
                cost[j] -= x;
            }
        }
    }
    let mut tab = Tableau {
        rows,
        cost,
        basis: (art0..art0 + m).collect(),
        num_cols,
    };
    tab.optimize(art0);

    let infeasibility = -&tab.cost[num_cols];
    if infeasibility.is_positive() {
        // w_i = 1 - d_art_i is the phase-1 dual; y = -S w in original signs
        let certificate = (0..m)
            .map(|i| {
                let w = Rational::one() - &tab.cost[art0 + i];
                if flipped[i] {
                    w
                } else {
                    -w
                }
            })
            .collect();
        return Ok(LpSolution {
            status: LpStatus::Infeasible,
            optimum: None,
            point: None,
            certificate: Some(certificate),
        });
    }

    // Drive zero-level artificials out of the basis where possible. Rows
    // with no nonzero structural entry are redundant and stay inert.
    for r in 0..m {
        if tab.basis[r] >= art0 {
            if let Some(c) = (0..art0).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, c);
            }
        }
    }

    // phase 2
    let mut cost = vec![Rational::zero(); num_cols + 1];
    cost[..n].clone_from_slice(&lp.objective);
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n && !lp.objective[b].is_zero() {
            let cb = lp.objective[b].clone();
            for (x, a) in cost.iter_mut().zip(&tab.rows[r]) {
                if !a.is_zero() {
                    *x -= &(&cb * a);
                }
            }
        }
    }
    tab.cost = cost;
    let unbounded = tab.optimize(art0);

    let mut point = vec![Rational::zero(); n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            point[b] = tab.rhs(r).clone();
        }
    }

    if let Some(c) = unbounded {
        let mut ray = vec![Rational::zero(); n];
        if c < n {
            ray[c] = Rational::one();
        }
        for (r, &b) in tab.basis.iter().enumerate() {
            if b < n {
                ray[b] = -&tab.rows[r][c];
            }
        }
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            optimum: None,
            point: Some(point),
            certificate: Some(ray),
        });
    }

    let optimum = dot(&lp.objective, &point);
    Ok(LpSolution {
        status: LpStatus::Optimal,
        optimum: Some(optimum),
        point: Some(point),
        certificate: None,
    })
}

fn is_feasible(lp: &LinearProgram, x: &[Rational]) -> bool {
    x.len() == lp.num_vars
        && x.iter().all(|v| !v.is_negative())
        && lp
            .eq_matrix
            .iter()
            .zip(&lp.eq_rhs)
            .all(|(row, b)| dot(row, x) == *b)
        && lp
            .le_matrix
            .iter()
            .zip(&lp.le_rhs)
            .all(|(row, b)| dot(row, x) <= *b)
}

/// Re-checks a solution's defining (in)equalities in exact arithmetic.
pub fn check_solution(lp: &LinearProgram, sol: &LpSolution) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    match sol.status {
        LpStatus::Optimal => match (&sol.point, &sol.optimum) {
            (Some(x), Some(opt)) => is_feasible(lp, x) && dot(&lp.objective, x) == *opt,
            _ => false,
        },
        LpStatus::Infeasible => {
            let Some(y) = &sol.certificate else {
                return false;
            };
            let m_eq = lp.eq_matrix.len();
            if y.len() != lp.num_rows() || y[m_eq..].iter().any(Rational::is_negative) {
                return false;
            }
            let rows: Vec<&Vec<Rational>> = lp.eq_matrix.iter().chain(&lp.le_matrix).collect();
            let columns_ok = (0..lp.num_vars).all(|j| {
                let s: Rational = rows.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
                !s.is_negative()
            });
            let rhs: Vec<Rational> = lp.eq_rhs.iter().chain(&lp.le_rhs).cloned().collect();
            columns_ok && dot(y, &rhs).is_negative()
        }
        LpStatus::Unbounded => {
            let (Some(x), Some(d)) = (&sol.point, &sol.certificate) else {
                return false;
            };
            let zero = Rational::zero();
            is_feasible(lp, x)
                && d.len() == lp.num_vars
                && d.iter().all(|v| !v.is_negative())
                && lp.eq_matrix.iter().all(|row| dot(row, d) == zero)
                && lp.le_matrix.iter().all(|row| dot(row, d) <= zero)
                && dot(&lp.objective, d).is_negative()
        }
    }
}
