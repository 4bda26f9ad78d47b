//! Work gain and cost of transformations between resources.
//!
//! The optimal work is `-(1/β) ln x*`, where `x*` minimizes `x` subject to
//!
//! ```text
//! F p  = p'
//! F g <= x g'
//! e^T F <= e^T
//! x, F >= 0
//! ```
//!
//! `x*` is exact; the logarithm is only evaluated for reporting.

mod lift;

pub use lift::{lift_threshold, lift_to_thermal_map, LiftChecks, LiftedMap};

use crate::error::{Error, Result};
use crate::lp::{solve, LinearProgram};
use crate::quasiorder::convertible_lp;
use crate::rational::{dot, Rational};
use crate::real::Real;
use crate::resource::ResourceState;

#[derive(Clone, Debug, PartialEq)]
pub struct WorkResult {
    /// Optimal value of the work program; `x* <= 1` means work can be
    /// extracted.
    pub x_star: Rational,
    /// `-(1/β) ln x*`; negative values are costs.
    pub work_gain: Real,
    /// `n' x n` matrix attaining `x_star`.
    pub witness_f: Vec<Vec<Rational>>,
    pub beta: Real,
}

impl WorkResult {
    fn new(x_star: Rational, witness_f: Vec<Vec<Rational>>, beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidBeta(beta));
        }
        let beta = Real::from_f64(beta).expect("finite");
        let work_gain = -(Real::from_rational(&x_star).ln() / beta.clone());
        Ok(WorkResult {
            x_star,
            work_gain,
            witness_f,
            beta,
        })
    }

    /// `-work_gain`.
    pub fn work_cost(&self) -> Real {
        -&self.work_gain
    }

    /// Checks `F p = p'`, `F g <= x g'`, column sums `<= 1` and `F >= 0`
    /// exactly against the given states.
    pub fn witness_is_valid(&self, from: &ResourceState, to: &ResourceState) -> bool {
        witness_is_valid(&self.witness_f, &self.x_star, from, to)
    }
}

pub(crate) fn witness_is_valid(
    f: &[Vec<Rational>],
    x: &Rational,
    from: &ResourceState,
    to: &ResourceState,
) -> bool {
    let n = from.len();
    if f.len() != to.len() || f.iter().any(|row| row.len() != n) {
        return false;
    }
    if f.iter().flatten().any(Rational::is_negative) || !x.is_positive() {
        return false;
    }
    let maps_p = f
        .iter()
        .zip(to.p())
        .all(|(row, t)| dot(row, from.p()) == *t);
    let bounded = f
        .iter()
        .zip(to.g())
        .all(|(row, t)| dot(row, from.g()) <= x * t);
    let columns = (0..n).all(|j| f.iter().map(|row| &row[j]).sum::<Rational>() <= Rational::one());
    maps_p && bounded && columns
}

/// The work program in variables `(F row-major, x)`, minimizing `x`.
pub fn work_gain_program(from: &ResourceState, to: &ResourceState) -> LinearProgram {
    let n = from.len();
    let m = to.len();
    let nv = n * m + 1;
    let mut objective = vec![Rational::zero(); nv];
    objective[nv - 1] = Rational::one();
    let mut lp = LinearProgram::new(nv).minimize(objective);
    for (i, target) in to.p().iter().enumerate() {
        let mut row = vec![Rational::zero(); nv];
        row[i * n..(i + 1) * n].clone_from_slice(from.p());
        lp.add_eq(row, target.clone());
    }
    for (i, target) in to.g().iter().enumerate() {
        let mut row = vec![Rational::zero(); nv];
        row[i * n..(i + 1) * n].clone_from_slice(from.g());
        row[nv - 1] = -target;
        lp.add_le(row, Rational::zero());
    }
    for j in 0..n {
        let mut row = vec![Rational::zero(); nv];
        for i in 0..m {
            row[i * n + j] = Rational::one();
        }
        lp.add_le(row, Rational::one());
    }
    lp
}

/// Solves the work program exactly. It is always feasible
/// (`F = p' e^T` with `x = max_i p'_i / g'_i`), so the optimum always exists.
pub fn work_gain_lp(from: &ResourceState, to: &ResourceState, beta: f64) -> Result<WorkResult> {
    let lp = work_gain_program(from, to);
    let sol = solve(&lp)?;
    let point = sol
        .point
        .filter(|_| sol.status == crate::lp::LpStatus::Optimal)
        .expect("work program is feasible and bounded below by 0");
    let n = from.len();
    let x_star = point[point.len() - 1].clone();
    let witness = point[..point.len() - 1]
        .chunks(n)
        .map(<[Rational]>::to_vec)
        .collect();
    WorkResult::new(x_star, witness, beta)
}

/// Work extractable by taking `r` to the trivial resource:
/// `x* = sum of g_i over the support of p`.
pub fn work_value(r: &ResourceState, beta: f64) -> Result<WorkResult> {
    let indicator: Vec<Rational> = r
        .p()
        .iter()
        .map(|p| {
            if p.is_zero() {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .collect();
    let x_star = dot(&indicator, r.g());
    WorkResult::new(x_star, vec![indicator], beta)
}

/// Work needed to create `r` from the trivial resource:
/// `x* = max_i p_i / g_i`.
pub fn work_cost(r: &ResourceState, beta: f64) -> Result<WorkResult> {
    let column = r.p().iter().map(|p| vec![p.clone()]).collect();
    WorkResult::new(r.max_ratio(), column, beta)
}

/// `x*` of erasing an arbitrary distribution over `n_levels` degenerate
/// levels to the first level.
///
/// A single `F` has to send every input to `e_1`, which forces `F = e_1 e^T`;
/// the returned value is the optimum of that universal program and equals
/// `n_levels`.
pub fn landauer_cost(n_levels: usize) -> Result<Rational> {
    if n_levels < 2 {
        return Err(Error::TooFewLevels(n_levels));
    }
    let n = n_levels;
    let nv = n * n + 1;
    let uniform = Rational::frac(1, n as i64);
    let mut objective = vec![Rational::zero(); nv];
    objective[nv - 1] = Rational::one();
    let mut lp = LinearProgram::new(nv).minimize(objective);
    // F e_j = e_1 for every j
    for j in 0..n {
        for i in 0..n {
            let mut row = vec![Rational::zero(); nv];
            row[i * n + j] = Rational::one();
            let rhs = if i == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            lp.add_eq(row, rhs);
        }
    }
    for i in 0..n {
        let mut row = vec![Rational::zero(); nv];
        for j in 0..n {
            row[i * n + j] = uniform.clone();
        }
        row[nv - 1] = -&uniform;
        lp.add_le(row, Rational::zero());
    }
    for j in 0..n {
        let mut row = vec![Rational::zero(); nv];
        for i in 0..n {
            row[i * n + j] = Rational::one();
        }
        lp.add_le(row, Rational::one());
    }
    let sol = solve(&lp)?;
    Ok(sol.optimum.expect("universal erasure program is feasible"))
}

/// Cross-checks the work program against the order and the closed forms:
/// `convertible ⇔ x* <= 1`, and against the trivial resource the program
/// reproduces [`work_value`] and [`work_cost`] exactly.
pub fn work_gain_consistency(from: &ResourceState, to: &ResourceState) -> bool {
    let check = || -> Result<bool> {
        let trivial = ResourceState::trivial();
        let x = work_gain_lp(from, to, 1.0)?.x_star;
        let order_ok = convertible_lp(from, to).0 == (x <= Rational::one());
        let value_ok = work_gain_lp(from, &trivial, 1.0)?.x_star == work_value(from, 1.0)?.x_star;
        let cost_ok = work_gain_lp(&trivial, to, 1.0)?.x_star == work_cost(to, 1.0)?.x_star;
        Ok(order_ok && value_ok && cost_ok)
    };
    check().unwrap_or(false)
}
