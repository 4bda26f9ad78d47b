//! Lifting a solution `(x, F)` of the work program to a Gibbs-stochastic
//! map on system ⊗ weight.
//!
//! The weight is a two-level system with gap `E`; everything is
//! parametrized by `ε = e^{-βE}` so the construction stays rational. The
//! weight index is the outer one: block row/column 0 is the weight's ground
//! level, block 1 its excited level. With `v = x g' - F g` and
//! `u^T = e^T - e^T F`,
//!
//! ```text
//! G = | t g' e^T    g' u^T |
//!     | ε v e^T     F      |
//! ```
//!
//! with `t = 1 - ε e^T v`. The map sends `(0, 1) ⊗ p` to `(0, 1) ⊗ p'` and
//! the joint Gibbs vector `(1, ε) ⊗ g / Z_E` to `(1, y ε) ⊗ g' / Z_{E+W}`,
//! where `y = x / (1 + ε (1 - x))` plays the role of `e^{-βW}`.

use crate::error::{Error, Result};
use crate::rational::{dot, Rational};
use crate::resource::ResourceState;

use super::{witness_is_valid, WorkResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedMap {
    /// `2n' x 2n`, weight-major block layout.
    pub matrix: Vec<Vec<Rational>>,
    pub epsilon: Rational,
    pub x: Rational,
    pub y: Rational,
    pub t: Rational,
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
}

/// Outcome of checking every property of a [`LiftedMap`] exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftChecks {
    pub nonnegative: bool,
    pub column_sums: bool,
    pub maps_resource: bool,
    pub maps_gibbs: bool,
    pub z_ratio_identity: bool,
}

impl LiftChecks {
    pub fn all(&self) -> bool {
        self.nonnegative
            && self.column_sums
            && self.maps_resource
            && self.maps_gibbs
            && self.z_ratio_identity
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.nonnegative, "nonnegative"),
            (self.column_sums, "column sums"),
            (self.maps_resource, "resource action"),
            (self.maps_gibbs, "Gibbs action"),
            (self.z_ratio_identity, "partition-function identity"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

fn weighted(weight: (&Rational, &Rational), v: &[Rational]) -> Vec<Rational> {
    let (w0, w1) = weight;
    v.iter()
        .map(|x| w0 * x)
        .chain(v.iter().map(|x| w1 * x))
        .collect()
}

impl LiftedMap {
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.iter().map(|row| dot(row, v)).collect()
    }

    /// `Z_E / Z_{E+W} = (1 + ε) / (1 + ε y)`.
    pub fn z_ratio(&self) -> Rational {
        let one = Rational::one();
        (&one + &self.epsilon) / (&one + &(&self.epsilon * &self.y))
    }

    pub fn check(&self, from: &ResourceState, to: &ResourceState) -> LiftChecks {
        let one = Rational::one();
        let zero = Rational::zero();
        let cols = 2 * from.len();
        let shaped =
            self.matrix.len() == 2 * to.len() && self.matrix.iter().all(|row| row.len() == cols);
        if !shaped {
            return LiftChecks {
                nonnegative: false,
                column_sums: false,
                maps_resource: false,
                maps_gibbs: false,
                z_ratio_identity: false,
            };
        }
        let nonnegative = self.matrix.iter().flatten().all(|x| !x.is_negative());
        let column_sums =
            (0..cols).all(|j| self.matrix.iter().map(|row| &row[j]).sum::<Rational>() == one);
        let maps_resource =
            self.apply(&weighted((&zero, &one), from.p())) == weighted((&zero, &one), to.p());

        let z_e = &one + &self.epsilon;
        let z_ew = &one + &(&self.epsilon * &self.y);
        let joint_gibbs: Vec<Rational> = weighted((&one, &self.epsilon), from.g())
            .into_iter()
            .map(|x| x / &z_e)
            .collect();
        let target: Vec<Rational> = weighted((&one, &(&self.y * &self.epsilon)), to.g())
            .into_iter()
            .map(|x| x / &z_ew)
            .collect();
        let maps_gibbs = self.apply(&joint_gibbs) == target;

        let z_ratio_identity =
            &self.t + &(&self.epsilon * &dot(&self.u, from.g())) == self.z_ratio();
        LiftChecks {
            nonnegative,
            column_sums,
            maps_resource,
            maps_gibbs,
            z_ratio_identity,
        }
    }
}

fn slack_vector(result: &WorkResult, from: &ResourceState, to: &ResourceState) -> Vec<Rational> {
    result
        .witness_f
        .iter()
        .zip(to.g())
        .map(|(row, gp)| &result.x_star * gp - dot(row, from.g()))
        .collect()
}

/// Largest admissible `ε` (exclusive): `1 / e^T v`, or `None` when `v = 0`
/// and every `ε` works.
pub fn lift_threshold(
    result: &WorkResult,
    from: &ResourceState,
    to: &ResourceState,
) -> Result<Option<Rational>> {
    if !witness_is_valid(&result.witness_f, &result.x_star, from, to) {
        return Err(Error::InvalidWitness(
            "F must satisfy F p = p', F g <= x g', e^T F <= e^T, F >= 0".into(),
        ));
    }
    let total: Rational = slack_vector(result, from, to).iter().sum();
    Ok(if total.is_zero() {
        None
    } else {
        Some(total.recip()?)
    })
}

/// Builds the block matrix for the given `ε ∈ (0, 1)` and verifies every
/// property exactly before returning it.
pub fn lift_to_thermal_map(
    result: &WorkResult,
    from: &ResourceState,
    to: &ResourceState,
    epsilon: &Rational,
) -> Result<LiftedMap> {
    if !epsilon.is_positive() || *epsilon >= Rational::one() {
        return Err(Error::EpsilonOutOfRange(epsilon.clone()));
    }
    if let Some(threshold) = lift_threshold(result, from, to)? {
        if *epsilon >= threshold {
            return Err(Error::EpsilonTooLarge {
                epsilon: Box::new(epsilon.clone()),
                threshold: Box::new(threshold),
            });
        }
    }

    let n = from.len();
    let one = Rational::one();
    let f = &result.witness_f;
    let x = result.x_star.clone();
    let v = slack_vector(result, from, to);
    let u: Vec<Rational> = (0..n)
        .map(|j| &one - &f.iter().map(|row| &row[j]).sum::<Rational>())
        .collect();
    let t = &one - &(epsilon * &v.iter().sum::<Rational>());
    let y = &x / &(&one + &(epsilon * &(&one - &x)));

    let mut matrix = Vec::with_capacity(2 * to.len());
    for gp in to.g() {
        let row = std::iter::repeat_n(&t * gp, n)
            .chain(u.iter().map(|uj| gp * uj))
            .collect();
        matrix.push(row);
    }
    for (vi, f_row) in v.iter().zip(f) {
        let row = std::iter::repeat_n(epsilon * vi, n)
            .chain(f_row.iter().cloned())
            .collect();
        matrix.push(row);
    }

    let lifted = LiftedMap {
        matrix,
        epsilon: epsilon.clone(),
        x,
        y,
        t,
        u,
        v,
    };
    let checks = lifted.check(from, to);
    if !checks.all() {
        return Err(Error::LiftVerification(checks.failures().join(", ")));
    }
    Ok(lifted)
}
