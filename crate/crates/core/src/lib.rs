//! Exact decision procedures for the thermal quasiorder on quasiclassical
//! resources, together with the work-gain linear program and its special
//! cases.
//!
//! All probabilities, Gibbs weights and LP data are exact [`Rational`]s.
//! Transcendental quantities (logarithms, exponentials) are evaluated in
//! [`Real`], a fixed high-precision binary float, and are only used for
//! display or for monotones that are inherently non-rational.

pub mod error;
pub mod lp;
pub mod monotones;
pub mod quasiorder;
pub mod rational;
pub mod real;
pub mod resource;
pub mod workcost;

pub use error::{Error, Result};
pub use lp::{check_solution, solve, LinearProgram, LpSolution, LpStatus};
pub use monotones::{
    f_divergence, relative_entropy, renyi_divergence, ConvexFunction, Monotone, MonotoneRegistry,
    MonotoneValue, Value,
};
pub use quasiorder::{
    convertible_lp, hinge_condition_d, hinge_condition_e, lorenz_curve, lorenz_dominates,
    two_level_kink, Criterion, CriterionRegistry, GibbsStochasticMap, LorenzCurve,
};
pub use rational::Rational;
pub use real::Real;
pub use resource::{
    decreasing_rearrangement, gibbs_from_hamiltonian, make_resource, ratio_profile, Hamiltonian,
    RatioProfile, ResourceState,
};
pub use workcost::{
    landauer_cost, lift_threshold, lift_to_thermal_map, work_cost, work_gain_consistency,
    work_gain_lp, work_value, LiftChecks, LiftedMap, WorkResult,
};
