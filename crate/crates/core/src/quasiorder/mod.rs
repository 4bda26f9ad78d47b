//! The thermal quasiorder on quasiclassical resources: Lorenz curves, the
//! Gibbs-stochastic feasibility problem, the hinge-function criteria, and a
//! registry that runs them side by side.

mod criteria;
mod feasibility;
mod hinge;
mod kink;
mod lorenz;

pub use criteria::{Criterion, CriterionRegistry, Verdict};
pub use feasibility::{convertible_lp, gibbs_stochastic_program, GibbsStochasticMap};
pub use hinge::{abs_sum, hinge_breakpoints, hinge_condition_d, hinge_condition_e, hinge_sum};
pub use kink::{two_level_kink, two_level_resource};
pub use lorenz::{lorenz_curve, lorenz_dominates, LorenzCurve};
