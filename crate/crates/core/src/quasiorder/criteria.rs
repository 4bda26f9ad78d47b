use crate::error::{Error, Result};
use crate::resource::ResourceState;

use super::{convertible_lp, hinge_condition_d, hinge_condition_e, lorenz_curve, lorenz_dominates};

/// One way of deciding whether `from` can be thermally converted into `to`.
pub trait Criterion: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn decide(&self, from: &ResourceState, to: &ResourceState) -> bool;
}

struct LpFeasibility;

impl Criterion for LpFeasibility {
    fn name(&self) -> &'static str {
        "lp"
    }

    fn description(&self) -> &'static str {
        "Gibbs-stochastic matrix exists (exact LP feasibility)"
    }

    fn decide(&self, from: &ResourceState, to: &ResourceState) -> bool {
        convertible_lp(from, to).0
    }
}

struct LorenzDomination;

impl Criterion for LorenzDomination {
    fn name(&self) -> &'static str {
        "lorenz"
    }

    fn description(&self) -> &'static str {
        "Lorenz curve of the source lies on or above the target's"
    }

    fn decide(&self, from: &ResourceState, to: &ResourceState) -> bool {
        lorenz_dominates(&lorenz_curve(from), &lorenz_curve(to))
    }
}

struct HingeD;

impl Criterion for HingeD {
    fn name(&self) -> &'static str {
        "hinge-d"
    }

    fn description(&self) -> &'static str {
        "sum g'(r'-t)+ <= sum g(r-t)+ for all t"
    }

    fn decide(&self, from: &ResourceState, to: &ResourceState) -> bool {
        hinge_condition_d(from, to)
    }
}

struct HingeE;

impl Criterion for HingeE {
    fn name(&self) -> &'static str {
        "hinge-e"
    }

    fn description(&self) -> &'static str {
        "sum g'|r'-t| <= sum g|r-t| for all t"
    }

    fn decide(&self, from: &ResourceState, to: &ResourceState) -> bool {
        hinge_condition_e(from, to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub criterion: &'static str,
    pub convertible: bool,
}

/// Named convertibility criteria, kept in registration order.
pub struct CriterionRegistry {
    entries: Vec<Box<dyn Criterion>>,
}

impl CriterionRegistry {
    pub fn new() -> Self {
        CriterionRegistry {
            entries: Vec::new(),
        }
    }

    /// `lp`, `lorenz`, `hinge-d`, `hinge-e`.
    pub fn standard() -> Self {
        let mut reg = CriterionRegistry::new();
        reg.register(Box::new(LpFeasibility));
        reg.register(Box::new(LorenzDomination));
        reg.register(Box::new(HingeD));
        reg.register(Box::new(HingeE));
        reg
    }

    /// Adds `criterion`, replacing any entry of the same name in place.
    pub fn register(&mut self, criterion: Box<dyn Criterion>) {
        match self
            .entries
            .iter()
            .position(|c| c.name() == criterion.name())
        {
            Some(i) => self.entries[i] = criterion,
            None => self.entries.push(criterion),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Criterion> {
        self.entries
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Criterion> {
        self.entries.iter().map(|c| c.as_ref())
    }

    /// Keeps only the named criteria, in the order given.
    pub fn select(mut self, names: &[&str]) -> Result<Self> {
        let mut picked = Vec::with_capacity(names.len());
        for name in names {
            let i = self
                .entries
                .iter()
                .position(|c| c.name() == *name)
                .ok_or_else(|| Error::UnknownStrategy {
                    kind: "criterion",
                    name: name.to_string(),
                })?;
            picked.push(self.entries.remove(i));
        }
        Ok(CriterionRegistry { entries: picked })
    }

    pub fn evaluate(&self, from: &ResourceState, to: &ResourceState) -> Vec<Verdict> {
        self.entries
            .iter()
            .map(|c| Verdict {
                criterion: c.name(),
                convertible: c.decide(from, to),
            })
            .collect()
    }
}

impl Default for CriterionRegistry {
    fn default() -> Self {
        Self::standard()
    }
}
