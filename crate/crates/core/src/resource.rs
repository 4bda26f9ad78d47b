//! Resource states `(p, g)`, Hamiltonians and the ratio data derived from
//! them.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::Real;

/// A quasiclassical resource: a distribution `p` together with the Gibbs
/// distribution `g` of its Hamiltonian at the background temperature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResourceState {
    p: Vec<Rational>,
    g: Vec<Rational>,
    label: Option<String>,
}

/// Validates `p` and `g` and builds a [`ResourceState`].
///
/// `p` may contain zeros; every Gibbs weight must be strictly positive.
pub fn make_resource(p: Vec<Rational>, g: Vec<Rational>) -> Result<ResourceState> {
    if p.len() != g.len() {
        return Err(Error::LengthMismatch {
            p: p.len(),
            g: g.len(),
        });
    }
    if p.is_empty() {
        return Err(Error::Empty);
    }
    if let Some((index, value)) = p.iter().enumerate().find(|(_, x)| x.is_negative()) {
        return Err(Error::NegativeProbability {
            index,
            value: value.clone(),
        });
    }
    if let Some((index, value)) = g.iter().enumerate().find(|(_, x)| !x.is_positive()) {
        return Err(Error::NonPositiveGibbs {
            index,
            value: value.clone(),
        });
    }
    let total: Rational = p.iter().sum();
    if !total.is_one() {
        return Err(Error::NotNormalized(total));
    }
    let total: Rational = g.iter().sum();
    if !total.is_one() {
        return Err(Error::GibbsNotNormalized(total));
    }
    Ok(ResourceState { p, g, label: None })
}

impl ResourceState {
    /// The Gibbs state itself, `p = g`.
    pub fn gibbs(g: Vec<Rational>) -> Result<Self> {
        make_resource(g.clone(), g)
    }

    /// The one-level resource `p = g = (1)`.
    pub fn trivial() -> Self {
        ResourceState {
            p: vec![Rational::one()],
            g: vec![Rational::one()],
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn g(&self) -> &[Rational] {
        &self.g
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// `r_i = p_i / g_i`.
    pub fn ratios(&self) -> Vec<Rational> {
        self.p.iter().zip(&self.g).map(|(p, g)| p / g).collect()
    }

    pub fn max_ratio(&self) -> Rational {
        self.ratios().into_iter().max().expect("non-empty state")
    }

    /// The state with the same Gibbs vector and `p = g`.
    pub fn gibbs_state(&self) -> ResourceState {
        ResourceState {
            p: self.g.clone(),
            g: self.g.clone(),
            label: None,
        }
    }
}

/// Energy levels at inverse temperature `beta`. Only the product `beta * E`
/// matters, so units are left to the caller.
#[derive(Clone, Debug, PartialEq)]
pub struct Hamiltonian {
    levels: Vec<f64>,
    beta: f64,
    precision: u32,
}

/// Gibbs weights are rounded to at most this many decimal digits; the
/// working precision of [`Real`] does not support more.
pub const MAX_GIBBS_PRECISION: u32 = 60;

impl Hamiltonian {
    pub fn new(levels: Vec<f64>, beta: f64, precision: u32) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidHamiltonian("no energy levels".into()));
        }
        if let Some(e) = levels.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidHamiltonian(format!(
                "energy {e} is not finite"
            )));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidHamiltonian(format!(
                "beta must be positive and finite, got {beta}"
            )));
        }
        if precision == 0 || precision > MAX_GIBBS_PRECISION {
            return Err(Error::InvalidHamiltonian(format!(
                "precision must be in 1..={MAX_GIBBS_PRECISION}, got {precision}"
            )));
        }
        Ok(Hamiltonian {
            levels,
            beta,
            precision,
        })
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }
}

/// Rationalized Gibbs distribution `e^{-beta E_i} / Z`.
///
/// Each weight is evaluated in [`Real`] arithmetic, rounded to
/// `precision` decimal digits, and the largest entry (lowest index on ties)
/// then absorbs the rounding defect so the vector sums to exactly 1.
pub fn gibbs_from_hamiltonian(h: &Hamiltonian) -> Result<Vec<Rational>> {
    let beta = Rational::from_f64(h.beta).expect("finite beta");
    let levels: Vec<Rational> = h
        .levels
        .iter()
        .map(|e| Rational::from_f64(*e).expect("finite level"))
        .collect();
    // Shifting every level by the ground energy leaves g unchanged and keeps
    // all exponents non-positive.
    let ground = levels.iter().min().expect("non-empty").clone();
    let boltzmann: Vec<Real> = levels
        .iter()
        .map(|e| Real::from_rational(&(-(&beta * (e - &ground)))).exp())
        .collect();
    let z: Real = boltzmann.iter().cloned().sum();
    let mut weights: Vec<Rational> = boltzmann
        .iter()
        .map(|w| (w / &z).to_rational().round_to_digits(h.precision))
        .collect();

    let defect = Rational::one() - weights.iter().sum::<Rational>();
    let largest = weights
        .iter()
        .enumerate()
        .fold(0, |best, (i, w)| if *w > weights[best] { i } else { best });
    weights[largest] += defect;

    if let Some(index) = weights.iter().position(|w| !w.is_positive()) {
        return Err(Error::PrecisionTooLow {
            index,
            precision: h.precision,
        });
    }
    Ok(weights)
}

/// Ratios `p_i / g_i` with a permutation listing indices by non-increasing
/// ratio (ties by ascending index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioProfile {
    pub ratios: Vec<Rational>,
    pub weights: Vec<Rational>,
    pub permutation: Vec<usize>,
}

impl RatioProfile {
    /// Ratios in sorted order.
    pub fn sorted_ratios(&self) -> impl Iterator<Item = &Rational> {
        self.permutation.iter().map(|&i| &self.ratios[i])
    }
}

pub fn ratio_profile(r: &ResourceState) -> RatioProfile {
    let ratios = r.ratios();
    let mut permutation: Vec<usize> = (0..ratios.len()).collect();
    // stable sort keeps ascending index among equal ratios
    permutation.sort_by(|&a, &b| ratios[b].cmp(&ratios[a]));
    RatioProfile {
        ratios,
        weights: r.g.clone(),
        permutation,
    }
}

/// One constant piece of a step function on `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub width: Rational,
    pub value: Rational,
}

/// The decreasing rearrangement of the ratio vector with respect to `g`:
/// ratio values sorted non-increasingly, each occupying width `g_i`, with
/// equal adjacent values merged.
pub fn decreasing_rearrangement(r: &ResourceState) -> Vec<Step> {
    let profile = ratio_profile(r);
    let mut steps: Vec<Step> = Vec::with_capacity(r.len());
    for &i in &profile.permutation {
        let value = &profile.ratios[i];
        let width = &profile.weights[i];
        match steps.last_mut() {
            Some(last) if &last.value == value => last.width += width,
            _ => steps.push(Step {
                width: width.clone(),
                value: value.clone(),
            }),
        }
    }
    steps
}
