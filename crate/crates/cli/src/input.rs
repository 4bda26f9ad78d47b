//! Resource files.
//!
//! A TOML document with one table per named state:
//!
//! ```toml
//! [states.bit]
//! p = ["1/2", "1/2"]
//! g = ["1/2", "1/2"]
//!
//! [states.qutrit]
//! levels = [0.0, 1.0, 2.5]
//! beta = 1.0
//! precision = 12   # optional
//! p = ["1", "0", "0"]   # optional, defaults to the Gibbs state
//! ```
//!
//! Rationals are strings so they stay exact; reals only appear in
//! Hamiltonian mode.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use thermo_core::{gibbs_from_hamiltonian, make_resource, Hamiltonian, Rational, ResourceState};

pub const DEFAULT_PRECISION: u32 = 12;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResourceFile {
    #[serde(default)]
    pub states: BTreeMap<String, StateSpec>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpec {
    pub p: Option<Vec<String>>,
    pub g: Option<Vec<String>>,
    pub levels: Option<Vec<f64>>,
    pub beta: Option<f64>,
    pub precision: Option<u32>,
}

impl ResourceFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn state(&self, name: &str) -> Result<ResourceState> {
        let spec = self.states.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.states.keys().map(String::as_str).collect();
            anyhow!(
                "unknown state `{name}` (file defines: {})",
                known.join(", ")
            )
        })?;
        spec.resolve(&format!("states.{name}"))
            .map(|r| r.with_label(name))
    }
}

fn rationals(field: &str, items: &[String]) -> Result<Vec<Rational>> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.parse::<Rational>()
                .map_err(|e| anyhow!("{field}[{i}]: {e}"))
        })
        .collect()
}

impl StateSpec {
    /// Gibbs vector: `g` directly, or built from the Hamiltonian.
    pub fn gibbs(&self, at: &str) -> Result<Vec<Rational>> {
        match (&self.g, &self.levels) {
            (Some(g), None) => {
                if self.beta.is_some() || self.precision.is_some() {
                    bail!("{at}: `beta` and `precision` only apply together with `levels`");
                }
                rationals(&format!("{at}.g"), g)
            }
            (None, Some(levels)) => {
                let beta = self
                    .beta
                    .ok_or_else(|| anyhow!("{at}: `levels` requires `beta`"))?;
                let precision = self.precision.unwrap_or(DEFAULT_PRECISION);
                let h = Hamiltonian::new(levels.clone(), beta, precision)
                    .map_err(|e| anyhow!("{at}: {e}"))?;
                gibbs_from_hamiltonian(&h).map_err(|e| anyhow!("{at}: {e}"))
            }
            (Some(_), Some(_)) => bail!("{at}: give either `g` or `levels`, not both"),
            (None, None) => bail!("{at}: missing `g` (or `levels` and `beta`)"),
        }
    }

    pub fn resolve(&self, at: &str) -> Result<ResourceState> {
        let g = self.gibbs(at)?;
        let p = match (&self.p, &self.levels) {
            (Some(p), _) => rationals(&format!("{at}.p"), p)?,
            (None, Some(_)) => g.clone(),
            (None, None) => bail!("{at}: missing `p`"),
        };
        make_resource(p, g).map_err(|e| anyhow!("{at}: {e}"))
    }
}
