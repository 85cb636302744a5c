//! JSON run configuration.
//!
//! Rationals are written as strings (`"1/2"`) or plain integers so no value
//! ever passes through a float. Every field has a default; an empty object is
//! the default configuration `l = (0,3,0)`, `Gamma = Z^3`, `mu = (1/2,0,0)`.

use std::path::Path;
use std::str::FromStr;

use divfree_core::{GroupDescriptor, GroupElement, Signature, Space, Weight, Window, Q};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A rational literal: an integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rational {
    Int(i64),
    Text(String),
}

impl Rational {
    pub fn value(&self) -> Result<Q, CliError> {
        match self {
            Rational::Int(n) => Ok(Q::from(*n)),
            Rational::Text(s) => parse_rational(s),
        }
    }
}

impl From<&str> for Rational {
    fn from(s: &str) -> Self {
        Rational::Text(s.to_string())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::Int(n)
    }
}

pub fn parse_rational(s: &str) -> Result<Q, CliError> {
    let t = s.trim();
    let bad = || CliError::Config(format!("'{s}' is not a rational (expected p or p/q)"));
    let valid = !t.is_empty()
        && t.split('/').count() <= 2
        && t.split('/').all(|part| {
            let digits = part.strip_prefix('-').unwrap_or(part);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        });
    if !valid || t.ends_with("/0") || t.contains("/-") {
        return Err(bad());
    }
    let mut parts = t.split('/').map(|p| Q::from_str(p).map_err(|_| bad()));
    let num = parts.next().expect("nonempty")?;
    match parts.next() {
        Some(den) => Ok(num / den?),
        None => Ok(num),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WindowConfig {
    pub gamma_radius: u32,
    pub idx_degree: u32,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for WindowConfig {
    fn default() -> Self {
        let w = Window::default();
        Self {
            gamma_radius: w.gamma_radius,
            idx_degree: w.idx_degree,
            sample_count: w.sample_count,
            seed: w.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
    /// Rows are generators of `Gamma` in `F^(l2+l3)`; empty means the standard basis.
    pub generators: Vec<Vec<Rational>>,
    /// Length `l`; empty means `1/2` in coordinate `l1 + 1` and zero elsewhere.
    pub mu: Vec<Rational>,
    /// `Gamma` coordinates; empty means zero.
    pub rho: Vec<i64>,
    pub window: WindowConfig,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            l1: 0,
            l2: 3,
            l3: 0,
            generators: Vec::new(),
            mu: Vec::new(),
            rho: Vec::new(),
            window: WindowConfig::default(),
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid config: {e}")))
    }

    /// The mixed configuration used alongside the default one:
    /// `l = (1,2,1)` with `Gamma` spanned by `(1,0,0), (1/2,1,0), (0,1/3,1)`.
    pub fn mixed() -> Self {
        Self {
            l1: 1,
            l2: 2,
            l3: 1,
            generators: vec![
                vec![1.into(), 0.into(), 0.into()],
                vec!["1/2".into(), 1.into(), 0.into()],
                vec![0.into(), "1/3".into(), 1.into()],
            ],
            ..Self::default()
        }
    }

    pub fn signature(&self) -> Result<Signature, CliError> {
        Ok(Signature::new(self.l1, self.l2, self.l3)?)
    }

    pub fn group(&self) -> Result<GroupDescriptor, CliError> {
        let sig = self.signature()?;
        if self.generators.is_empty() {
            return Ok(GroupDescriptor::standard(sig));
        }
        let rows = self
            .generators
            .iter()
            .map(|row| row.iter().map(Rational::value).collect::<Result<Vec<Q>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupDescriptor::new(sig, rows)?)
    }

    pub fn space(&self) -> Result<Space, CliError> {
        Ok(Space::new(self.group()?))
    }

    pub fn mu(&self) -> Result<Weight, CliError> {
        let sig = self.signature()?;
        let entries = if self.mu.is_empty() {
            default_mu(&sig, Q::from_signeds(1, 2))
        } else {
            self.mu.iter().map(Rational::value).collect::<Result<Vec<Q>, _>>()?
        };
        Ok(Weight::new(&sig, entries)?)
    }

    pub fn rho(&self) -> Result<GroupElement, CliError> {
        let group = self.group()?;
        let rho = if self.rho.is_empty() {
            GroupElement::zero(group.rank())
        } else {
            GroupElement::new(self.rho.clone())
        };
        group.check_element(&rho)?;
        Ok(rho)
    }

    pub fn window(&self) -> Result<Window, CliError> {
        let w = &self.window;
        Ok(Window::new(w.gamma_radius, w.idx_degree, w.sample_count, w.seed)?)
    }
}

/// `c` in coordinate `l1 + 1`, zero elsewhere.
pub fn default_mu(sig: &Signature, c: Q) -> Vec<Q> {
    let mut v = vec![Q::from(0i64); sig.l()];
    if sig.l() > sig.l1() {
        v[sig.l1()] = c;
    }
    v
}
