//! Window-scale structural checks.
//!
//! Every check is deterministic given `(window, seed)` and compares exact
//! values. A failing [`Report`] carries the first counterexample found in
//! input order, printed as canonical expressions so it can be replayed.
//! A pass is evidence over the window, not a proof.

mod eigen;
mod generators;
mod lie_checks;
mod module_checks;
mod order;
mod spans;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Space};
use crate::lie::{SpanningFamily, WittElement, WittTerm};
use crate::par::Exec;
use crate::sample::{pick, small_rational};
use crate::window::Window;

pub use eigen::{eigen_split, rational_roots};
pub use generators::GeneratorVariant;
pub use order::check_order_total;
pub use spans::BlockSpan;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Inputs and both sides of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub description: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(description: impl Into<String>, lhs: String, rhs: String) -> Self {
        Self {
            description: description.into(),
            inputs: BTreeMap::new(),
            lhs,
            rhs,
        }
    }

    pub fn input(mut self, name: &str, value: impl Into<String>) -> Self {
        self.inputs.insert(name.to_string(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    pub tested: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    pub millis: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>, tested: u64, cex: Option<Counterexample>, started: Instant) -> Self {
        Self {
            check: check.into(),
            status: if cex.is_some() { Status::Fail } else { Status::Pass },
            tested,
            counterexample: cex,
            millis: started.elapsed().as_millis() as u64,
            notes: Vec::new(),
        }
    }

    /// A failure without a replayable identity (a precondition or a
    /// structural property such as a missing span member).
    pub fn failed(check: impl Into<String>, tested: u64, cex: Counterexample, started: Instant) -> Self {
        Self::new(check, tested, Some(cex), started)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds several reports into one: tested counts add up, the first
    /// failure wins, and each part leaves a note.
    pub fn combine(check: impl Into<String>, parts: Vec<Report>) -> Self {
        let tested = parts.iter().map(|r| r.tested).sum();
        let millis = parts.iter().map(|r| r.millis).sum();
        let counterexample = parts.iter().find_map(|r| r.counterexample.clone());
        let mut notes = Vec::new();
        for r in &parts {
            let status = if r.passed() { "pass" } else { "fail" };
            notes.push(format!("{}: {status} ({} tested)", r.check, r.tested));
            notes.extend(r.notes.iter().map(|n| format!("{}: {n}", r.check)));
        }
        Self {
            check: check.into(),
            status: if parts.iter().all(Report::passed) { Status::Pass } else { Status::Fail },
            tested,
            counterexample,
            millis,
            notes,
        }
    }
}

/// Runs checks for one space over one window.
#[derive(Clone, Debug)]
pub struct Verifier {
    space: Space,
    window: Window,
    exec: Exec,
}

// Sampling streams, one per check, so adding samples to one check never
// shifts the draws of another.
const STREAM_LIE: u64 = 1;
const STREAM_DIV: u64 = 2;
const STREAM_MODULE: u64 = 3;
const STREAM_QUOTIENT: u64 = 4;
const STREAM_NILPOTENT: u64 = 5;

impl Verifier {
    pub fn new(space: Space, window: Window) -> Self {
        Self {
            space,
            window,
            exec: Exec::default(),
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_window(mut self, window: Window) -> Self {
        self.window = window;
        self
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn family(&self) -> SpanningFamily {
        self.space
            .spanning_family(&self.window, &self.space.zero_group())
            .expect("zero rho is always valid")
    }

    fn window_monomials(&self) -> Vec<Monomial> {
        self.window.monomials(self.space.rank(), self.space.poly_vars())
    }

    /// Random combination of `terms` window operators `x^alpha t^i d_p`.
    fn random_witt(&self, rng: &mut impl rand::Rng, monos: &[Monomial], terms: usize) -> WittElement {
        let l = self.space.l();
        let mut w = WittElement::zero();
        for _ in 0..terms {
            let m = pick(rng, monos).clone();
            let p = rng.gen_range(1..=l);
            w.add_term(WittTerm::new(m, p), small_rational(rng));
        }
        w
    }

    /// Random combination of `terms` members of `family`.
    fn random_family_combo(
        &self,
        rng: &mut impl rand::Rng,
        family: &SpanningFamily,
        terms: usize,
    ) -> WittElement {
        let mut w = WittElement::zero();
        for _ in 0..terms {
            let m = pick(rng, &family.members);
            w.add_scaled(&m.op, &small_rational(rng));
        }
        w
    }
}
