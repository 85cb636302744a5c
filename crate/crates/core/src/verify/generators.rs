use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie::{WittElement, WittTerm};
use crate::print;

use super::spans::BlockSpan;
use super::{Counterexample, Report, Verifier};

/// Which generating set to close under brackets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorVariant {
    /// `D_{p,q}(x^alpha)` for `alpha != 0` together with `D_{p,q}(t^j)`, `|j| <= 2`.
    Prop21,
    /// `D_{p,q}(x^alpha t^i)` for `alpha != 0`.
    Cor22,
}

impl GeneratorVariant {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorVariant::Prop21 => "prop21",
            GeneratorVariant::Cor22 => "cor22",
        }
    }
}

impl FromStr for GeneratorVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "prop21" => Ok(GeneratorVariant::Prop21),
            "cor22" => Ok(GeneratorVariant::Cor22),
            other => Err(Error::InvalidArgument(format!(
                "unknown generator variant '{other}' (expected prop21 or cor22)"
            ))),
        }
    }
}

impl Verifier {
    /// The generators of `variant` that lie in the window.
    pub fn generator_set(&self, variant: GeneratorVariant) -> Vec<WittElement> {
        self.family()
            .members
            .into_iter()
            .filter(|m| {
                let nonzero = !m.mono.alpha.is_zero();
                match variant {
                    GeneratorVariant::Prop21 => (nonzero && m.mono.idx.is_zero()) || (!nonzero && m.mono.idx.degree() <= 2),
                    GeneratorVariant::Cor22 => nonzero,
                }
            })
            .map(|m| m.op)
            .collect()
    }

    /// Closes the generators of `variant` under brackets inside the window
    /// and checks that every window `D_{p,q}(x^alpha t^i)` is reached.
    pub fn check_generators(&self, variant: GeneratorVariant) -> Report {
        let gens = self.generator_set(variant);
        self.check_generators_from(&format!("generators_{}", variant.name()), &gens)
    }

    /// Bracket closure of an arbitrary generating set.
    ///
    /// A bracket is kept only when it lies in the span of the window family,
    /// so the closure is the part of the generated subalgebra visible inside
    /// the window. Targets are every window member, `t`-only ones included.
    pub fn check_generators_from(&self, check: &str, gens: &[WittElement]) -> Report {
        let started = Instant::now();
        let sig = self.space.signature();
        if !sig.generation_hypothesis() {
            return Report::failed(
                check,
                0,
                Counterexample::new(
                    "precondition: l1 + l2 >= 3 and l2 + l3 >= 3",
                    format!("l1 + l2 = {}, l2 + l3 = {}", sig.poly_vars(), sig.gamma_dim()),
                    ">= 3".into(),
                ),
                started,
            );
        }
        let family = self.family();
        let ambient = self.family_span(&family);
        let targets: Vec<&WittElement> = family.ops().collect();

        let mut span: BlockSpan<WittTerm> = BlockSpan::new();
        let mut elements: Vec<WittElement> = Vec::new();
        for g in gens {
            if ambient.contains(g) && span.insert(g) > 0 {
                elements.push(g.clone());
            }
        }
        // elements[start..] were added in the last round
        let mut start = 0;
        let mut rounds = 0;
        let mut brackets = 0u64;
        let reached = |span: &BlockSpan<WittTerm>| targets.iter().all(|t| span.contains(t));

        while start < elements.len() && !reached(&span) {
            rounds += 1;
            let pairs: Vec<(usize, usize)> = (start..elements.len())
                .flat_map(|f| (0..f).map(move |e| (f, e)))
                .filter(|&(f, e)| {
                    let g = &grade(&elements[f]) + &grade(&elements[e]);
                    self.window.contains_group(&g)
                })
                .collect();
            brackets += pairs.len() as u64;
            let results = self.exec.map(&pairs, |&(f, e)| {
                let br = self.space.bracket_unchecked(&elements[f], &elements[e]);
                (!br.is_zero() && ambient.contains(&br)).then_some(br)
            });
            start = elements.len();
            for br in results.into_iter().flatten() {
                if span.insert(&br) > 0 {
                    elements.push(br);
                }
            }
        }

        let missing = targets.iter().find(|t| !span.contains(t));
        let cex = missing.map(|t| {
            Counterexample::new(
                "every window D_{p,q}(x^alpha t^i) lies in the generated span",
                print::witt(t),
                "(not reached)".into(),
            )
            .input("generators", gens.len().to_string())
        });
        Report::new(check, brackets, cex, started).with_note(format!(
            "generated span dim {} of window family dim {} after {} rounds",
            span.dim(),
            ambient.dim(),
            rounds
        ))
    }
}

/// Elements of the closure are homogeneous.
fn grade(w: &WittElement) -> crate::lattice::GroupElement {
    w.first_key().expect("closure elements are nonzero").mono.alpha.clone()
}
