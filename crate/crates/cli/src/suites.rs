//! Named verification suites over one configuration.

use divfree_core::verify::{check_order_total, GeneratorVariant, Report, Verifier};
use divfree_core::{
    Exec, GroupElement, ModuleKind, Scalar, Signature, Space, Weight, WeightModule, Window, Q,
};

use crate::config::Config;
use crate::CliError;

pub const SUITES: &[&str] = &[
    "lie_axioms",
    "divergence_free",
    "subalgebra_closure",
    "closed_form",
    "recurrence",
    "ad_nilpotent",
    "generators",
    "action_formula",
    "module_axiom",
    "lemma_identities",
    "trivial_submodule",
    "quotient",
    "irreducibility",
    "multiplicities",
    "shift_iso",
    "order",
];

/// Multi-indices are compared exhaustively up to this degree.
pub const ORDER_DEGREE: u32 = 4;

/// Everything derived from a [`Config`] that the suites and commands share.
#[derive(Clone, Debug)]
pub struct Setup {
    pub space: Space,
    pub mu: Weight,
    pub rho: GroupElement,
    pub window: Window,
    pub exec: Exec,
}

impl Setup {
    pub fn new(cfg: &Config, exec: Exec) -> Result<Self, CliError> {
        Ok(Self {
            space: cfg.space()?,
            mu: cfg.mu()?,
            rho: cfg.rho()?,
            window: cfg.window()?,
            exec,
        })
    }

    pub fn verifier(&self) -> Verifier {
        Verifier::new(self.space.clone(), self.window).with_exec(self.exec)
    }

    /// Orbit closures grow fast with the degree bound, so cyclicity runs on
    /// the degree-1 window of the same radius.
    pub fn irreducibility_verifier(&self) -> Verifier {
        let w = self.window;
        self.verifier().with_window(w.with_bounds(w.gamma_radius, w.idx_degree.min(1)))
    }

    fn sig(&self) -> &Signature {
        self.space.signature()
    }

    /// The first generator of `Gamma` as a weight, a parameter inside `Gamma`.
    pub fn first_generator(&self) -> GroupElement {
        GroupElement::unit(self.space.rank(), 0)
    }

    pub fn weight_in_gamma(&self) -> Weight {
        self.space
            .group()
            .ambient_vector(&self.first_generator())
            .expect("generator is in Gamma")
    }

    pub fn a_mu(&self, mu: Weight) -> Result<WeightModule, CliError> {
        Ok(WeightModule::new(self.space.clone(), ModuleKind::AMu, mu)?)
    }

    /// `A_0'`.
    pub fn zero_quotient(&self) -> Result<WeightModule, CliError> {
        Ok(WeightModule::new(self.space.clone(), ModuleKind::AMuQuotient, Weight::zero(self.sig()))?)
    }

    /// `S(0,0,l2+l3; Gamma)`, where the graded modules live.
    pub fn graded_space(&self) -> Result<Space, CliError> {
        let sig = Signature::new(0, 0, self.sig().gamma_dim())?;
        Ok(Space::new(self.space.group().with_signature(sig)?))
    }

    /// The last `l2 + l3` entries of `mu`, or the first unit vector if they vanish.
    pub fn graded_param(&self) -> Result<Weight, CliError> {
        let space = self.graded_space()?;
        let n = space.l();
        let mut entries: Vec<Q> = self.mu.entries()[self.mu.len() - n..].to_vec();
        if entries.iter().all(Scalar::is_zero) {
            entries[0] = Q::one();
        }
        Ok(Weight::new(space.signature(), entries)?)
    }

    pub fn graded(&self, kind: ModuleKind) -> Result<WeightModule, CliError> {
        Ok(WeightModule::new(self.graded_space()?, kind, self.graded_param()?)?)
    }

    /// Builds the module a command asks for: graded kinds over the graded
    /// space, `A` kinds over the configured one.
    pub fn module(&self, kind: ModuleKind, param: Option<Weight>) -> Result<WeightModule, CliError> {
        if kind.is_graded() {
            let param = match param {
                Some(p) => p,
                None => self.graded_param()?,
            };
            Ok(WeightModule::new(self.graded_space()?, kind, param)?)
        } else {
            Ok(WeightModule::new(self.space.clone(), kind, param.unwrap_or_else(|| self.mu.clone()))?)
        }
    }

    /// One module of every kind: `A_mu` with the configured `mu`, `A_mu` with
    /// `mu` in `Gamma`, `A_0'`, and the three graded modules.
    pub fn standard_modules(&self) -> Result<Vec<WeightModule>, CliError> {
        Ok(vec![
            self.a_mu(self.mu.clone())?,
            self.a_mu(self.weight_in_gamma())?,
            self.zero_quotient()?,
            self.graded(ModuleKind::GradedM)?,
            self.graded(ModuleKind::GradedA)?,
            self.graded(ModuleKind::GradedB)?,
        ])
    }

    /// `mu = 0`, the configured `mu` and a `mu` in `Gamma`, without repeats.
    fn formula_weights(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = Vec::new();
        for w in [Weight::zero(self.sig()), self.mu.clone(), self.weight_in_gamma()] {
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }

    pub fn run_suite(&self, name: &str) -> Result<Vec<Report>, CliError> {
        if name == "all" {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(self.run_suite(s)?);
            }
            return Ok(out);
        }
        let v = self.verifier();
        let reports = match name {
            "lie_axioms" => vec![v.check_lie_axioms()],
            "divergence_free" => vec![v.check_divergence_free()],
            "subalgebra_closure" => vec![v.check_subalgebra_closure()],
            "closed_form" => vec![v.check_closed_form()],
            "recurrence" => vec![v.check_recurrence()],
            "ad_nilpotent" => vec![v.check_ad_nilpotent()],
            "generators" => vec![
                v.check_generators(GeneratorVariant::Prop21),
                v.check_generators(GeneratorVariant::Cor22),
            ],
            "action_formula" => self
                .formula_weights()
                .into_iter()
                .map(|w| Ok(tag(v.check_action_formula(&self.a_mu(w.clone())?)?, &w)))
                .collect::<Result<_, CliError>>()?,
            "module_axiom" => self
                .standard_modules()?
                .iter()
                .map(|m| tag(v.check_module_axiom(m), m.param()))
                .collect(),
            "lemma_identities" => [self.mu.clone(), Weight::zero(self.sig())]
                .into_iter()
                .map(|w| Ok(tag(v.check_lemma_identities(&self.a_mu(w.clone())?)?, &w)))
                .collect::<Result<_, CliError>>()?,
            "trivial_submodule" => {
                let w = self.weight_in_gamma();
                vec![tag(v.check_trivial_submodule(&self.a_mu(w.clone())?)?, &w)]
            }
            "quotient" => {
                let m = self.zero_quotient()?;
                vec![v.check_quotient_consistency(&m)?, v.check_module_axiom(&m)]
            }
            "irreducibility" => {
                let small = self.irreducibility_verifier();
                vec![
                    tag(small.check_irreducibility_evidence(&self.a_mu(self.mu.clone())?)?, &self.mu),
                    tag(
                        small.check_irreducibility_evidence(&self.zero_quotient()?)?,
                        &Weight::zero(self.sig()),
                    ),
                ]
            }
            "multiplicities" => vec![
                tag(v.check_weight_multiplicities(&self.a_mu(self.mu.clone())?)?, &self.mu),
                v.check_weight_multiplicities(&self.zero_quotient()?)?,
            ],
            "shift_iso" => {
                let g = self.first_generator();
                vec![tag(v.check_shift_iso(&self.a_mu(self.mu.clone())?, &g)?, &self.mu)
                    .with_note(format!("gamma = {g} in Gamma coordinates"))]
            }
            "order" => vec![check_order_total(self.space.poly_vars(), ORDER_DEGREE)],
            other => {
                return Err(CliError::Usage(format!(
                    "unknown suite '{other}' (expected one of {} or all)",
                    SUITES.join(", ")
                )))
            }
        };
        Ok(reports)
    }
}

fn tag(mut r: Report, param: &Weight) -> Report {
    r.notes.insert(0, format!("parameter {param}"));
    r
}
