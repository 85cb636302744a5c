use std::collections::HashSet;
use std::time::Instant;

use crate::algebra::{Monomial, MultiIndex};
use crate::error::{Error, Result};
use crate::lattice::{pairing, Derivation, GroupElement, Weight};
use crate::lie::{SpanningFamily, WittElement};
use crate::linalg::nullspace;
use crate::linear::LinComb;
use crate::modules::{BasisVector, ModuleElement, ModuleKind, WeightModule};
use crate::print;
use crate::sample::{pick, rng_for};
use crate::window::Window;
use crate::{qi, Q};

use super::spans::BlockSpan;
use super::{Counterexample, Report, Verifier, STREAM_MODULE, STREAM_QUOTIENT};

/// Smallest number of sampled tuples for the module axiom.
const MODULE_AXIOM_MIN: usize = 500;

fn basis_elem(b: &BasisVector) -> ModuleElement {
    LinComb::basis(b.clone())
}

impl Verifier {
    fn module_family(&self, m: &WeightModule) -> SpanningFamily {
        m.space()
            .spanning_family(&self.window, &m.space().zero_group())
            .expect("zero rho is always valid")
    }

    fn act(m: &WeightModule, w: &WittElement, v: &ModuleElement) -> ModuleElement {
        m.act_trusted(w, v).expect("window operators act on window vectors")
    }

    /// `[a,b].v = a.(b.v) - b.(a.v)` on seeded tuples drawn from the window
    /// family and the window basis.
    pub fn check_module_axiom(&self, m: &WeightModule) -> Report {
        self.check_module_axiom_with(m, &|w, v| Self::act(m, w, v))
    }

    pub fn check_module_axiom_with<F>(&self, m: &WeightModule, act: &F) -> Report
    where
        F: Fn(&WittElement, &ModuleElement) -> ModuleElement + Sync,
    {
        let started = Instant::now();
        let check = format!("module_axiom[{}]", m.kind());
        let family = self.module_family(m);
        let basis = m.window_basis(&self.window);
        if family.is_empty() || basis.is_empty() {
            return Report::new(check, 0, None, started).with_note("empty window");
        }
        let n = self.window.sample_count.max(MODULE_AXIOM_MIN);
        let cex = self.exec.find_map_first_range(n, |k| {
            let mut rng = rng_for(self.window.seed, STREAM_MODULE, k as u64);
            let a = &pick(&mut rng, &family.members).op;
            let b = &pick(&mut rng, &family.members).op;
            let v = basis_elem(pick(&mut rng, &basis));
            let lhs = act(&m.space().bracket_unchecked(a, b), &v);
            let rhs = act(a, &act(b, &v)) - act(b, &act(a, &v));
            (lhs != rhs).then(|| {
                Counterexample::new("[a,b].v = a.(b.v) - b.(a.v)", print::module(&lhs), print::module(&rhs))
                    .input("a", print::witt(a))
                    .input("b", print::witt(b))
                    .input("v", print::module(&v))
            })
        });
        Report::new(check, n as u64, cex, started)
    }

    /// `D_{p,q}(x^alpha t^i).v_{beta,j}` via the action equals the four-term
    /// closed formula, for every window tuple and every `p != q`.
    pub fn check_action_formula(&self, m: &WeightModule) -> Result<Report> {
        require_a_kind(m, "action_formula")?;
        let started = Instant::now();
        let space = m.space();
        let l = space.l();
        let rho = space.zero_group();
        let basis = m.window_basis(&self.window);
        let mut ops = Vec::new();
        for mono in self.window.monomials(space.rank(), space.poly_vars()) {
            for p in 1..=l {
                for q in (1..=l).filter(|&q| q != p) {
                    let op = space.d_op_unchecked(p, q, &LinComb::basis(mono.clone()), &rho);
                    ops.push((p, q, mono.clone(), op));
                }
            }
        }
        let cex = self.exec.find_map_first(&ops, |(p, q, mono, op)| {
            basis.iter().find_map(|b| {
                let lhs = Self::act(m, op, &basis_elem(b));
                let rhs = m.project(
                    m.action_formula(*p, *q, &mono.alpha, &mono.idx, &b.beta, &b.j)
                        .expect("p != q"),
                );
                (lhs != rhs).then(|| {
                    Counterexample::new(
                        "D_{p,q}(x^alpha t^i).v_{beta,j} matches the closed formula",
                        print::module(&lhs),
                        print::module(&rhs),
                    )
                    .input("operator", print::witt(op))
                    .input("p", p.to_string())
                    .input("q", q.to_string())
                    .input("u", print::algebra(&LinComb::basis(mono.clone())))
                    .input("v", print::module(&basis_elem(b)))
                })
            })
        });
        Ok(Report::new(format!("action_formula[{}]", m.kind()), (ops.len() * basis.len()) as u64, cex, started))
    }

    /// The four explicit action identities used in the classification, on
    /// every window tuple.
    pub fn check_lemma_identities(&self, m: &WeightModule) -> Result<Report> {
        require_a_kind(m, "lemma_identities")?;
        let parts = vec![self.t_linear_action(m), self.t_quadratic_d_op(m), self.coordinate_action(m), self.pure_x_d_op(m)];
        Ok(Report::combine(format!("lemma_identities[{}]", m.kind()), parts))
    }

    fn shifted(m: &WeightModule, beta: &GroupElement, p: usize) -> Q {
        m.space().alpha_coord(beta, p) + m.param().at(p)
    }

    /// Adds `c v_{beta, j}` when `j` exists.
    fn push(out: &mut ModuleElement, beta: &GroupElement, j: Option<MultiIndex>, c: Q) {
        if let Some(j) = j {
            out.add_term(BasisVector::new(beta.clone(), j), c);
        }
    }

    fn identity_check<T, L, R>(&self, name: &str, m: &WeightModule, tuples: &[T], lhs: L, rhs: R) -> Report
    where
        T: Sync + std::fmt::Debug,
        L: Fn(&T) -> (WittElement, BasisVector) + Sync + Send,
        R: Fn(&T) -> ModuleElement + Sync + Send,
    {
        let started = Instant::now();
        let cex = self.exec.find_map_first(tuples, |t| {
            let (op, b) = lhs(t);
            let got = Self::act(m, &op, &basis_elem(&b));
            let want = m.project(rhs(t));
            (got != want).then(|| {
                Counterexample::new(name, print::module(&got), print::module(&want))
                    .input("operator", print::witt(&op))
                    .input("v", print::module(&basis_elem(&b)))
                    .input("tuple", format!("{t:?}"))
            })
        });
        Report::new(name, tuples.len() as u64, cex, started)
    }

    /// `t^{1_[p]} d_q . v_{beta,i} = (beta_q+mu_q) v_{beta,i+1_[p]} + i_q v_{beta,i+1_[p]-1_[q]}`.
    fn t_linear_action(&self, m: &WeightModule) -> Report {
        let space = m.space();
        let (l, nt) = (space.l(), space.poly_vars());
        let basis = m.window_basis(&self.window);
        let tuples: Vec<(usize, usize, &BasisVector)> = (1..=nt)
            .flat_map(|p| (1..=l).filter(move |&q| q != p).map(move |q| (p, q)))
            .flat_map(|(p, q)| basis.iter().map(move |b| (p, q, b)))
            .collect();
        self.identity_check(
            "t_linear_action",
            m,
            &tuples,
            |&(p, q, b)| (space.witt_term(Monomial::new(space.zero_group(), MultiIndex::unit(nt, p, 1)), q), b.clone()),
            |&(p, q, b)| {
                let up = b.j.increment(p).expect("polynomial direction");
                let mut out = ModuleElement::zero();
                Self::push(&mut out, &b.beta, Some(up.clone()), Self::shifted(m, &b.beta, q));
                Self::push(&mut out, &b.beta, up.decrement(q), qi(b.j.at(q) as i64));
                out
            },
        )
    }

    /// `D_{q,p}(t^{1_[p]+1_[q]}) = t^{1_[p]} d_p - t^{1_[q]} d_q` acts as
    /// `(beta_p+mu_p) v_{beta,i+1_[p]} - (beta_q+mu_q) v_{beta,i+1_[q]} + (i_p - i_q) v_{beta,i}`.
    fn t_quadratic_d_op(&self, m: &WeightModule) -> Report {
        let space = m.space();
        let nt = space.poly_vars();
        let rho = space.zero_group();
        let basis = m.window_basis(&self.window);
        let tuples: Vec<(usize, usize, &BasisVector)> = (1..=nt)
            .flat_map(|p| (1..=nt).filter(move |&q| q != p).map(move |q| (p, q)))
            .flat_map(|(p, q)| basis.iter().map(move |b| (p, q, b)))
            .collect();
        self.identity_check(
            "t_quadratic_d_op",
            m,
            &tuples,
            |&(p, q, b)| {
                let u = MultiIndex::unit(nt, p, 1).add(&MultiIndex::unit(nt, q, 1));
                let u = LinComb::basis(Monomial::new(space.zero_group(), u));
                (space.d_op_unchecked(q, p, &u, &rho), b.clone())
            },
            |&(p, q, b)| {
                let mut out = ModuleElement::zero();
                Self::push(&mut out, &b.beta, b.j.increment(p), Self::shifted(m, &b.beta, p));
                Self::push(&mut out, &b.beta, b.j.increment(q), -Self::shifted(m, &b.beta, q));
                Self::push(&mut out, &b.beta, Some(b.j.clone()), qi(b.j.at(p) as i64 - b.j.at(q) as i64));
                out
            },
        )
    }

    /// `d_r . v_{beta,i} = (beta_r+mu_r) v_{beta,i} + i_r v_{beta,i-1_[r]}`.
    fn coordinate_action(&self, m: &WeightModule) -> Report {
        let space = m.space();
        let basis = m.window_basis(&self.window);
        let tuples: Vec<(usize, &BasisVector)> =
            (1..=space.l()).flat_map(|r| basis.iter().map(move |b| (r, b))).collect();
        self.identity_check(
            "coordinate_action",
            m,
            &tuples,
            |&(r, b)| (space.d(r), b.clone()),
            |&(r, b)| {
                let mut out = ModuleElement::zero();
                Self::push(&mut out, &b.beta, Some(b.j.clone()), Self::shifted(m, &b.beta, r));
                Self::push(&mut out, &b.beta, b.j.decrement(r), qi(b.j.at(r) as i64));
                out
            },
        )
    }

    /// For `alpha != 0`:
    /// `D_{p,q}(x^alpha).v_{beta,i} = (alpha_p(beta_q+mu_q) - alpha_q(beta_p+mu_p)) v_{beta+alpha,i}
    ///   + alpha_p i_q v_{beta+alpha,i-1_[q]} - alpha_q i_p v_{beta+alpha,i-1_[p]}`.
    fn pure_x_d_op(&self, m: &WeightModule) -> Report {
        let space = m.space();
        let l = space.l();
        let rho = space.zero_group();
        let basis = m.window_basis(&self.window);
        let alphas: Vec<GroupElement> = self
            .window
            .group_elements(space.rank())
            .into_iter()
            .filter(|a| !a.is_zero())
            .collect();
        let mut tuples = Vec::new();
        for a in &alphas {
            for p in 1..=l {
                for q in (1..=l).filter(|&q| q != p) {
                    for b in &basis {
                        tuples.push((a, p, q, b));
                    }
                }
            }
        }
        self.identity_check(
            "pure_x_d_op",
            m,
            &tuples,
            |&(a, p, q, b)| {
                let u = LinComb::basis(Monomial::new(a.clone(), space.zero_index()));
                (space.d_op_unchecked(p, q, &u, &rho), b.clone())
            },
            |&(a, p, q, b)| {
                let (ap, aq) = (space.alpha_coord(a, p), space.alpha_coord(a, q));
                let target = a + &b.beta;
                let mut out = ModuleElement::zero();
                let c = &ap * Self::shifted(m, &b.beta, q) - &aq * Self::shifted(m, &b.beta, p);
                Self::push(&mut out, &target, Some(b.j.clone()), c);
                Self::push(&mut out, &target, b.j.decrement(q), &ap * qi(b.j.at(q) as i64));
                Self::push(&mut out, &target, b.j.decrement(p), -&aq * qi(b.j.at(p) as i64));
                out
            },
        )
    }

    /// For `mu in Gamma`, every window operator annihilates `v_{-mu,0}` in `A_mu`.
    pub fn check_trivial_submodule(&self, m: &WeightModule) -> Result<Report> {
        let started = Instant::now();
        let t = m.trivial_vector().cloned().ok_or_else(|| {
            Error::InvalidModule("the trivial submodule exists only for A kinds with mu in Gamma".into())
        })?;
        let amu = WeightModule::new(m.space().clone(), ModuleKind::AMu, m.param().clone())?;
        let family = self.module_family(m);
        let v = basis_elem(&t);
        let cex = self.exec.find_map_first(&family.members, |mem| {
            let out = Self::act(&amu, &mem.op, &v);
            (!out.is_zero()).then(|| {
                Counterexample::new("s.v_{-mu,0} = 0", print::module(&out), "0".into())
                    .input("operator", print::witt(&mem.op))
                    .input("v", print::module(&v))
            })
        });
        Ok(Report::new("trivial_submodule", family.len() as u64, cex, started))
    }

    /// The quotient action equals the `A_mu` action followed by projection.
    pub fn check_quotient_consistency(&self, m: &WeightModule) -> Result<Report> {
        if m.kind() != ModuleKind::AMuQuotient {
            return Err(Error::KindMismatch(format!("quotient consistency needs A_mu_quotient, not {}", m.kind())));
        }
        let started = Instant::now();
        let amu = WeightModule::new(m.space().clone(), ModuleKind::AMu, m.param().clone())?;
        let family = self.module_family(m);
        let basis = m.window_basis(&self.window);
        let n = self.window.sample_count.max(MODULE_AXIOM_MIN);
        let cex = self.exec.find_map_first_range(n, |k| {
            let mut rng = rng_for(self.window.seed, STREAM_QUOTIENT, k as u64);
            let a = &pick(&mut rng, &family.members).op;
            let v = basis_elem(pick(&mut rng, &basis));
            let lhs = Self::act(m, a, &v);
            let rhs = m.project(Self::act(&amu, a, &v));
            (lhs != rhs).then(|| {
                Counterexample::new("quotient action = projected A_mu action", print::module(&lhs), print::module(&rhs))
                    .input("a", print::witt(a))
                    .input("v", print::module(&v))
            })
        });
        Ok(Report::new("quotient_consistency", n as u64, cex, started))
    }

    /// `(d_r - w_r)` applied to a weight-`w` basis vector stays at weight `w`.
    pub fn check_weight_stability(&self, m: &WeightModule) -> Report {
        let started = Instant::now();
        let basis = m.window_basis(&self.window);
        let l = m.space().l();
        let cex = self.exec.find_map_first(&basis, |b| {
            let w = m.weight_of(b);
            let v = basis_elem(b);
            (1..=l).find_map(|r| {
                let out = m.shifted_coordinate_action(r, &w, &v);
                let stray = m.weight_decompose(&out).into_iter().find(|(x, _)| *x != w);
                stray.map(|(x, part)| {
                    Counterexample::new(
                        "(d_r - w_r) keeps the generalized weight",
                        print::module(&part),
                        format!("component at weight {w}"),
                    )
                    .input("r", r.to_string())
                    .input("v", print::module(&v))
                    .input("stray_weight", x.to_string())
                })
            })
        });
        Report::new(format!("weight_stability[{}]", m.kind()), (basis.len() * l) as u64, cex, started)
    }

    /// The module axiom plus every identity that applies to the kind.
    pub fn check_module(&self, m: &WeightModule) -> Report {
        let mut parts = vec![self.check_module_axiom(m), self.check_weight_stability(m)];
        if !m.kind().is_graded() {
            parts.push(self.check_action_formula(m).expect("A kind"));
            parts.push(self.check_lemma_identities(m).expect("A kind"));
            if m.trivial_vector().is_some() {
                parts.push(self.check_trivial_submodule(m).expect("mu in Gamma"));
            }
        }
        if m.kind() == ModuleKind::AMuQuotient {
            parts.push(self.check_quotient_consistency(m).expect("quotient kind"));
        }
        Report::combine(format!("module[{}]", m.kind()), parts)
    }

    /// `shift(a.v) = a.shift(v)` for every window operator `a` and window
    /// basis vector `v`, where `shift: A_mu -> A_{mu+gamma}`.
    pub fn check_shift_iso(&self, m: &WeightModule, gamma: &GroupElement) -> Result<Report> {
        let (_, _) = m.shift_map(&ModuleElement::zero(), gamma)?;
        self.check_shift_iso_with(m, gamma, &|v| m.shift_map(v, gamma).expect("validated").1)
    }

    pub fn check_shift_iso_with<F>(&self, m: &WeightModule, gamma: &GroupElement, shift: &F) -> Result<Report>
    where
        F: Fn(&ModuleElement) -> ModuleElement + Sync,
    {
        let started = Instant::now();
        let (target, _) = m.shift_map(&ModuleElement::zero(), gamma)?;
        let family = self.module_family(m);
        let basis = m.window_basis(&self.window);
        let cex = self.exec.find_map_first(&family.members, |mem| {
            basis.iter().find_map(|b| {
                let v = basis_elem(b);
                let lhs = shift(&Self::act(m, &mem.op, &v));
                let rhs = Self::act(&target, &mem.op, &shift(&v));
                (lhs != rhs).then(|| {
                    Counterexample::new("shift(a.v) = a.shift(v)", print::module(&lhs), print::module(&rhs))
                        .input("a", print::witt(&mem.op))
                        .input("v", print::module(&v))
                        .input("gamma", gamma.to_string())
                })
            })
        });
        Ok(Report::new("shift_iso", (family.len() * basis.len()) as u64, cex, started))
    }

    /// Window-scale cyclicity evidence for irreducibility.
    ///
    /// For each window basis vector the orbit under the window family is
    /// spanned, with every image projected onto the doubled window. A vector
    /// counts as cyclic once its orbit reaches every window basis vector, or
    /// reaches one already shown to be cyclic. When `mu in Gamma` the trivial
    /// vector is checked to span only itself in `A_mu`, and cyclicity is then
    /// checked in the quotient.
    pub fn check_irreducibility_evidence(&self, m: &WeightModule) -> Result<Report> {
        require_a_kind(m, "irreducibility_evidence")?;
        let started = Instant::now();
        let mut parts = Vec::new();
        let target = match (m.kind(), m.trivial_vector()) {
            (ModuleKind::AMu, Some(t)) => {
                parts.push(self.orbit_is_trivial(m, t));
                WeightModule::new(m.space().clone(), ModuleKind::AMuQuotient, m.param().clone())?
            }
            _ => m.clone(),
        };
        parts.push(self.cyclicity(&target));
        let mut r = Report::combine("irreducibility_evidence", parts);
        r.millis = started.elapsed().as_millis() as u64;
        Ok(r.with_note("orbits projected onto the doubled window; evidence, not proof"))
    }

    fn orbit_is_trivial(&self, m: &WeightModule, t: &BasisVector) -> Report {
        let started = Instant::now();
        let family = self.module_family(m);
        let v = basis_elem(t);
        let cex = self.exec.find_map_first(&family.members, |mem| {
            let out = Self::act(m, &mem.op, &v);
            let extra = out.filter(|b| b != t);
            (!extra.is_zero()).then(|| {
                Counterexample::new("orbit of v_{-mu,0} is spanned by itself", print::module(&out), print::module(&v))
                    .input("operator", print::witt(&mem.op))
            })
        });
        Report::new("trivial_orbit", family.len() as u64, cex, started)
    }

    fn cyclicity(&self, m: &WeightModule) -> Report {
        let started = Instant::now();
        let family = self.module_family(m);
        let basis = m.window_basis(&self.window);
        let doubled = self.window.doubled();
        let project = |v: ModuleElement| v.filter(|b| doubled.contains_group(&b.beta) && doubled.contains_index(&b.j));
        let mut cyclic: HashSet<BasisVector> = HashSet::new();
        let mut applied = 0u64;
        for start in &basis {
            if cyclic.contains(start) {
                continue;
            }
            let mut span: BlockSpan<BasisVector> = BlockSpan::new();
            let v0 = basis_elem(start);
            span.insert(&v0);
            let mut frontier = vec![v0];
            let done = |span: &BlockSpan<BasisVector>, cyclic: &HashSet<BasisVector>| {
                if cyclic.is_empty() {
                    basis.iter().all(|b| span.contains(&basis_elem(b)))
                } else {
                    cyclic.iter().any(|b| span.contains(&basis_elem(b)))
                }
            };
            while !frontier.is_empty() && !done(&span, &cyclic) {
                let jobs: Vec<(usize, usize)> = (0..frontier.len())
                    .flat_map(|f| (0..family.len()).map(move |o| (f, o)))
                    .collect();
                applied += jobs.len() as u64;
                let images = self.exec.map(&jobs, |&(f, o)| project(Self::act(m, &family.members[o].op, &frontier[f])));
                let mut next = Vec::new();
                for img in images {
                    if !img.is_zero() && span.insert(&img) > 0 {
                        next.push(img);
                    }
                }
                frontier = next;
            }
            if !done(&span, &cyclic) {
                let missing = basis.iter().find(|b| !span.contains(&basis_elem(b))).expect("some vector missing");
                let cex = Counterexample::new(
                    "the orbit of v reaches every window basis vector",
                    format!("orbit dim {}", span.dim()),
                    print::module(&basis_elem(missing)),
                )
                .input("v", print::module(&basis_elem(start)));
                return Report::failed(format!("cyclicity[{}]", m.kind()), applied, cex, started);
            }
            cyclic.insert(start.clone());
        }
        Report::new(format!("cyclicity[{}]", m.kind()), applied, None, started)
            .with_note(format!("{} window basis vectors cyclic", basis.len()))
    }

    /// `dim V_w^(0)` on the window span for every weight realized there.
    ///
    /// For `A_0'` the zero weight must have multiplicity `l1 + l2` and every
    /// other weight multiplicity one; for `A_mu` every multiplicity is one.
    pub fn check_weight_multiplicities(&self, m: &WeightModule) -> Result<Report> {
        let zero_quotient = m.kind() == ModuleKind::AMuQuotient && m.param().is_zero();
        if m.kind() != ModuleKind::AMu && !zero_quotient {
            return Err(Error::KindMismatch(format!(
                "weight multiplicities need A_mu or A_0', not {} with parameter {}",
                m.kind(),
                m.param()
            )));
        }
        let started = Instant::now();
        let blocks = weight_blocks(m, &self.window);
        let l = m.space().l();
        let sig = *m.space().signature();
        let dims = self.exec.map(&blocks, |(w, vs)| {
            let cols: Vec<ModuleElement> = vs.iter().map(basis_elem).collect();
            let mut rows: Vec<Vec<Q>> = Vec::new();
            for r in 1..=l {
                let wr = pairing(&sig, &Derivation::coordinate(l, r), w);
                let images: Vec<ModuleElement> = cols
                    .iter()
                    .map(|v| m.project(Self::act(m, &m.space().d(r), v) - v.scale(&wr)))
                    .collect();
                let keys: std::collections::BTreeSet<&BasisVector> = images.iter().flat_map(|i| i.keys()).collect();
                for k in keys {
                    rows.push(images.iter().map(|i| i.coeff(k)).collect());
                }
            }
            if rows.is_empty() {
                cols.len()
            } else {
                nullspace(&rows, cols.len()).len()
            }
        });
        let expected = |w: &Weight| if zero_quotient && w.is_zero() { sig.poly_vars() } else { 1 };
        let cex = blocks.iter().zip(&dims).find(|((w, _), d)| **d != expected(w)).map(|((w, _), d)| {
            Counterexample::new("dim V_w^(0) on the window", d.to_string(), expected(w).to_string())
                .input("weight", w.to_string())
        });
        let zero_dim = blocks.iter().zip(&dims).find(|((w, _), _)| w.is_zero()).map(|(_, d)| *d);
        let mut r = Report::new(format!("weight_multiplicities[{}]", m.kind()), blocks.len() as u64, cex, started);
        if let Some(d) = zero_dim {
            r = r.with_note(format!("dim V_0^(0) = {d}"));
        }
        Ok(r)
    }
}

fn require_a_kind(m: &WeightModule, check: &str) -> Result<()> {
    if m.kind().is_graded() {
        return Err(Error::KindMismatch(format!("{check} applies to A_mu kinds, not {}", m.kind())));
    }
    Ok(())
}

/// Window basis grouped by generalized weight, in first-appearance order.
fn weight_blocks(m: &WeightModule, window: &Window) -> Vec<(Weight, Vec<BasisVector>)> {
    let mut out: Vec<(Weight, Vec<BasisVector>)> = Vec::new();
    for b in m.window_basis(window) {
        let w = m.weight_of(&b);
        match out.iter_mut().find(|(x, _)| *x == w) {
            Some((_, vs)) => vs.push(b),
            None => out.push((w, vec![b])),
        }
    }
    out
}
