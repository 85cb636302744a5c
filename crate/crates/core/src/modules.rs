//! Weight modules over `S(l1, l2, l3; 0, Gamma)`.
//!
//! * `A_mu`: basis `v_{beta,j}`, `beta in Gamma`, `j in N^(l1+l2)`. The action is
//!   the `mu`-shifted first-order rule
//!   `(x^alpha t^i d_p).v_{beta,j} = (beta_p + mu_p) v_{beta+alpha, i+j} + j_p v_{beta+alpha, i+j-1_[p]}`,
//!   which is a module for all of `W` and restricts to the four-term formula on `D_{p,q}(x^alpha t^i)`.
//! * `A_mu'`: `A_mu / F v_{-mu,0}` for `mu in Gamma`.
//! * `M_mu`, `A_eta`, `B_eta`: graded modules over `S(0,0,l,0;Gamma)` with basis `v_beta`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MultiIndex, Space};
use crate::error::{check_len, Error, Result};
use crate::lattice::{pairing, Derivation, GroupElement, Weight};
use crate::lie::WittElement;
use crate::linear::LinComb;
use crate::window::Window;
use crate::{qi, Q, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModuleKind {
    #[serde(rename = "A_mu")]
    AMu,
    #[serde(rename = "A_mu_quotient")]
    AMuQuotient,
    #[serde(rename = "graded_M")]
    GradedM,
    #[serde(rename = "graded_A")]
    GradedA,
    #[serde(rename = "graded_B")]
    GradedB,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 5] = [
        ModuleKind::AMu,
        ModuleKind::AMuQuotient,
        ModuleKind::GradedM,
        ModuleKind::GradedA,
        ModuleKind::GradedB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::AMu => "A_mu",
            ModuleKind::AMuQuotient => "A_mu_quotient",
            ModuleKind::GradedM => "graded_M",
            ModuleKind::GradedA => "graded_A",
            ModuleKind::GradedB => "graded_B",
        }
    }

    pub fn is_graded(self) -> bool {
        matches!(self, ModuleKind::GradedM | ModuleKind::GradedA | ModuleKind::GradedB)
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown module kind `{s}`")))
    }
}

/// Basis vector `v_{beta,j}` (`j` is empty for graded kinds).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVector {
    pub beta: GroupElement,
    pub j: MultiIndex,
}

impl BasisVector {
    pub fn new(beta: GroupElement, j: MultiIndex) -> Self {
        Self { beta, j }
    }
}

pub type ModuleElement = LinComb<BasisVector>;

/// Kind, parameter (`mu` or `eta`) and the underlying space.
#[derive(Clone, Debug)]
pub struct ModuleDescriptor {
    pub kind: ModuleKind,
    pub param: Weight,
    pub space: Space,
}

/// A validated module together with the data derived from its descriptor.
#[derive(Clone, Debug)]
pub struct WeightModule {
    desc: ModuleDescriptor,
    /// `v_{-mu,0}` when `mu in Gamma` (A kinds only).
    trivial: Option<BasisVector>,
}

impl WeightModule {
    pub fn new(space: Space, kind: ModuleKind, param: Weight) -> Result<Self> {
        let sig = *space.signature();
        check_len("module parameter", sig.l(), param.len())?;
        let param = Weight::new(&sig, param.entries().to_vec())?;
        if kind.is_graded() {
            if sig.l1() != 0 || sig.l2() != 0 {
                return Err(Error::InvalidModule(format!(
                    "{kind} lives over S(0,0,l,0;Gamma); got l1 = {}, l2 = {}",
                    sig.l1(),
                    sig.l2()
                )));
            }
            if matches!(kind, ModuleKind::GradedA | ModuleKind::GradedB) && param.is_zero() {
                return Err(Error::InvalidModule(format!("{kind} requires eta != 0")));
            }
        }
        let trivial = if kind.is_graded() {
            None
        } else {
            space
                .group()
                .membership(&param)
                .map(|g| BasisVector::new(-&g, space.zero_index()))
        };
        if kind == ModuleKind::AMuQuotient && trivial.is_none() {
            return Err(Error::InvalidModule(
                "A_mu_quotient requires mu in Gamma".into(),
            ));
        }
        Ok(Self {
            desc: ModuleDescriptor { kind, param, space },
            trivial,
        })
    }

    pub fn descriptor(&self) -> &ModuleDescriptor {
        &self.desc
    }

    pub fn kind(&self) -> ModuleKind {
        self.desc.kind
    }

    pub fn param(&self) -> &Weight {
        &self.desc.param
    }

    pub fn space(&self) -> &Space {
        &self.desc.space
    }

    /// `v_{-mu,0}` if `mu in Gamma`.
    pub fn trivial_vector(&self) -> Option<&BasisVector> {
        self.trivial.as_ref()
    }

    pub fn basis(&self, beta: GroupElement, j: MultiIndex) -> Result<ModuleElement> {
        self.check_basis(&BasisVector::new(beta.clone(), j.clone()))?;
        let b = BasisVector::new(beta, j);
        Ok(self.project(LinComb::basis(b)))
    }

    pub fn check_basis(&self, b: &BasisVector) -> Result<()> {
        self.space().group().check_element(&b.beta)?;
        check_len("basis multi-index length", self.space().poly_vars(), b.j.len())
    }

    pub fn check_element(&self, v: &ModuleElement) -> Result<()> {
        v.keys().try_for_each(|b| self.check_basis(b))
    }

    /// Drops `v_{-mu,0}` in the quotient; identity otherwise.
    pub fn project(&self, v: ModuleElement) -> ModuleElement {
        match (&self.trivial, self.kind()) {
            (Some(t), ModuleKind::AMuQuotient) if v.contains_key(t) => v.filter(|b| b != t),
            _ => v,
        }
    }

    /// `beta_p + mu_p` (1-based `p`).
    fn shifted(&self, beta: &GroupElement, p: usize) -> Q {
        self.space().alpha_coord(beta, p) + self.param().at(p)
    }

    /// `(x^alpha t^i d_p).v_{beta,j} = (beta_p + mu_p) v_{beta+alpha, i+j} + j_p v_{beta+alpha, i+j-1_[p]}`.
    ///
    /// Defined for the A kinds; the quotient projection is not applied here.
    pub fn act_monomial_op(
        &self,
        alpha: &GroupElement,
        i: &MultiIndex,
        p: usize,
        beta: &GroupElement,
        j: &MultiIndex,
    ) -> Result<ModuleElement> {
        self.space().check_direction(p)?;
        self.space().check_monomial(&Monomial::new(alpha.clone(), i.clone()))?;
        self.check_basis(&BasisVector::new(beta.clone(), j.clone()))?;
        if self.kind().is_graded() {
            return Err(Error::KindMismatch(format!(
                "act_monomial_op is defined for A_mu kinds, not {}",
                self.kind()
            )));
        }
        Ok(self.monomial_op_raw(alpha, i, p, beta, j))
    }

    fn monomial_op_raw(
        &self,
        alpha: &GroupElement,
        i: &MultiIndex,
        p: usize,
        beta: &GroupElement,
        j: &MultiIndex,
    ) -> ModuleElement {
        let mut out = ModuleElement::zero();
        let target = alpha + beta;
        let ij = i.add(j);
        let c = self.shifted(beta, p);
        if let Some(dec) = ij.decrement(p) {
            if j.at(p) > 0 {
                out.add_term(BasisVector::new(target.clone(), dec), qi(j.at(p) as i64));
            }
        }
        out.add_term(BasisVector::new(target, ij), c);
        out
    }

    /// `w.v`, extended bilinearly.
    ///
    /// For graded kinds every monomial `x^alpha` of `w` must carry a derivation
    /// in `ker alpha`.
    pub fn act(&self, w: &WittElement, v: &ModuleElement) -> Result<ModuleElement> {
        self.space().check_witt(w)?;
        self.check_element(v)?;
        self.act_trusted(w, v)
    }

    /// [`WeightModule::act`] without validating `w` and `v` against the space.
    pub(crate) fn act_trusted(&self, w: &WittElement, v: &ModuleElement) -> Result<ModuleElement> {
        if self.kind().is_graded() {
            self.act_graded(w, v)
        } else {
            Ok(self.act_a(w, v))
        }
    }

    fn act_a(&self, w: &WittElement, v: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (t, c) in w {
            for (b, d) in v {
                let r = self.monomial_op_raw(&t.mono.alpha, &t.mono.idx, t.dir, &b.beta, &b.j);
                out.add_scaled(&r, &(c * d));
            }
        }
        self.project(out)
    }

    /// Groups `w` as `sum_alpha x^alpha d_alpha` and checks `d_alpha(alpha) = 0`.
    pub fn graded_parts(&self, w: &WittElement) -> Result<Vec<(GroupElement, Derivation)>> {
        let space = self.space();
        let sig = space.signature();
        let l = sig.l();
        let mut parts: Vec<(GroupElement, Vec<Q>)> = Vec::new();
        for (t, c) in w {
            if !t.mono.idx.is_zero() {
                return Err(Error::InvalidModule(
                    "graded modules take operators without t-part".into(),
                ));
            }
            match parts.last_mut() {
                Some((a, coeffs)) if *a == t.mono.alpha => coeffs[t.dir - 1] += c,
                _ => {
                    let mut coeffs = vec![Q::zero(); l];
                    coeffs[t.dir - 1] = c.clone();
                    parts.push((t.mono.alpha.clone(), coeffs));
                }
            }
        }
        parts
            .into_iter()
            .map(|(alpha, coeffs)| {
                let d = Derivation::new(coeffs);
                let amb = space.group().ambient_vector(&alpha)?;
                if !pairing(sig, &d, &amb).is_zero() {
                    return Err(Error::NotInKernel {
                        term: format!("x{alpha} * {}", format_derivation(&d)),
                    });
                }
                Ok((alpha, d))
            })
            .collect()
    }

    fn act_graded(&self, w: &WittElement, v: &ModuleElement) -> Result<ModuleElement> {
        let space = self.space();
        let sig = *space.signature();
        let group = space.group();
        let parts = self.graded_parts(w)?;
        let zero_idx = space.zero_index();
        let mut out = ModuleElement::zero();
        for (alpha, d) in &parts {
            for (b, coeff) in v {
                let beta = &b.beta;
                let (factor, target) = match self.kind() {
                    ModuleKind::GradedM => {
                        let bm = &group.ambient_vector(beta)? + self.param();
                        (pairing(&sig, d, &bm), alpha + beta)
                    }
                    ModuleKind::GradedA => {
                        if beta.is_zero() && !alpha.is_zero() {
                            (pairing(&sig, d, self.param()), alpha.clone())
                        } else {
                            (pairing(&sig, d, &group.ambient_vector(beta)?), alpha + beta)
                        }
                    }
                    ModuleKind::GradedB => {
                        let sum = alpha + beta;
                        if !alpha.is_zero() && sum.is_zero() {
                            (pairing(&sig, d, self.param()), sum)
                        } else {
                            (pairing(&sig, d, &group.ambient_vector(beta)?), sum)
                        }
                    }
                    _ => unreachable!("graded kinds only"),
                };
                out.add_term(BasisVector::new(target, zero_idx.clone()), factor * coeff);
            }
        }
        Ok(out)
    }

    /// The four-term closed formula for `D_{p,q}(x^alpha t^i).v_{beta,j}` in `A_mu`,
    /// evaluated literally (no projection). Independent of [`WeightModule::act`].
    #[allow(clippy::too_many_arguments)]
    pub fn action_formula(
        &self,
        p: usize,
        q: usize,
        alpha: &GroupElement,
        i: &MultiIndex,
        beta: &GroupElement,
        j: &MultiIndex,
    ) -> Result<ModuleElement> {
        if p == q {
            return Err(Error::InvalidArgument("the closed formula requires p != q".into()));
        }
        let space = self.space();
        space.check_direction(p)?;
        space.check_direction(q)?;
        let ap = space.alpha_coord(alpha, p);
        let aq = space.alpha_coord(alpha, q);
        let bp = self.shifted(beta, p);
        let bq = self.shifted(beta, q);
        let (ip, iq) = (qi(i.at(p) as i64), qi(i.at(q) as i64));
        let (jp, jq) = (qi(j.at(p) as i64), qi(j.at(q) as i64));
        let target = alpha + beta;
        let ij = i.add(j);
        let mut out = ModuleElement::zero();
        out.add_term(BasisVector::new(target.clone(), ij.clone()), &ap * &bq - &aq * &bp);
        if let Some(dq) = ij.decrement(q) {
            out.add_term(BasisVector::new(target.clone(), dq), &jq * &ap - &iq * &bp);
        }
        if let Some(dp) = ij.decrement(p) {
            out.add_term(BasisVector::new(target.clone(), dp.clone()), &ip * &bq - &jp * &aq);
            if let Some(dpq) = dp.decrement(q) {
                out.add_term(BasisVector::new(target, dpq), &ip * &jq - &iq * &jp);
            }
        }
        Ok(out)
    }

    /// The generalized weight of a basis vector.
    pub fn weight_of(&self, b: &BasisVector) -> Weight {
        let amb = self
            .space()
            .group()
            .ambient_vector(&b.beta)
            .expect("basis vector validated against Gamma");
        match self.kind() {
            ModuleKind::AMu | ModuleKind::AMuQuotient | ModuleKind::GradedM => &amb + self.param(),
            ModuleKind::GradedA | ModuleKind::GradedB => amb,
        }
    }

    /// Splits `v` by generalized weight, in order of first appearance.
    pub fn weight_decompose(&self, v: &ModuleElement) -> Vec<(Weight, ModuleElement)> {
        let mut out: Vec<(Weight, ModuleElement)> = Vec::new();
        for (b, c) in v {
            let w = self.weight_of(b);
            match out.iter_mut().find(|(x, _)| *x == w) {
                Some((_, part)) => part.add_term(b.clone(), c.clone()),
                None => out.push((w, LinComb::term(b.clone(), c.clone()))),
            }
        }
        out
    }

    /// `(d_r - w_r).v`.
    pub fn shifted_coordinate_action(&self, r: usize, w: &Weight, v: &ModuleElement) -> ModuleElement {
        let space = self.space();
        let sig = space.signature();
        let wr = pairing(sig, &Derivation::coordinate(sig.l(), r), w);
        let dr = space.d(r);
        let acted = self.act(&dr, v).expect("coordinate derivations act on every kind");
        acted - v.scale(&wr)
    }

    /// Smallest `n` with `(d_r - w_r)^(n+1) v = 0` for every coordinate
    /// derivation, or `None` if `v` has a component of another weight or the
    /// iteration cap `1 + max |j|` is exceeded.
    pub fn filtration_degree(&self, v: &ModuleElement, w: &Weight) -> Option<u32> {
        if v.is_zero() {
            return Some(0);
        }
        if self.weight_decompose(v).iter().any(|(x, _)| x != w) {
            return None;
        }
        let cap = 1 + v.keys().map(|b| b.j.degree()).max().unwrap_or(0);
        let mut n = 0;
        for r in 1..=self.space().l() {
            let mut cur = v.clone();
            let mut k = 0;
            while !cur.is_zero() {
                if k > cap {
                    return None;
                }
                cur = self.shifted_coordinate_action(r, w, &cur);
                k += 1;
            }
            n = n.max(k.saturating_sub(1));
        }
        Some(n)
    }

    /// Relabels `v_{beta,j} -> v_{beta-gamma,j}`, an isomorphism `A_mu -> A_{mu+gamma}`.
    pub fn shift_map(&self, v: &ModuleElement, gamma: &GroupElement) -> Result<(WeightModule, ModuleElement)> {
        if self.kind() != ModuleKind::AMu {
            return Err(Error::KindMismatch(format!(
                "shift_map is defined on A_mu, not {}",
                self.kind()
            )));
        }
        self.check_element(v)?;
        let space = self.space();
        let shift = space.group().ambient_vector(gamma)?;
        let target = WeightModule::new(space.clone(), ModuleKind::AMu, self.param() + &shift)?;
        let image = v.map_keys(|b| BasisVector::new(&b.beta - gamma, b.j.clone()));
        Ok((target, image))
    }

    /// Basis vectors `v_{beta,j}` with `beta` in the window box and `|j|` within
    /// the degree bound, minus the zero coset in the quotient.
    pub fn window_basis(&self, window: &Window) -> Vec<BasisVector> {
        let space = self.space();
        let idx = if self.kind().is_graded() {
            vec![space.zero_index()]
        } else {
            window.indices(space.poly_vars())
        };
        let mut out = Vec::new();
        for beta in window.group_elements(space.rank()) {
            for j in &idx {
                let b = BasisVector::new(beta.clone(), j.clone());
                if self.kind() == ModuleKind::AMuQuotient && Some(&b) == self.trivial.as_ref() {
                    continue;
                }
                out.push(b);
            }
        }
        out
    }
}

fn format_derivation(d: &Derivation) -> String {
    let mut s = String::from("(");
    let mut first = true;
    for (p, c) in d.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            s.push_str(" + ");
        }
        first = false;
        s.push_str(&format!("{c}*d{}", p + 1));
    }
    if first {
        s.push('0');
    }
    s.push(')');
    s
}

/// The total order on `N^(l1+l2)`: `i > j` iff `|i| > |j|`, or `|i| = |j|` and
/// for some `s`, `i_s > j_s` while `i_p = j_p` for all `p > s`.
pub fn order_compare(i: &MultiIndex, j: &MultiIndex) -> Result<Ordering> {
    check_len("multi-index length", i.len(), j.len())?;
    let by_degree = i.degree().cmp(&j.degree());
    if by_degree != Ordering::Equal {
        return Ok(by_degree);
    }
    let (a, b) = (i.entries(), j.entries());
    for s in (0..a.len()).rev() {
        if a[s] != b[s] {
            return Ok(a[s].cmp(&b[s]));
        }
    }
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{GroupDescriptor, Signature};
    use crate::q;

    fn z3() -> Space {
        Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()))
    }

    fn graded3() -> Space {
        Space::new(GroupDescriptor::standard(Signature::new(0, 0, 3).unwrap()))
    }

    fn weight(s: &Space, v: &[Q]) -> Weight {
        Weight::new(s.signature(), v.to_vec()).unwrap()
    }

    fn ge(v: &[i64]) -> GroupElement {
        GroupElement::new(v.to_vec())
    }

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    fn bv(b: &[i64], j: &[u32]) -> BasisVector {
        BasisVector::new(ge(b), mi(j))
    }

    fn a_mu(s: &Space, mu: &[Q]) -> WeightModule {
        WeightModule::new(s.clone(), ModuleKind::AMu, weight(s, mu)).unwrap()
    }

    #[test]
    fn monomial_op_examples() {
        let s = z3();
        let m = a_mu(&s, &[qi(0), qi(0), qi(0)]);
        let r = m
            .act_monomial_op(&ge(&[0, 0, 0]), &mi(&[0, 0, 0]), 1, &ge(&[1, 0, 0]), &mi(&[2, 0, 0]))
            .unwrap();
        let expect: ModuleElement = [(bv(&[1, 0, 0], &[2, 0, 0]), qi(1)), (bv(&[1, 0, 0], &[1, 0, 0]), qi(2))]
            .into_iter()
            .collect();
        assert_eq!(r, expect);

        let mixed = Space::new(GroupDescriptor::standard(Signature::new(1, 2, 1).unwrap()));
        let m = a_mu(&mixed, &[qi(0), q(1, 2), qi(0), qi(0)]);
        let r = m
            .act_monomial_op(&ge(&[1, 0, 0]), &mi(&[0, 1, 0]), 1, &ge(&[0, 1, 0]), &mi(&[0, 2, 1]))
            .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn action_formula_examples() {
        let s = z3();
        let m = a_mu(&s, &[qi(0), qi(0), qi(0)]);
        let z = ge(&[0, 0, 0]);
        let zi = mi(&[0, 0, 0]);
        assert!(m.action_formula(1, 2, &z, &zi, &z, &zi).unwrap().is_zero());
        let r = m.action_formula(1, 2, &ge(&[1, 0, 0]), &zi, &ge(&[0, 1, 0]), &zi).unwrap();
        assert_eq!(r, LinComb::basis(bv(&[1, 1, 0], &[0, 0, 0])));
        let r = m.action_formula(1, 2, &z, &mi(&[1, 0, 0]), &z, &mi(&[0, 1, 0])).unwrap();
        assert_eq!(r, LinComb::basis(bv(&[0, 0, 0], &[0, 0, 0])));
        assert!(m.action_formula(2, 2, &z, &zi, &z, &zi).is_err());
    }

    #[test]
    fn act_examples_half_mu() {
        let s = z3();
        let m = a_mu(&s, &[q(1, 2), qi(0), qi(0)]);
        let rho = s.zero_group();
        let v0 = m.basis(ge(&[0, 0, 0]), mi(&[0, 0, 0])).unwrap();

        let op = s.d_op(1, 3, &LinComb::basis(s.x(&[0, 0, 1])), &rho).unwrap();
        let r = m.act(&op, &v0).unwrap();
        assert_eq!(r, LinComb::term(bv(&[0, 0, 1], &[0, 0, 0]), q(-1, 2)));

        let op = s.d_op(1, 2, &LinComb::basis(s.t(&[1, 1, 0])), &rho).unwrap();
        let r = m.act(&op, &v0).unwrap();
        assert_eq!(r, LinComb::term(bv(&[0, 0, 0], &[1, 0, 0]), q(-1, 2)));
    }

    #[test]
    fn trivial_vector_is_killed() {
        let s = z3();
        let m = a_mu(&s, &[qi(1), qi(0), qi(0)]);
        let t = m.trivial_vector().unwrap().clone();
        assert_eq!(t, bv(&[-1, 0, 0], &[0, 0, 0]));
        let v = LinComb::basis(t);
        for member in s.spanning_family(&Window::default(), &s.zero_group()).unwrap().members {
            assert!(m.act(&member.op, &v).unwrap().is_zero());
        }
    }

    #[test]
    fn graded_m_example() {
        let s = graded3();
        let m = WeightModule::new(s.clone(), ModuleKind::GradedM, weight(&s, &[q(1, 3), qi(0), qi(0)])).unwrap();
        let w = s.witt_term(s.x(&[1, -1, 0]), 1) + s.witt_term(s.x(&[1, -1, 0]), 2);
        let v0 = m.basis(ge(&[0, 0, 0]), mi(&[])).unwrap();
        assert_eq!(m.act(&w, &v0).unwrap(), LinComb::term(bv(&[1, -1, 0], &[]), q(1, 3)));

        let bad = s.witt_term(s.x(&[1, 0, 0]), 1);
        assert!(matches!(m.act(&bad, &v0), Err(Error::NotInKernel { .. })));
    }

    #[test]
    fn descriptor_validation() {
        let s = graded3();
        assert!(WeightModule::new(s.clone(), ModuleKind::GradedB, Weight::zero(s.signature())).is_err());
        assert!(WeightModule::new(s.clone(), ModuleKind::GradedA, Weight::zero(s.signature())).is_err());
        assert!(WeightModule::new(s.clone(), ModuleKind::GradedM, Weight::zero(s.signature())).is_ok());
        let z = z3();
        assert!(WeightModule::new(z.clone(), ModuleKind::GradedM, Weight::zero(z.signature())).is_err());
        let half = weight(&z, &[q(1, 2), qi(0), qi(0)]);
        assert!(WeightModule::new(z.clone(), ModuleKind::AMuQuotient, half).is_err());
    }

    #[test]
    fn decompose_examples() {
        let s = z3();
        let m = a_mu(&s, &[q(1, 2), qi(0), qi(0)]);
        assert!(m.weight_decompose(&ModuleElement::zero()).is_empty());
        let v = LinComb::basis(bv(&[1, 0, 0], &[1, 0, 0]));
        let parts = m.weight_decompose(&v);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, weight(&s, &[q(3, 2), qi(0), qi(0)]));
        let v2 = &v + &LinComb::basis(bv(&[0, 1, 0], &[0, 0, 0]));
        assert_eq!(m.weight_decompose(&v2).len(), 2);
    }

    #[test]
    fn filtration_examples() {
        let s = z3();
        let m = a_mu(&s, &[q(1, 2), qi(0), qi(0)]);
        let v = LinComb::basis(bv(&[1, 0, 0], &[0, 0, 0]));
        let w = weight(&s, &[q(3, 2), qi(0), qi(0)]);
        assert_eq!(m.filtration_degree(&v, &w), Some(0));
        assert_eq!(m.filtration_degree(&v, &weight(&s, &[qi(0), qi(0), qi(0)])), None);
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_compare(&mi(&[1, 1, 0]), &mi(&[2, 0, 0])).unwrap(), Ordering::Greater);
        assert_eq!(order_compare(&mi(&[1, 1, 0]), &mi(&[1, 1, 0])).unwrap(), Ordering::Equal);
        assert_eq!(order_compare(&mi(&[0, 0, 1]), &mi(&[5, 0, 0])).unwrap(), Ordering::Less);
        assert!(order_compare(&mi(&[0, 0]), &mi(&[0, 0, 0])).is_err());
    }

    #[test]
    fn shift_examples() {
        let s = z3();
        let m = a_mu(&s, &[q(1, 2), qi(0), qi(0)]);
        let v = LinComb::basis(bv(&[1, 0, -1], &[0, 1, 0]));
        let (target, img) = m.shift_map(&v, &ge(&[0, 0, 0])).unwrap();
        assert_eq!(img, v);
        assert_eq!(target.param(), m.param());
        let (target, img) = m.shift_map(&v, &ge(&[1, 0, 0])).unwrap();
        assert_eq!(img, LinComb::basis(bv(&[0, 0, -1], &[0, 1, 0])));
        assert_eq!(target.param(), &weight(&s, &[q(3, 2), qi(0), qi(0)]));
        let quot = WeightModule::new(s.clone(), ModuleKind::AMuQuotient, Weight::zero(s.signature())).unwrap();
        assert!(quot.shift_map(&v, &ge(&[1, 0, 0])).is_err());
    }

    #[test]
    fn quotient_drops_zero_coset() {
        let s = z3();
        let quot = WeightModule::new(s.clone(), ModuleKind::AMuQuotient, Weight::zero(s.signature())).unwrap();
        let v = LinComb::basis(bv(&[0, 0, 0], &[1, 0, 0]));
        // d_1 . v_{0,1_[1]} = v_{0,0}, which is zero in the quotient
        assert!(quot.act(&s.d(1), &v).unwrap().is_zero());
        assert_eq!(quot.window_basis(&Window::default()).len(), 27 * 10 - 1);
    }
}
