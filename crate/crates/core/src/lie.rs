//! The Witt algebra `W = A * D`, its bracket and divergence, and the
//! divergence-free operators `D_{p,q}(u)`.

use crate::algebra::{AlgebraElement, Monomial, Space};
use crate::error::Result;
use crate::lattice::GroupElement;
use crate::linear::LinComb;
use crate::window::Window;
use crate::{qi, Scalar};

/// Basis element `x^alpha t^i d_dir` of `W`. Ordered by `(monomial, dir)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WittTerm {
    pub mono: Monomial,
    /// Direction `p` in `1..=l`.
    pub dir: usize,
}

impl WittTerm {
    pub fn new(mono: Monomial, dir: usize) -> Self {
        Self { mono, dir }
    }
}

/// `sum_p u_p d_p` with `u_p in A`, stored term by term.
pub type WittElement = LinComb<WittTerm>;

/// One member `D_{p,q}(x^alpha t^i)` of a spanning family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub p: usize,
    pub q: usize,
    pub mono: Monomial,
    pub op: WittElement,
}

/// The nonzero operators `D_{p,q}(x^alpha t^i)`, `p < q`, over a window.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpanningFamily {
    pub members: Vec<FamilyMember>,
}

impl SpanningFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ops(&self) -> impl Iterator<Item = &WittElement> {
        self.members.iter().map(|m| &m.op)
    }
}

impl Space {
    /// `u * d_p` for `u in A`.
    pub fn times_direction(&self, u: &AlgebraElement, p: usize) -> WittElement {
        u.iter()
            .map(|(m, c)| (WittTerm::new(m.clone(), p), c.clone()))
            .collect()
    }

    /// The single operator `x^alpha t^i d_p`.
    pub fn witt_term(&self, mono: Monomial, p: usize) -> WittElement {
        LinComb::basis(WittTerm::new(mono, p))
    }

    /// The pure derivation `d_p`.
    pub fn d(&self, p: usize) -> WittElement {
        self.witt_term(Monomial::new(self.zero_group(), self.zero_index()), p)
    }

    pub fn check_witt(&self, w: &WittElement) -> Result<()> {
        w.keys().try_for_each(|t| {
            self.check_direction(t.dir)?;
            self.check_monomial(&t.mono)
        })
    }

    /// The coefficient `u_p` of `d_p` in `w`.
    pub fn component(&self, w: &WittElement, p: usize) -> AlgebraElement {
        w.iter()
            .filter(|(t, _)| t.dir == p)
            .map(|(t, c)| (t.mono.clone(), c.clone()))
            .collect()
    }

    /// `w(a) = sum_p u_p d_p(a)`.
    pub fn apply(&self, w: &WittElement, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_witt(w)?;
        self.check_element(a)?;
        Ok(self.apply_unchecked(w, a))
    }

    pub(crate) fn apply_unchecked(&self, w: &WittElement, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for p in 1..=self.l() {
            let u = self.component(w, p);
            if u.is_zero() {
                continue;
            }
            let da = self.partial_unchecked(p, a);
            if da.is_zero() {
                continue;
            }
            out.add_assign_ref(&self.mul_unchecked(&u, &da));
        }
        out
    }

    /// `[sum u_p d_p, sum v_q d_q] = sum_{p,q} (u_p d_p(v_q) - v_p d_p(u_q)) d_q`.
    pub fn bracket(&self, u: &WittElement, v: &WittElement) -> Result<WittElement> {
        self.check_witt(u)?;
        self.check_witt(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub fn bracket_unchecked(&self, u: &WittElement, v: &WittElement) -> WittElement {
        // d_p(x^a t^i) = a_p x^a t^i + i_p x^a t^(i-1_[p]), expanded inline
        let mut out = WittElement::zero();
        for (tu, ku) in u {
            for (tv, kv) in v {
                let c = ku * kv;
                let prod = tu.mono.mul(&tv.mono);
                // m1 d_p(m2) d_q
                let a2p = self.alpha_coord(&tv.mono.alpha, tu.dir);
                if !a2p.is_zero() {
                    out.add_term(WittTerm::new(prod.clone(), tv.dir), &c * a2p);
                }
                let i2p = tv.mono.idx.at(tu.dir);
                if i2p > 0 {
                    let idx = prod.idx.decrement(tu.dir).expect("positive exponent");
                    out.add_term(WittTerm::new(Monomial::new(prod.alpha.clone(), idx), tv.dir), &c * qi(i2p as i64));
                }
                // - m2 d_q(m1) d_p
                let a1q = self.alpha_coord(&tu.mono.alpha, tv.dir);
                if !a1q.is_zero() {
                    out.add_term(WittTerm::new(prod.clone(), tu.dir), -(&c * a1q));
                }
                let i1q = tu.mono.idx.at(tv.dir);
                if i1q > 0 {
                    let idx = prod.idx.decrement(tv.dir).expect("positive exponent");
                    out.add_term(WittTerm::new(Monomial::new(prod.alpha, idx), tu.dir), -(&c * qi(i1q as i64)));
                }
            }
        }
        out
    }

    /// `div(sum u_i d_i) = sum_i d_i(u_i)`.
    pub fn divergence(&self, w: &WittElement) -> Result<AlgebraElement> {
        self.check_witt(w)?;
        Ok(self.divergence_unchecked(w))
    }

    pub(crate) fn divergence_unchecked(&self, w: &WittElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (t, c) in w {
            out.add_scaled(&self.partial_monomial(t.dir, &t.mono), c);
        }
        out
    }

    /// `D_{p,q}(u) = x^rho (d_p(x^-rho u) d_q - d_q(x^-rho u) d_p)`. Zero when `p == q`.
    pub fn d_op(&self, p: usize, q: usize, u: &AlgebraElement, rho: &GroupElement) -> Result<WittElement> {
        self.check_direction(p)?;
        self.check_direction(q)?;
        self.check_element(u)?;
        self.group().check_element(rho)?;
        Ok(self.d_op_unchecked(p, q, u, rho))
    }

    pub(crate) fn d_op_unchecked(&self, p: usize, q: usize, u: &AlgebraElement, rho: &GroupElement) -> WittElement {
        if p == q {
            return WittElement::zero();
        }
        let zero_idx = self.zero_index();
        let shift = |g: GroupElement| -> AlgebraElement {
            LinComb::basis(Monomial::new(g, zero_idx.clone()))
        };
        let down = self.mul_unchecked(&shift(-rho), u);
        let up = shift(rho.clone());
        let dp = self.mul_unchecked(&up, &self.partial_unchecked(p, &down));
        let dq = self.mul_unchecked(&up, &self.partial_unchecked(q, &down));
        self.times_direction(&dp, q) - self.times_direction(&dq, p)
    }

    /// `D_{p,q}(x^alpha t^i)` at `rho = 0`, expanded directly from the closed form
    /// `x^alpha t^i (alpha_p d_q - alpha_q d_p) + i_p x^alpha t^(i-1_[p]) d_q - i_q x^alpha t^(i-1_[q]) d_p`.
    ///
    /// Independent of [`Space::d_op`]; used to cross-check it.
    pub fn d_op_expanded(&self, p: usize, q: usize, mono: &Monomial) -> Result<WittElement> {
        self.check_direction(p)?;
        self.check_direction(q)?;
        self.check_monomial(mono)?;
        let mut out = WittElement::zero();
        let ap = self.alpha_coord(&mono.alpha, p);
        let aq = self.alpha_coord(&mono.alpha, q);
        out.add_term(WittTerm::new(mono.clone(), q), ap);
        out.add_term(WittTerm::new(mono.clone(), p), -aq);
        if let Some(dec) = mono.idx.decrement(p) {
            out.add_term(
                WittTerm::new(Monomial::new(mono.alpha.clone(), dec), q),
                qi(mono.idx.at(p) as i64),
            );
        }
        if let Some(dec) = mono.idx.decrement(q) {
            out.add_term(
                WittTerm::new(Monomial::new(mono.alpha.clone(), dec), p),
                -qi(mono.idx.at(q) as i64),
            );
        }
        Ok(out)
    }

    /// All nonzero `D_{p,q}(x^alpha t^i)` with `p < q` and `x^alpha t^i` in the window.
    pub fn spanning_family(&self, window: &Window, rho: &GroupElement) -> Result<SpanningFamily> {
        self.group().check_element(rho)?;
        let l = self.l();
        let mut members = Vec::new();
        for mono in window.monomials(self.rank(), self.poly_vars()) {
            let u = LinComb::basis(mono.clone());
            for p in 1..=l {
                for q in p + 1..=l {
                    let op = self.d_op_unchecked(p, q, &u, rho);
                    if !op.is_zero() {
                        members.push(FamilyMember {
                            p,
                            q,
                            mono: mono.clone(),
                            op,
                        });
                    }
                }
            }
        }
        Ok(SpanningFamily { members })
    }

    /// `ad(x)^n (y)`.
    pub fn ad_power(&self, x: &WittElement, y: &WittElement, n: usize) -> WittElement {
        let mut cur = y.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = self.bracket_unchecked(x, &cur);
        }
        cur
    }

    /// Whether every term of `w` lies in the window.
    pub fn witt_in_window(&self, w: &WittElement, window: &Window) -> bool {
        w.keys().all(|t| window.contains(&t.mono))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{GroupDescriptor, Signature};

    fn z3() -> Space {
        Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()))
    }

    fn mono(_: &Space, m: Monomial) -> AlgebraElement {
        LinComb::basis(m)
    }

    #[test]
    fn apply_examples() {
        let s = z3();
        let x1 = mono(&s, s.x(&[1, 0, 0]));
        assert_eq!(s.apply(&s.d(1), &x1).unwrap(), x1);
        for p in 1..=3 {
            assert!(s.apply(&s.d(p), &s.one()).unwrap().is_zero());
        }
        let w = s.witt_term(s.x(&[1, 0, 0]), 2);
        let a = mono(&s, s.t(&[0, 1, 0]));
        assert_eq!(s.apply(&w, &a).unwrap(), x1);
    }

    #[test]
    fn bracket_examples() {
        let s = z3();
        let w = s.witt_term(s.xt(&[1, 0, 0], &[1, 0, 0]), 2) + s.d(3);
        assert!(s.bracket(&w, &w).unwrap().is_zero());
        let b = s.bracket(&s.d(1), &s.witt_term(s.x(&[1, 0, 0]), 2)).unwrap();
        assert_eq!(b, s.witt_term(s.x(&[1, 0, 0]), 2));
    }

    #[test]
    fn grading_operator_eigen_identity() {
        // [D_{1,2}(t^{(1,1,0)}), D_{1,2}(t^i)] = (i_2 - i_1) D_{1,2}(t^i)
        let s = z3();
        let rho = s.zero_group();
        let h = s.d_op(1, 2, &mono(&s, s.t(&[1, 1, 0])), &rho).unwrap();
        let x = s.d_op(1, 2, &mono(&s, s.t(&[2, 0, 0])), &rho).unwrap();
        assert_eq!(s.bracket(&h, &x).unwrap(), x.scale(&qi(-2)));
    }

    #[test]
    fn divergence_examples() {
        let s = z3();
        for p in 1..=3 {
            assert!(s.divergence(&s.d(p)).unwrap().is_zero());
        }
        let w = s.witt_term(s.x(&[1, 1, 0]), 1);
        assert_eq!(s.divergence(&w).unwrap(), mono(&s, s.x(&[1, 1, 0])));
        assert!(s.divergence(&s.witt_term(s.x(&[1, 0, 0]), 2)).unwrap().is_zero());
    }

    #[test]
    fn d_op_examples() {
        let s = z3();
        let rho = s.zero_group();
        let u = mono(&s, s.xt(&[1, 0, 0], &[1, 0, 0]));
        assert!(s.d_op(2, 2, &u, &rho).unwrap().is_zero());
        let expect = s.witt_term(s.xt(&[1, 0, 0], &[1, 0, 0]), 2) + s.witt_term(s.x(&[1, 0, 0]), 2);
        assert_eq!(s.d_op(1, 2, &u, &rho).unwrap(), expect);
        let u = mono(&s, s.t(&[1, 1, 0]));
        let expect = s.witt_term(s.t(&[0, 1, 0]), 2) - s.witt_term(s.t(&[1, 0, 0]), 1);
        assert_eq!(s.d_op(1, 2, &u, &rho).unwrap(), expect);
        assert!(s.d_op(0, 2, &u, &rho).is_err());
    }

    #[test]
    fn d_op_with_rho_is_divergence_twisted() {
        // div(x^-rho D) = 0 for the rho-twisted operator.
        let s = z3();
        let rho = GroupElement::new(vec![1, 0, -1]);
        let u = mono(&s, s.xt(&[0, 1, 1], &[1, 0, 1]));
        let d = s.d_op(1, 3, &u, &rho).unwrap();
        let twisted: WittElement = d
            .iter()
            .map(|(t, c)| (WittTerm::new(t.mono.mul(&s.x(&[-1, 0, 1])), t.dir), c.clone()))
            .collect();
        assert!(s.divergence(&twisted).unwrap().is_zero());
    }

    #[test]
    fn empty_family_for_constants() {
        let s = z3();
        let w = Window::default().with_bounds(0, 0);
        assert!(s.spanning_family(&w, &s.zero_group()).unwrap().is_empty());
    }
}
