//! The semigroup algebra `A = F[Gamma x N^(l1+l2)]` with basis `x^alpha t^i`
//! and its commuting derivations `d_1, ..., d_l`.

use std::fmt;
use std::sync::Arc;

use crate::error::{check_index, check_len, Result};
use crate::lattice::{GroupDescriptor, GroupElement, Signature};
use crate::linear::LinComb;
use crate::{qi, Q, Scalar};

/// Exponent vector `i in N^(l1+l2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `k * 1_[p]` (1-based `p`).
    pub fn unit(n: usize, p: usize, k: u32) -> Self {
        let mut v = vec![0; n];
        v[p - 1] = k;
        Self(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|i|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `i_p` for 1-based `p`; zero beyond the polynomial variables.
    pub fn at(&self, p: usize) -> u32 {
        self.0.get(p - 1).copied().unwrap_or(0)
    }

    /// `i - 1_[p]`, or `None` if it leaves `N^(l1+l2)`.
    pub fn decrement(&self, p: usize) -> Option<Self> {
        if self.at(p) == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[p - 1] -= 1;
        Some(Self(v))
    }

    /// `i + 1_[p]`; `None` if `p` is not a polynomial direction.
    pub fn increment(&self, p: usize) -> Option<Self> {
        if p == 0 || p > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        v[p - 1] += 1;
        Some(Self(v))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Basis element `x^alpha t^i`. Ordered by `(alpha, i)` lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub alpha: GroupElement,
    pub idx: MultiIndex,
}

impl Monomial {
    pub fn new(alpha: GroupElement, idx: MultiIndex) -> Self {
        Self { alpha, idx }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            alpha: &self.alpha + &other.alpha,
            idx: self.idx.add(&other.idx),
        }
    }

    pub fn is_one(&self) -> bool {
        self.alpha.is_zero() && self.idx.is_zero()
    }
}

pub type AlgebraElement = LinComb<Monomial>;

/// Shared context for all elements over one `(Signature, Gamma)` pair.
///
/// Elements are plain values; every operation that needs `Gamma` (to read
/// `alpha_p`) or the signature (to validate shapes) goes through a `Space`.
#[derive(Clone, Debug)]
pub struct Space {
    group: Arc<GroupDescriptor>,
}

impl Space {
    pub fn new(group: GroupDescriptor) -> Self {
        Self {
            group: Arc::new(group),
        }
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn signature(&self) -> &Signature {
        self.group.signature()
    }

    pub fn l(&self) -> usize {
        self.signature().l()
    }

    pub fn poly_vars(&self) -> usize {
        self.signature().poly_vars()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn zero_group(&self) -> GroupElement {
        GroupElement::zero(self.rank())
    }

    pub fn zero_index(&self) -> MultiIndex {
        MultiIndex::zero(self.poly_vars())
    }

    pub fn one(&self) -> AlgebraElement {
        LinComb::basis(Monomial::new(self.zero_group(), self.zero_index()))
    }

    pub fn monomial(&self, alpha: GroupElement, idx: MultiIndex) -> Result<Monomial> {
        self.group.check_element(&alpha)?;
        check_len("multi-index length (l1 + l2)", self.poly_vars(), idx.len())?;
        Ok(Monomial::new(alpha, idx))
    }

    /// `x^alpha` as a monomial.
    pub fn x(&self, alpha: &[i64]) -> Monomial {
        Monomial::new(GroupElement::new(alpha.to_vec()), self.zero_index())
    }

    /// `t^i` as a monomial.
    pub fn t(&self, idx: &[u32]) -> Monomial {
        Monomial::new(self.zero_group(), MultiIndex::new(idx.to_vec()))
    }

    /// `x^alpha t^i` as a monomial.
    pub fn xt(&self, alpha: &[i64], idx: &[u32]) -> Monomial {
        Monomial::new(GroupElement::new(alpha.to_vec()), MultiIndex::new(idx.to_vec()))
    }

    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        self.group.check_element(&m.alpha)?;
        check_len("multi-index length (l1 + l2)", self.poly_vars(), m.idx.len())
    }

    pub fn check_element(&self, a: &AlgebraElement) -> Result<()> {
        a.keys().try_for_each(|m| self.check_monomial(m))
    }

    pub fn check_direction(&self, p: usize) -> Result<()> {
        check_index("direction", p, self.l())
    }

    /// `alpha_p`, the `p`-th ambient coordinate of `alpha` (1-based).
    pub fn alpha_coord(&self, alpha: &GroupElement, p: usize) -> Q {
        self.group.ambient_coord(alpha, p)
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(a + b)
    }

    pub fn negate(&self, a: &AlgebraElement) -> AlgebraElement {
        -a
    }

    pub fn scale(&self, c: &Q, a: &AlgebraElement) -> AlgebraElement {
        a.scale(c)
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (ma, ca) in a {
            for (mb, cb) in b {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// `d_p(x^alpha t^i) = alpha_p x^alpha t^i + i_p x^alpha t^(i - 1_[p])`,
    /// the second term dropped when `i - 1_[p]` leaves `N^(l1+l2)`.
    pub fn partial_monomial(&self, p: usize, m: &Monomial) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        let a = self.alpha_coord(&m.alpha, p);
        if !a.is_zero() {
            out.add_term(m.clone(), a);
        }
        if let Some(dec) = m.idx.decrement(p) {
            out.add_term(
                Monomial::new(m.alpha.clone(), dec),
                qi(m.idx.at(p) as i64),
            );
        }
        out
    }

    pub fn partial(&self, p: usize, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_direction(p)?;
        self.check_element(a)?;
        Ok(self.partial_unchecked(p, a))
    }

    pub(crate) fn partial_unchecked(&self, p: usize, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in a {
            out.add_scaled(&self.partial_monomial(p, m), c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_space() -> Space {
        Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()))
    }

    fn mixed_space() -> Space {
        Space::new(GroupDescriptor::standard(Signature::new(1, 2, 1).unwrap()))
    }

    #[test]
    fn multiply_examples() {
        let s = z3_space();
        let a = LinComb::basis(s.xt(&[1, 0, 0], &[2, 0, 0]));
        let b = LinComb::basis(s.xt(&[0, 1, 0], &[0, 1, 0]));
        assert_eq!(
            s.multiply(&a, &b).unwrap(),
            LinComb::basis(s.xt(&[1, 1, 0], &[2, 1, 0]))
        );
        assert_eq!(s.multiply(&a, &s.one()).unwrap(), a);

        let sum = &LinComb::basis(s.x(&[1, 0, 0])) + &LinComb::basis(s.x(&[0, 0, 1]));
        let g = LinComb::basis(s.x(&[0, 2, 0]));
        let expect = &LinComb::basis(s.x(&[1, 2, 0])) + &LinComb::basis(s.x(&[0, 2, 1]));
        assert_eq!(s.multiply(&sum, &g).unwrap(), expect);
    }

    #[test]
    fn partial_examples() {
        let s = z3_space();
        let a = LinComb::basis(s.xt(&[2, 0, 0], &[3, 0, 0]));
        let expect: AlgebraElement = [
            (s.xt(&[2, 0, 0], &[3, 0, 0]), qi(2)),
            (s.xt(&[2, 0, 0], &[2, 0, 0]), qi(3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(s.partial(1, &a).unwrap(), expect);
        for p in 1..=3 {
            assert!(s.partial(p, &s.one()).unwrap().is_zero());
        }

        let m = mixed_space();
        let a = LinComb::basis(m.xt(&[1, 1, 1], &[0, 1, 0]));
        assert!(m.partial(1, &a).unwrap().is_zero());
    }

    #[test]
    fn partial_rejects_bad_direction() {
        let s = z3_space();
        assert!(s.partial(0, &s.one()).is_err());
        assert!(s.partial(4, &s.one()).is_err());
    }

    #[test]
    fn scalar_ops() {
        let s = z3_space();
        let a = LinComb::basis(s.x(&[1, 0, 0]));
        assert!(s.add(&a, &s.negate(&a)).unwrap().is_zero());
        assert!(s.scale(&qi(0), &a).is_empty());
        let five = s.add(&a.scale(&qi(2)), &a.scale(&qi(3))).unwrap();
        assert_eq!(five, a.scale(&qi(5)));
        let bad = LinComb::basis(Monomial::new(GroupElement::new(vec![1]), MultiIndex::zero(3)));
        assert!(s.add(&a, &bad).is_err());
    }
}
