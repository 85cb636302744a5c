//! Canonical text form of elements.
//!
//! Terms appear in key order, coefficients in lowest terms. A coefficient of
//! one is omitted; the first term carries a sign only when negative.
//!
//! ```text
//! algebra:  3/2*x{1,0,0}*t[0,1,0] - 1
//! witt:     x{1,0,0}*d2 + d3
//! module:   -1/2*v{0,0,1}[0,0,0]
//! ```

use std::fmt::Write;

use crate::algebra::{AlgebraElement, Monomial};
use crate::lie::WittElement;
use crate::linear::LinComb;
use crate::modules::{BasisVector, ModuleElement};
use crate::{Q, Scalar};

fn monomial_factors(m: &Monomial) -> Vec<String> {
    let mut f = Vec::new();
    if !m.alpha.is_zero() {
        f.push(format!("x{}", m.alpha));
    }
    if !m.idx.is_zero() {
        f.push(format!("t{}", m.idx));
    }
    f
}

fn basis_factors(b: &BasisVector) -> Vec<String> {
    if b.j.is_empty() {
        vec![format!("v{}", b.beta)]
    } else {
        vec![format!("v{}{}", b.beta, b.j)]
    }
}

fn render<K: Ord + Clone>(v: &LinComb<K>, factors: impl Fn(&K) -> Vec<String>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (k, c)) in v.iter().enumerate() {
        let neg = c.is_negative();
        match (n, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs: Q = c.abs();
        let f = factors(k);
        if f.is_empty() {
            write!(out, "{abs}").unwrap();
        } else {
            if !abs.is_one() {
                write!(out, "{abs}*").unwrap();
            }
            out.push_str(&f.join("*"));
        }
    }
    out
}

pub fn algebra(a: &AlgebraElement) -> String {
    render(a, monomial_factors)
}

pub fn witt(w: &WittElement) -> String {
    render(w, |t| {
        let mut f = monomial_factors(&t.mono);
        f.push(format!("d{}", t.dir));
        f
    })
}

pub fn module(v: &ModuleElement) -> String {
    render(v, basis_factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Space;
    use crate::lattice::{GroupDescriptor, GroupElement, Signature};
    use crate::{q, qi, MultiIndex};

    #[test]
    fn renders_canonically() {
        let s = Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()));
        assert_eq!(witt(&s.witt_term(s.x(&[1, 0, 0]), 2)), "x{1,0,0}*d2");
        let w = s.witt_term(s.t(&[0, 1, 0]), 1).scale(&q(-3, 2)) + s.d(3);
        assert_eq!(witt(&w), "d3 - 3/2*t[0,1,0]*d1");
        assert_eq!(algebra(&s.one().scale(&qi(-2))), "-2");
        assert_eq!(algebra(&AlgebraElement::zero()), "0");
        let v = LinComb::term(
            BasisVector::new(GroupElement::new(vec![0, 0, 1]), MultiIndex::new(vec![0, 0, 0])),
            q(-1, 2),
        );
        assert_eq!(module(&v), "-1/2*v{0,0,1}[0,0,0]");
        let g = LinComb::basis(BasisVector::new(GroupElement::new(vec![1, -1, 0]), MultiIndex::new(vec![])));
        assert_eq!(module(&g), "v{1,-1,0}");
    }
}
