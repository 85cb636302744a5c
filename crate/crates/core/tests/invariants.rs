//! Algebraic invariants on random elements of the default and mixed spaces.

use divfree_core::{
    q, qi, AlgebraElement, GroupDescriptor, GroupElement, Monomial, MultiIndex, Signature, Space, WittElement,
    WittTerm, Q,
};
use proptest::prelude::*;

fn default_space() -> Space {
    Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()))
}

fn mixed_space() -> Space {
    let gens = vec![vec![qi(1), qi(0), qi(0)], vec![q(1, 2), qi(1), qi(0)], vec![qi(0), q(1, 3), qi(1)]];
    Space::new(GroupDescriptor::new(Signature::new(1, 2, 1).unwrap(), gens).unwrap())
}

fn space(which: bool) -> Space {
    if which {
        mixed_space()
    } else {
        default_space()
    }
}

fn coeff() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn monomial(s: &Space) -> impl Strategy<Value = Monomial> {
    (
        prop::collection::vec(-1i64..=1, s.rank()),
        prop::collection::vec(0u32..=2, s.poly_vars()),
    )
        .prop_map(|(a, i)| Monomial::new(GroupElement::new(a), MultiIndex::new(i)))
}

fn algebra(s: &Space) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((monomial(s), coeff()), 0..4).prop_map(|ts| ts.into_iter().collect())
}

fn witt(s: &Space) -> impl Strategy<Value = WittElement> {
    let l = s.l();
    prop::collection::vec((monomial(s), 1..=l, coeff()), 0..4)
        .prop_map(|ts| ts.into_iter().map(|(m, p, c)| (WittTerm::new(m, p), c)).collect())
}

/// A space together with elements drawn from it.
fn with_space<T: std::fmt::Debug>(
    f: impl Fn(&Space) -> BoxedStrategy<T> + Clone + 'static,
) -> impl Strategy<Value = (bool, T)> {
    any::<bool>().prop_flat_map(move |which| {
        let s = space(which);
        f(&s).prop_map(move |t| (which, t))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_is_commutative_and_associative(
        (which, (a, b, c)) in with_space(|s| (algebra(s), algebra(s), algebra(s)).boxed())
    ) {
        let s = space(which);
        let ab = s.multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &s.multiply(&b, &a).unwrap());
        let left = s.multiply(&ab, &c).unwrap();
        let right = s.multiply(&a, &s.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn operators_satisfy_leibniz(
        (which, (w, a, b)) in with_space(|s| (witt(s), algebra(s), algebra(s)).boxed())
    ) {
        let s = space(which);
        let lhs = s.apply(&w, &s.multiply(&a, &b).unwrap()).unwrap();
        let rhs = s.multiply(&s.apply(&w, &a).unwrap(), &b).unwrap()
            + s.multiply(&a, &s.apply(&w, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_the_commutator_of_actions(
        (which, (u, v, a)) in with_space(|s| (witt(s), witt(s), algebra(s)).boxed())
    ) {
        let s = space(which);
        let lhs = s.apply(&s.bracket(&u, &v).unwrap(), &a).unwrap();
        let rhs = s.apply(&u, &s.apply(&v, &a).unwrap()).unwrap() - s.apply(&v, &s.apply(&u, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(
        (which, (a, b, c)) in with_space(|s| (witt(s), witt(s), witt(s)).boxed())
    ) {
        let s = space(which);
        let br = |x: &WittElement, y: &WittElement| s.bracket(x, y).unwrap();
        prop_assert_eq!(br(&a, &b), -br(&b, &a));
        let jac = br(&br(&a, &b), &c) + br(&br(&b, &c), &a) + br(&br(&c, &a), &b);
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn divergence_of_bracket(
        (which, (u, v)) in with_space(|s| (witt(s), witt(s)).boxed())
    ) {
        // div [u,v] = u(div v) - v(div u)
        let s = space(which);
        let lhs = s.divergence(&s.bracket(&u, &v).unwrap()).unwrap();
        let rhs = s.apply(&u, &s.divergence(&v).unwrap()).unwrap() - s.apply(&v, &s.divergence(&u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_operators_are_divergence_free_and_antisymmetric(
        (which, (u, p, q)) in with_space(|s| (algebra(s), 1..=s.l(), 1..=s.l()).boxed())
    ) {
        let s = space(which);
        let rho = s.zero_group();
        let d = s.d_op(p, q, &u, &rho).unwrap();
        prop_assert!(s.divergence(&d).unwrap().is_zero());
        prop_assert_eq!(&d, &-s.d_op(q, p, &u, &rho).unwrap());
        if p == q {
            prop_assert!(d.is_zero());
        }
    }

    #[test]
    fn brackets_of_d_operators_stay_divergence_free(
        (which, (u, v, p, q, r, t)) in with_space(|s| {
            let l = s.l();
            (algebra(s), algebra(s), 1..=l, 1..=l, 1..=l, 1..=l).boxed()
        })
    ) {
        let s = space(which);
        let rho = s.zero_group();
        let a = s.d_op(p, q, &u, &rho).unwrap();
        let b = s.d_op(r, t, &v, &rho).unwrap();
        prop_assert!(s.divergence(&s.bracket(&a, &b).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn mismatched_shapes_are_rejected() {
    let s = default_space();
    let bad = Monomial::new(GroupElement::new(vec![1, 0]), MultiIndex::zero(3));
    let a: AlgebraElement = std::iter::once((bad, qi(1))).collect();
    assert!(s.multiply(&a, &s.one()).is_err());
    assert!(s.d_op(1, 4, &s.one(), &s.zero_group()).is_err());
    assert!(s.d_op(1, 2, &s.one(), &GroupElement::new(vec![0])).is_err());
}
