//! The filtration order and filtration degrees against brute-force oracles.

use std::cmp::Ordering;

use divfree_core::modules::order_compare;
use divfree_core::{
    q, qi, BasisVector, GroupDescriptor, GroupElement, LinComb, ModuleElement, ModuleKind, MultiIndex, Signature,
    Space, Weight, WeightModule,
};
use proptest::prelude::*;

/// `i > j` straight from the definition: a larger degree, or equal degree and
/// some `s` with `i_s > j_s` and `i_p = j_p` for every `p > s`.
fn greater(i: &[u32], j: &[u32]) -> bool {
    let (di, dj): (u32, u32) = (i.iter().sum(), j.iter().sum());
    if di != dj {
        return di > dj;
    }
    (0..i.len()).any(|s| i[s] > j[s] && (s + 1..i.len()).all(|p| i[p] == j[p]))
}

fn index(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=3, n)
}

proptest! {
    #[test]
    fn comparator_matches_definition((i, j) in (1usize..=6).prop_flat_map(|n| (index(n), index(n)))) {
        let got = order_compare(&MultiIndex::new(i.clone()), &MultiIndex::new(j.clone())).unwrap();
        let want = if i == j { Ordering::Equal } else if greater(&i, &j) { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(got, want);
    }

    #[test]
    fn comparator_is_transitive((a, b, c) in (1usize..=5).prop_flat_map(|n| (index(n), index(n), index(n)))) {
        let cmp = |x: &Vec<u32>, y: &Vec<u32>| order_compare(&MultiIndex::new(x.clone()), &MultiIndex::new(y.clone())).unwrap();
        if cmp(&a, &b) == Ordering::Greater && cmp(&b, &c) == Ordering::Greater {
            prop_assert_eq!(cmp(&a, &c), Ordering::Greater);
        }
    }

    /// On a single weight space of `A_mu`, `(d_r - mu_r - beta_r)` lowers `j_r`
    /// by one, so the filtration degree is the largest single exponent.
    #[test]
    fn filtration_degree_is_largest_exponent(
        terms in prop::collection::vec((index(3), (-4i64..=4).prop_filter("nonzero", |c| *c != 0)), 1..5)
    ) {
        let space = Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()));
        let mu = Weight::new(space.signature(), vec![q(1, 2), qi(0), qi(0)]).unwrap();
        let m = WeightModule::new(space, ModuleKind::AMu, mu.clone()).unwrap();
        let beta = GroupElement::new(vec![1, -1, 0]);
        let v: ModuleElement = terms
            .iter()
            .map(|(j, c)| (BasisVector::new(beta.clone(), MultiIndex::new(j.clone())), qi(*c)))
            .collect::<LinComb<_>>();
        let w = m.weight_of(&BasisVector::new(beta.clone(), MultiIndex::zero(3)));
        let want = v.keys().flat_map(|b| b.j.entries().to_vec()).max();
        if v.is_zero() {
            prop_assert_eq!(m.filtration_degree(&v, &w), Some(0));
        } else {
            prop_assert_eq!(m.filtration_degree(&v, &w), want);
        }
    }
}

#[test]
fn filtration_degree_rejects_mixed_weights() {
    let space = Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()));
    let m = WeightModule::new(space.clone(), ModuleKind::AMu, Weight::zero(space.signature())).unwrap();
    let a = BasisVector::new(GroupElement::new(vec![0, 0, 0]), MultiIndex::zero(3));
    let b = BasisVector::new(GroupElement::new(vec![1, 0, 0]), MultiIndex::zero(3));
    let v: ModuleElement = LinComb::basis(a.clone()) + LinComb::basis(b);
    assert_eq!(m.filtration_degree(&v, &m.weight_of(&a)), None);
}

#[test]
fn lengths_must_agree() {
    assert!(order_compare(&MultiIndex::new(vec![1]), &MultiIndex::new(vec![1, 0])).is_err());
}
