//! Graded modules `M_mu`, `A_eta`, `B_eta` and the quotient `A_mu'`.

use divfree_core::lattice::kernel_basis;
use divfree_core::verify::Verifier;
use divfree_core::{
    q, qi, BasisVector, Error, GroupDescriptor, GroupElement, LinComb, ModuleElement, ModuleKind, Monomial,
    MultiIndex, Signature, Space, Weight, WeightModule, Window, WittElement, WittTerm, Q,
};
use proptest::prelude::*;

fn graded_space() -> Space {
    Space::new(GroupDescriptor::standard(Signature::new(0, 0, 3).unwrap()))
}

/// The mixed `Gamma` seen by the graded algebra `S(0,0,3; Gamma)`.
fn graded_mixed() -> Space {
    let gens = vec![vec![qi(1), qi(0), qi(0)], vec![q(1, 2), qi(1), qi(0)], vec![qi(0), q(1, 3), qi(1)]];
    Space::new(GroupDescriptor::new(Signature::new(0, 0, 3).unwrap(), gens).unwrap())
}

fn weight(s: &Space, v: &[Q]) -> Weight {
    Weight::new(s.signature(), v.to_vec()).unwrap()
}

fn ge(c: &[i64]) -> GroupElement {
    GroupElement::new(c.to_vec())
}

fn v(c: &[i64]) -> ModuleElement {
    LinComb::basis(BasisVector::new(ge(c), MultiIndex::zero(0)))
}

/// `x^alpha (sum_p c_p d_p)`.
fn op(s: &Space, alpha: &[i64], c: &[Q]) -> WittElement {
    c.iter()
        .enumerate()
        .map(|(p, c)| (WittTerm::new(Monomial::new(ge(alpha), s.zero_index()), p + 1), c.clone()))
        .collect()
}

#[test]
fn action_tables() {
    let s = graded_space();
    let eta = weight(&s, &[qi(2), qi(0), qi(0)]);
    // x^(0,1,0) d1 is in the kernel of alpha = (0,1,0)
    let a = op(&s, &[0, 1, 0], &[qi(1), qi(0), qi(0)]);

    let m = WeightModule::new(s.clone(), ModuleKind::GradedM, eta.clone()).unwrap();
    assert_eq!(m.act(&a, &v(&[1, 0, 0])).unwrap(), v(&[1, 1, 0]).scale(&qi(3)));

    let am = WeightModule::new(s.clone(), ModuleKind::GradedA, eta.clone()).unwrap();
    assert_eq!(am.act(&a, &v(&[0, 0, 0])).unwrap(), v(&[0, 1, 0]).scale(&qi(2)));
    assert_eq!(am.act(&a, &v(&[1, 0, 0])).unwrap(), v(&[1, 1, 0]));

    let bm = WeightModule::new(s.clone(), ModuleKind::GradedB, eta).unwrap();
    assert_eq!(bm.act(&a, &v(&[0, -1, 0])).unwrap(), v(&[0, 0, 0]).scale(&qi(2)));
    assert_eq!(bm.act(&a, &v(&[1, -1, 0])).unwrap(), v(&[1, 0, 0]));
}

#[test]
fn graded_descriptors_are_validated() {
    let s = graded_space();
    let zero = Weight::zero(s.signature());
    assert!(WeightModule::new(s.clone(), ModuleKind::GradedA, zero.clone()).is_err());
    assert!(WeightModule::new(s.clone(), ModuleKind::GradedB, zero.clone()).is_err());
    assert!(WeightModule::new(s, ModuleKind::GradedM, zero).is_ok());
    let nongraded = Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()));
    let eta = Weight::new(nongraded.signature(), vec![qi(1), qi(0), qi(0)]).unwrap();
    assert!(WeightModule::new(nongraded, ModuleKind::GradedA, eta).is_err());
}

#[test]
fn operators_outside_the_kernel_are_rejected() {
    let s = graded_space();
    let m = WeightModule::new(s.clone(), ModuleKind::GradedM, weight(&s, &[qi(1), qi(0), qi(0)])).unwrap();
    let bad = op(&s, &[1, 0, 0], &[qi(1), qi(0), qi(0)]);
    assert!(matches!(m.act(&bad, &v(&[0, 0, 0])), Err(Error::NotInKernel { .. })));
}

#[test]
fn module_axiom_on_window_for_every_graded_kind() {
    for s in [graded_space(), graded_mixed()] {
        let ver = Verifier::new(s.clone(), Window::default());
        for kind in [ModuleKind::GradedM, ModuleKind::GradedA, ModuleKind::GradedB] {
            for eta in [[q(1, 2), qi(0), qi(0)], [qi(1), q(-2, 3), qi(5)]] {
                let m = WeightModule::new(s.clone(), kind, weight(&s, &eta)).unwrap();
                let r = ver.check_module_axiom(&m);
                assert!(r.passed(), "{kind} {:?}: {:?}", eta, r.counterexample);
                assert!(r.tested >= 500);
            }
        }
    }
}

fn kernel_op(s: &Space) -> impl Strategy<Value = WittElement> {
    let s = s.clone();
    (prop::collection::vec(-2i64..=2, 3), prop::collection::vec(-3i64..=3, 3)).prop_map(move |(alpha, cs)| {
        let amb = s.group().ambient_vector(&ge(&alpha)).unwrap();
        let mut w = WittElement::zero();
        for (d, c) in kernel_basis(&amb, s.signature()).iter().zip(&cs) {
            w.add_scaled(&op(&s, &alpha, d.coeffs()), &qi(*c));
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graded_module_axiom_on_random_kernel_operators(
        kind in prop::sample::select(vec![ModuleKind::GradedM, ModuleKind::GradedA, ModuleKind::GradedB]),
        (a, b) in (kernel_op(&graded_mixed()), kernel_op(&graded_mixed())),
        beta in prop::collection::vec(-2i64..=2, 3),
        eta in prop::collection::vec((-3i64..=3, 1i64..=3), 3),
    ) {
        let s = graded_mixed();
        let mut eta: Vec<Q> = eta.into_iter().map(|(n, d)| q(n, d)).collect();
        if eta.iter().all(|x| *x == 0u32) {
            eta[0] = qi(1);
        }
        let m = WeightModule::new(s.clone(), kind, weight(&s, &eta)).unwrap();
        let x = v(&beta);
        let lhs = m.act(&s.bracket(&a, &b).unwrap(), &x).unwrap();
        let rhs = m.act(&a, &m.act(&b, &x).unwrap()).unwrap() - m.act(&b, &m.act(&a, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn quotient_drops_the_trivial_vector() {
    let s = Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()));
    let zero = Weight::zero(s.signature());
    let amu = WeightModule::new(s.clone(), ModuleKind::AMu, zero.clone()).unwrap();
    let quot = WeightModule::new(s.clone(), ModuleKind::AMuQuotient, zero).unwrap();
    let t = amu.trivial_vector().unwrap().clone();
    assert_eq!(t, BasisVector::new(ge(&[0, 0, 0]), MultiIndex::zero(3)));
    // d1 . v_{0,(1,0,0)} = v_{0,0} in A_0, which is zero in A_0'
    let w = s.d(1);
    let x = amu.basis(ge(&[0, 0, 0]), MultiIndex::new(vec![1, 0, 0])).unwrap();
    assert_eq!(amu.act(&w, &x).unwrap(), LinComb::basis(t.clone()));
    assert!(quot.act(&w, &x).unwrap().is_zero());
    assert!(quot.basis(ge(&[0, 0, 0]), MultiIndex::zero(3)).unwrap().is_zero());
    let not_in_gamma = Weight::new(s.signature(), vec![q(1, 2), qi(0), qi(0)]).unwrap();
    assert!(WeightModule::new(s, ModuleKind::AMuQuotient, not_in_gamma).is_err());
}

#[test]
fn trivial_vector_generates_only_itself() {
    let s = Space::new(GroupDescriptor::standard(Signature::new(0, 3, 0).unwrap()));
    let m = WeightModule::new(s.clone(), ModuleKind::AMu, weight(&s, &[qi(1), qi(0), qi(0)])).unwrap();
    let ver = Verifier::new(s, Window::default());
    assert!(ver.check_trivial_submodule(&m).unwrap().passed());
    let half = WeightModule::new(m.space().clone(), ModuleKind::AMu, weight(m.space(), &[q(1, 2), qi(0), qi(0)])).unwrap();
    assert!(ver.check_trivial_submodule(&half).is_err());
}
