#![allow(dead_code)]

use divfree_cli::Expr;
use divfree_core::{
    print, AlgebraElement, BasisVector, GroupElement, Monomial, ModuleElement, MultiIndex, Space, WittElement,
    WittTerm, Q,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub fn coeff() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=6)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Q::from_signeds(n, d))
}

pub fn group_elem(rank: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(-2i64..=2, rank).prop_map(GroupElement::new)
}

pub fn multi_index(n: usize) -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(0u32..=2, n).prop_map(MultiIndex::new)
}

pub fn monomial(space: &Space) -> impl Strategy<Value = Monomial> {
    (group_elem(space.rank()), multi_index(space.poly_vars())).prop_map(|(a, i)| Monomial::new(a, i))
}

pub fn algebra(space: &Space) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((monomial(space), coeff()), 0..5).prop_map(|ts| ts.into_iter().collect())
}

pub fn witt(space: &Space) -> impl Strategy<Value = WittElement> {
    let l = space.l();
    prop::collection::vec((monomial(space), 1..=l, coeff()), 0..5)
        .prop_map(|ts| ts.into_iter().map(|(m, p, c)| (WittTerm::new(m, p), c)).collect())
}

pub fn module(space: &Space) -> impl Strategy<Value = ModuleElement> {
    prop::collection::vec((group_elem(space.rank()), multi_index(space.poly_vars()), coeff()), 0..5)
        .prop_map(|ts| ts.into_iter().map(|(b, j, c)| (BasisVector::new(b, j), c)).collect())
}

/// Any element type, tagged by how it prints.
pub fn element(space: &Space) -> impl Strategy<Value = (String, Expr)> {
    prop_oneof![
        algebra(space).prop_map(|a| (print::algebra(&a), typed(Expr::Algebra(a)))),
        witt(space).prop_map(|w| (print::witt(&w), typed(Expr::Witt(w)))),
        module(space).prop_map(|v| (print::module(&v), typed(Expr::Module(v)))),
    ]
}

/// A zero element of any type parses back as the untyped zero.
fn typed(e: Expr) -> Expr {
    let zero = match &e {
        Expr::Algebra(a) => a.is_zero(),
        Expr::Witt(w) => w.is_zero(),
        Expr::Module(v) => v.is_zero(),
        Expr::Zero => true,
    };
    if zero {
        Expr::Zero
    } else {
        e
    }
}

/// `n` elements drawn from a fixed seed.
pub fn corpus(space: &Space, n: usize) -> Vec<(String, Expr)> {
    let mut runner = TestRunner::deterministic();
    let strategy = element(space);
    (0..n)
        .map(|_| strategy.new_tree(&mut runner).expect("strategy").current())
        .collect()
}
