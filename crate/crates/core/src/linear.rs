//! Sparse finite linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, Neg, Sub};

use crate::{Q, Scalar};

/// A finite formal sum `sum c_k * k` over basis keys `K`.
///
/// Zero coefficients are never stored, so two combinations are equal iff their
/// maps are equal. Iteration order is the key order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    /// The single basis element `key` with coefficient one.
    pub fn basis(key: K) -> Self {
        Self::term(key, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn get(&self, key: &K) -> Option<&Q> {
        self.terms.get(key)
    }

    pub fn contains_key(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Q> {
        self.terms.keys()
    }

    pub fn first_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    /// Adds `coeff * key` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Q) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels every key; colliding images have their coefficients merged.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Q);
    type IntoIter = btree_map::IntoIter<K, Q>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Q);
    type IntoIter = btree_map::Iter<'a, K, Q>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;

    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;

    fn add(mut self, rhs: Self) -> LinComb<K> {
        for (k, c) in rhs {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;

    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;

    fn sub(mut self, rhs: Self) -> LinComb<K> {
        for (k, c) in rhs {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;

    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;

    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}
