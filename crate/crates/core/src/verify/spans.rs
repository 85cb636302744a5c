use std::collections::HashMap;

use crate::lattice::GroupElement;
use crate::lie::WittTerm;
use crate::linalg::Echelon;
use crate::linear::LinComb;
use crate::modules::BasisVector;

/// Keys carrying a `Gamma`-degree. Operators `D_{p,q}(x^alpha t^i)` are
/// homogeneous of degree `alpha`, the bracket adds degrees, and the module
/// action sends degree `beta` to `beta + alpha`, so spans split into blocks.
pub trait Graded {
    fn grade(&self) -> &GroupElement;
}

impl Graded for WittTerm {
    fn grade(&self) -> &GroupElement {
        &self.mono.alpha
    }
}

impl Graded for BasisVector {
    fn grade(&self) -> &GroupElement {
        &self.beta
    }
}

/// A span stored as one reduced echelon basis per `Gamma`-degree.
#[derive(Clone, Debug)]
pub struct BlockSpan<K: Ord> {
    blocks: HashMap<GroupElement, Echelon<K>>,
}

impl<K: Ord> Default for BlockSpan<K> {
    fn default() -> Self {
        Self {
            blocks: HashMap::new(),
        }
    }
}

impl<K: Ord + Clone + Graded> BlockSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a LinComb<K>>) -> Self
    where
        K: 'a,
    {
        let mut out = Self::new();
        for v in vs {
            out.insert(v);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(Echelon::rank).sum()
    }

    /// Splits `v` into homogeneous parts.
    pub fn split(v: &LinComb<K>) -> Vec<(GroupElement, LinComb<K>)> {
        let mut parts: Vec<(GroupElement, LinComb<K>)> = Vec::new();
        for (k, c) in v {
            match parts.iter_mut().find(|(g, _)| g == k.grade()) {
                Some((_, part)) => part.add_term(k.clone(), c.clone()),
                None => parts.push((k.grade().clone(), LinComb::term(k.clone(), c.clone()))),
            }
        }
        parts
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        Self::split(v).iter().all(|(g, part)| match self.blocks.get(g) {
            Some(e) => e.contains(part),
            None => part.is_zero(),
        })
    }

    /// Inserts every homogeneous part; returns how much the dimension grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> usize {
        let mut grew = 0;
        for (g, part) in Self::split(v) {
            if self.blocks.entry(g).or_default().insert(&part) {
                grew += 1;
            }
        }
        grew
    }

    pub fn block(&self, g: &GroupElement) -> Option<&Echelon<K>> {
        self.blocks.get(g)
    }

    pub fn block_mut(&mut self, g: &GroupElement) -> &mut Echelon<K> {
        self.blocks.entry(g.clone()).or_default()
    }
}
