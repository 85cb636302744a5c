//! Finite truncations of `Gamma x N^(l1+l2)`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MultiIndex};
use crate::error::{Error, Result};
use crate::lattice::GroupElement;

/// A box `|coord_k| <= gamma_radius` on `Gamma` coordinates together with a
/// bound `|i| <= idx_degree` on multi-indices, plus sampling parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub gamma_radius: u32,
    pub idx_degree: u32,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for Window {
    fn default() -> Self {
        Self {
            gamma_radius: 1,
            idx_degree: 2,
            sample_count: 100,
            seed: 0,
        }
    }
}

impl Window {
    pub fn new(gamma_radius: u32, idx_degree: u32, sample_count: usize, seed: u64) -> Result<Self> {
        if sample_count == 0 {
            return Err(Error::InvalidArgument("sample_count must be positive".into()));
        }
        Ok(Self {
            gamma_radius,
            idx_degree,
            sample_count,
            seed,
        })
    }

    pub fn with_bounds(self, gamma_radius: u32, idx_degree: u32) -> Self {
        Self {
            gamma_radius,
            idx_degree,
            ..self
        }
    }

    /// The Minkowski double: radius and degree both doubled.
    pub fn doubled(&self) -> Self {
        self.with_bounds(2 * self.gamma_radius, 2 * self.idx_degree)
    }

    pub fn contains_group(&self, g: &GroupElement) -> bool {
        g.box_norm() <= self.gamma_radius as u64
    }

    pub fn contains_index(&self, i: &MultiIndex) -> bool {
        i.degree() <= self.idx_degree
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.contains_group(&m.alpha) && self.contains_index(&m.idx)
    }

    /// Every group element in the box, in lexicographic order.
    pub fn group_elements(&self, rank: usize) -> Vec<GroupElement> {
        let r = self.gamma_radius as i64;
        let mut out = vec![Vec::with_capacity(rank)];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (-r..=r).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(GroupElement::new).collect()
    }

    /// Every multi-index of `n` variables with degree at most the bound,
    /// ordered by degree then lexicographically.
    pub fn indices(&self, n: usize) -> Vec<MultiIndex> {
        indices_up_to(n, self.idx_degree)
    }

    pub fn monomials(&self, rank: usize, n: usize) -> Vec<Monomial> {
        let idx = self.indices(n);
        self.group_elements(rank)
            .into_iter()
            .flat_map(|a| idx.iter().map(move |i| Monomial::new(a.clone(), i.clone())))
            .collect()
    }
}

/// All multi-indices in `N^n` with `|i| <= degree`.
pub fn indices_up_to(n: usize, degree: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for d in 0..=degree {
        let mut cur = vec![0u32; n];
        compositions(n, d, 0, &mut cur, &mut out);
    }
    out
}

fn compositions(n: usize, remaining: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if pos == n {
        if remaining == 0 {
            out.push(MultiIndex::new(cur.clone()));
        }
        return;
    }
    if pos + 1 == n {
        cur[pos] = remaining;
        out.push(MultiIndex::new(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for k in (0..=remaining).rev() {
        cur[pos] = k;
        compositions(n, remaining - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        let w = Window::default();
        assert_eq!(w.group_elements(3).len(), 27);
        assert_eq!(w.indices(3).len(), 10);
        assert_eq!(w.indices(0), vec![MultiIndex::new(vec![])]);
        assert_eq!(indices_up_to(2, 4).len(), 15);
        assert_eq!(w.group_elements(0), vec![GroupElement::new(vec![])]);
    }

    #[test]
    fn doubled_window() {
        let w = Window::default().doubled();
        assert_eq!((w.gamma_radius, w.idx_degree), (2, 4));
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(Window::new(1, 1, 0, 0).is_err());
    }
}
