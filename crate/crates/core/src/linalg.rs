//! Exact Gaussian elimination over the rationals.
//!
//! [`Echelon`] is an incrementally built, fully reduced row echelon basis of
//! sparse vectors. It backs every span, closure and orbit computation. The
//! dense helpers serve the small fixed-size systems in [`crate::lattice`].

use std::collections::BTreeMap;

use malachite_base::num::logic::traits::SignificantBits;

use crate::linear::LinComb;
use crate::{Q, Scalar};

/// Bit size used to rank pivot candidates.
fn bit_size(c: &Q) -> u64 {
    c.numerator_ref().significant_bits() + c.denominator_ref().significant_bits()
}

/// Reduced row echelon basis of a subspace of the free vector space on `K`.
///
/// Every stored row has coefficient one at its pivot and zero at every other
/// pivot, so reducing a vector takes a single pass.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord> {
    rows: Vec<LinComb<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord> Default for Echelon<K> {
    fn default() -> Self {
        Self {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinComb<K>] {
        &self.rows
    }

    /// The remainder of `v` modulo the current span.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let hits: Vec<(usize, Q)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
            .collect();
        let mut out = v.clone();
        for (r, c) in hits {
            out.add_scaled(&self.rows[r], &-c);
        }
        out
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `true` iff the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    /// Adds an already reduced vector (as returned by [`Echelon::reduce`]).
    pub fn insert_reduced(&mut self, r: LinComb<K>) -> bool {
        if r.is_zero() {
            return false;
        }
        let (pivot, pc) = r
            .iter()
            .min_by_key(|(_, c)| bit_size(c))
            .map(|(k, c)| (k.clone(), c.clone()))
            .expect("nonzero vector has a term");
        let row = r.scale(&(Q::one() / pc));
        for existing in &mut self.rows {
            if let Some(c) = existing.get(&pivot).cloned() {
                existing.add_scaled(&row, &-c);
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Expresses `v` as a combination of the stored rows, if it lies in the span.
    pub fn coordinates(&self, v: &LinComb<K>) -> Option<Vec<(usize, Q)>> {
        let coords: Vec<(usize, Q)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
            .collect();
        let mut rebuilt = LinComb::zero();
        for (r, c) in &coords {
            rebuilt.add_scaled(&self.rows[*r], c);
        }
        (&rebuilt == v).then_some(coords)
    }
}

/// Row reduces a dense matrix in place; returns the pivot column of each nonzero row.
pub fn rref(mat: &mut [Vec<Q>]) -> Vec<usize> {
    let nrows = mat.len();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        // smallest nonzero entry by bit size keeps growth down
        let Some(best) = (row..nrows)
            .filter(|&r| !mat[r][col].is_zero())
            .min_by_key(|&r| bit_size(&mat[r][col]))
        else {
            continue;
        };
        mat.swap(row, best);
        let inv = Q::one() / &mat[row][col];
        for x in mat[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = mat[row].clone();
        for (r, other) in mat.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : M x = 0}` for an `nrows x ncols` matrix.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `M x = b` exactly. Returns `None` if the system is inconsistent
/// or underdetermined.
pub fn solve_unique(rows: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) || pivots.len() != ncols {
        return None;
    }
    Some((0..ncols).map(|r| aug[r][ncols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qi};

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e: Echelon<u8> = Echelon::new();
        let a: LinComb<u8> = [(0, qi(1)), (1, qi(2))].into_iter().collect();
        let b: LinComb<u8> = [(1, qi(1)), (2, q(1, 3))].into_iter().collect();
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        let c = &a.scale(&qi(3)) - &b.scale(&q(1, 2));
        assert!(!e.insert(&c));
        assert!(e.contains(&c));
        assert_eq!(e.rank(), 2);
        assert!(!e.contains(&LinComb::basis(2)));
        assert!(e.coordinates(&c).is_some());
    }

    #[test]
    fn nullspace_of_single_row() {
        let m = dense(&[&[0, 1, -1]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Q = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn unique_solve() {
        let m = dense(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let x = solve_unique(&m, &[qi(2), qi(1), qi(2)]).unwrap();
        assert_eq!(x, vec![qi(1), qi(1), qi(1)]);
        let singular = dense(&[&[1, 1], &[2, 2]]);
        assert!(solve_unique(&singular, &[qi(1), qi(2)]).is_none());
    }
}
