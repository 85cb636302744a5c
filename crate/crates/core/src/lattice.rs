//! The subgroup `Gamma`, weights, derivation vectors and the pairing `<d, beta>`.
//!
//! Coordinates of the ambient space `F^l` are split into three ranges:
//! `1..=l1`, `l1+1..=l1+l2`, `l1+l2+1..=l`. A weight or group element lives in
//! `F^(l2+l3)` and is embedded into `F^l` with its first `l1` entries zero.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::{linalg, Q, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    l1: usize,
    l2: usize,
    l3: usize,
}

impl Signature {
    pub fn new(l1: usize, l2: usize, l3: usize) -> Result<Self> {
        if l1 + l2 + l3 == 0 {
            return Err(Error::InvalidSignature("l1 + l2 + l3 must be positive".into()));
        }
        Ok(Self { l1, l2, l3 })
    }

    pub fn l1(&self) -> usize {
        self.l1
    }

    pub fn l2(&self) -> usize {
        self.l2
    }

    pub fn l3(&self) -> usize {
        self.l3
    }

    /// Total number of directions `l`.
    pub fn l(&self) -> usize {
        self.l1 + self.l2 + self.l3
    }

    /// Number of polynomial variables `t_1..t_(l1+l2)`.
    pub fn poly_vars(&self) -> usize {
        self.l1 + self.l2
    }

    /// Dimension `l2 + l3` of the space containing `Gamma`.
    pub fn gamma_dim(&self) -> usize {
        self.l2 + self.l3
    }

    /// Whether `l1 + l2 >= 3` and `l2 + l3 >= 3`, the range in which the
    /// classification of multiplicity-free modules applies.
    pub fn generation_hypothesis(&self) -> bool {
        self.l1 + self.l2 >= 3 && self.l2 + self.l3 >= 3
    }
}

/// Element of `Gamma`, stored as integer coordinates over the fixed generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(Vec<i64>);

impl GroupElement {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// The `k`-th generator (0-based).
    pub fn unit(rank: usize, k: usize) -> Self {
        let mut v = vec![0; rank];
        v[k] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Largest absolute coordinate, the box norm used by windows.
    pub fn box_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_len("group element coordinates", self.rank(), other.rank())?;
        Ok(self + other)
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: Self) -> GroupElement {
        debug_assert_eq!(self.rank(), rhs.rank());
        GroupElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: Self) -> GroupElement {
        debug_assert_eq!(self.rank(), rhs.rank());
        GroupElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        GroupElement(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A vector of `F^(l2+l3)` written in ambient length `l` (first `l1` entries zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(sig: &Signature, entries: Vec<Q>) -> Result<Self> {
        check_len("weight entries", sig.l(), entries.len())?;
        if entries[..sig.l1()].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidWeight(format!(
                "the first l1 = {} entries of a weight must be zero",
                sig.l1()
            )));
        }
        Ok(Self(entries))
    }

    pub fn zero(sig: &Signature) -> Self {
        Self(vec![Q::zero(); sig.l()])
    }

    pub fn entries(&self) -> &[Q] {
        &self.0
    }

    /// Coordinate `p` (1-based).
    pub fn at(&self, p: usize) -> &Q {
        &self.0[p - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: Self) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: Self) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The element `sum a_p d_p` of `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation(Vec<Q>);

impl Derivation {
    pub fn new(coeffs: Vec<Q>) -> Self {
        Self(coeffs)
    }

    /// The coordinate derivation `d_p` (1-based) in `l` directions.
    pub fn coordinate(l: usize, p: usize) -> Self {
        let mut v = vec![Q::zero(); l];
        v[p - 1] = Q::one();
        Self(v)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

/// `<d, b> = sum_{p = l1+1}^{l} a_p b_p`.
pub fn pairing(sig: &Signature, d: &Derivation, b: &Weight) -> Q {
    d.0.iter()
        .zip(&b.0)
        .skip(sig.l1())
        .map(|(a, x)| a * x)
        .sum()
}

/// A basis of `ker b = { d in D : <d, b> = 0 }`.
pub fn kernel_basis(b: &Weight, sig: &Signature) -> Vec<Derivation> {
    let l = sig.l();
    let row: Vec<Q> = (0..l)
        .map(|p| {
            if p < sig.l1() {
                Q::zero()
            } else {
                b.0[p].clone()
            }
        })
        .collect();
    linalg::nullspace(&[row], l)
        .into_iter()
        .map(Derivation)
        .collect()
}

/// A finitely generated free subgroup `Gamma` of `F^(l2+l3)` that contains a
/// basis of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescriptor {
    sig: Signature,
    generators: Vec<Vec<Q>>,
}

impl GroupDescriptor {
    /// Validates that the generators are linearly independent and span
    /// `F^(l2+l3)`. Rational independence implies `Z`-independence, so the
    /// coordinates of every element are unique.
    pub fn new(sig: Signature, generators: Vec<Vec<Q>>) -> Result<Self> {
        let n = sig.gamma_dim();
        for g in &generators {
            check_len("generator length (l2 + l3)", n, g.len())?;
        }
        let rank = linalg::rank(&generators);
        if rank != generators.len() {
            return Err(Error::InvalidGenerators(format!(
                "{} generators have rank {rank}; generators must be independent",
                generators.len()
            )));
        }
        if rank != n {
            return Err(Error::InvalidGenerators(format!(
                "generators span a rank {rank} subspace of F^{n}; Gamma must be nondegenerate"
            )));
        }
        Ok(Self { sig, generators })
    }

    /// `Gamma = Z^(l2+l3)` with the standard basis.
    pub fn standard(sig: Signature) -> Self {
        let n = sig.gamma_dim();
        let generators = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        Self { sig, generators }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn generators(&self) -> &[Vec<Q>] {
        &self.generators
    }

    /// Number of generators `m`.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Same generators, reinterpreted over another signature with the same `l2 + l3`.
    pub fn with_signature(&self, sig: Signature) -> Result<Self> {
        Self::new(sig, self.generators.clone())
    }

    pub fn check_element(&self, g: &GroupElement) -> Result<()> {
        check_len("group element coordinates", self.rank(), g.rank())
    }

    /// Coordinate `p` (1-based, ambient) of the embedding of `g`.
    pub fn ambient_coord(&self, g: &GroupElement, p: usize) -> Q {
        let l1 = self.sig.l1();
        if p <= l1 {
            return Q::zero();
        }
        let k = p - 1 - l1;
        g.0.iter()
            .zip(&self.generators)
            .filter(|(c, _)| **c != 0)
            .map(|(c, gen)| &gen[k] * Q::from(*c))
            .sum()
    }

    pub fn ambient_vector(&self, g: &GroupElement) -> Result<Weight> {
        self.check_element(g)?;
        let l = self.sig.l();
        Ok(Weight((1..=l).map(|p| self.ambient_coord(g, p)).collect()))
    }

    /// Integer coordinates of `mu` if `mu` lies in `Gamma`.
    pub fn membership(&self, mu: &Weight) -> Option<GroupElement> {
        if mu.len() != self.sig.l() || mu.0[..self.sig.l1()].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let n = self.sig.gamma_dim();
        let m = self.rank();
        if n == 0 {
            return Some(GroupElement::zero(0));
        }
        // columns are generators
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..m).map(|k| self.generators[k][i].clone()).collect())
            .collect();
        let rhs = &mu.0[self.sig.l1()..];
        let sol = linalg::solve_unique(&rows, rhs)?;
        sol.iter()
            .map(|c| {
                i64::try_from(c).ok()
            })
            .collect::<Option<Vec<i64>>>()
            .map(GroupElement)
    }
}
