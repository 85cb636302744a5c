//! Exact computer algebra for the nongraded divergence-free Lie algebras
//! `S(l1, l2, l3; rho, Gamma)` and their generalized weight modules.
//!
//! The crate is organized bottom-up:
//!
//! * [`lattice`]: the subgroup `Gamma`, weights, derivation vectors and the pairing.
//! * [`algebra`]: the semigroup algebra `F[Gamma x N^(l1+l2)]` and the derivations `d_p`.
//! * [`lie`]: the Witt algebra `A * D`, its bracket, divergence, and the operators `D_{p,q}(u)`.
//! * [`modules`]: the modules `A_mu`, `A_mu'`, the graded modules `M_mu`, `A_eta`, `B_eta`.
//! * [`verify`]: window-scale structural checks producing machine-readable reports.
//!
//! All scalars are [`Q`], arbitrary-precision rationals. There is no floating point.

pub mod algebra;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod linear;
pub mod modules;
pub mod par;
pub mod print;
pub mod sample;
pub mod verify;
pub mod window;

pub use algebra::{AlgebraElement, Monomial, MultiIndex, Space};
pub use error::{Error, Result};
pub use lattice::{Derivation, GroupDescriptor, GroupElement, Signature, Weight};
pub use lie::{SpanningFamily, WittElement, WittTerm};
pub use linear::LinComb;
pub use modules::{BasisVector, ModuleDescriptor, ModuleElement, ModuleKind, WeightModule};
pub use par::Exec;
pub use window::Window;

/// Exact rational scalar. Small values are stored inline, so the common
/// case of single-digit coefficients never allocates.
pub type Q = malachite_q::Rational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn q(num: i64, den: i64) -> Q {
    Q::from_signeds(num, den)
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from(n)
}

/// The handful of scalar predicates the crate relies on.
pub trait Scalar {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs(&self) -> Self;
}

impl Scalar for Q {
    fn zero() -> Self {
        <Q as malachite_base::num::basic::traits::Zero>::ZERO
    }

    fn one() -> Self {
        <Q as malachite_base::num::basic::traits::One>::ONE
    }

    fn is_zero(&self) -> bool {
        *self == 0u32
    }

    fn is_one(&self) -> bool {
        *self == 1u32
    }

    fn is_negative(&self) -> bool {
        *self < 0u32
    }

    fn abs(&self) -> Self {
        malachite_base::num::arithmetic::traits::Abs::abs(self.clone())
    }
}
