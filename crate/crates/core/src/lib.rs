//! The infinitesimal Hopf algebra of planar rooted forests.
//!
//! The underlying vector space has the planar rooted forests as a basis; the
//! product is concatenation and the coproduct cuts a forest along its
//! biideals, satisfying the infinitesimal compatibility
//! `Δ(ab) = (a⊗1)Δ(b) + Δ(a)(1⊗b) − a⊗b`.
//! On top of that structure the crate implements:
//!
//! * the antipode, by two independent algorithms (recursive convolution
//!   inversion and the left-cut expansion), see [`algebra`];
//! * a symmetric non-degenerate pairing on the forest basis, by three
//!   independent algorithms (axiom-driven recursion, an order-reversing
//!   vertex bijection criterion, and a Tamari-order criterion), see
//!   [`pairing`];
//! * the partial order on forests of a fixed weight (isomorphic to the
//!   Tamari lattice), its Hasse diagram, its Möbius function, and the dual
//!   basis `f_F` of the pairing computed both by Möbius inversion and by
//!   Gram-matrix inversion, see [`tamari`];
//! * a command-line interface exposing all of the above, see [`cli`].
//!
//! Scalars are exact rationals ([`Rat`]); every computation in the crate is
//! exact.

pub mod algebra;
pub mod cli;
pub mod forest;
pub mod pairing;
pub mod tamari;
pub mod verify;

mod error;

pub use error::{Error, Result};

/// Scalar type of the algebra: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// The rational zero.
pub fn rat_zero() -> Rat {
    num_traits::Zero::zero()
}

/// The rational one.
pub fn rat_one() -> Rat {
    num_traits::One::one()
}

/// A rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
