//! High-precision evaluation of multiple zeta(-star) values, alternating
//! Euler sums, finite harmonic sums and very-well-poised hypergeometric
//! series, with a registry of identities among them.
//!
//! The numerical core is generic over a scalar [`numerics::Field`]:
//! `f64` for quick estimates, [`Exact`] rationals for closed forms, and
//! [`HpReal`] for arbitrary precision under a [`PrecisionContext`].

pub mod error;
pub mod finite_sums;
pub mod hypergeom;
pub mod identities;
pub mod indices;
pub mod numerics;
pub mod series;

pub use error::{Error, Result};
pub use indices::{parse_index, Index};
pub use numerics::{HpReal, PrecisionContext};

/// Exact rational scalar.
pub type Exact = num_rational::BigRational;
/// Arbitrary-precision scalar.
pub type HPReal = numerics::HpReal;
/// Quick double-precision scalar.
pub type Fast = f64;
