//! Exact E-polynomials of configuration spaces of points and of orbits,
//! their quotients by symmetric and Young subgroups, and their
//! `S_n`-equivariant refinements in `R(S_n)[u, v]`.
//!
//! Polynomials are generic over an exact integer coefficient type
//! ([`coeff::Coeff`]); the aliases below fix it to `BigInt`.

pub mod character;
pub mod coeff;
pub mod confspace;
pub mod error;
pub mod golden;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod repring;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use partition::Partition;

/// Arbitrary-precision E-polynomial.
pub type EPoly = poly::BivarPoly<BigInt>;
/// 64-bit E-polynomial for inputs known not to overflow.
pub type EPoly64 = poly::BivarPoly<i64>;
pub type Series = poly::TruncatedSeries<BigInt>;
pub type EquivariantPoly = repring::EquivariantEPoly<BigInt>;
pub type Variety = confspace::VarietyClass<BigInt>;
pub type Orbits = confspace::OrbitSetup<BigInt>;
