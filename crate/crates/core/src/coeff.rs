//! Exact integer coefficient rings.
//!
//! Every polynomial in this crate is generic over a [`Coeff`]: a signed
//! integer type with exact division. `BigInt` is the default everywhere a
//! concrete type is needed; `i64` and `i128` are available for small inputs
//! where the caller can rule out overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

pub trait Coeff: Integer + Signed + Clone + Hash + Debug + Display + Send + Sync + 'static {
    /// Converts from an arbitrary-precision integer, `None` on overflow.
    fn from_big(value: &BigInt) -> Option<Self>;

    fn to_big(&self) -> BigInt;

    fn from_i64(value: i64) -> Self;

    /// Converts `value`, panicking if it does not fit. Used for combinatorial
    /// counts which the caller has already bounded.
    fn from_big_checked(value: &BigInt) -> Self {
        Self::from_big(value)
            .unwrap_or_else(|| panic!("integer {value} does not fit the coefficient type"))
    }
}

impl Coeff for BigInt {
    fn from_big(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
}

impl Coeff for i64 {
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i64()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_i64(value: i64) -> Self {
        value
    }
}

impl Coeff for i128 {
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i128()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_i64(value: i64) -> Self {
        value as i128
    }
}
