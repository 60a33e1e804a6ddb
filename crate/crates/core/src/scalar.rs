//! Exact coefficient types.
//!
//! Everything in this crate is computed over exact scalars. Machine integers
//! are accepted, but every arithmetic step goes through the checked
//! operations so that an overflow panics instead of wrapping. Floating point
//! types do not implement the checked traits and are rejected at compile time.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Num};

/// An exact ring element usable as a polynomial or h-vector coefficient.
pub trait Coeff:
    Num + Clone + Debug + Display + PartialOrd + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + Send + Sync
{
    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other)
            .unwrap_or_else(|| panic!("coefficient overflow: {self} + {other}"))
    }

    fn sub_exact(&self, other: &Self) -> Self {
        self.checked_sub(other)
            .unwrap_or_else(|| panic!("coefficient overflow: {self} - {other}"))
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other)
            .unwrap_or_else(|| panic!("coefficient overflow: {self} * {other}"))
    }

    fn neg_exact(&self) -> Self {
        Self::zero().sub_exact(self)
    }

    /// Embeds a machine integer.
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).unwrap_or_else(|| panic!("{value} is not representable"))
    }

    /// True when the rendered form is a single decimal digit, which allows
    /// the compact comma-free polynomial notation.
    fn is_single_digit(&self) -> bool {
        let s = self.to_string();
        s.len() == 1 && s.as_bytes()[0].is_ascii_digit()
    }
}

impl<T> Coeff for T where
    T: Num
        + Clone
        + Debug
        + Display
        + PartialOrd
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
{
}

/// A coefficient type with exact division, used for row reduction.
pub trait Field: Coeff + CheckedDiv {
    fn div_exact(&self, other: &Self) -> Self {
        self.checked_div(other)
            .unwrap_or_else(|| panic!("division failed: {self} / {other}"))
    }
}

impl<T> Field for T where T: Coeff + CheckedDiv {}
