use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Zero};

use crate::error::{Error, Result};

/// Exact nonnegative integer type in which dimensions are accumulated.
///
/// Implemented for the primitive unsigned integers and for
/// [`num_bigint::BigUint`]. Fixed-width types report overflow as
/// [`Error::Overflow`] instead of wrapping.
pub trait Count:
    Clone + Ord + Debug + Display + Zero + One + CheckedAdd + CheckedMul + CheckedSub + FromPrimitive
{
    fn lift(n: u64) -> Result<Self> {
        Self::from_u64(n).ok_or(Error::Overflow("lifting a count into the scalar type"))
    }

    fn plus(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow(what))
    }

    fn times(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow(what))
    }

    fn minus(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow(what))
    }
}

impl<T> Count for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedMul
        + CheckedSub
        + FromPrimitive
{
}
