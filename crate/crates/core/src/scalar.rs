//! Scalar abstraction for lattice coordinates.

use core::fmt;
use core::hash::Hash;

use num_traits::{CheckedNeg, Euclid, PrimInt, Signed};

use crate::error::{Error, Result};

/// Signed integer scalar used for lattice coordinates.
///
/// Blanket-implemented for every primitive signed integer (`i32`, `i64`,
/// `i128`, ...). All arithmetic in this crate goes through checked
/// operations, so overflow surfaces as [`Error::Range`] instead of wrapping.
pub trait LatticeInt:
    PrimInt + Signed + Euclid + CheckedNeg + Hash + fmt::Display + fmt::Debug + Send + Sync + 'static
{
    /// Largest coordinate magnitude for which every derived quantity
    /// (vertex differences, shoelace products, and their sums) is
    /// representable in `Self`. For `i64` this is `2^30`.
    fn coord_limit() -> Self {
        let bits = Self::zero().count_zeros() as usize;
        Self::one() << ((bits - 4) / 2)
    }
}

impl<T> LatticeInt for T where
    T: PrimInt
        + Signed
        + Euclid
        + CheckedNeg
        + Hash
        + fmt::Display
        + fmt::Debug
        + Send
        + Sync
        + 'static
{
}

/// Checked arithmetic helpers; every failure is an [`Error::Range`].
pub(crate) mod ops {
    use super::*;

    pub fn add<T: LatticeInt>(a: T, b: T) -> Result<T> {
        a.checked_add(&b).ok_or_else(|| Error::overflow("addition"))
    }

    pub fn sub<T: LatticeInt>(a: T, b: T) -> Result<T> {
        a.checked_sub(&b)
            .ok_or_else(|| Error::overflow("subtraction"))
    }

    pub fn mul<T: LatticeInt>(a: T, b: T) -> Result<T> {
        a.checked_mul(&b)
            .ok_or_else(|| Error::overflow("multiplication"))
    }

    pub fn neg<T: LatticeInt>(a: T) -> Result<T> {
        a.checked_neg().ok_or_else(|| Error::overflow("negation"))
    }

    pub fn two<T: LatticeInt>() -> T {
        T::one() + T::one()
    }

    /// Small constants known to fit in any practically used scalar.
    pub fn constant<T: LatticeInt>(v: i64) -> T {
        T::from(v).expect("constant representable in the scalar type")
    }
}
