//! Exact integer lattice-triangle analysis.
//!
//! This crate computes lattice-point statistics of lattice triangles
//! (boundary points, interior points, doubled area, always in exact
//! integers), normalizes triangles under integer unimodular affine maps,
//! evaluates the generalized and Schemmel totient functions, and decides for
//! each integer `k` whether every lattice triangle with 3 boundary points
//! and `k` interior points must have collinear interior points. Integers
//! with that property are called *2-collinear*; they are exactly 1, 2, 4,
//! and 7, and the [`classifier`] module establishes the verdict for each `k`
//! by two independent, cross-checked methods.
//!
//! The core is generic over the coordinate scalar through [`LatticeInt`]
//! (any primitive signed integer); the `*64` aliases below fix the default
//! `i64` instantiation, for which coordinates up to `2^30` in magnitude are
//! guaranteed overflow-free. All arithmetic is checked, so exceeding the
//! documented ranges yields an [`Error::Range`] rather than a wrapped value.
//!
//! ```
//! use latri_core::{classifier, Triangle64};
//!
//! let t = Triangle64::from_coords(0, 0, 1, 0, 3, 7)?;
//! assert_eq!(t.interior_count_pick()?, 3);
//!
//! // 7 is 2-collinear; 3 is not, and the result carries a witness.
//! assert!(classifier::classify_both(7i64)?.is_2_collinear);
//! assert!(!classifier::classify_both(3i64)?.is_2_collinear);
//! # Ok::<(), latri_core::Error>(())
//! ```

pub mod classifier;
mod error;
pub mod lattice;
pub mod sampling;
mod scalar;
pub mod totient;
pub mod unimodular;

pub use error::{Error, Result};
pub use lattice::{
    collinear, gcd, segment_interior_count, twice_area_of, twice_area_signed, LatticePoint,
    LatticeTriangle, TriangleStats,
};
pub use scalar::LatticeInt;
pub use unimodular::{bezout, normalize, shift_reduce, CanonicalTriangle, UnimodularAffineMap};

/// Concrete aliases for the default 64-bit instantiation.
pub type Point64 = LatticePoint<i64>;
pub type Triangle64 = LatticeTriangle<i64>;
pub type Stats64 = TriangleStats<i64>;
pub type Map64 = UnimodularAffineMap<i64>;
pub type Canonical64 = CanonicalTriangle<i64>;
pub type Classification64 = classifier::ClassificationResult<i64>;
