//! Seeded, platform-independent generation of test inputs.
//!
//! A fixed 64-bit linear congruential generator keeps randomized checks
//! reproducible everywhere: identical seeds give identical triangles and
//! maps on every platform and build.

use crate::lattice::{LatticePoint, LatticeTriangle};
use crate::scalar::LatticeInt;
use crate::unimodular::UnimodularAffineMap;

/// Linear congruential generator with Knuth's MMIX constants:
/// `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
/// Each step returns the full new state.
#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform-ish draw from the inclusive range `[lo, hi]` by modulo
    /// folding; the tiny bias is irrelevant for test sampling.
    pub fn next_in_range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }
}

pub fn random_point<T: LatticeInt>(rng: &mut Lcg64, lo: i64, hi: i64) -> LatticePoint<T> {
    let x = rng.next_in_range(lo, hi);
    let y = rng.next_in_range(lo, hi);
    LatticePoint::new(
        T::from(x).expect("sample fits the scalar type"),
        T::from(y).expect("sample fits the scalar type"),
    )
}

/// Draws vertex triples until one forms a non-degenerate triangle.
pub fn random_triangle<T: LatticeInt>(rng: &mut Lcg64, lo: i64, hi: i64) -> LatticeTriangle<T> {
    loop {
        let a = random_point(rng, lo, hi);
        let b = random_point(rng, lo, hi);
        let c = random_point(rng, lo, hi);
        if let Ok(t) = LatticeTriangle::new(a, b, c) {
            return t;
        }
    }
}

/// Random unimodular affine map: a product of four alternating elementary
/// shears with offsets in `[-shear, shear]`, an optional axis swap, and a
/// translation with components in `[-shift, shift]`.
///
/// Keep `shear` small (say <= 8); entries grow like `(1 + shear)^4`.
pub fn random_unimodular_map<T: LatticeInt>(
    rng: &mut Lcg64,
    shear: i64,
    shift: i64,
) -> UnimodularAffineMap<T> {
    let c = |v: i64| T::from(v).expect("sample fits the scalar type");
    let mut map = UnimodularAffineMap::identity();
    for round in 0..4 {
        let t = c(rng.next_in_range(-shear, shear));
        let factor = if round % 2 == 0 {
            UnimodularAffineMap::shear_x(t)
        } else {
            // lower shear [[1, 0], [t, 1]]
            UnimodularAffineMap::new(T::one(), T::zero(), t, T::one(), T::zero(), T::zero())
                .expect("elementary shear is unimodular")
        };
        map = factor.compose(&map).expect("bounded entries");
    }
    if rng.next_u64().is_multiple_of(2) {
        let swap = UnimodularAffineMap::new(
            T::zero(),
            T::one(),
            T::one(),
            T::zero(),
            T::zero(),
            T::zero(),
        )
        .expect("axis swap is unimodular");
        map = swap.compose(&map).expect("bounded entries");
    }
    let translation = UnimodularAffineMap::translation(
        c(rng.next_in_range(-shift, shift)),
        c(rng.next_in_range(-shift, shift)),
    );
    translation.compose(&map).expect("bounded entries")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcg_sequence_is_frozen() {
        let mut rng = Lcg64::new(1);
        assert_eq!(rng.next_u64(), 7806831264735756412);
        assert_eq!(rng.next_u64(), 9396908728118811419);
    }

    #[test]
    fn same_seed_same_triangles() {
        let mut a = Lcg64::new(42);
        let mut b = Lcg64::new(42);
        for _ in 0..50 {
            let ta: LatticeTriangle<i64> = random_triangle(&mut a, -30, 30);
            let tb: LatticeTriangle<i64> = random_triangle(&mut b, -30, 30);
            assert_eq!(ta, tb);
        }
    }

    #[test]
    fn maps_are_unimodular_and_bounded() {
        let mut rng = Lcg64::new(7);
        for _ in 0..200 {
            let m: UnimodularAffineMap<i64> = random_unimodular_map(&mut rng, 3, 50);
            assert_eq!(m.det().abs(), 1);
            for row in m.matrix() {
                for entry in row {
                    assert!(entry.abs() <= 4096);
                }
            }
        }
    }
}
