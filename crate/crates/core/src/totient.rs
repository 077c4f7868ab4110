//! Factorization and the generalized totient family.
//!
//! `generalized_totient(k, m)` evaluates `k * prod(1 - eps(p, m)/p)` over the
//! distinct primes `p` of `k`, where `eps(p, m)` is 1 when `p | m` and 2
//! otherwise. `m = 0` recovers the Euler totient and `m = 1` the Schemmel
//! totient, which counts residues `a` modulo `k` with `a` and `a - 1` both
//! coprime to `k`. [`schemmel_bruteforce`] counts that set directly and is
//! kept as an independent check on the product formula.

use crate::error::{Error, Result};
use crate::lattice::gcd;
use crate::scalar::{ops, LatticeInt};

/// Prime factorization `n = p_1^{c_1} ... p_r^{c_r}` with `p_1 < ... < p_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<T> {
    n: T,
    factors: Vec<(T, u32)>,
}

impl<T: LatticeInt> Factorization<T> {
    pub fn n(&self) -> T {
        self.n
    }

    /// `(prime, exponent)` pairs in increasing prime order; empty for `n = 1`.
    pub fn factors(&self) -> &[(T, u32)] {
        &self.factors
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = T> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// Trial-division factorization of `n >= 1`.
///
/// Bounded at [`LatticeInt::coord_limit`] (`2^30` for `i64`) so the division
/// loop stays at desk scale; larger inputs report a resource limit.
pub fn factorize<T: LatticeInt>(n: T) -> Result<Factorization<T>> {
    if n < T::one() {
        return Err(Error::domain(format!("factorize: n = {n} must be >= 1")));
    }
    if n > T::coord_limit() {
        return Err(Error::ResourceLimit(format!(
            "factorize: n = {n} exceeds the trial-division bound {}",
            T::coord_limit()
        )));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut divisor = ops::two::<T>();
    loop {
        match divisor.checked_mul(&divisor) {
            Some(sq) if sq <= rest => {}
            _ => break,
        }
        if (rest % divisor).is_zero() {
            let mut exponent = 0u32;
            while (rest % divisor).is_zero() {
                rest = rest / divisor;
                exponent += 1;
            }
            factors.push((divisor, exponent));
        }
        divisor = divisor
            + if divisor == ops::two::<T>() {
                T::one()
            } else {
                ops::two::<T>()
            };
    }
    if rest > T::one() {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// `1` if `p | m`, else `2`. In particular `epsilon(p, 0) = 1` for every `p`.
///
/// `p` must be a prime `>= 2`.
pub fn epsilon<T: LatticeInt>(p: T, m: T) -> T {
    debug_assert!(p >= ops::two::<T>());
    if (m % p).is_zero() {
        T::one()
    } else {
        ops::two()
    }
}

/// The generalized totient `phi(k, m)` for `k >= 1`, `m >= 0`, computed in
/// exact integers as `prod(p_i - eps(p_i, m)) * prod(p_i^{c_i - 1})`.
///
/// `phi(1, m) = 1` (empty product).
pub fn generalized_totient<T: LatticeInt>(k: T, m: T) -> Result<T> {
    if k < T::one() {
        return Err(Error::domain(format!("totient: k = {k} must be >= 1")));
    }
    if m < T::zero() {
        return Err(Error::domain(format!("totient: m = {m} must be >= 0")));
    }
    let mut result = T::one();
    for &(p, c) in factorize(k)?.factors() {
        result = ops::mul(result, ops::sub(p, epsilon(p, m))?)?;
        for _ in 1..c {
            result = ops::mul(result, p)?;
        }
    }
    Ok(result)
}

/// The Schemmel totient `phi(k, 1)`.
pub fn schemmel<T: LatticeInt>(k: T) -> Result<T> {
    generalized_totient(k, T::one())
}

/// Counts `a` in `{0, ..., n-1}` with `gcd(a, n) = gcd(a - 1, n) = 1` by
/// direct scan. Agrees with [`schemmel`] everywhere; kept separate as the
/// counting oracle. At `a = 0` the second condition reads `gcd(-1, n) = 1`.
pub fn schemmel_bruteforce<T: LatticeInt>(n: T) -> Result<T> {
    if n < T::one() {
        return Err(Error::domain(format!(
            "schemmel_bruteforce: n = {n} must be >= 1"
        )));
    }
    let mut count = T::zero();
    let mut a = T::zero();
    while a < n {
        if gcd(a, n).is_one() && gcd(a - T::one(), n).is_one() {
            count = count + T::one();
        }
        a = a + T::one();
    }
    Ok(count)
}
