//! Integer unimodular affine maps and canonical triangle normalization.
//!
//! A map `p -> M p + t` with `|det M| = 1` and integer entries permutes the
//! lattice, so it preserves segment point counts, boundary and interior
//! counts, area, and collinearity. [`normalize`] uses translations, a
//! Bezout-built shear, an optional reflection, and a horizontal shift to
//! carry any lattice triangle onto a canonical representative
//! `(0,0), (d,0), (a,b)` with `d >= 1`, `b >= 1`, and `0 <= a < b`, returning
//! the witness map that realizes the reduction.

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticeTriangle};
use crate::scalar::{ops, LatticeInt};

/// An affine lattice map `p -> M p + t` with `|det M| = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularAffineMap<T> {
    m11: T,
    m12: T,
    m21: T,
    m22: T,
    tx: T,
    ty: T,
    det: T,
}

impl<T: LatticeInt> UnimodularAffineMap<T> {
    /// Builds the map from matrix entries (row major) and translation.
    pub fn new(m11: T, m12: T, m21: T, m22: T, tx: T, ty: T) -> Result<Self> {
        let det = ops::sub(ops::mul(m11, m22)?, ops::mul(m12, m21)?)?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular);
        }
        Ok(Self {
            m11,
            m12,
            m21,
            m22,
            tx,
            ty,
            det,
        })
    }

    /// Purely linear map (zero translation).
    pub fn linear(m11: T, m12: T, m21: T, m22: T) -> Result<Self> {
        Self::new(m11, m12, m21, m22, T::zero(), T::zero())
    }

    pub fn identity() -> Self {
        Self {
            m11: T::one(),
            m12: T::zero(),
            m21: T::zero(),
            m22: T::one(),
            tx: T::zero(),
            ty: T::zero(),
            det: T::one(),
        }
    }

    pub fn translation(dx: T, dy: T) -> Self {
        Self {
            tx: dx,
            ty: dy,
            ..Self::identity()
        }
    }

    /// Horizontal shear `[[1, t], [0, 1]]`.
    pub fn shear_x(t: T) -> Self {
        Self {
            m12: t,
            ..Self::identity()
        }
    }

    /// Reflection `[[1, 0], [0, -1]]` across the x axis.
    pub fn reflect_y() -> Self {
        Self {
            m22: T::zero() - T::one(),
            det: T::zero() - T::one(),
            ..Self::identity()
        }
    }

    pub fn matrix(&self) -> [[T; 2]; 2] {
        [[self.m11, self.m12], [self.m21, self.m22]]
    }

    pub fn translation_part(&self) -> (T, T) {
        (self.tx, self.ty)
    }

    /// Determinant of the linear part, always `+1` or `-1`.
    pub fn det(&self) -> T {
        self.det
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Image of a point under the map.
    pub fn apply(&self, p: LatticePoint<T>) -> Result<LatticePoint<T>> {
        let x = ops::add(
            ops::add(ops::mul(self.m11, p.x)?, ops::mul(self.m12, p.y)?)?,
            self.tx,
        )?;
        let y = ops::add(
            ops::add(ops::mul(self.m21, p.x)?, ops::mul(self.m22, p.y)?)?,
            self.ty,
        )?;
        Ok(LatticePoint::new(x, y))
    }

    /// Image of a triangle, applied vertex by vertex.
    pub fn apply_triangle(&self, t: &LatticeTriangle<T>) -> Result<LatticeTriangle<T>> {
        let [a, b, c] = t.vertices();
        LatticeTriangle::new(self.apply(a)?, self.apply(b)?, self.apply(c)?)
    }

    /// Inverse map: since `|det| = 1`, the adjugate divided by the
    /// determinant stays integral.
    pub fn invert(&self) -> Result<Self> {
        let s = self.det;
        let n11 = ops::mul(self.m22, s)?;
        let n12 = ops::neg(ops::mul(self.m12, s)?)?;
        let n21 = ops::neg(ops::mul(self.m21, s)?)?;
        let n22 = ops::mul(self.m11, s)?;
        // g(p) = N p - N t
        let tx = ops::neg(ops::add(ops::mul(n11, self.tx)?, ops::mul(n12, self.ty)?)?)?;
        let ty = ops::neg(ops::add(ops::mul(n21, self.tx)?, ops::mul(n22, self.ty)?)?)?;
        Self::new(n11, n12, n21, n22, tx, ty)
    }

    /// Composition `self . other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let m11 = ops::add(
            ops::mul(self.m11, other.m11)?,
            ops::mul(self.m12, other.m21)?,
        )?;
        let m12 = ops::add(
            ops::mul(self.m11, other.m12)?,
            ops::mul(self.m12, other.m22)?,
        )?;
        let m21 = ops::add(
            ops::mul(self.m21, other.m11)?,
            ops::mul(self.m22, other.m21)?,
        )?;
        let m22 = ops::add(
            ops::mul(self.m21, other.m12)?,
            ops::mul(self.m22, other.m22)?,
        )?;
        let t = self.apply(LatticePoint::new(other.tx, other.ty))?;
        Self::new(m11, m12, m21, m22, t.x, t.y)
    }
}

/// Extended Euclid: returns `(c, d, g)` with `c*x + d*y = g = gcd(x, y)`.
///
/// Among all valid coefficient pairs the one with minimal `|d|` is returned,
/// with ties broken by minimal `|c|`, which makes downstream witness
/// matrices reproducible.
pub fn bezout<T: LatticeInt>(x: T, y: T) -> Result<(T, T, T)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::DegenerateInput);
    }

    let (mut r0, mut c0, mut d0) = (x, T::one(), T::zero());
    let (mut r1, mut c1, mut d1) = (y, T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0 / r1;
        let r2 = ops::sub(r0, ops::mul(q, r1)?)?;
        let c2 = ops::sub(c0, ops::mul(q, c1)?)?;
        let d2 = ops::sub(d0, ops::mul(q, d1)?)?;
        (r0, c0, d0) = (r1, c1, d1);
        (r1, c1, d1) = (r2, c2, d2);
    }
    if r0 < T::zero() {
        r0 = ops::neg(r0)?;
        c0 = ops::neg(c0)?;
        d0 = ops::neg(d0)?;
    }
    let g = r0;

    // Every solution is (c0 + t*(y/g), d0 - t*(x/g)). Reduce d to minimal
    // magnitude; when x = 0 the d coefficient is pinned and c reduces to 0.
    let xg = x / g;
    let yg = y / g;
    let (c, d) = if xg.is_zero() {
        (T::zero(), d0)
    } else {
        let step = xg.abs();
        let d_lo = d0.rem_euclid(&step);
        let candidates = [d_lo, ops::sub(d_lo, step)?];
        let mut best: Option<(T, T)> = None;
        for d_cand in candidates {
            // c moves opposite to d along the solution line.
            let t = ops::sub(d0, d_cand)? / xg;
            let c_cand = ops::add(c0, ops::mul(t, yg)?)?;
            best = Some(match best {
                Some((bc, bd)) if (bd.abs(), bc.abs()) <= (d_cand.abs(), c_cand.abs()) => (bc, bd),
                _ => (c_cand, d_cand),
            });
        }
        best.expect("two candidates examined")
    };

    if ops::add(ops::mul(c, x)?, ops::mul(d, y)?)? != g {
        return Err(Error::invariant("bezout identity violated"));
    }
    Ok((c, d, g))
}

/// Euclidean reduction of `a` modulo `b >= 1`: returns `(a mod b, t)` with
/// `a + t*b = a mod b` and `0 <= a mod b < b`.
pub fn shift_reduce<T: LatticeInt>(a: T, b: T) -> Result<(T, T)> {
    if b < T::one() {
        return Err(Error::domain(format!(
            "shift_reduce: modulus {b} must be positive"
        )));
    }
    let reduced = a.rem_euclid(&b);
    let t = ops::sub(reduced, a)? / b;
    Ok((reduced, t))
}

/// The canonical representative `(0,0), (d,0), (a,b)` of a triangle's
/// unimodular-affine equivalence class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalTriangle<T> {
    d: T,
    a: T,
    b: T,
}

impl<T: LatticeInt> CanonicalTriangle<T> {
    pub fn new(d: T, a: T, b: T) -> Result<Self> {
        if d < T::one() {
            return Err(Error::domain(format!(
                "canonical triangle: d = {d} must be >= 1"
            )));
        }
        if b < T::one() {
            return Err(Error::domain(format!(
                "canonical triangle: b = {b} must be >= 1"
            )));
        }
        if a < T::zero() || a >= b {
            return Err(Error::domain(format!(
                "canonical triangle: a = {a} must satisfy 0 <= a < b = {b}"
            )));
        }
        Ok(Self { d, a, b })
    }

    pub fn d(&self) -> T {
        self.d
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    /// Twice the area, which equals `d * b`.
    pub fn twice_area(&self) -> Result<T> {
        ops::mul(self.d, self.b)
    }

    pub fn vertices(&self) -> [LatticePoint<T>; 3] {
        [
            LatticePoint::new(T::zero(), T::zero()),
            LatticePoint::new(self.d, T::zero()),
            LatticePoint::new(self.a, self.b),
        ]
    }

    pub fn to_triangle(&self) -> Result<LatticeTriangle<T>> {
        let [o, w, v] = self.vertices();
        LatticeTriangle::new(o, w, v)
    }

    /// Ordering key used to pick the canonical representative.
    fn key(&self) -> (T, T, T) {
        (self.d, self.b, self.a)
    }
}

/// Carries a triangle onto its canonical form, returning the form together
/// with the witness map `f` such that `f` sends the vertex set of `t` onto
/// `{(0,0), (d,0), (a,b)}`.
///
/// Per vertex labeling the reduction translates the base vertex to the
/// origin, shears the second vertex onto `(d, 0)` with `d` the gcd of its
/// coordinates via a Bezout matrix of determinant -1, reflects the apex into
/// the upper half plane if needed, and shifts `a` into `[0, b)`. All vertex
/// labelings are tried and the lexicographically smallest `(d, b, a)` wins,
/// which makes the canonical form independent of the input vertex order.
pub fn normalize<T: LatticeInt>(
    t: &LatticeTriangle<T>,
) -> Result<(CanonicalTriangle<T>, UnimodularAffineMap<T>)> {
    let vs = t.vertices();
    let orderings = [
        (0usize, 1usize, 2usize),
        (1, 2, 0),
        (2, 0, 1),
        (0, 2, 1),
        (2, 1, 0),
        (1, 0, 2),
    ];
    let mut best: Option<(CanonicalTriangle<T>, UnimodularAffineMap<T>)> = None;
    for (i, j, k) in orderings {
        let candidate = normalize_with_labels(vs[i], vs[j], vs[k])?;
        best = Some(match best {
            Some(current) if current.0.key() <= candidate.0.key() => current,
            _ => candidate,
        });
    }
    Ok(best.expect("six labelings examined"))
}

fn normalize_with_labels<T: LatticeInt>(
    v1: LatticePoint<T>,
    v2: LatticePoint<T>,
    v3: LatticePoint<T>,
) -> Result<(CanonicalTriangle<T>, UnimodularAffineMap<T>)> {
    let translate = UnimodularAffineMap::translation(ops::neg(v1.x)?, ops::neg(v1.y)?);
    let p2 = translate.apply(v2)?;
    let p3 = translate.apply(v3)?;

    let (c, d, g) = bezout(p2.x, p2.y)?;
    // [[c, d], [y/g, -x/g]] has determinant -(c*x + d*y)/g = -1 and sends
    // (x, y) to (g, 0).
    let shear = UnimodularAffineMap::linear(c, d, p2.y / g, ops::neg(p2.x / g)?)?;
    if shear.apply(p2)? != LatticePoint::new(g, T::zero()) {
        return Err(Error::invariant("bezout shear missed (g, 0)"));
    }
    let mut witness = shear.compose(&translate)?;
    let mut apex = shear.apply(p3)?;

    if apex.y < T::zero() {
        witness = UnimodularAffineMap::reflect_y().compose(&witness)?;
        apex = LatticePoint::new(apex.x, ops::neg(apex.y)?);
    }
    if apex.y.is_zero() {
        return Err(Error::invariant("apex landed on the base line"));
    }

    let (a, t) = shift_reduce(apex.x, apex.y)?;
    if !t.is_zero() {
        witness = UnimodularAffineMap::shear_x(t).compose(&witness)?;
    }
    Ok((CanonicalTriangle::new(g, a, apex.y)?, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Map = UnimodularAffineMap<i64>;

    fn pt(x: i64, y: i64) -> LatticePoint<i64> {
        LatticePoint::new(x, y)
    }

    fn tri(v: [(i64, i64); 3]) -> LatticeTriangle<i64> {
        LatticeTriangle::from_coords(v[0].0, v[0].1, v[1].0, v[1].1, v[2].0, v[2].1).unwrap()
    }

    #[test]
    fn constructor_enforces_unimodularity() {
        assert!(Map::linear(2, 0, 0, 1).is_err());
        assert!(Map::linear(1, 5, 0, -1).is_ok());
        assert_eq!(Map::linear(0, 1, 1, 0).unwrap().det(), -1);
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Map::identity().apply(pt(5, -3)).unwrap(), pt(5, -3));
        let shear = Map::shear_x(1);
        assert_eq!(shear.apply(pt(2, 15)).unwrap(), pt(17, 15));
        let bez = Map::linear(0, 1, 1, -2).unwrap();
        assert_eq!(bez.apply(pt(2, 1)).unwrap(), pt(1, 0));
        assert_eq!(bez.apply(pt(1, 8)).unwrap(), pt(8, -15));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Map::identity().invert().unwrap(), Map::identity());
        // det = 1: inverse linear part is the adjugate [[d, -b], [-c, a]].
        let f = Map::new(3, 2, 4, 3, 7, -5).unwrap();
        let g = f.invert().unwrap();
        assert_eq!(g.matrix(), [[3, -2], [-4, 3]]);
        assert_eq!(f.compose(&g).unwrap(), Map::identity());
        assert_eq!(g.compose(&f).unwrap(), Map::identity());
        assert_eq!(Map::shear_x(9).invert().unwrap(), Map::shear_x(-9));
    }

    #[test]
    fn compose_examples() {
        let f = Map::new(2, 1, 1, 1, 3, 4).unwrap();
        assert_eq!(f.compose(&f.invert().unwrap()).unwrap(), Map::identity());
        assert_eq!(Map::identity().compose(&f).unwrap(), f);
        assert_eq!(
            Map::shear_x(1).compose(&Map::shear_x(2)).unwrap(),
            Map::shear_x(3)
        );
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout(2i64, 1).unwrap(), (0, 1, 1));
        assert_eq!(bezout(1i64, 0).unwrap(), (1, 0, 1));
        assert_eq!(bezout(15i64, 6).unwrap(), (1, -2, 3));
        assert_eq!(bezout(0i64, 15).unwrap(), (0, 1, 15));
        assert_eq!(bezout(-4i64, 6).unwrap(), (1, 1, 2));
        assert_eq!(bezout(0i64, -5).unwrap(), (0, -1, 5));
        assert_eq!(bezout(0i64, 0), Err(Error::DegenerateInput));
    }

    #[test]
    fn shift_reduce_examples() {
        assert_eq!(shift_reduce(17i64, 15).unwrap(), (2, -1));
        assert_eq!(shift_reduce(2i64, 15).unwrap(), (2, 0));
        assert_eq!(shift_reduce(-1i64, 15).unwrap(), (14, 1));
        assert!(shift_reduce(3i64, 0).is_err());
    }

    #[test]
    fn normalize_already_canonical() {
        let t = tri([(0, 0), (1, 0), (2, 15)]);
        let (canon, witness) = normalize(&t).unwrap();
        assert_eq!((canon.d(), canon.a(), canon.b()), (1, 2, 15));
        assert!(witness.is_identity());
    }

    #[test]
    fn normalize_translated_copy() {
        let t = tri([(5, 3), (6, 3), (7, 18)]);
        let (canon, witness) = normalize(&t).unwrap();
        assert_eq!((canon.d(), canon.a(), canon.b()), (1, 2, 15));
        assert_eq!(witness.apply(pt(5, 3)).unwrap(), pt(0, 0));
    }

    #[test]
    fn normalize_sheared_triangle() {
        // Equivalent to the (2, 15) triangle; the lexicographic rule picks
        // the a = 2 representative of the {2, 8, 14} relabeling orbit.
        let t = tri([(0, 0), (2, 1), (1, 8)]);
        let (canon, witness) = normalize(&t).unwrap();
        assert_eq!((canon.d(), canon.a(), canon.b()), (1, 2, 15));
        let image: std::collections::HashSet<_> = t
            .vertices()
            .into_iter()
            .map(|v| witness.apply(v).unwrap())
            .collect();
        let expected: std::collections::HashSet<_> = canon.vertices().into_iter().collect();
        assert_eq!(image, expected);
    }

    #[test]
    fn normalize_is_idempotent() {
        for t in [
            tri([(0, 0), (2, 1), (1, 8)]),
            tri([(-3, 4), (10, -2), (5, 5)]),
            tri([(0, 0), (2, 0), (0, 2)]),
        ] {
            let (canon, _) = normalize(&t).unwrap();
            let again = canon.to_triangle().unwrap();
            let (canon2, witness2) = normalize(&again).unwrap();
            assert_eq!(canon, canon2);
            assert!(witness2.is_identity());
        }
    }

    #[test]
    fn normalize_prefers_primitive_base() {
        // (d, b, a) is minimized lexicographically, so d = 1 labelings win
        // over the d = 3 edge.
        let t = tri([(0, 0), (1, 0), (0, 3)]);
        let (canon, _) = normalize(&t).unwrap();
        assert_eq!((canon.d(), canon.a(), canon.b()), (1, 0, 3));
        assert_eq!(canon.twice_area().unwrap(), t.twice_area());
    }

    #[test]
    fn canonical_triangle_validation() {
        assert!(CanonicalTriangle::new(1i64, 2, 15).is_ok());
        assert!(CanonicalTriangle::new(0i64, 0, 3).is_err());
        assert!(CanonicalTriangle::new(1i64, 3, 3).is_err());
        assert!(CanonicalTriangle::new(1i64, -1, 3).is_err());
        assert!(CanonicalTriangle::new(1i64, 0, 0).is_err());
    }

    #[test]
    fn preserves_counts_under_map() {
        let t = tri([(0, 0), (1, 0), (3, 7)]);
        let f = Map::new(2, 1, 1, 1, -4, 9).unwrap();
        let image = f.apply_triangle(&t).unwrap();
        assert_eq!(image.twice_area(), t.twice_area());
        assert_eq!(image.boundary_count().unwrap(), t.boundary_count().unwrap());
        assert_eq!(
            image.interior_count_pick().unwrap(),
            t.interior_count_pick().unwrap()
        );
    }
}
