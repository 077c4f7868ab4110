//! Exact primitives for lattice points, segments, and triangles.
//!
//! Everything here is integer-only. Lattice-point counts on segments come
//! from the gcd of the coordinate differences, areas from the shoelace cross
//! product (kept doubled so they stay integral), and interior counts either
//! from the boundary/area bookkeeping (`A = B/2 + I - 1`) or from an exact
//! row scan that enumerates the interior points themselves. The two routes
//! are independent and cross-checked in the test suites.

use crate::error::{Error, Result};
use crate::scalar::{ops, LatticeInt};

/// A point of the integer lattice `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: LatticeInt> LatticePoint<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    /// Whether both coordinates lie within [`LatticeInt::coord_limit`].
    ///
    /// Points inside this range make every downstream computation
    /// (differences, cross products, Pick bookkeeping) overflow-free.
    pub fn in_safe_range(&self) -> bool {
        let limit = T::coord_limit();
        let neg_limit = T::zero() - limit;
        self.x >= neg_limit && self.x <= limit && self.y >= neg_limit && self.y <= limit
    }
}

/// `gcd` of the absolute values; `gcd(a, 0) = |a|` and `gcd(0, 0) = 0`.
pub fn gcd<T: LatticeInt>(mut a: T, mut b: T) -> T {
    while !b.is_zero() {
        let r = a % b;
        a = b;
        b = r;
    }
    a.abs()
}

/// Cross product of the vectors `(ax, ay)` and `(bx, by)`.
pub(crate) fn cross<T: LatticeInt>(ax: T, ay: T, bx: T, by: T) -> Result<T> {
    ops::sub(ops::mul(ax, by)?, ops::mul(ay, bx)?)
}

/// Number of lattice points strictly between `p` and `q`.
///
/// Equals `gcd(|qx - px|, |qy - py|) - 1`; in particular it is zero exactly
/// when the coordinate differences are coprime.
pub fn segment_interior_count<T: LatticeInt>(p: LatticePoint<T>, q: LatticePoint<T>) -> Result<T> {
    if p == q {
        return Err(Error::DegenerateSegment);
    }
    let dx = ops::sub(q.x, p.x)?;
    let dy = ops::sub(q.y, p.y)?;
    Ok(gcd(dx, dy) - T::one())
}

/// Twice the signed area of the triangle `(a, b, c)`; positive for a
/// counterclockwise vertex order.
pub fn twice_area_signed<T: LatticeInt>(
    a: LatticePoint<T>,
    b: LatticePoint<T>,
    c: LatticePoint<T>,
) -> Result<T> {
    cross(
        ops::sub(b.x, a.x)?,
        ops::sub(b.y, a.y)?,
        ops::sub(c.x, a.x)?,
        ops::sub(c.y, a.y)?,
    )
}

/// Twice the area of the triangle `(a, b, c)`; zero for collinear triples.
pub fn twice_area_of<T: LatticeInt>(
    a: LatticePoint<T>,
    b: LatticePoint<T>,
    c: LatticePoint<T>,
) -> Result<T> {
    Ok(twice_area_signed(a, b, c)?.abs())
}

/// Boundary, interior, and doubled-area statistics of a lattice triangle.
///
/// The three values always satisfy `twice_area = boundary + 2*interior - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleStats<T> {
    pub twice_area: T,
    pub boundary: T,
    pub interior: T,
}

/// A non-degenerate triangle with lattice-point vertices.
///
/// Construction rejects collinear vertex triples and coordinates outside the
/// safe range, so every constructed value supports the full set of exact
/// statistics below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeTriangle<T> {
    v1: LatticePoint<T>,
    v2: LatticePoint<T>,
    v3: LatticePoint<T>,
    twice_area: T,
}

impl<T: LatticeInt> LatticeTriangle<T> {
    pub fn new(v1: LatticePoint<T>, v2: LatticePoint<T>, v3: LatticePoint<T>) -> Result<Self> {
        for v in [v1, v2, v3] {
            if !v.in_safe_range() {
                return Err(Error::Range(format!(
                    "vertex ({}, {}) outside the safe coordinate range (|coord| <= {})",
                    v.x,
                    v.y,
                    T::coord_limit()
                )));
            }
        }
        let twice_area = twice_area_of(v1, v2, v3)?;
        if twice_area.is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self {
            v1,
            v2,
            v3,
            twice_area,
        })
    }

    /// Convenience constructor from raw coordinates.
    pub fn from_coords(x1: T, y1: T, x2: T, y2: T, x3: T, y3: T) -> Result<Self> {
        Self::new(
            LatticePoint::new(x1, y1),
            LatticePoint::new(x2, y2),
            LatticePoint::new(x3, y3),
        )
    }

    pub fn vertices(&self) -> [LatticePoint<T>; 3] {
        [self.v1, self.v2, self.v3]
    }

    pub fn edges(&self) -> [(LatticePoint<T>, LatticePoint<T>); 3] {
        [(self.v1, self.v2), (self.v2, self.v3), (self.v3, self.v1)]
    }

    /// Twice the area (`2A`), always a positive integer.
    pub fn twice_area(&self) -> T {
        self.twice_area
    }

    /// Number of lattice points on the boundary: the three vertices plus the
    /// strictly interior points of each edge.
    pub fn boundary_count(&self) -> Result<T> {
        let mut total = ops::constant::<T>(3);
        for (p, q) in self.edges() {
            total = ops::add(total, segment_interior_count(p, q)?)?;
        }
        Ok(total)
    }

    /// Number of interior lattice points via `I = (2A - B + 2) / 2`.
    pub fn interior_count_pick(&self) -> Result<T> {
        Ok(self.stats()?.interior)
    }

    /// All three statistics at once. The division for `I` is exact; a parity
    /// failure would indicate a bug and reports [`Error::Invariant`].
    pub fn stats(&self) -> Result<TriangleStats<T>> {
        let boundary = self.boundary_count()?;
        let twice_interior = ops::add(ops::sub(self.twice_area, boundary)?, ops::two())?;
        let two = ops::two::<T>();
        if twice_interior < T::zero() || !twice_interior.rem_euclid(&two).is_zero() {
            return Err(Error::invariant(format!(
                "2A - B + 2 = {twice_interior} is not a nonnegative even integer"
            )));
        }
        Ok(TriangleStats {
            twice_area: self.twice_area,
            boundary,
            interior: twice_interior / two,
        })
    }

    /// Whether `p` lies strictly inside the triangle.
    ///
    /// `p` must be within the safe coordinate range.
    pub fn contains_interior(&self, p: LatticePoint<T>) -> bool {
        let orientation = twice_area_signed(self.v1, self.v2, self.v3)
            .expect("vertices are range-checked")
            .signum();
        for (a, b) in self.edges() {
            let side = twice_area_signed(a, b, p)
                .expect("contains_interior: point outside the safe coordinate range");
            if side.signum() != orientation {
                return false;
            }
        }
        true
    }

    /// Every lattice point strictly inside the triangle, ordered by `y` then
    /// `x`.
    ///
    /// Runs one exact integer interval computation per lattice row, so the
    /// cost is proportional to the height plus the number of interior points.
    pub fn interior_points(&self) -> Result<Vec<LatticePoint<T>>> {
        // Reorder to counterclockwise so "inside" means strictly left of
        // every directed edge.
        let signed = twice_area_signed(self.v1, self.v2, self.v3)?;
        let (a, b, c) = if signed < T::zero() {
            (self.v1, self.v3, self.v2)
        } else {
            (self.v1, self.v2, self.v3)
        };
        let edges = [(a, b), (b, c), (c, a)];

        let y_min = a.y.min(b.y).min(c.y);
        let y_max = a.y.max(b.y).max(c.y);

        let mut points = Vec::new();
        let mut y = ops::add(y_min, T::one())?;
        while y < y_max {
            if let Some((lo, hi)) = row_span(&edges, y)? {
                let mut x = lo;
                while x <= hi {
                    points.push(LatticePoint::new(x, y));
                    x = ops::add(x, T::one())?;
                }
            }
            y = ops::add(y, T::one())?;
        }
        Ok(points)
    }
}

/// Open interval of `x` values strictly inside all three CCW edges at row
/// `y`, or `None` when the row is empty.
fn row_span<T: LatticeInt>(
    edges: &[(LatticePoint<T>, LatticePoint<T>); 3],
    y: T,
) -> Result<Option<(T, T)>> {
    let mut lo: Option<T> = None;
    let mut hi: Option<T> = None;
    for &(p, q) in edges {
        let ex = ops::sub(q.x, p.x)?;
        let ey = ops::sub(q.y, p.y)?;
        let ry = ops::sub(y, p.y)?;
        // Strict left-of-edge test: ex*ry - ey*(x - px) > 0, i.e.
        // ey*x < ex*ry + ey*px.
        let m = ops::add(ops::mul(ex, ry)?, ops::mul(ey, p.x)?)?;
        if ey > T::zero() {
            // x <= floor((m - 1) / ey)
            let bound = ops::sub(m, T::one())?.div_euclid(&ey);
            hi = Some(match hi {
                Some(h) => h.min(bound),
                None => bound,
            });
        } else if ey < T::zero() {
            // x >= floor(-m / -ey) + 1
            let bound = ops::add(ops::neg(m)?.div_euclid(&ops::neg(ey)?), T::one())?;
            lo = Some(match lo {
                Some(l) => l.max(bound),
                None => bound,
            });
        } else if ops::mul(ex, ry)? <= T::zero() {
            return Ok(None);
        }
    }
    // A non-degenerate cycle has both an upward and a downward edge.
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo <= hi => Ok(Some((lo, hi))),
        (Some(_), Some(_)) => Ok(None),
        _ => Err(Error::invariant("row scan on a degenerate edge cycle")),
    }
}

/// True when all points lie on a single line.
///
/// Lists with fewer than three distinct points are collinear by convention.
/// Coordinates must lie within the safe range.
pub fn collinear<T: LatticeInt>(points: &[LatticePoint<T>]) -> bool {
    let Some(&p0) = points.first() else {
        return true;
    };
    let Some(&p1) = points.iter().find(|p| **p != p0) else {
        return true;
    };
    let (dx, dy) = (p1.x - p0.x, p1.y - p0.y);
    points.iter().all(|p| {
        cross(dx, dy, p.x - p0.x, p.y - p0.y)
            .expect("collinear: point outside the safe coordinate range")
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint<i64> {
        LatticePoint::new(x, y)
    }

    fn tri(v: [(i64, i64); 3]) -> LatticeTriangle<i64> {
        LatticeTriangle::from_coords(v[0].0, v[0].1, v[1].0, v[1].1, v[2].0, v[2].1).unwrap()
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(3i64, 7), 1);
        assert_eq!(gcd(0i64, 15), 15);
        assert_eq!(gcd(-4i64, 6), 2);
        assert_eq!(gcd(0i64, 0), 0);
        assert_eq!(gcd(-9i64, 0), 9);
    }

    #[test]
    fn segment_counts() {
        assert_eq!(segment_interior_count(pt(0, 0), pt(3, 7)).unwrap(), 0);
        assert_eq!(segment_interior_count(pt(0, 0), pt(0, 5)).unwrap(), 4);
        assert_eq!(segment_interior_count(pt(0, 0), pt(4, 6)).unwrap(), 1);
        assert_eq!(
            segment_interior_count(pt(2, 2), pt(2, 2)),
            Err(Error::DegenerateSegment)
        );
    }

    #[test]
    fn twice_area_examples() {
        assert_eq!(tri([(0, 0), (1, 0), (2, 15)]).twice_area(), 15);
        assert_eq!(tri([(0, 0), (3, 0), (0, 3)]).twice_area(), 9);
        // Pre-validation helper reports zero for collinear triples.
        assert_eq!(twice_area_of(pt(0, 0), pt(1, 1), pt(2, 2)).unwrap(), 0);
    }

    #[test]
    fn degenerate_triangle_rejected() {
        assert_eq!(
            LatticeTriangle::from_coords(0i64, 0, 1, 1, 2, 2),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        let big = (1i64 << 30) + 1;
        let err = LatticeTriangle::from_coords(0i64, 0, 1, 0, big, 1).unwrap_err();
        assert_eq!(err.code(), "range");
        // The documented limit itself is accepted.
        let lim = 1i64 << 30;
        assert!(LatticeTriangle::from_coords(0i64, 0, 1, 0, lim, lim).is_ok());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(tri([(0, 0), (1, 0), (2, 15)]).boundary_count().unwrap(), 3);
        assert_eq!(tri([(0, 0), (1, 0), (0, 3)]).boundary_count().unwrap(), 5);
        assert_eq!(tri([(0, 0), (3, 0), (0, 3)]).boundary_count().unwrap(), 9);
    }

    #[test]
    fn interior_count_examples() {
        assert_eq!(
            tri([(0, 0), (1, 0), (2, 15)])
                .interior_count_pick()
                .unwrap(),
            7
        );
        assert_eq!(
            tri([(0, 0), (1, 0), (0, 3)]).interior_count_pick().unwrap(),
            0
        );
        assert_eq!(
            tri([(0, 0), (1, 0), (3, 7)]).interior_count_pick().unwrap(),
            3
        );
    }

    #[test]
    fn interior_points_examples() {
        assert_eq!(
            tri([(0, 0), (1, 0), (3, 7)]).interior_points().unwrap(),
            vec![pt(1, 1), pt(1, 2), pt(2, 4)]
        );
        assert_eq!(
            tri([(0, 0), (1, 0), (0, 3)]).interior_points().unwrap(),
            vec![]
        );
        let column: Vec<_> = (1..=7).map(|y| pt(1, y)).collect();
        assert_eq!(
            tri([(0, 0), (1, 0), (2, 15)]).interior_points().unwrap(),
            column
        );
    }

    #[test]
    fn interior_points_row_order() {
        // Lexicographic in (y, x) regardless of vertex order.
        let t = tri([(6, 1), (0, 5), (0, 0)]);
        let pts = t.interior_points().unwrap();
        let mut sorted = pts.clone();
        sorted.sort_by_key(|p| (p.y, p.x));
        assert_eq!(pts, sorted);
        assert_eq!(pts.len() as i64, t.interior_count_pick().unwrap());
    }

    #[test]
    fn collinear_examples() {
        assert!(!collinear(&[pt(1, 1), pt(1, 2), pt(2, 4)]));
        assert!(collinear(&[pt(5, 5)]));
        assert!(collinear::<i64>(&[]));
        let column: Vec<_> = (1..=7).map(|y| pt(1, y)).collect();
        assert!(collinear(&column));
        // Repeated points never break the verdict.
        assert!(collinear(&[pt(2, 2), pt(2, 2), pt(2, 2)]));
    }

    #[test]
    fn stats_are_pick_consistent() {
        for t in [
            tri([(0, 0), (1, 0), (3, 7)]),
            tri([(0, 0), (3, 0), (0, 3)]),
            tri([(-7, 3), (4, -2), (1, 9)]),
        ] {
            let s = t.stats().unwrap();
            assert_eq!(s.twice_area, s.boundary + 2 * s.interior - 2);
            assert!(s.boundary >= 3);
        }
    }

    #[test]
    fn works_for_i128_too() {
        let t = LatticeTriangle::from_coords(0i128, 0, 1, 0, 3, 7).unwrap();
        assert_eq!(t.interior_count_pick().unwrap(), 3);
        assert_eq!(i128::coord_limit(), 1i128 << 62);
    }
}
