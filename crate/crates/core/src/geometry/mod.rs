//! Convex polygon primitives: regular n-gons, Sutherland–Hodgman
//! clipping, and area accounting.
//!
//! Coordinates are high-precision floats (see [`real`]); exactness for
//! the algebraic side of each argument is recovered symbolically in the
//! `exact` and `constructions` modules. Tolerances are scale-relative:
//! `ε_geom = 2⁻⁴⁰ · (largest coordinate magnitude)` for collinearity and
//! containment, `ε_area = ε_geom²` for discarding degenerate regions.

pub mod coverage;
mod real;

pub use coverage::{multiplicity_accounting, Coverage};
pub use real::{precision_bits, set_precision_bits, Real, DEFAULT_PRECISION_BITS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("a regular polygon needs at least 3 sides, got {0}")]
    TooFewSides(u32),
    #[error("side length must be positive")]
    NonPositiveSide,
    #[error("vertices are not in counterclockwise order")]
    NotCounterClockwise,
    #[error("polygon is not convex at vertex {0}")]
    NotConvex(usize),
    #[error("small polygon {0} is not contained in the big polygon")]
    SmallPolygonOutside(usize),
    #[error("coverage exceeds the declared maximum multiplicity {0}")]
    MultiplicityExceeded(u8),
    #[error("maximum multiplicity must be 2 or 3, got {0}")]
    UnsupportedMultiplicity(u8),
}

/// Scale-relative collinearity/containment tolerance.
pub fn collinearity_eps(scale: &Real) -> Real {
    let floor = Real::from_f64(2f64.powi(-40));
    &scale.max(&Real::one()) * &floor
}

/// Scale-relative area tolerance below which a region counts as empty.
pub fn area_eps(scale: &Real) -> Real {
    let e = collinearity_eps(scale);
    &e * &e
}

#[derive(Clone, Debug)]
pub struct Point {
    pub x: Real,
    pub y: Real,
}

impl Point {
    pub fn new(x: Real, y: Real) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Real::from_int(x), Real::from_int(y))
    }

    pub fn origin() -> Self {
        Point::new(Real::zero(), Real::zero())
    }
}

/// cross((b − a), (c − a)): positive when `c` lies left of `a → b`.
fn cross(a: &Point, b: &Point, c: &Point) -> Real {
    &(&(&b.x - &a.x) * &(&c.y - &a.y)) - &(&(&b.y - &a.y) * &(&c.x - &a.x))
}

/// A convex polygon with counterclockwise vertices (positive shoelace).
#[derive(Clone, Debug)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates orientation and convexity up to the collinearity
    /// tolerance at the polygon's own scale.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        let poly = ConvexPolygon { vertices };
        let scale = poly.max_abs_coord();
        let cross_tol = -&(&collinearity_eps(&scale) * &scale.max(&Real::one()));
        let n = poly.vertices.len();
        for i in 0..n {
            let a = &poly.vertices[i];
            let b = &poly.vertices[(i + 1) % n];
            let c = &poly.vertices[(i + 2) % n];
            if cross(a, b, c) < cross_tol {
                return Err(GeometryError::NotConvex((i + 1) % n));
            }
        }
        if poly.signed_area() < -&area_eps(&scale) {
            return Err(GeometryError::NotCounterClockwise);
        }
        Ok(poly)
    }

    /// Regular polygon with `sides` sides: first vertex at `anchor`,
    /// first edge leaving it at angle `rotation`, counterclockwise.
    pub fn regular(
        sides: u32,
        side_length: &Real,
        anchor: &Point,
        rotation: &Real,
    ) -> Result<Self, GeometryError> {
        if sides < 3 {
            return Err(GeometryError::TooFewSides(sides));
        }
        if !side_length.is_positive() {
            return Err(GeometryError::NonPositiveSide);
        }
        let turn = &(&Real::pi() * &Real::from_int(2)) / &Real::from_u64(u64::from(sides));
        let mut vertices = Vec::with_capacity(sides as usize);
        let mut current = anchor.clone();
        for i in 0..sides {
            vertices.push(current.clone());
            if i + 1 == sides {
                break;
            }
            let heading = rotation + &(&turn * &Real::from_u64(u64::from(i)));
            current = Point::new(
                &current.x + &(side_length * &heading.cos()),
                &current.y + &(side_length * &heading.sin()),
            );
        }
        ConvexPolygon::new(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    fn signed_area(&self) -> Real {
        let n = self.vertices.len();
        let mut twice = Real::zero();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            twice = &twice + &(&(&a.x * &b.y) - &(&a.y * &b.x));
        }
        &twice / &Real::from_int(2)
    }

    /// Shoelace area; nonnegative for validated polygons.
    pub fn area(&self) -> Real {
        let a = self.signed_area();
        if a.is_negative() {
            Real::zero()
        } else {
            a
        }
    }

    pub fn max_abs_coord(&self) -> Real {
        let mut scale = Real::zero();
        for v in &self.vertices {
            scale = scale.max(&v.x.abs()).max(&v.y.abs());
        }
        scale
    }

    /// Axis-aligned bounding box `(min_x, min_y, max_x, max_y)`.
    pub fn bbox(&self) -> (Real, Real, Real, Real) {
        let first = &self.vertices[0];
        let (mut min_x, mut min_y) = (first.x.clone(), first.y.clone());
        let (mut max_x, mut max_y) = (first.x.clone(), first.y.clone());
        for v in &self.vertices[1..] {
            min_x = min_x.min(&v.x);
            min_y = min_y.min(&v.y);
            max_x = max_x.max(&v.x);
            max_y = max_y.max(&v.y);
        }
        (min_x, min_y, max_x, max_y)
    }

    /// Whether `p` lies inside this polygon, or within `eps` of its
    /// boundary.
    pub fn contains_point(&self, p: &Point, eps: &Real) -> bool {
        let n = self.vertices.len();
        let scale = self.max_abs_coord().max(&Real::one());
        let tol = -&(eps * &scale);
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            if cross(a, b, p) < tol {
                return false;
            }
        }
        true
    }

    /// Intersection with another convex polygon by successive half-plane
    /// clipping; `None` when the intersection is empty or its area falls
    /// below the scale-relative threshold.
    pub fn clip(&self, clip: &ConvexPolygon) -> Option<ConvexPolygon> {
        let scale = self.max_abs_coord().max(&clip.max_abs_coord());
        let mut current: Vec<Point> = self.vertices.clone();
        let n = clip.vertices.len();
        for i in 0..n {
            let a = &clip.vertices[i];
            let b = &clip.vertices[(i + 1) % n];
            current = clip_against_halfplane(&current, a, b);
            if current.len() < 3 {
                return None;
            }
        }
        finalize_clip(current, &scale)
    }
}

/// Keeps the part of `poly` on the left of the directed edge `a → b`.
fn clip_against_halfplane(poly: &[Point], a: &Point, b: &Point) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    let n = poly.len();
    for i in 0..n {
        let s = &poly[i];
        let e = &poly[(i + 1) % n];
        let sc = cross(a, b, s);
        let ec = cross(a, b, e);
        let s_in = !sc.is_negative();
        let e_in = !ec.is_negative();
        match (s_in, e_in) {
            (true, true) => out.push(e.clone()),
            (true, false) | (false, true) => {
                let denom = &sc - &ec;
                if !denom.is_zero() {
                    let t = &sc / &denom;
                    out.push(Point::new(
                        &s.x + &(&t * &(&e.x - &s.x)),
                        &s.y + &(&t * &(&e.y - &s.y)),
                    ));
                }
                if e_in {
                    out.push(e.clone());
                }
            }
            (false, false) => {}
        }
    }
    out
}

/// Deduplicates near-coincident vertices and drops degenerate results.
fn finalize_clip(points: Vec<Point>, scale: &Real) -> Option<ConvexPolygon> {
    let eps = collinearity_eps(scale);
    let mut cleaned: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if let Some(last) = cleaned.last() {
            if (&p.x - &last.x).abs() <= eps && (&p.y - &last.y).abs() <= eps {
                continue;
            }
        }
        cleaned.push(p);
    }
    while cleaned.len() >= 2 {
        let first = &cleaned[0];
        let last = cleaned.last().unwrap();
        if (&first.x - &last.x).abs() <= eps && (&first.y - &last.y).abs() <= eps {
            cleaned.pop();
        } else {
            break;
        }
    }
    if cleaned.len() < 3 {
        return None;
    }
    let poly = ConvexPolygon { vertices: cleaned };
    if poly.signed_area() <= area_eps(scale) {
        return None;
    }
    Some(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square_at(x: i64, y: i64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::from_ints(x, y),
            Point::from_ints(x + 1, y),
            Point::from_ints(x + 1, y + 1),
            Point::from_ints(x, y + 1),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square_construction() {
        let sq = ConvexPolygon::regular(4, &Real::one(), &Point::origin(), &Real::zero()).unwrap();
        let expect = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        for (v, (x, y)) in sq.vertices().iter().zip(expect) {
            assert!((v.x.to_f64() - x).abs() < 1e-30);
            assert!((v.y.to_f64() - y).abs() < 1e-30);
        }
        assert!((sq.area().to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn equilateral_triangle_third_vertex() {
        let tri =
            ConvexPolygon::regular(3, &Real::from_int(2), &Point::origin(), &Real::zero()).unwrap();
        let apex = &tri.vertices()[2];
        assert!((apex.x.to_f64() - 1.0).abs() < 1e-40);
        assert!((apex.y.to_f64() - 3f64.sqrt()).abs() < 1e-15);
        // area = s²·√3/4 at s = 2
        let expected = &(&Real::from_int(4) * &Real::from_int(3).sqrt()) / &Real::from_int(4);
        assert!((&tri.area() - &expected).abs() < Real::from_f64(1e-45));
    }

    #[test]
    fn pentagon_area_matches_closed_form() {
        let pent =
            ConvexPolygon::regular(5, &Real::one(), &Point::origin(), &Real::zero()).unwrap();
        // (1/4)·√(25 + 10√5) ≈ 1.72048
        let inner = &Real::from_int(25) + &(&Real::from_int(10) * &Real::from_int(5).sqrt());
        let expected = &inner.sqrt() / &Real::from_int(4);
        assert!((&pent.area() - &expected).abs() < Real::from_f64(1e-45));
        assert!((pent.area().to_f64() - 1.72048).abs() < 1e-5);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            ConvexPolygon::regular(2, &Real::one(), &Point::origin(), &Real::zero()).unwrap_err(),
            GeometryError::TooFewSides(2)
        );
        assert_eq!(
            ConvexPolygon::regular(4, &Real::zero(), &Point::origin(), &Real::zero()).unwrap_err(),
            GeometryError::NonPositiveSide
        );
        // clockwise square
        assert_eq!(
            ConvexPolygon::new(vec![
                Point::from_ints(0, 0),
                Point::from_ints(0, 1),
                Point::from_ints(1, 1),
                Point::from_ints(1, 0),
            ])
            .unwrap_err(),
            GeometryError::NotConvex(1)
        );
        // non-convex chevron
        assert!(ConvexPolygon::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(4, 0),
            Point::from_ints(2, 1),
            Point::from_ints(4, 4),
            Point::from_ints(0, 4),
        ])
        .is_err());
        assert_eq!(
            ConvexPolygon::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 0)]).unwrap_err(),
            GeometryError::TooFewVertices(2)
        );
    }

    #[test]
    fn needle_polygon_has_tiny_positive_area() {
        let eps = 2f64.powi(-45);
        let needle = ConvexPolygon::new(vec![
            Point::new(Real::zero(), Real::zero()),
            Point::new(Real::one(), Real::zero()),
            Point::new(&Real::one() / &Real::from_int(2), Real::from_f64(eps)),
        ])
        .unwrap();
        let area = needle.area();
        assert!(!area.is_negative());
        assert!(area.to_f64() < 1e-12);
    }

    #[test]
    fn clip_offset_squares() {
        let a = unit_square_at(0, 0);
        let b = ConvexPolygon::new(vec![
            Point::new(Real::from_f64(0.5), Real::from_f64(0.5)),
            Point::new(Real::from_f64(1.5), Real::from_f64(0.5)),
            Point::new(Real::from_f64(1.5), Real::from_f64(1.5)),
            Point::new(Real::from_f64(0.5), Real::from_f64(1.5)),
        ])
        .unwrap();
        let overlap = a.clip(&b).unwrap();
        assert!((overlap.area().to_f64() - 0.25).abs() < 1e-30);
        // symmetric
        let overlap_rev = b.clip(&a).unwrap();
        assert!((&overlap.area() - &overlap_rev.area()).abs() < Real::from_f64(1e-40));
    }

    #[test]
    fn clip_disjoint_and_touching() {
        let a = unit_square_at(0, 0);
        let b = unit_square_at(5, 5);
        assert!(a.clip(&b).is_none());
        // sharing exactly one edge: zero-area intersection
        let c = unit_square_at(1, 0);
        assert!(a.clip(&c).is_none());
    }

    #[test]
    fn clip_figure_one_overlap() {
        // squares of side 5 at opposite corners of a side-7 square
        // overlap in a square of side 2·5 − 7 = 3
        let mk = |x: i64, y: i64, s: i64| {
            ConvexPolygon::new(vec![
                Point::from_ints(x, y),
                Point::from_ints(x + s, y),
                Point::from_ints(x + s, y + s),
                Point::from_ints(x, y + s),
            ])
            .unwrap()
        };
        let low = mk(0, 0, 5);
        let high = mk(2, 2, 5);
        let overlap = low.clip(&high).unwrap();
        assert!((overlap.area().to_f64() - 9.0).abs() < 1e-30);
        // contained in both
        assert!(overlap.area() <= low.area());
        assert!(overlap.area() <= high.area());
    }
}
