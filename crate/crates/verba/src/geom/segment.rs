use super::{Carrier, GeomError, Point, EPS_ABS};

/// A line segment in canonical endpoint order, never zero-length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    p: Point,
    q: Point,
}

impl Segment {
    /// Builds a segment, ordering the endpoints lexicographically so that
    /// `Segment::new(a, b)` and `Segment::new(b, a)` are the same value.
    pub fn new(a: Point, b: Point) -> Result<Segment, GeomError> {
        if !a.x.is_finite() || !a.y.is_finite() || !b.x.is_finite() || !b.y.is_finite() {
            return Err(GeomError::NonFiniteCoordinate);
        }
        if a.coincides(&b) {
            return Err(GeomError::ZeroLengthSegment(a.x, a.y));
        }
        if a.lex_cmp(&b) == std::cmp::Ordering::Greater {
            Ok(Segment { p: b, q: a })
        } else {
            Ok(Segment { p: a, q: b })
        }
    }

    pub fn from_coords(x1: f64, y1: f64, x2: f64, y2: f64) -> Result<Segment, GeomError> {
        Segment::new(Point::new(x1, y1)?, Point::new(x2, y2)?)
    }

    pub fn p(&self) -> Point {
        self.p
    }

    pub fn q(&self) -> Point {
        self.q
    }

    pub fn len(&self) -> f64 {
        self.p.dist(&self.q)
    }

    pub fn carrier(&self) -> Carrier {
        Carrier::through(self.p, self.q)
    }

    pub fn midpoint(&self) -> Point {
        Point::raw((self.p.x + self.q.x) / 2.0, (self.p.y + self.q.y) / 2.0)
    }

    /// Endpoint-wise coincidence within tolerance.
    pub fn coincides(&self, other: &Segment) -> bool {
        self.p.coincides(&other.p) && self.q.coincides(&other.q)
    }

    /// True when `pt` lies on the segment (within tolerance of the closed
    /// segment, not just the carrier line).
    pub fn contains_point(&self, pt: &Point) -> bool {
        let c = self.carrier();
        if c.dist_to(pt) > EPS_ABS {
            return false;
        }
        let t = c.param(pt);
        let (t0, t1) = (c.param(&self.p), c.param(&self.q));
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        t >= lo - EPS_ABS && t <= hi + EPS_ABS
    }

    pub(crate) fn lex_cmp(&self, other: &Segment) -> std::cmp::Ordering {
        self.p
            .lex_cmp(&other.p)
            .then_with(|| self.q.lex_cmp(&other.q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_length_is_rejected() {
        let a = Point::raw(1.0, 2.0);
        let b = Point::raw(1.0, 2.0 + 1e-10);
        assert!(matches!(
            Segment::new(a, b),
            Err(GeomError::ZeroLengthSegment(..))
        ));
    }

    #[test]
    fn endpoint_order_is_canonical() {
        let s1 = Segment::from_coords(1.0, 0.0, 0.0, 0.0).unwrap();
        let s2 = Segment::from_coords(0.0, 0.0, 1.0, 0.0).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.p(), Point::raw(0.0, 0.0));
    }

    #[test]
    fn contains_point_respects_extent() {
        let s = Segment::from_coords(0.0, 0.0, 2.0, 0.0).unwrap();
        assert!(s.contains_point(&Point::raw(1.0, 0.0)));
        assert!(s.contains_point(&Point::raw(2.0, 0.0)));
        assert!(!s.contains_point(&Point::raw(2.1, 0.0)));
        assert!(!s.contains_point(&Point::raw(1.0, 0.1)));
    }
}
