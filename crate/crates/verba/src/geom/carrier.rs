use super::{Point, Vec2, EPS_ABS, EPS_REL};

/// The infinite line supporting a segment, as a sign-canonicalized unit
/// normal plus offset: the line is `{ p : n . p = c }`.
///
/// Segments merge into maximal segments only within a carrier, so two
/// segments on the same infinite line must map to the same carrier (within
/// tolerance). Canonicalization flips the normal so that it points into the
/// half-plane with `nx > 0`, or `ny > 0` for vertical normals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Carrier {
    nx: f64,
    ny: f64,
    c: f64,
}

impl Carrier {
    pub fn through(p: Point, q: Point) -> Carrier {
        let d = q - p;
        let len = d.norm();
        let (mut nx, mut ny) = (-d.y / len, d.x / len);
        let mut c = nx * p.x + ny * p.y;
        let flip = nx < -1e-12 || (nx.abs() <= 1e-12 && ny < 0.0);
        if flip {
            nx = -nx;
            ny = -ny;
            c = -c;
        }
        Carrier { nx, ny, c }
    }

    /// Distance from a point to the carrier line.
    pub fn dist_to(&self, p: &Point) -> f64 {
        (self.nx * p.x + self.ny * p.y - self.c).abs()
    }

    /// True when the two carriers describe the same infinite line within
    /// tolerance. Checks the flipped orientation too, so lines that
    /// canonicalized to opposite signs near the flip boundary still match.
    pub fn same_line(&self, other: &Carrier) -> bool {
        self.close(other)
            || self.close(&Carrier {
                nx: -other.nx,
                ny: -other.ny,
                c: -other.c,
            })
    }

    fn close(&self, other: &Carrier) -> bool {
        let ctol = EPS_ABS + EPS_REL * self.c.abs().max(other.c.abs());
        (self.nx - other.nx).abs() <= 1e-9
            && (self.ny - other.ny).abs() <= 1e-9
            && (self.c - other.c).abs() <= ctol
    }

    /// Unit tangent direction along the line.
    pub fn direction(&self) -> Vec2 {
        Vec2::new(self.ny, -self.nx)
    }

    /// Foot of the perpendicular from the origin; parameter origin for
    /// [`Carrier::param`].
    pub fn foot(&self) -> Point {
        Point::raw(self.c * self.nx, self.c * self.ny)
    }

    /// Scalar position of a point along the line (the point need not lie
    /// exactly on it; it is projected).
    pub fn param(&self, p: &Point) -> f64 {
        let d = self.direction();
        let f = self.foot();
        d.dot(&(*p - f))
    }

    /// Point at scalar position `t` along the line.
    pub fn at(&self, t: f64) -> Point {
        self.foot() + self.direction() * t
    }

    /// Intersection point of two carriers; `None` when near-parallel.
    pub fn intersect(&self, other: &Carrier) -> Option<Point> {
        let det = self.nx * other.ny - self.ny * other.nx;
        if det.abs() <= 1e-9 {
            return None;
        }
        let x = (self.c * other.ny - other.c * self.ny) / det;
        let y = (self.nx * other.c - other.nx * self.c) / det;
        Some(Point::raw(x, y))
    }
}
