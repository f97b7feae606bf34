use super::{quantize, GeomError, Point, EPS_ABS, EPS_REL};

/// A plane similarity: uniform scale times rotation, optionally composed
/// with a reflection, plus a translation. Maps `v` to `M v + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    // Row-major linear part [a b; c d].
    m: [f64; 4],
    t: [f64; 2],
}

impl Transform {
    /// Validates the similarity constraint: the columns of the linear part
    /// must be orthogonal with equal norm, and the scale factor above
    /// tolerance.
    pub fn new(m: [f64; 4], t: [f64; 2]) -> Result<Transform, GeomError> {
        if m.iter().chain(t.iter()).any(|v| !v.is_finite()) {
            return Err(GeomError::NonFiniteCoordinate);
        }
        let [a, b, c, d] = m;
        let n1 = (a * a + c * c).sqrt();
        let n2 = (b * b + d * d).sqrt();
        let scale = n1.max(n2);
        if scale <= EPS_ABS {
            return Err(GeomError::DegenerateScale(scale));
        }
        let tol = EPS_ABS + EPS_REL * scale;
        if (n1 - n2).abs() > tol || (a * b + c * d).abs() > tol * scale {
            return Err(GeomError::NotASimilarity);
        }
        Ok(Transform { m, t })
    }

    pub fn identity() -> Transform {
        Transform {
            m: [1.0, 0.0, 0.0, 1.0],
            t: [0.0, 0.0],
        }
    }

    pub fn translation(dx: f64, dy: f64) -> Transform {
        Transform {
            m: [1.0, 0.0, 0.0, 1.0],
            t: [dx, dy],
        }
    }

    /// Rotation about the origin by `rad` radians, counterclockwise.
    pub fn rotation(rad: f64) -> Transform {
        let (s, c) = rad.sin_cos();
        Transform {
            m: [c, -s, s, c],
            t: [0.0, 0.0],
        }
    }

    /// Uniform scale about the origin.
    pub fn scaling(s: f64) -> Result<Transform, GeomError> {
        Transform::new([s, 0.0, 0.0, s], [0.0, 0.0])
    }

    /// Reflection across the x-axis.
    pub fn reflection_x() -> Transform {
        Transform {
            m: [1.0, 0.0, 0.0, -1.0],
            t: [0.0, 0.0],
        }
    }

    /// `self . inner`: applies `inner` first.
    pub fn compose(&self, inner: &Transform) -> Transform {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = inner.m;
        Transform {
            m: [
                a * e + b * g,
                a * f + b * h,
                c * e + d * g,
                c * f + d * h,
            ],
            t: [
                a * inner.t[0] + b * inner.t[1] + self.t[0],
                c * inner.t[0] + d * inner.t[1] + self.t[1],
            ],
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        let [a, b, c, d] = self.m;
        Point::raw(
            a * p.x + b * p.y + self.t[0],
            c * p.x + d * p.y + self.t[1],
        )
    }

    /// The unique direct similarity (or reflective one, with `reflected`)
    /// mapping `p1 -> q1` and `p2 -> q2`.
    pub fn from_point_pairs(
        p1: Point,
        p2: Point,
        q1: Point,
        q2: Point,
        reflected: bool,
    ) -> Result<Transform, GeomError> {
        // Complex form: z -> az + b, or z -> a conj(z) + b when reflected.
        let dp = p2 - p1;
        let dq = q2 - q1;
        let den = dp.dot(&dp);
        if den.sqrt() <= EPS_ABS {
            return Err(GeomError::DegenerateCorrespondence);
        }
        let (ar, ai) = if reflected {
            // a = (q2 - q1) / conj(p2 - p1)
            (
                (dq.x * dp.x - dq.y * dp.y) / den,
                (dq.y * dp.x + dq.x * dp.y) / den,
            )
        } else {
            // a = (q2 - q1) / (p2 - p1)
            (
                (dq.x * dp.x + dq.y * dp.y) / den,
                (dq.y * dp.x - dq.x * dp.y) / den,
            )
        };
        let scale = ar.hypot(ai);
        if scale <= EPS_ABS {
            return Err(GeomError::DegenerateScale(scale));
        }
        let m = if reflected {
            [ar, ai, ai, -ar]
        } else {
            [ar, -ai, ai, ar]
        };
        let lin = Transform { m, t: [0.0, 0.0] };
        let img = lin.apply(p1);
        Transform::new(m, [q1.x - img.x, q1.y - img.y])
    }

    pub fn scale_factor(&self) -> f64 {
        let [a, _, c, _] = self.m;
        (a * a + c * c).sqrt()
    }

    pub fn is_reflecting(&self) -> bool {
        let [a, b, c, d] = self.m;
        a * d - b * c < 0.0
    }

    /// The six coefficients `[a, b, c, d, tx, ty]`.
    pub fn coefficients(&self) -> [f64; 6] {
        [
            self.m[0], self.m[1], self.m[2], self.m[3], self.t[0], self.t[1],
        ]
    }

    pub fn approx_eq(&self, other: &Transform) -> bool {
        let a = self.coefficients();
        let b = other.coefficients();
        let tol = EPS_ABS + EPS_REL * self.scale_factor().max(other.scale_factor());
        a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= tol)
    }

    /// Quantized encoding used for deterministic ordering of match lists.
    pub fn sort_key(&self) -> [i64; 6] {
        let c = self.coefficients();
        [
            quantize(c[0]),
            quantize(c[1]),
            quantize(c[2]),
            quantize(c[3]),
            quantize(c[4]),
            quantize(c[5]),
        ]
    }
}
