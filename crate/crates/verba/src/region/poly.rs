//! Point/polygon predicates shared by the arrangement and the classifier.

use crate::geom::{Point, Segment, EPS_ABS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Site {
    Inside,
    Boundary,
    Outside,
}

/// Shoelace area; positive for counterclockwise vertex order.
pub(crate) fn signed_area(poly: &[Point]) -> f64 {
    let n = poly.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        acc += a.x * b.y - a.y * b.x;
    }
    acc / 2.0
}

pub(crate) fn point_on_edge(p: &Point, a: &Point, b: &Point) -> bool {
    let d = *b - *a;
    let len = d.norm();
    let v = *p - *a;
    let t = v.dot(&d) / len;
    if t < -EPS_ABS || t > len + EPS_ABS {
        return false;
    }
    (v.cross(&d) / len).abs() <= EPS_ABS
}

/// Classifies a point against a simple polygon. The boundary test is
/// tolerance-based; the parity test underneath uses exact comparisons with a
/// half-open edge rule, which is safe once boundary proximity is excluded.
pub(crate) fn locate(p: &Point, poly: &[Point]) -> Site {
    let n = poly.len();
    for i in 0..n {
        if point_on_edge(p, &poly[i], &poly[(i + 1) % n]) {
            return Site::Boundary;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a.y <= p.y) != (b.y <= p.y) {
            let x_hit = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if x_hit > p.x {
                inside = !inside;
            }
        }
    }
    if inside {
        Site::Inside
    } else {
        Site::Outside
    }
}

/// No two non-adjacent edges intersect; adjacent edges meet only at their
/// shared vertex.
pub(crate) fn is_simple(poly: &[Point]) -> bool {
    let n = poly.len();
    let edge = |i: usize| {
        Segment::new(poly[i], poly[(i + 1) % n]).ok()
    };
    for i in 0..n {
        let Some(si) = edge(i) else { return false };
        for j in (i + 1)..n {
            let Some(sj) = edge(j) else { return false };
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            match seg_x(&si, &sj) {
                SegX::None => {}
                SegX::At(p) => {
                    if !adjacent {
                        return false;
                    }
                    let shared = if j == i + 1 { poly[j] } else { poly[0] };
                    if !p.coincides(&shared) {
                        return false;
                    }
                }
                SegX::Along(..) => return false,
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum SegX {
    None,
    /// A single shared point (crossing, T-junction, or endpoint touch).
    At(Point),
    /// A collinear overlap of positive length.
    Along(Point, Point),
}

/// Segment/segment intersection with closed endpoints and tolerance.
pub(crate) fn seg_x(a: &Segment, b: &Segment) -> SegX {
    let ca = a.carrier();
    let cb = b.carrier();
    if ca.same_line(&cb) {
        let (a0, a1) = ordered(ca.param(&a.p()), ca.param(&a.q()));
        let (b0, b1) = ordered(ca.param(&b.p()), ca.param(&b.q()));
        let lo = a0.max(b0);
        let hi = a1.min(b1);
        if hi - lo > EPS_ABS {
            return SegX::Along(ca.at(lo), ca.at(hi));
        }
        if hi - lo >= -EPS_ABS {
            return SegX::At(ca.at((lo + hi) / 2.0));
        }
        return SegX::None;
    }
    match ca.intersect(&cb) {
        Some(p) if a.contains_point(&p) && b.contains_point(&p) => SegX::At(p),
        _ => SegX::None,
    }
}

fn ordered(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
