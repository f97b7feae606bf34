//! RCC8 classification over unions of regions.
//!
//! A described shape may split into several minimal cycles; relation checks
//! treat each side as the union of its regions (closure of the union for
//! `Connect`/`Part`, interior of the union for `Overlap`).

use std::f64::consts::TAU;

use crate::geom::{Point, Segment, Shape, EPS_ABS};

use super::arrangement;
use super::poly::{self, locate, point_on_edge, seg_x, SegX, Site};
use super::{Region, RegionRelation};

/// The unique RCC8 relation between two unions of regions.
pub fn classify_union(xs: &[Region], ys: &[Region]) -> RegionRelation {
    if !connect_union(xs, ys) {
        return RegionRelation::Dc;
    }
    if !overlap_union(xs, ys) {
        return RegionRelation::Ec;
    }
    let xy = part_union(xs, ys);
    let yx = part_union(ys, xs);
    match (xy, yx) {
        (true, true) => RegionRelation::Eq,
        (true, false) => {
            if boundaries_touch(xs, ys) {
                RegionRelation::Tpp
            } else {
                RegionRelation::Ntpp
            }
        }
        (false, true) => {
            if boundaries_touch(xs, ys) {
                RegionRelation::Tppi
            } else {
                RegionRelation::Ntppi
            }
        }
        (false, false) => RegionRelation::Po,
    }
}

fn in_closure_any(p: &Point, regs: &[Region]) -> bool {
    regs.iter().any(|r| locate(p, r.vertices()) != Site::Outside)
}

fn strictly_inside_any(p: &Point, regs: &[Region]) -> bool {
    regs.iter().any(|r| locate(p, r.vertices()) == Site::Inside)
}

fn edge_segments(regs: &[Region]) -> Vec<Segment> {
    regs.iter()
        .flat_map(|r| r.edges())
        .map(|(a, b)| Segment::new(a, b).expect("region edges are non-degenerate"))
        .collect()
}

/// Closures intersect: some boundary contact or containment either way.
pub(crate) fn connect_union(xs: &[Region], ys: &[Region]) -> bool {
    let xe = edge_segments(xs);
    let ye = edge_segments(ys);
    for a in &xe {
        for b in &ye {
            if !matches!(seg_x(a, b), SegX::None) {
                return true;
            }
        }
    }
    xs.iter()
        .flat_map(|r| r.vertices())
        .any(|v| in_closure_any(v, ys))
        || ys
            .iter()
            .flat_map(|r| r.vertices())
            .any(|v| in_closure_any(v, xs))
}

/// Interiors share positive area. Witnessed on the overlay arrangement of
/// all boundaries: every overlay face lies wholly inside or outside each
/// input polygon, so testing one interior point per face is exact.
pub(crate) fn overlap_union(xs: &[Region], ys: &[Region]) -> bool {
    let mut segs = edge_segments(xs);
    segs.extend(edge_segments(ys));
    let overlay = Shape::new(segs, Vec::new());
    for walk in arrangement::face_walks(overlay.segments()) {
        for p in arrangement::face_points(&walk) {
            if strictly_inside_any(&p, xs) && strictly_inside_any(&p, ys) {
                return true;
            }
        }
    }
    false
}

/// Closure of the union of `xs` inside the closure of the union of `ys`.
/// Each x-edge is split at every intersection with a y-boundary, after which
/// a sub-edge lies wholly in or out and its midpoint decides.
pub(crate) fn part_union(xs: &[Region], ys: &[Region]) -> bool {
    let ye = edge_segments(ys);
    for x in xs {
        for v in x.vertices() {
            if !in_closure_any(v, ys) {
                return false;
            }
        }
        for (a, b) in x.edges() {
            let edge = Segment::new(a, b).expect("region edges are non-degenerate");
            let dir = b - a;
            let len = dir.norm();
            let mut ts: Vec<f64> = vec![0.0, len];
            for ye in &ye {
                match seg_x(&edge, ye) {
                    SegX::None => {}
                    SegX::At(p) => ts.push((p - a).dot(&dir) / len),
                    SegX::Along(p, q) => {
                        ts.push((p - a).dot(&dir) / len);
                        ts.push((q - a).dot(&dir) / len);
                    }
                }
            }
            ts.sort_by(f64::total_cmp);
            for w in ts.windows(2) {
                if w[1] - w[0] <= EPS_ABS {
                    continue;
                }
                let mid = a + dir * ((w[0] + w[1]) / (2.0 * len));
                if !in_closure_any(&mid, ys) {
                    return false;
                }
            }
        }
    }
    true
}

/// Some point lies on the boundary of both unions. Candidates are all
/// vertices and all pairwise edge intersections; each is checked against
/// the union boundaries (in the closure but not interior to the union).
pub(crate) fn boundaries_touch(xs: &[Region], ys: &[Region]) -> bool {
    let xe = edge_segments(xs);
    let ye = edge_segments(ys);
    let mut candidates: Vec<Point> = xs
        .iter()
        .chain(ys.iter())
        .flat_map(|r| r.vertices().iter().copied())
        .collect();
    let all: Vec<&Segment> = xe.iter().chain(ye.iter()).collect();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            match seg_x(all[i], all[j]) {
                SegX::None => {}
                SegX::At(p) => candidates.push(p),
                SegX::Along(p, q) => {
                    candidates.push(p);
                    candidates.push(q);
                }
            }
        }
    }
    candidates.sort_by(|a, b| a.lex_cmp(b));
    candidates.dedup_by(|a, b| a.coincides(b));

    candidates
        .iter()
        .any(|p| on_union_boundary(p, xs) && on_union_boundary(p, ys))
}

fn on_union_boundary(p: &Point, regs: &[Region]) -> bool {
    in_closure_any(p, regs) && !interior_of_union(p, regs)
}

/// Whether `p` is interior to the union: strictly inside some region, or a
/// boundary point whose neighborhood is covered — decided by merging the
/// angular sectors the incident regions occupy around `p`.
pub(crate) fn interior_of_union(p: &Point, regs: &[Region]) -> bool {
    const ANG_TOL: f64 = 1e-7;
    let mut sectors: Vec<(f64, f64)> = Vec::new();
    for r in regs {
        match locate(p, r.vertices()) {
            Site::Inside => return true,
            Site::Outside => continue,
            Site::Boundary => {}
        }
        let vs = r.vertices();
        let n = vs.len();
        if let Some(i) = (0..n).find(|&i| vs[i].coincides(p)) {
            // Vertex: the interior wedge sweeps counterclockwise from the
            // outgoing edge to the incoming one.
            let to_next = (vs[(i + 1) % n] - vs[i]).angle();
            let to_prev = (vs[(i + n - 1) % n] - vs[i]).angle();
            let sweep = (to_prev - to_next).rem_euclid(TAU);
            sectors.push((to_next, sweep));
        } else if let Some(i) =
            (0..n).find(|&i| point_on_edge(p, &vs[i], &vs[(i + 1) % n]))
        {
            // Interior of an edge: the polygon covers the half-plane on the
            // left of the directed edge.
            let theta = (vs[(i + 1) % n] - vs[i]).angle();
            sectors.push((theta, std::f64::consts::PI));
        }
    }
    if sectors.is_empty() {
        return false;
    }
    // Circle coverage: normalize to [0, TAU), split wrapping sectors.
    let mut spans: Vec<(f64, f64)> = Vec::new();
    for (start, sweep) in sectors {
        if sweep >= TAU - ANG_TOL {
            return true;
        }
        let s = start.rem_euclid(TAU);
        let e = s + sweep;
        if e > TAU {
            spans.push((s, TAU));
            spans.push((0.0, e - TAU));
        } else {
            spans.push((s, e));
        }
    }
    spans.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut reach = 0.0;
    for (s, e) in spans {
        if s > reach + ANG_TOL {
            return false;
        }
        reach = reach.max(e);
    }
    reach >= TAU - ANG_TOL
}

#[allow(dead_code)]
pub(crate) fn area_of(region: &Region) -> f64 {
    poly::signed_area(region.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Region {
        Region::rect(x0, y0, x1, y1).unwrap()
    }

    #[test]
    fn stacked_squares_equal_their_union_rectangle() {
        // Two squares sharing a full edge, against the covering rectangle:
        // the shared edge is interior to the union, so the relation is EQ.
        let xs = vec![rect(0.0, 0.0, 1.0, 1.0), rect(0.0, 1.0, 1.0, 2.0)];
        let ys = vec![rect(0.0, 0.0, 1.0, 2.0)];
        assert_eq!(classify_union(&xs, &ys), RegionRelation::Eq);
    }

    #[test]
    fn interior_of_union_covers_shared_edges() {
        let regs = vec![rect(0.0, 0.0, 1.0, 1.0), rect(0.0, 1.0, 1.0, 2.0)];
        // Midpoint of the shared edge is interior to the union...
        assert!(interior_of_union(&Point::raw(0.5, 1.0), &regs));
        // ...but its endpoints on the outer boundary are not.
        assert!(!interior_of_union(&Point::raw(0.0, 1.0), &regs));
        assert!(!interior_of_union(&Point::raw(1.0, 1.0), &regs));
    }

    #[test]
    fn union_inside_a_larger_square_is_ntpp_despite_internal_edges() {
        let xs = vec![rect(1.0, 1.0, 2.0, 2.0), rect(2.0, 1.0, 3.0, 2.0)];
        let ys = vec![rect(0.0, 0.0, 4.0, 3.0)];
        assert_eq!(classify_union(&xs, &ys), RegionRelation::Ntpp);
    }

    #[test]
    fn corner_attached_union_is_ec_to_a_neighbor() {
        let xs = vec![rect(1.0, 1.0, 2.0, 2.0), rect(2.0, 2.0, 3.0, 3.0)];
        let ys = vec![rect(0.0, 0.0, 1.0, 1.0)];
        assert_eq!(classify_union(&xs, &ys), RegionRelation::Ec);
        assert_eq!(classify_union(&ys, &xs), RegionRelation::Ec);
    }

    #[test]
    fn overlap_requires_positive_area() {
        let a = vec![rect(0.0, 0.0, 1.0, 1.0)];
        let b = vec![rect(1.0, 0.0, 2.0, 1.0)];
        assert!(!overlap_union(&a, &b));
        let c = vec![rect(0.5, 0.0, 1.5, 1.0)];
        assert!(overlap_union(&a, &c));
    }
}
