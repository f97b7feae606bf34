//! Planar arrangement of segments and face extraction.
//!
//! Segments are split at every pairwise intersection, dangling edges are
//! pruned, and faces are traced with the usual angular-sweep half-edge walk
//! (interiors kept to the left). A walk that pinches through a cut vertex is
//! decomposed into simple loops; loops with positive signed area are the
//! bounded faces' outer boundaries, negative ones their holes.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::geom::{quantize, Point, Segment, EPS_ABS};

use super::poly::{self, Site};

pub(crate) struct Loop {
    pub vertices: Vec<Point>,
    pub signed_area: f64,
}

/// One face walk: a closed half-edge cycle split into simple loops.
pub(crate) struct FaceWalk {
    pub loops: Vec<Loop>,
}

struct Graph {
    verts: Vec<Point>,
    adj: Vec<Vec<usize>>,
}

fn intern(verts: &mut Vec<Point>, p: Point) -> usize {
    for (i, q) in verts.iter().enumerate() {
        if q.coincides(&p) {
            return i;
        }
    }
    verts.push(p);
    verts.len() - 1
}

fn planarize(segments: &[Segment]) -> Graph {
    let mut verts: Vec<Point> = Vec::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

    for (i, s) in segments.iter().enumerate() {
        let c = s.carrier();
        let mut cuts: Vec<(f64, Point)> = vec![(c.param(&s.p()), s.p()), (c.param(&s.q()), s.q())];
        for (j, other) in segments.iter().enumerate() {
            if i == j || c.same_line(&other.carrier()) {
                continue;
            }
            if let Some(p) = c.intersect(&other.carrier()) {
                if s.contains_point(&p) && other.contains_point(&p) {
                    cuts.push((c.param(&p), p));
                }
            }
        }
        cuts.sort_by(|a, b| a.0.total_cmp(&b.0));
        cuts.dedup_by(|a, b| (a.0 - b.0).abs() <= EPS_ABS);
        for w in cuts.windows(2) {
            let u = intern(&mut verts, w[0].1);
            let v = intern(&mut verts, w[1].1);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    Graph { verts, adj }
}

/// Iteratively drops vertices of degree < 2 (isolated points and antennae
/// cannot bound a face).
fn prune(graph: &mut Graph) {
    loop {
        let mut changed = false;
        for u in 0..graph.adj.len() {
            if graph.adj[u].len() == 1 {
                let v = graph.adj[u][0];
                graph.adj[u].clear();
                graph.adj[v].retain(|&w| w != u);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

pub(crate) fn face_walks(segments: &[Segment]) -> Vec<FaceWalk> {
    let mut graph = planarize(segments);
    prune(&mut graph);

    // Outgoing edges sorted by angle, counterclockwise.
    let verts = &graph.verts;
    let mut position: HashMap<(usize, usize), usize> = HashMap::new();
    for (u, nbrs) in graph.adj.iter_mut().enumerate() {
        nbrs.sort_by(|&a, &b| {
            let ta = (verts[a] - verts[u]).angle();
            let tb = (verts[b] - verts[u]).angle();
            ta.total_cmp(&tb)
        });
        for (k, &v) in nbrs.iter().enumerate() {
            position.insert((u, v), k);
        }
    }

    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    let mut walks = Vec::new();
    for u0 in 0..graph.adj.len() {
        for &v0 in &graph.adj[u0] {
            if visited.contains(&(u0, v0)) {
                continue;
            }
            // Trace the face to the left of (u0 -> v0): at each vertex take
            // the next edge clockwise from the reversed incoming edge.
            let mut cycle: Vec<usize> = Vec::new();
            let (mut u, mut v) = (u0, v0);
            loop {
                visited.insert((u, v));
                cycle.push(u);
                let back = position[&(v, u)];
                let k = graph.adj[v].len();
                let next = graph.adj[v][(back + k - 1) % k];
                u = v;
                v = next;
                if (u, v) == (u0, v0) {
                    break;
                }
            }
            walks.push(split_walk(&cycle, verts));
        }
    }
    walks
}

/// Splits a closed vertex walk into simple loops at repeated vertices.
fn split_walk(cycle: &[usize], verts: &[Point]) -> FaceWalk {
    let mut loops = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut when: HashMap<usize, usize> = HashMap::new();
    let mut emit = |ids: &[usize]| {
        if ids.len() >= 3 {
            let vertices: Vec<Point> = ids.iter().map(|&i| verts[i]).collect();
            let signed_area = poly::signed_area(&vertices);
            loops.push(Loop {
                vertices,
                signed_area,
            });
        }
    };
    for &vid in cycle {
        if let Some(&sp) = when.get(&vid) {
            emit(&stack[sp..]);
            for &dead in &stack[sp..] {
                when.remove(&dead);
            }
            stack.truncate(sp);
        }
        when.insert(vid, stack.len());
        stack.push(vid);
    }
    emit(&stack);
    FaceWalk { loops }
}

fn loop_key(vertices: &[Point]) -> Vec<(i64, i64)> {
    vertices
        .iter()
        .map(|p| (quantize(p.x), quantize(p.y)))
        .collect()
}

/// Rotate a loop to start at its lexicographically smallest vertex.
fn canonical_rotation(mut vertices: Vec<Point>) -> Vec<Point> {
    let start = vertices
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.lex_cmp(b))
        .map(|(i, _)| i)
        .unwrap_or(0);
    vertices.rotate_left(start);
    vertices
}

/// The minimal closed cycles of the segment set: every positive-area simple
/// loop of the face walks, canonicalized, deduplicated, and sorted.
pub(crate) fn bounded_loops(segments: &[Segment]) -> Vec<Vec<Point>> {
    let mut out: Vec<Vec<Point>> = Vec::new();
    let mut seen: BTreeSet<Vec<(i64, i64)>> = BTreeSet::new();
    for walk in face_walks(segments) {
        for l in walk.loops {
            if l.signed_area <= EPS_ABS {
                continue;
            }
            let vs = canonical_rotation(l.vertices);
            if seen.insert(loop_key(&vs)) {
                out.push(vs);
            }
        }
    }
    out.sort_by_key(|vs| loop_key(vs));
    out
}

/// One interior point per positive loop of the walk, avoiding the walk's
/// holes: scan horizontal bands between vertex levels and test span
/// midpoints.
pub(crate) fn face_points(walk: &FaceWalk) -> Vec<Point> {
    let negatives: Vec<&Loop> = walk
        .loops
        .iter()
        .filter(|l| l.signed_area < -EPS_ABS)
        .collect();
    let mut points = Vec::new();
    for outer in walk.loops.iter().filter(|l| l.signed_area > EPS_ABS) {
        let mut ys: Vec<f64> = outer
            .vertices
            .iter()
            .chain(negatives.iter().flat_map(|l| l.vertices.iter()))
            .map(|p| p.y)
            .collect();
        ys.sort_by(f64::total_cmp);
        ys.dedup_by(|a, b| (*a - *b).abs() <= EPS_ABS);
        'bands: for w in ys.windows(2) {
            let y = (w[0] + w[1]) / 2.0;
            let mut xs: Vec<f64> = Vec::new();
            let mut collect = |l: &Loop| {
                let n = l.vertices.len();
                for i in 0..n {
                    let a = l.vertices[i];
                    let b = l.vertices[(i + 1) % n];
                    if (a.y <= y) != (b.y <= y) {
                        xs.push(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
                    }
                }
            };
            collect(outer);
            for neg in &negatives {
                collect(neg);
            }
            xs.sort_by(f64::total_cmp);
            for pair in xs.windows(2) {
                let candidate = Point::raw((pair[0] + pair[1]) / 2.0, y);
                if poly::locate(&candidate, &outer.vertices) == Site::Inside
                    && negatives
                        .iter()
                        .all(|neg| poly::locate(&candidate, &neg.vertices) == Site::Outside)
                {
                    points.push(candidate);
                    break 'bands;
                }
            }
        }
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Shape;

    fn square_segments(x: f64, y: f64, side: f64) -> Shape {
        Shape::from_coords(&[
            ((x, y), (x + side, y)),
            ((x + side, y), (x + side, y + side)),
            ((x + side, y + side), (x, y + side)),
            ((x, y + side), (x, y)),
        ])
        .unwrap()
    }

    #[test]
    fn square_has_one_bounded_loop() {
        let s = square_segments(0.0, 0.0, 1.0);
        let loops = bounded_loops(s.segments());
        assert_eq!(loops.len(), 1);
        assert!((poly::signed_area(&loops[0]) - 1.0).abs() < 1e-9);
        // Canonical start at the smallest vertex.
        assert!(loops[0][0].coincides(&Point::raw(0.0, 0.0)));
    }

    // A tilted quad inside a large square, touching it at exactly one
    // vertex: the face between them pinches at (0, 0) and must split.
    fn pinched_shape() -> Shape {
        square_segments(0.0, 0.0, 4.0).sum(
            &Shape::from_coords(&[
                ((0.0, 0.0), (2.0, 1.0)),
                ((2.0, 1.0), (3.0, 3.0)),
                ((3.0, 3.0), (1.0, 2.0)),
                ((1.0, 2.0), (0.0, 0.0)),
            ])
            .unwrap(),
        )
    }

    #[test]
    fn pinched_interior_quad_splits_into_two_loops() {
        let loops = bounded_loops(pinched_shape().segments());
        assert_eq!(loops.len(), 2);
        let mut areas: Vec<f64> = loops.iter().map(|l| poly::signed_area(l)).collect();
        areas.sort_by(f64::total_cmp);
        assert!((areas[0] - 3.0).abs() < 1e-9);
        assert!((areas[1] - 16.0).abs() < 1e-9);
    }

    #[test]
    fn face_points_avoid_holes() {
        let s = pinched_shape();
        let mut count = 0;
        for walk in face_walks(s.segments()) {
            for p in face_points(&walk) {
                count += 1;
                let outers: Vec<&Loop> = walk
                    .loops
                    .iter()
                    .filter(|l| l.signed_area > EPS_ABS)
                    .collect();
                assert!(outers
                    .iter()
                    .any(|l| poly::locate(&p, &l.vertices) == Site::Inside));
                let holes: Vec<&Loop> = walk
                    .loops
                    .iter()
                    .filter(|l| l.signed_area < -EPS_ABS)
                    .collect();
                assert!(holes
                    .iter()
                    .all(|l| poly::locate(&p, &l.vertices) == Site::Outside));
            }
        }
        assert!(count >= 2);
    }
}
