use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{quantize, round9, Carrier, GeomError, Point, Segment, Transform, EPS_ABS};

/// Endpoint coordinate pairs for [`Shape::from_coords`].
pub type SegmentCoords = ((f64, f64), (f64, f64));

/// A labelled registration point, e.g. the mark `dot`.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelledPoint {
    at: Point,
    label: String,
}

impl LabelledPoint {
    pub fn new(at: Point, label: impl Into<String>) -> Result<LabelledPoint, GeomError> {
        let label = label.into();
        if label.is_empty() {
            return Err(GeomError::EmptyLabel);
        }
        if label.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(GeomError::BadLabel(label));
        }
        if !at.x.is_finite() || !at.y.is_finite() {
            return Err(GeomError::NonFiniteCoordinate);
        }
        Ok(LabelledPoint { at, label })
    }

    pub fn at(&self) -> Point {
        self.at
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coincides(&self, other: &LabelledPoint) -> bool {
        self.label == other.label && self.at.coincides(&other.at)
    }
}

/// A shape: a canonical set of maximal line segments plus labelled points.
///
/// Canonical form merges collinear segments that overlap or abut, so any two
/// segment multisets covering the same point set construct equal shapes. The
/// empty shape is a valid value and the identity of `sum`.
#[derive(Debug, Clone, Default)]
pub struct Shape {
    segments: Vec<Segment>,
    labels: Vec<LabelledPoint>,
}

impl Shape {
    pub fn empty() -> Shape {
        Shape::default()
    }

    /// Canonicalizes the given parts into maximal form; duplicate labels
    /// collapse.
    pub fn new(segments: Vec<Segment>, labels: Vec<LabelledPoint>) -> Shape {
        let mut shape = Shape {
            segments: merge_maximal(&segments),
            labels: dedup_labels(labels),
        };
        shape
            .segments
            .sort_by(|a, b| a.lex_cmp(b));
        shape
    }

    /// Convenience constructor from coordinate pairs.
    pub fn from_coords(coords: &[SegmentCoords]) -> Result<Shape, GeomError> {
        let mut segs = Vec::with_capacity(coords.len());
        for &((x1, y1), (x2, y2)) in coords {
            segs.push(Segment::from_coords(x1, y1, x2, y2)?);
        }
        Ok(Shape::new(segs, Vec::new()))
    }

    pub fn with_label(mut self, x: f64, y: f64, label: &str) -> Result<Shape, GeomError> {
        let lp = LabelledPoint::new(Point::new(x, y)?, label)?;
        let mut labels = std::mem::take(&mut self.labels);
        labels.push(lp);
        Ok(Shape {
            segments: self.segments,
            labels: dedup_labels(labels),
        })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn labels(&self) -> &[LabelledPoint] {
        &self.labels
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty() && self.labels.is_empty()
    }

    /// Point-set union, re-canonicalized; labels are set-union.
    pub fn sum(&self, other: &Shape) -> Shape {
        let mut segs = self.segments.clone();
        segs.extend_from_slice(&other.segments);
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Shape::new(segs, labels)
    }

    /// The common linear part. Crossing points do not produce segments;
    /// labels intersect.
    pub fn product(&self, other: &Shape) -> Shape {
        let mut segs = Vec::new();
        for sa in &self.segments {
            let ca = sa.carrier();
            let (a0, a1) = ordered_params(&ca, sa);
            for sb in &other.segments {
                if !ca.same_line(&sb.carrier()) {
                    continue;
                }
                let tb0 = ca.param(&sb.p());
                let tb1 = ca.param(&sb.q());
                let (b0, b1) = if tb0 <= tb1 { (tb0, tb1) } else { (tb1, tb0) };
                let lo = a0.max(b0);
                let hi = a1.min(b1);
                if hi - lo > EPS_ABS {
                    segs.push(
                        Segment::new(pick_point(&ca, lo, sa, sb), pick_point(&ca, hi, sa, sb))
                            .expect("overlap longer than tolerance"),
                    );
                }
            }
        }
        let labels = self
            .labels
            .iter()
            .filter(|l| other.labels.iter().any(|m| m.coincides(l)))
            .cloned()
            .collect();
        Shape::new(segs, labels)
    }

    /// Relative complement of the linear parts; removing an interior
    /// interval splits a maximal segment in two. Labels: set difference.
    pub fn difference(&self, other: &Shape) -> Shape {
        let mut segs = Vec::new();
        for sa in &self.segments {
            let ca = sa.carrier();
            let tp = ca.param(&sa.p());
            let tq = ca.param(&sa.q());
            let (a0, a1, first_pt, last_pt) = if tp <= tq {
                (tp, tq, sa.p(), sa.q())
            } else {
                (tq, tp, sa.q(), sa.p())
            };
            let mut cuts: Vec<(f64, f64)> = Vec::new();
            for sb in &other.segments {
                if !ca.same_line(&sb.carrier()) {
                    continue;
                }
                let tb0 = ca.param(&sb.p());
                let tb1 = ca.param(&sb.q());
                let (b0, b1) = if tb0 <= tb1 { (tb0, tb1) } else { (tb1, tb0) };
                let lo = a0.max(b0);
                let hi = a1.min(b1);
                if hi - lo > EPS_ABS {
                    cuts.push((lo, hi));
                }
            }
            cuts.sort_by(|x, y| x.0.total_cmp(&y.0));
            let mut pos = a0;
            let mut pos_pt = first_pt;
            for (lo, hi) in cuts {
                if lo - pos > EPS_ABS {
                    segs.push(
                        Segment::new(pos_pt, ca.at(lo)).expect("gap longer than tolerance"),
                    );
                }
                if hi > pos {
                    pos = hi;
                    pos_pt = ca.at(hi);
                }
            }
            if a1 - pos > EPS_ABS {
                segs.push(Segment::new(pos_pt, last_pt).expect("gap longer than tolerance"));
            }
        }
        let labels = self
            .labels
            .iter()
            .filter(|l| !other.labels.iter().any(|m| m.coincides(l)))
            .cloned()
            .collect();
        Shape::new(segs, labels)
    }

    /// True iff every segment of `self` is covered by segments of `other`
    /// and every label of `self` appears in `other`. The empty shape is a
    /// subshape of everything.
    pub fn subshape_of(&self, other: &Shape) -> bool {
        for label in &self.labels {
            if !other.labels.iter().any(|m| m.coincides(label)) {
                return false;
            }
        }
        for sa in &self.segments {
            let ca = sa.carrier();
            let (a0, a1) = ordered_params(&ca, sa);
            // `other` is canonical, so at most one of its maximal segments
            // can cover this one.
            let covered = other.segments.iter().any(|sb| {
                if !ca.same_line(&sb.carrier()) {
                    return false;
                }
                let tb0 = ca.param(&sb.p());
                let tb1 = ca.param(&sb.q());
                let (b0, b1) = if tb0 <= tb1 { (tb0, tb1) } else { (tb1, tb0) };
                b0 <= a0 + EPS_ABS && b1 >= a1 - EPS_ABS
            });
            if !covered {
                return false;
            }
        }
        true
    }

    /// Canonical-form equality within tolerance, segment-for-segment and
    /// label-for-label.
    pub fn equal(&self, other: &Shape) -> bool {
        if self.segments.len() != other.segments.len() || self.labels.len() != other.labels.len()
        {
            return false;
        }
        let mut used = vec![false; other.segments.len()];
        for sa in &self.segments {
            let found = other.segments.iter().enumerate().find_map(|(i, sb)| {
                (!used[i] && sa.coincides(sb)).then_some(i)
            });
            match found {
                Some(i) => used[i] = true,
                None => return false,
            }
        }
        let mut used = vec![false; other.labels.len()];
        for la in &self.labels {
            let found = other.labels.iter().enumerate().find_map(|(i, lb)| {
                (!used[i] && la.coincides(lb)).then_some(i)
            });
            match found {
                Some(i) => used[i] = true,
                None => return false,
            }
        }
        true
    }

    /// Maps every segment endpoint and labelled point, then
    /// re-canonicalizes.
    pub fn transform(&self, t: &Transform) -> Shape {
        let segs = self
            .segments
            .iter()
            .map(|s| {
                Segment::new(t.apply(s.p()), t.apply(s.q()))
                    .expect("similarity preserves non-degeneracy")
            })
            .collect();
        let labels = self
            .labels
            .iter()
            .map(|l| LabelledPoint {
                at: t.apply(l.at),
                label: l.label.clone(),
            })
            .collect();
        Shape::new(segs, labels)
    }

    /// Bounding box over segment endpoints and labelled points.
    pub fn bounds(&self) -> Option<(Point, Point)> {
        let mut pts = self
            .segments
            .iter()
            .flat_map(|s| [s.p(), s.q()])
            .chain(self.labels.iter().map(|l| l.at));
        let first = pts.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in pts {
            lo = Point::raw(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::raw(hi.x.max(p.x), hi.y.max(p.y));
        }
        Some((lo, hi))
    }

    /// Quantized canonical key; equal shapes built from identical inputs
    /// share it.
    pub fn canonical_key(&self) -> Vec<i64> {
        let mut key = Vec::with_capacity(self.segments.len() * 4 + self.labels.len() * 2);
        for s in &self.segments {
            key.extend([
                quantize(s.p().x),
                quantize(s.p().y),
                quantize(s.q().x),
                quantize(s.q().y),
            ]);
        }
        for l in &self.labels {
            key.extend([quantize(l.at.x), quantize(l.at.y)]);
        }
        key
    }

    pub fn to_doc(&self) -> ShapeDoc {
        ShapeDoc {
            segments: self
                .segments
                .iter()
                .map(|s| {
                    [
                        [round9(s.p().x), round9(s.p().y)],
                        [round9(s.q().x), round9(s.q().y)],
                    ]
                })
                .collect(),
            labels: self
                .labels
                .iter()
                .map(|l| LabelDoc {
                    point: [round9(l.at.x), round9(l.at.y)],
                    label: l.label.clone(),
                })
                .collect(),
        }
    }

    /// Canonical serialization: coordinates rounded to 9 decimal places,
    /// segments in canonical order.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("shape doc serializes")
    }

    pub fn from_doc(doc: &ShapeDoc) -> Result<Shape, GeomError> {
        let mut segs = Vec::with_capacity(doc.segments.len());
        for [[x1, y1], [x2, y2]] in &doc.segments {
            segs.push(Segment::from_coords(*x1, *y1, *x2, *y2)?);
        }
        let mut labels = Vec::with_capacity(doc.labels.len());
        for l in &doc.labels {
            labels.push(LabelledPoint::new(
                Point::new(l.point[0], l.point[1])?,
                l.label.clone(),
            )?);
        }
        Ok(Shape::new(segs, labels))
    }

    pub fn from_json_str(json: &str) -> Result<Shape, crate::Error> {
        let doc: ShapeDoc = serde_json::from_str(json)?;
        Ok(Shape::from_doc(&doc)?)
    }
}

/// On-disk form of a shape: `{"segments": [[[x1,y1],[x2,y2]], ...],
/// "labels": [{"point": [x,y], "label": "dot"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShapeDoc {
    pub segments: Vec<[[f64; 2]; 2]>,
    #[serde(default)]
    pub labels: Vec<LabelDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelDoc {
    pub point: [f64; 2],
    pub label: String,
}

fn ordered_params(c: &Carrier, s: &Segment) -> (f64, f64) {
    let t0 = c.param(&s.p());
    let t1 = c.param(&s.q());
    if t0 <= t1 {
        (t0, t1)
    } else {
        (t1, t0)
    }
}

// Prefers an actual input endpoint at parameter `t` over a recomputed point,
// so canonicalization reuses exact coordinates.
fn pick_point(c: &Carrier, t: f64, sa: &Segment, sb: &Segment) -> Point {
    for p in [sa.p(), sa.q(), sb.p(), sb.q()] {
        if (c.param(&p) - t).abs() <= EPS_ABS && c.dist_to(&p) <= EPS_ABS {
            return p;
        }
    }
    c.at(t)
}

/// Merges collinear overlapping or abutting segments into maximal ones.
fn merge_maximal(segments: &[Segment]) -> Vec<Segment> {
    let n = segments.len();
    // Union-find over carrier-equal segments.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let carriers: Vec<Carrier> = segments.iter().map(|s| s.carrier()).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if carriers[i].same_line(&carriers[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }

    let mut out = Vec::new();
    for (_, members) in groups {
        let c = carriers[members[0]];
        // (t_lo, t_hi, point_lo, point_hi) per member, sorted by t_lo.
        let mut items: Vec<(f64, f64, Point, Point)> = members
            .iter()
            .map(|&i| {
                let s = &segments[i];
                let t0 = c.param(&s.p());
                let t1 = c.param(&s.q());
                if t0 <= t1 {
                    (t0, t1, s.p(), s.q())
                } else {
                    (t1, t0, s.q(), s.p())
                }
            })
            .collect();
        items.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let mut iter = items.into_iter();
        let (mut lo, mut hi, mut plo, mut phi) = iter.next().expect("non-empty group");
        for (a, b, pa, pb) in iter {
            if a <= hi + EPS_ABS {
                if b > hi {
                    hi = b;
                    phi = pb;
                }
            } else {
                out.push(Segment::new(plo, phi).expect("maximal piece is non-degenerate"));
                (lo, hi, plo, phi) = (a, b, pa, pb);
            }
        }
        let _ = lo;
        out.push(Segment::new(plo, phi).expect("maximal piece is non-degenerate"));
    }
    out
}

fn dedup_labels(mut labels: Vec<LabelledPoint>) -> Vec<LabelledPoint> {
    labels.sort_by(|a, b| {
        a.label
            .cmp(&b.label)
            .then_with(|| a.at.lex_cmp(&b.at))
    });
    let mut out: Vec<LabelledPoint> = Vec::with_capacity(labels.len());
    for l in labels {
        if !out.iter().any(|m| m.coincides(&l)) {
            out.push(l);
        }
    }
    out.sort_by(|a, b| match a.at.lex_cmp(&b.at) {
        Ordering::Equal => a.label.cmp(&b.label),
        ord => ord,
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(x1: f64, y1: f64, x2: f64, y2: f64) -> Segment {
        Segment::from_coords(x1, y1, x2, y2).unwrap()
    }

    fn shape(coords: &[((f64, f64), (f64, f64))]) -> Shape {
        Shape::from_coords(coords).unwrap()
    }

    fn unit_square() -> Shape {
        shape(&[
            ((0.0, 0.0), (1.0, 0.0)),
            ((1.0, 0.0), (1.0, 1.0)),
            ((1.0, 1.0), (0.0, 1.0)),
            ((0.0, 1.0), (0.0, 0.0)),
        ])
    }

    #[test]
    fn collinear_abutting_segments_merge() {
        let s = Shape::new(vec![seg(0.0, 0.0, 1.0, 0.0), seg(1.0, 0.0, 2.0, 0.0)], vec![]);
        assert_eq!(s.segments().len(), 1);
        assert!(s.segments()[0].coincides(&seg(0.0, 0.0, 2.0, 0.0)));
    }

    #[test]
    fn collinear_overlapping_segments_merge() {
        let s = Shape::new(vec![seg(0.0, 0.0, 2.0, 0.0), seg(1.0, 0.0, 3.0, 0.0)], vec![]);
        assert_eq!(s.segments().len(), 1);
        assert!(s.segments()[0].coincides(&seg(0.0, 0.0, 3.0, 0.0)));
    }

    #[test]
    fn parallel_non_collinear_segments_stay() {
        let s = Shape::new(vec![seg(0.0, 0.0, 1.0, 0.0), seg(0.0, 1.0, 1.0, 1.0)], vec![]);
        assert_eq!(s.segments().len(), 2);
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let s = shape(&[((0.0, 0.0), (1.0, 1.0)), ((1.0, 1.0), (3.0, 3.0))]);
        let again = Shape::new(s.segments().to_vec(), s.labels().to_vec());
        assert!(s.equal(&again));
        assert_eq!(s.segments().len(), 1);
    }

    #[test]
    fn canonical_form_ignores_splitting_and_order() {
        let a = shape(&[((0.0, 0.0), (3.0, 0.0))]);
        let b = shape(&[
            ((1.7, 0.0), (3.0, 0.0)),
            ((0.0, 0.0), (0.4, 0.0)),
            ((0.4, 0.0), (1.7, 0.0)),
        ]);
        assert!(a.equal(&b));
    }

    #[test]
    fn duplicate_labels_collapse() {
        let s = Shape::empty()
            .with_label(0.0, 0.0, "dot")
            .unwrap()
            .with_label(0.0, 0.0, "dot")
            .unwrap();
        assert_eq!(s.labels().len(), 1);
    }

    #[test]
    fn sum_identity_and_idempotence() {
        let a = unit_square();
        assert!(a.sum(&Shape::empty()).equal(&a));
        assert!(a.sum(&a).equal(&a));
    }

    #[test]
    fn sum_merges_collinear_overlap() {
        let a = shape(&[((0.0, 0.0), (2.0, 0.0))]);
        let b = shape(&[((1.0, 0.0), (3.0, 0.0))]);
        let c = a.sum(&b);
        assert_eq!(c.segments().len(), 1);
        assert!(c.segments()[0].coincides(&seg(0.0, 0.0, 3.0, 0.0)));
    }

    #[test]
    fn product_is_interval_intersection() {
        let a = shape(&[((0.0, 0.0), (2.0, 0.0))]);
        let b = shape(&[((1.0, 0.0), (3.0, 0.0))]);
        let c = a.product(&b);
        assert_eq!(c.segments().len(), 1);
        assert!(c.segments()[0].coincides(&seg(1.0, 0.0, 2.0, 0.0)));
    }

    #[test]
    fn crossing_segments_have_empty_product() {
        let a = shape(&[((0.0, 0.0), (2.0, 0.0))]);
        let b = shape(&[((1.0, -1.0), (1.0, 1.0))]);
        assert!(a.product(&b).is_empty());
    }

    #[test]
    fn product_idempotence() {
        let a = unit_square();
        assert!(a.product(&a).equal(&a));
    }

    #[test]
    fn difference_with_self_is_empty() {
        let a = unit_square();
        assert!(a.difference(&a).is_empty());
    }

    #[test]
    fn difference_splits_interior_interval() {
        let a = shape(&[((0.0, 0.0), (3.0, 0.0))]);
        let b = shape(&[((1.0, 0.0), (2.0, 0.0))]);
        let c = a.difference(&b);
        assert_eq!(c.segments().len(), 2);
        assert!(c.segments()[0].coincides(&seg(0.0, 0.0, 1.0, 0.0)));
        assert!(c.segments()[1].coincides(&seg(2.0, 0.0, 3.0, 0.0)));
    }

    #[test]
    fn difference_with_empty_is_identity() {
        let a = unit_square();
        assert!(a.difference(&Shape::empty()).equal(&a));
    }

    #[test]
    fn subshape_examples() {
        let a = unit_square();
        assert!(a.subshape_of(&a));
        assert!(Shape::empty().subshape_of(&a));
        let sub = shape(&[((0.5, 0.0), (1.5, 0.0))]);
        let whole = shape(&[((0.0, 0.0), (2.0, 0.0))]);
        assert!(sub.subshape_of(&whole));
        assert!(!whole.subshape_of(&sub));
    }

    #[test]
    fn labels_gate_subshape() {
        let plain = unit_square();
        let marked = unit_square().with_label(1.0, 1.0, "dot").unwrap();
        assert!(plain.subshape_of(&marked));
        assert!(!marked.subshape_of(&plain));
    }

    #[test]
    fn transform_examples() {
        let a = unit_square();
        assert!(a.transform(&Transform::identity()).equal(&a));
        let moved = a.transform(&Transform::translation(1.0, 0.0));
        let expected = shape(&[
            ((1.0, 0.0), (2.0, 0.0)),
            ((2.0, 0.0), (2.0, 1.0)),
            ((2.0, 1.0), (1.0, 1.0)),
            ((1.0, 1.0), (1.0, 0.0)),
        ]);
        assert!(moved.equal(&expected));
        let doubled = a.transform(&Transform::scaling(2.0).unwrap());
        let expected = shape(&[
            ((0.0, 0.0), (2.0, 0.0)),
            ((2.0, 0.0), (2.0, 2.0)),
            ((2.0, 2.0), (0.0, 2.0)),
            ((0.0, 2.0), (0.0, 0.0)),
        ]);
        assert!(doubled.equal(&expected));
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let s = unit_square().with_label(1.0, 1.0, "dot").unwrap();
        let json = s.to_json_string();
        let back = Shape::from_json_str(&json).unwrap();
        assert!(s.equal(&back));
        assert_eq!(json, back.to_json_string());
    }

    #[test]
    fn json_load_canonicalizes() {
        let json = r#"{"segments": [[[0,0],[1,0]], [[1,0],[2,0]]], "labels": []}"#;
        let s = Shape::from_json_str(json).unwrap();
        assert_eq!(s.segments().len(), 1);
    }
}
