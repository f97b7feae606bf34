use super::{Carrier, GeomError, Point, Shape, Transform};

/// Options for subshape matching.
#[derive(Debug, Clone, Copy)]
pub struct MatchOptions {
    /// Include reflective similarities. On by default.
    pub allow_reflection: bool,
}

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions {
            allow_reflection: true,
        }
    }
}

/// The distinguished points of a shape: every point where two non-parallel
/// carriers of the shape meet. Unlike segment endpoints, these survive
/// embedding — an embedded segment may end strictly inside a longer maximal
/// segment, but carrier intersections map to carrier intersections.
pub fn distinguished_points(shape: &Shape) -> Vec<Point> {
    let mut carriers: Vec<Carrier> = Vec::new();
    for s in shape.segments() {
        let c = s.carrier();
        if !carriers.iter().any(|k| k.same_line(&c)) {
            carriers.push(c);
        }
    }
    let mut points: Vec<Point> = Vec::new();
    for i in 0..carriers.len() {
        for j in (i + 1)..carriers.len() {
            if let Some(p) = carriers[i].intersect(&carriers[j]) {
                if !points.iter().any(|q| q.coincides(&p)) {
                    points.push(p);
                }
            }
        }
    }
    points.sort_by(|a, b| a.lex_cmp(b));
    points
}

/// Every similarity `t` (deduplicated within tolerance) with `t(pattern)` a
/// subshape of `target`, label correspondence included, in a deterministic
/// order sorted by the transform's canonical encoding.
///
/// Candidates come from mapping a fixed pair of the pattern's distinguished
/// points onto every ordered pair of the target's distinguished points; each
/// candidate is verified by the subshape test. A pattern with fewer than two
/// distinguished points admits an infinite transform family (free
/// translation along a line, or free scaling about a single crossing) and is
/// rejected as underdetermined.
pub fn find_matches(
    pattern: &Shape,
    target: &Shape,
    opts: MatchOptions,
) -> Result<Vec<Transform>, GeomError> {
    let base = distinguished_points(pattern);
    if base.len() < 2 {
        return Err(GeomError::UnderdeterminedMatch);
    }
    let anchors = distinguished_points(target);
    let (b1, b2) = (base[0], base[1]);

    let mut found: Vec<Transform> = Vec::new();
    for (i, &q1) in anchors.iter().enumerate() {
        for (j, &q2) in anchors.iter().enumerate() {
            if i == j {
                continue;
            }
            let variants: &[bool] = if opts.allow_reflection {
                &[false, true]
            } else {
                &[false]
            };
            for &reflected in variants {
                let Ok(t) = Transform::from_point_pairs(b1, b2, q1, q2, reflected) else {
                    continue;
                };
                if pattern.transform(&t).subshape_of(target) {
                    found.push(t);
                }
            }
        }
    }

    found.sort_by_key(|a| a.sort_key());
    found.dedup_by(|a, b| a.approx_eq(b));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Segment;

    fn unit_square() -> Shape {
        Shape::from_coords(&[
            ((0.0, 0.0), (1.0, 0.0)),
            ((1.0, 0.0), (1.0, 1.0)),
            ((1.0, 1.0), (0.0, 1.0)),
            ((0.0, 1.0), (0.0, 0.0)),
        ])
        .unwrap()
    }

    fn square_at(x: f64, y: f64, side: f64) -> Shape {
        Shape::from_coords(&[
            ((x, y), (x + side, y)),
            ((x + side, y), (x + side, y + side)),
            ((x + side, y + side), (x, y + side)),
            ((x, y + side), (x, y)),
        ])
        .unwrap()
    }

    #[test]
    fn distinguished_points_of_a_square_are_its_corners() {
        let pts = distinguished_points(&unit_square());
        assert_eq!(pts.len(), 4);
        assert!(pts[0].coincides(&Point::raw(0.0, 0.0)));
        assert!(pts[3].coincides(&Point::raw(1.0, 1.0)));
    }

    #[test]
    fn square_onto_itself_finds_the_symmetry_group() {
        let a = unit_square();
        let all = find_matches(&a, &a, MatchOptions::default()).unwrap();
        assert_eq!(all.len(), 8);
        let direct = find_matches(
            &a,
            &a,
            MatchOptions {
                allow_reflection: false,
            },
        )
        .unwrap();
        assert_eq!(direct.len(), 4);
        assert!(direct.iter().all(|t| !t.is_reflecting()));
    }

    #[test]
    fn label_breaks_symmetry() {
        let a = unit_square().with_label(1.0, 1.0, "dot").unwrap();
        let all = find_matches(&a, &a, MatchOptions::default()).unwrap();
        // Identity plus the reflection across the labelled diagonal.
        assert_eq!(all.len(), 2);
        let direct = find_matches(
            &a,
            &a,
            MatchOptions {
                allow_reflection: false,
            },
        )
        .unwrap();
        assert_eq!(direct.len(), 1);
        assert!(direct[0].approx_eq(&Transform::identity()));
    }

    #[test]
    fn scaled_target_is_found() {
        let a = unit_square();
        let s = square_at(0.0, 0.0, 2.0);
        let found = find_matches(&a, &s, MatchOptions::default()).unwrap();
        assert_eq!(found.len(), 8);
        assert!(found.iter().all(|t| (t.scale_factor() - 2.0).abs() < 1e-9));
    }

    #[test]
    fn disjoint_pair_doubles_the_matches() {
        let a = unit_square();
        let s = square_at(0.0, 0.0, 1.0).sum(&square_at(3.0, 0.0, 1.0));
        let found = find_matches(&a, &s, MatchOptions::default()).unwrap();
        assert_eq!(found.len(), 16);
    }

    #[test]
    fn all_parallel_pattern_is_underdetermined() {
        let flat = Shape::from_coords(&[((0.0, 0.0), (1.0, 0.0)), ((0.0, 1.0), (1.0, 1.0))])
            .unwrap();
        assert_eq!(
            find_matches(&flat, &unit_square(), MatchOptions::default()),
            Err(GeomError::UnderdeterminedMatch)
        );
        assert_eq!(
            find_matches(&Shape::empty(), &unit_square(), MatchOptions::default()),
            Err(GeomError::UnderdeterminedMatch)
        );
    }

    #[test]
    fn single_crossing_pattern_is_underdetermined() {
        // Two carriers but only one distinguished point: scaling about the
        // crossing is a free parameter.
        let plus = Shape::new(
            vec![
                Segment::from_coords(-1.0, 0.0, 1.0, 0.0).unwrap(),
                Segment::from_coords(0.0, -1.0, 0.0, 1.0).unwrap(),
            ],
            vec![],
        );
        assert_eq!(
            find_matches(&plus, &plus, MatchOptions::default()),
            Err(GeomError::UnderdeterminedMatch)
        );
    }

    #[test]
    fn match_list_is_deterministic() {
        let a = unit_square();
        let s = square_at(0.0, 0.0, 2.0);
        let one = find_matches(&a, &s, MatchOptions::default()).unwrap();
        let two = find_matches(&a, &s, MatchOptions::default()).unwrap();
        let keys1: Vec<_> = one.iter().map(|t| t.sort_key()).collect();
        let keys2: Vec<_> = two.iter().map(|t| t.sort_key()).collect();
        assert_eq!(keys1, keys2);
    }
}
