//! Planar regions and the region-calculus subset used to verify spatial
//! prepositions.
//!
//! [`extract_regions`] grounds region talk in the line-segment world: it
//! returns the minimal closed cycles of a shape's segments as simple
//! counterclockwise polygons. [`classify`] assigns the unique RCC8 relation
//! to a pair of regions, realized point-set-topologically (closure
//! intersection for `Connect`, closure containment for `Part`, positive-area
//! interior intersection for `Overlap`). [`Preposition`] carries the
//! preposition-to-relation mapping: `at` means {TPP, NTPP}, `on` means
//! {EC, TPP}, `in` means {EC, TPP, NTPP}.

mod arrangement;
mod classify;
mod poly;

use thiserror::Error;

use crate::geom::{Point, Shape, EPS_ABS};

pub use classify::classify_union;

/// A simple polygon (counterclockwise vertex order) derived from the closed
/// cycles of a shape.
#[derive(Debug, Clone)]
pub struct Region {
    vertices: Vec<Point>,
}

impl Region {
    /// Validates simplicity and non-degenerate area; reorients clockwise
    /// input to counterclockwise.
    pub fn new(vertices: Vec<Point>) -> Result<Region, RegionError> {
        if vertices.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(RegionError::NonFinite);
        }
        let mut vs: Vec<Point> = Vec::with_capacity(vertices.len());
        for p in vertices {
            if vs.last().is_none_or(|q: &Point| !q.coincides(&p)) {
                vs.push(p);
            }
        }
        while vs.len() > 1 && vs[0].coincides(vs.last().unwrap()) {
            vs.pop();
        }
        if vs.len() < 3 {
            return Err(RegionError::TooFewVertices(vs.len()));
        }
        let area = poly::signed_area(&vs);
        if area.abs() <= EPS_ABS {
            return Err(RegionError::DegenerateArea);
        }
        if area < 0.0 {
            vs.reverse();
        }
        if !poly::is_simple(&vs) {
            return Err(RegionError::SelfIntersecting);
        }
        Ok(Region { vertices: vs })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        poly::signed_area(&self.vertices)
    }

    /// Axis-aligned rectangle helper.
    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Region, RegionError> {
        Region::new(vec![
            Point::raw(x0, y0),
            Point::raw(x1, y0),
            Point::raw(x1, y1),
            Point::raw(x0, y1),
        ])
    }

    pub(crate) fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum RegionError {
    #[error("a region needs at least 3 distinct vertices, got {0}")]
    TooFewVertices(usize),
    #[error("region area is below tolerance")]
    DegenerateArea,
    #[error("region boundary is self-intersecting")]
    SelfIntersecting,
    #[error("vertex coordinate is not finite")]
    NonFinite,
    #[error("preposition {0:?} has no region-calculus mapping")]
    UnmappedPreposition(String),
}

/// The eight jointly exhaustive, pairwise disjoint RCC8 relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionRelation {
    /// Disconnected.
    Dc,
    /// Externally connected: touching, interiors disjoint.
    Ec,
    /// Partial overlap.
    Po,
    /// Tangential proper part.
    Tpp,
    /// Non-tangential proper part.
    Ntpp,
    /// Equal.
    Eq,
    /// Inverse of TPP.
    Tppi,
    /// Inverse of NTPP.
    Ntppi,
}

impl RegionRelation {
    pub fn name(&self) -> &'static str {
        match self {
            RegionRelation::Dc => "DC",
            RegionRelation::Ec => "EC",
            RegionRelation::Po => "PO",
            RegionRelation::Tpp => "TPP",
            RegionRelation::Ntpp => "NTPP",
            RegionRelation::Eq => "EQ",
            RegionRelation::Tppi => "TPPi",
            RegionRelation::Ntppi => "NTPPi",
        }
    }

    /// The relation with arguments swapped.
    pub fn inverse(&self) -> RegionRelation {
        match self {
            RegionRelation::Tpp => RegionRelation::Tppi,
            RegionRelation::Tppi => RegionRelation::Tpp,
            RegionRelation::Ntpp => RegionRelation::Ntppi,
            RegionRelation::Ntppi => RegionRelation::Ntpp,
            other => *other,
        }
    }
}

impl std::fmt::Display for RegionRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A spatial locator with its region-calculus denotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preposition {
    At,
    On,
    In,
}

impl Preposition {
    pub fn from_word(word: &str) -> Result<Preposition, RegionError> {
        match word {
            "at" => Ok(Preposition::At),
            "on" => Ok(Preposition::On),
            "in" => Ok(Preposition::In),
            other => Err(RegionError::UnmappedPreposition(other.to_string())),
        }
    }

    pub fn word(&self) -> &'static str {
        match self {
            Preposition::At => "at",
            Preposition::On => "on",
            Preposition::In => "in",
        }
    }

    /// The set of relations the locator may denote.
    pub fn relations(&self) -> &'static [RegionRelation] {
        match self {
            Preposition::At => &[RegionRelation::Tpp, RegionRelation::Ntpp],
            Preposition::On => &[RegionRelation::Ec, RegionRelation::Tpp],
            Preposition::In => &[
                RegionRelation::Ec,
                RegionRelation::Tpp,
                RegionRelation::Ntpp,
            ],
        }
    }
}

/// The complete locator mapping: exactly the three spatial prepositions
/// with their relation sets.
pub fn preposition_map() -> [(Preposition, &'static [RegionRelation]); 3] {
    [
        (Preposition::At, Preposition::At.relations()),
        (Preposition::On, Preposition::On.relations()),
        (Preposition::In, Preposition::In.relations()),
    ]
}

/// All minimal closed cycles of the shape's segments, as counterclockwise
/// simple polygons in canonical order. Open shapes yield an empty list.
pub fn extract_regions(shape: &Shape) -> Vec<Region> {
    arrangement::bounded_loops(shape.segments())
        .into_iter()
        .filter_map(|vs| Region::new(vs).ok())
        .collect()
}

/// True iff the closures of the two regions intersect; a shared boundary
/// point suffices.
pub fn connect(x: &Region, y: &Region) -> bool {
    classify::connect_union(std::slice::from_ref(x), std::slice::from_ref(y))
}

/// True iff the closure of `x` is contained in the closure of `y`.
pub fn part(x: &Region, y: &Region) -> bool {
    classify::part_union(std::slice::from_ref(x), std::slice::from_ref(y))
}

/// True iff the interiors share a part of positive area.
pub fn overlap(x: &Region, y: &Region) -> bool {
    classify::overlap_union(std::slice::from_ref(x), std::slice::from_ref(y))
}

/// The unique RCC8 relation holding between the two regions.
pub fn classify(x: &Region, y: &Region) -> RegionRelation {
    classify_union(std::slice::from_ref(x), std::slice::from_ref(y))
}

/// True iff the relation between trajector and landmark is one the
/// preposition may denote.
pub fn check_preposition(prep: Preposition, trajector: &Region, landmark: &Region) -> bool {
    prep.relations().contains(&classify(trajector, landmark))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_shape(x: f64, y: f64, side: f64) -> Shape {
        Shape::from_coords(&[
            ((x, y), (x + side, y)),
            ((x + side, y), (x + side, y + side)),
            ((x + side, y + side), (x, y + side)),
            ((x, y + side), (x, y)),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square_outline_yields_one_region() {
        let regions = extract_regions(&square_shape(0.0, 0.0, 1.0));
        assert_eq!(regions.len(), 1);
        assert!((regions[0].area() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn disjoint_squares_yield_two_regions() {
        let s = square_shape(0.0, 0.0, 1.0).sum(&square_shape(3.0, 0.0, 1.0));
        assert_eq!(extract_regions(&s).len(), 2);
    }

    #[test]
    fn open_shapes_yield_no_region() {
        let open = Shape::from_coords(&[((0.0, 0.0), (1.0, 0.0))]).unwrap();
        assert!(extract_regions(&open).is_empty());
        assert!(extract_regions(&Shape::empty()).is_empty());
    }

    #[test]
    fn grid_yields_the_four_cells() {
        // 2x2 grid: the emergent outer square is not a minimal cycle.
        let s = Shape::from_coords(&[
            ((0.0, 0.0), (2.0, 0.0)),
            ((0.0, 1.0), (2.0, 1.0)),
            ((0.0, 2.0), (2.0, 2.0)),
            ((0.0, 0.0), (0.0, 2.0)),
            ((1.0, 0.0), (1.0, 2.0)),
            ((2.0, 0.0), (2.0, 2.0)),
        ])
        .unwrap();
        let regions = extract_regions(&s);
        assert_eq!(regions.len(), 4);
        for r in &regions {
            assert!((r.area() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn square_with_diagonal_yields_two_triangles() {
        let s = square_shape(0.0, 0.0, 2.0)
            .sum(&Shape::from_coords(&[((0.0, 0.0), (2.0, 2.0))]).unwrap());
        let regions = extract_regions(&s);
        assert_eq!(regions.len(), 2);
        for r in &regions {
            assert!((r.area() - 2.0).abs() < 1e-9);
        }
    }

    #[test]
    fn corner_attached_squares_yield_both() {
        let s = square_shape(0.0, 0.0, 1.0).sum(&square_shape(1.0, 1.0, 0.5));
        let regions = extract_regions(&s);
        assert_eq!(regions.len(), 2);
    }

    #[test]
    fn dangling_segments_are_ignored() {
        let s = square_shape(0.0, 0.0, 1.0)
            .sum(&Shape::from_coords(&[((1.0, 0.5), (2.0, 0.5))]).unwrap());
        let regions = extract_regions(&s);
        assert_eq!(regions.len(), 1);
        assert!((regions[0].area() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn connect_examples() {
        let a = Region::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        let edge_sharing = Region::rect(1.0, 0.0, 2.0, 1.0).unwrap();
        let corner_sharing = Region::rect(1.0, 1.0, 2.0, 2.0).unwrap();
        let far = Region::rect(2.0, 0.0, 3.0, 1.0).unwrap();
        assert!(connect(&a, &edge_sharing));
        assert!(connect(&a, &corner_sharing));
        assert!(!connect(&a, &far));
    }

    #[test]
    fn part_examples() {
        let x = Region::rect(1.0, 1.0, 2.0, 2.0).unwrap();
        let y = Region::rect(0.0, 0.0, 3.0, 3.0).unwrap();
        let z = Region::rect(1.5, 1.5, 4.0, 4.0).unwrap();
        assert!(part(&x, &x));
        assert!(part(&x, &y));
        assert!(!part(&z, &y));
        assert!(!part(&y, &x));
    }

    #[test]
    fn overlap_examples() {
        let a = Region::rect(0.0, 0.0, 2.0, 2.0).unwrap();
        let b = Region::rect(1.0, 1.0, 3.0, 3.0).unwrap();
        let adjacent = Region::rect(2.0, 0.0, 3.0, 2.0).unwrap();
        let nested = Region::rect(0.5, 0.5, 1.5, 1.5).unwrap();
        assert!(overlap(&a, &b));
        assert!(!overlap(&a, &adjacent));
        assert!(overlap(&a, &nested));
    }

    #[test]
    fn classify_examples() {
        let inner = Region::rect(1.0, 1.0, 2.0, 2.0).unwrap();
        let outer = Region::rect(0.0, 0.0, 3.0, 3.0).unwrap();
        assert_eq!(classify(&inner, &outer), RegionRelation::Ntpp);
        assert_eq!(classify(&outer, &inner), RegionRelation::Ntppi);

        let corner = Region::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(classify(&corner, &outer), RegionRelation::Tpp);
        assert_eq!(classify(&outer, &corner), RegionRelation::Tppi);

        let left = Region::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        let right = Region::rect(1.0, 0.0, 2.0, 1.0).unwrap();
        assert_eq!(classify(&left, &right), RegionRelation::Ec);

        assert_eq!(classify(&outer, &outer), RegionRelation::Eq);
        let far = Region::rect(5.0, 5.0, 6.0, 6.0).unwrap();
        assert_eq!(classify(&far, &outer), RegionRelation::Dc);
        let shifted = Region::rect(1.0, 0.0, 4.0, 3.0).unwrap();
        assert_eq!(classify(&outer, &shifted), RegionRelation::Po);
    }

    #[test]
    fn preposition_map_is_exactly_the_three_locators() {
        use RegionRelation::*;
        let map = preposition_map();
        assert_eq!(map.len(), 3);
        assert_eq!(map[0], (Preposition::At, &[Tpp, Ntpp][..]));
        assert_eq!(map[1], (Preposition::On, &[Ec, Tpp][..]));
        assert_eq!(map[2], (Preposition::In, &[Ec, Tpp, Ntpp][..]));
    }

    #[test]
    fn preposition_examples() {
        let inner = Region::rect(1.0, 1.0, 2.0, 2.0).unwrap();
        let outer = Region::rect(0.0, 0.0, 3.0, 3.0).unwrap();
        let left = Region::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        let right = Region::rect(1.0, 0.0, 2.0, 1.0).unwrap();
        // NTPP satisfies 'at'; EC satisfies 'on' but not 'at'.
        assert!(check_preposition(Preposition::At, &inner, &outer));
        assert!(check_preposition(Preposition::On, &left, &right));
        assert!(!check_preposition(Preposition::At, &left, &right));
        assert!(check_preposition(Preposition::In, &inner, &outer));
        assert!(matches!(
            Preposition::from_word("under"),
            Err(RegionError::UnmappedPreposition(_))
        ));
    }

    #[test]
    fn region_rejects_degenerate_input() {
        assert!(matches!(
            Region::new(vec![Point::raw(0.0, 0.0), Point::raw(1.0, 0.0)]),
            Err(RegionError::TooFewVertices(_))
        ));
        assert!(matches!(
            Region::new(vec![
                Point::raw(0.0, 0.0),
                Point::raw(1.0, 0.0),
                Point::raw(2.0, 0.0),
            ]),
            Err(RegionError::DegenerateArea)
        ));
        // A crossed quadrilateral with non-zero signed area.
        assert!(matches!(
            Region::new(vec![
                Point::raw(0.0, 0.0),
                Point::raw(4.0, 0.0),
                Point::raw(1.0, 2.0),
                Point::raw(3.0, 2.0),
            ]),
            Err(RegionError::SelfIntersecting)
        ));
    }
}
