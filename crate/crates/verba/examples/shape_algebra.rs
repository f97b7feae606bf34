//! The shape algebra: canonical maximal segments, sum, product,
//! difference, and the subshape test.
//!
//! Run with: cargo run --example shape_algebra

use verba::geom::Shape;

fn show(name: &str, shape: &Shape) {
    println!("{name}:");
    for s in shape.segments() {
        println!(
            "  ({}, {}) -- ({}, {})",
            s.p().x,
            s.p().y,
            s.q().x,
            s.q().y
        );
    }
    for l in shape.labels() {
        println!("  label {:?} at ({}, {})", l.label(), l.at().x, l.at().y);
    }
    if shape.is_empty() {
        println!("  (empty)");
    }
}

fn main() {
    // Canonicalization merges collinear overlapping or abutting segments
    // into maximal ones, so equal point sets are equal shapes.
    let split = Shape::from_coords(&[((0.0, 0.0), (1.0, 0.0)), ((1.0, 0.0), (2.0, 0.0))]).unwrap();
    show("two abutting pieces canonicalize", &split);

    let a = Shape::from_coords(&[((0.0, 0.0), (2.0, 0.0))]).unwrap();
    let b = Shape::from_coords(&[((1.0, 0.0), (3.0, 0.0))]).unwrap();

    show("a + b (union of linear parts)", &a.sum(&b));
    show("a . b (common linear part)", &a.product(&b));
    show("a - b (relative complement)", &a.difference(&b));

    // Removing an interior interval splits a maximal segment in two.
    let long = Shape::from_coords(&[((0.0, 0.0), (3.0, 0.0))]).unwrap();
    let middle = Shape::from_coords(&[((1.0, 0.0), (2.0, 0.0))]).unwrap();
    show("interior removal splits", &long.difference(&middle));

    // Crossing segments share no linear part.
    let vertical = Shape::from_coords(&[((1.0, -1.0), (1.0, 1.0))]).unwrap();
    show("crossing segments multiply to", &a.product(&vertical));

    // Subshape: covered by segments, labels included.
    let sub = Shape::from_coords(&[((0.5, 0.0), (1.5, 0.0))]).unwrap();
    println!("\nsub in a?          {}", sub.subshape_of(&a));
    println!("a in sub?          {}", a.subshape_of(&sub));
    let marked = a.clone().with_label(0.0, 0.0, "dot").unwrap();
    println!("a in marked a?     {}", a.subshape_of(&marked));
    println!("marked a in a?     {}", marked.subshape_of(&a));

    // The algebra's laws in action.
    println!(
        "\ndecomposition (a - b) + (a . b) = a ?  {}",
        a.difference(&b).sum(&a.product(&b)).equal(&a)
    );
    println!(
        "absorption a + (a . b) = a ?           {}",
        a.sum(&a.product(&b)).equal(&a)
    );
}
