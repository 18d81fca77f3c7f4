//! Homogeneous vertices share every neighbor, so they can share a vector.
//!
//!     cargo run --example condensation

use majdim::{condense_lift, dimension, realizes, Digraph, DEFAULT_BUDGET};

fn main() {
    // 0 and 1 both point at 2, which points at 3
    let d = Digraph::build(5, [(0, 2), (1, 2), (2, 3), (4, 3)]).unwrap();
    let c = d.condense();
    println!("classes: {:?}", c.classes());
    println!("condensed arcs: {:?}", c.condensed.arcs());

    let inner = dimension(&c.condensed, 8, DEFAULT_BUDGET);
    let f_star = inner.witness().unwrap();
    println!(
        "condensed dimension {:?}, witness {}",
        inner.dimension,
        f_star.to_json()
    );

    let f = condense_lift(&d, &c, f_star).unwrap();
    println!("lifted {} verifies = {}", f.to_json(), realizes(&d, &f));
}
