//! The explicit constructions: paths and cycles in four dimensions, unions,
//! single added arcs, and the two-per-arc fallback.
//!
//!     cargo run --example constructions

use majdim::{
    add_arc_realizer, generate, generic_realizer, realize_cycle, realize_path, realizes,
    union_realizer, CycleMatrix, Digraph, Family,
};

fn main() {
    for n in [3, 6, 10] {
        let f = realize_path(n).unwrap();
        let ok = realizes(&generate(Family::Path(n)).unwrap(), &f);
        println!("path({n}): d = {}, verifies = {ok}", f.dim());
    }

    let m = CycleMatrix::for_cycle(7).unwrap();
    println!("cycle matrix for n = 7:");
    for row in m.rows() {
        println!("  {row:?}");
    }
    for n in [3, 4, 5, 12] {
        let f = realize_cycle(n).unwrap();
        let ok = realizes(&generate(Family::Cycle(n)).unwrap(), &f);
        println!("cycle({n}): d = {}, verifies = {ok}", f.dim());
    }

    let c3 = generate(Family::Cycle(3)).unwrap();
    let arc = generate(Family::SingleArc(2)).unwrap();
    let parts = [
        (c3.clone(), realize_cycle(3).unwrap()),
        (arc.clone(), generic_realizer(&arc)),
    ];
    let u = union_realizer(&parts).unwrap();
    let whole = Digraph::disjoint_union(&[c3, arc]);
    println!(
        "cycle(3) + arc: d = {}, verifies = {}",
        u.dim(),
        realizes(&whole, &u)
    );

    let bigger = add_arc_realizer(&whole, &u, (4, 0)).unwrap();
    let target = whole.with_arc(4, 0).unwrap();
    println!(
        "plus arc 4 -> 0: d = {}, verifies = {}",
        bigger.dim(),
        realizes(&target, &bigger)
    );

    let g = generic_realizer(&target);
    println!("generic for the same digraph: d = {}", g.dim());
}
