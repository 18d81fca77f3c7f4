//! Among n^2 + 1 points, some n + 1 form a chain or an antichain.
//!
//!     cargo run --example erdos_szekeres

use majdim::es_chain_or_antichain;

fn main() {
    let pts = [
        (3, 7),
        (1, 4),
        (9, 2),
        (4, 8),
        (6, 1),
        (2, 9),
        (8, 5),
        (5, 3),
        (7, 6),
        (0, 0),
    ];
    let w = es_chain_or_antichain(&pts).unwrap();
    println!(
        "{} points -> {:?} of size {}: {:?}",
        pts.len(),
        w.kind,
        w.points.len(),
        w.points
    );
}
