//! Check a hand-written realizer, then break it and read the report.
//!
//!     cargo run --example verify_realizer

use majdim::{generate, verify, Family, Realizer};

fn main() {
    let p3 = generate(Family::Path(3)).unwrap();
    let f = Realizer::new(3, vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 0, 3]]).unwrap();
    println!("path(3) with {}", f.to_json());
    println!("  valid: {}", verify(&p3, &f).unwrap().valid());
    println!("  normalized: {}", f.normalize().to_json());

    let g = Realizer::new(2, vec![vec![3, 3], vec![2, 2], vec![1, 1]]).unwrap();
    let report = verify(&p3, &g).unwrap();
    println!("path(3) with {}", g.to_json());
    for v in &report.violations {
        println!(
            "  pair ({}, {}): expected {:?}, margin {}",
            v.u, v.v, v.expected, v.margin
        );
    }
}
