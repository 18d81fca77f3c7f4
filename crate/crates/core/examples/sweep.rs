//! Every digraph on four vertices up to isomorphism, with its dimension.
//!
//!     cargo run --release --example sweep

use majdim::{summarize, sweep, DEFAULT_BUDGET};

fn main() {
    let rows = sweep(4, 8, true, DEFAULT_BUDGET).unwrap();
    let mut histogram = std::collections::BTreeMap::new();
    for r in &rows {
        *histogram.entry(r.dimension).or_insert(0) += 1;
    }
    println!("{} isomorphism classes", rows.len());
    for (k, count) in histogram {
        println!(
            "  dimension {}: {count}",
            k.map_or("?".into(), |k| k.to_string())
        );
    }
    let s = summarize(&rows);
    println!("counterexamples: {:?}", s.counterexamples);
}
