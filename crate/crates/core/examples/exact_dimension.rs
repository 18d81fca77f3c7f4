//! Exact dimension of an edge-list file, or of a few named digraphs.
//!
//!     cargo run --release --example exact_dimension [-- graph.txt]

use majdim::{
    dimension, generate, parse_edge_list, Digraph, Dimension, Family, Verdict, DEFAULT_BUDGET,
};

fn report(name: &str, d: &Digraph) {
    let r = dimension(d, 8, DEFAULT_BUDGET);
    match r.dimension {
        Dimension::Exact(k) => println!("{name}: dimension {k}"),
        Dimension::Unknown { lower, upper } => println!("{name}: between {lower} and {upper}"),
    }
    for (k, o) in &r.per_d {
        let verdict = match o.verdict {
            Verdict::Realizable(_) => "realizable",
            Verdict::NotRealizable => "not realizable",
            Verdict::BudgetExceeded => "out of budget",
        };
        println!("  d = {k}: {verdict} ({} nodes)", o.nodes);
    }
    if let Some(f) = r.witness() {
        println!("  witness {}", f.to_json());
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        report(&path, &parse_edge_list(&text).expect("edge list"));
        return;
    }
    for (name, f) in [
        ("path(3)", Family::Path(3)),
        ("path(6)", Family::Path(6)),
        ("path(10)", Family::Path(10)),
        ("cycle(3)", Family::Cycle(3)),
        ("cycle(4)", Family::Cycle(4)),
        ("tournament(5)", Family::AcyclicTournament(5)),
    ] {
        report(name, &generate(f).unwrap());
    }
}
