//! One line per acceptance criterion. Run with
//! `cargo test -p majdim --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use common::{
    arc_and_point, backtrack_realizable, naive_realizable, open_two_path, random_digraph,
    random_realizer, rng, transitive_triangle,
};
use majdim::chains::{is_antichain, is_chain};
use majdim::cli::HARD_BUDGET;
use majdim::{
    add_arc_realizer, all_labeled, dimension, es_chain_or_antichain, generate, generic_realizer,
    is_realizable, majority_digraph, majority_margin, profile_to_realizer, realize_cycle,
    realize_path, realizer_to_profile, realizes, tally, union_realizer, CycleMatrix, Digraph,
    Dimension, Family, Kind, Profile, Realizer, Verdict, DEFAULT_BUDGET,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn exact(d: &Digraph) -> Result<usize, String> {
    dimension(d, 12, DEFAULT_BUDGET)
        .dimension
        .exact()
        .ok_or_else(|| format!("unsolved: {d:?}"))
}

fn golden() -> Outcome {
    let mut cases: Vec<(String, Digraph, usize)> = Vec::new();
    for k in 0..=5 {
        cases.push((format!("empty({k})"), Digraph::empty(k), 0));
    }
    cases.push((
        "single arc".into(),
        generate(Family::SingleArc(2)).unwrap(),
        1,
    ));
    for n in 2..=4 {
        cases.push((
            format!("tournament({n})"),
            generate(Family::AcyclicTournament(n)).unwrap(),
            1,
        ));
    }
    cases.push(("path(3)".into(), generate(Family::Path(3)).unwrap(), 3));
    cases.push(("cycle(3)".into(), generate(Family::Cycle(3)).unwrap(), 3));
    cases.push(("D".into(), transitive_triangle(), 1));
    cases.push(("D'".into(), open_two_path(), 3));
    let (a, b) = arc_and_point();
    cases.push(("D1 u D2".into(), Digraph::disjoint_union(&[a, b]), 2));
    for (name, d, want) in &cases {
        let t = Instant::now();
        let got = exact(d)?;
        check(got == *want, || format!("{name}: got {got}, want {want}"))?;
        check(t.elapsed() < Duration::from_secs(10), || {
            format!("{name} took {:?}", t.elapsed())
        })?;
    }
    Ok(format!("{} digraphs", cases.len()))
}

fn constructions() -> Outcome {
    for n in 1..=15 {
        let d = generate(Family::Path(n)).unwrap();
        check(
            realizes(&d, &realize_path(n).map_err(|e| e.to_string())?),
            || format!("path({n})"),
        )?;
    }
    for n in 3..=12 {
        let d = generate(Family::Cycle(n)).unwrap();
        check(
            realizes(&d, &realize_cycle(n).map_err(|e| e.to_string())?),
            || format!("cycle({n})"),
        )?;
    }
    for n in 4..=64 {
        let m = CycleMatrix::for_cycle(n).map_err(|e| e.to_string())?;
        check(m.violations().is_empty(), || format!("cycle matrix {n}"))?;
    }
    let mut r = rng(2);
    for _ in 0..200 {
        let n = r.gen_range(0..=8);
        let d = random_digraph(&mut r, n);
        check(realizes(&d, &generic_realizer(&d)), || {
            format!("generic on {d:?}")
        })?;
    }
    for _ in 0..200 {
        let parts: Vec<(Digraph, Realizer)> = (0..r.gen_range(2..=3))
            .map(|_| {
                let n = r.gen_range(1..=4);
                let d = random_digraph(&mut r, n);
                let f = generic_realizer(&d);
                (d, f)
            })
            .collect();
        let f = union_realizer(&parts).map_err(|e| e.to_string())?;
        let graphs: Vec<Digraph> = parts.iter().map(|(d, _)| d.clone()).collect();
        let u = Digraph::disjoint_union(&graphs);
        check(realizes(&u, &f), || format!("union of {graphs:?}"))?;

        let free: Vec<(usize, usize)> = (0..u.n())
            .flat_map(|a| (0..u.n()).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && !u.adjacent(a, b))
            .collect();
        if let Some(&arc) = free.choose(&mut r) {
            let g = add_arc_realizer(&u, &f, arc).map_err(|e| e.to_string())?;
            check(realizes(&u.with_arc(arc.0, arc.1).unwrap(), &g), || {
                format!("add {arc:?}")
            })?;
        }
    }
    Ok("paths 1..=15, cycles 3..=12, matrices 4..=64, 200 generic, 200 compositions".into())
}

fn bound_sweep() -> Outcome {
    let mut count = 0;
    for d in all_labeled(4) {
        let k = exact(&d)?;
        if k <= 2 {
            check(d.is_transitive(), || {
                format!("dim {k} but not transitive: {d:?}")
            })?;
            check(!d.has_induced_two_path(), || {
                format!("dim {k} with induced 2-path: {d:?}")
            })?;
        }
        let core = !d.is_empty() && d.condense().condensed.is_acyclic_tournament();
        check((k == 1) == core, || {
            format!("dim {k}, tournament core {core}: {d:?}")
        })?;
        check((k == 0) == d.is_empty(), || format!("dim {k}: {d:?}"))?;
        count += 1;
    }
    check(count == 729, || format!("{count} digraphs"))?;
    Ok("729 digraphs, no counterexamples".into())
}

fn bounds() -> Outcome {
    let c4 = generate(Family::Cycle(4)).unwrap();
    let k = exact(&c4)?;
    check(k == 3, || format!("dim(cycle(4)) = {k}"))?;
    check(backtrack_realizable(&c4, 2).is_none(), || {
        "oracle finds cycle(4) in the plane".into()
    })?;
    check(backtrack_realizable(&c4, 3).is_some(), || {
        "oracle finds no 3-d cycle(4)".into()
    })?;

    let mut r = rng(4);
    let mut tried = 0;
    while tried < 100 {
        let n = r.gen_range(2..=4);
        let d = random_digraph(&mut r, n);
        let Some(&(u, v)) = d.arcs().choose(&mut r) else {
            continue;
        };
        let (with, without) = (exact(&d)?, exact(&d.without_arc(u, v))?);
        check(with <= without + 2, || {
            format!("{d:?} minus ({u}, {v}): {with} vs {without}")
        })?;
        tried += 1;
    }
    for _ in 0..100 {
        let (na, nb) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let (a, b) = (random_digraph(&mut r, na), random_digraph(&mut r, nb));
        let top = exact(&a)?.max(exact(&b)?);
        let u = exact(&Digraph::disjoint_union(&[a, b]))?;
        check(top <= u && u <= 2 * top.div_ceil(2), || {
            format!("union {u} vs part max {top}")
        })?;
    }
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        let d = random_digraph(&mut r, n);
        let mut s: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.6)).collect();
        s.sort_unstable();
        let full = exact(&d)?;
        check(exact(&d.induced(&s).unwrap())? <= full, || {
            format!("induced {s:?} of {d:?}")
        })?;
        check(exact(&d.condense().condensed)? == full, || {
            format!("condensation of {d:?}")
        })?;
    }
    Ok("dim(cycle(4)) = 3; 100 arc, 100 union, 100 induced/condensed instances".into())
}

fn oracle() -> Outcome {
    let mut cases = 0;
    for n in 0..=3 {
        for d in all_labeled(n) {
            for k in 0..=2 {
                let o = is_realizable(&d, k, DEFAULT_BUDGET);
                let naive = naive_realizable(&d, k);
                check(
                    o.verdict != Verdict::BudgetExceeded && o.is_realizable() == naive,
                    || format!("{d:?} at d = {k}: solver {:?}, naive {naive}", o.verdict),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (digraph, d) cases"))
}

fn large_instances() -> Outcome {
    for r in 2..=6 {
        for d in 0..r {
            let g = generate(Family::SubsetFamily { r, d }).map_err(|e| e.to_string())?;
            let subsets = majdim::digraph::subsets_of_size(r, d + 1);
            check(g.n() == r + subsets.len(), || {
                format!("size of subset family ({r}, {d})")
            })?;
            check(g.is_transitive(), || {
                format!("subset family ({r}, {d}) not transitive")
            })?;
            for (i, s) in subsets.iter().enumerate() {
                for e in 1..=r {
                    check(g.has_arc(e - 1, r + i) == s.contains(&e), || {
                        format!("membership arc ({e}, {s:?}) in ({r}, {d})")
                    })?;
                }
            }
            check(g.arc_count() == subsets.len() * (d + 1), || {
                "extra arcs".into()
            })?;
        }
    }
    let small = generate(Family::SubsetFamily { r: 3, d: 1 }).unwrap();
    check(
        is_realizable(&small, 1, DEFAULT_BUDGET).verdict == Verdict::NotRealizable,
        || "subset family (3, 1) realized on a line".into(),
    )?;

    let p10 = generate(Family::Path(10)).unwrap();
    let f = realize_path(10).map_err(|e| e.to_string())?;
    check(f.dim() == 4 && realizes(&p10, &f), || {
        "path(10) four-dimensional witness".into()
    })?;
    let o = is_realizable(&p10, 3, HARD_BUDGET);
    let lower = match o.verdict {
        Verdict::NotRealizable => format!("d = 3 refuted in {} nodes, dim(path(10)) = 4", o.nodes),
        Verdict::BudgetExceeded => {
            let r = dimension(&p10, 4, HARD_BUDGET);
            check(matches!(r.dimension, Dimension::Unknown { .. }), || {
                "unproven claim".into()
            })?;
            format!("d = 3 search out of budget, reported as {:?}", r.dimension)
        }
        Verdict::Realizable(_) => return Err("path(10) realized in three dimensions".into()),
    };
    Ok(format!(
        "subset families r <= 6 checked, dim(subsets(3, 1)) >= 2; {lower}"
    ))
}

fn margins() -> Outcome {
    let mut r = rng(7);
    for _ in 0..10_000 {
        let d = r.gen_range(0..=9);
        let x: Vec<i64> = (0..d).map(|_| r.gen_range(-3..=3)).collect();
        let y: Vec<i64> = (0..d).map(|_| r.gen_range(-3..=3)).collect();
        let t = tally(&x, &y).unwrap();
        let back = tally(&y, &x).unwrap();
        check(t.margin() == -back.margin(), || {
            format!("antisymmetry {x:?} {y:?}")
        })?;
        check(t.margin().unsigned_abs() as usize <= d, || {
            format!("bound {x:?} {y:?}")
        })?;
        check(t.ahead + t.behind + t.equal == d, || {
            format!("accounting {x:?} {y:?}")
        })?;
        if d % 2 == 1 && t.margin() == 0 {
            check(t.equal % 2 == 1, || format!("parity {x:?} {y:?}"))?;
        }
    }
    Ok("10000 vector pairs".into())
}

fn profiles() -> Outcome {
    let mut r = rng(8);
    for _ in 0..100 {
        let (n, d) = (r.gen_range(1..=7), r.gen_range(1..=7));
        let f = random_realizer(&mut r, n, d, 4);
        let p = realizer_to_profile(&f).map_err(|e| e.to_string())?;
        for u in 0..n {
            for v in 0..n {
                check(majority_margin(&p, u, v).unwrap() == f.margin(u, v), || {
                    format!("margin ({u}, {v}) of {f:?}")
                })?;
            }
        }
    }
    let condorcet = Profile::new(3, vec![vec![3, 2, 1], vec![1, 3, 2], vec![2, 1, 3]]).unwrap();
    check(
        majority_digraph(&condorcet) == generate(Family::Cycle(3)).unwrap(),
        || "Condorcet profile is not the 3-cycle".into(),
    )?;
    for _ in 0..100 {
        let (m, k) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let voters = (0..k)
            .map(|_| (0..m).map(|_| r.gen_range(0..4)).collect())
            .collect();
        let p = Profile::new(m, voters).unwrap();
        let again = realizer_to_profile(&profile_to_realizer(&p)).unwrap();
        for a in 0..m {
            for b in 0..m {
                check(
                    majority_margin(&again, a, b) == majority_margin(&p, a, b),
                    || format!("round trip ({a}, {b})"),
                )?;
            }
        }
    }
    Ok("100 realizers, Condorcet cycle, 100 round trips".into())
}

fn erdos_szekeres() -> Outcome {
    let mut r = rng(9);
    let mut xs: Vec<i64> = (0..100).collect();
    let mut ys: Vec<i64> = (0..100).collect();
    for _ in 0..500 {
        xs.shuffle(&mut r);
        ys.shuffle(&mut r);
        let pts: Vec<(i64, i64)> = xs[..10]
            .iter()
            .copied()
            .zip(ys[..10].iter().copied())
            .collect();
        let w = es_chain_or_antichain(&pts).map_err(|e| e.to_string())?;
        check(w.points.len() >= 4, || {
            format!("witness of size {} in {pts:?}", w.points.len())
        })?;
        let valid = match w.kind {
            Kind::Chain => is_chain(&w.points),
            Kind::Antichain => is_antichain(&w.points),
        };
        check(valid, || format!("invalid {:?} witness in {pts:?}", w.kind))?;
    }
    Ok("500 ten-point sets".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden dimensions", golden, Duration::from_secs(60)),
        (
            "construction soundness",
            constructions,
            Duration::from_secs(30),
        ),
        ("bound sweep", bound_sweep, Duration::from_secs(300)),
        ("bounds", bounds, Duration::from_secs(300)),
        ("oracle equivalence", oracle, Duration::from_secs(300)),
        (
            "large instances",
            large_instances,
            Duration::from_secs(3600),
        ),
        ("margin and parity", margins, Duration::from_secs(5)),
        ("profiles", profiles, Duration::from_secs(60)),
        ("Erdos-Szekeres", erdos_szekeres, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = run();
        let took = t.elapsed();
        let result = match result {
            Ok(detail) if took > *limit => Err(format!("{detail}; over the {limit:?} limit")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {} {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
