//! Acceptance criteria. Runs without the libtest harness and prints one
//! `PASS`/`FAIL` line per criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use critsets::bench;
use critsets::critical;
use critsets::graph::{Bipartition, Graph, Side, VertexSet};
use critsets::io::report::{analyze, AnalyzeOptions, Method};
use critsets::io::{fixture, fixture_text, generate, GraphKind};
use critsets::matching::{self, Matching};
use critsets::oracle::{self, OracleBounds};
use critsets::verify::battery::{theorem_battery, BatteryOptions, Group, Status};
use critsets::verify::{alternating_closure, conjecture_search, lemma_expand};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        match $cond {
            true => {}
            false => return Err(format!($($arg)*)),
        }
    };
}

fn bounds() -> OracleBounds {
    OracleBounds::default()
}

fn names(doc: &critsets::io::GraphDocument, x: &VertexSet) -> Vec<String> {
    doc.set_labels(x)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let doc = fixture("fig2").unwrap();
    let opts = AnalyzeOptions {
        bounds: bounds(),
        timing: false,
        ..AnalyzeOptions::default()
    };
    let r = analyze(&doc, &opts).map_err(|e| e.to_string())?;
    let i = &r.invariants;
    ensure!(i.delta0_a == Some(1) && i.delta0_b == Some(2), "δ0 = {:?}, {:?}", i.delta0_a, i.delta0_b);
    let s = r.sets.sides.as_ref().ok_or("no side sets")?;
    ensure!(s.ker_a == ["a1", "a2"], "ker_A = {:?}", s.ker_a);
    ensure!(s.diadem_a == ["a1", "a2", "a3", "a4", "a5"], "diadem_A = {:?}", s.diadem_a);
    ensure!(s.diadem_b == ["b2", "b3", "b4", "b5", "b6", "b7"], "diadem_B = {:?}", s.diadem_b);

    let g = doc.graph();
    let bp = doc.declared_bipartition(&g).unwrap().unwrap();
    let family = oracle::oracle_side_critical_family(&g, &bp, Side::B, &bounds()).map_err(|e| e.to_string())?;
    let meet = names(&doc, &family.intersection());
    ensure!(s.ker_b == meet, "ker_B = {:?}, oracle ∩ = {:?}", s.ker_b, meet);
    let text = fixture_text("fig2").unwrap();
    ensure!(text.contains("{b4, b5, b6}"), "fixture does not document the printed ker_B");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("ker_B = {{{}}} (oracle), {elapsed:.2?}", s.ker_b.join(", ")))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labeled bipartite graphs on `n` vertices. Two-colored graphs number
/// `b(n) = Σ C(n,k)·2^(k(n−k))`, and `B = A²` as exponential generating
/// functions because each component has exactly two colorings.
fn labeled_bipartite_count(n: u64) -> u64 {
    let b = |n: u64| (0..=n).map(|k| binomial(n, k) << (k * (n - k))).sum::<u64>();
    let mut a = vec![1u64];
    for m in 1..=n {
        let cross: u64 = (1..m).map(|k| binomial(m, k) * a[k as usize] * a[(m - k) as usize]).sum();
        a.push((b(m) - cross) / 2);
    }
    a[n as usize]
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let opts = BatteryOptions::bipartite_only();
    let (graphs, checks) = pool.install(|| -> Result<(u64, u64), String> {
        let mut graphs = 0u64;
        let mut checks = 0u64;
        for n in 1..=7usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                if Bipartition::of(&g).is_err() {
                    continue;
                }
                graphs += 1;
                let report = theorem_battery(&g, &opts);
                for c in &report.checks {
                    ensure!(c.group == Group::Bipartite, "non-bipartite check {} ran", c.id);
                    match &c.status {
                        Status::Pass { .. } => checks += 1,
                        Status::Fail { witness } => return Err(format!("n = {n}, edges {:?}: {} failed: {witness}", g.edges(), c.id)),
                        Status::Skipped { reason } => return Err(format!("n = {n}: {} skipped: {reason}", c.id)),
                    }
                }
            }
        }
        Ok((graphs, checks))
    })?;
    let expected: u64 = (1..=7).map(labeled_bipartite_count).sum();
    ensure!(graphs == expected, "enumerated {graphs} bipartite graphs, expected {expected}");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    Ok(format!("{graphs} graphs, {checks} checks passed, {elapsed:.2?}"))
}

fn random_bipartite_kind(seed: u64, index: u64) -> GraphKind {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    r.set_stream(index);
    GraphKind::Bipartite {
        n_a: r.gen_range(1..=12),
        n_b: r.gen_range(1..=12),
        p: [0.1, 0.3, 0.5][(index % 3) as usize],
    }
}

fn criterion_3() -> Outcome {
    use rayon::prelude::*;
    const SEED: u64 = 20_240_611;
    let start = Instant::now();
    let opts = BatteryOptions {
        bounds: bounds(),
        ..BatteryOptions::default()
    };
    let failures: Vec<String> = (0..10_000u64)
        .into_par_iter()
        .filter_map(|i| {
            let doc = generate(&random_bipartite_kind(SEED, i), SEED, i).unwrap();
            let g = doc.graph();
            let bp = doc.declared_bipartition(&g).unwrap().unwrap();
            let report = critsets::verify::run_battery(&g, &doc.name, Some(&bp), None, &opts);
            if let Some(c) = report.failures().next() {
                return Some(format!("{}: {} failed: {:?}", doc.name, c.id, c.status));
            }
            if report.skipped() > 0 {
                return Some(format!("{}: {} checks skipped", doc.name, report.skipped()));
            }
            let p = critical::summarize_bipartite(&g, &bp);
            let o = oracle::oracle_summary(&g, &bounds()).unwrap();
            let same = p.ker == o.ker && p.diadem == o.diadem && p.core == o.core && p.corona == o.corona;
            (!same).then(|| format!("{}: polynomial and oracle sets differ", doc.name))
        })
        .collect();
    ensure!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!("10000 graphs, 0 failures, {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let opts = AnalyzeOptions {
        method: Method::Oracle,
        bounds: bounds(),
        timing: false,
        ..AnalyzeOptions::default()
    };
    let get = |name: &str| analyze(&fixture(name).unwrap(), &opts).map_err(|e| format!("{name}: {e}"));
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();

    let r = get("fig1-g1")?;
    ensure!(r.sets.core == s(&["x", "y", "z"]), "fig1-g1 core = {:?}", r.sets.core);
    ensure!(r.sets.ker == s(&["x", "y"]), "fig1-g1 ker = {:?}", r.sets.ker);

    let r = get("fig1-g2")?;
    ensure!(r.sets.core == s(&["v1", "v2", "v7", "v11"]), "fig1-g2 core = {:?}", r.sets.core);
    ensure!(r.sets.ker == s(&["v1", "v2"]), "fig1-g2 ker = {:?}", r.sets.ker);
    ensure!(r.invariants.dc == 1, "fig1-g2 d_c = {}", r.invariants.dc);

    let r = get("fig222-g1")?;
    ensure!(r.sets.ker == s(&["x", "y"]), "fig222-g1 ker = {:?}", r.sets.ker);
    ensure!(r.sets.core == s(&["x", "y", "u", "v"]), "fig222-g1 core = {:?}", r.sets.core);

    let r = get("fig222-g2")?;
    ensure!(r.sets.ker.is_empty(), "fig222-g2 ker = {:?}", r.sets.ker);
    ensure!(r.sets.core == s(&["w"]), "fig222-g2 core = {:?}", r.sets.core);

    let r = get("fig1777")?;
    let (corona, core, alpha) = (r.sets.corona.len(), r.sets.core.len(), r.invariants.alpha);
    ensure!(corona + core == 13 && 2 * alpha == 12, "fig1777: {corona} + {core} vs 2α = {}", 2 * alpha);
    ensure!(alpha + r.invariants.mu != r.n, "fig1777 satisfies α + μ = |V|");
    Ok("fig1-g1, fig1-g2, fig222-g1, fig222-g2, fig1777 match; fig1777 has 13 > 12".into())
}

fn criterion_5() -> Outcome {
    let general = GraphKind::General { n: 8, p: 0.3 };
    let a = conjecture_search(&general, 42, 1000, 1, &bounds()).map_err(|e| e.to_string())?;
    let b = conjecture_search(&general, 42, 1000, 8, &bounds()).map_err(|e| e.to_string())?;
    let c = conjecture_search(&general, 42, 1000, 8, &bounds()).map_err(|e| e.to_string())?;
    ensure!(a.graphs_tested == 1000, "tested {}", a.graphs_tested);
    ensure!(a.min_slack.is_some_and(|s| s >= 0), "min slack {:?}", a.min_slack);
    ensure!(a.counterexamples.is_empty(), "{} counterexamples", a.counterexamples.len());
    ensure!(a.to_json() == b.to_json() && b.to_json() == c.to_json(), "general reports differ");
    ensure!(a.to_text() == b.to_text(), "general text reports differ");

    for (n_a, n_b, p, count) in [(12, 12, 0.3, 300), (40, 25, 0.1, 200), (3, 9, 0.5, 300)] {
        let kind = GraphKind::Bipartite { n_a, n_b, p };
        let one = conjecture_search(&kind, 7, count, 1, &bounds()).map_err(|e| e.to_string())?;
        let eight = conjecture_search(&kind, 7, count, 8, &bounds()).map_err(|e| e.to_string())?;
        ensure!(one.to_json() == eight.to_json(), "bipartite {n_a}x{n_b} reports differ");
        ensure!(
            one.slack_histogram.len() == 1 && one.slack_histogram.get(&0) == Some(&count),
            "bipartite {n_a}x{n_b} slack histogram {:?}",
            one.slack_histogram
        );
        ensure!(one.is_clean(), "bipartite {n_a}x{n_b}: {} disagreements", one.disagreements.len());
    }
    Ok(format!("general min slack {}, histogram {:?}", a.min_slack.unwrap(), a.slack_histogram))
}

/// A bipartite graph with a planted perfect matching on `k + k` vertices.
fn perfect_instance(r: &mut ChaCha8Rng) -> (Graph, Bipartition, Matching) {
    let k = r.gen_range(1..=12);
    let p = r.gen_range(0.0..0.5);
    let mut perm: Vec<usize> = (k..2 * k).collect();
    perm.shuffle(r);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|a| (a, perm[a])).collect();
    for a in 0..k {
        for b in k..2 * k {
            if r.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::new(2 * k, edges).unwrap();
    let bp = Bipartition::with_side_a(&g, &VertexSet::new(2 * k, 0..k)).unwrap();
    let m = matching::max_matching(&g, &bp);
    assert!(m.is_perfect());
    (g, bp, m)
}

fn random_independent_subset(g: &Graph, pool: &VertexSet, r: &mut ChaCha8Rng) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    let mut order = pool.to_vec();
    order.shuffle(r);
    for v in order {
        if r.gen_bool(0.5) && g.neighbors(v).iter().all(|&w| !out.contains(w)) {
            out.insert(v);
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    let (mut expansions, mut closures) = (0, 0);
    for instance in 0..1000 {
        let (g, bp, m) = perfect_instance(&mut r);
        let alpha = oracle::oracle_alpha(&g, &bounds()).unwrap();
        let s = match instance % 3 {
            0 => bp.a().clone(),
            1 => bp.b().clone(),
            _ => matching::max_independent_set(&g, &bp),
        };
        let rest = s.complement();

        // One expansion from a singleton, iterated to its fixed point.
        let v = rest.to_vec()[r.gen_range(0..rest.len())];
        let mut x = VertexSet::new(g.n(), [v]);
        loop {
            let next = lemma_expand(&g, &bp, &m, &s, &x).map_err(|e| format!("instance {instance}: {e}"))?;
            expansions += 1;
            ensure!(g.is_independent(&next), "instance {instance}: X¹ = {next} is not independent");
            ensure!(
                g.is_connected_within(&next.union(&m.mates_of(&next))),
                "instance {instance}: G[X¹ ∪ M(X¹)] is disconnected for X¹ = {next}"
            );
            if next == x {
                break;
            }
            x = next;
        }
        let (z, mis) = alternating_closure(&g, &bp, &m, &s, &VertexSet::new(g.n(), [v])).map_err(|e| format!("instance {instance}: {e}"))?;
        ensure!(z == x, "instance {instance}: Z∞ = {z} but iterated expansion gives {x}");

        // A closure from a random independent seed.
        let z0 = random_independent_subset(&g, &rest, &mut r);
        let (_, mis0) = alternating_closure(&g, &bp, &m, &s, &z0).map_err(|e| format!("instance {instance}: {e}"))?;
        for (seed, out) in [(VertexSet::new(g.n(), [v]), mis), (z0, mis0)] {
            closures += 1;
            ensure!(seed.is_subset(&out), "instance {instance}: newMIS {out} misses seed {seed}");
            ensure!(g.is_independent(&out) && out.len() == alpha, "instance {instance}: newMIS {out} ∉ Ω (α = {alpha})");
        }
    }
    Ok(format!("1000 instances, {expansions} expansions, {closures} closures verified"))
}

fn criterion_7() -> Outcome {
    let rows = bench::doubling_table(50_000, 50_000, 10.0, 1, 4, 3).map_err(|e| e.to_string())?;
    let (small, large) = (&rows[0], &rows[3]);
    ensure!(small.n_a == 6250 && large.n_a == 50_000, "unexpected sizes");
    let ratio = large.total_ms / small.total_ms.max(1e-6);
    ensure!(large.total_ms < 10_000.0, "50000 + 50000 took {:.1} ms", large.total_ms);
    ensure!(ratio < 32.0, "t(50000) / t(6250) = {ratio:.2}");
    Ok(format!("{:.1} ms at 50000 + 50000, growth ratio {ratio:.2} over 8× size", large.total_ms))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 fig2 reproduction", criterion_1),
        ("2 exhaustive bipartite battery, n ≤ 7", criterion_2),
        ("3 randomized bipartite battery", criterion_3),
        ("4 non-bipartite fixtures", criterion_4),
        ("5 conjecture search", criterion_5),
        ("6 expansion and closure", criterion_6),
        ("7 performance", criterion_7),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("criterion {name}: PASS ({detail})"),
            Ok(Err(why)) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
            Err(_) => {
                failed += 1;
                println!("criterion {name}: FAIL (panicked)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
