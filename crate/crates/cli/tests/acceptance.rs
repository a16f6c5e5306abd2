//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits non-zero if any failed.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use fsc_core::bundled::{self, BundledModel};
use fsc_core::{
    conn_subgraphs, conn_vertex, conn_vertex_to_subgraph, disjoint_pair, fuzzy_bridges,
    generate_report, oracle_bridges, oracle_conn, strength_summary, strongest_path,
    t_equivalence_classes, ConnSemantics, Error, FuzzyGraph, FuzzySubgraph, Membership,
    OracleBudget, ReportOptions, VertexId,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn m(s: &str) -> Membership {
    s.parse().unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn level(k: u64) -> Membership {
    Membership::from_decimal(k * 5, 2).unwrap()
}

#[derive(Clone, Copy)]
enum Shape {
    Random,
    Tree,
    Complete,
}

/// Seeded random fuzzy graph; memberships are multiples of 0.05.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, shape: Shape) -> FuzzyGraph {
    let sigma: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=20)).collect();
    let cap = |a: usize, b: usize| sigma[a].min(sigma[b]);
    let mut edges = Vec::new();
    match shape {
        Shape::Random => {
            let density = rng.gen_range(0.15..0.85);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((a, b, rng.gen_range(1..=cap(a, b))));
                    }
                }
            }
        }
        Shape::Tree => {
            for child in 1..n {
                let parent = rng.gen_range(0..child);
                edges.push((parent, child, rng.gen_range(1..=cap(parent, child))));
            }
        }
        Shape::Complete => {
            for a in 0..n {
                for b in a + 1..n {
                    edges.push((a, b, cap(a, b)));
                }
            }
        }
    }
    let id = |i: usize| VertexId::new(format!("n{i}")).unwrap();
    FuzzyGraph::build(
        sigma.iter().enumerate().map(|(i, &k)| (id(i), level(k))),
        edges.into_iter().map(|(a, b, k)| (id(a), id(b), level(k))),
    )
    .unwrap()
}

/// A random pair of disjoint, non-empty vertex sets.
fn random_pair(rng: &mut ChaCha8Rng, g: &FuzzyGraph) -> Option<(Vec<String>, Vec<String>)> {
    let mut names: Vec<String> = g.vertices().map(|(n, _)| n.to_string()).collect();
    if names.len() < 2 {
        return None;
    }
    names.shuffle(rng);
    let first = rng.gen_range(1..names.len());
    let second = rng.gen_range(1..=names.len() - first);
    let b = names.split_off(first);
    Some((names, b[..second].to_vec()))
}

fn example_a_to_h() -> Verdict {
    let start = Instant::now();
    let doc = bundled::example_document();
    let h = doc.subgraph("H").map_err(|e| e.to_string())?;
    let c = conn_vertex_to_subgraph(&doc.graph, "a", &h).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(c.value == m("0.9"), || format!("CONN(a,H) = {}", c.value))?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("CONN(a,H) = {} in {elapsed:?}", c.value))
}

fn example_e_to_h() -> Verdict {
    let doc = bundled::example_document();
    let h = doc.subgraph("H").map_err(|e| e.to_string())?;
    let computed = conn_vertex_to_subgraph(&doc.graph, "e", &h)
        .map_err(|e| e.to_string())?
        .value;
    let oracle = ["b", "c", "d"]
        .iter()
        .map(|y| oracle_conn(&doc.graph, "e", y, OracleBudget::default()).map(|c| c.value))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?
        .into_iter()
        .max()
        .unwrap();
    ensure(computed == oracle, || {
        format!("computed {computed}, oracle {oracle}")
    })?;
    ensure(computed != m("0.4"), || "produced the published 0.4".into())?;
    let report = generate_report(&doc, &ReportOptions::default()).map_err(|e| e.to_string())?;
    let listed = report.discrepancies.iter().any(|d| {
        d.claim.starts_with("CONN(e,H)")
            && d.published == "0.4"
            && d.computed == computed.to_string()
    });
    ensure(listed, || "discrepancy missing from report".into())?;
    ensure(
        report
            .to_text()
            .contains("published value 0.4, computed 0.3"),
        || "discrepancy missing from text report".into(),
    )?;
    Ok(format!(
        "CONN(e,H) = {computed} = oracle; published 0.4 flagged"
    ))
}

fn subgraph_pair() -> Verdict {
    let g = bundled::example_graph();
    let (h1, h2) = disjoint_pair(&g, ["a", "d"], ["b", "c"]).map_err(|e| e.to_string())?;
    let c = conn_subgraphs(&g, &h1, &h2, ConnSemantics::PathMaxMin).map_err(|e| e.to_string())?;
    ensure(c.value == m("0.4"), || format!("CONN = {}", c.value))?;
    Ok(format!("CONN(<{{a,d}}>,<{{b,c}}>) = {}", c.value))
}

fn non_transitive() -> Verdict {
    let doc = bundled::non_transitive_document();
    let g = &doc.graph;
    let h: Vec<FuzzySubgraph<'_>> = ["H1", "H2", "H3"]
        .iter()
        .map(|n| doc.subgraph(n))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let conn = |i: usize, j: usize| {
        conn_subgraphs(g, &h[i], &h[j], ConnSemantics::PathMaxMin).map(|c| c.value)
    };
    let values = [conn(0, 1), conn(1, 2), conn(0, 2)]
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    ensure(values == [m("0.25"), m("0.25"), m("0.8")], || {
        format!("values {values:?}")
    })?;
    let p = t_equivalence_classes(g, &h, m("0.25")).map_err(|e| e.to_string())?;
    ensure(!p.is_transitive(), || "non-transitivity not flagged".into())?;
    ensure(p.classes == [vec![0, 1, 2]], || {
        format!("classes {:?}", p.classes)
    })?;
    Ok(format!(
        "0.25 / 0.25 / 0.8; {} violation(s) flagged",
        p.violations.len()
    ))
}

fn chd() -> Verdict {
    let doc = bundled::chd_document();
    let g = &doc.graph;
    let hd = doc.subgraph("H_D").map_err(|e| e.to_string())?;
    let a2 = conn_vertex_to_subgraph(g, "a2", &hd).map_err(|e| e.to_string())?;
    let witness = a2
        .witness
        .as_ref()
        .map(|w| w.to_string())
        .unwrap_or_default();
    ensure(a2.value == m("0.55") && witness == "a2 d4", || {
        format!("CONN(a2,H_D) = {} via {witness}", a2.value)
    })?;
    let s = strength_summary(g).map_err(|e| e.to_string())?;
    ensure(
        (s.r_g, s.d_g, s.kappa_g) == (m("0.3"), m("0.9"), m("0.9")),
        || format!("{s:?}"),
    )?;

    let ha = doc.subgraph("H_A").map_err(|e| e.to_string())?;
    let pair = conn_subgraphs(g, &ha, &hd, ConnSemantics::PathMaxMin)
        .map_err(|e| e.to_string())?
        .value;
    // Thirteen vertices exceed the default budget; the graph is sparse, so
    // full enumeration is still cheap.
    let wide = OracleBudget {
        max_vertices: 13,
        max_paths: 10_000_000,
    };
    let mut oracle = Membership::ZERO;
    for x in ha.vertices() {
        for y in hd.vertices() {
            oracle = oracle.max(oracle_conn(g, x, y, wide).map_err(|e| e.to_string())?.value);
        }
    }
    ensure(pair == oracle && pair == m("0.55"), || {
        format!("pair {pair}, oracle {oracle}")
    })?;
    let report = generate_report(&doc, &ReportOptions::default()).map_err(|e| e.to_string())?;
    let flagged = report.discrepancies.iter().any(|d| {
        d.claim.starts_with("CONN(H_A,H_D)") && d.published == "0.6" && d.computed == "0.55"
    });
    ensure(flagged, || "0.6 claim not flagged".into())?;
    Ok(
        "CONN(a2,H_D) = 0.55 via a2 d4; r=0.3 d=0.9 kappa=0.9; pair 0.55 = oracle; 0.6 flagged"
            .into(),
    )
}

fn bridge_set(list: &[fsc_core::BridgeReport]) -> BTreeSet<(String, String)> {
    list.iter()
        .map(|b| (b.edge.0.to_string(), b.edge.1.to_string()))
        .collect()
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let wide = OracleBudget {
        max_vertices: 13,
        max_paths: 10_000_000,
    };
    let mut graphs: Vec<(String, FuzzyGraph, OracleBudget)> = BundledModel::ALL
        .iter()
        .map(|model| (model.name().to_string(), model.document().graph, wide))
        .collect();
    for i in 0..600 {
        let n = rng.gen_range(1..=8);
        graphs.push((
            format!("random #{i}"),
            random_graph(&mut rng, n, Shape::Random),
            OracleBudget::default(),
        ));
    }
    let mut pairs = 0usize;
    for (label, g, budget) in &graphs {
        let names: Vec<String> = g.vertices().map(|(n, _)| n.to_string()).collect();
        for u in &names {
            for v in &names {
                let fast = conn_vertex(g, u, v).map_err(|e| e.to_string())?;
                let slow = oracle_conn(g, u, v, *budget).map_err(|e| format!("{label}: {e}"))?;
                ensure(fast == slow, || {
                    format!("{label}: CONN({u},{v}) {fast:?} vs oracle {slow:?}")
                })?;
                pairs += 1;
            }
        }
        let fast = fuzzy_bridges(g).map_err(|e| e.to_string())?;
        let slow = oracle_bridges(g, *budget).map_err(|e| format!("{label}: {e}"))?;
        ensure(bridge_set(&fast) == bridge_set(&slow), || {
            format!(
                "{label}: bridges {:?} vs oracle {:?}",
                bridge_set(&fast),
                bridge_set(&slow)
            )
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} graphs ({} random + 3 bundled), {pairs} vertex pairs, bridges equal, {elapsed:?}",
        graphs.len(),
        graphs.len() - 3
    ))
}

/// Counts of evaluated instances per property.
#[derive(Default)]
struct Tally {
    symmetry: usize,
    bounds: usize,
    kappa: usize,
    strongest: usize,
    complete: usize,
    tree: usize,
}

fn theorem_suite() -> Verdict {
    const NEED: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut t = Tally::default();
    let err = |e: Error| e.to_string();
    let mut rounds = 0;
    while [
        t.symmetry,
        t.bounds,
        t.kappa,
        t.strongest,
        t.complete,
        t.tree,
    ]
    .iter()
    .any(|&c| c < NEED)
    {
        rounds += 1;
        ensure(rounds < 100_000, || {
            "could not generate enough instances".into()
        })?;

        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n, Shape::Random);
        if let Some((a, b)) = random_pair(&mut rng, &g) {
            let (h1, h2) = disjoint_pair(&g, &a, &b).map_err(err)?;
            for sem in ConnSemantics::ALL {
                let f = conn_subgraphs(&g, &h1, &h2, sem).map(|c| c.value);
                let r = conn_subgraphs(&g, &h2, &h1, sem).map(|c| c.value);
                ensure(f == r, || {
                    format!("symmetry[{sem}] {f:?} vs {r:?} on {g:?}")
                })?;
            }
            t.symmetry += 1;
            if let Ok(s) = strength_summary(&g) {
                let path = conn_subgraphs(&g, &h1, &h2, ConnSemantics::PathMaxMin).map_err(err)?;
                let xmax =
                    conn_subgraphs(&g, &h1, &h2, ConnSemantics::CrossEdgeMax).map_err(err)?;
                if !path.value.is_zero() {
                    ensure(s.r_g <= path.value && path.value <= s.d_g, || {
                        format!("bounds[path] on {g:?}")
                    })?;
                    if xmax.witness.is_some() {
                        ensure(s.r_g <= xmax.value && xmax.value <= s.d_g, || {
                            format!("bounds[xmax] on {g:?}")
                        })?;
                    }
                    t.bounds += 1;
                }
                ensure(path.value <= s.kappa_g && xmax.value <= s.kappa_g, || {
                    format!("kappa on {g:?}")
                })?;
                t.kappa += 1;
                let p = strongest_path(&g).map_err(err)?;
                ensure(p.strength == s.d_g, || {
                    format!("strongest path {p} on {g:?}")
                })?;
                t.strongest += 1;
            }
        }

        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n, Shape::Complete);
        if let Some((a, b)) = random_pair(&mut rng, &g) {
            let (h1, h2) = disjoint_pair(&g, &a, &b).map_err(err)?;
            let xmin = conn_subgraphs(&g, &h1, &h2, ConnSemantics::CrossEdgeMin)
                .map_err(err)?
                .value;
            let min_sigma = a
                .iter()
                .chain(&b)
                .map(|v| g.sigma(v).unwrap())
                .min()
                .unwrap();
            ensure(xmin == min_sigma, || {
                format!("complete: {xmin} vs {min_sigma} on {g:?}")
            })?;
            t.complete += 1;
        }

        let n = rng.gen_range(2..=12);
        let g = random_graph(&mut rng, n, Shape::Tree);
        if let Some((a, b)) = random_pair(&mut rng, &g) {
            let (h1, h2) = disjoint_pair(&g, &a, &b).map_err(err)?;
            let kappa = strength_summary(&g).map_err(err)?.kappa_g;
            let xmax = conn_subgraphs(&g, &h1, &h2, ConnSemantics::CrossEdgeMax)
                .map_err(err)?
                .value;
            let crosses = g.edges().any(|(u, v, mu)| {
                mu == kappa
                    && ((h1.contains(u) && h2.contains(v)) || (h1.contains(v) && h2.contains(u)))
            });
            ensure((xmax == kappa) == crosses, || {
                format!("tree theorem on {g:?}")
            })?;
            t.tree += 1;
        }
    }
    Ok(format!(
        "symmetry {}, bounds {}, kappa {}, strongest path {}, complete {}, tree {} instances; 0 failures",
        t.symmetry, t.bounds, t.kappa, t.strongest, t.complete, t.tree
    ))
}

fn determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fsc"))
            .args(["chd", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    ensure(first.status.success() && second.status.success(), || {
        "fsc chd failed".into()
    })?;
    ensure(!first.stdout.is_empty(), || "empty output".into())?;
    ensure(first.stdout == second.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", first.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("example CONN(a,H) = 0.9 under 1 s", example_a_to_h),
        (
            "example CONN(e,H) = oracle, discrepancy reported",
            example_e_to_h,
        ),
        ("subgraph pair CONN = 0.4", subgraph_pair),
        ("non-transitive triple and t-classes flag", non_transitive),
        ("CHD reproduction", chd),
        (
            "oracle equivalence on random and bundled graphs",
            oracle_equivalence,
        ),
        ("theorem property suite", theorem_suite),
        ("chd --format json is deterministic", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
