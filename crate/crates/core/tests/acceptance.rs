//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 10 asks for exactly 10 minimal dominating sets in the prism
//! K3 □ K2. Direct enumeration finds 11 (three matched pairs, six crossing
//! pairs, two triangles), so that clause prints FAIL. The run still
//! succeeds as long as every other clause of 10 holds and the count is the
//! 11 we expect; any other failure makes the run exit nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use domrecon_core::families::{self, enumerate_graphs_upto, FamilySpec, ThresholdStep};
use domrecon_core::verify::{scan_corpus, verify_theorem, ScanCheck, ScanReport, TheoremCheck, Verdict};
use domrecon_core::{
    build_reconfig_graph, enumerate_mds, enumerate_mds_exhaustive, isomorphic, Graph, Limits,
    ListGraph, VertexSet,
};

/// Prism vertex count the enumeration actually produces.
const PRISM_MDS: usize = 11;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn limits() -> Limits {
    Limits::default()
}

fn check(c: TheoremCheck) -> Verdict {
    verify_theorem(&c, &limits()).expect("check runs").verdict
}

fn all_verified(checks: impl IntoIterator<Item = TheoremCheck>) -> (usize, Vec<String>) {
    let mut count = 0;
    let mut bad = Vec::new();
    for c in checks {
        count += 1;
        let params = c.params().to_string();
        let v = check(c);
        if v != Verdict::Verified {
            bad.push(format!("{v:?} {params}"));
        }
    }
    (count, bad)
}

fn generate(spec: FamilySpec) -> Graph {
    spec.generate().expect("family generates")
}

fn random_small(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let seed = rng.gen();
    match rng.gen_range(0..3) {
        0 => generate(FamilySpec::RandomTree { n, seed }),
        1 if n >= 3 => generate(FamilySpec::Cycle(n)),
        _ => generate(FamilySpec::RandomGnp { n, p: rng.gen_range(0.2..0.8), seed }),
    }
}

fn within(start: Instant, budget: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t < budget, format!("{:.2}s of {}s", t.as_secs_f64(), budget.as_secs()))
}

fn corpus() -> Vec<Graph> {
    enumerate_graphs_upto(6).expect("corpus")
}

fn scan(graphs: &[Graph], c: ScanCheck) -> ScanReport {
    scan_corpus(graphs, &[c], "all graphs on at most 6 vertices", 0, &limits())
        .expect("scan runs")
        .remove(0)
}

fn c1() -> Outcome {
    let start = Instant::now();
    let v = check(TheoremCheck::Families(7));
    let (fast, t) = within(start, Duration::from_secs(1));
    outcome(v == Verdict::Verified && fast, format!("{v:?}, {t}"))
}

fn c2() -> Outcome {
    let start = Instant::now();
    let stars = (1..=8).map(|n| TheoremCheck::Kmn(1, n));
    let bip = (2..=4).flat_map(|m| (2..=4).map(move |n| TheoremCheck::Kmn(m, n)));
    let (count, bad) = all_verified(stars.chain(bip));
    let (fast, t) = within(start, Duration::from_secs(5));
    outcome(bad.is_empty() && fast, format!("{count} graphs, failures {bad:?}, {t}"))
}

fn c3(rng: &mut ChaCha8Rng) -> Outcome {
    let pairs: Vec<_> = (0..50)
        .map(|_| TheoremCheck::DisjointUnion(random_small(rng, 6), random_small(rng, 6)))
        .collect();
    let (count, bad) = all_verified(pairs);
    outcome(bad.is_empty(), format!("{count} pairs, failures {bad:?}"))
}

fn without_universal(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let g = random_small(rng, max_n);
        if g.n() >= 2 && !g.has_universal_vertex() {
            return g;
        }
    }
}

fn c4(rng: &mut ChaCha8Rng) -> Outcome {
    let k1: Vec<_> = (0..50).map(|_| TheoremCheck::JoinK1(random_small(rng, 7))).collect();
    let general: Vec<_> = (0..20)
        .map(|_| TheoremCheck::JoinGeneral(without_universal(rng, 5), without_universal(rng, 5)))
        .collect();
    let (a, bad_a) = all_verified(k1);
    let (b, bad_b) = all_verified(general);
    outcome(
        bad_a.is_empty() && bad_b.is_empty(),
        format!("{a} joins with K1, {b} general joins, failures {bad_a:?} {bad_b:?}"),
    )
}

fn c5() -> Outcome {
    let mut lists = Vec::new();
    for len in 2..=3u32 {
        for mask in 0..1u32 << len {
            lists.push((0..len).map(|i| 2 + (mask >> i & 1) as usize).collect::<Vec<_>>());
        }
    }
    lists.push(vec![2, 2, 2, 2]);
    let (count, bad) = all_verified(lists.into_iter().map(TheoremCheck::Multipartite));
    outcome(bad.is_empty(), format!("{count} part lists, failures {bad:?}"))
}

fn c6() -> Outcome {
    let start = Instant::now();
    let v2 = check(TheoremCheck::Rook(2));
    let r2 = build_reconfig_graph(&families::rook(2).unwrap()).unwrap();
    let k24 = isomorphic(r2.graph(), &ListGraph::complete_bipartite(2, 4)).unwrap();
    let v3 = verify_theorem(&TheoremCheck::Rook(3), &limits()).unwrap();
    let order3 = v3.stats["order"].as_u64();
    let (fast, t) = within(start, Duration::from_secs(30));
    outcome(
        v2 == Verdict::Verified && k24 && v3.verdict == Verdict::Verified && order3 == Some(48) && fast,
        format!("n=2 {v2:?} (K_2,4: {k24}), n=3 {:?} on {order3:?} vertices, {t}", v3.verdict),
    )
}

fn c7(graphs: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut seqs = Vec::new();
    for len in 1..=5u32 {
        for mask in 0..1u32 << len {
            seqs.push(TheoremCheck::ThresholdForward(
                (0..len)
                    .map(|i| if mask >> i & 1 == 1 { ThresholdStep::Universal } else { ThresholdStep::Isolated })
                    .collect(),
            ));
        }
    }
    let (count, bad) = all_verified(seqs);
    let report = scan(graphs, ScanCheck::ThresholdIff);
    let (fast, t) = within(start, Duration::from_secs(600));
    outcome(
        bad.is_empty() && report.examined == 208 && report.counterexamples.is_empty() && fast,
        format!(
            "{count} sequences, failures {bad:?}; scan of {} graphs, {} counterexamples; {t}",
            report.examined,
            report.counterexamples.len()
        ),
    )
}

fn c8(graphs: &[Graph]) -> Outcome {
    let report = scan(graphs, ScanCheck::EmptyIff);
    outcome(
        report.examined == 208 && report.counterexamples.is_empty(),
        format!("{} graphs, {} counterexamples", report.examined, report.counterexamples.len()),
    )
}

fn c9(rng: &mut ChaCha8Rng) -> Outcome {
    let trees: Vec<_> = (0..100)
        .map(|_| {
            let n = rng.gen_range(1..=12);
            TheoremCheck::ForestConnected(generate(FamilySpec::RandomTree { n, seed: rng.gen() }))
        })
        .collect();
    let splits: Vec<_> = (0..100)
        .map(|_| {
            let n = rng.gen_range(1..=12);
            let clique = rng.gen_range(0..=n);
            let p = rng.gen_range(0.1..0.9);
            TheoremCheck::SplitConnected(generate(FamilySpec::RandomSplit { n, clique, p, seed: rng.gen() }))
        })
        .collect();
    let (a, bad_a) = all_verified(trees);
    let (b, bad_b) = all_verified(splits);
    outcome(
        bad_a.is_empty() && bad_b.is_empty(),
        format!("{a} trees, {b} split graphs (diameter within 2|I|+1), failures {bad_a:?} {bad_b:?}"),
    )
}

struct PrismFindings {
    order: usize,
    triangles_isolated: bool,
    matching_joins: usize,
    matching_failures: Vec<String>,
}

fn prism_findings(rng: &mut ChaCha8Rng) -> PrismFindings {
    let prism = generate(FamilySpec::Cycle(3)).cartesian_product(&Graph::complete(2).unwrap()).unwrap();
    let r = build_reconfig_graph(&prism).unwrap();
    // Vertex (u, v) of the product has index 2u + v.
    let triangles = [0, 1].map(|v| VertexSet::from_vertices(6, (0..3).map(|u| 2 * u + v)).unwrap());
    let isolated: Vec<VertexSet> = r.graph().isolated_vertices().into_iter().map(|i| r.sets().get(i)).collect();
    let triangles_isolated = isolated.len() == 2 && triangles.iter().all(|t| isolated.contains(t));

    let mut checks = Vec::new();
    while checks.len() < 20 {
        let n = rng.gen_range(3..=6);
        let g = generate(FamilySpec::RandomGnp { n, p: rng.gen_range(0.4..0.9), seed: rng.gen() });
        let h = generate(FamilySpec::RandomGnp { n, p: rng.gen_range(0.2..0.8), seed: rng.gen() });
        if g.min_degree() < 2 || h.min_degree() < 1 {
            continue;
        }
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(rng);
        checks.push(TheoremCheck::MatchingJoin(g, h, sigma));
    }
    let (matching_joins, matching_failures) = all_verified(checks);
    PrismFindings { order: r.len(), triangles_isolated, matching_joins, matching_failures }
}

fn c10(f: &PrismFindings) -> Outcome {
    outcome(
        f.order == 10 && f.triangles_isolated && f.matching_failures.is_empty(),
        format!(
            "R(K3 □ K2) has {} vertices (expected 10), triangle classes are the isolated vertices: {}; \
             {} matching joins, failures {:?}",
            f.order, f.triangles_isolated, f.matching_joins, f.matching_failures
        ),
    )
}

fn c11(rng: &mut ChaCha8Rng) -> Outcome {
    let mut graphs = vec![families::petersen(), generate(FamilySpec::Cycle(5)), generate(FamilySpec::Cycle(7))];
    for _ in 0..50 {
        let n = rng.gen_range(2..=12);
        graphs.push(generate(FamilySpec::RandomTree { n, seed: rng.gen() }));
    }
    let edges: u64 = graphs
        .iter()
        .map(|g| {
            let r = verify_theorem(&TheoremCheck::MaxDegree(g.clone()), &limits()).unwrap();
            r.stats.get("edges_checked").and_then(|v| v.as_u64()).unwrap_or(0)
        })
        .sum();
    let (count, bad) = all_verified(graphs.into_iter().map(TheoremCheck::MaxDegree));
    outcome(bad.is_empty(), format!("{count} graphs, {edges} R-edges checked one by one, failures {bad:?}"))
}

fn c12(graphs: &[Graph]) -> Outcome {
    let report = scan(graphs, ScanCheck::ObservationSuite);
    let stat = |k: &str| report.stats.get(k).and_then(|v| v.as_u64()).unwrap_or(0);
    outcome(
        report.examined == 208 && report.counterexamples.is_empty(),
        format!(
            "{} graphs, {} dominating sets, {} minimal sets, {} independent sets, {} gamma pairs, {} violations",
            report.examined,
            stat("dominating_sets"),
            stat("minimal_sets"),
            stat("independent_sets"),
            stat("gamma_pairs"),
            report.counterexamples.len()
        ),
    )
}

fn c13(graphs: &[Graph], rng: &mut ChaCha8Rng) -> Outcome {
    let mut all: Vec<Graph> = graphs.to_vec();
    for _ in 0..100 {
        all.push(generate(FamilySpec::RandomGnp { n: 12, p: rng.gen_range(0.1..0.9), seed: rng.gen() }));
    }
    let mismatches = all
        .iter()
        .filter(|g| {
            enumerate_mds(g).unwrap().to_vecs() != enumerate_mds_exhaustive(g, &limits()).unwrap().to_vecs()
        })
        .count();
    outcome(mismatches == 0, format!("{} graphs, {mismatches} mismatches", all.len()))
}

fn c14(graphs: &[Graph]) -> Outcome {
    let reports = scan_corpus(
        graphs,
        &[ScanCheck::TreeConjecture, ScanCheck::GirthSuspicion],
        "all graphs on at most 6 vertices",
        0,
        &limits(),
    )
    .expect("scan runs");
    let json = serde_json::to_string(&reports).expect("reports serialise");
    let parsed: serde_json::Value = serde_json::from_str(&json).expect("reports parse");
    let complete = reports.iter().all(|r| r.examined == 208) && parsed.as_array().map(Vec::len) == Some(2);
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{}: {} ({} findings)", r.id, r.verdict, r.counterexamples.len()))
        .collect();
    outcome(complete, summary.join("; "))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let graphs = corpus();
    let prism = prism_findings(&mut rng);
    let results = [
        (1, c1()),
        (2, c2()),
        (3, c3(&mut rng)),
        (4, c4(&mut rng)),
        (5, c5()),
        (6, c6()),
        (7, c7(&graphs)),
        (8, c8(&graphs)),
        (9, c9(&mut rng)),
        (10, c10(&prism)),
        (11, c11(&mut rng)),
        (12, c12(&graphs)),
        (13, c13(&graphs, &mut rng)),
        (14, c14(&graphs)),
    ];
    let mut unexpected = Vec::new();
    for (id, o) in &results {
        println!("{} criterion {id:>2}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        let known = *id == 10
            && prism.order == PRISM_MDS
            && prism.triangles_isolated
            && prism.matching_failures.is_empty();
        if !o.pass && !known {
            unexpected.push(*id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: no unexpected failures");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
