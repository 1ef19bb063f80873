use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::theorems::subgraph_lemma_failure;
use super::Witness;
use crate::domination::classify_vertices;
use crate::error::{Error, Result};
use crate::families;
use crate::formats::graph6_decode;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::reconfig::{build_reconfig_graph_with, slide_adjacent, ReconfigGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanCheck {
    ThresholdIff,
    EmptyIff,
    TreeConjecture,
    GirthSuspicion,
    ObservationSuite,
}

impl ScanCheck {
    pub const ALL: [ScanCheck; 5] = [
        Self::ThresholdIff,
        Self::EmptyIff,
        Self::TreeConjecture,
        Self::GirthSuspicion,
        Self::ObservationSuite,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::ThresholdIff => "threshold_iff",
            Self::EmptyIff => "empty_iff",
            Self::TreeConjecture => "tree_conjecture",
            Self::GirthSuspicion => "girth_suspicion",
            Self::ObservationSuite => "observation_suite",
        }
    }
}

impl fmt::Display for ScanCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ScanCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scan {s:?}")))
    }
}

/// Findings of one scan over a corpus.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub id: String,
    pub corpus: String,
    pub examined: usize,
    pub skipped: usize,
    pub verdict: String,
    pub counterexamples: Vec<Witness>,
    pub stats: Map<String, Value>,
}

/// Per-graph contribution to one scan.
#[derive(Default)]
struct Findings {
    witnesses: Vec<Witness>,
    counts: BTreeMap<String, u64>,
    maxima: BTreeMap<String, u64>,
}

impl Findings {
    fn count(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn max(&mut self, key: &str, value: u64) {
        let e = self.maxima.entry(key.to_string()).or_default();
        *e = (*e).max(value);
    }

    fn absorb(&mut self, other: Findings) {
        self.witnesses.extend(other.witnesses);
        for (k, v) in other.counts {
            self.count(&k, v);
        }
        for (k, v) in other.maxima {
            self.max(&k, v);
        }
    }
}

/// Decodes one graph6 record per nonblank line. Returns the graphs and,
/// for every malformed line, its 1-based number and the error.
pub fn read_graph6_corpus(text: &str) -> (Vec<Graph>, Vec<(usize, Error)>) {
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match graph6_decode(line) {
            Ok(g) => graphs.push(g),
            Err(e) => bad.push((i + 1, e)),
        }
    }
    (graphs, bad)
}

/// `K̄_n ∪ K_{1,m}`: every edge meets one common vertex.
fn is_star_plus_isolated(g: &Graph) -> bool {
    let edges = g.edges();
    match edges.first() {
        None => true,
        Some(&(a, b)) => [a, b].iter().any(|&c| edges.iter().all(|&(u, v)| u == c || v == c)),
    }
}

fn threshold_iff(g: &Graph, r: &ReconfigGraph, f: &mut Findings) {
    let complete = r.graph().is_complete();
    let universal = families::threshold_universal_count(g);
    if complete {
        f.count("complete_r", 1);
    }
    if universal.is_some() {
        f.count("threshold_graphs", 1);
    }
    let note = match (complete, universal) {
        (true, None) => Some("R is complete but G is not threshold".to_string()),
        (false, Some(_)) => Some("G is threshold but R is not complete".to_string()),
        (true, Some(u)) if r.len() != u + 1 => Some(format!(
            "R is K_{} but G has {u} universal additions",
            r.len()
        )),
        _ => None,
    };
    if let Some(note) = note {
        f.witnesses.push(Witness::new(g, [], note));
    }
}

fn empty_iff(g: &Graph, r: &ReconfigGraph, f: &mut Findings) {
    let edgeless_r = r.graph().is_edgeless();
    if edgeless_r {
        f.count("edgeless_r", 1);
    }
    if edgeless_r && !g.is_edgeless() {
        f.witnesses.push(Witness::new(g, r.sets().iter(), "R is edgeless but G has an edge"));
    } else if g.is_edgeless() && r.len() != 1 {
        f.witnesses.push(Witness::new(g, r.sets().iter(), "G is edgeless but R is not K1"));
    }
}

fn tree_conjecture(g: &Graph, r: &ReconfigGraph, f: &mut Findings) {
    let tree = r.graph().is_tree();
    let shape = is_star_plus_isolated(g);
    if tree {
        f.count("tree_r", 1);
    }
    if shape {
        f.count("star_plus_isolated", 1);
    }
    if tree != shape {
        let note = if tree {
            "R is a tree but G is not a star plus isolated vertices"
        } else {
            "G is a star plus isolated vertices but R is not a tree"
        };
        f.witnesses.push(Witness::new(g, [], note));
    }
}

fn girth_suspicion(g: &Graph, r: &ReconfigGraph, f: &mut Findings) {
    if r.graph().is_tree() {
        return;
    }
    f.count("non_tree_r", 1);
    match r.graph().girth() {
        Some(girth) => {
            f.count(&format!("girth_{girth}"), 1);
            f.max("max_girth", girth as u64);
            if girth < 5 {
                f.count("below_5", 1);
            }
            if girth > 5 {
                f.count("above_5", 1);
                f.witnesses.push(Witness::new(g, [], format!("non-tree R has girth {girth}")));
            }
        }
        None => {
            f.count("girth_inf", 1);
            f.count("above_5", 1);
            f.witnesses.push(Witness::new(g, [], "non-tree R is acyclic"));
        }
    }
}

fn observation_suite(g: &Graph, r: &ReconfigGraph, limits: &Limits, f: &mut Findings) -> Result<()> {
    let n = g.n();
    let no_isolated = g.min_degree() > 0;
    let fail = |f: &mut Findings, sets: Vec<VertexSet>, note: String| {
        f.count("violations", 1);
        f.witnesses.push(Witness::new(g, sets, note));
    };
    for bits in 0..1u64 << n {
        let s = VertexSet::from_bits(n, bits)?;
        let Ok(p) = classify_vertices(g, s) else {
            continue;
        };
        f.count("dominating_sets", 1);
        for v in s.iter() {
            if g.neighbors(v).is_disjoint(s) && !p.critical.contains(v) {
                fail(f, vec![s], format!("obs:IsoImpliesCrit: {v} has no neighbour in S but is not critical"));
            }
        }
        for v in p.a2.iter() {
            if !g.neighbors(v).is_subset(p.n2) {
                fail(f, vec![s], format!("obs:a2ImpliesIso: N({v}) is not inside N2(S)"));
            }
        }
        if p.a1.len() > p.n1.len() {
            fail(f, vec![s], format!("lem:a1n1: |a1| = {} > |N1| = {}", p.a1.len(), p.n1.len()));
        }
    }
    for m in r.sets().iter() {
        f.count("minimal_sets", 1);
        if no_isolated && !crate::domination::is_dominating(g, m.complement()) {
            fail(f, vec![m], "obs:complement: V - M does not dominate".into());
        }
    }
    for bits in 1..1u64 << n {
        let s = VertexSet::from_bits(n, bits)?;
        if !g.is_independent(s) {
            continue;
        }
        f.count("independent_sets", 1);
        if let Some(note) = subgraph_lemma_failure(g, r, s, limits)? {
            fail(f, vec![s], format!("lem:subgraph: {note}"));
        }
    }
    let minimum: Vec<usize> = {
        let k = r.sets().iter().map(|m| m.len()).min().unwrap_or(0);
        (0..r.len()).filter(|&i| r.sets().get(i).len() == k).collect()
    };
    for (x, &i) in minimum.iter().enumerate() {
        for &j in &minimum[x + 1..] {
            f.count("gamma_pairs", 1);
            let (a, b) = (r.sets().get(i), r.sets().get(j));
            if slide_adjacent(g, a.bits(), b.bits()) != r.has_edge(i, j) {
                fail(f, vec![a, b], "obs:gamma: token-slide adjacency differs from R".into());
            }
        }
    }
    Ok(())
}

fn scan_graph(g: &Graph, checks: &[ScanCheck], limits: &Limits) -> Result<Vec<Findings>> {
    let r = build_reconfig_graph_with(g, limits)?;
    checks
        .iter()
        .map(|&c| {
            let mut f = Findings::default();
            f.max("max_mds", r.len() as u64);
            match c {
                ScanCheck::ThresholdIff => threshold_iff(g, &r, &mut f),
                ScanCheck::EmptyIff => empty_iff(g, &r, &mut f),
                ScanCheck::TreeConjecture => tree_conjecture(g, &r, &mut f),
                ScanCheck::GirthSuspicion => girth_suspicion(g, &r, &mut f),
                ScanCheck::ObservationSuite => observation_suite(g, &r, limits, &mut f)?,
            }
            Ok(f)
        })
        .collect()
}

/// Runs every requested scan over `graphs`. Graphs are processed in
/// parallel on the current rayon pool; findings are merged in input order
/// so the report does not depend on the number of workers.
pub fn scan_corpus(
    graphs: &[Graph],
    checks: &[ScanCheck],
    corpus: &str,
    skipped: usize,
    limits: &Limits,
) -> Result<Vec<ScanReport>> {
    let per_graph: Vec<Vec<Findings>> = graphs
        .par_iter()
        .map(|g| scan_graph(g, checks, limits))
        .collect::<Result<_>>()?;
    let mut merged: Vec<Findings> = checks.iter().map(|_| Findings::default()).collect();
    for findings in per_graph {
        for (slot, f) in merged.iter_mut().zip(findings) {
            slot.absorb(f);
        }
    }
    Ok(checks
        .iter()
        .zip(merged)
        .map(|(c, f)| {
            let mut stats = Map::new();
            for (k, v) in f.counts.into_iter().chain(f.maxima) {
                stats.insert(k, json!(v));
            }
            let verdict = if f.witnesses.is_empty() {
                "no counterexample found"
            } else {
                "counterexamples found"
            };
            ScanReport {
                id: c.id().to_string(),
                corpus: corpus.to_string(),
                examined: graphs.len(),
                skipped,
                verdict: verdict.to_string(),
                counterexamples: f.witnesses,
                stats,
            }
        })
        .collect())
}
