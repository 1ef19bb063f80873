//! Mechanical checks of the closed-form reconfiguration results, and
//! corpus scans that look for counterexamples to the open conjectures.

mod scan;
mod theorems;

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::families::ThresholdStep;
use crate::formats::graph6_encode;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;

pub use scan::{read_graph6_corpus, scan_corpus, ScanCheck, ScanReport};
pub use theorems::is_canonical_move;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inapplicable,
}

/// A graph and the vertex sets that exhibit a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub sets: Vec<Vec<usize>>,
    pub note: String,
}

impl Witness {
    pub fn new(g: &Graph, sets: impl IntoIterator<Item = VertexSet>, note: impl Into<String>) -> Self {
        Self {
            graph6: graph6_encode(g),
            sets: sets.into_iter().map(VertexSet::to_vec).collect(),
            note: note.into(),
        }
    }
}

/// One named check together with its parameters.
///
/// Checks taking an optional vertex-set argument quantify over every
/// admissible choice when it is `None`.
#[derive(Clone, Debug)]
pub enum TheoremCheck {
    /// Empty and complete graphs up to the given order, and `C_5`.
    Families(usize),
    DisjointUnion(Graph, Graph),
    UnionEmpty(Graph, usize),
    JoinK1(Graph),
    JoinGeneral(Graph, Graph),
    Kmn(usize, usize),
    Multipartite(Vec<usize>),
    Rook(usize),
    ThresholdForward(Vec<ThresholdStep>),
    SubgraphLemma(Graph, Option<VertexSet>),
    GnvEmpty(Graph),
    ForestConnected(Graph),
    TreeLemma(Graph, Option<(VertexSet, usize)>),
    SplitConnected(Graph),
    SplitLemma(Graph, Option<(VertexSet, usize)>),
    MatchingJoin(Graph, Graph, Vec<usize>),
    ProductK2(Graph),
    MaxDegree(Graph),
}

impl TheoremCheck {
    pub const IDS: [&'static str; 18] = [
        "families",
        "disjoint_union",
        "union_empty",
        "join_k1",
        "join_general",
        "kmn",
        "multipartite",
        "rook",
        "threshold_forward",
        "subgraph_lemma",
        "gnv_empty",
        "forest_connected",
        "tree_lemma",
        "split_connected",
        "split_lemma",
        "matching_join",
        "product_k2",
        "maxdegree",
    ];

    pub fn id(&self) -> &'static str {
        let i = match self {
            Self::Families(_) => 0,
            Self::DisjointUnion(..) => 1,
            Self::UnionEmpty(..) => 2,
            Self::JoinK1(_) => 3,
            Self::JoinGeneral(..) => 4,
            Self::Kmn(..) => 5,
            Self::Multipartite(_) => 6,
            Self::Rook(_) => 7,
            Self::ThresholdForward(_) => 8,
            Self::SubgraphLemma(..) => 9,
            Self::GnvEmpty(_) => 10,
            Self::ForestConnected(_) => 11,
            Self::TreeLemma(..) => 12,
            Self::SplitConnected(_) => 13,
            Self::SplitLemma(..) => 14,
            Self::MatchingJoin(..) => 15,
            Self::ProductK2(_) => 16,
            Self::MaxDegree(_) => 17,
        };
        Self::IDS[i]
    }

    pub fn params(&self) -> Value {
        let g6 = graph6_encode;
        let pick = |p: &Option<(VertexSet, usize)>, names: [&str; 2]| match p {
            Some((s, v)) => json!({ names[0]: s.to_vec(), names[1]: v }),
            None => json!({ names[0]: "all", names[1]: "all" }),
        };
        let mut params = match self {
            Self::Families(n) => json!({ "n": n }),
            Self::DisjointUnion(g, h) | Self::JoinGeneral(g, h) => {
                json!({ "g": g6(g), "h": g6(h) })
            }
            Self::UnionEmpty(g, n) => json!({ "g": g6(g), "n": n }),
            Self::JoinK1(g)
            | Self::GnvEmpty(g)
            | Self::ForestConnected(g)
            | Self::SplitConnected(g)
            | Self::ProductK2(g)
            | Self::MaxDegree(g) => json!({ "g": g6(g) }),
            Self::Kmn(m, n) => json!({ "m": m, "n": n }),
            Self::Multipartite(parts) => json!({ "parts": parts }),
            Self::Rook(n) => json!({ "n": n }),
            Self::ThresholdForward(seq) => {
                let s: String = seq
                    .iter()
                    .map(|x| if *x == ThresholdStep::Universal { 'u' } else { 'i' })
                    .collect();
                json!({ "seq": s })
            }
            Self::SubgraphLemma(g, s) => json!({
                "g": g6(g),
                "s": s.map_or(json!("all"), |s| json!(s.to_vec())),
            }),
            Self::TreeLemma(_, p) => pick(p, ["m", "s"]),
            Self::SplitLemma(_, p) => pick(p, ["m", "v"]),
            Self::MatchingJoin(g, h, sigma) => json!({ "g": g6(g), "h": g6(h), "sigma": sigma }),
        };
        if let Self::TreeLemma(g, _) | Self::SplitLemma(g, _) = self {
            params["g"] = json!(g6(g));
        }
        params
    }
}

/// The result of one theorem check.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub id: String,
    pub params: Value,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: Map<String, Value>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    /// JSON form. Timing is left out unless asked for, so that repeated
    /// runs produce identical bytes.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "params": self.params,
            "verdict": self.verdict,
            "stats": self.stats,
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w);
        }
        if timing {
            v["elapsed_ms"] = json!(self.elapsed_ms);
        }
        v
    }
}

/// What a single check found, before timing and identification are added.
pub(crate) struct Outcome {
    verdict: Verdict,
    witness: Option<Witness>,
    stats: Map<String, Value>,
}

impl Outcome {
    fn verified() -> Self {
        Self {
            verdict: Verdict::Verified,
            witness: None,
            stats: Map::new(),
        }
    }

    fn refuted(w: Witness) -> Self {
        Self {
            verdict: Verdict::Refuted,
            witness: Some(w),
            stats: Map::new(),
        }
    }

    fn inapplicable(reason: impl Into<String>) -> Self {
        let mut stats = Map::new();
        stats.insert("reason".into(), json!(reason.into()));
        Self {
            verdict: Verdict::Inapplicable,
            witness: None,
            stats,
        }
    }

    fn from_witness(w: Option<Witness>) -> Self {
        w.map_or_else(Self::verified, Self::refuted)
    }

    fn stat(mut self, key: &str, value: impl Serialize) -> Self {
        self.stats.insert(key.into(), json!(value));
        self
    }
}

/// Runs one check. Size-limit errors from enumeration are passed through.
pub fn verify_theorem(check: &TheoremCheck, limits: &Limits) -> Result<TheoremReport> {
    let start = Instant::now();
    let outcome = theorems::run(check, limits)?;
    Ok(TheoremReport {
        id: check.id().to_string(),
        params: check.params(),
        verdict: outcome.verdict,
        witness: outcome.witness,
        stats: outcome.stats,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{enumerate_graphs_upto, petersen, FamilySpec};

    fn g(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn verdict(check: TheoremCheck) -> Verdict {
        let report = verify_theorem(&check, &Limits::default()).unwrap();
        assert_eq!(report.verdict == Verdict::Refuted, report.witness.is_some());
        report.verdict
    }

    #[test]
    fn spec_examples() {
        let kmn = verify_theorem(&TheoremCheck::Kmn(2, 3), &Limits::default()).unwrap();
        assert_eq!(kmn.verdict, Verdict::Verified);
        assert_eq!(kmn.stats["order"], json!(8));
        let pet = verify_theorem(&TheoremCheck::MaxDegree(petersen()), &Limits::default()).unwrap();
        assert_eq!(pet.verdict, Verdict::Verified);
        assert_eq!(pet.stats["gamma"], json!(3));
        assert!(pet.stats["max_degree"].as_u64().unwrap() <= 7);
        assert_eq!(
            verdict(TheoremCheck::JoinGeneral(g("complete:3"), g("empty:2"))),
            Verdict::Inapplicable
        );
    }

    #[test]
    fn each_check_runs() {
        use TheoremCheck::*;
        let cases = [
            Families(5),
            DisjointUnion(g("path:3"), g("cycle:4")),
            UnionEmpty(g("cycle:5"), 2),
            JoinK1(g("path:4")),
            JoinGeneral(g("empty:2"), g("path:4")),
            Kmn(1, 4),
            Multipartite(vec![2, 2, 3]),
            Rook(2),
            ThresholdForward(vec![ThresholdStep::Isolated, ThresholdStep::Universal, ThresholdStep::Isolated]),
            SubgraphLemma(g("path:6"), None),
            GnvEmpty(g("multi:2,3")),
            GnvEmpty(g("path:4")),
            ForestConnected(g("tree:10:seed=3")),
            TreeLemma(g("tree:9:seed=1"), None),
            SplitConnected(g("split:9,4,0.5:seed=2")),
            SplitLemma(g("split:8,3,0.6:seed=5"), None),
            MatchingJoin(g("cycle:4"), g("path:4"), vec![1, 0, 3, 2]),
            ProductK2(g("cycle:4")),
            MaxDegree(g("cycle:7")),
        ];
        for c in cases {
            assert_eq!(verdict(c.clone()), Verdict::Verified, "{}", c.id());
        }
    }

    #[test]
    fn hypotheses_are_enforced() {
        use TheoremCheck::*;
        for c in [
            Multipartite(vec![1, 3]),
            Rook(1),
            SubgraphLemma(g("path:3"), Some(VertexSet::from_vertices(3, [0, 1]).unwrap())),
            ForestConnected(g("cycle:3")),
            SplitConnected(g("cycle:5")),
            MatchingJoin(g("path:3"), g("path:3"), vec![]),
            ProductK2(g("path:3")),
            MaxDegree(g("cycle:4")),
            TreeLemma(g("cycle:4"), None),
        ] {
            assert_eq!(verdict(c.clone()), Verdict::Inapplicable, "{}", c.id());
        }
    }

    #[test]
    fn explicit_lemma_targets() {
        let t = g("path:5");
        let m = VertexSet::from_vertices(5, [1, 3]).unwrap();
        assert_eq!(verdict(TheoremCheck::TreeLemma(t.clone(), Some((m, 1)))), Verdict::Verified);
        assert_eq!(verdict(TheoremCheck::TreeLemma(t, Some((m, 2)))), Verdict::Inapplicable);
    }

    #[test]
    fn report_json_schema() {
        let report = verify_theorem(&TheoremCheck::Rook(2), &Limits::default()).unwrap();
        let v = report.to_json(false);
        assert_eq!(v["id"], json!("rook"));
        assert_eq!(v["params"], json!({ "n": 2 }));
        assert_eq!(v["verdict"], json!("verified"));
        assert!(v.get("witness").is_none() && v.get("elapsed_ms").is_none());
        assert!(report.to_json(true)["elapsed_ms"].is_u64());
    }

    #[test]
    fn small_corpus_scans() {
        let corpus = enumerate_graphs_upto(5).unwrap();
        let reports = scan_corpus(&corpus, &ScanCheck::ALL, "n<=5", 0, &Limits::default()).unwrap();
        for r in &reports {
            assert_eq!(r.examined, 1 + 2 + 4 + 11 + 34);
            assert!(r.counterexamples.is_empty(), "{}: {:?}", r.id, r.counterexamples);
            assert_eq!(r.verdict, "no counterexample found");
        }
        let empty = scan_corpus(&[g("empty:4")], &[ScanCheck::EmptyIff], "K4 complement", 0, &Limits::default()).unwrap();
        assert!(empty[0].counterexamples.is_empty());
        assert_eq!(empty[0].stats["edgeless_r"], json!(1));
    }

    #[test]
    fn corpus_reader_skips_bad_records() {
        let (graphs, bad) = read_graph6_corpus("DQc\n\nnot graph6 !\nA_\n");
        assert_eq!(graphs.len(), 2);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].0, 3);
    }
}
