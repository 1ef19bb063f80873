use serde_json::json;

use super::{Outcome, TheoremCheck, Witness};
use crate::canon::isomorphic;
use crate::domination::{classify_vertices, domination_number, enumerate_mds_with, DominationProfile};
use crate::error::Result;
use crate::families::{self, ThresholdStep};
use crate::graph::{full_mask, Graph, VertexSet};
use crate::limits::Limits;
use crate::list_graph::ListGraph;
use crate::reconfig::{adjacent_unchecked, build_reconfig_graph_with, ReconfigGraph};

pub(super) fn run(check: &TheoremCheck, limits: &Limits) -> Result<Outcome> {
    let r = |g: &Graph| build_reconfig_graph_with(g, limits);
    match check {
        TheoremCheck::Families(n) => base_families(*n, limits),
        TheoremCheck::DisjointUnion(g, h) => {
            let u = g.disjoint_union(h)?;
            let predicted = r(g)?.graph().cartesian_product(r(h)?.graph());
            expect_iso(&u, r(&u)?.graph(), &predicted, "R(G ∪ H) differs from R(G) □ R(H)")
        }
        TheoremCheck::UnionEmpty(g, n) => {
            let u = g.disjoint_union(&Graph::empty(*n)?)?;
            expect_iso(&u, r(&u)?.graph(), r(g)?.graph(), "adding isolated vertices changed R")
        }
        TheoremCheck::JoinK1(g) => {
            let u = g.join(&Graph::complete(1)?)?;
            let predicted = r(g)?.graph().join(&ListGraph::complete(1));
            expect_iso(&u, r(&u)?.graph(), &predicted, "R(G ∨ K1) differs from R(G) ∨ K1")
        }
        TheoremCheck::JoinGeneral(g, h) => {
            if g.n() == 0 || h.n() == 0 {
                return Ok(Outcome::inapplicable("empty operand"));
            }
            if g.has_universal_vertex() || h.has_universal_vertex() {
                return Ok(Outcome::inapplicable("an operand has a universal vertex"));
            }
            let (rg, rh) = (r(g)?, r(h)?);
            let predicted = families::predicted_join_reconfig(g, h, &rg, &rh)?;
            let u = g.join(h)?;
            expect_iso(&u, r(&u)?.graph(), &predicted, "R(G ∨ H) differs from the prediction")
        }
        TheoremCheck::Kmn(m, n) => {
            if *m == 0 || *n == 0 {
                return Ok(Outcome::inapplicable("both sides must be nonempty"));
            }
            let g = families::FamilySpec::CompleteBipartite(*m, *n).generate()?;
            let predicted = if m.min(n) == &1 {
                ListGraph::complete(2)
            } else {
                ListGraph::complete_bipartite(2, m * n)
            };
            expect_iso(&g, r(&g)?.graph(), &predicted, "R(K_{m,n}) differs from the prediction")
        }
        TheoremCheck::Multipartite(parts) => {
            if parts.len() < 2 || parts.iter().any(|&p| p < 2) {
                return Ok(Outcome::inapplicable("needs at least two parts, each of size at least 2"));
            }
            let g = families::FamilySpec::CompleteMultipartite(parts.clone()).generate()?;
            let predicted = families::afr(parts)?;
            expect_iso(&g, r(&g)?.graph(), &predicted, "R differs from the altered folded rook")
        }
        TheoremCheck::Rook(n) => rook(*n, limits),
        TheoremCheck::ThresholdForward(seq) => {
            let g = families::FamilySpec::Threshold(seq.clone()).generate()?;
            let universal = seq[1..].iter().filter(|&&s| s == ThresholdStep::Universal).count();
            let rg = r(&g)?;
            Ok(expect_iso(&g, rg.graph(), &ListGraph::complete(universal + 1), "R is not K_r")?
                .stat("r", universal + 1))
        }
        TheoremCheck::SubgraphLemma(g, s) => subgraph_lemma(g, *s, limits),
        TheoremCheck::GnvEmpty(g) => {
            let local = (0..g.n()).all(|v| {
                let (h, _) = g.delete_closed_neighborhood(VertexSet::singleton(g.n(), v).expect("in range"));
                h.is_edgeless()
            });
            let global = g.is_edgeless() || families::is_complete_multipartite(g);
            let w = (local != global).then(|| {
                Witness::new(g, [], format!("every G-N[v] edgeless: {local}, edgeless or complete multipartite: {global}"))
            });
            Ok(Outcome::from_witness(w).stat("holds_locally", local))
        }
        TheoremCheck::ForestConnected(g) => {
            if !g.is_forest() {
                return Ok(Outcome::inapplicable("not a forest"));
            }
            let rg = r(g)?;
            let components = rg.graph().components().len();
            let w = (components != 1).then(|| Witness::new(g, [], "R is disconnected"));
            Ok(Outcome::from_witness(w)
                .stat("mds", rg.len())
                .stat("components", components))
        }
        TheoremCheck::TreeLemma(g, target) => tree_lemma(g, *target, limits),
        TheoremCheck::SplitConnected(g) => {
            let Some((_, independent)) = families::split_partition(g) else {
                return Ok(Outcome::inapplicable("not a split graph"));
            };
            let rg = r(g)?;
            let diameter = rg.graph().diameter();
            let bound = 2 * independent.len() + 1;
            let w = match diameter {
                None => Some(Witness::new(g, [independent], "R is disconnected")),
                Some(d) if d > bound => Some(Witness::new(
                    g,
                    [independent],
                    format!("diameter {d} exceeds 2|I|+1 = {bound}"),
                )),
                Some(_) => None,
            };
            Ok(Outcome::from_witness(w)
                .stat("mds", rg.len())
                .stat("diameter", diameter)
                .stat("bound", bound))
        }
        TheoremCheck::SplitLemma(g, target) => split_lemma(g, *target, limits),
        TheoremCheck::MatchingJoin(g, h, sigma) => {
            if g.n() != h.n() {
                return Ok(Outcome::inapplicable("orders differ"));
            }
            if g.n() == 0 || g.min_degree() < 2 || h.min_degree() < 1 {
                return Ok(Outcome::inapplicable("needs min degree at least 2 in G and 1 in H"));
            }
            let m = families::matching_join(g, h, sigma)?;
            let rm = r(&m)?;
            let side = VertexSet::from_bits(m.n(), full_mask(g.n()))?;
            let w = match rm.sets().index_of(side) {
                None => Some(Witness::new(&m, [side], "V(G) is not a minimal dominating set")),
                Some(i) if rm.graph().degree(i) != 0 => {
                    Some(Witness::new(&m, [side], "V(G) is not isolated in R"))
                }
                Some(_) => None,
            };
            Ok(Outcome::from_witness(w).stat("mds", rm.len()))
        }
        TheoremCheck::ProductK2(g) => {
            if g.n() == 0 || g.min_degree() < 2 {
                return Ok(Outcome::inapplicable("needs min degree at least 2"));
            }
            let p = g.cartesian_product(&Graph::complete(2)?)?;
            let rp = r(&p)?;
            let components = rp.graph().components().len();
            let w = (components < 2).then(|| Witness::new(&p, [], "R(G □ K2) is connected"));
            Ok(Outcome::from_witness(w)
                .stat("mds", rp.len())
                .stat("components", components))
        }
        TheoremCheck::MaxDegree(g) => max_degree(g, limits),
    }
}

fn expect_iso(base: &Graph, got: &ListGraph, want: &ListGraph, note: &str) -> Result<Outcome> {
    let w = (!isomorphic(got, want)?).then(|| Witness::new(base, [], note));
    Ok(Outcome::from_witness(w)
        .stat("order", got.order())
        .stat("size", got.size()))
}

fn base_families(n: usize, limits: &Limits) -> Result<Outcome> {
    let mut checked = 0;
    for k in 1..=n {
        let empty = Graph::empty(k)?;
        let complete = Graph::complete(k)?;
        for (g, want, note) in [
            (empty, ListGraph::complete(1), format!("R(empty {k}) is not K1")),
            (complete, ListGraph::complete(k), format!("R(K{k}) is not K{k}")),
        ] {
            let rg = build_reconfig_graph_with(&g, limits)?;
            if !isomorphic(rg.graph(), &want)? {
                return Ok(Outcome::refuted(Witness::new(&g, [], note)));
            }
            checked += 1;
        }
    }
    let c5 = families::FamilySpec::Cycle(5).generate()?;
    let want = c5.to_list_graph();
    if !isomorphic(build_reconfig_graph_with(&c5, limits)?.graph(), &want)? {
        return Ok(Outcome::refuted(Witness::new(&c5, [], "R(C5) is not C5")));
    }
    Ok(Outcome::verified().stat("graphs", checked + 1))
}

fn rook(n: usize, limits: &Limits) -> Result<Outcome> {
    if n == 0 {
        return Ok(Outcome::inapplicable("n must be positive"));
    }
    if n == 1 {
        // Every tuple is a permutation, so the two copies coincide.
        let g = families::rook(1)?;
        let matches = build_reconfig_graph_with(&g, limits)?.len() == 1;
        return Ok(Outcome::inapplicable("degenerate: both copies collapse to one vertex")
            .stat("r_is_k1", matches));
    }
    let g = families::rook(n)?;
    let predicted = families::predicted_rook_reconfig(n)?;
    expect_iso(&g, build_reconfig_graph_with(&g, limits)?.graph(), &predicted, "R differs from the glued double product")
}

/// Checks the independent-set lemma for one `S`: the sets containing `S`
/// and avoiding `N(S)` are exactly the lifts `M ∪ S` of the minimal
/// dominating sets of `G - N[S]`, and lifting preserves adjacency.
/// Returns a description of the first failure.
pub(crate) fn subgraph_lemma_failure(
    g: &Graph,
    rg: &ReconfigGraph,
    s: VertexSet,
    limits: &Limits,
) -> Result<Option<String>> {
    let (h, map) = g.delete_closed_neighborhood(s);
    let old: Vec<usize> = (0..g.n()).filter(|&v| map[v].is_some()).collect();
    let rh = build_reconfig_graph_with(&h, limits)?;
    let lift = |m: VertexSet| m.iter().fold(s.bits(), |acc, v| acc | 1 << old[v]);
    let outside = g.open_neighborhood(s);
    let mut expected: Vec<u64> = rg
        .sets()
        .iter()
        .filter(|m| s.is_subset(*m) && m.is_disjoint(outside))
        .map(VertexSet::bits)
        .collect();
    let mut lifted: Vec<u64> = rh.sets().iter().map(lift).collect();
    expected.sort_unstable();
    lifted.sort_unstable();
    if expected != lifted {
        return Ok(Some(format!(
            "{} sets contain S and avoid N(S), but G-N[S] has {} minimal dominating sets",
            expected.len(),
            lifted.len()
        )));
    }
    let index: Vec<usize> = rh
        .sets()
        .iter()
        .map(|m| rg.sets().index_of(VertexSet::from_bits(g.n(), lift(m)).expect("in range")).expect("present"))
        .collect();
    for a in 0..rh.len() {
        for b in a + 1..rh.len() {
            if rh.has_edge(a, b) != rg.has_edge(index[a], index[b]) {
                return Ok(Some(format!(
                    "lifting {} and {} changes adjacency",
                    rh.sets().get(a),
                    rh.sets().get(b)
                )));
            }
        }
    }
    let induced = rg.graph().induced_subgraph(&index);
    if !isomorphic(&induced, rh.graph())? {
        return Ok(Some("induced subgraph is not isomorphic to R(G-N[S])".into()));
    }
    Ok(None)
}

fn subgraph_lemma(g: &Graph, s: Option<VertexSet>, limits: &Limits) -> Result<Outcome> {
    let rg = build_reconfig_graph_with(g, limits)?;
    let candidates: Vec<VertexSet> = match s {
        Some(s) if !g.is_independent(s) => return Ok(Outcome::inapplicable("S is not independent")),
        Some(s) => vec![s],
        None => (1..1u64 << g.n())
            .map(|b| VertexSet::from_bits(g.n(), b).expect("in range"))
            .filter(|&s| g.is_independent(s))
            .collect(),
    };
    for &s in &candidates {
        if let Some(note) = subgraph_lemma_failure(g, &rg, s, limits)? {
            return Ok(Outcome::refuted(Witness::new(g, [s], note)));
        }
    }
    Ok(Outcome::verified().stat("independent_sets", candidates.len()))
}

fn leaves_of(g: &Graph, s: usize) -> VertexSet {
    let bits = g.neighbors(s).iter().filter(|&u| g.degree(u) == 1).fold(0u64, |acc, u| acc | 1 << u);
    VertexSet::from_bits(g.n(), bits).expect("in range")
}

fn tree_lemma(g: &Graph, target: Option<(VertexSet, usize)>, limits: &Limits) -> Result<Outcome> {
    if !g.is_tree() {
        return Ok(Outcome::inapplicable("not a tree"));
    }
    let precondition = |m: VertexSet, s: usize| -> Result<bool> {
        if !m.contains(s) || leaves_of(g, s).is_empty() {
            return Ok(false);
        }
        let p = classify_vertices(g, m)?;
        Ok(g.neighbors(s).iter().all(|u| g.degree(u) == 1 || !p.n1.contains(u)))
    };
    let cases: Vec<(VertexSet, usize)> = match target {
        Some((m, s)) => {
            if s >= g.n() || !crate::domination::is_minimal_dominating(g, m) || !precondition(m, s)? {
                return Ok(Outcome::inapplicable("M, s do not meet the lemma's hypotheses"));
            }
            vec![(m, s)]
        }
        None => {
            let mut out = Vec::new();
            for m in enumerate_mds_with(g, limits)?.iter() {
                for s in m.iter() {
                    if precondition(m, s)? {
                        out.push((m, s));
                    }
                }
            }
            out
        }
    };
    if cases.is_empty() {
        return Ok(Outcome::inapplicable("no minimal dominating set contains a qualifying stem"));
    }
    for &(m, s) in &cases {
        let mut next = m.union(leaves_of(g, s));
        next.remove(s);
        let minimal = crate::domination::is_minimal_dominating(g, next);
        if !minimal || !adjacent_unchecked(g, m.bits(), next.bits()) {
            return Ok(Outcome::refuted(Witness::new(
                g,
                [m, next],
                format!("expanding stem {s} does not give an adjacent minimal dominating set"),
            )));
        }
    }
    Ok(Outcome::verified().stat("cases", cases.len()))
}

fn split_lemma(g: &Graph, target: Option<(VertexSet, usize)>, limits: &Limits) -> Result<Outcome> {
    let Some((clique, _)) = families::split_partition(g) else {
        return Ok(Outcome::inapplicable("not a split graph"));
    };
    let external = |m: VertexSet, v: usize| {
        let p = crate::domination::private_neighbors(g, m, v);
        p.difference(m)
    };
    let admissible = |m: VertexSet, v: usize| clique.contains(v) && m.contains(v) && !external(m, v).is_empty();
    let cases: Vec<(VertexSet, usize)> = match target {
        Some((m, v)) => {
            if v >= g.n() || !crate::domination::is_minimal_dominating(g, m) || !admissible(m, v) {
                return Ok(Outcome::inapplicable(
                    "needs a minimal dominating M and a clique vertex v in M with an external private neighbour",
                ));
            }
            vec![(m, v)]
        }
        None => enumerate_mds_with(g, limits)?
            .iter()
            .flat_map(|m| m.iter().filter(move |&v| admissible(m, v)).map(move |v| (m, v)))
            .collect(),
    };
    if cases.is_empty() {
        return Ok(Outcome::inapplicable("no clique vertex of a minimal dominating set has an external private neighbour"));
    }
    let mut replacements = 0;
    for &(m, v) in &cases {
        let (gv, old) = g.induced_subgraph(external(m, v));
        for mv in enumerate_mds_with(&gv, limits)?.iter() {
            let lifted = mv.iter().fold(0u64, |acc, u| acc | 1 << old[u]);
            let next = VertexSet::from_bits(g.n(), (m.bits() | lifted) & !(1 << v))?;
            replacements += 1;
            if !crate::domination::is_minimal_dominating(g, next) || !adjacent_unchecked(g, m.bits(), next.bits()) {
                return Ok(Outcome::refuted(Witness::new(
                    g,
                    [m, next],
                    format!("replacing {v} by a minimal dominating set of its external private neighbours fails"),
                )));
            }
        }
    }
    Ok(Outcome::verified()
        .stat("cases", cases.len())
        .stat("replacements", replacements)
        .stat("clique", clique.to_vec()))
}

/// Whether the move from `m` to `other` is one of the two kinds allowed
/// when the girth is at least 5: expanding `v ∈ a1(M)` into exactly its
/// private neighbours other than itself, or contracting `v ∈ N2(M)` with
/// exactly `N(v) ∩ a2(M)` removed.
pub fn is_canonical_move(g: &Graph, profile: &DominationProfile, other: VertexSet) -> bool {
    let m = profile.set;
    let added = other.difference(m);
    let removed = m.difference(other);
    let expansion = removed.len() == 1 && {
        let v = removed.first().expect("one vertex");
        let mut p = profile.privates.get(&v).copied().unwrap_or(VertexSet::empty(g.n()));
        p.remove(v);
        profile.a1.contains(v) && added == p
    };
    let contraction = added.len() == 1 && {
        let v = added.first().expect("one vertex");
        profile.n2.contains(v) && removed == g.neighbors(v).intersection(profile.a2)
    };
    expansion || contraction
}

fn max_degree(g: &Graph, limits: &Limits) -> Result<Outcome> {
    if g.metrics().girth.is_some_and(|girth| girth < 5) {
        return Ok(Outcome::inapplicable("girth below 5"));
    }
    let rg = build_reconfig_graph_with(g, limits)?;
    let n = g.n();
    let gamma = domination_number(g)?;
    let delta = rg.graph().max_degree();
    for (i, m) in rg.sets().iter().enumerate() {
        let p = classify_vertices(g, m)?;
        let degree = rg.graph().degree(i);
        if degree > p.a1.len() + p.n2.len() || degree > n - m.len() {
            return Ok(Outcome::refuted(Witness::new(
                g,
                [m],
                format!("degree {degree} exceeds |a1|+|N2| = {}", p.a1.len() + p.n2.len()),
            )));
        }
        for other in rg.neighbors(i) {
            if !is_canonical_move(g, &p, other) {
                return Ok(Outcome::refuted(Witness::new(
                    g,
                    [m, other],
                    "edge is neither a private-neighbour expansion of a1 nor an a2-contraction of N2",
                )));
            }
        }
    }
    let w = (delta > n - gamma).then(|| Witness::new(g, [], format!("max degree {delta} exceeds n - gamma = {}", n - gamma)));
    Ok(Outcome::from_witness(w)
        .stat("n", n)
        .stat("gamma", gamma)
        .stat("max_degree", delta)
        .stat("edges_checked", rg.graph().size())
        .stat("mds", json!(rg.len())))
}
