//! The expansion/contraction reconfiguration graph `R(G)` and the
//! token-sliding γ-graph.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::domination::{enumerate_mds_with, is_minimal_dominating, MdsCollection};
use crate::error::{Error, Result};
use crate::formats::graph6_encode;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::list_graph::ListGraph;

/// Adjacency under the expansion/contraction rule, assuming both sets are
/// minimal dominating. One difference must be a single vertex `v` and the
/// other must lie inside `N(v)`.
#[inline]
pub(crate) fn adjacent_unchecked(g: &Graph, m1: u64, m2: u64) -> bool {
    let only1 = m1 & !m2;
    let only2 = m2 & !m1;
    let via = |single: u64, rest: u64| {
        single.count_ones() == 1 && rest & !g.neighbor_mask(single.trailing_zeros() as usize) == 0
    };
    via(only2, only1) || via(only1, only2)
}

/// Token-slide adjacency: swap one vertex for an adjacent one.
#[inline]
pub(crate) fn slide_adjacent(g: &Graph, m1: u64, m2: u64) -> bool {
    let only1 = m1 & !m2;
    let only2 = m2 & !m1;
    only1.count_ones() == 1
        && only2.count_ones() == 1
        && g.has_edge(only1.trailing_zeros() as usize, only2.trailing_zeros() as usize)
}

/// Whether `m1` and `m2` are reconfigurations of each other.
///
/// Both sets must be minimal dominating sets of `g`.
pub fn mds_adjacent(g: &Graph, m1: VertexSet, m2: VertexSet) -> Result<bool> {
    for m in [m1, m2] {
        if !is_minimal_dominating(g, m) {
            return Err(Error::NotMinimal(m.to_vec()));
        }
    }
    Ok(adjacent_unchecked(g, m1.bits(), m2.bits()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReconfigKind {
    /// All minimal dominating sets, expansion/contraction adjacency.
    Full,
    /// Minimum dominating sets, token-sliding adjacency.
    Gamma,
}

/// A reconfiguration graph together with the sets its vertices stand for.
/// Vertex `i` is `sets().get(i)`.
#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    base: Graph,
    sets: MdsCollection,
    edges: ListGraph,
    kind: ReconfigKind,
}

impl ReconfigGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sets(&self) -> &MdsCollection {
        &self.sets
    }

    /// The reconfiguration graph itself.
    pub fn graph(&self) -> &ListGraph {
        &self.edges
    }

    pub fn kind(&self) -> ReconfigKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.has_edge(i, j)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.neighbors(i).iter().map(|&j| self.sets.get(j as usize))
    }

    /// Copy of the graph whose labels are the underlying vertex sets.
    pub fn labeled(&self) -> ListGraph {
        let labels = self.sets.iter().map(|s| s.to_string()).collect();
        self.edges.clone().with_labels(labels)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m = self.edges.metrics();
        json!({
            "base": graph6_encode(&self.base),
            "kind": self.kind,
            "sets": self.sets,
            "edges": self.edges.edges(),
            "components": m.components,
            "diameter": m.diameter,
        })
    }
}

fn pairwise(sets: &MdsCollection, adjacent: impl Fn(u64, u64) -> bool + Sync) -> ListGraph {
    let masks: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    let adj: Vec<Vec<u32>> = (0..masks.len())
        .into_par_iter()
        .map(|i| {
            (0..masks.len())
                .filter(|&j| j != i && adjacent(masks[i], masks[j]))
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    ListGraph::from_sorted_adjacency(adj)
}

/// `R(G)` with default enumeration limits.
pub fn build_reconfig_graph(g: &Graph) -> Result<ReconfigGraph> {
    build_reconfig_graph_with(g, &Limits::default())
}

pub fn build_reconfig_graph_with(g: &Graph, limits: &Limits) -> Result<ReconfigGraph> {
    let sets = enumerate_mds_with(g, limits)?;
    let edges = pairwise(&sets, |a, b| adjacent_unchecked(g, a, b));
    Ok(ReconfigGraph {
        base: g.clone(),
        sets,
        edges,
        kind: ReconfigKind::Full,
    })
}

/// The γ-graph: minimum dominating sets joined by single token slides.
pub fn build_gamma_graph(g: &Graph) -> Result<ReconfigGraph> {
    build_gamma_graph_with(g, &Limits::default())
}

pub fn build_gamma_graph_with(g: &Graph, limits: &Limits) -> Result<ReconfigGraph> {
    let sets = enumerate_mds_with(g, limits)?.minimum();
    let edges = pairwise(&sets, |a, b| slide_adjacent(g, a, b));
    Ok(ReconfigGraph {
        base: g.clone(),
        sets,
        edges,
        kind: ReconfigKind::Gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// The rule read literally: find a witness vertex for expand or contract.
    fn adjacent_by_witness(g: &Graph, m1: VertexSet, m2: VertexSet) -> bool {
        (0..g.n()).any(|v| {
            let single = VertexSet::singleton(g.n(), v).unwrap();
            let expand = m2.difference(m1) == single && m1.difference(m2).is_subset(g.neighbors(v));
            let contract =
                m1.difference(m2) == single && m2.difference(m1).is_subset(g.neighbors(v));
            expand || contract
        })
    }

    #[test]
    fn star_sets_are_adjacent() {
        let s = star(3);
        assert!(mds_adjacent(&s, set(4, &[0]), set(4, &[1, 2, 3])).unwrap());
        assert!(!mds_adjacent(&s, set(4, &[0]), set(4, &[0])).unwrap());
    }

    #[test]
    fn p4_cross_pair_not_adjacent() {
        assert!(!mds_adjacent(&path(4), set(4, &[0, 2]), set(4, &[1, 3])).unwrap());
    }

    #[test]
    fn non_minimal_input_rejected() {
        assert_eq!(
            mds_adjacent(&star(3), set(4, &[0, 1]), set(4, &[0])),
            Err(Error::NotMinimal(vec![0, 1]))
        );
    }

    #[test]
    fn adjacency_matches_witness_search() {
        for g in [path(6), cycle(6), star(4), cycle(5).complement()] {
            let r = build_reconfig_graph(&g).unwrap();
            for i in 0..r.len() {
                for j in 0..r.len() {
                    let (a, b) = (r.sets().get(i), r.sets().get(j));
                    assert_eq!(r.has_edge(i, j), adjacent_by_witness(&g, a, b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn p4_reconfig_is_a_4_cycle() {
        let r = build_reconfig_graph(&path(4)).unwrap();
        // sets: {0,2} {1,2} {0,3} {1,3}
        assert_eq!(r.graph().edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(r.graph().metrics().components.len() == 1);
        assert!((0..4).all(|v| r.graph().degree(v) == 2));
    }

    #[test]
    fn c5_reconfig_is_a_5_cycle() {
        let r = build_reconfig_graph(&cycle(5)).unwrap();
        assert_eq!(r.len(), 5);
        assert!((0..5).all(|v| r.graph().degree(v) == 2));
        assert!(r.graph().is_connected());
    }

    #[test]
    fn prism_reconfig_has_two_isolated_triangle_classes() {
        let prism = Graph::complete(3)
            .unwrap()
            .cartesian_product(&Graph::complete(2).unwrap())
            .unwrap();
        let r = build_reconfig_graph(&prism).unwrap();
        // three matched pairs, six crossing pairs, two triangles
        assert_eq!(r.len(), 11);
        let isolated: Vec<VertexSet> = r
            .graph()
            .isolated_vertices()
            .into_iter()
            .map(|i| r.sets().get(i))
            .collect();
        assert_eq!(isolated, vec![set(6, &[0, 2, 4]), set(6, &[1, 3, 5])]);
    }

    #[test]
    fn gamma_graph_examples() {
        let c5 = build_gamma_graph(&cycle(5)).unwrap();
        assert_eq!(c5.len(), 5);
        assert!((0..5).all(|v| c5.graph().degree(v) == 2));
        let k4 = build_gamma_graph(&Graph::complete(4).unwrap()).unwrap();
        assert!(k4.graph().is_complete());
        assert_eq!(k4.len(), 4);
        let s = build_gamma_graph(&star(3)).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.kind(), ReconfigKind::Gamma);
    }

    #[test]
    fn json_export() {
        let r = build_reconfig_graph(&star(2)).unwrap();
        let v = r.to_json();
        assert_eq!(v["sets"], json!([[0], [1, 2]]));
        assert_eq!(v["edges"], json!([[0, 1]]));
        assert_eq!(v["diameter"], json!(1));
        assert_eq!(v["base"], json!("Bo"));
    }
}
