//! Adjacency-list graphs with no vertex cap.
//!
//! Reconfiguration graphs routinely exceed 64 vertices, so they and the
//! predicted constructions they are compared against live here.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::metrics::{self, Metrics};

#[derive(Clone)]
pub struct ListGraph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl ListGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj, labels: None })
    }

    /// Callers guarantee sorted, duplicate-free, symmetric, loop-free lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, l)| {
            l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&(v as u32))
        }));
        Self { adj, labels: None }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&w| w as usize != v).collect())
            .collect();
        Self { adj, labels: None }
    }

    /// `K_{a,b}` with the `a` side first.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let n = a + b;
        let adj = (0..n)
            .map(|v| {
                if v < a {
                    (a as u32..n as u32).collect()
                } else {
                    (0..a as u32).collect()
                }
            })
            .collect();
        Self { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v as usize > u).map(|&v| (u, v as usize)));
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(Vec::is_empty)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        metrics::components(self).len() <= 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn metrics(&self) -> Metrics {
        metrics::compute(self)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        metrics::components(self)
    }

    pub fn diameter(&self) -> Option<usize> {
        metrics::diameter(self)
    }

    pub fn girth(&self) -> Option<usize> {
        metrics::girth(self)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn disjoint_union(&self, other: &ListGraph) -> ListGraph {
        let shift = self.order() as u32;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + shift).collect()));
        ListGraph::from_sorted_adjacency(adj)
    }

    pub fn join(&self, other: &ListGraph) -> ListGraph {
        let (a, b) = (self.order() as u32, other.order() as u32);
        let mut adj: Vec<Vec<u32>> = self
            .adj
            .iter()
            .map(|l| l.iter().copied().chain(a..a + b).collect())
            .collect();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| (0..a).chain(l.iter().map(|&v| v + a)).collect()),
        );
        ListGraph::from_sorted_adjacency(adj)
    }

    /// Cartesian product; `(u, v)` gets index `u * other.order() + v`.
    pub fn cartesian_product(&self, other: &ListGraph) -> ListGraph {
        let b = other.order();
        let mut adj = Vec::with_capacity(self.order() * b);
        for u in 0..self.order() {
            for v in 0..b {
                let mut list: Vec<u32> = self.adj[u]
                    .iter()
                    .map(|&w| (w as usize * b + v) as u32)
                    .chain(other.adj[v].iter().map(|&w| (u * b + w as usize) as u32))
                    .collect();
                list.sort_unstable();
                adj.push(list);
            }
        }
        ListGraph::from_sorted_adjacency(adj)
    }

    /// Induced subgraph on `keep` (in the given order).
    pub fn induced_subgraph(&self, keep: &[usize]) -> ListGraph {
        let mut index = vec![u32::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i as u32;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut l: Vec<u32> = self.adj[v]
                    .iter()
                    .map(|&w| index[w as usize])
                    .filter(|&i| i != u32::MAX)
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        ListGraph::from_sorted_adjacency(adj)
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> ListGraph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (v, list) in self.adj.iter().enumerate() {
            let mut l: Vec<u32> = list.iter().map(|&w| perm[w as usize] as u32).collect();
            l.sort_unstable();
            adj[perm[v]] = l;
        }
        ListGraph::from_sorted_adjacency(adj)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let adj = self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let g = Graph::from_adjacency_unchecked(adj);
        Ok(match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => g,
        })
    }
}

impl PartialEq for ListGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for ListGraph {}

impl fmt::Debug for ListGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ListGraph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl From<&Graph> for ListGraph {
    fn from(g: &Graph) -> Self {
        g.to_list_graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_match_bitmask_graphs() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let lp3 = p3.to_list_graph();
        let lk2 = k2.to_list_graph();
        assert_eq!(
            lp3.cartesian_product(&lk2),
            p3.cartesian_product(&k2).unwrap().to_list_graph()
        );
        assert_eq!(lp3.join(&lk2), p3.join(&k2).unwrap().to_list_graph());
        assert_eq!(
            lp3.disjoint_union(&lk2),
            p3.disjoint_union(&k2).unwrap().to_list_graph()
        );
        assert_eq!(lp3.to_graph().unwrap(), p3);
    }

    #[test]
    fn product_degrees_add() {
        let a = ListGraph::complete(3);
        let b = ListGraph::complete_bipartite(1, 3);
        let p = a.cartesian_product(&b);
        assert_eq!(p.order(), 12);
        for u in 0..3 {
            for v in 0..4 {
                assert_eq!(p.degree(u * 4 + v), a.degree(u) + b.degree(v));
            }
        }
    }

    #[test]
    fn join_edge_count() {
        let a = ListGraph::complete(3);
        let b = ListGraph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(a.join(&b).size(), 3 + 1 + 12);
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(ListGraph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(ListGraph::from_edges(2, &[(0, 2)]).is_err());
        assert_eq!(ListGraph::from_edges(3, &[(0, 1), (1, 0)]).unwrap().size(), 1);
    }

    #[test]
    fn induced_and_permute() {
        let c4 = ListGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.induced_subgraph(&[0, 1, 2]).edges(), vec![(0, 1), (1, 2)]);
        let p = c4.permute(&[1, 2, 3, 0]);
        assert_eq!(p.size(), 4);
        assert!(p.has_edge(1, 2));
        assert!(!p.has_edge(1, 3));
    }
}
