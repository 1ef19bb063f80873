//! Small simple graphs stored as one neighbour bit mask per vertex.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::list_graph::ListGraph;
use crate::metrics::Metrics;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices of a host graph on `n` vertices.
///
/// Equality, ordering and hashing look at the bit mask only.
#[derive(Clone, Copy, Default)]
pub struct VertexSet {
    bits: u64,
    n: u8,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        Self { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        Self {
            bits: full_mask(n),
            n: n as u8,
        }
    }

    /// Builds a set from a raw mask; bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if bits & !full_mask(n) != 0 {
            let vertex = 63 - bits.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Self { bits, n: n as u8 })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Self { bits, n: n as u8 }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut bits = 0u64;
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << v;
        }
        Ok(Self { bits, n: n as u8 })
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::from_vertices(n, [v])
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Vertex count of the host graph.
    #[inline]
    pub fn host_order(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.host_order());
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.bits &= !(1 << v);
        }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        Self {
            bits: self.bits | other.bits,
            n: self.n.max(other.n),
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        Self {
            bits: self.bits & other.bits,
            n: self.n.max(other.n),
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        Self {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    /// `V - self` within the host graph.
    #[inline]
    pub fn complement(self) -> Self {
        Self {
            bits: !self.bits & full_mask(self.n as usize),
            n: self.n,
        }
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// The smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Vertices {
        Vertices(self.bits)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for VertexSet {}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`] in ascending order.
#[derive(Clone, Debug)]
pub struct Vertices(pub(crate) u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

/// An undirected simple graph on vertices `0..n` with `n <= 64`.
///
/// Graphs are immutable once built. Optional per-vertex labels record how a
/// vertex was constructed; they are ignored by equality and hashing.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self { adj, labels: None })
    }

    /// Builds a graph from neighbour masks, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = full_mask(n);
        for (v, &mask) in adj.iter().enumerate() {
            if mask >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            if mask & !full != 0 {
                let vertex = 63 - mask.leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            for u in Vertices(mask) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Parse(format!("asymmetric adjacency between {v} and {u}")));
                }
            }
        }
        Ok(Self { adj, labels: None })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        Self { adj, labels: None }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self {
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = full_mask(n);
        Ok(Self {
            adj: (0..n).map(|v| full & !(1 << v)).collect(),
            labels: None,
        })
    }

    /// Attaches display labels; `labels.len()` must equal the vertex count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn closed_mask(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.n(), self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.n(), self.closed_mask(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in Vertices(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        let bits = s.iter().fold(0u64, |acc, v| acc | self.closed_mask(v));
        VertexSet::from_bits_unchecked(self.n(), bits)
    }

    /// `N(S)`: vertices adjacent to some member of `S`, which may include members of `S`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        let bits = s.iter().fold(0u64, |acc, v| acc | self.adj[v]);
        VertexSet::from_bits_unchecked(self.n(), bits)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.bits() & !(1 << v) & !self.adj[v] == 0)
    }

    pub fn has_universal_vertex(&self) -> bool {
        let n = self.n();
        (0..n).any(|v| self.degree(v) + 1 == n)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&m| m == 0)
    }

    /// Induced subgraph on `keep`, with vertices renumbered in ascending order.
    /// Returns the subgraph and, for each new vertex, its old index.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let adj = old
            .iter()
            .map(|&u| {
                old.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(u, w))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let mut g = Graph::from_adjacency_unchecked(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(old.iter().map(|&u| labels[u].clone()).collect());
        }
        (g, old)
    }

    /// `G - N[S]`, with the order-preserving map from old to new indices
    /// (`None` for deleted vertices).
    pub fn delete_closed_neighborhood(&self, s: VertexSet) -> (Graph, Vec<Option<usize>>) {
        let removed = self.closed_neighborhood(s);
        let (h, old) = self.induced_subgraph(removed.complement());
        let mut map = vec![None; self.n()];
        for (new, &o) in old.iter().enumerate() {
            map[o] = Some(new);
        }
        (h, map)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), other.n());
        if a + b > MAX_VERTICES {
            return Err(Error::TooManyVertices(a + b));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << a));
        let mut g = Graph::from_adjacency_unchecked(adj);
        g.labels = merged_labels(self, other);
        Ok(g)
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), other.n());
        if a + b > MAX_VERTICES {
            return Err(Error::TooManyVertices(a + b));
        }
        let left = full_mask(a);
        let right = full_mask(b) << a;
        let mut adj: Vec<u64> = self.adj.iter().map(|&m| m | right).collect();
        adj.extend(other.adj.iter().map(|&m| (m << a) | left));
        let mut g = Graph::from_adjacency_unchecked(adj);
        g.labels = merged_labels(self, other);
        Ok(g)
    }

    /// Cartesian product; vertex `(u, v)` gets index `u * other.n() + v`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), other.n());
        if a * b > MAX_VERTICES {
            return Err(Error::TooManyVertices(a * b));
        }
        let mut adj = vec![0u64; a * b];
        for u in 0..a {
            for v in 0..b {
                let mut mask = other.adj[v] << (u * b);
                for w in self.neighbors(u) {
                    mask |= 1 << (w * b + v);
                }
                adj[u * b + v] = mask;
            }
        }
        let labels = (0..a)
            .flat_map(|u| (0..b).map(move |v| (u, v)))
            .map(|(u, v)| format!("({},{})", self.label(u), other.label(v)))
            .collect();
        Ok(Graph::from_adjacency_unchecked(adj).with_labels(labels))
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n());
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &m)| !m & full & !(1 << v))
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![0u64; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn to_list_graph(&self) -> ListGraph {
        let adj = self
            .adj
            .iter()
            .map(|&m| Vertices(m).map(|v| v as u32).collect())
            .collect();
        let g = ListGraph::from_sorted_adjacency(adj);
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => g,
        }
    }

    pub fn metrics(&self) -> Metrics {
        self.to_list_graph().metrics()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = Vertices(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_mask(n)
    }

    /// True when the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        let components = self.metrics().components.len();
        self.edge_count() + components == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.edge_count() + 1 == self.n()
    }
}

fn merged_labels(a: &Graph, b: &Graph) -> Option<Vec<String>> {
    if a.labels.is_none() && b.labels.is_none() {
        return None;
    }
    let n = a.n();
    Some(
        (0..n)
            .map(|v| a.label(v))
            .chain((0..b.n()).map(|v| match &b.labels {
                Some(l) => l[v].clone(),
                None => (v + n).to_string(),
            }))
            .collect(),
    )
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.adj.hash(state)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
