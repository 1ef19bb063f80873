//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine an ordered partition to the
//! coarsest equitable one, then branch on each vertex of the first smallest
//! non-singleton cell. Every discrete leaf yields a relabelled edge list and
//! the largest one is canonical. Automorphisms discovered when two leaves
//! coincide prune the tree in two ways: children lying in one orbit of the
//! automorphisms fixing the current prefix are explored once, and a leaf
//! equivalent to the first or best leaf abandons its branch back to the
//! node where it left that leaf's path.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::formats::graph6_encode_list;
use crate::graph::Graph;
use crate::list_graph::ListGraph;

/// Default order bound for canonical labelling.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// A canonical relabelling of a graph.
///
/// Two graphs are isomorphic exactly when their canonical forms compare
/// equal; the certifying relabelling takes no part in comparisons.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(u32, u32)>,
    labeling: Vec<u32>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges of the canonical graph, `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// `labeling()[v]` is the canonical index of input vertex `v`.
    pub fn labeling(&self) -> &[u32] {
        &self.labeling
    }

    pub fn canonical_graph(&self) -> ListGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u as usize, v as usize)).collect();
        ListGraph::from_edges(self.n, &edges).expect("canonical edges are valid")
    }

    /// graph6 encoding of the canonical graph: the canonical edge bit string.
    pub fn graph6(&self) -> String {
        graph6_encode_list(&self.canonical_graph())
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.edges.len(), &self.edges).cmp(&(other.n, other.edges.len(), &other.edges))
    }
}

/// Ordered partition of `0..n` into contiguous cells of `lab`.
#[derive(Clone)]
struct Partition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell holding each position.
    start_of: Vec<u32>,
    /// Exclusive end of each cell, indexed by its start.
    end: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Self {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            start_of: vec![0; n],
            end: vec![n as u32; n],
            cells: usize::from(n > 0),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First non-singleton cell of least size.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.lab.len() {
            let e = self.end[s] as usize;
            if e - s > 1 && best.is_none_or(|(bs, be)| e - s < be - bs) {
                best = Some((s, e));
            }
            s = e;
        }
        best
    }

    /// Moves `v` to the front of its cell and makes it a singleton.
    /// Returns the start of the new singleton cell.
    fn individualize(&mut self, v: u32) -> u32 {
        let p = self.pos[v as usize] as usize;
        let s = self.start_of[p] as usize;
        let e = self.end[s] as usize;
        let u = self.lab[s];
        self.lab.swap(s, p);
        self.pos[v as usize] = s as u32;
        self.pos[u as usize] = p as u32;
        if e - s > 1 {
            self.end[s] = s as u32 + 1;
            self.end[s + 1] = e as u32;
            for q in s + 1..e {
                self.start_of[q] = s as u32 + 1;
            }
            self.cells += 1;
        }
        s as u32
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// processing splitter cells from `queue`.
    fn refine(&mut self, g: &ListGraph, queue: impl IntoIterator<Item = u32>, scratch: &mut Scratch) {
        let n = self.lab.len();
        let mut queue: VecDeque<u32> = queue.into_iter().collect();
        for &s in &queue {
            scratch.queued[s as usize] = true;
        }
        while let Some(sp) = queue.pop_front() {
            scratch.queued[sp as usize] = false;
            let (sp, ep) = (sp as usize, self.end[sp as usize] as usize);
            scratch.touched.clear();
            for p in sp..ep {
                for &x in g.neighbors(self.lab[p] as usize) {
                    if scratch.count[x as usize] == 0 {
                        scratch.touched.push(x);
                    }
                    scratch.count[x as usize] += 1;
                }
            }
            let mut cells: Vec<u32> = scratch
                .touched
                .iter()
                .map(|&x| self.start_of[self.pos[x as usize] as usize])
                .collect();
            cells.sort_unstable();
            cells.dedup();
            for c in cells {
                let (c, e) = (c as usize, self.end[c as usize] as usize);
                if e - c == 1 {
                    continue;
                }
                let count = &scratch.count;
                self.lab[c..e].sort_unstable_by_key(|&v| count[v as usize]);
                if count[self.lab[c] as usize] == count[self.lab[e - 1] as usize] {
                    continue;
                }
                let mut fragments = Vec::new();
                let mut fs = c;
                for p in c + 1..=e {
                    if p == e || count[self.lab[p] as usize] != count[self.lab[fs] as usize] {
                        fragments.push((fs, p));
                        fs = p;
                    }
                }
                for &(fs, fe) in &fragments {
                    self.end[fs] = fe as u32;
                    for p in fs..fe {
                        self.start_of[p] = fs as u32;
                        self.pos[self.lab[p] as usize] = p as u32;
                    }
                }
                self.cells += fragments.len() - 1;
                if scratch.queued[c] {
                    for &(fs, _) in &fragments[1..] {
                        scratch.queued[fs] = true;
                        queue.push_back(fs as u32);
                    }
                } else {
                    let largest = fragments
                        .iter()
                        .enumerate()
                        .max_by(|a, b| (a.1 .1 - a.1 .0).cmp(&(b.1 .1 - b.1 .0)).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    for (i, &(fs, _)) in fragments.iter().enumerate() {
                        if i != largest {
                            scratch.queued[fs] = true;
                            queue.push_back(fs as u32);
                        }
                    }
                }
            }
            for &x in &scratch.touched {
                scratch.count[x as usize] = 0;
            }
        }
        debug_assert!(scratch.queued.iter().take(n).all(|&q| !q));
    }
}

struct Scratch {
    count: Vec<u32>,
    touched: Vec<u32>,
    queued: Vec<bool>,
}

struct Leaf {
    cert: Vec<(u32, u32)>,
    lab: Vec<u32>,
    pos: Vec<u32>,
    path: Vec<u32>,
}

struct Search<'a> {
    g: &'a ListGraph,
    scratch: Scratch,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u32>>,
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

impl Search<'_> {
    fn certificate(&self, pos: &[u32]) -> Vec<(u32, u32)> {
        let mut cert: Vec<(u32, u32)> = self
            .g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        cert.sort_unstable();
        cert
    }

    /// Orbits of the known automorphisms that fix `prefix` pointwise.
    fn orbits(&self, prefix: &[u32]) -> Vec<u32> {
        let n = self.g.order();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p as usize] != p) {
                continue;
            }
            for (v, &w) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, v as u32), find(&mut parent, w));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        for v in 0..n as u32 {
            let r = find(&mut parent, v);
            parent[v as usize] = r;
        }
        parent
    }

    fn leaf(&mut self, part: &Partition, prefix: &[u32]) -> Option<usize> {
        let cert = self.certificate(&part.pos);
        let automorphism = |other: &Leaf| {
            let mut gen = vec![0u32; part.lab.len()];
            for (p, &v) in other.lab.iter().enumerate() {
                gen[v as usize] = part.lab[p];
            }
            gen
        };
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert,
                lab: part.lab.clone(),
                pos: part.pos.clone(),
                path: prefix.to_vec(),
            };
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
                pos: leaf.pos.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gen = automorphism(first);
            let level = common_prefix(prefix, &first.path);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        match cert.cmp(&best.cert) {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    cert,
                    lab: part.lab.clone(),
                    pos: part.pos.clone(),
                    path: prefix.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let gen = automorphism(best);
                let level = common_prefix(prefix, &best.path);
                self.generators.push(gen);
                Some(level)
            }
            Ordering::Less => None,
        }
    }

    fn descend(&mut self, part: Partition, prefix: &mut Vec<u32>) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(&part, prefix);
        }
        let level = prefix.len();
        let (s, e) = part.target_cell().expect("non-discrete partition has a target");
        let mut children: Vec<u32> = part.lab[s..e].to_vec();
        children.sort_unstable();
        let mut explored: Vec<u32> = Vec::new();
        let mut known = usize::MAX;
        let mut orbit = Vec::new();
        for w in children {
            if !explored.is_empty() {
                if known != self.generators.len() {
                    orbit = self.orbits(prefix);
                    known = self.generators.len();
                }
                if explored.iter().any(|&x| orbit[x as usize] == orbit[w as usize]) {
                    continue;
                }
            }
            let mut child = part.clone();
            let cell = child.individualize(w);
            child.refine(self.g, [cell], &mut self.scratch);
            prefix.push(w);
            let jump = self.descend(child, prefix);
            prefix.pop();
            explored.push(w);
            if let Some(target) = jump {
                if target < level {
                    return jump;
                }
            }
        }
        None
    }
}

pub fn canonical_form(g: &ListGraph) -> Result<CanonicalForm> {
    canonical_form_with(g, DEFAULT_MAX_ORDER)
}

pub fn canonical_form_with(g: &ListGraph, max_order: usize) -> Result<CanonicalForm> {
    let n = g.order();
    if n > max_order {
        return Err(Error::SizeLimit(format!(
            "canonical labelling is limited to {max_order} vertices, graph has {n}"
        )));
    }
    let mut search = Search {
        g,
        scratch: Scratch {
            count: vec![0; n],
            touched: Vec::new(),
            queued: vec![false; n],
        },
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut root = Partition::unit(n);
    if n > 0 {
        root.refine(g, [0], &mut search.scratch);
    }
    search.descend(root, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    Ok(CanonicalForm {
        n,
        edges: best.cert,
        labeling: best.pos,
    })
}

fn degree_sequence(g: &ListGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

pub fn isomorphic(a: &ListGraph, b: &ListGraph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() || degree_sequence(a) != degree_sequence(b) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

impl Graph {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(&self.to_list_graph()).expect("at most 64 vertices")
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        isomorphic(&self.to_list_graph(), &other.to_list_graph()).expect("at most 64 vertices")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> ListGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ListGraph::from_edges(n, &edges).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn c4_is_k22() {
        assert!(isomorphic(&cycle(4), &ListGraph::complete_bipartite(2, 2)).unwrap());
    }

    #[test]
    fn p3_is_not_k3() {
        let p3 = ListGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!isomorphic(&p3, &ListGraph::complete(3)).unwrap());
    }

    #[test]
    fn labeling_reproduces_canonical_graph() {
        let g = ListGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        let perm: Vec<usize> = cf.labeling().iter().map(|&x| x as usize).collect();
        assert_eq!(g.permute(&perm), cf.canonical_graph());
    }

    #[test]
    fn invariant_under_every_relabelling_of_small_graphs() {
        let graphs = [
            ListGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap(),
            cycle(5),
            ListGraph::complete_bipartite(2, 3),
            ListGraph::from_edges(6, &[(0, 1), (2, 3), (4, 5), (0, 2)]).unwrap(),
        ];
        for g in graphs {
            let reference = canonical_form(&g).unwrap();
            for p in permutations(g.order()) {
                assert_eq!(canonical_form(&g.permute(&p)).unwrap(), reference);
            }
        }
    }

    #[test]
    fn distinguishes_cospectral_like_pairs() {
        // C6 versus two triangles: same degree sequence
        let two_triangles =
            ListGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        let k = ListGraph::complete_bipartite(2, 40);
        let cf = canonical_form(&k).unwrap();
        assert_eq!(cf.edges().len(), 80);
        let k5 = ListGraph::complete(5);
        let hamming = k5.cartesian_product(&k5).cartesian_product(&k5);
        let shuffled: Vec<usize> = (0..125).map(|v| (v * 48 + 7) % 125).collect();
        assert!(isomorphic(&hamming, &hamming.permute(&shuffled)).unwrap());
    }

    #[test]
    fn order_limit() {
        let g = ListGraph::empty(10);
        assert!(matches!(canonical_form_with(&g, 9), Err(Error::SizeLimit(_))));
        assert_eq!(canonical_form(&ListGraph::empty(0)).unwrap().order(), 0);
    }
}
