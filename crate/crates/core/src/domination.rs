//! Domination predicates, the critical/supported vertex taxonomy, and
//! enumeration of all minimal dominating sets.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, VertexSet, Vertices};
use crate::limits::Limits;

/// Vertices dominated exactly once and at least twice by `s`.
#[inline]
fn coverage(g: &Graph, s: u64) -> (u64, u64) {
    let mut seen = 0u64;
    let mut many = 0u64;
    for v in Vertices(s) {
        let c = g.closed_mask(v);
        many |= seen & c;
        seen |= c;
    }
    (seen & !many, many)
}

#[inline]
fn dominates_mask(g: &Graph, s: u64) -> bool {
    Vertices(s).fold(0u64, |acc, v| acc | g.closed_mask(v)) == full_mask(g.n())
}

#[inline]
pub(crate) fn is_minimal_mask(g: &Graph, s: u64) -> bool {
    let (once, many) = coverage(g, s);
    (once | many) == full_mask(g.n()) && Vertices(s).all(|v| g.closed_mask(v) & once != 0)
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    dominates_mask(g, s.bits())
}

/// `S` dominates and every member is critical.
pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    is_minimal_mask(g, s.bits())
}

/// `a(S)`: members whose removal breaks domination. Requires `S` dominating.
pub fn critical_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    let (once, _) = coverage(g, s.bits());
    let bits = Vertices(s.bits())
        .filter(|&v| g.closed_mask(v) & once != 0)
        .fold(0u64, |acc, v| acc | 1 << v);
    VertexSet::from_bits_unchecked(g.n(), bits)
}

/// Vertices not dominated by `S - {v}`; empty when `v` is supported.
pub fn private_neighbors(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    let others = Vertices(s.bits() & !(1 << v)).fold(0u64, |acc, u| acc | g.closed_mask(u));
    VertexSet::from_bits_unchecked(g.n(), g.closed_mask(v) & !others)
}

/// How a dominating set `S` partitions the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationProfile {
    pub set: VertexSet,
    /// `a(S)`.
    pub critical: VertexSet,
    /// Critical vertices with a private neighbour outside `S`.
    pub a1: VertexSet,
    /// Critical vertices whose only private neighbour is themselves.
    pub a2: VertexSet,
    /// `S - a(S)`.
    pub supported: VertexSet,
    /// Outside `S`, dominated exactly once.
    pub n1: VertexSet,
    /// Outside `S`, dominated at least twice.
    pub n2: VertexSet,
    /// Private neighbours of each critical vertex (may include the vertex itself).
    pub privates: BTreeMap<usize, VertexSet>,
}

pub fn classify_vertices(g: &Graph, s: VertexSet) -> Result<DominationProfile> {
    let n = g.n();
    let (once, many) = coverage(g, s.bits());
    if once | many != full_mask(n) {
        return Err(Error::NotDominating);
    }
    let outside = !s.bits() & full_mask(n);
    let n1 = once & outside;
    let n2 = many & outside;
    let mut critical = 0u64;
    let mut a1 = 0u64;
    let mut privates = BTreeMap::new();
    for v in Vertices(s.bits()) {
        let p = g.closed_mask(v) & once;
        if p != 0 {
            critical |= 1 << v;
            privates.insert(v, VertexSet::from_bits_unchecked(n, p));
            if g.closed_mask(v) & n1 != 0 {
                a1 |= 1 << v;
            }
        }
    }
    let set = |bits| VertexSet::from_bits_unchecked(n, bits);
    Ok(DominationProfile {
        set: s,
        critical: set(critical),
        a1: set(a1),
        a2: set(critical & !a1),
        supported: set(s.bits() & !critical),
        n1: set(n1),
        n2: set(n2),
        privates,
    })
}

/// The minimal dominating sets of a graph in ascending bit-mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsCollection {
    n: usize,
    sets: Vec<VertexSet>,
    index: HashMap<u64, usize>,
}

impl MdsCollection {
    fn from_masks(n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let sets = masks
            .into_iter()
            .map(|m| VertexSet::from_bits_unchecked(n, m))
            .collect();
        Self { n, sets, index }
    }

    /// Host graph order.
    pub fn host_order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn get(&self, i: usize) -> VertexSet {
        self.sets[i]
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.index.get(&s.bits()).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    /// Keeps only the sets of minimum cardinality.
    pub fn minimum(&self) -> MdsCollection {
        let k = self.sets.iter().map(|s| s.len()).min().unwrap_or(0);
        let masks = self
            .sets
            .iter()
            .filter(|s| s.len() == k)
            .map(|s| s.bits())
            .collect();
        MdsCollection::from_masks(self.n, masks)
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.to_vec()).collect()
    }
}

impl Serialize for MdsCollection {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.sets.len()))?;
        for s in &self.sets {
            seq.serialize_element(&s.to_vec())?;
        }
        seq.end()
    }
}

fn check_order(g: &Graph, limits: &Limits) -> Result<()> {
    if g.n() > limits.max_vertices {
        return Err(Error::SizeLimit(format!(
            "enumeration is limited to {} vertices, graph has {}",
            limits.max_vertices,
            g.n()
        )));
    }
    Ok(())
}

fn too_many(limit: usize) -> Error {
    Error::SizeLimit(format!("more than {limit} minimal dominating sets"))
}

/// Depth-first search over include/exclude decisions in vertex order.
///
/// A branch stops as soon as the chosen set dominates, since no proper
/// superset of a dominating set is minimal. It is cut when an undominated
/// vertex has no undecided vertex left in its closed neighbourhood, or when
/// a chosen vertex has lost all of its private neighbours (adding vertices
/// can only shrink private neighbourhoods).
struct PrunedSearch<'a> {
    g: &'a Graph,
    full: u64,
    count: Vec<u8>,
    out: Vec<u64>,
    cap: usize,
}

impl PrunedSearch<'_> {
    fn push_vertex(&mut self, v: usize) {
        for u in Vertices(self.g.closed_mask(v)) {
            self.count[u] += 1;
        }
    }

    fn pop_vertex(&mut self, v: usize) {
        for u in Vertices(self.g.closed_mask(v)) {
            self.count[u] -= 1;
        }
    }

    fn once_and_dominated(&self) -> (u64, u64) {
        let mut once = 0;
        let mut dom = 0;
        for (u, &c) in self.count.iter().enumerate() {
            if c == 1 {
                once |= 1 << u;
            }
            if c >= 1 {
                dom |= 1 << u;
            }
        }
        (once, dom)
    }

    fn run(&mut self, i: usize, chosen: u64) -> Result<()> {
        let g = self.g;
        let (once, dominated) = self.once_and_dominated();
        if Vertices(chosen).any(|v| g.closed_mask(v) & once == 0) {
            return Ok(());
        }
        if dominated == self.full {
            self.out.push(chosen);
            if self.out.len() > self.cap {
                return Err(too_many(self.cap));
            }
            return Ok(());
        }
        let n = g.n();
        if i == n {
            return Ok(());
        }
        let undecided = self.full & !full_mask(i);
        if Vertices(self.full & !dominated).any(|u| g.closed_mask(u) & undecided == 0) {
            return Ok(());
        }
        self.push_vertex(i);
        let r = self.run(i + 1, chosen | 1 << i);
        self.pop_vertex(i);
        r?;
        self.run(i + 1, chosen)
    }
}

/// All minimal dominating sets via pruned search, with default limits.
pub fn enumerate_mds(g: &Graph) -> Result<MdsCollection> {
    enumerate_mds_with(g, &Limits::default())
}

pub fn enumerate_mds_with(g: &Graph, limits: &Limits) -> Result<MdsCollection> {
    check_order(g, limits)?;
    let mut search = PrunedSearch {
        g,
        full: full_mask(g.n()),
        count: vec![0; g.n()],
        out: Vec::new(),
        cap: limits.max_mds,
    };
    search.run(0, 0)?;
    Ok(MdsCollection::from_masks(g.n(), search.out))
}

/// All minimal dominating sets by filtering every one of the `2^n` subsets.
///
/// This is the defining computation; [`enumerate_mds`] must agree with it.
/// The subset range is split across worker threads and the results are
/// merged in mask order.
pub fn enumerate_mds_exhaustive(g: &Graph, limits: &Limits) -> Result<MdsCollection> {
    check_order(g, limits)?;
    let masks: Vec<u64> = (0..1u64 << g.n())
        .into_par_iter()
        .filter(|&m| is_minimal_mask(g, m))
        .collect();
    if masks.len() > limits.max_mds {
        return Err(too_many(limits.max_mds));
    }
    Ok(MdsCollection::from_masks(g.n(), masks))
}

/// Size of a smallest dominating set, by increasing-size subset search.
pub fn domination_number(g: &Graph) -> Result<usize> {
    check_order(g, &Limits::default())?;
    let n = g.n();
    for k in 0..=n {
        if k == 0 {
            if n == 0 {
                return Ok(0);
            }
            continue;
        }
        // Gosper's hack over k-subsets of 0..n
        let mut s: u64 = (1 << k) - 1;
        let limit = 1u64 << n;
        while s < limit {
            if dominates_mask(g, s) {
                return Ok(k);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// The minimum dominating sets: minimal ones of size `γ(G)`.
pub fn minimum_mds(g: &Graph) -> Result<MdsCollection> {
    Ok(enumerate_mds(g)?.minimum())
}
