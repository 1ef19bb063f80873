//! Graph families, the predicted reconfiguration graphs built from them,
//! and small-graph sources for exhaustive scans.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::list_graph::ListGraph;
use crate::reconfig::ReconfigGraph;

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdStep {
    Isolated,
    Universal,
}

/// A named graph, parseable from a short text form such as `kmn:2,3`,
/// `afr:1,1,2`, `threshold:iuu` or `tree:12:seed=7`.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`: centre 0, leaves `1..=n`.
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Rook(usize),
    FoldedRook(usize),
    Afr(Vec<usize>),
    /// The first step stands for the initial `K_1`; its kind is ignored.
    Threshold(Vec<ThresholdStep>),
    /// `G` and `H` of equal order joined by the matching `i ~ n + sigma(i)`.
    /// An empty permutation means the identity.
    MatchingJoin(Box<FamilySpec>, Box<FamilySpec>, Vec<usize>),
    RandomTree { n: usize, seed: u64 },
    RandomSplit { n: usize, clique: usize, p: f64, seed: u64 },
    RandomGnp { n: usize, p: f64, seed: u64 },
    Petersen,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

fn from_edges_labeled(n: usize, edges: &[(usize, usize)], labels: Vec<String>) -> Result<Graph> {
    check_order(n)?;
    Ok(Graph::new(n, edges)?.with_labels(labels))
}

impl FamilySpec {
    /// Whether the spec draws on a random source.
    pub fn is_random(&self) -> bool {
        match self {
            Self::RandomTree { .. } | Self::RandomSplit { .. } | Self::RandomGnp { .. } => true,
            Self::MatchingJoin(g, h, _) => g.is_random() || h.is_random(),
            _ => false,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match self {
            Self::Complete(n) => {
                check_order(*n)?;
                Graph::complete(*n)
            }
            Self::Empty(n) => {
                check_order(*n)?;
                Graph::empty(*n)
            }
            Self::Path(n) => {
                check_order(*n)?;
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::new(*n, &edges)
            }
            Self::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
                }
                check_order(*n)?;
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::new(*n, &edges)
            }
            Self::Star(n) => Self::CompleteMultipartite(vec![1, *n]).generate(),
            Self::CompleteBipartite(a, b) => Self::CompleteMultipartite(vec![*a, *b]).generate(),
            Self::CompleteMultipartite(parts) => complete_multipartite(parts),
            Self::Rook(n) => rook(*n),
            Self::FoldedRook(n) => folded_rook(*n),
            Self::Afr(parts) => afr(parts)?.to_graph(),
            Self::Threshold(seq) => threshold(seq),
            Self::MatchingJoin(g, h, sigma) => matching_join(&g.generate()?, &h.generate()?, sigma),
            Self::RandomTree { n, seed } => random_tree(*n, *seed),
            Self::RandomSplit { n, clique, p, seed } => random_split(*n, *clique, *p, *seed),
            Self::RandomGnp { n, p, seed } => random_gnp(*n, *p, *seed),
            Self::Petersen => Ok(petersen()),
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(invalid("multipartite graph needs at least one part"));
    }
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut part_of = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (k, &size) in parts.iter().enumerate() {
        for i in 0..size {
            part_of.push(k);
            labels.push(format!("{}.{}", k + 1, i + 1));
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    from_edges_labeled(n, &edges, labels)
}

/// `K_n □ K_n`; vertex `(i, j)` has index `(i - 1) * n + (j - 1)`.
pub fn rook(n: usize) -> Result<Graph> {
    check_order(n * n)?;
    let k = Graph::complete(n)?;
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let k = k.with_labels(names);
    k.cartesian_product(&k)
}

/// The rook's graph folded along its diagonal: vertices `(i, j)` with
/// `1 <= j <= i <= n`, adjacent when they share a coordinate.
pub fn folded_rook(n: usize) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    check_order(pairs.len())?;
    let mut edges = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            if i == k || i == l || j == k || j == l {
                edges.push((a, b));
            }
        }
    }
    let labels = pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
    from_edges_labeled(pairs.len(), &edges, labels)
}

/// The altered folded rook's graph on parts of the given sizes.
///
/// Vertices are the part vertices `1..=l` followed by the pairs `(i, j)`,
/// `i > j`, drawn from different parts, in lexicographic order.
pub fn afr(parts: &[usize]) -> Result<ListGraph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid(format!("AFR parts must be positive and nonempty, got {parts:?}")));
    }
    let total: usize = parts.iter().sum();
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    // part_of[i] for 1-based index i
    let mut part_of = vec![usize::MAX];
    for (k, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(k, size));
    }
    let l = parts.len();
    let pairs: Vec<(usize, usize)> = (1..=total)
        .flat_map(|i| (1..i).map(move |j| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j])
        .collect();
    let cell = |(i, j): (usize, usize)| {
        let (a, b) = (part_of[i], part_of[j]);
        (a.min(b), a.max(b))
    };
    let mut edges = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        edges.push((part_of[i], l + p));
        edges.push((part_of[j], l + p));
        for (q, &(k, m)) in pairs.iter().enumerate().skip(p + 1) {
            let share = i == k || i == m || j == k || j == m;
            if share && cell((i, j)) != cell((k, m)) {
                edges.push((l + p, l + q));
            }
        }
    }
    let labels = (1..=l)
        .map(|k| k.to_string())
        .chain(pairs.iter().map(|(i, j)| format!("({i},{j})")))
        .collect();
    Ok(ListGraph::from_edges(l + pairs.len(), &edges)?.with_labels(labels))
}

fn threshold(seq: &[ThresholdStep]) -> Result<Graph> {
    if seq.is_empty() {
        return Err(invalid("threshold sequence must be nonempty"));
    }
    let n = seq.len();
    check_order(n)?;
    let mut edges = Vec::new();
    for (v, step) in seq.iter().enumerate().skip(1) {
        if *step == ThresholdStep::Universal {
            edges.extend((0..v).map(|u| (u, v)));
        }
    }
    Graph::new(n, &edges)
}

/// `G` and `H` of equal order joined by the matching `i ~ n(G) + sigma(i)`;
/// an empty `sigma` is the identity.
pub fn matching_join(g: &Graph, h: &Graph, sigma: &[usize]) -> Result<Graph> {
    let n = g.n();
    if h.n() != n {
        return Err(invalid(format!("matching join needs equal orders, got {n} and {}", h.n())));
    }
    let sigma: Vec<usize> = if sigma.is_empty() { (0..n).collect() } else { sigma.to_vec() };
    let mut seen = vec![false; n];
    if sigma.len() != n || !sigma.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true)) {
        return Err(invalid(format!("{sigma:?} is not a permutation of 0..{n}")));
    }
    check_order(2 * n)?;
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + n, v + n)));
    edges.extend(sigma.iter().enumerate().map(|(i, &s)| (i, n + s)));
    Graph::new(2 * n, &edges)
}

/// Uniform labelled tree decoded from a random Prüfer sequence.
fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    check_order(n)?;
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        return Graph::new(n, &edges);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(invalid(format!("edge probability {p} outside [0, 1]")))
    }
}

/// Clique on `0..clique`, independent set on the rest, cross edges with
/// probability `p`.
fn random_split(n: usize, clique: usize, p: f64, seed: u64) -> Result<Graph> {
    check_order(n)?;
    check_probability(p)?;
    if clique > n {
        return Err(invalid(format!("clique size {clique} exceeds order {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    for u in 0..clique {
        for v in clique..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_order(n)?;
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges).expect("valid edges")
}

fn is_permutation_tuple(t: &[usize]) -> bool {
    let mut seen = 0u64;
    t.iter().all(|&x| {
        let fresh = seen & 1 << x == 0;
        seen |= 1 << x;
        fresh
    })
}

/// The graph the rook's-graph theorem predicts for `R(K_n □ K_n)`: two
/// copies of the `n`-fold product of `K_n`, glued along the tuples that
/// are permutations. Permutation `p` of the second copy is identified with
/// `p^-1` of the first.
///
/// Vertices are all `n^n` tuples of the first copy in lexicographic order,
/// then the non-permutation tuples of the second copy.
pub fn predicted_rook_reconfig(n: usize) -> Result<ListGraph> {
    if n == 0 {
        return Err(invalid("rook prediction needs n >= 1"));
    }
    let count = n
        .checked_pow(n as u32)
        .filter(|&c| c <= 1 << 22)
        .ok_or_else(|| Error::SizeLimit(format!("{n}^{n} tuples")))?;
    let tuple = |mut x: usize| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        t
    };
    let index = |t: &[usize]| t.iter().fold(0, |acc, &d| acc * n + d);
    let perm: Vec<bool> = (0..count).map(|x| is_permutation_tuple(&tuple(x))).collect();
    // A permutation read row by row is the same set as its inverse read
    // column by column, so that is where the copies are glued.
    let inverse = |x: usize| {
        let t = tuple(x);
        let mut inv = vec![0; n];
        for (i, &c) in t.iter().enumerate() {
            inv[c] = i;
        }
        index(&inv)
    };
    let mut second = vec![usize::MAX; count];
    let mut next = count;
    for x in 0..count {
        if !perm[x] {
            second[x] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    let mut place = 1;
    for _ in 0..n {
        for x in 0..count {
            let digit = x / place % n;
            for d in digit + 1..n {
                let y = x + (d - digit) * place;
                edges.push((x, y));
                let (sx, sy) = (
                    if perm[x] { inverse(x) } else { second[x] },
                    if perm[y] { inverse(y) } else { second[y] },
                );
                edges.push((sx, sy));
            }
        }
        place *= n;
    }
    let show = |x: usize| {
        let t: Vec<String> = tuple(x).iter().map(|d| (d + 1).to_string()).collect();
        format!("({})", t.join(","))
    };
    let labels = (0..count)
        .map(|x| if perm[x] { show(x) } else { format!("{}a", show(x)) })
        .chain((0..count).filter(|&x| !perm[x]).map(|x| format!("{}b", show(x))))
        .collect();
    Ok(ListGraph::from_edges(next, &edges)?.with_labels(labels))
}

/// The graph predicted for `R(G ∨ H)` when neither graph has a universal
/// vertex: `R(G)`, `R(H)` and `G □ H`, with `M ~ (u, v)` iff `M` meets
/// `{u, v}`.
///
/// Vertices are `M(G)`, then `M(H)`, then `(u, v)` at `u * n(H) + v`.
pub fn predicted_join_reconfig(
    g: &Graph,
    h: &Graph,
    rg: &ReconfigGraph,
    rh: &ReconfigGraph,
) -> Result<ListGraph> {
    if g.has_universal_vertex() || h.has_universal_vertex() {
        return Err(Error::UniversalVertexPresent);
    }
    let (a, b) = (rg.len(), rh.len());
    let base = a + b;
    let product = g.to_list_graph().cartesian_product(&h.to_list_graph());
    let mut edges: Vec<(usize, usize)> = rg.graph().edges();
    edges.extend(rh.graph().edges().into_iter().map(|(x, y)| (x + a, y + a)));
    edges.extend(product.edges().into_iter().map(|(x, y)| (x + base, y + base)));
    for u in 0..g.n() {
        for v in 0..h.n() {
            let p = base + u * h.n() + v;
            edges.extend((0..a).filter(|&i| rg.sets().get(i).contains(u)).map(|i| (i, p)));
            edges.extend((0..b).filter(|&j| rh.sets().get(j).contains(v)).map(|j| (a + j, p)));
        }
    }
    ListGraph::from_edges(base + g.n() * h.n(), &edges)
}

/// Recovers a creation sequence by peeling isolated and universal vertices.
/// `None` when the graph is not a threshold graph.
pub fn threshold_sequence(g: &Graph) -> Option<Vec<ThresholdStep>> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut alive = g.vertices().bits();
    let mut steps = Vec::with_capacity(n);
    while alive.count_ones() > 1 {
        let live = VertexSet::from_bits(n, alive).expect("in range");
        let degree = |v: usize| (g.neighbor_mask(v) & alive).count_ones() as usize;
        let others = alive.count_ones() as usize - 1;
        let v = live.iter().find(|&v| degree(v) == 0 || degree(v) == others)?;
        steps.push(if degree(v) == 0 {
            ThresholdStep::Isolated
        } else {
            ThresholdStep::Universal
        });
        alive &= !(1 << v);
    }
    steps.push(ThresholdStep::Isolated);
    steps.reverse();
    Some(steps)
}

pub fn is_threshold(g: &Graph) -> bool {
    threshold_sequence(g).is_some()
}

/// Number of vertices added as universal vertices in the creation sequence.
pub fn threshold_universal_count(g: &Graph) -> Option<usize> {
    threshold_sequence(g).map(|s| s.iter().filter(|&&x| x == ThresholdStep::Universal).count())
}

/// A split partition `(clique, independent)` with the clique maximum, found
/// from the degree sequence; `None` when the graph is not split.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n).take_while(|&i| d[i] >= i).count();
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = VertexSet::from_vertices(n, order[..m].iter().copied()).expect("in range");
    let independent = clique.complement();
    debug_assert!(g.is_clique(clique) && g.is_independent(independent));
    Some((clique, independent))
}

/// Non-adjacency is an equivalence relation with at least two classes.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let n = g.n();
    let full = g.vertices().bits();
    let mut classes = 0;
    let mut seen = 0u64;
    for v in 0..n {
        if seen & 1 << v != 0 {
            continue;
        }
        let class = full & !g.neighbor_mask(v);
        if g.vertices().iter().filter(|&u| class & 1 << u != 0).any(|u| full & !g.neighbor_mask(u) != class) {
            return false;
        }
        seen |= class;
        classes += 1;
    }
    classes >= 2
}

/// One representative of every isomorphism class of order exactly `n`,
/// each in canonical labelling, in canonical-form order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit(format!(
            "graph enumeration is limited to order {MAX_ENUMERATION_ORDER}, asked for {n}"
        )));
    }
    let mut level: Vec<CanonicalForm> = vec![Graph::empty(0)?.canonical_form()];
    for k in 1..=n {
        let forms: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|cf| {
                let base = cf.canonical_graph();
                (0u64..1 << (k - 1)).map(move |mask| {
                    let mut edges = base.edges();
                    edges.extend((0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1)));
                    Graph::new(k, &edges).expect("valid").canonical_form()
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = forms.into_iter().collect();
    }
    level
        .iter()
        .map(|cf| cf.canonical_graph().to_graph())
        .collect()
}

/// All graphs of order `1..=n`, grouped by order.
pub fn enumerate_graphs_upto(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k)?);
    }
    Ok(out)
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("expected {what}, got {s:?}")))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| parse_num(x, "a count")).collect()
}

fn parse_seed(s: Option<&str>, spec: &str) -> Result<u64> {
    match s.and_then(|x| x.strip_prefix("seed=")) {
        Some(seed) => parse_num(seed, "a seed"),
        None => Err(invalid(format!("random family {spec:?} needs a trailing :seed=<u64>"))),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "petersen" {
            return Ok(Self::Petersen);
        }
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected <family>:<params>, got {s:?}")))?;
        let one = || parse_num::<usize>(rest, "a count");
        Ok(match name {
            "complete" | "k" => Self::Complete(one()?),
            "empty" => Self::Empty(one()?),
            "path" => Self::Path(one()?),
            "cycle" => Self::Cycle(one()?),
            "star" => Self::Star(one()?),
            "rook" => Self::Rook(one()?),
            "folded" => Self::FoldedRook(one()?),
            "kmn" => match parse_list(rest)?.as_slice() {
                &[m, n] => Self::CompleteBipartite(m, n),
                _ => return Err(invalid(format!("kmn takes two counts, got {rest:?}"))),
            },
            "multi" => Self::CompleteMultipartite(parse_list(rest)?),
            "afr" => Self::Afr(parse_list(rest)?),
            "threshold" => Self::Threshold(
                rest.chars()
                    .map(|c| match c {
                        'i' => Ok(ThresholdStep::Isolated),
                        'u' => Ok(ThresholdStep::Universal),
                        _ => Err(invalid(format!("threshold steps are i or u, got {c:?}"))),
                    })
                    .collect::<Result<_>>()?,
            ),
            "mjoin" => {
                let parts: Vec<&str> = rest.split('/').collect();
                let (g, h, sigma) = match parts.as_slice() {
                    [g, h] => (g, h, Vec::new()),
                    [g, h, sigma] => (g, h, parse_list(sigma)?),
                    _ => return Err(invalid(format!("mjoin takes G/H[/perm], got {rest:?}"))),
                };
                Self::MatchingJoin(Box::new(g.parse()?), Box::new(h.parse()?), sigma)
            }
            "tree" => {
                let (n, seed) = rest.split_once(':').map_or((rest, None), |(a, b)| (a, Some(b)));
                Self::RandomTree {
                    n: parse_num(n, "a count")?,
                    seed: parse_seed(seed, s)?,
                }
            }
            "split" | "gnp" => {
                let (params, seed) =
                    rest.split_once(':').map_or((rest, None), |(a, b)| (a, Some(b)));
                let fields: Vec<&str> = params.split(',').collect();
                let seed = parse_seed(seed, s)?;
                match (name, fields.as_slice()) {
                    ("split", [n, k, p]) => Self::RandomSplit {
                        n: parse_num(n, "a count")?,
                        clique: parse_num(k, "a clique size")?,
                        p: parse_num(p, "a probability")?,
                        seed,
                    },
                    ("gnp", [n, p]) => Self::RandomGnp {
                        n: parse_num(n, "a count")?,
                        p: parse_num(p, "a probability")?,
                        seed,
                    },
                    _ => return Err(invalid(format!("bad parameters for {name}: {params:?}"))),
                }
            }
            _ => return Err(invalid(format!("unknown family {name:?}"))),
        })
    }
}

fn join_counts(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::Empty(n) => write!(f, "empty:{n}"),
            Self::Path(n) => write!(f, "path:{n}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Star(n) => write!(f, "star:{n}"),
            Self::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            Self::CompleteMultipartite(p) => write!(f, "multi:{}", join_counts(p)),
            Self::Rook(n) => write!(f, "rook:{n}"),
            Self::FoldedRook(n) => write!(f, "folded:{n}"),
            Self::Afr(p) => write!(f, "afr:{}", join_counts(p)),
            Self::Threshold(seq) => {
                let s: String = seq
                    .iter()
                    .map(|x| if *x == ThresholdStep::Universal { 'u' } else { 'i' })
                    .collect();
                write!(f, "threshold:{s}")
            }
            Self::MatchingJoin(g, h, sigma) if sigma.is_empty() => write!(f, "mjoin:{g}/{h}"),
            Self::MatchingJoin(g, h, sigma) => write!(f, "mjoin:{g}/{h}/{}", join_counts(sigma)),
            Self::RandomTree { n, seed } => write!(f, "tree:{n}:seed={seed}"),
            Self::RandomSplit { n, clique, p, seed } => write!(f, "split:{n},{clique},{p}:seed={seed}"),
            Self::RandomGnp { n, p, seed } => write!(f, "gnp:{n},{p}:seed={seed}"),
            Self::Petersen => write!(f, "petersen"),
        }
    }
}
