use std::collections::VecDeque;

use serde::Serialize;

use crate::list_graph::ListGraph;

/// Distance and cycle statistics. `None` stands for an infinite value: the
/// diameter of a disconnected graph or the girth of a forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    /// Connected components, each sorted, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub(crate) fn components(g: &ListGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for &w in g.neighbors(u) {
                let w = w as usize;
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// BFS distances from `s`; unreachable vertices get `usize::MAX`.
pub(crate) fn bfs_distances(g: &ListGraph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub(crate) fn diameter(g: &ListGraph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.order() {
        for d in bfs_distances(g, s) {
            if d == usize::MAX {
                return None;
            }
            best = best.max(d);
        }
    }
    Some(best)
}

pub(crate) fn girth(g: &ListGraph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            // nothing shorter can close through vertices this deep
            if 2 * dist[u] >= best {
                break 'bfs;
            }
            for &w in g.neighbors(u) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

pub(crate) fn compute(g: &ListGraph) -> Metrics {
    let degrees = (0..g.order()).map(|v| g.degree(v));
    Metrics {
        components: components(g),
        diameter: diameter(g),
        girth: girth(g),
        min_degree: degrees.clone().min().unwrap_or(0),
        max_degree: degrees.max().unwrap_or(0),
    }
}
