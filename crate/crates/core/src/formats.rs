//! graph6, plain edge-list and DOT serialisation.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::list_graph::ListGraph;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn push_order(out: &mut String, n: usize) {
    let sextets: &[u32] = if n <= 62 {
        out.push((n as u8 + 63) as char);
        return;
    } else if n <= 258_047 {
        out.push('~');
        &[12, 6, 0]
    } else {
        out.push_str("~~");
        &[30, 24, 18, 12, 6, 0]
    };
    for &shift in sextets {
        out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
    }
}

fn encode(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> String {
    let mut out = String::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

pub fn graph6_encode(g: &Graph) -> String {
    encode(g.n(), |i, j| g.has_edge(i, j))
}

pub fn graph6_encode_list(g: &ListGraph) -> String {
    // Walk sorted neighbour lists instead of probing every pair.
    let n = g.order();
    let mut bits = vec![false; n * n.saturating_sub(1) / 2];
    for (i, j) in g.edges() {
        bits[j * (j - 1) / 2 + i] = true;
    }
    let mut out = String::new();
    push_order(&mut out, n);
    for chunk in bits.chunks(6) {
        let mut acc = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            acc |= (b as u8) << (5 - k);
        }
        out.push((acc + 63) as char);
    }
    out
}

fn sextets(s: &str) -> Result<Vec<u8>> {
    s.bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")))
            }
        })
        .collect()
}

/// Decodes one graph6 record into an edge list.
fn decode(record: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let s = record.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let data = sextets(s)?;
    let (n, body) = match data.as_slice() {
        [] => return Err(Error::Parse("empty graph6 record".into())),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("truncated graph6 order".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &x| acc << 6 | x as usize);
            (n, &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated graph6 order".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &x| acc << 6 | x as usize);
            (n, &rest[3..])
        }
        [x, rest @ ..] => (*x as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            body.len(),
            pairs.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

pub fn graph6_decode(record: &str) -> Result<Graph> {
    let (n, edges) = decode(record)?;
    Graph::new(n, &edges)
}

pub fn graph6_decode_list(record: &str) -> Result<ListGraph> {
    let (n, edges) = decode(record)?;
    ListGraph::from_edges(n, &edges)
}

/// Parses `n` on the first line followed by one `u v` pair per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("vertex count: {e}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot(n: usize, edges: &[(usize, usize)], labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(labels) = labels {
        for (v, l) in labels.iter().enumerate().take(n) {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(l));
        }
    } else {
        for v in 0..n {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn to_dot(g: &Graph) -> String {
    dot(g.n(), &g.edges(), g.labels())
}

pub fn to_dot_list(g: &ListGraph) -> String {
    dot(g.order(), &g.edges(), g.labels())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_string() {
        // a-c, a-e, b-d, d-e
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
        assert_eq!(graph6_decode("DQc").unwrap(), g);
        assert_eq!(graph6_decode(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn small_orders() {
        assert_eq!(graph6_encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(graph6_encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(graph6_encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(graph6_decode("?").unwrap().n(), 0);
    }

    #[test]
    fn long_order_header() {
        let g = ListGraph::from_edges(100, &[(0, 99), (5, 6)]).unwrap();
        let s = graph6_encode_list(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(graph6_decode_list(&s).unwrap(), g);
        assert_eq!(
            s,
            encode(100, |i, j| g.has_edge(i, j)),
            "list encoder agrees with pairwise encoder"
        );
        assert!(graph6_decode(&s).is_err(), "over 64 vertices");
    }

    #[test]
    fn malformed_graph6() {
        assert!(graph6_decode("").is_err());
        assert!(graph6_decode("D").is_err());
        assert!(graph6_decode("DQcc").is_err());
        assert!(graph6_decode("D Q").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4\n0 1\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
        assert!(parse_edge_list("3\n0 3\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::complete(2).unwrap().with_labels(vec!["a".into(), "b\"".into()]);
        assert_eq!(
            to_dot(&g),
            "graph G {\n  0 [label=\"a\"];\n  1 [label=\"b\\\"\"];\n  0 -- 1;\n}\n"
        );
    }
}
