use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use domrecon_core::families::{self, ThresholdStep};
use domrecon_core::formats::{
    graph6_decode, graph6_encode, graph6_encode_list, parse_edge_list, to_dot, to_dot_list,
};
use domrecon_core::verify::{
    read_graph6_corpus, scan_corpus, verify_theorem, ScanCheck, TheoremCheck, Verdict,
};
use domrecon_core::{
    build_gamma_graph_with, build_reconfig_graph_with, enumerate_mds_with, Error, FamilySpec,
    Graph, Limits, ListGraph, ReconfigGraph, VertexSet,
};

const LIMIT_ENV: &str = "DOMRECON_MDS_LIMIT";

#[derive(Parser)]
#[command(name = "domrecon", version, about = "Minimal dominating set reconfiguration graphs")]
struct Cli {
    /// Cap on the number of minimal dominating sets collected per graph.
    #[arg(long, global = true, value_name = "K")]
    limit_mds: Option<usize>,

    /// Seed for random families whose spec has none.
    #[arg(long, global = true, value_name = "U64")]
    seed: Option<u64>,

    /// Include elapsed wall time in verification reports.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// List the minimal dominating sets of a graph as JSON.
    Mds {
        #[arg(long)]
        graph: String,
        /// Only the minimum ones.
        #[arg(long)]
        minimum: bool,
    },
    /// Build the reconfiguration graph R(G).
    Recon {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        /// Follow the structure with a line of metrics as JSON.
        #[arg(long)]
        stats: bool,
    },
    /// Build the gamma-graph under token slides.
    Gamma {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Check one closed-form result. Prints a JSON report.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(TheoremCheck::IDS))]
        id: String,
        #[command(flatten)]
        params: VerifyParams,
    },
    /// Scan a corpus for counterexamples. Prints JSON reports.
    Scan {
        /// A graph6 file, or `all:n` for every graph on at most n vertices.
        #[arg(long)]
        corpus: String,
        /// Comma-separated scan ids; all of them by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print every graph of the given order up to isomorphism, as graph6.
    Graphs {
        n: usize,
        /// Orders 1 through n instead of exactly n.
        #[arg(long)]
        upto: bool,
    },
}

#[derive(Args)]
struct VerifyParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    graph2: Option<String>,
    /// Vertex set, comma separated.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    #[arg(long)]
    vertex: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    /// Threshold creation sequence over {i, u}.
    #[arg(long)]
    seq: Option<String>,
    #[arg(long, value_delimiter = ',')]
    perm: Option<Vec<usize>>,
}

enum Failure {
    Usage(String),
    Limit(String),
    Refuted,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit(_) | Error::TooManyVertices(_) => Failure::Limit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn limits(cli: &Cli) -> std::result::Result<Limits, Failure> {
    let cap = match cli.limit_mds {
        Some(k) => Some(k),
        None => match std::env::var(LIMIT_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("{LIMIT_ENV}={v:?} is not a count")))?,
            ),
            Err(_) => None,
        },
    };
    Ok(cap.map_or_else(Limits::default, |k| Limits::default().with_max_mds(k)))
}

fn family(spec: &str, seed: Option<u64>) -> Result<Graph, Error> {
    let random = ["tree:", "split:", "gnp:"].iter().any(|p| spec.starts_with(p));
    let spec = match seed {
        Some(s) if random && !spec.contains("seed=") => format!("{spec}:seed={s}"),
        _ => spec.to_string(),
    };
    spec.parse::<FamilySpec>()?.generate()
}

/// A family spec, `g6:<record>`, or a file holding a graph6 record or an
/// edge list.
fn load_graph(source: &str, seed: Option<u64>) -> Result<Graph, Error> {
    if let Some(record) = source.strip_prefix("g6:") {
        return graph6_decode(record);
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{source}: {e}")))?;
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        return graph6_decode(first).or_else(|_| parse_edge_list(&text));
    }
    family(source, seed)
}

fn graph_json(g: &Graph) -> Value {
    let mut v = json!({ "n": g.n(), "edges": g.edges(), "graph6": graph6_encode(g) });
    if let Some(labels) = g.labels() {
        v["labels"] = json!(labels);
    }
    v
}

fn structure_text(r: &ReconfigGraph, format: Format) -> String {
    match format {
        Format::G6 => graph6_encode_list(r.graph()) + "\n",
        Format::Dot => to_dot_list(&r.labeled()),
        Format::Json => r.to_json().to_string() + "\n",
    }
}

fn stats_json(r: &ListGraph) -> Value {
    let m = r.metrics();
    json!({
        "order": r.order(),
        "size": r.size(),
        "components": m.components.len(),
        "isolated": r.isolated_vertices().len(),
        "diameter": m.diameter,
        "girth": m.girth,
        "min_degree": m.min_degree,
        "max_degree": m.max_degree,
    })
}

fn need<T>(v: Option<T>, flag: &str, id: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("verify {id} needs --{flag}")))
}

fn theorem_check(id: &str, p: VerifyParams, seed: Option<u64>) -> std::result::Result<TheoremCheck, Failure> {
    let graph = |s: Option<String>, flag: &str| -> std::result::Result<Graph, Failure> {
        Ok(load_graph(&need(s, flag, id)?, seed)?)
    };
    let set = |g: &Graph, s: Option<Vec<usize>>| -> std::result::Result<Option<VertexSet>, Failure> {
        Ok(match s {
            Some(v) => Some(VertexSet::from_vertices(g.n(), v)?),
            None => None,
        })
    };
    let pair = |g: &Graph, s: Option<Vec<usize>>, v: Option<usize>| match (set(g, s)?, v) {
        (Some(s), Some(v)) => Ok(Some((s, v))),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage(format!("verify {id} takes --set and --vertex together"))),
    };
    Ok(match id {
        "families" => TheoremCheck::Families(p.n.unwrap_or(7)),
        "disjoint_union" => TheoremCheck::DisjointUnion(graph(p.graph, "graph")?, graph(p.graph2, "graph2")?),
        "union_empty" => TheoremCheck::UnionEmpty(graph(p.graph, "graph")?, need(p.n, "n", id)?),
        "join_k1" => TheoremCheck::JoinK1(graph(p.graph, "graph")?),
        "join_general" => TheoremCheck::JoinGeneral(graph(p.graph, "graph")?, graph(p.graph2, "graph2")?),
        "kmn" => TheoremCheck::Kmn(need(p.m, "m", id)?, need(p.n, "n", id)?),
        "multipartite" => TheoremCheck::Multipartite(need(p.parts, "parts", id)?),
        "rook" => TheoremCheck::Rook(need(p.n, "n", id)?),
        "threshold_forward" => {
            let seq = need(p.seq, "seq", id)?
                .chars()
                .map(|c| match c {
                    'i' => Ok(ThresholdStep::Isolated),
                    'u' => Ok(ThresholdStep::Universal),
                    _ => Err(Failure::Usage(format!("bad creation step {c:?}"))),
                })
                .collect::<std::result::Result<_, _>>()?;
            TheoremCheck::ThresholdForward(seq)
        }
        "subgraph_lemma" => {
            let g = graph(p.graph, "graph")?;
            let s = set(&g, p.set)?;
            TheoremCheck::SubgraphLemma(g, s)
        }
        "gnv_empty" => TheoremCheck::GnvEmpty(graph(p.graph, "graph")?),
        "forest_connected" => TheoremCheck::ForestConnected(graph(p.graph, "graph")?),
        "tree_lemma" | "split_lemma" => {
            let g = graph(p.graph, "graph")?;
            let target = pair(&g, p.set, p.vertex)?;
            if id == "tree_lemma" {
                TheoremCheck::TreeLemma(g, target)
            } else {
                TheoremCheck::SplitLemma(g, target)
            }
        }
        "split_connected" => TheoremCheck::SplitConnected(graph(p.graph, "graph")?),
        "matching_join" => {
            let g = graph(p.graph, "graph")?;
            let h = graph(p.graph2, "graph2")?;
            let sigma = p.perm.unwrap_or_else(|| (0..h.n()).collect());
            TheoremCheck::MatchingJoin(g, h, sigma)
        }
        "product_k2" => TheoremCheck::ProductK2(graph(p.graph, "graph")?),
        "maxdegree" => TheoremCheck::MaxDegree(graph(p.graph, "graph")?),
        _ => return Err(Failure::Usage(format!("unknown theorem {id:?}"))),
    })
}

fn load_corpus(source: &str) -> std::result::Result<(Vec<Graph>, usize), Failure> {
    if let Some(n) = source.strip_prefix("all:") {
        let n: usize = n
            .parse()
            .map_err(|_| Failure::Usage(format!("bad corpus order {n:?}")))?;
        return Ok((families::enumerate_graphs_upto(n)?, 0));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
    let (graphs, bad) = read_graph6_corpus(&text);
    for (line, e) in &bad {
        eprintln!("domrecon: {source}:{line}: skipped: {e}");
    }
    Ok((graphs, bad.len()))
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let limits = limits(&cli)?;
    let seed = cli.seed;
    match cli.command {
        Command::Gen { spec, format } => {
            let g = family(&spec, seed)?;
            match format {
                Format::G6 => writeln!(out, "{}", graph6_encode(&g))?,
                Format::Dot => write!(out, "{}", to_dot(&g))?,
                Format::Json => writeln!(out, "{}", graph_json(&g))?,
            }
        }
        Command::Mds { graph, minimum } => {
            let g = load_graph(&graph, seed)?;
            let sets = single_threaded(|| enumerate_mds_with(&g, &limits))?;
            let sets = if minimum { sets.minimum() } else { sets };
            writeln!(out, "{}", json!(sets.to_vecs()))?;
        }
        Command::Recon { graph, format, stats } => {
            let g = load_graph(&graph, seed)?;
            let r = single_threaded(|| build_reconfig_graph_with(&g, &limits))?;
            write!(out, "{}", structure_text(&r, format))?;
            if stats {
                writeln!(out, "{}", stats_json(r.graph()))?;
            }
        }
        Command::Gamma { graph, format } => {
            let g = load_graph(&graph, seed)?;
            let r = single_threaded(|| build_gamma_graph_with(&g, &limits))?;
            write!(out, "{}", structure_text(&r, format))?;
        }
        Command::Verify { id, params } => {
            let check = theorem_check(&id, params, seed)?;
            let report = single_threaded(|| verify_theorem(&check, &limits))?;
            let text = serde_json::to_string_pretty(&report.to_json(cli.timing))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{text}")?;
            if report.verdict == Verdict::Refuted {
                out.flush()?;
                return Err(Failure::Refuted);
            }
        }
        Command::Scan { corpus, checks, jobs } => {
            let checks = if checks.is_empty() {
                ScanCheck::ALL.to_vec()
            } else {
                checks
                    .iter()
                    .map(|c| c.parse::<ScanCheck>())
                    .collect::<Result<Vec<_>, _>>()?
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let reports = pool.install(|| -> std::result::Result<_, Failure> {
                let (graphs, skipped) = load_corpus(&corpus)?;
                Ok(scan_corpus(&graphs, &checks, &corpus, skipped, &limits)?)
            })?;
            let text =
                serde_json::to_string_pretty(&reports).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        Command::Graphs { n, upto } => {
            let graphs = if upto {
                families::enumerate_graphs_upto(n)?
            } else {
                families::enumerate_graphs(n)?
            };
            for g in &graphs {
                writeln!(out, "{}", graph6_encode(g))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("domrecon: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("domrecon: {msg}");
            ExitCode::from(3)
        }
    }
}
