use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wplab::corpus::{self, generate, graph6, CorpusStream, ReadMode};
use wplab::harness::{self, parse_family, parse_range, parse_theorem_list, ClassProfile, Predicate, VerifyReport};
use wplab::{par, Error, Execution, Graph};

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const DEFAULT_MAX_P: usize = 3;

#[derive(Parser)]
#[command(name = "wplab", version, about = "Well-covered graphs and the W_p hierarchy")]
struct Cli {
    /// Run on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,

    /// Reserved; no command uses randomness.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Profile one graph (or every graph6 line on stdin).
    Check(CheckArgs),
    /// Check theorem suites over a corpus.
    Verify(VerifyArgs),
    /// List class representatives satisfying a predicate.
    Search(SearchArgs),
    /// Write graph6 lines for a family or the exhaustive corpus.
    Gen(GenArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Graph in graph6.
    #[arg(long, conflicts_with_all = ["edges", "gen"])]
    g6: Option<String>,
    /// Edge list such as `0-1,1-2,2-0`.
    #[arg(long, conflicts_with = "gen")]
    edges: Option<String>,
    /// Vertex count for --edges (default: largest label + 1).
    #[arg(long, requires = "edges")]
    order: Option<usize>,
    /// Family spec, e.g. `cycle:5`, `bipartite:2,3`, `corona:2:cycle:3`, `join-cliques:2,2,2,2`.
    #[arg(long)]
    gen: Option<String>,
    /// One JSON object per graph.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// Orders to enumerate, `a..b` or a single value.
    #[arg(long, default_value = "1..7")]
    n: String,
    /// Only connected graphs.
    #[arg(long)]
    connected: bool,
    /// Permit enumeration of n = 8.
    #[arg(long)]
    allow_n8: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated ids, or `all`.
    #[arg(long, default_value = "all")]
    theorems: String,
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Values of p, `a..b` or a single value.
    #[arg(long, default_value = "1..3")]
    p: String,
    /// Allow p above 3.
    #[arg(long)]
    allow_large_p: bool,
    /// Read graph6 lines from a file (`-` for stdin) instead of enumerating.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Skip malformed input lines instead of stopping.
    #[arg(long)]
    lenient: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Predicate, e.g. `wp>=2 & alpha_critical & !triangle_free`.
    expr: String,
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Print only the number of matches.
    #[arg(long)]
    count_only: bool,
    /// One JSON profile per line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Complete,
    Cycle,
    Bipartite,
    Corona,
    JoinCliques,
    Enumerate,
}

#[derive(Args)]
struct GenArgs {
    family: GenFamily,
    /// Order for complete, cycle and enumerate.
    #[arg(long)]
    n: Option<usize>,
    /// Part or clique sizes: `m,n` for bipartite, four values for join-cliques.
    #[arg(long)]
    sizes: Option<String>,
    /// Base graph spec for corona.
    #[arg(long)]
    base: Option<String>,
    /// Clique size for corona.
    #[arg(long)]
    p: Option<usize>,
    /// Only connected graphs (enumerate).
    #[arg(long)]
    connected: bool,
    /// Permit enumeration of n = 8.
    #[arg(long)]
    allow_n8: bool,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = std::env::var("WPLAB_WORKERS").ok().and_then(|s| s.parse().ok()) {
        par::configure_workers(workers);
    }
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let result = match cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Verify(a) => cmd_verify(a, exec),
        Command::Search(a) => cmd_search(a, exec),
        Command::Gen(a) => cmd_gen(a, exec),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e.root() {
                Error::Capacity(_) => ExitCode::from(EXIT_CAPACITY),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

fn parse_edges(spec: &str, order: Option<usize>) -> CliResult<Graph> {
    let mut edges = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((a, b)) = item.split_once('-') else {
            return usage(format!("bad edge {item:?}, expected a-b"));
        };
        match (a.trim().parse::<usize>(), b.trim().parse::<usize>()) {
            (Ok(a), Ok(b)) => edges.push((a, b)),
            _ => return usage(format!("bad edge {item:?}, expected a-b")),
        }
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, &edges)?)
}

fn print_profile(out: &mut impl Write, p: &ClassProfile, json: bool) -> io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(p).expect("profile serializes"))
    } else {
        writeln!(out, "graph6                 {}", p.graph6)?;
        writeln!(out, "n                      {}", p.n)?;
        writeln!(out, "alpha                  {}", p.alpha)?;
        writeln!(out, "well_covered           {}", p.well_covered)?;
        writeln!(out, "wp_order               {}", p.wp_order)?;
        writeln!(out, "shed_count             {}", p.shed_count)?;
        writeln!(out, "alpha_critical         {}", p.alpha_critical)?;
        writeln!(out, "triangle_free          {}", p.triangle_free)?;
        writeln!(out, "locally_triangle_free  {}", p.locally_triangle_free)
    }
}

fn cmd_check(a: CheckArgs) -> CliResult<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let graphs = if let Some(s) = &a.g6 {
        vec![graph6::decode(s.trim().as_bytes())?]
    } else if let Some(e) = &a.edges {
        vec![parse_edges(e, a.order)?]
    } else if let Some(spec) = &a.gen {
        vec![parse_family(spec)?]
    } else {
        let stdin = io::stdin();
        CorpusStream::from_reader("stdin", io::BufReader::new(stdin), ReadMode::Strict).collect_graphs()?
    };
    for (i, g) in graphs.iter().enumerate() {
        if i > 0 && !a.json {
            writeln!(out)?;
        }
        print_profile(&mut out, &harness::profile(g)?, a.json)?;
    }
    out.flush()?;
    Ok(0)
}

fn corpus_range(c: &CorpusArgs) -> CliResult<RangeInclusive<usize>> {
    let n = parse_range(&c.n)?;
    if *n.start() == 0 {
        return usage("n starts at 1");
    }
    if *n.end() > generate::MAX_GENERATED_ORDER {
        return Err(Error::Capacity(format!(
            "enumeration supports n <= {}",
            generate::MAX_GENERATED_ORDER
        ))
        .into());
    }
    if *n.end() == 8 && !c.allow_n8 {
        return usage("n = 8 enumerates 12346 classes; pass --allow-n8 to proceed");
    }
    Ok(n)
}

fn progress(done: usize, total: usize) {
    if done == total || done.is_multiple_of(50) {
        eprint!("\rextending parents: {done}/{total}");
        if done == total {
            eprintln!();
        }
    }
}

fn enumerate(c: &CorpusArgs, exec: Execution) -> CliResult<Vec<Graph>> {
    let n = corpus_range(c)?;
    let report: &(dyn Fn(usize, usize) + Sync) = if *n.end() == 8 { &progress } else { &|_, _| {} };
    let levels = generate::levels_with_progress(*n.end(), exec, report)?;
    Ok(levels
        .into_iter()
        .enumerate()
        .filter(|(i, _)| n.contains(&(i + 1)))
        .flat_map(|(_, level)| level)
        .filter(|g| !c.connected || g.is_connected())
        .collect())
}

fn cmd_verify(a: VerifyArgs, exec: Execution) -> CliResult<u8> {
    let theorems = parse_theorem_list(&a.theorems)?;
    let p = parse_range(&a.p)?;
    if *p.start() == 0 {
        return usage("p starts at 1");
    }
    if *p.end() > DEFAULT_MAX_P && !a.allow_large_p {
        return usage(format!("p above {DEFAULT_MAX_P} needs --allow-large-p"));
    }
    let mode = if a.lenient { ReadMode::Lenient } else { ReadMode::Strict };
    let (label, graphs) = match &a.input {
        Some(path) if path.as_os_str() == "-" => {
            let stream = CorpusStream::from_reader("stdin", io::BufReader::new(io::stdin()), mode);
            ("stdin".to_string(), drain(stream)?)
        }
        Some(path) => (path.display().to_string(), drain(corpus::read_graph6_file(path, mode)?)?),
        None => {
            let graphs = enumerate(&a.corpus, exec)?;
            let conn = if a.corpus.connected { ", connected" } else { "" };
            (format!("generated n={}{conn}", a.corpus.n), graphs)
        }
    };
    let report = harness::verify(&label, &graphs, &theorems, p, exec)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
    } else {
        print_verify(&mut out, &report)?;
    }
    out.flush()?;
    Ok(if report.passed() { 0 } else { EXIT_FAILURES })
}

fn drain(mut stream: CorpusStream) -> CliResult<Vec<Graph>> {
    let graphs = stream.by_ref().collect::<Result<Vec<_>, _>>()?;
    if stream.skipped() > 0 {
        eprintln!("skipped {} malformed line(s)", stream.skipped());
    }
    if stream.padding_warnings() > 0 {
        eprintln!("warning: {} line(s) with nonzero padding bits", stream.padding_warnings());
    }
    Ok(graphs)
}

fn print_verify(out: &mut impl Write, r: &VerifyReport) -> io::Result<()> {
    writeln!(out, "corpus: {} ({} graphs), p {}..{}", r.corpus, r.graphs, r.p_min, r.p_max)?;
    for t in &r.reports {
        writeln!(
            out,
            "{:<11} {:<4} eligible {:>6}  failures {:>4}  {} ms",
            t.theorem_id.as_str(),
            if t.passed() { "ok" } else { "FAIL" },
            t.eligible,
            t.failures.len(),
            t.elapsed_ms
        )?;
        for f in &t.failures {
            let p = f.p.map_or(String::new(), |p| format!(" p={p}"));
            writeln!(out, "    {}{p}: {}", f.graph6, f.witness)?;
        }
    }
    Ok(())
}

fn cmd_search(a: SearchArgs, exec: Execution) -> CliResult<u8> {
    let pred: Predicate = a.expr.parse()?;
    let graphs = enumerate(&a.corpus, exec)?;
    let hits = harness::search(&pred, &graphs, exec)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if a.count_only {
        writeln!(out, "{}", hits.len())?;
    } else {
        for h in &hits {
            if a.json {
                writeln!(out, "{}", serde_json::to_string(h).expect("profile serializes"))?;
            } else {
                writeln!(
                    out,
                    "{}\tn={} alpha={} wp={} shed={} critical={} tf={} ltf={}",
                    h.graph6,
                    h.n,
                    h.alpha,
                    h.wp_order,
                    h.shed_count,
                    h.alpha_critical,
                    h.triangle_free,
                    h.locally_triangle_free
                )?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    match v {
        Some(v) => Ok(v),
        None => usage(format!("{family} needs --{flag}")),
    }
}

fn cmd_gen(a: GenArgs, exec: Execution) -> CliResult<u8> {
    let graphs = match a.family {
        GenFamily::Complete => vec![Graph::complete(need(a.n, "n", "complete")?)?],
        GenFamily::Cycle => vec![Graph::cycle(need(a.n, "n", "cycle")?)?],
        GenFamily::Bipartite => vec![parse_family(&format!("bipartite:{}", need(a.sizes, "sizes", "bipartite")?))?],
        GenFamily::JoinCliques => vec![parse_family(&format!(
            "join-cliques:{}",
            need(a.sizes, "sizes", "join-cliques")?
        ))?],
        GenFamily::Corona => {
            let base = parse_family(&need(a.base, "base", "corona")?)?;
            vec![Graph::corona_complete(&base, need(a.p, "p", "corona")?)?]
        }
        GenFamily::Enumerate => {
            let n = need(a.n, "n", "enumerate")?;
            let c = CorpusArgs {
                n: n.to_string(),
                connected: a.connected,
                allow_n8: a.allow_n8,
            };
            enumerate(&c, exec)?
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for g in &graphs {
        writeln!(out, "{}", graph6::encode_compacted(g))?;
    }
    out.flush()?;
    Ok(0)
}
