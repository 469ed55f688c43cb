//! Command-line front end. Every subcommand is a thin adapter over the library.
//!
//! Exit codes: 0 success or PASS, 1 a verified negative (not free, FAIL),
//! 2 inconclusive (budget), 64 usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::construct::{edge_blowup, ConstructionSpec};
use crate::containment::{find_subgraph, ForbiddenFamily, SearchOutcome, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;
use crate::graph6;
use crate::matching::{gallai_edmonds, max_matching};
use crate::search::{max_edges_free, verify_theorem, CensusMode, CensusQuery, CheckStatus, VerifyMode};
use crate::tree::{analyze_tree, extract_params, splitting_family, DEFAULT_FAMILY_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable holding the default containment budget.
pub const BUDGET_ENV: &str = "TURAN_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "turan-blowup", version, about = "Turán numbers of edge blow-ups of trees")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction from its one-line spec and print it as graph6.
    Construct {
        spec: String,
        /// Print the smallest feasible n instead of the graph.
        #[arg(long)]
        min_n: bool,
    },
    /// Replace every edge of a graph by a clique K_q.
    Blowup {
        graph: String,
        #[arg(long)]
        q: usize,
    },
    /// Evaluate closed-form functions.
    Formula {
        #[command(subcommand)]
        op: FormulaOp,
    },
    /// Print the theorem branch, value and extremal constructions for a tree.
    Dispatch {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// Maximum matching of a graph.
    Matching { graph: String },
    /// Gallai–Edmonds decomposition of a graph.
    GallaiEdmonds { graph: String },
    /// Subgraph containment; exit 0 found, 1 not found, 2 budget.
    Contains {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exhaustive census of family-free graphs.
    Census {
        /// aux:k=K, ahs:k=K, ch:nu=N,delta=D, or g6:G1,G2,...
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_n: usize,
        /// exhaustive: also list extremal graphs; bound: best edge count only
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long)]
        node_budget: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        sequential: bool,
    },
    /// Check the constructions named by the theorem over a range of n.
    Verify {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long, default_value = "free")]
        mode: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Members of the splitting family, one graph6 per line.
    SplitFamily {
        graph: String,
        /// Comma-separated vertices allowed to split.
        #[arg(long, value_delimiter = ',')]
        restrict: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_FAMILY_CAP)]
        cap: usize,
    },
    /// Colour classes and the parameters a, k, A0, B0, b.
    AnalyzeTree { tree: String },
    /// Run a verification campaign from a key=value config file.
    Campaign {
        config: PathBuf,
        /// Overrides the config's output path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the edge count of a graph.
    Edges {
        #[arg(default_value = "-")]
        graph: String,
    },
}

#[derive(Subcommand, Debug)]
enum FormulaOp {
    /// g1 K | g2 K | g N P A | g_d N P A D | turan N R | chvatal_hanson NU DELTA | f X K | binom2 N
    Eval {
        name: String,
        args: Vec<u64>,
    },
}

/// Parses a graph from graph6 (first non-blank line) or an edge list
/// (`u v` per line; an optional `n N` line fixes the order).
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let Some(first) = lines.first() else {
        return Err(Error::Parse("no graph in input".into()));
    };
    if !first.contains(char::is_whitespace) {
        return graph6::decode(first);
    }
    let mut n = None;
    let mut edges = Vec::new();
    for l in &lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        match parts.as_slice() {
            ["n", v] => {
                n = Some(v.parse().map_err(|_| Error::Parse(format!("bad order line {l:?}")))?)
            }
            [u, v] => {
                let u: usize = u.parse().map_err(|_| Error::Parse(format!("bad edge {l:?}")))?;
                let v: usize = v.parse().map_err(|_| Error::Parse(format!("bad edge {l:?}")))?;
                edges.push((u, v));
            }
            _ => return Err(Error::Parse(format!("cannot read line {l:?}"))),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

/// `-` reads stdin, an existing path reads the file, anything else is graph6.
fn load_graph(arg: &str) -> Result<Graph> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return parse_graph_text(&s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return parse_graph_text(&fs::read_to_string(path)?);
    }
    graph6::decode(arg)
}

fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn eval_formula(name: &str, args: &[u64]) -> Result<u64> {
    let need = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::Parse(format!("{name} takes {k} arguments, got {}", args.len())))
        }
    };
    match name {
        "g1" => need(1).map(|_| formulas::g1(args[0])),
        "g2" => need(1).map(|_| formulas::g2(args[0])),
        "g" => need(3).and_then(|_| formulas::g(args[0], args[1], args[2])),
        "g_d" => need(4).and_then(|_| formulas::g_d(args[0], args[1], args[2], args[3])),
        "turan" => {
            need(2)?;
            if args[1] == 0 {
                return Err(Error::Parse("turan needs r >= 1".into()));
            }
            Ok(formulas::turan_edges(args[0], args[1]))
        }
        "chvatal_hanson" => {
            need(2)?;
            if args[0] == 0 || args[1] == 0 {
                return Err(Error::Parse("chvatal_hanson needs nu, delta >= 1".into()));
            }
            Ok(formulas::chvatal_hanson(args[0], args[1]))
        }
        "f" => {
            need(2)?;
            if args[0] == 0 || args[1] < 2 {
                return Err(Error::Parse("f needs x >= 1 and k >= 2".into()));
            }
            Ok(formulas::component_bound_f(args[0], args[1]))
        }
        "binom2" => need(1).map(|_| formulas::binom2(args[0])),
        _ => Err(Error::Parse(format!("unknown formula {name:?}"))),
    }
}

fn status_exit(fail: bool, unknown: bool) -> i32 {
    if fail {
        EXIT_NEGATIVE
    } else if unknown {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Construct { spec, min_n } => {
            let spec: ConstructionSpec = spec.parse()?;
            if min_n {
                match spec.min_feasible_n() {
                    Some(m) => writeln!(out, "{m}")?,
                    None => writeln!(out, "any")?,
                }
                return Ok(EXIT_OK);
            }
            match spec.build() {
                Ok(g) => writeln!(out, "{}", graph6::encode(&g))?,
                Err(e @ Error::PayloadTooLarge { .. }) => {
                    let hint = spec
                        .min_feasible_n()
                        .map(|m| format!("; smallest feasible n is {m}"))
                        .unwrap_or_default();
                    return Err(Error::Infeasible(format!("{e}{hint}")));
                }
                Err(e) => return Err(e),
            }
        }
        Command::Blowup { graph, q } => {
            let g = edge_blowup(&load_graph(&graph)?, q)?;
            writeln!(out, "{}", graph6::encode(&g))?;
        }
        Command::Formula { op: FormulaOp::Eval { name, args } } => {
            writeln!(out, "{}", eval_formula(&name, &args)?)?;
        }
        Command::Dispatch { tree, p, n } => {
            let t = analyze_tree(&load_graph(&tree)?)?;
            let params = extract_params(&t);
            let case = formulas::dispatch(&params, n, p)?;
            writeln!(out, "tag={} value={} {}", case.tag, case.value, params)?;
            for s in &case.extremal {
                writeln!(out, "extremal {s}")?;
            }
        }
        Command::Matching { graph } => {
            let g = load_graph(&graph)?;
            let m = max_matching(&g);
            let edges: Vec<String> = m.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "nu={} edges={}", m.size(), edges.join(","))?;
        }
        Command::GallaiEdmonds { graph } => {
            let g = load_graph(&graph)?;
            let r = gallai_edmonds(&g);
            let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            writeln!(out, "nu={} S={}", r.nu, list(&r.s))?;
            for c in &r.odd_components {
                writeln!(out, "odd {}", list(c))?;
            }
            for c in &r.even_components {
                writeln!(out, "even {}", list(c))?;
            }
            writeln!(out, "deficiency_identity={}", r.deficiency_identity_holds(g.order()))?;
        }
        Command::Contains { host, pattern, budget } => {
            let h = load_graph(&host)?;
            let p = load_graph(&pattern)?;
            return Ok(match find_subgraph(&h, &p, budget.unwrap_or_else(default_budget)) {
                SearchOutcome::Found(e) => {
                    writeln!(out, "found {e}")?;
                    EXIT_OK
                }
                SearchOutcome::NotFound => {
                    writeln!(out, "not-found")?;
                    EXIT_NEGATIVE
                }
                SearchOutcome::BudgetExceeded => {
                    writeln!(out, "unknown budget")?;
                    EXIT_UNKNOWN
                }
            });
        }
        Command::Census { family, max_n, mode, node_budget, budget, sequential } => {
            let family: ForbiddenFamily = family.parse()?;
            let mut q = CensusQuery::new(family, max_n);
            q.mode = match mode.as_str() {
                "exhaustive" => CensusMode::AllExtremal,
                "bound" => CensusMode::MaxEdges,
                other => return Err(Error::Parse(format!("unknown census mode {other:?}"))),
            };
            q.budget = budget.unwrap_or_else(default_budget);
            q.node_budget = node_budget.unwrap_or(u64::MAX);
            q.parallel = !sequential;
            let r = max_edges_free(&q)?;
            writeln!(out, "{r}")?;
            return Ok(status_exit(false, !r.complete));
        }
        Command::Verify { tree, p, n_from, n_to, mode, budget } => {
            let t = analyze_tree(&load_graph(&tree)?)?;
            let mode: VerifyMode = mode.parse()?;
            let r = verify_theorem(&t, p, n_from, n_to, mode, budget.unwrap_or_else(default_budget))?;
            for l in &r.lines {
                writeln!(out, "{l}")?;
            }
            return Ok(status_exit(r.failed(), r.count(CheckStatus::Unknown) > 0));
        }
        Command::SplitFamily { graph, restrict, cap } => {
            let g = load_graph(&graph)?;
            for h in splitting_family(&g, restrict.as_deref(), cap)? {
                writeln!(out, "{}", graph6::encode(&h))?;
            }
        }
        Command::AnalyzeTree { tree } => {
            let t = analyze_tree(&load_graph(&tree)?)?;
            let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let p = extract_params(&t);
            writeln!(out, "{p}")?;
            writeln!(out, "A={} B={}", list(t.class_a()), list(t.class_b()))?;
            writeln!(out, "A0={} B0={}", list(&p.a0), list(&p.b0))?;
        }
        Command::Campaign { config, output } => {
            let text = fs::read_to_string(&config)?;
            let base = config.parent().unwrap_or(Path::new("."));
            let mut cfg = CampaignConfig::parse(&text, base)?;
            if let Some(o) = output {
                cfg.output = Some(o);
            }
            let report = run_campaign(&cfg)?;
            let body: String = report.lines.iter().map(|l| format!("{l}\n")).collect();
            match &cfg.output {
                Some(path) => {
                    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                        fs::create_dir_all(dir)?;
                    }
                    fs::write(path, &body)?;
                    writeln!(out, "{} wrote {}", report.summary(), path.display())?;
                }
                None => {
                    out.write_all(body.as_bytes())?;
                    writeln!(out, "{}", report.summary())?;
                }
            }
            return Ok(report.exit_code());
        }
        Command::Edges { graph } => {
            writeln!(out, "{}", load_graph(&graph)?.edge_count())?;
        }
    }
    Ok(EXIT_OK)
}

/// Campaign settings. Lines are `key = value`; `tree`, `p`, `n`, `mode` and
/// `census` may repeat. Tree paths are relative to the config file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    /// `(label, graph)` per tree source.
    pub trees: Vec<(String, Graph)>,
    pub p_values: Vec<usize>,
    pub n_grid: Vec<usize>,
    pub modes: Vec<VerifyMode>,
    /// Census items in the `census` command's flag syntax: `FAMILY MAX_N`.
    pub censuses: Vec<(String, usize)>,
    pub budget: u64,
    pub workers: usize,
    pub output: Option<PathBuf>,
}

impl CampaignConfig {
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut cfg = CampaignConfig {
            trees: Vec::new(),
            p_values: Vec::new(),
            n_grid: Vec::new(),
            modes: Vec::new(),
            censuses: Vec::new(),
            budget: default_budget(),
            workers: 1,
            output: None,
        };
        let num = |k: &str, v: &str| -> Result<u64> {
            v.parse().map_err(|_| Error::Parse(format!("{k} = {v:?} is not an integer")))
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            match k {
                "tree" => {
                    let path = base.join(v);
                    let g = if path.is_file() {
                        parse_graph_text(&fs::read_to_string(&path)?)?
                    } else {
                        return Err(Error::Io(format!("tree file {} not found", path.display())));
                    };
                    cfg.trees.push((v.to_string(), g));
                }
                "p" => cfg.p_values.push(num(k, v)? as usize),
                "n" => cfg.n_grid.push(num(k, v)? as usize),
                "mode" => cfg.modes.push(v.parse()?),
                "census" => {
                    let (fam, n) = v
                        .rsplit_once(char::is_whitespace)
                        .ok_or_else(|| Error::Parse(format!("census = {v:?} needs FAMILY MAX_N")))?;
                    fam.trim().parse::<ForbiddenFamily>()?;
                    cfg.censuses.push((fam.trim().to_string(), num(k, n)? as usize));
                }
                "budget" => cfg.budget = num(k, v)?,
                "workers" => cfg.workers = num(k, v)? as usize,
                "output" => cfg.output = Some(base.join(v)),
                _ => return Err(Error::Parse(format!("line {}: unknown key {k:?}", lineno + 1))),
            }
        }
        if cfg.trees.is_empty() {
            return Err(Error::Parse("campaign needs at least one tree".into()));
        }
        if cfg.p_values.is_empty() || cfg.n_grid.is_empty() {
            return Err(Error::Parse("campaign needs p and n values".into()));
        }
        if cfg.workers == 0 {
            return Err(Error::Parse("workers must be positive".into()));
        }
        if cfg.modes.is_empty() {
            cfg.modes.push(VerifyMode::Free);
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CampaignReport {
    /// Sorted, one check per line.
    pub lines: Vec<String>,
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

impl CampaignReport {
    pub fn summary(&self) -> String {
        format!("pass={} fail={} unknown={}", self.pass, self.fail, self.unknown)
    }

    pub fn exit_code(&self) -> i32 {
        status_exit(self.fail > 0, self.unknown > 0)
    }
}

/// Runs every (tree, p, n, mode) item and census item on `workers` threads.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    enum Item<'a> {
        Verify(&'a str, &'a Graph, usize, usize, VerifyMode),
        Census(&'a str, usize),
    }
    let mut items = Vec::new();
    for (label, g) in &cfg.trees {
        for &p in &cfg.p_values {
            for &n in &cfg.n_grid {
                for &m in &cfg.modes {
                    items.push(Item::Verify(label, g, p, n, m));
                }
            }
        }
    }
    for (fam, n) in &cfg.censuses {
        items.push(Item::Census(fam, *n));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<Vec<(CheckStatus, String)>> = pool.install(|| {
        items
            .par_iter()
            .map(|item| match *item {
                Item::Verify(label, g, p, n, mode) => {
                    let prefix = format!("tree={label} p={p} mode={mode}");
                    let r = analyze_tree(g)
                        .and_then(|t| verify_theorem(&t, p, n, n, mode, cfg.budget));
                    match r {
                        Ok(r) => r
                            .lines
                            .iter()
                            .map(|l| (l.status, format!("{} {prefix} {}", l.status, l.describe())))
                            .collect(),
                        Err(e) => {
                            vec![(CheckStatus::Fail, format!("FAIL {prefix} n={n} error=\"{e}\""))]
                        }
                    }
                }
                Item::Census(fam, n) => {
                    let prefix = format!("census family={fam} max_n={n}");
                    let r = fam.parse::<ForbiddenFamily>().and_then(|f| {
                        let mut q = CensusQuery::new(f, n);
                        q.budget = cfg.budget;
                        q.parallel = false;
                        max_edges_free(&q)
                    });
                    match r {
                        Ok(r) => {
                            let s = if r.complete { CheckStatus::Info } else { CheckStatus::Unknown };
                            vec![(s, format!("{s} {prefix} {r}"))]
                        }
                        Err(e) => vec![(CheckStatus::Fail, format!("FAIL {prefix} error=\"{e}\""))],
                    }
                }
            })
            .collect()
    });
    let mut report = CampaignReport::default();
    for (status, line) in results.into_iter().flatten() {
        match status {
            CheckStatus::Pass => report.pass += 1,
            CheckStatus::Fail => report.fail += 1,
            CheckStatus::Unknown => report.unknown += 1,
            CheckStatus::Info => {}
        }
        report.lines.push(line);
    }
    report.lines.sort();
    Ok(report)
}

/// Runs the CLI on `args` (including the program name), writing to `out`
/// and `err`, and returns the exit code.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run_with(args, &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}
